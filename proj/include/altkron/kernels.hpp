#pragma once

// Data-parallel sweep kernels. Every verification in the library reduces to
// "find the first index in [0, count) whose check fails" or "evaluate f on
// every index"; each has a serial reference and an OpenMP version that must
// agree with it exactly (the parallel search returns the smallest failing
// index, not merely some failing index).

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "altkron/linalg.hpp"

namespace altkron {

enum class Exec { serial, parallel };

/// Process-wide default used when no policy is passed explicitly.
Exec default_exec();
void set_default_exec(Exec e);

/// Worker cap: ALTKRON_THREADS if set and positive, else the OpenMP default.
int worker_count();

using FailPredicate = std::function<bool(std::size_t)>;
using IndexMap = std::function<Vec(std::size_t)>;

namespace serial {
std::optional<std::size_t> first_failure(std::size_t count, const FailPredicate& fails);
std::vector<Vec> map_indices(std::size_t count, const IndexMap& f);
}  // namespace serial

namespace parallel {
std::optional<std::size_t> first_failure(std::size_t count, const FailPredicate& fails);
std::vector<Vec> map_indices(std::size_t count, const IndexMap& f);
}  // namespace parallel

std::optional<std::size_t> first_failure(std::size_t count, const FailPredicate& fails, Exec exec = default_exec());
std::vector<Vec> map_indices(std::size_t count, const IndexMap& f, Exec exec = default_exec());

/// Mixed-radix decoding of a flat tuple index: the last coordinate varies fastest.
std::vector<std::size_t> decode_tuple(std::size_t index, const std::vector<std::size_t>& radices);
std::size_t tuple_count(const std::vector<std::size_t>& radices);

}  // namespace altkron
