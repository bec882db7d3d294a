#include "altkron/kernels.hpp"

#include <omp.h>

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>

namespace altkron {

namespace {
std::atomic<Exec> g_exec{Exec::parallel};
}

Exec default_exec() { return g_exec.load(); }
void set_default_exec(Exec e) { g_exec.store(e); }

int worker_count() {
    if (const char* env = std::getenv("ALTKRON_THREADS")) {
        try {
            int n = std::stoi(env);
            if (n > 0) return n;
        } catch (const std::exception&) {
        }
    }
    return omp_get_max_threads();
}

namespace serial {

std::optional<std::size_t> first_failure(std::size_t count, const FailPredicate& fails) {
    for (std::size_t i = 0; i < count; ++i)
        if (fails(i)) return i;
    return std::nullopt;
}

std::vector<Vec> map_indices(std::size_t count, const IndexMap& f) {
    std::vector<Vec> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(f(i));
    return out;
}

}  // namespace serial

namespace parallel {

std::optional<std::size_t> first_failure(std::size_t count, const FailPredicate& fails) {
    std::atomic<std::size_t> best{count};
    std::exception_ptr error;
    std::mutex error_mutex;
    const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 32) num_threads(worker_count())
    for (long long i = 0; i < n; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        if (idx >= best.load(std::memory_order_relaxed)) continue;
        try {
            if (fails(idx)) {
                std::size_t cur = best.load();
                while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
                }
            }
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    std::size_t b = best.load();
    if (b == count) return std::nullopt;
    return b;
}

std::vector<Vec> map_indices(std::size_t count, const IndexMap& f) {
    std::vector<Vec> out(count);
    std::exception_ptr error;
    std::mutex error_mutex;
    const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 8) num_threads(worker_count())
    for (long long i = 0; i < n; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
        } catch (...) {
            std::lock_guard<std::mutex> lock(error_mutex);
            if (!error) error = std::current_exception();
        }
    }
    if (error) std::rethrow_exception(error);
    return out;
}

}  // namespace parallel

std::optional<std::size_t> first_failure(std::size_t count, const FailPredicate& fails, Exec exec) {
    return exec == Exec::serial ? serial::first_failure(count, fails) : parallel::first_failure(count, fails);
}

std::vector<Vec> map_indices(std::size_t count, const IndexMap& f, Exec exec) {
    return exec == Exec::serial ? serial::map_indices(count, f) : parallel::map_indices(count, f);
}

std::vector<std::size_t> decode_tuple(std::size_t index, const std::vector<std::size_t>& radices) {
    std::vector<std::size_t> out(radices.size());
    for (std::size_t k = radices.size(); k-- > 0;) {
        out[k] = index % radices[k];
        index /= radices[k];
    }
    return out;
}

std::size_t tuple_count(const std::vector<std::size_t>& radices) {
    std::size_t n = 1;
    for (auto r : radices) n *= r;
    return n;
}

}  // namespace altkron
