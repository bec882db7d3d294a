#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace altkron {

/// Outcome of one named verification. `witness` holds the basis indices of
/// the first failing tuple (or the failing trial index in random modes).
struct Check {
    std::string name;
    bool pass = true;
    std::vector<std::size_t> witness;
    std::string detail;
    std::optional<std::uint64_t> seed;
};

class CheckList {
public:
    void add(Check c) { checks_.push_back(std::move(c)); }
    void add(const std::string& name, bool pass, std::string detail = {}) {
        checks_.push_back(Check{name, pass, {}, std::move(detail), std::nullopt});
    }
    bool pass() const {
        for (const auto& c : checks_)
            if (!c.pass) return false;
        return true;
    }
    const Check* find(const std::string& name) const {
        for (const auto& c : checks_)
            if (c.name == name) return &c;
        return nullptr;
    }
    const std::vector<Check>& checks() const noexcept { return checks_; }
    void append(const CheckList& o) { checks_.insert(checks_.end(), o.checks_.begin(), o.checks_.end()); }

private:
    std::vector<Check> checks_;
};

}  // namespace altkron
