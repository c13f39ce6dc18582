#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <utility>

#include "wprod/errors.hpp"

namespace wprod {

/// A finitely supported integer sequence indexed by the punctures 1, 2, 3, ...
/// Entries with multiplicity 0 are stored implicitly (absent keys); iteration
/// is ascending by puncture index.
class divisor {
public:
    using map_type = std::map<std::int64_t, std::int64_t>;

    divisor() = default;

    divisor(std::initializer_list<std::pair<std::int64_t, std::int64_t>> entries) {
        for (auto const& [k, v] : entries) set(k, v);
    }

    /// Stored multiplicity at puncture k, 0 when k is off the support.
    std::int64_t at(std::int64_t k) const {
        if (k < 1) throw error("divisor index must be a positive integer");
        auto it = support_.find(k);
        return it == support_.end() ? 0 : it->second;
    }

    /// Setting multiplicity 0 erases the entry.
    void set(std::int64_t k, std::int64_t multiplicity) {
        if (k < 1) throw error("divisor index must be a positive integer");
        if (multiplicity == 0)
            support_.erase(k);
        else
            support_[k] = multiplicity;
    }

    bool empty() const { return support_.empty(); }
    std::size_t size() const { return support_.size(); }

    /// Largest puncture in the support, 0 for the empty divisor.
    std::int64_t max_index() const {
        return support_.empty() ? 0 : support_.rbegin()->first;
    }

    map_type::const_iterator begin() const { return support_.begin(); }
    map_type::const_iterator end() const { return support_.end(); }

    map_type const& support() const { return support_; }

    friend bool operator==(divisor const& a, divisor const& b) {
        return a.support_ == b.support_;
    }

private:
    map_type support_;
};

/// Pointwise sum (the divisor of a product of maps).
inline divisor operator+(divisor const& a, divisor const& b) {
    divisor out = a;
    for (auto const& [k, v] : b) out.set(k, out.at(k) + v);
    return out;
}

/// An integer-valued oracle k -> nu(k) without a finite-support promise.
/// The rule must be deterministic; any k >= 1 may be queried. declared_head
/// is the default truncation depth for evaluation.
struct procedural_divisor {
    std::function<std::int64_t(std::int64_t)> rule;
    std::int64_t declared_head = 1;

    std::int64_t at(std::int64_t k) const {
        if (k < 1) throw error("divisor index must be a positive integer");
        return rule(k);
    }
};

} // namespace wprod
