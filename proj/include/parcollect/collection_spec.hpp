#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "parcollect/errors.hpp"

namespace parcollect {

/**
 * A problem instance: m parallel collections, collection j holding sizes[j]
 * equally likely coupon types. One coupon per collection arrives per step.
 */
struct CollectionSpec {
    std::vector<std::uint32_t> sizes;

    CollectionSpec() = default;
    explicit CollectionSpec(std::vector<std::uint32_t> s) : sizes(std::move(s)) {}

    std::size_t m() const { return sizes.size(); }

    void validate() const {
        if (sizes.empty()) throw ValidationError("spec needs at least one collection");
        for (auto n : sizes)
            if (n == 0) throw ValidationError("collection sizes must be positive");
    }

    /// prod(N_j) with overflow guard; the transient state count.
    std::uint64_t product() const {
        unsigned __int128 p = 1;
        for (auto n : sizes) {
            p *= n;
            if (p > static_cast<unsigned __int128>(UINT64_MAX)) {
                throw CapacityError("state space product overflows 64 bits");
            }
        }
        return static_cast<std::uint64_t>(p);
    }

    std::string str() const {
        std::string out;
        for (std::size_t j = 0; j < sizes.size(); ++j) {
            if (j) out += ',';
            out += std::to_string(sizes[j]);
        }
        return out;
    }

    friend bool operator==(const CollectionSpec&, const CollectionSpec&) = default;
};

/**
 * One point of the product chain: counts[j] distinct types held in
 * collection j. Either all zero (the origin) or every count in [1, N_j].
 */
struct State {
    std::vector<std::uint32_t> counts;

    State() = default;
    explicit State(std::vector<std::uint32_t> c) : counts(std::move(c)) {}

    bool is_origin() const {
        for (auto c : counts)
            if (c != 0) return false;
        return true;
    }

    std::uint64_t coordinate_sum() const {
        return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
    }

    friend bool operator==(const State&, const State&) = default;
};

}  // namespace parcollect
