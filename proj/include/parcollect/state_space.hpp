#pragma once

#include <cstdint>
#include <vector>

#include "parcollect/collection_spec.hpp"

namespace parcollect {

inline constexpr std::uint64_t kDefaultStateLimit = 10'000'000;

/**
 * Indexed enumeration of {origin} ∪ prod_j {1..N_j}.
 *
 * Ordering: origin first, then ascending coordinate sum, ties broken
 * lexicographically. Every transition other than a self-loop strictly
 * increases the coordinate sum, so the ordering is topological and Id - Q is
 * upper triangular. The absorbing state (N_1,...,N_m) is last.
 *
 * index_of / state_of run in O(m log) via mixed-radix ranking against
 * per-digit completion-count tables; no per-state table is stored.
 */
class StateSpace {
public:
    /// Enumerates the space; throws CapacityError when 1 + prod(N_j)
    /// exceeds state_limit.
    explicit StateSpace(CollectionSpec spec, std::uint64_t state_limit = kDefaultStateLimit);

    const CollectionSpec& spec() const { return spec_; }
    std::uint64_t size() const { return size_; }
    std::uint64_t transient_count() const { return size_ - 1; }
    std::uint64_t absorbing_index() const { return size_ - 1; }

    std::uint64_t index_of(const State& state) const;
    State state_of(std::uint64_t index) const;

    bool is_valid(const State& state) const;

private:
    // tuples_from_[j][t]: number of (i_j,...,i_{m-1}) with i in [1,N] summing
    // to t; cum_from_ holds inclusive prefix sums over t.
    std::uint64_t cum(std::size_t j, std::int64_t t) const;

    CollectionSpec spec_;
    std::uint64_t size_ = 0;
    std::uint64_t sum_n_ = 0;  // sum of all N_j, the maximal coordinate sum
    std::vector<std::vector<std::uint64_t>> tuples_from_;
    std::vector<std::vector<std::uint64_t>> cum_from_;
    std::vector<std::uint64_t> bucket_start_;  // index of first state with sum m+b
};

/// Convenience matching the build contract.
inline StateSpace build_space(CollectionSpec spec,
                              std::uint64_t state_limit = kDefaultStateLimit) {
    return StateSpace(std::move(spec), state_limit);
}

}  // namespace parcollect
