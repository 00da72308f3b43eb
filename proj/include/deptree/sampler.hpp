#pragma once

#include "deptree/bignum.hpp"
#include "deptree/counting.hpp"
#include "deptree/tree.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>

namespace deptree {

/// Source of the discrete decisions made by the sampler. Given positive
/// weights w_0..w_{k-1} summing to `total`, returns index i with probability
/// w_i / total.
class ChoiceSource {
public:
    virtual ~ChoiceSource() = default;
    virtual std::size_t choose(std::span<const BigNat> weights, const BigNat& total) = 0;
};

/// Seeded pseudo-random decisions over a shared, read-only count table.
///
/// The generator is std::mt19937_64, whose output sequence is fixed by the
/// standard, so a seed reproduces the same samples on any conforming build.
/// Choices are exact: a uniform integer in [0, total) is drawn by rejection
/// from 64-bit words and located among the cumulative weights.
class SamplerState final : public ChoiceSource {
public:
    SamplerState(const CountTable& table, std::uint64_t seed) : table_(&table), rng_(seed) {}

    const CountTable& table() const noexcept { return *table_; }

    /// Uniform integer in [0, bound); bound must be positive.
    BigNat uniform_below(const BigNat& bound);

    std::size_t choose(std::span<const BigNat> weights, const BigNat& total) override;

private:
    const CountTable* table_;
    std::mt19937_64 rng_;
};

/// A uniformly random tree with exactly n nodes. Runs on an explicit work
/// stack, so the depth of the sampled tree is not limited by the call stack.
DepTree sample_tree(std::size_t n, SamplerState& state);

/// A uniformly random forest of total size m.
Forest sample_forest(std::size_t m, SamplerState& state);

/// Same decompositions with decisions taken from an arbitrary source.
DepTree sample_tree(std::size_t n, const CountTable& table, ChoiceSource& choices);
Forest sample_forest(std::size_t m, const CountTable& table, ChoiceSource& choices);

}  // namespace deptree
