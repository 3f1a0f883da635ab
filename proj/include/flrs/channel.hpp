#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "flrs/code.hpp"

namespace flrs {

/// Pseudorandom generator used throughout (documented as "mt19937_64").
using Rng = std::mt19937_64;
inline constexpr const char* kRngName = "mt19937_64";

/// Number of F_q-linearly independent columns of a block over F_{q^m}.
std::size_t rank_q(const Field& F, const Matrix<FieldElement>& block);

/// sum_i rank_q(X^{(i)})
std::size_t sum_rank_weight(const Field& F, const FoldedWord& x);
std::size_t sum_rank_distance(const Field& F, const FoldedWord& x, const FoldedWord& y);

/// Largest achievable sum-rank weight: sum_i min(m h, N / ell).
std::size_t max_error_weight(const CodeParams& params);

struct ChannelSpec {
    std::size_t t = 0;
    std::uint64_t rng_seed = 0;
};

/**
 * Uniform sampler over all h x N error matrices of sum-rank weight exactly t.
 *
 * First draws the per-block ranks (t_1, ..., t_ell) with probability
 * proportional to the number of words having that rank profile, then for each
 * block draws E_i = A_i B_i with A_i in F_{q^m}^{h x t_i} of full F_q-column rank
 * and B_i in F_q^{t_i x N/ell} of full row rank. Each rank-t_i block has the
 * same number |GL_{t_i}(F_q)| of such factorizations, so the draw is uniform.
 */
class ErrorSampler {
public:
    ErrorSampler(const CodeParams& params, std::size_t t);

    std::size_t weight() const noexcept { return t_; }
    FoldedWord operator()(Rng& rng) const;

    /// Rank profiles and their probabilities (same order).
    const std::vector<std::vector<std::size_t>>& profiles() const noexcept { return profiles_; }
    const std::vector<double>& probabilities() const noexcept { return probabilities_; }

private:
    Matrix<FieldElement> sample_block(std::size_t rank, Rng& rng) const;

    CodeParams params_;
    std::size_t t_;
    std::vector<std::vector<std::size_t>> profiles_;
    std::vector<double> probabilities_;
    std::vector<double> cumulative_;
};

FoldedWord sample_error(const CodeParams& params, std::size_t t, Rng& rng);
FoldedWord sample_error(const CodeParams& params, const ChannelSpec& spec);

}  // namespace flrs
