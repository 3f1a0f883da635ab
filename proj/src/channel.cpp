#include "flrs/channel.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>

#include "flrs/errors.hpp"

namespace flrs {

namespace mp = boost::multiprecision;

std::size_t rank_q(const Field& F, const Matrix<FieldElement>& block) {
    // Expand each column over F_q: row (r, d) holds coefficient d of entry r.
    const std::size_t m = F.m();
    Matrix<std::uint32_t> expanded(block.rows() * m, block.cols(), 0);
    for (std::size_t c = 0; c < block.cols(); ++c)
        for (std::size_t r = 0; r < block.rows(); ++r) {
            const auto coeffs = F.coefficients(block(r, c));
            for (std::size_t d = 0; d < m; ++d) expanded(r * m + d, c) = coeffs[d];
        }
    return rank(F.base(), std::move(expanded));
}

std::size_t sum_rank_weight(const Field& F, const FoldedWord& x) {
    std::size_t w = 0;
    for (const auto& b : x.blocks) w += rank_q(F, b);
    return w;
}

std::size_t sum_rank_distance(const Field& F, const FoldedWord& x, const FoldedWord& y) {
    return sum_rank_weight(F, word_sub(F, x, y));
}

std::size_t max_error_weight(const CodeParams& p) {
    return p.ell * std::min(p.F().m() * p.h, p.folded_block_length());
}

namespace {

// Number of rows x cols matrices over F_q of rank u.
mp::cpp_int count_rank(std::uint64_t q, std::size_t rows, std::size_t cols, std::size_t u) {
    mp::cpp_int num = 1, den = 1;
    const mp::cpp_int qq = q;
    for (std::size_t j = 0; j < u; ++j) {
        const mp::cpp_int qj = mp::pow(qq, static_cast<unsigned>(j));
        num *= (mp::pow(qq, static_cast<unsigned>(rows)) - qj) * (mp::pow(qq, static_cast<unsigned>(cols)) - qj);
        den *= mp::pow(qq, static_cast<unsigned>(u)) - qj;
    }
    return num / den;
}

void enumerate_profiles(std::size_t blocks, std::size_t remaining, std::size_t cap, std::vector<std::size_t>& cur,
                        std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == blocks) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    for (std::size_t u = 0; u <= std::min(cap, remaining); ++u) {
        cur.push_back(u);
        enumerate_profiles(blocks, remaining - u, cap, cur, out);
        cur.pop_back();
    }
}

}  // namespace

ErrorSampler::ErrorSampler(const CodeParams& params, std::size_t t) : params_(params), t_(t) {
    if (t > max_error_weight(params)) {
        throw ParameterError("error_weight", "error weight t = " + std::to_string(t) + " exceeds maximum " +
                                                 std::to_string(max_error_weight(params)));
    }
    const std::size_t expanded_rows = params.F().m() * params.h;
    const std::size_t cols = params.folded_block_length();
    const std::size_t cap = std::min(expanded_rows, cols);
    std::vector<mp::cpp_int> per_rank(cap + 1);
    for (std::size_t u = 0; u <= cap; ++u) per_rank[u] = count_rank(params.F().q(), expanded_rows, cols, u);

    std::vector<std::size_t> cur;
    enumerate_profiles(params.ell, t, cap, cur, profiles_);
    std::vector<mp::cpp_int> counts;
    mp::cpp_int total = 0;
    for (const auto& prof : profiles_) {
        mp::cpp_int c = 1;
        for (auto u : prof) c *= per_rank[u];
        counts.push_back(c);
        total += c;
    }
    double acc = 0.0;
    for (const auto& c : counts) {
        const double p = mp::cpp_rational(c, total).convert_to<double>();
        probabilities_.push_back(p);
        acc += p;
        cumulative_.push_back(acc);
    }
    cumulative_.back() = 1.0;
}

Matrix<FieldElement> ErrorSampler::sample_block(std::size_t rank_u, Rng& rng) const {
    const Field& F = params_.F();
    const std::size_t h = params_.h;
    const std::size_t cols = params_.folded_block_length();
    if (rank_u == 0) return Matrix<FieldElement>(h, cols);

    Matrix<FieldElement> A(h, rank_u);
    do {
        for (std::size_t r = 0; r < h; ++r)
            for (std::size_t c = 0; c < rank_u; ++c) A(r, c) = F.random(rng);
    } while (rank_q(F, A) != rank_u);

    const BaseField& Fq = F.base();
    std::uniform_int_distribution<std::uint32_t> digit(0, Fq.order() - 1);
    Matrix<std::uint32_t> B(rank_u, cols);
    do {
        for (std::size_t r = 0; r < rank_u; ++r)
            for (std::size_t c = 0; c < cols; ++c) B(r, c) = digit(rng);
    } while (rank(Fq, B) != rank_u);

    Matrix<FieldElement> E(h, cols);
    for (std::size_t r = 0; r < h; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            FieldElement acc = F.zero();
            for (std::size_t l = 0; l < rank_u; ++l) acc = F.add(acc, F.mul(A(r, l), F.embed(B(l, c))));
            E(r, c) = acc;
        }
    return E;
}

FoldedWord ErrorSampler::operator()(Rng& rng) const {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double x = unit(rng);
    const std::size_t idx = static_cast<std::size_t>(
        std::upper_bound(cumulative_.begin(), cumulative_.end(), x) - cumulative_.begin());
    const auto& profile = profiles_[std::min(idx, profiles_.size() - 1)];
    FoldedWord e;
    for (auto u : profile) e.blocks.push_back(sample_block(u, rng));
    return e;
}

FoldedWord sample_error(const CodeParams& params, std::size_t t, Rng& rng) { return ErrorSampler(params, t)(rng); }

FoldedWord sample_error(const CodeParams& params, const ChannelSpec& spec) {
    Rng rng(spec.rng_seed);
    return sample_error(params, spec.t, rng);
}

}  // namespace flrs
