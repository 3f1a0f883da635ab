#include "flrs/decoder.hpp"

#include <stdexcept>

#include "flrs/channel.hpp"
#include "flrs/errors.hpp"

namespace flrs {

namespace {

using boost::multiprecision::cpp_int;

long long floor_of(const Rational& r) {
    cpp_int num = boost::multiprecision::numerator(r);
    const cpp_int den = boost::multiprecision::denominator(r);
    cpp_int q = num / den;  // truncates toward zero
    if (num < 0 && q * den != num) q -= 1;
    return q.convert_to<long long>();
}

long long ceil_of(const Rational& r) { return -floor_of(-r); }

long long as_signed(std::size_t v) { return static_cast<long long>(v); }

}  // namespace

void validate(const CodeParams& params, const DecoderConfig& config) {
    if (config.s < 1 || config.s > params.h) {
        throw ParameterError("interpolation_parameter", "interpolation parameter s must satisfy 1 <= s <= h");
    }
    if (config.mu < 1) throw ParameterError("dimension_threshold", "dimension threshold mu must be at least 1");
    if (config.list_cap < 1) throw ParameterError("list_cap", "list cap must be at least 1");
    if (degree_constraint(params, config.s, config.mu) < params.k) {
        throw ParameterError("degree_constraint", "degree constraint D is below the dimension k; rate too high for s");
    }
}

std::size_t degree_constraint(const CodeParams& params, std::size_t s, std::size_t mu) {
    const std::size_t num = params.N * (params.h - s + 1) + s * (params.k - 1) + mu;
    return (num + s) / (s + 1);
}

Rational decoding_radius(const CodeParams& params, std::size_t s, std::size_t mu) {
    const long long window = as_signed(params.h - s + 1);
    return list_decoding_radius(params, s) - Rational(as_signed(mu), as_signed(s + 1) * window);
}

Rational list_decoding_radius(const CodeParams& params, std::size_t s) {
    const long long window = as_signed(params.h - s + 1);
    return Rational(as_signed(s), as_signed(s + 1)) *
           Rational(as_signed(params.N) * window - as_signed(params.k) + 1, window);
}

long long max_correctable_errors(const CodeParams& params, const DecoderConfig& config, DecodeMode mode) {
    if (mode == DecodeMode::Unique) return floor_of(decoding_radius(params, config.s, config.mu));
    return ceil_of(list_decoding_radius(params, config.s)) - 1;
}

InterpolationPointSet build_interpolation_points(const CodeParams& params, std::size_t s,
                                                 const FoldedWord& received) {
    check_shape(params, received);
    if (s < 1 || s > params.h) throw ParameterError("interpolation_parameter", "s must satisfy 1 <= s <= h");
    const auto locators = code_locators(params);
    InterpolationPointSet pts;
    pts.s = s;
    pts.blocks.resize(params.ell);
    for (std::size_t i = 0; i < params.ell; ++i) {
        const auto& R = received.blocks[i];
        for (std::size_t j = 0; j < params.folded_block_length(); ++j) {
            for (std::size_t l = 0; l + s <= params.h; ++l) {
                InterpolationPoint p;
                p.block = i;
                p.position = j * params.h + l;
                p.locator = locators[p.position];
                for (std::size_t r = 0; r < s; ++r) p.values.push_back(R(l + r, j));
                pts.blocks[i].push_back(std::move(p));
            }
        }
    }
    return pts;
}

FieldElement InterpolationPolynomial::evaluate(const Field& F, const InterpolationPoint& point, FieldElement a) const {
    FieldElement acc = op_evaluate(F, std::span<const FieldElement>(q0), point.locator, a);
    for (std::size_t r = 0; r < qr.size(); ++r) {
        acc = F.add(acc, op_evaluate(F, std::span<const FieldElement>(qr[r]), point.values[r], a));
    }
    return acc;
}

Matrix<FieldElement> interpolation_matrix(const CodeParams& params, std::size_t D, const InterpolationPointSet& pts) {
    const Field& F = params.F();
    const std::size_t s = pts.s;
    const std::size_t Dq = D - params.k + 1;
    const std::size_t cols = D + s * Dq;

    // Column r of the point matrices, split by block: p_0 holds locators, p_r the r-th window value.
    std::vector<std::vector<std::vector<FieldElement>>> p(s + 1, std::vector<std::vector<FieldElement>>(params.ell));
    for (std::size_t i = 0; i < params.ell; ++i)
        for (const auto& pt : pts.blocks[i]) {
            p[0][i].push_back(pt.locator);
            for (std::size_t r = 0; r < s; ++r) p[r + 1][i].push_back(pt.values[r]);
        }

    Matrix<FieldElement> S(pts.size(), cols);
    std::size_t col_offset = 0;
    for (std::size_t r = 0; r <= s; ++r) {
        const std::size_t d = r == 0 ? D : Dq;
        const auto M = moore_matrix(F, d, p[r], params.a);
        for (std::size_t row = 0; row < M.cols(); ++row)
            for (std::size_t j = 0; j < d; ++j) S(row, col_offset + j) = M(j, row);
        col_offset += d;
    }
    return S;
}

InterpolationBasis solve_interpolation(const CodeParams& params, const DecoderConfig& config,
                                       const InterpolationPointSet& pts) {
    const Field& F = params.F();
    InterpolationBasis basis;
    basis.D = degree_constraint(params, config.s, config.mu);
    basis.k = params.k;
    basis.s = config.s;
    if (basis.D < params.k) throw ParameterError("degree_constraint", "degree constraint D is below k");
    const std::size_t Dq = basis.D - params.k + 1;

    const auto S = interpolation_matrix(params, basis.D, pts);
    const auto kernel = kernel_basis(F, S);
    if (kernel.empty()) throw InternalError("interpolation system has only the trivial solution");
    basis.rank = S.cols() - kernel.size();

    for (const auto& v : kernel) {
        InterpolationPolynomial Q;
        Q.q0.assign(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(basis.D));
        for (std::size_t r = 0; r < config.s; ++r) {
            const auto first = v.begin() + static_cast<std::ptrdiff_t>(basis.D + r * Dq);
            Q.qr.emplace_back(first, first + static_cast<std::ptrdiff_t>(Dq));
        }
        basis.polys.push_back(std::move(Q));
    }
    return basis;
}

RootFindingSystem build_root_finding(const CodeParams& params, const DecoderConfig& config,
                                     const InterpolationBasis& basis) {
    if (basis.polys.empty()) throw InternalError("root finding needs a nonempty interpolation basis");
    const Field& F = params.F();
    RootFindingSystem sys;
    sys.D = basis.D;
    sys.k = params.k;
    sys.d_I = basis.dimension();
    sys.B = Matrix<FieldElement>(sys.D * sys.d_I, sys.k);
    sys.rhs.assign(sys.D * sys.d_I, F.zero());
    const std::size_t Dq = sys.D - sys.k + 1;

    for (std::size_t a = 0; a < sys.D; ++a) {
        const auto shift = static_cast<long long>(a);
        const FieldElement point = F.frobenius(F.gamma(), shift);
        for (std::size_t u = 0; u < sys.d_I; ++u) {
            const auto& Q = basis.polys[u];
            const std::size_t row = a * sys.d_I + u;
            sys.rhs[row] = F.neg(F.frobenius(Q.q0[a], -shift));
            for (std::size_t j = 0; j < Dq && j <= a; ++j) {
                const std::size_t col = a - j;
                if (col >= sys.k) continue;
                // B_j^{(u)}(x) = q_{1,j} + q_{2,j} x + ... + q_{s,j} x^{s-1}, by Horner.
                FieldElement value = F.zero();
                for (std::size_t r = config.s; r-- > 0;) value = F.add(F.mul(value, point), Q.qr[r][j]);
                sys.B(row, col) = F.frobenius(value, -shift);
            }
        }
    }
    return sys;
}

namespace {

SkewPoly untwist(const Field& F, const std::vector<FieldElement>& fhat) {
    std::vector<FieldElement> f(fhat.size());
    for (std::size_t j = 0; j < fhat.size(); ++j) f[j] = F.frobenius(fhat[j], static_cast<long long>(j));
    return SkewPoly(std::move(f));
}

}  // namespace

DecodeOutcome solve_root_finding(const Field& F, const RootFindingSystem& sys, DecodeMode mode, std::size_t list_cap) {
    DecodeOutcome out;
    out.diagnostics.D = sys.D;
    out.diagnostics.d_I = sys.d_I;

    const std::size_t k = sys.k;
    Matrix<FieldElement> aug(sys.B.rows(), k + 1);
    for (std::size_t r = 0; r < sys.B.rows(); ++r) {
        for (std::size_t c = 0; c < k; ++c) aug(r, c) = sys.B(r, c);
        aug(r, k) = sys.rhs[r];
    }
    // Column-ordered pivoting on the lower-banded matrix performs the forward substitution.
    const Echelon ech = reduce_rows(F, aug, k);
    const std::size_t rank_B = ech.rank();
    out.diagnostics.rank_B = rank_B;
    out.diagnostics.d_RF = k - rank_B;

    bool consistent = true;
    for (std::size_t r = rank_B; r < aug.rows(); ++r) {
        if (!F.is_zero(aug(r, k))) {
            consistent = false;
            break;
        }
    }

    if (mode == DecodeMode::Unique) {
        if (rank_B < k) {
            out.kind = OutcomeKind::Failure;
            out.failure_reason = "rank-deficient";
            return out;
        }
        if (!consistent) {
            out.kind = OutcomeKind::Failure;
            out.failure_reason = "inconsistent";
            return out;
        }
        std::vector<FieldElement> fhat(k);
        for (std::size_t r = 0; r < rank_B; ++r) fhat[ech.pivot_cols[r]] = aug(r, k);
        out.kind = OutcomeKind::Unique;
        out.messages.push_back(untwist(F, fhat));
        out.diagnostics.candidate_count = 1;
        return out;
    }

    out.kind = OutcomeKind::List;
    if (!consistent) return out;

    const std::size_t d_RF = k - rank_B;
    std::size_t count = 1;
    for (std::size_t i = 0; i < d_RF; ++i) {
        if (count > list_cap / F.order()) {
            out.kind = OutcomeKind::Failure;
            out.failure_reason = "list overflow";
            return out;
        }
        count *= F.order();
    }
    if (count > list_cap) {
        out.kind = OutcomeKind::Failure;
        out.failure_reason = "list overflow";
        return out;
    }

    std::vector<FieldElement> particular(k);
    for (std::size_t r = 0; r < rank_B; ++r) particular[ech.pivot_cols[r]] = aug(r, k);
    std::vector<bool> is_pivot(k, false);
    for (auto c : ech.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<FieldElement>> kernel;
    for (std::size_t f = 0; f < k; ++f) {
        if (is_pivot[f]) continue;
        std::vector<FieldElement> v(k);
        v[f] = F.one();
        for (std::size_t r = 0; r < rank_B; ++r) v[ech.pivot_cols[r]] = F.neg(aug(r, f));
        kernel.push_back(std::move(v));
    }

    for (std::size_t idx = 0; idx < count; ++idx) {
        std::vector<FieldElement> sol = particular;
        std::uint64_t rest = idx;
        for (const auto& v : kernel) {
            const FieldElement lambda{rest % F.order()};
            rest /= F.order();
            if (F.is_zero(lambda)) continue;
            for (std::size_t c = 0; c < k; ++c) sol[c] = F.add(sol[c], F.mul(lambda, v[c]));
        }
        out.messages.push_back(untwist(F, sol));
    }
    out.diagnostics.candidate_count = count;
    return out;
}

DecodeOutcome decode(const CodeParams& params, const DecoderConfig& config, const FoldedWord& received,
                     DecodeMode mode) {
    validate(params, config);
    const Field& F = params.F();
    const auto pts = build_interpolation_points(params, config.s, received);
    const auto basis = solve_interpolation(params, config, pts);
    const auto sys = build_root_finding(params, config, basis);
    DecodeOutcome out = solve_root_finding(F, sys, mode, config.list_cap);
    out.diagnostics.interpolation_rank = basis.rank;
    if (out.kind == OutcomeKind::Failure) return out;

    const long long t_max = max_correctable_errors(params, config, mode);
    std::vector<SkewPoly> verified;
    for (auto& f : out.messages) {
        if (t_max < 0) break;
        const auto distance = sum_rank_distance(F, received, encode(params, f));
        if (as_signed(distance) <= t_max) verified.push_back(std::move(f));
    }
    out.diagnostics.verified_count = verified.size();
    out.messages = std::move(verified);

    if (out.messages.empty()) {
        out.kind = OutcomeKind::Failure;
        out.failure_reason = "no verified candidate";
        out.diagnostics.verification_rejected = out.diagnostics.candidate_count > 0;
        return out;
    }
    if (mode == DecodeMode::Unique && out.messages.size() > 1) {
        out.kind = OutcomeKind::Failure;
        out.failure_reason = "ambiguous";
    }
    return out;
}

FailureBound failure_bound(std::size_t k, std::uint64_t q, unsigned m, std::size_t d_I) {
    if (d_I < 1) throw ParameterError("dimension", "failure bound needs d_I >= 1");
    const cpp_int order = boost::multiprecision::pow(cpp_int(q), m);
    const Rational ratio(cpp_int(k), order);
    Rational exact{cpp_int(k)};
    for (std::size_t i = 0; i < d_I; ++i) exact *= ratio;
    return {exact, exact.convert_to<double>()};
}

long long interpolation_dimension_bound(const CodeParams& params, const DecoderConfig& config, std::size_t t) {
    const long long D = as_signed(degree_constraint(params, config.s, config.mu));
    return as_signed(config.s) * (D - as_signed(params.k) + 1) - as_signed(t) * as_signed(params.h - config.s + 1);
}

const char* to_string(OutcomeKind kind) {
    switch (kind) {
        case OutcomeKind::Unique: return "Unique";
        case OutcomeKind::List: return "List";
        case OutcomeKind::Failure: return "Failure";
    }
    return "Failure";
}

const char* to_string(DecodeMode mode) { return mode == DecodeMode::Unique ? "unique" : "list"; }

DecodeMode parse_mode(const std::string& text) {
    if (text == "unique") return DecodeMode::Unique;
    if (text == "list") return DecodeMode::List;
    throw ParameterError("mode", "mode must be 'unique' or 'list'");
}

}  // namespace flrs
