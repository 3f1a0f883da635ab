#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "flrs/code.hpp"
#include "flrs/skew.hpp"

namespace flrs {

using Rational = boost::multiprecision::cpp_rational;

enum class DecodeMode { Unique, List };

struct DecoderConfig {
    std::size_t s = 1;           // interpolation parameter, 1 <= s <= h
    std::size_t mu = 1;          // enforced lower bound on the interpolation kernel dimension
    std::size_t list_cap = 4096; // maximum number of root-finding candidates to enumerate
};

void validate(const CodeParams& params, const DecoderConfig& config);

/// D = ceil((N (h - s + 1) + s (k - 1) + mu) / (s + 1)); mu = 1 is the smallest D with a nonzero solution.
std::size_t degree_constraint(const CodeParams& params, std::size_t s, std::size_t mu);

/// Probabilistic-unique radius: t <= s/(s+1) (N(h-s+1) - k + 1)/(h-s+1) - mu/((s+1)(h-s+1)).
Rational decoding_radius(const CodeParams& params, std::size_t s, std::size_t mu);
/// List radius (strict): t < s/(s+1) (N(h-s+1) - k + 1)/(h-s+1).
Rational list_decoding_radius(const CodeParams& params, std::size_t s);
/// Largest integer error weight covered by the radius of the given mode (may be negative).
long long max_correctable_errors(const CodeParams& params, const DecoderConfig& config, DecodeMode mode);

/// Window starting at position w (0-based) of block i: (gamma^w, r_w, ..., r_{w+s-1}).
struct InterpolationPoint {
    std::size_t block = 0;
    std::size_t position = 0;
    FieldElement locator;
    std::vector<FieldElement> values;
};

/// N (h - s + 1) points, grouped by block in ascending window position.
struct InterpolationPointSet {
    std::size_t s = 0;
    std::vector<std::vector<InterpolationPoint>> blocks;

    std::size_t size() const noexcept {
        std::size_t n = 0;
        for (const auto& b : blocks) n += b.size();
        return n;
    }
};

InterpolationPointSet build_interpolation_points(const CodeParams& params, std::size_t s, const FoldedWord& received);

/// Q = Q_0(x) + sum_r Q_r(x) y_r with deg Q_0 < D and deg Q_r < D - k + 1.
struct InterpolationPolynomial {
    std::vector<FieldElement> q0;               // length D
    std::vector<std::vector<FieldElement>> qr;  // s vectors of length D - k + 1

    /// E_Q(w, i) at one point, evaluated with respect to `a`.
    FieldElement evaluate(const Field& F, const InterpolationPoint& point, FieldElement a) const;
};

struct InterpolationBasis {
    std::size_t D = 0;
    std::size_t k = 0;
    std::size_t s = 0;
    std::size_t rank = 0;  // rank of the interpolation matrix S
    std::vector<InterpolationPolynomial> polys;

    std::size_t dimension() const noexcept { return polys.size(); }
};

/// The interpolation matrix S (one row per point, columns ordered as q_{0,*}, q_{1,*}, ..., q_{s,*}).
Matrix<FieldElement> interpolation_matrix(const CodeParams& params, std::size_t D, const InterpolationPointSet& pts);

/// Full basis of the solution space of the interpolation problem.
InterpolationBasis solve_interpolation(const CodeParams& params, const DecoderConfig& config,
                                       const InterpolationPointSet& pts);

/**
 * Banded system B fhat = -q in the twisted unknown
 * fhat = (f_0, sigma^{-1}(f_1), ..., sigma^{-(k-1)}(f_{k-1})).
 *
 * Rows come in D blocks of d_I rows. Row (a, u), column c holds
 * sigma^{-a}(B_{a-c}^{(u)}(sigma^a(gamma))) when 0 <= a - c <= D - k.
 */
struct RootFindingSystem {
    std::size_t D = 0;
    std::size_t k = 0;
    std::size_t d_I = 0;
    Matrix<FieldElement> B;
    std::vector<FieldElement> rhs;  // -q
};

RootFindingSystem build_root_finding(const CodeParams& params, const DecoderConfig& config,
                                     const InterpolationBasis& basis);

enum class OutcomeKind { Unique, List, Failure };

struct DecodeDiagnostics {
    std::size_t D = 0;
    std::size_t d_I = 0;
    std::size_t interpolation_rank = 0;
    std::size_t rank_B = 0;
    std::size_t d_RF = 0;
    std::size_t candidate_count = 0;
    std::size_t verified_count = 0;
    bool verification_rejected = false;
};

struct DecodeOutcome {
    OutcomeKind kind = OutcomeKind::Failure;
    std::vector<SkewPoly> messages;
    std::string failure_reason;
    DecodeDiagnostics diagnostics;
};

/// Solves the root-finding system; candidates are untwisted message polynomials.
DecodeOutcome solve_root_finding(const Field& F, const RootFindingSystem& sys, DecodeMode mode, std::size_t list_cap);

/// Full pipeline with re-encoding verification of every candidate.
DecodeOutcome decode(const CodeParams& params, const DecoderConfig& config, const FoldedWord& received,
                     DecodeMode mode);

struct FailureBound {
    Rational exact;
    double value;
};
/// Heuristic failure probability k (k / q^m)^{d_I}.
FailureBound failure_bound(std::size_t k, std::uint64_t q, unsigned m, std::size_t d_I);

/// Lower bound s (D - k + 1) - t (h - s + 1) on the interpolation kernel dimension.
long long interpolation_dimension_bound(const CodeParams& params, const DecoderConfig& config, std::size_t t);

const char* to_string(OutcomeKind kind);
const char* to_string(DecodeMode mode);
DecodeMode parse_mode(const std::string& text);

}  // namespace flrs
