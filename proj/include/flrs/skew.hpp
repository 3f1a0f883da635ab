#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "flrs/gf.hpp"
#include "flrs/matrix.hpp"

namespace flrs {

/**
 * Skew polynomial sum_i f_i x^i in F_{q^m}[x; sigma] with zero derivation
 * and multiplication rule x * c = sigma(c) * x.
 *
 * Holds no ring context; every operation takes the Field explicitly. The
 * coefficient vector is kept trimmed, so the highest stored coefficient is
 * nonzero and the zero polynomial has no coefficients.
 */
class SkewPoly {
public:
    static constexpr long long kZeroDegree = std::numeric_limits<long long>::min();

    SkewPoly() = default;
    explicit SkewPoly(std::vector<FieldElement> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static SkewPoly constant(FieldElement c) { return SkewPoly({c}); }
    /// c * x^i
    static SkewPoly monomial(FieldElement c, std::size_t i) {
        std::vector<FieldElement> v(i + 1);
        v[i] = c;
        return SkewPoly(std::move(v));
    }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    long long degree() const noexcept {
        return coeffs_.empty() ? kZeroDegree : static_cast<long long>(coeffs_.size()) - 1;
    }
    /// Coefficient of x^i (zero beyond the degree).
    FieldElement coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : FieldElement{}; }
    const std::vector<FieldElement>& coeffs() const noexcept { return coeffs_; }

    /// Coefficients padded with zeros to length `len`.
    std::vector<FieldElement> padded(std::size_t len) const {
        std::vector<FieldElement> v(coeffs_);
        v.resize(std::max(len, v.size()));
        return v;
    }

    friend bool operator==(const SkewPoly&, const SkewPoly&) = default;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().value == 0) coeffs_.pop_back();
    }

    std::vector<FieldElement> coeffs_;
};

SkewPoly skew_add(const Field& F, const SkewPoly& f, const SkewPoly& g);
SkewPoly skew_sub(const Field& F, const SkewPoly& f, const SkewPoly& g);
/// (sum f_i x^i)(sum g_j x^j) = sum f_i sigma^i(g_j) x^{i+j}
SkewPoly skew_mul(const Field& F, const SkewPoly& f, const SkewPoly& g);
/// c * f (left scalar multiplication).
SkewPoly skew_scale(const Field& F, FieldElement c, const SkewPoly& f);

/// D_a^i(b) = sigma^i(b) sigma^{i-1}(a) ... sigma(a) a, with D_a^0(b) = b.
FieldElement op_power(const Field& F, FieldElement a, FieldElement b, std::size_t i);

/// Generalized operator evaluation f(b)_a = sum_i f_i D_a^i(b).
FieldElement op_evaluate(const Field& F, const SkewPoly& f, FieldElement b, FieldElement a);

/// Same as op_evaluate for a raw coefficient list.
FieldElement op_evaluate(const Field& F, std::span<const FieldElement> coeffs, FieldElement b, FieldElement a);

/**
 * Generalized Moore matrix of `d` rows: the column for x_j in block i holds
 * (D_{a_i}^0(x_j), ..., D_{a_i}^{d-1}(x_j)).
 *
 * All blocks of `x` must have the same length, and `a` one entry per block.
 */
Matrix<FieldElement> moore_matrix(const Field& F, std::size_t d, const std::vector<std::vector<FieldElement>>& x,
                                  std::span<const FieldElement> a);

}  // namespace flrs
