#include "flrs/skew.hpp"

#include <algorithm>

namespace flrs {

SkewPoly skew_add(const Field& F, const SkewPoly& f, const SkewPoly& g) {
    const std::size_t n = std::max(f.coeffs().size(), g.coeffs().size());
    std::vector<FieldElement> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = F.add(f.coeff(i), g.coeff(i));
    return SkewPoly(std::move(out));
}

SkewPoly skew_sub(const Field& F, const SkewPoly& f, const SkewPoly& g) {
    const std::size_t n = std::max(f.coeffs().size(), g.coeffs().size());
    std::vector<FieldElement> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = F.sub(f.coeff(i), g.coeff(i));
    return SkewPoly(std::move(out));
}

SkewPoly skew_mul(const Field& F, const SkewPoly& f, const SkewPoly& g) {
    if (f.is_zero() || g.is_zero()) return {};
    const auto& fc = f.coeffs();
    const auto& gc = g.coeffs();
    std::vector<FieldElement> out(fc.size() + gc.size() - 1);
    for (std::size_t i = 0; i < fc.size(); ++i) {
        if (F.is_zero(fc[i])) continue;
        for (std::size_t j = 0; j < gc.size(); ++j) {
            const FieldElement term = F.mul(fc[i], F.frobenius(gc[j], static_cast<long long>(i)));
            out[i + j] = F.add(out[i + j], term);
        }
    }
    return SkewPoly(std::move(out));
}

SkewPoly skew_scale(const Field& F, FieldElement c, const SkewPoly& f) {
    std::vector<FieldElement> out(f.coeffs());
    for (auto& v : out) v = F.mul(c, v);
    return SkewPoly(std::move(out));
}

FieldElement op_power(const Field& F, FieldElement a, FieldElement b, std::size_t i) {
    for (std::size_t k = 0; k < i; ++k) b = F.mul(F.frobenius(b, 1), a);
    return b;
}

FieldElement op_evaluate(const Field& F, std::span<const FieldElement> coeffs, FieldElement b, FieldElement a) {
    FieldElement acc = F.zero();
    FieldElement power = b;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i > 0) power = F.mul(F.frobenius(power, 1), a);
        acc = F.add(acc, F.mul(coeffs[i], power));
    }
    return acc;
}

FieldElement op_evaluate(const Field& F, const SkewPoly& f, FieldElement b, FieldElement a) {
    return op_evaluate(F, std::span<const FieldElement>(f.coeffs()), b, a);
}

Matrix<FieldElement> moore_matrix(const Field& F, std::size_t d, const std::vector<std::vector<FieldElement>>& x,
                                  std::span<const FieldElement> a) {
    if (x.size() != a.size()) {
        throw ParameterError("moore_blocks", "Moore matrix needs one evaluation parameter per block");
    }
    const std::size_t kappa = x.empty() ? 0 : x.front().size();
    for (const auto& block : x) {
        if (block.size() != kappa) throw ParameterError("moore_blocks", "Moore matrix blocks differ in length");
    }
    Matrix<FieldElement> out(d, kappa * x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < kappa; ++j) {
            FieldElement v = x[i][j];
            for (std::size_t r = 0; r < d; ++r) {
                if (r > 0) v = F.mul(F.frobenius(v, 1), a[i]);
                out(r, i * kappa + j) = v;
            }
        }
    }
    return out;
}

}  // namespace flrs
