#include "flrs/gf.hpp"

#include <algorithm>
#include <string>

#include "flrs/errors.hpp"
#include "number_theory.hpp"

namespace flrs {

namespace {

constexpr std::uint32_t kMaxBaseTableOrder = 1024;

using Poly = std::vector<std::uint32_t>;  // little-endian coefficients over a base field

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Polynomials over the prime field F_p, used only to build the tables of F_{p^e}.
Poly prime_poly_mod(Poly a, const Poly& g, std::uint32_t p) {
    trim(a);
    const std::size_t dg = g.size() - 1;
    while (a.size() > dg) {
        const std::uint32_t c = a.back();
        const std::size_t shift = a.size() - 1 - dg;
        for (std::size_t i = 0; i <= dg; ++i) {
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + std::uint64_t{p - c} * g[i]) % p);
        }
        trim(a);
    }
    return a;
}

Poly decode_base(std::uint64_t v, std::uint32_t base, unsigned len) {
    Poly d(len);
    for (unsigned i = 0; i < len; ++i) {
        d[i] = static_cast<std::uint32_t>(v % base);
        v /= base;
    }
    return d;
}

std::uint64_t encode_base(const Poly& d, std::uint32_t base) {
    std::uint64_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * base + d[i];
    return v;
}

bool prime_poly_irreducible(const Poly& g, std::uint32_t p) {
    const unsigned deg = static_cast<unsigned>(g.size() - 1);
    for (unsigned d = 1; 2 * d <= deg; ++d) {
        const std::uint64_t count = detail::checked_pow(p, d);
        for (std::uint64_t enc = 0; enc < count; ++enc) {
            Poly h = decode_base(enc, p, d);
            h.push_back(1);
            if (prime_poly_mod(g, h, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// BaseField

BaseField::BaseField(std::uint64_t q) {
    const auto [p, e] = detail::prime_power(q);
    if (p == 0) throw ParameterError("q_prime_power", "q must be a prime power, got " + std::to_string(q));
    if (e == 1 && p >= (std::uint64_t{1} << 31)) {
        throw ParameterError("q_range", "prime q must be below 2^31");
    }
    if (e > 1 && q > kMaxBaseTableOrder) {
        throw ParameterError("q_range", "non-prime q must not exceed " + std::to_string(kMaxBaseTableOrder));
    }
    p_ = static_cast<std::uint32_t>(p);
    e_ = e;
    q_ = static_cast<std::uint32_t>(q);
    if (e_ == 1) return;

    Poly g;
    for (std::uint64_t enc = 0;; ++enc) {
        g = decode_base(enc, p_, e_);
        g.push_back(1);
        if (g[0] != 0 && prime_poly_irreducible(g, p_)) break;
    }

    add_.resize(std::size_t{q_} * q_);
    mul_.resize(std::size_t{q_} * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    for (std::uint32_t a = 0; a < q_; ++a) {
        const Poly da = decode_base(a, p_, e_);
        Poly dn(e_);
        for (unsigned i = 0; i < e_; ++i) dn[i] = (p_ - da[i]) % p_;
        neg_[a] = static_cast<std::uint32_t>(encode_base(dn, p_));
        for (std::uint32_t b = 0; b < q_; ++b) {
            const Poly db = decode_base(b, p_, e_);
            Poly sum(e_);
            for (unsigned i = 0; i < e_; ++i) sum[i] = (da[i] + db[i]) % p_;
            add_[a * q_ + b] = static_cast<std::uint32_t>(encode_base(sum, p_));
            Poly prod(2 * e_ - 1, 0);
            for (unsigned i = 0; i < e_; ++i)
                for (unsigned j = 0; j < e_; ++j)
                    prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_);
            Poly r = prime_poly_mod(prod, g, p_);
            r.resize(e_, 0);
            mul_[a * q_ + b] = static_cast<std::uint32_t>(encode_base(r, p_));
        }
    }
    for (std::uint32_t a = 1; a < q_; ++a)
        for (std::uint32_t b = 1; b < q_; ++b)
            if (mul_[a * q_ + b] == 1) inv_[a] = b;
}

BaseField::value_type BaseField::inv(value_type a) const {
    if (a == 0) throw DomainError("inverse of zero in F_q");
    if (e_ > 1) return inv_[a];
    return static_cast<value_type>(detail::pow_mod(a, p_ - 2, p_));
}

// ---------------------------------------------------------------------------
// Field

Field::Field(FieldParams params)
    : q_(params.q), m_(params.m), order_(0), base_(params.q) {
    if (m_ < 1 || m_ > kMaxDegree) {
        throw ParameterError("m_range", "extension degree m must lie in [1, " + std::to_string(kMaxDegree) + "]");
    }
    order_ = detail::checked_pow(q_, m_);
    q_powers_.resize(m_ + 1);
    q_powers_[0] = 1;
    for (unsigned i = 1; i < m_; ++i) q_powers_[i] = q_powers_[i - 1] * q_;
    q_powers_[m_] = order_;
    group_order_factors_ = detail::prime_factors(order_ - 1);

    // Residue class of x modulo the current modulus.
    auto x_residue = [&]() {
        if (m_ >= 2) return FieldElement{q_};
        return FieldElement{base_.neg(modulus_[0])};
    };

    if (!params.modulus.empty()) {
        modulus_ = params.modulus;
        if (modulus_.size() != m_ + 1 || modulus_.back() != 1) {
            throw ParameterError("modulus_shape", "modulus must be monic with m + 1 little-endian coefficients");
        }
        for (auto c : modulus_) {
            if (c >= q_) throw ParameterError("modulus_shape", "modulus coefficient out of range [0, q)");
        }
        if (!modulus_is_irreducible()) {
            throw ParameterError("modulus_irreducible", "modulus is not irreducible over F_q");
        }
    } else {
        // x primitive modulo f implies f irreducible: the unit group then has
        // q^m - 1 elements, so every nonzero residue is invertible.
        bool found = false;
        for (std::uint64_t enc = 1; enc < order_ && !found; ++enc) {
            Poly lower = decode_base(enc, static_cast<std::uint32_t>(q_), m_);
            if (lower[0] == 0) continue;
            modulus_ = lower;
            modulus_.push_back(1);
            found = is_primitive_generic(x_residue());
        }
        if (!found) throw InternalError("no primitive polynomial found");
    }

    if (params.gamma) {
        if (*params.gamma >= order_) throw ParameterError("gamma_range", "gamma encoding out of range");
        gamma_ = FieldElement{*params.gamma};
        if (!is_primitive_generic(gamma_)) {
            throw ParameterError("gamma_primitive", "gamma is not a primitive element");
        }
    } else if (is_primitive_generic(x_residue())) {
        gamma_ = x_residue();
    } else {
        std::uint64_t e = 1;
        while (!is_primitive_generic(FieldElement{e})) ++e;
        gamma_ = FieldElement{e};
    }

    if (params.use_tables && order_ <= kMaxTableOrder) build_tables();
}

void Field::build_tables() {
    const std::uint64_t n = order_ - 1;
    exp_.resize(2 * n);
    log_.assign(order_, 0);
    FieldElement cur = one();
    for (std::uint64_t i = 0; i < n; ++i) {
        exp_[i] = static_cast<std::uint32_t>(cur.value);
        exp_[i + n] = exp_[i];
        log_[cur.value] = static_cast<std::uint32_t>(i);
        cur = mul_generic(cur, gamma_);
    }
    frob_exponent_.resize(m_);
    for (unsigned i = 0; i < m_; ++i) frob_exponent_[i] = q_powers_[i] % n;
    if (order_ <= kMaxAddTableOrder) {
        add_table_.resize(order_ * order_);
        for (std::uint64_t a = 0; a < order_; ++a)
            for (std::uint64_t b = 0; b < order_; ++b)
                add_table_[a * order_ + b] =
                    static_cast<std::uint16_t>(add_generic(FieldElement{a}, FieldElement{b}).value);
    }
}

void Field::to_digits(FieldElement a, Digits& d) const noexcept {
    std::uint64_t v = a.value;
    for (unsigned i = 0; i < m_; ++i) {
        d[i] = static_cast<std::uint32_t>(v % q_);
        v /= q_;
    }
}

FieldElement Field::from_digits(const Digits& d) const noexcept {
    std::uint64_t v = 0;
    for (unsigned i = m_; i-- > 0;) v = v * q_ + d[i];
    return FieldElement{v};
}

FieldElement Field::element(std::uint64_t encoding) const {
    if (encoding >= order_) {
        throw ParameterError("field_element", "field element encoding " + std::to_string(encoding) +
                                                  " out of range [0, " + std::to_string(order_) + ")");
    }
    return FieldElement{encoding};
}

FieldElement Field::from_coefficients(std::span<const std::uint32_t> coeffs) const {
    if (coeffs.size() > m_) throw ParameterError("field_element", "too many coefficients");
    Digits d{};
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] >= q_) throw ParameterError("field_element", "coefficient out of range [0, q)");
        d[i] = coeffs[i];
    }
    return from_digits(d);
}

std::vector<std::uint32_t> Field::coefficients(FieldElement a) const {
    Digits d{};
    to_digits(a, d);
    return {d.begin(), d.begin() + m_};
}

FieldElement Field::add_generic(FieldElement a, FieldElement b) const noexcept {
    if (q_ == 2) return FieldElement{a.value ^ b.value};
    Digits da{}, db{};
    to_digits(a, da);
    to_digits(b, db);
    for (unsigned i = 0; i < m_; ++i) da[i] = base_.add(da[i], db[i]);
    return from_digits(da);
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
    if (!add_table_.empty()) return FieldElement{add_table_[a.value * order_ + b.value]};
    return add_generic(a, b);
}

FieldElement Field::neg(FieldElement a) const {
    if (base_.characteristic() == 2 || a.value == 0) return a;
    Digits d{};
    to_digits(a, d);
    for (unsigned i = 0; i < m_; ++i) d[i] = base_.neg(d[i]);
    return from_digits(d);
}

FieldElement Field::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement Field::mul_generic(FieldElement a, FieldElement b) const noexcept {
    if (a.value == 0 || b.value == 0) return zero();
    std::array<std::uint32_t, 2 * kMaxDegree> prod{};
    Digits da{}, db{};
    to_digits(a, da);
    to_digits(b, db);
    for (unsigned i = 0; i < m_; ++i) {
        if (da[i] == 0) continue;
        for (unsigned j = 0; j < m_; ++j) prod[i + j] = base_.add(prod[i + j], base_.mul(da[i], db[j]));
    }
    for (unsigned d = 2 * m_ - 1; d-- > m_;) {
        const std::uint32_t c = prod[d];
        if (c == 0) continue;
        const unsigned shift = d - m_;
        for (unsigned i = 0; i <= m_; ++i) prod[shift + i] = base_.sub(prod[shift + i], base_.mul(c, modulus_[i]));
    }
    Digits r{};
    std::copy_n(prod.begin(), m_, r.begin());
    return from_digits(r);
}

FieldElement Field::mul(FieldElement a, FieldElement b) const {
    if (!exp_.empty()) {
        if (a.value == 0 || b.value == 0) return zero();
        return FieldElement{exp_[std::size_t{log_[a.value]} + log_[b.value]]};
    }
    return mul_generic(a, b);
}

FieldElement Field::scale(std::uint32_t lambda, FieldElement a) const { return mul(embed(lambda), a); }

FieldElement Field::pow_generic(FieldElement a, std::uint64_t e) const noexcept {
    FieldElement r = one();
    while (e) {
        if (e & 1) r = mul_generic(r, a);
        a = mul_generic(a, a);
        e >>= 1;
    }
    return r;
}

FieldElement Field::pow(FieldElement a, std::uint64_t e) const {
    if (!exp_.empty()) {
        if (e == 0) return one();
        if (a.value == 0) return zero();
        const std::uint64_t n = order_ - 1;
        return FieldElement{exp_[detail::mul_mod(log_[a.value], e % n, n)]};
    }
    return pow_generic(a, e);
}

FieldElement Field::inv_euclid(FieldElement a) const {
    // Extended Euclid on (modulus, a) over F_q, tracking the cofactor of a.
    auto poly_of = [&](FieldElement x) {
        Poly p = coefficients(x);
        trim(p);
        return p;
    };
    auto sub_scaled_shift = [&](Poly& dst, const Poly& src, std::uint32_t c, std::size_t shift) {
        if (dst.size() < src.size() + shift) dst.resize(src.size() + shift, 0);
        for (std::size_t i = 0; i < src.size(); ++i) dst[i + shift] = base_.sub(dst[i + shift], base_.mul(c, src[i]));
        trim(dst);
    };
    Poly r0 = modulus_, r1 = poly_of(a);
    Poly s0, s1{1};
    while (r1.size() > 1) {
        // r0 <- r0 mod r1, s0 <- s0 - quotient * s1
        const std::uint32_t lead_inv = base_.inv(r1.back());
        while (r0.size() >= r1.size()) {
            const std::uint32_t c = base_.mul(r0.back(), lead_inv);
            const std::size_t shift = r0.size() - r1.size();
            sub_scaled_shift(r0, r1, c, shift);
            sub_scaled_shift(s0, s1, c, shift);
        }
        std::swap(r0, r1);
        std::swap(s0, s1);
    }
    const std::uint32_t c = base_.inv(r1[0]);
    Digits d{};
    for (std::size_t i = 0; i < s1.size() && i < m_; ++i) d[i] = base_.mul(c, s1[i]);
    return from_digits(d);
}

FieldElement Field::inv(FieldElement a) const {
    if (a.value == 0) throw DomainError("inverse of zero in F_{q^m}");
    if (!exp_.empty()) {
        const std::uint64_t n = order_ - 1;
        return FieldElement{exp_[(n - log_[a.value]) % n]};
    }
    return inv_euclid(a);
}

FieldElement Field::frobenius(FieldElement a, long long i) const {
    const long long mm = static_cast<long long>(m_);
    const unsigned shift = static_cast<unsigned>(((i % mm) + mm) % mm);
    if (shift == 0 || a.value == 0) return a;
    if (!exp_.empty()) {
        const std::uint64_t n = order_ - 1;
        return FieldElement{exp_[detail::mul_mod(log_[a.value], frob_exponent_[shift], n)]};
    }
    for (unsigned k = 0; k < shift; ++k) a = pow_generic(a, q_);
    return a;
}

FieldElement Field::conjugate(FieldElement a, FieldElement c) const {
    if (c.value == 0) throw DomainError("conjugation by zero");
    return mul(mul(frobenius(c, 1), a), inv(c));
}

std::vector<FieldElement> Field::conjugacy_representatives(std::size_t count) const {
    if (count < 1) throw ParameterError("conjugacy_classes", "need at least one conjugacy representative");
    if (count > q_ - 1) throw ParameterError("conjugacy_classes", "not enough conjugacy classes");
    std::vector<FieldElement> reps(count);
    FieldElement cur = one();
    for (auto& r : reps) {
        r = cur;
        cur = mul(cur, gamma_);
    }
    return reps;
}

std::uint64_t Field::multiplicative_order(FieldElement a) const {
    if (a.value == 0) throw DomainError("order of zero");
    std::uint64_t ord = order_ - 1;
    for (std::uint64_t p : group_order_factors_) {
        while (ord % p == 0 && pow_generic(a, ord / p) == one()) ord /= p;
    }
    return ord;
}

bool Field::is_primitive_generic(FieldElement a) const {
    if (a.value == 0) return false;
    const std::uint64_t n = order_ - 1;
    if (pow_generic(a, n) != one()) return false;
    for (std::uint64_t p : group_order_factors_) {
        if (pow_generic(a, n / p) == one()) return false;
    }
    return true;
}

bool Field::modulus_is_irreducible() const {
    if (m_ == 1) return true;
    if (modulus_[0] == 0) return false;
    // Rabin: x^{q^m} = x mod f, and gcd(x^{q^{m/p}} - x, f) = 1 for primes p | m.
    const FieldElement x{q_};
    std::vector<FieldElement> frob_x(m_ + 1);
    frob_x[0] = x;
    for (unsigned i = 1; i <= m_; ++i) frob_x[i] = pow_generic(frob_x[i - 1], q_);
    if (frob_x[m_] != x) return false;

    auto poly_gcd_degree = [&](Poly a, Poly b) {
        trim(a);
        trim(b);
        while (!b.empty()) {
            const std::uint32_t lead_inv = base_.inv(b.back());
            while (a.size() >= b.size()) {
                const std::uint32_t c = base_.mul(a.back(), lead_inv);
                const std::size_t shift = a.size() - b.size();
                for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = base_.sub(a[i + shift], base_.mul(c, b[i]));
                trim(a);
            }
            std::swap(a, b);
        }
        return a.empty() ? -1 : static_cast<int>(a.size()) - 1;
    };
    for (std::uint64_t p : detail::prime_factors(m_)) {
        Poly g = coefficients(sub(frob_x[m_ / p], x));
        if (poly_gcd_degree(modulus_, g) != 0) return false;
    }
    return true;
}

}  // namespace flrs
