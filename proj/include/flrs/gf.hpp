#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <vector>

namespace flrs {

/**
 * The base field F_q, q = p^e.
 *
 * Elements are integers in [0, q). For e = 1 they are residues mod p; for
 * e > 1 the integer is the base-p encoding of a polynomial over F_p reduced
 * modulo the smallest monic irreducible polynomial of degree e.
 */
class BaseField {
public:
    using value_type = std::uint32_t;

    explicit BaseField(std::uint64_t q);

    std::uint32_t order() const noexcept { return q_; }
    std::uint32_t characteristic() const noexcept { return p_; }
    unsigned degree() const noexcept { return e_; }
    bool is_prime() const noexcept { return e_ == 1; }

    value_type zero() const noexcept { return 0; }
    value_type one() const noexcept { return 1; }
    bool is_zero(value_type a) const noexcept { return a == 0; }

    value_type add(value_type a, value_type b) const noexcept {
        if (e_ == 1) {
            const std::uint32_t s = a + b;
            return s >= p_ ? s - p_ : s;
        }
        return add_[a * q_ + b];
    }
    value_type neg(value_type a) const noexcept {
        if (e_ == 1) return a == 0 ? 0 : p_ - a;
        return neg_[a];
    }
    value_type sub(value_type a, value_type b) const noexcept { return add(a, neg(b)); }
    value_type mul(value_type a, value_type b) const noexcept {
        if (e_ == 1) return static_cast<value_type>(std::uint64_t{a} * b % p_);
        return mul_[a * q_ + b];
    }
    value_type inv(value_type a) const;
    value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }

private:
    std::uint32_t p_ = 0;
    unsigned e_ = 0;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> add_, mul_, neg_, inv_;
};

/// Element of F_{q^m}, stored as its canonical base-q integer encoding
/// e = sum_i coeffs[i] * q^i (polynomial basis, little-endian).
struct FieldElement {
    std::uint64_t value = 0;

    constexpr FieldElement() = default;
    constexpr explicit FieldElement(std::uint64_t v) : value(v) {}

    friend constexpr bool operator==(FieldElement, FieldElement) = default;
    friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

/// Construction parameters for F_{q^m}.
struct FieldParams {
    std::uint64_t q = 2;
    unsigned m = 1;
    /// Monic modulus, little-endian, m + 1 coefficients. Empty selects the
    /// smallest primitive polynomial (ordered by base-q encoding of its lower
    /// coefficients).
    std::vector<std::uint32_t> modulus;
    /// Encoding of a primitive element. Empty: x if primitive, else the
    /// smallest primitive element.
    std::optional<std::uint64_t> gamma;
    /// Use exp/log tables when q^m <= 2^16.
    bool use_tables = true;
};

/**
 * The extension field F_{q^m} = F_q[z]/(modulus) together with a fixed
 * primitive element gamma and the Frobenius automorphism sigma(a) = a^q.
 *
 * Immutable after construction. All operations are pure.
 */
class Field {
public:
    using value_type = FieldElement;

    static constexpr unsigned kMaxDegree = 64;
    static constexpr std::uint64_t kMaxTableOrder = std::uint64_t{1} << 16;
    static constexpr std::uint64_t kMaxAddTableOrder = 1024;

    explicit Field(FieldParams params);

    static std::shared_ptr<const Field> make(FieldParams params) {
        return std::make_shared<const Field>(std::move(params));
    }

    std::uint64_t q() const noexcept { return q_; }
    unsigned m() const noexcept { return m_; }
    /// Number of elements q^m.
    std::uint64_t order() const noexcept { return order_; }
    const BaseField& base() const noexcept { return base_; }
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
    FieldElement gamma() const noexcept { return gamma_; }
    bool has_tables() const noexcept { return !exp_.empty(); }

    FieldElement zero() const noexcept { return FieldElement{0}; }
    FieldElement one() const noexcept { return FieldElement{1}; }
    bool is_zero(FieldElement a) const noexcept { return a.value == 0; }

    /// Checked construction from the integer encoding.
    FieldElement element(std::uint64_t encoding) const;
    FieldElement from_coefficients(std::span<const std::uint32_t> coeffs) const;
    std::vector<std::uint32_t> coefficients(FieldElement a) const;
    /// Embedding of F_q into F_{q^m}.
    FieldElement embed(std::uint32_t base_value) const { return FieldElement{base_value}; }
    /// True if `a` lies in the subfield F_q (constant polynomials).
    bool in_base_field(FieldElement a) const noexcept { return a.value < q_; }

    FieldElement add(FieldElement a, FieldElement b) const;
    FieldElement sub(FieldElement a, FieldElement b) const;
    FieldElement neg(FieldElement a) const;
    FieldElement mul(FieldElement a, FieldElement b) const;
    /// Throws DomainError for a == 0.
    FieldElement inv(FieldElement a) const;
    FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
    FieldElement pow(FieldElement a, std::uint64_t e) const;
    /// Scalar multiplication by an element of F_q.
    FieldElement scale(std::uint32_t lambda, FieldElement a) const;

    /// sigma^i(a) = a^{q^{i mod m}}; negative i gives inverse powers.
    FieldElement frobenius(FieldElement a, long long i) const;

    /// a^c = sigma(c) * a * c^{-1}. Throws DomainError for c == 0.
    FieldElement conjugate(FieldElement a, FieldElement c) const;

    /// (gamma^0, ..., gamma^{count-1}); throws ParameterError if count > q - 1.
    std::vector<FieldElement> conjugacy_representatives(std::size_t count) const;

    /// Multiplicative order of a nonzero element.
    std::uint64_t multiplicative_order(FieldElement a) const;

    template <class Rng>
    FieldElement random(Rng& rng) const {
        std::uniform_int_distribution<std::uint64_t> dist(0, order_ - 1);
        return FieldElement{dist(rng)};
    }
    template <class Rng>
    FieldElement random_nonzero(Rng& rng) const {
        std::uniform_int_distribution<std::uint64_t> dist(1, order_ - 1);
        return FieldElement{dist(rng)};
    }

private:
    using Digits = std::array<std::uint32_t, kMaxDegree>;

    void to_digits(FieldElement a, Digits& d) const noexcept;
    FieldElement from_digits(const Digits& d) const noexcept;
    FieldElement add_generic(FieldElement a, FieldElement b) const noexcept;
    FieldElement mul_generic(FieldElement a, FieldElement b) const noexcept;
    FieldElement inv_euclid(FieldElement a) const;
    FieldElement pow_generic(FieldElement a, std::uint64_t e) const noexcept;
    bool is_primitive_generic(FieldElement a) const;
    bool modulus_is_irreducible() const;
    void build_tables();

    std::uint64_t q_;
    unsigned m_;
    std::uint64_t order_;
    BaseField base_;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint64_t> q_powers_;
    std::vector<std::uint64_t> group_order_factors_;
    FieldElement gamma_;

    std::vector<std::uint32_t> exp_;        // exp_[i] = gamma^i, length 2(order-1)
    std::vector<std::uint32_t> log_;        // log_[a] for a != 0
    std::vector<std::uint16_t> add_table_;  // order <= kMaxAddTableOrder
    std::vector<std::uint64_t> frob_exponent_;  // q^i mod (order - 1)
};

using FieldPtr = std::shared_ptr<const Field>;

}  // namespace flrs
