#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "flrs/errors.hpp"
#include "flrs/gf.hpp"
#include "oracle.hpp"

using flrs::Field;
using flrs::FieldElement;
using flrs::FieldParams;

namespace {

FieldElement E(std::uint64_t v) { return FieldElement{v}; }

Field make(std::uint64_t q, unsigned m, bool tables = true) {
    FieldParams p;
    p.q = q;
    p.m = m;
    p.use_tables = tables;
    return Field(p);
}

void check_axioms(const Field& F, FieldElement a, FieldElement b, FieldElement c) {
    CHECK(F.add(a, b) == F.add(b, a));
    CHECK(F.mul(a, b) == F.mul(b, a));
    CHECK(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
    CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
    CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
    CHECK(F.add(a, F.neg(a)) == F.zero());
    CHECK(F.sub(F.add(a, b), b) == a);
    CHECK(F.mul(a, F.one()) == a);
    if (!F.is_zero(a)) CHECK(F.mul(a, F.inv(a)) == F.one());
}

}  // namespace

TEST_CASE("F4 hand-computed products") {
    const Field F = make(2, 2);
    REQUIRE(F.modulus() == std::vector<std::uint32_t>{1, 1, 1});
    const FieldElement z = E(2);
    CHECK(F.mul(z, z) == E(3));         // z^2 = z + 1
    CHECK(F.frobenius(z, 1) == E(3));   // sigma(z) = z^2
    CHECK(F.add(z, F.zero()) == z);
}

TEST_CASE("exhaustive axioms on F4 and F9") {
    for (auto [q, m] : {std::pair{2u, 2u}, std::pair{3u, 2u}}) {
        const Field F = make(q, m);
        for (std::uint64_t a = 0; a < F.order(); ++a)
            for (std::uint64_t b = 0; b < F.order(); ++b)
                for (std::uint64_t c = 0; c < F.order(); ++c) check_axioms(F, E(a), E(b), E(c));
    }
}

TEST_CASE("inverse axiom exhaustive on F9") {
    const Field F = make(3, 2);
    for (std::uint64_t a = 1; a < F.order(); ++a) CHECK(F.mul(E(a), F.inv(E(a))) == F.one());
    CHECK_THROWS_AS(F.inv(F.zero()), flrs::DomainError);
}

TEST_CASE("random axioms agree with schoolbook arithmetic") {
    std::mt19937_64 rng(11);
    const std::vector<std::pair<unsigned, unsigned>> shapes{{3, 6}, {2, 8}, {5, 3}, {2, 20}, {7, 5}, {2, 40}};
    for (auto [q, m] : shapes) {
        const Field F = make(q, m);
        const oracle::NaiveField K(F);
        for (int i = 0; i < 1000; ++i) {
            const auto a = F.random(rng), b = F.random(rng), c = F.random(rng);
            check_axioms(F, a, b, c);
            CHECK(F.mul(a, b).value == K.mul(a.value, b.value));
            CHECK(F.add(a, b).value == K.add(a.value, b.value));
        }
    }
}

TEST_CASE("table and generic paths agree") {
    std::mt19937_64 rng(12);
    for (auto [q, m] : {std::pair{3u, 6u}, std::pair{2u, 10u}, std::pair{5u, 4u}}) {
        const Field T = make(q, m, true);
        const Field G = make(q, m, false);
        REQUIRE(T.has_tables());
        REQUIRE_FALSE(G.has_tables());
        REQUIRE(T.modulus() == G.modulus());
        REQUIRE(T.gamma() == G.gamma());
        for (int i = 0; i < 1000; ++i) {
            const auto a = T.random(rng), b = T.random(rng);
            CHECK(T.mul(a, b) == G.mul(a, b));
            CHECK(T.add(a, b) == G.add(a, b));
            CHECK(T.pow(a, 1000 + i) == G.pow(a, 1000 + i));
            const long long s = static_cast<long long>(i % 13) - 6;
            CHECK(T.frobenius(a, s) == G.frobenius(a, s));
            if (!T.is_zero(a)) CHECK(T.inv(a) == G.inv(a));
        }
    }
}

TEST_CASE("Frobenius automorphism") {
    std::mt19937_64 rng(13);
    for (auto [q, m] : {std::pair{3u, 6u}, std::pair{2u, 9u}, std::pair{4u, 3u}, std::pair{2u, 33u}}) {
        const Field F = make(q, m);
        CHECK(F.frobenius(F.zero(), 3) == F.zero());
        for (int i = 0; i < 1000; ++i) {
            const auto a = F.random(rng), b = F.random(rng);
            const auto lambda = static_cast<std::uint32_t>(rng() % q);
            const long long r = static_cast<long long>(rng() % 20) - 10;
            const long long s = static_cast<long long>(rng() % 20) - 10;
            CHECK(F.frobenius(F.add(a, b), 1) == F.add(F.frobenius(a, 1), F.frobenius(b, 1)));
            CHECK(F.frobenius(F.mul(a, b), r) == F.mul(F.frobenius(a, r), F.frobenius(b, r)));
            CHECK(F.frobenius(F.scale(lambda, a), 1) == F.scale(lambda, F.frobenius(a, 1)));
            CHECK(F.frobenius(F.frobenius(a, r), s) == F.frobenius(a, r + s));
            CHECK(F.frobenius(a, static_cast<long long>(m)) == a);
            CHECK(F.frobenius(F.frobenius(a, -1), 1) == a);
            CHECK(F.frobenius(a, 1) == F.pow(a, q));
        }
    }
}

TEST_CASE("primitive element") {
    for (auto [q, m] : {std::pair{2u, 2u}, std::pair{3u, 2u}, std::pair{3u, 6u}, std::pair{2u, 8u}}) {
        const Field F = make(q, m);
        const oracle::NaiveField K(F);
        std::set<std::uint64_t> powers;
        std::uint64_t x = 1;
        for (std::uint64_t i = 0; i + 1 < F.order(); ++i) {
            powers.insert(x);
            x = K.mul(x, F.gamma().value);
        }
        CHECK(powers.size() == F.order() - 1);
        CHECK(F.multiplicative_order(F.gamma()) == F.order() - 1);
    }
    const Field big = make(2, 61);
    CHECK(big.multiplicative_order(big.gamma()) == big.order() - 1);
}

TEST_CASE("conjugacy representatives") {
    const Field F = make(3, 2);
    CHECK(F.conjugacy_representatives(1) == std::vector<FieldElement>{F.one()});
    CHECK(F.conjugacy_representatives(2) == std::vector<FieldElement>{F.one(), F.gamma()});
    CHECK_THROWS_AS(F.conjugacy_representatives(3), flrs::ParameterError);

    std::mt19937_64 rng(14);
    for (int i = 0; i < 100; ++i) {
        const auto a = F.random(rng), c = F.random_nonzero(rng);
        CHECK(F.conjugate(a, F.one()) == a);
        CHECK(F.conjugate(F.zero(), c) == F.zero());
    }
}

TEST_CASE("conjugacy classes of F9 by exhaustive orbits") {
    const Field F = make(3, 2);
    std::vector<std::set<std::uint64_t>> classes;
    for (std::uint64_t a = 1; a < F.order(); ++a) {
        std::set<std::uint64_t> orbit;
        for (std::uint64_t c = 1; c < F.order(); ++c) orbit.insert(F.conjugate(E(a), E(c)).value);
        bool seen = false;
        for (const auto& cl : classes) seen = seen || cl == orbit;
        if (!seen) classes.push_back(orbit);
    }
    CHECK(classes.size() == F.q() - 1);
    for (const auto& cl : classes) CHECK(cl.size() == (F.order() - 1) / (F.q() - 1));
    const auto reps = F.conjugacy_representatives(2);
    bool same = false;
    for (const auto& cl : classes) same = same || (cl.count(reps[0].value) && cl.count(reps[1].value));
    CHECK_FALSE(same);
}

TEST_CASE("explicit moduli and gamma") {
    FieldParams p;
    p.q = 2;
    p.m = 2;
    p.modulus = {1, 1, 1};
    CHECK(Field(p).mul(E(2), E(2)) == E(3));
    p.modulus = {1, 0, 1};  // (z + 1)^2
    CHECK_THROWS_AS(Field{p}, flrs::ParameterError);
    p.modulus = {1, 1};
    CHECK_THROWS_AS(Field{p}, flrs::ParameterError);

    FieldParams g;
    g.q = 3;
    g.m = 2;
    g.gamma = 1;
    CHECK_THROWS_AS(Field{g}, flrs::ParameterError);
    g.gamma = 100;
    CHECK_THROWS_AS(Field{g}, flrs::ParameterError);

    // z^4 + z + 1 is primitive over F_2; user-selected gamma = z^2 is not.
    FieldParams r;
    r.q = 2;
    r.m = 4;
    r.modulus = {1, 1, 0, 0, 1};
    const Field F(r);
    CHECK(F.gamma() == E(2));
    CHECK(F.mul(E(8), E(2)) == E(3));
}

TEST_CASE("invalid field sizes") {
    CHECK_THROWS_AS(make(6, 2), flrs::ParameterError);
    CHECK_THROWS_AS(make(1, 2), flrs::ParameterError);
    CHECK_THROWS_AS(make(3, 0), flrs::ParameterError);
    CHECK_THROWS_AS(make(3, 50), flrs::ParameterError);
    const Field F = make(3, 2);
    CHECK_THROWS_AS(F.element(9), flrs::ParameterError);
    CHECK(F.element(8) == E(8));
}

TEST_CASE("coefficient round trip") {
    const Field F = make(5, 4);
    std::mt19937_64 rng(15);
    for (int i = 0; i < 1000; ++i) {
        const auto a = F.random(rng);
        const auto c = F.coefficients(a);
        CHECK(c.size() == 4);
        CHECK(F.from_coefficients(c) == a);
    }
    CHECK(F.in_base_field(E(4)));
    CHECK_FALSE(F.in_base_field(E(5)));
}

TEST_CASE("prime-power base field") {
    const flrs::BaseField B(4);
    CHECK(B.characteristic() == 2);
    for (std::uint32_t a = 0; a < 4; ++a)
        for (std::uint32_t b = 0; b < 4; ++b) {
            CHECK(B.add(a, b) == B.add(b, a));
            CHECK(B.mul(a, b) == B.mul(b, a));
            for (std::uint32_t c = 0; c < 4; ++c) CHECK(B.mul(a, B.add(b, c)) == B.add(B.mul(a, b), B.mul(a, c)));
            if (a) CHECK(B.mul(a, B.inv(a)) == 1);
        }
    const Field F = make(4, 3);
    std::mt19937_64 rng(16);
    for (int i = 0; i < 1000; ++i) check_axioms(F, F.random(rng), F.random(rng), F.random(rng));
    CHECK(F.multiplicative_order(F.gamma()) == 63);
}
