#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "flrs/channel.hpp"
#include "flrs/decoder.hpp"
#include "flrs/errors.hpp"
#include "oracle.hpp"

using namespace flrs;

namespace {

FieldPtr field(std::uint64_t q, unsigned m) {
    FieldParams p;
    p.q = q;
    p.m = m;
    return Field::make(p);
}

// The 3-folded code of length 4 over F_{3^6} with two blocks.
CodeParams example_code() { return make_code_params(field(3, 6), 2, 3, 4, 2); }

SkewPoly random_message(const CodeParams& p, Rng& rng) {
    std::vector<FieldElement> c(p.k);
    for (auto& v : c) v = p.F().random(rng);
    return SkewPoly(std::move(c));
}

FoldedWord transmit(const CodeParams& p, const SkewPoly& f, std::size_t t, Rng& rng) {
    return word_add(p.F(), encode(p, f), sample_error(p, t, rng));
}

std::vector<std::uint64_t> raw(const std::vector<FieldElement>& v) {
    std::vector<std::uint64_t> out;
    for (auto x : v) out.push_back(x.value);
    return out;
}

bool contains(const std::vector<SkewPoly>& list, const SkewPoly& f) {
    for (const auto& g : list)
        if (g == f) return true;
    return false;
}

}  // namespace

TEST_CASE("degree constraint") {
    const auto p = example_code();
    CHECK(degree_constraint(p, 2, 1) == 4);
    CHECK(degree_constraint(p, 2, 2) == 4);
    for (std::size_t mu = 1; mu <= 5; ++mu)
        CHECK(degree_constraint(p, 3, mu) == (p.N + 3 * (p.k - 1) + mu + 3) / 4);
}

TEST_CASE("decoding radii") {
    const auto p = example_code();
    CHECK(decoding_radius(p, 2, 1) == Rational(13, 6));
    CHECK(decoding_radius(p, 2, 2) == Rational(2));
    CHECK(list_decoding_radius(p, 2) == Rational(7, 3));
    CHECK(max_correctable_errors(p, {2, 1, 4096}, DecodeMode::Unique) == 2);
    CHECK(max_correctable_errors(p, {2, 1, 4096}, DecodeMode::List) == 2);
    CHECK(max_correctable_errors(p, {1, 1, 4096}, DecodeMode::Unique) == 1);

    // Unfolded code, s = 1: list radius (N - k + 1) / 2.
    const auto u = make_code_params(field(3, 6), 2, 1, 6, 3);
    CHECK(list_decoding_radius(u, 1) == Rational(2));
    CHECK(decoding_radius(u, 1, 1) == Rational(3, 2));
}

TEST_CASE("failure bound") {
    const auto b1 = failure_bound(2, 3, 6, 1);
    CHECK(b1.exact == Rational(4, 729));
    CHECK(b1.value == doctest::Approx(5.49e-3).epsilon(1e-3));
    const auto b2 = failure_bound(2, 3, 6, 2);
    CHECK(b2.exact == Rational(8, 729 * 729));
    CHECK(b2.value == doctest::Approx(1.5e-5).epsilon(0.01));
    double prev = 1.0;
    for (std::size_t d = 1; d < 20; ++d) {
        const double v = failure_bound(2, 3, 6, d).value;
        CHECK(v < prev);
        prev = v;
    }
    CHECK_THROWS_AS(failure_bound(2, 3, 6, 0), ParameterError);
}

TEST_CASE("decoder parameter validation") {
    const auto p = example_code();
    CHECK_THROWS_AS(validate(p, DecoderConfig{0, 1, 10}), ParameterError);
    CHECK_THROWS_AS(validate(p, DecoderConfig{4, 1, 10}), ParameterError);
    CHECK_THROWS_AS(validate(p, DecoderConfig{2, 0, 10}), ParameterError);
    CHECK_THROWS_AS(validate(p, DecoderConfig{2, 1, 0}), ParameterError);
    // Rate too high for s = 3: D = ceil((4 + 3*7 + 1)/4) = 7 < k = 8.
    const auto high = make_code_params(field(3, 6), 2, 3, 4, 8);
    CHECK_THROWS_AS(validate(high, DecoderConfig{3, 1, 10}), ParameterError);
    CHECK_NOTHROW(validate(p, DecoderConfig{2, 1, 10}));
}

TEST_CASE("interpolation points") {
    const auto p = example_code();
    Rng rng(51);
    const auto r = transmit(p, random_message(p, rng), 2, rng);
    const auto pts = build_interpolation_points(p, 2, r);
    CHECK(pts.size() == 8);
    for (const auto& block : pts.blocks) {
        std::set<std::uint64_t> loc;
        for (const auto& pt : block) loc.insert(pt.locator.value);
        CHECK(loc.size() == block.size());
    }
    // First point of block 1, second column, offset 1: position 4.
    const auto& pt = pts.blocks[1][3];
    CHECK(pt.position == 4);
    CHECK(pt.locator == p.F().pow(p.F().gamma(), 4));
    CHECK(pt.values == std::vector<FieldElement>{r.blocks[1](1, 1), r.blocks[1](2, 1)});

    CHECK(build_interpolation_points(p, 3, r).size() == p.N);
    CHECK(build_interpolation_points(p, 1, r).size() == p.n());
}

TEST_CASE("interpolation polynomials vanish on all points") {
    const auto p = example_code();
    const Field& F = p.F();
    const oracle::NaiveField K(F);
    Rng rng(52);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t s = 1 + trial % 3;
        const std::size_t t = trial % 4;
        const auto r = transmit(p, random_message(p, rng), t, rng);
        const DecoderConfig cfg{s, 1, 4096};
        const auto pts = build_interpolation_points(p, s, r);
        const auto basis = solve_interpolation(p, cfg, pts);
        CHECK(basis.dimension() >= 1);
        for (const auto& Q : basis.polys)
            for (std::size_t i = 0; i < p.ell; ++i)
                for (const auto& pt : pts.blocks[i]) {
                    // Reference evaluation with schoolbook arithmetic.
                    std::uint64_t acc = oracle::op_eval(K, raw(Q.q0), pt.locator.value, p.a[i].value);
                    for (std::size_t u = 0; u < s; ++u)
                        acc = K.add(acc, oracle::op_eval(K, raw(Q.qr[u]), pt.values[u].value, p.a[i].value));
                    CHECK(acc == 0);
                    CHECK(Q.evaluate(F, pt, p.a[i]) == F.zero());
                }
    }
}

TEST_CASE("interpolation rank without errors") {
    const auto p = example_code();
    Rng rng(53);
    for (int trial = 0; trial < 100; ++trial) {
        const auto c = encode(p, random_message(p, rng));
        const DecoderConfig cfg{2, 1, 4096};
        const auto basis = solve_interpolation(p, cfg, build_interpolation_points(p, 2, c));
        CHECK(basis.rank == basis.D);
        CHECK(basis.dimension() == basis.D * 3 - 2 * (p.k - 1) - basis.D);
    }
}

TEST_CASE("kernel dimension lower bound") {
    const auto p = example_code();
    Rng rng(54);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t t = trial % 4;
        const std::size_t s = 1 + trial % 3;
        const DecoderConfig cfg{s, 1, 4096};
        const auto r = transmit(p, random_message(p, rng), t, rng);
        const auto basis = solve_interpolation(p, cfg, build_interpolation_points(p, s, r));
        const long long bound = interpolation_dimension_bound(p, cfg, t);
        CHECK(static_cast<long long>(basis.dimension()) >= bound);
        if (s == 2 && t == 2) CHECK(bound == 2);
    }
}

TEST_CASE("root-finding system structure") {
    const auto p = make_code_params(field(3, 4), 1, 2, 2, 1);
    const Field& F = p.F();
    InterpolationBasis basis;
    basis.D = 2;
    basis.k = 1;
    basis.s = 2;
    InterpolationPolynomial Q;
    Q.q0 = {FieldElement{5}, FieldElement{7}};
    Q.qr = {{FieldElement{11}, FieldElement{13}}, {FieldElement{17}, FieldElement{19}}};
    basis.polys.push_back(Q);
    const auto sys = build_root_finding(p, DecoderConfig{2, 1, 10}, basis);
    REQUIRE(sys.B.rows() == 2);
    REQUIRE(sys.B.cols() == 1);
    const FieldElement g = F.gamma();
    // a = 0: B_0(gamma) = q_{1,0} + q_{2,0} gamma.
    CHECK(sys.B(0, 0) == F.add(Q.qr[0][0], F.mul(Q.qr[1][0], g)));
    // a = 1: sigma^{-1}(B_1(sigma(gamma))).
    CHECK(sys.B(1, 0) == F.frobenius(F.add(Q.qr[0][1], F.mul(Q.qr[1][1], F.frobenius(g, 1))), -1));
    CHECK(sys.rhs[0] == F.neg(Q.q0[0]));
    CHECK(sys.rhs[1] == F.neg(F.frobenius(Q.q0[1], -1)));
}

TEST_CASE("transmitted message solves the root-finding system") {
    const auto p = example_code();
    const Field& F = p.F();
    Rng rng(55);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t t = trial % 3;
        const auto f = random_message(p, rng);
        const DecoderConfig cfg{2, 1, 4096};
        const auto basis = solve_interpolation(p, cfg, build_interpolation_points(p, 2, transmit(p, f, t, rng)));
        const auto sys = build_root_finding(p, cfg, basis);
        std::vector<FieldElement> fhat(p.k);
        for (std::size_t j = 0; j < p.k; ++j) fhat[j] = F.frobenius(f.coeff(j), -static_cast<long long>(j));
        CHECK(multiply(F, sys.B, std::span<const FieldElement>(fhat)) == sys.rhs);
    }
}

TEST_CASE("error-free round trip") {
    const auto p = example_code();
    Rng rng(56);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto f = random_message(p, rng);
        const DecoderConfig cfg{1 + static_cast<std::size_t>(trial % 3), 1, 4096};
        const auto out = decode(p, cfg, encode(p, f), DecodeMode::Unique);
        REQUIRE(out.kind == OutcomeKind::Unique);
        CHECK(out.messages.front() == f);
    }
}

TEST_CASE("unique decoding below half the minimum distance") {
    const auto p = example_code();
    Rng rng(57);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto f = random_message(p, rng);
        const auto out = decode(p, {2, 1, 4096}, transmit(p, f, trial % 2, rng), DecodeMode::Unique);
        REQUIRE(out.kind == OutcomeKind::Unique);
        CHECK(out.messages.front() == f);
    }
}

TEST_CASE("unique decoding at t = 2 is never wrong") {
    const auto p = example_code();
    Rng rng(58);
    std::size_t failures = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto f = random_message(p, rng);
        const auto out = decode(p, {2, 1, 4096}, transmit(p, f, 2, rng), DecodeMode::Unique);
        CHECK(out.diagnostics.d_RF <= 1);
        if (out.kind == OutcomeKind::Failure) {
            ++failures;
            continue;
        }
        REQUIRE(out.kind == OutcomeKind::Unique);
        CHECK(out.messages.front() == f);
    }
    CHECK(failures <= 20);
}

TEST_CASE("list decoding is complete within the radius") {
    struct Setup {
        CodeParams p;
        DecoderConfig cfg;
        std::size_t t;
    };
    const std::vector<Setup> setups{{example_code(), {2, 1, 4096}, 2},
                                    {example_code(), {3, 1, 1u << 20}, 2},
                                    {make_code_params(field(5, 4), 2, 2, 4, 1), {2, 1, 4096}, 2},
                                    {make_code_params(field(2, 8), 1, 4, 2, 2), {3, 1, 1u << 17}, 1}};
    Rng rng(59);
    for (const auto& su : setups) {
        REQUIRE(Rational(static_cast<long long>(su.t)) < list_decoding_radius(su.p, su.cfg.s));
        const std::size_t q = su.p.F().q();
        const unsigned m = su.p.F().m();
        double max_list = 1;
        for (std::size_t i = 0; i + 1 < su.cfg.s; ++i) max_list *= std::pow(static_cast<double>(q), m);
        for (int trial = 0; trial < 300; ++trial) {
            const auto f = random_message(su.p, rng);
            const auto out = decode(su.p, su.cfg, transmit(su.p, f, su.t, rng), DecodeMode::List);
            CHECK(out.diagnostics.d_RF <= su.cfg.s - 1);
            if (out.failure_reason == "list overflow") continue;
            REQUIRE(out.kind == OutcomeKind::List);
            CHECK(contains(out.messages, f));
            CHECK(static_cast<double>(out.diagnostics.candidate_count) <= max_list);
        }
    }
}

TEST_CASE("list cap overflow is reported") {
    // k = 2, s = 2, and a received word equal to zero: every message of
    // the interpolation solution space survives, so small caps overflow.
    const auto p = example_code();
    const auto sys_basis = solve_interpolation(p, {2, 1, 1}, build_interpolation_points(p, 2, zero_word(p)));
    const auto sys = build_root_finding(p, {2, 1, 1}, sys_basis);
    RootFindingSystem degenerate = sys;
    for (std::size_t r = 0; r < degenerate.B.rows(); ++r) {
        for (std::size_t c = 0; c < degenerate.B.cols(); ++c) degenerate.B(r, c) = FieldElement{};
        degenerate.rhs[r] = FieldElement{};
    }
    const auto out = solve_root_finding(p.F(), degenerate, DecodeMode::List, 1000);
    CHECK(out.kind == OutcomeKind::Failure);
    CHECK(out.failure_reason == "list overflow");
    const auto uniq = solve_root_finding(p.F(), degenerate, DecodeMode::Unique, 1000);
    CHECK(uniq.failure_reason == "rank-deficient");
}

TEST_CASE("mode names") {
    CHECK(parse_mode("unique") == DecodeMode::Unique);
    CHECK(parse_mode("list") == DecodeMode::List);
    CHECK_THROWS_AS(parse_mode("both"), ParameterError);
    CHECK(std::string(to_string(OutcomeKind::Failure)) == "Failure");
}
