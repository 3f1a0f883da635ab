#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "flrs/cli.hpp"
#include "flrs/errors.hpp"
#include "flrs/io.hpp"
#include "flrs/simulation.hpp"

using namespace flrs;
using io::json;

namespace {

const char* kExample = R"({"q":3,"m":6,"ell":2,"h":3,"N":4,"k":2})";

struct Result {
    int code;
    std::string out, err;
};

Result run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "flrs");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("flrs_test_" + name);
}

}  // namespace

TEST_CASE("parameter JSON round trip") {
    const auto p = io::params_from_json(json::parse(kExample));
    CHECK(p.F().q() == 3);
    CHECK(p.F().m() == 6);
    CHECK(p.ell == 2);
    CHECK(p.k == 2);
    const auto j = io::params_to_json(p);
    const auto p2 = io::params_from_json(j);
    CHECK(p2.F().modulus() == p.F().modulus());
    CHECK(p2.F().gamma() == p.F().gamma());
    CHECK(p2.a == p.a);

    CHECK_THROWS_AS(io::params_from_json(json::parse(R"({"q":3,"m":6})")), ParameterError);
    CHECK_THROWS_AS(io::params_from_json(json::parse(R"({"q":3,"m":6,"ell":3,"h":3,"N":3,"k":1})")),
                    ParameterError);
    CHECK_THROWS_AS(io::params_from_json(json::parse(R"({"q":-3,"m":6,"ell":1,"h":3,"N":3,"k":1})")),
                    ParameterError);
    CHECK_THROWS_AS(io::load_json("{not json"), ParameterError);
    CHECK_THROWS_AS(io::load_json("/nonexistent/file.json"), ParameterError);
}

TEST_CASE("word and message JSON round trip") {
    const auto p = io::params_from_json(json::parse(kExample));
    Rng rng(61);
    for (int i = 0; i < 100; ++i) {
        std::vector<FieldElement> c(p.k);
        for (auto& v : c) v = p.F().random(rng);
        const SkewPoly f(c);
        CHECK(io::message_from_json(p, io::message_to_json(p, f)) == f);
        const auto w = word_add(p.F(), encode(p, f), sample_error(p, 2, rng));
        CHECK(io::word_from_json(p, io::word_to_json(w)) == w);
    }
    CHECK(io::message_from_json(p, json::parse("[1, 2]")) == SkewPoly({FieldElement{1}, FieldElement{2}}));
    CHECK_THROWS_AS(io::message_from_json(p, json::parse("[1, 2, 3]")), ParameterError);
    CHECK_THROWS_AS(io::message_from_json(p, json::parse("[729]")), ParameterError);
    CHECK_THROWS_AS(io::word_from_json(p, json::parse(R"({"blocks":[[[1]]]})")), ParameterError);
}

TEST_CASE("report CSV round trip") {
    SimulationConfig c;
    c.params = io::params_from_json(json::parse(kExample));
    c.decoder = {2, 1, 4096};
    c.t = 2;
    c.trials = 200;
    c.seed = 7;
    const auto r = run_simulation(c);
    CHECK(r.trials == 200);
    CHECK(r.radius == Rational(13, 6));
    CHECK(r.heuristic_bound_exact == Rational(4, 729));
    std::stringstream ss;
    write_report_csv(r, ss);
    auto back = read_report_csv(ss);
    back.failure_log = r.failure_log;
    CHECK(back == r);
}

TEST_CASE("simulation is reproducible and independent of threads") {
    SimulationConfig c;
    c.params = io::params_from_json(json::parse(kExample));
    c.decoder = {2, 1, 4096};
    c.t = 2;
    c.trials = 300;
    c.seed = 9;
    auto a = run_simulation(c);
    c.threads = 3;
    auto b = run_simulation(c);
    a.wall_seconds = b.wall_seconds = 0;
    CHECK(a == b);

    c.t = 0;
    c.threads = 1;
    CHECK(run_simulation(c).failures == 0);
}

TEST_CASE("radius table") {
    const auto rows = radius_table(25, 21);
    REQUIRE(rows.size() == 21);
    CHECK(rows[0].tau_exact == Rational(25, 26));
    CHECK(rows[10].tau == doctest::Approx(0.34545454545454546).epsilon(1e-12));
    CHECK(rows[10].best_s == 4);
    CHECK(rows[18].tau == doctest::Approx(0.05).epsilon(1e-12));
    CHECK(rows[20].tau == 0.0);
    CHECK(rows[10].tau_lrs == 0.25);
    CHECK(rows[10].singleton == 0.5);
    // h = 1 reduces to half the Singleton bound.
    for (const auto& row : radius_table(1, 11)) CHECK(row.tau == doctest::Approx(row.tau_lrs));
    CHECK_THROWS_AS(radius_table(25, 1), ParameterError);
}

TEST_CASE("KL divergence") {
    CHECK(kl_divergence_bits(std::vector<std::uint64_t>(729, 5)) == doctest::Approx(0.0));
    std::vector<std::uint64_t> point(729, 0);
    point[3] = 1000;
    CHECK(kl_divergence_bits(point) == doctest::Approx(std::log2(729.0)));
    std::vector<std::uint64_t> half(4, 0);
    half[0] = half[1] = 10;
    CHECK(kl_divergence_bits(half) == doctest::Approx(1.0));
}

TEST_CASE("command line: encode and decode") {
    const auto enc = run_cli({"encode", "--params", kExample, "--message", "[5, 7]"});
    REQUIRE(enc.code == 0);
    const auto word = json::parse(enc.out);
    CHECK(word["blocks"].size() == 2);

    const auto zero = run_cli({"encode", "--params", kExample, "--message", "[]"});
    REQUIRE(zero.code == 0);
    for (const auto& b : json::parse(zero.out)["blocks"])
        for (const auto& row : b)
            for (const auto& v : row) CHECK(v == 0);

    const auto noisy = run_cli({"encode", "--params", kExample, "--message", "[5, 7]", "--t", "2", "--seed", "4"});
    REQUIRE(noisy.code == 0);
    const auto path = temp_file("received.json");
    std::ofstream(path) << noisy.out;
    const auto dec = run_cli({"decode", "--params", kExample, "--received", path.string(), "--s", "2"});
    REQUIRE(dec.code == 0);
    const auto outcome = json::parse(dec.out);
    CHECK(outcome["kind"] == "Unique");
    CHECK(outcome["messages"][0] == json::parse("[5, 7]"));
    CHECK(outcome["diagnostics"]["d_I"] == 2);

    const auto lst = run_cli({"decode", "--params", kExample, "--received", path.string(), "--s", "2", "--mode", "list"});
    REQUIRE(lst.code == 0);
    CHECK(json::parse(lst.out)["kind"] == "List");
    std::filesystem::remove(path);
}

TEST_CASE("command line: decoding failure is a domain result") {
    // Weight 4 exceeds every radius; verification rejects or the system fails.
    const auto noisy = run_cli({"encode", "--params", kExample, "--message", "[1, 2]", "--t", "4", "--seed", "1"});
    REQUIRE(noisy.code == 0);
    const auto dec = run_cli({"decode", "--params", kExample, "--received", noisy.out, "--s", "2"});
    CHECK(dec.code == 0);
    CHECK(json::parse(dec.out)["kind"] == "Failure");
}

TEST_CASE("command line: error exits") {
    CHECK(run_cli({}).code == 1);
    CHECK(run_cli({"bogus"}).code == 1);
    CHECK(run_cli({"encode", "--params", kExample}).code == 1);
    CHECK(run_cli({"encode", "--params", R"({"q":3,"m":6,"ell":3,"h":3,"N":3,"k":1})", "--message", "[1]"}).code == 1);
    CHECK(run_cli({"encode", "--params", kExample, "--message", "[1,2,3]"}).code == 1);
    CHECK(run_cli({"decode", "--params", kExample, "--received", "{}"}).code == 1);
    CHECK(run_cli({"decode", "--params", kExample, "--received", "{\"blocks\":[]}", "--s", "5"}).code == 1);
    CHECK(run_cli({"simulate", "--params", kExample, "--t", "99"}).code == 1);
    const auto r = run_cli({"decode", "--params", "{bad", "--received", "{}"});
    CHECK(r.code == 1);
    CHECK(r.err.find("json_syntax") != std::string::npos);
    CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("command line: simulate, radius-table and kl-track") {
    const auto csv = temp_file("report.csv");
    const auto sim = run_cli({"simulate", "--params", kExample, "--s", "2", "--t", "1", "--trials", "100", "--seed", "3",
                              "--out", csv.string()});
    REQUIRE(sim.code == 0);
    const auto j = json::parse(sim.out);
    CHECK(j["failures"] == 0);
    CHECK(j["radius"] == "13/6");
    std::ifstream in(csv);
    const auto report = read_report_csv(in);
    CHECK(report.trials == 100);
    std::filesystem::remove(csv);

    const auto rad = run_cli({"radius-table", "--h", "25", "--grid", "21"});
    REQUIRE(rad.code == 0);
    std::istringstream lines(rad.out);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "h,R,tau_flrs,best_s,tau_lrs,singleton,tau_exact");
    std::size_t n = 0;
    for (std::string line; std::getline(lines, line);) ++n;
    CHECK(n == 21);

    const auto kl = run_cli({"kl-track", "--params", kExample, "--s", "2", "--t", "2", "--trials", "50"});
    REQUIRE(kl.code == 0);
    CHECK(json::parse(kl.out)["samples"] == 100);
}
