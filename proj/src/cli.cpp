#include "flrs/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

#include "flrs/channel.hpp"
#include "flrs/errors.hpp"
#include "flrs/io.hpp"
#include "flrs/simulation.hpp"

namespace flrs::cli {

namespace {

using io::json;

// Writes to `path` when given, else to `fallback`.
void emit(const std::string& path, std::ostream& fallback, const std::function<void(std::ostream&)>& write) {
    if (path.empty()) {
        write(fallback);
        return;
    }
    std::ofstream file(path);
    if (!file) throw ParameterError("output_file", "cannot write '" + path + "'");
    write(file);
}

json report_to_json(const SimulationReport& r) {
    json log = json::array();
    for (const auto& f : r.failure_log) {
        log.push_back({{"trial", f.trial}, {"reason", f.reason}, {"d_I", f.d_I}, {"rank_B", f.rank_B}, {"d_RF", f.d_RF}});
    }
    return json{{"config",
                 {{"q", r.q}, {"m", r.m}, {"ell", r.ell}, {"h", r.h}, {"N", r.N}, {"k", r.k}, {"s", r.s},
                  {"mu", r.mu}, {"t", r.t}, {"D", r.D}, {"mode", r.mode}, {"seed", r.seed}, {"rng", r.rng}}},
                {"trials", r.trials},
                {"failures", r.failures},
                {"observed_rate", r.observed_rate},
                {"heuristic_bound", r.heuristic_bound},
                {"heuristic_bound_exact", r.heuristic_bound_exact.str()},
                {"radius", r.radius.str()},
                {"within_radius", r.within_radius},
                {"rank_deficient", r.rank_deficient},
                {"verification_failures", r.verification_failures},
                {"other_failures", r.other_failures},
                {"d_I_lower_bound", r.d_I_lower_bound},
                {"min_d_I", r.min_d_I},
                {"max_d_I", r.max_d_I},
                {"max_d_RF", r.max_d_RF},
                {"max_list_size", r.max_list_size},
                {"wall_seconds", r.wall_seconds},
                {"failure_log", std::move(log)}};
}

struct Options {
    std::string params, message, received, out, log, mode = "unique";
    std::size_t s = 1, mu = 1, list_cap = 4096, trials = 1, h = 25, grid = 21;
    std::optional<std::size_t> t;
    std::uint64_t seed = 0;
    unsigned threads = 1;
};

SimulationConfig simulation_config(const Options& o) {
    SimulationConfig c;
    c.params = io::params_from_json(io::load_json(o.params));
    c.decoder = {o.s, o.mu, o.list_cap};
    c.t = o.t.value_or(0);
    c.trials = o.trials;
    c.seed = o.seed;
    c.mode = parse_mode(o.mode);
    c.threads = o.threads;
    return c;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Folded linearized Reed-Solomon codes: encoding, interpolation decoding and simulation", "flrs"};
    app.require_subcommand(1);
    Options o;

    auto add_decoder_flags = [&](CLI::App* sub) {
        sub->add_option("--s", o.s, "interpolation parameter, 1 <= s <= h");
        sub->add_option("--mu", o.mu, "dimension threshold");
        sub->add_option("--mode", o.mode, "unique | list")->check(CLI::IsMember({"unique", "list"}));
        sub->add_option("--list-cap", o.list_cap, "maximum enumerated list size");
    };

    auto* enc = app.add_subcommand("encode", "encode a message; with --t, also add a random weight-t error");
    enc->add_option("--params", o.params, "code parameters (JSON file or inline JSON)")->required();
    enc->add_option("--message", o.message, "message coefficients (JSON file or inline JSON)")->required();
    enc->add_option("--t", o.t, "sum-rank weight of an added channel error");
    enc->add_option("--seed", o.seed, "channel seed");
    enc->add_option("--out", o.out, "output path (default: stdout)");

    auto* dec = app.add_subcommand("decode", "decode a received word");
    dec->add_option("--params", o.params, "code parameters (JSON file or inline JSON)")->required();
    dec->add_option("--received", o.received, "received word (JSON file or inline JSON)")->required();
    add_decoder_flags(dec);
    dec->add_option("--out", o.out, "output path (default: stdout)");

    auto* sim = app.add_subcommand("simulate", "Monte Carlo decoding-failure experiment");
    sim->add_option("--params", o.params, "code parameters (JSON file or inline JSON)")->required();
    add_decoder_flags(sim);
    sim->add_option("--t", o.t, "error weight")->required();
    sim->add_option("--trials", o.trials, "number of transmissions");
    sim->add_option("--seed", o.seed, "base seed; trial i uses seed XOR i");
    sim->add_option("--threads", o.threads, "worker threads");
    sim->add_option("--out", o.out, "report CSV path");
    sim->add_option("--log", o.log, "per-failure CSV path");

    auto* rad = app.add_subcommand("radius-table", "normalized decoding radius versus rate");
    rad->set_help_flag("--help", "Print this help message and exit");
    rad->add_option("--h", o.h, "folding parameter");
    rad->add_option("--grid", o.grid, "number of rate points in [0, 1]");
    rad->add_option("--out", o.out, "CSV path (default: stdout)");

    auto* kl = app.add_subcommand("kl-track", "KL divergence of root-finding coefficients from uniform");
    kl->add_option("--params", o.params, "code parameters (JSON file or inline JSON)")->required();
    add_decoder_flags(kl);
    kl->add_option("--t", o.t, "error weight")->required();
    kl->add_option("--trials", o.trials, "number of transmissions");
    kl->add_option("--seed", o.seed, "base seed");
    kl->add_option("--threads", o.threads, "worker threads");
    kl->add_option("--out", o.out, "histogram CSV path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        if (enc->parsed()) {
            const auto params = io::params_from_json(io::load_json(o.params));
            const auto f = io::message_from_json(params, io::load_json(o.message));
            FoldedWord word = encode(params, f);
            if (o.t) {
                const ChannelSpec spec{*o.t, o.seed};
                word = word_add(params.F(), word, sample_error(params, spec));
            }
            emit(o.out, out, [&](std::ostream& os) { os << io::word_to_json(word).dump() << '\n'; });
        } else if (dec->parsed()) {
            const auto params = io::params_from_json(io::load_json(o.params));
            const auto received = io::word_from_json(params, io::load_json(o.received));
            const auto mode = parse_mode(o.mode);
            const auto outcome = decode(params, {o.s, o.mu, o.list_cap}, received, mode);
            emit(o.out, out,
                 [&](std::ostream& os) { os << io::outcome_to_json(params, outcome, mode).dump() << '\n'; });
        } else if (sim->parsed()) {
            const auto config = simulation_config(o);
            const auto report = run_simulation(config, &err);
            out << report_to_json(report).dump() << '\n';
            if (!o.out.empty()) emit(o.out, out, [&](std::ostream& os) { write_report_csv(report, os); });
            if (!o.log.empty()) emit(o.log, out, [&](std::ostream& os) { write_failure_log_csv(report, os); });
        } else if (rad->parsed()) {
            const auto rows = radius_table(o.h, o.grid);
            emit(o.out, out, [&](std::ostream& os) { write_radius_csv(rows, o.h, os); });
        } else if (kl->parsed()) {
            const auto config = simulation_config(o);
            const auto report = run_kl_track(config, &err);
            if (report.sparse) err << "warning: fewer samples than histogram cells\n";
            out << json{{"transmissions", report.transmissions},
                        {"samples", report.samples},
                        {"kl_bits", report.kl_bits},
                        {"seed", config.seed},
                        {"rng", kRngName},
                        {"t", config.t},
                        {"s", config.decoder.s},
                        {"mu", config.decoder.mu}}
                       .dump()
                << '\n';
            if (!o.out.empty()) {
                emit(o.out, out, [&](std::ostream& os) {
                    os << "element,count\n";
                    for (std::size_t i = 0; i < report.histogram.size(); ++i) os << i << ',' << report.histogram[i] << '\n';
                });
            }
        }
    } catch (const InternalError& e) {
        err << "internal invariant violated: " << e.what() << '\n';
        return kInternalError;
    } catch (const ParameterError& e) {
        err << "error [" << e.constraint() << "]: " << e.what() << '\n';
        return kUsageError;
    } catch (const nlohmann::json::exception& e) {
        err << "error: malformed input: " << e.what() << '\n';
        return kUsageError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kSuccess;
}

}  // namespace flrs::cli
