#include "flrs/simulation.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <iomanip>
#include <istream>
#include <limits>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "flrs/errors.hpp"

namespace flrs {

void validate(const SimulationConfig& config) {
    validate(config.params);
    validate(config.params, config.decoder);
    if (config.trials < 1) throw ParameterError("trials", "trials must be at least 1");
    if (config.t > max_error_weight(config.params)) {
        throw ParameterError("error_weight", "error weight t is infeasible for these parameters");
    }
    if (config.threads < 1) throw ParameterError("threads", "threads must be at least 1");
}

namespace {

constexpr std::uint64_t kProgressInterval = 10000;

SkewPoly random_message(const CodeParams& params, Rng& rng) {
    std::vector<FieldElement> coeffs(params.k);
    for (auto& c : coeffs) c = params.F().random(rng);
    return SkewPoly(std::move(coeffs));
}

// q^{m (s-1)}, saturating.
std::size_t worst_case_list_size(const Field& F, std::size_t s) {
    std::size_t v = 1;
    for (std::size_t i = 1; i < s; ++i) {
        if (v > std::numeric_limits<std::size_t>::max() / F.order()) return std::numeric_limits<std::size_t>::max();
        v *= F.order();
    }
    return v;
}

/// Runs body(begin, end) on `threads` contiguous shards and rethrows the first error.
template <class Body>
void run_sharded(std::uint64_t total, unsigned threads, Body body) {
    if (threads <= 1 || total < 2) {
        body(std::uint64_t{0}, total);
        return;
    }
    const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(threads, total));
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t begin = total * w / workers;
        const std::uint64_t end = total * (w + 1) / workers;
        pool.emplace_back([&, w, begin, end] {
            try {
                body(begin, end);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

class Progress {
public:
    Progress(std::ostream* out, std::uint64_t total, const char* label) : out_(out), total_(total), label_(label) {}

    void tick() {
        const std::uint64_t done = ++done_;
        if (out_ && done % kProgressInterval == 0) {
            std::lock_guard lock(mutex_);
            *out_ << label_ << ": " << done << " / " << total_ << '\n';
        }
    }

private:
    std::ostream* out_;
    std::uint64_t total_;
    const char* label_;
    std::atomic<std::uint64_t> done_{0};
    std::mutex mutex_;
};

}  // namespace

SimulationReport run_simulation(const SimulationConfig& config, std::ostream* progress) {
    validate(config);
    const auto start = std::chrono::steady_clock::now();
    const CodeParams& params = config.params;
    const Field& F = params.F();
    const DecoderConfig& dc = config.decoder;

    SimulationReport rep;
    rep.q = F.q();
    rep.m = F.m();
    rep.ell = params.ell;
    rep.h = params.h;
    rep.N = params.N;
    rep.k = params.k;
    rep.s = dc.s;
    rep.mu = dc.mu;
    rep.t = config.t;
    rep.D = degree_constraint(params, dc.s, dc.mu);
    rep.mode = to_string(config.mode);
    rep.seed = config.seed;
    rep.rng = kRngName;
    rep.trials = config.trials;
    const auto bound = failure_bound(params.k, F.q(), F.m(), dc.mu);
    rep.heuristic_bound_exact = bound.exact;
    rep.heuristic_bound = bound.value;
    rep.radius = config.mode == DecodeMode::Unique ? decoding_radius(params, dc.s, dc.mu)
                                                   : list_decoding_radius(params, dc.s);
    rep.within_radius = static_cast<long long>(config.t) <= max_correctable_errors(params, dc, config.mode);
    rep.d_I_lower_bound = interpolation_dimension_bound(params, dc, config.t);
    rep.min_d_I = std::numeric_limits<std::size_t>::max();

    const ErrorSampler sampler(params, config.t);
    const std::size_t list_limit = worst_case_list_size(F, dc.s);
    Progress ticker(progress, config.trials, "simulate");
    std::mutex merge_mutex;

    run_sharded(config.trials, config.threads, [&](std::uint64_t begin, std::uint64_t end) {
        SimulationReport local;
        local.min_d_I = std::numeric_limits<std::size_t>::max();
        for (std::uint64_t trial = begin; trial < end; ++trial) {
            Rng rng(trial_seed(config.seed, trial));
            const SkewPoly f = random_message(params, rng);
            const FoldedWord received = word_add(F, encode(params, f), sampler(rng));
            const DecodeOutcome out = decode(params, dc, received, config.mode);
            const auto& d = out.diagnostics;

            const std::string where = " (trial " + std::to_string(trial) + ")";
            if (static_cast<long long>(d.d_I) < rep.d_I_lower_bound || d.d_I < dc.mu) {
                throw InternalError("interpolation kernel dimension " + std::to_string(d.d_I) +
                                    " below its lower bound" + where);
            }
            if (d.d_RF > dc.s - 1) {
                throw InternalError("root-finding kernel dimension " + std::to_string(d.d_RF) + " exceeds s - 1" +
                                    where);
            }
            if (d.candidate_count > list_limit) throw InternalError("list exceeds q^{m(s-1)}" + where);
            if (rep.within_radius) {
                const bool found = std::find(out.messages.begin(), out.messages.end(), f) != out.messages.end();
                if (config.mode == DecodeMode::List && !found &&
                    !(out.kind == OutcomeKind::Failure && out.failure_reason == "list overflow")) {
                    throw InternalError("transmitted message missing from the list" + where);
                }
                if (config.mode == DecodeMode::Unique && out.kind == OutcomeKind::Unique && !found) {
                    throw InternalError("wrong unique decoding result" + where);
                }
            }

            local.min_d_I = std::min(local.min_d_I, d.d_I);
            local.max_d_I = std::max(local.max_d_I, d.d_I);
            local.max_d_RF = std::max(local.max_d_RF, d.d_RF);
            local.max_list_size = std::max(local.max_list_size, d.candidate_count);
            if (out.kind == OutcomeKind::Failure) {
                ++local.failures;
                if (out.failure_reason == "rank-deficient") {
                    ++local.rank_deficient;
                } else if (out.failure_reason == "no verified candidate") {
                    ++local.verification_failures;
                } else {
                    ++local.other_failures;
                }
                local.failure_log.push_back({trial, out.failure_reason, d.d_I, d.rank_B, d.d_RF});
            }
            ticker.tick();
        }
        std::lock_guard lock(merge_mutex);
        rep.failures += local.failures;
        rep.rank_deficient += local.rank_deficient;
        rep.verification_failures += local.verification_failures;
        rep.other_failures += local.other_failures;
        rep.min_d_I = std::min(rep.min_d_I, local.min_d_I);
        rep.max_d_I = std::max(rep.max_d_I, local.max_d_I);
        rep.max_d_RF = std::max(rep.max_d_RF, local.max_d_RF);
        rep.max_list_size = std::max(rep.max_list_size, local.max_list_size);
        rep.failure_log.insert(rep.failure_log.end(), local.failure_log.begin(), local.failure_log.end());
    });

    std::sort(rep.failure_log.begin(), rep.failure_log.end(),
              [](const FailureRecord& a, const FailureRecord& b) { return a.trial < b.trial; });
    rep.observed_rate = static_cast<double>(rep.failures) / static_cast<double>(rep.trials);
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

// ---------------------------------------------------------------------------
// CSV

namespace {

const char* const kReportColumns[] = {
    "q", "m", "ell", "h", "N", "k", "s", "mu", "t", "D", "mode", "seed", "rng", "trials", "failures",
    "observed_rate", "heuristic_bound", "heuristic_bound_exact", "radius", "within_radius", "rank_deficient",
    "verification_failures", "other_failures", "d_I_lower_bound", "min_d_I", "max_d_I", "max_d_RF",
    "max_list_size", "wall_seconds"};

std::string fmt_double(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(line);
    while (std::getline(is, cur, ',')) out.push_back(cur);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

}  // namespace

void write_report_csv(const SimulationReport& r, std::ostream& out) {
    bool first = true;
    for (const char* c : kReportColumns) {
        out << (first ? "" : ",") << c;
        first = false;
    }
    out << '\n';
    out << r.q << ',' << r.m << ',' << r.ell << ',' << r.h << ',' << r.N << ',' << r.k << ',' << r.s << ','
        << r.mu << ',' << r.t << ',' << r.D << ',' << r.mode << ',' << r.seed << ',' << r.rng << ',' << r.trials
        << ',' << r.failures << ',' << fmt_double(r.observed_rate) << ',' << fmt_double(r.heuristic_bound) << ','
        << r.heuristic_bound_exact.str() << ',' << r.radius.str() << ',' << (r.within_radius ? 1 : 0) << ','
        << r.rank_deficient << ',' << r.verification_failures << ',' << r.other_failures << ','
        << r.d_I_lower_bound << ',' << r.min_d_I << ',' << r.max_d_I << ',' << r.max_d_RF << ','
        << r.max_list_size << ',' << fmt_double(r.wall_seconds) << '\n';
}

SimulationReport read_report_csv(std::istream& in) {
    std::string header, row;
    if (!std::getline(in, header) || !std::getline(in, row)) {
        throw ParameterError("csv_format", "report CSV needs a header and a data row");
    }
    const auto names = split_csv_line(header);
    const auto values = split_csv_line(row);
    if (names.size() != values.size()) throw ParameterError("csv_format", "report CSV column count mismatch");
    std::map<std::string, std::string> kv;
    for (std::size_t i = 0; i < names.size(); ++i) kv[names[i]] = values[i];
    auto get = [&](const char* key) -> const std::string& {
        auto it = kv.find(key);
        if (it == kv.end()) throw ParameterError("csv_format", std::string("report CSV lacks column ") + key);
        return it->second;
    };
    auto u64 = [&](const char* key) { return static_cast<std::uint64_t>(std::stoull(get(key))); };

    SimulationReport r;
    r.q = u64("q");
    r.m = static_cast<unsigned>(u64("m"));
    r.ell = u64("ell");
    r.h = u64("h");
    r.N = u64("N");
    r.k = u64("k");
    r.s = u64("s");
    r.mu = u64("mu");
    r.t = u64("t");
    r.D = u64("D");
    r.mode = get("mode");
    r.seed = u64("seed");
    r.rng = get("rng");
    r.trials = u64("trials");
    r.failures = u64("failures");
    r.observed_rate = std::stod(get("observed_rate"));
    r.heuristic_bound = std::stod(get("heuristic_bound"));
    r.heuristic_bound_exact = Rational(get("heuristic_bound_exact"));
    r.radius = Rational(get("radius"));
    r.within_radius = get("within_radius") == "1";
    r.rank_deficient = u64("rank_deficient");
    r.verification_failures = u64("verification_failures");
    r.other_failures = u64("other_failures");
    r.d_I_lower_bound = std::stoll(get("d_I_lower_bound"));
    r.min_d_I = u64("min_d_I");
    r.max_d_I = u64("max_d_I");
    r.max_d_RF = u64("max_d_RF");
    r.max_list_size = u64("max_list_size");
    r.wall_seconds = std::stod(get("wall_seconds"));
    return r;
}

void write_failure_log_csv(const SimulationReport& r, std::ostream& out) {
    out << "trial,reason,d_I,rank_B,d_RF\n";
    for (const auto& f : r.failure_log) {
        out << f.trial << ',' << f.reason << ',' << f.d_I << ',' << f.rank_B << ',' << f.d_RF << '\n';
    }
}

// ---------------------------------------------------------------------------
// KL divergence of the B_0 coefficient distribution

double kl_divergence_bits(const std::vector<std::uint64_t>& histogram) {
    std::uint64_t total = 0;
    for (auto c : histogram) total += c;
    if (total == 0) return 0.0;
    const double cells = static_cast<double>(histogram.size());
    double kl = 0.0;
    for (auto c : histogram) {
        if (c == 0) continue;
        const double p = static_cast<double>(c) / static_cast<double>(total);
        kl += p * std::log2(p * cells);
    }
    return kl;
}

KlReport run_kl_track(const SimulationConfig& config, std::ostream* progress) {
    validate(config);
    const CodeParams& params = config.params;
    const Field& F = params.F();
    const DecoderConfig& dc = config.decoder;
    if (F.order() > (std::uint64_t{1} << 24)) {
        throw ParameterError("field_size", "KL tracking histograms need q^m <= 2^24");
    }

    KlReport rep;
    rep.transmissions = config.trials;
    rep.histogram.assign(F.order(), 0);
    const ErrorSampler sampler(params, config.t);
    Progress ticker(progress, config.trials, "kl-track");
    std::mutex merge_mutex;

    run_sharded(config.trials, config.threads, [&](std::uint64_t begin, std::uint64_t end) {
        std::vector<std::uint64_t> local(F.order(), 0);
        for (std::uint64_t trial = begin; trial < end; ++trial) {
            Rng rng(trial_seed(config.seed, trial));
            const SkewPoly f = random_message(params, rng);
            const FoldedWord received = word_add(F, encode(params, f), sampler(rng));
            const auto pts = build_interpolation_points(params, dc.s, received);
            const auto basis = solve_interpolation(params, dc, pts);
            const std::size_t used = std::min(dc.mu, basis.dimension());
            for (std::size_t u = 0; u < used; ++u)
                for (const auto& qr : basis.polys[u].qr) ++local[qr[0].value];
            ticker.tick();
        }
        std::lock_guard lock(merge_mutex);
        for (std::size_t i = 0; i < local.size(); ++i) rep.histogram[i] += local[i];
    });

    for (auto c : rep.histogram) rep.samples += c;
    rep.sparse = rep.samples < rep.histogram.size();
    rep.kl_bits = kl_divergence_bits(rep.histogram);
    return rep;
}

// ---------------------------------------------------------------------------
// Normalized decoding radius

RadiusRow normalized_radius(std::size_t h, const Rational& rate) {
    if (h < 1) throw ParameterError("h_positive", "folding parameter h must be at least 1");
    RadiusRow row;
    row.rate = rate;
    bool have = false;
    for (std::size_t s = 1; s <= h; ++s) {
        const auto hs = static_cast<long long>(h), ss = static_cast<long long>(s);
        const Rational v = Rational(ss, ss + 1) * (Rational(1) - rate * Rational(hs, hs - ss + 1));
        if (!have || v > row.tau_exact) {
            row.tau_exact = v;
            row.best_s = s;
            have = true;
        }
    }
    if (row.tau_exact < 0) row.tau_exact = 0;
    row.tau = row.tau_exact.convert_to<double>();
    row.tau_lrs = (Rational(1) - rate).convert_to<double>() / 2.0;
    row.singleton = (Rational(1) - rate).convert_to<double>();
    return row;
}

std::vector<RadiusRow> radius_table(std::size_t h, std::size_t grid) {
    if (grid < 2) throw ParameterError("grid", "grid must have at least 2 points");
    std::vector<RadiusRow> rows;
    for (std::size_t i = 0; i < grid; ++i) {
        rows.push_back(normalized_radius(h, Rational(static_cast<long long>(i), static_cast<long long>(grid - 1))));
    }
    return rows;
}

void write_radius_csv(const std::vector<RadiusRow>& rows, std::size_t h, std::ostream& out) {
    out << "h,R,tau_flrs,best_s,tau_lrs,singleton,tau_exact\n";
    for (const auto& r : rows) {
        out << h << ',' << fmt_double(r.rate.convert_to<double>()) << ',' << fmt_double(r.tau) << ',' << r.best_s
            << ',' << fmt_double(r.tau_lrs) << ',' << fmt_double(r.singleton) << ',' << r.tau_exact.str() << '\n';
    }
}

}  // namespace flrs
