#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "flrs/channel.hpp"
#include "flrs/decoder.hpp"

namespace flrs {

/// Monte Carlo experiment: random message, random weight-t error, decode.
struct SimulationConfig {
    CodeParams params;
    DecoderConfig decoder;
    std::size_t t = 0;
    std::size_t trials = 1;
    std::uint64_t seed = 0;
    DecodeMode mode = DecodeMode::Unique;
    unsigned threads = 1;
};

void validate(const SimulationConfig& config);

/// Trial i draws from an Rng seeded with (seed XOR i), independent of sharding.
inline std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) { return seed ^ trial; }

struct FailureRecord {
    std::uint64_t trial = 0;
    std::string reason;
    std::size_t d_I = 0;
    std::size_t rank_B = 0;
    std::size_t d_RF = 0;

    friend bool operator==(const FailureRecord&, const FailureRecord&) = default;
};

struct SimulationReport {
    // Configuration echo.
    std::uint64_t q = 0;
    unsigned m = 0;
    std::size_t ell = 0, h = 0, N = 0, k = 0, s = 0, mu = 0, t = 0, D = 0;
    std::string mode;
    std::uint64_t seed = 0;
    std::string rng;

    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    double observed_rate = 0.0;
    Rational heuristic_bound_exact;  // failure_bound(k, q, m, mu)
    double heuristic_bound = 0.0;
    Rational radius;                 // radius of the chosen mode
    bool within_radius = false;

    std::uint64_t rank_deficient = 0;
    std::uint64_t verification_failures = 0;
    std::uint64_t other_failures = 0;
    long long d_I_lower_bound = 0;   // s (D - k + 1) - t (h - s + 1)
    std::size_t min_d_I = 0;
    std::size_t max_d_I = 0;
    std::size_t max_d_RF = 0;
    std::size_t max_list_size = 0;
    double wall_seconds = 0.0;

    std::vector<FailureRecord> failure_log;

    friend bool operator==(const SimulationReport&, const SimulationReport&) = default;
};

/**
 * Runs the experiment. Throws InternalError when a guaranteed property is
 * observed to fail: d_I below its lower bound, d_RF > s - 1, the transmitted
 * message missing from the list or a wrong unique result within the radius.
 */
SimulationReport run_simulation(const SimulationConfig& config, std::ostream* progress = nullptr);

/// CSV with a header row and a single data row. Doubles use 17 significant digits.
void write_report_csv(const SimulationReport& report, std::ostream& out);
SimulationReport read_report_csv(std::istream& in);
void write_failure_log_csv(const SimulationReport& report, std::ostream& out);

struct KlReport {
    std::uint64_t transmissions = 0;
    std::uint64_t samples = 0;
    std::vector<std::uint64_t> histogram;  // indexed by field element encoding
    double kl_bits = 0.0;
    bool sparse = false;                   // fewer samples than histogram cells
};

/// D_KL(chi || uniform) in bits: sum_x chi(x) log2(chi(x) |F|), with 0 log 0 = 0.
double kl_divergence_bits(const std::vector<std::uint64_t>& histogram);

/// Histograms the coefficients of B_0^{(u)}(x) for u <= mu over all transmissions.
KlReport run_kl_track(const SimulationConfig& config, std::ostream* progress = nullptr);

struct RadiusRow {
    Rational rate;       // R = k / n
    Rational tau_exact;  // max_s s/(s+1) (1 - R h / (h - s + 1)), clamped at 0
    std::size_t best_s = 1;
    double tau = 0.0;
    double tau_lrs = 0.0;    // (1 - R) / 2
    double singleton = 0.0;  // 1 - R
};

/// Normalized decoding radius for folding parameter h at rate R = k / n.
RadiusRow normalized_radius(std::size_t h, const Rational& rate);
/// `grid` equally spaced rates from 0 to 1.
std::vector<RadiusRow> radius_table(std::size_t h, std::size_t grid);
void write_radius_csv(const std::vector<RadiusRow>& rows, std::size_t h, std::ostream& out);

}  // namespace flrs
