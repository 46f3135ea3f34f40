#pragma once

// Randomized agreement trials: pairs of family members drawn from parameter
// strata, each checked by the h-coefficient method, the predicate tables and the
// jet oracle in both modes.
//
// Every trial derives its own generator from (seed, stratum, index), so the
// serial reference and the OpenMP kernel produce identical outcomes in the
// same order, independent of scheduling.

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "cayley/contact.hpp"

namespace cayley {

enum class Stratum {
    generic,
    same_beta,
    complementary_beta,  // beta_bar = 3 - beta
    same_beta_gamma,
    beta_3_2,
    beta_3_2_same_gamma,
    beta_5_2,
    beta_5_2_same_gamma,
    beta_7_3,
    beta_7_3_same_gamma,
};

std::string_view stratum_name(Stratum s);
std::span<const Stratum> all_strata();
std::span<const Stratum> primal_strata();
std::span<const Stratum> dual_strata();

struct TrialConfig {
    std::uint64_t seed = 1;
    std::size_t trials_per_stratum = 100;
    // Numerators and denominators are drawn below 2^bits.
    unsigned bits = 16;
    bool with_jet = true;
};

struct TrialOutcome {
    Stratum stratum;
    std::size_t index;
    CurveParams c;
    CurveParams d;
    ContactOrder order;
    ContactOrder dual_order;
    ContactOrder predicted;
    ContactOrder predicted_dual;
    // Equal to order / dual_order when the jet oracle is skipped.
    ContactOrder jet;
    ContactOrder jet_dual;
    ContactOrder order_reversed;
    ContactOrder dual_order_reversed;
};

struct StratumSummary {
    Stratum stratum;
    std::size_t trials = 0;
    std::size_t prediction_agree = 0;
    std::size_t dual_prediction_agree = 0;
    std::size_t jet_agree = 0;
    std::size_t dual_jet_agree = 0;
    std::size_t symmetric = 0;
    // Distinct pairs above order 4, and distinct pairs at order 4 in both modes.
    std::size_t rigidity_violations = 0;
    std::size_t joint_fourth_order = 0;
    int max_order = 0;
    int max_dual_order = 0;
};

// Deterministic random rational p/q with |p| < 2^bits and 0 < q < 2^bits.
Rational random_rational(std::mt19937_64& rng, unsigned bits);

// The pair drawn for trial `index` of `stratum`.
std::pair<CurveParams, CurveParams> sample_pair(const TrialConfig& cfg, Stratum stratum, std::size_t index);

TrialOutcome run_trial(const TrialConfig& cfg, Stratum stratum, std::size_t index);

// Serial reference implementation.
std::vector<TrialOutcome> run_trials_serial(const TrialConfig& cfg, std::span<const Stratum> strata);
// OpenMP kernel; same outcomes as run_trials_serial.
std::vector<TrialOutcome> run_trials_parallel(const TrialConfig& cfg, std::span<const Stratum> strata);

std::vector<StratumSummary> summarize(std::span<const TrialOutcome> outcomes);

bool operator==(const TrialOutcome& a, const TrialOutcome& b);

}  // namespace cayley
