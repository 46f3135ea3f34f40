#include "cayley/trials.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "cayley/jet.hpp"

namespace cayley {

namespace {

constexpr std::array kAll = {
    Stratum::generic,  Stratum::same_beta,           Stratum::complementary_beta, Stratum::same_beta_gamma,
    Stratum::beta_3_2, Stratum::beta_3_2_same_gamma, Stratum::beta_5_2,           Stratum::beta_5_2_same_gamma,
    Stratum::beta_7_3, Stratum::beta_7_3_same_gamma,
};

constexpr std::array kPrimal = {
    Stratum::generic,         Stratum::same_beta, Stratum::complementary_beta,
    Stratum::same_beta_gamma, Stratum::beta_3_2,  Stratum::beta_3_2_same_gamma,
};

constexpr std::array kDual = {
    Stratum::same_beta,
    Stratum::beta_5_2,
    Stratum::same_beta_gamma,
    Stratum::beta_7_3_same_gamma,
};

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Rational random_beta(std::mt19937_64& rng, unsigned bits) {
    for (;;) {
        Rational b = random_rational(rng, bits);
        if (!b.is_zero() && b != Rational(3)) return b;
    }
}

}  // namespace

std::string_view stratum_name(Stratum s) {
    switch (s) {
        case Stratum::generic: return "generic";
        case Stratum::same_beta: return "beta=beta_bar";
        case Stratum::complementary_beta: return "beta=3-beta_bar";
        case Stratum::same_beta_gamma: return "beta=beta_bar,gamma=gamma_bar";
        case Stratum::beta_3_2: return "beta=beta_bar=3/2";
        case Stratum::beta_3_2_same_gamma: return "beta=beta_bar=3/2,gamma=gamma_bar";
        case Stratum::beta_5_2: return "beta=beta_bar=5/2";
        case Stratum::beta_5_2_same_gamma: return "beta=beta_bar=5/2,gamma=gamma_bar";
        case Stratum::beta_7_3: return "beta=beta_bar=7/3";
        case Stratum::beta_7_3_same_gamma: return "beta=beta_bar=7/3,gamma=gamma_bar";
    }
    return "?";
}

std::span<const Stratum> all_strata() { return kAll; }
std::span<const Stratum> primal_strata() { return kPrimal; }
std::span<const Stratum> dual_strata() { return kDual; }

Rational random_rational(std::mt19937_64& rng, unsigned bits) {
    const long limit = (1L << std::min(bits, 62u)) - 1;
    std::uniform_int_distribution<long> num(-limit, limit);
    std::uniform_int_distribution<long> den(1, std::max(1L, limit));
    const long p = num(rng);
    const long q = den(rng);
    return Rational(p, q);
}

std::pair<CurveParams, CurveParams> sample_pair(const TrialConfig& cfg, Stratum stratum, std::size_t index) {
    const std::uint64_t key = (static_cast<std::uint64_t>(stratum) << 40) ^ static_cast<std::uint64_t>(index);
    std::mt19937_64 rng(splitmix64(cfg.seed ^ splitmix64(key)));
    const unsigned bits = cfg.bits;

    auto fixed_beta = [&]() -> std::optional<Rational> {
        switch (stratum) {
            case Stratum::beta_3_2:
            case Stratum::beta_3_2_same_gamma: return Rational(3, 2);
            case Stratum::beta_5_2:
            case Stratum::beta_5_2_same_gamma: return Rational(5, 2);
            case Stratum::beta_7_3:
            case Stratum::beta_7_3_same_gamma: return Rational(7, 3);
            default: return std::nullopt;
        }
    }();

    Rational beta = fixed_beta ? *fixed_beta : random_beta(rng, bits);
    Rational alpha = random_rational(rng, bits);
    Rational gamma = random_rational(rng, bits);
    Rational alpha_bar = random_rational(rng, bits);
    Rational gamma_bar = random_rational(rng, bits);
    Rational beta_bar = random_beta(rng, bits);

    switch (stratum) {
        case Stratum::generic: break;
        case Stratum::complementary_beta: beta_bar = Rational(3) - beta; break;
        case Stratum::same_beta_gamma:
        case Stratum::beta_3_2_same_gamma:
        case Stratum::beta_5_2_same_gamma:
        case Stratum::beta_7_3_same_gamma:
            gamma_bar = gamma;
            beta_bar = beta;
            break;
        default: beta_bar = beta; break;
    }
    return {CurveParams(alpha, beta, gamma), CurveParams(alpha_bar, beta_bar, gamma_bar)};
}

TrialOutcome run_trial(const TrialConfig& cfg, Stratum stratum, std::size_t index) {
    auto [c, d] = sample_pair(cfg, stratum, index);
    ContactOrder order = contact_order(c, d);
    ContactOrder dual = dual_contact_order(c, d);
    ContactOrder jet = cfg.with_jet ? jet_contact_order(c, d, Mode::primal) : order;
    ContactOrder jet_dual = cfg.with_jet ? jet_contact_order(c, d, Mode::dual) : dual;
    return TrialOutcome{stratum,
                        index,
                        c,
                        d,
                        order,
                        dual,
                        predicted_order(c, d, Mode::primal),
                        predicted_order(c, d, Mode::dual),
                        jet,
                        jet_dual,
                        contact_order(d, c),
                        dual_contact_order(d, c)};
}

std::vector<TrialOutcome> run_trials_serial(const TrialConfig& cfg, std::span<const Stratum> strata) {
    std::vector<TrialOutcome> out;
    out.reserve(strata.size() * cfg.trials_per_stratum);
    for (Stratum s : strata) {
        for (std::size_t i = 0; i < cfg.trials_per_stratum; ++i) out.push_back(run_trial(cfg, s, i));
    }
    return out;
}

std::vector<TrialOutcome> run_trials_parallel(const TrialConfig& cfg, std::span<const Stratum> strata) {
    const std::size_t per = cfg.trials_per_stratum;
    const auto total = static_cast<std::int64_t>(strata.size() * per);
    std::vector<std::optional<TrialOutcome>> slots(static_cast<std::size_t>(total));

#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t k = 0; k < total; ++k) {
        const auto uk = static_cast<std::size_t>(k);
        slots[uk] = run_trial(cfg, strata[uk / per], uk % per);
    }

    std::vector<TrialOutcome> out;
    out.reserve(slots.size());
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

std::vector<StratumSummary> summarize(std::span<const TrialOutcome> outcomes) {
    std::vector<StratumSummary> out;
    std::map<Stratum, std::size_t> slot;
    const auto four = ContactOrder::finite(4);
    for (const auto& t : outcomes) {
        auto [it, inserted] = slot.try_emplace(t.stratum, out.size());
        if (inserted) out.push_back(StratumSummary{t.stratum});
        StratumSummary& s = out[it->second];
        ++s.trials;
        s.prediction_agree += t.order == t.predicted;
        s.dual_prediction_agree += t.dual_order == t.predicted_dual;
        s.jet_agree += t.jet == t.order;
        s.dual_jet_agree += t.jet_dual == t.dual_order;
        s.symmetric += t.order == t.order_reversed && t.dual_order == t.dual_order_reversed;
        if (t.c == t.d) continue;
        s.rigidity_violations += t.order > four || t.dual_order > four;
        s.joint_fourth_order += t.order == four && t.dual_order == four;
        if (!t.order.is_identical()) s.max_order = std::max(s.max_order, t.order.order());
        if (!t.dual_order.is_identical()) s.max_dual_order = std::max(s.max_dual_order, t.dual_order.order());
    }
    return out;
}

bool operator==(const TrialOutcome& a, const TrialOutcome& b) {
    return a.stratum == b.stratum && a.index == b.index && a.c == b.c && a.d == b.d && a.order == b.order &&
           a.dual_order == b.dual_order && a.predicted == b.predicted && a.predicted_dual == b.predicted_dual &&
           a.jet == b.jet && a.jet_dual == b.jet_dual && a.order_reversed == b.order_reversed &&
           a.dual_order_reversed == b.dual_order_reversed;
}

}  // namespace cayley
