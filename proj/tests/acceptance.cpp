// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

#include "cayley/contact.hpp"
#include "cayley/jet.hpp"
#include "cayley/sigma.hpp"
#include "cayley/trials.hpp"
#include "cayley/verify.hpp"

using namespace cayley;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double limit_seconds, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= limit_seconds;
    const bool pass = o.pass && in_time;
    failures += !pass;
    std::printf("%s  %2d  %-34s %7.3fs (limit %gs)  %s%s\n", pass ? "PASS" : "FAIL", id, name, secs, limit_seconds,
                o.detail.c_str(), in_time ? "" : "  [over time limit]");
    std::fflush(stdout);
}

const IdentityCheck* find(const Report& r, const std::string& name, const std::string& subst = "") {
    for (const auto& c : r) {
        if (c.identity_name == name && (subst.empty() || c.substitution == subst)) return &c;
    }
    throw std::runtime_error("no identity named " + name);
}

std::string count(std::size_t ok, std::size_t total) { return std::to_string(ok) + "/" + std::to_string(total); }

constexpr std::uint64_t kSeed = 20240601;

}  // namespace

int main() {
    std::vector<TrialOutcome> bulk;  // criteria 3, 4, 7
    std::vector<TrialOutcome> jets;  // criteria 5, 7

    criterion(1, "symbolic h-identities", 10, [] {
        std::size_t factored = 0, ok = 0;
        for (Mode m : {Mode::primal, Mode::dual}) {
            for (const auto& c : symbolic_verify(m)) {
                if (c.identity_name.rfind("h", 0) != 0 || c.identity_name.find("vanishes") != std::string::npos) {
                    continue;
                }
                ++factored;
                ok += c.pass;
            }
        }
        return Outcome{factored == 12 && ok == 12, count(ok, factored) + " factorizations"};
    });

    criterion(2, "closed h-forms for symbolic G", 1, [] {
        Report r = verify_h_closed_forms();
        std::size_t ok = 0;
        for (const auto& c : r) ok += c.pass;
        return Outcome{all_pass(r) && r.size() == 8, count(ok, r.size()) + " checks (g30 absent through h_n4)"};
    });

    criterion(3, "predicted orders, primal", 120, [&] {
        TrialConfig cfg{kSeed, 1000, 16, false};
        bulk = run_trials_parallel(cfg, all_strata());
        std::size_t agree = 0, total = 0, complementary_bad = 0;
        std::set<Stratum> primal(primal_strata().begin(), primal_strata().end());
        for (const auto& t : bulk) {
            if (!primal.count(t.stratum)) continue;
            ++total;
            agree += t.order == t.predicted;
            if (t.stratum == Stratum::complementary_beta && t.c.beta() != Rational(3, 2)) {
                complementary_bad += t.order != ContactOrder::finite(2);
            }
        }
        return Outcome{total >= 6000 && agree == total && complementary_bad == 0,
                       count(agree, total) + " pairs over 6 strata; complementary-beta off order 2: " +
                           std::to_string(complementary_bad)};
    });

    criterion(4, "predicted orders, dual", 120, [&] {
        if (bulk.empty()) return Outcome{false, "no trials"};
        std::size_t agree = 0, total = 0, five_halves_fourth = 0;
        std::set<Stratum> dual(dual_strata().begin(), dual_strata().end());
        for (const auto& t : bulk) {
            const bool five_halves = t.stratum == Stratum::beta_5_2 || t.stratum == Stratum::beta_5_2_same_gamma;
            if (five_halves && t.c != t.d) five_halves_fourth += t.dual_order >= ContactOrder::finite(4);
            if (!dual.count(t.stratum)) continue;
            ++total;
            agree += t.dual_order == t.predicted_dual;
        }
        return Outcome{total >= 4000 && agree == total && five_halves_fourth == 0,
                       count(agree, total) + " pairs over 4 strata; 5/2 pairs at dual order 4: " +
                           std::to_string(five_halves_fourth)};
    });

    criterion(5, "cross-oracle (jet vs h-method)", 120, [&] {
        TrialConfig cfg{kSeed + 1, 200, 16, true};
        jets = run_trials_parallel(cfg, all_strata());
        std::size_t agree = 0;
        for (const auto& t : jets) agree += t.jet == t.order && t.jet_dual == t.dual_order;
        return Outcome{jets.size() >= 200 && agree == jets.size(),
                       count(agree, jets.size()) + " pairs agree in both modes"};
    });

    criterion(6, "figure 3 pair and figure 4 family", 1, [] {
        const bool fig3 = contact_order(CurveParams(0, Rational(1, 10), 0),
                                        CurveParams(1, Rational(29, 10), Rational(1, 10))) == ContactOrder::finite(2);
        std::size_t pairs = 0, ok = 0;
        for (long a = -3; a <= 3; ++a)
            for (long b = a + 1; b <= 3; ++b) {
                ++pairs;
                ok += contact_order(CurveParams(a, Rational(3, 2), 0), CurveParams(b, Rational(3, 2), 0)) ==
                      ContactOrder::finite(4);
            }
        return Outcome{fig3 && pairs == 21 && ok == 21,
                       std::string("figure 3 order 2: ") + (fig3 ? "yes" : "no") + "; figure 4 " + count(ok, pairs) +
                           " pairs at order 4"};
    });

    criterion(7, "rigidity", 1, [&] {
        std::size_t distinct = 0, above = 0, joint = 0;
        const auto four = ContactOrder::finite(4);
        for (const auto* set : {&bulk, &jets}) {
            for (const auto& t : *set) {
                if (t.c == t.d) continue;
                ++distinct;
                above += t.order > four || t.dual_order > four;
                joint += t.order == four && t.dual_order == four;
            }
        }
        return Outcome{distinct > 0 && above == 0 && joint == 0,
                       std::to_string(distinct) + " distinct pairs; above 4: " + std::to_string(above) +
                           "; order 4 in both modes: " + std::to_string(joint)};
    });

    criterion(8, "isotropic curvature", 5, [] {
        const bool value = isotropic_curvature(Rational(3, 2)) == Rational(9, 8);
        const bool identity = find(verify_family_identities(), "curvature_difference_factorization")->pass;
        TrialConfig cfg{kSeed + 2, 334, 16, false};
        std::size_t total = 0, ok = 0;
        for (Stratum s : {Stratum::generic, Stratum::same_beta, Stratum::complementary_beta}) {
            for (std::size_t i = 0; i < cfg.trials_per_stratum; ++i) {
                auto [c, d] = sample_pair(cfg, s, i);
                const bool equal = isotropic_curvature(c.beta()) == isotropic_curvature(d.beta());
                const bool second = predicted_order(c, d, Mode::primal) >= ContactOrder::finite(2);
                ++total;
                ok += equal == second;
            }
        }
        return Outcome{value && identity && total >= 1000 && ok == total,
                       std::string("kappa(3/2)=9/8: ") + (value ? "yes" : "no") + "; identity: " +
                           (identity ? "yes" : "no") + "; predicate match " + count(ok, total)};
    });

    criterion(9, "sigma suite", 10, [] {
        Report r = verify_sigma_identity();
        std::mt19937_64 rng(kSeed + 3);
        std::size_t planes_ok = 0, lambda_ok = 0;
        for (int i = 0; i < 100; ++i) {
            const Rational a = random_rational(rng, 16), u = random_rational(rng, 16);
            const HPlane<Rational> y = sigma_plane(a, 2, u);
            planes_ok += dual_cayley_membership(y) && y == tangent_plane_F(phi_map(CurveParams(a, 2, 0), 1, u));
        }
        for (int i = 0; i < 100;) {
            const Rational x = random_rational(rng, 16);
            if (x == Rational(3)) continue;
            ++i;
            const auto y = lambda_involution(x);
            lambda_ok += y && lambda_involution(*y) == x;
        }
        const bool values = lambda_involution(Rational(7, 3)) == Rational(3, 2) &&
                            lambda_involution(Rational(8, 3)) == Rational(0) && !lambda_involution(3);
        const bool fixed = find(r, "lambda_fixed_points_2_and_4")->pass && lambda_involution(2) == Rational(2) &&
                           lambda_involution(4) == Rational(4);
        const bool symbolic = find(r, "sigma_row_equals_D_beta_image")->pass &&
                              find(r, "sigma_beta_8_3_on_ruled_quadric")->pass &&
                              find(r, "null_polarity_beta_4_alpha_independent")->pass &&
                              find(r, "lambda_is_involution")->pass;
        return Outcome{all_pass(r) && symbolic && values && fixed && planes_ok == 100 && lambda_ok == 100,
                       "symbolic " + std::string(all_pass(r) ? "ok" : "failed") + "; beta=2 planes " +
                           count(planes_ok, 100) + "; Lambda o Lambda " + count(lambda_ok, 100)};
    });

    criterion(10, "homothety", 1, [] {
        Report r = verify_family_identities();
        const bool identity = find(r, "homothety_intertwines_beta_and_3_minus_beta")->pass;
        const bool unit = homothety_B(Rational(3, 2)) == Mat4<Rational>::identity();
        return Outcome{identity && unit, std::string("intertwining: ") + (identity ? "yes" : "no") +
                                             "; B_{3/2} = I: " + (unit ? "yes" : "no")};
    });

    criterion(11, "membership", 10, [] {
        std::mt19937_64 rng(kSeed + 4);
        std::size_t ok = 0, total = 0;
        while (total < 1000) {
            Rational b = random_rational(rng, 16);
            if (b.is_zero() || b == Rational(3)) continue;
            CurveParams c(random_rational(rng, 16), b, random_rational(rng, 16));
            Rational u0 = random_rational(rng, 16), u1 = random_rational(rng, 16);
            if (u0.is_zero() && u1.is_zero()) continue;
            ++total;
            HPoint<Rational> x = phi_map(c, u0, u1);
            ok += on_surface(x) && on_cylinder(c, x);
        }
        Report r = verify_family_identities();
        const bool quads = find(r, "Q1_vanishes_on_c020")->pass && find(r, "Q2_vanishes_on_c020")->pass;
        return Outcome{ok == total && quads,
                       count(ok, total) + " samples on both surfaces; Q1, Q2 vanish: " + (quads ? "yes" : "no")};
    });

    std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
