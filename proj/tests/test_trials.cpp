#include <doctest.h>

#include "cayley/trials.hpp"

using namespace cayley;

TEST_CASE("strata samples honour their constraints") {
    TrialConfig cfg{3, 50, 12, false};
    for (Stratum s : all_strata()) {
        for (std::size_t i = 0; i < cfg.trials_per_stratum; ++i) {
            auto [c, d] = sample_pair(cfg, s, i);
            CAPTURE(stratum_name(s));
            switch (s) {
                case Stratum::generic: break;
                case Stratum::complementary_beta: CHECK(c.beta() + d.beta() == Rational(3)); break;
                case Stratum::same_beta_gamma:
                case Stratum::beta_3_2_same_gamma:
                case Stratum::beta_5_2_same_gamma:
                case Stratum::beta_7_3_same_gamma:
                    CHECK(c.beta() == d.beta());
                    CHECK(c.gamma() == d.gamma());
                    break;
                default: CHECK(c.beta() == d.beta()); break;
            }
            if (s == Stratum::beta_3_2) CHECK(c.beta() == Rational(3, 2));
            if (s == Stratum::beta_5_2) CHECK(c.beta() == Rational(5, 2));
            if (s == Stratum::beta_7_3_same_gamma) CHECK(c.beta() == Rational(7, 3));
            for (const Rational& x : {c.alpha(), c.beta(), c.gamma(), d.alpha(), d.gamma()}) {
                CHECK(abs(x.numerator()) < (1 << 12));
                CHECK(x.denominator() < (1 << 12));
            }
        }
    }
}

TEST_CASE("sampling is deterministic per seed") {
    TrialConfig a{9, 10, 16, false}, b{9, 10, 16, false}, c{10, 10, 16, false};
    CHECK(sample_pair(a, Stratum::generic, 4) == sample_pair(b, Stratum::generic, 4));
    CHECK(sample_pair(a, Stratum::generic, 4) != sample_pair(c, Stratum::generic, 4));
    CHECK(sample_pair(a, Stratum::generic, 4) != sample_pair(a, Stratum::generic, 5));
}

TEST_CASE("parallel runner matches the serial reference") {
    TrialConfig cfg{5, 30, 16, true};
    auto serial = run_trials_serial(cfg, all_strata());
    auto parallel = run_trials_parallel(cfg, all_strata());
    REQUIRE(serial.size() == all_strata().size() * cfg.trials_per_stratum);
    CHECK(serial == parallel);
}

TEST_CASE("trial summaries") {
    TrialConfig cfg{6, 40, 16, true};
    auto out = run_trials_parallel(cfg, all_strata());
    auto summary = summarize(out);
    REQUIRE(summary.size() == all_strata().size());
    for (const auto& s : summary) {
        CAPTURE(stratum_name(s.stratum));
        CHECK(s.trials == 40);
        CHECK(s.prediction_agree == s.trials);
        CHECK(s.dual_prediction_agree == s.trials);
        CHECK(s.jet_agree == s.trials);
        CHECK(s.dual_jet_agree == s.trials);
        CHECK(s.symmetric == s.trials);
        CHECK(s.rigidity_violations == 0);
        CHECK(s.joint_fourth_order == 0);
        CHECK(s.max_order <= 4);
    }
    CHECK(summary[0].max_order == 1);
}
