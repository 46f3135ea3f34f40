// cayley: contact queries, verification, curvature, Lambda, Sigma and figure export.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "cayley/contact.hpp"
#include "cayley/errors.hpp"
#include "cayley/figure.hpp"
#include "cayley/jet.hpp"
#include "cayley/sigma.hpp"
#include "cayley/trials.hpp"
#include "cayley/verify.hpp"

using nlohmann::json;
using namespace cayley;

namespace {

json order_json(const ContactOrder& k) {
    if (k.is_identical()) return "identical";
    return k.order();
}

json params_json(const CurveParams& c) {
    return json::array({c.alpha().to_string(), c.beta().to_string(), c.gamma().to_string()});
}

// Versioned document with "schema" first.
std::string versioned(const json& j) {
    nlohmann::ordered_json out;
    out["schema"] = 1;
    for (const auto& [key, value] : j.items()) {
        if (key != "schema") out[key] = nlohmann::ordered_json::parse(value.dump());
    }
    return out.dump(2);
}

void emit(const json& j) { std::cout << versioned(j) << '\n'; }

int cmd_contact(const std::string& a, const std::string& b, bool dual_only) {
    const CurveParams c = CurveParams::parse(a);
    const CurveParams d = CurveParams::parse(b);
    const ContactOrder dual = dual_contact_order(c, d);
    const ContactOrder jet_dual = jet_contact_order(c, d, Mode::dual);
    const ContactOrder pred_dual = predicted_order(c, d, Mode::dual);
    json j{{"c", params_json(c)}, {"d", params_json(d)}};
    if (dual_only) {
        j["dual_order"] = order_json(dual);
        j["predicted_dual_order"] = order_json(pred_dual);
        j["jet_dual_order"] = order_json(jet_dual);
        j["oracles_agree"] = dual == jet_dual && dual == pred_dual;
    } else {
        const ContactOrder order = contact_order(c, d);
        const ContactOrder jet = jet_contact_order(c, d, Mode::primal);
        const ContactOrder pred = predicted_order(c, d, Mode::primal);
        j["order"] = order_json(order);
        j["dual_order"] = order_json(dual);
        j["predicted_order"] = order_json(pred);
        j["predicted_dual_order"] = order_json(pred_dual);
        j["jet_order"] = order_json(jet);
        j["jet_dual_order"] = order_json(jet_dual);
        j["oracles_agree"] = order == jet && order == pred && dual == jet_dual && dual == pred_dual;
    }
    emit(j);
    return 0;
}

int cmd_verify(std::uint64_t seed, std::size_t trials, unsigned bits) {
    const Report report = full_symbolic_report();
    bool ok = all_pass(report);

    json strata = json::array();
    if (trials > 0) {
        TrialConfig cfg{seed, trials, bits, true};
        const auto outcomes = run_trials_parallel(cfg, all_strata());
        for (const auto& s : summarize(outcomes)) {
            const bool pass = s.prediction_agree == s.trials && s.dual_prediction_agree == s.trials &&
                              s.jet_agree == s.trials && s.dual_jet_agree == s.trials && s.symmetric == s.trials &&
                              s.rigidity_violations == 0 && s.joint_fourth_order == 0;
            ok = ok && pass;
            strata.push_back({{"stratum", stratum_name(s.stratum)},
                              {"trials", s.trials},
                              {"prediction_agree", s.prediction_agree},
                              {"dual_prediction_agree", s.dual_prediction_agree},
                              {"oracle_agree", s.jet_agree},
                              {"dual_oracle_agree", s.dual_jet_agree},
                              {"symmetric", s.symmetric},
                              {"rigidity_violations", s.rigidity_violations},
                              {"joint_fourth_order", s.joint_fourth_order},
                              {"max_order", s.max_order},
                              {"max_dual_order", s.max_dual_order},
                              {"pass", pass}});
        }
    }
    emit({{"seed", seed},
          {"trials_per_stratum", trials},
          {"bits", bits},
          {"identities", report},
          {"strata", strata},
          {"pass", ok}});
    return ok ? 0 : 1;
}

int cmd_curvature(const std::string& beta_text, const std::string& other_text) {
    const Rational beta = Rational::parse(beta_text);
    json j{{"beta", beta.to_string()}, {"curvature", isotropic_curvature(beta).to_string()}};
    if (!other_text.empty()) {
        const Rational other = Rational::parse(other_text);
        const bool equal = isotropic_curvature(beta) == isotropic_curvature(other);
        j["beta_bar"] = other.to_string();
        j["curvature_bar"] = isotropic_curvature(other).to_string();
        j["equal"] = equal;
        j["second_order_contact"] = beta == other || beta == Rational(3) - other;
    }
    emit(j);
    return 0;
}

int cmd_lambda(const std::string& xi_text) {
    const Rational xi = Rational::parse(xi_text);
    const auto value = lambda_involution(xi);
    emit({{"xi", xi.to_string()}, {"lambda", value ? value->to_string() : "∞"}});
    return 0;
}

int cmd_sigma(const std::string& beta_text, const std::string& alpha_text, const std::string& u_text) {
    const Rational beta = Rational::parse(beta_text);
    const Rational alpha = Rational::parse(alpha_text);
    json j{{"alpha", alpha.to_string()}, {"beta", beta.to_string()}};
    const SigmaClass cls = sigma_classify(beta);
    if (const auto* img = std::get_if<CayleySurfaceImage>(&cls)) {
        j["image"] = "cayley-surface";
        j["beta_prime"] = img->beta_prime.to_string();
        j["alpha_prime"] = img->alpha_prime(alpha).to_string();
    } else {
        j["image"] = "hyperbolic-paraboloid";
    }
    if (!u_text.empty()) {
        const Rational u = Rational::parse(u_text);
        const HPlane<Rational> plane = sigma_plane(alpha, beta, u);
        json coords = json::array();
        for (const auto& y : plane.coords) coords.push_back(y.to_string());
        j["u"] = u.to_string();
        j["plane"] = coords;
        j["on_dual_cayley"] = dual_cayley_membership(plane);
    }
    emit(j);
    return 0;
}

int cmd_figure(int id, const std::string& chart, std::size_t samples, const std::string& out, bool as_float) {
    std::optional<Chart> ch;
    if (!chart.empty()) ch = parse_chart(chart);
    const FigureData fig = build_figure(id, ch, samples);
    const std::string base = out.empty() ? "figure" + std::to_string(id) : out;
    const std::string csv_path = base + ".csv";
    const std::string json_path = base + ".json";
    std::ofstream csv(csv_path);
    std::ofstream manifest(json_path);
    if (!csv || !manifest) throw Error("cannot write " + base + ".{csv,json}");
    csv << figure_csv(fig, as_float);
    manifest << versioned(figure_manifest(fig, csv_path, as_float)) << '\n';
    if (!csv || !manifest) throw Error("write failed for " + base);
    std::size_t total = 0;
    for (const auto& r : fig.records) total += r.samples.size();
    emit({{"figure", id}, {"csv", csv_path}, {"manifest", json_path}, {"records", fig.records.size()}, {"rows", total}});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cubic parabolas on the Cayley surface: contact orders and verification"};
    app.require_subcommand(1);

    std::string a, b;
    auto* contact = app.add_subcommand("contact", "Order of contact and dual contact of two curves");
    contact->add_option("c", a, "alpha,beta,gamma")->required();
    contact->add_option("d", b, "alpha,beta,gamma")->required();

    auto* dual = app.add_subcommand("dual-contact", "Order of dual contact of two curves");
    dual->add_option("c", a, "alpha,beta,gamma")->required();
    dual->add_option("d", b, "alpha,beta,gamma")->required();

    std::uint64_t seed = 1;
    std::size_t trials = 100;
    unsigned bits = 16;
    auto* verify = app.add_subcommand("verify", "Symbolic identities plus randomized oracle agreement");
    verify->add_option("--seed", seed, "Random seed");
    verify->add_option("--trials", trials, "Trials per stratum (0: symbolic only)");
    verify->add_option("--bits", bits, "Bit bound of random numerators and denominators")->check(CLI::Range(1, 62));

    std::string beta, beta_bar;
    auto* curvature = app.add_subcommand("curvature", "Isotropic curvature of c(*,beta,*)");
    curvature->add_option("beta", beta)->required();
    curvature->add_option("beta_bar", beta_bar, "Compare with a second beta");

    std::string xi;
    auto* lambda = app.add_subcommand("lambda", "The involution (3 xi - 8) / (xi - 3)");
    lambda->add_option("xi", xi)->required();

    std::string alpha = "0", u;
    auto* sigma = app.add_subcommand("sigma", "Image of the osculating-plane map for fixed beta");
    sigma->add_option("beta", beta)->required();
    sigma->add_option("--alpha", alpha, "Curve parameter alpha");
    sigma->add_option("--u", u, "Curve parameter u: also print the plane");

    int figure_id = 1;
    std::string chart, out;
    std::size_t samples = 25;
    bool as_float = false;
    auto* figure = app.add_subcommand("figure", "Export point data for figure 1..4");
    figure->add_option("id", figure_id)->required()->check(CLI::Range(1, 4));
    figure->add_option("--chart", chart, "x0, x3 or omega");
    figure->add_option("--samples", samples, "Samples per parameter direction")->check(CLI::Range(2, 100000));
    figure->add_option("--out", out, "Output path without extension");
    figure->add_flag("--float", as_float, "Write floating-point values");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*contact) return cmd_contact(a, b, false);
        if (*dual) return cmd_contact(a, b, true);
        if (*verify) return cmd_verify(seed, trials, bits);
        if (*curvature) return cmd_curvature(beta, beta_bar);
        if (*lambda) return cmd_lambda(xi);
        if (*sigma) return cmd_sigma(beta, alpha, u);
        if (*figure) return cmd_figure(figure_id, chart, samples, out, as_float);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
