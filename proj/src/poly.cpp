#include "cayley/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "cayley/errors.hpp"

namespace cayley {

namespace {

constexpr std::array<std::string_view, kVarCount> kNames = {
    "alpha", "beta", "gamma", "alpha_bar", "beta_bar", "gamma_bar", "u", "u0",
    "g00", "g10", "g11", "g20", "g21", "g22", "g30", "g31", "g32", "g33",
};

std::size_t idx(Var v) { return static_cast<std::size_t>(v); }

}  // namespace

std::string_view var_name(Var v) { return kNames[idx(v)]; }

std::optional<Var> var_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kVarCount; ++i) {
        if (kNames[i] == name) return static_cast<Var>(i);
    }
    return std::nullopt;
}

Var g_var(int i, int j) {
    if (i < 0 || i > 3 || j < 0 || j > i) throw Error("g_var: only lower-triangular entries are indeterminates");
    // g00, g10, g11, g20, ... laid out row by row.
    const int offset = i * (i + 1) / 2 + j;
    return static_cast<Var>(idx(Var::g00) + static_cast<std::size_t>(offset));
}

Poly::Poly(const Rational& constant) {
    if (!constant.is_zero()) terms_.emplace(Exponents{}, constant);
}

Poly Poly::var(Var v, unsigned power) {
    Exponents e{};
    e[idx(v)] = static_cast<std::uint8_t>(power);
    Poly p;
    p.terms_.emplace(e, Rational(1));
    return p;
}

Poly Poly::term(const Exponents& exponents, const Rational& coeff) {
    Poly p;
    if (!coeff.is_zero()) p.terms_.emplace(exponents, coeff);
    return p;
}

Poly Poly::monomial(const Rational& coeff, std::initializer_list<std::pair<Var, unsigned>> powers) {
    Exponents e{};
    for (auto [v, k] : powers) e[idx(v)] = static_cast<std::uint8_t>(e[idx(v)] + k);
    Poly p;
    if (!coeff.is_zero()) p.terms_.emplace(e, coeff);
    return p;
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
}

Rational Poly::constant_value() const {
    if (!is_constant()) throw Error("polynomial is not constant: " + to_string());
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

unsigned Poly::degree_in(Var v) const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max<unsigned>(d, e[idx(v)]);
    return d;
}

unsigned Poly::total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
        unsigned s = 0;
        for (auto k : e) s += k;
        d = std::max(d, s);
    }
    return d;
}

void Poly::add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly& Poly::operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e;
            for (std::size_t i = 0; i < kVarCount; ++i) e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

Poly operator-(const Poly& a) {
    Poly out = a;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest exponent vectors first reads more naturally.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        const bool constant = e == Exponents{};
        Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        bool wrote = false;
        if (constant || mag != Rational(1)) {
            os << mag;
            wrote = true;
        }
        for (std::size_t i = 0; i < kVarCount; ++i) {
            if (e[i] == 0) continue;
            if (wrote) os << "*";
            os << kNames[i];
            if (e[i] > 1) os << "^" << static_cast<int>(e[i]);
            wrote = true;
        }
    }
    return os.str();
}

Poly pow(const Poly& base, unsigned exponent) {
    Poly result(1);
    for (unsigned i = 0; i < exponent; ++i) result *= base;
    return result;
}

Poly evaluate(const Poly& p, const Bindings& bindings) {
    Poly out;
    for (const auto& [e, c] : p.terms()) {
        Rational coeff = c;
        Exponents rest = e;
        for (const auto& [v, value] : bindings) {
            auto& k = rest[idx(v)];
            if (k == 0) continue;
            coeff *= pow(value, k);
            k = 0;
        }
        out += Poly::term(rest, coeff);
    }
    return out;
}

Rational evaluate_rational(const Poly& p, const Bindings& bindings) {
    Poly r = evaluate(p, bindings);
    if (!r.is_constant()) throw Error("evaluate_rational: unbound variables remain in " + r.to_string());
    return r.constant_value();
}

Poly substitute(const Poly& p, Var v, const Poly& replacement) {
    const unsigned degree = p.degree_in(v);
    std::vector<Poly> powers{Poly(1)};
    for (unsigned k = 1; k <= degree; ++k) powers.push_back(powers.back() * replacement);

    Poly out;
    for (const auto& [e, c] : p.terms()) {
        Exponents rest = e;
        const unsigned k = rest[idx(v)];
        rest[idx(v)] = 0;
        out += Poly::term(rest, c) * powers[k];
    }
    return out;
}

Poly substitute(const Poly& p, const std::vector<std::pair<Var, Poly>>& replacements) {
    Poly out = p;
    for (const auto& [v, r] : replacements) out = substitute(out, v, r);
    return out;
}

std::vector<Poly> coeffs_in(const Poly& p, Var v) {
    if (p.is_zero()) return {};
    std::vector<Poly> out(p.degree_in(v) + 1);
    for (const auto& [e, c] : p.terms()) {
        Exponents rest = e;
        const unsigned k = rest[idx(v)];
        rest[idx(v)] = 0;
        out[k] += Poly::term(rest, c);
    }
    return out;
}

Poly derivative(const Poly& p, Var v) {
    Poly out;
    for (const auto& [e, c] : p.terms()) {
        const unsigned k = e[idx(v)];
        if (k == 0) continue;
        Exponents rest = e;
        rest[idx(v)] = static_cast<std::uint8_t>(k - 1);
        out += Poly::term(rest, c * Rational(static_cast<long>(k)));
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

}  // namespace cayley
