#include "schfin/ratfunc.hpp"

#include "schfin/errors.hpp"

namespace schfin {

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly({c}); }

UniPoly UniPoly::t(int power) {
    std::vector<Rational> c(static_cast<std::size_t>(power) + 1, Rational(0));
    c.back() = 1;
    return UniPoly(std::move(c));
}

int UniPoly::order() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return static_cast<int>(i);
    return -1;
}

Rational UniPoly::at(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<std::size_t>(i)];
}

Rational UniPoly::leading() const {
    if (coeffs_.empty()) return Rational(0);
    return coeffs_.back();
}

UniPoly UniPoly::operator+(const UniPoly& g) const {
    std::vector<Rational> c(std::max(coeffs_.size(), g.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < g.coeffs_.size(); ++i) c[i] += g.coeffs_[i];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-() const {
    UniPoly p = *this;
    for (Rational& c : p.coeffs_) c = -c;
    return p;
}

UniPoly UniPoly::operator-(const UniPoly& g) const { return *this + (-g); }

UniPoly UniPoly::operator*(const UniPoly& g) const {
    if (is_zero() || g.is_zero()) return UniPoly();
    std::vector<Rational> c(coeffs_.size() + g.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < g.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * g.coeffs_[j];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator*(const Rational& c) const {
    UniPoly p = *this;
    for (Rational& x : p.coeffs_) x *= c;
    p.trim();
    return p;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& f, const UniPoly& g) {
    if (g.is_zero()) fail(Errc::internal, "univariate division by zero");
    UniPoly r = f;
    std::vector<Rational> q(f.coeffs_.size(), Rational(0));
    while (!r.is_zero() && r.degree() >= g.degree()) {
        int shift = r.degree() - g.degree();
        Rational c = r.leading() / g.leading();
        q[static_cast<std::size_t>(shift)] = c;
        r = r - g * UniPoly::t(shift) * c;
    }
    return {UniPoly(std::move(q)), std::move(r)};
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * (Rational(1) / a.leading());
}

Rational UniPoly::evaluate(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        Rational c = coeffs_[i];
        if (c == 0) continue;
        if (first) {
            if (c < 0) {
                out += "-";
                c = -c;
            }
        } else {
            out += c < 0 ? " - " : " + ";
            if (c < 0) c = -c;
        }
        first = false;
        if (i == 0) {
            out += rat_to_string(c);
        } else {
            if (c != 1) out += rat_to_string(c) + "*";
            out += var;
            if (i != 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

void RationalFunction::normalize() {
    if (den_.is_zero()) fail(Errc::construction, "rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = UniPoly::constant(1);
        return;
    }
    UniPoly g = UniPoly::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = UniPoly::divmod(num_, g).first;
        den_ = UniPoly::divmod(den_, g).first;
    }
    Rational lead = den_.leading();
    num_ = num_ * (Rational(1) / lead);
    den_ = den_ * (Rational(1) / lead);
}

RationalFunction::RationalFunction(UniPoly num, UniPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    normalize();
}

RationalFunction RationalFunction::constant(const Rational& c) {
    return RationalFunction(UniPoly::constant(c), UniPoly::constant(1));
}

RationalFunction RationalFunction::t() {
    return RationalFunction(UniPoly::t(), UniPoly::constant(1));
}

RationalFunction RationalFunction::operator+(const RationalFunction& g) const {
    return RationalFunction(num_ * g.den_ + g.num_ * den_, den_ * g.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& g) const {
    return RationalFunction(num_ * g.den_ - g.num_ * den_, den_ * g.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& g) const {
    return RationalFunction(num_ * g.num_, den_ * g.den_);
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) fail(Errc::internal, "inverse of the zero rational function");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    RationalFunction acc = RationalFunction::constant(1);
    RationalFunction base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::optional<int> RationalFunction::valuation() const {
    if (is_zero()) return std::nullopt;
    return num_.order() - den_.order();
}

Rational RationalFunction::value_at_zero() const {
    auto v = valuation();
    if (!v) return Rational(0);
    if (*v < 0) fail(Errc::internal, "value at t=0 of a function with negative valuation");
    // den(0) could vanish even at valuation >= 0 only before cancellation;
    // the canonical form guarantees it does not.
    Rational d = den_.at(0);
    if (d == 0) fail(Errc::internal, "denominator vanishes at t=0 after normalization");
    return num_.at(0) / d;
}

std::string RationalFunction::to_string() const {
    if (den_ == UniPoly::constant(1)) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFunction evaluate(const Polynomial& f, std::span<const RationalFunction> images) {
    if (images.size() != static_cast<std::size_t>(f.nvars()))
        fail(Errc::internal, "evaluate: image count mismatch");
    std::vector<std::vector<RationalFunction>> powers(images.size());
    auto power_of = [&](std::size_t var, int e) -> const RationalFunction& {
        auto& cache = powers[var];
        if (cache.empty()) cache.push_back(RationalFunction::constant(1));
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[var]);
        return cache[static_cast<std::size_t>(e)];
    };
    RationalFunction acc = RationalFunction::constant(0);
    for (const Term& t : f.terms()) {
        RationalFunction piece = RationalFunction::constant(t.coeff);
        for (std::size_t i = 0; i < t.mono.exps.size(); ++i)
            if (t.mono.exps[i] != 0) piece = piece * power_of(i, t.mono.exps[i]);
        acc = acc + piece;
    }
    return acc;
}

} // namespace schfin
