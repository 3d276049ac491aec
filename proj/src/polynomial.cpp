#include "schfin/polynomial.hpp"

#include "schfin/errors.hpp"

#include <algorithm>
#include <map>

namespace schfin {

int Monomial::degree() const {
    int d = 0;
    for (int e : exps) d += e;
    return d;
}

bool Monomial::is_one() const {
    for (int e : exps)
        if (e) return false;
    return true;
}

bool Monomial::divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps.size(); ++i)
        if (exps[i] > other.exps[i]) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial m = *this;
    for (std::size_t i = 0; i < exps.size(); ++i) m.exps[i] += other.exps[i];
    return m;
}

Monomial Monomial::divided_by(const Monomial& other) const {
    Monomial m = *this;
    for (std::size_t i = 0; i < exps.size(); ++i) m.exps[i] -= other.exps[i];
    return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (std::size_t i = 0; i < m.exps.size(); ++i) m.exps[i] = std::max(a.exps[i], b.exps[i]);
    return m;
}

int degrevlex_cmp(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    // Equal degree: the one whose last nonzero difference is positive is SMALLER.
    for (int i = static_cast<int>(a.exps.size()) - 1; i >= 0; --i) {
        int d = a.exps[i] - b.exps[i];
        if (d != 0) return d > 0 ? -1 : 1;
    }
    return 0;
}

namespace {

int lex_cmp(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.exps.size(); ++i) {
        int d = a.exps[i] - b.exps[i];
        if (d != 0) return d < 0 ? -1 : 1;
    }
    return 0;
}

int degrevlex_cmp_masked(const Monomial& a, const Monomial& b, const std::vector<bool>& mask,
                         bool in_mask) {
    int da = 0, db = 0;
    for (std::size_t i = 0; i < a.exps.size(); ++i)
        if (mask[i] == in_mask) {
            da += a.exps[i];
            db += b.exps[i];
        }
    if (da != db) return da < db ? -1 : 1;
    for (int i = static_cast<int>(a.exps.size()) - 1; i >= 0; --i) {
        if (mask[static_cast<std::size_t>(i)] != in_mask) continue;
        int d = a.exps[i] - b.exps[i];
        if (d != 0) return d > 0 ? -1 : 1;
    }
    return 0;
}

} // namespace

int TermOrder::cmp(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
    case Kind::Degrevlex:
        return degrevlex_cmp(a, b);
    case Kind::Lex:
        return lex_cmp(a, b);
    case Kind::Block: {
        int c = degrevlex_cmp_masked(a, b, dominant_, true);
        if (c != 0) return c;
        return degrevlex_cmp_masked(a, b, dominant_, false);
    }
    }
    return 0;
}

bool TermOrder::less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }

Polynomial::Polynomial(int nvars, std::vector<Term> terms) : nvars_(nvars), terms_(std::move(terms)) {
    for (const Term& t : terms_)
        if (t.mono.nvars() != nvars_) fail(Errc::internal, "term width mismatch");
    normalize();
}

void Polynomial::normalize() {
    std::map<std::vector<int>, Rational> acc;
    for (Term& t : terms_) acc[t.mono.exps] += t.coeff;
    terms_.clear();
    for (auto& [e, c] : acc)
        if (c != 0) terms_.push_back(Term{Monomial{e}, c});
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return degrevlex_cmp(a.mono, b.mono) > 0; });
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
    Polynomial p(nvars);
    if (c != 0) p.terms_.push_back(Term{Monomial::one(nvars), c});
    return p;
}

Polynomial Polynomial::variable(int nvars, int index, int power) {
    Polynomial p(nvars);
    Monomial m = Monomial::one(nvars);
    m.exps[static_cast<std::size_t>(index)] = power;
    p.terms_.push_back(Term{std::move(m), Rational(1)});
    return p;
}

Polynomial Polynomial::from_term(Monomial m, Rational c) {
    Polynomial p(m.nvars());
    if (c != 0) p.terms_.push_back(Term{std::move(m), std::move(c)});
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const Term& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

const Term& Polynomial::leading_term(const TermOrder& ord) const {
    if (terms_.empty()) fail(Errc::internal, "leading term of zero polynomial");
    const Term* best = &terms_[0];
    for (const Term& t : terms_)
        if (ord.less(best->mono, t.mono)) best = &t;
    return *best;
}

Rational Polynomial::constant_value() const {
    for (const Term& t : terms_)
        if (t.mono.is_one()) return t.coeff;
    return Rational(0);
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
    std::vector<Term> all = terms_;
    all.insert(all.end(), g.terms_.begin(), g.terms_.end());
    return Polynomial(nvars_, std::move(all));
}

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (Term& t : p.terms_) t.coeff = -t.coeff;
    return p;
}

Polynomial Polynomial::operator-(const Polynomial& g) const { return *this + (-g); }

Polynomial Polynomial::operator*(const Polynomial& g) const {
    std::vector<Term> prod;
    prod.reserve(terms_.size() * g.terms_.size());
    for (const Term& a : terms_)
        for (const Term& b : g.terms_) prod.push_back(Term{a.mono * b.mono, a.coeff * b.coeff});
    return Polynomial(nvars_, std::move(prod));
}

Polynomial Polynomial::operator*(const Rational& c) const {
    if (c == 0) return Polynomial(nvars_);
    Polynomial p = *this;
    for (Term& t : p.terms_) t.coeff *= c;
    return p;
}

Polynomial Polynomial::pow(int e) const {
    Polynomial acc = Polynomial::constant(nvars_, 1);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool Polynomial::operator==(const Polynomial& other) const {
    if (nvars_ != other.nvars_ || terms_.size() != other.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != other.terms_[i].mono || terms_[i].coeff != other.terms_[i].coeff)
            return false;
    return true;
}

bool Polynomial::supported_on(const std::vector<bool>& allowed) const {
    for (const Term& t : terms_)
        for (std::size_t i = 0; i < t.mono.exps.size(); ++i)
            if (t.mono.exps[i] != 0 && !allowed[i]) return false;
    return true;
}

Polynomial Polynomial::remap(int new_nvars, std::span<const int> new_index) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) {
        Monomial m = Monomial::one(new_nvars);
        for (std::size_t i = 0; i < t.mono.exps.size(); ++i) {
            if (t.mono.exps[i] == 0) continue;
            int slot = new_index[i];
            if (slot < 0 || slot >= new_nvars) fail(Errc::internal, "remap: bad variable slot");
            m.exps[static_cast<std::size_t>(slot)] += t.mono.exps[i];
        }
        out.push_back(Term{std::move(m), t.coeff});
    }
    return Polynomial(new_nvars, std::move(out));
}

std::string Polynomial::to_string(std::span<const std::string> vars) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const Term& t : terms_) {
        Rational c = t.coeff;
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
        bool has_vars = !t.mono.is_one();
        bool coeff_shown = (c != 1) || !has_vars;
        if (coeff_shown) out += rat_to_string(c);
        if (has_vars) {
            bool first_factor = !coeff_shown;
            for (std::size_t i = 0; i < t.mono.exps.size(); ++i) {
                if (t.mono.exps[i] == 0) continue;
                if (!first_factor) out += "*";
                first_factor = false;
                out += vars[i];
                if (t.mono.exps[i] != 1) out += "^" + std::to_string(t.mono.exps[i]);
            }
        }
    }
    return out;
}

Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images, int target_nvars) {
    if (images.size() != static_cast<std::size_t>(f.nvars()))
        fail(Errc::internal, "substitute: image count mismatch");
    // Memoized variable powers keep repeated exponents cheap.
    std::vector<std::vector<Polynomial>> powers(images.size());
    auto power_of = [&](std::size_t var, int e) -> const Polynomial& {
        auto& cache = powers[var];
        if (cache.empty()) cache.push_back(Polynomial::constant(target_nvars, 1));
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[var]);
        return cache[static_cast<std::size_t>(e)];
    };
    Polynomial acc(target_nvars);
    for (const Term& t : f.terms()) {
        Polynomial piece = Polynomial::constant(target_nvars, t.coeff);
        for (std::size_t i = 0; i < t.mono.exps.size(); ++i)
            if (t.mono.exps[i] != 0) piece = piece * power_of(i, t.mono.exps[i]);
        acc = acc + piece;
    }
    return acc;
}

} // namespace schfin
