#include "schfin/groebner.hpp"

#include "schfin/errors.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace schfin {

Ideal::Ideal(int n, std::vector<Polynomial> g) : nvars(n) {
    gens.reserve(g.size());
    for (Polynomial& p : g) {
        if (p.nvars() != n) fail(Errc::internal, "ideal generator width mismatch");
        if (!p.is_zero()) gens.push_back(std::move(p));
    }
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis, const TermOrder& ord) {
    Polynomial p = f;
    Polynomial r(f.nvars());
    while (!p.is_zero()) {
        const Term& lt = p.leading_term(ord);
        bool reduced = false;
        for (const Polynomial& g : basis) {
            if (g.is_zero()) continue;
            const Term& gl = g.leading_term(ord);
            if (!gl.mono.divides(lt.mono)) continue;
            Polynomial factor =
                Polynomial::from_term(lt.mono.divided_by(gl.mono), lt.coeff / gl.coeff);
            p = p - factor * g;
            reduced = true;
            break;
        }
        if (!reduced) {
            Polynomial mono = Polynomial::from_term(lt.mono, lt.coeff);
            r = r + mono;
            p = p - mono;
        }
    }
    return r;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& ord) {
    const Term& lf = f.leading_term(ord);
    const Term& lg = g.leading_term(ord);
    Monomial l = Monomial::lcm(lf.mono, lg.mono);
    Polynomial a = Polynomial::from_term(l.divided_by(lf.mono), Rational(1) / lf.coeff);
    Polynomial b = Polynomial::from_term(l.divided_by(lg.mono), Rational(1) / lg.coeff);
    return a * f - b * g;
}

namespace {

struct Pair {
    int i, j;
    int lcm_degree;
};

std::vector<Polynomial> reduce_basis(std::vector<Polynomial> basis, const TermOrder& ord) {
    // Drop members whose leading monomial is divisible by another's.
    std::vector<bool> alive(basis.size(), true);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (!alive[i]) continue;
        const Monomial& mi = basis[i].leading_term(ord).mono;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j || !alive[j]) continue;
            const Monomial& mj = basis[j].leading_term(ord).mono;
            if (mj.divides(mi) && (mj != mi || j < i)) {
                alive[i] = false;
                break;
            }
        }
    }
    std::vector<Polynomial> kept;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (alive[i]) kept.push_back(std::move(basis[i]));

    // Fully reduce each member by the others, then normalize to monic.
    for (std::size_t i = 0; i < kept.size(); ++i) {
        std::vector<Polynomial> others;
        others.reserve(kept.size() - 1);
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        kept[i] = normal_form(kept[i], others, ord);
    }
    std::vector<Polynomial> out;
    for (Polynomial& p : kept) {
        if (p.is_zero()) continue;
        out.push_back(p * (Rational(1) / p.leading_term(ord).coeff));
    }
    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ord.less(a.leading_term(ord).mono, b.leading_term(ord).mono);
    });
    return out;
}

} // namespace

std::vector<Polynomial> buchberger(const Ideal& ideal, const TermOrder& ord) {
    std::vector<Polynomial> basis;
    for (const Polynomial& g : ideal.gens)
        if (!g.is_zero()) basis.push_back(g);
    if (basis.empty()) return {};

    auto lm = [&](int i) -> const Monomial& {
        return basis[static_cast<std::size_t>(i)].leading_term(ord).mono;
    };

    std::set<std::pair<int, int>> pending;
    auto push_pairs_with = [&](int j) {
        for (int i = 0; i < j; ++i) pending.insert({i, j});
    };
    for (int j = 1; j < static_cast<int>(basis.size()); ++j) push_pairs_with(j);

    while (!pending.empty()) {
        // Normal selection: smallest lcm degree, ties by lex on (i, j).
        auto best = pending.begin();
        int best_deg = Monomial::lcm(lm(best->first), lm(best->second)).degree();
        for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
            int d = Monomial::lcm(lm(it->first), lm(it->second)).degree();
            if (d < best_deg) {
                best = it;
                best_deg = d;
            }
        }
        auto [i, j] = *best;
        pending.erase(best);

        Monomial l = Monomial::lcm(lm(i), lm(j));
        // Product criterion: coprime leading monomials reduce to zero.
        if (l == lm(i) * lm(j)) continue;
        // Chain criterion: a third member dividing the lcm with both its
        // pairs already handled makes this pair redundant.
        bool chained = false;
        for (int k = 0; k < static_cast<int>(basis.size()) && !chained; ++k) {
            if (k == i || k == j) continue;
            if (!lm(k).divides(l)) continue;
            auto key_ik = std::make_pair(std::min(i, k), std::max(i, k));
            auto key_jk = std::make_pair(std::min(j, k), std::max(j, k));
            if (!pending.count(key_ik) && !pending.count(key_jk)) chained = true;
        }
        if (chained) continue;

        Polynomial h = normal_form(s_polynomial(basis[static_cast<std::size_t>(i)],
                                                basis[static_cast<std::size_t>(j)], ord),
                                   basis, ord);
        if (h.is_zero()) continue;
        basis.push_back(std::move(h));
        push_pairs_with(static_cast<int>(basis.size()) - 1);
    }
    return reduce_basis(std::move(basis), ord);
}

bool ideal_membership(const Polynomial& f, std::span<const Polynomial> groebner,
                      const TermOrder& ord) {
    return normal_form(f, groebner, ord).is_zero();
}

bool ideal_membership(const Polynomial& f, const Ideal& ideal) {
    TermOrder ord = TermOrder::degrevlex();
    return ideal_membership(f, buchberger(ideal, ord), ord);
}

bool is_unit_ideal(std::span<const Polynomial> reduced_groebner) {
    return reduced_groebner.size() == 1 && reduced_groebner[0].is_constant() &&
           !reduced_groebner[0].is_zero();
}

bool radical_membership(const Polynomial& f, const Ideal& ideal) {
    if (f.is_zero()) return true;
    const int n = ideal.nvars;
    std::vector<int> widen(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) widen[static_cast<std::size_t>(i)] = i;
    std::vector<Polynomial> gens;
    gens.reserve(ideal.gens.size() + 1);
    for (const Polynomial& g : ideal.gens) gens.push_back(g.remap(n + 1, widen));
    Polynomial y = Polynomial::variable(n + 1, n);
    gens.push_back(Polynomial::constant(n + 1, 1) - y * f.remap(n + 1, widen));
    auto gb = buchberger(Ideal(n + 1, std::move(gens)), TermOrder::degrevlex());
    return is_unit_ideal(gb);
}

Ideal elimination_ideal(const Ideal& ideal, const std::vector<bool>& keep) {
    if (keep.size() != static_cast<std::size_t>(ideal.nvars))
        fail(Errc::internal, "elimination mask width mismatch");
    std::vector<bool> dominant(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) dominant[i] = !keep[i];
    auto gb = buchberger(ideal, TermOrder::block(dominant));
    std::vector<Polynomial> kept;
    for (const Polynomial& p : gb)
        if (p.supported_on(keep)) kept.push_back(p);
    return Ideal(ideal.nvars, std::move(kept));
}

} // namespace schfin
