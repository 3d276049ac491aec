#include "schfin/poset.hpp"

#include "schfin/errors.hpp"

#include <algorithm>

namespace schfin {

void Poset::build_index() {
    index_.clear();
    for (int i = 0; i < size(); ++i) {
        auto [it, fresh] = index_.emplace(ids_[i], i);
        if (!fresh) fail(Errc::construction, "duplicate poset element id '" + ids_[i] + "'");
    }
}

void Poset::check_axioms() const {
    const int n = size();
    for (int a = 0; a < n; ++a) {
        if (!leq(a, a)) fail(Errc::construction, "order not reflexive at '" + ids_[a] + "'");
        for (int b = 0; b < n; ++b) {
            if (a != b && leq(a, b) && leq(b, a))
                fail(Errc::construction,
                     "order not antisymmetric on ('" + ids_[a] + "', '" + ids_[b] + "')");
            if (!leq(a, b)) continue;
            for (int c = 0; c < n; ++c)
                if (leq(b, c) && !leq(a, c))
                    fail(Errc::construction, "order not transitive through '" + ids_[b] + "'");
        }
    }
}

Poset Poset::from_relations(std::vector<std::string> elements,
                            const std::vector<std::pair<std::string, std::string>>& below) {
    Poset p;
    p.ids_ = std::move(elements);
    p.build_index();
    const int n = p.size();
    p.leq_.assign(static_cast<std::size_t>(n) * n, false);
    for (int i = 0; i < n; ++i) p.leq_[static_cast<std::size_t>(i) * n + i] = true;
    for (const auto& [lo, hi] : below) {
        int a = p.index_of(lo);
        int b = p.index_of(hi);
        p.leq_[static_cast<std::size_t>(a) * n + b] = true;
    }
    // Warshall closure.
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            if (!p.leq_[static_cast<std::size_t>(i) * n + k]) continue;
            for (int j = 0; j < n; ++j)
                if (p.leq_[static_cast<std::size_t>(k) * n + j])
                    p.leq_[static_cast<std::size_t>(i) * n + j] = true;
        }
    p.check_axioms();
    return p;
}

Poset Poset::from_matrix(std::vector<std::string> elements, std::vector<bool> leq) {
    Poset p;
    p.ids_ = std::move(elements);
    p.build_index();
    if (leq.size() != static_cast<std::size_t>(p.size()) * p.size())
        fail(Errc::construction, "order matrix size mismatch");
    p.leq_ = std::move(leq);
    p.check_axioms();
    return p;
}

bool Poset::contains(std::string_view id) const {
    return index_.find(std::string(id)) != index_.end();
}

int Poset::index_of(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end())
        throw Error(Errc::element_not_found, "unknown poset element '" + std::string(id) + "'");
    return it->second;
}

bool Poset::covers(int a, int b) const {
    if (a == b || !leq(a, b)) return false;
    for (int c = 0; c < size(); ++c)
        if (c != a && c != b && leq(a, c) && leq(c, b)) return false;
    return true;
}

std::vector<int> Poset::up_set(int x) const {
    if (x < 0 || x >= size()) fail(Errc::element_not_found, "up_set: element index out of range");
    std::vector<int> out;
    for (int y = 0; y < size(); ++y)
        if (leq(x, y)) out.push_back(y);
    return out;
}

std::vector<int> Poset::down_set(int x) const {
    if (x < 0 || x >= size()) fail(Errc::element_not_found, "down_set: element index out of range");
    std::vector<int> out;
    for (int y = 0; y < size(); ++y)
        if (leq(y, x)) out.push_back(y);
    return out;
}

std::vector<std::vector<int>> Poset::chains(int k) const {
    std::vector<std::vector<int>> out;
    if (k < 0) return out;
    std::vector<int> cur;
    // Depth-first in ascending index order at every level gives tuples in
    // lexicographic order of element indices.
    auto extend = [&](auto&& self, int depth) -> void {
        if (depth == k + 1) {
            out.push_back(cur);
            return;
        }
        for (int cand = 0; cand < size(); ++cand) {
            if (!cur.empty()) {
                int prev = cur.back();
                if (cand == prev || !leq(prev, cand)) continue;
            }
            cur.push_back(cand);
            self(self, depth + 1);
            cur.pop_back();
        }
    };
    extend(extend, 0);
    return out;
}

std::optional<int> Poset::minimum(std::span<const int> subset) const {
    for (int s : subset) {
        bool below_all = true;
        for (int t : subset)
            if (!leq(s, t)) {
                below_all = false;
                break;
            }
        if (below_all) return s;
    }
    return std::nullopt;
}

std::vector<int> Poset::minimal_elements() const {
    std::vector<int> out;
    for (int x = 0; x < size(); ++x) {
        bool minimal = true;
        for (int y = 0; y < size(); ++y)
            if (y != x && leq(y, x)) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(x);
    }
    return out;
}

std::vector<std::pair<int, int>> Poset::covering_relations() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < size(); ++a)
        for (int b = 0; b < size(); ++b)
            if (covers(a, b)) out.emplace_back(a, b);
    return out;
}

int Poset::height() const {
    // Longest strict chain, counted in edges.
    std::vector<int> h(size(), 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = 0; a < size(); ++a)
            for (int b = 0; b < size(); ++b)
                if (a != b && leq(a, b) && h[b] < h[a] + 1) {
                    h[b] = h[a] + 1;
                    changed = true;
                }
    }
    int m = 0;
    for (int v : h) m = std::max(m, v);
    return m;
}

Poset Poset::induced(std::span<const int> subset) const {
    std::vector<std::string> ids;
    ids.reserve(subset.size());
    for (int x : subset) ids.push_back(ids_[x]);
    const int m = static_cast<int>(subset.size());
    std::vector<bool> mat(static_cast<std::size_t>(m) * m, false);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) mat[static_cast<std::size_t>(i) * m + j] = leq(subset[i], subset[j]);
    return Poset::from_matrix(std::move(ids), std::move(mat));
}

bool check_monotone(const MonotoneMap& m) {
    if (m.assignment.size() != static_cast<std::size_t>(m.source.size())) return false;
    for (int v : m.assignment)
        if (v < 0 || v >= m.target.size()) return false;
    for (int a = 0; a < m.source.size(); ++a)
        for (int b = 0; b < m.source.size(); ++b)
            if (m.source.leq(a, b) && !m.target.leq(m.assignment[a], m.assignment[b])) return false;
    return true;
}

std::vector<int> preimage_up_set(const MonotoneMap& m, int y) {
    std::vector<int> out;
    for (int x = 0; x < m.source.size(); ++x)
        if (m.target.leq(y, m.assignment[x])) out.push_back(x);
    return out;
}

MonotoneMap identity_map(const Poset& p) {
    MonotoneMap m{p, p, {}};
    m.assignment.resize(static_cast<std::size_t>(p.size()));
    for (int i = 0; i < p.size(); ++i) m.assignment[i] = i;
    return m;
}

MonotoneMap compose(const MonotoneMap& first, const MonotoneMap& then) {
    MonotoneMap m{first.source, then.target, {}};
    m.assignment.reserve(first.assignment.size());
    for (int v : first.assignment) m.assignment.push_back(then.assignment[v]);
    return m;
}

} // namespace schfin
