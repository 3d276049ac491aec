#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace schfin {

// Finite poset with named elements. The order is stored as a dense boolean
// matrix; reflexivity, antisymmetry and transitivity are checked on
// construction. Iteration order is declaration order throughout.
//
// Convention: the minimal open set of x is its up-set U_x = {y : x <= y},
// so structure rings localize (shrink) upward along the order.
class Poset {
public:
    Poset() = default;

    // Builds the reflexive-transitive closure of the given relations and
    // validates the poset axioms. Throws Errc::construction on violations,
    // Errc::element_not_found for relations mentioning unknown ids.
    static Poset from_relations(std::vector<std::string> elements,
                                const std::vector<std::pair<std::string, std::string>>& below);

    // Relation pairs are taken as already closed; axioms still checked.
    static Poset from_matrix(std::vector<std::string> elements, std::vector<bool> leq);

    int size() const { return static_cast<int>(ids_.size()); }
    const std::string& id(int i) const { return ids_[i]; }
    const std::vector<std::string>& ids() const { return ids_; }

    bool contains(std::string_view id) const;
    int index_of(std::string_view id) const; // throws element_not_found

    bool leq(int a, int b) const { return leq_[static_cast<std::size_t>(a) * ids_.size() + b]; }
    bool covers(int a, int b) const; // a < b with nothing strictly between

    // U_x = {y : x <= y}, ascending element indices. Always contains x.
    std::vector<int> up_set(int x) const;
    std::vector<int> down_set(int x) const;

    // Strictly increasing (k+1)-tuples x0 < x1 < ... < xk in lexicographic
    // order of element indices. Empty for k exceeding the poset height.
    std::vector<std::vector<int>> chains(int k) const;

    // The unique s in S with s <= t for all t in S, if it exists.
    std::optional<int> minimum(std::span<const int> subset) const;

    std::vector<int> minimal_elements() const;
    std::vector<std::pair<int, int>> covering_relations() const; // sorted (a, b)
    int height() const; // longest chain length (edges)

    // Sub-poset on the given element indices (ids preserved, induced order).
    Poset induced(std::span<const int> subset) const;

private:
    std::vector<std::string> ids_;
    std::unordered_map<std::string, int> index_;
    std::vector<bool> leq_;

    void check_axioms() const;
    void build_index();
};

struct MonotoneMap {
    Poset source;
    Poset target;
    std::vector<int> assignment; // source index -> target index

    int apply(int x) const { return assignment[x]; }
};

bool check_monotone(const MonotoneMap& m);

// f^{-1}(U_y) as source element indices, ascending.
std::vector<int> preimage_up_set(const MonotoneMap& m, int y);

MonotoneMap identity_map(const Poset& p);
MonotoneMap compose(const MonotoneMap& first, const MonotoneMap& then);

} // namespace schfin
