#pragma once

#include "schfin/groebner.hpp"
#include "schfin/polynomial.hpp"

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace schfin {

class PresentedRing;
using RingPtr = std::shared_ptr<const PresentedRing>;

// Finitely presented Q-algebra Q[vars]/relations. The reduced degrevlex
// Groebner basis of the relation ideal is computed once on construction, so
// element equality is decidable via normal forms. Presentations are never
// simplified behind the caller's back.
class PresentedRing {
public:
    static RingPtr make(std::vector<std::string> vars, std::vector<Polynomial> relations);
    static RingPtr rationals() { return make({}, {}); }
    static RingPtr polynomial_ring(std::vector<std::string> vars) { return make(std::move(vars), {}); }

    int nvars() const { return static_cast<int>(vars_.size()); }
    const std::vector<std::string>& vars() const { return vars_; }
    int var_index(std::string_view name) const; // throws element_not_found
    const Ideal& relations() const { return relations_; }
    const std::vector<Polynomial>& groebner() const { return gb_; }

    // True when the relation ideal is the unit ideal.
    bool is_zero_ring() const { return is_unit_ideal(gb_); }

    Polynomial reduce(const Polynomial& f) const; // normal form mod relations
    bool is_zero(const Polynomial& f) const { return reduce(f).is_zero(); }
    bool equal(const Polynomial& f, const Polynomial& g) const { return is_zero(f - g); }

    // Membership/radical membership in (relations + extra) seen in this ring.
    bool contains(const Polynomial& f, std::span<const Polynomial> extra) const;
    bool radical_contains(const Polynomial& f, std::span<const Polynomial> extra) const;

    Polynomial parse(std::string_view text) const;
    std::string show(const Polynomial& f) const { return reduce(f).to_string(vars_); }
    std::string describe() const; // "Q[x,y]/(...)"

private:
    PresentedRing() = default;
    std::vector<std::string> vars_;
    Ideal relations_;
    std::vector<Polynomial> gb_;
};

// Witness data proving that a ring map is the localization of its source at
// one element: target = source[1/witness]. `sections` write each target
// variable as numerator/witness^power with the numerator over the source;
// `inverse` is a target element with inverse * phi(witness) = 1.
struct LocalizationCertificate {
    Polynomial witness;  // source ambient
    struct Section {
        Polynomial numerator; // source ambient
        int witness_power = 0;
    };
    std::vector<Section> sections; // one per target variable
    Polynomial inverse;            // target ambient
};

// Map of presented rings given by images of the source variables. Source
// relations are checked to die in the target on construction.
class RingMap {
public:
    RingMap() = default;
    static RingMap make(RingPtr source, RingPtr target, std::vector<Polynomial> images,
                        std::optional<LocalizationCertificate> certificate = std::nullopt);
    static RingMap identity(const RingPtr& ring);

    const RingPtr& source() const { return source_; }
    const RingPtr& target() const { return target_; }
    const std::vector<Polynomial>& images() const { return images_; }
    const std::optional<LocalizationCertificate>& certificate() const { return certificate_; }
    bool certified() const { return certificate_.has_value(); }

    Polynomial apply(const Polynomial& f) const; // substitute + reduce

    RingMap with_certificate(LocalizationCertificate cert) const;
    RingMap without_certificate() const;

private:
    RingPtr source_, target_;
    std::vector<Polynomial> images_;
    std::optional<LocalizationCertificate> certificate_;
};

bool ring_map_equal(const RingMap& a, const RingMap& b);
RingMap compose_maps(const RingMap& first, const RingMap& then); // then o first

// Verification of the certificate against its map: the canonical comparison
// source[w]/(w*witness - 1) -> target must be well defined, surjective (via
// the sections) and injective (zero kernel by elimination). Returns a reason
// on failure.
std::optional<std::string> verify_certificate(const RingMap& map);

// A[1/s] with its canonical certified map. Refuses the zero ring
// (Errc::degenerate_localization), including s nilpotent cases.
struct Localization {
    RingPtr ring;
    RingMap map;
};
Localization localize(const RingPtr& ring, const Polynomial& element, const std::string& var_hint = "w");

// Pushout presentation of A <- R -> B on the disjoint union of the variable
// lists (clashing B-names get deterministic fresh names). Relations are those
// of A and B plus the equations identifying the two images of each R-variable.
struct TensorProduct {
    RingPtr ring;
    RingMap from_left;  // A -> A (x)_R B
    RingMap from_right; // B -> A (x)_R B
};
TensorProduct tensor_product(const RingMap& left, const RingMap& right);

// Kernel as an ideal of the source, through the graph ideal in a joint
// ambient and elimination of the target variables.
Ideal map_kernel(const RingMap& map);

// Every target variable must reduce, modulo the graph ideal under a block
// order with target variables dominant, to a polynomial in source variables.
bool is_surjective(const RingMap& map);

bool is_isomorphism(const RingMap& map); // zero kernel + surjective

// Composite localization witness for a chain of certified maps: an element s
// of the first source with first_source[1/s] isomorphic to the last target.
// Throws Errc::certificate_required on an uncertified link.
Polynomial compose_certificates(std::span<const RingMap> chain);

// Rewrites a target element as source-numerator / witness^k via the
// certificate sections; the numerator is returned (denominators are units
// after localizing at the witness).
Polynomial pull_back_numerator(const RingMap& map, const Polynomial& target_element);

// phi^{-1}(p) for a proper ideal p of the target (Errc::invalid_prime else).
Ideal prime_preimage(const RingMap& map, const Ideal& p);

// Precomputed block-order basis of the graph ideal of a map; answers "is this
// target element in the image, and as the image of what" by normal forms.
class ImageExpressor {
public:
    explicit ImageExpressor(const RingMap& map);
    // Source polynomial p with map(p) = element, when the element lies in the
    // image; nullopt otherwise.
    std::optional<Polynomial> express(const Polynomial& target_element) const;

private:
    const RingMap* map_;
    int joint_nvars_ = 0;
    std::vector<int> target_slot_, source_slot_, back_;
    std::vector<bool> source_only_;
    TermOrder ord_ = TermOrder::degrevlex();
    std::vector<Polynomial> gb_;
};

// Inverse of a unit of the ring, or nullopt when the element is not a unit.
std::optional<Polynomial> unit_inverse(const RingPtr& ring, const Polynomial& element);

// Composite of a chain of certified maps as a single certified map: the
// composed witness, freshly derived sections and an explicit inverse. The
// result's certificate is re-verified.
RingMap compose_certified(std::span<const RingMap> chain);

} // namespace schfin
