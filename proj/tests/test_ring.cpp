#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schfin/errors.hpp"
#include "schfin/ring.hpp"

using namespace schfin;

namespace {

RingPtr laurent_uw() {
    RingPtr r = PresentedRing::polynomial_ring({"u", "w"});
    return PresentedRing::make({"u", "w"}, {r->parse("u*w - 1")});
}

} // namespace

TEST_CASE("presented rings decide equality via cached bases") {
    RingPtr r = laurent_uw();
    CHECK(r->equal(r->parse("u*w"), r->parse("1")));
    CHECK(r->equal(r->parse("u^2*w"), r->parse("u")));
    CHECK_FALSE(r->equal(r->parse("u"), r->parse("w")));
    CHECK_FALSE(r->is_zero_ring());

    RingPtr zero = PresentedRing::make({"x"}, {PresentedRing::polynomial_ring({"x"})->parse("1")});
    CHECK(zero->is_zero_ring());

    RingPtr q = PresentedRing::rationals();
    CHECK(q->nvars() == 0);
    CHECK_FALSE(q->is_zero_ring());
}

TEST_CASE("ring maps must kill relations") {
    RingPtr lau = laurent_uw();
    RingPtr qx = PresentedRing::polynomial_ring({"x"});
    // u*w - 1 -> x*x - 1 != 0: rejected.
    CHECK_THROWS_AS(RingMap::make(lau, qx, {qx->parse("x"), qx->parse("x")}), Error);
    // u -> x, w -> undefined inverse cannot exist into Q[x].
    RingMap ok = RingMap::make(qx, lau, {lau->parse("u")});
    CHECK(lau->equal(ok.apply(qx->parse("x^2")), lau->parse("u^2")));
}

TEST_CASE("localize builds the standard Laurent presentation") {
    RingPtr qx = PresentedRing::polynomial_ring({"x"});
    Localization loc = localize(qx, qx->parse("x"));
    CHECK(loc.ring->nvars() == 2);
    CHECK(loc.ring->vars()[1] == "w");
    CHECK(loc.ring->equal(loc.ring->parse("x*w"), loc.ring->parse("1")));
    CHECK(loc.map.certified());
    CHECK_FALSE(verify_certificate(loc.map).has_value());

    // Localizing at 1 keeps an isomorphic ring.
    Localization triv = localize(qx, qx->parse("1"));
    CHECK(is_isomorphism(triv.map));

    // x is nilpotent in Q[x]/(x^2); the localization collapses and is refused.
    RingPtr dual = PresentedRing::make({"x"}, {qx->parse("x^2")});
    CHECK_THROWS_AS(localize(dual, dual->parse("x")), Error);
    CHECK_THROWS_AS(localize(qx, qx->parse("0")), Error);
}

TEST_CASE("certificate verification catches corrupted data") {
    RingPtr qx = PresentedRing::polynomial_ring({"x"});
    Localization loc = localize(qx, qx->parse("x"));
    // Break the inverse.
    LocalizationCertificate bad = *loc.map.certificate();
    bad.inverse = loc.ring->parse("x");
    RingMap broken = loc.map.with_certificate(bad);
    CHECK(verify_certificate(broken).has_value());

    // Break a section.
    LocalizationCertificate bad2 = *loc.map.certificate();
    bad2.sections[1] = {qx->parse("x"), 0};
    CHECK(verify_certificate(loc.map.with_certificate(bad2)).has_value());
}

TEST_CASE("tensor products") {
    RingPtr q = PresentedRing::rationals();
    RingPtr qx = PresentedRing::polynomial_ring({"x"});
    RingPtr qy = PresentedRing::polynomial_ring({"y"});
    RingMap to_x = RingMap::make(q, qx, {});
    RingMap to_y = RingMap::make(q, qy, {});
    TensorProduct t = tensor_product(to_x, to_y);
    CHECK(t.ring->vars() == std::vector<std::string>{"x", "y"});
    CHECK(t.ring->relations().gens.empty());

    // A_s (x)_A A_t is A_{s t} up to certified isomorphism: match w = w_1 w_2.
    Localization at_s = localize(qx, qx->parse("x"), "w");
    Localization at_t = localize(qx, qx->parse("x - 1"), "w");
    TensorProduct mixed = tensor_product(at_s.map, at_t.map);
    Localization at_st = localize(qx, qx->parse("x^2 - x"), "W");
    // x -> x, W -> w * w_2 (the two adjoined inverses multiply).
    int w1 = mixed.ring->var_index("w");
    int w2 = mixed.ring->var_index("w_2");
    int nv = mixed.ring->nvars();
    std::vector<Polynomial> imgs{
        Polynomial::variable(nv, mixed.ring->var_index("x")),
        Polynomial::variable(nv, w1) * Polynomial::variable(nv, w2)};
    RingMap match = RingMap::make(at_st.ring, mixed.ring, std::move(imgs));
    CHECK(is_isomorphism(match));

    // A (x)_A A = A along identity legs.
    RingMap idm = RingMap::identity(qx);
    TensorProduct self = tensor_product(idm, idm);
    RingMap diag = RingMap::make(qx, self.ring,
                                 {Polynomial::variable(self.ring->nvars(),
                                                       self.ring->var_index("x"))});
    CHECK(is_isomorphism(diag));
}

TEST_CASE("map kernels via elimination") {
    RingPtr qu = PresentedRing::polynomial_ring({"u"});
    RingPtr quv = PresentedRing::polynomial_ring({"u", "v"});
    RingPtr qt = PresentedRing::polynomial_ring({"t"});

    RingMap square = RingMap::make(qu, qt, {qt->parse("t^2")});
    CHECK(map_kernel(square).gens.empty());

    RingMap cubic = RingMap::make(quv, qt, {qt->parse("t^2"), qt->parse("t^3")});
    Ideal k = map_kernel(cubic);
    REQUIRE(k.gens.size() == 1);
    CHECK(ideal_membership(quv->parse("u^3 - v^2"), k));
    CHECK(ideal_membership(k.gens[0], Ideal(2, {quv->parse("u^3 - v^2")})));

    RingPtr q = PresentedRing::rationals();
    RingMap eval0 = RingMap::make(qu, q, {Polynomial::zero(0)});
    Ideal k0 = map_kernel(eval0);
    REQUIRE(k0.gens.size() == 1);
    CHECK(qu->equal(k0.gens[0], qu->parse("u")));
}

TEST_CASE("surjectivity via block-order normal forms") {
    RingPtr qx = PresentedRing::polynomial_ring({"x"});
    RingPtr dual = PresentedRing::make({"x"}, {qx->parse("x^2")});
    CHECK(is_surjective(RingMap::make(qx, dual, {dual->parse("x")})));

    RingPtr qu = PresentedRing::polynomial_ring({"u"});
    RingPtr qt = PresentedRing::polynomial_ring({"t"});
    CHECK_FALSE(is_surjective(RingMap::make(qu, qt, {qt->parse("t^2")})));

    // The diagonal stalk check: Q[u] (x) Q[v] -> Q[u,w]/(uw - 1).
    RingPtr q = PresentedRing::rationals();
    RingPtr qv = PresentedRing::polynomial_ring({"v"});
    TensorProduct t = tensor_product(RingMap::make(q, qu, {}), RingMap::make(q, qv, {}));
    RingPtr lau = laurent_uw();
    RingMap onto = RingMap::make(t.ring, lau, {lau->parse("u"), lau->parse("w")});
    CHECK(is_surjective(onto));
    CHECK(map_kernel(onto).gens.size() > 0); // u*v - 1 dies
}

TEST_CASE("composite certificates multiply witnesses") {
    RingPtr qx = PresentedRing::polynomial_ring({"x"});
    Localization at_s = localize(qx, qx->parse("x"));
    // Localize A_s further at the image of x - 1.
    Localization at_t = localize(at_s.ring, at_s.ring->parse("x - 1"), "v");
    std::vector<RingMap> chain{at_s.map, at_t.map};
    Polynomial w = compose_certificates(chain);
    // Witness x * (x - 1); check A_{x(x-1)} matches (A_s)_t.
    CHECK(qx->equal(w, qx->parse("x^2 - x")));
    Localization direct = localize(qx, w, "W");
    // x -> x, W -> w*v.
    int nv = at_t.ring->nvars();
    std::vector<Polynomial> imgs{Polynomial::variable(nv, at_t.ring->var_index("x")),
                                 Polynomial::variable(nv, at_t.ring->var_index("w")) *
                                     Polynomial::variable(nv, at_t.ring->var_index("v"))};
    CHECK(is_isomorphism(RingMap::make(direct.ring, at_t.ring, std::move(imgs))));

    // Single link and identity chain.
    CHECK(qx->equal(compose_certificates(std::vector<RingMap>{at_s.map}), qx->parse("x")));
    std::vector<RingMap> idchain{RingMap::identity(qx)};
    CHECK(qx->equal(compose_certificates(idchain), qx->parse("1")));

    // Uncertified link is an error.
    std::vector<RingMap> bad{at_s.map.without_certificate()};
    CHECK_THROWS_AS(compose_certificates(bad), Error);
}

TEST_CASE("prime preimages") {
    RingPtr qx = PresentedRing::polynomial_ring({"x"});
    RingMap idm = RingMap::identity(qx);
    Ideal p(1, {qx->parse("x")});
    Ideal pre = prime_preimage(idm, p);
    REQUIRE(pre.gens.size() == 1);
    CHECK(qx->equal(pre.gens[0], qx->parse("x")));

    // Q[x] -> Q[x,w]/(wx - 1), preimage of (x - 1) is (x - 1).
    Localization loc = localize(qx, qx->parse("x"));
    Ideal p2(2, {loc.ring->parse("x - 1")});
    Ideal pre2 = prime_preimage(loc.map, p2);
    REQUIRE(pre2.gens.size() == 1);
    CHECK(qx->equal(pre2.gens[0], qx->parse("x - 1")));

    // u -> t^2, preimage of (t - 2) is (u - 4).
    RingPtr qu = PresentedRing::polynomial_ring({"u"});
    RingPtr qt = PresentedRing::polynomial_ring({"t"});
    RingMap sq = RingMap::make(qu, qt, {qt->parse("t^2")});
    Ideal p3(1, {qt->parse("t - 2")});
    Ideal pre3 = prime_preimage(sq, p3);
    REQUIRE(pre3.gens.size() == 1);
    CHECK(qu->equal(pre3.gens[0], qu->parse("u - 4")));

    // Preimage of a proper ideal is proper.
    CHECK_FALSE(is_unit_ideal(buchberger(pre3, TermOrder::degrevlex())));

    // Unit ideal input is rejected.
    Ideal unit(1, {qt->parse("1")});
    CHECK_THROWS_AS(prime_preimage(sq, unit), Error);
}

TEST_CASE("tensor product is symmetric up to matching") {
    RingPtr qx = PresentedRing::polynomial_ring({"x"});
    Localization at_s = localize(qx, qx->parse("x"), "w");
    Localization at_t = localize(qx, qx->parse("x + 2"), "w");
    TensorProduct ab = tensor_product(at_s.map, at_t.map);
    TensorProduct ba = tensor_product(at_t.map, at_s.map);
    // Swap the factor variables: x->x, w->w_2, w_2->w.
    int nv = ba.ring->nvars();
    std::vector<Polynomial> imgs(static_cast<std::size_t>(ab.ring->nvars()), Polynomial(nv));
    imgs[static_cast<std::size_t>(ab.ring->var_index("x"))] =
        Polynomial::variable(nv, ba.ring->var_index("x"));
    imgs[static_cast<std::size_t>(ab.ring->var_index("w"))] =
        Polynomial::variable(nv, ba.ring->var_index("w_2"));
    imgs[static_cast<std::size_t>(ab.ring->var_index("w_2"))] =
        Polynomial::variable(nv, ba.ring->var_index("w"));
    // x_2 of ab maps to x_2 of ba.
    imgs[static_cast<std::size_t>(ab.ring->var_index("x_2"))] =
        Polynomial::variable(nv, ba.ring->var_index("x_2"));
    CHECK(is_isomorphism(RingMap::make(ab.ring, ba.ring, std::move(imgs))));
}

TEST_CASE("kernel-zero plus surjective detects isomorphisms") {
    RingPtr qx = PresentedRing::polynomial_ring({"x"});
    Localization loc = localize(qx, qx->parse("x"));
    CHECK_FALSE(is_isomorphism(loc.map));
    CHECK(is_isomorphism(RingMap::identity(loc.ring)));
}
