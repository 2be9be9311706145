#include "ambient.hpp"
#include "doctest.h"
#include "qsp/coideal.hpp"
#include "qsp/relations.hpp"

#include <random>

using namespace qsp;

namespace {

Scalar q(int e) { return Scalar::q(e); }
Element B1() { return Element(Gen::B1); }
Element Bm() { return Element(Gen::Bm1); }
Element B0() { return Element(Gen::B0); }
PBWIndex ix(int f, int y, int e, int x, int b, int z, int kd, int k1) { return PBWIndex::make(f, y, e, x, b, z, kd, k1); }

Element random_word(std::mt19937& rng, int len) {
    std::uniform_int_distribution<std::size_t> pick(0, kAllGens.size() - 1);
    Word w;
    for (int k = 0; k < len; ++k) w.push_back(kAllGens[pick(rng)]);
    return Element::word(w);
}

}  // namespace

TEST_CASE("p_act on p_0") {
    CHECK(p_act(Gen::Bm1, PBWIndex{}) == PBWElement::basis(ix(1, 0, 0, 0, 0, 0, 0, 0)));
    CHECK(p_act(Gen::Dd, PBWIndex{}) == PBWElement::basis(ix(0, 0, 0, 0, 0, 0, 1, 0)));
    CHECK(p_act(Gen::B0, PBWIndex{}) == PBWElement::basis(ix(0, 0, 0, 0, 1, 0, 0, 0)));
}

TEST_CASE("normal forms") {
    PBWElement b0b1 = normal_form(B0() * B1());
    CHECK(b0b1.str() == "q^-1·m(e=1,b=1) + m(x=1)");
    CHECK(normal_form(gen_X()) == normal_form(B0() * B1() - q(-1) * (B1() * B0())));
    CHECK(normal_form(gen_Z()) == PBWElement::basis(ix(0, 0, 0, 0, 0, 1, 0, 0)));
    CHECK(normal_form(Element(Gen::Dd) * Element(Gen::DdInv) - Element(1)).is_zero());
    CHECK(normal_form(gen_K() * gen_Kinv()) == PBWElement::unit());
}

TEST_CASE("check_identity") {
    CHECK(check_identity(B0() * B0() * B1() - qint(2) * (B0() * B1() * B0()) + B1() * B0() * B0() - B1()));
    CHECK(check_identity(gen_Z() * B0() - B0() * gen_Z()));
    CHECK_FALSE(check_identity(B0() * B1() - B1() * B0()));
}

TEST_CASE("relation suites") {
    for (const auto& name : relation_suite_names()) {
        CAPTURE(name);
        for (const auto& r : relation_suite(name)) {
            CAPTURE(r.name);
            CHECK(check_identity(r.diff));
        }
    }
}

TEST_CASE("multiply and degree") {
    PBWElement f = PBWElement::basis(ix(1, 0, 0, 0, 0, 0, 0, 0));
    PBWElement e = PBWElement::basis(ix(0, 0, 1, 0, 0, 0, 0, 0));
    PBWElement any = normal_form(gen_Z() * Bm() + q(3) * B1());
    CHECK(multiply(PBWElement::unit(), any) == any);
    CHECK(multiply(f, e) == PBWElement::basis(ix(1, 0, 1, 0, 0, 0, 0, 0)));
    // B1 B-1 = B-1 B1 + [Khat;0]
    CHECK(multiply(e, f) == normal_form(Bm() * B1() + khat_bracket()));
    CHECK(degree(PBWIndex{}) == 0);
    CHECK(degree(ix(2, 0, 1, 0, 0, 0, 0, 0)) == -1);
    std::mt19937 rng(5);
    for (int t = 0; t < 10; ++t) {
        PBWIndex a = ix(rng() % 2, rng() % 2, rng() % 2, rng() % 2, rng() % 2, 0, 0, 0);
        PBWIndex b = ix(rng() % 2, rng() % 2, rng() % 2, rng() % 2, 0, rng() % 2, 1, 0);
        PBWElement p = multiply(PBWElement::basis(a), PBWElement::basis(b));
        for (const auto& [idx, c] : p.terms()) CHECK(degree(idx) == degree(a) + degree(b));
    }
}

TEST_CASE("multiply is associative") {
    PBWElement a = normal_form(Bm() + gen_Y());
    PBWElement b = normal_form(B1() * B0());
    PBWElement c = normal_form(gen_X() + Element(Gen::D1));
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
}

TEST_CASE("tau") {
    CHECK(tau(B1()) == Bm());
    CHECK(normal_form(tau(gen_Z())) == normal_form(gen_W()));
    std::mt19937 rng(9);
    for (int t = 0; t < 20; ++t) {
        Element w = random_word(rng, 5);
        CHECK(tau(tau(w)) == w);
    }
    // tau respects the relations
    for (const auto& r : presentation_relations()) CHECK(check_identity(tau(r.diff)));
}

TEST_CASE("normal form agrees with the ambient action on V (x) V") {
    // normal forms are computed in P; the action on V^(x)2 goes through the coproduct of gl4
    auto basis = ambient::basis(2);
    std::mt19937 rng(1);
    std::vector<Element> samples = {B0() * B1(), B1() * Bm(), gen_Z() * B1(), gen_W() * Bm() * B0(),
                                    gen_X() * gen_Y(), gen_Kinv() * B1() * Element(Gen::Dd)};
    for (int t = 0; t < 10; ++t) samples.push_back(random_word(rng, 4));
    for (const auto& el : samples) {
        Element back = to_element(normal_form(el));
        for (const auto& v : basis) CHECK(ambient::act(el, v) == ambient::act(back, v));
    }
}

TEST_CASE("the presentation holds on V (x) V through the ambient coproduct") {
    auto basis = ambient::basis(2);
    for (const auto& r : presentation_relations()) {
        CAPTURE(r.name);
        for (const auto& v : basis) CHECK(ambient::act(r.diff, v).empty());
    }
}

TEST_CASE("PBW index printing") {
    CHECK(PBWIndex{}.str() == "m(0)");
    CHECK(ix(0, 0, 1, 0, 1, 0, 0, 0).str() == "m(e=1,b=1)");
    CHECK_FALSE(ix(-1, 0, 0, 0, 0, 0, 0, 0).valid());
    CHECK(ix(0, 0, 0, 0, 0, 0, -3, 2).valid());
}
