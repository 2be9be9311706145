#pragma once

#include "qsp/tensor.hpp"
#include "qsp/verma.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace qsp {

struct CentralElement {
    std::string name;  // det, detInv, C1, C2, C3
    Element body;
};
std::vector<CentralElement> central_elements();
const CentralElement& central_element(const std::string& name);

// [el, g] normalizes to zero for g in B-1, B0, B1, Dd, D1
bool is_central(const Element& el);

struct CentralCharacter {
    Scalar c1, c2, c3, det;
    bool operator==(const CentralCharacter& o) const = default;
    std::string str() const;
};
// Closed-form character of L(kd, k1, [n], [n+kappa-2i] - q^-kappa [n]); throws unless mu = q^n and zeta is dominant.
CentralCharacter central_character(const HighestWeight& hw);
CentralCharacter central_character(const Bipartition& bp);
// Scalars by which the central bodies act on the highest weight vector of the Verma module
CentralCharacter central_action(const HighestWeight& hw);
// each body acts on the finite-dimensional module as the scalar from the character
bool character_matches_module(const IrreducibleModule& m, const CentralCharacter& c);

// Element of U_0' = C(q)[B0, Z, Dd^±1, D1^±1], a commutative Laurent polynomial algebra.
class CartanElement {
public:
    using Key = std::array<int, 4>;  // exponents of B0, Z, Dd, D1

    CartanElement() = default;
    CartanElement(const Scalar& s);
    CartanElement(long n) : CartanElement(Scalar(n)) {}
    static CartanElement monomial(int b, int z, int kd, int k1, const Scalar& c = Scalar(1));
    static CartanElement B0() { return monomial(1, 0, 0, 0); }
    static CartanElement Z() { return monomial(0, 1, 0, 0); }
    static CartanElement Dd(int e = 1) { return monomial(0, 0, e, 0); }
    static CartanElement D1(int e = 1) { return monomial(0, 0, 0, e); }
    static CartanElement K(int e = 1) { return monomial(0, 0, e, -e); }
    // throws if the PBW support leaves U_0'
    static CartanElement from_pbw(const PBWElement& v);

    const std::map<Key, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    PBWElement to_pbw() const;

    CartanElement& operator+=(const CartanElement& o);
    CartanElement& operator-=(const CartanElement& o);
    CartanElement& operator*=(const Scalar& s);
    friend CartanElement operator+(CartanElement a, const CartanElement& b) { return a += b; }
    friend CartanElement operator-(CartanElement a, const CartanElement& b) { return a -= b; }
    friend CartanElement operator*(CartanElement a, const Scalar& s) { return a *= s; }
    friend CartanElement operator*(const Scalar& s, CartanElement a) { return a *= s; }
    friend CartanElement operator*(const CartanElement& a, const CartanElement& b);
    friend bool operator==(const CartanElement& a, const CartanElement& b) = default;
    CartanElement pow(int e) const;

    std::string str() const;

private:
    std::map<Key, Scalar> terms_;
    void add(const Key& k, const Scalar& c);
};

// normal form with every monomial having f+y+e+x > 0 dropped
CartanElement hc_project(const Element& el);
// (q^2 K + q^-2 K^-1)(q - q^-1)^-2 - B0^2 K^-1 - Z B0
CartanElement xi_c2_expected();
// Dd -> q^-2 D1, D1 -> q^2 Dd, B0 -> Z + B0 K^-1, Z -> -q^4 K Z + (1 - q^4) B0
CartanElement w_gl2(const CartanElement& ce);

// C(q)[Dd^±1, D1^±1, Ld^±1, L1^±1, Q] / (Q^2 - Dd D1 Ld L1); Q-exponent kept in {0, 1}.
class ExtendedCartan {
public:
    using Key = std::array<int, 5>;  // Dd, D1, Ld, L1, Q
    enum Var : int { kDd = 0, kD1 = 1, kLd = 2, kL1 = 3, kQ = 4 };

    ExtendedCartan() = default;
    ExtendedCartan(const Scalar& s);
    ExtendedCartan(long n) : ExtendedCartan(Scalar(n)) {}
    // any integer Q power is reduced
    static ExtendedCartan monomial(const Key& k, const Scalar& c = Scalar(1));
    static ExtendedCartan var(Var v, int e = 1);

    const std::map<Key, Scalar>& terms() const { return terms_; }

    ExtendedCartan& operator+=(const ExtendedCartan& o);
    ExtendedCartan& operator-=(const ExtendedCartan& o);
    ExtendedCartan& operator*=(const Scalar& s);
    friend ExtendedCartan operator+(ExtendedCartan a, const ExtendedCartan& b) { return a += b; }
    friend ExtendedCartan operator-(ExtendedCartan a, const ExtendedCartan& b) { return a -= b; }
    friend ExtendedCartan operator*(ExtendedCartan a, const Scalar& s) { return a *= s; }
    friend ExtendedCartan operator*(const Scalar& s, ExtendedCartan a) { return a *= s; }
    friend ExtendedCartan operator*(const ExtendedCartan& a, const ExtendedCartan& b);
    friend bool operator==(const ExtendedCartan& a, const ExtendedCartan& b) = default;

    std::string str() const;

private:
    std::map<Key, Scalar> terms_;
    void add(Key k, const Scalar& c);
};

// B0 -> [Ld;0], Z -> [L1;0] - [Ld;0] Dd^-1 D1
ExtendedCartan embed(const CartanElement& ce);
// Q -> Q, Dd -> q^-1 Q Ld^-1, D1 -> q Q L1^-1, Ld -> q^-1 Q Dd^-1, L1 -> q Q D1^-1
ExtendedCartan w_s(const ExtendedCartan& e);

struct WsReport {
    bool involution = false;        // W_s^2 = id on the five generators
    std::vector<std::string> names; // det, C1, C2, C3
    std::vector<bool> fixed;        // W_s(xi(C)) = xi(C)
    bool ok() const;
};
WsReport ws_extended_check();

// Points of P x P stored doubled: (2 l1, 2 l2), (2 m1, 2 m2).
struct PPoint {
    std::array<int, 2> lam2{};
    std::array<int, 2> mu2{};

    static PPoint integral(int l1, int l2, int m1, int m2) { return {{2 * l1, 2 * l2}, {2 * m1, 2 * m2}}; }
    bool in_P() const;
    bool operator==(const PPoint& o) const = default;
    std::string str() const;
};
// dot action s.(x1, x2) = (x2 - 1, x1 + 1) on the chosen components
PPoint dot_action(const PPoint& p, bool s_lam, bool s_mu);
// ((a,b),(c,d)) -> (a+c, b+d, [a-c], [b-d] - q^(b+d-a-c)[a-c]); throws when a+-c or b+-d is not integral
HighestWeight verma_of(const PPoint& p);
// src lies in W.dst and each moved component is dot-below the original one
bool weyl_hom_test(const PPoint& src, const PPoint& dst);

}  // namespace qsp
