#pragma once

#include "qsp/qfield.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qsp {

enum class Gen : std::uint8_t { Bm1, B0, B1, Dd, DdInv, D1, D1Inv };

inline constexpr std::array<Gen, 7> kAllGens{Gen::Bm1, Gen::B0, Gen::B1, Gen::Dd, Gen::DdInv, Gen::D1, Gen::D1Inv};
// generators of the algebra in the sense of centrality checks
inline constexpr std::array<Gen, 5> kCoreGens{Gen::Bm1, Gen::B0, Gen::B1, Gen::Dd, Gen::D1};

std::string gen_name(Gen g);
Gen gen_inverse_of_d(Gen g);

using Word = std::vector<Gen>;

// Linear combination of words in the generators (free algebra element).
class Element {
public:
    Element() = default;
    Element(const Scalar& s);
    Element(long n) : Element(Scalar(n)) {}
    Element(Gen g);

    static Element word(const Word& w, const Scalar& c = Scalar(1));

    const std::map<Word, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element& operator*=(const Scalar& s);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const Element& a, const Element& b);
    friend Element operator*(Element a, const Scalar& s) { return a *= s; }
    friend Element operator*(const Scalar& s, Element a) { return a *= s; }
    Element operator-() const { return *this * Scalar(-1); }

    Element pow(int e) const;

    friend bool operator==(const Element& a, const Element& b);

    std::string str() const;

private:
    std::map<Word, Scalar> terms_;
    void add(const Word& w, const Scalar& c);
};

// [A,B]_p = AB - pBA
Element qcomm(const Element& a, const Element& b, const Scalar& p);

enum class Alias { X, Y, Z, W, Khat, KhatInv };

Element alias_expand(Alias a);
Element gen_X();
Element gen_Y();
Element gen_Z();
Element gen_W();
Element gen_K();
Element gen_Kinv();
// [Khat;0] = (Khat - Khat^-1)/(q - q^-1)
Element khat_bracket();

// m_{f,y,e,x,b,z,kd,k1} = B-1^f Y^y B1^e X^x B0^b Z^z Dd^kd D1^k1
struct PBWIndex {
    std::array<int, 8> v{};

    int& f() { return v[0]; }
    int& y() { return v[1]; }
    int& e() { return v[2]; }
    int& x() { return v[3]; }
    int& b() { return v[4]; }
    int& z() { return v[5]; }
    int& kd() { return v[6]; }
    int& k1() { return v[7]; }
    int f() const { return v[0]; }
    int y() const { return v[1]; }
    int e() const { return v[2]; }
    int x() const { return v[3]; }
    int b() const { return v[4]; }
    int z() const { return v[5]; }
    int kd() const { return v[6]; }
    int k1() const { return v[7]; }

    static PBWIndex make(int f, int y, int e, int x, int b, int z, int kd, int k1) {
        return PBWIndex{{f, y, e, x, b, z, kd, k1}};
    }
    bool valid() const;
    int level() const { return v[0] + v[1] + v[2] + v[3]; }

    friend bool operator<(const PBWIndex& a, const PBWIndex& b) { return a.v < b.v; }
    friend bool operator==(const PBWIndex& a, const PBWIndex& b) { return a.v == b.v; }

    // "m(e=1,b=1)"; the unit is "m(0)"
    std::string str() const;
};

int degree(const PBWIndex& idx);

// Sparse vector in the representation P, identified with U_q' via p_idx <-> m_idx.
class PBWElement {
public:
    PBWElement() = default;
    static PBWElement basis(const PBWIndex& idx, const Scalar& c = Scalar(1));
    static PBWElement unit() { return basis(PBWIndex{}); }

    const std::map<PBWIndex, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coeff(const PBWIndex& idx) const;

    void add(const PBWIndex& idx, const Scalar& c);
    PBWElement& operator+=(const PBWElement& o);
    PBWElement& operator-=(const PBWElement& o);
    PBWElement& operator*=(const Scalar& s);
    friend PBWElement operator+(PBWElement a, const PBWElement& b) { return a += b; }
    friend PBWElement operator-(PBWElement a, const PBWElement& b) { return a -= b; }
    friend PBWElement operator*(PBWElement a, const Scalar& s) { return a *= s; }

    friend bool operator==(const PBWElement& a, const PBWElement& b);
    friend bool operator!=(const PBWElement& a, const PBWElement& b) { return !(a == b); }

    // terms in descending index order, e.g. "q^-1·m(e=1,b=1) + m(x=1)"
    std::string str() const;

private:
    std::map<PBWIndex, Scalar> terms_;
};

// Image of p_idx under a generator, transcribed from the action formulas on P.
PBWElement p_act(Gen g, const PBWIndex& idx);

PBWElement act(Gen g, const PBWElement& v);
// rightmost letter acts first
PBWElement act(const Word& w, const PBWElement& v);
PBWElement act(const Element& el, const PBWElement& v);
// m_idx . v
PBWElement act_monomial(const PBWIndex& idx, const PBWElement& v);

PBWElement normal_form(const Element& el);
PBWElement multiply(const PBWElement& a, const PBWElement& b);
bool check_identity(const Element& el);

// the PBW monomial as a word expression (aliases expanded)
Element monomial_element(const PBWIndex& idx);
Element to_element(const PBWElement& v);

// B_i -> B_-i, D -> D^-1, order preserved
Element tau(const Element& el);

void clear_p_act_cache();

}  // namespace qsp
