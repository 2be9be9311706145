#include "qsp/center.hpp"

#include <sstream>
#include <stdexcept>

namespace qsp {

namespace {

Scalar q(int e) { return Scalar::q(e); }
Element G(Gen g) { return Element(g); }
Element comm(const Element& a, const Element& b) { return a * b - b * a; }

// 1/(q - q^-1)
Scalar inv_qdiff() { return (q(1) - q(-1)).inverse(); }

std::vector<CentralElement> build_central() {
    Element B1 = G(Gen::B1), Bm = G(Gen::Bm1), B0 = G(Gen::B0);
    Element Dd = G(Gen::Dd), D1 = G(Gen::D1), Ddi = G(Gen::DdInv), D1i = G(Gen::D1Inv);
    Element X = gen_X(), Y = gen_Y(), Z = gen_Z(), W = gen_W(), K = gen_K(), Ki = gen_Kinv();
    Scalar two = qint(2);
    Scalar c = inv_qdiff();
    Element C2 = (q(2) * K + q(-2) * Ki) * (c * c) - B0 * B0 * Ki - Z * B0 - Y * X +
                 (q(1) - q(-1)) * (Y * B1 * B0) + q(1) * (Bm * B1);
    return {
        {"det", Dd * D1},
        {"detInv", Ddi * D1i},
        {"C1", Z * Dd + q(-1) * two * (B0 * D1)},
        {"C2", C2},
        {"C3", q(2) * (W * D1) + q(1) * two * (B0 * Dd)},
    };
}

}  // namespace

std::vector<CentralElement> central_elements() {
    static const std::vector<CentralElement> els = build_central();
    return els;
}

const CentralElement& central_element(const std::string& name) {
    static const std::vector<CentralElement> els = build_central();
    for (const auto& e : els)
        if (e.name == name) return e;
    throw std::invalid_argument("unknown central element: " + name);
}

bool is_central(const Element& el) {
    for (Gen g : kCoreGens)
        if (!check_identity(comm(el, G(g)))) return false;
    return true;
}

std::string CentralCharacter::str() const {
    return "C1=" + c1.str() + ", C2=" + c2.str() + ", C3=" + c3.str() + ", det=" + det.str();
}

CentralCharacter central_character(const HighestWeight& hw) {
    auto i = dominance_index(hw);
    if (!i) throw std::invalid_argument("central_character needs a dominant highest weight: " + hw.str());
    const Scalar& mu = *hw.mu;
    const int k = hw.kappa();
    Scalar top = qbracket(mu, k - 2 * *i), n = qbracket(mu, 0);
    Scalar c = inv_qdiff();
    CentralCharacter r;
    r.c1 = q(hw.kd) * top + q(hw.k1 - 2) * n;
    r.c3 = q(hw.k1) * top + q(hw.kd + 2) * n;  // evaluated on the hw vector; not q^(kd-2)
    r.c2 = (q(2 + k) + q(-2 - k)) * c * c - top * n;
    r.det = q(hw.kd + hw.k1);
    return r;
}

CentralCharacter central_character(const Bipartition& bp) { return central_character(bipartition_hw(bp)); }

CentralCharacter central_action(const HighestWeight& hw) {
    auto scalar_on_hw = [&](const std::string& name) {
        VermaVector v = verma_act(hw, central_element(name).body, VermaVector::hw());
        Scalar s = v.coeff(0, 0);
        if (v != VermaVector::hw() * s) throw std::logic_error(name + " does not act by a scalar on the hw vector");
        return s;
    };
    return {scalar_on_hw("C1"), scalar_on_hw("C2"), scalar_on_hw("C3"), scalar_on_hw("det")};
}

bool character_matches_module(const IrreducibleModule& m, const CentralCharacter& c) {
    const std::pair<const char*, const Scalar*> items[] = {{"C1", &c.c1}, {"C2", &c.c2}, {"C3", &c.c3}, {"det", &c.det}};
    for (const auto& [name, s] : items) {
        Matrix a = m.mod.eval(central_element(name).body);
        if (!mat_is_zero(mat_add(a, mat_scale(mat_identity(m.dim), -*s)))) return false;
    }
    return true;
}

// ---------------------------------------------------------------- CartanElement

CartanElement::CartanElement(const Scalar& s) { add({0, 0, 0, 0}, s); }

CartanElement CartanElement::monomial(int b, int z, int kd, int k1, const Scalar& c) {
    if (b < 0 || z < 0) throw std::invalid_argument("B0 and Z exponents must be nonnegative");
    CartanElement r;
    r.add({b, z, kd, k1}, c);
    return r;
}

void CartanElement::add(const Key& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CartanElement CartanElement::from_pbw(const PBWElement& v) {
    CartanElement r;
    for (const auto& [idx, c] : v.terms()) {
        if (idx.level() > 0) throw std::invalid_argument("PBW element leaves U_0': " + idx.str());
        r.add({idx.b(), idx.z(), idx.kd(), idx.k1()}, c);
    }
    return r;
}

PBWElement CartanElement::to_pbw() const {
    PBWElement r;
    for (const auto& [k, c] : terms_) r.add(PBWIndex::make(0, 0, 0, 0, k[0], k[1], k[2], k[3]), c);
    return r;
}

CartanElement& CartanElement::operator+=(const CartanElement& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
}

CartanElement& CartanElement::operator-=(const CartanElement& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
}

CartanElement& CartanElement::operator*=(const Scalar& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
}

CartanElement operator*(const CartanElement& a, const CartanElement& b) {
    CartanElement r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            r.add({ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2], ka[3] + kb[3]}, ca * cb);
    return r;
}

CartanElement CartanElement::pow(int e) const {
    if (e < 0) throw std::invalid_argument("CartanElement::pow needs e >= 0");
    CartanElement r(1);
    for (int j = 0; j < e; ++j) r = r * *this;
    return r;
}

std::string CartanElement::str() const { return to_pbw().str(); }

CartanElement hc_project(const Element& el) {
    PBWElement nf = normal_form(el);
    CartanElement r;
    for (const auto& [idx, c] : nf.terms())
        if (idx.level() == 0) r += CartanElement::monomial(idx.b(), idx.z(), idx.kd(), idx.k1(), c);
    return r;
}

CartanElement xi_c2_expected() {
    Scalar c = inv_qdiff();
    CartanElement B0 = CartanElement::B0(), Z = CartanElement::Z();
    return (q(2) * CartanElement::K() + q(-2) * CartanElement::K(-1)) * (c * c) - B0 * B0 * CartanElement::K(-1) -
           Z * B0;
}

CartanElement w_gl2(const CartanElement& ce) {
    const CartanElement B0 = CartanElement::B0(), Z = CartanElement::Z();
    const CartanElement b0_img = Z + B0 * CartanElement::K(-1);
    const CartanElement z_img = -q(4) * (CartanElement::K() * Z) + (Scalar(1) - q(4)) * B0;
    CartanElement r;
    for (const auto& [k, c] : ce.terms()) {
        // Dd^a -> q^-2a D1^a, D1^b -> q^2b Dd^b
        CartanElement m = CartanElement::monomial(0, 0, k[3], k[2], c * q(2 * k[3] - 2 * k[2]));
        r += m * b0_img.pow(k[0]) * z_img.pow(k[1]);
    }
    return r;
}

// ---------------------------------------------------------------- ExtendedCartan

namespace {

int floor_div2(int k) { return k >= 0 ? k / 2 : -((-k + 1) / 2); }

}  // namespace

ExtendedCartan::ExtendedCartan(const Scalar& s) { add({0, 0, 0, 0, 0}, s); }

void ExtendedCartan::add(Key k, const Scalar& c) {
    if (c.is_zero()) return;
    // Q^2 = Dd D1 Ld L1
    int h = floor_div2(k[kQ]);
    for (int j = 0; j < 4; ++j) k[j] += h;
    k[kQ] -= 2 * h;
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ExtendedCartan ExtendedCartan::monomial(const Key& k, const Scalar& c) {
    ExtendedCartan r;
    r.add(k, c);
    return r;
}

ExtendedCartan ExtendedCartan::var(Var v, int e) {
    Key k{};
    k[v] = e;
    return monomial(k);
}

ExtendedCartan& ExtendedCartan::operator+=(const ExtendedCartan& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
}

ExtendedCartan& ExtendedCartan::operator-=(const ExtendedCartan& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
}

ExtendedCartan& ExtendedCartan::operator*=(const Scalar& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
}

ExtendedCartan operator*(const ExtendedCartan& a, const ExtendedCartan& b) {
    ExtendedCartan r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            ExtendedCartan::Key k;
            for (int j = 0; j < 5; ++j) k[j] = ka[j] + kb[j];
            r.add(k, ca * cb);
        }
    return r;
}

std::string ExtendedCartan::str() const {
    if (terms_.empty()) return "0";
    static const char* names[] = {"Dd", "D1", "Ld", "L1", "Q"};
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (int j = 0; j < 5; ++j) {
            if (k[j] == 0) continue;
            os << "*" << names[j];
            if (k[j] != 1) os << "^" << k[j];
        }
    }
    return os.str();
}

ExtendedCartan embed(const CartanElement& ce) {
    using E = ExtendedCartan;
    Scalar c = inv_qdiff();
    E ld = (E::var(E::kLd) - E::var(E::kLd, -1)) * c;
    E l1 = (E::var(E::kL1) - E::var(E::kL1, -1)) * c;
    E b0 = ld;
    E z = l1 - ld * E::monomial({-1, 1, 0, 0, 0});
    ExtendedCartan r;
    for (const auto& [k, s] : ce.terms()) {
        E m = E::monomial({k[2], k[3], 0, 0, 0}, s);
        for (int j = 0; j < k[0]; ++j) m = m * b0;
        for (int j = 0; j < k[1]; ++j) m = m * z;
        r += m;
    }
    return r;
}

ExtendedCartan w_s(const ExtendedCartan& e) {
    // generator images are monomials: exponent vectors and q-powers
    using Key = ExtendedCartan::Key;
    static const Key img[5] = {
        {0, 0, -1, 0, 1},  // Dd -> q^-1 Q Ld^-1
        {0, 0, 0, -1, 1},  // D1 -> q Q L1^-1
        {-1, 0, 0, 0, 1},  // Ld -> q^-1 Q Dd^-1
        {0, -1, 0, 0, 1},  // L1 -> q Q D1^-1
        {0, 0, 0, 0, 1},   // Q -> Q
    };
    static const int qexp[5] = {-1, 1, -1, 1, 0};
    ExtendedCartan r;
    for (const auto& [k, c] : e.terms()) {
        Key out{};
        int qe = 0;
        for (int j = 0; j < 5; ++j) {
            for (int t = 0; t < 5; ++t) out[t] += k[j] * img[j][t];
            qe += k[j] * qexp[j];
        }
        r += ExtendedCartan::monomial(out, c * q(qe));
    }
    return r;
}

bool WsReport::ok() const {
    if (!involution) return false;
    for (bool f : fixed)
        if (!f) return false;
    return true;
}

WsReport ws_extended_check() {
    WsReport rep;
    rep.involution = true;
    for (int v = 0; v < 5; ++v) {
        auto g = ExtendedCartan::var(static_cast<ExtendedCartan::Var>(v));
        if (w_s(w_s(g)) != g) rep.involution = false;
    }
    for (const char* name : {"det", "C1", "C2", "C3"}) {
        ExtendedCartan x = embed(hc_project(central_element(name).body));
        rep.names.push_back(name);
        rep.fixed.push_back(w_s(x) == x);
    }
    return rep;
}

// ---------------------------------------------------------------- Weyl orbits

namespace {

std::string half(int twice) {
    if (twice % 2 == 0) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

std::array<int, 2> dot2(const std::array<int, 2>& x) { return {x[1] - 2, x[0] + 2}; }

// x >= s.x in the dot order; equality when x1 - x2 = -1
bool dominates_reflection(const std::array<int, 2>& x) { return x[0] - x[1] >= -2; }

}  // namespace

bool PPoint::in_P() const {
    return (lam2[0] - lam2[1]) % 2 == 0 && (mu2[0] - mu2[1]) % 2 == 0;
}

std::string PPoint::str() const {
    return "((" + half(lam2[0]) + "," + half(lam2[1]) + "),(" + half(mu2[0]) + "," + half(mu2[1]) + "))";
}

PPoint dot_action(const PPoint& p, bool s_lam, bool s_mu) {
    PPoint r = p;
    if (s_lam) r.lam2 = dot2(p.lam2);
    if (s_mu) r.mu2 = dot2(p.mu2);
    return r;
}

HighestWeight verma_of(const PPoint& p) {
    if (!p.in_P()) throw std::invalid_argument("point outside P x P: " + p.str());
    const int a2 = p.lam2[0], b2 = p.lam2[1], c2 = p.mu2[0], d2 = p.mu2[1];
    if ((a2 + c2) % 2 != 0 || (b2 + d2) % 2 != 0)
        throw std::invalid_argument("point needs q^(1/2) for its Verma parameters: " + p.str());
    const int kd = (a2 + c2) / 2, k1 = (b2 + d2) / 2, n = (a2 - c2) / 2, m = (b2 - d2) / 2;
    return HighestWeight::from_mu(kd, k1, q(n), qint(m) - q(k1 - kd) * qint(n));
}

bool weyl_hom_test(const PPoint& src, const PPoint& dst) {
    if (!src.in_P() || !dst.in_P()) throw std::invalid_argument("weyl_hom_test needs points of P x P");
    for (bool sl : {false, true})
        for (bool sm : {false, true}) {
            if (dot_action(dst, sl, sm) != src) continue;
            if (sl && !dominates_reflection(dst.lam2)) continue;
            if (sm && !dominates_reflection(dst.mu2)) continue;
            return true;
        }
    return false;
}

}  // namespace qsp
