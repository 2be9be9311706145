#include "qsp/coideal.hpp"

#include <stdexcept>
#include <unordered_map>

namespace qsp {

std::string gen_name(Gen g) {
    switch (g) {
        case Gen::Bm1: return "B-1";
        case Gen::B0: return "B0";
        case Gen::B1: return "B1";
        case Gen::Dd: return "Dd";
        case Gen::DdInv: return "Dd^-1";
        case Gen::D1: return "D1";
        case Gen::D1Inv: return "D1^-1";
    }
    return "?";
}

Gen gen_inverse_of_d(Gen g) {
    switch (g) {
        case Gen::Dd: return Gen::DdInv;
        case Gen::DdInv: return Gen::Dd;
        case Gen::D1: return Gen::D1Inv;
        case Gen::D1Inv: return Gen::D1;
        default: throw std::invalid_argument("not a D generator");
    }
}

// ---------------------------------------------------------------- Element

Element::Element(const Scalar& s) {
    if (!s.is_zero()) terms_.emplace(Word{}, s);
}

Element::Element(Gen g) { terms_.emplace(Word{g}, Scalar(1)); }

Element Element::word(const Word& w, const Scalar& c) {
    Element e;
    e.add(w, c);
    return e;
}

void Element::add(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Element& Element::operator+=(const Element& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

Element& Element::operator*=(const Scalar& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, c] : terms_) c *= s;
    return *this;
}

Element operator*(const Element& a, const Element& b) {
    Element r;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add(w, ca * cb);
        }
    return r;
}

Element Element::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative power of an Element");
    Element r(1);
    for (int k = 0; k < e; ++k) r = r * *this;
    return r;
}

bool operator==(const Element& a, const Element& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (const auto& [w, c] : a.terms_) {
        if (w != it->first || c != it->second) return false;
        ++it;
    }
    return true;
}

static std::string coeff_prefix(const Scalar& c, const char* sep) {
    if (c.is_one()) return "";
    if (c == Scalar(-1)) return "-";
    std::string s = c.str();
    bool compound = !(c.num().is_monomial() && c.den() == LaurentPoly(1));
    if (compound) s = "(" + s + ")";
    return s + sep;
}

static std::string join_terms(const std::vector<std::string>& parts) {
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) {
        if (parts[i][0] == '-')
            out += " - " + parts[i].substr(1);
        else
            out += " + " + parts[i];
    }
    return out;
}

std::string Element::str() const {
    std::vector<std::string> parts;
    for (const auto& [w, c] : terms_) {
        if (w.empty()) {
            parts.push_back(c.num().is_monomial() || c.den() != LaurentPoly(1) ? c.str() : "(" + c.str() + ")");
            continue;
        }
        std::string ws;
        for (std::size_t i = 0; i < w.size(); ++i) ws += (i ? "*" : "") + gen_name(w[i]);
        parts.push_back(coeff_prefix(c, "*") + ws);
    }
    return join_terms(parts);
}

Element qcomm(const Element& a, const Element& b, const Scalar& p) { return a * b - p * (b * a); }

Element gen_X() { return qcomm(Gen::B0, Gen::B1, Scalar::q(-1)); }
Element gen_Y() { return qcomm(Gen::B0, Gen::Bm1, Scalar::q(-1)); }
Element gen_Z() { return qcomm(Gen::B1, gen_Y(), Scalar::q(-1)); }
Element gen_W() { return qcomm(Gen::Bm1, gen_X(), Scalar::q(-1)); }
Element gen_K() { return Element::word({Gen::Dd, Gen::D1Inv}); }
Element gen_Kinv() { return Element::word({Gen::DdInv, Gen::D1}); }

Element khat_bracket() {
    return (gen_K() - gen_Kinv()) * (Scalar(1) / (Scalar::q(1) - Scalar::q(-1)));
}

Element alias_expand(Alias a) {
    switch (a) {
        case Alias::X: return gen_X();
        case Alias::Y: return gen_Y();
        case Alias::Z: return gen_Z();
        case Alias::W: return gen_W();
        case Alias::Khat: return gen_K();
        case Alias::KhatInv: return gen_Kinv();
    }
    throw std::invalid_argument("unknown alias");
}

// ---------------------------------------------------------------- PBWIndex / PBWElement

bool PBWIndex::valid() const {
    for (int i = 0; i < 6; ++i)
        if (v[i] < 0) return false;
    return true;
}

std::string PBWIndex::str() const {
    static const char* names[8] = {"f", "y", "e", "x", "b", "z", "kd", "k1"};
    std::string s;
    for (int i = 0; i < 8; ++i) {
        if (v[i] == 0) continue;
        if (!s.empty()) s += ",";
        s += std::string(names[i]) + "=" + std::to_string(v[i]);
    }
    return "m(" + (s.empty() ? std::string("0") : s) + ")";
}

int degree(const PBWIndex& idx) { return -idx.f() - idx.y() + idx.e() + idx.x(); }

PBWElement PBWElement::basis(const PBWIndex& idx, const Scalar& c) {
    PBWElement r;
    r.add(idx, c);
    return r;
}

Scalar PBWElement::coeff(const PBWIndex& idx) const {
    auto it = terms_.find(idx);
    return it == terms_.end() ? Scalar() : it->second;
}

void PBWElement::add(const PBWIndex& idx, const Scalar& c) {
    if (c.is_zero() || !idx.valid()) return;
    auto it = terms_.find(idx);
    if (it == terms_.end()) {
        terms_.emplace(idx, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

PBWElement& PBWElement::operator+=(const PBWElement& o) {
    for (const auto& [i, c] : o.terms_) add(i, c);
    return *this;
}

PBWElement& PBWElement::operator-=(const PBWElement& o) {
    for (const auto& [i, c] : o.terms_) add(i, -c);
    return *this;
}

PBWElement& PBWElement::operator*=(const Scalar& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [i, c] : terms_) c *= s;
    return *this;
}

bool operator==(const PBWElement& a, const PBWElement& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (const auto& [i, c] : a.terms_) {
        if (!(i == it->first) || c != it->second) return false;
        ++it;
    }
    return true;
}

std::string PBWElement::str() const {
    std::vector<std::string> parts;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
        parts.push_back(coeff_prefix(it->second, "·") + it->first.str());
    return join_terms(parts);
}

// ---------------------------------------------------------------- the representation P

namespace {

Scalar qp(int e) { return Scalar::q(e); }

PBWIndex shift(const PBWIndex& idx, int df, int dy, int de, int dx, int db, int dz, int dkd, int dk1) {
    PBWIndex r = idx;
    r.v[0] += df;
    r.v[1] += dy;
    r.v[2] += de;
    r.v[3] += dx;
    r.v[4] += db;
    r.v[5] += dz;
    r.v[6] += dkd;
    r.v[7] += dk1;
    return r;
}

const Scalar& inv_qmq() {
    static const Scalar s = Scalar(1) / (Scalar::q(1) - Scalar::q(-1));
    return s;
}

PBWElement act_B1(const PBWIndex& p) {
    const int f = p.f(), y = p.y(), e = p.e(), x = p.x();
    PBWElement r;
    // line 1: q^{1-2y+2e+2x-f}[f]/(q-q^-1) p(f-1, kd+1, k1-1)
    r.add(shift(p, -1, 0, 0, 0, 0, 0, 1, -1), qp(1 - 2 * y + 2 * e + 2 * x - f) * qint(f) * inv_qmq());
    // line 2a: -q^{f+2y-2e-2x-1}[f]/(q-q^-1) p(f-1, kd-1, k1+1)
    r.add(shift(p, -1, 0, 0, 0, 0, 0, -1, 1), -(qp(f + 2 * y - 2 * e - 2 * x - 1) * qint(f) * inv_qmq()));
    // line 2b: q^{-y} p(e+1)
    r.add(shift(p, 0, 0, 1, 0, 0, 0, 0, 0), qp(-y));
    // line 3a: -q^{2y-2e-2x-3}[y][y-1] p(f+1, y-2, kd-1, k1+1)
    r.add(shift(p, 1, -2, 0, 0, 0, 0, -1, 1), -(qp(2 * y - 2 * e - 2 * x - 3) * qint(y) * qint(y - 1)));
    // line 3b: q^{-x-e}[y] p(y-1, z+1)
    r.add(shift(p, 0, -1, 0, 0, 0, 1, 0, 0), qp(-x - e) * qint(y));
    // line 4: -q^{-3e-x-2}((q^{2y}-1)[y-1][x] + [2][y][x]) p(y-1, e+1, x-1, kd-1, k1+1)
    r.add(shift(p, 0, -1, 1, -1, 0, 0, -1, 1),
          -(qp(-3 * e - x - 2) * ((qp(2 * y) - Scalar(1)) * qint(y - 1) * qint(x) + qint(2) * qint(y) * qint(x))));
    // line 5: -q^{-2e-2x-1}[e]([2][y] + (q^{2y}-1)[y-1]) p(y-1, e-1, x+1, kd-1, k1+1)
    r.add(shift(p, 0, -1, -1, 1, 0, 0, -1, 1),
          -(qp(-2 * e - 2 * x - 1) * qint(e) * (qint(2) * qint(y) + (qp(2 * y) - Scalar(1)) * qint(y - 1))));
    // line 6: (q^{-2e-x-1}(q^e-q^-e)[2][y] - q^{-3e-x-1}(q^{2y}-1)[y-1]) p(y-1, b+1, kd-1, k1+1)
    r.add(shift(p, 0, -1, 0, 0, 1, 0, -1, 1),
          qp(-2 * e - x - 1) * alpha_minus(e) * qint(2) * qint(y) -
              qp(-3 * e - x - 1) * (qp(2 * y) - Scalar(1)) * qint(y - 1));
    return r;
}

PBWElement act_B0(const PBWIndex& p) {
    const int f = p.f(), y = p.y(), e = p.e(), x = p.x();
    PBWElement r;
    r.add(shift(p, 0, 0, 0, 0, 1, 0, 0, 0), qp(x + y - e - f));
    r.add(shift(p, 1, -1, 0, 0, 0, 0, 0, 0), qp(y - f - 1) * qint(y));
    r.add(shift(p, -1, 1, 0, 0, 0, 0, 0, 0), qint(f));
    r.add(shift(p, 0, 0, -1, 1, 0, 0, 0, 0), qp(y - f) * qint(e));
    r.add(shift(p, 0, 0, 1, -1, 0, 0, 0, 0), qp(y - f - e + x - 1) * qint(x));
    return r;
}

PBWElement p_act_uncached(Gen g, const PBWIndex& p) {
    const int wt = p.e() + p.x() - p.f() - p.y();
    switch (g) {
        case Gen::Bm1: return PBWElement::basis(shift(p, 1, 0, 0, 0, 0, 0, 0, 0));
        case Gen::Dd: return PBWElement::basis(shift(p, 0, 0, 0, 0, 0, 0, 1, 0), qp(wt));
        case Gen::DdInv: return PBWElement::basis(shift(p, 0, 0, 0, 0, 0, 0, -1, 0), qp(-wt));
        case Gen::D1: return PBWElement::basis(shift(p, 0, 0, 0, 0, 0, 0, 0, 1), qp(-wt));
        case Gen::D1Inv: return PBWElement::basis(shift(p, 0, 0, 0, 0, 0, 0, 0, -1), qp(wt));
        case Gen::B0: return act_B0(p);
        case Gen::B1: return act_B1(p);
    }
    throw std::logic_error("bad generator");
}

struct KeyHash {
    std::size_t operator()(const std::pair<Gen, PBWIndex>& k) const {
        std::size_t h = static_cast<std::size_t>(k.first);
        for (int a : k.second.v) h = h * 1000003u + static_cast<std::size_t>(a + 4096);
        return h;
    }
};

struct KeyEq {
    bool operator()(const std::pair<Gen, PBWIndex>& a, const std::pair<Gen, PBWIndex>& b) const {
        return a.first == b.first && a.second.v == b.second.v;
    }
};

thread_local std::unordered_map<std::pair<Gen, PBWIndex>, PBWElement, KeyHash, KeyEq> p_cache;

}  // namespace

void clear_p_act_cache() { p_cache.clear(); }

PBWElement p_act(Gen g, const PBWIndex& idx) {
    if (g == Gen::Bm1 || g == Gen::Dd || g == Gen::DdInv || g == Gen::D1 || g == Gen::D1Inv)
        return p_act_uncached(g, idx);
    auto key = std::make_pair(g, idx);
    auto it = p_cache.find(key);
    if (it != p_cache.end()) return it->second;
    if (p_cache.size() > 2000000) p_cache.clear();
    PBWElement r = p_act_uncached(g, idx);
    p_cache.emplace(key, r);
    return r;
}

PBWElement act(Gen g, const PBWElement& v) {
    PBWElement r;
    for (const auto& [idx, c] : v.terms()) {
        PBWElement img = p_act(g, idx);
        for (const auto& [j, d] : img.terms()) r.add(j, c * d);
    }
    return r;
}

PBWElement act(const Word& w, const PBWElement& v) {
    PBWElement r = v;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        r = act(*it, r);
        if (r.is_zero()) break;
    }
    return r;
}

PBWElement act(const Element& el, const PBWElement& v) {
    PBWElement r;
    for (const auto& [w, c] : el.terms()) r += act(w, v) * c;
    return r;
}

PBWElement act_monomial(const PBWIndex& idx, const PBWElement& v) {
    static const Element X = gen_X(), Y = gen_Y(), Z = gen_Z();
    PBWElement r = v;
    auto rep = [&r](Gen g, int n) {
        for (int k = 0; k < n; ++k) r = act(g, r);
    };
    auto rep_el = [&r](const Element& el, int n) {
        for (int k = 0; k < n; ++k) r = act(el, r);
    };
    if (idx.k1() >= 0)
        rep(Gen::D1, idx.k1());
    else
        rep(Gen::D1Inv, -idx.k1());
    if (idx.kd() >= 0)
        rep(Gen::Dd, idx.kd());
    else
        rep(Gen::DdInv, -idx.kd());
    rep_el(Z, idx.z());
    rep(Gen::B0, idx.b());
    rep_el(X, idx.x());
    rep(Gen::B1, idx.e());
    rep_el(Y, idx.y());
    rep(Gen::Bm1, idx.f());
    return r;
}

PBWElement normal_form(const Element& el) { return act(el, PBWElement::unit()); }

PBWElement multiply(const PBWElement& a, const PBWElement& b) {
    PBWElement r;
    for (const auto& [idx, c] : a.terms()) r += act_monomial(idx, b) * c;
    return r;
}

bool check_identity(const Element& el) { return normal_form(el).is_zero(); }

Element monomial_element(const PBWIndex& idx) {
    Element r(1);
    r = r * Element(Gen::Bm1).pow(idx.f());
    r = r * gen_Y().pow(idx.y());
    r = r * Element(Gen::B1).pow(idx.e());
    r = r * gen_X().pow(idx.x());
    r = r * Element(Gen::B0).pow(idx.b());
    r = r * gen_Z().pow(idx.z());
    r = r * Element(idx.kd() >= 0 ? Gen::Dd : Gen::DdInv).pow(std::abs(idx.kd()));
    r = r * Element(idx.k1() >= 0 ? Gen::D1 : Gen::D1Inv).pow(std::abs(idx.k1()));
    return r;
}

Element to_element(const PBWElement& v) {
    Element r;
    for (const auto& [idx, c] : v.terms()) r += monomial_element(idx) * c;
    return r;
}

static Gen tau_gen(Gen g) {
    switch (g) {
        case Gen::Bm1: return Gen::B1;
        case Gen::B1: return Gen::Bm1;
        case Gen::B0: return Gen::B0;
        default: return gen_inverse_of_d(g);
    }
}

Element tau(const Element& el) {
    Element r;
    for (const auto& [w, c] : el.terms()) {
        Word t;
        t.reserve(w.size());
        for (Gen g : w) t.push_back(tau_gen(g));
        r += Element::word(t, c);
    }
    return r;
}

}  // namespace qsp
