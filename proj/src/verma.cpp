#include "qsp/verma.hpp"

#include "qsp/relations.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsp {

namespace {

Scalar q(int e) { return Scalar::q(e); }

const Scalar& require_mu(const HighestWeight& hw) {
    if (!hw.mu) throw std::invalid_argument("highest weight has no explicit mu");
    return *hw.mu;
}

void require_good(const HighestWeight& hw) {
    if (!hw.is_good()) throw std::invalid_argument("Verma module is not good: " + hw.str());
}

}  // namespace

// ---------------------------------------------------------------- HighestWeight

HighestWeight HighestWeight::from_mu(int kd, int k1, const Scalar& mu, const Scalar& zeta) {
    HighestWeight hw;
    hw.kd = kd;
    hw.k1 = k1;
    hw.beta = qbracket(mu, 0);
    hw.zeta = zeta;
    hw.mu = mu;
    return hw;
}

Scalar HighestWeight::omega() const { return q(-2) * (zeta - alpha_minus(kappa()) * beta); }

bool HighestWeight::is_good() const {
    if (!mu || mu->is_zero()) return false;
    if (mu->has_mu() || !mu->is_monomial()) return true;
    const GaussianRational& c = mu->num().terms()[0].c;
    GaussianRational i = GaussianRational::iota();
    return !(c == i || c == -i);
}

bool HighestWeight::operator==(const HighestWeight& o) const {
    return kd == o.kd && k1 == o.k1 && beta == o.beta && zeta == o.zeta;
}

std::string HighestWeight::str() const {
    return "M(" + std::to_string(kd) + ", " + std::to_string(k1) + ", " + beta.str() + ", " + zeta.str() + ")";
}

Scalar dominant_zeta(const Scalar& mu, int kappa, int i) {
    return qbracket(mu, kappa - 2 * i) - q(-kappa) * qbracket(mu, 0);
}

std::optional<int> dominance_index(const HighestWeight& hw) {
    if (!hw.mu) return std::nullopt;
    for (int i = 0; i <= hw.kappa(); ++i)
        if (hw.zeta == dominant_zeta(*hw.mu, hw.kappa(), i)) return i;
    return std::nullopt;
}

// ---------------------------------------------------------------- VermaVector

VermaVector VermaVector::basis(int f, int y, const Scalar& c) {
    VermaVector v;
    v.add(f, y, c);
    return v;
}

Scalar VermaVector::coeff(int f, int y) const {
    auto it = terms_.find({f, y});
    return it == terms_.end() ? Scalar() : it->second;
}

void VermaVector::add(int f, int y, const Scalar& c) {
    if (c.is_zero()) return;
    if (f < 0 || y < 0) throw std::invalid_argument("negative Verma basis index");
    auto [it, fresh] = terms_.emplace(std::make_pair(f, y), c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

VermaVector& VermaVector::operator+=(const VermaVector& o) {
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
    return *this;
}

VermaVector& VermaVector::operator-=(const VermaVector& o) {
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
    return *this;
}

VermaVector& VermaVector::operator*=(const Scalar& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
}

bool operator==(const VermaVector& a, const VermaVector& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto it = b.terms_.begin();
    for (const auto& [k, c] : a.terms_) {
        if (k != it->first || c != it->second) return false;
        ++it;
    }
    return true;
}

std::string VermaVector::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        auto [f, y] = it->first;
        std::string mono;
        if (f > 0) mono += f == 1 ? "B-1" : "B-1^" + std::to_string(f);
        if (y > 0) mono += std::string(mono.empty() ? "" : "*") + (y == 1 ? "Y" : "Y^" + std::to_string(y));
        mono += mono.empty() ? "v" : "*v";
        const Scalar& c = it->second;
        std::string cs;
        bool neg = false;
        if (c == Scalar(-1)) {
            neg = true;
        } else if (!c.is_one()) {
            cs = c.str();
            if (!(c.num().is_monomial() && c.den() == LaurentPoly(1))) cs = "(" + cs + ")";
            if (cs[0] == '-' && c.num().is_monomial() && c.den() == LaurentPoly(1)) {
                neg = true;
                cs = cs.substr(1);
            }
            cs += "·";
        }
        if (out.empty())
            out = (neg ? "-" : "") + cs + mono;
        else
            out += (neg ? " - " : " + ") + cs + mono;
    }
    return out;
}

// ---------------------------------------------------------------- action

VermaVector verma_act(const HighestWeight& hw, Gen g, const VermaVector& v) {
    VermaVector r;
    for (const auto& [key, c] : v.terms()) {
        PBWElement img = p_act(g, PBWIndex::make(key.first, key.second, 0, 0, 0, 0, 0, 0));
        for (const auto& [idx, d] : img.terms()) {
            if (idx.e() + idx.x() > 0) continue;
            Scalar s = c * d * hw.beta.pow(idx.b()) * hw.zeta.pow(idx.z()) * q(hw.kd * idx.kd() + hw.k1 * idx.k1());
            r.add(idx.f(), idx.y(), s);
        }
    }
    return r;
}

VermaVector verma_act(const HighestWeight& hw, const Element& el, const VermaVector& v) {
    VermaVector r;
    for (const auto& [w, c] : el.terms()) {
        VermaVector u = v;
        for (auto it = w.rbegin(); it != w.rend() && !u.is_zero(); ++it) u = verma_act(hw, *it, u);
        r += u * c;
    }
    return r;
}

VermaVector magical_apply(const HighestWeight& hw, int sign, Dir dir, const Scalar& eta, const VermaVector& v) {
    if (verma_act(hw, Gen::B0, v) != v * qbracket(eta, 0))
        throw std::invalid_argument("vector is not a B0-eigenvector of weight [eta;0]");
    return verma_act(hw, dir == Dir::E ? magical_E(sign, eta) : magical_F(sign, eta), v);
}

VermaVector weight_vector(const HighestWeight& hw, int a, int b) {
    const Scalar& mu = require_mu(hw);
    VermaVector v = VermaVector::hw();
    for (int k = 0; k < b; ++k) v = verma_act(hw, magical_F(-1, mu * q(k)), v);
    for (int k = 0; k < a; ++k) v = verma_act(hw, magical_F(1, mu * q(b - k)), v);
    return v;
}

// ---------------------------------------------------------------- weights

bool Weight::operator==(const Weight& o) const {
    if (dd != o.dd || d1 != o.d1 || b0 != o.b0 || z != o.z) return false;
    if (w && o.w) return *w == *o.w;
    return true;
}

std::pair<Scalar, Scalar> zw_eigenvalues(int kappa, const Scalar& eta, const Scalar& zeta, const Scalar& omega, int a,
                                         int b) {
    Scalar two = qint(2);
    Scalar ei = eta.inverse();
    Scalar z = q(a + b) * (ei * q(a - kappa - 1) * two * qint(a) - eta * q(b - kappa - 1) * two * qint(b) + zeta);
    Scalar w = q(-a - b) * (eta * q(kappa - a - 1) * two * qint(a) - ei * q(kappa - b - 1) * two * qint(b) + omega);
    return {z, w};
}

Weight closed_form_weight(const HighestWeight& hw, int a, int b) {
    const Scalar& mu = require_mu(hw);
    auto [z, w] = zw_eigenvalues(hw.kappa(), mu, hw.zeta, hw.omega(), a, b);
    return Weight{q(hw.kd - a - b), q(hw.k1 + a + b), qbracket(mu, b - a), z, w};
}

std::vector<std::pair<std::pair<int, int>, Weight>> weight_table(const HighestWeight& hw, int A, int B) {
    require_good(hw);
    std::vector<std::pair<std::pair<int, int>, Weight>> out;
    for (int a = 0; a <= A; ++a)
        for (int b = 0; b <= B; ++b) out.push_back({{a, b}, closed_form_weight(hw, a, b)});
    return out;
}

WeightResult verma_weight(const HighestWeight& hw, const VermaVector& v) {
    WeightResult res;
    if (v.is_zero()) {
        res.failed_at = "zero vector";
        return res;
    }
    const auto& [key, c0] = *v.terms().begin();
    auto eigen = [&](const Element& op, Scalar& out) {
        VermaVector u = verma_act(hw, op, v);
        out = u.coeff(key.first, key.second) / c0;
        return u == v * out;
    };
    Weight w;
    Scalar ws;
    const std::pair<const char*, Element> ops[] = {
        {"Dd", Element(Gen::Dd)}, {"D1", Element(Gen::D1)}, {"B0", Element(Gen::B0)}, {"Z", gen_Z()}, {"W", gen_W()}};
    Scalar* slots[] = {&w.dd, &w.d1, &w.b0, &w.z, &ws};
    for (std::size_t k = 0; k < 5; ++k) {
        if (!eigen(ops[k].second, *slots[k])) {
            res.failed_at = ops[k].first;
            return res;
        }
    }
    w.w = ws;
    res.weight = w;
    return res;
}

std::pair<Scalar, Scalar> epm_scalar(const HighestWeight& hw, int a, int b) {
    require_good(hw);
    const Scalar& mu = require_mu(hw);
    const int k = hw.kappa();
    Scalar mi = mu.inverse(), mu2 = mu * mu, mi2 = mi * mi;
    Scalar om = hw.omega();
    auto alpha_t = [&](int e) { return mu2 * q(e) + mi2 * q(-e); };  // mu^2 q^e + (mu^2 q^e)^-1
    Scalar gp = qint(2) * qint(k - a + 1);
    Scalar mp = qint(a - 1) * alpha_t(1 + k - 2 * a);
    Scalar gm = qint(2) * qint(k - b + 1);
    Scalar mm = qint(b - 1) * alpha_t(-(1 + k - 2 * b));
    Scalar cp = q(-1) * (gp - mp) - q(a - 1) * mi * hw.zeta - mu * q(1 - a) * om;
    Scalar cm = q(-1) * (gm - mm) + q(1 - b) * mi * om + mu * q(b - 1) * hw.zeta;
    return {cp, cm};
}

bool is_maximal(const HighestWeight& hw, const VermaVector& v) {
    return verma_act(hw, Gen::B1, v).is_zero() && verma_act(hw, gen_X(), v).is_zero();
}

// ---------------------------------------------------------------- homs

HighestWeight hom_source(const HighestWeight& dst, int kase, int i) {
    const Scalar& mu = require_mu(dst);
    const int k = dst.kappa();
    Scalar mi = mu.inverse();
    switch (kase) {
        case 1:
            return HighestWeight::from_mu(dst.kd - i - 1, dst.k1 + i + 1, mu * q(-(i + 1)),
                                          mu * q(1) * qint(k - i) + mi * q(2 * i + 1 - k) * qint(i + 2));
        case 2:
            return HighestWeight::from_mu(dst.kd - i - 1, dst.k1 + i + 1, mu * q(i + 1),
                                          -(mu * q(2 * i + 1 - k) * qint(i + 2)) - mi * q(1) * qint(k - i));
        case 3:
            return HighestWeight::from_mu(
                dst.k1 - 2, dst.kd + 2, mu * q(k - 2 * i),
                q(k + 2) * (mi * q(i - k) * qint(i + 2) - mu * q(-i) * qint(k - i + 2)));
        default: throw std::invalid_argument("hom case must be 1, 2 or 3");
    }
}

namespace {

// zeta conditions on the target in cases 1/3 and 2
Scalar zeta_case1(const Scalar& mu, int k, int i) {
    return mu * q(-i) * qint(k - i) - mu.inverse() * q(i - k) * qint(i);
}
Scalar zeta_case2(const Scalar& mu, int k, int i) {
    return mu * q(i - k) * qint(i) - mu.inverse() * q(-i) * qint(k - i);
}

}  // namespace

HomCase hom_exists(const HighestWeight& src, const HighestWeight& dst) {
    require_good(dst);
    if (src == dst) return {4, 0};
    const Scalar& mu = *dst.mu;
    const int k = dst.kappa();
    int i = dst.kd - src.kd - 1;
    if (i >= 0 && src.k1 == dst.k1 + i + 1) {
        if (dst.zeta == zeta_case1(mu, k, i) && src == hom_source(dst, 1, i)) return {1, i};
        if (dst.zeta == zeta_case2(mu, k, i) && src == hom_source(dst, 2, i)) return {2, i};
    }
    if (src.kd == dst.k1 - 2 && src.k1 == dst.kd + 2)
        for (int j = 0; j <= k; ++j)
            if (dst.zeta == zeta_case1(mu, k, j) && src == hom_source(dst, 3, j)) return {3, j};
    return {};
}

VermaVector hom_image(const HighestWeight& dst, int kase, int i) {
    switch (kase) {
        case 1: return weight_vector(dst, i + 1, 0);
        case 2: return weight_vector(dst, 0, i + 1);
        case 3: return weight_vector(dst, i + 1, dst.kappa() - i + 1);
        case 4: return VermaVector::hw();
        default: throw std::invalid_argument("hom case must be 1..4");
    }
}

// ---------------------------------------------------------------- finite-dimensional modules

Matrix FdModule::eval(const Element& el) const {
    Matrix r = mat_zero(dim, dim);
    for (const auto& [w, c] : el.terms()) {
        Matrix m = mat_identity(dim);
        for (Gen g : w) m = mat_mul(m, gen(g));
        r = mat_add(r, mat_scale(m, c));
    }
    return r;
}

std::vector<Scalar> FdModule::apply(const Element& el, const std::vector<Scalar>& v) const {
    std::vector<Scalar> r(dim);
    for (const auto& [w, c] : el.terms()) {
        std::vector<Scalar> u = v;
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            const Matrix& m = gen(*it);
            std::vector<Scalar> t(dim);
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = 0; j < dim; ++j)
                    if (!m[i][j].is_zero() && !u[j].is_zero()) t[i] += m[i][j] * u[j];
            u = std::move(t);
        }
        for (std::size_t i = 0; i < dim; ++i) r[i] += c * u[i];
    }
    return r;
}

std::size_t IrreducibleModule::index(int a, int b) const {
    return static_cast<std::size_t>(a * (hw.kappa() - i + 1) + b);
}

std::optional<IrreducibleModule> fd_quotient(const HighestWeight& hw) {
    require_good(hw);
    if (hw.kappa() < 0) return std::nullopt;
    auto dom = dominance_index(hw);
    if (!dom) return std::nullopt;
    const Scalar& mu = *hw.mu;
    const int k = hw.kappa(), i = *dom;
    IrreducibleModule L;
    L.hw = hw;
    L.i = i;
    for (int a = 0; a <= i; ++a)
        for (int b = 0; b <= k - i; ++b) L.labels.push_back({a, b});
    const std::size_t n = L.labels.size();
    L.dim = n;
    L.mod.dim = n;
    for (auto& m : L.mod.gens) m = mat_zero(n, n);
    auto& M = L.mod.gens;
    auto at = [](Gen g) { return static_cast<std::size_t>(g); };
    for (const auto& [a, b] : L.labels) {
        std::size_t col = L.index(a, b);
        Scalar eta = mu * q(b - a);
        Scalar ei = eta.inverse();
        Scalar norm = (eta + ei).inverse();
        auto [cp, cm] = epm_scalar(hw, a, b);
        // E+, E- lower a, b; F+, F- raise them inside the box
        if (a > 0) {
            Scalar ep = cp * qint(a);
            M[at(Gen::B1)][L.index(a - 1, b)][col] += ei * ep * norm;
        }
        if (b > 0) {
            Scalar em = cm * qint(b);
            M[at(Gen::B1)][L.index(a, b - 1)][col] += eta * em * norm;
        }
        if (a < i) M[at(Gen::Bm1)][L.index(a + 1, b)][col] += eta * norm;
        if (b < k - i) M[at(Gen::Bm1)][L.index(a, b + 1)][col] += ei * norm;
        M[at(Gen::B0)][col][col] = qbracket(eta, 0);
        M[at(Gen::Dd)][col][col] = q(hw.kd - a - b);
        M[at(Gen::DdInv)][col][col] = q(a + b - hw.kd);
        M[at(Gen::D1)][col][col] = q(hw.k1 + a + b);
        M[at(Gen::D1Inv)][col][col] = q(-hw.k1 - a - b);
    }
    return L;
}

// ---------------------------------------------------------------- BGG

BGGResolution bgg_resolution(const HighestWeight& hw) {
    require_good(hw);
    auto dom = dominance_index(hw);
    if (!dom) throw std::invalid_argument("highest weight is not dominant: " + hw.str());
    const int i = *dom, k = hw.kappa();
    BGGResolution r;
    r.top = hw;
    r.i = i;
    r.left = hom_source(hw, 3, i);
    r.mid_plus = hom_source(hw, 1, i);
    r.mid_minus = hom_source(hw, 2, k - i);
    r.image_plus = hom_image(hw, 1, i);
    r.image_minus = hom_image(hw, 2, k - i);
    r.image_left = hom_image(hw, 3, i);
    return r;
}

long bgg_euler(const BGGResolution& r, int N) {
    auto lv = [N](int offset) { return std::max(0L, static_cast<long>(N - offset + 1)); };
    const int k = r.top.kappa();
    return lv(0) - lv(r.i + 1) - lv(k - r.i + 1) + lv(k + 2);
}

// ---------------------------------------------------------------- radical quotients

Matrix verma_level_matrix(const HighestWeight& hw, const Element& el, int from_level, int to_level) {
    Matrix m = mat_zero(static_cast<std::size_t>(to_level + 1), static_cast<std::size_t>(from_level + 1));
    for (int f = 0; f <= from_level; ++f) {
        VermaVector img = verma_act(hw, el, VermaVector::basis(f, from_level - f));
        for (const auto& [key, c] : img.terms()) {
            if (key.first + key.second != to_level) throw std::logic_error("element does not map the level as stated");
            m[static_cast<std::size_t>(key.first)][static_cast<std::size_t>(f)] = c;
        }
    }
    return m;
}

std::string QuotientReport::character_str() const {
    if (sl2_character.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < sl2_character.size(); ++k)
        s += (k ? "+[" : "[") + std::to_string(sl2_character[k]) + "]";
    return s;
}

namespace {

// Split a Khat-character (level N has Khat-weight kappa - 2N) into U_q(sl2) strings.
bool sl2_decompose(int kappa, const std::vector<std::size_t>& dims, std::vector<int>& out) {
    std::map<int, long> mult;
    for (std::size_t N = 0; N < dims.size(); ++N) mult[kappa - 2 * static_cast<int>(N)] += static_cast<long>(dims[N]);
    for (;;) {
        int top = 0;
        bool any = false;
        for (auto it = mult.rbegin(); it != mult.rend(); ++it)
            if (it->second > 0) {
                top = it->first;
                any = true;
                break;
            }
        if (!any) return true;
        if (top < 0) return false;
        for (int w = top; w >= -top; w -= 2)
            if (--mult[w] < 0) return false;
        out.push_back(top + 1);
    }
}

}  // namespace

QuotientReport radical_quotient(const HighestWeight& hw, int max_depth) {
    QuotientReport rep;
    Element B1(Gen::B1), X = gen_X();
    Matrix Q = mat_identity(1);
    rep.level_dims.push_back(1);
    for (int N = 1; N <= max_depth; ++N) {
        Matrix stacked = mat_mul(Q, verma_level_matrix(hw, B1, N, N - 1));
        Matrix mx = mat_mul(Q, verma_level_matrix(hw, X, N, N - 1));
        stacked.insert(stacked.end(), mx.begin(), mx.end());
        const std::size_t cols = static_cast<std::size_t>(N + 1);
        // full rank after specializing q certifies full rank over Q(i)(q)
        bool full = false;
        for (const mpq_class& q0 : {mpq_class(7, 5), mpq_class(11, 3)}) {
            auto r = specialized_rank(stacked, q0);
            if (r) {
                full = *r == cols;
                break;
            }
        }
        if (full) {
            Q = mat_identity(cols);
            rep.level_dims.push_back(cols);
            continue;
        }
        auto piv = rref(stacked);
        stacked.resize(piv.size());
        if (piv.empty()) {
            rep.finite = true;
            break;
        }
        Q = std::move(stacked);
        rep.level_dims.push_back(piv.size());
    }
    if (rep.finite) rep.sl2_valid = sl2_decompose(hw.kappa(), rep.level_dims, rep.sl2_character);
    return rep;
}

HighestWeight exceptional_hw(int kappa, int n, const Scalar& zeta) {
    return HighestWeight::from_mu(kappa, 0, Scalar::iota() * q(n), zeta);
}

std::vector<ProbeEntry> exceptional_probe(int kappa, int n, int max_depth) {
    if (kappa < 0) throw std::invalid_argument("kappa must be nonnegative");
    std::vector<ProbeEntry> out;
    for (int j = 0; j <= kappa; ++j) {
        ProbeEntry e;
        e.j = j;
        e.zeta = Scalar::iota() * (q(n - j) * qint(kappa - j) + q(j - kappa - n) * qint(j));
        e.report = radical_quotient(exceptional_hw(kappa, n, e.zeta), max_depth);
        out.push_back(std::move(e));
    }
    return out;
}

// ---------------------------------------------------------------- B0 Jordan structure

namespace {

using Poly = std::vector<Scalar>;  // ascending coefficients

void trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

void make_monic(Poly& p) {
    trim(p);
    if (p.empty()) return;
    Scalar li = p.back().inverse();
    for (auto& c : p) c *= li;
}

Poly poly_rem(Poly a, const Poly& b) {
    trim(a);
    Scalar li = b.back().inverse();
    while (a.size() >= b.size()) {
        Scalar c = a.back() * li;
        std::size_t off = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) a[off + j] -= c * b[j];
        a.pop_back();
        trim(a);
    }
    return a;
}

Poly poly_div(Poly a, const Poly& b) {
    trim(a);
    Poly quot(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    Scalar li = b.back().inverse();
    while (a.size() >= b.size()) {
        Scalar c = a.back() * li;
        std::size_t off = a.size() - b.size();
        quot[off] = c;
        for (std::size_t j = 0; j < b.size(); ++j) a[off + j] -= c * b[j];
        a.pop_back();
        trim(a);
    }
    return quot;
}

Poly poly_gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    make_monic(a);
    return a;
}

Poly charpoly(const Matrix& A) {
    // Faddeev-LeVerrier
    const std::size_t n = A.size();
    Poly c(n + 1);
    c[n] = Scalar(1);
    Matrix Mk = mat_zero(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        Mk = mat_mul(A, Mk);
        for (std::size_t i = 0; i < n; ++i) Mk[i][i] += c[n - k + 1];
        Matrix AM = mat_mul(A, Mk);
        Scalar tr;
        for (std::size_t i = 0; i < n; ++i) tr += AM[i][i];
        c[n - k] = -tr / Scalar(static_cast<long>(k));
    }
    return c;
}

Matrix poly_eval(const Poly& p, const Matrix& A) {
    const std::size_t n = A.size();
    Matrix r = mat_zero(n, n);
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        r = mat_mul(r, A);
        for (std::size_t i = 0; i < n; ++i) r[i][i] += *it;
    }
    return r;
}

}  // namespace

JordanReport b0_jordan_check(const HighestWeight& hw, int level) {
    JordanReport rep;
    Element B0(Gen::B0);
    for (int N = 0; N <= level; ++N) {
        Matrix A = verma_level_matrix(hw, B0, N, N);
        JordanLevel jl;
        jl.level = N;
        jl.charpoly = charpoly(A);
        Poly d;
        for (std::size_t k = 1; k < jl.charpoly.size(); ++k)
            d.push_back(jl.charpoly[k] * Scalar(static_cast<long>(k)));
        jl.repeated_factor = poly_gcd(jl.charpoly, d);
        Poly sqfree = poly_div(jl.charpoly, jl.repeated_factor);
        jl.diagonalizable = mat_is_zero(poly_eval(sqfree, A));
        rep.diagonalizable = rep.diagonalizable && jl.diagonalizable;
        rep.levels.push_back(std::move(jl));
    }
    return rep;
}

}  // namespace qsp
