#include "qsp/tensor.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>

namespace qsp {

namespace {

Scalar q(int e) { return Scalar::q(e); }

using Terms = std::map<TensorVector::Key, Scalar>;

void add_term(Terms& t, const TensorVector::Key& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t.try_emplace(k, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
}

void add_terms(Terms& t, const Terms& o, const Scalar& s = Scalar(1)) {
    for (const auto& [k, c] : o) add_term(t, k, s * c);
}

// ---------------------------------------------------------------- single factor

// column k lists the image of e_k
using VecOp = std::array<std::vector<std::pair<int, Scalar>>, 4>;

struct EdgeInfo {
    int src;
    int dst;
};

// edge labels 1, 0, -1 along -1bar -> -dbar -> d -> 1
EdgeInfo edge(int i) {
    switch (i) {
        case 1: return {kBar1, kBarD};
        case 0: return {kBarD, kDia};
        case -1: return {kDia, kOne};
        default: throw std::invalid_argument("edge label must be -1, 0 or 1");
    }
}

VecOp op_F(int i) {
    VecOp op;
    auto e = edge(i);
    op[e.src].push_back({e.dst, Scalar(1)});
    return op;
}

VecOp op_E(int i) {
    VecOp op;
    auto e = edge(i);
    op[e.dst].push_back({e.src, Scalar(1)});
    return op;
}

VecOp op_diag(const std::array<int, 4>& exps) {
    VecOp op;
    for (int k = 0; k < 4; ++k) op[k].push_back({k, q(exps[k])});
    return op;
}

// K_i^p = (D_src D_dst^-1)^p
VecOp op_K(int i, int p) {
    auto e = edge(i);
    std::array<int, 4> ex{};
    ex[e.src] += p;
    ex[e.dst] -= p;
    return op_diag(ex);
}

VecOp compose(const VecOp& a, const VecOp& b) {
    VecOp r;
    for (int k = 0; k < 4; ++k) {
        std::map<int, Scalar> acc;
        for (const auto& [j, c] : b[k])
            for (const auto& [l, d] : a[j]) acc[l] += c * d;
        for (const auto& [l, c] : acc)
            if (!c.is_zero()) r[k].push_back({l, c});
    }
    return r;
}

VecOp sum(const VecOp& a, const VecOp& b, const Scalar& s = Scalar(1)) {
    VecOp r;
    for (int k = 0; k < 4; ++k) {
        std::map<int, Scalar> acc;
        for (const auto& [l, c] : a[k]) acc[l] += c;
        for (const auto& [l, c] : b[k]) acc[l] += s * c;
        for (const auto& [l, c] : acc)
            if (!c.is_zero()) r[k].push_back({l, c});
    }
    return r;
}

struct VecOps {
    VecOp b1, bm1, b0;
    VecOp k1inv, km1inv, k0inv;
    VecOp em1_k1inv, e1_km1inv;
    VecOp dd, ddinv, d1, d1inv;

    VecOps() {
        k1inv = op_K(1, -1);
        km1inv = op_K(-1, -1);
        k0inv = op_K(0, -1);
        em1_k1inv = compose(op_E(-1), k1inv);
        e1_km1inv = compose(op_E(1), km1inv);
        b1 = sum(op_F(1), em1_k1inv);
        bm1 = sum(op_F(-1), e1_km1inv);
        b0 = sum(op_F(0), compose(op_E(0), k0inv), q(-1));
        dd = op_diag({0, 1, 1, 0});
        ddinv = op_diag({0, -1, -1, 0});
        d1 = op_diag({1, 0, 0, 1});
        d1inv = op_diag({-1, 0, 0, -1});
    }

    const VecOp& of(Gen g) const {
        switch (g) {
            case Gen::B1: return b1;
            case Gen::Bm1: return bm1;
            case Gen::B0: return b0;
            case Gen::Dd: return dd;
            case Gen::DdInv: return ddinv;
            case Gen::D1: return d1;
            case Gen::D1Inv: return d1inv;
        }
        throw std::logic_error("bad generator");
    }
};

const VecOps& vec_ops() {
    static const VecOps ops;
    return ops;
}

Terms apply_head(const Matrix& m, const Terms& in) {
    Terms out;
    for (const auto& [k, c] : in) {
        const std::size_t j = static_cast<std::size_t>(k[0]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i][j].is_zero()) continue;
            TensorVector::Key nk = k;
            nk[0] = static_cast<int>(i);
            add_term(out, nk, c * m[i][j]);
        }
    }
    return out;
}

bool is_d_gen(Gen g) { return g == Gen::Dd || g == Gen::DdInv || g == Gen::D1 || g == Gen::D1Inv; }

// q-exponents of the diagonal operators on e_k
constexpr std::array<int, 4> kDdExp{0, 1, 1, 0};
constexpr std::array<int, 4> kD1Exp{1, 0, 0, 1};
constexpr std::array<int, 4> kKhatExp{-1, 1, 1, -1};

int kinv_exp(Gen g, int k) {
    const int i = g == Gen::B1 ? 1 : g == Gen::Bm1 ? -1 : 0;
    auto e = edge(i);
    return (k == e.dst) - (k == e.src);
}

int d_exp(Gen g, int k) {
    switch (g) {
        case Gen::Dd: return kDdExp[k];
        case Gen::DdInv: return -kDdExp[k];
        case Gen::D1: return kD1Exp[k];
        case Gen::D1Inv: return -kD1Exp[k];
        default: return 0;
    }
}

// The iterated coproduct, unrolled over the factors: with Delta(B) = B (x) K^-1 + 1 (x) B + (Khat^s - 1) (x) C,
// B acts on H (x) V^(x)d as B_H (x) K^-1...K^-1 plus, for each factor j,
// 1 (x) B_j (x) K^-1... and (Khat^s_(<j) - 1) (x) C_j (x) K^-1...
struct Actor {
    const FdModule* head;
    std::size_t off;
    Matrix khat_head[2];  // Khat, Khat^-1 on H

    Terms act(Gen g, const Terms& in) const {
        Terms out;
        if (in.empty()) return out;
        const VecOps& V = vec_ops();
        const bool dg = is_d_gen(g);
        const VecOp* corr = g == Gen::B1 ? &V.em1_k1inv : g == Gen::Bm1 ? &V.e1_km1inv : nullptr;
        const int s = g == Gen::B1 ? 1 : -1;
        std::vector<int> suffix, prefix;
        for (const auto& [key, c] : in) {
            const std::size_t n = key.size() - off;
            if (dg) {
                int e = 0;
                for (std::size_t j = 0; j < n; ++j) e += d_exp(g, key[off + j]);
                Scalar f = c.shifted(e);
                if (head) {
                    Terms one{{key, f}};
                    add_terms(out, apply_head(head->gen(g), one));
                } else {
                    add_term(out, key, f);
                }
                continue;
            }
            suffix.assign(n + 1, 0);
            for (std::size_t j = n; j-- > 0;) suffix[j] = suffix[j + 1] + kinv_exp(g, key[off + j]);
            if (head) {
                Terms one{{key, c.shifted(suffix[0])}};
                add_terms(out, apply_head(head->gen(g), one));
            }
            prefix.assign(n + 1, 0);
            for (std::size_t j = 0; j < n; ++j) prefix[j + 1] = prefix[j] + s * kKhatExp[key[off + j]];
            for (std::size_t j = 0; j < n; ++j) {
                const int k = key[off + j];
                const Scalar tail = c.shifted(suffix[j + 1]);
                for (const auto& [l, b] : V.of(g)[k]) {
                    TensorVector::Key nk = key;
                    nk[off + j] = l;
                    add_term(out, nk, tail * b);
                }
                if (!corr) continue;
                for (const auto& [l, cc] : (*corr)[k]) {
                    TensorVector::Key nk = key;
                    nk[off + j] = l;
                    const Scalar base = tail * cc;
                    if (head) {
                        Terms one{{nk, base.shifted(prefix[j])}};
                        add_terms(out, apply_head(khat_head[s > 0 ? 0 : 1], one));
                        add_term(out, nk, -base);
                    } else if (prefix[j] != 0) {
                        add_term(out, nk, base.shifted(prefix[j]) - base);
                    }
                }
            }
        }
        return out;
    }
};

Actor make_actor(const TensorVector& v, const FdModule* head) {
    if (v.headed() && !head) throw std::invalid_argument("headed tensor needs its module");
    if (!v.headed() && head) throw std::invalid_argument("module given for an unheaded tensor");
    Actor a{head, v.headed() ? std::size_t{1} : std::size_t{0}, {}};
    if (head) {
        a.khat_head[0] = mat_mul(head->gen(Gen::Dd), head->gen(Gen::D1Inv));
        a.khat_head[1] = mat_mul(head->gen(Gen::DdInv), head->gen(Gen::D1));
    }
    return a;
}

TensorVector with_terms(const TensorVector& like, Terms t) {
    return TensorVector::from_terms(like.d(), like.headed(), std::move(t));
}

}  // namespace

std::string vec_index_name(int k) {
    static const char* names[] = {"-1", "-d", "d", "1"};
    if (k < 0 || k > 3) throw std::out_of_range("basis index of V");
    return names[k];
}

// ---------------------------------------------------------------- TensorVector

TensorVector TensorVector::basis(const Key& tuple, const Scalar& c) {
    TensorVector v(static_cast<int>(tuple.size()));
    for (int k : tuple)
        if (k < 0 || k > 3) throw std::out_of_range("basis index of V");
    v.add(tuple, c);
    return v;
}

TensorVector TensorVector::headed_basis(int head, const Key& tuple, const Scalar& c) {
    TensorVector v(static_cast<int>(tuple.size()), true);
    Key k{head};
    k.insert(k.end(), tuple.begin(), tuple.end());
    v.add(k, c);
    return v;
}

TensorVector TensorVector::from_module(const std::vector<Scalar>& v) {
    TensorVector r(0, true);
    for (std::size_t j = 0; j < v.size(); ++j) r.add({static_cast<int>(j)}, v[j]);
    return r;
}

TensorVector TensorVector::from_terms(int d, bool headed, std::map<Key, Scalar> terms) {
    TensorVector r(d, headed);
    r.terms_ = std::move(terms);
    return r;
}

Scalar TensorVector::coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar() : it->second;
}

void TensorVector::add(const Key& k, const Scalar& c) {
    if (k.size() != static_cast<std::size_t>(d_ + (headed_ ? 1 : 0)))
        throw std::invalid_argument("tensor key has the wrong length");
    add_term(terms_, k, c);
}

void TensorVector::check_compatible(const TensorVector& o) const {
    if (d_ != o.d_ || headed_ != o.headed_) throw std::invalid_argument("tensor shapes differ");
}

TensorVector& TensorVector::operator+=(const TensorVector& o) {
    check_compatible(o);
    add_terms(terms_, o.terms_);
    return *this;
}

TensorVector& TensorVector::operator-=(const TensorVector& o) {
    check_compatible(o);
    add_terms(terms_, o.terms_, Scalar(-1));
    return *this;
}

TensorVector& TensorVector::operator*=(const Scalar& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
}

bool operator==(const TensorVector& a, const TensorVector& b) {
    if (a.d_ != b.d_ || a.headed_ != b.headed_ || a.terms_.size() != b.terms_.size()) return false;
    for (auto i = a.terms_.begin(), j = b.terms_.begin(); i != a.terms_.end(); ++i, ++j)
        if (i->first != j->first || i->second != j->second) return false;
    return true;
}

TensorVector tensor(const TensorVector& a, const TensorVector& b) {
    if (b.headed_) throw std::invalid_argument("right tensor factor cannot carry a module");
    TensorVector r(a.d_ + b.d_, a.headed_);
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            TensorVector::Key k = ka;
            k.insert(k.end(), kb.begin(), kb.end());
            r.add(k, ca * cb);
        }
    return r;
}

std::string TensorVector::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) s += " + ";
        first = false;
        if (!c.is_one()) s += "(" + c.str() + ")";
        s += "[";
        for (std::size_t i = 0; i < k.size(); ++i) {
            if (headed_ && i == 0) {
                s += "h" + std::to_string(k[0]) + "|";
                continue;
            }
            if (i > (headed_ ? 1u : 0u)) s += ",";
            s += vec_index_name(k[i]);
        }
        s += "]";
    }
    return s;
}

TensorVector vec(int k, const Scalar& c) { return TensorVector::basis({k}, c); }

TensorVector funny_x(int sign, int n) { return vec(kBarD) + vec(kDia, Scalar(sign) * q(n)); }

TensorVector funny_y(int sign, int n) { return vec(kBar1) + vec(kOne, Scalar(sign) * q(n)); }

TensorVector funny_eta(int sign, int n) {
    return q(-1) * tensor(funny_y(sign, n), funny_x(sign, n)) - tensor(funny_x(sign, n), funny_y(sign, n - 2));
}

// ---------------------------------------------------------------- coideal action

TensorVector coideal_act(Gen g, const TensorVector& v, const FdModule* head) {
    Actor a = make_actor(v, head);
    return with_terms(v, a.act(g, v.terms()));
}

TensorVector coideal_act(const Element& el, const TensorVector& v, const FdModule* head) {
    Actor a = make_actor(v, head);
    Terms out;
    for (const auto& [w, c] : el.terms()) {
        Terms t = v.terms();
        for (auto it = w.rbegin(); it != w.rend() && !t.empty(); ++it) t = a.act(*it, t);
        add_terms(out, t, c);
    }
    return with_terms(v, std::move(out));
}

// ---------------------------------------------------------------- Hecke algebra

HeckeWord::HeckeWord(const Scalar& s) { add({}, s); }

HeckeWord HeckeWord::gen(int i) {
    if (i < 0) throw std::out_of_range("Hecke letter must be nonnegative");
    HeckeWord h;
    h.add({i}, Scalar(1));
    return h;
}

void HeckeWord::add(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(w, c);
    if (fresh) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

int HeckeWord::max_letter() const {
    int m = -1;
    for (const auto& [w, c] : terms_)
        for (int l : w) m = std::max(m, l);
    return m;
}

HeckeWord& HeckeWord::operator+=(const HeckeWord& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

HeckeWord& HeckeWord::operator-=(const HeckeWord& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

HeckeWord& HeckeWord::operator*=(const Scalar& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, c] : terms_) c *= s;
    return *this;
}

HeckeWord operator*(const HeckeWord& a, const HeckeWord& b) {
    HeckeWord r;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) {
            HeckeWord::Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add(w, ca * cb);
        }
    return r;
}

std::string HeckeWord::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) s += " + ";
        first = false;
        if (w.empty()) {
            s += c.str();
            continue;
        }
        if (!c.is_one()) s += "(" + c.str() + ")";
        for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "*H" : "H") + std::to_string(w[i]);
    }
    return s;
}

TensorVector hecke_act(int letter, const TensorVector& v) {
    if (v.headed()) throw std::invalid_argument("Hecke action needs a pure tensor power");
    if (letter < 0 || letter >= v.d())
        throw std::out_of_range("Hecke letter H" + std::to_string(letter) + " on d = " + std::to_string(v.d()));
    Terms out;
    const Scalar cross = q(-1) - q(1);
    for (const auto& [k, c] : v.terms()) {
        TensorVector::Key nk = k;
        if (letter == 0) {
            nk[0] = 3 - k[0];
            add_term(out, nk, c);
            continue;
        }
        const std::size_t i = static_cast<std::size_t>(letter - 1);
        const int a = k[i], b = k[i + 1];
        if (a == b) {
            add_term(out, k, c.shifted(-1));
            continue;
        }
        std::swap(nk[i], nk[i + 1]);
        add_term(out, nk, c);
        // a path runs from e_b to e_a
        if (a > b) add_term(out, k, c * cross);
    }
    return with_terms(v, std::move(out));
}

TensorVector hecke_act(const HeckeWord& w, const TensorVector& v) {
    TensorVector r(v.d(), v.headed());
    for (const auto& [word, c] : w.terms()) {
        TensorVector t = v;
        for (auto it = word.rbegin(); it != word.rend() && !t.is_zero(); ++it) t = hecke_act(*it, t);
        r += t * c;
    }
    return r;
}

HeckeWord jucys_murphy_element(int i) {
    if (i < 1) throw std::out_of_range("Jucys-Murphy index starts at 1");
    HeckeWord j = HeckeWord::gen(0);
    for (int k = 2; k <= i; ++k) j = HeckeWord::gen(k - 1) * j * HeckeWord::gen(k - 1);
    return j;
}

TensorVector jucys_murphy(int i, const TensorVector& v) {
    if (i < 1 || i > v.d()) throw std::out_of_range("Jucys-Murphy index out of range");
    return hecke_act(jucys_murphy_element(i), v);
}

// ---------------------------------------------------------------- bipartitions

std::string Bipartition::str() const {
    return "((" + std::to_string(l1) + "," + std::to_string(l2) + "),(" + std::to_string(m1) + "," +
           std::to_string(m2) + "))";
}

std::vector<Bipartition> two_row_bipartitions(int d) {
    std::vector<Bipartition> out;
    for (int a = d; a >= 0; --a)
        for (int l2 = 0; 2 * l2 <= a; ++l2)
            for (int m2 = 0; 2 * m2 <= d - a; ++m2) out.push_back({a - l2, l2, d - a - m2, m2});
    return out;
}

HighestWeight bipartition_hw(const Bipartition& bp) {
    if (!bp.valid()) throw std::invalid_argument("not a two-row bipartition: " + bp.str());
    const int kd = bp.l1 + bp.m1, k1 = bp.l2 + bp.m2, n = bp.l1 - bp.m1;
    Scalar zeta = qint(bp.l2 - bp.m2) - q(k1 - kd) * qint(n);
    return HighestWeight::from_mu(kd, k1, q(n), zeta);
}

Weight bipartition_weight(const Bipartition& bp) {
    HighestWeight hw = bipartition_hw(bp);
    const int n = bp.l1 - bp.m1;
    return Weight{q(hw.kd), q(hw.k1), qint(n), hw.zeta, q(-2) * qint(bp.l2 - bp.m2) - q(hw.kappa() - 2) * qint(n)};
}

long dim_L(const Bipartition& bp) { return static_cast<long>(bp.l1 - bp.l2 + 1) * (bp.m1 - bp.m2 + 1); }

// ---------------------------------------------------------------- quantum wedges

ParityPath special_path(int s, int t) {
    ParityPath p(static_cast<std::size_t>(s), 1);
    p.insert(p.end(), static_cast<std::size_t>(t), -1);
    return p;
}

bool valid_path(const ParityPath& p) {
    return std::all_of(p.begin(), p.end(), [](int s) { return s == 1 || s == -1; });
}

TensorVector lambda_wedge(const ParityPath& path) {
    if (!valid_path(path)) throw std::invalid_argument("parity path steps must be +1 or -1");
    TensorVector v = TensorVector::unit();
    int s = 0, t = 0;
    for (int sign : path) {
        // ±n is the B0-weight index s - t of the previous step
        v = tensor(v, funny_eta(sign, sign * (s - t)));
        (sign > 0 ? s : t)++;
    }
    return v;
}

std::vector<Box> path_filling(const ParityPath& path) {
    if (!valid_path(path)) throw std::invalid_argument("parity path steps must be +1 or -1");
    std::vector<Box> boxes;
    int s = 0, t = 0;
    for (int sign : path) {
        int comp = sign > 0 ? 0 : 1;
        int& c = sign > 0 ? s : t;
        boxes.push_back({comp, 0, c});
        boxes.push_back({comp, 1, c});
        ++c;
    }
    return boxes;
}

std::vector<Box> special_filling(const Bipartition& bp) {
    if (!bp.valid()) throw std::invalid_argument("not a two-row bipartition: " + bp.str());
    std::vector<Box> boxes = path_filling(special_path(bp.l2, bp.m2));
    for (int c = bp.l2; c < bp.l1; ++c) boxes.push_back({0, 0, c});
    for (int c = bp.m2; c < bp.m1; ++c) boxes.push_back({1, 0, c});
    return boxes;
}

std::vector<Scalar> content_spectrum(const std::vector<Box>& boxes) {
    std::vector<Scalar> out;
    for (const auto& b : boxes) out.push_back(Scalar(b.comp == 0 ? 1 : -1) * q(-2 * (b.col - b.row)));
    return out;
}

TensorVector omega(const Bipartition& bp) {
    if (!bp.valid()) throw std::invalid_argument("not a two-row bipartition: " + bp.str());
    const int s = bp.l1 - bp.l2, t = bp.m1 - bp.m2, r = bp.l2 - bp.m2;
    TensorVector v = lambda_wedge(special_path(bp.l2, bp.m2));
    for (int j = 0; j < s; ++j) v = tensor(v, funny_x(1, r + j));
    for (int j = 0; j < t; ++j) v = tensor(v, funny_x(-1, -r - s + j));
    return v;
}

bool is_maximal(const TensorVector& v, const FdModule* head) {
    return coideal_act(Gen::B1, v, head).is_zero() && coideal_act(gen_X(), v, head).is_zero();
}

WeightResult weight_of(const TensorVector& v, const FdModule* head) {
    WeightResult res;
    if (v.is_zero()) {
        res.failed_at = "zero vector";
        return res;
    }
    const auto& [key, c0] = *v.terms().begin();
    auto eigen = [&](const Element& op, Scalar& out) {
        TensorVector u = coideal_act(op, v, head);
        out = u.coeff(key) / c0;
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

std::optional<std::vector<Scalar>> jm_eigenvalues(const TensorVector& v) {
    if (v.is_zero()) return std::nullopt;
    const auto& [key, c0] = *v.terms().begin();
    std::vector<Scalar> out;
    // J_i = H_(i-1) J_(i-1) H_(i-1) applied without expanding the word
    for (int i = 1; i <= v.d(); ++i) {
        TensorVector u = v;
        for (int k = i - 1; k >= 1; --k) u = hecke_act(k, u);
        u = hecke_act(0, u);
        for (int k = 1; k <= i - 1; ++k) u = hecke_act(k, u);
        Scalar ev = u.coeff(key) / c0;
        if (u != v * ev) return std::nullopt;
        out.push_back(ev);
    }
    return out;
}

// ---------------------------------------------------------------- Specht modules

long specht_dim(const Bipartition& bp) {
    if (!bp.valid()) throw std::invalid_argument("not a two-row bipartition: " + bp.str());
    // count the ways to remove boxes one at a time down to the empty bipartition
    std::map<std::array<int, 4>, long> memo;
    std::function<long(std::array<int, 4>)> count = [&](std::array<int, 4> s) -> long {
        if (s[0] + s[1] + s[2] + s[3] == 0) return 1;
        auto it = memo.find(s);
        if (it != memo.end()) return it->second;
        long total = 0;
        for (int c = 0; c < 2; ++c) {
            int& r1 = s[2 * c];
            int& r2 = s[2 * c + 1];
            if (r1 > r2) {
                --r1;
                total += count(s);
                ++r1;
            }
            if (r2 > 0) {
                --r2;
                total += count(s);
                ++r2;
            }
        }
        memo[s] = total;
        return total;
    };
    return count({bp.l1, bp.l2, bp.m1, bp.m2});
}

// ---------------------------------------------------------------- decomposition

bool Decomposition::ok() const {
    long expect = 1;
    for (int k = 0; k < d; ++k) expect *= 4;
    if (total != expect) return false;
    return std::all_of(entries.begin(), entries.end(),
                       [](const DecompositionEntry& e) { return e.maximal && e.weight_ok && e.jm_ok; });
}

Decomposition decompose(int d) {
    if (d < 0) throw std::invalid_argument("tensor power must be nonnegative");
    Decomposition dec;
    dec.d = d;
    for (const auto& bp : two_row_bipartitions(d)) {
        DecompositionEntry e;
        e.bp = bp;
        e.dim_l = dim_L(bp);
        e.dim_specht = specht_dim(bp);
        dec.total += e.dim_l * e.dim_specht;
        TensorVector v = omega(bp);
        e.maximal = is_maximal(v);
        WeightResult w = weight_of(v);
        e.weight = w.weight;
        e.weight_ok = w.weight && *w.weight == bipartition_weight(bp) && w.weight->w &&
                      *w.weight->w == *bipartition_weight(bp).w;
        auto jm = jm_eigenvalues(v);
        if (jm) e.jm_spectrum = *jm;
        e.jm_ok = jm && *jm == content_spectrum(special_filling(bp));
        dec.entries.push_back(std::move(e));
    }
    return dec;
}

JMSpectrumReport jm_spectrum_check(const Bipartition& bp) {
    JMSpectrumReport r;
    r.bp = bp;
    r.expected = content_spectrum(special_filling(bp));
    r.actual = jm_eigenvalues(omega(bp));
    r.matches = r.actual && *r.actual == r.expected;
    return r;
}

bool jm_spectra_separate(int d) {
    auto shapes = two_row_bipartitions(d);
    std::vector<std::vector<Scalar>> spectra;
    for (const auto& bp : shapes) spectra.push_back(content_spectrum(special_filling(bp)));
    for (std::size_t a = 0; a < spectra.size(); ++a)
        for (std::size_t b = a + 1; b < spectra.size(); ++b)
            if (spectra[a] == spectra[b]) return false;
    return true;
}

// ---------------------------------------------------------------- Clebsch-Gordan

bool CGResult::ok() const {
    if (dim_sum != 4 * static_cast<long>(module.dim)) return false;
    return std::all_of(candidates.begin(), candidates.end(), [](const CGCandidate& c) {
        if (!c.target_valid) return c.vec.is_zero();
        return !c.vec.is_zero() && c.maximal && c.weight_ok;
    });
}

CGResult clebsch_gordan(const Bipartition& bp) {
    HighestWeight hw = bipartition_hw(bp);
    auto L = fd_quotient(hw);
    if (!L) throw std::logic_error("no finite-dimensional quotient for " + bp.str());
    CGResult res{bp, *L, {}, 0};
    const FdModule* M = &res.module.mod;
    const int n = bp.l1 - bp.m1, k = hw.kappa(), i = bp.l1 - bp.l2;

    auto head = [&](int a, int b) {
        if (a > i || b > k - i) return TensorVector(0, true);
        return TensorVector::headed_basis(static_cast<int>(res.module.index(a, b)), {});
    };
    TensorVector v = head(0, 0), fp = head(1, 0), fm = head(0, 1);
    TensorVector wp = tensor(fp, funny_x(1, n - 1)) -
                      tensor(v, funny_y(1, n - k - 2)) * (q(1 - n) * qint(i) * alpha_plus(n + k - i));
    TensorVector wm = tensor(fm, funny_x(-1, -n - 1)) -
                      tensor(v, funny_y(-1, -n - k - 2)) * (q(n + 1) * qint(k - i) * alpha_plus(n - i));
    TensorVector xi_p = wm * (q(2 * i) - Scalar(1)) - wp * (q(2 * i) + q(2 * n));
    TensorVector xi_m = wm * (q(2 * i - 2 * n) + q(2 * k)) + wp * (q(2 * i) - q(2 * k));

    const Scalar zc = qint(k + n - 2 * i);
    struct Spec {
        const char* name;
        Bipartition target;
        TensorVector vec;
        Scalar z;
    };
    const Spec specs[] = {
        {"Xi+", {bp.l1, bp.l2 + 1, bp.m1, bp.m2}, xi_p, qint(k + n - 2 * i + 1) - q(1 - k) * qint(n)},
        {"Xi-", {bp.l1, bp.l2, bp.m1, bp.m2 + 1}, xi_m, qint(k + n - 2 * i - 1) - q(1 - k) * qint(n)},
        {"v(x)x+", {bp.l1 + 1, bp.l2, bp.m1, bp.m2}, tensor(v, funny_x(1, n)), zc - q(-1 - k) * qint(n + 1)},
        {"v(x)x-", {bp.l1, bp.l2, bp.m1 + 1, bp.m2}, tensor(v, funny_x(-1, -n)), zc - q(-1 - k) * qint(n - 1)},
    };
    for (const auto& sp : specs) {
        CGCandidate c;
        c.name = sp.name;
        c.target = sp.target;
        c.target_valid = sp.target.valid();
        c.vec = sp.vec;
        c.expected_z = sp.z;
        if (!c.vec.is_zero()) {
            c.maximal = is_maximal(c.vec, M);
            WeightResult w = weight_of(c.vec, M);
            c.weight = w.weight;
            if (w.weight && c.target_valid) {
                Weight t = bipartition_weight(c.target);
                c.weight_ok = *w.weight == t && w.weight->w && *w.weight->w == *t.w && w.weight->z == c.expected_z;
            }
        }
        if (c.target_valid) res.dim_sum += dim_L(c.target);
        res.candidates.push_back(std::move(c));
    }
    return res;
}

// ---------------------------------------------------------------- h_m

HeckeWord h_m_element(int m) {
    const Scalar den = (q(4) + q(2)) * q(2 * m) + q(4 * m + 6) + Scalar(1);
    const Scalar a = (q(6) - q(4) - q(2) + Scalar(1)) * q(4 * m) / den;
    const Scalar b = ((q(3) - q(1)) * q(4 * m) + (q(3) - q(1)) * q(2 * m)) / den;
    const Scalar c = -((q(4) - q(2)) * q(4 * m) + (q(4) - q(2)) * q(2 * m)) / den;
    const Scalar e = ((q(5) - q(3)) * q(4 * m) + (q(5) - q(3)) * q(2 * m)) / den;
    const Scalar f = (q(2) + q(2 * m + 2)) / (q(2 * m + 4) + Scalar(1));
    auto H = HeckeWord::gen;
    return HeckeWord(a) + H(2) * b + H(1) * H(2) * c + H(3) * H(2) * c + H(1) * H(3) * H(2) * e +
           H(2) * H(1) * H(3) * H(2) * f;
}

bool h_m_maps_to(int m, int a, int b) {
    TensorVector src = tensor(funny_eta(1, m), funny_eta(-1, -m - 1));
    return hecke_act(h_m_element(m), src) == tensor(funny_eta(-1, a), funny_eta(1, b));
}

std::vector<HeckeRelation> hecke_relations(int d) {
    auto H = HeckeWord::gen;
    auto L = [](int i) { return "H" + std::to_string(i); };
    std::vector<HeckeRelation> r;
    if (d >= 1) r.push_back({"H0^2 = 1", H(0) * H(0) - HeckeWord(1)});
    for (int i = 1; i < d; ++i)
        r.push_back({"(" + L(i) + " - q^-1)(" + L(i) + " + q) = 0", (H(i) - HeckeWord(q(-1))) * (H(i) + HeckeWord(q(1)))});
    if (d >= 2) r.push_back({"H0H1H0H1 = H1H0H1H0", H(0) * H(1) * H(0) * H(1) - H(1) * H(0) * H(1) * H(0)});
    for (int i = 1; i + 1 < d; ++i)
        r.push_back({L(i) + L(i + 1) + L(i) + " = " + L(i + 1) + L(i) + L(i + 1),
                     H(i) * H(i + 1) * H(i) - H(i + 1) * H(i) * H(i + 1)});
    for (int i = 0; i < d; ++i)
        for (int j = i + 2; j < d; ++j)
            r.push_back({L(i) + L(j) + " = " + L(j) + L(i), H(i) * H(j) - H(j) * H(i)});
    return r;
}

std::vector<TensorVector> tensor_basis(int d) {
    std::vector<TensorVector> out;
    TensorVector::Key k(d, 0);
    while (true) {
        out.push_back(TensorVector::basis(k));
        int p = d - 1;
        while (p >= 0 && k[p] == 3) k[p--] = 0;
        if (p < 0) break;
        ++k[p];
    }
    return out;
}

bool acts_by_zero(const HeckeWord& w, int d) {
    for (const auto& b : tensor_basis(d))
        if (!hecke_act(w, b).is_zero()) return false;
    return true;
}

bool bimodule_commutes(int d) {
    const Gen gens[] = {Gen::B1, Gen::Bm1, Gen::B0, Gen::Dd, Gen::DdInv, Gen::D1, Gen::D1Inv};
    for (const auto& b : tensor_basis(d))
        for (int i = 0; i < d; ++i) {
            TensorVector hb = hecke_act(i, b);
            for (Gen g : gens)
                if (coideal_act(g, hb) != hecke_act(i, coideal_act(g, b))) return false;
        }
    return true;
}

}  // namespace qsp
