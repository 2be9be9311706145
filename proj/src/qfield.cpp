#include "qsp/qfield.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace qsp {

namespace {

int checked_add(int a, int b) {
    int r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("exponent overflow");
    return r;
}

int checked_neg(int a) {
    if (a == std::numeric_limits<int>::min()) throw std::overflow_error("exponent overflow");
    return -a;
}

}  // namespace

// ---------------------------------------------------------------- GaussianRational

GaussianRational GaussianRational::inverse() const {
    mpq_class n = re_ * re_ + im_ * im_;
    if (sgn(n) == 0) throw std::domain_error("division by zero");
    return GaussianRational(re_ / n, -im_ / n);
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

std::string GaussianRational::str() const {
    if (sgn(im_) == 0) return re_.get_str();
    std::string ipart;
    mpq_class a = abs(im_);
    if (a == 1)
        ipart = "i";
    else
        ipart = a.get_str() + "i";
    if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + ipart;
    return "(" + re_.get_str() + (sgn(im_) < 0 ? "-" : "+") + ipart + ")";
}

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(long n) {
    if (n != 0) terms_.push_back({0, 0, GaussianRational(n)});
}

LaurentPoly::LaurentPoly(const GaussianRational& c) {
    if (!c.is_zero()) terms_.push_back({0, 0, c});
}

LaurentPoly LaurentPoly::monomial(const GaussianRational& c, int qe, int me) {
    LaurentPoly p;
    if (!c.is_zero()) p.terms_.push_back({qe, me, c});
    return p;
}

bool LaurentPoly::has_mu() const {
    for (const auto& t : terms_)
        if (t.me != 0) return true;
    return false;
}

int LaurentPoly::min_qe() const {
    int m = std::numeric_limits<int>::max();
    for (const auto& t : terms_) m = std::min(m, t.qe);
    return m;
}

int LaurentPoly::max_qe() const {
    int m = std::numeric_limits<int>::min();
    for (const auto& t : terms_) m = std::max(m, t.qe);
    return m;
}

static bool term_less(const LaurentPoly::Term& a, const LaurentPoly::Term& b) {
    return a.me != b.me ? a.me < b.me : a.qe < b.qe;
}

void LaurentPoly::normalize() {
    std::sort(terms_.begin(), terms_.end(), term_less);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!out.empty() && out.back().qe == t.qe && out.back().me == t.me)
            out.back().c += t.c;
        else
            out.push_back(std::move(t));
        if (out.back().c.is_zero()) out.pop_back();
    }
    terms_ = std::move(out);
}

void LaurentPoly::add_term(int qe, int me, const GaussianRational& c) {
    terms_.push_back({qe, me, c});
}

static std::vector<LaurentPoly::Term> merge(const std::vector<LaurentPoly::Term>& a,
                                            const std::vector<LaurentPoly::Term>& b, bool subtract) {
    std::vector<LaurentPoly::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && term_less(a[i], b[j]))) {
            out.push_back(a[i++]);
        } else if (i == a.size() || term_less(b[j], a[i])) {
            out.push_back(b[j]);
            if (subtract) out.back().c = -out.back().c;
            ++j;
        } else {
            GaussianRational c = subtract ? a[i].c - b[j].c : a[i].c + b[j].c;
            if (!c.is_zero()) out.push_back({a[i].qe, a[i].me, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    terms_ = merge(terms_, o.terms_, false);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    terms_ = merge(terms_, o.terms_, true);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_)
        for (const auto& t : b.terms_)
            r.terms_.push_back({checked_add(s.qe, t.qe), checked_add(s.me, t.me), s.c * t.c});
    r.normalize();
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

LaurentPoly LaurentPoly::scaled(const GaussianRational& c) const {
    if (c.is_zero()) return LaurentPoly();
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.c *= c;
    return r;
}

LaurentPoly LaurentPoly::shifted(int dq, int dmu) const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) {
        t.qe = checked_add(t.qe, dq);
        t.me = checked_add(t.me, dmu);
    }
    return r;
}

LaurentPoly LaurentPoly::flip() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.qe = checked_neg(t.qe);
    r.normalize();
    return r;
}

LaurentPoly LaurentPoly::subst_mu(const GaussianRational& c, int k) const {
    LaurentPoly r;
    GaussianRational ci = c.inverse();
    for (const auto& t : terms_) {
        GaussianRational f = t.c;
        int m = t.me;
        const GaussianRational& base = m >= 0 ? c : ci;
        for (int s = 0; s < std::abs(m); ++s) f *= base;
        long long e = static_cast<long long>(t.qe) + static_cast<long long>(k) * m;
        if (e > std::numeric_limits<int>::max() || e < std::numeric_limits<int>::min())
            throw std::overflow_error("exponent overflow");
        r.terms_.push_back({static_cast<int>(e), 0, std::move(f)});
    }
    r.normalize();
    return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        const auto& s = a.terms_[i];
        const auto& t = b.terms_[i];
        if (s.qe != t.qe || s.me != t.me || s.c != t.c) return false;
    }
    return true;
}

static std::string power_str(const char* var, int e) {
    if (e == 0) return "";
    if (e == 1) return var;
    return std::string(var) + "^" + std::to_string(e);
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::vector<Term> ts = terms_;
    std::sort(ts.begin(), ts.end(), [](const Term& a, const Term& b) {
        return a.me != b.me ? a.me > b.me : a.qe > b.qe;
    });
    std::string out;
    bool first = true;
    for (const auto& t : ts) {
        std::string mono = power_str("mu", t.me);
        std::string qs = power_str("q", t.qe);
        if (!mono.empty() && !qs.empty()) mono += "*";
        mono += qs;
        std::string term;
        if (mono.empty())
            term = t.c.str();
        else if (t.c.is_one())
            term = mono;
        else if (t.c == GaussianRational(-1))
            term = "-" + mono;
        else
            term = t.c.str() + "*" + mono;
        if (first) {
            out = term;
            first = false;
        } else if (term[0] == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out;
}

// ---------------------------------------------------------------- dense univariate helpers

namespace {

using Dense = std::vector<GaussianRational>;  // coefficient of q^k at index k

void trim(Dense& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Dense to_dense(const LaurentPoly& p, int shift) {
    Dense d;
    for (const auto& t : p.terms()) {
        std::size_t k = static_cast<std::size_t>(t.qe - shift);
        if (d.size() <= k) d.resize(k + 1);
        d[k] = t.c;
    }
    trim(d);
    return d;
}

LaurentPoly from_dense(const Dense& d, int shift) {
    LaurentPoly r;
    for (std::size_t k = 0; k < d.size(); ++k)
        if (!d[k].is_zero()) r += LaurentPoly::monomial(d[k], static_cast<int>(k) + shift);
    return r;
}

// a = quot*b + rem
void divmod(Dense a, const Dense& b, Dense& quot, Dense& rem) {
    quot.clear();
    if (a.size() < b.size()) {
        rem = std::move(a);
        return;
    }
    quot.assign(a.size() - b.size() + 1, GaussianRational());
    GaussianRational lead_inv = b.back().inverse();
    for (std::size_t k = a.size(); k-- >= b.size();) {
        if (a[k].is_zero()) {
            if (k == 0) break;
            continue;
        }
        GaussianRational c = a[k] * lead_inv;
        std::size_t off = k - (b.size() - 1);
        for (std::size_t j = 0; j < b.size(); ++j) a[off + j] -= c * b[j];
        quot[off] = c;
        if (k == 0) break;
    }
    trim(a);
    trim(quot);
    rem = std::move(a);
}

Dense gcd(Dense a, Dense b) {
    while (!b.empty()) {
        Dense q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        GaussianRational li = a.back().inverse();
        for (auto& c : a) c *= li;
    }
    return a;
}

}  // namespace

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    reduce();
}

void Scalar::reduce() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    if (den_.is_monomial()) {
        const auto& t = den_.terms()[0];
        if (t.qe == 0 && t.me == 0 && t.c.is_one()) return;
        num_ = num_.scaled(t.c.inverse()).shifted(checked_neg(t.qe), checked_neg(t.me));
        den_ = LaurentPoly(1);
        return;
    }
    if (!num_.has_mu() && !den_.has_mu()) {
        int ns = num_.min_qe(), ds = den_.min_qe();
        Dense n = to_dense(num_, ns), d = to_dense(den_, ds);
        Dense g = gcd(n, d);
        if (g.size() > 1) {
            Dense qn, qd, r;
            divmod(n, g, qn, r);
            divmod(d, g, qd, r);
            n = std::move(qn);
            d = std::move(qd);
        }
        GaussianRational li = d.back().inverse();
        for (auto& c : n) c *= li;
        for (auto& c : d) c *= li;
        // den now has lowest q-power 0
        num_ = from_dense(n, checked_add(ns, checked_neg(ds)));
        den_ = from_dense(d, 0);
        if (den_.is_monomial()) {
            num_ = num_.shifted(checked_neg(den_.terms()[0].qe));
            den_ = LaurentPoly(1);
        }
        return;
    }
    // with mu: shift den to lowest exponents 0 and make its first coefficient 1
    int mq = std::numeric_limits<int>::max(), mm = std::numeric_limits<int>::max();
    for (const auto& t : den_.terms()) {
        mq = std::min(mq, t.qe);
        mm = std::min(mm, t.me);
    }
    GaussianRational li = den_.terms()[0].c.inverse();
    num_ = num_.scaled(li).shifted(checked_neg(mq), checked_neg(mm));
    den_ = den_.scaled(li).shifted(checked_neg(mq), checked_neg(mm));
}

bool Scalar::is_one() const { return num_ == den_; }

Scalar Scalar::inverse() const {
    if (num_.is_zero()) throw std::domain_error("inverse of zero");
    return Scalar(den_, num_);
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (o.num_.is_zero()) return *this;
    if (num_.is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    reduce();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
    if (num_.is_zero()) return *this;
    if (o.num_.is_zero()) return *this = Scalar();
    bool unit_dens = den_ == LaurentPoly(1) && o.den_ == LaurentPoly(1);
    num_ = num_ * o.num_;
    if (unit_dens) return *this;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar Scalar::pow(int e) const {
    Scalar base = e < 0 ? inverse() : *this;
    Scalar r(1);
    for (int k = 0; k < std::abs(e); ++k) r *= base;
    return r;
}

Scalar Scalar::flip() const { return Scalar(num_.flip(), den_.flip()); }

Scalar Scalar::shifted(int e) const {
    Scalar r = *this;
    r.num_ = r.num_.shifted(e);
    return r;
}

Scalar Scalar::subst_mu(const GaussianRational& c, int k) const {
    return Scalar(num_.subst_mu(c, k), den_.subst_mu(c, k));
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return a.num_ * b.den_ == b.num_ * a.den_;
}

bool scalar_eq(const Scalar& a, const Scalar& b) { return a == b; }

std::string Scalar::str() const {
    if (den_ == LaurentPoly(1)) return num_.str();
    std::string n = num_.str(), d = den_.str();
    if (!num_.is_monomial()) n = "(" + n + ")";
    if (!den_.is_monomial()) d = "(" + d + ")";
    return n + "/" + d;
}

// ---------------------------------------------------------------- quantum integers

Scalar qint(int n) {
    // [n] = sum_{k=0}^{|n|-1} q^{|n|-1-2k}, odd in n
    LaurentPoly p;
    int m = std::abs(n);
    for (int k = 0; k < m; ++k) p += LaurentPoly::q(m - 1 - 2 * k);
    return Scalar(n < 0 ? -p : p);
}

Scalar qbracket(const Scalar& mu, int n) {
    if (mu.is_zero()) throw std::domain_error("qbracket: mu not invertible");
    Scalar num = Scalar::q(n) * mu - Scalar::q(-n) * mu.inverse();
    return num / (Scalar::q(1) - Scalar::q(-1));
}

Scalar alpha_minus(int n) { return Scalar::q(n) - Scalar::q(-n); }

Scalar alpha_plus(int n) { return Scalar::q(n) + Scalar::q(-n); }

Scalar qfactorial(int n) {
    Scalar r(1);
    for (int k = 2; k <= n; ++k) r *= qint(k);
    return r;
}

// ---------------------------------------------------------------- matrices

Matrix mat_zero(std::size_t rows, std::size_t cols) {
    return Matrix(rows, std::vector<Scalar>(cols));
}

Matrix mat_identity(std::size_t n) {
    Matrix m = mat_zero(n, n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = Scalar(1);
    return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    Matrix r = mat_zero(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l].is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j)
                if (!b[l][j].is_zero()) r[i][j] += a[i][l] * b[l][j];
        }
    return r;
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
    Matrix r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r[i].size(); ++j) r[i][j] += b[i][j];
    return r;
}

Matrix mat_scale(const Matrix& a, const Scalar& s) {
    Matrix r = a;
    for (auto& row : r)
        for (auto& x : row) x *= s;
    return r;
}

bool mat_is_zero(const Matrix& a) {
    for (const auto& row : a)
        for (const auto& x : row)
            if (!x.is_zero()) return false;
    return true;
}

std::vector<std::size_t> rref(Matrix& a) {
    std::vector<std::size_t> pivots;
    if (a.empty()) return pivots;
    std::size_t rows = a.size(), cols = a[0].size(), r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // pick the sparsest nonzero entry to limit coefficient growth
        std::size_t p = rows, best = 0;
        for (std::size_t i = r; i < rows; ++i) {
            if (a[i][c].is_zero()) continue;
            std::size_t sz = a[i][c].num().terms().size() + a[i][c].den().terms().size();
            if (p == rows || sz < best) {
                p = i;
                best = sz;
            }
        }
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        Scalar inv = a[r][c].inverse();
        for (auto& x : a[r]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            Scalar f = a[i][c];
            for (std::size_t j = c; j < cols; ++j)
                if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(Matrix a) { return rref(a).size(); }

std::vector<std::vector<Scalar>> null_space(const Matrix& a, std::size_t cols) {
    Matrix m = a;
    auto piv = rref(m);
    std::vector<bool> is_piv(cols, false);
    for (auto p : piv) is_piv[p] = true;
    std::vector<std::vector<Scalar>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        std::vector<Scalar> v(cols);
        v[f] = Scalar(1);
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

std::optional<GaussianRational> eval_poly(const LaurentPoly& p, const mpq_class& q0) {
    if (p.has_mu()) throw std::invalid_argument("cannot specialize an expression in mu");
    GaussianRational r;
    mpq_class qi = 1 / q0;
    for (const auto& t : p.terms()) {
        mpq_class pw = 1;
        const mpq_class& base = t.qe >= 0 ? q0 : qi;
        for (int k = 0; k < std::abs(t.qe); ++k) pw *= base;
        r += t.c * GaussianRational(pw);
    }
    return r;
}

}  // namespace

std::optional<GaussianRational> specialize(const Scalar& s, const mpq_class& q0) {
    auto d = eval_poly(s.den(), q0);
    if (d->is_zero()) return std::nullopt;
    return *eval_poly(s.num(), q0) / *d;
}

std::optional<std::size_t> specialized_rank(const Matrix& a, const mpq_class& q0) {
    std::vector<std::vector<GaussianRational>> m;
    for (const auto& row : a) {
        std::vector<GaussianRational> r;
        for (const auto& x : row) {
            auto v = specialize(x, q0);
            if (!v) return std::nullopt;
            r.push_back(*v);
        }
        m.push_back(std::move(r));
    }
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size(), r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        GaussianRational inv = m[r][c].inverse();
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c].is_zero()) continue;
            GaussianRational f = m[i][c] * inv;
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

}  // namespace qsp
