#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qsp {

// Gaussian rational re + i*im with exact GMP rationals.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long n) : re_(n), im_(0) {}
    GaussianRational(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational iota() { return GaussianRational(mpq_class(0), mpq_class(1)); }

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    GaussianRational conj() const { return GaussianRational(re_, -im_); }
    GaussianRational inverse() const;

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    GaussianRational operator-() const { return GaussianRational(-re_, -im_); }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    // "3", "-1/2", "i", "-2i", "(1+i)"
    std::string str() const;

private:
    mpq_class re_{0};
    mpq_class im_{0};
};

// Sparse Laurent polynomial in q and an optional central indeterminate mu.
class LaurentPoly {
public:
    struct Term {
        int qe;
        int me;
        GaussianRational c;
    };

    LaurentPoly() = default;
    LaurentPoly(long n);
    LaurentPoly(const GaussianRational& c);

    static LaurentPoly monomial(const GaussianRational& c, int qe, int me = 0);
    static LaurentPoly q(int e = 1) { return monomial(1, e); }
    static LaurentPoly mu(int e = 1) { return monomial(1, 0, e); }

    // terms sorted by (me, qe) ascending, no zero coefficients
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool has_mu() const;
    int min_qe() const;
    int max_qe() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    LaurentPoly operator-() const;

    LaurentPoly scaled(const GaussianRational& c) const;
    LaurentPoly shifted(int dq, int dmu = 0) const;
    // q -> q^-1
    LaurentPoly flip() const;
    // mu -> c*q^k with c invertible
    LaurentPoly subst_mu(const GaussianRational& c, int k) const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // descending q-exponent within each mu-exponent block
    std::string str() const;

private:
    std::vector<Term> terms_;
    void add_term(int qe, int me, const GaussianRational& c);
    void normalize();
    friend class Scalar;
};

// Element of the fraction field Q(i)(q, mu).
class Scalar {
public:
    Scalar() : num_(), den_(1) {}
    Scalar(long n) : num_(n), den_(1) {}
    Scalar(const GaussianRational& c) : num_(c), den_(1) {}
    Scalar(LaurentPoly p) : num_(std::move(p)), den_(1) {}
    Scalar(LaurentPoly num, LaurentPoly den);

    static Scalar q(int e = 1) { return Scalar(LaurentPoly::q(e)); }
    static Scalar mu(int e = 1) { return Scalar(LaurentPoly::mu(e)); }
    static Scalar iota() { return Scalar(GaussianRational::iota()); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    bool has_mu() const { return num_.has_mu() || den_.has_mu(); }
    // c*q^e*mu^m with nonzero c
    bool is_monomial() const { return num_.is_monomial() && den_.is_monomial(); }
    bool is_laurent() const { return den_.is_monomial(); }

    Scalar inverse() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const;

    Scalar pow(int e) const;
    Scalar flip() const;
    // times q^e
    Scalar shifted(int e) const;
    Scalar subst_mu(const GaussianRational& c, int k) const;

    // cross-multiplication
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::string str() const;

private:
    LaurentPoly num_;
    LaurentPoly den_;
    void reduce();
};

bool scalar_eq(const Scalar& a, const Scalar& b);

// (q^n - q^-n)/(q - q^-1)
Scalar qint(int n);
// [mu;n] = (q^n mu - q^-n mu^-1)/(q - q^-1)
Scalar qbracket(const Scalar& mu, int n);
// q^n - q^-n
Scalar alpha_minus(int n);
// q^n + q^-n
Scalar alpha_plus(int n);
// [n]!
Scalar qfactorial(int n);

// Exact dense linear algebra over Scalar.
using Matrix = std::vector<std::vector<Scalar>>;

Matrix mat_zero(std::size_t rows, std::size_t cols);
Matrix mat_identity(std::size_t n);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix mat_scale(const Matrix& a, const Scalar& s);
bool mat_is_zero(const Matrix& a);
// reduced row echelon form in place, returns pivot columns
std::vector<std::size_t> rref(Matrix& a);
std::size_t rank(Matrix a);
// value at q = q0 (mu must be absent); nullopt at a pole
std::optional<GaussianRational> specialize(const Scalar& s, const mpq_class& q0);
// rank over Q(i) after q -> q0, a lower bound for the rank; nullopt at a pole
std::optional<std::size_t> specialized_rank(const Matrix& a, const mpq_class& q0);
// basis of the right null space
std::vector<std::vector<Scalar>> null_space(const Matrix& a, std::size_t cols);

}  // namespace qsp
