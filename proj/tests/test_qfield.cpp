#include "doctest.h"
#include "qsp/qfield.hpp"

#include <random>

using namespace qsp;

namespace {

Scalar q(int e) { return Scalar::q(e); }

// value of q^e at a rational point, computed by repeated multiplication
GaussianRational qpow(const mpq_class& q0, int e) {
    GaussianRational r(1);
    GaussianRational base = e >= 0 ? GaussianRational(q0) : GaussianRational(mpq_class(1) / q0);
    for (int k = 0; k < std::abs(e); ++k) r *= base;
    return r;
}

Scalar random_laurent(std::mt19937& rng) {
    std::uniform_int_distribution<int> c(-3, 3), e(-3, 3), n(1, 3);
    Scalar s;
    int terms = n(rng);
    for (int t = 0; t < terms; ++t) {
        int re = c(rng), im = c(rng) % 2;
        s += Scalar(GaussianRational(mpq_class(re), mpq_class(im))) * q(e(rng));
    }
    return s;
}

}  // namespace

TEST_CASE("quantum integers") {
    CHECK(qint(0).is_zero());
    CHECK(qint(2) == q(1) + q(-1));
    CHECK(qint(-3) == -(q(2) + Scalar(1) + q(-2)));
    for (int n = -5; n <= 5; ++n) CHECK(qint(n).flip() == qint(n));
}

TEST_CASE("qbracket") {
    CHECK(qbracket(q(3), 2) == qint(5));
    CHECK(qbracket(Scalar(1), 0).is_zero());
    CHECK(qbracket(Scalar::iota(), 4) == qbracket(Scalar::iota(), -4));
    Scalar mu = Scalar::mu();
    for (int i = -3; i <= 3; ++i) CHECK(qbracket(mu * q(i), 0) == qbracket(mu, i));
}

TEST_CASE("alpha variants") {
    CHECK(alpha_plus(0) == Scalar(2));
    CHECK(alpha_minus(0).is_zero());
    CHECK(alpha_plus(1) == qint(2));
    CHECK(alpha_minus(3) == q(3) - q(-3));
}

TEST_CASE("shifted quantum integer identity") {
    for (int m = -6; m <= 6; ++m) {
        for (const Scalar& mu : {q(m), Scalar::iota() * q(m)}) {
            for (int kappa = -6; kappa <= 6; ++kappa) {
                for (int i = -6; i <= 6; ++i) {
                    Scalar lhs = qbracket(mu, kappa - 2 * i) - q(-kappa) * qbracket(mu, 0);
                    Scalar rhs = mu * q(-i) * qint(kappa - i) - mu.inverse() * q(i - kappa) * qint(i);
                    CHECK(lhs == rhs);
                }
            }
        }
    }
}

TEST_CASE("field axioms on random elements") {
    std::mt19937 rng(3);
    for (int t = 0; t < 40; ++t) {
        Scalar a = random_laurent(rng), b = random_laurent(rng), c = random_laurent(rng);
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * b == b * a);
        CHECK(a.flip().flip() == a);
        if (!b.is_zero()) {
            CHECK((a / b) * b == a);
            Scalar f = a / b + c / (b + Scalar(7));
            CHECK(f.flip().flip() == f);
        }
    }
}

TEST_CASE("specialization agrees with pointwise arithmetic") {
    std::mt19937 rng(11);
    mpq_class q0(7, 5);
    for (int t = 0; t < 30; ++t) {
        Scalar a = random_laurent(rng), b = random_laurent(rng);
        auto va = specialize(a, q0), vb = specialize(b, q0);
        REQUIRE(va);
        REQUIRE(vb);
        CHECK(*specialize(a * b, q0) == *va * *vb);
        CHECK(*specialize(a - b, q0) == *va - *vb);
        if (!vb->is_zero()) CHECK(*specialize(a / b, q0) == *va / *vb);
    }
    for (int n = 0; n <= 6; ++n) {
        GaussianRational s;
        for (int k = 0; k < n; ++k) s += qpow(q0, n - 1 - 2 * k);
        CHECK(*specialize(qint(n), q0) == s);
    }
    CHECK_FALSE(specialize(Scalar(1) / (q(1) - Scalar(1)), mpq_class(1)));
}

TEST_CASE("mu substitution") {
    Scalar mu = Scalar::mu();
    Scalar e = qbracket(mu, 2) * mu + Scalar(3);
    CHECK(e.subst_mu(GaussianRational(1), 3) == qint(5) * q(3) + Scalar(3));
    CHECK(e.has_mu());
    CHECK_FALSE(e.subst_mu(GaussianRational::iota(), 0).has_mu());
}

TEST_CASE("exact linear algebra") {
    // rows (1, q), (q, q^2) are dependent; (1, q, 0), (0, 1, [2]) are not
    Matrix m = {{Scalar(1), q(1)}, {q(1), q(2)}};
    CHECK(rank(m) == 1);
    auto ns = null_space(m, 2);
    REQUIRE(ns.size() == 1);
    CHECK(m[0][0] * ns[0][0] + m[0][1] * ns[0][1] == Scalar(0));
    Matrix n = {{Scalar(1), q(1), Scalar(0)}, {Scalar(0), Scalar(1), qint(2)}};
    CHECK(rank(n) == 2);
    CHECK(*specialized_rank(n, mpq_class(3)) == 2);
    Matrix id = mat_identity(3);
    CHECK(mat_mul(id, mat_identity(3)) == id);
    CHECK(mat_is_zero(mat_add(id, mat_scale(id, Scalar(-1)))));
}

TEST_CASE("printing") {
    CHECK(qint(-3).str() == "-q^2 - 1 - q^-2");
    CHECK((q(1) / (q(1) + Scalar(1))).str() == "q/(q + 1)");
    CHECK(GaussianRational(mpq_class(1), mpq_class(-2)).str() == "(1-2i)");
}
