#pragma once

#include "qsp/coideal.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qsp {

// Highest weight (q^kd, q^k1, beta, zeta) of a Verma module; mu is set when beta = [mu;0].
struct HighestWeight {
    int kd = 0;
    int k1 = 0;
    Scalar beta;
    Scalar zeta;
    std::optional<Scalar> mu;

    static HighestWeight from_mu(int kd, int k1, const Scalar& mu, const Scalar& zeta);

    int kappa() const { return kd - k1; }
    // q^-2 (zeta - (q^kappa - q^-kappa) beta)
    Scalar omega() const;
    // mu known and not of the form ±iota q^l
    bool is_good() const;
    bool operator==(const HighestWeight& o) const;
    std::string str() const;
};

// [mu;kappa-2i] - q^-kappa [mu;0]
Scalar dominant_zeta(const Scalar& mu, int kappa, int i);
// the i with zeta = dominant_zeta(mu, kappa, i), 0 <= i <= kappa
std::optional<int> dominance_index(const HighestWeight& hw);

// coefficients over the basis B-1^f Y^y v, keyed by (f, y)
class VermaVector {
public:
    VermaVector() = default;
    static VermaVector basis(int f, int y, const Scalar& c = Scalar(1));
    static VermaVector hw() { return basis(0, 0); }

    const std::map<std::pair<int, int>, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coeff(int f, int y) const;
    void add(int f, int y, const Scalar& c);

    VermaVector& operator+=(const VermaVector& o);
    VermaVector& operator-=(const VermaVector& o);
    VermaVector& operator*=(const Scalar& s);
    friend VermaVector operator+(VermaVector a, const VermaVector& b) { return a += b; }
    friend VermaVector operator-(VermaVector a, const VermaVector& b) { return a -= b; }
    friend VermaVector operator*(VermaVector a, const Scalar& s) { return a *= s; }
    friend VermaVector operator*(const Scalar& s, VermaVector a) { return a *= s; }
    friend bool operator==(const VermaVector& a, const VermaVector& b);
    friend bool operator!=(const VermaVector& a, const VermaVector& b) { return !(a == b); }

    std::string str() const;

private:
    std::map<std::pair<int, int>, Scalar> terms_;
};

VermaVector verma_act(const HighestWeight& hw, Gen g, const VermaVector& v);
VermaVector verma_act(const HighestWeight& hw, const Element& el, const VermaVector& v);

// E±(eta), F±(eta) on a B0-eigenvector of weight [eta;0]; throws if v is not one
enum class Dir { E, F };
VermaVector magical_apply(const HighestWeight& hw, int sign, Dir dir, const Scalar& eta, const VermaVector& v);
// F+^a F-^b v with the eta parameters forced by the B0-weights
VermaVector weight_vector(const HighestWeight& hw, int a, int b);

struct Weight {
    Scalar dd;
    Scalar d1;
    Scalar b0;
    Scalar z;
    std::optional<Scalar> w;

    // compares dd, d1, b0, z, and w when both carry it
    bool operator==(const Weight& o) const;
    bool operator!=(const Weight& o) const { return !(*this == o); }
};

// Z- and W-eigenvalue of F+^a F-^b v' when v' has weight (q^kappa, [eta;0], zeta, omega)
std::pair<Scalar, Scalar> zw_eigenvalues(int kappa, const Scalar& eta, const Scalar& zeta, const Scalar& omega, int a,
                                         int b);

// closed-form weight of F+^a F-^b v
Weight closed_form_weight(const HighestWeight& hw, int a, int b);
std::vector<std::pair<std::pair<int, int>, Weight>> weight_table(const HighestWeight& hw, int A, int B);

// Simultaneous eigenvalues of Dd, D1, B0, Z, W. On failure, names the first operator
// for which v is not an eigenvector.
struct WeightResult {
    std::optional<Weight> weight;
    std::string failed_at;
};
WeightResult verma_weight(const HighestWeight& hw, const VermaVector& v);

// (c+, c-) with E+ F+^a F-^b v = c+ [a] F+^(a-1) F-^b v and E- F+^a F-^b v = c- [b] F+^a F-^(b-1) v
std::pair<Scalar, Scalar> epm_scalar(const HighestWeight& hw, int a, int b);

// Killed by B1 and X.
bool is_maximal(const HighestWeight& hw, const VermaVector& v);

// Which parameter system of the hom classification relates src -> dst (0 = none).
struct HomCase {
    int kase = 0;
    int i = -1;
};
HomCase hom_exists(const HighestWeight& src, const HighestWeight& dst);
// source highest weight of the hom into dst for the given case and i (cases 1..3)
HighestWeight hom_source(const HighestWeight& dst, int kase, int i);
// hw-vector image of the hom in the given case: F+^(i+1) v, F-^(i+1) v, F+^(i+1) F-^(kappa-i+1) v
VermaVector hom_image(const HighestWeight& dst, int kase, int i);

// Finite-dimensional module given by generator matrices (columns are images of basis vectors).
struct FdModule {
    std::size_t dim = 0;
    std::array<Matrix, 7> gens;

    const Matrix& gen(Gen g) const { return gens[static_cast<std::size_t>(g)]; }
    Matrix eval(const Element& el) const;
    std::vector<Scalar> apply(const Element& el, const std::vector<Scalar>& v) const;
};

struct IrreducibleModule {
    HighestWeight hw;
    int i = 0;
    std::size_t dim = 0;
    std::vector<std::pair<int, int>> labels;  // basis F+^a F-^b v
    FdModule mod;

    std::size_t index(int a, int b) const;
};

std::optional<IrreducibleModule> fd_quotient(const HighestWeight& hw);

struct BGGResolution {
    HighestWeight top;
    int i = 0;
    HighestWeight left;
    HighestWeight mid_plus;
    HighestWeight mid_minus;
    VermaVector image_plus;   // F+^(i+1) v
    VermaVector image_minus;  // F-^(kappa-i+1) v
    VermaVector image_left;   // F+^(i+1) F-^(kappa-i+1) v
};
BGGResolution bgg_resolution(const HighestWeight& hw);
// alternating sum of level dimensions of the four Vermas at level N
long bgg_euler(const BGGResolution& r, int N);

// Quotient of a Verma module by its radical, computed level by level (levels = Khat depth).
struct QuotientReport {
    bool finite = false;               // radical swallowed a whole level within the depth
    std::vector<std::size_t> level_dims;
    std::vector<int> sl2_character;    // highest weights m, listed as [m+1]
    bool sl2_valid = false;
    std::string character_str() const;
};
QuotientReport radical_quotient(const HighestWeight& hw, int max_depth);

struct ProbeEntry {
    int j = 0;
    Scalar zeta;
    QuotientReport report;
};
// zeta = iota(q^(n-j)[kappa-j] + q^(j-kappa-n)[j]) for 0 <= j <= kappa, beta = [iota q^n;0], weights (kappa, 0)
std::vector<ProbeEntry> exceptional_probe(int kappa, int n, int max_depth);
HighestWeight exceptional_hw(int kappa, int n, const Scalar& zeta);

struct JordanLevel {
    int level = 0;
    bool diagonalizable = true;
    std::vector<Scalar> charpoly;        // monic, ascending coefficients
    std::vector<Scalar> repeated_factor; // gcd(p, p'), monic ascending; {1} if none
};
struct JordanReport {
    bool diagonalizable = true;
    std::vector<JordanLevel> levels;
};
JordanReport b0_jordan_check(const HighestWeight& hw, int level);

// matrix of an element from level N to level N + degree in the basis B-1^f Y^(N-f) v, f ascending
Matrix verma_level_matrix(const HighestWeight& hw, const Element& el, int from_level, int to_level);

}  // namespace qsp
