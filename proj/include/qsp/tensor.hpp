#pragma once

#include "qsp/verma.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qsp {

// Basis of V, in the order of the crystal graph -1bar -> -dbar -> d -> 1.
enum VecIndex : int { kBar1 = 0, kBarD = 1, kDia = 2, kOne = 3 };
// "-1", "-d", "d", "1"
std::string vec_index_name(int k);

// Sparse vector in H (x) V^(x)d, where H is either the trivial module or a
// finite-dimensional module carried alongside. Keys are basis tuples; a headed
// vector stores the H-basis index in the first slot.
class TensorVector {
public:
    using Key = std::vector<int>;

    TensorVector() = default;
    explicit TensorVector(int d, bool headed = false) : d_(d), headed_(headed) {}

    static TensorVector unit() { return basis({}); }
    static TensorVector basis(const Key& tuple, const Scalar& c = Scalar(1));
    // e_head (x) e_tuple in H (x) V^(x)d
    static TensorVector headed_basis(int head, const Key& tuple, const Scalar& c = Scalar(1));
    // sum_j v[j] e_j in H
    static TensorVector from_module(const std::vector<Scalar>& v);
    // takes ownership of nonzero terms whose keys already have the right length
    static TensorVector from_terms(int d, bool headed, std::map<Key, Scalar> terms);

    int d() const { return d_; }
    bool headed() const { return headed_; }
    const std::map<Key, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coeff(const Key& k) const;
    void add(const Key& k, const Scalar& c);

    TensorVector& operator+=(const TensorVector& o);
    TensorVector& operator-=(const TensorVector& o);
    TensorVector& operator*=(const Scalar& s);
    friend TensorVector operator+(TensorVector a, const TensorVector& b) { return a += b; }
    friend TensorVector operator-(TensorVector a, const TensorVector& b) { return a -= b; }
    friend TensorVector operator*(TensorVector a, const Scalar& s) { return a *= s; }
    friend TensorVector operator*(const Scalar& s, TensorVector a) { return a *= s; }
    friend bool operator==(const TensorVector& a, const TensorVector& b);
    friend bool operator!=(const TensorVector& a, const TensorVector& b) { return !(a == b); }

    // a (x) b; b must not be headed
    friend TensorVector tensor(const TensorVector& a, const TensorVector& b);

    // "(q^-1)[-1,d] + [d,1]"; headed keys print as "h3|d,1"
    std::string str() const;

private:
    int d_ = 0;
    bool headed_ = false;
    std::map<Key, Scalar> terms_;
    void check_compatible(const TensorVector& o) const;
};

TensorVector vec(int k, const Scalar& c = Scalar(1));
// x±_n = e_-d ± q^n e_d, y±_n = e_-1 ± q^n e_1
TensorVector funny_x(int sign, int n);
TensorVector funny_y(int sign, int n);
// eta±_n = q^-1 y±_n (x) x±_n - x±_n (x) y±_(n-2)
TensorVector funny_eta(int sign, int n);

// Coideal action through the iterated coproduct, factor by factor from the left.
// Headed vectors need the module for H.
TensorVector coideal_act(Gen g, const TensorVector& v, const FdModule* head = nullptr);
TensorVector coideal_act(const Element& el, const TensorVector& v, const FdModule* head = nullptr);

// Linear combination of words in H_0, ..., H_(d-1); the rightmost letter acts first.
class HeckeWord {
public:
    using Word = std::vector<int>;

    HeckeWord() = default;
    HeckeWord(const Scalar& s);
    HeckeWord(long n) : HeckeWord(Scalar(n)) {}
    static HeckeWord gen(int i);

    const std::map<Word, Scalar>& terms() const { return terms_; }
    int max_letter() const;

    HeckeWord& operator+=(const HeckeWord& o);
    HeckeWord& operator-=(const HeckeWord& o);
    HeckeWord& operator*=(const Scalar& s);
    friend HeckeWord operator+(HeckeWord a, const HeckeWord& b) { return a += b; }
    friend HeckeWord operator-(HeckeWord a, const HeckeWord& b) { return a -= b; }
    friend HeckeWord operator*(HeckeWord a, const Scalar& s) { return a *= s; }
    friend HeckeWord operator*(const Scalar& s, HeckeWord a) { return a *= s; }
    friend HeckeWord operator*(const HeckeWord& a, const HeckeWord& b);

    std::string str() const;

private:
    std::map<Word, Scalar> terms_;
    void add(const Word& w, const Scalar& c);
};

// H_0 flips e_j <-> e_-j on the first factor; H_i acts by the R-matrix on factors i, i+1.
// Throws std::out_of_range for letters >= d.
TensorVector hecke_act(int letter, const TensorVector& v);
TensorVector hecke_act(const HeckeWord& w, const TensorVector& v);

// J_1 = H_0, J_i = H_(i-1) J_(i-1) H_(i-1)
HeckeWord jucys_murphy_element(int i);
TensorVector jucys_murphy(int i, const TensorVector& v);

struct Bipartition {
    int l1 = 0, l2 = 0, m1 = 0, m2 = 0;

    bool valid() const { return l1 >= l2 && l2 >= 0 && m1 >= m2 && m2 >= 0; }
    int size() const { return l1 + l2 + m1 + m2; }
    bool operator==(const Bipartition& o) const = default;
    auto operator<=>(const Bipartition& o) const = default;
    // "((2,1),(1,0))"
    std::string str() const;
};

std::vector<Bipartition> two_row_bipartitions(int d);
// highest weight (kd, k1, [n], [l2-m2] - q^-kappa [n]) with mu = q^n
HighestWeight bipartition_hw(const Bipartition& bp);
// Weight from the parameter formulas, including omega
Weight bipartition_weight(const Bipartition& bp);
long dim_L(const Bipartition& bp);

// Column additions of a parity standard bitableau, +1 into the first component, -1 into the second.
using ParityPath = std::vector<int>;
ParityPath special_path(int s, int t);
bool valid_path(const ParityPath& p);
TensorVector lambda_wedge(const ParityPath& path);

// Box positions of the special filling, in filling order: (component, row, column).
struct Box {
    int comp = 0;
    int row = 0;
    int col = 0;
};
std::vector<Box> special_filling(const Bipartition& bp);
std::vector<Box> path_filling(const ParityPath& path);
// ±q^(-2 cont) per box
std::vector<Scalar> content_spectrum(const std::vector<Box>& boxes);

// Lambda of the special rectangular core, then x+_r..x+_(r+s-1), x-_(-r-s)..x-_(-r-s+t-1)
TensorVector omega(const Bipartition& bp);

bool is_maximal(const TensorVector& v, const FdModule* head = nullptr);
WeightResult weight_of(const TensorVector& v, const FdModule* head = nullptr);

// J_1..J_d eigenvalues of v, or nullopt if v is not a joint eigenvector
std::optional<std::vector<Scalar>> jm_eigenvalues(const TensorVector& v);

long specht_dim(const Bipartition& bp);

struct DecompositionEntry {
    Bipartition bp;
    long dim_l = 0;
    long dim_specht = 0;
    bool maximal = false;
    bool weight_ok = false;
    bool jm_ok = false;
    std::optional<Weight> weight;
    std::vector<Scalar> jm_spectrum;
};
struct Decomposition {
    int d = 0;
    std::vector<DecompositionEntry> entries;
    long total = 0;
    bool ok() const;
};
Decomposition decompose(int d);

struct JMSpectrumReport {
    Bipartition bp;
    std::vector<Scalar> expected;
    std::optional<std::vector<Scalar>> actual;
    bool matches = false;
};
JMSpectrumReport jm_spectrum_check(const Bipartition& bp);
// all shapes of size d have pairwise distinct content spectra
bool jm_spectra_separate(int d);

struct CGCandidate {
    std::string name;  // "Xi+", "Xi-", "v(x)x+", "v(x)x-"
    Bipartition target;
    bool target_valid = false;
    TensorVector vec;
    bool maximal = false;
    std::optional<Weight> weight;
    Scalar expected_z;  // Z-weight of the appendix calculation
    bool weight_ok = false;
};
struct CGResult {
    Bipartition bp;
    IrreducibleModule module;
    std::vector<CGCandidate> candidates;
    long dim_sum = 0;  // sum of summand dimensions
    bool ok() const;
};
CGResult clebsch_gordan(const Bipartition& bp);

// Defining relations of the type B Hecke algebra on d letters, as differences that must act by 0.
struct HeckeRelation {
    std::string name;
    HeckeWord diff;
};
std::vector<HeckeRelation> hecke_relations(int d);
// all 4^d basis tuples
std::vector<TensorVector> tensor_basis(int d);
bool acts_by_zero(const HeckeWord& w, int d);
// coideal generators commute with H_0..H_(d-1) on every basis vector of V^(x)d
bool bimodule_commutes(int d);

// h_m = a + b H2 + c H1H2 + d H3H2 + e H1H3H2 + f H2H1H3H2
HeckeWord h_m_element(int m);
// eta-_a (x) eta+_b == h_m(eta+_m (x) eta-_(-m-1))
bool h_m_maps_to(int m, int a, int b);

}  // namespace qsp
