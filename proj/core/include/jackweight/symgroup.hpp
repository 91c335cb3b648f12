#pragma once

#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "jackweight/common.hpp"

namespace jw {

using Rational = boost::rational<long long>;

// ---- permutations -------------------------------------------------------

Perm perm_identity(int N);
Perm perm_compose(const Perm& a, const Perm& b);  // a*b
Perm perm_inverse(const Perm& w);
Perm perm_transposition(int N, int i, int j);     // 0-based (i,j)
Perm perm_w0(int N);                              // the N-cycle (1,2,...,N)
bool perm_is_valid(const Perm& w);
// Simple-reflection word a_1..a_k with w = s_{a_1} ... s_{a_k}, s_a = (a,a+1) 0-based.
std::vector<int> perm_reduced_word(const Perm& w);
Perm perm_parse(const std::string& oneLine, int N);  // "2,3,1" 1-based one-line notation

// ---- partitions and tableaux -------------------------------------------

struct Partition {
    std::vector<int> parts;
    int N = 0;

    int length() const { return static_cast<int>(parts.size()); }
    int max_hook() const { return parts.front() + length() - 1; }
    int n_statistic() const;                // sum (i-1) tau_i
    int hook(int row, int col) const;       // 0-based cell
    std::string str() const;                // "4,2"
};

// Validates and rejects one-row and one-column shapes.
Partition make_partition(std::vector<int> parts);
Partition parse_partition(const std::string& text);

struct Rsyt {
    std::vector<int> row;      // row[i] = 0-based row of entry i+1
    std::vector<int> col;
    std::vector<int> content;  // content[i] = c(i+1, T) = col - row
};

std::vector<Rsyt> enumerate_rsyt(const Partition& tau);

// Small dense rational matrix.
struct QMatrix {
    int n = 0;
    std::vector<Rational> a;

    QMatrix() = default;
    explicit QMatrix(int size) : n(size), a(static_cast<size_t>(size) * size, Rational(0)) {}
    static QMatrix identity(int size);

    Rational& operator()(int r, int c) { return a[static_cast<size_t>(r) * n + c]; }
    const Rational& operator()(int r, int c) const { return a[static_cast<size_t>(r) * n + c]; }
    QMatrix operator*(const QMatrix& o) const;
    bool operator==(const QMatrix& o) const { return n == o.n && a == o.a; }
    RMat to_double() const;
};

enum class Basis { Seminormal, Orthonormal };

struct IrrepData {
    Partition tau;
    int nTau = 0;
    int mTau = 0;
    std::vector<Rsyt> basis;

    // exact data over the RSYT basis
    std::vector<QMatrix> genExact;       // tau(s_i), index i = 0..N-2
    std::vector<Rational> weightsExact;  // <T,T>_0
    Rational s1;                         // sum of contents
    Rational gammaExact;                 // s1 / N

    // floating point, RSYT basis
    std::vector<RMat> gen;
    RMat sigma;
    RMat upsilon;
    std::vector<double> weights;
    double gamma = 0.0;
    double lambdaTrace = 0.0;            // tr tau((1,2))

    // floating point, orthonormal basis <T,T>_0^{-1/2} T
    std::vector<RMat> genOrth;
    RMat upsilonOrth;
    RVec sqrtWeights;

    std::vector<RMat> transSemi;         // tau((i,j)) at i*N+j
    std::vector<RMat> transOrth;

    int N() const { return tau.N; }
    const RMat& transposition(int i, int j, Basis b = Basis::Orthonormal) const;
    const RMat& upsilon_in(Basis b) const { return b == Basis::Orthonormal ? upsilonOrth : upsilon; }
};

IrrepData build_irrep(const Partition& tau);

QMatrix rep_matrix_exact(const IrrepData& irrep, const Perm& w);
RMat rep_matrix(const IrrepData& irrep, const Perm& w, Basis b = Basis::Seminormal);

struct StembridgeProfile {
    std::vector<long long> fakeDegree;   // coefficients of q^{n(tau)} prod(1-q^i) / prod(1-q^h)
    std::vector<long long> e;            // e_j, j = 0..N-1
    long long commutantDim = 0;
    long long unknowns = 0;              // m^2 + (n-m)^2
    long long equations = 0;             // n^2 - commutantDim
};

StembridgeProfile stembridge_profile(const Partition& tau);

// Multiplicity of omega^j among the eigenvalues of upsilon, computed numerically.
std::vector<int> upsilon_multiplicities(const IrrepData& irrep);

}  // namespace jw
