#pragma once

#include <map>
#include <vector>

#include "jackweight/common.hpp"
#include "jackweight/symgroup.hpp"

namespace jw {

// Vector-valued Laurent polynomial; coefficient vectors are over the RSYT basis.
struct LaurentVPoly {
    int N = 0;
    int n = 0;
    std::map<Exponent, CVec> terms;

    LaurentVPoly() = default;
    LaurentVPoly(int numVars, int dim) : N(numVars), n(dim) {}

    static LaurentVPoly monomial(const Exponent& alpha, const CVec& v);
    static LaurentVPoly basis_monomial(const Exponent& alpha, int dim, int t);  // x^alpha (x) T_t

    void add(const Exponent& alpha, const CVec& v);
    bool empty() const { return terms.empty(); }
    CVec coefficient(const Exponent& alpha) const;
    CVec eval(const std::vector<cplx>& x) const;
    double max_norm() const;
    LaurentVPoly pruned(double tol) const;
    std::map<int, LaurentVPoly> homogeneous_parts() const;

    LaurentVPoly& operator+=(const LaurentVPoly& o);
    LaurentVPoly& operator-=(const LaurentVPoly& o);
    LaurentVPoly& operator*=(cplx c);
};

LaurentVPoly operator+(LaurentVPoly a, const LaurentVPoly& b);
LaurentVPoly operator-(LaurentVPoly a, const LaurentVPoly& b);
LaurentVPoly operator*(cplx c, LaurentVPoly a);

int total_degree(const Exponent& alpha);
LaurentVPoly times_monomial(const LaurentVPoly& p, const Exponent& beta);  // x^beta p
LaurentVPoly times_en(const LaurentVPoly& p, int m);                        // e_N^m p
LaurentVPoly apply_matrix(const CMat& A, const LaurentVPoly& p);
LaurentVPoly apply_matrix(const RMat& A, const LaurentVPoly& p);
LaurentVPoly swap_variables(const LaurentVPoly& p, int i, int j);            // p(x(i,j))
LaurentVPoly partial(const LaurentVPoly& p, int i);
// (p - p(x(i,j))) / (x_i - x_j), exact for Laurent monomials.
LaurentVPoly divided_difference(const LaurentVPoly& p, int i, int j);
// (w p)(x) = tau(w) p(x w), seminormal basis.
LaurentVPoly act(const IrrepData& irrep, const Perm& w, const LaurentVPoly& p);

// Operator indices are 0-based.
LaurentVPoly dunkl_apply(const IrrepData& irrep, double kappa, int i, const LaurentVPoly& p);
LaurentVPoly cherednik_apply(const IrrepData& irrep, double kappa, int i, const LaurentVPoly& p);
LaurentVPoly x_dunkl_apply(const IrrepData& irrep, double kappa, int i, const LaurentVPoly& p);

// r_alpha(i) = #{j : alpha_j > alpha_i} + #{j <= i : alpha_j = alpha_i}, returned 0-based.
Perm rank_function(const Exponent& alpha);
std::vector<double> spectral_vector(const IrrepData& irrep, double kappa, const Exponent& alpha, int tableau);

struct NsjpOptions {
    int degreeCap = -1;              // max(alpha)-min(alpha); -1 picks 4 for N=3, 3 otherwise
    double collisionTol = 1e-8;
    double residualTol = 1e-10;
};

// Simultaneous eigenfunction of U_1..U_N whose x^alpha coefficient is tau(r_alpha^{-1}) T;
// for a partition alpha this is the coefficient 1 on x^alpha (x) T.
LaurentVPoly nsjp(const IrrepData& irrep, double kappa, const Exponent& alpha, int tableau,
                  const NsjpOptions& opts = {});

// Matrix of U_i on the homogeneous polynomial component of degree d;
// basis index = monomialIndex * nTau + t with monomials from homogeneous_exponents.
std::vector<Exponent> homogeneous_exponents(int N, int d);
CMat cherednik_matrix(const IrrepData& irrep, double kappa, int i, int d);

double max_eigen_residual(const IrrepData& irrep, double kappa, const LaurentVPoly& p,
                          const std::vector<double>& spectrum);

}  // namespace jw
