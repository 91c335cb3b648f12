#include "jackweight/jackpoly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/SVD>

namespace jw {

// ---- LaurentVPoly -------------------------------------------------------

LaurentVPoly LaurentVPoly::monomial(const Exponent& alpha, const CVec& v) {
    LaurentVPoly p(static_cast<int>(alpha.size()), static_cast<int>(v.size()));
    p.add(alpha, v);
    return p;
}

LaurentVPoly LaurentVPoly::basis_monomial(const Exponent& alpha, int dim, int t) {
    CVec v = CVec::Zero(dim);
    v[t] = 1.0;
    return monomial(alpha, v);
}

void LaurentVPoly::add(const Exponent& alpha, const CVec& v) {
    auto it = terms.find(alpha);
    if (it == terms.end()) {
        if (!v.isZero(0)) terms.emplace(alpha, v);
        return;
    }
    it->second += v;
    if (it->second.isZero(0)) terms.erase(it);
}

CVec LaurentVPoly::coefficient(const Exponent& alpha) const {
    auto it = terms.find(alpha);
    return it == terms.end() ? CVec(CVec::Zero(n)) : it->second;
}

CVec LaurentVPoly::eval(const std::vector<cplx>& x) const {
    CVec out = CVec::Zero(n);
    for (const auto& [alpha, v] : terms) {
        cplx m = 1.0;
        for (int i = 0; i < N; ++i)
            if (alpha[i]) m *= std::pow(x[i], alpha[i]);
        out += m * v;
    }
    return out;
}

double LaurentVPoly::max_norm() const {
    double m = 0.0;
    for (const auto& [alpha, v] : terms) m = std::max(m, v.cwiseAbs().maxCoeff());
    return m;
}

LaurentVPoly LaurentVPoly::pruned(double tol) const {
    LaurentVPoly p(N, n);
    for (const auto& [alpha, v] : terms)
        if (v.cwiseAbs().maxCoeff() > tol) p.terms.emplace(alpha, v);
    return p;
}

std::map<int, LaurentVPoly> LaurentVPoly::homogeneous_parts() const {
    std::map<int, LaurentVPoly> parts;
    for (const auto& [alpha, v] : terms) {
        auto [it, inserted] = parts.try_emplace(total_degree(alpha), N, n);
        it->second.terms.emplace(alpha, v);
    }
    return parts;
}

LaurentVPoly& LaurentVPoly::operator+=(const LaurentVPoly& o) {
    if (N == 0) {
        N = o.N;
        n = o.n;
    }
    for (const auto& [alpha, v] : o.terms) add(alpha, v);
    return *this;
}

LaurentVPoly& LaurentVPoly::operator-=(const LaurentVPoly& o) {
    if (N == 0) {
        N = o.N;
        n = o.n;
    }
    for (const auto& [alpha, v] : o.terms) add(alpha, -v);
    return *this;
}

LaurentVPoly& LaurentVPoly::operator*=(cplx c) {
    if (c == 0.0) {
        terms.clear();
        return *this;
    }
    for (auto& [alpha, v] : terms) v *= c;
    return *this;
}

LaurentVPoly operator+(LaurentVPoly a, const LaurentVPoly& b) { return a += b; }
LaurentVPoly operator-(LaurentVPoly a, const LaurentVPoly& b) { return a -= b; }
LaurentVPoly operator*(cplx c, LaurentVPoly a) { return a *= c; }

int total_degree(const Exponent& alpha) { return std::accumulate(alpha.begin(), alpha.end(), 0); }

LaurentVPoly times_monomial(const LaurentVPoly& p, const Exponent& beta) {
    LaurentVPoly q(p.N, p.n);
    for (const auto& [alpha, v] : p.terms) {
        Exponent a = alpha;
        for (int i = 0; i < p.N; ++i) a[i] += beta[i];
        q.terms.emplace(a, v);
    }
    return q;
}

LaurentVPoly times_en(const LaurentVPoly& p, int m) { return times_monomial(p, Exponent(p.N, m)); }

LaurentVPoly apply_matrix(const CMat& A, const LaurentVPoly& p) {
    LaurentVPoly q(p.N, static_cast<int>(A.rows()));
    for (const auto& [alpha, v] : p.terms) q.add(alpha, A * v);
    return q;
}

LaurentVPoly apply_matrix(const RMat& A, const LaurentVPoly& p) {
    return apply_matrix(CMat(A.cast<cplx>()), p);
}

LaurentVPoly swap_variables(const LaurentVPoly& p, int i, int j) {
    LaurentVPoly q(p.N, p.n);
    for (const auto& [alpha, v] : p.terms) {
        Exponent a = alpha;
        std::swap(a[i], a[j]);
        q.terms.emplace(a, v);
    }
    return q;
}

LaurentVPoly partial(const LaurentVPoly& p, int i) {
    LaurentVPoly q(p.N, p.n);
    for (const auto& [alpha, v] : p.terms) {
        if (alpha[i] == 0) continue;
        Exponent a = alpha;
        a[i] -= 1;
        q.add(a, static_cast<double>(alpha[i]) * v);
    }
    return q;
}

LaurentVPoly divided_difference(const LaurentVPoly& p, int i, int j) {
    LaurentVPoly q(p.N, p.n);
    for (const auto& [alpha, v] : p.terms) {
        int a = alpha[i], b = alpha[j];
        if (a == b) continue;
        Exponent e = alpha;
        if (a > b) {
            for (int k = 0; k < a - b; ++k) {
                e[i] = a - 1 - k;
                e[j] = b + k;
                q.add(e, v);
            }
        } else {
            for (int k = 0; k < b - a; ++k) {
                e[i] = a + k;
                e[j] = b - 1 - k;
                q.add(e, -v);
            }
        }
    }
    return q;
}

LaurentVPoly act(const IrrepData& irrep, const Perm& w, const LaurentVPoly& p) {
    CMat tw = rep_matrix(irrep, w, Basis::Seminormal).cast<cplx>();
    Perm winv = perm_inverse(w);
    LaurentVPoly q(p.N, p.n);
    for (const auto& [alpha, v] : p.terms) {
        Exponent a(p.N);
        for (int k = 0; k < p.N; ++k) a[k] = alpha[winv[k]];
        q.add(a, tw * v);
    }
    return q;
}

// ---- operators ----------------------------------------------------------

LaurentVPoly dunkl_apply(const IrrepData& irrep, double kappa, int i, const LaurentVPoly& p) {
    LaurentVPoly q = partial(p, i);
    if (kappa == 0.0) return q;
    for (int j = 0; j < p.N; ++j) {
        if (j == i) continue;
        LaurentVPoly dd = divided_difference(p, i, j);
        q += kappa * apply_matrix(irrep.transposition(i, j, Basis::Seminormal), dd);
    }
    return q;
}

LaurentVPoly x_dunkl_apply(const IrrepData& irrep, double kappa, int i, const LaurentVPoly& p) {
    Exponent e(p.N, 0);
    e[i] = 1;
    return times_monomial(dunkl_apply(irrep, kappa, i, p), e);
}

LaurentVPoly cherednik_apply(const IrrepData& irrep, double kappa, int i, const LaurentVPoly& p) {
    Exponent e(p.N, 0);
    e[i] = 1;
    LaurentVPoly q = dunkl_apply(irrep, kappa, i, times_monomial(p, e));
    for (int j = 0; j < i; ++j)
        q -= kappa * apply_matrix(irrep.transposition(i, j, Basis::Seminormal), swap_variables(p, i, j));
    return q;
}

Perm rank_function(const Exponent& alpha) {
    const int N = static_cast<int>(alpha.size());
    Perm r(N);
    for (int i = 0; i < N; ++i) {
        int cnt = 0;
        for (int j = 0; j < N; ++j) {
            if (alpha[j] > alpha[i]) ++cnt;
            if (j <= i && alpha[j] == alpha[i]) ++cnt;
        }
        r[i] = cnt - 1;
    }
    return r;
}

std::vector<double> spectral_vector(const IrrepData& irrep, double kappa, const Exponent& alpha, int tableau) {
    Perm r = rank_function(alpha);
    const auto& c = irrep.basis[tableau].content;
    std::vector<double> xi(alpha.size());
    for (size_t i = 0; i < alpha.size(); ++i) xi[i] = alpha[i] + 1.0 + kappa * c[r[i]];
    return xi;
}

std::vector<Exponent> homogeneous_exponents(int N, int d) {
    std::vector<Exponent> out;
    Exponent cur(N, 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == N - 1) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int k = left; k >= 0; --k) {
            cur[pos] = k;
            self(self, pos + 1, left - k);
        }
    };
    rec(rec, 0, d);
    return out;
}

CMat cherednik_matrix(const IrrepData& irrep, double kappa, int i, int d) {
    const int N = irrep.N();
    const int n = irrep.nTau;
    auto exps = homogeneous_exponents(N, d);
    std::map<Exponent, int> idx;
    for (size_t k = 0; k < exps.size(); ++k) idx[exps[k]] = static_cast<int>(k);
    const int D = static_cast<int>(exps.size()) * n;
    CMat U = CMat::Zero(D, D);
    for (size_t k = 0; k < exps.size(); ++k)
        for (int t = 0; t < n; ++t) {
            LaurentVPoly img = cherednik_apply(irrep, kappa, i, LaurentVPoly::basis_monomial(exps[k], n, t));
            int col = static_cast<int>(k) * n + t;
            for (const auto& [alpha, v] : img.terms) U.block(idx.at(alpha) * n, col, n, 1) = v;
        }
    return U;
}

double max_eigen_residual(const IrrepData& irrep, double kappa, const LaurentVPoly& p,
                          const std::vector<double>& spectrum) {
    double scale = p.max_norm();
    double worst = 0.0;
    for (int i = 0; i < p.N; ++i) {
        LaurentVPoly r = cherednik_apply(irrep, kappa, i, p) - cplx(spectrum[i]) * p;
        worst = std::max(worst, r.max_norm() / scale);
    }
    return worst;
}

LaurentVPoly nsjp(const IrrepData& irrep, double kappa, const Exponent& alpha, int tableau,
                  const NsjpOptions& opts) {
    const int N = irrep.N();
    const int n = irrep.nTau;
    if (static_cast<int>(alpha.size()) != N) throw Error("nsjp: exponent length does not match N");
    if (tableau < 0 || tableau >= n) throw Error("nsjp: tableau index out of range");
    int cap = opts.degreeCap >= 0 ? opts.degreeCap : (N == 3 ? 4 : 3);
    int mn = *std::min_element(alpha.begin(), alpha.end());
    int mx = *std::max_element(alpha.begin(), alpha.end());
    if (mx - mn > cap)
        throw DegreeCapExceeded("nsjp: max(alpha)-min(alpha)=" + std::to_string(mx - mn) +
                                " exceeds degree cap " + std::to_string(cap));

    Exponent a = alpha;
    for (int& v : a) v -= mn;
    const int d = total_degree(a);
    if (d == 0) return times_en(LaurentVPoly::basis_monomial(a, n, tableau), mn);

    auto exps = homogeneous_exponents(N, d);
    const int D = static_cast<int>(exps.size()) * n;
    std::vector<double> xi = spectral_vector(irrep, kappa, a, tableau);

    int target = -1;
    for (size_t k = 0; k < exps.size(); ++k)
        for (int t = 0; t < n; ++t) {
            if (exps[k] == a && t == tableau) {
                target = static_cast<int>(k) * n + t;
                continue;
            }
            std::vector<double> other = spectral_vector(irrep, kappa, exps[k], t);
            double dist = 0.0;
            for (int i = 0; i < N; ++i) dist = std::max(dist, std::abs(other[i] - xi[i]));
            if (dist < opts.collisionTol)
                throw SpectralCollision("spectral vectors of two labels coincide at kappa=" + std::to_string(kappa));
        }

    CMat S(N * D, D);
    for (int i = 0; i < N; ++i) {
        CMat U = cherednik_matrix(irrep, kappa, i, d);
        U.diagonal().array() -= xi[i];
        S.block(i * D, 0, D, D) = U;
    }
    Eigen::BDCSVD<CMat> svd(S, Eigen::ComputeFullV);
    CVec v = svd.matrixV().col(D - 1);
    // leading term x^alpha (x) tau(r_alpha^{-1}) T
    CVec lead = rep_matrix(irrep, perm_inverse(rank_function(a))).col(tableau).cast<cplx>();
    CVec c = v.segment(target - tableau, n);
    if (c.norm() < 1e-12 || c.norm() * lead.norm() - std::abs(c.dot(lead)) > 1e-8 * c.norm() * lead.norm())
        throw Error("nsjp: leading coefficient is not along tau(r_alpha^{-1}) T");
    v *= c.dot(lead) / c.squaredNorm();

    LaurentVPoly p(N, n);
    for (size_t k = 0; k < exps.size(); ++k) p.add(exps[k], v.segment(static_cast<int>(k) * n, n));
    p = p.pruned(1e-15);
    double res = max_eigen_residual(irrep, kappa, p, xi);
    if (res > opts.residualTol)
        throw Error("nsjp: eigen-residual " + std::to_string(res) + " above tolerance");
    return mn == 0 ? p : times_en(p, mn);
}

}  // namespace jw
