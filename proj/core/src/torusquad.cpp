#include "jackweight/torusquad.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <sstream>

#include "jackweight/odeflow.hpp"
#include "jackweight/parallel.hpp"
#include "jackweight/weightsolve.hpp"

namespace jw {

std::vector<std::vector<double>> grid_angles(const QuadratureGrid& grid) {
    const int N = grid.N;
    const int P = grid.P;
    std::size_t total = 1;
    for (int k = 1; k < N; ++k) total *= static_cast<std::size_t>(P);
    std::vector<std::vector<double>> out;
    out.reserve(total);
    std::vector<int> m(N, 0);
    const double h = 2 * kPi / P;
    for (std::size_t idx = 0; idx < total; ++idx) {
        std::size_t rest = idx;
        std::vector<double> theta(N, 0.0);
        for (int k = N - 1; k >= 1; --k) {
            m[k] = static_cast<int>(rest % P);
            rest /= P;
            theta[k] = (m[k] + static_cast<double>(k) / N) * h;
        }
        out.push_back(std::move(theta));
    }
    return out;
}

namespace {

std::mutex cacheLock;
std::map<std::string, std::shared_ptr<const std::vector<CMat>>> cache;

std::string cache_key(const IrrepData& irrep, double kappa, const QuadratureGrid& grid, const FlowOptions& flow) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s|%a|%d|%d|%a|%a", irrep.tau.str().c_str(), kappa, grid.N, grid.P,
                  grid.exclusionMargin, flow.tol);
    return buf;
}

}  // namespace

std::shared_ptr<const std::vector<CMat>> grid_L(const IrrepData& irrep, double kappa, const QuadratureGrid& grid,
                                                const FlowOptions& flow, int threads) {
    const std::string key = cache_key(irrep, kappa, grid, flow);
    {
        std::lock_guard<std::mutex> g(cacheLock);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto angles = grid_angles(grid);
    auto values = std::make_shared<std::vector<CMat>>(angles.size());
    parallel_for(angles.size(), threads, [&](std::size_t k) {
        TorusPoint x = TorusPoint::from_angles(angles[k]);
        if (grid.exclusionMargin > 0 && x.min_distance() < grid.exclusionMargin) return;
        (*values)[k] = extend_L(irrep, kappa, x, flow);
    });
    std::lock_guard<std::mutex> g(cacheLock);
    cache[key] = values;
    return values;
}

void clear_grid_cache() {
    std::lock_guard<std::mutex> g(cacheLock);
    cache.clear();
}

double richardson_factor(double kappa) {
    double p = 1.0 - 2.0 * std::abs(kappa);
    return 1.0 / (std::pow(2.0, p) - 1.0);
}

namespace {

QuadratureGrid make_grid(const WeightModel& model, int P, const QuadratureOptions& opts) {
    QuadratureGrid g;
    g.N = model.irrep->N();
    g.P = P;
    g.exclusionMargin = opts.exclusionMargin;
    return g;
}

std::vector<cplx> node_x(const std::vector<double>& theta) {
    std::vector<cplx> x;
    for (double t : theta) x.push_back(std::polar(1.0, t));
    return x;
}

double node_weight(const QuadratureGrid& grid) {
    double w = 1.0;
    for (int k = 1; k < grid.N; ++k) w /= grid.P;
    return w;
}

// Sum over nodes of V_d^* D K D V_d for the homogeneous parts of each polynomial.
CMat gram_on_grid(const WeightModel& model, const std::vector<LaurentVPoly>& polys, const QuadratureGrid& grid,
                  const QuadratureOptions& opts) {
    const IrrepData& ir = *model.irrep;
    const int n = ir.nTau;
    const int count = static_cast<int>(polys.size());
    std::vector<std::map<int, LaurentVPoly>> parts;
    std::vector<int> degrees;
    for (const auto& p : polys) {
        parts.push_back(p.homogeneous_parts());
        for (const auto& [d, q] : parts.back()) degrees.push_back(d);
    }
    std::sort(degrees.begin(), degrees.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());

    auto angles = grid_angles(grid);
    auto Ls = grid_L(ir, model.kappa, grid, opts.flow, opts.threads);
    const CVec D = ir.sqrtWeights.cast<cplx>();
    CMat G = CMat::Zero(count, count);
    CMat V(n, count);
    for (std::size_t k = 0; k < angles.size(); ++k) {
        const CMat& L = (*Ls)[k];
        if (L.size() == 0) continue;
        auto x = node_x(angles[k]);
        CMat K = weight_from_L(L, model.H);
        for (int d : degrees) {
            V.setZero();
            bool any = false;
            for (int a = 0; a < count; ++a) {
                auto it = parts[a].find(d);
                if (it == parts[a].end()) continue;
                V.col(a) = D.cwiseProduct(it->second.eval(x));
                any = true;
            }
            if (any) G.noalias() += V.adjoint() * K * V;
        }
    }
    return G * node_weight(grid);
}

ScalarEstimate combine(cplx coarse, cplx fine, double kappa, bool extrapolate) {
    ScalarEstimate e;
    e.coarse = coarse;
    e.fine = fine;
    double r = richardson_factor(kappa);
    e.value = extrapolate ? fine + r * (fine - coarse) : fine;
    e.error = r * std::abs(fine - coarse);
    return e;
}

MatrixEstimate combine(const CMat& coarse, const CMat& fine, double kappa, bool extrapolate) {
    MatrixEstimate e;
    e.coarse = coarse;
    e.fine = fine;
    double r = richardson_factor(kappa);
    e.value = extrapolate ? CMat(fine + r * (fine - coarse)) : fine;
    e.error = r * (fine - coarse).norm();
    return e;
}

}  // namespace

cplx pairing_on_grid(const WeightModel& model, const LaurentVPoly& f, const LaurentVPoly& g, const QuadratureGrid& grid,
                     const QuadratureOptions& opts) {
    CMat G = gram_on_grid(model, {f, g}, grid, opts);
    return G(0, 1);
}

ScalarEstimate pairing(const WeightModel& model, const LaurentVPoly& f, const LaurentVPoly& g,
                       const QuadratureOptions& opts) {
    cplx c = pairing_on_grid(model, f, g, make_grid(model, opts.P, opts), opts);
    cplx d = pairing_on_grid(model, f, g, make_grid(model, 2 * opts.P, opts), opts);
    return combine(c, d, model.kappa, opts.extrapolate);
}

double gram_normalization(const WeightModel& model, const QuadratureOptions& opts) {
    const IrrepData& ir = *model.irrep;
    LaurentVPoly one = LaurentVPoly::basis_monomial(Exponent(ir.N(), 0), ir.nTau, 0);
    ScalarEstimate e = pairing(model, one, one, opts);
    return ir.weights[0] / e.value.real();
}

std::string GramLabel::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t k = 0; k < alpha.size(); ++k) os << (k ? "," : "") << alpha[k];
    os << ")T" << tableau;
    return os.str();
}

std::vector<GramLabel> gram_labels(const IrrepData& irrep, int degreeCap) {
    std::vector<GramLabel> out;
    for (int d = 0; d <= degreeCap; ++d)
        for (const auto& a : homogeneous_exponents(irrep.N(), d))
            for (int t = 0; t < irrep.nTau; ++t) out.push_back({a, t});
    return out;
}

GramReport gram_matrix_of(const WeightModel& model, const std::vector<GramLabel>& labels,
                          const std::vector<LaurentVPoly>& polys, const QuadratureOptions& opts) {
    GramReport rep;
    rep.labels = labels;
    rep.coarse = gram_on_grid(model, polys, make_grid(model, opts.P, opts), opts);
    rep.fine = gram_on_grid(model, polys, make_grid(model, 2 * opts.P, opts), opts);
    double r = richardson_factor(model.kappa);
    rep.matrix = opts.extrapolate ? CMat(rep.fine + r * (rep.fine - rep.coarse)) : rep.fine;
    rep.errorEstimate = r * (rep.fine - rep.coarse).cwiseAbs();
    const int n = static_cast<int>(labels.size());
    for (int a = 0; a < n; ++a) rep.diagonal.push_back(rep.matrix(a, a).real());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            double s = std::sqrt(std::abs(rep.diagonal[a] * rep.diagonal[b]));
            rep.offDiagMax = std::max(rep.offDiagMax, std::abs(rep.matrix(a, b)) / s);
        }
    return rep;
}

GramReport gram_matrix(const WeightModel& model, const std::vector<GramLabel>& labels, const QuadratureOptions& opts) {
    std::vector<LaurentVPoly> polys;
    for (const auto& l : labels) polys.push_back(nsjp(*model.irrep, model.kappa, l.alpha, l.tableau));
    return gram_matrix_of(model, labels, polys, opts);
}

namespace {

ScalarEstimate relative_difference(const WeightModel& model, const std::vector<LaurentVPoly>& polys, int ia, int ib,
                                   int ic, int id, const QuadratureOptions& opts) {
    // polys[0] = f, polys[1] = g; difference <p_ia, p_ib> - <p_ic, p_id> over max(|<f,f>|, |<g,g>|)
    CMat c = gram_on_grid(model, polys, make_grid(model, opts.P, opts), opts);
    CMat d = gram_on_grid(model, polys, make_grid(model, 2 * opts.P, opts), opts);
    auto value = [&](const CMat& G) { return G(ia, ib) - G(ic, id); };
    MatrixEstimate m = combine(c, d, model.kappa, opts.extrapolate);
    double scale = std::max(std::abs(m.value(0, 0)), std::abs(m.value(1, 1)));
    ScalarEstimate e = combine(value(c) / scale, value(d) / scale, model.kappa, opts.extrapolate);
    e.value = std::abs(e.value);
    return e;
}

}  // namespace

ScalarEstimate adjointness_residual(const WeightModel& model, int i, const LaurentVPoly& f, const LaurentVPoly& g,
                                    const QuadratureOptions& opts) {
    const IrrepData& ir = *model.irrep;
    LaurentVPoly df = x_dunkl_apply(ir, model.kappa, i, f);
    LaurentVPoly dg = x_dunkl_apply(ir, model.kappa, i, g);
    return relative_difference(model, {f, g, df, dg}, 2, 1, 0, 3, opts);
}

ScalarEstimate isometry_residual(const WeightModel& model, int i, const LaurentVPoly& f, const LaurentVPoly& g,
                                 const QuadratureOptions& opts) {
    Exponent e(model.irrep->N(), 0);
    e[i] = 1;
    return relative_difference(model, {f, g, times_monomial(f, e), times_monomial(g, e)}, 2, 3, 0, 1, opts);
}

std::vector<Exponent> zero_sum_exponents(int N, int maxAbs) {
    std::vector<Exponent> out;
    Exponent a(N, -maxAbs);
    while (true) {
        int s = 0;
        for (int v : a) s += v;
        if (s == 0) out.push_back(a);
        int k = N - 1;
        while (k >= 0 && a[k] == maxAbs) a[k--] = -maxAbs;
        if (k < 0) break;
        ++a[k];
    }
    return out;
}

namespace {

std::vector<CMat> fourier_on_grid(const WeightModel& model, const std::vector<Exponent>& alphas,
                                  const QuadratureGrid& grid, const QuadratureOptions& opts) {
    const IrrepData& ir = *model.irrep;
    const int n = ir.nTau;
    auto angles = grid_angles(grid);
    auto Ls = grid_L(ir, model.kappa, grid, opts.flow, opts.threads);
    std::vector<CMat> out(alphas.size(), CMat::Zero(n, n));
    for (std::size_t k = 0; k < angles.size(); ++k) {
        const CMat& L = (*Ls)[k];
        if (L.size() == 0) continue;
        CMat K = weight_from_L(L, model.H);
        for (std::size_t a = 0; a < alphas.size(); ++a) {
            double phase = 0.0;
            for (int j = 0; j < grid.N; ++j) phase -= alphas[a][j] * angles[k][j];
            out[a] += std::polar(1.0, phase) * K;
        }
    }
    for (auto& m : out) m *= node_weight(grid);
    return out;
}

}  // namespace

std::map<Exponent, MatrixEstimate> fourier_K(const WeightModel& model, const std::vector<Exponent>& alphas,
                                             const QuadratureOptions& opts) {
    for (const auto& a : alphas) {
        int s = 0;
        for (int v : a) s += v;
        if (s != 0) throw Error("fourier_K: alpha must have zero sum");
    }
    auto c = fourier_on_grid(model, alphas, make_grid(model, opts.P, opts), opts);
    auto d = fourier_on_grid(model, alphas, make_grid(model, 2 * opts.P, opts), opts);
    std::map<Exponent, MatrixEstimate> out;
    for (std::size_t a = 0; a < alphas.size(); ++a)
        out[alphas[a]] = combine(c[a], d[a], model.kappa, opts.extrapolate);
    return out;
}

std::vector<FcrecTerm> fcrec_terms(int N, double kappa, const Exponent& alpha, int i) {
    std::vector<FcrecTerm> terms;
    for (unsigned mask = 0; mask < (1u << N); ++mask) {
        if (mask & (1u << i)) continue;
        int ell = __builtin_popcount(mask);
        double sign = (ell % 2 == 0) ? 1.0 : -1.0;
        Exponent idx = alpha;
        idx[i] += ell;
        for (int k = 0; k < N; ++k)
            if (mask & (1u << k)) --idx[k];
        terms.push_back({sign * (alpha[i] + ell), idx, 0, -1});
    }
    for (int j = 0; j < N; ++j) {
        if (j == i) continue;
        for (unsigned mask = 0; mask < (1u << N); ++mask) {
            if (mask & ((1u << i) | (1u << j))) continue;
            int ell = __builtin_popcount(mask);
            double c = -kappa * ((ell % 2 == 0) ? 1.0 : -1.0);
            Exponent left = alpha, right = alpha;
            left[i] += ell + 1;
            left[j] -= 1;
            right[i] += ell;
            for (int k = 0; k < N; ++k)
                if (mask & (1u << k)) {
                    --left[k];
                    --right[k];
                }
            terms.push_back({c, left, -1, j});
            terms.push_back({c, right, +1, j});
        }
    }
    return terms;
}

namespace {

template <typename Lookup>
CMat fcrec_combination(const IrrepData& irrep, const std::vector<FcrecTerm>& terms, int i, Lookup&& get) {
    const int n = irrep.nTau;
    CMat acc = CMat::Zero(n, n);
    for (const auto& t : terms) {
        const CMat& K = get(t.index);
        if (t.side == 0) {
            acc += t.coefficient * K;
        } else {
            CMat tau = irrep.transposition(i, t.j).cast<cplx>();
            acc += t.coefficient * (t.side < 0 ? CMat(tau * K) : CMat(K * tau));
        }
    }
    return acc;
}

}  // namespace

FcrecResult fcrec_residual(const IrrepData& irrep, double kappa, const std::map<Exponent, MatrixEstimate>& khat,
                           const Exponent& alpha, int i) {
    auto terms = fcrec_terms(irrep.N(), kappa, alpha, i);
    FcrecResult res;
    double err = 0.0;
    for (const auto& t : terms) {
        auto it = khat.find(t.index);
        if (it == khat.end()) throw MissingCoefficient("fcrec: missing Fourier coefficient");
        res.scale = std::max(res.scale, it->second.value.norm());
        err += std::abs(t.coefficient) * it->second.error;
    }
    CMat acc = fcrec_combination(irrep, terms, i, [&](const Exponent& e) -> const CMat& { return khat.at(e).value; });
    res.residual = acc.norm() / res.scale;
    res.errorEstimate = err / res.scale;
    return res;
}

double fcrec_residual_plain(const IrrepData& irrep, double kappa, const std::map<Exponent, CMat>& khat,
                            const Exponent& alpha, int i) {
    auto terms = fcrec_terms(irrep.N(), kappa, alpha, i);
    double scale = 0.0;
    for (const auto& t : terms) {
        auto it = khat.find(t.index);
        if (it == khat.end()) throw MissingCoefficient("fcrec: missing Fourier coefficient");
        scale = std::max(scale, it->second.norm());
    }
    CMat acc = fcrec_combination(irrep, terms, i, [&](const Exponent& e) -> const CMat& { return khat.at(e); });
    return scale > 0 ? acc.norm() / scale : acc.norm();
}

}  // namespace jw
