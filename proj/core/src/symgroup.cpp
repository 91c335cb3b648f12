#include "jackweight/symgroup.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace jw {

// ---- permutations -------------------------------------------------------

Perm perm_identity(int N) {
    Perm w(N);
    std::iota(w.begin(), w.end(), 0);
    return w;
}

Perm perm_compose(const Perm& a, const Perm& b) {
    Perm c(b.size());
    for (size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
    return c;
}

Perm perm_inverse(const Perm& w) {
    Perm v(w.size());
    for (size_t i = 0; i < w.size(); ++i) v[w[i]] = static_cast<int>(i);
    return v;
}

Perm perm_transposition(int N, int i, int j) {
    Perm w = perm_identity(N);
    std::swap(w[i], w[j]);
    return w;
}

Perm perm_w0(int N) {
    Perm w(N);
    for (int i = 0; i < N; ++i) w[i] = (i + 1) % N;
    return w;
}

bool perm_is_valid(const Perm& w) {
    std::vector<char> seen(w.size(), 0);
    for (int v : w) {
        if (v < 0 || v >= static_cast<int>(w.size()) || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

std::vector<int> perm_reduced_word(const Perm& w) {
    Perm v = w;
    std::vector<int> word;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i + 1 < v.size(); ++i) {
            if (v[i] > v[i + 1]) {
                std::swap(v[i], v[i + 1]);
                word.push_back(static_cast<int>(i));
                changed = true;
            }
        }
    }
    std::reverse(word.begin(), word.end());
    return word;
}

Perm perm_parse(const std::string& oneLine, int N) {
    Perm w;
    std::stringstream ss(oneLine);
    std::string item;
    while (std::getline(ss, item, ',')) w.push_back(std::stoi(item) - 1);
    if (static_cast<int>(w.size()) != N || !perm_is_valid(w))
        throw Error("invalid permutation '" + oneLine + "'");
    return w;
}

// ---- partitions ---------------------------------------------------------

int Partition::n_statistic() const {
    int s = 0;
    for (int i = 0; i < length(); ++i) s += i * parts[i];
    return s;
}

int Partition::hook(int row, int col) const {
    int arm = parts[row] - col - 1;
    int leg = 0;
    for (int r = row + 1; r < length() && parts[r] > col; ++r) ++leg;
    return arm + leg + 1;
}

std::string Partition::str() const {
    std::string s;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts[i]);
    }
    return s;
}

Partition make_partition(std::vector<int> parts) {
    if (parts.empty()) throw InvalidPartition("empty partition");
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0) throw InvalidPartition("partition parts must be positive");
        if (i && parts[i] > parts[i - 1]) throw InvalidPartition("partition parts must be weakly decreasing");
    }
    Partition tau;
    tau.parts = std::move(parts);
    tau.N = std::accumulate(tau.parts.begin(), tau.parts.end(), 0);
    if (tau.length() == 1 || tau.parts.front() == 1)
        throw InvalidPartition("one-dimensional representation excluded: " + tau.str());
    return tau;
}

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            parts.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw InvalidPartition("cannot parse partition '" + text + "'");
        }
    }
    return make_partition(std::move(parts));
}

// ---- tableaux -----------------------------------------------------------

namespace {

void place_entries(const Partition& tau, std::vector<int>& rowLen, int entry, Rsyt& cur,
                   std::vector<Rsyt>& out) {
    if (entry == 0) {
        out.push_back(cur);
        return;
    }
    for (int r = 0; r < tau.length(); ++r) {
        if (rowLen[r] >= tau.parts[r]) continue;
        if (r > 0 && rowLen[r - 1] <= rowLen[r]) continue;
        int c = rowLen[r];
        cur.row[entry - 1] = r;
        cur.col[entry - 1] = c;
        cur.content[entry - 1] = c - r;
        ++rowLen[r];
        place_entries(tau, rowLen, entry - 1, cur, out);
        --rowLen[r];
    }
}

}  // namespace

std::vector<Rsyt> enumerate_rsyt(const Partition& tau) {
    if (tau.length() == 1 || tau.parts.front() == 1)
        throw InvalidPartition("one-dimensional representation excluded: " + tau.str());
    const int N = tau.N;
    std::vector<Rsyt> out;
    Rsyt cur;
    cur.row.assign(N, 0);
    cur.col.assign(N, 0);
    cur.content.assign(N, 0);
    std::vector<int> rowLen(tau.length(), 0);
    place_entries(tau, rowLen, N, cur, out);

    std::sort(out.begin(), out.end(), [N](const Rsyt& a, const Rsyt& b) {
        bool aFirst = a.content[N - 2] == -1;
        bool bFirst = b.content[N - 2] == -1;
        if (aFirst != bFirst) return aFirst;
        return a.content > b.content;
    });
    return out;
}

// ---- rational matrices --------------------------------------------------

QMatrix QMatrix::identity(int size) {
    QMatrix m(size);
    for (int i = 0; i < size; ++i) m(i, i) = 1;
    return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    QMatrix c(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const Rational& aik = (*this)(i, k);
            if (aik.numerator() == 0) continue;
            for (int j = 0; j < n; ++j) {
                const Rational& bkj = o(k, j);
                if (bkj.numerator() != 0) c(i, j) += aik * bkj;
            }
        }
    return c;
}

RMat QMatrix::to_double() const {
    RMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = boost::rational_cast<double>((*this)(i, j));
    return m;
}

// ---- representation -----------------------------------------------------

const RMat& IrrepData::transposition(int i, int j, Basis b) const {
    const auto& table = b == Basis::Orthonormal ? transOrth : transSemi;
    return table[static_cast<size_t>(i) * N() + j];
}

QMatrix rep_matrix_exact(const IrrepData& irrep, const Perm& w) {
    QMatrix m = QMatrix::identity(irrep.nTau);
    for (int a : perm_reduced_word(w)) m = m * irrep.genExact[a];
    return m;
}

namespace {

RMat to_orthonormal(const QMatrix& q, const std::vector<double>& weights) {
    RMat m(q.n, q.n);
    for (int a = 0; a < q.n; ++a)
        for (int b = 0; b < q.n; ++b)
            m(a, b) = boost::rational_cast<double>(q(a, b)) * std::sqrt(weights[a] / weights[b]);
    return m;
}

}  // namespace

RMat rep_matrix(const IrrepData& irrep, const Perm& w, Basis b) {
    QMatrix q = rep_matrix_exact(irrep, w);
    return b == Basis::Orthonormal ? to_orthonormal(q, irrep.weights) : q.to_double();
}

IrrepData build_irrep(const Partition& tau) {
    IrrepData ir;
    ir.tau = tau;
    ir.basis = enumerate_rsyt(tau);
    const int N = tau.N;
    const int n = static_cast<int>(ir.basis.size());
    ir.nTau = n;

    std::map<std::vector<int>, int> index;
    for (int t = 0; t < n; ++t) index[ir.basis[t].content] = t;

    ir.mTau = 0;
    for (const auto& T : ir.basis)
        if (T.content[N - 2] == -1) ++ir.mTau;

    // Young's seminormal action of s_i on the RSYT basis.
    for (int i = 0; i + 1 < N; ++i) {
        QMatrix g(n);
        for (int t = 0; t < n; ++t) {
            const Rsyt& T = ir.basis[t];
            int ci = T.content[i], cj = T.content[i + 1];
            Rational b(1, ci - cj);
            g(t, t) = b;
            if (T.row[i] == T.row[i + 1] || T.col[i] == T.col[i + 1]) continue;
            std::vector<int> swapped = T.content;
            std::swap(swapped[i], swapped[i + 1]);
            int s = index.at(swapped);
            g(s, t) = b.numerator() > 0 ? Rational(1) : Rational(1) - b * b;
        }
        ir.genExact.push_back(g);
    }

    for (const auto& T : ir.basis) {
        Rational w(1);
        for (int i = 0; i < N; ++i)
            for (int j = i + 1; j < N; ++j) {
                int d = T.content[i] - T.content[j];
                if (T.content[i] <= T.content[j] - 2) w *= Rational(1) - Rational(1, d * d);
            }
        ir.weightsExact.push_back(w);
        ir.weights.push_back(boost::rational_cast<double>(w));
    }

    ir.s1 = 0;
    for (int i = 0; i < N; ++i) ir.s1 += ir.basis.front().content[i];
    ir.gammaExact = ir.s1 / Rational(N);
    ir.gamma = boost::rational_cast<double>(ir.gammaExact);

    for (const auto& g : ir.genExact) {
        ir.gen.push_back(g.to_double());
        ir.genOrth.push_back(to_orthonormal(g, ir.weights));
    }
    ir.sigma = ir.gen[N - 2];
    QMatrix ups = rep_matrix_exact(ir, perm_w0(N));
    ir.upsilon = ups.to_double();
    ir.upsilonOrth = to_orthonormal(ups, ir.weights);
    ir.sqrtWeights.resize(n);
    for (int t = 0; t < n; ++t) ir.sqrtWeights[t] = std::sqrt(ir.weights[t]);

    ir.transSemi.assign(static_cast<size_t>(N) * N, RMat());
    ir.transOrth.assign(static_cast<size_t>(N) * N, RMat());
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            if (i == j) continue;
            QMatrix q = rep_matrix_exact(ir, perm_transposition(N, i, j));
            ir.transSemi[static_cast<size_t>(i) * N + j] = q.to_double();
            ir.transOrth[static_cast<size_t>(i) * N + j] = to_orthonormal(q, ir.weights);
        }
    ir.lambdaTrace = ir.transSemi[1].trace();
    return ir;
}

// ---- Stembridge profile -------------------------------------------------

StembridgeProfile stembridge_profile(const Partition& tau) {
    const int N = tau.N;
    std::vector<long long> p(tau.n_statistic() + 1, 0);
    p.back() = 1;
    for (int i = 1; i <= N; ++i) {
        std::vector<long long> q(p.size() + i, 0);
        for (size_t k = 0; k < p.size(); ++k) {
            q[k] += p[k];
            q[k + i] -= p[k];
        }
        p = q;
    }
    for (int r = 0; r < tau.length(); ++r)
        for (int c = 0; c < tau.parts[r]; ++c) {
            int h = tau.hook(r, c);
            std::vector<long long> q(p.size(), 0);
            for (size_t k = 0; k < p.size(); ++k) q[k] = p[k] + (k >= static_cast<size_t>(h) ? q[k - h] : 0);
            // exact division: the quotient has degree deg(p) - h
            for (size_t k = p.size() - h; k < p.size(); ++k)
                if (q[k] != 0) throw Error("fake-degree division is not exact");
            q.resize(p.size() - h);
            p = q;
        }
    while (p.size() > 1 && p.back() == 0) p.pop_back();

    StembridgeProfile prof;
    prof.fakeDegree = p;
    prof.e.assign(N, 0);
    for (size_t k = 0; k < p.size(); ++k) prof.e[k % N] += p[k];
    long long n = 0;
    for (long long ej : prof.e) {
        prof.commutantDim += ej * ej;
        n += ej;
    }
    long long m = 0;
    for (const auto& T : enumerate_rsyt(tau))
        if (T.content[N - 2] == -1) ++m;
    prof.unknowns = m * m + (n - m) * (n - m);
    prof.equations = n * n - prof.commutantDim;
    return prof;
}

std::vector<int> upsilon_multiplicities(const IrrepData& irrep) {
    const int N = irrep.N();
    Eigen::ComplexEigenSolver<CMat> es(irrep.upsilon.cast<cplx>());
    std::vector<int> mult(N, 0);
    for (int k = 0; k < es.eigenvalues().size(); ++k) {
        double ang = std::arg(es.eigenvalues()[k]);
        int j = static_cast<int>(std::lround(ang * N / (2 * kPi)));
        mult[((j % N) + N) % N] += 1;
    }
    return mult;
}

}  // namespace jw
