#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include <Eigen/Eigenvalues>

#include "jackweight/symgroup.hpp"
#include "test_helpers.hpp"

using namespace jw;

namespace {

long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// Fills the shape row by row with every permutation of 1..N and keeps the reverse-standard fillings.
std::set<std::vector<int>> brute_force_rsyt_contents(const Partition& tau) {
    std::vector<int> fill(tau.N);
    std::iota(fill.begin(), fill.end(), 1);
    std::set<std::vector<int>> out;
    do {
        std::vector<std::vector<int>> grid;
        int k = 0;
        for (int len : tau.parts) grid.emplace_back(fill.begin() + k, fill.begin() + k + len), k += len;
        bool ok = true;
        for (size_t r = 0; r < grid.size() && ok; ++r)
            for (size_t c = 0; c < grid[r].size() && ok; ++c) {
                if (c + 1 < grid[r].size() && grid[r][c] < grid[r][c + 1]) ok = false;
                if (r + 1 < grid.size() && c < grid[r + 1].size() && grid[r][c] < grid[r + 1][c]) ok = false;
            }
        if (!ok) continue;
        std::vector<int> content(tau.N);
        for (size_t r = 0; r < grid.size(); ++r)
            for (size_t c = 0; c < grid[r].size(); ++c)
                content[grid[r][c] - 1] = static_cast<int>(c) - static_cast<int>(r);
        out.insert(content);
    } while (std::next_permutation(fill.begin(), fill.end()));
    return out;
}

long long hook_length_count(const Partition& tau) {
    long long prod = 1;
    for (int r = 0; r < tau.length(); ++r)
        for (int c = 0; c < tau.parts[r]; ++c) {
            int arm = tau.parts[r] - c - 1;
            int leg = 0;
            for (int rr = r + 1; rr < tau.length() && tau.parts[rr] > c; ++rr) ++leg;
            prod *= arm + leg + 1;
        }
    return factorial(tau.N) / prod;
}

}  // namespace

TEST_CASE("permutation utilities") {
    for (int trial = 0; trial < 50; ++trial) {
        int N = 3 + trial % 4;
        Perm a = jwtest::random_perm(N), b = jwtest::random_perm(N);
        CHECK(perm_compose(a, perm_inverse(a)) == perm_identity(N));
        Perm ab = perm_compose(a, b);
        for (int i = 0; i < N; ++i) CHECK(ab[i] == a[b[i]]);
        Perm fromWord = perm_identity(N);
        for (int s : perm_reduced_word(a)) fromWord = perm_compose(fromWord, perm_transposition(N, s, s + 1));
        CHECK(fromWord == a);
    }
    CHECK(perm_w0(4) == Perm{1, 2, 3, 0});
    CHECK(perm_parse("2,3,1", 3) == Perm{1, 2, 0});
    CHECK_THROWS_AS(perm_parse("1,1,2", 3), Error);
    CHECK_THROWS_AS(perm_parse("1,2", 3), Error);
}

TEST_CASE("partition parsing rejects invalid shapes") {
    CHECK(parse_partition("4,2").N == 6);
    CHECK_THROWS_AS(parse_partition("1,2"), InvalidPartition);
    CHECK_THROWS_AS(parse_partition("3"), InvalidPartition);
    CHECK_THROWS_AS(parse_partition("1,1,1"), InvalidPartition);
    CHECK_THROWS_AS(parse_partition("2,x"), InvalidPartition);
    CHECK_THROWS_AS(parse_partition(""), InvalidPartition);
}

TEST_CASE("RSYT enumeration matches brute force and the hook-length formula") {
    for (const auto& s : jwtest::small_partitions()) {
        Partition tau = parse_partition(s);
        auto basis = enumerate_rsyt(tau);
        std::set<std::vector<int>> got;
        for (const auto& T : basis) got.insert(T.content);
        CHECK(got == brute_force_rsyt_contents(tau));
        CHECK(static_cast<long long>(basis.size()) == hook_length_count(tau));
    }
}

TEST_CASE("basis order puts c(N-1,T) = -1 first and sigma is diagonal") {
    for (const auto& s : jwtest::small_partitions()) {
        IrrepData ir = build_irrep(parse_partition(s));
        const int N = ir.N();
        int m = 0;
        for (const auto& T : ir.basis) m += T.content[N - 2] == -1;
        CHECK(ir.mTau == m);
        for (int t = 0; t < ir.nTau; ++t) CHECK((ir.basis[t].content[N - 2] == -1) == (t < ir.mTau));
        RMat expect = RMat::Identity(ir.nTau, ir.nTau);
        expect.topLeftCorner(m, m) *= -1;
        CHECK((ir.sigma - expect).norm() == 0.0);
    }
}

TEST_CASE("representation relations hold exactly") {
    for (const auto& s : jwtest::small_partitions()) {
        IrrepData ir = build_irrep(parse_partition(s));
        const int N = ir.N();
        QMatrix I = QMatrix::identity(ir.nTau);
        for (int i = 0; i + 1 < N; ++i) {
            CHECK(ir.genExact[i] * ir.genExact[i] == I);
            if (i + 2 < N) {
                const QMatrix &a = ir.genExact[i], &b = ir.genExact[i + 1];
                CHECK(a * b * a == b * a * b);
            }
        }
        for (int trial = 0; trial < 10; ++trial) {
            Perm a = jwtest::random_perm(N), b = jwtest::random_perm(N);
            CHECK(rep_matrix_exact(ir, perm_compose(a, b)) == rep_matrix_exact(ir, a) * rep_matrix_exact(ir, b));
        }
    }
}

TEST_CASE("G-invariant weights agree with a numerically solved invariant form") {
    for (const auto& s : jwtest::small_partitions()) {
        IrrepData ir = build_irrep(parse_partition(s));
        const int n = ir.nTau;
        // Solve g^T W g = W for diagonal W over all generators.
        RMat A = RMat::Zero(static_cast<long>(ir.gen.size()) * n * n, n);
        for (size_t g = 0; g < ir.gen.size(); ++g)
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c)
                    for (int k = 0; k < n; ++k)
                        A((g * n + r) * n + c, k) = ir.gen[g](k, r) * ir.gen[g](k, c) - (r == c && r == k ? 1.0 : 0.0);
        Eigen::JacobiSVD<RMat> svd(A, Eigen::ComputeFullV);
        RVec w = svd.matrixV().col(n - 1);
        w /= w[0];
        CHECK(svd.singularValues()[n - 2] > 1e-3);
        for (int t = 0; t < n; ++t) CHECK(ir.weights[t] / ir.weights[0] == doctest::Approx(w[t]).epsilon(1e-12));
        for (const auto& g : ir.genOrth) CHECK((g * g.transpose() - RMat::Identity(n, n)).norm() < 1e-12);
    }
}

TEST_CASE("Jucys-Murphy elements act by contents") {
    for (const auto& s : jwtest::small_partitions()) {
        IrrepData ir = build_irrep(parse_partition(s));
        const int N = ir.N();
        for (int i = 0; i < N; ++i) {
            RMat J = RMat::Zero(ir.nTau, ir.nTau);
            for (int j = i + 1; j < N; ++j) J += rep_matrix(ir, perm_transposition(N, i, j));
            RMat D = RMat::Zero(ir.nTau, ir.nTau);
            for (int t = 0; t < ir.nTau; ++t) D(t, t) = ir.basis[t].content[i];
            CHECK((J - D).norm() < 1e-12);
        }
    }
}

TEST_CASE("constants for tau = (4,2)") {
    IrrepData ir = build_irrep(parse_partition("4,2"));
    CHECK(ir.nTau == 9);
    CHECK(ir.mTau == 3);
    StembridgeProfile sp = stembridge_profile(ir.tau);
    CHECK(sp.e == std::vector<long long>{2, 1, 2, 1, 2, 1});
    CHECK(sp.commutantDim == 15);
    CHECK(sp.unknowns == 45);
    CHECK(sp.equations == 66);
}

TEST_CASE("(2,1) scalars") {
    IrrepData ir = build_irrep(parse_partition("2,1"));
    CHECK(ir.nTau == 2);
    CHECK(ir.mTau == 1);
    CHECK(ir.gamma == 0.0);
    CHECK(ir.lambdaTrace == 0.0);
}

TEST_CASE("upsilon multiplicities match the Stembridge profile") {
    for (const auto& s : jwtest::small_partitions()) {
        IrrepData ir = build_irrep(parse_partition(s));
        StembridgeProfile sp = stembridge_profile(ir.tau);
        auto mult = upsilon_multiplicities(ir);
        long long sum = 0, sq = 0;
        for (int j = 0; j < ir.N(); ++j) {
            CHECK(mult[j] == sp.e[j]);
            sum += sp.e[j];
            sq += sp.e[j] * sp.e[j];
        }
        CHECK(sum == ir.nTau);
        CHECK(sq == sp.commutantDim);
        CHECK(sp.unknowns == ir.mTau * ir.mTau + (ir.nTau - ir.mTau) * (ir.nTau - ir.mTau));
        CHECK(sp.equations == ir.nTau * ir.nTau - sp.commutantDim);
    }
}

TEST_CASE("trace of a transposition and the content sum") {
    for (const auto& s : jwtest::small_partitions()) {
        IrrepData ir = build_irrep(parse_partition(s));
        const int N = ir.N();
        CHECK(ir.lambdaTrace == doctest::Approx(2 * ir.gamma * ir.nTau / (N - 1)).epsilon(1e-12));
        for (int i = 0; i < N; ++i)
            for (int j = i + 1; j < N; ++j)
                CHECK(ir.transposition(i, j).trace() == doctest::Approx(ir.lambdaTrace).epsilon(1e-12));
        Rational m = Rational(ir.nTau) * (Rational(1, 2) - ir.s1 / Rational(N * (N - 1)));
        CHECK(m == Rational(ir.mTau));
    }
}
