#include <doctest.h>

#include <numeric>
#include <random>

#include "gse/sylvester.hpp"

using namespace gse;

namespace {

SymMatrix diag(std::initializer_list<double> vals) {
    int n = static_cast<int>(vals.size());
    Matrix m = Matrix::Zero(n, n);
    int i = 0;
    for (double v : vals) m(i, i) = v, ++i;
    return SymMatrix(m);
}

// Random symmetric problem with eigenvalues kept away from the
// singular surface lambda_a * lambda_b = 1.
SylvesterProblem random_solvable(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss;
    auto rand_sym = [&] {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = gauss(rng);
        return SymMatrix(Matrix(0.5 * (m + m.transpose())));
    };
    for (int attempt = 0; attempt < 100; ++attempt) {
        SymMatrix a = rand_sym();
        SymMatrix b = rand_sym();
        if (solvability_margin(sym_eig(a), sym_eig(b)) > 1e-3)
            return SylvesterProblem::identity_rhs(std::move(a), std::move(b));
    }
    throw std::runtime_error("no solvable random problem found");
}

}  // namespace

TEST_CASE("scalar closed form") {
    auto p = SylvesterProblem::identity_rhs(diag({2.0}), diag({3.0}));
    Matrix x = solve_analytical(p);
    CHECK(x(0, 0) == doctest::Approx(0.2));
    CHECK(solve_kronecker_oracle(p)(0, 0) == doctest::Approx(0.2));
}

TEST_CASE("diagonal closed form per entry") {
    auto p = SylvesterProblem::identity_rhs(diag({2.0, 0.5}), diag({3.0, 1.0}));
    Matrix x = solve_analytical(p);
    CHECK(x(0, 0) == doctest::Approx(0.2));
    CHECK(x(1, 1) == doctest::Approx(-2.0));
    CHECK(std::abs(x(0, 1)) < 1e-12);
}

TEST_CASE("singular pencil rejected") {
    auto p = SylvesterProblem::identity_rhs(diag({1.0}), diag({1.0}));
    CHECK_THROWS_AS(solve_analytical(p), NearSingularPencil);
}

TEST_CASE("A = 0 gives X = -C") {
    SymMatrix a(Matrix::Zero(4, 4));
    std::mt19937_64 rng(17);
    std::normal_distribution<double> gauss;
    Matrix bm(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) bm(i, j) = gauss(rng);
    auto p = SylvesterProblem::identity_rhs(a, SymMatrix(Matrix(0.5 * (bm + bm.transpose()))));
    Matrix x = solve_kronecker_oracle(p);
    CHECK((x + Matrix::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("analytical and Kronecker routes agree; residual contract") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + trial % 14;
        auto p = random_solvable(n, rng);
        Matrix xa = solve_analytical(p);
        Matrix xk = solve_kronecker_oracle(p);
        CHECK((xa - xk).cwiseAbs().maxCoeff() < 1e-8);
        CHECK(stein_residual(p, xa) <= 1e-7 * n);
    }
}

TEST_CASE("perturbing the solution raises the residual") {
    std::mt19937_64 rng(29);
    auto p = random_solvable(8, rng);
    Matrix x = solve_analytical(p);
    double base = stein_residual(p, x);
    std::normal_distribution<double> gauss;
    for (int trial = 0; trial < 5; ++trial) {
        Matrix e(8, 8);
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) e(i, j) = gauss(rng);
        e /= e.norm();
        CHECK(stein_residual(p, x + e) > base);
    }
}

TEST_CASE("permutation equivariance") {
    std::mt19937_64 rng(31);
    SUBCASE("identity permutation") {
        auto p = random_solvable(6, rng);
        std::vector<int> id(6);
        std::iota(id.begin(), id.end(), 0);
        CHECK(permutation_equivariance_residual(p, id) < 1e-12);
    }
    SUBCASE("swap on the diagonal example") {
        auto p = SylvesterProblem::identity_rhs(diag({2.0, 0.5}), diag({3.0, 1.0}));
        CHECK(permutation_equivariance_residual(p, {1, 0}) < 1e-12);
    }
    SUBCASE("random problems and permutations") {
        for (int trial = 0; trial < 20; ++trial) {
            int n = 3 + trial % 13;
            auto p = random_solvable(n, rng);
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            CHECK(permutation_equivariance_residual(p, perm) < 1e-8);
        }
    }
}

TEST_CASE("polynomial identity in A^k, B^k") {
    std::mt19937_64 rng(37);
    SUBCASE("k = 1 is the defining equation") {
        auto p = random_solvable(6, rng);
        CHECK(polynomial_identity_residual(p, 1) < 1e-8);
    }
    SUBCASE("k = 2 on the diagonal example") {
        auto p = SylvesterProblem::identity_rhs(diag({2.0, 0.5}), diag({3.0, 1.0}));
        CHECK(polynomial_identity_residual(p, 2) < 1e-10);
    }
    SUBCASE("k up to 4 on random dim-8 problems") {
        for (int trial = 0; trial < 5; ++trial) {
            auto p = random_solvable(8, rng);
            for (int k = 1; k <= 4; ++k)
                CHECK(polynomial_identity_residual(p, k) <= 1e-7 * 8);
        }
    }
}
