#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "gse/embedding.hpp"
#include "gse/sylvester.hpp"
#include "test_util.hpp"

using namespace gse;

namespace {
DescriptorConfig small_cfg() {
    DescriptorConfig cfg;
    cfg.m = 20;
    cfg.num_scales = 16;
    return cfg;
}
}  // namespace

TEST_CASE("kernel descriptor hand values") {
    DescriptorConfig cfg;
    cfg.num_scales = 1;
    cfg.m = 2;
    SUBCASE("single pair at its own scale") {
        Vector v(1);
        v << 2.5;
        Matrix u = Matrix::Ones(1, 1);
        Matrix psi = spectral_kernel_descriptor(v, u, cfg);
        CHECK(psi(0, 0) == doctest::Approx(1.0));  // exponent is zero
    }
    SUBCASE("zero eigenvector entries give zero descriptor") {
        Vector v(2);
        v << 1.0, 2.0;
        Matrix u = Matrix::Zero(3, 2);
        u(1, 0) = 1.0;
        u(2, 1) = 1.0;
        Matrix psi = spectral_kernel_descriptor(v, u, cfg);
        CHECK(psi(0, 0) == 0.0);
    }
    SUBCASE("two pairs, one silent at node i") {
        // values {1, e^2}: with sigma = 1 the second pair contributes
        // e^{-2} * u2(i)^2 = 0 at node 0; total is exactly 1
        Vector v(2);
        v << std::exp(2.0), 1.0;
        Matrix u = Matrix::Zero(2, 2);
        u(1, 0) = 1.0;  // u for e^2 lives on node 1
        u(0, 1) = 1.0;  // u for 1 lives on node 0
        DescriptorConfig c;
        c.num_scales = 1;
        c.m = 2;
        // pin sigma to 1: dlog = 2 / num_scales = 2, factor 0.5
        c.sigma_factor = 0.5;
        Matrix psi = spectral_kernel_descriptor(v, u, c);
        // scale t = v_min = 1 (single scale), log t = 0
        CHECK(psi(0, 0) == doctest::Approx(1.0));
        CHECK(psi(1, 0) == doctest::Approx(std::exp(-2.0)));
    }
}

TEST_CASE("descriptor is invariant to eigenvector sign flips") {
    std::mt19937_64 rng(41);
    std::normal_distribution<double> gauss;
    Vector v(4);
    v << 4.0, 3.0, 2.0, 1.0;
    Matrix u(6, 4);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 4; ++j) u(i, j) = gauss(rng);
    DescriptorConfig cfg = small_cfg();
    Matrix a = spectral_kernel_descriptor(v, u, cfg);
    Matrix flipped = u;
    flipped.col(1) = -flipped.col(1);
    flipped.col(3) = -flipped.col(3);
    Matrix b = spectral_kernel_descriptor(v, flipped, cfg);
    CHECK((a - b).cwiseAbs().maxCoeff() == 0.0);  // bit-identical
}

TEST_CASE("all values below floor rejected") {
    Vector v = Vector::Zero(2);
    Matrix u = Matrix::Identity(2, 2);
    CHECK_THROWS_AS(spectral_kernel_descriptor(v, u, small_cfg()),
                    AllValuesBelowFloor);
}

TEST_CASE("gse_embed: K2 rows identical") {
    auto g = Graph::from_edge_list({{"a", "b", 1.0}});
    Matrix emb = gse_embed(g, small_cfg());
    CHECK(emb.rows() == 2);
    CHECK((emb.row(0) - emb.row(1)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("gse_embed: barbell mirror nodes have equal descriptors") {
    auto g = testutil::barbell(5);
    Matrix emb = gse_embed(g, small_cfg());
    // mirror automorphism maps node i to i+5 mod 10 (clique order preserved)
    for (int i = 0; i < 5; ++i) {
        int mirror = 9 - i;  // clique nodes 0..4 <-> 9..5: 4<->5 (bridge ends)
        CHECK((emb.row(i) - emb.row(mirror)).cwiseAbs().maxCoeff() < 1e-6);
    }
}

TEST_CASE("gse_embed permutation equivariance") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 5; ++trial) {
        auto g = testutil::random_connected_graph(9, 0.35, rng);
        const int n = g.num_nodes();
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<Graph::EdgeRow> rows;
        for (const auto& e : g.edges())
            rows.emplace_back("q" + std::to_string(perm[e.u]),
                              "q" + std::to_string(perm[e.v]), e.w);
        auto h = Graph::from_edge_list(rows);
        Matrix eg = gse_embed(g, small_cfg());
        Matrix eh = gse_embed(h, small_cfg());
        for (int i = 0; i < n; ++i) {
            int hi = h.index_of("q" + std::to_string(perm[i]));
            CHECK((eg.row(i) - eh.row(hi)).cwiseAbs().maxCoeff() < 1e-8);
        }
    }
}

TEST_CASE("gsse: shifted pencil basics") {
    std::mt19937_64 rng(47);
    auto g = testutil::random_connected_graph(10, 0.3, rng);
    auto cg = build_centrality_graph(g);
    for (double beta : {-0.2, -200.0, 0.0, 1.5}) {
        EigenSystem es = gsse_system(cg, beta);
        CHECK(es.values.minCoeff() == doctest::Approx(0.0).epsilon(1e-9));
        // gaps preserved relative to the unshifted pencil
        SymMatrix pencil(cg.w_be.mat() - beta * cg.l_be.mat());
        EigenSystem raw = sym_eig(pencil);
        for (int i = 0; i + 1 < es.values.size(); ++i)
            CHECK(es.values[i + 1] - es.values[i] ==
                  doctest::Approx(raw.values[i + 1] - raw.values[i])
                      .epsilon(1e-10));
    }
    SUBCASE("beta = 0 degenerates to W^BE shifted") {
        EigenSystem es = gsse_system(cg, 0.0);
        EigenSystem ew = sym_eig(cg.w_be);
        double mu = -ew.values.minCoeff();
        for (int i = 0; i < es.values.size(); ++i)
            CHECK(es.values[i] == doctest::Approx(ew.values[i] + mu));
    }
}

TEST_CASE("gsse: large |beta| tracks L^BE eigenvectors on the barbell") {
    auto g = testutil::barbell(5);
    auto cg = build_centrality_graph(g);
    EigenSystem el = sym_eig(cg.l_be);
    Matrix low_l = el.vectors.leftCols(4);

    auto subspace_gap = [&](double beta) {
        EigenSystem es = gsse_system(cg, beta);
        Matrix low = es.vectors.leftCols(4);
        // largest principal angle via smallest singular value of overlaps
        Eigen::JacobiSVD<Matrix> s(low_l.transpose() * low);
        return std::acos(std::min(1.0, s.singularValues().minCoeff()));
    };
    CHECK(subspace_gap(-200.0) < subspace_gap(-0.2));
}

TEST_CASE("stacked baseline") {
    auto g = Graph::from_edge_list({{"a", "b", 1.0}});
    DescriptorConfig cfg = small_cfg();
    Matrix emb = stacked_baseline_embed(g, cfg);
    CHECK(emb.cols() == 2 * cfg.num_scales);
    CHECK((emb.row(0) - emb.row(1)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("edge embedding") {
    auto g = Graph::from_edge_list({{"a", "b", 1.0}});
    Matrix node_emb(2, 3);
    node_emb << 1, 2, 3, 4, 5, 6;
    Matrix ee = edge_embed(node_emb, g);
    REQUIRE(ee.rows() == 1);
    REQUIRE(ee.cols() == 6);
    CHECK(ee(0, 0) == 1.0);
    CHECK(ee(0, 3) == 4.0);
    Matrix sym = edge_embed(node_emb, g, true);
    CHECK(sym.cols() == 3);
    CHECK(sym(0, 0) == 5.0);
}

TEST_CASE("spreads") {
    std::mt19937_64 rng(53);
    auto g = testutil::random_connected_graph(8, 0.4, rng, true);
    auto w = affinity_matrix(g);
    auto l = normalized_laplacian(w);
    auto el = sym_eig(l);
    auto ew = sym_eig(w);

    SUBCASE("null eigenvector has zero spectral spread") {
        CHECK(spectral_spread(l, el.vectors.col(0)) ==
              doctest::Approx(0.0).epsilon(1e-10));
    }
    SUBCASE("top eigenvector of W attains lambda_max") {
        int last = static_cast<int>(ew.values.size()) - 1;
        CHECK(vertex_spread(w, ew.vectors.col(last)) ==
              doctest::Approx(ew.values[last]));
    }
    SUBCASE("Parseval form of the spectral spread") {
        std::normal_distribution<double> gauss;
        for (int trial = 0; trial < 20; ++trial) {
            Vector x(g.num_nodes());
            for (int i = 0; i < x.size(); ++i) x[i] = gauss(rng);
            Vector xhat = el.vectors.transpose() * x;
            double by_sum = el.values.dot(xhat.array().square().matrix()) /
                            x.squaredNorm();
            CHECK(spectral_spread(l, x) == doctest::Approx(by_sum).epsilon(1e-10));
        }
    }
    SUBCASE("zero signal rejected") {
        CHECK_THROWS_AS(vertex_spread(w, Vector::Zero(8)), ZeroSignal);
        CHECK_THROWS_AS(spectral_spread(l, Vector::Zero(8)), ZeroSignal);
    }
    SUBCASE("pencil stationarity of the smallest eigenvector") {
        auto cg = build_centrality_graph(g);
        for (double beta : {-200.0, -0.2}) {
            SymMatrix neg_pencil(beta * cg.l_be.mat() - cg.w_be.mat());
            EigenSystem es = sym_eig(neg_pencil);
            Vector x = es.vectors.col(0);
            Matrix m = cg.w_be.mat() - beta * cg.l_be.mat();
            double gamma = x.dot(m * x);
            CHECK((m * x - gamma * x).norm() < 1e-8);
        }
    }
}

TEST_CASE("spread bounds over random unit vectors") {
    std::mt19937_64 rng(59);
    std::normal_distribution<double> gauss;
    for (int gi = 0; gi < 4; ++gi) {
        auto g = testutil::random_connected_graph(8, 0.3, rng, gi % 2 == 1);
        auto cg = build_centrality_graph(g);
        double wmax = sym_eig(cg.w_be).values.cwiseAbs().maxCoeff();
        for (int trial = 0; trial < 200; ++trial) {
            Vector x(g.num_nodes());
            for (int i = 0; i < x.size(); ++i) x[i] = gauss(rng);
            x.normalize();
            double gl = spectral_spread(cg.l_be, x);
            double gw = vertex_spread(cg.w_be, x);
            CHECK(gl >= -1e-9);
            CHECK(gl <= 2.0 + 1e-9);
            CHECK(std::abs(gw) <= wmax + 1e-9);
        }
    }
}
