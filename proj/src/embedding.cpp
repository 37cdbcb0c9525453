#include "gse/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gse/sylvester.hpp"

namespace gse {

Matrix spectral_kernel_descriptor(const Vector& values, const Matrix& vectors,
                                  const DescriptorConfig& cfg) {
    if (cfg.m < 1 || cfg.num_scales < 1 || cfg.sigma_factor <= 0.0)
        throw Error("invalid descriptor config");
    if (values.size() != vectors.cols())
        throw Error("descriptor: value/vector count mismatch");
    if (values.size() > 0 && values.minCoeff() < 0.0)
        throw Error("descriptor values must be nonnegative");

    const double vmax = values.size() > 0 ? values.maxCoeff() : 0.0;
    const double floor = cfg.eps_sv_rel * vmax;

    // indices of retained values, largest first
    std::vector<int> idx;
    for (int l = 0; l < values.size(); ++l)
        if (values[l] > floor && values[l] > 0.0) idx.push_back(l);
    if (idx.empty())
        throw AllValuesBelowFloor("no spectral value above the floor");
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return values[a] > values[b]; });
    if (static_cast<int>(idx.size()) > cfg.m) idx.resize(cfg.m);

    double vlo = values[idx.back()];
    double vhi = values[idx.front()];
    for (int l : idx) {
        vlo = std::min(vlo, values[l]);
        vhi = std::max(vhi, values[l]);
    }

    const int k = cfg.num_scales;
    Vector scales(k);
    if (cfg.log_spacing) {
        double llo = std::log(vlo), lhi = std::log(vhi);
        for (int s = 0; s < k; ++s)
            scales[s] = std::exp(k == 1 ? llo : llo + (lhi - llo) * s / (k - 1));
    } else {
        for (int s = 0; s < k; ++s)
            scales[s] = k == 1 ? vlo : vlo + (vhi - vlo) * s / (k - 1);
    }

    double dlog = (std::log(vhi) - std::log(vlo)) / k;
    double sigma = cfg.sigma_factor * std::max(dlog, 1e-3);

    const Eigen::Index n = vectors.rows();
    Matrix emb = Matrix::Zero(n, k);
    Vector logv(static_cast<int>(idx.size()));
    Matrix usq(n, static_cast<int>(idx.size()));
    for (std::size_t c = 0; c < idx.size(); ++c) {
        logv[static_cast<int>(c)] = std::log(values[idx[c]]);
        usq.col(static_cast<int>(c)) = vectors.col(idx[c]).array().square();
    }
    for (int s = 0; s < k; ++s) {
        double lt = std::log(scales[s]);
        Vector wgt = (-(lt - logv.array()).square() / (2.0 * sigma * sigma))
                         .exp() * cfg.c_scale;
        emb.col(s) = usq * wgt;
    }
    return emb;
}

Matrix gse_embed(const CentralityGraph& cg, const DescriptorConfig& cfg) {
    auto p = SylvesterProblem::identity_rhs(cg.w_be, cg.l_be);
    Matrix x = solve_analytical(p);
    SvdSystem s = svd(x);
    return spectral_kernel_descriptor(s.singular_values, s.U, cfg);
}

Matrix gse_embed(const Graph& g, const DescriptorConfig& cfg, PathMetric metric) {
    return gse_embed(build_centrality_graph(g, metric), cfg);
}

EigenSystem gsse_system(const CentralityGraph& cg, double beta) {
    SymMatrix pencil(cg.w_be.mat() - beta * cg.l_be.mat());
    EigenSystem es = sym_eig(pencil);
    double mu = -es.values.minCoeff();
    es.values.array() += mu;
    return es;
}

Matrix gsse_embed(const Graph& g, double beta, const DescriptorConfig& cfg,
                  PathMetric metric, bool raw_vectors) {
    auto cg = build_centrality_graph(g, metric);
    EigenSystem es = gsse_system(cg, beta);
    int m = std::min<int>(cfg.m, static_cast<int>(es.values.size()));
    // smallest m pairs of the shifted pencil
    Vector vals = es.values.head(m);
    Matrix vecs = es.vectors.leftCols(m);
    if (raw_vectors) return vecs;
    DescriptorConfig c = cfg;
    c.m = m;
    return spectral_kernel_descriptor(vals, vecs, c);
}

Matrix stacked_baseline_embed(const Graph& g, const DescriptorConfig& cfg,
                              PathMetric metric) {
    auto cg = build_centrality_graph(g, metric);
    EigenSystem ew = sym_eig(cg.w_be);
    EigenSystem el = sym_eig(cg.l_be);
    // W^BE can have negative eigenvalues; the kernel takes magnitudes
    Matrix left = spectral_kernel_descriptor(ew.values.cwiseAbs(), ew.vectors, cfg);
    Matrix right = spectral_kernel_descriptor(el.values.cwiseAbs(), el.vectors, cfg);
    Matrix out(left.rows(), left.cols() + right.cols());
    out << left, right;
    return out;
}

Matrix edge_embed(const Matrix& node_emb, const Graph& g, bool symmetric) {
    if (node_emb.rows() != g.num_nodes())
        throw Error("edge_embed: embedding rows do not match graph");
    const Eigen::Index d = node_emb.cols();
    const int m = g.num_edges();
    Matrix out(m, symmetric ? d : 2 * d);
    for (int e = 0; e < m; ++e) {
        auto [lo, hi] = edge_key(g.edges()[e].u, g.edges()[e].v);
        if (symmetric) {
            out.row(e) = node_emb.row(lo) + node_emb.row(hi);
        } else {
            out.row(e).head(d) = node_emb.row(lo);
            out.row(e).tail(d) = node_emb.row(hi);
        }
    }
    return out;
}

double vertex_spread(const SymMatrix& w, const Vector& x) {
    double n2 = x.squaredNorm();
    if (!(n2 > 0.0)) throw ZeroSignal("vertex_spread of zero signal");
    return x.dot(w.mat() * x) / n2;
}

double spectral_spread(const SymMatrix& l, const Vector& x) {
    double n2 = x.squaredNorm();
    if (!(n2 > 0.0)) throw ZeroSignal("spectral_spread of zero signal");
    return x.dot(l.mat() * x) / n2;
}

}  // namespace gse
