#pragma once

#include "gse/centrality.hpp"
#include "gse/graph.hpp"
#include "gse/numerics.hpp"

namespace gse {

struct DescriptorConfig {
    int m = 800;              // top spectral pairs kept (capped at what exists)
    int num_scales = 800;     // embedding width
    double sigma_factor = 7.0;  // bandwidth multiplier on the log-scale step
    double c_scale = 1.0;     // per-scale constant c_t
    double eps_sv_rel = 1e-10;  // values below eps_sv_rel * max are dropped
    bool log_spacing = false;   // scales log-spaced instead of linear
};

// Spectral kernel signature: for each node i and scale t_s,
// psi(i, t_s) = sum_l c * exp(-(log t_s - log v_l)^2 / (2 sigma^2)) u_l(i)^2
// over the m largest retained spectral values v_l (all entries of `values`
// must be nonnegative; callers pass singular values or shifted/absolute
// eigenvalues). Scales span [v_min+, v_max] of the retained values.
Matrix spectral_kernel_descriptor(const Vector& values, const Matrix& vectors,
                                  const DescriptorConfig& cfg);

// Full pipeline: centrality graph -> L^BE -> Stein solve with
// A = W^BE, B = L^BE, C = I -> SVD of X -> kernel descriptor on U.
Matrix gse_embed(const Graph& g, const DescriptorConfig& cfg,
                 PathMetric metric = PathMetric::Hops);
Matrix gse_embed(const CentralityGraph& cg, const DescriptorConfig& cfg);

// Shifted pencil L_delta = (W^BE - beta L^BE) + mu I with mu chosen so the
// smallest eigenvalue is zero; eigen-gaps of the pencil are preserved.
EigenSystem gsse_system(const CentralityGraph& cg, double beta);

// Descriptor over the smallest m eigenpairs of L_delta. If raw_vectors is
// set, returns those eigenvectors directly instead (one column per pair).
Matrix gsse_embed(const Graph& g, double beta, const DescriptorConfig& cfg,
                  PathMetric metric = PathMetric::Hops,
                  bool raw_vectors = false);

// St.(W^BE, L^BE): descriptors of the two eigensystems, concatenated.
Matrix stacked_baseline_embed(const Graph& g, const DescriptorConfig& cfg,
                              PathMetric metric = PathMetric::Hops);

// Row per edge of g (edge-list order): concat(emb[min], emb[max]), or the
// elementwise sum of the two node rows in symmetric mode.
Matrix edge_embed(const Matrix& node_emb, const Graph& g,
                  bool symmetric = false);

// Rayleigh quotients x^T W x / |x|^2 and x^T L x / |x|^2.
double vertex_spread(const SymMatrix& w, const Vector& x);
double spectral_spread(const SymMatrix& l, const Vector& x);

}  // namespace gse
