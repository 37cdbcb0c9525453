#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>

#include "gse/centrality.hpp"
#include "gse/embedding.hpp"
#include "gse/io.hpp"
#include "gse/tasks.hpp"

using json = nlohmann::json;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNumerical = 3;

gse::PathMetric parse_metric(const std::string& s) {
    if (s == "hops") return gse::PathMetric::Hops;
    if (s == "weighted") return gse::PathMetric::WeightedDistance;
    throw CLI::ValidationError("--metric must be 'hops' or 'weighted'");
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw gse::Error("cannot open output '" + path + "'");
    return file;
}

json report_to_json(const gse::TaskReport& r) {
    json j;
    j["metrics"] = r.metrics;
    j["seed"] = r.seed;
    if (!r.warnings.empty()) j["warnings"] = r.warnings;
    return j;
}

int run(int argc, char** argv) {
    CLI::App app{"Graph Sylvester Embedding toolkit"};
    app.require_subcommand(1);

    int threads = 0;
    app.add_option("--threads", threads, "cap internal parallelism (0 = default)");

    std::string input, output, metric_name = "hops";
    std::uint64_t seed = 0;

    // centrality
    auto* cmd_cent = app.add_subcommand("centrality", "edge betweenness centrality TSV");
    cmd_cent->add_option("input", input, "edge-list file")->required();
    cmd_cent->add_option("-o,--output", output, "output path (default stdout)");
    cmd_cent->add_option("--metric", metric_name, "hops|weighted");

    // embed
    gse::DescriptorConfig cfg;
    std::string method = "gse";
    double beta = -0.2;
    bool gsse_raw = false;
    auto* cmd_embed = app.add_subcommand("embed", "node embedding CSV");
    cmd_embed->add_option("input", input, "edge-list file")->required();
    cmd_embed->add_option("-o,--output", output, "output path (default stdout)");
    cmd_embed->add_option("--method", method, "gse|gsse|stacked");
    cmd_embed->add_option("--scales", cfg.num_scales, "number of scales (default 800)");
    cmd_embed->add_option("--m", cfg.m, "top spectral pairs (default 800)");
    cmd_embed->add_option("--sigma-factor", cfg.sigma_factor, "kernel bandwidth factor");
    cmd_embed->add_flag("--log-spacing", cfg.log_spacing, "log-spaced scales");
    cmd_embed->add_option("--beta", beta, "GSSE pencil parameter");
    cmd_embed->add_flag("--gsse-raw", gsse_raw, "emit raw GSSE eigenvectors");
    cmd_embed->add_option("--metric", metric_name, "hops|weighted");

    // align
    std::string g2_path, anchors_path, truth_path, distance_name = "euclidean";
    std::string matches_out;
    double anchor_weight = 1.0;
    int folds = 1;
    auto* cmd_align = app.add_subcommand("align", "anchored network alignment");
    cmd_align->add_option("graph1", input, "first edge-list file")->required();
    cmd_align->add_option("graph2", g2_path, "second edge-list file")->required();
    cmd_align->add_option("anchors", anchors_path, "anchor TSV")->required();
    cmd_align->add_option("--truth", truth_path, "ground-truth TSV");
    cmd_align->add_option("--distance", distance_name, "euclidean|cosine");
    cmd_align->add_option("--anchor-weight", anchor_weight, "anchor edge weight");
    cmd_align->add_option("--folds", folds, "anchor cross-validation folds");
    cmd_align->add_option("--seed", seed, "rng seed");
    cmd_align->add_option("-o,--output", output, "report JSON (default stdout)");
    cmd_align->add_option("--matches", matches_out, "match TSV path");
    cmd_align->add_option("--scales", cfg.num_scales, "number of scales");
    cmd_align->add_option("--m", cfg.m, "top spectral pairs");
    cmd_align->add_option("--sigma-factor", cfg.sigma_factor, "kernel bandwidth factor");
    cmd_align->add_option("--metric", metric_name, "hops|weighted");

    // detect
    std::string failed_path;
    int knn = 10;
    auto* cmd_detect = app.add_subcommand("detect", "failed-edge detection");
    cmd_detect->add_option("input", input, "edge-list file")->required();
    cmd_detect->add_option("failed", failed_path, "failed-edge TSV")->required();
    cmd_detect->add_option("--knn", knn, "kNN graph neighbors (default 10)");
    cmd_detect->add_option("--seed", seed, "rng seed");
    cmd_detect->add_option("-o,--output", output, "report JSON (default stdout)");
    cmd_detect->add_option("--scales", cfg.num_scales, "number of scales");
    cmd_detect->add_option("--m", cfg.m, "top spectral pairs");
    cmd_detect->add_option("--sigma-factor", cfg.sigma_factor, "kernel bandwidth factor");
    cmd_detect->add_option("--metric", metric_name, "hops|weighted");

    CLI11_PARSE(app, argc, argv);

    if (const char* env = std::getenv("GSE_THREADS"); env && threads == 0)
        threads = std::atoi(env);
    if (threads > 0) Eigen::setNbThreads(threads);

    gse::PathMetric pm = parse_metric(metric_name);

    if (*cmd_cent) {
        auto g = gse::Graph::from_edge_list(gse::read_edge_list_file(input));
        auto ebc = gse::edge_betweenness(g, pm);
        std::ofstream file;
        std::ostream& out = open_output(file, output);
        char buf[32];
        for (const auto& [key, value] : ebc) {
            std::snprintf(buf, sizeof(buf), "%.17g", value);
            out << g.node_labels()[key.first] << '\t'
                << g.node_labels()[key.second] << '\t' << buf << '\n';
        }
        return 0;
    }

    if (*cmd_embed) {
        auto g = gse::Graph::from_edge_list(gse::read_edge_list_file(input));
        gse::Matrix emb;
        if (method == "gse") {
            emb = gse::gse_embed(g, cfg, pm);
        } else if (method == "gsse") {
            emb = gse::gsse_embed(g, beta, cfg, pm, gsse_raw);
        } else if (method == "stacked") {
            emb = gse::stacked_baseline_embed(g, cfg, pm);
        } else {
            throw CLI::ValidationError("--method must be gse|gsse|stacked");
        }
        std::ofstream file;
        std::ostream& out = open_output(file, output);
        gse::write_embedding_csv(out, emb, g.node_labels());
        return 0;
    }

    if (*cmd_align) {
        auto g1 = gse::Graph::from_edge_list(gse::read_edge_list_file(input));
        auto g2 = gse::Graph::from_edge_list(gse::read_edge_list_file(g2_path));
        gse::Distance dist;
        if (distance_name == "euclidean") dist = gse::Distance::Euclidean;
        else if (distance_name == "cosine") dist = gse::Distance::Cosine;
        else throw CLI::ValidationError("--distance must be euclidean|cosine");

        auto to_pairs = [&](const std::string& path) {
            std::vector<std::pair<int, int>> out_pairs;
            for (const auto& [a, b] : gse::read_pair_file(path)) {
                int u = g1.index_of(a), v = g2.index_of(b);
                if (u < 0 || v < 0)
                    throw gse::Error("unknown node in pair (" + a + "," + b + ")");
                out_pairs.emplace_back(u, v);
            }
            return out_pairs;
        };
        auto anchors = to_pairs(anchors_path);
        std::optional<std::vector<std::pair<int, int>>> truth;
        if (!truth_path.empty()) truth = to_pairs(truth_path);

        json j;
        gse::TaskReport last;
        if (folds <= 1) {
            gse::AlignmentProblem p{g1, g2, anchors, truth, anchor_weight};
            last = gse::align(p, cfg, dist, pm);
            last.seed = seed;
            j = report_to_json(last);
        } else {
            std::vector<std::size_t> order(anchors.size());
            std::iota(order.begin(), order.end(), 0);
            std::mt19937_64 rng(seed);
            std::shuffle(order.begin(), order.end(), rng);
            std::vector<double> accs;
            for (int f = 0; f < folds; ++f) {
                std::vector<std::pair<int, int>> kept, held;
                for (std::size_t r = 0; r < order.size(); ++r)
                    (static_cast<int>(r % folds) == f ? held : kept)
                        .push_back(anchors[order[r]]);
                auto fold_truth = truth ? *truth : held;
                gse::AlignmentProblem p{g1, g2, kept, fold_truth, anchor_weight};
                last = gse::align(p, cfg, dist, pm);
                accs.push_back(last.metrics.at("accuracy"));
            }
            double mean = std::accumulate(accs.begin(), accs.end(), 0.0) / accs.size();
            double var = 0.0;
            for (double a : accs) var += (a - mean) * (a - mean);
            j["metrics"]["accuracy_mean"] = mean;
            j["metrics"]["accuracy_std"] = std::sqrt(var / accs.size());
            j["metrics"]["folds"] = folds;
            j["fold_accuracies"] = accs;
            j["seed"] = seed;
        }
        std::ofstream file;
        std::ostream& out = open_output(file, output);
        out << j.dump(2) << '\n';
        if (!matches_out.empty()) {
            std::ofstream mout(matches_out);
            if (!mout) throw gse::Error("cannot open '" + matches_out + "'");
            for (const auto& [a, b] : last.matches) mout << a << '\t' << b << '\n';
        }
        return 0;
    }

    if (*cmd_detect) {
        auto g = gse::Graph::from_edge_list(gse::read_edge_list_file(input));
        std::set<gse::EdgeKey> failed;
        for (const auto& [a, b] : gse::read_pair_file(failed_path)) {
            int u = g.index_of(a), v = g.index_of(b);
            if (u < 0 || v < 0)
                throw gse::Error("failed edge (" + a + "," + b + ") has unknown node");
            bool exists = false;
            for (const auto& e : g.edges())
                if (gse::edge_key(e.u, e.v) == gse::edge_key(u, v)) exists = true;
            if (!exists)
                throw gse::Error("failed edge (" + a + "," + b + ") not in graph");
            failed.insert(gse::edge_key(u, v));
        }
        gse::FailureProblem p{g, failed};
        auto report = gse::detect_failures(p, cfg, knn, seed, pm);
        std::ofstream file;
        std::ostream& out = open_output(file, output);
        out << report_to_json(report).dump(2) << '\n';
        return 0;
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const gse::ConvergenceFailure& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const gse::SingularSystem& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const gse::IllConditioned& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const gse::NearSingularPencil& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const gse::DegenerateClustering& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const gse::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
