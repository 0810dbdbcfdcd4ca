// graphband command-line front end. Talks to the library exclusively
// through the C interface.
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "graphband/capi.h"

namespace {

struct GraphDeleter {
  void operator()(gb_graph* g) const { gb_graph_free(g); }
};
struct SpectralDeleter {
  void operator()(gb_spectral* s) const { gb_spectral_free(s); }
};
struct PartitionDeleter {
  void operator()(gb_partition* p) const { gb_partition_free(p); }
};

using GraphPtr = std::unique_ptr<gb_graph, GraphDeleter>;
using SpectralPtr = std::unique_ptr<gb_spectral, SpectralDeleter>;
using PartitionPtr = std::unique_ptr<gb_partition, PartitionDeleter>;

[[noreturn]] void fail(const std::string& context) {
  std::fprintf(stderr, "error: %s: %s\n", context.c_str(), gb_last_error());
  std::exit(1);
}

void check(gb_status st, const std::string& context) {
  if (st != GB_OK) fail(context);
}

GraphPtr load_graph(const std::string& path, bool one_based, bool largest) {
  gb_graph* raw = nullptr;
  check(gb_graph_load(path.c_str(), one_based ? 1 : 0, &raw), "loading " + path);
  GraphPtr g(raw);
  if (largest && gb_graph_component_count(g.get()) > 1) {
    gb_graph* lc = nullptr;
    check(gb_graph_largest_component(g.get(), &lc), "extracting largest component");
    g.reset(lc);
  }
  return g;
}

std::vector<int32_t> read_vertex_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::fprintf(stderr, "error: cannot open %s\n", path.c_str());
    std::exit(1);
  }
  std::vector<int32_t> ids;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    ids.push_back(std::stoi(line));
  }
  return ids;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bandlimited graph signal sampling and reconstruction"};
  app.require_subcommand(1);

  std::string graph_path, out_path, method, frame = "delta";
  std::string partition_path, samples_path, truth_path, config_path;
  std::string samples_list;
  bool one_based = false, largest = false;
  double omega = 0.25, rel_tol = 1e-9;
  int max_iterations = 1000, rand_k = 0;
  std::uint64_t seed = 1;

  auto add_graph_opts = [&](CLI::App* cmd) {
    cmd->add_option("--graph", graph_path, "Edge-list file")->required();
    cmd->add_flag("--one-based", one_based, "Vertex ids start at 1");
    cmd->add_flag("--largest-component", largest,
                  "Work on the largest connected component");
  };

  auto* part = app.add_subcommand("partition", "Build a local-set partition");
  add_graph_opts(part);
  part->add_option("--method", method, "one-hop | voronoi")->required();
  part->add_option("--samples", samples_list,
                   "Voronoi centers: file with one vertex id per line");
  part->add_option("--random-k", rand_k, "Voronoi: draw k random centers");
  part->add_option("--seed", seed, "Seed for --random-k");
  part->add_option("--out", out_path, "Partition CSV to write")->required();

  auto* rec = app.add_subcommand("reconstruct", "Reconstruct from samples");
  add_graph_opts(rec);
  rec->add_option("--method", method, "ilsr | iwr | ipr")->required();
  rec->add_option("--partition", partition_path, "Partition CSV")->required();
  rec->add_option("--samples", samples_path, "Sampled signal CSV")->required();
  rec->add_option("--truth", truth_path, "Ground-truth signal CSV (optional)");
  rec->add_option("--omega", omega, "Cutoff frequency")->required();
  rec->add_option("--max-iterations", max_iterations, "Iteration cap");
  rec->add_option("--rel-tol", rel_tol, "Relative residual stop tolerance");
  rec->add_option("--out", out_path, "Report JSON to write")->required();

  auto* cert = app.add_subcommand("certify", "Frame-bound certificate");
  add_graph_opts(cert);
  cert->add_option("--partition", partition_path, "Partition CSV")->required();
  cert->add_option("--omega", omega, "Cutoff frequency")->required();
  cert->add_option("--frame", frame, "delta | weighted | indicator");
  cert->add_option("--out", out_path, "Certificate JSON to write")->required();

  auto* exp = app.add_subcommand("experiment", "Run a configured experiment");
  exp->add_option("--config", config_path, "Config file")->required();
  exp->add_option("--out", out_path, "Output directory")->required();

  auto* spec = app.add_subcommand("spectrum", "Laplacian spectrum to CSV");
  add_graph_opts(spec);
  spec->add_option("--out", out_path, "Spectrum CSV to write")->required();

  CLI11_PARSE(app, argc, argv);

  if (part->parsed()) {
    auto g = load_graph(graph_path, one_based, largest);
    gb_partition* raw = nullptr;
    if (method == "one-hop") {
      check(gb_partition_one_hop(g.get(), &raw), "one-hop partition");
    } else if (method == "voronoi") {
      std::vector<int32_t> centers;
      if (!samples_list.empty()) {
        centers = read_vertex_list(samples_list);
      } else if (rand_k > 0) {
        centers.resize(rand_k);
        check(gb_random_sampling_set(g.get(), rand_k, seed, centers.data()),
              "random sampling set");
      } else {
        std::fprintf(stderr, "error: voronoi needs --samples or --random-k\n");
        return 1;
      }
      check(gb_partition_voronoi(g.get(), centers.data(),
                                 static_cast<int32_t>(centers.size()), &raw),
            "voronoi partition");
    } else {
      std::fprintf(stderr, "error: unknown partition method '%s'\n", method.c_str());
      return 1;
    }
    PartitionPtr p(raw);
    check(gb_partition_write_csv(p.get(), out_path.c_str()), "writing " + out_path);
    char* stats = nullptr;
    check(gb_partition_measures_json(g.get(), p.get(), &stats), "partition measures");
    std::printf("%s\n", stats);
    gb_string_free(stats);
  } else if (rec->parsed()) {
    auto g = load_graph(graph_path, one_based, largest);
    gb_partition* raw = nullptr;
    check(gb_partition_read_csv(g.get(), partition_path.c_str(), &raw),
          "reading " + partition_path);
    PartitionPtr p(raw);
    check(gb_partition_validate(g.get(), p.get()), "validating partition");
    check(gb_reconstruct_to_file(g.get(), p.get(), samples_path.c_str(),
                                 truth_path.empty() ? nullptr : truth_path.c_str(),
                                 method.c_str(), omega, max_iterations, rel_tol,
                                 out_path.c_str()),
          "reconstruction");
    std::printf("wrote %s\n", out_path.c_str());
  } else if (cert->parsed()) {
    auto g = load_graph(graph_path, one_based, largest);
    gb_partition* raw = nullptr;
    check(gb_partition_read_csv(g.get(), partition_path.c_str(), &raw),
          "reading " + partition_path);
    PartitionPtr p(raw);
    check(gb_partition_validate(g.get(), p.get()), "validating partition");
    check(gb_certify_to_file(g.get(), p.get(), omega, frame.c_str(),
                             out_path.c_str()),
          "certificate");
    std::printf("wrote %s\n", out_path.c_str());
  } else if (exp->parsed()) {
    check(gb_experiment_run(config_path.c_str(), out_path.c_str()), "experiment");
    std::printf("wrote results to %s\n", out_path.c_str());
  } else if (spec->parsed()) {
    auto g = load_graph(graph_path, one_based, largest);
    gb_spectral* raw = nullptr;
    check(gb_spectral_compute(g.get(), &raw), "eigendecomposition");
    SpectralPtr s(raw);
    check(gb_spectral_write_csv(s.get(), out_path.c_str()), "writing " + out_path);
    std::printf("wrote %s (%d eigenvalues)\n", out_path.c_str(),
                gb_spectral_dim(s.get()));
  }
  return 0;
}
