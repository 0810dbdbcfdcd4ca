#include "graphband/capi.h"

#include <cstring>
#include <filesystem>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include "graphband/analysis.hpp"
#include "graphband/experiments.hpp"
#include "graphband/graph.hpp"
#include "graphband/localsets.hpp"
#include "graphband/reconstruction.hpp"
#include "graphband/spectral.hpp"

using json = nlohmann::json;
namespace gb = graphband;

struct gb_graph {
  gb::Graph g;
};

struct gb_spectral {
  gb::SpectralBasis basis;
};

struct gb_partition {
  gb::LocalSetPartition p;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

// Maps C++ exceptions onto status codes; IO failures are reported by the
// core as GraphBandError with a path in the message, so classify by text.
template <typename F>
gb_status guarded(F&& fn) {
  try {
    fn();
    g_last_error.clear();
    return GB_OK;
  } catch (const gb::GraphBandError& e) {
    set_error(e.what());
    std::string w = e.what();
    if (w.find("open") != std::string::npos || w.find("read") != std::string::npos ||
        w.find("write") != std::string::npos)
      return GB_ERR_IO;
    return GB_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    set_error(e.what());
    return GB_ERR_INTERNAL;
  } catch (...) {
    set_error("unknown error");
    return GB_ERR_INTERNAL;
  }
}

gb_status require(bool cond, const char* msg) {
  if (cond) return GB_OK;
  set_error(msg);
  return GB_ERR_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* gb_last_error(void) { return g_last_error.c_str(); }

gb_status gb_graph_load(const char* path, int one_based, gb_graph** out) {
  if (auto st = require(path && out, "null argument"); st != GB_OK) return st;
  return guarded([&] {
    auto* h = new gb_graph{gb::load_edge_list(path, one_based != 0)};
    *out = h;
  });
}

void gb_graph_free(gb_graph* g) { delete g; }

int32_t gb_graph_n_vertices(const gb_graph* g) { return g ? g->g.n_vertices() : -1; }
int32_t gb_graph_n_edges(const gb_graph* g) { return g ? g->g.n_edges() : -1; }

int32_t gb_graph_degree(const gb_graph* g, int32_t v) {
  if (!g || v < 0 || v >= g->g.n_vertices()) {
    set_error("vertex id out of range");
    return -1;
  }
  return g->g.degree(v);
}

int32_t gb_graph_component_count(const gb_graph* g) {
  return g ? g->g.component_count() : -1;
}

gb_status gb_graph_largest_component(const gb_graph* g, gb_graph** out) {
  if (auto st = require(g && out, "null argument"); st != GB_OK) return st;
  return guarded([&] { *out = new gb_graph{g->g.largest_component()}; });
}

gb_status gb_spectral_compute(const gb_graph* g, gb_spectral** out) {
  if (auto st = require(g && out, "null argument"); st != GB_OK) return st;
  return guarded([&] {
    *out = new gb_spectral{gb::SpectralBasis::compute(g->g.laplacian())};
  });
}

void gb_spectral_free(gb_spectral* s) { delete s; }

int32_t gb_spectral_dim(const gb_spectral* s) { return s ? s->basis.dim() : -1; }

double gb_spectral_eigenvalue(const gb_spectral* s, int32_t k) {
  if (!s || k < 0 || k >= s->basis.dim()) {
    set_error("eigenvalue index out of range");
    return -1.0;
  }
  return s->basis.eigenvalues()(k);
}

gb_status gb_spectral_write_csv(const gb_spectral* s, const char* path) {
  if (auto st = require(s && path, "null argument"); st != GB_OK) return st;
  return guarded([&] { s->basis.write_spectrum_csv(path); });
}

gb_status gb_partition_one_hop(const gb_graph* g, gb_partition** out) {
  if (auto st = require(g && out, "null argument"); st != GB_OK) return st;
  return guarded([&] { *out = new gb_partition{gb::greedy_one_hop(g->g)}; });
}

gb_status gb_partition_voronoi(const gb_graph* g, const int32_t* samples,
                               int32_t n_samples, gb_partition** out) {
  if (auto st = require(g && samples && out && n_samples > 0, "null/empty argument");
      st != GB_OK)
    return st;
  return guarded([&] {
    std::vector<int> ids(samples, samples + n_samples);
    auto s = gb::SamplingSet::of(std::move(ids));
    *out = new gb_partition{gb::voronoi_partition(g->g, s)};
  });
}

gb_status gb_random_sampling_set(const gb_graph* g, int32_t k, uint64_t seed,
                                 int32_t* out) {
  if (auto st = require(g && out && k > 0, "null/empty argument"); st != GB_OK)
    return st;
  return guarded([&] {
    auto s = gb::random_sampling_set(g->g, k, seed);
    for (int i = 0; i < s.size(); ++i) out[i] = s.members[i];
  });
}

void gb_partition_free(gb_partition* p) { delete p; }

int32_t gb_partition_sampling_size(const gb_partition* p) {
  return p ? p->p.sampling_set.size() : -1;
}

gb_status gb_partition_write_csv(const gb_partition* p, const char* path) {
  if (auto st = require(p && path, "null argument"); st != GB_OK) return st;
  return guarded([&] { p->p.write_csv(path); });
}

gb_status gb_partition_read_csv(const gb_graph* g, const char* path,
                                gb_partition** out) {
  if (auto st = require(g && path && out, "null argument"); st != GB_OK) return st;
  return guarded([&] {
    *out = new gb_partition{gb::LocalSetPartition::read_csv(g->g, path)};
  });
}

gb_status gb_partition_validate(const gb_graph* g, const gb_partition* p) {
  if (auto st = require(g && p, "null argument"); st != GB_OK) return st;
  gb_status inner = GB_OK;
  std::string msg;
  gb_status st = guarded([&] {
    auto report = gb::validate_partition(g->g, p->p);
    if (!report.ok()) {
      for (const auto& v : report.violations) {
        if (!msg.empty()) msg += "; ";
        msg += v;
      }
      inner = GB_ERR_INVALID_ARGUMENT;
    }
  });
  if (st == GB_OK && inner != GB_OK) set_error(msg);
  return st != GB_OK ? st : inner;
}

gb_status gb_partition_measures_json(const gb_graph* g, const gb_partition* p,
                                     char** out_json) {
  if (auto st = require(g && p && out_json, "null argument"); st != GB_OK) return st;
  return guarded([&] {
    auto m = gb::measures(g->g, p->p);
    json cells = json::object();
    for (const auto& [owner, cm] : m.per_cell) {
      cells[std::to_string(owner)] = {{"size", cm.size},
                                      {"k", cm.k},
                                      {"k_tilde", cm.k_tilde},
                                      {"radius", cm.radius}};
    }
    json j = {{"q_max", m.q_max},
              {"q_tilde_max", m.q_tilde_max},
              {"n_max", m.n_max},
              {"cells", cells}};
    std::string text = j.dump(2);
    char* buf = new char[text.size() + 1];
    std::memcpy(buf, text.c_str(), text.size() + 1);
    *out_json = buf;
  });
}

void gb_string_free(char* s) { delete[] s; }

gb_status gb_reconstruct_to_file(const gb_graph* g, const gb_partition* p,
                                 const char* samples_csv,
                                 const char* truth_csv_or_null,
                                 const char* method, double omega,
                                 int32_t max_iterations, double rel_tol,
                                 const char* out_json) {
  if (auto st = require(g && p && samples_csv && method && out_json, "null argument");
      st != GB_OK)
    return st;
  return guarded([&] {
    gb::ReconstructionConfig cfg;
    cfg.method = gb::method_from_string(method);
    cfg.omega = omega;
    if (max_iterations > 0) cfg.max_iterations = max_iterations;
    if (rel_tol > 0) cfg.rel_tol = rel_tol;

    if (truth_csv_or_null)
      cfg.truth = gb::read_signal_csv(truth_csv_or_null, g->g.n_vertices());

    // The samples file is a full-length signal CSV; values outside the
    // sampling set are ignored.
    gb::GraphSignal full = gb::read_signal_csv(samples_csv, g->g.n_vertices());
    gb::SampleVector samples = gb::take_samples(full, p->p.sampling_set);

    gb::SpectralBasis basis = gb::SpectralBasis::compute(g->g.laplacian());
    gb::BandlimitedSpace space(basis, omega);
    gb::ReconstructionReport rep = gb::reconstruct(g->g, space, p->p, samples, cfg);

    json j = {{"method", gb::method_name(cfg.method)},
              {"omega", omega},
              {"gamma", rep.gamma},
              {"gamma_valid", rep.gamma_valid},
              {"iterations", rep.iterations},
              {"termination", rep.termination},
              {"errors", rep.errors},
              {"bounds", rep.bounds},
              {"residuals", rep.residuals}};
    std::ofstream out(out_json);
    if (!out) throw gb::GraphBandError(std::string("cannot write ") + out_json);
    out << j.dump(2) << "\n";

    std::filesystem::path jp(out_json);
    std::filesystem::path sig = jp.parent_path() / (jp.stem().string() + "_signal.csv");
    gb::write_signal_csv(sig.string(), rep.signal);
  });
}

gb_status gb_certify_to_file(const gb_graph* g, const gb_partition* p, double omega,
                             const char* frame, const char* out_json) {
  if (auto st = require(g && p && frame && out_json, "null argument"); st != GB_OK)
    return st;
  return guarded([&] {
    gb::FrameKind kind = gb::frame_kind_from_string(frame);
    gb::SpectralBasis basis = gb::SpectralBasis::compute(g->g.laplacian());
    gb::BandlimitedSpace space(basis, omega);
    auto cert = gb::certify_frame_bounds(g->g, space, p->p, kind);
    auto step = gb::optimal_step_size(cert);
    double contraction = gb::contraction_norm(g->g, space, p->p);

    json j = {{"frame", gb::frame_kind_name(kind)},
              {"omega", omega},
              {"band_dim", space.band_dim()},
              {"measured_lower", cert.measured_lower},
              {"measured_upper", cert.measured_upper},
              {"theoretical_lower", cert.theoretical_lower},
              {"theoretical_upper", cert.theoretical_upper},
              {"satisfied", cert.satisfied},
              {"hypothesis_ok", cert.hypothesis_ok},
              {"gamma", cert.gamma},
              {"q_max", cert.q_max},
              {"n_max", cert.n_max},
              {"contraction_norm", contraction},
              {"optimal_mu", step.mu},
              {"optimal_factor", step.factor}};
    std::ofstream out(out_json);
    if (!out) throw gb::GraphBandError(std::string("cannot write ") + out_json);
    out << j.dump(2) << "\n";
  });
}

gb_status gb_experiment_run(const char* config_path, const char* out_dir) {
  if (auto st = require(config_path && out_dir, "null argument"); st != GB_OK)
    return st;
  return guarded([&] {
    auto cfg = gb::ExperimentConfig::load(config_path);
    gb::run_experiment(cfg, out_dir);
  });
}

}  // extern "C"
