#include "graphband/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "graphband/analysis.hpp"
#include "graphband/reconstruction.hpp"

namespace graphband {

namespace {

using json = nlohmann::json;
namespace fs = std::filesystem;

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(std::stod(tok));
  }
  return out;
}

std::uint64_t fnv1a_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GraphBandError("cannot open " + path);
  std::uint64_t h = 1469598103934665603ull;
  char c;
  while (in.get(c)) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

// Relative-error curve padded to exactly rows entries (repeating the last
// value once a run has converged).
std::vector<double> padded_errors(const ReconstructionReport& rep, int rows) {
  std::vector<double> e = rep.errors;
  if (e.empty()) throw GraphBandError("run without truth has no error curve");
  while (static_cast<int>(e.size()) < rows) e.push_back(e.back());
  e.resize(rows);
  return e;
}

void write_csv(const std::string& path, const std::string& preamble,
               const std::vector<std::string>& columns,
               const std::vector<std::vector<double>>& rows) {
  std::ofstream out(path);
  if (!out) throw GraphBandError("cannot write " + path);
  out.precision(12);
  out << preamble;
  for (size_t i = 0; i < columns.size(); ++i)
    out << (i ? "," : "") << columns[i];
  out << "\n";
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << "\n";
  }
}

struct Workbench {
  Graph g;
  SpectralBasis basis;
  json manifest;

  explicit Workbench(const ExperimentConfig& cfg) {
    g = load_edge_list(cfg.graph_path);
    manifest["graph"] = cfg.graph_path;
    manifest["graph_fnv1a"] = fnv1a_file(cfg.graph_path);
    manifest["components"] = g.component_count();
    if (cfg.largest_component && g.component_count() > 1) {
      g = g.largest_component();
      manifest["restricted_to_largest_component"] = true;
    }
    manifest["n_vertices"] = g.n_vertices();
    manifest["n_edges"] = g.n_edges();
    manifest["experiment"] = cfg.experiment;
    manifest["seed"] = cfg.seed;
    manifest["sample_seed"] = cfg.sample_seed;
    basis = SpectralBasis::compute(g.laplacian());
  }

  json partition_stats(const LocalSetPartition& p, double omega) const {
    PartitionMeasures m = measures(g, p);
    GammaResult gr = gamma(m.q_tilde_max, omega);
    return json{{"sampling_size", p.sampling_set.size()},
                {"q_max", m.q_max},
                {"q_tilde_max", m.q_tilde_max},
                {"n_max", m.n_max},
                {"gamma_tilde", gr.gamma},
                {"guarantee_valid", gr.guarantee_valid}};
  }
};

ReconstructionReport run_method(const Workbench& wb, const BandlimitedSpace& space,
                                const LocalSetPartition& p, Method method,
                                const GraphSignal& truth,
                                const SampleVector& samples,
                                const ExperimentConfig& cfg) {
  ReconstructionConfig rc;
  rc.method = method;
  rc.omega = space.omega();
  rc.max_iterations = cfg.max_iterations;
  rc.rel_tol = cfg.rel_tol;
  rc.truth = truth;
  return reconstruct(wb.g, space, p, samples, rc);
}

constexpr Method kMethods[] = {Method::ilsr, Method::iwr, Method::ipr};

std::vector<std::string> run_convergence(const ExperimentConfig& cfg,
                                         const std::string& out_dir,
                                         Workbench& wb) {
  LocalSetPartition p = greedy_one_hop(wb.g);
  BandlimitedSpace space(wb.basis, cfg.omega);
  GraphSignal f = generate_bandlimited(space, cfg.seed);
  SampleVector samples = take_samples(f, p.sampling_set);
  const int rows = cfg.max_iterations + 1;
  std::vector<std::vector<double>> curves;
  for (Method m : kMethods)
    curves.push_back(
        padded_errors(run_method(wb, space, p, m, f, samples, cfg), rows));
  std::vector<std::vector<double>> table(rows);
  for (int i = 0; i < rows; ++i)
    table[i] = {double(i), curves[0][i], curves[1][i], curves[2][i]};
  wb.manifest["omega"] = cfg.omega;
  wb.manifest["partition"] = wb.partition_stats(p, cfg.omega);
  std::string csv = out_dir + "/convergence.csv";
  write_csv(csv,
            "# experiment=convergence rows=" + std::to_string(rows) + "\n",
            {"iteration", "ilsr_err", "iwr_err", "ipr_err"}, table);
  return {csv};
}

std::vector<std::string> run_geometry(const ExperimentConfig& cfg,
                                      const std::string& out_dir, Workbench& wb) {
  LocalSetPartition onehop = greedy_one_hop(wb.g);
  int k = cfg.k > 0 ? cfg.k : onehop.sampling_set.size();
  std::uint64_t sseed = cfg.sample_seed;
  LocalSetPartition random_p;
  json retries = json::array();
  for (;; ++sseed) {
    try {
      random_p = voronoi_partition(wb.g, random_sampling_set(wb.g, k, sseed));
      break;
    } catch (const GraphBandError& e) {
      retries.push_back({{"seed", sseed}, {"error", e.what()}});
      if (retries.size() > 64)
        throw GraphBandError("could not build a covering random sampling set");
    }
  }
  BandlimitedSpace space(wb.basis, cfg.omega);
  GraphSignal f = generate_bandlimited(space, cfg.seed);
  const int rows = cfg.max_iterations + 1;
  std::vector<std::vector<double>> curves;
  for (const LocalSetPartition* p : {&onehop, &random_p}) {
    SampleVector samples = take_samples(f, p->sampling_set);
    for (Method m : kMethods)
      curves.push_back(
          padded_errors(run_method(wb, space, *p, m, f, samples, cfg), rows));
  }
  std::vector<std::vector<double>> table(rows);
  for (int i = 0; i < rows; ++i) {
    table[i] = {double(i)};
    for (auto& c : curves) table[i].push_back(c[i]);
  }
  wb.manifest["omega"] = cfg.omega;
  wb.manifest["onehop_partition"] = wb.partition_stats(onehop, cfg.omega);
  wb.manifest["random_partition"] = wb.partition_stats(random_p, cfg.omega);
  wb.manifest["random_sample_seed_used"] = sseed;
  if (!retries.empty()) wb.manifest["regenerated_sampling_seeds"] = retries;
  std::string csv = out_dir + "/geometry.csv";
  write_csv(csv, "# experiment=geometry rows=" + std::to_string(rows) + "\n",
            {"iteration", "onehop_ilsr_err", "onehop_iwr_err", "onehop_ipr_err",
             "random_ilsr_err", "random_iwr_err", "random_ipr_err"},
            table);
  return {csv};
}

std::vector<std::string> run_cutoff_mismatch(const ExperimentConfig& cfg,
                                             const std::string& out_dir,
                                             Workbench& wb) {
  double omega1 = cfg.omega1;
  double lam_max = wb.basis.eigenvalues().maxCoeff();
  if (lam_max < 2 * omega1) {
    omega1 = lam_max / 8.0;
    wb.manifest["omega1_rescaled_to"] = omega1;
  }
  double omega2 = 2 * omega1;
  LocalSetPartition p = greedy_one_hop(wb.g);
  BandlimitedSpace s1(wb.basis, omega1), s2(wb.basis, omega2);
  // (actual, known) cases 1..4.
  const std::pair<const BandlimitedSpace*, const BandlimitedSpace*> cases[] = {
      {&s1, &s1}, {&s1, &s2}, {&s2, &s2}, {&s2, &s1}};
  const int rows = cfg.max_iterations + 1;
  std::vector<std::vector<double>> curves;
  for (auto [actual, known] : cases) {
    GraphSignal f = generate_bandlimited(*actual, cfg.seed);
    SampleVector samples = take_samples(f, p.sampling_set);
    curves.push_back(padded_errors(
        run_method(wb, *known, p, Method::ipr, f, samples, cfg), rows));
  }
  std::vector<std::vector<double>> table(rows);
  for (int i = 0; i < rows; ++i) {
    table[i] = {double(i)};
    for (auto& c : curves) table[i].push_back(c[i]);
  }
  wb.manifest["omega1"] = omega1;
  wb.manifest["omega2"] = omega2;
  wb.manifest["method"] = "ipr";
  wb.manifest["partition"] = wb.partition_stats(p, omega1);
  std::string csv = out_dir + "/cutoff_mismatch.csv";
  write_csv(csv,
            "# experiment=cutoff_mismatch rows=" + std::to_string(rows) +
                " cases=(actual,known): 1=(w1,w1) 2=(w1,w2) 3=(w2,w2) 4=(w2,w1)\n",
            {"iteration", "case1_err", "case2_err", "case3_err", "case4_err"},
            table);
  return {csv};
}

std::vector<std::string> run_bound_sweep(const ExperimentConfig& cfg,
                                         const std::string& out_dir,
                                         Workbench& wb) {
  int k = cfg.k > 0 ? cfg.k : std::max(1, wb.g.n_vertices() / 3);
  LocalSetPartition p =
      voronoi_partition(wb.g, random_sampling_set(wb.g, k, cfg.sample_seed));
  PartitionMeasures m = measures(wb.g, p);
  double q2 = m.q_max * m.q_max;
  double threshold = q2 > 0 ? 1.0 / q2 : wb.basis.eigenvalues().maxCoeff();
  std::vector<double> grid = cfg.omega_grid;
  if (grid.empty())
    for (double t = 0.1; t <= 4.0 + 1e-9; t += 0.1) grid.push_back(t * threshold);

  std::vector<std::vector<double>> table;
  for (double omega : grid) {
    BandlimitedSpace space(wb.basis, omega);
    int success[3] = {0, 0, 0};
    for (int i = 0; i < cfg.n_signals; ++i) {
      GraphSignal f = generate_bandlimited(space, cfg.seed + i);
      SampleVector samples = take_samples(f, p.sampling_set);
      ReconstructionConfig rc;
      rc.omega = omega;
      rc.max_iterations = cfg.sweep_iterations;
      rc.rel_tol = 1e-300;  // fixed iteration budget, no early stop
      rc.truth = f;
      for (int mi = 0; mi < 3; ++mi) {
        rc.method = kMethods[mi];
        auto rep = reconstruct(wb.g, space, p, samples, rc);
        // Success is re-derived from the stored signal, not loop state.
        double err = (rep.signal - f).norm() / f.norm();
        if (err <= 1e-3) ++success[mi];
      }
    }
    table.push_back({omega, omega / threshold,
                     double(success[0]) / cfg.n_signals,
                     double(success[1]) / cfg.n_signals,
                     double(success[2]) / cfg.n_signals});
  }
  wb.manifest["partition"] = wb.partition_stats(p, threshold);
  wb.manifest["q_max_squared"] = q2;
  wb.manifest["omega_threshold"] = threshold;
  wb.manifest["n_signals"] = cfg.n_signals;
  wb.manifest["sweep_iterations"] = cfg.sweep_iterations;
  std::string csv = out_dir + "/bound_sweep.csv";
  write_csv(csv,
            "# experiment=bound_sweep rows=" + std::to_string(grid.size()) +
                " threshold_omega=" + std::to_string(threshold) + "\n",
            {"omega", "omega_over_threshold", "ilsr_rate", "iwr_rate",
             "ipr_rate"},
            table);
  return {csv};
}

double steady_state(const std::vector<double>& errs) {
  int tail = std::min<int>(10, static_cast<int>(errs.size()));
  double s = 0;
  for (int i = static_cast<int>(errs.size()) - tail;
       i < static_cast<int>(errs.size()); ++i)
    s += errs[i];
  return s / tail;
}

std::vector<std::string> run_noise(const ExperimentConfig& cfg,
                                   const std::string& out_dir, Workbench& wb) {
  LocalSetPartition p = greedy_one_hop(wb.g);
  BandlimitedSpace space(wb.basis, cfg.omega);
  GraphSignal f = generate_bandlimited(space, cfg.seed);
  SampleVector clean = take_samples(f, p.sampling_set);
  const int rows = cfg.max_iterations + 1;
  std::vector<std::string> cols = {"iteration"};
  std::vector<std::vector<double>> curves;
  json ss = json::object();
  for (double snr : cfg.snr_db) {
    SampleVector noisy = add_observation_noise(clean, snr, cfg.seed ^ 0x5eed);
    for (Method m : kMethods) {
      auto rep = run_method(wb, space, p, m, f, noisy, cfg);
      auto curve = padded_errors(rep, rows);
      cols.push_back(method_name(m) + "_snr" + std::to_string(int(snr)));
      ss[cols.back()] = steady_state(curve);
      curves.push_back(std::move(curve));
    }
  }
  std::vector<std::vector<double>> table(rows);
  for (int i = 0; i < rows; ++i) {
    table[i] = {double(i)};
    for (auto& c : curves) table[i].push_back(c[i]);
  }
  wb.manifest["omega"] = cfg.omega;
  wb.manifest["snr_db"] = cfg.snr_db;
  wb.manifest["partition"] = wb.partition_stats(p, cfg.omega);
  wb.manifest["steady_state"] = ss;
  std::string csv = out_dir + "/noise.csv";
  write_csv(csv, "# experiment=noise rows=" + std::to_string(rows) + "\n", cols,
            table);
  return {csv};
}

std::vector<std::string> run_approx_bandlimited(const ExperimentConfig& cfg,
                                                const std::string& out_dir,
                                                Workbench& wb) {
  LocalSetPartition p = greedy_one_hop(wb.g);
  BandlimitedSpace space(wb.basis, cfg.omega);
  const int n = wb.g.n_vertices();
  const int rows = cfg.max_iterations + 1;
  std::vector<std::string> cols = {"iteration"};
  std::vector<std::vector<double>> curves;
  json ss = json::object();
  for (double eps : cfg.oob_fractions) {
    if (eps < 0 || eps >= 1)
      throw GraphBandError("out-of-band fraction must lie in [0,1)");
    GraphSignal in_band = generate_bandlimited(space, cfg.seed);
    GraphSignal f = in_band;
    if (eps > 0 && space.band_dim() < n) {
      std::mt19937_64 rng(cfg.seed ^ 0xa00bULL);
      std::normal_distribution<double> normal(0.0, 1.0);
      GraphSignal h(n);
      for (int i = 0; i < n; ++i) h[i] = normal(rng);
      GraphSignal oob = h - space.project(h);
      oob /= oob.norm();
      f = std::sqrt(1.0 - eps) * in_band + std::sqrt(eps) * oob;
    }
    SampleVector samples = take_samples(f, p.sampling_set);
    for (Method m : kMethods) {
      auto rep = run_method(wb, space, p, m, f, samples, cfg);
      auto curve = padded_errors(rep, rows);
      std::ostringstream name;
      name << method_name(m) << "_oob" << eps;
      cols.push_back(name.str());
      ss[cols.back()] = steady_state(curve);
      curves.push_back(std::move(curve));
    }
  }
  std::vector<std::vector<double>> table(rows);
  for (int i = 0; i < rows; ++i) {
    table[i] = {double(i)};
    for (auto& c : curves) table[i].push_back(c[i]);
  }
  wb.manifest["omega"] = cfg.omega;
  wb.manifest["oob_fractions"] = cfg.oob_fractions;
  wb.manifest["partition"] = wb.partition_stats(p, cfg.omega);
  wb.manifest["steady_state"] = ss;
  std::string csv = out_dir + "/approx_bandlimited.csv";
  write_csv(csv,
            "# experiment=approx_bandlimited rows=" + std::to_string(rows) + "\n",
            cols, table);
  return {csv};
}

}  // namespace

ExperimentConfig ExperimentConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphBandError("cannot open config: " + path);
  ExperimentConfig cfg;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t");
      auto e = s.find_last_not_of(" \t");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
    try {
      if (key == "experiment") cfg.experiment = val;
      else if (key == "graph") cfg.graph_path = val;
      else if (key == "omega") cfg.omega = std::stod(val);
      else if (key == "omega1") cfg.omega1 = std::stod(val);
      else if (key == "seed") cfg.seed = std::stoull(val);
      else if (key == "sample_seed") cfg.sample_seed = std::stoull(val);
      else if (key == "max_iterations") cfg.max_iterations = std::stoi(val);
      else if (key == "rel_tol") cfg.rel_tol = std::stod(val);
      else if (key == "k") cfg.k = std::stoi(val);
      else if (key == "snr_db") cfg.snr_db = parse_list(val);
      else if (key == "oob_fractions") cfg.oob_fractions = parse_list(val);
      else if (key == "omega_grid") cfg.omega_grid = parse_list(val);
      else if (key == "n_signals") cfg.n_signals = std::stoi(val);
      else if (key == "sweep_iterations") cfg.sweep_iterations = std::stoi(val);
      else if (key == "largest_component") cfg.largest_component = (val == "1" || val == "true");
      else throw GraphBandError("unknown config key '" + key + "'");
    } catch (const std::invalid_argument&) {
      throw GraphBandError(path + ":" + std::to_string(line_no) +
                           ": bad value for " + key);
    }
  }
  if (cfg.experiment.empty()) throw GraphBandError("config missing 'experiment'");
  if (cfg.graph_path.empty()) throw GraphBandError("config missing 'graph'");
  if (cfg.max_iterations < 1) throw GraphBandError("max_iterations must be >= 1");
  if (cfg.snr_db.empty() || cfg.oob_fractions.empty())
    throw GraphBandError("list-valued config keys must be nonempty");
  return cfg;
}

std::vector<std::string> run_experiment(const ExperimentConfig& cfg,
                                        const std::string& out_dir) {
  fs::create_directories(out_dir);
  Workbench wb(cfg);
  std::vector<std::string> files;
  if (cfg.experiment == "convergence")
    files = run_convergence(cfg, out_dir, wb);
  else if (cfg.experiment == "geometry")
    files = run_geometry(cfg, out_dir, wb);
  else if (cfg.experiment == "cutoff_mismatch")
    files = run_cutoff_mismatch(cfg, out_dir, wb);
  else if (cfg.experiment == "bound_sweep")
    files = run_bound_sweep(cfg, out_dir, wb);
  else if (cfg.experiment == "noise")
    files = run_noise(cfg, out_dir, wb);
  else if (cfg.experiment == "approx_bandlimited")
    files = run_approx_bandlimited(cfg, out_dir, wb);
  else
    throw GraphBandError("unknown experiment '" + cfg.experiment + "'");

  std::string manifest_path = out_dir + "/manifest.json";
  std::ofstream mf(manifest_path);
  mf << wb.manifest.dump(2) << "\n";
  files.push_back(manifest_path);
  return files;
}

}  // namespace graphband
