// sw1pers: periodicity scoring of time series from the command line.
//
// Exit codes: 0 ok, 1 usage error, 2 data or I/O error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sw1pers/io.hpp"
#include "sw1pers/sw1pers.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace sw1pers;

namespace {

struct ConfigFlags {
  ScoreConfig config;
  std::string rule = "printed";
  bool no_denoise = false;
  unsigned jobs = 0;

  void attach(CLI::App* cmd, const std::vector<int>& default_periods) {
    config.periods = default_periods;
    cmd->add_option("--N", config.N, "Fourier degree; window dimension is 2N+1")->capture_default_str();
    cmd->add_option("--field", config.field, "prime characteristic of the coefficient field")->capture_default_str();
    cmd->add_option("--L", config.periods, "candidate numbers of periods over the record")->capture_default_str();
    cmd->add_option("--cloud-size", config.cloud_size, "sliding-window base points")->capture_default_str();
    cmd->add_option("--ma-window", config.ma_window, "moving-average window (odd)")->capture_default_str();
    cmd->add_option("--meanshift-eps", config.meanshift_eps, "mean-shift neighborhood parameter")->capture_default_str();
    cmd->add_option("--meanshift-iterations", config.meanshift_iterations)->capture_default_str();
    cmd->add_option("--meanshift-rule", rule, "printed: 1 - x.y < eps; angular: x.y > eps")
        ->check(CLI::IsMember({"printed", "angular"}))
        ->capture_default_str();
    cmd->add_flag("--no-denoise", no_denoise, "skip moving average and mean shift");
    cmd->add_option("--threshold", config.threshold, "Rips filtration threshold")->capture_default_str();
    cmd->add_flag("--periodic", config.periodic, "wrap windows around the record instead of clipping");
    cmd->add_option("--jobs", jobs, "worker threads (0 = all cores)");
  }

  const ScoreConfig& finish() {
    config.meanshift_rule = parse_mean_shift_rule(rule);
    config.denoise = !no_denoise;
    return config;
  }
};

struct SynthFlags {
  std::string shape;
  double noise = 0.0;
  double phase = 0.0;
  int samples = 50;
  int periods = 2;
  std::uint64_t seed = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--synth", shape, "use a synthetic signal of this shape instead of a file");
    cmd->add_option("--noise", noise, "noise standard deviation as a fraction of amplitude")->capture_default_str();
    cmd->add_option("--phase", phase)->capture_default_str();
    cmd->add_option("--samples", samples)->capture_default_str();
    cmd->add_option("--periods", periods, "periods of the synthetic shape over [0, 2pi]")->capture_default_str();
    cmd->add_option("--seed", seed)->capture_default_str();
  }

  LabeledSignal make() const {
    const Shape s = parse_shape(shape);
    return {shape, shape, is_periodic(s), synth(s, phase, noise, samples, seed, SynthOptions{periods})};
  }
};

std::vector<LabeledSignal> load_inputs(const std::vector<std::string>& files, const SynthFlags& synth_flags) {
  std::vector<LabeledSignal> out;
  if (!synth_flags.shape.empty()) out.push_back(synth_flags.make());
  for (const auto& f : files) out.push_back({f, "", false, read_signal_csv(f)});
  return out;
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// --- score -----------------------------------------------------------------

int run_score(const std::vector<LabeledSignal>& inputs, const ScoreConfig& config, unsigned jobs, bool csv) {
  if (inputs.empty()) throw CLI::ValidationError("score", "no input signal (give a CSV file or --synth)");
  config.validate();
  std::vector<Score> scores(inputs.size());
  parallel_for(inputs.size(), [&](std::size_t i) { scores[i] = score(inputs[i].signal, config); }, jobs);
  if (csv) {
    std::cout << "id,score,best_L,max_persistence,birth,death\n";
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      const auto& b = scores[i].best();
      std::cout << inputs[i].id << ',' << num(scores[i].value) << ',' << scores[i].best_L << ',' << num(b.max_persistence)
                << ',' << num(b.birth) << ',' << num(b.death) << '\n';
    }
    return 0;
  }
  json out = json::array();
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    json j = to_json(scores[i]);
    j["id"] = inputs[i].id;
    out.push_back(std::move(j));
  }
  print_json(inputs.size() == 1 ? out[0] : out);
  return 0;
}

// --- diagram ---------------------------------------------------------------

int run_diagram(const std::vector<LabeledSignal>& inputs, ScoreConfig config, int dim, bool dump) {
  if (inputs.size() != 1) throw CLI::ValidationError("diagram", "expects exactly one input signal");
  if (config.periods.size() != 1) throw CLI::ValidationError("--L", "diagram takes a single L");
  config.validate(false);
  if (config.field <= static_cast<std::uint32_t>(config.N))
    std::cerr << "warning: field characteristic " << config.field << " does not exceed N = " << config.N
              << "; diagrams may differ from those over larger fields\n";
  const int L = config.periods.front();
  const auto f = prepare_signal(inputs.front().signal, config);
  const auto cloud = score_cloud(f, config, L);
  const auto complex = build_rips(pairwise_distances(cloud), config.threshold);
  if (dump) {
    std::cout << complex.dump();
    return 0;
  }
  const auto result = compute_persistence(complex, FieldPrime(config.field));
  json j = to_json(dim == 0 ? result.h0 : result.h1);
  j["L"] = L;
  j["N"] = config.N;
  j["max_persistence"] = max_persistence(dim == 0 ? result.h0 : result.h1);
  print_json(j);
  return 0;
}

// --- synth -----------------------------------------------------------------

int run_synth(const std::vector<std::string>& shapes, int count, double noise, std::uint64_t seed, int samples,
              const std::string& out_dir) {
  if (count < 1) throw CLI::ValidationError("--count", "must be positive");
  std::vector<Shape> list;
  for (const auto& s : shapes) list.push_back(parse_shape(s));
  if (list.empty()) list = kRocShapes;
  const auto data = make_roc_dataset(noise, seed, count, samples, list);
  fs::create_directories(out_dir);
  const fs::path path = fs::path(out_dir) / "dataset.csv";
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::IoError, "cannot write " + path.string());
  write_dataset_csv(out, data);
  if (!out) throw Error(ErrorKind::IoError, "write failed for " + path.string());
  print_json({{"path", path.string()}, {"signals", data.size()}, {"noise", noise}, {"seed", seed}});
  return 0;
}

// --- roc -------------------------------------------------------------------

int run_roc(const std::string& input, const std::vector<std::string>& methods, const ScoreConfig& config,
            unsigned jobs, const std::string& out_dir, bool csv) {
  fs::path path = input;
  if (fs::is_directory(path)) path /= "dataset.csv";
  const auto data = read_dataset_csv(path.string());
  if (data.empty()) throw Error(ErrorKind::EmptySampleSet, "empty dataset");
  config.validate();

  std::vector<std::string> shapes;  // periodic shapes in order of appearance
  for (const auto& d : data)
    if (d.periodic && std::find(shapes.begin(), shapes.end(), d.shape) == shapes.end()) shapes.push_back(d.shape);

  json report = json::object();
  std::ostringstream table;
  table << "method,shape,threshold,fpr,tpr\n";
  for (const auto& method : methods) {
    std::vector<double> scores(data.size());
    parallel_for(
        data.size(),
        [&](std::size_t i) {
          scores[i] = method == "sw1pers" ? score(data[i].signal, config).value : ls_score(data[i].signal);
        },
        jobs);
    json per_shape = json::object();
    auto evaluate = [&](const std::string& shape) {
      std::vector<double> s;
      std::vector<bool> label;
      for (std::size_t i = 0; i < data.size(); ++i)
        if (!data[i].periodic || shape.empty() || data[i].shape == shape) {
          s.push_back(scores[i]);
          label.push_back(data[i].periodic);
        }
      const auto curve = roc_curve(s, label);
      json points = json::array();
      for (const auto& p : curve) {
        points.push_back({{"threshold", std::isinf(p.threshold) ? json(nullptr) : json(p.threshold)},
                          {"fpr", p.fpr},
                          {"tpr", p.tpr}});
        table << method << ',' << (shape.empty() ? "all" : shape) << ',' << num(p.threshold) << ',' << num(p.fpr)
              << ',' << num(p.tpr) << '\n';
      }
      per_shape[shape.empty() ? "all" : shape] = {{"auc", auc(curve)}, {"points", points}};
    };
    for (const auto& s : shapes) evaluate(s);
    evaluate("");
    report[method] = per_shape;
  }

  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    std::ofstream(fs::path(out_dir) / "roc.csv") << table.str();
    std::ofstream(fs::path(out_dir) / "roc.json") << report.dump(2) << '\n';
  }
  if (csv) {
    std::cout << table.str();
  } else {
    json summary = json::object();
    for (auto& [method, per_shape] : report.items())
      for (auto& [shape, r] : per_shape.items()) summary[method][shape] = r["auc"];
    print_json({{"auc", summary}});
  }
  return 0;
}

// --- rank ------------------------------------------------------------------

int run_rank(std::vector<LabeledSignal> inputs, const ScoreConfig& config, unsigned jobs, bool csv) {
  if (inputs.empty()) throw CLI::ValidationError("rank", "no input signals (give CSV files or --fixture)");
  std::vector<SampledSignal> signals;
  for (const auto& in : inputs) signals.push_back(in.signal);
  const auto ranked = rank(signals, config, jobs);
  if (csv) {
    std::cout << "rank,id,score,best_L\n";
    for (std::size_t r = 0; r < ranked.size(); ++r)
      std::cout << r + 1 << ',' << inputs[ranked[r].index].id << ',' << num(ranked[r].score.value) << ','
                << ranked[r].score.best_L << '\n';
    return 0;
  }
  json out = json::array();
  for (std::size_t r = 0; r < ranked.size(); ++r)
    out.push_back({{"rank", r + 1},
                   {"id", inputs[ranked[r].index].id},
                   {"score", ranked[r].score.value},
                   {"best_L", ranked[r].score.best_L}});
  print_json(out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sliding windows and 1-persistence scoring of periodicity in time series"};
  app.require_subcommand(1);
  bool csv = false;

  // score
  auto* score_cmd = app.add_subcommand("score", "score CSV signals (time,value) or a synthetic one");
  std::vector<std::string> score_files;
  ConfigFlags score_cfg;
  SynthFlags score_synth;
  score_cmd->add_option("inputs", score_files, "CSV files")->check(CLI::ExistingFile);
  score_cfg.attach(score_cmd, {2, 3, 4});
  score_synth.attach(score_cmd);
  score_cmd->add_flag("--csv", csv, "tabular output");

  // diagram
  auto* diagram_cmd = app.add_subcommand("diagram", "persistence diagram of one signal's sliding-window cloud");
  std::vector<std::string> diagram_files;
  ConfigFlags diagram_cfg;
  SynthFlags diagram_synth;
  int dim = 1;
  bool dump = false;
  diagram_cmd->add_option("inputs", diagram_files, "CSV file")->check(CLI::ExistingFile);
  diagram_cfg.attach(diagram_cmd, {2});
  diagram_synth.attach(diagram_cmd);
  diagram_cmd->add_option("--dim", dim, "homology dimension (0 or 1)")->check(CLI::IsMember({0, 1}))->capture_default_str();
  diagram_cmd->add_flag("--dump-filtration", dump, "print the filtration, one `dim time vertices...` line per simplex");

  // synth
  auto* synth_cmd = app.add_subcommand("synth", "write a labeled synthetic dataset");
  std::vector<std::string> synth_shapes;
  int synth_count = 100, synth_samples = 50;
  double synth_noise = 0.0;
  std::uint64_t synth_seed = 0;
  std::string synth_out;
  synth_cmd->add_option("--shape", synth_shapes, "shapes to generate (default: the four periodic shapes, constant, linear)");
  synth_cmd->add_option("--count", synth_count, "phase-shifted profiles per shape")->capture_default_str();
  synth_cmd->add_option("--noise", synth_noise, "noise standard deviation as a fraction of amplitude")->capture_default_str();
  synth_cmd->add_option("--seed", synth_seed)->capture_default_str();
  synth_cmd->add_option("--samples", synth_samples)->capture_default_str();
  synth_cmd->add_option("--out", synth_out, "output directory")->required();

  // roc
  auto* roc_cmd = app.add_subcommand("roc", "ROC curves and AUC of periodicity scores on a labeled dataset");
  std::string roc_input, roc_out;
  std::vector<std::string> roc_methods{"sw1pers", "lombscargle"};
  ConfigFlags roc_cfg;
  roc_cmd->add_option("dataset", roc_input, "dataset directory or CSV (id,shape,label,time,value)")->required();
  roc_cmd->add_option("--method", roc_methods)->check(CLI::IsMember({"sw1pers", "lombscargle"}))->capture_default_str();
  roc_cmd->add_option("--out", roc_out, "also write roc.csv and roc.json here");
  roc_cfg.attach(roc_cmd, {2});
  roc_cmd->add_flag("--csv", csv, "print ROC points instead of the AUC summary");

  // rank
  auto* rank_cmd = app.add_subcommand("rank", "rank signals by periodicity score");
  std::vector<std::string> rank_files;
  ConfigFlags rank_cfg;
  bool fixture = false;
  std::uint64_t rank_seed = 0;
  rank_cmd->add_option("inputs", rank_files, "CSV files")->check(CLI::ExistingFile);
  rank_cmd->add_flag("--fixture", fixture, "rank the built-in ten-shape collection");
  rank_cmd->add_option("--seed", rank_seed, "seed for --fixture")->capture_default_str();
  rank_cfg.attach(rank_cmd, {2, 3, 4});
  rank_cmd->add_flag("--csv", csv, "tabular output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (score_cmd->parsed())
      return run_score(load_inputs(score_files, score_synth), score_cfg.finish(), score_cfg.jobs, csv);
    if (diagram_cmd->parsed())
      return run_diagram(load_inputs(diagram_files, diagram_synth), diagram_cfg.finish(), dim, dump);
    if (synth_cmd->parsed()) return run_synth(synth_shapes, synth_count, synth_noise, synth_seed, synth_samples, synth_out);
    if (roc_cmd->parsed()) return run_roc(roc_input, roc_methods, roc_cfg.finish(), roc_cfg.jobs, roc_out, csv);
    if (rank_cmd->parsed()) {
      std::vector<LabeledSignal> inputs;
      if (fixture) inputs = make_ranking_fixture(rank_seed);
      for (const auto& f : rank_files) inputs.push_back({f, "", false, read_signal_csv(f)});
      return run_rank(std::move(inputs), rank_cfg.finish(), rank_cfg.jobs, csv);
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::InvalidArgument || e.kind() == ErrorKind::NotPrime ||
                   e.kind() == ErrorKind::EvenWindow || e.kind() == ErrorKind::UnknownShape
               ? 1
               : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
