// Command-line harness around the examtt C API: construction statistics,
// single solver runs, benchmark matrices, calibration grids, and Mann-Whitney
// comparisons of result CSVs. Exit codes: 0 ok, 1 usage, 2 data, 3 runtime.

#include <atomic>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "examtt.h"

namespace fs = std::filesystem;

namespace {

struct CliError {
  int code;
  std::string message;
};

[[noreturn]] void die(int code, const std::string& message) { throw CliError{code, message}; }

std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string fmt_param(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) parts.push_back(item);
  return parts;
}

struct GlobalOptions {
  std::string data_dir = "data";
  std::string slots_file;
  std::string best_known_file;

  std::string slots_path() const {
    return slots_file.empty() ? (fs::path(data_dir) / "slots.txt").string() : slots_file;
  }
  std::string best_known_path() const {
    return best_known_file.empty() ? (fs::path(data_dir) / "best_known.txt").string()
                                   : best_known_file;
  }
};

struct LoadedInstance {
  std::string name;
  examtt_instance* handle = nullptr;
  std::optional<double> best_known;
};

LoadedInstance load_instance(const GlobalOptions& g, const std::string& name_or_path) {
  std::string name = name_or_path;
  fs::path stu;
  if (name_or_path.find('/') != std::string::npos ||
      (name_or_path.size() > 4 && name_or_path.substr(name_or_path.size() - 4) == ".stu")) {
    stu = name_or_path;
    name = fs::path(name_or_path).stem().string();
  } else {
    fs::path toronto = fs::path(g.data_dir) / "toronto" / (name_or_path + ".stu");
    fs::path toy = fs::path(g.data_dir) / "toy" / (name_or_path + ".stu");
    stu = fs::exists(toronto) ? toronto : toy;
  }
  if (!fs::exists(stu)) die(2, "instance not found: " + name_or_path + " (looked for " + stu.string() + ")");

  double slots_value = 0.0;
  if (examtt_table_lookup(g.slots_path().c_str(), name.c_str(), &slots_value) != EXAMTT_OK)
    die(2, "missing slot-count metadata for " + name + ": " + examtt_last_error());

  fs::path crs = stu;
  crs.replace_extension(".crs");
  std::string crs_path = fs::exists(crs) ? crs.string() : "";

  LoadedInstance li;
  li.name = name;
  if (examtt_instance_load(stu.string().c_str(), crs_path.empty() ? nullptr : crs_path.c_str(),
                           name.c_str(), static_cast<int>(slots_value), &li.handle) != EXAMTT_OK)
    die(2, "cannot load " + name + ": " + examtt_last_error());
  for (size_t i = 0; i < examtt_instance_warning_count(li.handle); ++i)
    std::cerr << "warning: " << name << ": " << examtt_instance_warning(li.handle, i) << "\n";

  double best = 0.0;
  examtt_status st = examtt_table_lookup(g.best_known_path().c_str(), name.c_str(), &best);
  if (st == EXAMTT_OK) li.best_known = best;
  return li;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) die(3, "cannot write " + path);
      out_ = &file_;
    }
  }

  std::ostream& stream() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_ = &std::cout;
};

struct ConfigHandle {
  examtt_config* cfg = nullptr;

  ConfigHandle() {
    if (examtt_config_new(&cfg) != EXAMTT_OK) die(3, examtt_last_error());
  }
  ~ConfigHandle() { examtt_config_free(cfg); }
  ConfigHandle(const ConfigHandle&) = delete;
  ConfigHandle& operator=(const ConfigHandle&) = delete;

  void set(const std::string& key, const std::string& value) {
    if (examtt_config_set(cfg, key.c_str(), value.c_str()) != EXAMTT_OK)
      die(1, examtt_last_error());
  }
};

// Overrides shared by solve and bench; unset options keep library defaults.
struct AlgoOverrides {
  std::vector<std::pair<std::string, std::string>> entries;

  void add_flags(CLI::App* cmd) {
    auto opt = [this, cmd](const char* flag, const char* key, const char* desc) {
      cmd->add_option_function<std::string>(
             flag, [this, key](const std::string& v) { entries.emplace_back(key, v); }, desc)
          ->expected(1);
    };
    opt("--pop", "population", "population size");
    opt("--r", "hybridization", "crossover transmission fraction r in [0,1]");
    opt("--p-elit", "elite_key_probability", "biased-coin probability of the elite parent");
    opt("--sel-frac", "selection_fraction", "elite fraction");
    opt("--mig-frac", "migration_fraction", "migrant fraction");
    opt("--ls", "ls", "local search mode: none|vdls|vdls+hhls");
    opt("--hhls-iters", "hhls_iterations", "HHLS iteration limit");
    opt("--hhls-stall", "hhls_stall", "HHLS stall limit");
    opt("--init-rule", "init_rule", "construction rule for the initial population: min|dist");
    opt("--init-frac", "heuristic_init_fraction", "heuristically constructed share of the initial population");
    opt("--completion-rule", "completion_rule", "crossover completion rule: min|dist");
    opt("--constructor", "constructor", "restart construction rule: min|dist");
    opt("--w-conflict", "w_conflict", "conflict penalty weight (0 = default)");
    opt("--threads", "threads", "offspring pipelines run in parallel");
    opt("--max-gens", "max_generations", "generation cap (0 = none)");
    opt("--ups", "work_units_per_second", "work units per virtual second");
    opt("--llh4-merge", "llh4_merge", "LLH4 merges slots instead of reinserting (0|1)");
    opt("--ls-on-offspring", "ls_on_offspring", "improve offspring (0|1)");
    opt("--preserve-source-slot", "preserve_source_slot", "crossover keeps transferred slots' labels (0|1)");
    opt("--lamarckian", "lamarckian", "write improvements back into chromosomes (0|1)");
  }
};

constexpr const char* kResultHeader =
    "instance,algorithm,seed,wall_seconds,generations,best_cost,feasible,rpd";
constexpr const char* kResultSuffixHeader = "wall_seconds,generations,best_cost,feasible,rpd";

// Runs one configured cell and renders the shared CSV tail.
std::string run_suffix(examtt_instance* inst, const ConfigHandle& cfg,
                       std::optional<double> best_known, examtt_result** result_out = nullptr) {
  examtt_result* res = nullptr;
  if (examtt_run(inst, cfg.cfg, &res) != EXAMTT_OK) die(3, examtt_last_error());
  std::string rpd_text;
  if (best_known) {
    double value = 0.0;
    if (examtt_rpd(examtt_result_best_cost(res), *best_known, &value) != EXAMTT_OK)
      die(3, examtt_last_error());
    rpd_text = fmt6(value);
  }
  std::string row = fmt6(examtt_result_wall_seconds(res)) + "," +
                    std::to_string(examtt_result_generations(res)) + "," +
                    fmt6(examtt_result_best_cost(res)) + "," +
                    std::to_string(examtt_result_best_feasible(res)) + "," + rpd_text;
  if (result_out)
    *result_out = res;
  else
    examtt_result_free(res);
  return row;
}

struct Job {
  size_t instance_idx = 0;
  std::string prefix;  // CSV columns before the shared result tail
  std::vector<std::pair<std::string, std::string>> config;
};

std::vector<std::string> run_jobs(const std::vector<Job>& jobs,
                                  const std::vector<LoadedInstance>& instances, int threads) {
  std::vector<std::string> rows(jobs.size());
  std::atomic<size_t> next{0};
  std::atomic<bool> failed{false};
  std::mutex error_mutex;
  std::optional<CliError> first_error;

  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= jobs.size() || failed.load()) return;
      try {
        const Job& job = jobs[i];
        ConfigHandle cfg;
        for (const auto& [key, value] : job.config) cfg.set(key, value);
        const LoadedInstance& li = instances[job.instance_idx];
        rows[i] = job.prefix + "," + run_suffix(li.handle, cfg, li.best_known);
      } catch (const CliError& e) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = e;
        failed.store(true);
        return;
      }
    }
  };

  int workers = std::max(1, std::min<int>(threads, static_cast<int>(jobs.size())));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (first_error) throw *first_error;
  return rows;
}

int cmd_construct(const GlobalOptions& g, const std::string& instance, const std::string& rule,
                  int samples, int runs, uint64_t seed, const std::string& out_path) {
  LoadedInstance li = load_instance(g, instance);
  Output out(out_path);
  out.stream() << "instance,rule,run,seed,samples,best_cost,feasible_count\n";
  std::string label = li.name + "/construct-" + rule;
  for (int r = 0; r < runs; ++r) {
    uint64_t run_seed = examtt_derive_seed(seed, label.c_str(), static_cast<uint64_t>(r));
    double best = 0.0;
    int feasible = 0;
    int has = 0;
    if (examtt_construct(li.handle, rule.c_str(), samples, run_seed, &best, &feasible, &has) !=
        EXAMTT_OK)
      die(3, examtt_last_error());
    out.stream() << li.name << "," << rule << "," << r << "," << run_seed << "," << samples << ","
                 << (has ? fmt6(best) : std::string()) << "," << feasible << "\n";
  }
  examtt_instance_free(li.handle);
  return 0;
}

int cmd_solve(const GlobalOptions& g, const std::string& instance, const std::string& algo,
              uint64_t seed, double time_limit, const AlgoOverrides& overrides,
              const std::string& out_path, const std::string& trace_path) {
  LoadedInstance li = load_instance(g, instance);
  ConfigHandle cfg;
  cfg.set("algorithm", algo);
  cfg.set("time_limit", fmt_param(time_limit));
  cfg.set("seed", std::to_string(seed));
  for (const auto& [key, value] : overrides.entries) cfg.set(key, value);

  examtt_result* res = nullptr;
  std::string suffix = run_suffix(li.handle, cfg, li.best_known, &res);
  Output out(out_path);
  out.stream() << kResultHeader << "\n"
               << li.name << "," << examtt_result_algorithm(res) << "," << seed << "," << suffix
               << "\n";

  if (!trace_path.empty()) {
    std::ofstream trace(trace_path, std::ios::binary);
    if (!trace) die(3, "cannot write " + trace_path);
    trace << "elapsed_seconds,best_penalized\n";
    for (size_t i = 0; i < examtt_result_trace_size(res); ++i) {
      double seconds = 0.0;
      double cost = 0.0;
      examtt_result_trace_point(res, i, &seconds, &cost);
      trace << fmt6(seconds) << "," << fmt6(cost) << "\n";
    }
  }
  examtt_result_free(res);
  examtt_instance_free(li.handle);
  return 0;
}

int cmd_bench(const GlobalOptions& g, const std::string& instances_arg,
              const std::string& algos_arg, int runs, uint64_t seed, double time_limit, int jobs,
              const AlgoOverrides& overrides, const std::string& out_path) {
  std::vector<std::string> instance_names = split_list(instances_arg);
  std::vector<std::string> algos = split_list(algos_arg);
  if (instance_names.empty()) die(1, "bench: no instances given");
  if (algos.empty()) die(1, "bench: no algorithms given");

  std::vector<LoadedInstance> instances;
  instances.reserve(instance_names.size());
  for (const std::string& name : instance_names) instances.push_back(load_instance(g, name));

  std::vector<Job> cells;
  for (size_t ii = 0; ii < instances.size(); ++ii)
    for (const std::string& algo : algos)
      for (int r = 0; r < runs; ++r) {
        Job job;
        job.instance_idx = ii;
        std::string label = instances[ii].name + "/" + algo;
        uint64_t run_seed = examtt_derive_seed(seed, label.c_str(), static_cast<uint64_t>(r));
        job.config = overrides.entries;
        job.config.emplace_back("algorithm", algo);
        job.config.emplace_back("time_limit", fmt_param(time_limit));
        job.config.emplace_back("seed", std::to_string(run_seed));
        job.prefix = instances[ii].name + "," + algo + "," + std::to_string(run_seed);
        cells.push_back(std::move(job));
      }

  std::vector<std::string> rows = run_jobs(cells, instances, jobs);
  Output out(out_path);
  out.stream() << kResultHeader << "\n";
  for (const std::string& row : rows) out.stream() << row << "\n";
  for (LoadedInstance& li : instances) examtt_instance_free(li.handle);
  return 0;
}

int cmd_calibrate(const GlobalOptions& g, const std::string& instances_arg,
                  const std::string& algo, int runs, uint64_t seed, double time_limit, int jobs,
                  const std::string& out_path) {
  std::vector<std::string> instance_names = split_list(instances_arg);
  if (instance_names.empty()) die(1, "calibrate: no instances given");
  if (algo != "parhga" && algo != "prihga") die(1, "calibrate: algo must be parhga or prihga");

  std::vector<LoadedInstance> instances;
  instances.reserve(instance_names.size());
  for (const std::string& name : instance_names) instances.push_back(load_instance(g, name));

  struct Cell {
    std::string params;
    std::vector<std::pair<std::string, std::string>> config;
  };
  std::vector<Cell> grid;
  const int hybrid_levels[] = {0, 25, 50, 75};
  if (algo == "parhga") {
    for (const char* ls : {"vdls", "vdls+hhls"})
      for (int pop : {20, 50, 100})
        for (double frac : {0.5, 1.0})
          for (const char* rule : {"min", "dist"})
            for (int hybrid : hybrid_levels) {
              Cell cell;
              double r = 1.0 - hybrid / 100.0;
              cell.params = std::string("ls=") + ls + ";pop=" + std::to_string(pop) +
                            ";frac=" + fmt_param(frac) + ";rule=" + rule +
                            ";hybrid=" + std::to_string(hybrid);
              cell.config = {{"algorithm", "parhga"},
                             {"ls", ls},
                             {"population", std::to_string(pop)},
                             {"heuristic_init_fraction", fmt_param(frac)},
                             {"init_rule", rule},
                             {"hybridization", fmt_param(r)}};
              grid.push_back(std::move(cell));
            }
  } else {
    for (int pop : {20, 50, 100})
      for (int selmig : {10, 20, 25})
        for (double p_elit : {0.6, 0.8})
          for (int hybrid : hybrid_levels) {
            Cell cell;
            double r = 1.0 - hybrid / 100.0;
            double frac = selmig / 100.0;
            cell.params = std::string("pop=") + std::to_string(pop) +
                          ";selmig=" + std::to_string(selmig) + ";p_elit=" + fmt_param(p_elit) +
                          ";hybrid=" + std::to_string(hybrid);
            cell.config = {{"algorithm", "prihga"},
                           {"population", std::to_string(pop)},
                           {"selection_fraction", fmt_param(frac)},
                           {"migration_fraction", fmt_param(frac)},
                           {"elite_key_probability", fmt_param(p_elit)},
                           {"hybridization", fmt_param(r)}};
            grid.push_back(std::move(cell));
          }
  }

  std::vector<Job> cells;
  for (size_t ii = 0; ii < instances.size(); ++ii)
    for (size_t ci = 0; ci < grid.size(); ++ci)
      for (int r = 0; r < runs; ++r) {
        Job job;
        job.instance_idx = ii;
        std::string label = instances[ii].name + "/" + algo + "/cell-" + std::to_string(ci);
        uint64_t run_seed = examtt_derive_seed(seed, label.c_str(), static_cast<uint64_t>(r));
        job.config = grid[ci].config;
        job.config.emplace_back("time_limit", fmt_param(time_limit));
        job.config.emplace_back("seed", std::to_string(run_seed));
        job.prefix = instances[ii].name + "," + algo + "," + std::to_string(ci) + "," +
                     grid[ci].params + "," + std::to_string(run_seed) + "," + std::to_string(r);
        cells.push_back(std::move(job));
      }

  std::vector<std::string> rows = run_jobs(cells, instances, jobs);
  Output out(out_path);
  out.stream() << "instance,algorithm,cell,params,seed,run," << kResultSuffixHeader << "\n";
  for (const std::string& row : rows) out.stream() << row << "\n";
  for (LoadedInstance& li : instances) examtt_instance_free(li.handle);
  return 0;
}

std::map<std::string, std::vector<double>> read_column_by_instance(const std::string& path,
                                                                   const std::string& column) {
  std::ifstream in(path, std::ios::binary);
  if (!in) die(2, "cannot read " + path);
  std::string line;
  if (!std::getline(in, line)) die(2, path + ": empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::vector<std::string> header = split_list(line);
  int instance_idx = -1;
  int value_idx = -1;
  for (size_t i = 0; i < header.size(); ++i) {
    if (header[i] == "instance") instance_idx = static_cast<int>(i);
    if (header[i] == column) value_idx = static_cast<int>(i);
  }
  if (instance_idx < 0) die(2, path + ": no instance column");
  if (value_idx < 0) die(2, path + ": no " + column + " column");

  std::map<std::string, std::vector<double>> by_instance;
  size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (static_cast<int>(fields.size()) <= std::max(instance_idx, value_idx))
      die(2, path + ": short row at line " + std::to_string(line_no));
    const std::string& text = fields[static_cast<size_t>(value_idx)];
    if (text.empty()) continue;
    try {
      by_instance[fields[static_cast<size_t>(instance_idx)]].push_back(std::stod(text));
    } catch (const std::exception&) {
      die(2, path + ": bad number at line " + std::to_string(line_no));
    }
  }
  return by_instance;
}

int cmd_compare(const std::string& a_path, const std::string& b_path, const std::string& column,
                double alpha, const std::string& out_path) {
  auto a = read_column_by_instance(a_path, column);
  auto b = read_column_by_instance(b_path, column);

  Output out(out_path);
  out.stream() << "instance,n_a,n_b,mean_a,mean_b,u,p,significant,better\n";
  for (const auto& [instance, xs] : a) {
    auto it = b.find(instance);
    if (it == b.end()) continue;
    const std::vector<double>& ys = it->second;
    if (xs.size() < 3 || ys.size() < 3) {
      std::cerr << "compare: skipping " << instance << " (need at least 3 values per side)\n";
      continue;
    }
    double u = 0.0;
    double p = 0.0;
    if (examtt_mann_whitney(xs.data(), xs.size(), ys.data(), ys.size(), &u, &p) != EXAMTT_OK)
      die(3, examtt_last_error());
    double mean_a = 0.0;
    for (double v : xs) mean_a += v;
    mean_a /= static_cast<double>(xs.size());
    double mean_b = 0.0;
    for (double v : ys) mean_b += v;
    mean_b /= static_cast<double>(ys.size());
    bool significant = p < alpha;
    std::string better = "none";
    if (significant) better = mean_a < mean_b ? "a" : "b";
    out.stream() << instance << "," << xs.size() << "," << ys.size() << "," << fmt6(mean_a) << ","
                 << fmt6(mean_b) << "," << fmt6(u) << "," << fmt6(p) << ","
                 << (significant ? 1 : 0) << "," << better << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exam timetabling solver harness"};
  app.require_subcommand(1);

  GlobalOptions g;
  app.add_option("--data-dir", g.data_dir, "directory with instance data");
  app.add_option("--slots-file", g.slots_file, "slot-count table (default <data-dir>/slots.txt)");
  app.add_option("--best-known-file", g.best_known_file,
                 "best-known table (default <data-dir>/best_known.txt)");

  auto* construct = app.add_subcommand("construct", "sample a construction heuristic");
  std::string c_instance;
  std::string c_rule = "min";
  int c_samples = 100;
  int c_runs = 50;
  uint64_t c_seed = 0;
  std::string c_out;
  construct->add_option("--instance", c_instance, "instance name or .stu path")->required();
  construct->add_option("--rule", c_rule, "construction rule: min|dist");
  construct->add_option("--samples", c_samples, "samples per run (best-of-N)")
      ->check(CLI::PositiveNumber);
  construct->add_option("--runs", c_runs, "independent best-of-N runs")->check(CLI::PositiveNumber);
  construct->add_option("--seed", c_seed, "master seed");
  construct->add_option("--out", c_out, "output CSV (default stdout)");

  auto* solve = app.add_subcommand("solve", "run one algorithm on one instance");
  std::string s_instance;
  std::string s_algo = "parhga";
  uint64_t s_seed = 0;
  double s_time = 60.0;
  std::string s_out;
  std::string s_trace;
  AlgoOverrides s_over;
  solve->add_option("--instance", s_instance, "instance name or .stu path")->required();
  solve->add_option("--algo", s_algo, "parhga|prihga|multls|pure-parhga|pure-prihga");
  solve->add_option("--seed", s_seed, "seed");
  solve->add_option("--time", s_time, "virtual time budget in seconds")->check(CLI::PositiveNumber);
  solve->add_option("--out", s_out, "output CSV (default stdout)");
  solve->add_option("--trace", s_trace, "also write the best-cost trace CSV here");
  s_over.add_flags(solve);

  auto* bench = app.add_subcommand("bench", "run an algorithms x instances x seeds matrix");
  std::string b_instances;
  std::string b_algos;
  int b_runs = 1;
  uint64_t b_seed = 0;
  double b_time = 60.0;
  int b_jobs = 1;
  std::string b_out;
  AlgoOverrides b_over;
  bench->add_option("--instances", b_instances, "comma-separated instance names")->required();
  bench->add_option("--algos", b_algos, "comma-separated algorithm names")->required();
  bench->add_option("--runs", b_runs, "runs per cell")->check(CLI::PositiveNumber);
  bench->add_option("--seed", b_seed, "master seed");
  bench->add_option("--time", b_time, "virtual time budget per run")->check(CLI::PositiveNumber);
  bench->add_option("--jobs", b_jobs, "concurrent cells")->check(CLI::PositiveNumber);
  bench->add_option("--out", b_out, "output CSV (default stdout)");
  b_over.add_flags(bench);

  auto* calibrate = app.add_subcommand("calibrate", "full factorial parameter grid");
  std::string k_instances;
  std::string k_algo = "parhga";
  int k_runs = 1;
  uint64_t k_seed = 0;
  double k_time = 60.0;
  int k_jobs = 1;
  std::string k_out;
  calibrate->add_option("--instances", k_instances, "comma-separated instance names")->required();
  calibrate->add_option("--algo", k_algo, "parhga|prihga");
  calibrate->add_option("--runs", k_runs, "runs per cell")->check(CLI::PositiveNumber);
  calibrate->add_option("--seed", k_seed, "master seed");
  calibrate->add_option("--time", k_time, "virtual time budget per run")
      ->check(CLI::PositiveNumber);
  calibrate->add_option("--jobs", k_jobs, "concurrent cells")->check(CLI::PositiveNumber);
  calibrate->add_option("--out", k_out, "output CSV (default stdout)");

  auto* compare = app.add_subcommand("compare", "Mann-Whitney test between two result CSVs");
  std::string m_a;
  std::string m_b;
  std::string m_column = "best_cost";
  double m_alpha = 0.05;
  std::string m_out;
  compare->add_option("a", m_a, "first CSV")->required();
  compare->add_option("b", m_b, "second CSV")->required();
  compare->add_option("--column", m_column, "value column to compare");
  compare->add_option("--alpha", m_alpha, "significance level");
  compare->add_option("--out", m_out, "output CSV (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (construct->parsed())
      return cmd_construct(g, c_instance, c_rule, c_samples, c_runs, c_seed, c_out);
    if (solve->parsed()) return cmd_solve(g, s_instance, s_algo, s_seed, s_time, s_over, s_out, s_trace);
    if (bench->parsed())
      return cmd_bench(g, b_instances, b_algos, b_runs, b_seed, b_time, b_jobs, b_over, b_out);
    if (calibrate->parsed())
      return cmd_calibrate(g, k_instances, k_algo, k_runs, k_seed, k_time, k_jobs, k_out);
    if (compare->parsed()) return cmd_compare(m_a, m_b, m_column, m_alpha, m_out);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  }
  return 1;
}
