// Command-line front end: load a text, run the engine or the brute-force
// oracle, emit line-oriented records (or one JSON document with --json).
//
// Exit codes: 0 success, 1 usage or parse failure, 2 strict-mode crossing
// violation, 3 internal invariant failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nclce/lyndon.hpp"
#include "nclce/nc_lce.hpp"
#include "nclce/oracle.hpp"
#include "nclce/runs.hpp"
#include "nclce/words.hpp"

using nlohmann::json;
using namespace nclce;

namespace {

struct CommonFlags {
  std::string input = "-";
  std::string mode = "bytes";
  bool oracle = false;
  bool stats = false;
  bool json_out = false;
};

class Timer {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(clock::now() - start_).count();
  }

 private:
  using clock = std::chrono::steady_clock;
  clock::time_point start_ = clock::now();
};

Text read_input(const std::string& path, const std::string& mode) {
  const InputMode m = mode == "tokens" ? InputMode::tokens : InputMode::bytes;
  if (path == "-") return load_text(std::cin, m);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  return load_text(in, m);
}

void add_common(CLI::App* cmd, CommonFlags& flags, bool with_oracle = true) {
  cmd->add_option("input", flags.input, "input file, '-' for stdin");
  cmd->add_option("--mode", flags.mode, "alphabet mode")
      ->check(CLI::IsMember({"bytes", "tokens"}))
      ->capture_default_str();
  if (with_oracle) cmd->add_flag("--oracle", flags.oracle, "use the brute-force oracle");
  cmd->add_flag("--stats", flags.stats, "append instrumentation records");
  cmd->add_flag("--json", flags.json_out, "emit one JSON document instead of lines");
}

json level_stats_json(const LevelStats& stats) {
  json levels = json::array();
  for (std::size_t i = 0; i < stats.levels.size(); ++i) {
    const auto& l = stats.levels[i];
    levels.push_back({{"level", i},
                      {"queries", l.queries_asked},
                      {"block_pairs", l.block_pairs_created},
                      {"forwarded", l.forwarded_calls}});
  }
  return {{"levels", levels},
          {"total_comparisons", stats.total_comparisons},
          {"top_level_queries", stats.top_level_queries},
          {"max_forwarded_per_pair", stats.max_forwarded_per_pair}};
}

void print_level_stats(const LevelStats& stats, Len n) {
  std::printf("# n %lld\n", static_cast<long long>(n));
  std::printf("# top_level_queries %llu\n",
              static_cast<unsigned long long>(stats.top_level_queries));
  std::printf("# total_comparisons %llu\n",
              static_cast<unsigned long long>(stats.total_comparisons));
  std::printf("# max_forwarded_per_pair %llu\n",
              static_cast<unsigned long long>(stats.max_forwarded_per_pair));
  for (std::size_t i = 0; i < stats.levels.size(); ++i) {
    const auto& l = stats.levels[i];
    if (l.queries_asked == 0) continue;
    std::printf("# level %zu queries %llu block_pairs %llu forwarded %llu\n", i,
                static_cast<unsigned long long>(l.queries_asked),
                static_cast<unsigned long long>(l.block_pairs_created),
                static_cast<unsigned long long>(l.forwarded_calls));
  }
}

// |S_i| <= 24n / 2^i for i >= 1; returns false on any violation.
bool check_level_bounds(const LevelStats& stats, Len n) {
  for (std::size_t i = 1; i < stats.levels.size(); ++i) {
    if (stats.levels[i].queries_asked * (std::uint64_t(1) << i) >
        24 * static_cast<std::uint64_t>(n)) {
      std::fprintf(stderr, "level %zu: %llu queries exceed 24n/2^i\n", i,
                   static_cast<unsigned long long>(stats.levels[i].queries_asked));
      return false;
    }
  }
  return true;
}

int cmd_runs(const CommonFlags& flags, bool serial, bool strict) {
  const Timer timer;
  const Text t = read_input(flags.input, flags.mode);
  std::vector<Run> runs;
  RunsStats stats;
  if (flags.oracle) {
    runs = oracle::naive_runs(t);
  } else {
    RunsOptions opts;
    opts.execution = serial ? Execution::serial : Execution::parallel;
    opts.backend.strict = strict;
    runs = compute_runs(t, opts, &stats);
  }
  if (flags.json_out) {
    json doc{{"command", "runs"},
             {"n", t.size()},
             {"mode", flags.mode},
             {"oracle", flags.oracle},
             {"count", runs.size()},
             {"total_comparisons", stats.total_comparisons},
             {"elapsed_ms", timer.elapsed_ms()}};
    json list = json::array();
    for (const Run& r : runs) list.push_back({r.start, r.end, r.period});
    doc["runs"] = list;
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  for (const Run& r : runs) {
    std::printf("%lld %lld %lld\n", static_cast<long long>(r.start),
                static_cast<long long>(r.end), static_cast<long long>(r.period));
  }
  if (flags.stats) {
    std::printf("# n %lld\n", static_cast<long long>(t.size()));
    std::printf("# runs %zu\n", runs.size());
    if (!flags.oracle) {
      std::printf("# total_comparisons %llu\n",
                  static_cast<unsigned long long>(stats.total_comparisons));
    }
  }
  return 0;
}

int cmd_lyndon(const CommonFlags& flags, int order) {
  const Text t = read_input(flags.input, flags.mode);
  const SymbolOrder ord = order == 1 ? SymbolOrder::order1 : SymbolOrder::order0;
  const LyndonTree tree =
      flags.oracle ? oracle::naive_lyndon_tree(t, ord) : lyndon_tree(t, ord);
  const auto intervals = tree_nodes(tree);
  if (flags.json_out) {
    json list = json::array();
    for (const Interval& iv : intervals) list.push_back({iv.lo, iv.hi});
    json doc{{"command", "lyndon"}, {"n", t.size()},           {"order", order},
             {"mode", flags.mode},  {"nodes", intervals.size()}, {"tree", list}};
    std::cout << doc.dump(2) << "\n";
    return 0;
  }
  for (const Interval& iv : intervals) {
    std::printf("%lld %lld\n", static_cast<long long>(iv.lo), static_cast<long long>(iv.hi));
  }
  if (flags.stats) std::printf("# nodes %zu\n", intervals.size());
  return 0;
}

int cmd_squares(const CommonFlags& flags, bool serial, bool strict) {
  const Text t = read_input(flags.input, flags.mode);
  std::uint64_t count = 0;
  if (flags.oracle) {
    count = oracle::naive_square_count(t);
  } else {
    RunsOptions opts;
    opts.execution = serial ? Execution::serial : Execution::parallel;
    opts.backend.strict = strict;
    count = square_occurrences_from_runs(compute_runs(t, opts));
  }
  if (flags.json_out) {
    json doc{{"command", "squares"}, {"n", t.size()}, {"count", count}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::printf("%llu\n", static_cast<unsigned long long>(count));
  }
  return 0;
}

int cmd_lce(const CommonFlags& flags, const std::string& queries_path, bool strict) {
  const Text t = read_input(flags.input, flags.mode);
  std::ifstream qin(queries_path);
  if (!qin) throw std::runtime_error("cannot open queries file: " + queries_path);
  std::vector<std::pair<Pos, Pos>> queries;
  Pos a = 0, b = 0;
  while (qin >> a >> b) queries.emplace_back(a, b);

  NcLceOptions opts;
  opts.strict = strict;
  NcLceStructure engine(t, opts);
  std::vector<Len> answers;
  answers.reserve(queries.size());
  for (const auto& [qa, qb] : queries) {
    answers.push_back(flags.oracle ? oracle::naive_lce(t, qa, qb) : engine.lce(qa, qb));
  }
  const LevelStats stats = engine.stats();

  if (flags.json_out) {
    json doc{{"command", "lce"},
             {"n", t.size()},
             {"mode", flags.mode},
             {"strict", strict},
             {"oracle", flags.oracle},
             {"answers", answers}};
    if (!flags.oracle) doc["stats"] = level_stats_json(stats);
    std::cout << doc.dump(2) << "\n";
  } else {
    for (Len v : answers) std::printf("%lld\n", static_cast<long long>(v));
    if (flags.stats && !flags.oracle) {
      print_level_stats(stats, t.size());
      // Block-pair trace of the last query: level:blockA:blockB:state.
      std::printf("# working");
      for (const WorkingStep& step : engine.last_working_sequence()) {
        std::printf(" %d:%lld:%lld:%c", step.level, static_cast<long long>(step.block_a),
                    static_cast<long long>(step.block_b), step.state);
      }
      std::printf("\n");
    }
  }
  if (flags.stats && !flags.oracle && !check_level_bounds(stats, t.size())) return 3;
  return 0;
}

Text make_family(const std::string& family, Len n, std::uint64_t seed) {
  if (family == "unary") return words::unary(n);
  if (family == "fibonacci") return words::fibonacci(n);
  if (family == "thue-morse") return words::thue_morse(n);
  return words::random_word(n, 2, seed);
}

int cmd_bench(std::vector<std::string> families, const std::string& sizes_csv,
              std::uint64_t seed, bool json_out, bool serial) {
  if (families.empty() || (families.size() == 1 && families[0] == "all")) {
    families = {"unary", "fibonacci", "thue-morse", "random"};
  }
  std::vector<Len> sizes;
  std::stringstream ss(sizes_csv);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) sizes.push_back(std::stoll(item));
  }

  json rows = json::array();
  if (!json_out) {
    std::printf("%-10s %8s %6s %12s %12s %10s\n", "family", "n", "runs", "lyndon_cmp",
                "total_cmp", "ratio");
  }
  for (const std::string& family : families) {
    for (const Len n : sizes) {
      const Timer timer;
      const Text t = make_family(family, n, seed);
      RunsOptions opts;
      opts.execution = serial ? Execution::serial : Execution::parallel;
      RunsStats stats;
      const auto runs = compute_runs(t, opts, &stats);
      const double denom = static_cast<double>(n) * std::log2(static_cast<double>(n));
      const double ratio = static_cast<double>(stats.total_comparisons) / denom;
      if (json_out) {
        rows.push_back({{"family", family},
                        {"n", n},
                        {"runs", runs.size()},
                        {"construction_comparisons", stats.construction_comparisons},
                        {"total_comparisons", stats.total_comparisons},
                        {"ratio", ratio},
                        {"elapsed_ms", timer.elapsed_ms()}});
      } else {
        std::printf("%-10s %8lld %6zu %12llu %12llu %10.4f\n", family.c_str(),
                    static_cast<long long>(n), runs.size(),
                    static_cast<unsigned long long>(stats.construction_comparisons),
                    static_cast<unsigned long long>(stats.total_comparisons), ratio);
      }
    }
  }
  if (json_out) {
    json doc{{"command", "bench"}, {"seed", seed}, {"rows", rows}};
    std::cout << doc.dump(2) << "\n";
  }
  return 0;
}

int cmd_gen(Pos n, std::size_t q, std::uint64_t seed) {
  for (const auto& [a, b] : oracle::gen_noncrossing_queries(n, q, seed)) {
    std::printf("%lld %lld\n", static_cast<long long>(a), static_cast<long long>(b));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"non-crossing LCE toolkit: runs, Lyndon trees, square counting"};
  app.require_subcommand(1);

  CommonFlags runs_flags;
  bool runs_serial = false;
  bool runs_strict = false;
  auto* runs_cmd = app.add_subcommand("runs", "all runs of the text");
  add_common(runs_cmd, runs_flags);
  runs_cmd->add_flag("--serial", runs_serial, "disable the parallel pipeline");
  runs_cmd->add_flag("--strict", runs_strict, "run all query groups on strict backends");

  CommonFlags lyndon_flags;
  int lyndon_order = 0;
  auto* lyndon_cmd = app.add_subcommand("lyndon", "Lyndon tree, one interval per line");
  add_common(lyndon_cmd, lyndon_flags);
  lyndon_cmd->add_option("--order", lyndon_order, "symbol order")
      ->check(CLI::IsMember({0, 1}))
      ->capture_default_str();

  CommonFlags squares_flags;
  bool squares_serial = false;
  bool squares_strict = false;
  auto* squares_cmd = app.add_subcommand("squares", "number of square occurrences");
  add_common(squares_cmd, squares_flags);
  squares_cmd->add_flag("--serial", squares_serial, "disable the parallel pipeline");
  squares_cmd->add_flag("--strict", squares_strict, "run all query groups on strict backends");

  CommonFlags lce_flags;
  std::string queries_path;
  bool lce_strict = false;
  auto* lce_cmd = app.add_subcommand("lce", "answer a batch of LCE queries");
  add_common(lce_cmd, lce_flags);
  lce_cmd->add_option("--queries", queries_path, "file with one 'a b' query per line")
      ->required();
  lce_cmd->add_flag("--strict", lce_strict, "reject crossing queries");

  std::vector<std::string> bench_families;
  std::string bench_sizes = "1024,2048,4096,8192,16384,32768,65536";
  std::uint64_t bench_seed = 1;
  bool bench_json = false;
  bool bench_serial = false;
  auto* bench_cmd = app.add_subcommand("bench", "work-scaling report for the runs pipeline");
  bench_cmd->add_option("--family", bench_families,
                        "unary|fibonacci|thue-morse|random|all (repeatable)");
  bench_cmd->add_option("--sizes", bench_sizes, "comma-separated text lengths")
      ->capture_default_str();
  bench_cmd->add_option("--seed", bench_seed, "seed for the random family")
      ->capture_default_str();
  bench_cmd->add_flag("--json", bench_json, "emit one JSON document");
  bench_cmd->add_flag("--serial", bench_serial, "disable the parallel pipeline");

  Pos gen_n = 0;
  std::size_t gen_q = 0;
  std::uint64_t gen_seed = 1;
  auto* gen_cmd = app.add_subcommand("gen", "emit a non-crossing query workload");
  gen_cmd->add_option("--n", gen_n, "universe size")->required();
  gen_cmd->add_option("--q", gen_q, "number of queries")->required();
  gen_cmd->add_option("--seed", gen_seed, "workload seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (runs_cmd->parsed()) return cmd_runs(runs_flags, runs_serial, runs_strict);
    if (lyndon_cmd->parsed()) return cmd_lyndon(lyndon_flags, lyndon_order);
    if (squares_cmd->parsed()) return cmd_squares(squares_flags, squares_serial, squares_strict);
    if (lce_cmd->parsed()) return cmd_lce(lce_flags, queries_path, lce_strict);
    if (bench_cmd->parsed()) {
      return cmd_bench(bench_families, bench_sizes, bench_seed, bench_json, bench_serial);
    }
    if (gen_cmd->parsed()) return cmd_gen(gen_n, gen_q, gen_seed);
  } catch (const CrossingViolation& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const InvariantViolation& e) {
    std::fprintf(stderr, "internal invariant failure: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 1;
}
