#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Invocation {
  int exit_code;
  std::string out;
  std::string err;
};

const fs::path& work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("nclce_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void spit(const fs::path& p, const std::string& data) {
  std::ofstream out(p, std::ios::binary);
  out << data;
}

Invocation run_cli(const std::string& args) {
  const char* bin = std::getenv("NCLCE_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "NCLCE_BIN must point at the CLI binary");
  const fs::path out = work_dir() / "stdout.txt";
  const fs::path err = work_dir() / "stderr.txt";
  const std::string command =
      std::string(bin) + " " + args + " > " + out.string() + " 2> " + err.string();
  const int status = std::system(command.c_str());
  Invocation result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out);
  result.err = slurp(err);
  return result;
}

std::size_t count_lines(const std::string& s) {
  std::size_t lines = 0;
  for (char c : s) lines += c == '\n';
  return lines;
}

}  // namespace

TEST_CASE("runs command on the example string") {
  const fs::path input = work_dir() / "appendix.txt";
  spit(input, "ababaabaabbbaa");
  const auto r = run_cli("runs " + input.string());
  CHECK(r.exit_code == 0);
  CHECK(count_lines(r.out) == 6);
  CHECK(r.out.find("3 10 3\n") != std::string::npos);
  CHECK(r.out ==
        "1 5 2\n3 10 3\n5 6 1\n8 9 1\n10 12 1\n13 14 1\n");

  const auto via_oracle = run_cli("runs --oracle " + input.string());
  CHECK(via_oracle.exit_code == 0);
  CHECK(via_oracle.out == r.out);

  const auto serial = run_cli("runs --serial " + input.string());
  CHECK(serial.out == r.out);

  const auto strict = run_cli("runs --strict " + input.string());
  CHECK(strict.exit_code == 0);
  CHECK(strict.out == r.out);
}

TEST_CASE("runs command on an empty file") {
  const fs::path input = work_dir() / "empty.txt";
  spit(input, "");
  const auto r = run_cli("runs --stats " + input.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("# runs 0\n") != std::string::npos);
  CHECK(count_lines(r.out) >= 2);  // only stats records
}

TEST_CASE("token mode and stdin") {
  const fs::path input = work_dir() / "tokens.txt";
  spit(input, "7 7 7 7\n");
  const auto r = run_cli("runs --mode tokens " + input.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1 4 1\n");
  const auto piped = run_cli("squares --mode tokens - < " + input.string());
  CHECK(piped.exit_code == 0);
  CHECK(piped.out == "4\n");
}

TEST_CASE("malformed tokens exit with a parse failure") {
  const fs::path input = work_dir() / "bad_tokens.txt";
  spit(input, "3 x 9");
  const auto r = run_cli("runs --mode tokens " + input.string());
  CHECK(r.exit_code == 1);
  CHECK(r.err.find("token 2") != std::string::npos);
}

TEST_CASE("lyndon command prints the golden tree") {
  const fs::path input = work_dir() / "lyndon.txt";
  spit(input, "aaababaabbabb");
  const auto r = run_cli("lyndon --order 0 " + input.string());
  CHECK(r.exit_code == 0);
  CHECK(count_lines(r.out) == 27);
  CHECK(r.out.rfind("0 13\n0 0\n1 13\n", 0) == 0);
  const auto via_oracle = run_cli("lyndon --order 0 --oracle " + input.string());
  CHECK(via_oracle.out == r.out);
  const auto other_order = run_cli("lyndon --order 1 " + input.string());
  CHECK(other_order.exit_code == 0);
  CHECK(other_order.out != r.out);
  const auto oracle_other = run_cli("lyndon --order 1 --oracle " + input.string());
  CHECK(oracle_other.out == other_order.out);
}

TEST_CASE("lyndon of a single letter") {
  const fs::path input = work_dir() / "single.txt";
  spit(input, "a");
  const auto r = run_cli("lyndon " + input.string());
  CHECK(r.out == "0 1\n0 0\n1 1\n");
}

TEST_CASE("squares golden values") {
  const fs::path input = work_dir() / "sq.txt";
  spit(input, "aaaa");
  CHECK(run_cli("squares " + input.string()).out == "4\n");
  spit(input, "ababaabaabbbaa");
  CHECK(run_cli("squares " + input.string()).out == "10\n");
  CHECK(run_cli("squares --oracle " + input.string()).out == "10\n");
  spit(input, "abc");
  CHECK(run_cli("squares " + input.string()).out == "0\n");
}

TEST_CASE("lce command answers queries and reports stats") {
  const fs::path input = work_dir() / "lce_input.txt";
  const fs::path queries = work_dir() / "queries.txt";
  spit(input, "ababaabaabbbaa");
  spit(queries, "1 3\n1 1\n5 6\n");
  const auto r = run_cli("lce --queries " + queries.string() + " " + input.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out == "3\n14\n1\n");
  const auto stats = run_cli("lce --stats --queries " + queries.string() + " " + input.string());
  CHECK(stats.exit_code == 0);
  CHECK(stats.out.rfind("3\n14\n1\n", 0) == 0);
  CHECK(stats.out.find("# total_comparisons") != std::string::npos);
  CHECK(stats.out.find("# working") != std::string::npos);
  const auto via_oracle =
      run_cli("lce --oracle --queries " + queries.string() + " " + input.string());
  CHECK(via_oracle.out == "3\n14\n1\n");
}

TEST_CASE("strict mode rejects crossing queries with exit code 2") {
  const fs::path input = work_dir() / "strict_input.txt";
  const fs::path queries = work_dir() / "crossing.txt";
  spit(input, "ababaabaabbbaa");
  spit(queries, "1 3\n2 4\n");
  const auto r = run_cli("lce --strict --queries " + queries.string() + " " + input.string());
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("(1,3)") != std::string::npos);
  CHECK(r.err.find("(2,4)") != std::string::npos);
  const auto relaxed = run_cli("lce --queries " + queries.string() + " " + input.string());
  CHECK(relaxed.exit_code == 0);
}

TEST_CASE("generated workloads feed the lce command") {
  const fs::path input = work_dir() / "gen_input.txt";
  const fs::path queries = work_dir() / "gen_queries.txt";
  spit(input, "abaababaabaababaababaabaababaaba");
  const auto gen = run_cli("gen --n 32 --q 96 --seed 5");
  CHECK(gen.exit_code == 0);
  CHECK(count_lines(gen.out) == 96);
  spit(queries, gen.out);
  const auto strict =
      run_cli("lce --strict --stats --queries " + queries.string() + " " + input.string());
  CHECK(strict.exit_code == 0);
  const auto via_oracle =
      run_cli("lce --oracle --queries " + queries.string() + " " + input.string());
  const std::string answers = strict.out.substr(0, strict.out.find('#'));
  CHECK(answers == via_oracle.out);
}

TEST_CASE("bench report is deterministic for a fixed seed") {
  const std::string args = "bench --family unary --family random --sizes 256,512 --seed 9";
  const auto first = run_cli(args);
  const auto second = run_cli(args);
  CHECK(first.exit_code == 0);
  CHECK(first.out == second.out);
  CHECK(count_lines(first.out) == 5);  // header + 2 families x 2 sizes
  const auto serial = run_cli(args + " --serial");
  CHECK(serial.out == first.out);  // comparison counts do not depend on scheduling
}

TEST_CASE("usage errors exit with code 1") {
  CHECK(run_cli("").exit_code == 1);
  CHECK(run_cli("runs --mode nonsense /dev/null").exit_code == 1);
  CHECK(run_cli("lce /dev/null").exit_code == 1);  // missing --queries
  CHECK(run_cli("runs " + (work_dir() / "no_such_file.txt").string()).exit_code == 1);
}

TEST_CASE("json mode emits one parseable document") {
  const fs::path input = work_dir() / "json_input.txt";
  spit(input, "aabaab");
  const auto r = run_cli("runs --json " + input.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"command\": \"runs\"") != std::string::npos);
  CHECK(r.out.find("\"count\": 3") != std::string::npos);
}
