#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nclce/oracle.hpp"
#include "nclce/runs.hpp"
#include "nclce/words.hpp"

using namespace nclce;

namespace {

const Text kAppendix = Text::from_bytes("ababaabaabbbaa");

RunsOptions strict_serial() {
  RunsOptions opts;
  opts.execution = Execution::serial;
  opts.backend.strict = true;
  opts.backend.verify_witnesses = true;
  return opts;
}

void check_runs(const Text& t) {
  const std::vector<Run> expected = oracle::naive_runs(t);
  const std::vector<Run> serial = compute_runs(t, strict_serial());
  CHECK(serial == expected);
  RunsOptions par;
  par.execution = Execution::parallel;
  CHECK(compute_runs(t, par) == expected);
  const Len n = t.size();
  if (n >= 1) CHECK(expected.size() < static_cast<std::size_t>(n));
  for (const Run& r : expected) {
    CHECK(oracle::shortest_period(t, r.start, r.end) == r.period);
  }
}

}  // namespace

TEST_CASE("appendix string run set") {
  const std::vector<Run> expected{{1, 5, 2}, {3, 10, 3},  {5, 6, 1},
                                  {8, 9, 1}, {10, 12, 1}, {13, 14, 1}};
  RunsStats stats;
  const auto runs = compute_runs(kAppendix, strict_serial(), &stats);
  CHECK(runs == expected);
  CHECK(stats.groups.size() == 6);
  CHECK(stats.total_comparisons > 0);
  CHECK(stats.candidates >= runs.size());
}

TEST_CASE("trivial cases") {
  CHECK(compute_runs(Text::from_bytes("abc")).empty());
  CHECK(compute_runs(Text::from_bytes("")).empty());
  CHECK(compute_runs(Text::from_bytes("a")).empty());
  CHECK(compute_runs(Text::from_bytes("aaaa")) == std::vector<Run>{{1, 4, 1}});
}

TEST_CASE("exhaustive binary oracle equivalence up to n = 10") {
  for (Len n = 1; n <= 10; ++n) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<Symbol> symbols(static_cast<std::size_t>(n));
      for (Len i = 0; i < n; ++i) symbols[static_cast<std::size_t>(i)] = 'a' + ((mask >> i) & 1);
      check_runs(Text{symbols});
    }
  }
}

TEST_CASE("randomized oracle equivalence over alphabets 2..4") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const Len n = 20 + static_cast<Len>(rng() % 300);
    check_runs(words::random_word(n, 2 + trial % 3, rng()));
  }
}

TEST_CASE("structured families") {
  check_runs(words::fibonacci(233));
  check_runs(words::thue_morse(256));
  check_runs(words::unary(100));
}

TEST_CASE("serial and parallel pipelines agree including stats totals") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const Text t = words::random_word(500 + static_cast<Len>(rng() % 500), 2, rng());
    RunsOptions serial;
    serial.execution = Execution::serial;
    RunsOptions parallel;
    parallel.execution = Execution::parallel;
    RunsStats ss, ps;
    const auto a = compute_runs(t, serial, &ss);
    const auto b = compute_runs(t, parallel, &ps);
    CHECK(a == b);
    CHECK(ss.total_comparisons == ps.total_comparisons);
    CHECK(ss.candidates == ps.candidates);
  }
}

TEST_CASE("all six strict query groups stay non-crossing") {
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 10; ++trial) {
    const Text t = words::random_word(400, 2 + trial % 3, rng());
    CHECK_NOTHROW(compute_runs(t, strict_serial()));
  }
}

TEST_CASE("square occurrence counts") {
  CHECK(count_square_occurrences(Text::from_bytes("aaaa")) == 4);
  CHECK(count_square_occurrences(kAppendix) == 10);
  CHECK(count_square_occurrences(Text::from_bytes("abc")) == 0);
  CHECK(count_square_occurrences(Text::from_bytes("")) == 0);
}

TEST_CASE("square counts match the brute force") {
  std::mt19937_64 rng(77);
  for (Len n = 1; n <= 12; ++n) {
    for (int trial = 0; trial < 40; ++trial) {
      const Text t = words::random_word(n, 2, rng());
      CHECK(count_square_occurrences(t) == oracle::naive_square_count(t));
    }
  }
  for (int trial = 0; trial < 15; ++trial) {
    const Text t = words::random_word(200 + static_cast<Len>(rng() % 400), 2 + trial % 3, rng());
    CHECK(count_square_occurrences(t) == oracle::naive_square_count(t));
  }
}
