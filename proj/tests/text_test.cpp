#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "nclce/text.hpp"

using namespace nclce;

TEST_CASE("from_bytes keeps byte identity") {
  const Text t = Text::from_bytes("ab");
  REQUIRE(t.size() == 2);
  CHECK(t.symbol(1) == 97);
  CHECK(t.symbol(2) == 98);
}

TEST_CASE("from_tokens keeps token identity") {
  const Text t = Text::from_tokens("5 3 5");
  REQUIRE(t.size() == 3);
  CHECK(t.symbol(1) == 5);
  CHECK(t.symbol(2) == 3);
  CHECK(t.symbol(3) == 5);
}

TEST_CASE("empty inputs give empty texts") {
  CHECK(Text::from_bytes("").size() == 0);
  CHECK(Text::from_tokens("").size() == 0);
  CHECK(Text::from_tokens("  \n\t ").size() == 0);
}

TEST_CASE("malformed token names its index") {
  try {
    Text::from_tokens("12 x34 9");
    FAIL("expected TextParseError");
  } catch (const TextParseError& e) {
    CHECK(e.token_index() == 2);
    CHECK(e.token() == "x34");
  }
  CHECK_THROWS_AS(Text::from_tokens("-3"), TextParseError);
  CHECK_THROWS_AS(Text::from_tokens("1 2 3.5"), TextParseError);
}

TEST_CASE("load_text reads streams in both modes") {
  std::istringstream bytes("abc");
  CHECK(load_text(bytes, InputMode::bytes) == Text::from_bytes("abc"));
  std::istringstream tokens("7 7 1\n");
  CHECK(load_text(tokens, InputMode::tokens) == Text::from_tokens("7 7 1"));
}

TEST_CASE("compare_at basic orderings") {
  const Text t = Text::from_bytes("ab");
  CHECK(t.compare_at(1, 2, SymbolOrder::order0) == std::strong_ordering::less);
  CHECK(t.compare_at(1, 2, SymbolOrder::order1) == std::strong_ordering::greater);
  CHECK(t.compare_at(1, 1, SymbolOrder::order0) == std::strong_ordering::equal);
  CHECK(t.compare_at(2, 1, SymbolOrder::order0) == std::strong_ordering::greater);
}

TEST_CASE("boundary position compares below every real symbol and never equal") {
  const Text t = Text::from_bytes("ab");
  for (Pos i = 1; i <= 2; ++i) {
    CHECK(t.compare_at(i, 3, SymbolOrder::order0) == std::strong_ordering::greater);
    CHECK(t.compare_at(i, 3, SymbolOrder::order1) == std::strong_ordering::greater);
    CHECK(t.compare_at(3, i, SymbolOrder::order0) == std::strong_ordering::less);
  }
  CHECK(t.compare_at(3, 3, SymbolOrder::order0) == std::strong_ordering::equal);
}

TEST_CASE("compare_at rejects out-of-range positions") {
  const Text t = Text::from_bytes("ab");
  CHECK_THROWS_AS(t.compare_at(0, 1, SymbolOrder::order0), std::out_of_range);
  CHECK_THROWS_AS(t.compare_at(1, 4, SymbolOrder::order0), std::out_of_range);
}

TEST_CASE("reverse fixed cases") {
  CHECK(Text::from_bytes("abc").reversed() == Text::from_bytes("cba"));
  CHECK(Text::from_bytes("").reversed() == Text::from_bytes(""));
  CHECK(Text::from_bytes("aa").reversed() == Text::from_bytes("aa"));
}

TEST_CASE("reverse is an involution and order1 mirrors order0") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const Len n = static_cast<Len>(rng() % 40);
    std::vector<Symbol> symbols(static_cast<std::size_t>(n));
    for (auto& s : symbols) s = rng() % 5;
    const Text t{symbols};
    CHECK(t.reversed().reversed() == t);
    for (int probe = 0; probe < 20 && n > 0; ++probe) {
      const Pos i = 1 + static_cast<Pos>(rng() % n);
      const Pos j = 1 + static_cast<Pos>(rng() % n);
      const auto fwd = t.compare_at(i, j, SymbolOrder::order0);
      const auto rev = t.compare_at(i, j, SymbolOrder::order1);
      if (fwd == std::strong_ordering::equal) {
        CHECK(rev == std::strong_ordering::equal);
      } else {
        CHECK(rev != fwd);
        CHECK(rev != std::strong_ordering::equal);
      }
    }
  }
}
