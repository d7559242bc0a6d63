#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nclce {

// 1-based text position; n+1 addresses the empty suffix.
using Pos = std::int64_t;
using Len = std::int64_t;
using Symbol = std::uint64_t;

// order1 compares symbols by the exact reverse of order0.
enum class SymbolOrder : int { order0 = 0, order1 = 1 };

struct Interval {
  Pos lo = 0;
  Pos hi = 0;
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

class TextParseError : public std::runtime_error {
 public:
  TextParseError(std::size_t token_index, std::string token);

  std::size_t token_index() const { return token_index_; }
  const std::string& token() const { return token_; }

 private:
  std::size_t token_index_;
  std::string token_;
};

/**
 * Immutable symbol sequence over a general ordered alphabet.
 *
 * Positions are 1-based. Position n+1 is a virtual end-of-string boundary:
 * it is never equal to a real symbol and sorts below every real symbol under
 * both orders, so that a suffix which is a proper prefix of another compares
 * smaller regardless of the symbol order. Symbol codes carry no meaning
 * beyond their total order; the library only ever compares them.
 */
class Text {
 public:
  Text() = default;
  explicit Text(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}

  static Text from_bytes(std::string_view bytes);
  // Whitespace-separated unsigned decimal tokens; throws TextParseError
  // naming the 1-based index of the offending token.
  static Text from_tokens(std::string_view tokens);

  Len size() const { return static_cast<Len>(symbols_.size()); }
  bool empty() const { return symbols_.empty(); }

  // 1 <= i <= n, unchecked.
  Symbol symbol(Pos i) const { return symbols_[static_cast<std::size_t>(i - 1)]; }

  // Ordering of the symbols at i and j under ord, 1 <= i, j <= n+1.
  // Throws std::out_of_range outside that range.
  std::strong_ordering compare_at(Pos i, Pos j, SymbolOrder ord) const;

  Text reversed() const;

  friend bool operator==(const Text&, const Text&) = default;

 private:
  std::vector<Symbol> symbols_;
};

enum class InputMode { bytes, tokens };

// Reads the whole stream: raw bytes or decimal tokens depending on mode.
Text load_text(std::istream& in, InputMode mode);

}  // namespace nclce
