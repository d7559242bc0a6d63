#include "nclce/text.hpp"

#include <cctype>
#include <charconv>
#include <istream>
#include <iterator>

namespace nclce {

TextParseError::TextParseError(std::size_t token_index, std::string token)
    : std::runtime_error("token " + std::to_string(token_index) +
                         " is not a non-negative integer: \"" + token + "\""),
      token_index_(token_index),
      token_(std::move(token)) {}

Text Text::from_bytes(std::string_view bytes) {
  std::vector<Symbol> symbols;
  symbols.reserve(bytes.size());
  for (unsigned char c : bytes) symbols.push_back(static_cast<Symbol>(c));
  return Text(std::move(symbols));
}

Text Text::from_tokens(std::string_view tokens) {
  std::vector<Symbol> symbols;
  std::size_t index = 0;
  std::size_t i = 0;
  while (i < tokens.size()) {
    while (i < tokens.size() && std::isspace(static_cast<unsigned char>(tokens[i]))) ++i;
    if (i >= tokens.size()) break;
    std::size_t j = i;
    while (j < tokens.size() && !std::isspace(static_cast<unsigned char>(tokens[j]))) ++j;
    const std::string_view tok = tokens.substr(i, j - i);
    ++index;
    Symbol value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw TextParseError(index, std::string(tok));
    }
    symbols.push_back(value);
    i = j;
  }
  return Text(std::move(symbols));
}

std::strong_ordering Text::compare_at(Pos i, Pos j, SymbolOrder ord) const {
  const Len n = size();
  if (i < 1 || j < 1 || i > n + 1 || j > n + 1) {
    throw std::out_of_range("compare_at: position out of 1.." + std::to_string(n + 1));
  }
  const bool end_i = (i == n + 1);
  const bool end_j = (j == n + 1);
  if (end_i || end_j) {
    // The boundary sorts below every real symbol under both orders.
    if (end_i && end_j) return std::strong_ordering::equal;
    return end_i ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (ord == SymbolOrder::order0) return symbol(i) <=> symbol(j);
  return symbol(j) <=> symbol(i);
}

Text Text::reversed() const {
  std::vector<Symbol> symbols(symbols_.rbegin(), symbols_.rend());
  return Text(std::move(symbols));
}

Text load_text(std::istream& in, InputMode mode) {
  std::string data(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>{});
  return mode == InputMode::bytes ? Text::from_bytes(data) : Text::from_tokens(data);
}

}  // namespace nclce
