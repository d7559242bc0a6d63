#pragma once

#include <cstdint>

#include "nclce/text.hpp"

// Benchmark string families.
namespace nclce::words {

Text unary(Len n);

// Prefix of the infinite Fibonacci word over {a, b}.
Text fibonacci(Len n);

// Prefix of the Thue-Morse word over {a, b}.
Text thue_morse(Len n);

// Uniform random symbols 'a' .. 'a' + sigma - 1.
Text random_word(Len n, unsigned sigma, std::uint64_t seed);

}  // namespace nclce::words
