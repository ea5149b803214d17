#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace cmg {

/// Dense row-major integer matrix; boundary matrices only hold 0 and ±1.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int32_t> entries;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c, 0) {}
  std::int32_t& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
  std::int32_t at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
};

bool is_prime(std::uint32_t p);

/// Rank over GF(p). p = 2 runs on bit-packed rows; other primes on
/// residue rows. Throws InputError unless p is a prime below kMaxModulus.
std::size_t rank_mod_p(const IntMatrix& m, std::uint32_t p);

/// Rank over the rationals by fraction-exact Gaussian elimination.
std::size_t rank_rational(const IntMatrix& m);

}  // namespace cmg
