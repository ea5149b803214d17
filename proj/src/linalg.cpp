#include "cmg/linalg.hpp"

#include <algorithm>
#include <span>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "cmg/errors.hpp"
#include "cmg/kernels.hpp"

namespace cmg {

namespace {

std::size_t rank_gf2(const IntMatrix& m) {
  const std::size_t words = (m.cols + 63) / 64;
  std::vector<std::uint64_t> bits(m.rows * words, 0);
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) {
      if (m.at(r, c) & 1) bits[r * words + c / 64] |= std::uint64_t{1} << (c % 64);
    }
  }
  auto row = [&](std::size_t r) { return std::span<std::uint64_t>(bits.data() + r * words, words); };

  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t mask = std::uint64_t{1} << (c % 64);
    std::size_t pivot = rank;
    while (pivot < m.rows && !(bits[pivot * words + w] & mask)) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != rank) std::swap_ranges(row(pivot).begin(), row(pivot).end(), row(rank).begin());
    for (std::size_t r = rank + 1; r < m.rows; ++r) {
      if (bits[r * words + w] & mask) kernels::xor_into(row(r), row(rank));
    }
    ++rank;
  }
  return rank;
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  std::uint32_t e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::size_t rank_odd_prime(const IntMatrix& m, std::uint32_t p) {
  std::vector<std::uint32_t> cells(m.entries.size());
  const auto sp = static_cast<std::int64_t>(p);
  for (std::size_t k = 0; k < cells.size(); ++k) {
    cells[k] = static_cast<std::uint32_t>(((m.entries[k] % sp) + sp) % sp);
  }
  auto row = [&](std::size_t r) { return std::span<std::uint32_t>(cells.data() + r * m.cols, m.cols); };

  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows && cells[pivot * m.cols + c] == 0) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != rank) std::swap_ranges(row(pivot).begin(), row(pivot).end(), row(rank).begin());
    const std::uint32_t inv = inverse_mod(cells[rank * m.cols + c], p);
    for (std::size_t r = rank + 1; r < m.rows; ++r) {
      const std::uint32_t e = cells[r * m.cols + c];
      if (e == 0) continue;
      const auto factor = static_cast<std::uint32_t>(std::uint64_t{e} * inv % p);
      kernels::submul_mod(row(r), row(rank), factor, p);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::size_t rank_mod_p(const IntMatrix& m, std::uint32_t p) {
  if (!is_prime(p) || p >= kernels::kMaxModulus) {
    throw InputError("field characteristic must be a prime below " + std::to_string(kernels::kMaxModulus));
  }
  if (m.rows == 0 || m.cols == 0) return 0;
  return p == 2 ? rank_gf2(m) : rank_odd_prime(m, p);
}

std::size_t rank_rational(const IntMatrix& m) {
  using boost::multiprecision::cpp_rational;
  if (m.rows == 0 || m.cols == 0) return 0;
  std::vector<cpp_rational> a(m.entries.begin(), m.entries.end());
  auto at = [&](std::size_t r, std::size_t c) -> cpp_rational& { return a[r * m.cols + c]; };

  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows && at(pivot, c) == 0) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != rank) {
      for (std::size_t k = 0; k < m.cols; ++k) std::swap(at(pivot, k), at(rank, k));
    }
    for (std::size_t r = rank + 1; r < m.rows; ++r) {
      if (at(r, c) == 0) continue;
      const cpp_rational factor = at(r, c) / at(rank, c);
      for (std::size_t k = c; k < m.cols; ++k) at(r, k) -= factor * at(rank, k);
    }
    ++rank;
  }
  return rank;
}

}  // namespace cmg
