#include <doctest.h>

#include <random>

#include "cmg/errors.hpp"
#include "cmg/kernels.hpp"
#include "cmg/linalg.hpp"

using namespace cmg;

namespace {

/// Rank by enumerating square minors: the largest k with a nonzero k x k
/// minor. Determinants by permutation expansion; only for tiny matrices.
std::int64_t det(const IntMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols,
                 std::int64_t modulus) {
  std::vector<std::size_t> perm(cols.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::int64_t total = 0;
  do {
    std::int64_t term = 1;
    for (std::size_t i = 0; i < perm.size(); ++i) term *= m.at(rows[i], cols[perm[i]]);
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
    }
    total += (inversions % 2 ? -term : term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return modulus ? ((total % modulus) + modulus) % modulus : total;
}

std::size_t minor_rank(const IntMatrix& m, std::int64_t modulus) {
  std::size_t best = 0;
  const std::size_t rmask = std::size_t{1} << m.rows;
  const std::size_t cmask = std::size_t{1} << m.cols;
  for (std::size_t rs = 1; rs < rmask; ++rs) {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if ((rs >> i) & 1U) rows.push_back(i);
    }
    if (rows.size() <= best) continue;
    for (std::size_t cs = 1; cs < cmask; ++cs) {
      if (static_cast<std::size_t>(__builtin_popcountll(cs)) != rows.size()) continue;
      std::vector<std::size_t> cols;
      for (std::size_t j = 0; j < m.cols; ++j) {
        if ((cs >> j) & 1U) cols.push_back(j);
      }
      if (det(m, rows, cols, modulus) != 0) {
        best = rows.size();
        break;
      }
    }
  }
  return best;
}

IntMatrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng) {
  IntMatrix m(r, c);
  for (auto& e : m.entries) e = static_cast<std::int32_t>(rng() % 5) - 2;
  return m;
}

}  // namespace

TEST_CASE("is_prime") {
  CHECK(is_prime(2));
  CHECK(is_prime(32749));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
}

TEST_CASE("ranks agree with the minor oracle") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 150; ++trial) {
    const IntMatrix m = random_matrix(1 + rng() % 5, 1 + rng() % 5, rng);
    CHECK(rank_rational(m) == minor_rank(m, 0));
    for (std::uint32_t p : {2U, 3U, 5U, 7U}) CHECK(rank_mod_p(m, p) == minor_rank(m, p));
  }
}

TEST_CASE("ranks are identical under both kernel variants") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 60; ++trial) {
    const IntMatrix m = random_matrix(3 + rng() % 90, 3 + rng() % 140, rng);
    std::size_t scalar2, scalar3;
    {
      kernels::ScopedIsa s(kernels::Isa::Scalar);
      scalar2 = rank_mod_p(m, 2);
      scalar3 = rank_mod_p(m, 3);
    }
    CHECK(rank_mod_p(m, 2) == scalar2);
    CHECK(rank_mod_p(m, 3) == scalar3);
  }
}

TEST_CASE("rank over Q differs from GF(2) for the 2x2 matrix [[1,1],[1,-1]]") {
  IntMatrix m(2, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = 1;
  m.at(1, 0) = 1;
  m.at(1, 1) = -1;
  CHECK(rank_rational(m) == 2);
  CHECK(rank_mod_p(m, 2) == 1);
  CHECK_THROWS_AS(rank_mod_p(m, 4), InputError);
}
