#include <doctest.h>

#include <random>
#include <vector>

#include "cmg/errors.hpp"
#include "cmg/kernels.hpp"

using namespace cmg;
namespace k = cmg::kernels;

TEST_CASE("dispatch reports a supported variant") {
  CHECK(k::supported(k::Isa::Scalar));
  CHECK(k::supported(k::best_isa()));
  {
    k::ScopedIsa scalar(k::Isa::Scalar);
    CHECK(k::active_isa() == k::Isa::Scalar);
  }
  CHECK(k::active_isa() == k::best_isa());
  if (!k::supported(k::Isa::Avx2)) CHECK_THROWS_AS(k::set_active_isa(k::Isa::Avx2), InputError);
}

#if defined(CMG_HAVE_AVX2_KERNELS)

TEST_CASE("xor_into: AVX2 matches scalar on ragged lengths") {
  if (!k::supported(k::Isa::Avx2)) return;
  std::mt19937_64 rng(1);
  for (std::size_t len = 0; len <= 67; ++len) {
    std::vector<std::uint64_t> a(len), b(len);
    for (auto& w : a) w = rng();
    for (auto& w : b) w = rng();
    std::vector<std::uint64_t> s = a, v = a;
    k::scalar::xor_into(s, b);
    k::avx2::xor_into(v, b);
    CHECK(s == v);
    for (std::size_t i = 0; i < len; ++i) CHECK(s[i] == (a[i] ^ b[i]));
  }
}

TEST_CASE("submul_mod: AVX2 matches scalar across moduli and tails") {
  if (!k::supported(k::Isa::Avx2)) return;
  std::mt19937_64 rng(2);
  const std::uint32_t primes[] = {2, 3, 5, 7, 17, 251, 4093, 32749};
  for (std::uint32_t p : primes) {
    for (std::size_t len = 0; len <= 41; ++len) {
      std::vector<std::uint32_t> a(len), b(len);
      for (auto& w : a) w = static_cast<std::uint32_t>(rng() % p);
      for (auto& w : b) w = static_cast<std::uint32_t>(rng() % p);
      for (std::uint32_t factor : {0U, 1U, p - 1, static_cast<std::uint32_t>(rng() % p)}) {
        std::vector<std::uint32_t> s = a, v = a;
        k::scalar::submul_mod(s, b, factor, p);
        k::avx2::submul_mod(v, b, factor, p);
        CHECK(s == v);
        for (std::size_t i = 0; i < len; ++i) {
          const std::int64_t expect = ((static_cast<std::int64_t>(a[i]) - static_cast<std::int64_t>(factor) * b[i]) % p + p) % p;
          CHECK(s[i] == expect);
        }
      }
    }
  }
}

TEST_CASE("submul_mod: extreme residues") {
  if (!k::supported(k::Isa::Avx2)) return;
  const std::uint32_t p = 32749;
  std::vector<std::uint32_t> a(19, 0), b(19, p - 1);
  std::vector<std::uint32_t> s = a, v = a;
  k::scalar::submul_mod(s, b, p - 1, p);
  k::avx2::submul_mod(v, b, p - 1, p);
  CHECK(s == v);
  CHECK(s[0] == p - 1);
}

#endif
