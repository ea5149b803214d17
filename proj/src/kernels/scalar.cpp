#include <cstddef>

#include "cmg/kernels.hpp"

namespace cmg::kernels::scalar {

void xor_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
  for (std::size_t k = 0; k < dst.size(); ++k) dst[k] ^= src[k];
}

void submul_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t factor,
                std::uint32_t p) {
  const std::uint64_t neg = (p - factor) % p;
  for (std::size_t k = 0; k < dst.size(); ++k) {
    dst[k] = static_cast<std::uint32_t>((dst[k] + neg * src[k]) % p);
  }
}

}  // namespace cmg::kernels::scalar
