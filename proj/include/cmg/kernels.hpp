#pragma once

// Row kernels for exact elimination over GF(2) and GF(p).
//
// Every kernel has a scalar reference in cmg::kernels::scalar and, on
// x86-64, an AVX2 variant in cmg::kernels::avx2. The unqualified entry
// points dispatch to the best variant the CPU supports; tests pin the
// variants to each other.

#include <cstdint>
#include <span>

namespace cmg::kernels {

enum class Isa { Scalar, Avx2 };

const char* to_string(Isa isa);
bool supported(Isa isa);
/// Widest supported variant.
Isa best_isa();
Isa active_isa();
/// Throws InputError if the CPU lacks the requested variant.
void set_active_isa(Isa isa);

/// Restores the previously active variant on destruction.
class ScopedIsa {
 public:
  explicit ScopedIsa(Isa isa) : previous_(active_isa()) { set_active_isa(isa); }
  ~ScopedIsa() { set_active_isa(previous_); }
  ScopedIsa(const ScopedIsa&) = delete;
  ScopedIsa& operator=(const ScopedIsa&) = delete;

 private:
  Isa previous_;
};

/// Largest modulus accepted by submul_mod; products stay below 2^31.
inline constexpr std::uint32_t kMaxModulus = 32768;

/// dst[k] ^= src[k]. Spans must have equal length.
void xor_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);

/// dst[k] = (dst[k] - factor * src[k]) mod p for entries already in [0, p),
/// 2 <= p < kMaxModulus, factor in [0, p).
void submul_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t factor,
                std::uint32_t p);

namespace scalar {
void xor_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
void submul_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t factor,
                std::uint32_t p);
}  // namespace scalar

#if defined(CMG_HAVE_AVX2_KERNELS)
namespace avx2 {
void xor_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src);
void submul_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t factor,
                std::uint32_t p);
}  // namespace avx2
#endif

}  // namespace cmg::kernels
