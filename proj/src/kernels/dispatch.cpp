#include <atomic>

#include "cmg/errors.hpp"
#include "cmg/kernels.hpp"

namespace cmg::kernels {

namespace {

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{best_isa()};
  return isa;
}

}  // namespace

const char* to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "scalar";
}

bool supported(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(CMG_HAVE_AVX2_KERNELS)
      return __builtin_cpu_supports("avx2") != 0;
#else
      return false;
#endif
  }
  return false;
}

Isa best_isa() { return supported(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar; }

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (!supported(isa)) throw InputError(std::string("kernel variant '") + to_string(isa) + "' is not supported here");
  active().store(isa, std::memory_order_relaxed);
}

void xor_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
#if defined(CMG_HAVE_AVX2_KERNELS)
  if (active_isa() == Isa::Avx2) return avx2::xor_into(dst, src);
#endif
  scalar::xor_into(dst, src);
}

void submul_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t factor,
                std::uint32_t p) {
#if defined(CMG_HAVE_AVX2_KERNELS)
  if (active_isa() == Isa::Avx2) return avx2::submul_mod(dst, src, factor, p);
#endif
  scalar::submul_mod(dst, src, factor, p);
}

}  // namespace cmg::kernels
