#include "bcb/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "kernels_impl.hpp"

namespace bcb::kernels {
namespace {

constexpr KernelTable kScalar{Isa::scalar, scalar::log_sum_exp, scalar::add_min, scalar::add_blend,
                              scalar::exp};
#if defined(BCB_HAVE_AVX2)
constexpr KernelTable kAvx2{Isa::avx2, avx2::log_sum_exp, avx2::add_min, avx2::add_blend, avx2::exp};
#endif

const KernelTable* initial_table() {
  if (const char* env = std::getenv("BCB_KERNELS")) {
    const std::string name(env);
    if (name == "scalar") return &kScalar;
    if (name == "avx2" && isa_supported(Isa::avx2)) return &kernels_for(Isa::avx2);
  }
  return isa_supported(Isa::avx2) ? &kernels_for(Isa::avx2) : &kScalar;
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> table{initial_table()};
  return table;
}

}  // namespace

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(BCB_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
  }
  return false;
}

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

const KernelTable& kernels_for(Isa isa) {
  if (!isa_supported(isa)) {
    throw std::invalid_argument("kernel ISA not supported on this host: " + std::string(isa_name(isa)));
  }
#if defined(BCB_HAVE_AVX2)
  if (isa == Isa::avx2) return kAvx2;
#endif
  return kScalar;
}

const KernelTable& active() { return *current().load(std::memory_order_acquire); }

Isa active_isa() { return active().isa; }

Isa set_active_isa(Isa isa) {
  const KernelTable* next = &kernels_for(isa);
  return current().exchange(next, std::memory_order_acq_rel)->isa;
}

}  // namespace bcb::kernels
