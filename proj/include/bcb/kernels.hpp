#pragma once

// Data-parallel inner loops of the type-class sums. Each kernel has a scalar
// reference implementation and, on x86-64, an AVX2+FMA variant chosen at
// runtime. The variants agree to a few ulps and are equivalence-tested.

#include <cstddef>
#include <span>
#include <string_view>

namespace bcb::kernels {

enum class Isa { scalar, avx2 };

struct KernelTable {
  Isa isa;
  // ln sum_i exp(x_i); -inf for an empty or all -inf input.
  double (*log_sum_exp)(const double* x, std::size_t n);
  // out_i = w_i + min(a_i, b_i)
  void (*add_min)(const double* a, const double* b, const double* w, double* out, std::size_t n);
  // out_i = w_i + lambda a_i + (1 - lambda) b_i
  void (*add_blend)(const double* a, const double* b, const double* w, double lambda, double* out,
                    std::size_t n);
  // out_i = exp(x_i)
  void (*exp)(const double* x, double* out, std::size_t n);
};

bool isa_supported(Isa isa);
std::string_view isa_name(Isa isa);

// Table for a specific ISA; throws std::invalid_argument if the host lacks it.
const KernelTable& kernels_for(Isa isa);

// The table used by the library. Defaults to the best supported ISA unless
// the environment variable BCB_KERNELS names one ("scalar" or "avx2").
const KernelTable& active();
Isa active_isa();
// Switches the table used by the library; returns the previous ISA.
Isa set_active_isa(Isa isa);

inline double log_sum_exp(std::span<const double> x) { return active().log_sum_exp(x.data(), x.size()); }

}  // namespace bcb::kernels
