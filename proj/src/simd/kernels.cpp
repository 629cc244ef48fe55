#include "hearth/simd/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace hearth::simd {
namespace {

struct KernelTable {
  Isa isa;
  float (*dot)(std::span<const float>, std::span<const float>);
  float (*squared_norm)(std::span<const float>);
  double (*squared_norm_wide)(std::span<const float>);
  float (*squared_distance)(std::span<const float>, std::span<const float>);
  void (*accumulate)(std::span<float>, std::span<const float>);
  void (*scale)(std::span<float>, float);
};

constexpr KernelTable kScalar{Isa::scalar, scalar::dot, scalar::squared_norm, scalar::squared_norm_wide,
                              scalar::squared_distance, scalar::accumulate, scalar::scale};
#if defined(HEARTH_HAVE_AVX2)
constexpr KernelTable kAvx2{Isa::avx2, avx2::dot, avx2::squared_norm, avx2::squared_norm_wide,
                            avx2::squared_distance, avx2::accumulate, avx2::scale};
#endif

bool cpu_has_avx2() {
#if defined(HEARTH_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable* table_for(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return &kScalar;
    case Isa::avx2:
#if defined(HEARTH_HAVE_AVX2)
      return cpu_has_avx2() ? &kAvx2 : nullptr;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

const KernelTable* detect() {
  if (const char* env = std::getenv("HEARTH_SIMD")) {
    const std::string want(env);
    if (want == "scalar") return &kScalar;
    if (want == "avx2") {
      if (const auto* t = table_for(Isa::avx2)) return t;
    }
  }
  if (const auto* t = table_for(Isa::avx2)) return t;
  return &kScalar;
}

std::atomic<const KernelTable*>& active() {
  static std::atomic<const KernelTable*> table{detect()};
  return table;
}

const KernelTable& kernels() { return *active().load(std::memory_order_relaxed); }

}  // namespace

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

Isa active_isa() { return kernels().isa; }

bool isa_supported(Isa isa) { return table_for(isa) != nullptr; }

void force_isa(Isa isa) {
  const auto* t = table_for(isa);
  if (t == nullptr)
    throw std::invalid_argument("instruction set not available: " + std::string(to_string(isa)));
  active().store(t, std::memory_order_relaxed);
}

float dot(std::span<const float> a, std::span<const float> b) { return kernels().dot(a, b); }

float squared_norm(std::span<const float> a) { return kernels().squared_norm(a); }

double squared_norm_wide(std::span<const float> a) { return kernels().squared_norm_wide(a); }

float squared_distance(std::span<const float> a, std::span<const float> b) {
  return kernels().squared_distance(a, b);
}

void accumulate(std::span<float> acc, std::span<const float> x) { kernels().accumulate(acc, x); }

void scale(std::span<float> x, float factor) { kernels().scale(x, factor); }

}  // namespace hearth::simd
