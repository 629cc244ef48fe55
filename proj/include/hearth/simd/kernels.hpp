#pragma once

// Data-parallel kernels over face embeddings.
//
// Every kernel has a scalar reference implementation; wider variants are
// compiled per instruction set and picked once at startup based on what the
// CPU reports. Setting HEARTH_SIMD=scalar in the environment forces the
// reference path. Callers validate span lengths; kernels assume a.size() ==
// b.size().

#include <span>
#include <string_view>

namespace hearth::simd {

enum class Isa { scalar, avx2 };

std::string_view to_string(Isa isa);

/// Instruction set chosen for this process.
Isa active_isa();

/// Overrides the dispatch choice. Throws std::invalid_argument when the
/// requested ISA is not supported by the build or the CPU.
void force_isa(Isa isa);

bool isa_supported(Isa isa);

float dot(std::span<const float> a, std::span<const float> b);
float squared_norm(std::span<const float> a);
/// Squared norm accumulated in double precision; used when renormalizing.
double squared_norm_wide(std::span<const float> a);
float squared_distance(std::span<const float> a, std::span<const float> b);
/// acc[i] += x[i]
void accumulate(std::span<float> acc, std::span<const float> x);
/// x[i] *= factor
void scale(std::span<float> x, float factor);

// Per-ISA entry points, exposed for equivalence testing.
namespace scalar {
float dot(std::span<const float> a, std::span<const float> b);
float squared_norm(std::span<const float> a);
double squared_norm_wide(std::span<const float> a);
float squared_distance(std::span<const float> a, std::span<const float> b);
void accumulate(std::span<float> acc, std::span<const float> x);
void scale(std::span<float> x, float factor);
}  // namespace scalar

#if defined(HEARTH_HAVE_AVX2)
namespace avx2 {
float dot(std::span<const float> a, std::span<const float> b);
float squared_norm(std::span<const float> a);
double squared_norm_wide(std::span<const float> a);
float squared_distance(std::span<const float> a, std::span<const float> b);
void accumulate(std::span<float> acc, std::span<const float> x);
void scale(std::span<float> x, float factor);
}  // namespace avx2
#endif

}  // namespace hearth::simd
