#include "hearth/simd/kernels.hpp"

#include <cstddef>

namespace hearth::simd::scalar {

float dot(std::span<const float> a, std::span<const float> b) {
  float sum = 0.0f;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

float squared_norm(std::span<const float> a) { return dot(a, a); }

double squared_norm_wide(std::span<const float> a) {
  double sum = 0.0;
  for (float v : a) sum += static_cast<double>(v) * v;
  return sum;
}

float squared_distance(std::span<const float> a, std::span<const float> b) {
  float sum = 0.0f;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const float d = a[i] - b[i];
    sum += d * d;
  }
  return sum;
}

void accumulate(std::span<float> acc, std::span<const float> x) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += x[i];
}

void scale(std::span<float> x, float factor) {
  for (float& v : x) v *= factor;
}

}  // namespace hearth::simd::scalar
