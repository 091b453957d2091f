#include <arm_neon.h>

#include <cmath>
#include <limits>

#include "imc/kernels.hpp"

namespace imc::kernels::neon {

double dot(const double* a, const double* b, std::size_t n) {
  std::size_t i = 0;
  double s = 0.0;
  if (n >= 2) {
    float64x2_t acc = vdupq_n_f64(0.0);
    for (; i + 2 <= n; i += 2) {
      acc = vaddq_f64(acc, vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
    }
    s = vaddvq_f64(acc);
  }
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

MinMax min_max(const double* a, std::size_t n) {
  MinMax r{std::numeric_limits<double>::infinity(),
           -std::numeric_limits<double>::infinity()};
  std::size_t i = 0;
  if (n >= 2) {
    float64x2_t lo = vld1q_f64(a);
    float64x2_t hi = lo;
    for (i = 2; i + 2 <= n; i += 2) {
      const float64x2_t v = vld1q_f64(a + i);
      lo = vminq_f64(lo, v);
      hi = vmaxq_f64(hi, v);
    }
    r.min = vminvq_f64(lo);
    r.max = vmaxvq_f64(hi);
  }
  for (; i < n; ++i) {
    if (a[i] < r.min) r.min = a[i];
    if (a[i] > r.max) r.max = a[i];
  }
  return r;
}

double max_abs(const double* a, std::size_t n) {
  std::size_t i = 0;
  double m = 0.0;
  if (n >= 2) {
    float64x2_t acc = vdupq_n_f64(0.0);
    for (; i + 2 <= n; i += 2) acc = vmaxq_f64(acc, vabsq_f64(vld1q_f64(a + i)));
    m = vmaxvq_f64(acc);
  }
  for (; i < n; ++i) {
    const double v = std::fabs(a[i]);
    if (v > m) m = v;
  }
  return m;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(alpha);
  std::size_t i = 0;
  // vmulq + vaddq rather than vfmaq to match the scalar rounding.
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(y + i, vaddq_f64(vld1q_f64(y + i), vmulq_f64(va, vld1q_f64(x + i))));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void add(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(out + i, vaddq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
  for (; i < n; ++i) out[i] = a[i] + b[i];
}

void sub(const double* a, const double* b, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(out + i, vsubq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
  for (; i < n; ++i) out[i] = a[i] - b[i];
}

void scale(double alpha, const double* a, double* out, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(out + i, vmulq_f64(va, vld1q_f64(a + i)));
  for (; i < n; ++i) out[i] = alpha * a[i];
}

}  // namespace imc::kernels::neon
