#pragma once

// Data-parallel arithmetic used by the operator loops.
//
// Every kernel has a scalar reference implementation. SIMD variants (AVX2 on
// x86-64, NEON on AArch64) are compiled when available and selected at
// runtime. Reductions that only compare values (min, max, max_abs) are exact
// in every backend; dot and axpy may differ from the scalar reference by
// reassociation rounding only.

#include <cstddef>
#include <span>
#include <string_view>

namespace imc::kernels {

enum class Backend { Scalar, Avx2, Neon };

struct MinMax {
  double min;
  double max;
};

/// Function table for one backend.
struct KernelTable {
  Backend backend;
  double (*dot)(const double* a, const double* b, std::size_t n);
  MinMax (*min_max)(const double* a, std::size_t n);
  double (*max_abs)(const double* a, std::size_t n);
  // y += alpha * x
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  // out = a + b, out = a - b, out = alpha * a (out may alias a or b)
  void (*add)(const double* a, const double* b, double* out, std::size_t n);
  void (*sub)(const double* a, const double* b, double* out, std::size_t n);
  void (*scale)(double alpha, const double* a, double* out, std::size_t n);
};

std::string_view backend_name(Backend b);

/// Table for a specific backend, or nullptr when it is not compiled in or the
/// CPU lacks the instruction set.
const KernelTable* table_for(Backend b);

/// Backend picked at first use. Honors IMC_KERNELS=scalar|avx2|neon when the
/// requested backend is usable, otherwise the widest supported one.
const KernelTable& active();

// Convenience wrappers over the active table.

inline double dot(std::span<const double> a, std::span<const double> b) {
  return active().dot(a.data(), b.data(), a.size());
}

inline MinMax min_max(std::span<const double> a) {
  return active().min_max(a.data(), a.size());
}

inline double max_abs(std::span<const double> a) {
  return active().max_abs(a.data(), a.size());
}

inline void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  active().axpy(alpha, x.data(), y.data(), x.size());
}

namespace scalar {
double dot(const double* a, const double* b, std::size_t n);
MinMax min_max(const double* a, std::size_t n);
double max_abs(const double* a, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void add(const double* a, const double* b, double* out, std::size_t n);
void sub(const double* a, const double* b, double* out, std::size_t n);
void scale(double alpha, const double* a, double* out, std::size_t n);
}  // namespace scalar

}  // namespace imc::kernels
