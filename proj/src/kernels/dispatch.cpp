#include <cstdlib>
#include <string>

#include "imc/kernels.hpp"

namespace imc::kernels {

#if defined(IMC_HAVE_AVX2)
namespace avx2 {
double dot(const double* a, const double* b, std::size_t n);
MinMax min_max(const double* a, std::size_t n);
double max_abs(const double* a, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void add(const double* a, const double* b, double* out, std::size_t n);
void sub(const double* a, const double* b, double* out, std::size_t n);
void scale(double alpha, const double* a, double* out, std::size_t n);
}  // namespace avx2
#endif

#if defined(IMC_HAVE_NEON)
namespace neon {
double dot(const double* a, const double* b, std::size_t n);
MinMax min_max(const double* a, std::size_t n);
double max_abs(const double* a, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void add(const double* a, const double* b, double* out, std::size_t n);
void sub(const double* a, const double* b, double* out, std::size_t n);
void scale(double alpha, const double* a, double* out, std::size_t n);
}  // namespace neon
#endif

namespace {

constexpr KernelTable kScalar{Backend::Scalar, scalar::dot, scalar::min_max, scalar::max_abs,
                              scalar::axpy,    scalar::add, scalar::sub,     scalar::scale};

#if defined(IMC_HAVE_AVX2)
constexpr KernelTable kAvx2{Backend::Avx2, avx2::dot, avx2::min_max, avx2::max_abs,
                            avx2::axpy,    avx2::add, avx2::sub,     avx2::scale};

bool cpu_has_avx2() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
}
#endif

#if defined(IMC_HAVE_NEON)
constexpr KernelTable kNeon{Backend::Neon, neon::dot, neon::min_max, neon::max_abs,
                            neon::axpy,    neon::add, neon::sub,     neon::scale};
#endif

const KernelTable& select() {
  if (const char* env = std::getenv("IMC_KERNELS")) {
    const std::string want(env);
    Backend b = Backend::Scalar;
    if (want == "avx2") b = Backend::Avx2;
    if (want == "neon") b = Backend::Neon;
    if (const KernelTable* t = table_for(b)) return *t;
  }
  if (const KernelTable* t = table_for(Backend::Avx2)) return *t;
  if (const KernelTable* t = table_for(Backend::Neon)) return *t;
  return kScalar;
}

}  // namespace

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return "scalar";
    case Backend::Avx2:
      return "avx2";
    case Backend::Neon:
      return "neon";
  }
  return "unknown";
}

const KernelTable* table_for(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return &kScalar;
    case Backend::Avx2:
#if defined(IMC_HAVE_AVX2)
      if (cpu_has_avx2()) return &kAvx2;
#endif
      return nullptr;
    case Backend::Neon:
#if defined(IMC_HAVE_NEON)
      return &kNeon;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

const KernelTable& active() {
  static const KernelTable& table = select();
  return table;
}

}  // namespace imc::kernels
