#include <atomic>
#include <cstdlib>
#include <string>

#include "isospec/error.hpp"
#include "isospec/kernels.hpp"

namespace isospec::kernels {

namespace {

struct KernelTable {
  Isa isa;
  double (*dot)(const double*, const double*, std::size_t) noexcept;
  void (*rotate)(double*, double*, std::size_t, double, double) noexcept;
  double (*max_abs_diff)(const double*, const double*, std::size_t) noexcept;
};

constexpr KernelTable kScalarTable{Isa::Scalar, &scalar::dot, &scalar::rotate, &scalar::max_abs_diff};
#if defined(ISOSPEC_HAVE_AVX2)
constexpr KernelTable kAvx2Table{Isa::Avx2, &avx2::dot, &avx2::rotate, &avx2::max_abs_diff};
#endif

bool cpu_has_avx2() noexcept {
#if defined(ISOSPEC_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable* table_for(Isa isa) noexcept {
#if defined(ISOSPEC_HAVE_AVX2)
  if (isa == Isa::Avx2) return &kAvx2Table;
#endif
  (void)isa;
  return &kScalarTable;
}

const KernelTable* initial_table() noexcept {
  if (const char* forced = std::getenv("ISOSPEC_SIMD"); forced && std::string(forced) == "scalar") {
    return &kScalarTable;
  }
  return table_for(detect_isa());
}

std::atomic<const KernelTable*>& active() noexcept {
  static std::atomic<const KernelTable*> table{initial_table()};
  return table;
}

}  // namespace

std::string_view to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

bool isa_supported(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2: return cpu_has_avx2();
  }
  return false;
}

Isa detect_isa() noexcept { return isa_supported(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar; }

Isa active_isa() noexcept { return active().load(std::memory_order_acquire)->isa; }

void set_active_isa(Isa isa) {
  if (!isa_supported(isa)) {
    throw Error(ErrorKind::InvalidRange, "kernel ISA '" + std::string(to_string(isa)) + "' not available");
  }
  active().store(table_for(isa), std::memory_order_release);
}

double dot(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw Error(ErrorKind::LengthMismatch, "dot: operand lengths differ");
  return active().load(std::memory_order_acquire)->dot(x.data(), y.data(), x.size());
}

void rotate(std::span<double> x, std::span<double> y, double c, double s) {
  if (x.size() != y.size()) throw Error(ErrorKind::LengthMismatch, "rotate: operand lengths differ");
  active().load(std::memory_order_acquire)->rotate(x.data(), y.data(), x.size(), c, s);
}

double max_abs_diff(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw Error(ErrorKind::LengthMismatch, "max_abs_diff: operand lengths differ");
  return active().load(std::memory_order_acquire)->max_abs_diff(x.data(), y.data(), x.size());
}

}  // namespace isospec::kernels
