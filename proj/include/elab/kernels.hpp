// Elementwise numeric kernels used by the simulation engine.
//
// Every kernel exists in a scalar reference form and (on x86-64) an AVX2
// form selected at runtime. The two are written as the same sequence of
// IEEE-754 double operations, so their outputs are bit-identical; the
// equivalence suite asserts this. exp/log/pow/normal-quantile therefore use
// our own paired implementations rather than libm.
#pragma once

#include <cstddef>
#include <cstdint>

namespace elab::kernels {

// splitmix64 finalizer (Steele, Lea, Flood 2014). The noise stream is the
// splitmix64 sequence addressed by counter: value i of the stream seeded
// with s is mix64(s + (i+1)*GAMMA), which makes random access O(1).
inline constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z);
std::uint64_t stream_bits(std::uint64_t seed, std::uint64_t index);

// 52 random bits mapped to the open interval (0,1): ((bits>>12)+0.5)*2^-52.
double stream_uniform(std::uint64_t seed, std::uint64_t index);

// Paired scalar math (mirrored by the AVX2 lanes).
double exp_pd1(double x);
double log_pd1(double x);
double powi_pd1(double base, long long n);
double powf_pd1(double base, double expo);
double normal_quantile_pd1(double u);  // AS241 PPND16-style rational approximation

// Continuous draws are snapped to the 2^-32 lattice (|v| <= 2^20, exact
// no-op beyond): counterfactual differences that are integral in exact
// arithmetic then stay integral in doubles. The 2^-33 snap error is below
// the quantile approximation budget.
double snap_lattice_pd1(double v);

// A domain fault marks its lane by OR-ing the bit pattern of 1.0 into err.
struct Backend {
  const char* name;

  void (*fill_uniform)(double* dst, std::size_t n, std::uint64_t seed,
                       std::uint64_t first, std::uint64_t stride, double lo, double hi);
  void (*fill_bernoulli)(double* dst, std::size_t n, std::uint64_t seed,
                         std::uint64_t first, std::uint64_t stride, double p);
  void (*fill_normal)(double* dst, std::size_t n, std::uint64_t seed,
                      std::uint64_t first, std::uint64_t stride, double mu, double sigma);

  void (*broadcast)(double* dst, std::size_t n, double c);
  void (*copy)(double* dst, const double* a, std::size_t n);

  void (*add)(double* dst, const double* a, const double* b, std::size_t n);
  void (*sub)(double* dst, const double* a, const double* b, std::size_t n);
  void (*mul)(double* dst, const double* a, const double* b, std::size_t n);
  void (*div)(double* dst, const double* a, const double* b, std::size_t n, double* err);
  void (*neg)(double* dst, const double* a, std::size_t n);

  void (*add_c)(double* dst, const double* a, double c, std::size_t n);
  void (*rsub_c)(double* dst, const double* a, double c, std::size_t n);  // c - a
  void (*mul_c)(double* dst, const double* a, double c, std::size_t n);
  void (*div_c)(double* dst, const double* a, double c, std::size_t n, double* err);   // a / c
  void (*rdiv_c)(double* dst, const double* a, double c, std::size_t n, double* err);  // c / a

  void (*vexp)(double* dst, const double* a, std::size_t n);
  void (*vlog)(double* dst, const double* a, std::size_t n, double* err);
  void (*vpowi)(double* dst, const double* a, long long k, std::size_t n, double* err);
  void (*vpowf)(double* dst, const double* a, double e, std::size_t n, double* err);
};

const Backend& scalar_backend();
bool avx2_available();                 // compiled in and supported by this CPU
const Backend* avx2_backend();         // nullptr when unavailable

// Honors ESTIMAND_LAB_SIMD=auto|scalar|avx2 (results never depend on the
// choice; the variable exists for equivalence testing).
const Backend& active_backend();

}  // namespace elab::kernels
