#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace thetakummer {

using Complex = std::complex<double>;
// A point of C^g (coordinates on the universal cover of the abelian variety).
using CPoint  = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

// Failure kinds surfaced by name through the CLI (exit code 3) and the
// Python bindings.
enum class ErrorKind {
  NotPositiveDefinite,
  DegenerateSystem,
  NoConvergence,
  DerivativeVanished,
  RadiusOverflow,
  DimensionMismatch,
  PoleAtArgument,
  SingularPoint,
  IndecomposabilityCheckFailed,
  ParseError,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }
  const char* kind_name() const { return error_kind_name(kind_); }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) {
  throw Error(k, msg);
}

// Complex bilinear pairing (a,b) = sum a_i b_i, no conjugation.
inline Complex bilinear_dot(const CPoint& a, const CPoint& b) {
  return a.cwiseProduct(b).sum();
}

// SplitMix64. This is the single PRNG used for every seeded draw in the
// library so that sampled inputs are reproducible across platforms and
// language bindings; the algorithm is documented in the README.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // [0,1) with 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  Complex uniform_complex(double a, double b) {
    double re = uniform(a, b);
    double im = uniform(a, b);
    return {re, im};
  }

  CPoint uniform_cpoint(int g, double a, double b) {
    CPoint z(g);
    for (int i = 0; i < g; ++i) z(i) = uniform_complex(a, b);
    return z;
  }

 private:
  std::uint64_t state_;
};

// Lower-triangular L with L L^T = m. Throws NotPositiveDefinite on a
// nonpositive pivot, DimensionMismatch if m is not square or not symmetric
// within relative tolerance 1e-12.
RMatrix cholesky_spd(const RMatrix& m);

struct LstsqResult {
  Eigen::VectorXcd x;
  double rel_residual = 0.0;  // |Ax-b| / |b|, 0 when b = 0
};

// Least squares by SVD; requires rows >= cols. Throws DegenerateSystem when
// the smallest singular value is below 1e-14 times the largest.
LstsqResult lstsq(const CMatrix& a, const Eigen::VectorXcd& b);

// Singular values, nonincreasing; min(rows, cols) of them.
RVector singular_values(const CMatrix& a);

struct NewtonStep {
  Complex value;
  Complex derivative;
};
using NewtonFn = std::function<NewtonStep(Complex)>;

// Plain (undamped) Newton iteration for a holomorphic scalar function.
// Returns t with |f(t)| < tol; throws NoConvergence after max_iter steps,
// DerivativeVanished if |f'| underflows.
Complex newton_scalar(const NewtonFn& f, Complex t0, double tol, int max_iter = 50);

}  // namespace thetakummer
