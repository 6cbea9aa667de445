#ifndef GAUGEKIT_TYPES_HPP
#define GAUGEKIT_TYPES_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace gaugekit {

// Points, directions and normals are all plain coordinate vectors.
using Vec = std::vector<double>;

constexpr double kInf = std::numeric_limits<double>::infinity();

enum class ErrorCode {
  EmptyInput,
  EmptySet,
  Unbounded,
  DegenerateBody,
  RadiusTooSmall,
  NumericalFailure,
  UnsupportedDimension,
  InvalidGauge,
  InvalidInput,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

// Central numerical tolerances. All modules scale these by the data at
// hand instead of inventing their own base constants.
namespace tol {
constexpr double feasibility = 1e-9;    // LP feasibility, absolute + relative
constexpr double orthonormal = 1e-12;   // basis validation
constexpr double membership = 1e-7;     // vertex-vs-hrep inclusion checks
constexpr double rank_rel = 1e-8;       // affine rank, relative to diameter
}  // namespace tol

inline double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm2(const Vec& a) { return dot(a, a); }
inline double norm(const Vec& a) { return std::sqrt(norm2(a)); }

inline Vec add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec scaled(const Vec& a, double t) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = t * a[i];
  return r;
}

inline Vec axpy(const Vec& x, double t, const Vec& y) {  // x + t*y
  Vec r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + t * y[i];
  return r;
}

inline double dist(const Vec& a, const Vec& b) { return norm(sub(a, b)); }

inline bool all_finite(const Vec& a) {
  for (double v : a)
    if (!std::isfinite(v)) return false;
  return true;
}

inline Vec zero_vec(int d) { return Vec(static_cast<std::size_t>(d), 0.0); }

inline Vec unit_vec(int d, int i) {
  Vec e = zero_vec(d);
  e[static_cast<std::size_t>(i)] = 1.0;
  return e;
}

inline bool lex_less(const Vec& a, const Vec& b, double eps = 0.0) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i] - eps) return true;
    if (a[i] > b[i] + eps) return false;
  }
  return false;
}

// Uniform double in [0,1) from raw engine output; kept hand-rolled so
// seeded runs reproduce across standard libraries.
template <typename Rng>
double runif(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

template <typename Rng>
double runif(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * runif(rng);
}

}  // namespace gaugekit

#endif  // GAUGEKIT_TYPES_HPP
