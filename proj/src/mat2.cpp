#include "fnhol/mat2.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "fnhol/error.hpp"

namespace fnhol {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::Domain: return "domain";
    case Errc::NonHyperbolic: return "non-hyperbolic";
    case Errc::AxisThroughInfinity: return "axis-through-infinity";
    case Errc::AxesIntersect: return "axes-intersect";
    case Errc::NotFuchsian: return "not-fuchsian";
    case Errc::Validation: return "validation";
    case Errc::Path: return "path";
    case Errc::NonStandard: return "non-standard";
    case Errc::Lift: return "lift";
    case Errc::Lookup: return "lookup";
    case Errc::SignConstraint: return "sign-constraint";
    case Errc::SpinInconsistency: return "spin-inconsistency";
    case Errc::Syntax: return "syntax";
    case Errc::Range: return "range";
    case Errc::Usage: return "usage";
  }
  return "unknown";
}

double Mat2::max_abs() const {
  return std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)});
}

Mat2 Mat2::renormalized() const {
  Mat2 m = *this;
  if (m.det() < 0.0) m = {m.c, m.d, m.a, m.b};
  const double s = 1.0 / std::sqrt(std::abs(m.det()));
  return s * m;
}

double max_abs_diff(const Mat2& x, const Mat2& y) { return (x - y).max_abs(); }

bool is_unimodular(const Mat2& m, double tol) {
  const double scale = std::max(1.0, m.max_abs() * m.max_abs());
  return std::abs(m.det() - 1.0) <= tol * scale;
}

ProjMat2::ProjMat2(const Mat2& m) : rep_(m) {
  const double cutoff = 1e-14 * m.max_abs();
  for (double entry : {m.a, m.b, m.c, m.d}) {
    if (std::abs(entry) > cutoff) {
      if (entry < 0.0) rep_ = -m;
      break;
    }
  }
}

double ProjMat2::abs_trace() const { return std::abs(rep_.trace()); }

double proj_distance(const Mat2& x, const Mat2& y) {
  return std::min((x - y).max_abs(), (x + y).max_abs());
}

double proj_distance(const ProjMat2& x, const ProjMat2& y) {
  return proj_distance(x.rep(), y.rep());
}

bool approx_equal(const ProjMat2& x, const ProjMat2& y, double rel_tol) {
  const double scale = std::max({1.0, x.rep().max_abs(), y.rep().max_abs()});
  return proj_distance(x, y) <= rel_tol * scale;
}

TracelessMat2 TracelessMat2::from(const Mat2& m) {
  const double half = 0.5 * (m.a - m.d);
  return {half, m.b, m.c};
}

double TracelessMat2::max_abs() const {
  return std::max({std::abs(x), std::abs(y), std::abs(z)});
}

TracelessMat2 adjoint(const Mat2& g, const TracelessMat2& x) {
  return TracelessMat2::from(g * x.matrix() * g.inverse());
}

std::complex<double> mobius(const ProjMat2& m, std::complex<double> z) {
  if (!(z.imag() > 0.0)) {
    throw Error(Errc::Domain, "mobius: point must lie in the upper half-plane");
  }
  const Mat2& r = m.rep();
  return (r.a * z + r.b) / (r.c * z + r.d);
}

namespace {

bool negligible(double entry, const Mat2& m) {
  return std::abs(entry) <= 1e-14 * m.max_abs();
}

}  // namespace

FixedPoints fixed_points(const ProjMat2& conjugator, double lambda) {
  if (!(lambda > 1.0)) {
    throw Error(Errc::Domain, "fixed_points: lambda must exceed 1");
  }
  const Mat2& m = conjugator.rep();
  if (negligible(m.c, m) || negligible(m.d, m)) {
    throw Error(Errc::AxisThroughInfinity,
                "fixed_points: conjugator has c = 0 or d = 0, axis ends at infinity");
  }
  return {m.a / m.c, m.b / m.d};
}

double nearest_point_on_imaginary_axis(const ProjMat2& conjugator) {
  const Mat2& m = conjugator.rep();
  if (negligible(m.c, m) || negligible(m.d, m)) {
    throw Error(Errc::AxisThroughInfinity,
                "nearest_point_on_imaginary_axis: axis ends at infinity");
  }
  const double ratio = (m.a * m.b) / (m.c * m.d);
  if (!(ratio > 0.0)) {
    throw Error(Errc::AxesIntersect,
                "nearest_point_on_imaginary_axis: axis meets the imaginary axis");
  }
  return std::sqrt(ratio);
}

bool is_hyperbolic(const Mat2& m) {
  return std::abs(m.trace()) > 2.0 + kHyperbolicMargin;
}

double translation_length(const ProjMat2& m) {
  const double t = m.abs_trace();
  if (!(t > 2.0 + kHyperbolicMargin)) {
    throw Error(Errc::NonHyperbolic, "translation_length: |trace| <= 2");
  }
  return 2.0 * std::acosh(0.5 * t);
}

namespace {

// Eigenvector of m for eigenvalue mu, from whichever row of (m - mu) is
// better conditioned.
std::pair<double, double> eigenvector(const Mat2& m, double mu) {
  const std::pair<double, double> from_first{m.b, mu - m.a};
  const std::pair<double, double> from_second{mu - m.d, m.c};
  const double n1 = std::hypot(from_first.first, from_first.second);
  const double n2 = std::hypot(from_second.first, from_second.second);
  const auto& v = n1 >= n2 ? from_first : from_second;
  const double n = std::max(n1, n2);
  return {v.first / n, v.second / n};
}

}  // namespace

Mat2 hyperbolic_eigenbasis(const Mat2& m) {
  if (!is_hyperbolic(m)) {
    throw Error(Errc::NonHyperbolic, "hyperbolic_eigenbasis: |trace| <= 2");
  }
  const double t = m.trace();
  const double root = std::sqrt(t * t - 4.0 * m.det());
  const double big = t >= 0.0 ? 0.5 * (t + root) : 0.5 * (t - root);
  const double small = m.det() / big;
  auto [p, r] = eigenvector(m, big);
  auto [q, s] = eigenvector(m, small);
  double det = p * s - q * r;
  if (det < 0.0) {
    q = -q;
    s = -s;
    det = -det;
  }
  const double scale = 1.0 / std::sqrt(det);
  return {p * scale, q * scale, r * scale, s * scale};
}

}  // namespace fnhol
