#pragma once

#include <complex>

namespace fnhol {

// Real 2x2 matrix (a b; c d). Holonomy values are kept unimodular; the
// arithmetic itself does not enforce it.
struct Mat2 {
  double a = 1.0;
  double b = 0.0;
  double c = 0.0;
  double d = 1.0;

  static constexpr Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

  constexpr double det() const { return a * d - b * c; }
  constexpr double trace() const { return a + d; }
  double max_abs() const;

  // Inverse of a unimodular matrix (the adjugate).
  constexpr Mat2 inverse() const { return {d, -b, -c, a}; }

  // Rescale by 1/sqrt(|det|); rows are swapped first if det < 0.
  Mat2 renormalized() const;

  constexpr Mat2 operator-() const { return {-a, -b, -c, -d}; }
  friend constexpr Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend constexpr Mat2 operator+(const Mat2& x, const Mat2& y) {
    return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
  }
  friend constexpr Mat2 operator-(const Mat2& x, const Mat2& y) {
    return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
  }
  friend constexpr Mat2 operator*(double s, const Mat2& x) {
    return {s * x.a, s * x.b, s * x.c, s * x.d};
  }
  friend constexpr bool operator==(const Mat2&, const Mat2&) = default;
};

// diag(h, 1/h).
constexpr Mat2 diag(double h) { return {h, 0.0, 0.0, 1.0 / h}; }

// (0 -1; 1 0), the half-turn about i.
constexpr Mat2 half_turn() { return {0.0, -1.0, 1.0, 0.0}; }

double max_abs_diff(const Mat2& x, const Mat2& y);

// |det - 1| <= tol * max(1, max|entry|^2).
bool is_unimodular(const Mat2& m, double tol = 1e-12);

// Element of PSL2(R). The stored representative is canonical: the first
// entry in reading order (a, b, c, d) that is not negligibly small is
// positive. Equality is therefore sign-insensitive.
class ProjMat2 {
 public:
  ProjMat2() = default;
  explicit ProjMat2(const Mat2& m);

  static ProjMat2 identity() { return ProjMat2(); }

  const Mat2& rep() const { return rep_; }

  ProjMat2 inverse() const { return ProjMat2(rep_.inverse()); }
  double abs_trace() const;

  friend ProjMat2 operator*(const ProjMat2& x, const ProjMat2& y) {
    return ProjMat2(x.rep_ * y.rep_);
  }
  friend bool operator==(const ProjMat2&, const ProjMat2&) = default;

 private:
  Mat2 rep_ = Mat2::identity();
};

// The class of diag(h, 1/h), h > 0.
inline ProjMat2 proj_diag(double h) { return ProjMat2(diag(h)); }

// min over signs of the max-norm distance between representatives.
double proj_distance(const ProjMat2& x, const ProjMat2& y);
double proj_distance(const Mat2& x, const Mat2& y);

// Max-norm comparison relative to max(1, max|entry|).
bool approx_equal(const ProjMat2& x, const ProjMat2& y, double rel_tol = 1e-9);

// Traceless matrix (x y; z -x), an element of sl2(R).
struct TracelessMat2 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  static TracelessMat2 from(const Mat2& m);  // traceless part of m
  Mat2 matrix() const { return {x, y, z, -x}; }
  double max_abs() const;

  constexpr TracelessMat2 operator-() const { return {-x, -y, -z}; }
  friend constexpr TracelessMat2 operator+(const TracelessMat2& p,
                                           const TracelessMat2& q) {
    return {p.x + q.x, p.y + q.y, p.z + q.z};
  }
  friend constexpr TracelessMat2 operator-(const TracelessMat2& p,
                                           const TracelessMat2& q) {
    return {p.x - q.x, p.y - q.y, p.z - q.z};
  }
  friend constexpr TracelessMat2 operator*(double s, const TracelessMat2& p) {
    return {s * p.x, s * p.y, s * p.z};
  }
  TracelessMat2& operator+=(const TracelessMat2& p) {
    x += p.x;
    y += p.y;
    z += p.z;
    return *this;
  }
  friend constexpr bool operator==(const TracelessMat2&,
                                   const TracelessMat2&) = default;
};

// diag(1, -1) and (0 1; 1 0).
inline constexpr TracelessMat2 kCartan{1.0, 0.0, 0.0};
inline constexpr TracelessMat2 kSymmetricOffDiag{0.0, 1.0, 1.0};

// Ad(g) X = g X g^-1 for unimodular g. Sign of g is irrelevant.
TracelessMat2 adjoint(const Mat2& g, const TracelessMat2& x);
inline TracelessMat2 adjoint(const ProjMat2& g, const TracelessMat2& x) {
  return adjoint(g.rep(), x);
}

// Left action on the upper half-plane. Throws Errc::Domain if Im z <= 0.
std::complex<double> mobius(const ProjMat2& m, std::complex<double> z);

struct FixedPoints {
  double attracting = 0.0;
  double repelling = 0.0;
};

// Fixed points of A diag(lambda) A^-1 for lambda > 1, read off the
// conjugator A: attracting a/c, repelling b/d.
FixedPoints fixed_points(const ProjMat2& conjugator, double lambda);

// Point R*i on the imaginary axis nearest to the axis of A diag(lambda) A^-1;
// R = sqrt(ab/cd). Throws Errc::AxesIntersect if ab/cd <= 0.
double nearest_point_on_imaginary_axis(const ProjMat2& conjugator);

// Hyperbolicity margin: |tr| > 2 + kHyperbolicMargin.
inline constexpr double kHyperbolicMargin = 1e-12;

bool is_hyperbolic(const Mat2& m);

// 2 log(lambda) with lambda the larger |eigenvalue|.
double translation_length(const ProjMat2& m);

// S with det S = 1 and S^-1 M S diagonal, the eigenvalue of larger modulus
// in the first column. Requires M hyperbolic.
Mat2 hyperbolic_eigenbasis(const Mat2& m);

}  // namespace fnhol
