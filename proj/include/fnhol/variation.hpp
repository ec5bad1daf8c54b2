#pragma once

#include <array>
#include <map>
#include <vector>

#include "fnhol/mat2.hpp"
#include "fnhol/pants.hpp"
#include "fnhol/surface.hpp"

namespace fnhol {

struct TangentCoord {
  double dl = 0.0;
  double dtau = 0.0;
};

// Keyed by curve id; missing curves count as zero.
using TangentVector = std::map<int, TangentCoord>;

TangentCoord tangent_at(const TangentVector& v, int curve_id);

// Twisted 1-cochain with values in sl2 over a base cocycle.
class VariationCocycle {
 public:
  VariationCocycle(SurfaceCocycle base, std::vector<TracelessMat2> values);

  const SurfaceCocycle& base() const { return base_; }
  const CellComplex& complex() const { return base_.complex(); }
  const std::vector<TracelessMat2>& values() const { return values_; }

  const TracelessMat2& operator[](int edge) const { return values_[static_cast<std::size_t>(edge)]; }
  // z(e^-1) = -Ad(rho(e))^-1 z(e) for reversed edges.
  TracelessMat2 value(SignedEdge e) const;

  VariationCocycle operator+(const VariationCocycle& other) const;
  VariationCocycle scaled(double s) const;

 private:
  SurfaceCocycle base_;
  std::vector<TracelessMat2> values_;
};

// Gradient of log |b_k c_k| in (l_0, l_1, l_2).
std::array<double, 3> grad_log_bc(const PantsLengths& l, int k);

VariationCocycle variation_cocycle(const SurfaceCocycle& base, const FNPoint& fn,
                                   const TangentVector& v);
VariationCocycle variation_cocycle(const SurfaceSpec& s, const FNPoint& fn, const TangentVector& v);

inline constexpr double kDefaultFdStep = 1e-5;

FNPoint displaced(const FNPoint& fn, const TangentVector& v, double t);

// Central difference of rho(e) rho(e)^-1 along v. Throws Errc::Lift when a
// displaced representative is not clearly closer to one sign of the base.
VariationCocycle fd_variation(const SurfaceCocycle& base, const FNPoint& fn,
                              const TangentVector& v, double h = kDefaultFdStep);
VariationCocycle fd_variation(const SurfaceSpec& s, const FNPoint& fn, const TangentVector& v,
                              double h = kDefaultFdStep);

// (dw)(e) = Ad(rho(e)) w(end) - w(start); w is indexed by vertex id.
VariationCocycle coboundary(const SurfaceCocycle& c, const std::vector<TracelessMat2>& w);

// Residual of sum_i Ad(rho(e_1 ... e_{i-1})) z(e_i) around one face.
double face_cocycle_residual(const VariationCocycle& z, int face_id);

double check_cocycle_condition(const SurfaceCocycle& c, const VariationCocycle& z);

double max_entry_difference(const VariationCocycle& x, const VariationCocycle& y);

}  // namespace fnhol
