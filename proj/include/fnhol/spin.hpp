#pragma once

#include <array>
#include <map>
#include <memory>
#include <vector>

#include "fnhol/mat2.hpp"
#include "fnhol/pants.hpp"
#include "fnhol/surface.hpp"

namespace fnhol {

// Sign of the boundary trace for each k; the product must be -1.
struct BoundarySigns {
  std::array<int, 3> eps{-1, -1, -1};
};

struct SlPantsCocycle {
  std::array<Mat2, kPantsEdges> edges{};

  Mat2 evaluate(const LocalWord& w) const;
};

// Every sign choice on seams and first arcs (second arcs follow from eps)
// whose hexagons both evaluate to +I and whose seams and first arcs have a
// positive (1,1) entry.
std::vector<SlPantsCocycle> sl2_pants_candidates(const PantsLengths& l, const BoundarySigns& eps);

// The unique candidate. Throws Errc::SignConstraint if eps0 eps1 eps2 != -1.
SlPantsCocycle sl2_pants_cocycle(const PantsLengths& l, const BoundarySigns& eps);

// Keyed by curve id, values +1 or -1.
using SignMap = std::map<int, int>;

// Spanning tree of the pants gluing graph taken greedily over curves in
// increasing id order.
struct SpinTree {
  std::vector<int> tree_curves;
  std::vector<int> free_curves;
};

SpinTree spanning_tree(const SurfaceSpec& s);

class SpinSurfaceCocycle {
 public:
  SpinSurfaceCocycle(std::shared_ptr<const CellComplex> complex, std::vector<Mat2> values,
                     SignMap epsilon, SignMap crossing);

  const CellComplex& complex() const { return *complex_; }
  const std::vector<Mat2>& values() const { return values_; }
  const SignMap& epsilon() const { return epsilon_; }
  const SignMap& crossing() const { return crossing_; }

  const Mat2& operator[](int edge) const { return values_[static_cast<std::size_t>(edge)]; }
  Mat2 value(SignedEdge e) const;

  // Throws Errc::Path.
  Mat2 holonomy(const EdgeWord& w) const;
  // Max-norm distance of the face word from +I.
  double face_residual(int face_id) const;
  double max_face_residual() const;

  SurfaceCocycle reduction() const;

 private:
  std::shared_ptr<const CellComplex> complex_;
  std::vector<Mat2> values_;
  SignMap epsilon_;
  SignMap crossing_;
};

// Product of epsilon over the three sides of pants index j.
int pants_sign_product(const CellComplex& cx, const SignMap& epsilon, int j);

// Throws Errc::SpinInconsistency if a pants product is not -1 or a tree
// curve has crossing sign -1, and Errc::Validation for malformed sign maps.
SpinSurfaceCocycle assemble_spin(std::shared_ptr<const CellComplex> cx, const FNPoint& fn,
                                 const SignMap& epsilon, const SignMap& crossing);
SpinSurfaceCocycle assemble_spin(const SurfaceSpec& s, const FNPoint& fn, const SignMap& epsilon,
                                 const SignMap& crossing);

// Multiplying every vertex of pants `pants_id` by -I flips the crossing sign
// of each curve with exactly one side on it.
SignMap apply_pants_gauge(const SurfaceSpec& s, const SignMap& crossing, int pants_id);

// Gauge-equivalent crossing signs that are +1 on every tree curve.
SignMap crossing_normal_form(const SurfaceSpec& s, const SignMap& crossing);

struct SpinClass {
  SignMap epsilon;
  SignMap crossing;  // normal form
};

struct SpinEnumeration {
  SpinTree tree;
  std::vector<SignMap> epsilons;
  std::vector<SpinClass> classes;  // grouped by epsilon, in the order above
  std::vector<int> classes_per_epsilon;
};

// Throws Errc::Range beyond 20 curves.
SpinEnumeration enumerate_spin(const SurfaceSpec& s);

// 0 for positive trace, 1 for negative. Throws Errc::NonHyperbolic.
int rot2(const SpinSurfaceCocycle& c, const EdgeWord& loop);

}  // namespace fnhol
