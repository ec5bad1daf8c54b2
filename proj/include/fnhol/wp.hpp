#pragma once

#include <vector>

#include "fnhol/mat2.hpp"
#include "fnhol/surface.hpp"
#include "fnhol/variation.hpp"

namespace fnhol {

// trace(XY) = 2 x x' + y z' + z y'.
double killing_form(const TracelessMat2& x, const TracelessMat2& y);

// One 1-cell of a chain region. An auxiliary cell is an extra edge inside a
// hexagon that is homotopic to `edge`; it carries the same values.
struct ChainCell {
  SignedEdge edge;
  bool auxiliary = false;

  friend bool operator==(const ChainCell&, const ChainCell&) = default;
};

// sign * (first x second). Transport paths run from each cell's start
// vertex to the region basepoint.
struct DiagonalTerm {
  int sign = 1;
  ChainCell first;
  ChainCell second;
  EdgeWord transport_first;
  EdgeWord transport_second;
};

enum class RegionKind { Hexagon, Square, Bigon };

// A disk whose boundary is upper - lower, two edge paths from source to
// sink (lower is empty for a bigon, whose upper path is a loop). The face
// chain is the sum of orientation * region over its regions.
struct ChainRegion {
  RegionKind kind = RegionKind::Square;
  int orientation = 1;
  std::vector<ChainCell> upper;
  std::vector<ChainCell> lower;
  int source = 0;
  int sink = 0;
  int basepoint = 0;
  std::vector<DiagonalTerm> terms;
};

struct FaceChain {
  int face = 0;
  std::vector<ChainRegion> regions;
};

// The default basepoint is the sink of every region. shift moves it that
// many vertices forward around the region boundary; backward transports
// along the other arc of the boundary.
struct ChainOptions {
  int basepoint_shift = 0;
  bool backward = false;
};

// Degree (1,1) part of the diagonal approximation on a face. Throws
// Errc::Lookup for an unknown face.
FaceChain diagonal_chain(const CellComplex& cx, int face_id, const ChainOptions& opt = {});

// sign * B(z1(first), z2(second)), both transported to the basepoint.
double term_contribution(const SurfaceCocycle& c, const VariationCocycle& z1,
                         const VariationCocycle& z2, const DiagonalTerm& t);

// Twice the summed term contributions, so that the total over all faces is
// sum_i (dtau_i(u) dl_i(v) - dl_i(u) dtau_i(v)).
double region_pairing(const SurfaceCocycle& c, const VariationCocycle& z1,
                      const VariationCocycle& z2, const ChainRegion& r);
double pair_on_face(const SurfaceCocycle& c, const VariationCocycle& z1,
                    const VariationCocycle& z2, int face_id, const ChainOptions& opt = {});
double wp_pairing(const SurfaceCocycle& c, const VariationCocycle& z1, const VariationCocycle& z2,
                  const ChainOptions& opt = {});

// Both squares of curve index i, and both hexagons (with bigons) of pants j.
double annulus_pairing(const SurfaceCocycle& c, const VariationCocycle& z1,
                       const VariationCocycle& z2, int curve_index);
double pants_pairing(const SurfaceCocycle& c, const VariationCocycle& z1,
                     const VariationCocycle& z2, int pants_index);

double wolpert_reference(const TangentVector& u, const TangentVector& v);

// Unit tangent directions in the order dl_1 .. dl_n, dtau_1 .. dtau_n
// following the spec's curve order.
std::vector<TangentVector> coordinate_basis(const SurfaceSpec& s);

}  // namespace fnhol
