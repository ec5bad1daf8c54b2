#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "fnhol/mat2.hpp"
#include "fnhol/pants.hpp"

namespace fnhol {

struct BoundarySlot {
  int pants = 0;  // pants id
  int k = 0;      // boundary index in Z/3

  friend auto operator<=>(const BoundarySlot&, const BoundarySlot&) = default;
};

// The curve's orientation is fixed by which side is called left.
struct CurveSpec {
  int id = 0;
  BoundarySlot left;
  BoundarySlot right;
};

struct SurfaceSpec {
  int genus = 0;
  std::vector<int> pants;
  std::vector<CurveSpec> curves;
};

struct Diagnostic {
  std::string code;  // "genus", "pants", "curve", "pairing", "connectivity"
  std::string message;
};

struct Diagnostics {
  std::vector<Diagnostic> issues;
  bool ok() const { return issues.empty(); }
  std::string summary() const;
};

Diagnostics validate_surface(const SurfaceSpec& s);

enum class EdgeKind { Seam, Arc, Crossing };
enum class FaceKind { Hexagon, Square };

struct Vertex {
  int id = 0;
  int pants = 0;  // pants index
  int k = 0;
  int eps = 0;
};

struct Edge {
  int id = 0;
  EdgeKind kind = EdgeKind::Seam;
  int start = 0;
  int end = 0;
  int pants = -1;  // pants index for seams and arcs
  int curve = -1;  // curve index for crossings
  int k = 0;
  int eps = 0;
  std::string name;
};

struct SignedEdge {
  int edge = 0;
  bool reversed = false;

  SignedEdge inverse() const { return {edge, !reversed}; }
  friend bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

using EdgeWord = std::vector<SignedEdge>;

EdgeWord inverse_word(const EdgeWord& w);

struct Face {
  int id = 0;
  FaceKind kind = FaceKind::Hexagon;
  int variant = 0;  // 0: top hexagon / first square, 1: bottom hexagon / second square
  int owner = 0;    // pants index for hexagons, curve index for squares
  EdgeWord boundary;
};

// Cell decomposition of the glued surface. Ids: vertex 6j + 2k + eps; seam
// 9j + k; arc 9j + 3 + 2k + eps; crossing 9n + 2i + eps; hexagons 2j (top)
// and 2j + 1 (bottom); squares 2n + 2i + eps. Here j and i are positions in
// the spec's pants and curves lists and n is the number of pants.
class CellComplex {
 public:
  explicit CellComplex(SurfaceSpec spec);

  const SurfaceSpec& spec() const { return spec_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Face>& faces() const { return faces_; }

  int pants_count() const { return static_cast<int>(spec_.pants.size()); }
  int curve_count() const { return static_cast<int>(spec_.curves.size()); }

  // Throw Errc::Lookup for unknown ids.
  int pants_index(int pants_id) const;
  int curve_index(int curve_id) const;
  const Face& face(int face_id) const;

  int vertex(int j, int k, int eps) const { return 6 * j + 2 * PantsLengths::mod3(k) + eps; }
  int seam(int j, int k) const { return 9 * j + PantsLengths::mod3(k); }
  int arc(int j, int k, int eps) const { return 9 * j + 3 + 2 * PantsLengths::mod3(k) + eps; }
  int crossing(int i, int eps) const { return 9 * pants_count() + 2 * i + eps; }

  // Curve index glued to boundary k of pants j, and whether that side is
  // the curve's left side.
  int curve_at(int j, int k) const;
  bool is_left_side(int j, int k) const;

  int start(SignedEdge e) const;
  int end(SignedEdge e) const;

  // Throws Errc::Path if consecutive edges do not meet.
  void check_composable(const EdgeWord& w) const;

  // Loop a(j',k',0) a(j',k',1) on the left side of curve i.
  EdgeWord curve_loop(int i) const;

  std::string word_to_string(const EdgeWord& w) const;
  // Space or comma separated names like "p1.seam0 c2.x1~". Throws Errc::Lookup.
  EdgeWord parse_word(std::string_view text) const;

 private:
  SurfaceSpec spec_;
  std::map<int, int> pants_index_;
  std::map<int, int> curve_index_;
  std::vector<int> slot_curve_;
  std::vector<bool> slot_left_;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<Face> faces_;
  std::map<std::string, int, std::less<>> edge_by_name_;
};

// Throws Errc::Validation with the diagnostics summary if the spec is invalid.
std::shared_ptr<const CellComplex> build_complex(const SurfaceSpec& s);

struct FNCoord {
  double length = 0.0;
  double twist = 0.0;
};

// Keyed by curve id.
using FNPoint = std::map<int, FNCoord>;

// Crossing matrix (0, -1/T; T, 0).
constexpr Mat2 crossing_matrix(double t) { return {0.0, -1.0 / t, t, 0.0}; }

// Boundary lengths of pants j under fn.
PantsLengths pants_lengths(const CellComplex& cx, const FNPoint& fn, int j);

class SurfaceCocycle {
 public:
  SurfaceCocycle(std::shared_ptr<const CellComplex> complex, std::vector<ProjMat2> values);

  const CellComplex& complex() const { return *complex_; }
  const std::shared_ptr<const CellComplex>& complex_ptr() const { return complex_; }
  const std::vector<ProjMat2>& values() const { return values_; }

  const ProjMat2& operator[](int edge) const { return values_[static_cast<std::size_t>(edge)]; }
  ProjMat2 value(SignedEdge e) const;

  // Distance of the face word's value from the identity.
  double face_residual(int face_id) const;
  double max_face_residual() const;

 private:
  std::shared_ptr<const CellComplex> complex_;
  std::vector<ProjMat2> values_;
};

// Throws Errc::Lookup if fn misses a curve and Errc::Domain for bad lengths.
SurfaceCocycle assemble_cocycle(std::shared_ptr<const CellComplex> cx, const FNPoint& fn);
SurfaceCocycle assemble_cocycle(const SurfaceSpec& s, const FNPoint& fn);

// Product of edge values in traversal order. Throws Errc::Path.
ProjMat2 holonomy(const SurfaceCocycle& c, const EdgeWord& w);

// Throws Errc::NonStandard if a crossing edge is not antidiagonal.
FNPoint extract_fn(const SurfaceCocycle& c);

}  // namespace fnhol
