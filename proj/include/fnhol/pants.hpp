#pragma once

#include <array>
#include <vector>

#include "fnhol/mat2.hpp"

namespace fnhol {

// Boundary lengths l_0, l_1, l_2 of a pair of pants.
struct PantsLengths {
  std::array<double, 3> l{};

  double operator[](int k) const { return l[static_cast<std::size_t>(mod3(k))]; }
  double lambda(int k) const;  // exp(l_k / 2)

  static constexpr int mod3(int k) { return ((k % 3) + 3) % 3; }
};

// Throws Errc::Domain unless every length is positive and finite.
void check_lengths(const PantsLengths& l);

// Local cells of one pants. Vertex v(k, eps) has index 2k + eps. Seam k runs
// from v(k, 0) to v(k - 1, 1); arc (k, 0) from v(k, 0) to v(k, 1) and arc
// (k, 1) back from v(k, 1) to v(k, 0).
inline constexpr int pants_vertex(int k, int eps) { return 2 * PantsLengths::mod3(k) + eps; }
inline constexpr int seam_edge(int k) { return PantsLengths::mod3(k); }
inline constexpr int arc_edge(int k, int eps) { return 3 + 2 * PantsLengths::mod3(k) + eps; }
inline constexpr int kPantsVertices = 6;
inline constexpr int kPantsEdges = 9;

int pants_edge_start(int edge);
int pants_edge_end(int edge);

// Signed local edge; reversed means traversed from end to start.
struct LocalStep {
  int edge = 0;
  bool reversed = false;
};
using LocalWord = std::vector<LocalStep>;

// Boundary words of the two hexagons, both starting at v(0, 1) and read
// counter-clockwise.
const LocalWord& top_hexagon_word();
const LocalWord& bottom_hexagon_word();

// Loops based at v(0, 0) freely homotopic to the three boundary curves.
LocalWord gamma_word(int k);

// Loop a(k,0) a(k,1) based at v(k, 0).
LocalWord boundary_word(int k);

// |b_k c_k|, the seam parameter of the standard cocycle.
double bc_magnitude(const PantsLengths& l, int k);
// Same quantity through the product-of-cosh form.
double bc_magnitude_product_form(const PantsLengths& l, int k);
// |b_k c_k| - 1 through its own product form.
double bc_minus_one(const PantsLengths& l, int k);

// (sqrt(f-1), -sqrt f; sqrt f, -sqrt(f-1)) with f = |b_k c_k|.
Mat2 seam_matrix_sl2(const PantsLengths& l, int k);
inline ProjMat2 seam_matrix(const PantsLengths& l, int k) {
  return ProjMat2(seam_matrix_sl2(l, k));
}

struct PantsCocycle {
  std::array<ProjMat2, kPantsEdges> edges{};
  bool standard = false;

  const ProjMat2& seam(int k) const { return edges[static_cast<std::size_t>(seam_edge(k))]; }
  const ProjMat2& arc(int k, int eps) const {
    return edges[static_cast<std::size_t>(arc_edge(k, eps))];
  }
  ProjMat2 evaluate(const LocalWord& w) const;
  // Max over both hexagons of the distance of the word value to identity.
  double hexagon_residual() const;
};

struct PantsGauge {
  std::array<ProjMat2, kPantsVertices> at{};
};

PantsCocycle pants_cocycle(const PantsLengths& l);

// (rho^b)(e) = b(start)^-1 rho(e) b(end).
PantsCocycle gauge_transform(const PantsCocycle& c, const PantsGauge& b);

// Pointwise product, so that (rho^b1)^b2 = rho^(b1 b2).
PantsGauge compose(const PantsGauge& b1, const PantsGauge& b2);

struct Standardized {
  PantsCocycle cocycle;
  PantsGauge gauge;
};

// Gauge-equivalent standard cocycle. Throws Errc::NotFuchsian if a boundary
// holonomy is not hyperbolic or a seam cannot be normalized.
Standardized standardize(const PantsCocycle& c);

// Checks arcs = D(lambda_k^(1/2)) and normalized seams (ab = cd with
// bc < 0 and cd < 0, the pattern of seam_matrix), relative to tol.
bool is_standard(const PantsCocycle& c, double tol = 1e-9);

// Boundary lengths read from the boundary words.
PantsLengths boundary_lengths(const PantsCocycle& c);

}  // namespace fnhol
