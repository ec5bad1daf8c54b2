#pragma once

#include <random>

#include "fnhol/surface.hpp"
#include "fnhol/variation.hpp"

namespace testsupport {

inline fnhol::SurfaceSpec genus2() {
  return {2, {1, 2}, {{1, {1, 0}, {2, 0}}, {2, {1, 1}, {2, 1}}, {3, {1, 2}, {2, 2}}}};
}

// Each pants glued to itself along one curve, the two joined along a third.
inline fnhol::SurfaceSpec genus2_handles() {
  return {2, {1, 2}, {{1, {1, 1}, {1, 2}}, {2, {2, 1}, {2, 2}}, {3, {1, 0}, {2, 0}}}};
}

// A chain of four pants with two self-glued ends.
inline fnhol::SurfaceSpec genus3() {
  return {3,
          {1, 2, 3, 4},
          {{1, {1, 1}, {1, 2}},
           {2, {1, 0}, {2, 0}},
           {3, {2, 1}, {3, 1}},
           {4, {2, 2}, {3, 2}},
           {5, {3, 0}, {4, 0}},
           {6, {4, 1}, {4, 2}}}};
}

// Two pairs of pants, each glued to both others: a theta-like graph.
inline fnhol::SurfaceSpec genus3_cube() {
  return {3,
          {1, 2, 3, 4},
          {{1, {1, 0}, {2, 0}},
           {2, {1, 1}, {3, 1}},
           {3, {1, 2}, {4, 2}},
           {4, {2, 1}, {4, 1}},
           {5, {2, 2}, {3, 2}},
           {6, {3, 0}, {4, 0}}}};
}

class Rng {
 public:
  explicit Rng(unsigned seed) : gen_(seed) {}
  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(gen_); }
  double normal() { return std::normal_distribution<double>(0.0, 1.0)(gen_); }
  int coin() { return std::bernoulli_distribution(0.5)(gen_) ? 1 : -1; }

  fnhol::FNPoint fn(const fnhol::SurfaceSpec& s, double lmin = 0.5, double lmax = 5.0,
                    double tau = 10.0) {
    fnhol::FNPoint out;
    for (const auto& c : s.curves) out[c.id] = {uniform(lmin, lmax), uniform(-tau, tau)};
    return out;
  }
  fnhol::TangentVector tangent(const fnhol::SurfaceSpec& s) {
    fnhol::TangentVector out;
    for (const auto& c : s.curves) out[c.id] = {normal(), normal()};
    return out;
  }
  fnhol::Mat2 sl2(double spread = 2.0) {
    for (;;) {
      fnhol::Mat2 m{uniform(-spread, spread), uniform(-spread, spread), uniform(-spread, spread),
                    uniform(-spread, spread)};
      if (std::abs(m.det()) > 0.1) return m.renormalized();
    }
  }
  fnhol::TracelessMat2 traceless() { return {normal(), normal(), normal()}; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace testsupport
