#pragma once

#include "slant/cxstruct.hpp"
#include "slant/exterior.hpp"
#include "slant/grid.hpp"
#include "slant/immersion.hpp"

#include <optional>
#include <string>
#include <vector>

namespace slant {

struct GaussSample {
  double u = 0, v = 0;
  TwoVector nu, nu_plus, nu_minus;
  double decomposability = 0;  // |<*nu, nu>|
};

std::vector<GaussSample> gauss_field(const Immersion& f, const GridSpec& g,
                                     Exec exec = Exec::Parallel);

enum class FitClass { Singleton, Circle, NotCircular };
const char* to_string(FitClass c);

struct CircleFitOptions {
  double singleton_spread = 1e-7;
  double circle_residual = 1e-6;  // multiplied by sqrt(point count)
};

struct CircleFit {
  Vec3 axis = Vec3::Zero();   // unit normal of the fitted plane
  double offset = 0;          // plane <axis, x> = offset, offset >= 0
  double residual = 0;        // RMS distance to the plane
  double spread = 0;          // max distance to the mean point
  double arc_extent = 0;      // angular extent covered on the circle
  Vec3 mean = Vec3::Zero();
  int count = 0;
  FitClass cls = FitClass::NotCircular;
};

CircleFit fit_circle(const std::vector<Vec3>& points,
                     const CircleFitOptions& opt = {});

struct DetectedStructure {
  ComplexStructure J;
  double alpha = 0;     // angle measured from the fitted circle
  double residual = 0;  // fit residual of the class it came from
  // independent Wirtinger run under J
  double verify_mean = 0, verify_spread = 0;
};

struct ClassDetection {
  StructureClass cls = StructureClass::Plus;
  CircleFit fit;
  // Singleton: the surface is holomorphic for this structure and slant for
  // every structure of the class.
  std::optional<ComplexStructure> holomorphic;
  std::vector<DetectedStructure> structures;
};

struct SlantDetection {
  ClassDetection plus, minus;
  bool doubly_slant = false;
  // "none", "infinite", "two" or "four"
  std::string trichotomy;
  int samples = 0;
};

SlantDetection detect_slant_structures(const Immersion& f, const GridSpec& g,
                                       const CircleFitOptions& opt = {},
                                       Exec exec = Exec::Parallel);

struct GaussJacobianSample {
  double u = 0, v = 0;
  double det_plus = 0, det_minus = 0;
  double G = 0, GD = 0;
  double residual_plus() const;   // |det_plus - (G + GD)/2|
  double residual_minus() const;  // |det_minus - (G - GD)/2|
};

// Area-normalized Jacobians of nu_+ and nu_- at interior nodes, by 5-point
// differences of the eta coordinates. S^2_- is oriented by the basis
// (eta4, eta5, -eta6) so a round sphere has degree +1 on both factors.
std::vector<GaussJacobianSample> gauss_jacobians(const Immersion& f,
                                                 const GridSpec& g,
                                                 Exec exec = Exec::Parallel);

// Area-weighted mean of nu over the cell centres of a uniform grid.
TwoVector gauss_mean(const Immersion& f, const GridSpec& g,
                     Exec exec = Exec::Parallel);

}  // namespace slant
