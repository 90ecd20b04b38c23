#pragma once

#include "slant/cxstruct.hpp"
#include "slant/grid.hpp"
#include "slant/immersion.hpp"

#include <array>

namespace slant {

using Mat2 = Eigen::Matrix2d;

// Orthonormal tangent pair from a chart, any ambient dimension.
struct TangentBasis {
  Eigen::VectorXd e1, e2;
  Mat2 coeff;  // e_i = coeff(0, i) x_u + coeff(1, i) x_v
  double area_element;
};
TangentBasis tangent_basis(const SurfaceJet& j);

struct PointGeometry {
  double u = 0, v = 0;
  Vec4 x, xu, xv;
  Mat4 frame;   // columns e1..e4, positively oriented
  Mat2 coeff;   // e_i = coeff(0, i) x_u + coeff(1, i) x_v
  double area_element = 0;
  std::array<Vec4, 3> hvec;   // h(e1,e1), h(e1,e2), h(e2,e2)
  std::array<Mat2, 2> h;      // h[0] = h^3, h[1] = h^4
  Vec4 H;
  double G = 0;
  double GD = 0;  // normal curvature in the positive frame

  Vec4 e(int A) const { return frame.col(A); }
  Vec4 second_form(const Eigen::Vector2d& a, const Eigen::Vector2d& b) const;
  // tangent vector with frame coordinates c
  Vec4 tangent(const Eigen::Vector2d& c) const {
    return c[0] * frame.col(0) + c[1] * frame.col(1);
  }
};

PointGeometry point_geometry(const SurfaceJet& j, double u = 0, double v = 0);
PointGeometry point_geometry(const Immersion& f, double u, double v);

// J split along (tangent, normal) in the positive frame.
struct StructureBlocks {
  Mat2 P, F, t, f;
  Mat4 in_frame;  // e_A^T J e_B
  double alpha;   // from <J e1, e2>, in [0, pi]
  double theta;   // Wirtinger angle at e1
};
StructureBlocks structure_blocks(const PointGeometry& pg,
                                 const ComplexStructure& J);
Mat4 assemble_blocks(const StructureBlocks& b);

// Normal curvature measured in the orientation of a J-adapted frame:
// equal to GD for J in the minus class and -GD for the plus class.
double normal_curvature_for(const PointGeometry& pg, const ComplexStructure& J);

struct AdaptedSlantFrame {
  double theta;
  Mat4 frame;                // e1 .. e4
  std::array<Mat2, 2> h;     // h^3, h^4 in the adapted frame
  Mat4 j_in_frame;
};
AdaptedSlantFrame adapted_frame(const PointGeometry& pg,
                                const ComplexStructure& J,
                                double margin = 1e-6);

inline constexpr int kWirtingerDirections = 16;

// Wirtinger angles of the directions cos(phi) e1 + sin(phi) e2,
// phi = pi k / 16, for any even ambient dimension.
std::array<double, kWirtingerDirections> wirtinger_angles(
    const SurfaceJet& j, const Eigen::MatrixXd& J);
// alpha from <J e1, e2>
double alpha_at(const SurfaceJet& j, const Eigen::MatrixXd& J);

struct WirtingerStats {
  double min = 0, max = 0, mean = 0, spread = 0;
  double alpha_min = 0, alpha_max = 0;
  bool slant = false;
  bool purely_real = false;
  int samples = 0;
  double tolerance = 1e-6;
};
WirtingerStats wirtinger_field(const Immersion& f, const GridSpec& g,
                               const Eigen::MatrixXd& J,
                               Exec exec = Exec::Parallel);

struct SlantOperatorReport {
  double af_symmetry = 0;   // max |A_{Fe1} e2 - A_{Fe2} e1|
  double austere_trace = 0; // max |tr A_{e3}|, |tr A_{e4}|
  bool austere = false;
  double parallel_f = 0;    // max |A_{f xi} X + A_xi(P X)|
  double q_residual = 0;    // max |P^2 + cos^2(theta) I|
  double tolerance = 1e-8;
};
SlantOperatorReport slant_operator_checks(const Immersion& f, const GridSpec& g,
                                          const ComplexStructure& J,
                                          Exec exec = Exec::Parallel);

// Per-point table over a grid.
struct CurvatureSample {
  double u, v, G, GD, GD_J, H_norm, theta, alpha;
};
std::vector<CurvatureSample> curvature_table(const Immersion& f,
                                             const GridSpec& g,
                                             const ComplexStructure& J,
                                             Exec exec = Exec::Parallel);

}  // namespace slant
