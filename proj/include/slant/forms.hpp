#pragma once

#include "slant/cxstruct.hpp"
#include "slant/geometry.hpp"
#include "slant/grid.hpp"
#include "slant/immersion.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace slant {

using Vec2 = Eigen::Vector2d;

// Connection forms of the adapted slant frame field at one point.
struct ConnectionSample {
  double u = 0, v = 0;
  double theta = 0;
  // omega[i](A, B) = <D_{e_i} e_A, e_B>, e_A the adapted frame
  std::array<Mat4, 2> omega;
  // omega_A^B on the chart vectors: coord[0] along x_u, coord[1] along x_v
  std::array<Mat4, 2> coord;
  std::array<Mat2, 2> h;  // h^3, h^4 in the adapted frame
  double antisymmetry = 0;  // max |omega_A^B + omega_B^A|
  double weingarten = 0;    // max |omega_i^r(e_j) - h^r_ij|
  double lemma41 = 0;       // omega_3^4 - omega_1^2 + cot(theta)(tr h^3 w^1 + tr h^4 w^2)
  double symmetry = 0;      // max |h^{j*}_{ik} - h^{i*}_{jk}|
};

// Adapted frames differenced with 5-point stencils of step h.
ConnectionSample connection_forms_at(const Immersion& f, const ComplexStructure& J,
                                     double u, double v, double h);
std::vector<ConnectionSample> connection_forms(const Immersion& f,
                                               const ComplexStructure& J,
                                               const GridSpec& g,
                                               Exec exec = Exec::Parallel);

// a du + b dv at the nodes of a grid
struct OneFormField {
  Domain domain;
  GridSpec grid;
  std::vector<Vec2> coeff;
};

// c du ^ dv, either at nodes or at cell centres
struct TwoFormField {
  Domain domain;
  GridSpec grid;
  bool cells = false;
  std::vector<double> coeff;
  double max_abs() const;
};

using OneForm = std::function<Vec2(double, double)>;

// Theta(x_u), Theta(x_v) from -2 csc(alpha) <t H, X>, no differencing.
Vec2 theta_coefficients(const Immersion& f, const ComplexStructure& J, double u,
                        double v);

struct ThetaForm {
  OneFormField canonical;   // mean curvature path
  OneFormField connection;  // sum of omega_i^{i*}
  double dual_path = 0;     // max difference between the two
  double antisymmetry = 0, weingarten = 0, lemma41 = 0, symmetry = 0;
  double alpha_min = 0, alpha_max = 0;
};
ThetaForm theta_form(const Immersion& f, const ComplexStructure& J,
                     const GridSpec& g, Exec exec = Exec::Parallel);

// Circulation around each grid cell divided by its area. The node version
// uses the trapezoid rule on edges; the callable version uses 3-point
// Gauss-Legendre on each edge. Both are exact for affine forms.
TwoFormField exterior_derivative(const OneFormField& w);
TwoFormField exterior_derivative(const OneForm& w, const Domain& d,
                                 const GridSpec& g, Exec exec = Exec::Parallel);

// Closed piecewise-smooth curve: piece p maps s in [0, 1] to (u, v) and
// its velocity. Pieces are integrated separately.
struct Loop {
  std::string name;
  int pieces = 1;
  std::function<std::pair<Vec2, Vec2>(int, double)> at;
};

// Period loop along a declared period, other coordinate fixed at `fixed`
// (default: middle of the domain).
Loop period_loop(const Immersion& f, const std::string& name,
                 std::optional<double> fixed = std::nullopt);
Loop rectangle_loop(double u0, double u1, double v0, double v1);
// "u(t)", "v(t)" expressions in t with the surface parameters in scope
Loop expression_loop(const std::string& u_expr, const std::string& v_expr,
                     const Params& params);

struct LoopIntegral {
  std::string loop;
  int steps = 0;
  double value = 0;             // integral of (2 pi)^-1 csc(alpha) Theta
  double sqrt2_normalized = 0;  // same with (2 sqrt(2) pi)^-1
  double nearest = 0;
  double distance = 0;
  double alpha = 0;
  Vec2 shift = Vec2::Zero();    // endpoint difference (a period multiple)
  double tolerance = 1e-4;
};

LoopIntegral loop_integral_psi(const Immersion& f, const ComplexStructure& J,
                               const Loop& loop, int steps = 4096);

struct LambdaReport {
  TwoFormField lambda;          // Lambda(x_u, x_v) at the nodes
  double e12_min = 0, e12_max = 0;  // Lambda(e1, e2), positive frame
  double expected = 0;          // -cos(alpha) at the first node
  bool nondegenerate = false;
  double nabla_p_difference = 0;  // |(nabla_X P) Y| by frame differencing
  double nabla_p_identity = 0;    // |t h(X, Y) + A_{FY} X|
  double tolerance = 1e-6;
};
LambdaReport lambda_form(const Immersion& f, const ComplexStructure& J,
                         const GridSpec& g, Exec exec = Exec::Parallel);

}  // namespace slant
