#pragma once

#include "slant/exterior.hpp"

#include <string>
#include <string_view>
#include <utility>

namespace slant {

enum class StructureClass { Plus, Minus };

const char* to_string(StructureClass c);

// Orthogonal complex structure on E^4 compatible with the orientation.
// The class is read off zeta_J: self-dual means Plus, anti-self-dual Minus.
class ComplexStructure {
 public:
  static ComplexStructure from_matrix(const Mat4& J, double tol = 1e-10);
  static ComplexStructure from_zeta(const TwoVector& zeta, double tol = 1e-10);

  const Mat4& matrix() const { return J_; }
  const TwoVector& zeta() const { return zeta_; }
  StructureClass cls() const { return cls_; }
  Vec4 apply(const Vec4& x) const { return J_ * x; }

  ComplexStructure operator-() const;

 private:
  ComplexStructure(const Mat4& J, const TwoVector& z, StructureClass c)
      : J_(J), zeta_(z), cls_(c) {}

  Mat4 J_;
  TwoVector zeta_;
  StructureClass cls_;
};

// (zeta_J)_ij = -<e_i, J e_j>
TwoVector zeta_of(const Mat4& J);
ComplexStructure structure_from_zeta(const TwoVector& zeta);

// alpha in [0, pi] with cos alpha = <J e1, e2> = <zeta_J, V>
double alpha_of_plane(const ComplexStructure& J, const OrientedPlane& V);
double wirtinger_angle(double alpha);

// The two structures (one per class) for which V is a complex line.
std::pair<ComplexStructure, ComplexStructure> j_v_plus_minus(
    const OrientedPlane& V);

namespace standard {
ComplexStructure J0();     // (a,b,c,d) -> (-c,-d,a,b)
ComplexStructure J1();     // (a,b,c,d) -> (-b,a,-d,c)
ComplexStructure J1m();    // (a,b,c,d) -> (-b,a,d,-c)
ComplexStructure J2();     // (a,b,c,d) -> (b,-a,-d,c)
ComplexStructure Jalpha(double alpha);  // cos a J0 + sin a J1m
}  // namespace standard

// "J0", "J1", "J1m", "J2", "Jalpha:<rad>", "zeta:z12,z13,z14,z23,z24,z34",
// each optionally prefixed with '-'.
ComplexStructure structure_by_id(std::string_view id);

// Structures on E^{2n} used by the higher-dimensional facilities.
Eigen::MatrixXd j0_block(int n);   // (a, b) -> (-b, a), a, b in R^n
Eigen::MatrixXd j1_minus(int n);   // n even
Eigen::MatrixXd j_alpha(int n, double alpha);

// Matrix for an id on E^{dim}: the E^4 ids above, or the block family
// ("J0", "J1m", "Jalpha:<rad>") on larger even dimensions.
Eigen::MatrixXd structure_matrix_by_id(std::string_view id, int dim);

bool is_complex_structure(const Eigen::MatrixXd& J, double tol = 1e-10);

}  // namespace slant
