#pragma once

#include <Eigen/Dense>

#include <array>
#include <utility>
#include <vector>

namespace slant {

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat4 = Eigen::Matrix4d;
using Vec6 = Eigen::Matrix<double, 6, 1>;

// index pairs of the basis e12, e13, e14, e23, e24, e34 (zero based)
inline constexpr std::array<std::pair<int, int>, 6> kPairs{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

// Element of the 6-dimensional space of 2-vectors over E^4.
struct TwoVector {
  Vec6 c = Vec6::Zero();

  TwoVector() = default;
  explicit TwoVector(const Vec6& coords) : c(coords) {}

  double operator[](int i) const { return c[i]; }
  TwoVector operator+(const TwoVector& o) const { return TwoVector(c + o.c); }
  TwoVector operator-(const TwoVector& o) const { return TwoVector(c - o.c); }
  TwoVector operator-() const { return TwoVector(-c); }
  TwoVector operator*(double s) const { return TwoVector(c * s); }
  friend TwoVector operator*(double s, const TwoVector& x) { return x * s; }
};

TwoVector wedge2(const Vec4& x, const Vec4& y);
double inner(const TwoVector& a, const TwoVector& b);
double norm(const TwoVector& a);
TwoVector hodge_star(const TwoVector& a);
TwoVector project_plus(const TwoVector& a);
TwoVector project_minus(const TwoVector& a);

// xi ^ xi = 0, tested as |<*xi, xi>| <= rel_tol * |xi|^2
bool is_decomposable(const TwoVector& a, double rel_tol = 1e-9);

// eta_1..eta_3 span the self-dual part, eta_4..eta_6 the anti-self-dual part
const TwoVector& eta(int i);
Vec6 eta_coords(const TwoVector& a);
TwoVector from_eta_coords(const Vec6& e);
Vec3 plus_coords(const TwoVector& a);
Vec3 minus_coords(const TwoVector& a);
TwoVector from_plus_coords(const Vec3& p);
TwoVector from_minus_coords(const Vec3& p);

// skew matrix with M(i,j) = a_ij for i < j
Mat4 skew_matrix(const TwoVector& a);
TwoVector from_skew(const Mat4& m);

// Oriented 2-plane with an orthonormal basis and its unit Pluecker 2-vector.
struct OrientedPlane {
  Vec4 e1;
  Vec4 e2;
  TwoVector plucker;

  static OrientedPlane from_vectors(const Vec4& x, const Vec4& y);
  OrientedPlane reversed() const;
};

// Decomposable p-vector over E^n, n <= 8, stored in the lexicographic basis
// e_I, I an increasing index set.
class MultiVector {
 public:
  MultiVector(int dim, int degree);

  static MultiVector wedge(const std::vector<Eigen::VectorXd>& vectors);

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  const std::vector<std::vector<int>>& basis() const { return basis_; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  std::vector<double>& coeffs() { return coeffs_; }

  double inner(const MultiVector& o) const;
  double norm() const;

 private:
  int dim_;
  int degree_;
  std::vector<std::vector<int>> basis_;
  std::vector<double> coeffs_;
};

// Omega^k evaluated on X_1 ^ ... ^ X_2k where Omega(X, Y) = X^T W Y.
// Signed sum over all permutations divided by (2k)!.
double omega_power_pairing(const Eigen::MatrixXd& W,
                           const std::vector<Eigen::VectorXd>& vectors);

// Same functional extended linearly to a stored multivector.
double omega_power_on(const Eigen::MatrixXd& W, const MultiVector& V);

// <zeta_hat_0, V> = (-1)^k Omega_0^k(V) on E^{2m}, Omega_0(X, Y) = <X, J0 Y>.
double zeta_hat_pairing(const MultiVector& V);

// 2^k k! / (2k)!
double mu(int k);

}  // namespace slant
