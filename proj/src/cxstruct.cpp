#include "slant/cxstruct.hpp"

#include "slant/errors.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace slant {

namespace {

Mat4 rows(std::initializer_list<double> v) {
  Mat4 m;
  auto it = v.begin();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = *it++;
  return m;
}

double parse_number(std::string_view s, std::string_view id) {
  std::string str(s);
  std::size_t used = 0;
  double x = 0;
  try {
    x = std::stod(str, &used);
  } catch (const std::exception&) {
    throw ConfigError("bad number in structure id '" + std::string(id) + "'");
  }
  if (used != str.size())
    throw ConfigError("bad number in structure id '" + std::string(id) + "'");
  return x;
}

}  // namespace

const char* to_string(StructureClass c) {
  return c == StructureClass::Plus ? "plus" : "minus";
}

bool is_complex_structure(const Eigen::MatrixXd& J, double tol) {
  if (J.rows() != J.cols() || J.rows() % 2 != 0) return false;
  auto I = Eigen::MatrixXd::Identity(J.rows(), J.cols());
  return (J * J + I).cwiseAbs().maxCoeff() <= tol &&
         (J.transpose() * J - I).cwiseAbs().maxCoeff() <= tol;
}

TwoVector zeta_of(const Mat4& J) {
  Vec6 c;
  for (int k = 0; k < 6; ++k) {
    auto [i, j] = kPairs[k];
    c[k] = -J(i, j);
  }
  return TwoVector(c);
}

ComplexStructure ComplexStructure::from_matrix(const Mat4& J, double tol) {
  if (!is_complex_structure(J, tol))
    throw ConfigError("matrix is not an orthogonal complex structure");
  TwoVector z = zeta_of(J);
  double np = norm(project_plus(z));
  double nm = norm(project_minus(z));
  if (nm <= 1e-8) return ComplexStructure(J, z, StructureClass::Plus);
  if (np <= 1e-8) return ComplexStructure(J, z, StructureClass::Minus);
  throw ConfigError("complex structure is neither self-dual nor anti-self-dual");
}

ComplexStructure ComplexStructure::from_zeta(const TwoVector& zeta, double tol) {
  if (std::abs(norm(zeta) - std::sqrt(2.0)) > 1e-8)
    throw ConfigError("zeta must have norm sqrt(2)");
  if (norm(project_plus(zeta)) > 1e-8 && norm(project_minus(zeta)) > 1e-8)
    throw ConfigError("zeta must be self-dual or anti-self-dual");
  Mat4 J = -skew_matrix(zeta);
  return from_matrix(J, tol);
}

ComplexStructure ComplexStructure::operator-() const {
  return ComplexStructure(-J_, -zeta_, cls_);
}

ComplexStructure structure_from_zeta(const TwoVector& zeta) {
  return ComplexStructure::from_zeta(zeta);
}

double alpha_of_plane(const ComplexStructure& J, const OrientedPlane& V) {
  double c = inner(J.zeta(), V.plucker);
  return std::acos(std::clamp(c, -1.0, 1.0));
}

double wirtinger_angle(double alpha) { return std::min(alpha, M_PI - alpha); }

std::pair<ComplexStructure, ComplexStructure> j_v_plus_minus(
    const OrientedPlane& V) {
  return {ComplexStructure::from_zeta(project_plus(V.plucker) * 2.0),
          ComplexStructure::from_zeta(project_minus(V.plucker) * 2.0)};
}

namespace standard {
ComplexStructure J0() {
  return ComplexStructure::from_matrix(
      rows({0, 0, -1, 0, 0, 0, 0, -1, 1, 0, 0, 0, 0, 1, 0, 0}));
}
ComplexStructure J1() {
  return ComplexStructure::from_matrix(
      rows({0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0}));
}
ComplexStructure J1m() {
  return ComplexStructure::from_matrix(
      rows({0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0}));
}
ComplexStructure J2() {
  return ComplexStructure::from_matrix(
      rows({0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0}));
}
ComplexStructure Jalpha(double alpha) {
  return ComplexStructure::from_matrix(std::cos(alpha) * J0().matrix() +
                                       std::sin(alpha) * J1m().matrix());
}
}  // namespace standard

ComplexStructure structure_by_id(std::string_view id) {
  std::string_view s = id;
  bool neg = false;
  if (!s.empty() && s[0] == '-') {
    neg = true;
    s.remove_prefix(1);
  }
  auto finish = [&](ComplexStructure J) { return neg ? -J : J; };
  if (s == "J0") return finish(standard::J0());
  if (s == "J1") return finish(standard::J1());
  if (s == "J1m") return finish(standard::J1m());
  if (s == "J2") return finish(standard::J2());
  if (s.rfind("Jalpha:", 0) == 0)
    return finish(standard::Jalpha(parse_number(s.substr(7), id)));
  if (s.rfind("zeta:", 0) == 0) {
    std::vector<double> vals;
    std::string_view rest = s.substr(5);
    while (!rest.empty()) {
      auto comma = rest.find(',');
      vals.push_back(parse_number(rest.substr(0, comma), id));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (vals.size() != 6)
      throw ConfigError("zeta structure id needs six components");
    Vec6 c;
    for (int i = 0; i < 6; ++i) c[i] = vals[i];
    TwoVector z(c);
    // accept any nonzero pure 2-vector and rescale to norm sqrt(2)
    if (norm(z) < 1e-12) throw ConfigError("zeta structure id is zero");
    return finish(ComplexStructure::from_zeta(z * (std::sqrt(2.0) / norm(z))));
  }
  throw ConfigError("unknown complex structure id '" + std::string(id) + "'");
}

Eigen::MatrixXd j0_block(int n) {
  if (n < 1) throw ConfigError("j0_block needs n >= 1");
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    J(i, n + i) = -1;
    J(n + i, i) = 1;
  }
  return J;
}

Eigen::MatrixXd j1_minus(int n) {
  if (n < 2 || n % 2 != 0) throw ConfigError("j1_minus needs even n");
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (int i = 0; i < n; i += 2) {
    // a-part: (a_i, a_{i+1}) -> (-a_{i+1}, a_i)
    J(i, i + 1) = -1;
    J(i + 1, i) = 1;
    // b-part: (b_i, b_{i+1}) -> (b_{i+1}, -b_i)
    J(n + i, n + i + 1) = 1;
    J(n + i + 1, n + i) = -1;
  }
  return J;
}

Eigen::MatrixXd j_alpha(int n, double alpha) {
  return std::cos(alpha) * j0_block(n) + std::sin(alpha) * j1_minus(n);
}

Eigen::MatrixXd structure_matrix_by_id(std::string_view id, int dim) {
  if (dim == 4) return structure_by_id(id).matrix();
  if (dim % 4 != 0 && dim % 2 != 0)
    throw ConfigError("structure needs an even ambient dimension");
  std::string_view s = id;
  double sign = 1;
  if (!s.empty() && s[0] == '-') {
    sign = -1;
    s.remove_prefix(1);
  }
  int n = dim / 2;
  if (s == "J0") return sign * j0_block(n);
  if (s == "J1m") return sign * j1_minus(n);
  if (s.rfind("Jalpha:", 0) == 0)
    return sign * j_alpha(n, parse_number(s.substr(7), id));
  throw ConfigError("structure '" + std::string(id) +
                    "' is only defined on E^4");
}

}  // namespace slant
