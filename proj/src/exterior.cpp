#include "slant/exterior.hpp"

#include "slant/cxstruct.hpp"
#include "slant/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace slant {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

std::array<TwoVector, 6> make_eta() {
  auto v = [](double a, double b, double c, double d, double e, double f) {
    Vec6 x;
    x << a, b, c, d, e, f;
    return TwoVector(x * kInvSqrt2);
  };
  return {v(1, 0, 0, 0, 0, 1),  v(0, 1, 0, 0, -1, 0), v(0, 0, 1, 1, 0, 0),
          v(1, 0, 0, 0, 0, -1), v(0, 1, 0, 0, 1, 0),  v(0, 0, 1, -1, 0, 0)};
}

const std::array<TwoVector, 6>& eta_table() {
  static const std::array<TwoVector, 6> t = make_eta();
  return t;
}

void combinations(int n, int p, int start, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == p) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    combinations(n, p, i + 1, cur, out);
    cur.pop_back();
  }
}

int permutation_sign(const std::vector<int>& p) {
  int inv = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 ? -1 : 1;
}

double factorial(int n) {
  double r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

TwoVector wedge2(const Vec4& x, const Vec4& y) {
  Vec6 c;
  for (int k = 0; k < 6; ++k) {
    auto [i, j] = kPairs[k];
    c[k] = x[i] * y[j] - x[j] * y[i];
  }
  return TwoVector(c);
}

double inner(const TwoVector& a, const TwoVector& b) { return a.c.dot(b.c); }

double norm(const TwoVector& a) { return a.c.norm(); }

TwoVector hodge_star(const TwoVector& a) {
  // *e12 = e34, *e13 = -e24, *e14 = e23 and the reverse
  Vec6 c;
  c << a.c[5], -a.c[4], a.c[3], a.c[2], -a.c[1], a.c[0];
  return TwoVector(c);
}

TwoVector project_plus(const TwoVector& a) {
  return (a + hodge_star(a)) * 0.5;
}

TwoVector project_minus(const TwoVector& a) {
  return (a - hodge_star(a)) * 0.5;
}

bool is_decomposable(const TwoVector& a, double rel_tol) {
  double n2 = a.c.squaredNorm();
  return std::abs(inner(hodge_star(a), a)) <= rel_tol * std::max(n2, 1e-300);
}

const TwoVector& eta(int i) {
  if (i < 1 || i > 6) throw ConfigError("eta index out of range");
  return eta_table()[i - 1];
}

Vec6 eta_coords(const TwoVector& a) {
  Vec6 e;
  for (int i = 0; i < 6; ++i) e[i] = inner(a, eta_table()[i]);
  return e;
}

TwoVector from_eta_coords(const Vec6& e) {
  TwoVector r;
  for (int i = 0; i < 6; ++i) r = r + eta_table()[i] * e[i];
  return r;
}

Vec3 plus_coords(const TwoVector& a) { return eta_coords(a).head<3>(); }

Vec3 minus_coords(const TwoVector& a) { return eta_coords(a).tail<3>(); }

TwoVector from_plus_coords(const Vec3& p) {
  Vec6 e = Vec6::Zero();
  e.head<3>() = p;
  return from_eta_coords(e);
}

TwoVector from_minus_coords(const Vec3& p) {
  Vec6 e = Vec6::Zero();
  e.tail<3>() = p;
  return from_eta_coords(e);
}

Mat4 skew_matrix(const TwoVector& a) {
  Mat4 m = Mat4::Zero();
  for (int k = 0; k < 6; ++k) {
    auto [i, j] = kPairs[k];
    m(i, j) = a.c[k];
    m(j, i) = -a.c[k];
  }
  return m;
}

TwoVector from_skew(const Mat4& m) {
  Vec6 c;
  for (int k = 0; k < 6; ++k) {
    auto [i, j] = kPairs[k];
    c[k] = m(i, j);
  }
  return TwoVector(c);
}

OrientedPlane OrientedPlane::from_vectors(const Vec4& x, const Vec4& y) {
  double nx = x.norm();
  if (nx < 1e-14) throw DegenerateError("plane spanned by a zero vector");
  Vec4 e1 = x / nx;
  Vec4 w = y - y.dot(e1) * e1;
  double nw = w.norm();
  if (nw < 1e-12 * std::max(1.0, y.norm()))
    throw DegenerateError("plane spanned by dependent vectors");
  Vec4 e2 = w / nw;
  return {e1, e2, wedge2(e1, e2)};
}

OrientedPlane OrientedPlane::reversed() const { return {e2, e1, -plucker}; }

MultiVector::MultiVector(int dim, int degree) : dim_(dim), degree_(degree) {
  if (dim < 1 || dim > 8 || degree < 0 || degree > dim)
    throw ConfigError("multivector dimension/degree out of range");
  std::vector<int> cur;
  combinations(dim, degree, 0, cur, basis_);
  coeffs_.assign(basis_.size(), 0.0);
}

MultiVector MultiVector::wedge(const std::vector<Eigen::VectorXd>& vectors) {
  if (vectors.empty()) throw ConfigError("wedge of no vectors");
  int n = static_cast<int>(vectors[0].size());
  int p = static_cast<int>(vectors.size());
  MultiVector out(n, p);
  Eigen::MatrixXd M(n, p);
  for (int j = 0; j < p; ++j) {
    if (vectors[j].size() != n) throw ConfigError("wedge of mixed dimensions");
    M.col(j) = vectors[j];
  }
  for (size_t b = 0; b < out.basis_.size(); ++b) {
    Eigen::MatrixXd minor(p, p);
    for (int r = 0; r < p; ++r) minor.row(r) = M.row(out.basis_[b][r]);
    out.coeffs_[b] = minor.determinant();
  }
  return out;
}

double MultiVector::inner(const MultiVector& o) const {
  if (o.dim_ != dim_ || o.degree_ != degree_)
    throw ConfigError("inner product of mismatched multivectors");
  return std::inner_product(coeffs_.begin(), coeffs_.end(), o.coeffs_.begin(),
                            0.0);
}

double MultiVector::norm() const { return std::sqrt(inner(*this)); }

double omega_power_pairing(const Eigen::MatrixXd& W,
                           const std::vector<Eigen::VectorXd>& vectors) {
  int p = static_cast<int>(vectors.size());
  if (p % 2 != 0 || p > 8) throw ConfigError("omega power needs 2k <= 8 vectors");
  std::vector<int> perm(p);
  std::iota(perm.begin(), perm.end(), 0);
  double sum = 0;
  do {
    double term = permutation_sign(perm);
    for (int q = 0; q < p; q += 2)
      term *= vectors[perm[q]].dot(W * vectors[perm[q + 1]]);
    sum += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum / factorial(p);
}

double omega_power_on(const Eigen::MatrixXd& W, const MultiVector& V) {
  int n = V.dim();
  if (W.rows() != n || W.cols() != n) throw ConfigError("form dimension mismatch");
  double total = 0;
  for (size_t b = 0; b < V.basis().size(); ++b) {
    double c = V.coeffs()[b];
    if (c == 0.0) continue;
    std::vector<Eigen::VectorXd> basis_vectors;
    for (int idx : V.basis()[b])
      basis_vectors.push_back(Eigen::VectorXd::Unit(n, idx));
    total += c * omega_power_pairing(W, basis_vectors);
  }
  return total;
}

double zeta_hat_pairing(const MultiVector& V) {
  if (V.dim() % 2 != 0 || V.degree() % 2 != 0)
    throw ConfigError("pairing needs even dimension and even degree");
  int k = V.degree() / 2;
  Eigen::MatrixXd J0 = j0_block(V.dim() / 2);
  double sign = (k % 2) ? -1.0 : 1.0;
  return sign * omega_power_on(J0, V);
}

double mu(int k) { return std::pow(2.0, k) * factorial(k) / factorial(2 * k); }

}  // namespace slant
