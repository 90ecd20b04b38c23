#pragma once

#include "slant/dsl.hpp"

#include <Eigen/Dense>

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace slant {

using Params = std::map<std::string, double>;

struct Domain {
  double u0 = 0, u1 = 1, v0 = 0, v1 = 1;

  double width() const { return u1 - u0; }
  double height() const { return v1 - v0; }
};

// Position with first and second partials of a chart x(u, v).
struct SurfaceJet {
  Eigen::VectorXd x, xu, xv, xuu, xuv, xvv;
};

// A coordinate shift under which the surface repeats up to an ambient
// translation commuting with every constant complex structure.
struct PeriodSpec {
  std::string name;  // e.g. "period-v"
  int coordinate;    // 0 = u, 1 = v
  double period;
};

class Immersion {
 public:
  using ChartFn = std::function<SurfaceJet(double, double)>;

  Immersion(std::string id, int ambient_dim, Domain domain, ChartFn chart,
            Params params = {}, std::vector<PeriodSpec> periods = {},
            std::string structure = {});

  SurfaceJet jet(double u, double v) const;
  Eigen::VectorXd position(double u, double v) const { return jet(u, v).x; }

  const std::string& id() const { return id_; }
  int ambient_dim() const { return ambient_dim_; }
  const Domain& domain() const { return domain_; }
  const Params& params() const { return params_; }
  const std::vector<PeriodSpec>& periods() const { return periods_; }
  // structure id under which the surface is known to be slant, or empty
  const std::string& structure() const { return structure_; }

  Immersion with_domain(const Domain& d) const;

 private:
  std::string id_;
  int ambient_dim_;
  Domain domain_;
  ChartFn chart_;
  Params params_;
  std::vector<PeriodSpec> periods_;
  std::string structure_;
};

// Surface from expression components in u, v (and declared params).
Immersion immersion_from_expressions(const std::string& name, int ambient_dim,
                                     const std::vector<std::string>& components,
                                     const Params& params, const Domain& domain,
                                     std::vector<PeriodSpec> periods = {},
                                     std::string structure = {});

// Config document: {name, ambient_dim, components, params, domain,
// optional periods [{name, coordinate, period}], optional structure}.
Immersion immersion_from_config_text(const std::string& json_text);
Immersion immersion_from_config_file(const std::string& path);

// Apply a linear map to every jet of a surface.
Immersion transform(const Immersion& f, const Eigen::MatrixXd& A,
                    const std::string& id);

}  // namespace slant
