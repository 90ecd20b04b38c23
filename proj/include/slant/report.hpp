#pragma once

#include "slant/cxstruct.hpp"
#include "slant/forms.hpp"
#include "slant/gaussmap.hpp"
#include "slant/geometry.hpp"
#include "slant/grid.hpp"
#include "slant/immersion.hpp"

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace slant {

using Json = nlohmann::ordered_json;

// Deterministic text: keys in insertion order, doubles with 17 significant
// digits, non-finite numbers as null.
std::string dump(const Json& j, int indent = 2);

Json to_json(const ComplexStructure& J);
Json to_json(const Immersion& f);
Json to_json(const WirtingerStats& w);
Json to_json(const SlantDetection& d, const CircleFitOptions& opt = {});
Json to_json(const LoopIntegral& r);

// Analysis results; `violations` lists invariants that failed beyond
// their tolerance on a surface where they must hold.
struct Report {
  Json body;
  std::vector<std::string> violations;
};

Report analyze_report(const Immersion& f, const GridSpec& g,
                      const std::string& structure_id, Exec exec = Exec::Parallel);
Report detect_report(const Immersion& f, const GridSpec& g,
                     const CircleFitOptions& opt = {}, Exec exec = Exec::Parallel);
Report loop_report(const Immersion& f, const std::string& structure_id,
                   const Loop& loop, const std::vector<int>& steps);
Json catalog_report();

// Per-point tables for plotting.
void write_curvature_csv(std::ostream& os, const std::vector<CurvatureSample>& t);
void write_gauss_csv(std::ostream& os, const std::vector<GaussSample>& s);

}  // namespace slant
