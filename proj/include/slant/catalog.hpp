#pragma once

#include "slant/immersion.hpp"

#include <array>
#include <string>
#include <vector>

namespace slant {

struct CatalogEntry {
  std::string id;
  std::string description;
  int ambient_dim;
  Params defaults;
  // Structure (id template, "{alpha}" replaced by the parameter) under which
  // the surface is slant; empty when it is slant for none of the standard ones.
  std::string structure;
  // Expression form of the chart in u, v, or empty for generated surfaces.
  std::vector<std::string> components;
};

const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry& catalog_entry(const std::string& id);

// "ex2.4", or "helical-cylinder:a=0.6,b=-0.8"; overrides win over both
// defaults and inline parameters.
Immersion catalog_immersion(const std::string& spec, const Params& overrides = {});

// Structure id for an entry with resolved parameters ("" if none).
std::string catalog_structure(const std::string& id, const Params& params);

// Parse "k=1,a=0.5" into a parameter map.
Params parse_params(const std::string& text);

// The 4-dimensional fixture in E^8 used only for pairing checks:
// x(u, v, w, z) = (u, v, k sin w, k sin z, k w, k z, k cos w, k cos z).
std::array<Eigen::VectorXd, 4> fourfold_tangents(double k, double w, double z);

}  // namespace slant
