#pragma once

#include <string>
#include <vector>

#include "harmlab/analytic.hpp"

namespace harmlab {

// Built-in sense-preserving pairs (h, g) on the working grid r <= 0.7.
struct CatalogEntry {
  std::string name;
  AnalyticFunction h;
  AnalyticFunction g;
  std::string h_text;
  std::string g_text;
  std::string note;
};

const std::vector<CatalogEntry>& catalog();

// Raises Errc::unknown_catalog_entry for names not in the catalog.
const CatalogEntry& catalog_lookup(const std::string& name);

}  // namespace harmlab
