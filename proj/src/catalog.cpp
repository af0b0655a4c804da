#include "harmlab/catalog.hpp"

#include "harmlab/errors.hpp"

namespace harmlab {

namespace {

// Series entries carry a slightly wider radius than the default working grid
// so finite-difference stencils at the r = 0.7 rim stay inside the domain.
constexpr double kCatalogSeriesRadius = 0.75;

AnalyticFunction from_text(const std::string& text) {
  return AnalyticFunction::parse(text);
}

// Antiderivative of a dilatation given as an expression: the g with g' = w.
AnalyticFunction g_from_dilatation(const std::string& omega_text) {
  PowerSeries wp = series_from_expr(parse_expr(omega_text), kDefaultSeriesOrder - 1,
                                    kCatalogSeriesRadius);
  return AnalyticFunction(wp.antiderivative());
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> entries;
  entries.push_back({"identity", from_text("z"), from_text("0"), "z", "0",
                     "plane identity; omega = 0"});
  entries.push_back({"rotor", from_text("z"), from_text("0.5*z"), "z", "0.5*z",
                     "constant dilatation 0.5"});
  entries.push_back({"shear", from_text("z"), from_text("z^2/2"), "z", "z^2/2",
                     "omega = z; J = 1-|z|^2"});
  entries.push_back({"expmap", from_text("exp(z)-1"), from_text("0.3*z"),
                     "exp(z)-1", "0.3*z", "omega = 0.3*exp(-z)"});
  entries.push_back({"blaschke-dil", from_text("z"),
                     g_from_dilatation("0.9*(z+0.3)/(1+0.3*z)"), "z",
                     "integral of 0.9*(z+0.3)/(1+0.3*z) (series)",
                     "omega = scaled Blaschke factor"});
  entries.push_back({"cubic-dil", from_text("z"), from_text("z^2/2+z^4/40"), "z",
                     "z^2/2+z^4/40", "omega = z+z^3/10"});
  entries.push_back({"entire-dil", from_text("exp(z)-1"),
                     from_text("0.4*(exp(0.5*z)*(2*z-4)+4)"), "exp(z)-1",
                     "0.4*(exp(0.5*z)*(2*z-4)+4)",
                     "omega = 0.4*z*exp(-z/2); omega' zero-free on the disk"});
  return entries;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry& catalog_lookup(const std::string& name) {
  for (const CatalogEntry& e : catalog()) {
    if (e.name == name) return e;
  }
  raise(Errc::unknown_catalog_entry, "no catalog map named '" + name + "'");
}

}  // namespace harmlab
