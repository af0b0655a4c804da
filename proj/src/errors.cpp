#include "harmlab/errors.hpp"

namespace harmlab {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::order_mismatch: return "OrderMismatch";
    case Errc::division_near_zero: return "DivisionNearZero";
    case Errc::radius_exceeded: return "RadiusExceeded";
    case Errc::parse_error: return "ParseError";
    case Errc::unknown_catalog_entry: return "UnknownCatalogEntry";
    case Errc::pole_hit: return "PoleHit";
    case Errc::degenerate_mobius: return "DegenerateMobius";
    case Errc::invalid_parameter: return "InvalidParameter";
    case Errc::degenerate_at_point: return "DegenerateAtPoint";
    case Errc::negative_inner_value: return "NegativeInnerValue";
    case Errc::fit_mismatch: return "FitMismatch";
    case Errc::not_disk_automorphism: return "NotDiskAutomorphism";
    case Errc::sense_reversed: return "SenseReversed";
    case Errc::non_finite: return "NonFinite";
    case Errc::io_error: return "IoError";
    case Errc::config_error: return "ConfigError";
  }
  return "UnknownError";
}

}  // namespace harmlab
