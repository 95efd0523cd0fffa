#ifndef FPD_RING_SPEC_HPP
#define FPD_RING_SPEC_HPP

#include <string>

#include <json.hpp>

#include "fpd/classify.hpp"
#include "fpd/families.hpp"

namespace fpd {

// A ring described by a JSON spec, realized on one of the two
// backends. A poly_quotient spec lands on the finite backend when the
// quotient is finite-dimensional and on the polynomial backend (with
// the relations carried along) otherwise.
struct RingValue {
  enum class Backend { Finite, Poly };
  Backend backend;
  AlgebraPtr algebra;  // Finite
  PolyQuotient poly;   // Poly
  nlohmann::json spec_echo;

  bool finite() const { return backend == Backend::Finite; }
};

// Parses and builds a ring from its JSON spec. Shapes are validated
// with SchemaError (carrying a JSON path); algebra axioms are checked
// by the constructors.
RingValue parse_ring_spec(const nlohmann::json& spec);
RingValue parse_ring_spec_text(const std::string& text);

// Report envelope: sorted-key JSON, byte-stable for a fixed spec,
// seed and version (timings are opt-in for that reason).
extern const char* kReportVersion;

nlohmann::json make_report(const std::string& command, const nlohmann::json& spec_echo,
                           std::uint64_t seed, nlohmann::json results);

nlohmann::json classifier_report_to_json(const ClassifierReport& rep);

}  // namespace fpd

#endif  // FPD_RING_SPEC_HPP
