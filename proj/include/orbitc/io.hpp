#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "orbitc/classifier.hpp"
#include "orbitc/root_system.hpp"
#include "orbitc/span_oracle.hpp"
#include "orbitc/wright.hpp"

namespace orbitc {

/// Parse failure with the offending position in the input text.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  size_t position() const { return position_; }

private:
  size_t position_;
};

/// Element specs come in two forms:
///   value syntax:  B5:[0,0,1,1,1]   (exact rationals, e.g. 1/2; no floats)
///   type syntax:   B5:B2xSU(3), D4:SU(4)-, D6:D1xSU(5)
/// Type syntax resolves to the canonical witness element. For family D with
/// no zero block the sign suffix defaults to '+', except the two
/// conjugacy-sensitive D4 types SU(4) and SU(2)xSU(2), which are refused
/// without an explicit sign.
TorusElement parse_element(const std::string& spec);

/// Canonical value-syntax spec; parse_element(format_element(x)) == x after
/// canonicalization.
std::string format_element(const TorusElement& x);

std::string format_rat(const Rat& r);
Rat parse_rat(const std::string& text);

nlohmann::json root_to_json(const Root& r);
nlohmann::json subsystem_to_json(const RootSubsystem& s);

nlohmann::json element_to_json(const TorusElement& x);
nlohmann::json verdict_to_json(const Verdict& v);
nlohmann::json span_report_to_json(const SpanReport& r);
nlohmann::json wright_report_to_json(const WrightReport& r);

}  // namespace orbitc
