#pragma once

#include <string>

#include <json.hpp>

#include "braidalex/alexander.hpp"

// Output formats for reports and polynomials. Every rendering is a
// deterministic function of its input: terms always follow the global
// monomial order descending, JSON object keys follow insertion order.

namespace braidalex {

enum class Mode { axis, invariant, alexander, all };
enum class Format { text, json, latex };

Mode mode_from_string(const std::string& s);      // throws ParseError
Format format_from_string(const std::string& s);  // throws ParseError

std::string to_latex(const LaurentPoly& p);

nlohmann::ordered_json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json report_to_json(const LinkInvariantReport& report, Mode mode);

// text and latex: one labelled line per requested polynomial
// (withAxis:, invariant:, alexander:); json: the report object.
std::string render(const LinkInvariantReport& report, Format format, Mode mode = Mode::all);

}  // namespace braidalex
