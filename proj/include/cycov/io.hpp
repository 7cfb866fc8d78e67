#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cycov/curves.hpp"
#include "cycov/equations.hpp"

namespace cycov {

using OrderedJson = nlohmann::ordered_json;

/// Curve file format, a single strict JSON document:
/// {"d": 3, "branch_points": ["0", "1", "-1", "5/2"], "exponents": [1, 1, 2, 2]}
/// Rationals are canonical "p" or "p/q" strings; exponents lie in [1, d);
/// unknown keys are rejected.
OrderedJson curve_to_json(const CyclicCurve& curve);
std::string curve_to_json_text(const CyclicCurve& curve);
CyclicCurve curve_from_json(const OrderedJson& document);
CyclicCurve curve_from_json_text(const std::string& text);
CyclicCurve load_curve_file(const std::string& path);

/// Canonical polynomial text, highest degree first: "x^3 - 1", "5/2*x", "0".
std::string polynomial_text(const Polynomial& poly, const std::string& indeterminate = "x");

struct ParsedPolynomial {
    Polynomial value;
    /// Absent when the text is a bare constant.
    std::optional<std::string> indeterminate;
};
ParsedPolynomial parse_polynomial_text(const std::string& text);

/// Equation text, one relation per line:
/// y^3 = (x - 0)^1 * (x - 1)^1 * (x - -1)^2 * (x - 5/2)^2
/// Monic linear factors print in root form, other factors as "(poly)^e";
/// a scalar prefix appears only when the scalar is not 1. Parsing emitted
/// text reproduces the identical system, and re-emission is byte-exact.
std::string equation_text(const EquationSystem& system);
EquationSystem parse_equation_text(const std::string& text);

/// Structured JSON: {"d": .., "indeterminate": "x", "relations": [..]} with
/// each relation {"var": "y", "d": 3, "scalar": "1", "factors": [..]} and
/// factors either {"root": "0", "exp": 1} or {"coeffs": ["-1", .., "1"], "exp": 1}
/// (coefficients lowest degree first).
OrderedJson equation_to_json(const EquationSystem& system);
std::string equation_to_json_text(const EquationSystem& system);
EquationSystem equation_from_json(const OrderedJson& document);
EquationSystem equation_from_json_text(const std::string& text);

/// Display-only rendering with superscript exponents; not a round-trip format.
std::string display_equation_text(const EquationSystem& system);

/// "(1,2,0,0)"
std::string exponent_vector_text(const ExponentVector& v);

/// Lenient comma-separated parsing for command-line values.
std::vector<int> parse_int_list(const std::string& text);
std::vector<BigRational> parse_rational_list(const std::string& text);

} // namespace cycov
