#pragma once

#include <boost/rational.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace claimlogic::logic {

/// Exact rational number. All numeric values in the engine (policy months,
/// ages, lab levels, accuracies) are rationals so that values such as 6.5
/// compare against integer thresholds without rounding.
using Rational = boost::rational<long long>;

/// Parses a decimal literal ("12", "6.5", "-0.125") into an exact rational.
/// Returns nullopt for anything that is not a plain decimal number.
std::optional<Rational> parse_decimal(std::string_view text);

/// True when r has a finite decimal expansion (denominator of form 2^a*5^b).
bool has_finite_decimal(const Rational& r);

/// Exact decimal rendering. Precondition: has_finite_decimal(r).
/// The result re-parses to the same rational.
std::string decimal_string(const Rational& r);

/// Rendering for diagnostics and answer display: exact decimal when finite,
/// "n/d" otherwise. Not guaranteed to re-parse as a source literal.
std::string display_string(const Rational& r);

double to_double(const Rational& r);

}  // namespace claimlogic::logic
