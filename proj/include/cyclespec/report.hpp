#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "cyclespec/families.hpp"
#include "cyclespec/graph.hpp"
#include "cyclespec/search.hpp"
#include "cyclespec/spectral.hpp"
#include "cyclespec/verify.hpp"

namespace cyclespec {

using Json = nlohmann::ordered_json;

// Largest order for which analyze reports cycle fields.
inline constexpr int kAnalyzeCycleMax = 24;

// x rounded to 12 significant digits (printf %.12g, ties to even on the
// binary value), as a JSON number; non-finite values become null.
Json json_real(double x);
// "%.12g" text of x.
std::string format_real(double x);

// Rationals as integers when whole, otherwise "p/q" strings.
Json json_rational(const Rational& r);

// Verdict document. stats.seconds is null unless `timing` is set, so that
// repeated runs serialize byte-identically.
Json verdict_json(const Verdict& v, bool timing = false);

// CSV projection: claim,n,k,status,checked,seconds.
std::string verdict_csv_header();
std::string verdict_csv_row(const Verdict& v, bool timing = false);

// Structural, cycle, spectral, closure and family fields of g.
Json analyze_json(const Graph& g, double tol = kDefaultTol);

Json search_json(const SearchState& s);

// Serialized text with a trailing newline.
std::string dump(const Json& j);

}  // namespace cyclespec
