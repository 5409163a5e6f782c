#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "ternary/form.hpp"
#include "ternary/genus.hpp"
#include "ternary/qseries.hpp"
#include "ternary/verify.hpp"

namespace ternary {

using Json = nlohmann::ordered_json;

/// {"trunc": N, "coeffs": [c0, ..., cN]}.
Json toJson(const QSeries& s);
QSeries seriesFromJson(const Json& j);

/// [a, b, c, d, e, f].
Json toJson(const TernaryForm& f);
TernaryForm formFromJson(const Json& j);

/// {discriminant, members, autCounts, weights48}.
Json toJson(const Genus& g);

/// Elapsed time is included only when `timing` is set, so default output is
/// reproducible byte for byte.
Json toJson(const VerificationReport& r, bool timing);

enum class Format { Json, Table, Csv };
Format parseFormat(const std::string& name);

/// One JSON object per line, an aligned table with a summary line, or CSV with a header.
void writeReports(std::ostream& os, const std::vector<VerificationReport>& reports, Format format, bool timing);

}  // namespace ternary
