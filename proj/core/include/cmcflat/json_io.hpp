#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "cmcflat/admissibility.hpp"
#include "cmcflat/lattice.hpp"
#include "cmcflat/parameters.hpp"
#include "cmcflat/periodicity.hpp"
#include "cmcflat/report.hpp"

namespace cmcflat {

using Json = nlohmann::ordered_json;

/// {"h", "mu": [[re, im], ...], "eta", "R", "Rp"}
Json to_json(const MiyataData& d);
/// ParseError on malformed JSON or missing/mistyped fields; no validation.
MiyataData miyata_from_json(std::string_view text);

/// {"checks": [{"name", "residual", "tolerance", "passed"}], "samples"}
Json to_json(const VerificationReport& r);

/// Rounded to 15 significant digits.
double round15(double v);
Json vector_json(const Vec2& v);
Json lattice_json(const Lattice2& lat);

/// {"h": "n/d", "verdict", "witness", "generators"}
Json to_json(const TorusVerdict& v);
Json to_json(const TorusCaseII& c);
Json to_json(const AdmissibilityResult& r);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace cmcflat
