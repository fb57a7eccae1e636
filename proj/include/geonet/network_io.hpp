#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "geonet/network.hpp"

namespace geonet {

/// Version tag of the network file format.
inline constexpr const char* kNetworkFormat = "geonet/1";

// File layout:
//   {"version": "geonet/1",
//    "vertices": [{"angle": <radians>, "tan_half": <exact>, "m": <int>}, ...],
//    "edges":    [{"i": <int>, "j": <int>, "m": <int>}, ...]}
// where <exact> is one of
//   [p, q]                  rational tan(angle / 2) = p / q
//   "inf"                   the point at angle pi
//   null                    float-only point
//   {"surd": [[s, p, q], ...]}  sum of p/q * sqrt(s), for points whose
//                           parameter is not rational
// Integers that do not fit in 64 bits are written as decimal strings.

nlohmann::json network_to_json(const Network& net);
/// Throws ParseError (missing or mistyped fields) or VersionError.
Network network_from_json(const nlohmann::json& doc);

/// Parses text; syntax errors become ParseError with line and column.
Network parse_network(const std::string& text);
Network read_network(const std::string& path);
void write_network(const Network& net, const std::string& path);

nlohmann::json surd_to_json(const Surd& s);
nlohmann::json rational_to_json(const Rational& q);
nlohmann::json integer_to_json(const Integer& z);

}  // namespace geonet
