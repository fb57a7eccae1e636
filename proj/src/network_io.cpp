#include "geonet/network_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "geonet/errors.hpp"

namespace geonet {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& what) { throw ParseError(what, 0, 0); }

Integer integer_from_json(const json& j, const char* what) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Integer(j.get<unsigned long>()) : Integer(j.get<long>());
  }
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0) fail(std::string("bad integer in ") + what);
    return z;
  }
  fail(std::string("expected an integer for ") + what);
}

Rational rational_from_pair(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) fail(std::string("expected [num, den] for ") + what);
  Integer num = integer_from_json(j[0], what), den = integer_from_json(j[1], what);
  if (den == 0) fail(std::string("zero denominator in ") + what);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

const json& field(const json& obj, const char* key) {
  if (!obj.is_object()) fail("expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(std::string("missing \"") + key + "\"");
  return *it;
}

Multiplicity multiplicity_from_json(const json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string("expected an integer for ") + what);
  return j.get<Multiplicity>();
}

// Line and column of a byte offset (both 1-based).
std::pair<std::size_t, std::size_t> locate(const std::string& text, std::size_t offset) {
  std::size_t line = 1, column = 1;
  for (std::size_t k = 0; k < offset && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

json integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

json rational_to_json(const Rational& q) {
  return json::array({integer_to_json(q.get_num()), integer_to_json(q.get_den())});
}

json surd_to_json(const Surd& s) {
  if (s.is_rational()) return rational_to_json(s.to_rational());
  json terms = json::array();
  for (const auto& [radicand, q] : s.terms()) {
    terms.push_back(
        {integer_to_json(radicand), integer_to_json(q.get_num()), integer_to_json(q.get_den())});
  }
  return json{{"surd", terms}};
}

json network_to_json(const Network& net) {
  json vertices = json::array();
  for (const auto& v : net.vertices()) {
    json tan_half = nullptr;
    if (v.position.is_exact()) {
      const auto& e = v.position.exact();
      tan_half = e.at_pi() ? json("inf") : surd_to_json(*e.tan_half);
    }
    vertices.push_back({{"angle", v.position.angle()}, {"tan_half", tan_half}, {"m", v.exterior_mult}});
  }
  json edges = json::array();
  for (const auto& e : net.edges()) edges.push_back({{"i", e.i}, {"j", e.j}, {"m", e.mult}});
  return {{"version", kNetworkFormat}, {"vertices", vertices}, {"edges", edges}};
}

Network network_from_json(const json& doc) {
  const json& version = field(doc, "version");
  if (!version.is_string()) fail("\"version\" must be a string");
  if (version.get<std::string>() != kNetworkFormat) {
    throw VersionError("unsupported network format version \"" + version.get<std::string>() + "\"");
  }
  const json& vs = field(doc, "vertices");
  const json& es = field(doc, "edges");
  if (!vs.is_array() || !es.is_array()) fail("\"vertices\" and \"edges\" must be arrays");

  std::vector<Vertex> vertices;
  for (const auto& jv : vs) {
    const json& angle = field(jv, "angle");
    if (!angle.is_number()) fail("\"angle\" must be a number");
    const json& th = jv.contains("tan_half") ? jv.at("tan_half") : json(nullptr);
    Multiplicity m = multiplicity_from_json(field(jv, "m"), "vertex m");
    CirclePoint p = CirclePoint::from_angle(angle.get<double>());
    if (th.is_string()) {
      if (th.get<std::string>() != "inf") fail("tan_half string must be \"inf\"");
      p = CirclePoint::at_pi();
    } else if (th.is_array()) {
      p = CirclePoint::from_tan_half(Surd(rational_from_pair(th, "tan_half")));
    } else if (th.is_object()) {
      const json& terms = field(th, "surd");
      if (!terms.is_array()) fail("\"surd\" must be an array");
      Surd t;
      for (const auto& term : terms) {
        if (!term.is_array() || term.size() != 3) fail("surd term must be [s, p, q]");
        Integer s = integer_from_json(term[0], "surd radicand");
        if (s <= 0) fail("surd radicand must be positive");
        t += Surd::radical(s, rational_from_pair(json::array({term[1], term[2]}), "surd coefficient"));
      }
      p = CirclePoint::from_tan_half(t);
    } else if (!th.is_null()) {
      fail("bad tan_half");
    }
    vertices.push_back({p, m});
  }
  std::vector<InteriorEdge> edges;
  for (const auto& je : es) {
    const json& i = field(je, "i");
    const json& j = field(je, "j");
    if (!i.is_number_unsigned() || !j.is_number_unsigned()) fail("edge endpoints must be nonnegative integers");
    edges.push_back({i.get<std::size_t>(), j.get<std::size_t>(), multiplicity_from_json(field(je, "m"), "edge m")});
  }
  return make_network(std::move(vertices), std::move(edges));
}

Network parse_network(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, column] = locate(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("malformed JSON", line, column);
  }
  return network_from_json(doc);
}

Network read_network(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0, 0);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_network(buffer.str());
}

void write_network(const Network& net, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << network_to_json(net).dump(2) << '\n';
}

}  // namespace geonet
