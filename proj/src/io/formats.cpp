#include "hoops/formats.hpp"

#include "hoops/error.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <fstream>
#include <sstream>

namespace hoops::io {

using nlohmann::json;

namespace {

json parse_json(const std::string& text, const char* what)
{
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed ") + what + ": " + e.what());
  }
}

const json& field(const json& j, const char* key, const char* what)
{
  if (!j.is_object() || !j.contains(key))
    throw InputError(std::string(what) + " is missing \"" + key + "\"");
  return j.at(key);
}

template <class T>
T get_as(const json& j, const char* what)
{
  try {
    return j.get<T>();
  } catch (const json::exception&) {
    throw InputError(std::string("bad value for ") + what + ": " + j.dump());
  }
}

geom::Rational coordinate(const json& j)
{
  if (j.is_string())
    return geom::parse_rational(j.get<std::string>());
  if (j.is_number_integer())
    return geom::Rational(j.get<long>());
  throw InputError("coordinates must be \"p/q\" strings or integers, got " + j.dump());
}

geom::Point point_of(const json& j, int dim)
{
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    throw InputError("expected a point with " + std::to_string(dim) + " coordinates, got " + j.dump());
  std::vector<geom::Rational> c;
  for (const auto& x : j)
    c.push_back(coordinate(x));
  return geom::Point(std::move(c));
}

json json_of(const geom::Point& p)
{
  json out = json::array();
  for (const auto& c : p.coords())
    out.push_back(geom::format_rational(c));
  return out;
}

json json_of_loop(const geom::PolyLoop& loop)
{
  json v = json::array();
  for (const auto& p : loop.vertices())
    v.push_back(json_of(p));
  return {{"dim", loop.dim()}, {"basepoint", json_of(loop.basepoint())}, {"vertices", v}};
}

geom::PolyLoop loop_of(const json& j)
{
  const int dim = get_as<int>(field(j, "dim", "loop"), "dim");
  if (dim < 2)
    throw InputError("loop dimension must be at least 2");
  const geom::Point base = point_of(field(j, "basepoint", "loop"), dim);
  const json& vs = field(j, "vertices", "loop");
  if (!vs.is_array() || vs.empty())
    throw InputError("loop vertices must be a non-empty array");
  std::vector<geom::Point> v;
  for (const auto& p : vs)
    v.push_back(point_of(p, dim));
  return geom::PolyLoop(base, std::move(v));
}

json json_of(const gauge::Matrix& m)
{
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) {
      const auto z = m(r, c);
      if (z.imag() == 0.0)
        row.push_back(z.real());
      else
        row.push_back(json::array({z.real(), z.imag()}));
    }
    rows.push_back(row);
  }
  return rows;
}

gauge::Matrix matrix_of(const json& j, int n)
{
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw InputError("expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix, got " + j.dump());
  gauge::Matrix m(n, n);
  for (int r = 0; r < n; ++r) {
    const json& row = j[r];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      throw InputError("bad matrix row " + row.dump());
    for (int c = 0; c < n; ++c) {
      const json& z = row[c];
      if (z.is_number())
        m(r, c) = {z.get<double>(), 0.0};
      else if (z.is_array() && z.size() == 2 && z[0].is_number() && z[1].is_number())
        m(r, c) = {z[0].get<double>(), z[1].get<double>()};
      else
        throw InputError("matrix entries must be numbers or [re, im], got " + z.dump());
    }
  }
  return m;
}

json json_of_connection(const gauge::Connection& a)
{
  json terms = json::array();
  for (const auto& t : a.terms())
    terms.push_back({{"center", t.center}, {"radius", t.radius}, {"axis", t.axis}, {"coeff_matrix", json_of(t.coefficient)}});
  return {{"group", gauge::to_string(a.spec().name())}, {"dim", a.dim()}, {"terms", terms}};
}

std::string dump(const json& j)
{
  return j.dump(2) + "\n";
}

} // namespace

std::string read_file(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text)
{
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text))
    throw InputError("cannot write " + path);
}

geom::PolyLoop parse_loop(const std::string& text)
{
  return loop_of(parse_json(text, "loop"));
}

std::string format_loop(const geom::PolyLoop& loop)
{
  return dump(json_of_loop(loop));
}

words::Word parse_word(const std::string& text)
{
  const json j = parse_json(text, "word");
  if (!j.is_array())
    throw InputError("a word is a JSON array of nonzero integers");
  std::vector<int> v;
  for (const auto& x : j) {
    if (!x.is_number_integer() || x.get<long>() == 0 || std::abs(x.get<long>()) > 1000000)
      throw InputError("bad word letter " + x.dump());
    v.push_back(x.get<int>());
  }
  return words::Word::from_signed(v);
}

std::string format_word(const words::Word& w)
{
  return w.to_signed_string();
}

gauge::Connection parse_connection(const std::string& text)
{
  json j = parse_json(text, "connection");
  if (j.is_object() && j.contains("connection"))
    j = j.at("connection");
  std::string group = get_as<std::string>(field(j, "group", "connection"), "group");
  gauge::LieGroupSpec spec = [&] {
    try {
      return gauge::LieGroupSpec::make(gauge::parse_group_name(group));
    } catch (const Error&) {
      throw InputError("unknown group '" + group + "'");
    }
  }();
  const int dim = get_as<int>(field(j, "dim", "connection"), "dim");
  if (dim < 1)
    throw InputError("connection dimension must be positive");
  gauge::Connection a(spec, dim);
  const json& terms = field(j, "terms", "connection");
  if (!terms.is_array())
    throw InputError("connection terms must be an array");
  for (const auto& t : terms) {
    gauge::BumpTerm term;
    term.center = get_as<std::vector<double>>(field(t, "center", "term"), "center");
    term.radius = get_as<double>(field(t, "radius", "term"), "radius");
    term.axis = get_as<int>(field(t, "axis", "term"), "axis");
    term.coefficient = matrix_of(field(t, "coeff_matrix", "term"), static_cast<int>(spec.identity().rows()));
    a.add_term(std::move(term));
  }
  return a;
}

std::string format_connection(const gauge::Connection& a)
{
  return dump(json_of_connection(a));
}

std::string format_matrix(const gauge::Matrix& m)
{
  std::string out;
  for (int r = 0; r < m.rows(); ++r) {
    out += "[";
    for (int c = 0; c < m.cols(); ++c) {
      const auto z = m(r, c);
      out += c ? ", " : "";
      out += fmt::format("{:.12f}", z.real() == 0.0 ? 0.0 : z.real());
      if (z.imag() != 0.0)
        out += fmt::format("{:+.12f}i", z.imag());
    }
    out += "]\n";
  }
  return out;
}

DecompositionRecord record_of(const geom::Decomposition& dec)
{
  DecompositionRecord rec;
  rec.basepoint = dec.basepoint;
  rec.word = dec.word;
  for (const auto& g : dec.generators)
    rec.generators.push_back({g.index, g.loop, g.marked_start, g.marked_end, g.midpoint, g.clearance});
  return rec;
}

std::string format_decomposition(const DecompositionRecord& rec)
{
  json gens = json::array();
  for (const auto& g : rec.generators)
    gens.push_back({{"index", g.index},
                    {"loop", json_of_loop(g.loop)},
                    {"marked_segment", json::array({json_of(g.marked_start), json_of(g.marked_end)})},
                    {"midpoint", json_of(g.midpoint)},
                    {"clearance", g.clearance}});
  return dump({{"basepoint", json_of(rec.basepoint)}, {"word", rec.word.to_signed()}, {"generators", gens}});
}

DecompositionRecord parse_decomposition(const std::string& text)
{
  const json j = parse_json(text, "decomposition");
  DecompositionRecord rec;
  const json& base = field(j, "basepoint", "decomposition");
  rec.basepoint = point_of(base, static_cast<int>(base.size()));
  rec.word = parse_word(field(j, "word", "decomposition").dump());
  for (const auto& g : field(j, "generators", "decomposition")) {
    DecompositionRecord::Entry e;
    e.index = get_as<int>(field(g, "index", "generator"), "index");
    e.loop = loop_of(field(g, "loop", "generator"));
    const json& seg = field(g, "marked_segment", "generator");
    if (!seg.is_array() || seg.size() != 2)
      throw InputError("marked_segment needs two points");
    e.marked_start = point_of(seg[0], rec.basepoint.dim());
    e.marked_end = point_of(seg[1], rec.basepoint.dim());
    e.midpoint = point_of(field(g, "midpoint", "generator"), rec.basepoint.dim());
    e.clearance = get_as<double>(field(g, "clearance", "generator"), "clearance");
    rec.generators.push_back(std::move(e));
  }
  return rec;
}

std::string format_witness(const synth::FalsifyResult& result)
{
  json j;
  j["verdict"] = synth::to_string(result.verdict);
  j["word"] = result.decomposition.word.to_signed();
  if (result.synthesis) {
    j["connection"] = json_of_connection(result.synthesis->connection);
    json prov = json::array();
    for (const auto& p : result.synthesis->provenance)
      prov.push_back({{"generator", p.generator},
                      {"target", json_of(p.target)},
                      {"terms", p.terms},
                      {"achieved_distance", p.achieved_distance}});
    j["provenance"] = prov;
  }
  json targets = json::array();
  for (const auto& t : result.targets)
    targets.push_back(json_of(t));
  j["targets"] = targets;
  if (result.word_value.size() > 0)
    j["word_value"] = json_of(result.word_value);
  if (result.holonomy) {
    j["holonomy"] = json_of(result.holonomy->matrix);
    j["holonomy_error"] = result.holonomy->error;
  }
  j["distance_from_identity"] = result.distance_from_identity;
  return dump(j);
}

pathology::GraphCurve parse_graph_curve(const std::string& text)
{
  const json j = parse_json(text, "graph curve");
  if (!j.is_object())
    throw InputError("a graph curve is a JSON object");
  const double t_end = j.contains("t_end") ? get_as<double>(j.at("t_end"), "t_end") : 1.0;
  std::vector<pathology::BumpAtom> atoms;
  if (j.contains("atoms"))
    for (const auto& a : j.at("atoms"))
      atoms.push_back({get_as<int>(field(a, "level", "atom"), "level"),
                       a.contains("sign") ? get_as<int>(a.at("sign"), "sign") : 1,
                       get_as<double>(field(a, "scale", "atom"), "scale")});
  std::vector<pathology::MollifierFactor> factors;
  if (j.contains("mollifiers"))
    for (const auto& m : j.at("mollifiers"))
      factors.push_back({get_as<double>(field(m, "point", "mollifier"), "point"),
                         get_as<double>(field(m, "width", "mollifier"), "width")});
  return pathology::GraphCurve(t_end, std::move(atoms), std::move(factors));
}

std::string format_graph_curve(const pathology::GraphCurve& curve)
{
  json atoms = json::array(), mollifiers = json::array();
  for (const auto& a : curve.atoms())
    atoms.push_back({{"level", a.level}, {"sign", a.sign}, {"scale", a.scale}});
  for (const auto& m : curve.factors())
    mollifiers.push_back({{"point", m.point}, {"width", m.width}});
  return dump({{"t_end", curve.t_end()}, {"atoms", atoms}, {"mollifiers", mollifiers}});
}

std::string curves_csv(const std::vector<pathology::GraphCurve>& curves, int order, int samples)
{
  if (curves.empty() || samples < 2)
    throw PreconditionError("curves_csv needs curves and at least 2 samples");
  std::string out = "x";
  for (std::size_t i = 0; i < curves.size(); ++i)
    for (int n = 0; n <= order; ++n)
      out += fmt::format(",c{}_d{}", i + 1, n);
  out += "\n";
  const double t_end = curves.front().t_end();
  for (int s = 0; s < samples; ++s) {
    const double x = t_end * s / (samples - 1);
    out += fmt::format("{:.17g}", x);
    for (const auto& c : curves)
      for (double v : c.jet(x, order))
        out += fmt::format(",{:.17g}", v);
    out += "\n";
  }
  return out;
}

} // namespace hoops::io
