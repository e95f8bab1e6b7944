#pragma once

// JSON (de)serialization of knot complex families. Arrow powers are never
// read or written; they are recomputed from the gradings.

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "hfk/complex.hpp"
#include "hfk/errors.hpp"
#include "hfk/rational.hpp"
#include "hfk/validate.hpp"

namespace hfk {

using json = nlohmann::ordered_json;

/// A structurally invalid family; the report lists every violation.
class validation_failure : public error {
 public:
  explicit validation_failure(ValidationReport report)
      : error(errc::validation_error, report.to_string()), report_(std::move(report))
  {
  }
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

namespace detail {

inline std::size_t line_of(std::string_view text, std::size_t byte)
{
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

struct FieldReader {
  std::string path;

  [[noreturn]] void fail(const std::string& field, const std::string& msg) const
  {
    throw error(errc::parse_error, "field " + path + "/" + field + ": " + msg);
  }

  const json& member(const json& obj, const std::string& key) const
  {
    if (!obj.is_object()) fail(key, "parent is not an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(key, "missing");
    return *it;
  }

  std::string string(const json& obj, const std::string& key) const
  {
    const json& v = member(obj, key);
    if (!v.is_string()) fail(key, "expected a string");
    return v.get<std::string>();
  }

  Rational rational(const json& obj, const std::string& key) const
  {
    const json& v = member(obj, key);
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    if (!v.is_string()) fail(key, "expected a rational string like \"-1/2\"");
    try {
      return parse_rational(v.get<std::string>());
    } catch (const error& e) {
      fail(key, e.what());
    }
  }

  FieldReader at(const std::string& sub) const { return {path + "/" + sub}; }
};

inline ComplexKind parse_kind(const FieldReader& r, const std::string& s)
{
  if (s == "knot") return ComplexKind::knot;
  if (s == "acyclic") return ComplexKind::acyclic;
  if (s == "raw") return ComplexKind::raw;
  r.fail("kind", "expected knot, acyclic or raw");
}

/// Powers that are not nonnegative integers are recorded as violations and
/// the arrow is dropped, so every problem is reported at once.
inline KnotComplex parse_complex(const json& j, const FieldReader& r, const std::string& label,
                                 ValidationReport& report)
{
  ComplexKind kind = parse_kind(r, r.string(j, "kind"));
  const json& gens_json = r.member(j, "generators");
  if (!gens_json.is_array()) r.fail("generators", "expected an array");
  std::vector<Generator> gens;
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < gens_json.size(); ++i) {
    FieldReader g = r.at("generators/" + std::to_string(i));
    gens.push_back({g.string(gens_json[i], "id"), g.rational(gens_json[i], "m"), g.rational(gens_json[i], "a")});
    idx.emplace(gens.back().id, i);
  }
  std::vector<Arrow> arrows;
  if (j.contains("arrows")) {
    const json& arr = j["arrows"];
    if (!arr.is_array()) r.fail("arrows", "expected an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      FieldReader a = r.at("arrows/" + std::to_string(i));
      std::string from = a.string(arr[i], "from"), to = a.string(arr[i], "to");
      auto f = idx.find(from), t = idx.find(to);
      if (f == idx.end()) a.fail("from", "unknown generator '" + from + "'");
      if (t == idx.end()) a.fail("to", "unknown generator '" + to + "'");
      Rational n = forced_upower(gens[f->second], gens[t->second]);
      if (!is_integer(n) || n < 0) {
        report.violations.push_back({"label " + label + " arrow " + from + "->" + to,
                                     "gradings force upower (M(to)\xE2\x88\x92M(from)+1)/2 = " + to_string(n) +
                                         ", not a nonnegative integer"});
        continue;
      }
      arrows.push_back({f->second, t->second, n.numerator()});
    }
  }
  return KnotComplex(std::move(gens), std::move(arrows), kind);
}

}  // namespace detail

/// Parses and validates. Throws error(parse_error) with a line or field
/// location, or validation_failure carrying the full report.
inline KnotComplexFamily parse_family(std::string_view text)
{
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw error(errc::parse_error, "line " + std::to_string(detail::line_of(text, e.byte)) + ": " + e.what());
  }
  detail::FieldReader root{""};
  KnotComplexFamily f;
  f.name = root.string(j, "name");
  if (j.contains("claimed_genus") && !j["claimed_genus"].is_null()) f.claimed_genus = root.rational(j, "claimed_genus");

  const json& spinc = root.member(j, "spinc");
  if (!spinc.is_array()) root.fail("spinc", "expected an array");
  for (std::size_t i = 0; i < spinc.size(); ++i) {
    detail::FieldReader s = root.at("spinc/" + std::to_string(i));
    f.spinc.push_back({s.string(spinc[i], "label"), s.string(spinc[i], "conj"), s.string(spinc[i], "pdk")});
  }

  ValidationReport report;
  const json& complexes = root.member(j, "complexes");
  if (!complexes.is_object()) root.fail("complexes", "expected an object keyed by label");
  for (auto it = complexes.begin(); it != complexes.end(); ++it)
    f.complexes.emplace(it.key(), detail::parse_complex(it.value(), root.at("complexes/" + it.key()), it.key(), report));
  f.canonicalize();

  ValidationReport structural = validate(f);
  report.violations.insert(report.violations.end(), structural.violations.begin(), structural.violations.end());
  if (!report.ok()) throw validation_failure(std::move(report));
  return f;
}

inline json complex_to_json(const KnotComplex& c)
{
  json gens = json::array();
  for (const auto& g : c.generators())
    gens.push_back({{"id", g.id}, {"m", to_string(g.maslov)}, {"a", to_string(g.alexander)}});
  json arrows = json::array();
  for (const Arrow& a : c.arrows())
    arrows.push_back({{"from", c.generator(a.from).id}, {"to", c.generator(a.to).id}});
  return {{"kind", kind_name(c.kind())}, {"generators", gens}, {"arrows", arrows}};
}

inline json family_to_json(const KnotComplexFamily& f)
{
  json j;
  j["name"] = f.name;
  j["claimed_genus"] = f.claimed_genus ? json(to_string(*f.claimed_genus)) : json(nullptr);
  KnotComplexFamily canon = f;
  canon.canonicalize();
  json spinc = json::array();
  for (const auto& s : canon.spinc) spinc.push_back({{"label", s.label}, {"conj", s.conj}, {"pdk", s.pdk}});
  j["spinc"] = spinc;
  json complexes = json::object();
  for (const auto& [label, c] : canon.complexes) complexes[label] = complex_to_json(c);
  j["complexes"] = complexes;
  return j;
}

/// Canonical text: generators in (A, M, id) order, arrows in (from, to)
/// order, labels sorted, two-space indentation, trailing newline.
inline std::string serialize_family(const KnotComplexFamily& f) { return family_to_json(f).dump(2) + "\n"; }

}  // namespace hfk
