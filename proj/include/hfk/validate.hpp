#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "hfk/complex.hpp"
#include "hfk/homology.hpp"

namespace hfk {

struct Violation {
  std::string where;    // label / generator / arrow
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }

  bool mentions(const std::string& fragment) const
  {
    for (const auto& v : violations)
      if (v.where.find(fragment) != std::string::npos || v.message.find(fragment) != std::string::npos) return true;
    return false;
  }

  std::string to_string() const
  {
    std::string s;
    for (const auto& v : violations) s += v.where + ": " + v.message + "\n";
    return s;
  }
};

namespace detail {

inline std::string arrow_name(const KnotComplex& c, const Arrow& a)
{
  return c.generator(a.from).id + "->" + c.generator(a.to).id;
}

inline void validate_into(const KnotComplex& c, const std::string& where, ValidationReport& report)
{
  auto add = [&](const std::string& w, const std::string& m) { report.violations.push_back({where + w, m}); };
  const std::size_t before = report.violations.size();

  std::set<std::string> ids;
  for (const auto& g : c.generators())
    if (!ids.insert(g.id).second) add(" generator " + g.id, "duplicate generator id");

  if (c.empty() && c.kind() != ComplexKind::acyclic) add("", "empty complex must have kind acyclic");

  if (!c.empty()) {
    const Rational coset = c.coset();
    const Rational m0 = c.generators().front().maslov;
    for (const auto& g : c.generators()) {
      if (frac(g.alexander) != coset)
        add(" generator " + g.id, "Alexander grading " + to_string(g.alexander) + " outside coset " +
                                      to_string(coset) + " + Z");
      if (!is_integer(g.maslov - m0))
        add(" generator " + g.id, "Maslov grading " + to_string(g.maslov) + " not in the common coset");
    }
  }

  std::set<std::pair<std::size_t, std::size_t>> seen;
  bool arrows_ok = true;
  for (const Arrow& a : c.arrows()) {
    const std::string name = " arrow " + arrow_name(c, a);
    if (a.from == a.to) {
      add(name, "self-arrow");
      arrows_ok = false;
      continue;
    }
    if (!seen.insert({a.from, a.to}).second) {
      add(name, "more than one arrow between the same ordered pair");
      arrows_ok = false;
    }
    Rational forced = forced_upower(c.generator(a.from), c.generator(a.to));
    if (Rational(a.upower) != forced) {
      add(name, "upower " + std::to_string(a.upower) + " \xE2\x89\xA0 (M(to)\xE2\x88\x92M(from)+1)/2 = " +
                    to_string(forced));
      arrows_ok = false;
    }
    if (a.upower < 0) {
      add(name, "negative upower");
      arrows_ok = false;
    }
    if (c.j_drop(a) < 0) {
      add(name, "negative j-drop " + to_string(c.j_drop(a)) + " (Alexander filtration not respected)");
      arrows_ok = false;
    }
  }

  // d^2 = 0: every ordered pair is joined by an even number of 2-paths.
  std::vector<std::vector<std::size_t>> out(c.size());
  for (const Arrow& a : c.arrows()) out[a.from].push_back(a.to);
  for (std::size_t x = 0; x < c.size(); ++x) {
    std::map<std::size_t, int> paths;
    for (auto y : out[x])
      for (auto z : out[y]) paths[z] ^= 1;
    for (auto [z, odd] : paths)
      if (odd)
        add(" pair " + c.generator(x).id + "," + c.generator(z).id,
            "d^2 != 0: odd number of length-2 paths");
  }

  // Kind checks only make sense on structurally sound complexes.
  if (!arrows_ok || report.violations.size() != before) return;
  const std::size_t rank = localized_rank(forget_alexander(c));
  if (c.kind() == ComplexKind::knot && rank != 1)
    add("", "kind=knot but localized homology rank is " + std::to_string(rank));
  if (c.kind() == ComplexKind::acyclic && rank != 0)
    add("", "kind=acyclic but localized homology rank is " + std::to_string(rank));
}

}  // namespace detail

inline ValidationReport validate(const KnotComplex& c)
{
  ValidationReport r;
  detail::validate_into(c, "complex", r);
  return r;
}

inline ValidationReport validate(const KnotComplexFamily& f)
{
  ValidationReport r;
  auto add = [&](const std::string& w, const std::string& m) { r.violations.push_back({w, m}); };

  std::set<std::string> labels;
  for (const auto& s : f.spinc)
    if (!labels.insert(s.label).second) add("spinc " + s.label, "duplicate Spin^c label");
  if (f.spinc.empty()) add("family", "no Spin^c structures");

  std::map<std::string, std::string> conj, pdk;
  for (const auto& s : f.spinc) {
    conj[s.label] = s.conj;
    pdk[s.label] = s.pdk;
    if (!labels.count(s.conj)) add("spinc " + s.label, "conj target '" + s.conj + "' is not a label");
    if (!labels.count(s.pdk)) add("spinc " + s.label, "pdk target '" + s.pdk + "' is not a label");
    if (!f.complexes.count(s.label)) add("spinc " + s.label, "no complex for label");
  }
  for (const auto& [label, c] : f.complexes)
    if (!labels.count(label)) add("complexes " + label, "complex for an unlisted label");
  const bool labels_ok = r.ok();

  if (labels_ok) {
    for (const auto& s : f.spinc)
      if (conj[s.conj] != s.label) add("spinc " + s.label, "conj not involutive");
    std::set<std::string> images;
    for (const auto& s : f.spinc) images.insert(s.pdk);
    if (images.size() != labels.size()) add("family", "pdk is not a permutation");
  }

  if (r.ok()) {
    std::map<std::string, std::string> pdk_inv;
    for (const auto& [l, t] : pdk) pdk_inv[t] = l;
    for (const auto& s : f.spinc)
      if (conj[pdk[s.label]] != pdk_inv[conj[s.label]])
        add("spinc " + s.label, "conj(pdk(s)) != pdk^-1(conj(s))");
  }

  for (const auto& [label, c] : f.complexes) detail::validate_into(c, "label " + label, r);
  return r;
}

}  // namespace hfk
