#pragma once

// Connected sums (tensor products over F2[U]) and orientation reversal
// (dualization), for single complexes and for Spin^c families.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "hfk/complex.hpp"

namespace hfk {

/// Generator (g, h) gets id "g*h", gradings add, and the differential obeys
/// the Leibniz rule (no signs over F2).
inline KnotComplex tensor(const KnotComplex& c1, const KnotComplex& c2)
{
  const std::size_t n2 = c2.size();
  std::vector<Generator> gens;
  gens.reserve(c1.size() * n2);
  std::set<std::string> ids;
  for (const auto& g : c1.generators())
    for (const auto& h : c2.generators()) {
      gens.push_back({g.id + "*" + h.id, g.maslov + h.maslov, g.alexander + h.alexander});
      if (!ids.insert(gens.back().id).second)
        throw error(errc::invalid_argument, "tensor product id collision on '" + gens.back().id + "'");
    }
  auto at = [n2](std::size_t i, std::size_t j) { return i * n2 + j; };

  std::vector<Arrow> arrows;
  arrows.reserve(c1.arrows().size() * n2 + c2.arrows().size() * c1.size());
  for (const Arrow& a : c1.arrows())
    for (std::size_t j = 0; j < n2; ++j) arrows.push_back({at(a.from, j), at(a.to, j), a.upower});
  for (std::size_t i = 0; i < c1.size(); ++i)
    for (const Arrow& b : c2.arrows()) arrows.push_back({at(i, b.from), at(i, b.to), b.upower});

  ComplexKind kind = ComplexKind::raw;
  if (c1.kind() == ComplexKind::acyclic || c2.kind() == ComplexKind::acyclic)
    kind = ComplexKind::acyclic;
  else if (c1.kind() == ComplexKind::knot && c2.kind() == ComplexKind::knot)
    kind = ComplexKind::knot;
  return KnotComplex(std::move(gens), std::move(arrows), kind);
}

/// Hom into F2[U, U^-1]: (M, A) -> (-M, -A), arrows reversed with the same power.
inline KnotComplex dual(const KnotComplex& c)
{
  std::vector<Generator> gens = c.generators();
  for (auto& g : gens) {
    g.maslov = -g.maslov;
    g.alexander = -g.alexander;
  }
  std::vector<Arrow> arrows;
  arrows.reserve(c.arrows().size());
  for (const Arrow& a : c.arrows()) arrows.push_back({a.to, a.from, a.upower});
  return KnotComplex(std::move(gens), std::move(arrows), c.kind());
}

/// Labels are "s#t"; J and PD[K] act componentwise.
inline KnotComplexFamily tensor_family(const KnotComplexFamily& f1, const KnotComplexFamily& f2)
{
  KnotComplexFamily out;
  out.name = f1.name + "#" + f2.name;
  auto join = [](const std::string& a, const std::string& b) { return a + "#" + b; };
  for (const auto& s : f1.spinc)
    for (const auto& t : f2.spinc) {
      out.spinc.push_back({join(s.label, t.label), join(s.conj, t.conj), join(s.pdk, t.pdk)});
      auto [it, fresh] = out.complexes.emplace(join(s.label, t.label),
                                               tensor(f1.at(s.label), f2.at(t.label)));
      if (!fresh) throw error(errc::invalid_argument, "tensor family label collision on '" + it->first + "'");
    }
  out.canonicalize();
  return out;
}

/// Models (-Y, -K): label u carries dual(c_{J u}); J is unchanged and the
/// PD[K]-shift is inverted.
inline KnotComplexFamily dual_family(const KnotComplexFamily& f)
{
  KnotComplexFamily out;
  out.name = f.name.rfind("-", 0) == 0 ? f.name.substr(1) : "-" + f.name;
  out.claimed_genus = f.claimed_genus;
  for (const auto& s : f.spinc) {
    out.spinc.push_back({s.label, s.conj, f.pdk_inverse(s.label)});
    out.complexes.emplace(s.label, dual(f.at(s.conj)));
  }
  out.canonicalize();
  return out;
}

}  // namespace hfk
