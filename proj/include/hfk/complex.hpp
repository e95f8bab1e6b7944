#pragma once

// Combinatorial model of a knot Floer complex over F2[U].
//
// A generator x sits at the filtration origin with Maslov grading M(x) and
// Alexander grading A(x); the triple [x,i,j] of the full complex is U^{-i} x,
// with j - i = A(x). An arrow x -> y with power n encodes the term U^n y in dx:
// its i-drop is n and its j-drop is n + A(x) - A(y). Homogeneity forces
// n = (M(y) - M(x) + 1) / 2.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hfk/errors.hpp"
#include "hfk/rational.hpp"

namespace hfk {

enum class ComplexKind { knot, acyclic, raw };

inline const char* kind_name(ComplexKind k)
{
  switch (k) {
    case ComplexKind::knot: return "knot";
    case ComplexKind::acyclic: return "acyclic";
    case ComplexKind::raw: return "raw";
  }
  return "raw";
}

struct Generator {
  std::string id;
  Rational maslov;
  Rational alexander;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Endpoints are indices into the owning complex's generator list.
struct Arrow {
  std::size_t from = 0;
  std::size_t to = 0;
  std::int64_t upower = 0;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// The power forced by homogeneity; not necessarily a nonnegative integer.
inline Rational forced_upower(const Generator& from, const Generator& to)
{
  return (to.maslov - from.maslov + 1) / 2;
}

class KnotComplex {
 public:
  KnotComplex() = default;

  /// Arrow endpoints index into `gens` as given; generators are sorted into
  /// canonical (A, M, id) order and arrows into (from, to) order.
  KnotComplex(std::vector<Generator> gens, std::vector<Arrow> arrows, ComplexKind kind)
      : kind_(kind)
  {
    std::vector<std::size_t> order(gens.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return std::tie(gens[a].alexander, gens[a].maslov, gens[a].id) <
             std::tie(gens[b].alexander, gens[b].maslov, gens[b].id);
    });
    std::vector<std::size_t> where(gens.size());
    generators_.reserve(gens.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
      where[order[k]] = k;
      generators_.push_back(std::move(gens[order[k]]));
    }
    arrows_.reserve(arrows.size());
    for (const Arrow& a : arrows) {
      if (a.from >= where.size() || a.to >= where.size())
        throw error(errc::invalid_argument, "arrow endpoint out of range");
      arrows_.push_back({where[a.from], where[a.to], a.upower});
    }
    std::sort(arrows_.begin(), arrows_.end(), [](const Arrow& a, const Arrow& b) {
      return std::tie(a.from, a.to, a.upower) < std::tie(b.from, b.to, b.upower);
    });
    for (std::size_t i = 0; i < generators_.size(); ++i) index_.emplace(generators_[i].id, i);
  }

  /// Builds a complex from id pairs, deriving every arrow power from the
  /// gradings. Throws validation_error on unknown ids or powers that are not
  /// nonnegative integers.
  static KnotComplex build(std::vector<Generator> gens,
                           const std::vector<std::pair<std::string, std::string>>& arrows,
                           ComplexKind kind)
  {
    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < gens.size(); ++i) idx.emplace(gens[i].id, i);
    std::vector<Arrow> out;
    out.reserve(arrows.size());
    for (const auto& [from, to] : arrows) {
      auto f = idx.find(from);
      auto t = idx.find(to);
      if (f == idx.end() || t == idx.end())
        throw error(errc::validation_error, "arrow " + from + "->" + to + " references an unknown generator");
      Rational n = forced_upower(gens[f->second], gens[t->second]);
      if (!is_integer(n) || n < 0)
        throw error(errc::validation_error, "arrow " + from + "->" + to + " forces upower " + to_string(n) +
                                                ", not a nonnegative integer");
      out.push_back({f->second, t->second, n.numerator()});
    }
    return KnotComplex(std::move(gens), std::move(out), kind);
  }

  const std::vector<Generator>& generators() const { return generators_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  ComplexKind kind() const { return kind_; }
  std::size_t size() const { return generators_.size(); }
  bool empty() const { return generators_.empty(); }

  const Generator& generator(std::size_t i) const { return generators_.at(i); }

  std::optional<std::size_t> index_of(const std::string& id) const
  {
    auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// Common fractional part of the Alexander gradings (0 for the empty complex).
  Rational coset() const { return generators_.empty() ? Rational(0) : frac(generators_.front().alexander); }

  Rational max_alexander() const
  {
    Rational m = generators_.empty() ? Rational(0) : generators_.front().alexander;
    for (const auto& g : generators_) m = std::max(m, g.alexander);
    return m;
  }

  Rational min_alexander() const
  {
    Rational m = generators_.empty() ? Rational(0) : generators_.front().alexander;
    for (const auto& g : generators_) m = std::min(m, g.alexander);
    return m;
  }

  /// n + A(from) - A(to).
  Rational j_drop(const Arrow& a) const
  {
    return Rational(a.upower) + generators_[a.from].alexander - generators_[a.to].alexander;
  }

  KnotComplex with_kind(ComplexKind kind) const
  {
    KnotComplex c = *this;
    c.kind_ = kind;
    return c;
  }

  friend bool operator==(const KnotComplex& a, const KnotComplex& b)
  {
    return a.kind_ == b.kind_ && a.generators_ == b.generators_ && a.arrows_ == b.arrows_;
  }

 private:
  std::vector<Generator> generators_;
  std::vector<Arrow> arrows_;
  ComplexKind kind_ = ComplexKind::raw;
  std::map<std::string, std::size_t> index_;
};

struct SpinCStructure {
  std::string label;
  std::string conj;
  std::string pdk;

  friend bool operator==(const SpinCStructure&, const SpinCStructure&) = default;
};

/// Floer data of a knot (Y, K): one complex per Spin^c structure of Y, with
/// conjugation J and the shift s -> s + PD[K].
struct KnotComplexFamily {
  std::string name;
  std::vector<SpinCStructure> spinc;
  std::map<std::string, KnotComplex> complexes;
  std::optional<Rational> claimed_genus;

  const KnotComplex& at(const std::string& label) const
  {
    auto it = complexes.find(label);
    if (it == complexes.end()) throw error(errc::invalid_argument, "no complex for label '" + label + "'");
    return it->second;
  }

  const SpinCStructure& structure(const std::string& label) const
  {
    for (const auto& s : spinc)
      if (s.label == label) return s;
    throw error(errc::invalid_argument, "unknown Spin^c label '" + label + "'");
  }

  std::vector<std::string> labels() const
  {
    std::vector<std::string> out;
    for (const auto& s : spinc) out.push_back(s.label);
    return out;
  }

  std::string conj(const std::string& label) const { return structure(label).conj; }
  std::string pdk(const std::string& label) const { return structure(label).pdk; }

  std::string pdk_inverse(const std::string& label) const
  {
    for (const auto& s : spinc)
      if (s.pdk == label) return s.label;
    throw error(errc::invalid_argument, "pdk has no preimage of '" + label + "'");
  }

  /// Sorts the Spin^c list by label.
  void canonicalize()
  {
    std::sort(spinc.begin(), spinc.end(),
              [](const SpinCStructure& a, const SpinCStructure& b) { return a.label < b.label; });
  }

  friend bool operator==(const KnotComplexFamily&, const KnotComplexFamily&) = default;
};

/// One-label family with trivial J and PD[K] (a knot in an integer homology sphere).
inline KnotComplexFamily single_label_family(std::string name, KnotComplex c,
                                             std::optional<Rational> claimed_genus = std::nullopt)
{
  KnotComplexFamily f;
  f.name = std::move(name);
  f.spinc.push_back({"0", "0", "0"});
  f.complexes.emplace("0", std::move(c));
  f.claimed_genus = claimed_genus;
  return f;
}

// ---------------------------------------------------------------------------
// Structural operations. All are pure and return canonical complexes.

inline KnotComplex shift(const KnotComplex& c, const Rational& dM, const Rational& dA)
{
  std::vector<Generator> gens = c.generators();
  for (auto& g : gens) {
    g.maslov += dM;
    g.alexander += dA;
  }
  return KnotComplex(std::move(gens), c.arrows(), c.kind());
}

/// Prepends `prefix` to every generator id.
inline KnotComplex relabel(const KnotComplex& c, const std::string& prefix)
{
  std::vector<Generator> gens = c.generators();
  for (auto& g : gens) g.id = prefix + g.id;
  return KnotComplex(std::move(gens), c.arrows(), c.kind());
}

namespace detail {

inline bool maslov_compatible(const KnotComplex& a, const KnotComplex& b)
{
  if (a.empty() || b.empty()) return true;
  return is_integer(a.generators().front().maslov - b.generators().front().maslov);
}

}  // namespace detail

/// Disjoint union. Without an explicit kind: knot (+) acyclic is knot,
/// acyclic (+) acyclic is acyclic, anything else is raw.
inline KnotComplex direct_sum(const KnotComplex& c1, const KnotComplex& c2,
                              std::optional<ComplexKind> kind = std::nullopt)
{
  if (!c1.empty() && !c2.empty() && c1.coset() != c2.coset())
    throw error(errc::coset_mismatch, "Alexander cosets " + to_string(c1.coset()) + " and " +
                                          to_string(c2.coset()) + " differ");
  if (!detail::maslov_compatible(c1, c2))
    throw error(errc::coset_mismatch, "Maslov gradings of the summands differ by a non-integer");
  for (const auto& g : c2.generators())
    if (c1.index_of(g.id)) throw error(errc::invalid_argument, "generator id '" + g.id + "' occurs in both summands");

  std::vector<Generator> gens = c1.generators();
  gens.insert(gens.end(), c2.generators().begin(), c2.generators().end());
  std::vector<Arrow> arrows = c1.arrows();
  const std::size_t off = c1.size();
  for (const Arrow& a : c2.arrows()) arrows.push_back({a.from + off, a.to + off, a.upower});

  ComplexKind k = ComplexKind::raw;
  if (kind) {
    k = *kind;
  } else {
    auto k1 = c1.kind(), k2 = c2.kind();
    if (k1 == ComplexKind::acyclic && k2 == ComplexKind::acyclic)
      k = ComplexKind::acyclic;
    else if ((k1 == ComplexKind::knot && k2 == ComplexKind::acyclic) ||
             (k1 == ComplexKind::acyclic && k2 == ComplexKind::knot))
      k = ComplexKind::knot;
  }
  return KnotComplex(std::move(gens), std::move(arrows), k);
}

/// Exchanges the roles of i and j: (M, A) -> (M - 2A, -A) and each arrow's
/// power becomes its former j-drop.
inline KnotComplex flip(const KnotComplex& c)
{
  std::vector<Generator> gens = c.generators();
  for (auto& g : gens) {
    g.maslov -= 2 * g.alexander;
    g.alexander = -g.alexander;
  }
  std::vector<Arrow> arrows;
  arrows.reserve(c.arrows().size());
  for (const Arrow& a : c.arrows()) {
    Rational jd = c.j_drop(a);
    if (!is_integer(jd)) throw error(errc::invalid_argument, "flip of a complex with non-integral j-drop");
    arrows.push_back({a.from, a.to, jd.numerator()});
  }
  return KnotComplex(std::move(gens), std::move(arrows), c.kind());
}

/// Filtered change of basis x -> x + U^k y. Requires M(x) = M(y) - 2k and
/// A(y) - k <= A(x).
inline KnotComplex basis_change(const KnotComplex& c, const std::string& x_id, const std::string& y_id,
                                std::int64_t k)
{
  auto xi = c.index_of(x_id);
  auto yi = c.index_of(y_id);
  if (!xi || !yi) throw error(errc::illegal_basis_change, "unknown generator in basis change");
  if (*xi == *yi) throw error(errc::illegal_basis_change, "basis change needs two distinct generators");
  if (k < 0) throw error(errc::illegal_basis_change, "negative power in basis change");
  const Generator& x = c.generator(*xi);
  const Generator& y = c.generator(*yi);
  if (x.maslov != y.maslov - 2 * k)
    throw error(errc::illegal_basis_change, "M(" + x_id + ")=" + to_string(x.maslov) + " but M(" + y_id +
                                                ")-2k=" + to_string(y.maslov - 2 * k));
  if (y.alexander - k > x.alexander)
    throw error(errc::illegal_basis_change, "x + U^k y would not be filtered");

  // Arrows as a toggle set keyed on (from, to).
  std::map<std::pair<std::size_t, std::size_t>, std::int64_t> arrows;
  auto toggle = [&](std::size_t f, std::size_t t, std::int64_t n) {
    auto key = std::make_pair(f, t);
    auto it = arrows.find(key);
    if (it == arrows.end())
      arrows.emplace(key, n);
    else
      arrows.erase(it);
  };
  for (const Arrow& a : c.arrows()) arrows.emplace(std::make_pair(a.from, a.to), a.upower);

  // d(x') = dx + U^k dy; each w with U^t x in dw gains U^{t+k} y.
  std::vector<std::pair<std::size_t, std::int64_t>> out_y, in_x;
  for (const Arrow& a : c.arrows()) {
    if (a.from == *yi) out_y.emplace_back(a.to, a.upower);
    if (a.to == *xi) in_x.emplace_back(a.from, a.upower);
  }
  for (auto [z, n] : out_y) toggle(*xi, z, n + k);
  for (auto [w, t] : in_x) toggle(w, *yi, t + k);

  std::vector<Arrow> out;
  out.reserve(arrows.size());
  for (const auto& [key, n] : arrows) out.push_back({key.first, key.second, n});
  return KnotComplex(c.generators(), std::move(out), c.kind());
}

}  // namespace hfk
