#pragma once

// Concordance invariants of knot-like complexes: V, H, nu+, the middle
// Alexander grading, tau, and local triviality.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hfk/algebra.hpp"
#include "hfk/complex.hpp"
#include "hfk/errors.hpp"
#include "hfk/homology.hpp"
#include "hfk/rational.hpp"

namespace hfk {

/// The subcomplex {max(i, j - s) <= 0} of the i <= 0 part. Generator x is
/// replaced by U^{m(x)} x with m(x) = max(0, ceil(A(x) - s)).
inline GradedUComplex a_subcomplex(const KnotComplex& c, const Rational& s)
{
  std::vector<std::int64_t> m(c.size());
  std::vector<GradedGenerator> gens;
  gens.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto& g = c.generator(i);
    m[i] = std::max<std::int64_t>(0, ceil(g.alexander - s));
    gens.push_back({g.id, g.maslov - 2 * m[i]});
  }
  std::vector<Arrow> arrows;
  arrows.reserve(c.arrows().size());
  for (const Arrow& a : c.arrows()) {
    std::int64_t n = a.upower + m[a.from] - m[a.to];
    if (n < 0) throw error(errc::invalid_argument, "arrow leaves the A-subcomplex (negative j-drop)");
    arrows.push_back({a.from, a.to, n});
  }
  return GradedUComplex(std::move(gens), std::move(arrows));
}

/// s-values of the coset of `c` lying in [min A - pad, max A + pad].
inline std::vector<Rational> s_window(const KnotComplex& c, std::int64_t pad = 1)
{
  std::vector<Rational> out;
  const Rational coset = c.coset();
  const Rational lo = c.min_alexander() - pad, hi = c.max_alexander() + pad;
  for (Rational s = coset + ceil(lo - coset); s <= hi; s += 1) out.push_back(s);
  return out;
}

/// Memoized V(c, .) for one knot-like complex. Construction checks that the
/// localized rank is 1 and computes d of the whole complex once.
class VFunction {
 public:
  explicit VFunction(KnotComplex c) : c_(std::move(c))
  {
    GradedUComplex whole = forget_alexander(c_);
    std::size_t rank = localized_rank(reduce(whole));
    if (rank != 1)
      throw error(errc::not_knot_like, "localized homology rank is " + std::to_string(rank) + ", expected 1");
    d_ = d_invariant(whole);
  }

  const KnotComplex& complex() const { return c_; }
  const Rational& d() const { return d_; }

  std::int64_t operator()(const Rational& s) const
  {
    auto it = cache_.find(s);
    if (it != cache_.end()) return it->second;
    Rational half = (d_ - d_invariant(a_subcomplex(c_, s))) / 2;
    if (!is_integer(half) || half < 0)
      throw error(errc::non_integer_v, "V at s=" + to_string(s) + " would be " + to_string(half));
    cache_.emplace(s, half.numerator());
    return half.numerator();
  }

  /// min{s in coset + Z : V(s) = 0}, scanning down from max A.
  Rational nu_plus() const
  {
    const Rational coset = c_.coset();
    Rational s = coset + ceil(c_.max_alexander() - coset);
    if ((*this)(s) != 0) throw error(errc::non_integer_v, "V does not vanish at max A");
    const Rational floor_guard = c_.min_alexander() - 2;
    while (s - 1 >= floor_guard && (*this)(s - 1) == 0) s -= 1;
    return s;
  }

 private:
  KnotComplex c_;
  Rational d_;
  mutable std::map<Rational, std::int64_t> cache_;
};

inline std::int64_t v_invariant(const KnotComplex& c, const Rational& s) { return VFunction(c)(s); }

/// H realized as V of the i<->j flip at the negated level.
inline std::int64_t h_invariant(const KnotComplex& c, const Rational& s) { return VFunction(flip(c))(-s); }

inline Rational nu_plus(const KnotComplex& c) { return VFunction(c).nu_plus(); }

struct FamilyNuPlus {
  std::map<std::string, Rational> per_label;
  Rational global;
};

inline FamilyNuPlus nu_plus(const KnotComplexFamily& f)
{
  FamilyNuPlus out;
  bool first = true;
  for (const auto& s : f.spinc) {
    Rational v = nu_plus(f.at(s.label));
    out.per_label.emplace(s.label, v);
    if (first || v > out.global) out.global = v;
    first = false;
  }
  return out;
}

struct MiddleGrading {
  Rational r_balance;
  Rational r_formula;
  bool consistent = false;

  friend bool operator==(const MiddleGrading&, const MiddleGrading&) = default;
};

inline MiddleGrading middle_grading(const KnotComplex& c)
{
  VFunction v(c);
  VFunction vflip(flip(c));
  MiddleGrading out;
  out.r_formula = (v.d() - vflip.d()) / 2;
  std::vector<Rational> balanced;
  for (const Rational& s : s_window(c, 1))
    if (v(s) == vflip(-s)) balanced.push_back(s);
  if (balanced.empty()) throw error(errc::no_balance_point, "no s in the window with V(s) = H(s)");
  if (balanced.size() > 1)
    throw error(errc::multiple_balance_points, std::to_string(balanced.size()) + " levels with V(s) = H(s)");
  out.r_balance = balanced.front();
  out.consistent = out.r_balance == out.r_formula;
  return out;
}

struct MiddleSpectrum {
  std::map<std::string, Rational> r;
  Rational a_max;
  Rational a_min;
  bool symmetric = false;  // the multiset {r_s} is symmetric about 0
  bool models_knot = false;  // d(flip c_s) = d(c_{s+PD[K]}) and d(c_{Js}) = d(c_s) for all s
};

inline MiddleSpectrum middle_spectrum(const KnotComplexFamily& f)
{
  MiddleSpectrum out;
  std::map<std::string, Rational> d, d_flip;
  for (const auto& s : f.spinc) {
    const KnotComplex& c = f.at(s.label);
    out.r.emplace(s.label, middle_grading(c).r_balance);
    d.emplace(s.label, VFunction(c).d());
    d_flip.emplace(s.label, VFunction(flip(c)).d());
  }
  std::vector<Rational> values;
  for (const auto& [l, r] : out.r) values.push_back(r);
  out.a_max = *std::max_element(values.begin(), values.end());
  out.a_min = *std::min_element(values.begin(), values.end());
  std::vector<Rational> negated;
  for (const auto& v : values) negated.push_back(-v);
  std::sort(values.begin(), values.end());
  std::sort(negated.begin(), negated.end());
  out.symmetric = values == negated;
  out.models_knot = true;
  for (const auto& s : f.spinc)
    if (d_flip.at(s.label) != d.at(s.pdk) || d.at(s.conj) != d.at(s.label)) out.models_knot = false;
  return out;
}

/// Minimal Alexander level of a cycle representing the generator of the
/// U = 0 homology, computed by filtered column reduction.
inline Rational tau(const KnotComplex& c)
{
  // Canonical (A, M, id) order puts every unit-power target before its source.
  const std::size_t n = c.size();
  std::vector<f2::Vector> cols(n, f2::Vector(n));
  for (const Arrow& a : c.arrows())
    if (a.upower == 0) cols[a.from].set(a.to);
  auto low = [](const f2::Vector& v) {
    std::size_t last = f2::Vector::npos;
    for (auto i = v.find_first(); i != f2::Vector::npos; i = v.find_next(i)) last = i;
    return last;
  };
  std::map<std::size_t, std::size_t> pivot_of_low;
  std::vector<bool> is_low(n, false), zero(n, false);
  for (std::size_t j = 0; j < n; ++j) {
    for (auto l = low(cols[j]); l != f2::Vector::npos; l = low(cols[j])) {
      auto it = pivot_of_low.find(l);
      if (it == pivot_of_low.end()) {
        pivot_of_low.emplace(l, j);
        is_low[l] = true;
        break;
      }
      cols[j] ^= cols[it->second];
    }
    zero[j] = cols[j].none();
  }
  std::vector<std::size_t> essential;
  for (std::size_t j = 0; j < n; ++j)
    if (zero[j] && !is_low[j]) essential.push_back(j);
  if (essential.size() != 1)
    throw error(errc::hat_rank_not_one, "U=0 homology has dimension " + std::to_string(essential.size()));
  return c.generator(essential.front()).alexander;
}

/// V vanishes at the middle level on both (Y, K) and (-Y, -K).
inline bool is_locally_trivial(const KnotComplex& c)
{
  Rational r = middle_grading(c).r_balance;
  return VFunction(c)(r) == 0 && VFunction(dual(c))(-r) == 0;
}

inline bool is_locally_trivial(const KnotComplexFamily& f, const std::string& label)
{
  return is_locally_trivial(f.at(label));
}

inline bool is_totally_locally_trivial(const KnotComplexFamily& f)
{
  for (const auto& s : f.spinc)
    if (!is_locally_trivial(f, s.label)) return false;
  return true;
}

struct LabelInvariants {
  std::string label;
  std::vector<std::pair<Rational, std::int64_t>> v_table;
  std::vector<std::pair<Rational, std::int64_t>> h_table;
  Rational nu_plus;
  Rational r_balance;
  Rational r_formula;
  Rational d;
  std::optional<Rational> tau;
  bool locally_trivial = false;
};

struct InvariantReport {
  std::string name;
  std::vector<LabelInvariants> labels;
  Rational nu_plus;
  Rational nu_plus_dual;
  Rational genus_lower_bound;
  std::optional<Rational> claimed_genus;
  std::optional<bool> sharp;
  bool totally_locally_trivial = false;
};

inline InvariantReport genus_report(const KnotComplexFamily& f, std::int64_t pad = 1)
{
  InvariantReport rep;
  rep.name = f.name;
  rep.totally_locally_trivial = true;
  bool first = true;
  for (const auto& s : f.spinc) {
    const KnotComplex& c = f.at(s.label);
    VFunction v(c);
    VFunction vflip(flip(c));
    LabelInvariants li;
    li.label = s.label;
    for (const Rational& x : s_window(c, pad)) {
      li.v_table.emplace_back(x, v(x));
      li.h_table.emplace_back(x, vflip(-x));
    }
    li.nu_plus = v.nu_plus();
    MiddleGrading mg = middle_grading(c);
    li.r_balance = mg.r_balance;
    li.r_formula = mg.r_formula;
    li.d = v.d();
    try {
      li.tau = tau(c);
    } catch (const error& e) {
      if (e.code() != errc::hat_rank_not_one) throw;
    }
    li.locally_trivial = v(li.r_balance) == 0 && VFunction(dual(c))(-li.r_balance) == 0;
    rep.totally_locally_trivial = rep.totally_locally_trivial && li.locally_trivial;
    if (first || li.nu_plus > rep.nu_plus) rep.nu_plus = li.nu_plus;
    first = false;
    rep.labels.push_back(std::move(li));
  }
  rep.nu_plus_dual = nu_plus(dual_family(f)).global;
  rep.genus_lower_bound = std::max(rep.nu_plus, rep.nu_plus_dual);
  rep.claimed_genus = f.claimed_genus;
  if (f.claimed_genus) rep.sharp = rep.genus_lower_bound == *f.claimed_genus;
  return rep;
}

}  // namespace hfk
