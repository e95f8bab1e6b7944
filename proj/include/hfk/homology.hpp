#pragma once

// Homology of singly graded free complexes over F2[U].
//
// Acyclicity is tested at U = 0: for a finitely generated graded free
// complex C over F2[U], H(C) = 0 iff H(C/UC) = 0 (graded Nakayama), so the
// test reduces to F2 rank computations.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hfk/complex.hpp"
#include "hfk/errors.hpp"
#include "hfk/f2.hpp"
#include "hfk/rational.hpp"

namespace hfk {

struct GradedGenerator {
  std::string id;
  Rational maslov;

  friend bool operator==(const GradedGenerator&, const GradedGenerator&) = default;
};

/// Generators keep the order they are given in; arrows are sorted by (from, to).
class GradedUComplex {
 public:
  GradedUComplex() = default;

  GradedUComplex(std::vector<GradedGenerator> gens, std::vector<Arrow> arrows)
      : generators_(std::move(gens)), arrows_(std::move(arrows))
  {
    std::sort(arrows_.begin(), arrows_.end(), [](const Arrow& a, const Arrow& b) {
      return std::tie(a.from, a.to) < std::tie(b.from, b.to);
    });
  }

  const std::vector<GradedGenerator>& generators() const { return generators_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::size_t size() const { return generators_.size(); }
  bool empty() const { return generators_.empty(); }

  std::int64_t total_upower() const
  {
    std::int64_t s = 0;
    for (const auto& a : arrows_) s += a.upower;
    return s;
  }

  friend bool operator==(const GradedUComplex&, const GradedUComplex&) = default;

 private:
  std::vector<GradedGenerator> generators_;
  std::vector<Arrow> arrows_;
};

inline GradedUComplex forget_alexander(const KnotComplex& c)
{
  std::vector<GradedGenerator> gens;
  gens.reserve(c.size());
  for (const auto& g : c.generators()) gens.push_back({g.id, g.maslov});
  return GradedUComplex(std::move(gens), c.arrows());
}

/// F2[U]/U^order generated in `grading`.
struct TorsionSummand {
  Rational grading;
  std::int64_t order = 0;

  friend bool operator==(const TorsionSummand&, const TorsionSummand&) = default;
  friend bool operator<(const TorsionSummand& a, const TorsionSummand& b)
  {
    return std::tie(a.grading, a.order) < std::tie(b.grading, b.order);
  }
};

/// Graded Smith form: free generators (indices into the input) and torsion.
struct SmithForm {
  std::vector<std::size_t> free;
  std::vector<TorsionSummand> torsion;
  std::size_t acyclic_pairs = 0;
};

struct TruncatedHomology {
  std::int64_t level = 0;
  std::map<Rational, std::int64_t> dims;  // nonzero dimensions only
  std::optional<Rational> tower_top;      // top grading where U^{level-1} acts nontrivially
};

struct HomologyProfile {
  std::size_t localized_rank = 0;
  std::optional<Rational> d;
  std::vector<TorsionSummand> torsion;
  std::int64_t truncation_level = 0;
  std::map<Rational, std::int64_t> f2_dims;
};

namespace detail {

/// Mutable arrow graph supporting cancellation.
class CancellationGraph {
 public:
  explicit CancellationGraph(const GradedUComplex& g)
      : out_(g.size()), in_(g.size()), alive_(g.size(), true)
  {
    for (const Arrow& a : g.arrows()) toggle(a.from, a.to, a.upower);
  }

  void toggle(std::size_t f, std::size_t t, std::int64_t n)
  {
    auto it = out_[f].find(t);
    if (it == out_[f].end()) {
      out_[f].emplace(t, n);
      in_[t].emplace(f, n);
    } else {
      if (it->second != n) throw error(errc::invalid_argument, "inhomogeneous arrow powers in cancellation");
      out_[f].erase(it);
      in_[t].erase(f);
    }
  }

  /// Cancels the arrow x -> y of power p. Valid when p = 0, or when p is
  /// minimal among all arrows (graded Smith form step): every a -> y (q) and
  /// x -> b (r) toggles a -> b with power q + r - p.
  void cancel(std::size_t x, std::size_t y)
  {
    const std::int64_t p = out_[x].at(y);
    std::vector<std::pair<std::size_t, std::int64_t>> sources, targets;
    for (auto [a, q] : in_[y])
      if (a != x) sources.emplace_back(a, q);
    for (auto [b, r] : out_[x])
      if (b != y) targets.emplace_back(b, r);
    for (auto [a, q] : sources)
      for (auto [b, r] : targets) toggle(a, b, q + r - p);
    remove(x);
    remove(y);
  }

  /// First arrow in (from, to) order with power 0.
  std::optional<std::pair<std::size_t, std::size_t>> first_unit_arrow() const
  {
    for (std::size_t f = 0; f < out_.size(); ++f)
      for (auto [t, n] : out_[f])
        if (n == 0) return std::make_pair(f, t);
    return std::nullopt;
  }

  /// Arrow of minimal power, first in (from, to) order among ties.
  std::optional<std::pair<std::size_t, std::size_t>> min_power_arrow() const
  {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    std::int64_t best_n = 0;
    for (std::size_t f = 0; f < out_.size(); ++f)
      for (auto [t, n] : out_[f])
        if (!best || n < best_n) {
          best = std::make_pair(f, t);
          best_n = n;
        }
    return best;
  }

  std::int64_t power(std::size_t f, std::size_t t) const { return out_[f].at(t); }
  bool alive(std::size_t i) const { return alive_[i]; }

  GradedUComplex extract(const GradedUComplex& original) const
  {
    std::vector<std::size_t> where(alive_.size(), 0);
    std::vector<GradedGenerator> gens;
    for (std::size_t i = 0; i < alive_.size(); ++i)
      if (alive_[i]) {
        where[i] = gens.size();
        gens.push_back(original.generators()[i]);
      }
    std::vector<Arrow> arrows;
    for (std::size_t f = 0; f < out_.size(); ++f)
      for (auto [t, n] : out_[f]) arrows.push_back({where[f], where[t], n});
    return GradedUComplex(std::move(gens), std::move(arrows));
  }

 private:
  void remove(std::size_t v)
  {
    for (auto [t, n] : out_[v]) in_[t].erase(v);
    for (auto [f, n] : in_[v]) out_[f].erase(v);
    out_[v].clear();
    in_[v].clear();
    alive_[v] = false;
  }

  std::vector<std::map<std::size_t, std::int64_t>> out_;
  std::vector<std::map<std::size_t, std::int64_t>> in_;
  std::vector<bool> alive_;
};

/// Integer grading offsets relative to the first generator.
inline std::vector<std::int64_t> grading_offsets(const GradedUComplex& g)
{
  std::vector<std::int64_t> h;
  h.reserve(g.size());
  for (const auto& x : g.generators()) {
    Rational diff = x.maslov - g.generators().front().maslov;
    if (!is_integer(diff)) throw error(errc::invalid_argument, "Maslov gradings differ by a non-integer");
    h.push_back(diff.numerator());
  }
  return h;
}

/// The truncated complex C / U^N C, graded by integer offsets. Basis
/// elements are U^a x with 0 <= a < N at offset h(x) - 2a.
class Truncation {
 public:
  Truncation(const GradedUComplex& g, std::int64_t level) : g_(g), level_(level), h_(grading_offsets(g))
  {
    if (level < 1) throw error(errc::invalid_argument, "truncation level must be positive");
    out_.resize(g.size());
    for (const Arrow& a : g.arrows()) out_[a.from].emplace_back(a.to, a.upower);
  }

  std::int64_t level() const { return level_; }
  const std::vector<std::int64_t>& offsets() const { return h_; }

  std::int64_t max_offset() const { return h_.empty() ? 0 : *std::max_element(h_.begin(), h_.end()); }
  std::int64_t min_offset() const
  {
    return h_.empty() ? 0 : *std::min_element(h_.begin(), h_.end()) - 2 * (level_ - 1);
  }

  /// (generator, power) pairs spanning grading offset m, keyed to their position.
  std::map<std::pair<std::size_t, std::int64_t>, std::size_t> basis(std::int64_t m) const
  {
    std::map<std::pair<std::size_t, std::int64_t>, std::size_t> b;
    for (std::size_t x = 0; x < h_.size(); ++x) {
      std::int64_t diff = h_[x] - m;
      if (diff < 0 || diff % 2 != 0) continue;
      std::int64_t a = diff / 2;
      if (a < level_) b.emplace(std::make_pair(x, a), b.size());
    }
    return b;
  }

  /// Columns of the differential out of grading m, over the basis of m - 1.
  std::vector<f2::Vector> differential(std::int64_t m) const
  {
    auto src = basis(m);
    auto dst = basis(m - 1);
    std::vector<f2::Vector> cols(src.size(), f2::Vector(dst.size()));
    for (const auto& [key, pos] : src) {
      auto [x, a] = key;
      for (auto [y, n] : out_[x]) {
        if (a + n >= level_) continue;
        cols[pos].flip(dst.at({y, a + n}));
      }
    }
    return cols;
  }

  /// Does some cycle in grading m survive multiplication by U^{N-1}?
  bool top_power_nonzero(std::int64_t m) const
  {
    auto src = basis(m);
    auto cycles = f2::kernel(differential(m));
    if (cycles.empty()) return false;
    const std::int64_t target = m - 2 * (level_ - 1);
    auto tgt = basis(target);
    f2::EchelonBasis boundaries;
    for (auto& col : differential(target + 1)) boundaries.insert(col);
    std::vector<std::pair<std::size_t, std::size_t>> lift;  // (src pos, tgt pos) for a = 0 elements
    for (const auto& [key, pos] : src)
      if (key.second == 0) lift.emplace_back(pos, tgt.at({key.first, level_ - 1}));
    for (const auto& z : cycles) {
      f2::Vector image(tgt.size());
      for (auto [sp, tp] : lift)
        if (z.test(sp)) image.set(tp);
      if (image.none()) continue;
      if (!boundaries.contains(image)) return true;
    }
    return false;
  }

  std::optional<std::int64_t> tower_top() const
  {
    std::vector<std::int64_t> candidates = h_;
    std::sort(candidates.begin(), candidates.end(), std::greater<>());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (auto m : candidates)
      if (top_power_nonzero(m)) return m;
    return std::nullopt;
  }

  Rational to_grading(std::int64_t m) const { return g_.generators().front().maslov + m; }

 private:
  const GradedUComplex& g_;
  std::int64_t level_;
  std::vector<std::int64_t> h_;
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> out_;
};

}  // namespace detail

/// Cancels unit-power arrows, always the first in (from, to) order, until
/// none remain. The result is homotopy equivalent to the input.
inline GradedUComplex reduce(const GradedUComplex& g)
{
  detail::CancellationGraph graph(g);
  while (auto arrow = graph.first_unit_arrow()) graph.cancel(arrow->first, arrow->second);
  return graph.extract(g);
}

/// Graded Smith normal form by cancelling a minimal-power arrow at each step.
inline SmithForm smith_form(const GradedUComplex& g)
{
  SmithForm out;
  detail::CancellationGraph graph(g);
  while (auto arrow = graph.min_power_arrow()) {
    auto [x, y] = *arrow;
    std::int64_t p = graph.power(x, y);
    if (p == 0)
      ++out.acyclic_pairs;
    else
      out.torsion.push_back({g.generators()[y].maslov, p});
    graph.cancel(x, y);
  }
  for (std::size_t i = 0; i < g.size(); ++i)
    if (graph.alive(i)) out.free.push_back(i);
  std::sort(out.torsion.begin(), out.torsion.end());
  return out;
}

/// Rank of homology after inverting U.
inline std::size_t localized_rank(const GradedUComplex& g) { return smith_form(g).free.size(); }

/// A level strictly above every torsion order of H(g).
inline std::int64_t safe_truncation_level(const GradedUComplex& g)
{
  return 2 + static_cast<std::int64_t>(g.size()) + g.total_upower();
}

/// Brute-force homology of g / U^N over F2, graded by Maslov grading.
inline TruncatedHomology truncated_f2_homology(const GradedUComplex& g, std::int64_t level)
{
  TruncatedHomology out;
  out.level = level;
  if (g.empty()) return out;
  detail::Truncation t(g, level);
  const std::int64_t hi = t.max_offset(), lo = t.min_offset();
  std::map<std::int64_t, std::size_t> rank_out;  // rank of d leaving grading m
  for (std::int64_t m = hi + 1; m >= lo; --m) rank_out[m] = f2::rank(t.differential(m));
  for (std::int64_t m = hi; m >= lo; --m) {
    auto dim = static_cast<std::int64_t>(t.basis(m).size() - rank_out[m] - rank_out[m + 1]);
    if (dim != 0) out.dims[t.to_grading(m)] = dim;
  }
  if (auto top = t.tower_top()) out.tower_top = t.to_grading(*top);
  return out;
}

/// Maximal grading of a non-torsion homology class (HF^- convention).
inline Rational d_invariant(const GradedUComplex& g)
{
  GradedUComplex r = reduce(g);
  if (localized_rank(r) == 0) throw error(errc::no_tower, "homology has no free summand");
  detail::Truncation t(r, safe_truncation_level(r));
  auto top = t.tower_top();
  if (!top) throw error(errc::no_tower, "no tower found in truncation");
  return t.to_grading(*top);
}

/// Exact over F2[U]: checks H(C/UC) = 0.
inline bool is_acyclic(const GradedUComplex& g)
{
  if (g.empty()) return true;
  std::vector<f2::Vector> cols(g.size(), f2::Vector(g.size()));
  for (const Arrow& a : g.arrows())
    if (a.upower == 0) cols[a.from].set(a.to);
  return 2 * f2::rank(cols) == g.size();
}

inline HomologyProfile homology_profile(const GradedUComplex& g)
{
  HomologyProfile p;
  SmithForm s = smith_form(g);
  p.localized_rank = s.free.size();
  p.torsion = s.torsion;
  if (p.localized_rank >= 1) p.d = d_invariant(g);
  p.truncation_level = safe_truncation_level(g);
  p.f2_dims = truncated_f2_homology(g, p.truncation_level).dims;
  return p;
}

}  // namespace hfk
