#pragma once

// Constructors for the standard test families: staircases of L-space knots,
// torus knots and their cables, acyclic building blocks, the figure-eight,
// unknots in rational homology spheres, Floer simple knots, and a seeded
// random generator for fuzzing.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hfk/algebra.hpp"
#include "hfk/complex.hpp"
#include "hfk/errors.hpp"
#include "hfk/rational.hpp"
#include "hfk/validate.hpp"

namespace hfk {

/// Exponents a_0 > a_1 > ... > a_{2m} of a symmetric Alexander polynomial
/// with alternating +-1 coefficients.
struct AlexanderData {
  std::vector<std::int64_t> exponents;

  std::int64_t genus() const { return exponents.empty() ? 0 : exponents.front(); }

  void check() const
  {
    const auto& a = exponents;
    if (a.empty() || a.size() % 2 == 0)
      throw error(errc::invalid_alexander_data, "exponent list must have odd length");
    for (std::size_t i = 1; i < a.size(); ++i)
      if (a[i] >= a[i - 1]) throw error(errc::invalid_alexander_data, "exponents must strictly decrease");
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != -a[a.size() - 1 - i]) throw error(errc::invalid_alexander_data, "exponents must be symmetric");
  }

  friend bool operator==(const AlexanderData&, const AlexanderData&) = default;
};

// ---------------------------------------------------------------------------
// Laurent polynomials over Z, exponent -> coefficient with no zero entries.

using LaurentPoly = std::map<std::int64_t, std::int64_t>;

namespace detail {

inline void add_term(LaurentPoly& p, std::int64_t e, std::int64_t c)
{
  if ((p[e] += c) == 0) p.erase(e);
}

inline LaurentPoly multiply(const LaurentPoly& a, const LaurentPoly& b)
{
  LaurentPoly out;
  for (auto [ea, ca] : a)
    for (auto [eb, cb] : b) add_term(out, ea + eb, ca * cb);
  return out;
}

/// Exact division; throws if `den` does not divide `num`.
inline LaurentPoly divide(LaurentPoly num, const LaurentPoly& den)
{
  LaurentPoly q;
  const auto [dtop, dlead] = *den.rbegin();
  while (!num.empty()) {
    auto [ntop, nlead] = *num.rbegin();
    if (ntop < dtop || nlead % dlead != 0)
      throw error(errc::invalid_argument, "polynomial division is not exact");
    std::int64_t e = ntop - dtop, c = nlead / dlead;
    add_term(q, e, c);
    for (auto [ed, cd] : den) add_term(num, ed + e, -c * cd);
  }
  return q;
}

/// t^n - 1
inline LaurentPoly t_power_minus_one(std::int64_t n) { return LaurentPoly{{n, 1}, {0, -1}}; }

inline void require_coprime(std::int64_t p, std::int64_t q)
{
  if (p < 1 || q < 1 || std::gcd(p, q) != 1)
    throw error(errc::not_coprime, "(" + std::to_string(p) + "," + std::to_string(q) + ") are not coprime positive integers");
}

}  // namespace detail

/// The symmetrized Alexander polynomial of T(p, q).
inline LaurentPoly torus_alexander(std::int64_t p, std::int64_t q)
{
  detail::require_coprime(p, q);
  LaurentPoly num = detail::multiply(detail::t_power_minus_one(p * q), detail::t_power_minus_one(1));
  LaurentPoly den = detail::multiply(detail::t_power_minus_one(p), detail::t_power_minus_one(q));
  LaurentPoly quotient = detail::divide(num, den);
  LaurentPoly out;
  const std::int64_t g = (p - 1) * (q - 1) / 2;
  for (auto [e, c] : quotient) out[e - g] = c;
  return out;
}

inline LaurentPoly alexander_polynomial(const AlexanderData& ad)
{
  LaurentPoly p;
  for (std::size_t i = 0; i < ad.exponents.size(); ++i) p[ad.exponents[i]] = i % 2 == 0 ? 1 : -1;
  return p;
}

/// Reads off staircase exponents; the coefficients must alternate +1, -1, ..., +1.
inline AlexanderData staircase_exponents(const LaurentPoly& p)
{
  AlexanderData ad;
  std::int64_t expected = 1;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    if (it->second != expected)
      throw error(errc::not_staircase_polynomial, "coefficient " + std::to_string(it->second) + " at t^" +
                                                      std::to_string(it->first) + " breaks the +-1 alternation");
    ad.exponents.push_back(it->first);
    expected = -expected;
  }
  if (expected == 1) throw error(errc::not_staircase_polynomial, "polynomial ends with a negative coefficient");
  ad.check();
  return ad;
}

// ---------------------------------------------------------------------------
// Complexes and families.

inline KnotComplex unknot_complex(const std::string& id = "x")
{
  return KnotComplex({{id, Rational(0), Rational(0)}}, {}, ComplexKind::knot);
}

inline KnotComplexFamily unknot() { return single_label_family("U", unknot_complex(), Rational(0)); }

inline KnotComplex staircase_complex(const AlexanderData& ad)
{
  ad.check();
  const auto& a = ad.exponents;
  std::vector<Generator> gens(a.size());
  std::vector<std::pair<std::string, std::string>> arrows;
  for (std::size_t i = 0; i < a.size(); ++i) gens[i] = {"x" + std::to_string(i), Rational(0), Rational(a[i])};
  // M(from) = M(to) + 1 - 2 * upower, walking down the staircase.
  for (std::size_t i = 1; i < a.size(); i += 2) {
    std::int64_t horizontal = a[i - 1] - a[i];
    gens[i].maslov = gens[i - 1].maslov + 1 - 2 * horizontal;
    gens[i + 1].maslov = gens[i].maslov - 1;
    arrows.emplace_back(gens[i].id, gens[i - 1].id);
    arrows.emplace_back(gens[i].id, gens[i + 1].id);
  }
  return KnotComplex::build(std::move(gens), arrows, ComplexKind::knot);
}

inline std::string exponents_name(const AlexanderData& ad)
{
  std::string s = "staircase(";
  for (std::size_t i = 0; i < ad.exponents.size(); ++i) s += (i ? "," : "") + std::to_string(ad.exponents[i]);
  return s + ")";
}

inline KnotComplexFamily staircase(const AlexanderData& ad, std::optional<std::string> name = std::nullopt)
{
  return single_label_family(name ? *name : exponents_name(ad), staircase_complex(ad), Rational(ad.genus()));
}

inline KnotComplexFamily torus_knot(std::int64_t p, std::int64_t q)
{
  AlexanderData ad = staircase_exponents(torus_alexander(p, q));
  return staircase(ad, "T(" + std::to_string(p) + "," + std::to_string(q) + ")");
}

inline KnotComplexFamily trefoil() { return torus_knot(2, 3); }

/// Staircase of the (p, q)-cable of an L-space knot, via
/// Delta_{K_{p,q}}(t) = Delta_K(t^p) * Delta_{T(p,q)}(t). Requires q > p(2g - 1).
inline AlexanderData cable_exponents(const AlexanderData& base, std::int64_t p, std::int64_t q)
{
  base.check();
  detail::require_coprime(p, q);
  if (q <= p * (2 * base.genus() - 1))
    throw error(errc::cable_condition_violated, "q=" + std::to_string(q) + " <= p(2g-1)=" +
                                                    std::to_string(p * (2 * base.genus() - 1)));
  LaurentPoly stretched;
  for (auto [e, c] : alexander_polynomial(base)) stretched[e * p] = c;
  return staircase_exponents(detail::multiply(stretched, torus_alexander(p, q)));
}

inline KnotComplexFamily cable_staircase(const AlexanderData& base, std::int64_t p, std::int64_t q,
                                         std::optional<std::string> base_name = std::nullopt)
{
  AlexanderData ad = cable_exponents(base, p, q);
  std::string name = (base_name ? *base_name : exponents_name(base)) + "_{" + std::to_string(p) + "," +
                     std::to_string(q) + "}";
  return staircase(ad, name);
}

enum class Primitive { segment_v, segment_h, box };

/// Acyclic building blocks, shifted by (dM, dA) after construction. Ids are
/// prefixed with `prefix`.
inline KnotComplex acyclic_primitive(Primitive kind, const Rational& dM = 0, const Rational& dA = 0,
                                     const std::string& prefix = "")
{
  std::vector<Generator> gens;
  std::vector<std::pair<std::string, std::string>> arrows;
  switch (kind) {
    case Primitive::segment_v:
      gens = {{prefix + "v0", 0, 0}, {prefix + "v1", -1, -1}};
      arrows = {{prefix + "v0", prefix + "v1"}};
      break;
    case Primitive::segment_h:
      gens = {{prefix + "h0", 0, 0}, {prefix + "h1", 1, 1}};
      arrows = {{prefix + "h0", prefix + "h1"}};
      break;
    case Primitive::box:
      gens = {{prefix + "a", 0, 0}, {prefix + "b", -1, -1}, {prefix + "c", 1, 1}, {prefix + "d", 0, 0}};
      arrows = {{prefix + "a", prefix + "b"}, {prefix + "a", prefix + "c"},
                {prefix + "b", prefix + "d"}, {prefix + "c", prefix + "d"}};
      break;
  }
  return shift(KnotComplex::build(std::move(gens), arrows, ComplexKind::acyclic), dM, dA);
}

inline KnotComplex figure_eight_complex()
{
  return direct_sum(unknot_complex(), acyclic_primitive(Primitive::box), ComplexKind::knot);
}

inline KnotComplexFamily figure_eight() { return single_label_family("4_1", figure_eight_complex(), Rational(1)); }

// ---------------------------------------------------------------------------
// Rational homology spheres.

/// d(L(p, q), i) by the recursion
///   d(L(p,q), i) = -1/4 + (2i + 1 - p - q)^2 / (4pq) - d(L(q, r), j),
/// with r = p mod q, j = i mod q, and d(S^3) = 0.
inline Rational lens_space_d(std::int64_t p, std::int64_t q, std::int64_t i)
{
  if (p < 1 || std::gcd(p, q) != 1)
    throw error(errc::not_coprime, "L(" + std::to_string(p) + "," + std::to_string(q) + ") needs coprime p, q");
  if (p == 1) return Rational(0);
  q %= p;
  if (q < 0) q += p;
  if (i < 0 || i >= p + q) throw error(errc::invalid_argument, "Spin^c index out of range");
  const std::int64_t t = 2 * i + 1 - p - q;
  return Rational(-1, 4) + Rational(t * t, 4 * p * q) - lens_space_d(q, p % q, i % q);
}

/// Conjugation on the recursion's labels: i -> q - 1 - i (mod p).
inline std::int64_t lens_space_conj(std::int64_t p, std::int64_t q, std::int64_t i)
{
  std::int64_t c = (q - 1 - i) % p;
  return c < 0 ? c + p : c;
}

struct QhsSpinC {
  std::string label;
  Rational d;
  std::string conj;
};

/// Unknot in a rational homology sphere: per label shift(unknot, d, 0) plus
/// `boxes_per_label` boxes at the same Maslov shift; PD[U] = 0.
inline KnotComplexFamily unknot_in_qhs(const std::vector<QhsSpinC>& structures, std::size_t boxes_per_label)
{
  std::map<std::string, const QhsSpinC*> by_label;
  for (const auto& s : structures) by_label.emplace(s.label, &s);
  KnotComplexFamily f;
  f.name = "U";
  f.claimed_genus = Rational(0);
  for (const auto& s : structures) {
    auto it = by_label.find(s.conj);
    if (it == by_label.end() || it->second->conj != s.label)
      throw error(errc::invalid_argument, "conjugation on '" + s.label + "' is not an involution");
    if (it->second->d != s.d)
      throw error(errc::conj_d_mismatch, "d(" + s.label + ")=" + to_string(s.d) + " but d(" + s.conj +
                                             ")=" + to_string(it->second->d));
    KnotComplex c = shift(unknot_complex(), s.d, 0);
    for (std::size_t b = 0; b < boxes_per_label; ++b)
      c = direct_sum(c, acyclic_primitive(Primitive::box, s.d, 0, "b" + std::to_string(b) + "."));
    f.spinc.push_back({s.label, s.conj, s.label});
    f.complexes.emplace(s.label, std::move(c));
  }
  f.canonicalize();
  return f;
}

inline KnotComplexFamily unknot_in_lens_space(std::int64_t p, std::int64_t q, std::size_t boxes_per_label)
{
  std::vector<QhsSpinC> s;
  for (std::int64_t i = 0; i < p; ++i)
    s.push_back({std::to_string(i), lens_space_d(p, q, i), std::to_string(lens_space_conj(p, q, i))});
  auto f = unknot_in_qhs(s, boxes_per_label);
  f.name = "U(L(" + std::to_string(p) + "," + std::to_string(q) + "))";
  return f;
}

struct FloerSimpleEntry {
  std::string label;
  Rational maslov;
  Rational alexander;
  std::string conj;
  std::string pdk;
};

/// One generator per Spin^c structure. The Alexander gradings must satisfy
/// A(pdk^-1(conj(s))) = -A(s).
inline KnotComplexFamily floer_simple(const std::vector<FloerSimpleEntry>& entries,
                                      std::string name = "floer-simple")
{
  KnotComplexFamily f;
  f.name = std::move(name);
  for (const auto& e : entries) {
    f.spinc.push_back({e.label, e.conj, e.pdk});
    f.complexes.emplace(e.label, KnotComplex({{"x", e.maslov, e.alexander}}, {}, ComplexKind::knot));
  }
  f.canonicalize();
  ValidationReport rep = validate(f);
  if (!rep.ok()) throw error(errc::validation_error, rep.to_string());
  Rational a_max = 0;
  for (const auto& e : entries) {
    const Rational a = f.at(e.label).generator(0).alexander;
    const Rational partner = f.at(f.pdk_inverse(e.conj)).generator(0).alexander;
    if (partner != -a)
      throw error(errc::symmetry_violation, "A(pdk^-1(conj(" + e.label + "))) = " + to_string(partner) +
                                                " but -A(" + e.label + ") = " + to_string(-a));
    a_max = std::max(a_max, a);
  }
  f.claimed_genus = a_max;
  return f;
}

/// Floer simple knot in L(p, q) in homology class k: label i carries one
/// generator at M = d(L(p,q), i), A = (d(i) - d(i + k)) / 2.
inline KnotComplexFamily floer_simple_lens(std::int64_t p, std::int64_t q, std::int64_t k)
{
  if (p < 1) throw error(errc::invalid_argument, "p must be positive");
  std::vector<FloerSimpleEntry> entries;
  auto wrap = [p](std::int64_t i) { return ((i % p) + p) % p; };
  for (std::int64_t i = 0; i < p; ++i) {
    Rational d = lens_space_d(p, q, i);
    Rational d_next = lens_space_d(p, q, wrap(i + k));
    entries.push_back({std::to_string(i), d, (d - d_next) / 2, std::to_string(lens_space_conj(p, q, i)),
                       std::to_string(wrap(i + k))});
  }
  return floer_simple(entries, "simple(L(" + std::to_string(p) + "," + std::to_string(q) + ")," +
                                   std::to_string(wrap(k)) + ")");
}

// ---------------------------------------------------------------------------
// Fuzzing.

/// All legal (x, y, k) for x -> x + U^k y.
inline std::vector<std::tuple<std::string, std::string, std::int64_t>> legal_basis_changes(const KnotComplex& c)
{
  std::vector<std::tuple<std::string, std::string, std::int64_t>> out;
  for (const auto& x : c.generators())
    for (const auto& y : c.generators()) {
      if (x.id == y.id) continue;
      Rational k2 = y.maslov - x.maslov;
      if (!is_integer(k2) || k2.numerator() < 0 || k2.numerator() % 2 != 0) continue;
      std::int64_t k = k2.numerator() / 2;
      if (y.alexander - k <= x.alexander) out.emplace_back(x.id, y.id, k);
    }
  return out;
}

/// Applies `count` random legal basis changes.
template <class Rng>
KnotComplex scramble(KnotComplex c, Rng& rng, std::size_t count)
{
  for (std::size_t i = 0; i < count; ++i) {
    auto moves = legal_basis_changes(c);
    if (moves.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
    const auto& [x, y, k] = moves[pick(rng)];
    c = basis_change(c, x, y, k);
  }
  return c;
}

inline KnotComplex scramble(const KnotComplex& c, std::uint64_t seed, std::size_t count)
{
  std::mt19937_64 rng(seed);
  return scramble(c, rng, count);
}

struct RandomOptions {
  std::size_t max_rank = 8;
  std::size_t scrambles = 6;
};

namespace detail {

/// A knot-like complex with at most `max_rank` generators: a small staircase
/// (or its dual) plus shifted acyclic primitives, shifted by (d, r) and scrambled.
template <class Rng>
KnotComplex random_knot_like(Rng& rng, const RandomOptions& opt, const Rational& d, const Rational& r)
{
  static const std::vector<std::vector<std::int64_t>> cores = {
      {0}, {0}, {1, 0, -1}, {2, 0, -2}, {2, 1, 0, -1, -2}, {3, 2, 0, -2, -3}};
  std::uniform_int_distribution<std::size_t> core_pick(0, cores.size() - 1);
  AlexanderData ad{cores[core_pick(rng)]};
  if (ad.exponents.size() > opt.max_rank) ad = AlexanderData{{0}};
  KnotComplex c = staircase_complex(ad);
  std::bernoulli_distribution mirror(0.5);
  if (mirror(rng)) c = dual(c);
  std::uniform_int_distribution<int> prim_pick(0, 2);
  std::uniform_int_distribution<int> offset(-2, 2);
  std::size_t serial = 0;
  for (int attempts = 0; attempts < 4; ++attempts) {
    Primitive kind = static_cast<Primitive>(prim_pick(rng));
    std::size_t sz = kind == Primitive::box ? 4 : 2;
    if (c.size() + sz > opt.max_rank) continue;
    std::bernoulli_distribution take(0.6);
    if (!take(rng)) continue;
    c = direct_sum(c, acyclic_primitive(kind, offset(rng), offset(rng), "p" + std::to_string(serial++) + "."));
  }
  c = shift(c, d, r);
  return scramble(c, rng, opt.scrambles);
}

}  // namespace detail

/// Seeded random knot-like family with consistent Spin^c data. Three shapes:
/// one label (r = 0); two labels modeled on L(2,1) with PD[K] swapping them;
/// two conjugate labels with PD[K] = 0.
inline KnotComplexFamily random_family(std::uint64_t seed, const RandomOptions& opt = {})
{
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> shape_pick(0, 2);
  const int shape = shape_pick(rng);
  KnotComplexFamily f;
  f.name = "random(" + std::to_string(seed) + ")";
  if (shape == 0) {
    std::uniform_int_distribution<int> dd(-1, 1);
    Rational d = 2 * dd(rng);
    f.spinc.push_back({"0", "0", "0"});
    f.complexes.emplace("0", detail::random_knot_like(rng, opt, d, 0));
  } else if (shape == 1) {
    const Rational d0 = lens_space_d(2, 1, 0), d1 = lens_space_d(2, 1, 1);
    f.spinc.push_back({"0", "0", "1"});
    f.spinc.push_back({"1", "1", "0"});
    f.complexes.emplace("0", detail::random_knot_like(rng, opt, d0, (d0 - d1) / 2));
    f.complexes.emplace("1", detail::random_knot_like(rng, opt, d1, (d1 - d0) / 2));
  } else {
    std::bernoulli_distribution half(0.5);
    Rational d = half(rng) ? Rational(1, 2) : Rational(0);
    f.spinc.push_back({"a", "b", "a"});
    f.spinc.push_back({"b", "a", "b"});
    f.complexes.emplace("a", detail::random_knot_like(rng, opt, d, 0));
    f.complexes.emplace("b", detail::random_knot_like(rng, opt, d, 0));
  }
  f.canonicalize();
  return f;
}

/// Named families used across the test suites and by `check --fuzz`.
inline std::vector<KnotComplexFamily> standard_corpus()
{
  std::vector<KnotComplexFamily> out;
  out.push_back(unknot());
  out.push_back(trefoil());
  out.push_back(dual_family(trefoil()));
  out.push_back(torus_knot(2, 5));
  out.push_back(torus_knot(3, 4));
  out.push_back(figure_eight());
  out.push_back(unknot_in_lens_space(2, 1, 2));
  out.push_back(unknot_in_lens_space(3, 1, 1));
  out.push_back(floer_simple_lens(2, 1, 1));
  out.push_back(floer_simple_lens(5, 2, 2));
  out.push_back(cable_staircase(AlexanderData{{1, 0, -1}}, 2, 5, "T(2,3)"));
  return out;
}

inline std::vector<KnotComplexFamily> random_corpus(std::size_t count, std::uint64_t seed0 = 1,
                                                    const RandomOptions& opt = {})
{
  std::vector<KnotComplexFamily> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_family(seed0 + i, opt));
  return out;
}

}  // namespace hfk
