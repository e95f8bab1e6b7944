#include <catch_amalgamated.hpp>

#include <random>

#include "hfk/hfk.hpp"

using namespace hfk;

namespace {

struct Snapshot {
  Rational d;
  std::vector<std::int64_t> v;
  std::vector<std::int64_t> h;
  Rational nu;
  MiddleGrading middle;
  std::optional<Rational> tau_value;
  bool locally_trivial;

  friend bool operator==(const Snapshot&, const Snapshot&) = default;
};

Snapshot snapshot(const KnotComplex& c, const std::vector<Rational>& window)
{
  Snapshot s;
  s.d = d_invariant(forget_alexander(c));
  VFunction v(c), vf(flip(c));
  for (const Rational& x : window) {
    s.v.push_back(v(x));
    s.h.push_back(vf(-x));
  }
  s.nu = v.nu_plus();
  s.middle = middle_grading(c);
  try {
    s.tau_value = tau(c);
  } catch (const error&) {
  }
  s.locally_trivial = is_locally_trivial(c);
  return s;
}

std::vector<KnotComplex> property_sample()
{
  std::vector<KnotComplex> out;
  for (const auto& f : standard_corpus())
    for (const auto& [l, c] : f.complexes) out.push_back(c);
  for (const auto& f : random_corpus(40, 500))
    for (const auto& [l, c] : f.complexes) out.push_back(c);
  return out;
}

}  // namespace

TEST_CASE("invariants are unchanged by single legal basis changes")
{
  for (const KnotComplex& c : property_sample()) {
    const auto window = s_window(c, 2);
    const Snapshot base = snapshot(c, window);
    for (const auto& [x, y, k] : legal_basis_changes(c)) {
      CAPTURE(x, y, k);
      KnotComplex changed = basis_change(c, x, y, k);
      REQUIRE(validate(changed).ok());
      CHECK(snapshot(changed, window) == base);
    }
  }
}

TEST_CASE("invariants are unchanged by seeded scrambles")
{
  std::mt19937_64 rng(42);
  for (const KnotComplex& c : property_sample()) {
    const auto window = s_window(c, 2);
    const Snapshot base = snapshot(c, window);
    for (int i = 0; i < 5; ++i) {
      KnotComplex s = scramble(c, rng, 8);
      REQUIRE(validate(s).ok());
      CHECK(snapshot(s, window) == base);
    }
  }
}

TEST_CASE("scrambles are deterministic in the seed")
{
  KnotComplex c = tensor(trefoil().at("0"), figure_eight().at("0"));
  CHECK(scramble(c, 9, 20) == scramble(c, 9, 20));
}

TEST_CASE("adding an acyclic summand changes no invariant")
{
  for (const KnotComplex& c : property_sample()) {
    const auto window = s_window(c, 2);
    const Snapshot base = snapshot(c, window);
    for (Primitive p : {Primitive::segment_v, Primitive::box}) {
      KnotComplex box = relabel(acyclic_primitive(p, c.generator(0).maslov, c.coset()), "extra.");
      KnotComplex sum = direct_sum(c, box);
      Snapshot s = snapshot(sum, window);
      CHECK(s.d == base.d);
      CHECK(s.v == base.v);
      CHECK(s.h == base.h);
      CHECK(s.nu == base.nu);
      CHECK(s.middle == base.middle);
      CHECK(s.locally_trivial == base.locally_trivial);
    }
  }
}

TEST_CASE("shifting the Alexander grading shifts V and nu+")
{
  for (const KnotComplex& c : property_sample()) {
    VFunction v(c);
    KnotComplex shifted = shift(c, 0, 1);
    VFunction w(shifted);
    for (const Rational& s : s_window(c)) CHECK(w(s + 1) == v(s));
    CHECK(w.nu_plus() == v.nu_plus() + 1);
  }
}
