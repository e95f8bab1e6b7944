#include <catch_amalgamated.hpp>

#include "hfk/hfk.hpp"
#include "oracle.hpp"

using namespace hfk;

namespace {

std::vector<GradedUComplex> fuzz_graded(std::size_t count)
{
  std::vector<GradedUComplex> out;
  for (const auto& f : random_corpus(count))
    for (const auto& [l, c] : f.complexes) {
      out.push_back(forget_alexander(c));
      out.push_back(forget_alexander(flip(c)));
      for (const Rational& s : s_window(c)) out.push_back(a_subcomplex(c, s));
    }
  for (Primitive p : {Primitive::segment_v, Primitive::segment_h, Primitive::box})
    out.push_back(forget_alexander(acyclic_primitive(p, 1, 0)));
  return out;
}

/// Truncated dimensions predicted from the graded Smith form at level N
/// (N above every torsion order).
std::map<Rational, std::int64_t> predicted_dims(const GradedUComplex& g, const SmithForm& s, std::int64_t n)
{
  std::map<Rational, std::int64_t> dims;
  for (std::size_t i : s.free)
    for (std::int64_t a = 0; a < n; ++a) ++dims[g.generators()[i].maslov - 2 * a];
  for (const auto& t : s.torsion) {
    // F[U]/U^p at M(y) plus the U^{N-p..N-1} x classes of the partner at M(y) - 2p + 1.
    for (std::int64_t b = 0; b < t.order; ++b) ++dims[t.grading - 2 * b];
    const Rational mx = t.grading - 2 * t.order + 1;
    for (std::int64_t a = n - t.order; a < n; ++a) ++dims[mx - 2 * a];
  }
  for (auto it = dims.begin(); it != dims.end();) it = it->second == 0 ? dims.erase(it) : std::next(it);
  return dims;
}

}  // namespace

TEST_CASE("forget_alexander keeps gradings and arrows")
{
  GradedUComplex u = forget_alexander(unknot_complex());
  CHECK(u.size() == 1);
  CHECK(u.arrows().empty());
  GradedUComplex t = forget_alexander(trefoil().at("0"));
  std::vector<Rational> m;
  for (const auto& g : t.generators()) m.push_back(g.maslov);
  std::sort(m.begin(), m.end());
  CHECK(m == std::vector<Rational>{-2, -1, 0});
  CHECK(t.arrows().size() == 2);
  GradedUComplex b = forget_alexander(acyclic_primitive(Primitive::box));
  CHECK(b.size() == 4);
  CHECK(b.arrows().size() == 4);
  CHECK(is_acyclic(b));
}

TEST_CASE("reduce cancels unit arrows")
{
  CHECK(reduce(forget_alexander(acyclic_primitive(Primitive::box))).empty());

  GradedUComplex r = reduce(forget_alexander(figure_eight().at("0")));
  REQUIRE(r.size() == 1);
  CHECK(r.generators()[0].maslov == 0);
  CHECK(r.generators()[0].id == "x");

  // Trefoil: x1 -> x2 has power 0 and cancels, leaving x0 alone.
  GradedUComplex t = reduce(forget_alexander(trefoil().at("0")));
  REQUIRE(t.size() == 1);
  CHECK(t.generators()[0].id == "x0");
  CHECK(localized_rank(t) == 1);
}

TEST_CASE("localized rank examples")
{
  CHECK(localized_rank(forget_alexander(unknot_complex())) == 1);
  CHECK(localized_rank(forget_alexander(acyclic_primitive(Primitive::box))) == 0);
  CHECK(localized_rank(forget_alexander(trefoil().at("0"))) == 1);
  CHECK(localized_rank(forget_alexander(acyclic_primitive(Primitive::segment_h))) == 0);
}

TEST_CASE("d-invariant examples agree with the oracle")
{
  KnotComplex t = trefoil().at("0");
  CHECK(d_invariant(forget_alexander(unknot_complex())) == 0);
  CHECK(oracle::d(t) == 0);
  CHECK(d_invariant(forget_alexander(t)) == 0);
  CHECK(oracle::d(oracle::a_minus(t, 0)) == -2);
  CHECK(d_invariant(a_subcomplex(t, 0)) == -2);
  try {
    d_invariant(forget_alexander(acyclic_primitive(Primitive::box)));
    FAIL("box has no tower");
  } catch (const error& e) {
    CHECK(e.code() == errc::no_tower);
  }
}

TEST_CASE("acyclicity examples")
{
  CHECK(is_acyclic(forget_alexander(acyclic_primitive(Primitive::box))));
  CHECK_FALSE(is_acyclic(forget_alexander(unknot_complex())));
  CHECK(is_acyclic(forget_alexander(acyclic_primitive(Primitive::segment_v))));
  // The horizontal segment is U-torsion, not acyclic.
  CHECK_FALSE(is_acyclic(forget_alexander(acyclic_primitive(Primitive::segment_h))));
}

TEST_CASE("truncated homology examples")
{
  TruncatedHomology u = truncated_f2_homology(forget_alexander(unknot_complex()), 3);
  CHECK(u.dims == std::map<Rational, std::int64_t>{{0, 1}, {-2, 1}, {-4, 1}});
  CHECK(truncated_f2_homology(forget_alexander(acyclic_primitive(Primitive::box)), 1).dims.empty());
  CHECK(truncated_f2_homology(forget_alexander(trefoil().at("0")), 1).dims == std::map<Rational, std::int64_t>{{0, 1}});
}

TEST_CASE("the truncation level exceeds every torsion order")
{
  for (const GradedUComplex& g : fuzz_graded(40)) {
    SmithForm s = smith_form(g);
    const std::int64_t n = safe_truncation_level(g);
    for (const auto& t : s.torsion) CHECK(t.order < n);
  }
}

TEST_CASE("Smith form predictions match brute-force truncated homology")
{
  for (const GradedUComplex& g : fuzz_graded(40)) {
    const std::int64_t n = safe_truncation_level(g);
    SmithForm s = smith_form(g);
    CHECK(predicted_dims(g, s, n) == truncated_f2_homology(g, n).dims);
  }
}

TEST_CASE("d from the truncation matches the oracle on the fuzz corpus")
{
  for (const auto& f : random_corpus(40))
    for (const auto& [l, c] : f.complexes) {
      CHECK(d_invariant(forget_alexander(c)) == oracle::d(c));
      CHECK(d_invariant(forget_alexander(flip(c))) == oracle::d(flip(c)));
    }
}

TEST_CASE("reduce preserves the homology profile")
{
  for (const GradedUComplex& g : fuzz_graded(40)) {
    GradedUComplex r = reduce(g);
    for (const Arrow& a : r.arrows()) CHECK(a.upower >= 1);
    CHECK(localized_rank(r) == localized_rank(g));
    CHECK(is_acyclic(r) == is_acyclic(g));
    if (localized_rank(g) > 0) CHECK(d_invariant(r) == d_invariant(g));
    const std::int64_t n = safe_truncation_level(g);
    CHECK(truncated_f2_homology(r, n).dims == truncated_f2_homology(g, n).dims);
  }
}

TEST_CASE("d shifts with the Maslov grading and is additive over direct sums")
{
  auto corpus = random_corpus(20);
  for (std::size_t i = 0; i + 1 < corpus.size(); ++i) {
    const KnotComplex& a = corpus[i].complexes.begin()->second;
    const KnotComplex& b = corpus[i + 1].complexes.begin()->second;
    const Rational da = d_invariant(forget_alexander(a));
    CHECK(d_invariant(forget_alexander(shift(a, 3, 0))) == da + 3);
    if (a.coset() != b.coset() || !is_integer(a.generator(0).maslov - b.generator(0).maslov)) continue;
    KnotComplex sum = direct_sum(a, relabel(b, "r."), ComplexKind::raw);
    CHECK(localized_rank(forget_alexander(sum)) == 2);
    CHECK(d_invariant(forget_alexander(sum)) == std::max(da, d_invariant(forget_alexander(b))));
  }
}

TEST_CASE("three acyclicity tests agree")
{
  for (const GradedUComplex& g : fuzz_graded(40)) {
    const bool at_zero = is_acyclic(g);
    const bool truncated_zero = truncated_f2_homology(g, 1).dims.empty();
    SmithForm s = smith_form(g);
    const bool smith_zero = s.free.empty() && s.torsion.empty();
    CHECK(at_zero == truncated_zero);
    CHECK(at_zero == smith_zero);
  }
}
