#include <catch_amalgamated.hpp>

#include "hfk/hfk.hpp"
#include "oracle.hpp"

using namespace hfk;

namespace {

/// Sorted (M, A) multiset plus the sorted arrow signature; equal for
/// complexes that differ only in generator names.
auto signature(const KnotComplex& c)
{
  std::vector<std::pair<Rational, Rational>> gens;
  for (const auto& g : c.generators()) gens.emplace_back(g.maslov, g.alexander);
  std::sort(gens.begin(), gens.end());
  std::vector<std::tuple<Rational, Rational, Rational, Rational>> arrows;
  for (const Arrow& a : c.arrows())
    arrows.emplace_back(c.generator(a.from).maslov, c.generator(a.from).alexander, c.generator(a.to).maslov,
                        c.generator(a.to).alexander);
  std::sort(arrows.begin(), arrows.end());
  return std::make_pair(gens, arrows);
}

std::vector<KnotComplex> small_sample()
{
  std::vector<KnotComplex> out = {unknot_complex(), trefoil().at("0"), dual(trefoil().at("0")),
                                  figure_eight().at("0"), torus_knot(2, 5).at("0")};
  for (const auto& f : random_corpus(12, 100))
    for (const auto& [l, c] : f.complexes) out.push_back(c);
  return out;
}

}  // namespace

TEST_CASE("the unknot is a unit for the tensor product")
{
  for (const KnotComplex& c : small_sample()) {
    KnotComplex t = tensor(unknot_complex(), c);
    CHECK(signature(t) == signature(c));
    CHECK(t.kind() == c.kind());
  }
}

TEST_CASE("tensor products are valid with Leibniz arrows")
{
  KnotComplex t = trefoil().at("0");
  KnotComplex tt = tensor(t, t);
  CHECK(tt.size() == 9);
  CHECK(tt.arrows().size() == 2 * 3 + 3 * 2);
  CHECK(validate(tt).ok());
  CHECK(tensor(t, acyclic_primitive(Primitive::box)).kind() == ComplexKind::acyclic);
  CHECK(is_acyclic(forget_alexander(tensor(t, acyclic_primitive(Primitive::box)))));
}

TEST_CASE("d is additive under tensor products")
{
  auto sample = small_sample();
  for (std::size_t i = 0; i < sample.size(); ++i)
    for (std::size_t j = i; j < sample.size(); j += 3) {
      const Rational d1 = d_invariant(forget_alexander(sample[i]));
      const Rational d2 = d_invariant(forget_alexander(sample[j]));
      CHECK(d_invariant(forget_alexander(tensor(sample[i], sample[j]))) == d1 + d2);
    }
}

TEST_CASE("the trefoil plus its mirror has V0 = 0")
{
  KnotComplex t = trefoil().at("0");
  KnotComplex s = tensor(t, dual(t));
  REQUIRE(oracle::V(s, 0) == 0);
  CHECK(v_invariant(s, 0) == 0);
}

TEST_CASE("tensor is commutative and associative up to generator names")
{
  auto sample = small_sample();
  for (std::size_t i = 0; i + 2 < sample.size(); i += 2) {
    const auto &a = sample[i], &b = sample[i + 1], &c = sample[i + 2];
    CHECK(signature(tensor(a, b)) == signature(tensor(b, a)));
    CHECK(signature(tensor(tensor(a, b), c)) == signature(tensor(a, tensor(b, c))));
  }
}

TEST_CASE("tensor families multiply labels and act componentwise")
{
  KnotComplexFamily u = unknot();
  KnotComplexFamily f = unknot_in_lens_space(3, 1, 1);
  KnotComplexFamily uf = tensor_family(u, f);
  CHECK(uf.spinc.size() == f.spinc.size());
  for (const auto& s : f.spinc) CHECK(signature(uf.at("0#" + s.label)) == signature(f.at(s.label)));

  KnotComplexFamily two = unknot_in_lens_space(2, 1, 0);
  KnotComplexFamily six = tensor_family(two, f);
  CHECK(six.spinc.size() == 6);
  CHECK(validate(six).ok());
  CHECK(six.conj("1#2") == two.conj("1") + "#" + f.conj("2"));
}

TEST_CASE("the unknot in a rational homology sphere is additive against the trefoil")
{
  KnotComplexFamily sum = tensor_family(unknot_in_lens_space(2, 1, 2), trefoil());
  for (const auto& s : sum.spinc) {
    REQUIRE(oracle::nu_plus(sum.at(s.label)) == 1);
    CHECK(nu_plus(sum.at(s.label)) == 1);
  }
}

TEST_CASE("dualization examples")
{
  CHECK(dual(unknot_complex()) == unknot_complex());
  for (const KnotComplex& c : small_sample()) {
    CHECK(dual(dual(c)) == c);
    CHECK(validate(dual(c)).ok());
  }
  CHECK(nu_plus(dual(trefoil().at("0"))) == 0);
  CHECK(nu_plus(trefoil().at("0")) == 1);
}

TEST_CASE("dual families conjugate labels and invert the PD[K] shift")
{
  KnotComplexFamily f = floer_simple_lens(5, 2, 1);
  KnotComplexFamily d = dual_family(f);
  CHECK(validate(d).ok());
  CHECK(dual_family(d) == f);
  for (const auto& s : f.spinc) {
    CHECK(d.at(s.label) == dual(f.at(s.conj)));
    CHECK(d.pdk(s.pdk) == s.label);
  }
}

TEST_CASE("V and nu+ are subadditive on sampled pairs")
{
  auto sample = small_sample();
  for (std::size_t i = 0; i < sample.size(); ++i)
    for (std::size_t j = i; j < sample.size(); j += 4) {
      const KnotComplex &a = sample[i], &b = sample[j];
      VFunction va(a), vb(b), vs(tensor(a, b));
      for (const Rational& s1 : s_window(a))
        for (const Rational& s2 : s_window(b)) CHECK(vs(s1 + s2) <= va(s1) + vb(s2));
      CHECK(vs.nu_plus() <= va.nu_plus() + vb.nu_plus());
    }
}

TEST_CASE("nu+ is symmetric under dualization for totally locally trivial families")
{
  for (const auto& f : {unknot(), figure_eight(), unknot_in_lens_space(2, 1, 2), unknot_in_lens_space(5, 2, 1),
                        floer_simple_lens(2, 1, 0)}) {
    REQUIRE(is_totally_locally_trivial(f));
    CHECK(nu_plus(f).global == nu_plus(dual_family(f)).global);
  }
}
