#include <catch_amalgamated.hpp>

#include "hfk/hfk.hpp"
#include "oracle.hpp"

using namespace hfk;

namespace {

Rational r_of(const json& j) { return parse_rational(j.get<std::string>()); }

}  // namespace

TEST_CASE("v-subadd on the trefoil and its dual has a strict witness")
{
  TheoremCheckResult r = check_v_subadditivity(trefoil(), dual_family(trefoil()));
  REQUIRE(r.verdict == Verdict::holds);
  REQUIRE(r.witness.contains("strict"));
  const json& w = r.witness["strict"];
  const Rational s1 = r_of(w["s1"]), s2 = r_of(w["s2"]);
  CHECK(s1 == 0);
  CHECK(s2 == 0);
  // Recompute from scratch with the oracle.
  KnotComplex t = trefoil().at("0");
  CHECK(w["V_sum"].get<std::int64_t>() == oracle::V(tensor(t, dual(t)), s1 + s2));
  CHECK(w["V1"].get<std::int64_t>() == oracle::V(t, s1));
  CHECK(w["V2"].get<std::int64_t>() == oracle::V(dual(t), s2));
  CHECK(w["V_sum"].get<std::int64_t>() == 0);
  CHECK(w["V1"].get<std::int64_t>() + w["V2"].get<std::int64_t>() == 1);
}

TEST_CASE("nu-subadd and d-additivity on the standard corpus")
{
  auto corpus = standard_corpus();
  for (std::size_t i = 0; i < corpus.size(); ++i)
    for (std::size_t j = i; j < corpus.size(); j += 3) {
      CAPTURE(corpus[i].name, corpus[j].name);
      CHECK(check_nu_subadditivity(corpus[i], corpus[j]).verdict == Verdict::holds);
      CHECK(check_d_additivity(corpus[i], corpus[j]).verdict == Verdict::holds);
    }
}

TEST_CASE("additivity separates locally trivial labels")
{
  auto corpus = standard_corpus();
  TheoremCheckResult f8 = check_additivity(figure_eight(), corpus);
  CHECK(f8.verdict == Verdict::holds);
  CHECK(f8.witness["labels"][0]["locally_trivial"].get<bool>());
  CHECK(check_additivity(unknot_in_lens_space(2, 1, 2), corpus).verdict == Verdict::holds);

  TheoremCheckResult t = check_additivity(trefoil(), corpus);
  REQUIRE(t.verdict == Verdict::holds);
  const json& entry = t.witness["labels"][0];
  CHECK_FALSE(entry["locally_trivial"].get<bool>());
  const json& w = entry["dual_witness"];
  CHECK(r_of(w["nu_plus_sum"]) == 0);
  CHECK(r_of(w["nu_plus_1"]) + r_of(w["nu_plus_2"]) == 1);
  KnotComplex c = trefoil().at("0");
  CHECK(oracle::nu_plus(tensor(c, dual(c))) == r_of(w["nu_plus_sum"]));
}

TEST_CASE("tlt-symmetry is inapplicable unless every label is locally trivial")
{
  CHECK(check_tlt_symmetry(trefoil()).verdict == Verdict::inapplicable);
  for (const auto& f : standard_corpus()) {
    TheoremCheckResult r = check_tlt_symmetry(f);
    CHECK(r.verdict != Verdict::violated);
    if (r.verdict == Verdict::holds) CHECK(r.witness["nu_plus"] == r.witness["nu_plus_dual"]);
  }
}

TEST_CASE("middle-dual holds on the corpus")
{
  for (const auto& f : standard_corpus()) {
    CAPTURE(f.name);
    CHECK(check_middle_dual(f).verdict == Verdict::holds);
  }
}

TEST_CASE("cabling")
{
  TheoremCheckResult r = check_cabling(AlexanderData{{1, 0, -1}}, "T(2,3)", 2, 7);
  REQUIRE(r.verdict == Verdict::holds);
  CHECK(r_of(r.witness["cable_nu_plus"]) == 5);
  CHECK(r_of(r.witness["expected"]) == 5);
  KnotComplex cable = cable_staircase(AlexanderData{{1, 0, -1}}, 2, 7).at("0");
  CHECK(oracle::nu_plus(cable) == 5);
  CHECK(check_cabling(AlexanderData{{1, 0, -1}}, "T(2,3)", 2, 1).verdict == Verdict::inapplicable);
  CHECK(check_cabling(AlexanderData{{2, 1, 0, -1, -2}}, "T(2,5)", 3, 13).verdict == Verdict::holds);
}

TEST_CASE("staircase recovery")
{
  auto ad = recover_staircase(torus_knot(3, 4));
  REQUIRE(ad);
  CHECK(ad->exponents == std::vector<std::int64_t>{3, 2, 0, -2, -3});
  CHECK_FALSE(recover_staircase(figure_eight()));
  CHECK_FALSE(recover_staircase(unknot_in_lens_space(2, 1, 0)));
}

TEST_CASE("genus additivity certificates")
{
  KnotComplexFamily q = unknot_in_lens_space(2, 1, 2);
  REQUIRE(q.claimed_genus == std::optional<Rational>(0));
  TheoremCheckResult a = check_genus_additivity(trefoil(), q);
  REQUIRE(a.verdict == Verdict::holds);
  CHECK(r_of(a.witness["certified_genus"]) == 1);
  CHECK(a.witness["sum_sharp"].get<bool>());

  TheoremCheckResult b = check_genus_additivity(torus_knot(3, 4), q);
  REQUIRE(b.verdict == Verdict::holds);
  CHECK(r_of(b.witness["certified_genus"]) == 3);

  CHECK(check_genus_additivity(q, trefoil()).verdict == Verdict::inapplicable);
  CHECK(check_genus_additivity(figure_eight(), q).verdict == Verdict::inapplicable);
  KnotComplexFamily unclaimed = trefoil();
  unclaimed.claimed_genus.reset();
  CHECK(check_genus_additivity(unclaimed, q).verdict == Verdict::inapplicable);
}

TEST_CASE("fuzz checks report no violations")
{
  for (const char* th : {"v-subadd", "nu-subadd", "d-additivity", "middle-dual", "tlt-symmetry", "additivity"}) {
    CAPTURE(th);
    TheoremCheckResult r = check_fuzz(th, 10, 1000);
    CHECK(r.verdict == Verdict::holds);
    CHECK(r.exit_code() == 0);
  }
  CHECK_THROWS_AS(check_fuzz("cabling", 1, 1), error);
}

TEST_CASE("a violated result exits with code 1 and keeps the first witness")
{
  TheoremCheckResult r;
  detail::violate(r, "first", {{"k", 1}});
  detail::violate(r, "second", {{"k", 2}});
  CHECK(r.exit_code() == 1);
  CHECK(r.reason == "first");
  CHECK(r.witness["k"] == 1);
  CHECK(render_result(r, Format::text).find("violated") != std::string::npos);
}
