#include <doctest.h>

#include <random>

#include "subword/complexes.hpp"
#include "subword/errors.hpp"
#include "subword/ideals.hpp"
#include "subword/oracles.hpp"

using namespace subword;

namespace {

SquarefreeMonomial mono(int n, std::initializer_list<int> vars) {
  return SquarefreeMonomial(n, set_of(std::vector<int>(vars)));
}

// the dual ideal of the main worked example, in lex order
MonomialIdeal example_dual_ideal() {
  return MonomialIdeal(8, {mono(8, {1, 2, 4, 6}), mono(8, {1, 4, 6, 7}),
                           mono(8, {3, 4, 6, 7}), mono(8, {4, 5, 6, 7})});
}

}  // namespace

TEST_SUITE_BEGIN("ideals");

TEST_CASE("lex_compare") {
  CHECK(lex_compare(mono(8, {1, 2, 4, 6}), mono(8, {1, 4, 6, 7})) > 0);
  CHECK(lex_compare(mono(8, {1, 2}), mono(8, {1, 2})) == 0);
  CHECK(lex_compare(mono(8, {2, 3}), mono(8, {1, 4})) < 0);
}

TEST_CASE("minimal generators") {
  MonomialIdeal ideal(4, {mono(4, {1, 2}), mono(4, {1, 2, 3}), mono(4, {3})});
  CHECK(ideal.gens().size() == 2);
  CHECK(ideal.contains_monomial(mono(4, {1, 2, 3})));
  CHECK_FALSE(ideal.contains_monomial(mono(4, {1})));
  CHECK(MonomialIdeal(3, {mono(3, {}), mono(3, {1})}).is_unit());
  CHECK(MonomialIdeal::zero(3).is_zero());
}

TEST_CASE("colon_by_monomial") {
  MonomialIdeal p1(8, {mono(8, {1, 2, 4, 6})});
  CHECK(colon_by_monomial(p1, mono(8, {1, 4, 6, 7}))
            .same_ideal(MonomialIdeal(8, {mono(8, {2})})));

  MonomialIdeal p123(8, {mono(8, {1, 2, 4, 6}), mono(8, {1, 4, 6, 7}),
                         mono(8, {3, 4, 6, 7})});
  CHECK(colon_by_monomial(p123, mono(8, {4, 5, 6, 7}))
            .same_ideal(MonomialIdeal(8, {mono(8, {1}), mono(8, {3})})));

  // u inside the ideal gives the unit ideal
  CHECK(colon_by_monomial(p1, mono(8, {1, 2, 4, 6})).is_unit());
}

TEST_CASE("linear quotients certificate") {
  LinearQuotientsResult result = lex_linear_quotients(example_dual_ideal());
  REQUIRE(result.success());
  CHECK(result.certificate->sets ==
        std::vector<IndexSet>{0, set_of({2}), set_of({1}), set_of({1, 3})});
  CHECK(result.certificate->d == std::vector<int>{0, 1, 1, 2});

  MonomialIdeal principal(5, {mono(5, {1, 2, 5})});
  LinearQuotientsResult trivial = lex_linear_quotients(principal);
  REQUIRE(trivial.success());
  CHECK(trivial.certificate->sets == std::vector<IndexSet>{0});

  MonomialIdeal disjoint(4, {mono(4, {1, 2}), mono(4, {3, 4})});
  LinearQuotientsResult failure = lex_linear_quotients(disjoint);
  CHECK_FALSE(failure.success());
  CHECK(failure.failure_index == 2);

  CHECK_THROWS_AS(
      linear_quotients_certificate(disjoint, {mono(4, {1, 2}), mono(4, {1, 2})}),
      NotAPermutation);
}

TEST_CASE("set_via_min_formula on subword duals and on the counterexample") {
  std::vector<IndexSet> reps{set_of({1, 2, 4, 6}), set_of({1, 4, 6, 7}),
                             set_of({3, 4, 6, 7}), set_of({4, 5, 6, 7})};
  CHECK(set_via_min_formula(reps) ==
        std::vector<IndexSet>{0, set_of({2}), set_of({1}), set_of({1, 3})});

  CHECK(set_via_min_formula({set_of({1, 2})}) == std::vector<IndexSet>{0});

  // the rule is NOT valid for general lex-ordered ideals: here the true
  // quotient sets are {}, {1}, {3} but the rule inserts 1 into the last one
  MonomialIdeal counterexample(
      5, {mono(5, {1, 2, 3}), mono(5, {2, 3, 4}), mono(5, {2, 4, 5})});
  LinearQuotientsResult lq = lex_linear_quotients(counterexample);
  REQUIRE(lq.success());
  CHECK(lq.certificate->sets ==
        std::vector<IndexSet>{0, set_of({1}), set_of({3})});
  std::vector<IndexSet> by_rule = set_via_min_formula(
      {set_of({1, 2, 3}), set_of({2, 3, 4}), set_of({2, 4, 5})});
  CHECK(by_rule[1] == set_of({1}));
  CHECK(by_rule[2] == set_of({1, 3}));
  CHECK(by_rule[2] != lq.certificate->sets[2]);

  CHECK_THROWS_AS(set_via_min_formula({set_of({2}), set_of({1})}), InputError);
}

TEST_CASE("set bound for lex linear quotients") {
  // set(u_i) lands inside [max(u_i)] minus supp(u_i) whenever the lex order
  // gives linear quotients
  std::mt19937 rng(4242);
  int checked = 0;
  while (checked < 25) {
    int n = 4 + static_cast<int>(rng() % 3);
    std::vector<SquarefreeMonomial> gens;
    int count = 2 + static_cast<int>(rng() % 4);
    for (int i = 0; i < count; ++i)
      gens.emplace_back(n, 1 + static_cast<IndexSet>(rng() % ((1u << n) - 1)));
    MonomialIdeal ideal(n, gens);
    LinearQuotientsResult lq = lex_linear_quotients(ideal);
    if (!lq.success()) continue;
    ++checked;
    for (std::size_t i = 0; i < lq.certificate->sets.size(); ++i) {
      IndexSet allowed = full_set(lq.certificate->order[i].max_var()) &
                         ~lq.certificate->order[i].support();
      CHECK(is_subset(lq.certificate->sets[i], allowed));
    }
  }
}

TEST_CASE("min comparison lemma for same-degree monomials") {
  std::mt19937 rng(6060);
  int checked = 0;
  while (checked < 400) {
    int n = 5 + static_cast<int>(rng() % 3);
    int deg = 2 + static_cast<int>(rng() % 3);
    auto draw = [&] {
      IndexSet s = 0;
      while (set_size(s) < deg) s = set_with(s, 1 + static_cast<int>(rng() % n));
      return SquarefreeMonomial(n, s);
    };
    SquarefreeMonomial u = draw(), v = draw(), w = draw();
    if (lex_compare(u, w) <= 0 || lex_compare(v, w) <= 0) continue;
    IndexSet du = u.support() & ~w.support(), dv = v.support() & ~w.support();
    if (du == 0 || dv == 0 || set_min(du) == set_min(dv)) continue;
    ++checked;
    CHECK((set_min(du) < set_min(dv)) == (lex_compare(u, v) > 0));
  }
}

TEST_CASE("betti_from_certificate") {
  LinearQuotientsResult lq = lex_linear_quotients(example_dual_ideal());
  REQUIRE(lq.success());
  BettiTable betti = betti_from_certificate(*lq.certificate);
  CHECK(betti.total(0) == 4);
  CHECK(betti.total(1) == 4);
  CHECK(betti.total(2) == 1);
  CHECK(betti.at(1, 5) == 4);
  CHECK(betti.projdim() == 2);
  CHECK(betti == hochster_betti(example_dual_ideal()));

  MonomialIdeal principal(5, {mono(5, {1, 2, 5})});
  BettiTable trivial =
      betti_from_certificate(*lex_linear_quotients(principal).certificate);
  CHECK(trivial.total(0) == 1);
  CHECK(trivial.projdim() == 0);

  MonomialIdeal mixed(4, {mono(4, {1}), mono(4, {2, 3})});
  CHECK_THROWS_AS(
      betti_from_certificate(*lex_linear_quotients(mixed).certificate),
      MixedDegrees);
}

TEST_CASE("d-values 0..r-1 give binomial Betti numbers") {
  // certificate with d = (0,1,...,r-1) must produce beta_i = C(r, i+1)
  MonomialIdeal ideal(5, {mono(5, {1, 2, 5}), mono(5, {1, 3, 5}), mono(5, {1, 4, 5})});
  LinearQuotientsResult lq = lex_linear_quotients(ideal);
  REQUIRE(lq.success());
  CHECK(lq.certificate->d == std::vector<int>{0, 1, 2});
  BettiTable betti = betti_from_certificate(*lq.certificate);
  for (int i = 0; i <= 2; ++i) CHECK(betti.total(i) == binomial(3, i + 1));
  CHECK(betti == hochster_betti(ideal));
}

TEST_CASE("certificate Betti numbers match Hochster on random ideals") {
  // not only subword duals: any equigenerated ideal with lex linear
  // quotients must agree with the restriction-homology table
  std::mt19937 rng(1717);
  int checked = 0;
  while (checked < 40) {
    int n = 4 + static_cast<int>(rng() % 3);
    int deg = 2 + static_cast<int>(rng() % 2);
    std::vector<SquarefreeMonomial> gens;
    int count = 2 + static_cast<int>(rng() % 4);
    for (int i = 0; i < count; ++i) {
      IndexSet s = 0;
      while (set_size(s) < deg) s = set_with(s, 1 + static_cast<int>(rng() % n));
      gens.emplace_back(n, s);
    }
    MonomialIdeal ideal(n, gens);
    LinearQuotientsResult lq = lex_linear_quotients(ideal);
    if (!lq.success()) continue;
    bool equigenerated = true;
    for (const auto& g : ideal.gens())
      if (g.degree() != deg) equigenerated = false;
    if (!equigenerated) continue;
    ++checked;
    CHECK(betti_from_certificate(*lq.certificate) == hochster_betti(ideal));
  }
}

TEST_CASE("projdim bound check") {
  LinearQuotientsResult lq = lex_linear_quotients(example_dual_ideal());
  REQUIRE(lq.success());
  CHECK(projdim_bound_check(*lq.certificate, 8, 4));

  MonomialIdeal principal(3, {mono(3, {1, 2})});
  CHECK(projdim_bound_check(*lex_linear_quotients(principal).certificate, 3, 2));
}

TEST_CASE("regularity_of_SR_ideal") {
  CoxeterSystem a3 = CoxeterSystem::type_a(3);
  GroupElement pi = a3.element_from_data({2, 4, 3, 1});

  RegularityResult example =
      regularity_of_SR_ideal(a3, {1, 2, 1, 3, 1, 2, 3, 1}, pi);
  CHECK(example.reg == 3);
  CHECK(example.bound == 5);
  CHECK(example.within_bound);

  RegularityResult single = regularity_of_SR_ideal(a3, {1, 2, 3, 2}, pi);
  CHECK(single.reg == 1);
  CHECK(single.bound == 1);
  CHECK(single.within_bound);

  GroupElement s123 = element_of_word(a3, {1, 2, 3});
  RegularityResult special = regularity_of_SR_ideal(a3, {1, 2, 2, 2, 3}, s123);
  CHECK(special.reg == 3);
  CHECK(special.bound == 3);
  CHECK(special.within_bound);

  CHECK_THROWS_AS(regularity_of_SR_ideal(a3, {1, 1}, pi), NotContained);
}

TEST_CASE("hilbert numerator routes") {
  CoxeterSystem a3 = CoxeterSystem::type_a(3);
  GroupElement pi = a3.element_from_data({2, 4, 3, 1});
  Word q{1, 2, 1, 3, 1, 2, 3, 1};

  LinearQuotientsResult lq = lex_linear_quotients(example_dual_ideal());
  REQUIRE(lq.success());
  HilbertNumerator by_cert = hilbert_numerator_from_certificate(*lq.certificate);
  CHECK(by_cert.to_string() == "4t^4 - 4t^5 + t^6");
  CHECK(by_cert.coeff == std::map<int, long long>{{4, 4}, {5, -4}, {6, 1}});

  HilbertNumerator by_census =
      hilbert_numerator_from_census(demazure_census(a3, q, pi));
  CHECK(by_cert.same_coefficients(by_census));

  HilbertNumerator fine = hilbert_numerator_fine(a3, q, pi);
  CHECK(by_cert.same_coefficients(fine));
  REQUIRE(fine.fine.has_value());
  // each representation contributes +1 on its own position set
  CHECK(fine.fine->at(set_of({1, 2, 4, 6})) == 1);

  MonomialIdeal principal(6, {mono(6, {2, 3, 5})});
  CHECK(hilbert_numerator_from_certificate(
            *lex_linear_quotients(principal).certificate)
            .to_string() == "t^3");

  // closed form for the special class with r = 3, length 3
  MonomialIdeal special(5, {mono(5, {1, 2, 5}), mono(5, {1, 3, 5}), mono(5, {1, 4, 5})});
  HilbertNumerator closed = hilbert_numerator_from_certificate(
      *lex_linear_quotients(special).certificate);
  CHECK(closed.to_string() == "3t^3 - 3t^4 + t^5");
}

TEST_CASE("height") {
  MonomialIdeal special(5, {mono(5, {1, 2, 5}), mono(5, {1, 3, 5}), mono(5, {1, 4, 5})});
  CHECK(height(special) == 1);
  CHECK(height(MonomialIdeal(2, {mono(2, {1}), mono(2, {2})})) == 2);
  CHECK(height(example_dual_ideal()) == 1);  // {4} covers every generator

  // exhaustive cover oracle on a small mixed ideal
  MonomialIdeal mixed(4, {mono(4, {1, 2}), mono(4, {3, 4}), mono(4, {1, 3})});
  CHECK(height(mixed) == 2);

  CHECK_THROWS_AS(height(MonomialIdeal::zero(3)), ZeroIdeal);
  CHECK_THROWS_AS(height(MonomialIdeal(3, {mono(3, {})})), UnitIdeal);
}

TEST_SUITE_END();
