#include <doctest.h>

#include <random>

#include "dol/reasoner.hpp"
#include "dol/semantics.hpp"
#include "oracles.hpp"
#include "sat_solver.hpp"
#include "test_util.hpp"

using namespace dol;

namespace {

Theory fixture_clif(const std::string& rel) {
  return testutil::clif_theory(testutil::slurp(testutil::fixture(rel)));
}

}  // namespace

TEST_CASE("order counts match brute force") {
  const Theory partial = fixture_clif("colore/orderings/partial_ordering.clif");
  const Theory linear = fixture_clif("colore/orderings/linear_ordering.clif");
  const Theory strict = fixture_clif("colore/orderings/strict_linear_ordering.clif");
  for (int n = 1; n <= 3; ++n) {
    CAPTURE(n);
    const std::size_t partial_expected = oracle::count_orders(n, false);
    const std::size_t linear_expected = oracle::count_orders(n, true);
    CHECK(count_models(partial, n) == partial_expected);
    CHECK(count_models(linear, n) == linear_expected);
    CHECK(count_models(strict, n) == linear_expected);
    // Second oracle: the generic structure enumerator with the reference
    // evaluator must agree with the hand-written order filter.
    CHECK(oracle::count_models(linear.signature, linear.axioms, n) == linear_expected);
  }
}

TEST_CASE("EL theory counts match brute force") {
  const DolDocument doc = testutil::load_doc("el_fol.dol");
  const auto& basic = std::get<BasicOntology>(doc.ontologies().front()->body.node);
  const Theory& el = basic.theory;
  for (int n = 1; n <= 3; ++n) {
    CAPTURE(n);
    CHECK(count_models(el, n) == oracle::count_models(el.signature, el.axioms, n));
  }
}

TEST_CASE("theories with constants and equality") {
  const Theory t = testutil::clif_theory("(not (= a b)) (P a) (forall (x) (if (P x) (= x a)))");
  for (int n = 1; n <= 3; ++n) {
    CHECK(count_models(t, n) == oracle::count_models(t.signature, t.axioms, n));
  }
}

TEST_CASE("random theories agree with brute force") {
  std::mt19937 rng(31);
  for (int i = 0; i < 60; ++i) {
    std::vector<Sentence> axioms;
    for (int k = 0; k < 2; ++k) axioms.emplace_back(LogicId::FOLEQ, oracle::random_fol(rng, 3));
    Signature extra(LogicId::FOLEQ);
    extra.add_predicate("P", 1);
    extra.add_predicate("Q", 1);
    extra.add_predicate("R", 2);
    extra.add_constant("c");
    const Theory t = theory_from_axioms(LogicId::FOLEQ, axioms, &extra);
    for (int n = 1; n <= 2; ++n) {
      REQUIRE(count_models(t, n) == oracle::count_models(t.signature, t.axioms, n));
    }
  }
}

TEST_CASE("enumeration is canonical and duplicate free") {
  const Theory partial = fixture_clif("colore/orderings/partial_ordering.clif");
  const auto models = enumerate_models(partial, 3);
  REQUIRE(models.size() == oracle::count_orders(3, false));
  for (std::size_t i = 1; i < models.size(); ++i) CHECK(models[i - 1] < models[i]);
  for (const auto& m : models) {
    const auto s = oracle::from_model(m);
    for (const auto& ax : partial.axioms) REQUIRE(oracle::holds(s, ax));
  }
  CHECK(enumerate_models(partial, 3, 5).size() == 5);

  std::size_t seen = 0;
  enumerate_models(partial, 3, [&](const FiniteModel&) { return ++seen < 2; });
  CHECK(seen == 2);
}

TEST_CASE("propositional theories use one element") {
  const Theory t = parse_prop("props p q\np | q\n");
  CHECK(count_models(t, 1) == 3);
  CHECK(count_models(t, 3) == 3);
  const auto v = check_consistency(t, Bound(5));
  CHECK(v.status == VerdictStatus::ModelFound);
  CHECK_FALSE(v.searched_up_to.has_value());
}

TEST_CASE("propositional entailment matches truth tables") {
  std::mt19937 rng(41);
  const std::vector<Name> atoms{"a", "b", "c", "d"};
  for (int i = 0; i < 200; ++i) {
    std::vector<Formula> premises{oracle::random_prop(rng, atoms, 3), oracle::random_prop(rng, atoms, 3)};
    const Formula goal = oracle::random_prop(rng, atoms, 3);
    std::vector<Sentence> axioms;
    for (const auto& p : premises) axioms.emplace_back(LogicId::Prop, p);
    Signature sig(LogicId::Prop);
    for (const auto& a : atoms) sig.add_predicate(a, 0);
    const Theory t = theory_from_axioms(LogicId::Prop, axioms, &sig);
    const Verdict v = bounded_entailment(t, Sentence(LogicId::Prop, goal));
    const bool expected = oracle::truth_table_entails(premises, goal, atoms);
    CAPTURE(print_theory(t));
    CAPTURE(print_sentence(Sentence(LogicId::Prop, goal)));
    REQUIRE(v.status == (expected ? VerdictStatus::Proved : VerdictStatus::Disproved));
    CHECK_FALSE(v.searched_up_to.has_value());
    if (!expected) {
      REQUIRE(v.witness.has_value());
      const auto s = oracle::from_model(*v.witness);
      for (const auto& p : premises) CHECK(oracle::eval(s, p));
      CHECK_FALSE(oracle::eval(s, goal));
    }
  }
}

TEST_CASE("first-order entailment is bounded and monotone") {
  const Theory partial = fixture_clif("colore/orderings/partial_ordering.clif");
  const Theory linear = fixture_clif("colore/orderings/linear_ordering.clif");
  const Sentence totality = linear.axioms.back();

  const Verdict refuted = bounded_entailment(partial, totality, Bound(3));
  REQUIRE(refuted.status == VerdictStatus::Disproved);
  REQUIRE(refuted.witness.has_value());
  CHECK(refuted.witness->domain_size == 2);
  const auto s = oracle::from_model(*refuted.witness);
  for (const auto& ax : partial.axioms) CHECK(oracle::holds(s, ax));
  CHECK_FALSE(oracle::holds(s, totality));
  CHECK(bounded_entailment(partial, totality, Bound(1)).status == VerdictStatus::NoCounterexampleUpTo);

  for (int b = 1; b <= 3; ++b) {
    const Verdict v = bounded_entailment(linear, partial.axioms[2], Bound(b));
    CHECK(v.status == VerdictStatus::NoCounterexampleUpTo);
    CHECK(v.searched_up_to == b);
    CHECK(v.bound_used.max_domain_size == b);
  }
}

TEST_CASE("consistency reports the least model size") {
  const Theory two = testutil::clif_theory("(not (= a b))");
  const Verdict v = check_consistency(two, Bound(3));
  REQUIRE(v.status == VerdictStatus::ModelFound);
  CHECK(v.witness->domain_size == 2);
  CHECK(check_consistency(two, Bound(1)).status == VerdictStatus::NoModelUpTo);
  CHECK(check_consistency(parse_prop("props a\na\n~a\n")).status == VerdictStatus::NoModelUpTo);
}

TEST_CASE("expansions respect the fixed base") {
  const Theory t = testutil::clif_theory("(forall (x y) (iff (lt x y) (and (leq x y) (not (= x y)))))");
  Signature base_sig(LogicId::FOLEQ);
  base_sig.add_predicate("leq", 2);
  FiniteModel base = FiniteModel::empty_over(base_sig, 2);
  for (const std::vector<int>& t2 : {std::vector<int>{0, 0}, {0, 1}, {1, 1}}) base.relations.at("leq").insert(t2);
  const auto e = find_expansion(t, base);
  REQUIRE(e.has_value());
  CHECK(e->relations.at("leq") == base.relations.at("leq"));
  CHECK(e->relations.at("lt").tuples() == std::vector<std::vector<int>>{{0, 1}});

  const Theory impossible = testutil::clif_theory("(forall (x) (leq x x)) (forall (x) (P x))");
  CHECK(find_expansion(impossible, base).has_value());
  FiniteModel irreflexive = FiniteModel::empty_over(base_sig, 2);
  CHECK_FALSE(find_expansion(impossible, irreflexive).has_value());
}

TEST_CASE("bound validation") {
  CHECK_THROWS_AS(Bound(0), std::invalid_argument);
  CHECK(Bound().max_domain_size == 3);
}

TEST_CASE("SAT enumeration matches brute force") {
  std::mt19937 rng(51);
  for (int round = 0; round < 200; ++round) {
    const int vars = std::uniform_int_distribution<int>(1, 8)(rng);
    const int primary = std::uniform_int_distribution<int>(1, vars)(rng);
    const int clauses = std::uniform_int_distribution<int>(0, 12)(rng);
    std::vector<std::vector<detail::Lit>> cnf;
    for (int c = 0; c < clauses; ++c) {
      std::vector<detail::Lit> cl;
      const int width = std::uniform_int_distribution<int>(1, 3)(rng);
      for (int k = 0; k < width; ++k) {
        const int v = std::uniform_int_distribution<int>(0, vars - 1)(rng);
        cl.push_back(std::uniform_int_distribution<int>(0, 1)(rng) ? detail::pos_lit(v) : detail::neg_lit(v));
      }
      cnf.push_back(cl);
    }

    // Projections of satisfying assignments onto the primary variables, in
    // lexicographic order with variable 0 most significant.
    std::set<std::vector<std::int8_t>> expected_set;
    for (unsigned mask = 0; mask < (1u << vars); ++mask) {
      auto value = [&](detail::Lit l) {
        const bool v = mask >> detail::lit_var(l) & 1;
        return (l & 1) ? !v : v;
      };
      const bool sat = std::all_of(cnf.begin(), cnf.end(), [&](const auto& cl) {
        return std::any_of(cl.begin(), cl.end(), value);
      });
      if (!sat) continue;
      std::vector<std::int8_t> proj;
      for (int v = 0; v < primary; ++v) proj.push_back(static_cast<std::int8_t>(mask >> v & 1));
      expected_set.insert(proj);
    }
    const std::vector<std::vector<std::int8_t>> expected(expected_set.begin(), expected_set.end());

    detail::SatSolver solver(vars);
    for (const auto& cl : cnf) solver.add_clause(cl);
    std::vector<std::vector<std::int8_t>> got;
    solver.enumerate(primary, [&](const std::vector<std::int8_t>& m) {
      got.emplace_back(m.begin(), m.begin() + primary);
      return true;
    });
    CAPTURE(round);
    REQUIRE(got == expected);
  }
}
