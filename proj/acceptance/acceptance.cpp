// Acceptance run: one PASS/FAIL line per criterion, each under a time limit.
// Expected values come from the brute-force oracles in tests/oracles.hpp.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "dol/reasoner.hpp"
#include "dol/semantics.hpp"
#include "dol/translation.hpp"
#include "dol/verification.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace dol;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define REQUIRE(cond)                                                               \
  do {                                                                              \
    if (!(cond)) throw Failure(std::string(#cond) + " (line " + std::to_string(__LINE__) + ")"); \
  } while (0)

int failures = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<void()>& body) {
  const auto start = std::chrono::steady_clock::now();
  std::string problem;
  try {
    body();
  } catch (const Failure& f) {
    problem = f.what();
  } catch (const std::exception& e) {
    problem = std::string("unexpected exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (problem.empty() && secs > limit_s) problem = "took longer than " + std::to_string(limit_s) + "s";
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(3);
  line << (problem.empty() ? "[PASS] " : "[FAIL] ") << id << " " << title << " (" << secs << "s)";
  if (!problem.empty()) {
    line << ": " << problem;
    ++failures;
  }
  std::cout << line.str() << std::endl;
}

struct Loaded {
  DolDocument doc;
  Environment env;
  explicit Loaded(const std::string& rel)
      : doc(testutil::load_doc(rel)), env(Environment::from_document(doc, &testutil::fixture_store())) {}
  RelationshipReport verify(std::string_view name, int bound = 3) const {
    const LinkDef* link = doc.find_link(name);
    REQUIRE(link != nullptr);
    return verify_link(*link, env, Bound(bound));
  }
};

bool holds_all(const oracle::Structure& s, const std::vector<Sentence>& axioms) {
  for (const auto& ax : axioms) {
    if (!oracle::holds(s, ax)) return false;
  }
  return true;
}

FiniteModel to_model(const oracle::Structure& s, const Signature& sig) {
  FiniteModel m = FiniteModel::empty_over(sig, s.n);
  for (const auto& [name, tuples] : s.rels) {
    for (const auto& t : tuples) m.relations.at(name).insert(t);
  }
  return m;
}

Theory fixture_clif(const std::string& rel) { return testutil::clif_theory(testutil::slurp(testutil::fixture(rel))); }

void parse_and_round_trip() {
  for (const char* f : {"owltime_le.dol", "relationships.dol", "prop_modules.dol", "el_fol.dol"}) {
    const DolDocument doc = testutil::load_doc(f);
    const std::string printed = print_dol(doc);
    REQUIRE(parse_dol(printed) == doc);
  }
  const DolDocument doc = testutil::load_doc("owltime_le.dol");
  REQUIRE(doc.ontologies().size() == 3);
  REQUIRE(doc.links().size() == 1);
  REQUIRE(doc.links().front()->kind == LinkKind::Interpretation);
}

void model_counts() {
  const Theory partial = fixture_clif("colore/orderings/partial_ordering.clif");
  const Theory linear = fixture_clif("colore/orderings/linear_ordering.clif");
  const std::size_t partial3 = oracle::count_orders(3, false);
  REQUIRE(partial3 == 19);
  REQUIRE(count_models(partial, 3) == partial3);
  for (int n = 1; n <= 3; ++n) REQUIRE(count_models(linear, n) == oracle::count_orders(n, true));
}

void owltime_interpretation() {
  const Loaded l("owltime_le.dol");
  const auto r = l.verify("i");
  REQUIRE(r.overall == OverallStatus::VerifiedUpToBound);
  REQUIRE(r.bound == 3);
  REQUIRE(r.obligations.size() == 4);

  LinkDef swapped = *l.doc.find_link("i");
  swapped.target = OntologyExpr::ref(Iri(testutil::kOrd + "partial_ordering"));
  swapped.conservative = false;
  const auto p = verify_link(swapped, l.env, Bound(3));
  REQUIRE(p.overall == OverallStatus::Refuted);
  REQUIRE(p.witness.has_value());
  REQUIRE(p.witness->domain_size == 2);
  const Theory partial = fixture_clif("colore/orderings/partial_ordering.clif");
  const Theory linear = fixture_clif("colore/orderings/linear_ordering.clif");
  for (const auto& ax : partial.axioms) REQUIRE(satisfies(*p.witness, ax));
  REQUIRE(p.failed_obligation.has_value());
  REQUIRE(!satisfies(*p.witness, linear.axioms.at(*p.obligations.at(*p.failed_obligation).obligation.axiom_index)));
  // Independent re-check with the reference evaluator.
  const auto s = oracle::from_model(*p.witness);
  REQUIRE(holds_all(s, partial.axioms));
  REQUIRE(!holds_all(s, linear.axioms));
}

void definitional_and_prop() {
  const Loaded l("relationships.dol");
  REQUIRE(l.verify("mapping_definitional").overall == OverallStatus::Verified);
  for (int b = 1; b <= 3; ++b) {
    const auto r = l.verify("mapping_conservative", b);
    REQUIRE(r.overall == OverallStatus::VerifiedUpToBound);
    REQUIRE(r.bound == b);
  }

  const Loaded prop("prop_modules.dol");
  const auto r = prop.verify("adds_p");
  REQUIRE(r.overall == OverallStatus::Refuted);
  REQUIRE(r.witness.has_value());
  // Oracle: the valuation with p false satisfies the empty base and no
  // expansion can satisfy p.
  oracle::Structure s = oracle::from_model(*r.witness);
  REQUIRE(s.rels["p"].empty());
  REQUIRE(!oracle::expandable(s, {}, {Formula::atom("p")}));
}

void nonconservativity() {
  const Loaded l("el_fol.dol");
  const auto r = l.verify("fol_strengthening", 2);
  REQUIRE(r.overall == OverallStatus::Verified);
  REQUIRE(r.witness.has_value());
  const Theory base = flatten(l.doc.ontologies()[0]->body, l.env, LogicId::FOLEQ);
  const Theory asym = flatten(l.doc.ontologies()[1]->body, l.env, LogicId::FOLEQ);
  const auto s = oracle::from_model(*r.witness);
  REQUIRE(holds_all(s, base.axioms));
  REQUIRE(!holds_all(s, asym.axioms));
}

void satisfaction_condition() {
  const auto& graph = TranslationGraph::core();
  std::mt19937 rng(2024);

  const auto prop_path = graph.find_path(LogicId::Prop, LogicId::FOLEQ);
  Signature prop_sig(LogicId::Prop);
  const std::vector<Name> atoms{"p", "q", "r"};
  for (const auto& a : atoms) prop_sig.add_predicate(a, 0);
  std::vector<std::pair<Sentence, Sentence>> prop_cases;
  for (int i = 0; i < 50; ++i) {
    const Sentence phi(LogicId::Prop, oracle::random_prop(rng, atoms, 4));
    prop_cases.emplace_back(phi, translate_to(phi, LogicId::FOLEQ));
  }
  const Signature prop_target = prop_path.steps.front().sig_map(prop_sig);
  for (int n = 1; n <= 3; ++n) {
    oracle::for_each_structure(oracle::predicate_list(prop_target), {}, n, [&](const oracle::Structure& s) {
      const FiniteModel m = to_model(s, prop_target);
      const FiniteModel back = reduct_along(prop_path, m);
      for (const auto& [phi, tphi] : prop_cases) {
        const bool expected = oracle::holds(s, phi);
        REQUIRE(satisfies(m, tphi) == expected);
        REQUIRE(satisfies(back, phi) == expected);
      }
    });
  }

  const auto el_path = graph.find_path(LogicId::EL, LogicId::FOLEQ);
  Signature el_sig(LogicId::EL);
  el_sig.add_predicate("A", 1);
  el_sig.add_predicate("B", 1);
  el_sig.add_predicate("r", 2);
  std::vector<std::pair<Sentence, Sentence>> el_cases;
  for (int i = 0; i < 50; ++i) {
    const Sentence phi(Subsumption{oracle::random_concept(rng, {"A", "B"}, "r", 3),
                                   oracle::random_concept(rng, {"A", "B"}, "r", 3)});
    el_cases.emplace_back(phi, translate_to(phi, LogicId::FOLEQ));
  }
  const Signature el_target = el_path.steps.front().sig_map(el_sig);
  for (int n = 1; n <= 3; ++n) {
    oracle::for_each_structure(oracle::predicate_list(el_target), {}, n, [&](const oracle::Structure& s) {
      const FiniteModel m = to_model(s, el_target);
      const FiniteModel back = reduct_along(el_path, m);
      for (const auto& [phi, tphi] : el_cases) {
        const bool expected = oracle::holds(s, phi);
        REQUIRE(satisfies(m, tphi) == expected);
        REQUIRE(satisfies(back, phi) == expected);
      }
    });
  }
}

void propositional_queries() {
  std::mt19937 rng(7);
  const std::vector<Name> pool{"a", "b", "c", "d"};
  for (int i = 0; i < 200; ++i) {
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, pool.size())(rng);
    const std::vector<Name> atoms(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
    std::vector<Formula> premises;
    const int np = std::uniform_int_distribution<int>(0, 3)(rng);
    for (int p = 0; p < np; ++p) premises.push_back(oracle::random_prop(rng, atoms, 3));
    const Formula goal = oracle::random_prop(rng, atoms, 3);
    Signature sig(LogicId::Prop);
    for (const auto& a : atoms) sig.add_predicate(a, 0);
    std::vector<Sentence> axioms;
    for (const auto& p : premises) axioms.emplace_back(LogicId::Prop, p);
    const Theory t = theory_from_axioms(LogicId::Prop, axioms, &sig);
    const Verdict v = bounded_entailment(t, Sentence(LogicId::Prop, goal));
    const bool expected = oracle::truth_table_entails(premises, goal, atoms);
    REQUIRE(v.status == (expected ? VerdictStatus::Proved : VerdictStatus::Disproved));
    REQUIRE(!v.searched_up_to.has_value());
  }
}

// Random bytes, and fixture text with random byte edits, must either parse
// or raise a positioned DolError; anything else fails the criterion.
void robustness() {
  std::mt19937 rng(99);
  const std::vector<std::string> seeds{testutil::slurp(testutil::fixture("owltime_le.dol")),
                                       testutil::slurp(testutil::fixture("relationships.dol")),
                                       testutil::slurp(testutil::fixture("colore/orderings/linear_ordering.clif"))};
  auto random_input = [&](int i) {
    std::uniform_int_distribution<int> byte(0, 255);
    if (i % 2 == 0) {
      std::string s(std::uniform_int_distribution<std::size_t>(0, 300)(rng), '\0');
      for (char& c : s) c = static_cast<char>(byte(rng));
      return s;
    }
    std::string s = seeds[static_cast<std::size_t>(i) % seeds.size()];
    const int edits = std::uniform_int_distribution<int>(1, 8)(rng);
    for (int e = 0; e < edits && !s.empty(); ++e) {
      const std::size_t at = std::uniform_int_distribution<std::size_t>(0, s.size() - 1)(rng);
      switch (byte(rng) % 3) {
        case 0: s[at] = static_cast<char>(byte(rng)); break;
        case 1: s.erase(at, std::uniform_int_distribution<std::size_t>(1, 20)(rng)); break;
        default: s.insert(at, 1, "()%{}|<>:\"\n"[byte(rng) % 11]); break;
      }
    }
    return s;
  };
  for (int i = 0; i < 1000; ++i) {
    const std::string input = random_input(i);
    for (int which = 0; which < 2; ++which) {
      const auto start = std::chrono::steady_clock::now();
      try {
        if (which == 0) {
          parse_dol(input);
        } else {
          parse_clif(input);
        }
      } catch (const DolError& e) {
        REQUIRE(e.position().has_value());
      }
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      REQUIRE(secs < 1.0);
    }
  }
}

}  // namespace

int main() {
  criterion(1, "fixture documents parse and round-trip", 1.0, parse_and_round_trip);
  criterion(2, "order model counts match brute force", 5.0, model_counts);
  criterion(3, "owltime interpretation verified, partial target refuted", 10.0, owltime_interpretation);
  criterion(4, "definitional and conservative agree; Prop extension refuted", 5.0, definitional_and_prop);
  criterion(5, "nonconservativity witness within bound 2", 5.0, nonconservativity);
  criterion(6, "satisfaction condition on Prop->FOLEQ and EL->FOLEQ", 60.0, satisfaction_condition);
  criterion(7, "propositional entailment matches truth tables", 5.0, propositional_queries);
  criterion(8, "parsers survive random input", 60.0, robustness);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
