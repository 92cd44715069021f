#include <set>

#include "doctest.h"
#include "support.hpp"
#include "xbdi/core/trace.hpp"
#include "xbdi/explain/content.hpp"

using namespace xbdi;
using namespace xbdi::testing;

namespace {

std::set<Term> as_set(const FactSet& f) { return {f.facts().begin(), f.facts().end()}; }

// No functional state variable with two values in the set.
bool consistent(const FactSet& f, const Vocabulary& v) {
  const auto facts = f.facts();
  for (std::size_t i = 0; i < facts.size(); ++i) {
    for (std::size_t j = i + 1; j < facts.size(); ++j) {
      if (facts[i] == facts[j] || v.exclusive(facts[i], facts[j])) return false;
    }
  }
  return true;
}

IntentionNode bare_node(IntentionId id, std::optional<IntentionId> parent, std::vector<Literal> ctx = {}) {
  IntentionNode n;
  n.id = id;
  n.parent = parent;
  n.plan.name = "n" + std::to_string(id);
  n.plan.trigger.payload = Term::atom("g" + std::to_string(id));
  n.plan.body = {ActionStep{T("wait")}};
  n.grounded_context = std::move(ctx);
  return n;
}

}  // namespace

TEST_SUITE("facts") {
  TEST_CASE("functional insert displaces the old value") {
    FactSet f(kitchen_vocabulary());
    CHECK(f.insert(T("dishwasherDoor(closed)")).inserted);
    auto r = f.insert(T("dishwasherDoor(open)"));
    CHECK(r.inserted);
    CHECK(r.displaced == std::vector<Term>{T("dishwasherDoor(closed)")});
    CHECK(as_set(f) == std::set<Term>{T("dishwasherDoor(open)")});
    CHECK_FALSE(f.insert(T("dishwasherDoor(open)")).inserted);
    f.insert(T("at(cup1, table)"));
    f.insert(T("at(cup2, table)"));
    f.insert(T("at(cup1, sink)"));
    CHECK(as_set(f) == std::set<Term>{T("dishwasherDoor(open)"), T("at(cup2, table)"), T("at(cup1, sink)")});
    CHECK(f.complements_of(T("at(cup2, sink)")) == std::vector<Term>{T("at(cup2, table)")});
    CHECK_THROWS_AS(f.insert(T("at(X, table)")), FactError);
  }

  TEST_CASE("query examples") {
    const FactSet f = example_beliefs();
    const std::vector<Literal> used{L("used(C)")};
    auto answers = query(f, used);
    REQUIRE(answers.size() == 1);
    CHECK(*answers[0].lookup("C") == T("cup1"));
    CHECK(query(f, {}) == std::vector<Substitution>{Substitution{}});
    const std::vector<Literal> not_open{L("not dishwasherDoor(open)")};
    CHECK(query(f, not_open) == std::vector<Substitution>{Substitution{}});
    const std::vector<Literal> not_closed{L("not dishwasherDoor(closed)")};
    CHECK(query(f, not_closed).empty());
  }

  TEST_CASE("query follows insertion order and joins") {
    const FactSet f = example_beliefs();
    const std::vector<Literal> on_table{L("at(O, table)")};
    auto answers = query(f, on_table);
    REQUIRE(answers.size() == 3);
    CHECK(*answers[0].lookup("O") == T("cup1"));
    CHECK(*answers[1].lookup("O") == T("cup2"));
    CHECK(*answers[2].lookup("O") == T("robot"));
    const std::vector<Literal> clean_on_table{L("at(O, table)"), L("clean(O)")};
    answers = query(f, clean_on_table);
    REQUIRE(answers.size() == 1);
    CHECK(*answers[0].lookup("O") == T("cup2"));
    const std::vector<Literal> unused{L("at(O, table)"), L("not used(O)")};
    CHECK(query(f, unused).size() == 2);
  }

  TEST_CASE("property: query agrees with a brute-force grounding") {
    Rng rng(3);
    Vocabulary v;
    v.declare({"p", 1}, {});
    v.declare({"q", 2}, {});
    const std::vector<std::string> consts = {"a", "b", "c"};
    for (int round = 0; round < 200; ++round) {
      FactSet f(v);
      for (int i = 0; i < 6; ++i) {
        if (coin(rng)) f.insert(Term::atom("p", {Term::atom(pick_from(rng, consts))}));
        else f.insert(Term::atom("q", {Term::atom(pick_from(rng, consts)), Term::atom(pick_from(rng, consts))}));
      }
      std::vector<Literal> conj;
      for (std::size_t i = 1 + pick(rng, 3); i > 0; --i) {
        auto arg = [&] { return coin(rng) ? Term::variable(coin(rng) ? "X" : "Y") : Term::atom(pick_from(rng, consts)); };
        Literal l{coin(rng) ? Term::atom("p", {arg()}) : Term::atom("q", {arg(), arg()}), false};
        l.negated = !conj.empty() && coin(rng, 0.3);
        conj.push_back(l);
      }
      // Oracle: a grounding of X and Y satisfies the conjunction when each
      // positive literal is a member and each negated one has no member
      // unifying with it (variables bound by the grounding are fixed).
      std::set<std::pair<std::string, std::string>> expected;
      std::vector<std::string> conj_vars;
      for (const auto& l : conj) {
        if (!l.negated) l.atom.collect_variables(conj_vars);
      }
      const bool uses_x = std::count(conj_vars.begin(), conj_vars.end(), "X") > 0;
      const bool uses_y = std::count(conj_vars.begin(), conj_vars.end(), "Y") > 0;
      for (const auto& x : consts) {
        for (const auto& y : consts) {
          Substitution g;
          if (uses_x) g.bind("X", Term::atom(x));
          if (uses_y) g.bind("Y", Term::atom(y));
          bool ok = true;
          for (const auto& l : conj) {
            const Term a = apply_substitution(g, l.atom);
            if (!l.negated) {
              ok = ok && f.contains(a);
            } else {
              for (const auto& fact : f.facts()) ok = ok && !unify(a, fact);
            }
          }
          if (ok) expected.emplace(uses_x ? x : "", uses_y ? y : "");
        }
      }
      std::set<std::pair<std::string, std::string>> got;
      for (const auto& s : query(f, conj)) {
        const Term* x = s.lookup("X");
        const Term* y = s.lookup("Y");
        got.emplace(uses_x ? x->to_string() : "", uses_y ? y->to_string() : "");
      }
      CHECK(got == expected);
    }
  }
}

TEST_SUITE("intentions") {
  TEST_CASE("parents on a depth-3 chain") {
    IntentionTree tree;
    tree.push(bare_node(1, std::nullopt));
    tree.push(bare_node(2, 1));
    tree.push(bare_node(3, 2));
    CHECK(tree.well_formed());
    // Oracle: follow parent links one at a time.
    std::vector<IntentionId> expected;
    for (auto p = tree.find(3)->parent; p; p = tree.find(*p)->parent) expected.push_back(*p);
    std::vector<IntentionId> got;
    for (const auto* n : tree.parents(3)) got.push_back(n->id);
    CHECK(got == expected);
    CHECK(got == std::vector<IntentionId>{2, 1});
    CHECK(tree.parents(1).empty());
  }

  TEST_CASE("push requires the parent to be the leaf") {
    IntentionTree tree;
    CHECK_THROWS_AS(tree.push(bare_node(1, 9)), std::logic_error);
    tree.push(bare_node(1, std::nullopt));
    CHECK_THROWS_AS(tree.push(bare_node(2, std::nullopt)), std::logic_error);
    tree.push(bare_node(2, 1));
    CHECK_THROWS_AS(tree.push(bare_node(3, 1)), std::logic_error);
    CHECK(tree.pop().id == 2);
    CHECK(tree.depth() == 1);
  }

  TEST_CASE("ground_context stores the believed alternative") {
    const FactSet beliefs = example_beliefs();
    const std::vector<Literal> ctx{L("not dishwasherDoor(open)"), L("holding(none)")};
    CHECK(ground_context(ctx, {}, beliefs) == std::vector<Literal>{L("dishwasherDoor(closed)"), L("holding(none)")});
    const std::vector<Literal> absent{L("not used(cup2)")};
    CHECK(ground_context(absent, {}, beliefs) == absent);
    const std::vector<Literal> bound{L("used(C)")};
    CHECK(ground_context(bound, {{"C", T("cup1")}}, beliefs) == std::vector<Literal>{L("used(cup1)")});
  }
}

TEST_SUITE("agent") {
  TEST_CASE("assert_belief examples") {
    Agent a(PlanLibrary{}, kitchen_vocabulary());
    auto e = a.assert_belief(L("dishwasherDoor(closed)"));
    REQUIRE(e);
    CHECK(e->trigger.to_string() == "+dishwasherDoor(closed)");
    CHECK(as_set(a.beliefs()) == std::set<Term>{T("dishwasherDoor(closed)")});

    a.assert_belief(L("used(cup1)"));
    const auto queued = a.events().size();
    CHECK_FALSE(a.assert_belief(L("used(cup1)")));
    CHECK(a.events().size() == queued);

    // Oracle: closed replaced by open, everything else untouched.
    std::set<Term> expected = as_set(a.beliefs());
    expected.erase(T("dishwasherDoor(closed)"));
    expected.insert(T("dishwasherDoor(open)"));
    CHECK(a.assert_belief(L("dishwasherDoor(open)")));
    CHECK(as_set(a.beliefs()) == expected);
    CHECK(a.events().back().trigger.to_string() == "+dishwasherDoor(open)");

    CHECK(a.assert_belief(L("not used(cup1)"))->trigger.to_string() == "-used(cup1)");
    CHECK_FALSE(a.beliefs().contains(T("used(cup1)")));
    CHECK_THROWS_AS(a.assert_belief(L("used(C)")), FactError);
  }

  TEST_CASE("select_plan examples") {
    ExampleRig rig;
    auto sel = rig.agent.select_plan({{TriggerKind::GoalAddition, T("storeCup(cup1)")}, std::nullopt});
    REQUIRE(sel);
    CHECK(sel->plan_index == 0);
    CHECK(apply_substitution(sel->substitution, sel->plan.trigger.payload) == T("storeCup(cup1)"));
    CHECK_FALSE(rig.agent.select_plan({{TriggerKind::GoalAddition, T("storeCup(cup2)")}, std::nullopt}));
    Agent empty(PlanLibrary{}, kitchen_vocabulary());
    CHECK_FALSE(empty.select_plan({{TriggerKind::GoalAddition, T("storeCup(cup1)")}, std::nullopt}));
  }

  TEST_CASE("select_plan against an exhaustive context check") {
    // Oracle: storeUsedCup applies to storeCup(X) iff used(X) is a fact.
    ExampleRig rig;
    for (const char* obj : {"cup1", "cup2", "robot", "table", "none"}) {
      const bool used = rig.world.facts.contains(Term::atom("used", {Term::atom(obj)}));
      const bool selected =
          rig.agent.select_plan({{TriggerKind::GoalAddition, Term::atom("storeCup", {Term::atom(obj)})}, std::nullopt})
              .has_value();
      CHECK(selected == used);
    }
  }

  TEST_CASE("adoption records parents and the grounded context") {
    ExampleRig rig;
    auto s1 = rig.agent.select_plan({{TriggerKind::GoalAddition, T("storeCup(cup1)")}, std::nullopt});
    const IntentionId root = rig.agent.adopt_intention(*s1, std::nullopt).id;
    CHECK_FALSE(rig.agent.intentions().find(root)->parent);
    CHECK(rig.agent.parents(root).empty());
    CHECK(rig.agent.intentions().find(root)->grounded_context == std::vector<Literal>{L("used(cup1)")});

    auto s2 = rig.agent.select_plan({{TriggerKind::GoalAddition, T("openDishwasherIfNeed")}, root});
    REQUIRE(s2);
    const IntentionNode& child = rig.agent.adopt_intention(*s2, root);
    CHECK(child.parent == root);
    CHECK(child.grounded_context == std::vector<Literal>{L("dishwasherDoor(closed)"), L("holding(none)")});
    REQUIRE(rig.agent.parents(child.id).size() == 1);
    CHECK(rig.agent.parents(child.id)[0]->id == root);
  }

  TEST_CASE("first explanation precedes the first action") {
    ExampleRig rig;
    rig.agent.post_order(T("storeCup(cup1)"));
    std::vector<TraceRecord> seen;
    while (auto r = rig.agent.step(rig.world)) {
      seen.push_back(*r);
      if (r->kind == RecordKind::Action) break;
    }
    REQUIRE(seen.size() >= 2);
    const TraceRecord& explain = seen[seen.size() - 2];
    CHECK(explain.kind == RecordKind::Explain);
    CHECK(seen.back().payload == "navigateTo(dishwasher)");
    REQUIRE(explain.explanation);
    CHECK(explain.explanation->context.literals() ==
          std::vector<Literal>{L("used(cup1)"), L("dishwasherDoor(closed)"), L("holding(none)")});
    CHECK(explain.explanation->suffix == std::vector<Term>{T("navigateTo(dishwasher)"), T("openDoor(dishwasher)")});
  }

  TEST_CASE("empty agent steps to nothing") {
    ExampleRig rig;
    CHECK_FALSE(rig.agent.step(rig.world));
    CHECK(rig.agent.idle());
    CHECK(rig.agent.run_to_completion(rig.world, 10).records.empty());
    CHECK(rig.agent.finish().kind == RecordKind::Done);
    CHECK_THROWS_AS(rig.agent.run_to_completion(rig.world, 0), std::invalid_argument);
  }

  TEST_CASE("budget of one yields one record") {
    ExampleRig rig;
    rig.agent.post_order(T("storeCup(cup1)"));
    const RunResult r = rig.agent.run_to_completion(rig.world, 1);
    CHECK(r.records.size() == 1);
    CHECK(r.outcome == RunOutcome::BudgetExhausted);
  }

  TEST_CASE("run_to_completion is a fold of step") {
    ExampleRig a;
    ExampleRig b;
    a.agent.post_order(T("storeCup(cup1)"));
    b.agent.post_order(T("storeCup(cup1)"));
    const RunResult run = a.agent.run_to_completion(a.world, 100);
    std::vector<TraceRecord> stepped;
    while (auto r = b.agent.step(b.world)) stepped.push_back(*r);
    CHECK(run.outcome == RunOutcome::Done);
    CHECK(serialize_trace(run.records) == serialize_trace(stepped));
  }

  TEST_CASE("worked example reaches its goal by the expected actions") {
    ExampleRig rig;
    rig.agent.post_order(T("storeCup(cup1)"));
    const RunResult r = rig.agent.run_to_completion(rig.world, 100);
    CHECK(r.outcome == RunOutcome::Done);
    std::vector<std::string> actions;
    for (const auto& rec : r.records) {
      if (rec.kind == RecordKind::Action) actions.push_back(rec.payload);
    }
    CHECK(actions == std::vector<std::string>{"navigateTo(dishwasher)", "openDoor(dishwasher)", "navigateTo(table)",
                                              "pickUp(cup1)", "navigateTo(dishwasher)", "putDown(cup1)"});
    // Hand simulation of the six actions on the initial facts.
    std::set<Term> expected = as_set(example_beliefs());
    expected.erase(T("dishwasherDoor(closed)"));
    expected.insert(T("dishwasherDoor(open)"));
    expected.erase(T("at(robot, table)"));
    expected.insert(T("at(robot, dishwasher)"));
    expected.erase(T("at(cup1, table)"));
    expected.insert(T("at(cup1, dishwasher)"));
    CHECK(as_set(rig.agent.beliefs()) == expected);
    CHECK(rig.agent.beliefs().contains(T("at(cup1, dishwasher)")));
  }

  TEST_CASE("precondition failure fails the chain") {
    const std::string plans = std::string(kExamplePlans) + "\n@bad\n+!bad <- openDoor(dishwasher).\n";
    Agent agent(parse_plan_library(plans), kitchen_vocabulary());
    WorldState world{example_beliefs()};
    agent.load_beliefs(world.facts);
    agent.post_order(T("bad"));
    const RunResult r = agent.run_to_completion(world, 50);
    CHECK(count_kind(r.records, RecordKind::Fail) == 1);
    CHECK(agent.intentions().empty());
    CHECK(world.facts == example_beliefs());
  }

  TEST_CASE("sub-goal without a plan fails the chain") {
    const std::string plans = std::string(kExamplePlans) + "\n@outer\n+!outer <- navigateTo(sink); !nowhere.\n";
    Agent agent(parse_plan_library(plans), kitchen_vocabulary());
    WorldState world{example_beliefs()};
    agent.load_beliefs(world.facts);
    agent.post_order(T("outer"));
    const RunResult r = agent.run_to_completion(world, 50);
    REQUIRE(count_kind(r.records, RecordKind::Fail) == 1);
    CHECK(agent.intentions().empty());
    CHECK(agent.idle());
  }

  TEST_CASE("properties over every bundled scenario") {
    // Belief consistency, world/belief synchrony, well-formed intention path,
    // strictly increasing step numbers and cursor monotonicity per intention.
    for (const auto& name : kBundledScenarios) {
      CAPTURE(name);
      auto sc = load_bundled(name);
      std::map<IntentionId, std::size_t> last_cursor;
      std::uint64_t last_step = 0;
      std::size_t steps = 0;
      while (auto r = sc.agent.step(sc.world)) {
        REQUIRE(++steps < 500);
        CHECK(r->step_no > last_step);
        last_step = r->step_no;
        CHECK(consistent(sc.agent.beliefs(), sc.spec.vocabulary));
        CHECK(sc.world.consistent());
        CHECK(as_set(sc.agent.beliefs()) == as_set(sc.world.facts));
        CHECK(sc.agent.intentions().well_formed());
        for (const auto& n : sc.agent.intentions().path()) {
          auto it = last_cursor.find(n.id);
          if (it != last_cursor.end()) CHECK(n.cursor >= it->second);
          last_cursor[n.id] = n.cursor;
        }
        if (r->kind == RecordKind::Action) {
          const IntentionId id = *r->intention;
          const IntentionNode* n = sc.agent.intentions().find(id);
          REQUIRE(n);
          CHECK(n->cursor > 0);
        }
      }
      CHECK(count_kind(sc.agent.trace(), RecordKind::Fail) == 0);
    }
  }

  TEST_CASE("two agents with equal inputs produce identical traces") {
    for (const auto& name : kBundledScenarios) {
      auto a = load_bundled(name);
      auto b = load_bundled(name);
      a.agent.run_to_completion(a.world, 500);
      b.agent.run_to_completion(b.world, 500);
      CHECK(serialize_trace(a.agent.trace()) == serialize_trace(b.agent.trace()));
    }
  }

  TEST_CASE("model only grows during a run") {
    auto sc = load_bundled("load_dishwasher");
    std::size_t size = sc.agent.model().size();
    while (sc.agent.step(sc.world)) {
      CHECK(sc.agent.model().size() >= size);
      size = sc.agent.model().size();
    }
    CHECK(size > 0);
  }
}

TEST_SUITE("trace") {
  TEST_CASE("records round-trip through their JSON lines") {
    for (const auto& name : kBundledScenarios) {
      auto sc = load_bundled(name);
      sc.agent.run_to_completion(sc.world, 500);
      sc.agent.finish();
      const std::string text = serialize_trace(sc.agent.trace());
      std::istringstream in(text);
      const auto back = parse_trace(in);
      CHECK(back == sc.agent.trace());
      CHECK(serialize_trace(back) == text);
    }
  }

  TEST_CASE("malformed lines name their position") {
    std::istringstream in("{\"step\":1,\"kind\":\"done\",\"payload\":\"idle\"}\n\n{\"step\":2,\"kind\":\"nope\"}\n");
    try {
      parse_trace(in);
      FAIL("expected a trace error");
    } catch (const TraceError& e) {
      CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
  }

  TEST_CASE("episodes split at root adoptions") {
    ExampleRig rig;
    rig.agent.post_order(T("storeCup(cup1)"));
    rig.agent.run_to_completion(rig.world, 100);
    const auto eps = episodes(rig.agent.trace());
    REQUIRE(eps.size() == 1);
    CHECK(eps[0].order == T("storeCup(cup1)"));
    CHECK(eps[0].actions.size() == 6);
  }
}
