#include <doctest.h>

#include <random>

#include "elp/normal_form.hpp"
#include "elp/oracle.hpp"
#include "support/helpers.hpp"
#include "support/random_programs.hpp"
#include "support/worldviews.hpp"

using namespace elp;
using elp::testing::interp;
using elp::testing::parse;

namespace {

std::size_t definingRules(const Program& p, AtomId head) {
  std::size_t n = 0;
  for (const Rule& r : p.rules()) {
    if (r.head.size() == 1 && r.head[0] == head) ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("normalize rewrites negation under K") {
  Program p = parse("a :- not K not a.");
  NormalFormResult nf = normalize(p);
  Program expected = parse("a :- not K not1_a. not1_a :- not a.", p.sharedTable(), true);
  CHECK(structurallyEqual(nf.program, expected));
  REQUIRE(nf.introduced.size() == 1);
  const AtomTable& t = p.table();
  CHECK(t.symbol(nf.introduced.begin()->first) == "not1_a");
  CHECK(t.symbol(nf.introduced.begin()->second) == "a");
  CHECK(t.origin(nf.introduced.begin()->first) == AtomOrigin::NotOnce);
  CHECK(isNormalForm(nf.program));
  CHECK_FALSE(isNormalForm(p));
}

TEST_CASE("normalize leaves normal programs alone") {
  Program p = parse("b :- K a.");
  NormalFormResult nf = normalize(p);
  CHECK(structurallyEqual(nf.program, p));
  CHECK(nf.introduced.empty());

  Program q = parse("a :- not K b, not not K c. c | b :- not a.");
  CHECK(structurallyEqual(normalize(q).program, q));
}

TEST_CASE("normalize double negation under K") {
  Program p = parse("p :- K not not q.");
  NormalFormResult nf = normalize(p);
  Program expected = parse("p :- K not2_q. not2_q :- not not q.", p.sharedTable(), true);
  CHECK(structurallyEqual(nf.program, expected));
  CHECK(p.table().origin(nf.introduced.begin()->first) == AtomOrigin::NotTwice);
}

TEST_CASE("one defining rule per base atom") {
  Program p = parse("a :- K not b. c :- not K not b, K not not b. d :- not not K not b.");
  NormalFormResult nf = normalize(p);
  CHECK(nf.program.size() == p.size() + 2);
  CHECK(nf.introduced.size() == 2);
  for (auto [derived, base] : nf.introduced) {
    CHECK(definingRules(nf.program, derived) == 1);
    CHECK(p.table().symbol(base) == "b");
  }
  Program expected = parse(
      "a :- K not1_b. c :- not K not1_b, K not2_b. d :- not not K not1_b."
      "not1_b :- not b. not2_b :- not not b.",
      p.sharedTable(), true);
  CHECK(structurallyEqual(nf.program, expected));
}

TEST_CASE("normal form properties on random programs") {
  std::mt19937 rng(7);
  elp::testing::RandomProgramOptions opts;
  opts.innerNegation = 0.6;
  for (int i = 0; i < 500; ++i) {
    Program p = foldConstants(elp::testing::randomProgram(rng, opts));
    NormalFormResult nf = normalize(p);
    CHECK(isNormalForm(nf.program));
    CHECK(nf.program.size() == p.size() + nf.introduced.size());
    CHECK(structurallyEqual(normalize(nf.program).program, nf.program));
    for (auto [derived, base] : nf.introduced) {
      CHECK(definingRules(nf.program, derived) == 1);
      CHECK(p.table().base(derived) == base);
    }
  }
}

TEST_CASE("restrictWorldview") {
  auto table = std::make_shared<AtomTable>();
  AtomId a = table->intern("a");
  AtomId b = table->intern("b");
  AtomId notB = table->derive(AtomOrigin::NotOnce, b);
  AtomId notA = table->derive(AtomOrigin::NotOnce, a);

  CHECK(restrictWorldview({{a, notB}}, {a, b}) == BeliefInterpretation{{a}});
  CHECK(restrictWorldview({{}}, {a}) == BeliefInterpretation{{}});
  CHECK(restrictWorldview({{a}, {a, notA}}, {a}) == BeliefInterpretation{{a}});
  CHECK(restrictWorldview({{a}, {b}}, {a, b}).size() == 2);
}

TEST_CASE("normalization preserves worldviews") {
  std::mt19937 rng(23);
  elp::testing::RandomProgramOptions opts;
  opts.maxAtoms = 3;
  opts.maxRules = 4;
  opts.innerNegation = 0.7;
  opts.constants = 0;
  int checked = 0;
  while (checked < 60) {
    Program p = elp::testing::randomProgram(rng, opts);
    if (!elp::testing::hasInnerNegation(p)) continue;
    ++checked;
    auto direct = elp::testing::asWorldviewSet(oracle::enumerateWorldviews(p));
    NormalFormResult nf = normalize(p);
    auto viaNf = oracle::enumerateWorldviewsByValuation(nf.program);
    elp::testing::WorldviewSet projected;
    for (const auto& wv : viaNf) projected.insert(restrictWorldview(wv, atomSetOf(p)));
    CHECK(projected == direct);
    CHECK(viaNf.size() == direct.size());
  }
}
