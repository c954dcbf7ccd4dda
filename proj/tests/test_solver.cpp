#include <doctest.h>

#include <random>

#include "elp/error.hpp"
#include "elp/family.hpp"
#include "elp/normal_form.hpp"
#include "elp/oracle.hpp"
#include "elp/solver.hpp"
#include "elp/stable_models.hpp"
#include "elp/transform.hpp"
#include "support/helpers.hpp"
#include "support/random_programs.hpp"
#include "support/worldviews.hpp"

using namespace elp;
using elp::testing::interp;
using elp::testing::parse;
using elp::testing::prepared;

namespace {

constexpr GeneratorKind kAllGenerators[] = {GeneratorKind::T0, GeneratorKind::G0, GeneratorKind::G1};

SolveResult solveWith(const Program& p, GeneratorKind kind, std::optional<std::size_t> max = std::nullopt,
                      bool verify = false) {
  SolverConfig config;
  config.generator = kind;
  config.maxWorldviews = max;
  config.verifySkips = verify;
  return solve(p, config);
}

std::vector<Program> corpus(unsigned seed, int count) {
  std::mt19937 rng(seed);
  elp::testing::RandomProgramOptions opts;
  std::vector<Program> out;
  for (int i = 0; i < count; ++i) out.push_back(elp::testing::randomProgram(rng, opts));
  return out;
}

}  // namespace

TEST_CASE("testCandidate") {
  Program one = parse("b :- K a.");
  auto b1 = TransformBundle::build(one);
  CHECK(testCandidate(b1.t0, {}, b1.kAtoms));
  CHECK_FALSE(testCandidate(b1.t0, interp(one.table(), {"b", "k_a"}), b1.kAtoms));

  Program self = parse("a :- K a.");
  auto b2 = TransformBundle::build(self);
  CHECK(testCandidate(b2.t0, interp(self.table(), {"a", "k_a"}), b2.kAtoms));
  CHECK(testCandidate(b2.t0, {}, b2.kAtoms));

  Program none = prepared(parse("a :- not K a."));
  auto b3 = TransformBundle::build(none);
  CHECK_FALSE(testCandidate(b3.t0, interp(none.table(), {"k_a"}), b3.kAtoms));
  CHECK_FALSE(testCandidate(b3.t0, interp(none.table(), {"a"}), b3.kAtoms));
}

TEST_CASE("skipCheck") {
  Program family = generatePropagationFamily(1);
  auto bundle = TransformBundle::build(family);
  auto models = enumerateStableModels(bundle.g1);
  REQUIRE(models.size() == 1);
  CHECK(skipCheck(models.models[0], bundle.kAtoms, family.table()));

  AtomTable empty;
  CHECK(skipCheck({}, {}, empty));

  Program p = parse("b :- K a.");
  auto b = TransformBundle::build(p);
  AtomId ka = *p.table().find("k_a");
  CHECK_FALSE(skipCheck({ka}, b.kAtoms, p.table()));
  CHECK_FALSE(skipCheck({}, b.kAtoms, p.table()));

  try {
    skipCheck({}, b.kAtoms, p.table(), GeneratorKind::G0);
    FAIL("expected a mismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::GeneratorMismatch);
  }
  CHECK_THROWS_AS(skipCheck({}, {}, empty, GeneratorKind::T0), Error);
}

TEST_CASE("buildWorldview") {
  Program one = parse("b :- K a.");
  auto b1 = TransformBundle::build(one);
  auto wv = buildWorldview(b1.t0, {}, b1.kAtoms, atomSetOf(one));
  CHECK(wv.beliefSet == BeliefInterpretation{{}});
  CHECK(wv.signature.empty());

  Program self = parse("a :- K a.");
  auto b2 = TransformBundle::build(self);
  Interpretation m = interp(self.table(), {"a", "k_a"});
  auto wv2 = buildWorldview(b2.t0, m, b2.kAtoms, atomSetOf(self));
  CHECK(wv2.beliefSet == BeliefInterpretation{interp(self.table(), {"a"})});
  CHECK(wv2.witness == m);

  Program family = generatePropagationFamily(2);
  auto b3 = TransformBundle::build(family);
  auto survivor = enumerateStableModels(b3.g1).models.at(0);
  auto wv3 = buildWorldview(b3.t0, survivor, b3.kAtoms, atomSetOf(family));
  std::set<AtomId> user = {*family.table().find("a1"), *family.table().find("a2"), *family.table().find("g")};
  CHECK(restrictWorldview(wv3.beliefSet, user) == BeliefInterpretation{{}});

  Program blocked = parse(":- K a.");
  auto b4 = TransformBundle::build(blocked);
  try {
    buildWorldview(b4.t0, interp(blocked.table(), {"k_a"}), b4.kAtoms, atomSetOf(blocked));
    FAIL("expected an empty worldview");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::EmptyWorldview);
  }
}

TEST_CASE("solve examples") {
  Program one = parse("b :- K a.");
  auto r = solveWith(one, GeneratorKind::G0);
  REQUIRE(r.worldviews.size() == 1);
  CHECK(r.worldviews[0].signature.empty());
  CHECK(r.worldviews[0].beliefSet == BeliefInterpretation{{}});

  auto g0 = solveWith(generatePropagationFamily(3), GeneratorKind::G0);
  CHECK(g0.stats.candidatesGenerated == 8);
  CHECK(g0.stats.testsRun == 8);
  CHECK(g0.worldviews.size() == 1);

  auto g1 = solveWith(generatePropagationFamily(3), GeneratorKind::G1);
  CHECK(g1.stats.candidatesGenerated == 1);
  CHECK(g1.stats.testsSkipped == 1);
  CHECK(g1.stats.testsRun == 0);
  CHECK(g1.worldviews.size() == 1);

  CHECK_THROWS_AS(solve(parse("a :- K not b.")), Error);
  CHECK(solve(Program()).worldviews.size() == 1);
  CHECK(solve(parse(":- not K a. a :- K a.")).worldviews.size() == 1);
  CHECK(solve(prepared(parse("a :- not K a."))).worldviews.empty());
}

TEST_CASE("solver agrees with the oracle for every generator") {
  for (const Program& p : corpus(101, 150)) {
    auto expected = elp::testing::asWorldviewSet(oracle::enumerateWorldviews(p));
    for (GeneratorKind kind : kAllGenerators) {
      CHECK(elp::testing::solvedWorldviews(p, kind) == expected);
    }
  }
}

TEST_CASE("solver invariants") {
  for (const Program& raw : corpus(202, 200)) {
    Program p = prepared(raw);
    std::vector<SolveResult> runs;
    for (GeneratorKind kind : kAllGenerators) {
      SolveResult r = solveWith(p, kind, std::nullopt, true);
      CHECK(r.stats.testsRun + r.stats.testsSkipped == r.stats.candidatesGenerated);
      CHECK(r.stats.skipMismatches == 0);
      CHECK(r.stats.worldviewsFound == r.worldviews.size());
      std::set<KSignature> sigs;
      auto universe = TransformBundle::build(p).kAtoms;
      for (const auto& wv : r.worldviews) {
        CHECK(sigs.insert(wv.signature).second);
        CHECK(kOfWorldview(wv.beliefSet, universe, p.table()) == wv.signature);
      }
      for (std::size_t k = 1; k <= r.worldviews.size(); ++k) {
        SolveResult prefix = solveWith(p, kind, k);
        REQUIRE(prefix.worldviews.size() == k);
        for (std::size_t i = 0; i < k; ++i) {
          CHECK(prefix.worldviews[i].signature == r.worldviews[i].signature);
          CHECK(prefix.worldviews[i].beliefSet == r.worldviews[i].beliefSet);
        }
      }
      runs.push_back(std::move(r));
    }
    CHECK(runs[2].stats.candidatesGenerated <= runs[1].stats.candidatesGenerated);
    CHECK(runs[1].stats.candidatesGenerated <= runs[0].stats.candidatesGenerated);
  }
}

TEST_CASE("accepted candidates with equal signatures agree") {
  for (const Program& raw : corpus(303, 150)) {
    Program p = prepared(raw);
    auto bundle = TransformBundle::build(p);
    std::map<KSignature, BeliefInterpretation> seen;
    for (const Interpretation& m : enumerateStableModels(bundle.t0).models) {
      if (!testCandidate(bundle.t0, m, bundle.kAtoms)) continue;
      auto wv = buildWorldview(bundle.t0, m, bundle.kAtoms, atomSetOf(p));
      auto [it, fresh] = seen.emplace(wv.signature, wv.beliefSet);
      if (!fresh) CHECK(it->second == wv.beliefSet);
    }
  }
}

TEST_CASE("skipped candidates always pass the full test") {
  for (const Program& raw : corpus(404, 200)) {
    Program p = prepared(raw);
    auto bundle = TransformBundle::build(p);
    for (const Interpretation& m : enumerateStableModels(bundle.g1).models) {
      if (skipCheck(m, bundle.kAtoms, p.table())) CHECK(testCandidate(bundle.t0, m, bundle.kAtoms));
    }
  }
}

TEST_CASE("stats can be switched off") {
  SolverConfig config;
  config.generator = GeneratorKind::G0;
  config.collectStats = false;
  auto r = solve(generatePropagationFamily(2), config);
  CHECK(r.stats.candidatesGenerated == 0);
  CHECK(r.stats.worldviewsFound == 1);
}
