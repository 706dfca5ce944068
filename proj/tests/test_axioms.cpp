#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "lexraf/axioms.hpp"
#include "test_support.hpp"

using namespace lexraf;
using lexraf::testing::kind_of;
using lexraf::testing::levels;
using lexraf::testing::raf;

namespace {

// Definition-level oracles, deliberately written with index sets rather
// than the checkers' sign patterns.

std::set<std::size_t> up_set(const Raf& a, const Raf& b, std::size_t upto) {
  std::set<std::size_t> s;
  for (std::size_t i = 0; i < upto; ++i) {
    if (a[i] > b[i]) s.insert(i);
  }
  return s;
}

std::set<std::size_t> down_set(const Raf& a, const Raf& b, std::size_t upto) {
  return up_set(b, a, upto);
}

bool oracle_nc(const Raf& a, const Raf& b, const Raf& c, const Raf& d) {
  const auto k = a.size();
  return up_set(a, b, k) == up_set(c, d, k) && down_set(a, b, k) == down_set(c, d, k);
}

bool oracle_iwa(const Raf& a, const Raf& b, const Raf& c, const Raf& d, std::size_t k) {
  return a[k - 1] != b[k - 1] && up_set(a, b, k) == up_set(c, d, k) &&
         down_set(a, b, k) == down_set(c, d, k);
}

std::optional<std::size_t> oracle_weak_iwa(const Raf& a, const Raf& b, const Raf& c,
                                           const Raf& d) {
  auto k1 = first_difference(a, b);
  auto k2 = first_difference(c, d);
  if (!k1 || !k2 || *k1 != *k2) return std::nullopt;
  const std::size_t i = *k1 - 1;
  const Rational prod = (a[i] - b[i]) * (c[i] - d[i]);
  if (prod <= Rational(0)) return std::nullopt;
  return k1;
}

bool oracle_axiom2(const Raf& a, const Raf& b, const Raf& c, const Raf& d) {
  if (a == b) return false;
  for (std::size_t y = 0; y < a.size(); ++y) {
    bool ok = a[y] == c[y] && b[y] == d[y];
    for (std::size_t i = 0; i < a.size() && ok; ++i) {
      if (i != y) ok = a[i] == b[i] && c[i] == d[i];
    }
    if (ok) return true;
  }
  return false;
}

struct OracleCounts {
  std::uint64_t nc = 0, axiom2 = 0, iwa = 0, weak_iwa = 0;
  std::uint64_t nc_bad = 0, axiom2_bad = 0, iwa_bad = 0, weak_iwa_bad = 0;
};

OracleCounts oracle_quadruples(const PreferenceRelation& rel, const std::vector<Raf>& s) {
  OracleCounts c;
  auto geq = [&](const Raf& x, const Raf& y) { return at_least_as_good(rel.compare(x, y)); };
  for (const auto& a : s) {
    for (const auto& b : s) {
      for (const auto& cc : s) {
        for (const auto& d : s) {
          const bool broken = geq(a, b) != geq(cc, d);
          if (oracle_nc(a, b, cc, d)) c.nc++, c.nc_bad += broken;
          if (oracle_axiom2(a, b, cc, d)) c.axiom2++, c.axiom2_bad += broken;
          for (std::size_t k = 1; k <= a.size(); ++k) {
            if (oracle_iwa(a, b, cc, d, k)) c.iwa++, c.iwa_bad += broken;
          }
          if (oracle_weak_iwa(a, b, cc, d)) c.weak_iwa++, c.weak_iwa_bad += broken;
        }
      }
    }
  }
  return c;
}

std::vector<Raf> grid(std::initializer_list<const char*> lv, std::size_t arity,
                      std::optional<std::vector<Rational>> payoffs = std::nullopt) {
  return grid_points(GridSpec(levels(lv), arity), PriorityContext::numbered(arity, payoffs));
}

bool has_witness(const AxiomResult& r, const std::vector<Raf>& expected) {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [&](const AxiomViolation& v) { return v.witness == expected; });
}

TableRelation total_indifference(const std::vector<Raf>& pts) {
  auto domain = std::make_shared<const PointSet>(pts);
  return table_relation(RankedRelation(domain, std::vector<unsigned>(pts.size(), 0)));
}

}  // namespace

TEST_SUITE_BEGIN("axioms");

TEST_CASE("axiom names") {
  for (auto id : all_axioms()) CHECK(parse_axiom(to_string(id)) == id);
  CHECK(parse_axiom("SM") == AxiomId::StrongMonotonicity);
  CHECK(parse_axiom("SD") == AxiomId::StrongDominance);
  CHECK(parse_axiom("WD") == AxiomId::WeakDominance);
  CHECK(parse_axiom("NC") == AxiomId::NonCompensation);
  CHECK_FALSE(parse_axiom("nosuch"));
  CHECK(all_axioms().size() == 11);
  CHECK(order_axioms().size() == 4);
}

TEST_CASE("lex passes the full suite on the 9-point grid") {
  auto pts = grid({"0", "1/2", "1"}, 2);
  LexRelation lex;
  auto order = check_order_axioms(lex, pts);
  CHECK(order.passed());
  CHECK(order.at(AxiomId::Reflexive).tuples_examined == 9);
  CHECK(order.at(AxiomId::MirrorConsistent).tuples_examined == 72);
  CHECK(order.at(AxiomId::Connected).tuples_examined == 72);
  CHECK(order.at(AxiomId::Transitive).tuples_examined == 729);

  auto report = check_axioms(lex, pts, all_axioms());
  CHECK(report.passed());
  CHECK(report.results.size() == 11);
  for (auto id : {AxiomId::NonCompensation, AxiomId::Axiom2MS, AxiomId::IWA, AxiomId::WeakIWA}) {
    CAPTURE(to_string(id));
    CHECK(report.at(id).tuples_examined == 6561);
    CHECK(report.at(id).mode == CheckMode::Exhaustive);
    CHECK_FALSE(report.at(id).vacuous());
  }
  for (auto id : {AxiomId::WeakDominance, AxiomId::StrongMonotonicity, AxiomId::StrongDominance}) {
    CHECK(report.at(id).tuples_examined == 72);
    CHECK_FALSE(report.at(id).vacuous());
  }
}

TEST_CASE("qualifying counts match the definition-level oracle") {
  std::vector<std::vector<Raf>> samples{grid({"0", "1/2", "1"}, 2), grid({"0", "1"}, 3)};
  std::mt19937_64 rng(41);
  auto ctx = PriorityContext::numbered(3);
  for (int s = 0; s < 3; ++s) {
    std::vector<Raf> pts;
    for (int i = 0; i < 7; ++i) {
      pts.push_back(testing::random_raf_from(rng, ctx, levels({"0", "1/3", "1"})));
    }
    samples.push_back(pts);
  }
  for (const auto& pts : samples) {
    LexRelation lex;
    LexRelation rev = LexRelation::reversed(pts[0].size());
    WlogRelation wlog(WeightVector(std::vector<unsigned>(pts[0].size(), 1)));
    for (const PreferenceRelation* rel : {static_cast<const PreferenceRelation*>(&lex),
                                          static_cast<const PreferenceRelation*>(&rev),
                                          static_cast<const PreferenceRelation*>(&wlog)}) {
      CAPTURE(rel->name());
      auto o = oracle_quadruples(*rel, pts);
      auto nc = check_non_compensation(*rel, pts).results[0];
      auto a2 = check_axiom2_ms(*rel, pts).results[0];
      auto iwa = check_iwa(*rel, pts).results[0];
      auto wiwa = check_weak_iwa(*rel, pts).results[0];
      CHECK(nc.qualifying == o.nc);
      CHECK(nc.violation_count == o.nc_bad);
      CHECK(a2.qualifying == o.axiom2);
      CHECK(a2.violation_count == o.axiom2_bad);
      CHECK(iwa.qualifying == o.iwa);
      CHECK(iwa.violation_count == o.iwa_bad);
      CHECK(wiwa.qualifying == o.weak_iwa);
      CHECK(wiwa.violation_count == o.weak_iwa_bad);
    }
  }
}

TEST_CASE("mep fails strong monotonicity on a utility tie") {
  auto pts = grid({"1/5", "1/2", "3/5"}, 2, std::vector<Rational>{40, 10});
  auto ctx = pts[0].context();
  auto mep = make_mep_relation();
  CheckConfig cfg;
  cfg.all_violations = true;
  auto r = check_strong_monotonicity(mep, pts, cfg).results[0];
  CHECK_FALSE(r.passed());
  CHECK(r.violation_count == r.violations.size());
  Raf a = raf(ctx, {"1/5", "3/5"});
  Raf b = raf(ctx, {"1/5", "1/2"});
  // max(40/5, 30/5) = max(40/5, 10/2) = 8
  CHECK(std::max(Rational(40) * Rational(1, 5), Rational(10) * Rational(3, 5)) == Rational(8));
  CHECK(std::max(Rational(40) * Rational(1, 5), Rational(10) * Rational(1, 2)) == Rational(8));
  REQUIRE(has_witness(r, {a, b}));
  for (const auto& v : r.violations) {
    CHECK(v.observed == std::vector<Outcome>{Outcome::Indifferent});
    CHECK(replay_violation(mep, v));
  }

  auto sd = check_strong_dominance(mep, pts, cfg).results[0];
  CHECK(has_witness(sd, {a, b}));
}

TEST_CASE("wlog fails strong monotonicity on a shared zero coordinate") {
  auto pts = grid({"0", "1/2", "1"}, 2);
  auto ctx = pts[0].context();
  WlogRelation wlog(WeightVector({1, 1}));
  CheckConfig cfg;
  cfg.all_violations = true;
  auto r = check_strong_monotonicity(wlog, pts, cfg).results[0];
  CHECK_FALSE(r.passed());
  CHECK(has_witness(r, {raf(ctx, {"0", "1"}), raf(ctx, {"0", "1/2"})}));
  for (const auto& v : r.violations) {
    CHECK(replay_violation(wlog, v));
    const bool zero = v.witness[0][0].is_zero() || v.witness[0][1].is_zero();
    CHECK(zero);
  }
}

TEST_CASE("a cyclic relation fails transitivity with a replayable witness") {
  auto ctx = PriorityContext::numbered(2);
  std::vector<Raf> pts{raf(ctx, {"0", "0"}), raf(ctx, {"1/2", "0"}), raf(ctx, {"1", "0"})};
  auto idx = [&](const Raf& r) {
    return static_cast<int>(std::find(pts.begin(), pts.end(), r) - pts.begin());
  };
  FunctionRelation cyclic(
      [&](const Raf& a, const Raf& b) {
        const int i = idx(a), j = idx(b);
        if (i == j) return Outcome::Indifferent;
        return (i + 1) % 3 == j ? Outcome::FirstPreferred : Outcome::SecondPreferred;
      },
      "cyclic");
  auto order = check_order_axioms(cyclic, pts);
  CHECK(order.at(AxiomId::Reflexive).passed());
  CHECK(order.at(AxiomId::MirrorConsistent).passed());
  CHECK(order.at(AxiomId::Connected).passed());
  const auto& t = order.at(AxiomId::Transitive);
  REQUIRE_FALSE(t.passed());
  CHECK(t.violations[0].sample_indices == std::vector<std::size_t>{0, 1, 2});
  CHECK(replay_violation(cyclic, t.violations[0]));
}

TEST_CASE("broken mirror and reflexivity are caught") {
  auto ctx = PriorityContext::numbered(2);
  std::vector<Raf> pts{raf(ctx, {"0", "0"}), raf(ctx, {"1", "0"})};
  FunctionRelation always_first([](const Raf&, const Raf&) { return Outcome::FirstPreferred; },
                                "first");
  auto order = check_order_axioms(always_first, pts);
  CHECK_FALSE(order.at(AxiomId::Reflexive).passed());
  CHECK_FALSE(order.at(AxiomId::MirrorConsistent).passed());
  CHECK(order.at(AxiomId::Connected).passed());
  for (const auto& r : order.results) {
    for (const auto& v : r.violations) CHECK(replay_violation(always_first, v));
  }
  FunctionRelation always_second([](const Raf&, const Raf&) { return Outcome::SecondPreferred; },
                                 "second");
  CHECK_FALSE(check_order_axioms(always_second, pts).at(AxiomId::Connected).passed());
}

TEST_CASE("total indifference") {
  auto pts = grid({"0", "1"}, 2);
  auto ctx = pts[0].context();
  auto flat = total_indifference(pts);
  auto wd = check_weak_dominance(flat, pts).results[0];
  REQUIRE(wd.violation_count == 1);
  CHECK(wd.qualifying == 1);
  CHECK(wd.violations[0].witness == std::vector<Raf>{raf(ctx, {"1", "1"}), raf(ctx, {"0", "0"})});
  CHECK(replay_violation(flat, wd.violations[0]));

  CHECK(check_order_axioms(flat, pts).passed());
  for (auto id : {AxiomId::NonCompensation, AxiomId::Axiom2MS, AxiomId::IWA, AxiomId::WeakIWA}) {
    auto r = check_axioms(flat, pts, std::array{id}).results[0];
    CHECK(r.passed());
    CHECK_FALSE(r.vacuous());
  }
}

TEST_CASE("lex non-compensation on the 4-point grid") {
  auto pts = grid({"0", "1"}, 2);
  auto r = check_non_compensation(LexRelation(), pts).results[0];
  CHECK(r.tuples_examined == 256);
  CHECK(r.passed());
  CHECK_FALSE(r.vacuous());
}

TEST_CASE("mep violates non-compensation and the single-coordinate axiom") {
  // mep with (40, 10): (1/10, 4/5) -> 8, (1/10, 9/10) -> 9, (1/2, 4/5) -> 20, (1/2, 9/10) -> 20
  auto ctx = PriorityContext::create({"$40", "$10"}, std::vector<Rational>{40, 10});
  std::vector<Raf> sample;
  for (const char* x : {"1/10", "1/2"}) {
    for (const char* y : {"4/5", "9/10"}) sample.push_back(raf(ctx, {x, y}));
  }
  auto mep = make_mep_relation();
  auto o = oracle_quadruples(mep, sample);
  REQUIRE(o.axiom2_bad > 0);
  REQUIRE(o.nc_bad > 0);

  auto a2 = check_axiom2_ms(mep, sample).results[0];
  CHECK(a2.violation_count == o.axiom2_bad);
  REQUIRE_FALSE(a2.violations.empty());
  CHECK(replay_violation(mep, a2.violations[0]));
  CHECK(a2.violations[0].k.has_value());

  auto nc = check_non_compensation(mep, sample).results[0];
  CHECK(nc.violation_count == o.nc_bad);
  CHECK(replay_violation(mep, nc.violations[0]));
}

TEST_CASE("reversed lex violates both independence axioms") {
  auto pts = grid({"0", "1"}, 2);
  auto ctx = pts[0].context();
  auto rev = LexRelation::reversed(2);

  CheckConfig cfg;
  cfg.all_violations = true;
  auto iwa = check_iwa(rev, pts, cfg).results[0];
  CHECK_FALSE(iwa.passed());
  for (const auto& v : iwa.violations) CHECK(replay_violation(rev, v));

  Raf a = raf(ctx, {"1", "0"}), b = raf(ctx, {"0", "0"});
  Raf c = raf(ctx, {"1", "0"}), d = raf(ctx, {"0", "1"});
  CHECK(qualifies_weak_iwa(a, b, c, d) == std::optional<std::size_t>(1));
  CHECK(rev.compare(a, b) == Outcome::FirstPreferred);
  CHECK(rev.compare(c, d) == Outcome::SecondPreferred);

  auto weak = check_weak_iwa(rev, pts, cfg).results[0];
  CHECK_FALSE(weak.passed());
  CHECK(has_witness(weak, {a, b, c, d}));
  for (const auto& v : weak.violations) {
    CHECK(v.k == std::optional<std::size_t>(1));
    CHECK(replay_violation(rev, v));
  }
  // reversed lex is still strongly monotonic
  CHECK(check_strong_monotonicity(rev, pts).passed());
}

TEST_CASE("vacuous passes are flagged") {
  auto ctx = PriorityContext::numbered(2);
  std::vector<Raf> one{raf(ctx, {"1/2", "1/2"})};
  LexRelation lex;
  auto sd = check_strong_dominance(lex, one).results[0];
  CHECK(sd.passed());
  CHECK(sd.vacuous());
  CHECK(sd.tuples_examined == 0);

  // no pair differs in exactly one coordinate
  std::vector<Raf> diag{raf(ctx, {"0", "0"}), raf(ctx, {"1", "1"})};
  auto a2 = check_axiom2_ms(lex, diag).results[0];
  CHECK(a2.passed());
  CHECK(a2.vacuous());
  CHECK(a2.tuples_examined == 16);

  CHECK_THROWS_AS(check_strong_dominance(lex, std::vector<Raf>{}), Error);
}

TEST_CASE("mixed contexts are rejected") {
  auto c1 = PriorityContext::numbered(2);
  auto c2 = PriorityContext::create({"a", "b"});
  std::vector<Raf> pts{raf(c1, {"0", "0"}), raf(c2, {"1", "1"})};
  CHECK(kind_of([&] { check_strong_monotonicity(LexRelation(), pts); }) ==
        ErrorKind::ContextMismatch);
  CHECK(kind_of([&] { check_weak_iwa(LexRelation(), pts); }) == ErrorKind::ContextMismatch);
}

TEST_CASE("sampled mode above the quadruple cap") {
  auto pts = grid({"0", "1/3", "2/3", "1"}, 2);  // 16 points
  CheckConfig cfg;
  cfg.samples = 5000;
  cfg.seed = 7;
  auto r = check_weak_iwa(LexRelation(), pts, cfg).results[0];
  CHECK(r.mode == CheckMode::Sampled);
  CHECK(r.tuples_examined == 5000);
  CHECK(r.passed());
  CHECK_FALSE(r.vacuous());

  auto rev = LexRelation::reversed(2);
  auto r1 = check_weak_iwa(rev, pts, cfg).results[0];
  auto r2 = check_weak_iwa(rev, pts, cfg).results[0];
  CHECK_FALSE(r1.passed());
  CHECK(r1.qualifying == r2.qualifying);
  CHECK(r1.violations[0].sample_indices == r2.violations[0].sample_indices);

  cfg.quadruple_cap = 16;
  CHECK(check_weak_iwa(LexRelation(), pts, cfg).results[0].tuples_examined == 65536);
}

TEST_CASE("property: checkers are deterministic") {
  std::mt19937_64 rng(43);
  auto ctx = PriorityContext::numbered(3, std::vector<Rational>{5, 3, 2});
  auto mep = make_mep_relation();
  for (int s = 0; s < 10; ++s) {
    std::vector<Raf> pts;
    for (int i = 0; i < 6; ++i) pts.push_back(testing::random_raf(rng, ctx, 4));
    CheckConfig cfg;
    cfg.all_violations = s % 2 == 0;
    auto a = check_axioms(mep, pts, all_axioms(), cfg);
    auto b = check_axioms(mep, pts, all_axioms(), cfg);
    REQUIRE(a.results.size() == b.results.size());
    for (std::size_t i = 0; i < a.results.size(); ++i) {
      REQUIRE(a.results[i].tuples_examined == b.results[i].tuples_examined);
      REQUIRE(a.results[i].qualifying == b.results[i].qualifying);
      REQUIRE(a.results[i].violation_count == b.results[i].violation_count);
      REQUIRE(a.results[i].violations.size() == b.results[i].violations.size());
      for (std::size_t j = 0; j < a.results[i].violations.size(); ++j) {
        REQUIRE(a.results[i].violations[j].sample_indices ==
                b.results[i].violations[j].sample_indices);
        REQUIRE(a.results[i].violations[j].witness == b.results[i].violations[j].witness);
      }
    }
  }
}

TEST_CASE("property: the first violation is the first in all-violations mode") {
  std::mt19937_64 rng(47);
  auto ctx = PriorityContext::numbered(2);
  auto rev = LexRelation::reversed(2);
  for (int s = 0; s < 10; ++s) {
    std::vector<Raf> pts;
    for (int i = 0; i < 6; ++i) pts.push_back(testing::random_raf(rng, ctx, 3));
    CheckConfig all;
    all.all_violations = true;
    auto first = check_iwa(rev, pts).results[0];
    auto every = check_iwa(rev, pts, all).results[0];
    REQUIRE(first.violation_count == every.violation_count);
    REQUIRE(every.violations.size() == every.violation_count);
    if (!first.passed()) {
      REQUIRE(first.violations.size() == 1);
      REQUIRE(first.violations[0].sample_indices == every.violations[0].sample_indices);
    }
  }
}

TEST_CASE("property: utility relations satisfy the order axioms") {
  std::mt19937_64 rng(53);
  auto ctx = PriorityContext::numbered(3, std::vector<Rational>{7, 2, 3});
  auto mep = make_mep_relation();
  UtilityRelation sum([](const Raf& a) { return a[0] + a[1] + a[2]; }, "sum");
  WlogRelation wlog(WeightVector({2, 1, 1}));
  for (int s = 0; s < 20; ++s) {
    std::vector<Raf> pts;
    for (int i = 0; i < 8; ++i) pts.push_back(testing::random_raf(rng, ctx, 4));
    REQUIRE(check_order_axioms(mep, pts).passed());
    REQUIRE(check_order_axioms(sum, pts).passed());
    REQUIRE(check_order_axioms(wlog, pts).passed());
  }
}

TEST_CASE("property: weak IWA and single-coordinate hypotheses imply the stronger ones") {
  std::mt19937_64 rng(59);
  std::uint64_t weak_hits = 0, axiom2_hits = 0;
  for (int s = 0; s < 50; ++s) {
    auto ctx = PriorityContext::numbered(2 + s % 3);
    const auto pool = levels({"0", "1/2", "1"});
    std::vector<Raf> pts;
    for (int i = 0; i < 6; ++i) pts.push_back(testing::random_raf_from(rng, ctx, pool));
    std::uniform_int_distribution<std::size_t> pick(0, pts.size() - 1);
    for (int d = 0; d < 200; ++d) {
      const Raf &a = pts[pick(rng)], &b = pts[pick(rng)], &c = pts[pick(rng)],
                &dd = pts[pick(rng)];
      if (auto k = qualifies_weak_iwa(a, b, c, dd)) {
        ++weak_hits;
        REQUIRE(qualifies_iwa(a, b, c, dd, *k));
      }
      if (qualifies_axiom2(a, b, c, dd)) {
        ++axiom2_hits;
        REQUIRE(qualifies_non_compensation(a, b, c, dd));
      }
    }
  }
  CHECK(weak_hits > 100);
  CHECK(axiom2_hits > 20);
}

TEST_CASE("property: pass implications between checkers") {
  std::mt19937_64 rng(61);
  for (int s = 0; s < 30; ++s) {
    auto ctx = PriorityContext::numbered(2 + s % 2, std::vector<Rational>(2 + s % 2, 1));
    std::vector<Raf> pts;
    for (int i = 0; i < 5; ++i) pts.push_back(testing::random_raf(rng, ctx, 3));
    LexRelation lex;
    auto rev = LexRelation::reversed(ctx->size());
    auto mep = make_mep_relation();
    auto flat_u = UtilityRelation([](const Raf&) { return Rational(0); }, "flat");
    for (const PreferenceRelation* rel :
         std::initializer_list<const PreferenceRelation*>{&lex, &rev, &mep, &flat_u}) {
      auto iwa = check_iwa(*rel, pts).results[0];
      auto weak = check_weak_iwa(*rel, pts).results[0];
      REQUIRE(weak.qualifying <= iwa.qualifying);
      if (iwa.passed()) REQUIRE(weak.passed());
      auto nc = check_non_compensation(*rel, pts).results[0];
      auto a2 = check_axiom2_ms(*rel, pts).results[0];
      REQUIRE(a2.qualifying <= nc.qualifying);
      if (nc.passed()) REQUIRE(a2.passed());
    }
  }
}

TEST_CASE("property: on product grids strong monotonicity implies both dominance axioms") {
  std::mt19937_64 rng(67);
  int nontrivial = 0;
  for (int s = 0; s < 40; ++s) {
    const std::size_t k = 2 + s % 2;
    std::set<Rational> lv;
    while (lv.size() < 3) lv.insert(testing::random_probability(rng, 6));
    GridSpec spec(std::vector<Rational>(lv.begin(), lv.end()), k);
    std::vector<Rational> pay;
    for (std::size_t i = 0; i < k; ++i) {
      pay.push_back(testing::random_probability(rng) * Rational(20));
    }
    auto ctx = PriorityContext::numbered(k, pay);
    auto pts = grid_points(spec, ctx);
    std::vector<unsigned> w;
    for (std::size_t i = 0; i < k; ++i) w.push_back(1 + static_cast<unsigned>(rng() % 3));

    LexRelation lex;
    auto mep = make_mep_relation();
    WlogRelation wlog{WeightVector(w)};
    UtilityRelation additive([](const Raf& a) {
      Rational s = 0;
      for (const auto& v : a.values()) s += v;
      return s;
    }, "sum");
    for (const PreferenceRelation* rel :
         std::initializer_list<const PreferenceRelation*>{&lex, &mep, &wlog, &additive}) {
      if (!check_order_axioms(*rel, pts).at(AxiomId::Transitive).passed()) continue;
      if (!check_strong_monotonicity(*rel, pts).passed()) continue;
      ++nontrivial;
      REQUIRE(check_weak_dominance(*rel, pts).passed());
      REQUIRE(check_strong_dominance(*rel, pts).passed());
    }
  }
  CHECK(nontrivial >= 80);
}

TEST_SUITE_END();
