#include <doctest.h>

#include "helpers.hpp"
#include "lsf/seifert.hpp"

using namespace lsf;
using namespace lsf::seifert;
using testutil::Rng;

namespace {

Rational r(long long n, long long d) { return Rational(Int(n), Int(d)); }

SeifertForm form(long long b, std::vector<Rational> ratios) {
  std::vector<std::optional<Rational>> raw;
  for (auto& x : ratios) raw.emplace_back(x);
  return normalize(Int(b), raw);
}

bool lspace(const SeifertForm& f) { return is_lspace(f).verdict == Verdict::LSpace; }

}  // namespace

TEST_CASE("normalize") {
  const auto f1 = form(-1, {r(3, 2), r(1, 2)});
  CHECK(f1.b == 0);
  CHECK(f1.ratios == std::vector<Rational>{r(1, 2), r(1, 2)});
  CHECK(!f1.degenerate);

  const auto f2 = form(0, {Rational(0), r(1, 3)});
  CHECK(f2.b == 0);
  CHECK(f2.ratios == std::vector<Rational>{r(1, 3)});

  const auto f3 = normalize(-1, {r(1, 2), std::nullopt});
  CHECK(f3.degenerate);
  CHECK_THROWS_AS(normalize(0, {std::nullopt, std::nullopt}), TooManyDegenerate);

  // negative ratios fold upward
  const auto f4 = form(0, {r(-1, 3)});
  CHECK(f4.b == -1);
  CHECK(f4.ratios == std::vector<Rational>{r(2, 3)});
}

TEST_CASE("h1_order") {
  CHECK(h1_order(form(-2, {r(1, 2), r(2, 3), r(4, 5)})) == 1);  // Poincare sphere
  CHECK(h1_order(form(-1, {r(1, 2), r(1, 2), r(1, 3)})) == 4);
  CHECK(h1_order(form(0, {})) == 0);  // S^1 x S^2
  CHECK_THROWS_AS(h1_order(normalize(0, {std::nullopt})), Unsupported);
}

TEST_CASE("jn_witness") {
  auto w1 = jn_witness({r(1, 7), r(1, 3), r(1, 2)});
  REQUIRE(w1.has_value());
  CHECK(w1->a == 2);
  CHECK(w1->k == 5);
  CHECK(!jn_witness({r(1, 3), r(1, 2), r(1, 2)}).has_value());
  CHECK(!jn_witness({r(1, 5), r(1, 3), r(1, 2)}).has_value());

  // shortcut: no witness whenever r_{s-1} >= 1/2
  Rng rng(404);
  for (int i = 0; i < 300; ++i) {
    std::vector<Rational> rs;
    for (int j = 0; j < 3; ++j) {
      const long long d = rng.range(2, 30);
      rs.push_back(r(rng.range(1, d - 1), d));
    }
    std::sort(rs.begin(), rs.end());
    if (rs[1] >= r(1, 2)) CHECK(!jn_witness(rs).has_value());
  }
}

TEST_CASE("is_lspace certificates") {
  const auto not1 = is_lspace(form(-2, {r(1, 2), r(1, 2), r(1, 2), r(1, 2)}));
  CHECK(not1.verdict == Verdict::NotLSpace);
  CHECK(not1.branch == 1);

  CHECK(lspace(form(-1, {r(1, 2), r(1, 2), r(1, 3)})));
  CHECK(!lspace(form(-1, {r(1, 2), r(1, 2)})));  // S^1 x S^2

  const auto not2 = is_lspace(form(-1, {r(1, 2), r(1, 3), r(1, 7)}));
  CHECK(not2.verdict == Verdict::NotLSpace);
  CHECK(not2.branch == 2);
  REQUIRE(not2.witness.has_value());
  CHECK(not2.witness->a == 2);
  CHECK(not2.witness->k == 5);

  const auto poincare = is_lspace(form(-2, {r(1, 2), r(2, 3), r(4, 5)}));
  CHECK(poincare.verdict == Verdict::LSpace);
  CHECK(poincare.certificate == "no-witness(3)");

  // lens spaces and degenerate forms
  CHECK(lspace(form(5, {})));
  CHECK(!lspace(form(0, {})));
  CHECK(lspace(form(0, {r(1, 2)})));
  CHECK(lspace(normalize(-1, {r(1, 2), std::nullopt})));
  // prism manifold S^2(-1; 1/2, 1/2, 1/2): elliptic, hence an L-space
  CHECK(lspace(form(-1, {r(1, 2), r(1, 2), r(1, 2)})));
}

TEST_CASE("is_lspace duality") {
  Rng rng(777);
  for (int i = 0; i < 4000; ++i) {
    const int s = static_cast<int>(rng.range(0, 5));
    std::vector<Rational> rs;
    for (int j = 0; j < s; ++j) {
      const long long d = rng.range(2, 24);
      rs.push_back(r(rng.range(1, d - 1), d));
    }
    const long long b = rng.range(-7, 7);
    const auto f = form(b, rs);
    std::vector<Rational> comp;
    for (auto it = f.ratios.rbegin(); it != f.ratios.rend(); ++it)
      comp.push_back(Rational(1) - *it);
    const auto dual = form(-(b + static_cast<long long>(f.ratios.size())), comp);
    CHECK(lspace(f) == lspace(dual));
  }
}

TEST_CASE("is_lspace invariant under normalization shifts") {
  Rng rng(888);
  for (int i = 0; i < 500; ++i) {
    const int s = static_cast<int>(rng.range(1, 4));
    std::vector<Rational> rs;
    for (int j = 0; j < s; ++j) {
      const long long d = rng.range(2, 12);
      rs.push_back(r(rng.range(1, d - 1), d));
    }
    const long long b = rng.range(-5, 5);
    const auto f = form(b, rs);
    // shift one ratio by an integer and compensate in b
    auto shifted = rs;
    const long long z = rng.range(-3, 3);
    shifted[0] = shifted[0] + Rational(z);
    const auto g = form(b - z, shifted);
    CHECK(f == g);
  }
}

TEST_CASE("family member and limit") {
  SeifertFamily harmonic{Int(-1), {r(1, 2), r(1, 2)}, Int(1), Int(0), Int(0), Int(1)};
  CHECK(family_member(harmonic, 3) == form(-1, {r(1, 2), r(1, 2), r(1, 3)}));
  CHECK(family_member(harmonic, 0).degenerate);
  CHECK(family_limit(harmonic) == form(-1, {r(1, 2), r(1, 2)}));

  SeifertFamily f2{Int(0), {r(1, 2), r(1, 2), r(1, 2)}, Int(1), Int(1), Int(1), Int(0)};
  CHECK(family_member(f2, 2) == form(0, {r(1, 2), r(1, 2), r(1, 2), r(2, 3)}));
  CHECK(family_limit(f2) == form(1, {r(1, 2), r(1, 2), r(1, 2)}));

  SeifertFamily bad{Int(0), {r(1, 2)}, Int(1), Int(1), Int(1), Int(1)};
  CHECK_THROWS_AS(validate(bad), Error);

  // t = 0: the limit fiber is infinite and the limit manifold is an L-space
  SeifertFamily vert{Int(-1), {r(1, 2), r(1, 3)}, Int(0), Int(-1), Int(1), Int(2)};
  const auto lim = family_limit(vert);
  CHECK(lim.degenerate);
  CHECK(is_lspace(lim).verdict == Verdict::LSpace);
  const auto vrep = classify_family(vert, -100, 100);
  CHECK(vrep.left_tail == Verdict::LSpace);
  CHECK(vrep.right_tail == Verdict::LSpace);
}

TEST_CASE("classify_family on the harmonic three-fiber family") {
  SeifertFamily harmonic{Int(-1), {r(1, 2), r(1, 2)}, Int(1), Int(0), Int(0), Int(1)};
  const auto rep = classify_family(harmonic, -50, 50);
  REQUIRE(rep.runs.size() == 1);
  CHECK(rep.runs[0].verdict == Verdict::LSpace);
  CHECK(rep.degenerate_members == std::vector<std::int64_t>{0});
  CHECK(rep.limit == Verdict::NotLSpace);
  CHECK(rep.left_tail == Verdict::LSpace);
  CHECK(rep.right_tail == Verdict::LSpace);
  CHECK(!rep.dichotomy.has_value());  // only three fibers: report is empirical
  CHECK(!rep.unstable_window);
}

TEST_CASE("classify_family with four fibers") {
  SeifertFamily f2{Int(0), {r(1, 2), r(1, 2), r(1, 2)}, Int(1), Int(1), Int(1), Int(0)};
  const auto rep = classify_family(f2, 1, 50);
  REQUIRE(rep.runs.size() == 1);
  CHECK(rep.runs[0].verdict == Verdict::LSpace);
  CHECK(rep.limit == Verdict::LSpace);
  REQUIRE(rep.dichotomy.has_value());
  CHECK(*rep.dichotomy);

  SeifertFamily f3{Int(-2), {r(1, 2), r(1, 2), r(1, 2)}, Int(1), Int(1), Int(1), Int(0)};
  const auto rep3 = classify_family(f3, 1, 50);
  REQUIRE(rep3.runs.size() == 1);
  CHECK(rep3.runs[0].verdict == Verdict::NotLSpace);
  // limit folds to the prism manifold S^2(-1; 1/2,1/2,1/2), an L-space; the
  // dichotomy is saved by the other tail, which the window [1,50] never sees.
  CHECK(rep3.limit == Verdict::LSpace);
  CHECK(rep3.left_tail == Verdict::LSpace);
  CHECK(rep3.right_tail == Verdict::NotLSpace);
  REQUIRE(rep3.dichotomy.has_value());
  CHECK(*rep3.dichotomy);
  // members on the left tail really are L-spaces
  CHECK(lspace(family_member(f3, -3)));
  CHECK(!lspace(family_member(f3, 3)));
}

TEST_CASE("h1 order along a family is eventually |linear| in n") {
  Rng rng(1212);
  for (int trial = 0; trial < 50; ++trial) {
    SeifertFamily fam;
    fam.b = rng.range(-3, 3);
    const int s = static_cast<int>(rng.range(1, 3));
    for (int j = 0; j < s; ++j) {
      const long long d = rng.range(2, 9);
      fam.base_ratios.push_back(r(rng.range(1, d - 1), d));
    }
    // unimodular twist data
    for (;;) {
      fam.t = rng.range(-6, 6);
      fam.u = rng.range(-6, 6);
      fam.v = rng.range(-6, 6);
      fam.w = rng.range(-6, 6);
      const Int det = fam.t * fam.w - fam.u * fam.v;
      if (det == 1 || det == -1) break;
    }
    // second differences of h1 vanish on a far tail
    std::vector<Int> orders;
    for (std::int64_t n = 500; n <= 510; ++n) {
      const auto m = family_member(fam, n);
      if (m.degenerate) goto next_trial;
      orders.push_back(h1_order(m));
    }
    for (std::size_t i = 2; i < orders.size(); ++i)
      CHECK(orders[i] - orders[i - 1] == orders[i - 1] - orders[i - 2]);
  next_trial:;
  }
}

TEST_CASE("window dichotomy property at scale 10^3 on random families") {
  Rng rng(5150);
  int tested = 0;
  for (int trial = 0; trial < 60; ++trial) {
    SeifertFamily fam;
    fam.b = rng.range(-4, 4);
    const int s = static_cast<int>(rng.range(3, 5));
    for (int j = 0; j < s; ++j) {
      const long long d = rng.range(2, 20);
      fam.base_ratios.push_back(r(rng.range(1, d - 1), d));
    }
    for (;;) {
      fam.t = rng.range(-10, 10);
      fam.u = rng.range(-10, 10);
      fam.v = rng.range(-10, 10);
      fam.w = rng.range(-10, 10);
      const Int det = fam.t * fam.w - fam.u * fam.v;
      if (det == 1 || det == -1) break;
    }
    const auto rep = classify_family(fam, -1000, 1000, 2);
    REQUIRE(rep.dichotomy.has_value());
    CHECK(*rep.dichotomy);
    CHECK(rep.left_stable);
    CHECK(rep.right_stable);
    // the in-window tails agree with the exact eventual verdicts
    CHECK(rep.runs.front().verdict == rep.left_tail);
    CHECK(rep.runs.back().verdict == rep.right_tail);
    ++tested;
  }
  CHECK(tested == 60);
}
