#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "corpus.hpp"
#include "qaknots/diagram.hpp"

using namespace qak;

namespace {

LaurentPoly mono_a(int c, long long halfkey) {
  return LaurentPoly::monomial(VarTag::A, c, halfkey);
}

}  // namespace

TEST_CASE("validation rejects malformed diagrams") {
  PlanarDiagram d;
  d.crossings.push_back(Crossing{{1, 2, 3, 4}});
  CHECK_THROWS_AS(validate(d), std::invalid_argument);  // arcs appear once
  d.crossings.push_back(Crossing{{1, 2, 3, 4}});
  CHECK_NOTHROW(validate(d));
  d.orientation = std::vector<CrossingOrientation>{{0, 3}};
  CHECK_THROWS_AS(validate(d), std::invalid_argument);  // orientation size
}

TEST_CASE("bracket of small diagrams") {
  CHECK(bracket(corpus::unknot()) == LaurentPoly::one(VarTag::A));
  // positive kink: -A^3
  CHECK(bracket(corpus::kink()) == mono_a(-1, 6));
  // Hopf link: -A^4 - A^-4
  CHECK(bracket(corpus::hopf()) == mono_a(-1, 8) + mono_a(-1, -8));
  // right trefoil: -A^5 - A^-3 + A^-7
  CHECK(bracket(corpus::trefoil()) == mono_a(-1, 10) + mono_a(-1, -6) + mono_a(1, -14));
  // split union multiplies by delta = -A^2 - A^-2
  const auto delta = mono_a(-1, 4) + mono_a(-1, -4);
  CHECK(bracket(disjoint_union(corpus::trefoil(), corpus::unknot())) ==
        bracket(corpus::trefoil()) * delta);
}

TEST_CASE("engines agree on the named corpus") {
  for (const auto& d : corpus::all_named()) {
    const auto serial = bracket_state_sum_serial(d, d.crossings.size()).poly;
    const auto par = bracket_state_sum(d, d.crossings.size()).poly;
    const auto skein = bracket_skein(d).poly;
    CHECK(serial == par);
    CHECK(serial == skein);
  }
}

TEST_CASE("engines agree on random diagrams") {
  std::mt19937 rng(20240501);
  for (int iter = 0; iter < 100; ++iter) {
    const auto d = corpus::random_diagram(rng, 10);
    const auto serial = bracket_state_sum_serial(d, d.crossings.size()).poly;
    CHECK(serial == bracket_state_sum(d, d.crossings.size()).poly);
    CHECK(serial == bracket_skein(d).poly);
  }
}

TEST_CASE("jones values of standard knots") {
  // right trefoil
  CHECK(jones(auto_orient(corpus::trefoil())).to_string() ==
        "-1*t^4 + 1*t^3 + 1*t^1");
  // figure-eight is amphichiral
  const auto v48 = jones(auto_orient(corpus::figure_eight()));
  CHECK(v48 == v48.mirrored());
  CHECK(v48.to_string() == "1*t^2 + -1*t^1 + 1 + -1*t^-1 + 1*t^-2");
  // mirror image flips t -> 1/t
  const auto v31 = jones(auto_orient(corpus::trefoil()));
  CHECK(jones(auto_orient(mirror(corpus::trefoil()))) == v31.mirrored());
}

TEST_CASE("jones is invariant under kink insertion") {
  // same knot, different writhe: closure("1 1 1") vs closure("1 1 1 2")
  const auto a = jones(auto_orient(corpus::trefoil()));
  const auto b = jones(auto_orient(corpus::from_word("1 1 1 2")));
  const auto c = jones(auto_orient(corpus::from_word("1 1 1 -2")));
  CHECK(a == b);
  CHECK(a == c);
}

TEST_CASE("determinants of the corpus") {
  CHECK(determinant(corpus::unknot()) == 1);
  CHECK(determinant(corpus::hopf()) == 2);
  CHECK(determinant(corpus::trefoil()) == 3);
  CHECK(determinant(corpus::figure_eight()) == 5);
  CHECK(determinant(corpus::cinqfoil()) == 5);
  CHECK(determinant(corpus::knot_5_2()) == 7);
  // split links have determinant 0
  CHECK(determinant(disjoint_union(corpus::unknot(), corpus::unknot())) == 0);
}

TEST_CASE("writhe and crossing signs") {
  auto d = auto_orient(corpus::trefoil());
  CHECK(writhe(d) == 3);
  CHECK(writhe(auto_orient(mirror(corpus::trefoil()))) == -3);
  for (std::size_t i = 0; i < d.crossings.size(); ++i)
    CHECK(crossing_sign(d, i) == 1);
}

TEST_CASE("component counting") {
  CHECK(component_count(corpus::unknot()) == 1);
  CHECK(component_count(corpus::hopf()) == 2);
  CHECK(component_count(corpus::trefoil()) == 1);
  CHECK(component_count(corpus::from_word("1 1 1 1")) == 2);
  CHECK(component_count(disjoint_union(corpus::hopf(), corpus::unknot())) == 3);
}

TEST_CASE("alternating and connected detection") {
  CHECK(is_alternating(corpus::hopf()));
  CHECK(is_alternating(corpus::trefoil()));
  CHECK(is_alternating(corpus::figure_eight()));
  CHECK(is_connected(corpus::trefoil()));
  CHECK_FALSE(is_connected(disjoint_union(corpus::trefoil(), corpus::unknot())));
  // closure of "1 1 -1": over-over along the strand breaks alternation
  CHECK_FALSE(is_alternating(corpus::from_word("1 1 -1")));
}

TEST_CASE("kink reduction") {
  const auto r = reduce_kinks(corpus::kink());
  CHECK(r.crossings.empty());
  CHECK(r.n_free_loops == 1);
  // trefoil has no kinks
  CHECK(reduce_kinks(corpus::trefoil()).crossings.size() == 3);
  // "1 1 1 2" carries one kink on top of a trefoil
  const auto t = reduce_kinks(corpus::from_word("1 1 1 2"));
  CHECK(t.crossings.size() == 3);
  CHECK(determinant(t) == 3);
}

TEST_CASE("smoothing identities") {
  // <L> = A <L0> + A^-1 <Linf> at every crossing
  std::mt19937 rng(555);
  for (int iter = 0; iter < 40; ++iter) {
    const auto d = corpus::random_diagram(rng, 8);
    if (d.crossings.empty()) continue;
    const auto b = bracket(d);
    for (std::size_t i = 0; i < d.crossings.size(); ++i) {
      const auto b0 = bracket(smooth(d, i, SmoothKind::zero));
      const auto binf = bracket(smooth(d, i, SmoothKind::infinity));
      CHECK(b == b0.shifted(2) + binf.shifted(-2));
    }
  }
}

TEST_CASE("canonical_key identifies relabeled diagrams") {
  std::mt19937 rng(808);
  for (int iter = 0; iter < 50; ++iter) {
    auto d = corpus::random_diagram(rng, 8);
    d.orientation.reset();
    // shift every arc label
    PlanarDiagram e = d;
    for (auto& x : e.crossings)
      for (int s = 0; s < 4; ++s) x[s] += 17;
    CHECK(canonical_key(d) == canonical_key(e));
  }
  CHECK(canonical_key(corpus::hopf()) != canonical_key(corpus::trefoil()));
}

TEST_CASE("pd text and json round-trip") {
  std::mt19937 rng(31415);
  for (int iter = 0; iter < 50; ++iter) {
    const auto d = corpus::random_diagram(rng, 9);
    CHECK(pd_from_text(pd_to_text(d)) == d);
    CHECK(pd_from_json(pd_to_json(d)) == d);
  }
  CHECK_THROWS_AS(pd_from_text("X(1,2,3)"), std::invalid_argument);
  CHECK_THROWS_AS(pd_from_text("Y(1,2,3,4)"), std::invalid_argument);
}

TEST_CASE("determinant does not depend on orientation choice") {
  std::mt19937 rng(2718);
  for (int iter = 0; iter < 30; ++iter) {
    auto d = corpus::random_diagram(rng, 8);
    const auto with = determinant(d);
    d.orientation.reset();
    CHECK(determinant(d) == with);
  }
}
