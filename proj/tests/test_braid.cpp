#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "corpus.hpp"
#include "qaknots/braid.hpp"

using namespace qak;

TEST_CASE("braid word parsing and validation") {
  const auto w = braid_from_text("1 -2 1 -2");
  CHECK(w.strands == 3);
  CHECK(w.letters == std::vector<int>{1, -2, 1, -2});
  CHECK(w.exponent_sum() == 0);
  CHECK(braid_from_text(braid_to_text(w)) .letters == w.letters);
  CHECK_THROWS_AS(braid_from_text("1 0 2"), std::invalid_argument);
  CHECK_THROWS_AS(braid_from_text("1 x"), std::invalid_argument);
  BraidWord bad;
  bad.strands = 2;
  bad.letters = {2};
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
}

TEST_CASE("burau representation relations") {
  CHECK_NOTHROW(full_twist_check());

  // braid relation s1 s2 s1 = s2 s1 s2
  const auto lhs = burau(braid_from_text("1 2 1", 3));
  const auto rhs = burau(braid_from_text("2 1 2", 3));
  CHECK(lhs == rhs);

  // inverses cancel
  const auto id = burau(braid_from_text("1 -1 2 -2", 3));
  CHECK(id == burau_identity());

  // psi is a homomorphism on random splits
  std::mt19937 rng(4242);
  for (int iter = 0; iter < 100; ++iter) {
    auto w = corpus::random_3braid(rng, 12);
    std::uniform_int_distribution<std::size_t> cut(0, w.letters.size());
    const auto k = cut(rng);
    BraidWord a{3, {w.letters.begin(), w.letters.begin() + static_cast<long>(k)}};
    BraidWord b{3, {w.letters.begin() + static_cast<long>(k), w.letters.end()}};
    CHECK(burau(w) == burau_mul(burau(a), burau(b)));
  }
}

TEST_CASE("closure diagrams of short words") {
  const auto h = closure(braid_from_text("1 1"));
  CHECK(h.crossings.size() == 2);
  CHECK(component_count(h) == 2);
  CHECK(writhe(h) == 2);
  const auto t = closure(braid_from_text("1 1 1"));
  CHECK(component_count(t) == 1);
  CHECK(determinant(t) == 3);
  // empty word on k strands closes to k unknots
  BraidWord e;
  e.strands = 3;
  CHECK(component_count(closure(e)) == 3);
}

TEST_CASE("birman formula agrees with the diagram engine") {
  for (const char* word : {"1 1", "1 1 1", "1 -2 1 -2", "1 1 1 2 -1 2",
                           "1 1 1 -2 1 -2", "1 1 -2 1 1 -2 -2", "2", "-1 -1 -1"}) {
    const auto w = braid_from_text(word, 3);
    CHECK(birman_jones(w) == jones(closure(w)));
  }
  std::mt19937 rng(1001);
  for (int iter = 0; iter < 200; ++iter) {
    const auto w = corpus::random_3braid(rng, 10);
    CHECK(birman_jones(w) == jones(closure(w)));
  }
}

TEST_CASE("normal form expansion and text round-trip") {
  BaldwinNormalForm nf;
  nf.variant = BaldwinNormalForm::Variant::type1;
  nf.n = 1;
  nf.pairs = {{2, 3}, {1, 2}};
  const auto w = expand_normal_form(nf);
  // h^1 s1^2 s2^-3 s1^1 s2^-2
  CHECK(w.letters == std::vector<int>{1, 2, 1, 2, 1, 2, 1, 1, -2, -2, -2, 1, -2, -2});
  CHECK(normal_form_to_text(nf) == "type1 n=1 pairs=2:3,1:2");
  CHECK(normal_form_from_text(normal_form_to_text(nf)).pairs == nf.pairs);

  BaldwinNormalForm t2;
  t2.variant = BaldwinNormalForm::Variant::type2;
  t2.n = -1;
  t2.m = 4;
  CHECK(expand_normal_form(t2).letters ==
        std::vector<int>{-2, -1, -2, -1, -2, -1, 2, 2, 2, 2});
  CHECK(normal_form_from_text("type2 n=-1 m=4").m == 4);

  BaldwinNormalForm t3;
  t3.variant = BaldwinNormalForm::Variant::type3;
  t3.n = 0;
  t3.m = -2;
  // type3 is h^n s1^m s2^-1
  CHECK(expand_normal_form(t3).letters == std::vector<int>{-1, -1, -2});
  CHECK_THROWS_AS(normal_form_from_text("type3 n=0 m=-4"), std::invalid_argument);
  CHECK_THROWS_AS(normal_form_from_text("type4 n=0 m=1"), std::invalid_argument);
}

TEST_CASE("baldwin classification") {
  auto nf1 = [](int n) {
    BaldwinNormalForm f;
    f.variant = BaldwinNormalForm::Variant::type1;
    f.n = n;
    f.pairs = {{1, 1}};
    return f;
  };
  CHECK(baldwin_qa(nf1(0)));
  CHECK(baldwin_qa(nf1(1)));
  CHECK(baldwin_qa(nf1(-1)));
  CHECK_FALSE(baldwin_qa(nf1(2)));
  CHECK_FALSE(baldwin_qa(nf1(-3)));

  // type2: QA iff n = +-1 with m of the opposite sign and |m| <= 3
  BaldwinNormalForm t2;
  t2.variant = BaldwinNormalForm::Variant::type2;
  t2.m = -3;
  t2.n = 1;
  CHECK(baldwin_qa(t2));
  t2.m = 3;
  CHECK_FALSE(baldwin_qa(t2));
  t2.n = -1;
  CHECK(baldwin_qa(t2));
  t2.n = 2;
  CHECK_FALSE(baldwin_qa(t2));

  // type3: QA iff n in {0, 1}
  BaldwinNormalForm t3;
  t3.variant = BaldwinNormalForm::Variant::type3;
  t3.m = -1;
  t3.n = 0;
  CHECK(baldwin_qa(t3));
  t3.n = 1;
  CHECK(baldwin_qa(t3));
  t3.n = -1;
  CHECK_FALSE(baldwin_qa(t3));
}

TEST_CASE("torus link jones values") {
  // V(T(2,2)) for the positive Hopf link
  CHECK(torus_2n_jones(2).to_string() == "-1*t^(5/2) + -1*t^(1/2)");
  // V(T(2,3)) = right trefoil
  CHECK(torus_2n_jones(3) == jones(corpus::trefoil()));
  CHECK(torus_2n_jones(5) == jones(corpus::cinqfoil()));
  CHECK_THROWS_AS(torus_2n_jones(1), std::invalid_argument);
  // determinant of T(2,n) is n
  for (int n = 2; n <= 9; ++n) {
    BraidWord w;
    w.strands = 2;
    w.letters.assign(static_cast<std::size_t>(n), 1);
    CHECK(determinant(closure(w)) == n);
    CHECK(torus_2n_jones(n) == jones(closure(w)));
  }
}
