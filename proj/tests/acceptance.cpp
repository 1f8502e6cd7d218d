// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Every check is exact equality; runtime bounds are asserted where
// a criterion carries one.
#include <chrono>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <random>
#include <vector>

#include "corpus.hpp"
#include "qaknots/braid.hpp"
#include "qaknots/diagram.hpp"
#include "qaknots/laurent.hpp"
#include "qaknots/montesinos.hpp"
#include "qaknots/quasialt.hpp"
#include "qaknots/table.hpp"

using namespace qak;

namespace {

int g_failures = 0;

void report(int index, const char* name, bool ok, double secs) {
  std::printf("criterion %d (%s): %s (%.1f s)\n", index, name,
              ok ? "PASS" : "FAIL", secs);
  if (!ok) ++g_failures;
}

template <typename F>
void run(int index, const char* name, F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = f();
  } catch (const std::exception& e) {
    std::printf("  exception: %s\n", e.what());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(index, name, ok, secs);
}

LaurentPoly slid(const LaurentPoly& p) {
  return p.is_zero() ? p : p.shifted(-p.min_key());
}

bool engines_agree(const PlanarDiagram& d) {
  const auto serial = bracket_state_sum_serial(d, d.crossings.size()).poly;
  return serial == bracket_state_sum(d, d.crossings.size()).poly &&
         serial == bracket_skein(d).poly;
}

// criterion 1
bool engine_equivalence() {
  for (const auto& d : corpus::all_named())
    if (!engines_agree(d)) return false;
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i)
    if (!engines_agree(corpus::random_diagram(rng, 10))) return false;
  return true;
}

// criterion 2
bool birman_agreement() {
  std::mt19937 rng(22);
  for (int i = 0; i < 500; ++i) {
    const auto w = corpus::random_3braid(rng, 10);
    if (birman_jones(w) != jones(closure(w))) return false;
  }
  const auto forms = enumerate_baldwin_qa_forms(14);
  if (forms.empty()) return false;
  for (const auto& nf : forms) {
    const auto w = expand_normal_form(nf);
    if (birman_jones(w) != jones(closure(w))) return false;
  }
  return true;
}

// criterion 3
bool torus_reductions() {
  auto closure_of = [](std::vector<int> letters) {
    BraidWord w;
    w.strands = 3;
    w.letters = std::move(letters);
    return jones(closure(w));
  };
  const std::vector<int> h = {1, 2, 1, 2, 1, 2};
  // reversing one component shifts V by a power of t, so the link-level
  // identities are compared with support slid to zero
  for (int p = 1; p <= 8; ++p) {
    auto l = h;
    l.insert(l.end(), static_cast<std::size_t>(p), 1);
    l.push_back(-2);
    if (slid(closure_of(l)) != slid(torus_2n_jones(p + 4))) return false;
    l.push_back(-2);
    if (slid(closure_of(l)) != slid(torus_2n_jones(p + 2) * torus_2n_jones(2)))
      return false;
  }
  for (int p1 = 1; p1 <= 6; ++p1) {
    for (int p2 = 1; p2 <= 6; ++p2) {
      auto l = h;
      l.insert(l.end(), static_cast<std::size_t>(p1), 1);
      l.push_back(-2);
      l.insert(l.end(), static_cast<std::size_t>(p2), 1);
      l.push_back(-2);
      if (slid(closure_of(l)) !=
          slid(torus_2n_jones(p1 + 2) * torus_2n_jones(p2 + 2)))
        return false;
    }
  }
  return true;
}

// criterion 4
bool lemma_suite() {
  for (long long alpha = 2; alpha <= 200; ++alpha) {
    for (long long beta = 1; beta < alpha; ++beta) {
      if (std::gcd(alpha, beta) != 1) continue;
      const auto cf = continued_fraction(beta, alpha);
      const auto t = t_sequence(cf);
      if (t.size() != cf.terms.size() + 1) return false;
      if (t.back() != alpha) return false;
      if (t[t.size() - 2] != beta) return false;
      long long sum = 0;
      for (auto a : cf.terms) sum += a;
      if (alpha < sum) return false;
      for (std::size_t i = 1; i < t.size(); ++i)
        if (boost::multiprecision::gcd(t[i], t[i - 1]) != 1) return false;
    }
  }
  return true;
}

// criterion 5
bool montesinos_coherence() {
  auto make = [](long long e, std::vector<std::pair<long long, long long>> t) {
    MontesinosData m;
    m.e = e;
    m.tangles = std::move(t);
    return m;
  };
  std::vector<MontesinosData> cases = {
      make(0, {{2, 1}, {2, 1}}),                  // det 4
      make(1, {{2, 1}, {2, 1}}),                  // det 0
      make(-1, {{2, 1}, {3, 1}, {3, 1}}),         // det 39
      make(0, {{2, 1}}),
      make(0, {{5, 3}}),
      make(-2, {{3, 2}, {5, 3}, {7, 4}}),
      make(2, {{2, 1}, {3, 1}, {7, 2}}),
      make(0, {{2, 1}, {3, 1}, {7, 6}}),
  };
  if (determinant_formula(cases[0]) != 4) return false;
  if (determinant_formula(cases[1]) != 0) return false;
  if (determinant_formula(cases[2]) != 39) return false;
  // M(0; 2/1) closes to the unknot (the formula gives det 1) and
  // M(-1; 2/1) to a trefoil, matched up to mirror and orientation
  if (determinant_formula(make(0, {{2, 1}})) != 1) return false;
  if (jones(auto_orient(to_diagram(make(0, {{2, 1}})))) !=
      LaurentPoly::one(VarTag::T))
    return false;
  {
    const auto v = jones(auto_orient(to_diagram(make(-1, {{2, 1}}))));
    const auto t = torus_2n_jones(3);
    if (slid(v) != slid(t) && slid(v) != slid(t.mirrored())) return false;
  }
  std::mt19937 rng(55);
  std::uniform_int_distribution<long long> alpha(2, 9), ee(-3, 3);
  std::uniform_int_distribution<int> rr(1, 3);
  while (cases.size() < 60) {
    MontesinosData m;
    m.e = ee(rng);
    const int r = rr(rng);
    for (int j = 0; j < r; ++j) {
      const long long a = alpha(rng);
      std::uniform_int_distribution<long long> bd(1, a - 1);
      long long b = bd(rng);
      while (std::gcd(a, b) != 1) b = bd(rng);
      m.tangles.emplace_back(a, b);
    }
    cases.push_back(m);
  }
  int checked = 0;
  for (const auto& m : cases) {
    const auto d = to_diagram(m);
    if (d.crossings.size() > 16) continue;
    if (determinant_formula(m) != determinant(d)) return false;
    ++checked;
  }
  return checked >= 50;
}

// criterion 6
bool twist_suite() {
  std::mt19937 rng(66);
  // bracket coherence on arbitrary diagrams; the stated determinant
  // identity needs the crossing to certify (determinants additive), which
  // is exactly the theorem's quasi-alternating hypothesis
  int det_checked = 0;
  for (int iter = 0; iter < 25; ++iter) {
    const auto d = corpus::random_diagram(rng, 7);
    for (std::size_t i = 0; i < d.crossings.size(); ++i) {
      if (crossing_sign(auto_orient(d), i) != 1) continue;
      const auto b0 = bracket(smooth(d, i, SmoothKind::zero));
      const auto binf = bracket(smooth(d, i, SmoothKind::infinity));
      const auto det_l = determinant(d);
      const auto det_0 = determinant(smooth(d, i, SmoothKind::zero));
      const auto det_inf = determinant(smooth(d, i, SmoothKind::infinity));
      const bool certifies = det_0 >= 1 && det_inf >= 1 && det_l == det_0 + det_inf;
      for (int n = 1; n <= 5; ++n) {
        for (auto dir : {TwistDirection::vertical, TwistDirection::horizontal}) {
          const TwistStep step{dir, n};
          const auto tw = twist_diagram(d, i, step);
          if (bracket(tw) != twist_bracket(b0, binf, step)) return false;
          if (dir == TwistDirection::vertical && certifies) {
            if (determinant(tw) != det_l + BigInt(n - 1) * det_inf) return false;
            ++det_checked;
          }
        }
      }
    }
  }
  if (det_checked < 50) return false;
  // gap-free preservation over the certified-QA gap-free corpus
  auto eligible = [](const PlanarDiagram& d) {
    const auto rep = gap_report(jones(auto_orient(d)));
    return rep.gap_positions.empty() && rep.strictly_alternating &&
           qa_search(d).certificate != nullptr;
  };
  auto family_gap_free = [](const PlanarDiagram& d, std::size_t i,
                            TwistDirection dir) {
    for (int n = 1; n <= 5; ++n) {
      const auto tw = twist_diagram(d, i, {dir, n});
      const auto rep = gap_report(jones(auto_orient(tw)));
      if (!rep.gap_positions.empty() || !rep.strictly_alternating) return false;
    }
    return true;
  };
  int vertical_checked = 0, horizontal_checked = 0;
  for (const char* ws : {"1 -2 1 -2", "1 1 1 -2 1 -2", "1 1 -2 1 1 -2 -2"}) {
    const auto d = corpus::from_word(ws);
    if (!eligible(d)) return false;
    for (std::size_t i = 0; i < d.crossings.size(); ++i) {
      PlanarDiagram base = d;
      std::size_t bi = i;
      if (crossing_sign(auto_orient(base), bi) != 1) continue;
      // vertical twisting extends the crossing in place
      if (!family_gap_free(base, bi, TwistDirection::vertical)) return false;
      ++vertical_checked;
      // the horizontal family of X extends the crossing switch, so the
      // certified gap-free base must be the switched link: twist once
      // horizontally (the switch), mirror to restore a positive crossing,
      // then the n >= 1 horizontal family of that diagram has mirror(d)
      // as its n = 1 member
      const auto switched = mirror(twist_diagram(base, bi,
                                                 {TwistDirection::horizontal, 1}));
      const std::size_t si = switched.crossings.size() - 1;
      if (crossing_sign(auto_orient(switched), si) != 1) continue;
      if (!family_gap_free(switched, si, TwistDirection::horizontal)) return false;
      ++horizontal_checked;
    }
  }
  return vertical_checked >= 8 && horizontal_checked >= 8;
}

// criterion 7
bool fallback_scan() {
  const auto rows = builtin_fallback_table();
  if (rows.size() < 1000) return false;
  const auto rep = scan_table(rows);
  if (rep.exit_code != 0 || rep.n_candidates != 0 || rep.n_errors != 0)
    return false;
  for (const auto& r : rep.rows) {
    const bool gapped = !r.gap_free || !r.strictly_alternating;
    if (gapped && r.verdict != Verdict::out_of_scope) return false;
  }
  return true;
}

// criterion 8
bool certificate_validation() {
  std::vector<PlanarDiagram> targets = {corpus::hopf(), corpus::trefoil(),
                                        corpus::figure_eight()};
  for (const auto& d : corpus::all_named()) {
    const auto r = reduce_kinks(d);
    if (!r.crossings.empty() && is_alternating(r) && is_connected(r))
      targets.push_back(d);
  }
  for (const auto& d : targets) {
    const auto res = qa_search(d);
    if (!res.certificate) return false;
    try {
      validate_certificate(*res.certificate);
    } catch (const std::logic_error&) {
      return false;
    }
    if (res.certificate->det != determinant(d)) return false;
  }
  return true;
}

// criterion 9
bool laurent_suite() {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> nterms(0, 8), coeff(-9, 9);
  std::uniform_int_distribution<long long> key(-12, 12);
  auto random_poly = [&] {
    LaurentPoly p(VarTag::T);
    const int n = nterms(rng);
    for (int i = 0; i < n; ++i)
      p += LaurentPoly::monomial(VarTag::T, coeff(rng), key(rng));
    return p;
  };
  for (int iter = 0; iter < 300; ++iter) {
    const auto p = random_poly(), q = random_poly(), r = random_poly();
    if (p + q != q + p) return false;
    if (p * q != q * p) return false;
    if ((p * q) * r != p * (q * r)) return false;
    if (p * (q + r) != p * q + p * r) return false;
    if (!(p + (-p)).is_zero()) return false;
  }
  // cancellation-freeness of products of sign-coherent alternating polynomials
  std::uniform_int_distribution<int> len(1, 6), mag(1, 9);
  std::uniform_int_distribution<long long> shift(-5, 5);
  auto random_alternating = [&] {
    LaurentPoly p(VarTag::T);
    const int n = len(rng);
    const long long s = shift(rng);
    for (int i = 0; i < n; ++i) {
      const long long e = s + i;
      p += LaurentPoly::monomial(VarTag::T, (e % 2 == 0 ? 1 : -1) * mag(rng),
                                 2 * e);
    }
    return p;
  };
  for (int iter = 0; iter < 1000; ++iter) {
    const auto rep = gap_report(random_alternating() * random_alternating());
    if (!rep.gap_positions.empty() || !rep.strictly_alternating) return false;
  }
  const Gaussian i01{0, 1};
  for (int iter = 0; iter < 300; ++iter) {
    const auto p = random_poly(), q = random_poly();
    if (eval_gaussian(p + q, i01) !=
        gaussian_add(eval_gaussian(p, i01), eval_gaussian(q, i01)))
      return false;
    if (eval_gaussian(p * q, i01) !=
        gaussian_mul(eval_gaussian(p, i01), eval_gaussian(q, i01)))
      return false;
  }
  return true;
}

}  // namespace

int main() {
  full_twist_check();

  const auto timed = [](auto f, double limit) {
    return [f, limit]() {
      const auto t0 = std::chrono::steady_clock::now();
      const bool ok = f();
      const double secs =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
              .count();
      return ok && secs < limit;
    };
  };

  run(1, "engine equivalence", timed(engine_equivalence, 30.0));
  run(2, "trace formula agreement", timed(birman_agreement, 60.0));
  run(3, "torus reduction identities", torus_reductions);
  run(4, "continued fraction lemma suite", timed(lemma_suite, 5.0));
  run(5, "montesinos determinant coherence", montesinos_coherence);
  run(6, "twisting suite", twist_suite);
  run(7, "fallback table scan", timed(fallback_scan, 300.0));
  run(8, "certificate validation", certificate_validation);
  run(9, "laurent property suite", laurent_suite);

  if (g_failures) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
