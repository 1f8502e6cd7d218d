#ifndef QAKNOTS_TESTS_CORPUS_HPP
#define QAKNOTS_TESTS_CORPUS_HPP

#include <random>
#include <string>
#include <vector>

#include "qaknots/braid.hpp"
#include "qaknots/diagram.hpp"

namespace corpus {

inline qak::PlanarDiagram from_word(const std::string& w) {
  return qak::closure(qak::braid_from_text(w));
}

// Small named diagrams used across the suites.
inline qak::PlanarDiagram unknot() { return qak::unknot_diagram(); }
inline qak::PlanarDiagram kink() { return from_word("1"); }
inline qak::PlanarDiagram double_kink() { return from_word("1 1 2"); }
inline qak::PlanarDiagram hopf() { return from_word("1 1"); }
inline qak::PlanarDiagram trefoil() { return from_word("1 1 1"); }
inline qak::PlanarDiagram figure_eight() { return from_word("1 -2 1 -2"); }
inline qak::PlanarDiagram cinqfoil() { return from_word("1 1 1 1 1"); }
inline qak::PlanarDiagram knot_5_2() { return from_word("1 1 1 2 -1 2"); }
inline qak::PlanarDiagram knot_6_2() { return from_word("1 1 1 -2 1 -2"); }
inline qak::PlanarDiagram knot_7_4() { return from_word("1 1 -2 1 1 -2 -2"); }

inline std::vector<qak::PlanarDiagram> all_named() {
  return {unknot(),   kink(),     double_kink(), hopf(),     trefoil(),
          figure_eight(), cinqfoil(), knot_5_2(),    knot_6_2(), knot_7_4()};
}

inline qak::BraidWord random_3braid(std::mt19937& rng, int max_len) {
  std::uniform_int_distribution<int> len(1, max_len);
  std::uniform_int_distribution<int> pick(0, 3);
  static const int kLetters[4] = {1, -1, 2, -2};
  qak::BraidWord w;
  w.strands = 3;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) w.letters.push_back(kLetters[pick(rng)]);
  return w;
}

// Random diagram with at most max_crossings crossings, built as a braid
// closure so it is always planar-consistent.
inline qak::PlanarDiagram random_diagram(std::mt19937& rng, int max_crossings) {
  return qak::closure(random_3braid(rng, max_crossings));
}

}  // namespace corpus

#endif
