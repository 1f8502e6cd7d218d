#ifndef QAKNOTS_QUASIALT_HPP
#define QAKNOTS_QUASIALT_HPP

#include "qaknots/diagram.hpp"
#include "qaknots/laurent.hpp"

#include <memory>
#include <string>

namespace qak {

/// Witness tree for the recursive quasi-alternating definition: at every
/// branch node det(L) = det(L_0) + det(L_inf) with both child determinants
/// at least 1; leaves are the unknot or reduced alternating non-split
/// diagrams.
struct QACertificate {
  enum class Status { unknot, reduced_alternating_nonsplit, branch };
  PlanarDiagram diagram;
  Status status = Status::unknot;
  int crossing_index = -1;  // branch nodes only
  BigInt det = 1;
  std::unique_ptr<QACertificate> zero_child;
  std::unique_ptr<QACertificate> infinity_child;
};

struct QaSearchBudget {
  int max_depth = 12;
  long long max_nodes = 100000;
};

struct QaSearchResult {
  std::unique_ptr<QACertificate> certificate;  // null when inconclusive
  bool inconclusive = false;
  std::string note;  // budget exhaustion details
  long long nodes_visited = 0;
};

/// Depth-first certificate search over crossings in ascending index order,
/// memoizing diagrams already proven quasi-alternating. Never reports
/// "not QA": a failed search is inconclusive.
QaSearchResult qa_search(const PlanarDiagram& d, const QaSearchBudget& budget = {});

/// Re-checks every node of a certificate (determinant identities, leaf
/// statuses). Throws std::logic_error on the first violation.
void validate_certificate(const QACertificate& cert);

std::string certificate_to_json(const QACertificate& cert);

enum class TwistDirection { vertical, horizontal };

struct TwistStep {
  TwistDirection direction = TwistDirection::vertical;
  int n = 1;
};

/// Bracket of the diagram with a positive crossing replaced by n positive
/// half-twists, expressed through the smoothed brackets:
///   vertical:   A^n <L_0> + (sum_{i<n} (-1)^i A^(n-4i-2)) <L_inf>
///   horizontal: roles of <L_0> and <L_inf> swapped.
LaurentPoly twist_bracket(const LaurentPoly& b0, const LaurentPoly& binf,
                          const TwistStep& step);

/// Diagram-level twist: replaces crossing `index` (which must be positive;
/// pass allow_mirror to mirror the whole diagram first when it is not) by a
/// band of n half-twists of the given direction.
PlanarDiagram twist_diagram(const PlanarDiagram& d, std::size_t index,
                            const TwistStep& step, bool allow_mirror = false);

enum class Verdict { consistent, counterexample_candidate, out_of_scope };
enum class Flag { yes, no, unknown };

struct LinkMetadata {
  Flag prime = Flag::unknown;
  bool torus_2n = false;
  Flag qa = Flag::unknown;
};

struct ConjectureVerdict {
  Verdict verdict = Verdict::out_of_scope;
  bool gap_free = false;
  bool strictly_alternating = false;
  std::string note;
};

/// Checks a Jones polynomial against the no-gap conjecture for prime
/// quasi-alternating non-torus links. Refuses to flag a counterexample
/// unless both the prime and qa flags are affirmative.
ConjectureVerdict conjecture_check(const LaurentPoly& jones_poly,
                                   const LinkMetadata& meta);

/// det(L) >= breadth of V_L in integer t-degrees.
bool breadth_check(const LaurentPoly& jones_poly, const BigInt& det);

}  // namespace qak

#endif
