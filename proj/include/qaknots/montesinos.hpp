#ifndef QAKNOTS_MONTESINOS_HPP
#define QAKNOTS_MONTESINOS_HPP

#include "qaknots/diagram.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace qak {

using BigRat = boost::multiprecision::cpp_rational;

/// Positive continued fraction [a_1,...,a_n] in ascending form:
/// a_n + 1/(a_{n-1} + ... + 1/a_1).
struct ContinuedFraction {
  std::vector<long long> terms;
};

/// Positive continued fraction of alpha/beta for coprime alpha > beta >= 1,
/// canonicalized so that a_1 >= 2 whenever the fraction has length > 1.
ContinuedFraction continued_fraction(long long beta, long long alpha);

/// Kauffman-Lopez determinant sequence T(0)=1, T(1)=a_1,
/// T(m)=a_m T(m-1) + T(m-2); returns T(0..n).
std::vector<BigInt> t_sequence(const ContinuedFraction& cf);

/// Montesinos link data M(e; (a_1,b_1), ..., (a_r,b_r)).
struct MontesinosData {
  long long e = 0;
  std::vector<std::pair<long long, long long>> tangles;  // (alpha_i >= 2, beta_i)

  std::size_t r() const { return tangles.size(); }
  /// Classifying rational e_0 = e - sum beta_j/alpha_j.
  BigRat e0() const;

  bool operator==(const MontesinosData& o) const = default;
};

void validate(const MontesinosData& m);

/// Unique standard form: every beta_i reduced into (0, alpha_i), e adjusted
/// so that e_0 is unchanged. Idempotent.
MontesinosData standardize(const MontesinosData& m);

bool is_standard(const MontesinosData& m);

/// Classification-data equivalence (cyclic rotation / reversal of the
/// fraction list mod 1, plus equal e_0). Both arguments must satisfy the
/// classification theorem's hypothesis r >= 3 and sum 1/alpha_j <= r-2.
bool equivalent(const MontesinosData& m1, const MontesinosData& m2);

/// |prod(alpha_j) * (-e + sum beta_j/alpha_j)| in exact rational arithmetic.
BigInt determinant_formula(const MontesinosData& m);

enum class QaReason { e_nonpositive, e_at_least_r, e_one_clause, e_r_minus_one_clause, none };

struct QaVerdict {
  bool qa = false;
  QaReason reason = QaReason::none;
};

/// Quasi-alternating criterion for standard-form Montesinos links.
QaVerdict montesinos_qa(const MontesinosData& m);

const char* qa_reason_text(QaReason r);

/// Planar diagram with e half-twists and each tangle expanded through its
/// continued fraction into alternating twist regions.
PlanarDiagram to_diagram(const MontesinosData& m);

/// "M(e; a1/b1, a2/b2, ...)" with exact round-trip.
MontesinosData montesinos_from_text(const std::string& text);
std::string montesinos_to_text(const MontesinosData& m);

}  // namespace qak

#endif
