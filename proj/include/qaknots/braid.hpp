#ifndef QAKNOTS_BRAID_HPP
#define QAKNOTS_BRAID_HPP

#include "qaknots/diagram.hpp"
#include "qaknots/laurent.hpp"

#include <array>
#include <string>
#include <vector>

namespace qak {

/// Braid word: letter k stands for sigma_|k| with the sign of k as the
/// exponent sign. Letters satisfy 1 <= |k| <= strands-1.
struct BraidWord {
  int strands = 2;
  std::vector<int> letters;

  int exponent_sum() const {
    int e = 0;
    for (int k : letters) e += k > 0 ? 1 : -1;
    return e;
  }
};

void validate(const BraidWord& w);

/// Whitespace-separated signed integers, e.g. "1 1 1 2".
BraidWord braid_from_text(const std::string& text, int strands = 0);
std::string braid_to_text(const BraidWord& w);

/// 2x2 matrix of integer Laurent polynomials in t.
struct BurauMatrix {
  std::array<LaurentPoly, 4> m;  // row-major
  LaurentPoly& at(int r, int c) { return m[static_cast<std::size_t>(2 * r + c)]; }
  const LaurentPoly& at(int r, int c) const { return m[static_cast<std::size_t>(2 * r + c)]; }
  LaurentPoly trace() const { return at(0, 0) + at(1, 1); }
  bool operator==(const BurauMatrix& o) const { return m == o.m; }
};

BurauMatrix burau_identity();
BurauMatrix burau_mul(const BurauMatrix& a, const BurauMatrix& b);

/// Reduced Burau image of a 3-braid word:
/// psi(s1) = [[-t,1],[0,1]], psi(s2) = [[1,0],[t,-t]].
BurauMatrix burau(const BraidWord& w);

/// Build-time self check: psi((s1 s2)^3) == t^3 * I. Throws on mismatch.
void full_twist_check();

/// Jones polynomial of the closure of a 3-braid via the Birman trace
/// formula V = (-sqrt t)^e (t + t^-1 + tr psi(w)).
LaurentPoly birman_jones(const BraidWord& w);

/// Closure of a braid word as an oriented planar diagram, all strands
/// oriented downward. Positive letters become positive crossings.
PlanarDiagram closure(const BraidWord& w);

/// Murasugi/Baldwin normal forms for 3-braids, h = (s1 s2)^3.
struct BaldwinNormalForm {
  enum class Variant { type1, type2, type3 };
  Variant variant = Variant::type1;
  int n = 0;                                  // power of h
  std::vector<std::pair<int, int>> pairs;     // type1: (p_i >= 1, q_i >= 1)
  int m = 0;                                  // type2: any; type3: in {-1,-2,-3}
};

void validate(const BaldwinNormalForm& nf);

/// Literal letter sequence; h expands to "1 2 1 2 1 2".
BraidWord expand_normal_form(const BaldwinNormalForm& nf);

/// Baldwin's classification of quasi-alternating closed 3-braids.
bool baldwin_qa(const BaldwinNormalForm& nf);

/// "type1 n=1 pairs=2:3,1:2" / "type2 n=1 m=-2" / "type3 n=0 m=-3"
BaldwinNormalForm normal_form_from_text(const std::string& text);
std::string normal_form_to_text(const BaldwinNormalForm& nf);

/// Jones polynomial of the (2,n) torus link, computed through the diagram
/// engine from the closure of sigma_1^n. Requires n >= 2.
LaurentPoly torus_2n_jones(int n);

}  // namespace qak

#endif
