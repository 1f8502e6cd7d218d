#ifndef QAKNOTS_DIAGRAM_HPP
#define QAKNOTS_DIAGRAM_HPP

#include "qaknots/laurent.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace qak {

/// One crossing of a planar diagram: four arc labels listed counterclockwise
/// starting at the incoming under-strand. The under-strand occupies slots
/// 0 and 2, the over-strand slots 1 and 3.
///
/// Worked example (right trefoil as the closure of the 2-braid word
/// "1 1 1", all strands oriented downward):
///   X(1,3,4,2)  X(3,5,6,4)  X(5,1,2,6)
/// Crossing X(1,3,4,2): the under-strand enters on arc 1 and leaves on
/// arc 4; the over-strand enters on arc 2 (slot 3) and leaves on arc 3.
/// A crossing whose over-strand enters at slot 3 is positive.
struct Crossing {
  std::array<int, 4> arcs{};
  int& operator[](int i) { return arcs[static_cast<std::size_t>(i)]; }
  int operator[](int i) const { return arcs[static_cast<std::size_t>(i)]; }
  bool operator==(const Crossing& o) const { return arcs == o.arcs; }
};

/// Orientation data for one crossing: which under slot (0 or 2) and which
/// over slot (1 or 3) carry the incoming strand direction.
struct CrossingOrientation {
  int under_in = 0;
  int over_in = 3;
  bool operator==(const CrossingOrientation& o) const {
    return under_in == o.under_in && over_in == o.over_in;
  }
};

enum class SmoothKind { zero, infinity };
enum class BracketEngine { state_sum, skein_memo };

struct PlanarDiagram {
  std::vector<Crossing> crossings;
  int n_free_loops = 0;
  std::optional<std::vector<CrossingOrientation>> orientation;

  std::size_t crossing_count() const { return crossings.size(); }
  bool operator==(const PlanarDiagram& o) const {
    return crossings == o.crossings && n_free_loops == o.n_free_loops &&
           orientation == o.orientation;
  }
};

struct BracketResult {
  LaurentPoly poly;  // tag A
  BracketEngine engine;
};

/// Throws std::invalid_argument if arcs do not pair up or the orientation
/// block is inconsistent.
void validate(const PlanarDiagram& d);

/// Number of link components (strand cycles plus free loops).
int component_count(const PlanarDiagram& d);

/// Replace crossing `index` by its zero (A) or infinity (A^-1) smoothing,
/// merging arcs and collecting any closed circle into n_free_loops.
/// The result is unoriented.
PlanarDiagram smooth(const PlanarDiagram& d, std::size_t index, SmoothKind kind);

inline constexpr std::size_t kDefaultStateSumCap = 20;

/// Full 2^c state-sum bracket. Serial reference implementation.
BracketResult bracket_state_sum_serial(const PlanarDiagram& d,
                                       std::size_t crossing_cap = kDefaultStateSumCap);

/// OpenMP-parallel state sum over disjoint state ranges; bit-identical to
/// the serial reference.
BracketResult bracket_state_sum(const PlanarDiagram& d,
                                std::size_t crossing_cap = kDefaultStateSumCap);

/// Memoized skein recursion on the first remaining crossing.
BracketResult bracket_skein(const PlanarDiagram& d);

/// Bracket via whichever engine suits the crossing count.
LaurentPoly bracket(const PlanarDiagram& d);

/// Sign of crossing `i` (+1 when the over-strand enters the slot just
/// before the incoming under slot in counterclockwise order).
int crossing_sign(const PlanarDiagram& d, std::size_t i);

/// Signed crossing count. Requires orientation.
int writhe(const PlanarDiagram& d);

/// Copy of d with a coherent orientation assigned (each component gets an
/// arbitrary direction); existing orientation is kept.
PlanarDiagram auto_orient(const PlanarDiagram& d);

/// V_L(t) = ((-A)^(-3w) <D>) at t^(1/2) = A^-2. Requires orientation.
LaurentPoly jones(const PlanarDiagram& d);

/// |V_L(-1)| evaluated exactly at t^(1/2) = i. Orientation is auto-assigned
/// when absent; the value does not depend on that choice.
BigInt determinant(const PlanarDiagram& d);

bool is_alternating(const PlanarDiagram& d);
bool is_connected(const PlanarDiagram& d);

/// Remove Reidemeister-I kinks until none remain. Result is unoriented.
PlanarDiagram reduce_kinks(const PlanarDiagram& d);

/// Mirror image: every crossing switched. Result is unoriented.
PlanarDiagram mirror(const PlanarDiagram& d);

PlanarDiagram disjoint_union(const PlanarDiagram& a, const PlanarDiagram& b);

/// Unknotted circle with no crossings.
PlanarDiagram unknot_diagram();

/// Arc-relabeling canonical encoding, usable as a memoization key.
std::string canonical_key(const PlanarDiagram& d);

/// PD text format:
///   X(a,b,c,d)   one line per crossing
///   O(k)         one line per free loop
///   D(i,u,o)     optional orientation: crossing i, under-in slot u, over-in slot o
/// '#' starts a comment. Printer and parser round-trip exactly.
std::string pd_to_text(const PlanarDiagram& d);
PlanarDiagram pd_from_text(const std::string& text);

std::string pd_to_json(const PlanarDiagram& d);
PlanarDiagram pd_from_json(const std::string& text);

}  // namespace qak

#endif
