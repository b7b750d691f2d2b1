#ifndef PENCILLAB_LEFSCHETZ_HPP
#define PENCILLAB_LEFSCHETZ_HPP

#include <string>
#include <vector>

#include "pencillab/arrangement.hpp"
#include "pencillab/linear.hpp"

namespace pencillab::lefschetz {

enum class CycleKind { CenterMin, Saddle, CenterMax };

struct BasisLabel {
  CycleKind kind;
  int index;  // face index for centers, vertex index for saddles
};

std::string to_string(const BasisLabel& label);

using Cycle = std::vector<Integer>;

/// Vanishing cycles ordered (all f < 0 faces, all vertices, all f > 0
/// faces) with the intersection form built from incidences.
struct CycleLattice {
  std::vector<BasisLabel> labels;
  IntegerMatrix form;
  int dim = 0;
  int d = 0;
  int a1 = 0;
  int a2 = 0;
  int a3 = 0;
  std::vector<int> face_position;    // face index -> basis position
  std::vector<int> vertex_position;  // vertex index -> basis position
  bool flipped = false;              // center-max/center-min block negated by the audit

  Integer pairing(const Cycle& u, const Cycle& v) const;
  Cycle unit(int position) const;
  std::vector<int> saddle_positions() const;
  std::vector<int> center_positions() const;
};

/// Form with positive blocks <min, saddle> = v, <saddle, max> = w,
/// <max, min> = e. The result must pass an audit (radical of rank d and a
/// coherent sign relation among the line cycles); the max/min block is
/// flipped once if needed. Throws InvariantViolation("orientation audit
/// failed") otherwise.
CycleLattice intersection_form(const arrangement::Combinatorics& comb);

struct MonodromyOperator {
  std::string label;  // "h0" or "center <i>"
  IntegerMatrix matrix;
  IntegerMatrix inverse;
};

/// delta -> delta - sum_j <delta, s_j> s_j over all saddle cycles s_j.
MonodromyOperator monodromy_h0(const CycleLattice& lat);
/// delta -> delta - <delta, c> c for the center cycle at basis position.
MonodromyOperator monodromy_center(const CycleLattice& lat, int position);
/// h0 followed by one transvection per center, in basis order.
std::vector<MonodromyOperator> monodromy_generators(const CycleLattice& lat);

/// Primitive integer basis of the radical of the form.
std::vector<Cycle> radical_basis(const CycleLattice& lat);
std::size_t radical_rank(const CycleLattice& lat);

struct LineCycles {
  std::vector<Cycle> cycles;  // sign-adjusted, one per line
  std::vector<int> signs;     // epsilon_p, epsilon_0 = +1
};

/// Alternating sums sum_j (-1)^j s_j along each line (j = 1..d in
/// per-line order), with signs chosen so the sum over lines vanishes.
/// Throws InvariantViolation("no coherent signs") when impossible.
LineCycles line_cycles(const CycleLattice& lat, const arrangement::Combinatorics& comb);

/// delta^i = sum_j <delta_i, s_j> s_j for each bounded face, in face order.
std::vector<Cycle> face_cycles(const CycleLattice& lat, const arrangement::Combinatorics& comb);

/// Rank of the line cycles p = 1..d together with all face cycles.
std::size_t saddle_span_rank(const CycleLattice& lat, const arrangement::Combinatorics& comb);

struct OrbitResult {
  std::size_t rank_total = 0;
  std::size_t rank_mod_radical = 0;
  bool certificate = false;  // rank_mod_radical == dim - d
  std::vector<std::string> word_log;
};

/// Closure over Q of span{start} under every generator and its inverse.
OrbitResult orbit_span(const CycleLattice& lat, const Cycle& start);

Cycle act(const IntegerMatrix& m, const Cycle& v);

}  // namespace pencillab::lefschetz

#endif  // PENCILLAB_LEFSCHETZ_HPP
