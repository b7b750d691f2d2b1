#ifndef PENCILLAB_ARRANGEMENT_HPP
#define PENCILLAB_ARRANGEMENT_HPP

#include <array>
#include <string>
#include <vector>

#include "pencillab/bivariate.hpp"
#include "pencillab/linear.hpp"

namespace pencillab::arrangement {

/// a*x + b*y + c = 0, scaled so that the first nonzero of (a, b) is 1.
struct Line {
  Rational a;
  Rational b;
  Rational c;

  static Line normalized(const Rational& a, const Rational& b, const Rational& c);
  bool is_vertical() const { return b == 0; }
  BivariatePoly form() const { return BivariatePoly::affine(a, b, c); }
  friend bool operator==(const Line&, const Line&) = default;
};

struct Point {
  Rational x;
  Rational y;
  friend bool operator==(const Point&, const Point&) = default;
};

std::string to_string(const Point& p);

struct Arrangement {
  std::vector<BivariatePoly> forms;  // affine forms exactly as given
  std::vector<Line> lines;
  int d = 0;                         // number of lines minus one
  BivariatePoly f;                   // product of `forms`
};

/// Throws InputError on fewer than two lines or a degenerate (a, b) = (0, 0).
Arrangement make_arrangement(const std::vector<std::array<Rational, 3>>& coefficients);

/// l_p = (d - p) x + p y - p (d - p), p = 0..d. Throws InputError for d < 1.
Arrangement canonical_arrangement(int d);

struct Validation {
  std::vector<std::string> violations;  // hard: duplicates, parallels, triple points
  std::vector<std::string> warnings;    // soft: coincident center values
  bool ok() const { return violations.empty(); }
};

/// Exact general-position checks. With check_center_values the Milnor
/// algebra of f is computed to test that the nonzero critical values are
/// distinct, one per bounded face; failure is only a warning.
Validation validate(const Arrangement& arr, bool check_center_values = true);

struct Vertex {
  Point p;
  int line_a = 0;  // line_a < line_b
  int line_b = 0;
};

/// Bounded segment of line `line` between two vertices.
struct Edge {
  int line = 0;
  int from = 0;
  int to = 0;
};

struct Face {
  std::vector<int> vertices;  // counterclockwise corner cycle
  std::vector<Edge> edges;    // edges[k] joins vertices[k] and vertices[k+1]
  Point sample;               // exact interior point
  int sign = 0;               // sign of f at `sample`
};

struct Combinatorics {
  std::vector<Vertex> vertices;
  std::vector<Face> faces;
  std::vector<std::vector<int>> per_line_order;  // ascending x, or y for vertical lines
  IntegerMatrix incidence_v;                     // faces x vertices
  IntegerMatrix incidence_e;                     // faces x faces, common edges
  int d = 0;
};

/// Planar subdivision by a doubly connected edge list over the bounded
/// segments. Throws InputError when validation reports hard violations and
/// InvariantViolation("unbounded-face leak") if the face count is wrong.
Combinatorics build_combinatorics(const Arrangement& arr);

struct Counts {
  int a1 = 0;  // faces with f < 0
  int a2 = 0;  // vertices
  int a3 = 0;  // faces with f > 0
  friend bool operator==(const Counts&, const Counts&) = default;
};

Counts counts(const Combinatorics& comb);

/// Closed forms for the canonical arrangement: a2 = d(d+1)/2,
/// a1 = sum_{i=2}^{d} ceil((i-1)/2), a3 = d(d-1)/2 - a1.
Counts canonical_counts(int d);

}  // namespace pencillab::arrangement

#endif  // PENCILLAB_ARRANGEMENT_HPP
