#include "pencillab/arrangement.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pencillab/milnor.hpp"

namespace pencillab::arrangement {

Line Line::normalized(const Rational& a, const Rational& b, const Rational& c) {
  if (a == 0 && b == 0) throw InputError("degenerate line: a and b both zero");
  const Rational s = a != 0 ? a : b;
  return Line{a / s, b / s, c / s};
}

std::string to_string(const Point& p) {
  return "(" + pencillab::to_string(p.x) + "," + pencillab::to_string(p.y) + ")";
}

Arrangement make_arrangement(const std::vector<std::array<Rational, 3>>& coefficients) {
  if (coefficients.size() < 2) throw InputError("an arrangement needs at least two lines");
  Arrangement arr;
  arr.f = BivariatePoly(1);
  for (const auto& [a, b, c] : coefficients) {
    arr.lines.push_back(Line::normalized(a, b, c));
    arr.forms.push_back(BivariatePoly::affine(a, b, c));
    arr.f = arr.f * arr.forms.back();
  }
  arr.d = static_cast<int>(coefficients.size()) - 1;
  return arr;
}

Arrangement canonical_arrangement(int d) {
  if (d < 1) throw InputError("canonical arrangement needs d >= 1");
  std::vector<std::array<Rational, 3>> coefficients;
  for (int p = 0; p <= d; ++p) coefficients.push_back({Rational(d - p), Rational(p), Rational(-p * (d - p))});
  return make_arrangement(coefficients);
}

namespace {

bool parallel(const Line& u, const Line& v) { return u.a * v.b - u.b * v.a == 0; }

Point intersect(const Line& u, const Line& v) {
  const Rational det = u.a * v.b - u.b * v.a;
  return Point{(u.b * v.c - u.c * v.b) / det, (u.c * v.a - u.a * v.c) / det};
}

bool on_line(const Line& l, const Point& p) { return l.a * p.x + l.b * p.y + l.c == 0; }

}  // namespace

Validation validate(const Arrangement& arr, bool check_center_values) {
  Validation out;
  const int n = static_cast<int>(arr.lines.size());
  bool clean_pairs = true;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (arr.lines[i] == arr.lines[j]) {
        out.violations.push_back("duplicate lines " + std::to_string(i) + " and " + std::to_string(j));
        clean_pairs = false;
      } else if (parallel(arr.lines[i], arr.lines[j])) {
        out.violations.push_back("parallel pair: lines " + std::to_string(i) + " and " + std::to_string(j));
        clean_pairs = false;
      }
    }
  std::set<std::pair<Rational, Rational>> reported;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (parallel(arr.lines[i], arr.lines[j])) continue;
      const Point p = intersect(arr.lines[i], arr.lines[j]);
      for (int k = j + 1; k < n; ++k) {
        if (!on_line(arr.lines[k], p)) continue;
        if (reported.insert({p.x, p.y}).second) out.violations.push_back("triple point at " + to_string(p));
        break;
      }
    }
  if (!out.ok() || !clean_pairs || !check_center_values || arr.d < 2) return out;

  const milnor::SpectralData sd = milnor::multiplication_matrix(milnor::milnor_algebra(arr.f));
  UnivariatePoly centers = sd.squarefree_part;
  if (centers.coefficient(0) == 0) centers = divmod(centers, UnivariatePoly::t()).first;
  const int faces = arr.d * (arr.d - 1) / 2;
  if (centers.degree() != Degree(faces)) {
    out.warnings.push_back("center critical values are not distinct: " +
                           std::to_string(centers.degree().is_minus_infinity() ? 0 : centers.degree().value()) +
                           " distinct nonzero values for " + std::to_string(faces) + " bounded faces");
  }
  return out;
}

namespace {

struct HalfEdge {
  int from = 0;
  int to = 0;
  int line = 0;
  int twin = 0;
  int next = -1;
  int face = -1;
};

// Upper half-plane (including the positive x axis) first, then by cross product.
bool angle_less(const Point& u, const Point& v) {
  auto half = [](const Point& p) { return (p.y > 0 || (p.y == 0 && p.x > 0)) ? 0 : 1; };
  const int hu = half(u);
  const int hv = half(v);
  if (hu != hv) return hu < hv;
  return u.x * v.y - u.y * v.x > 0;
}

Rational twice_area(const std::vector<int>& cycle, const std::vector<Vertex>& vertices) {
  Rational s = 0;
  for (std::size_t k = 0; k < cycle.size(); ++k) {
    const Point& p = vertices[cycle[k]].p;
    const Point& q = vertices[cycle[(k + 1) % cycle.size()]].p;
    s += p.x * q.y - p.y * q.x;
  }
  return s;
}

}  // namespace

Combinatorics build_combinatorics(const Arrangement& arr) {
  const Validation v = validate(arr, false);
  if (!v.ok()) throw InputError("arrangement not in general position: " + v.violations.front());

  Combinatorics comb;
  comb.d = arr.d;
  const int n = static_cast<int>(arr.lines.size());

  std::map<std::pair<int, int>, int> vertex_of_pair;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      vertex_of_pair[{i, j}] = static_cast<int>(comb.vertices.size());
      comb.vertices.push_back(Vertex{intersect(arr.lines[i], arr.lines[j]), i, j});
    }

  // Saddle values are zero by construction; assert it rather than assume.
  for (const auto& vert : comb.vertices)
    if (arr.f.evaluate(vert.p.x, vert.p.y) != 0) throw InvariantViolation("vertex off the zero fiber");

  comb.per_line_order.resize(n);
  for (int i = 0; i < n; ++i) {
    auto& order = comb.per_line_order[i];
    for (int j = 0; j < n; ++j)
      if (j != i) order.push_back(vertex_of_pair[{std::min(i, j), std::max(i, j)}]);
    const bool vertical = arr.lines[i].is_vertical();
    std::sort(order.begin(), order.end(), [&](int p, int q) {
      const Point& a = comb.vertices[p].p;
      const Point& b = comb.vertices[q].p;
      return vertical ? a.y < b.y : a.x < b.x;
    });
  }

  std::vector<HalfEdge> half;
  std::vector<std::vector<int>> outgoing(comb.vertices.size());
  for (int i = 0; i < n; ++i) {
    const auto& order = comb.per_line_order[i];
    for (std::size_t k = 0; k + 1 < order.size(); ++k) {
      const int e = static_cast<int>(half.size());
      half.push_back(HalfEdge{order[k], order[k + 1], i, e + 1});
      half.push_back(HalfEdge{order[k + 1], order[k], i, e});
      outgoing[order[k]].push_back(e);
      outgoing[order[k + 1]].push_back(e + 1);
    }
  }

  auto direction = [&](int e) {
    const Point& p = comb.vertices[half[e].from].p;
    const Point& q = comb.vertices[half[e].to].p;
    return Point{q.x - p.x, q.y - p.y};
  };
  for (auto& out : outgoing)
    std::sort(out.begin(), out.end(), [&](int e, int f) { return angle_less(direction(e), direction(f)); });

  // Faces lie to the left: after arriving at v, leave along the outgoing
  // edge just clockwise of the way back.
  for (std::size_t e = 0; e < half.size(); ++e) {
    const int back = half[e].twin;
    const auto& out = outgoing[half[e].to];
    const auto pos = std::find(out.begin(), out.end(), back) - out.begin();
    half[e].next = out[(pos + out.size() - 1) % out.size()];
  }

  for (std::size_t start = 0; start < half.size(); ++start) {
    if (half[start].face != -1) continue;
    std::vector<int> walk;
    int e = static_cast<int>(start);
    const int marker = -2 - static_cast<int>(start);
    while (half[e].face == -1) {
      half[e].face = marker;
      walk.push_back(e);
      e = half[e].next;
    }
    std::vector<int> cycle;
    for (int h : walk) cycle.push_back(half[h].from);
    if (twice_area(cycle, comb.vertices) <= 0) continue;
    Face face;
    face.vertices = cycle;
    for (int h : walk) face.edges.push_back(Edge{half[h].line, half[h].from, half[h].to});
    const int id = static_cast<int>(comb.faces.size());
    for (int h : walk) half[h].face = id;
    comb.faces.push_back(std::move(face));
  }
  if (static_cast<int>(comb.faces.size()) != arr.d * (arr.d - 1) / 2) throw InvariantViolation("unbounded-face leak");

  for (auto& face : comb.faces) {
    if (face.vertices.size() < 3) throw InvariantViolation("degenerate bounded face");
    const Point& p0 = comb.vertices[face.vertices[0]].p;
    const Point& p1 = comb.vertices[face.vertices[1]].p;
    const Point& p2 = comb.vertices[face.vertices[2]].p;
    face.sample = Point{(p0.x + p1.x + p2.x) / 3, (p0.y + p1.y + p2.y) / 3};
    face.sign = sign(arr.f.evaluate(face.sample.x, face.sample.y));
    if (face.sign == 0) throw InvariantViolation("f vanishes inside a bounded face");
  }

  const std::size_t nf = comb.faces.size();
  comb.incidence_v = IntegerMatrix(nf, comb.vertices.size());
  comb.incidence_e = IntegerMatrix(nf, nf);
  for (std::size_t i = 0; i < nf; ++i)
    for (int vert : comb.faces[i].vertices) comb.incidence_v(i, vert) += 1;
  for (std::size_t e = 0; e < half.size(); e += 2) {
    const int a = half[e].face;
    const int b = half[e + 1].face;
    if (a >= 0 && b >= 0 && a != b) {
      comb.incidence_e(a, b) += 1;
      comb.incidence_e(b, a) += 1;
    }
  }
  return comb;
}

Counts counts(const Combinatorics& comb) {
  Counts c;
  c.a2 = static_cast<int>(comb.vertices.size());
  for (const auto& face : comb.faces) (face.sign < 0 ? c.a1 : c.a3) += 1;
  return c;
}

Counts canonical_counts(int d) {
  Counts c;
  c.a2 = d * (d + 1) / 2;
  for (int i = 2; i <= d; ++i) c.a1 += i / 2;  // ceil((i-1)/2) = floor(i/2)
  c.a3 = d * (d - 1) / 2 - c.a1;
  return c;
}

}  // namespace pencillab::arrangement
