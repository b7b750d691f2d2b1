#include "pencillab/lefschetz.hpp"

#include <deque>
#include <optional>

namespace pencillab::lefschetz {

using arrangement::Combinatorics;

std::string to_string(const BasisLabel& label) {
  switch (label.kind) {
    case CycleKind::CenterMin:
      return "min:face" + std::to_string(label.index);
    case CycleKind::Saddle:
      return "saddle:vertex" + std::to_string(label.index);
    case CycleKind::CenterMax:
      return "max:face" + std::to_string(label.index);
  }
  return "?";
}

Integer CycleLattice::pairing(const Cycle& u, const Cycle& v) const {
  Integer s = 0;
  for (int i = 0; i < dim; ++i) {
    if (u[i] == 0) continue;
    for (int j = 0; j < dim; ++j)
      if (v[j] != 0 && form(i, j) != 0) s += u[i] * form(i, j) * v[j];
  }
  return s;
}

Cycle CycleLattice::unit(int position) const {
  Cycle c(dim, Integer(0));
  c[position] = 1;
  return c;
}

std::vector<int> CycleLattice::saddle_positions() const {
  std::vector<int> out;
  for (int i = 0; i < dim; ++i)
    if (labels[i].kind == CycleKind::Saddle) out.push_back(i);
  return out;
}

std::vector<int> CycleLattice::center_positions() const {
  std::vector<int> out;
  for (int i = 0; i < dim; ++i)
    if (labels[i].kind != CycleKind::Saddle) out.push_back(i);
  return out;
}

Cycle act(const IntegerMatrix& m, const Cycle& v) { return m.apply(v); }

namespace {

RationalMatrix to_rational(const IntegerMatrix& m) {
  RationalMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

// epsilon_p * epsilon_q = -(-1)^(j_p + j_q) for the vertex on lines p, q at
// 1-based positions j_p, j_q along them.
std::optional<std::vector<int>> solve_signs(const Combinatorics& comb) {
  const int n = static_cast<int>(comb.per_line_order.size());
  std::vector<std::vector<int>> position(n, std::vector<int>(comb.vertices.size(), 0));
  for (int p = 0; p < n; ++p)
    for (std::size_t k = 0; k < comb.per_line_order[p].size(); ++k)
      position[p][comb.per_line_order[p][k]] = static_cast<int>(k) + 1;

  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (std::size_t v = 0; v < comb.vertices.size(); ++v) {
    const int p = comb.vertices[v].line_a;
    const int q = comb.vertices[v].line_b;
    const int parity = (position[p][v] + position[q][v]) % 2;
    const int product = parity == 0 ? -1 : 1;
    adj[p].push_back({q, product});
    adj[q].push_back({p, product});
  }
  std::vector<int> eps(n, 0);
  for (int root = 0; root < n; ++root) {
    if (eps[root] != 0) continue;
    eps[root] = 1;
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int p = queue.front();
      queue.pop_front();
      for (const auto& [q, product] : adj[p]) {
        const int want = eps[p] * product;
        if (eps[q] == 0) {
          eps[q] = want;
          queue.push_back(q);
        } else if (eps[q] != want) {
          return std::nullopt;
        }
      }
    }
  }
  return eps;
}

std::vector<Cycle> raw_line_cycles(const CycleLattice& lat, const Combinatorics& comb) {
  std::vector<Cycle> out;
  for (const auto& order : comb.per_line_order) {
    Cycle c(lat.dim, Integer(0));
    for (std::size_t k = 0; k < order.size(); ++k) c[lat.vertex_position[order[k]]] += (k % 2 == 0) ? -1 : 1;
    out.push_back(std::move(c));
  }
  return out;
}

bool in_radical(const CycleLattice& lat, const Cycle& c) {
  for (const auto& v : lat.form.apply(c))
    if (v != 0) return false;
  return true;
}

bool audit(const CycleLattice& lat, const Combinatorics& comb) {
  if (radical_rank(lat) != static_cast<std::size_t>(lat.d)) return false;
  for (const auto& c : raw_line_cycles(lat, comb))
    if (!in_radical(lat, c)) return false;
  return solve_signs(comb).has_value();
}

}  // namespace

CycleLattice intersection_form(const Combinatorics& comb) {
  CycleLattice lat;
  lat.d = comb.d;
  lat.face_position.assign(comb.faces.size(), -1);
  lat.vertex_position.assign(comb.vertices.size(), -1);
  for (std::size_t i = 0; i < comb.faces.size(); ++i)
    if (comb.faces[i].sign < 0) {
      lat.face_position[i] = static_cast<int>(lat.labels.size());
      lat.labels.push_back({CycleKind::CenterMin, static_cast<int>(i)});
    }
  for (std::size_t j = 0; j < comb.vertices.size(); ++j) {
    lat.vertex_position[j] = static_cast<int>(lat.labels.size());
    lat.labels.push_back({CycleKind::Saddle, static_cast<int>(j)});
  }
  for (std::size_t k = 0; k < comb.faces.size(); ++k)
    if (comb.faces[k].sign > 0) {
      lat.face_position[k] = static_cast<int>(lat.labels.size());
      lat.labels.push_back({CycleKind::CenterMax, static_cast<int>(k)});
    }
  lat.dim = static_cast<int>(lat.labels.size());
  const arrangement::Counts c = arrangement::counts(comb);
  lat.a1 = c.a1;
  lat.a2 = c.a2;
  lat.a3 = c.a3;

  auto build = [&](int max_min_sign) {
    IntegerMatrix form(lat.dim, lat.dim);
    auto set = [&](int i, int j, const Integer& v) {
      form(i, j) = v;
      form(j, i) = -v;
    };
    for (std::size_t face = 0; face < comb.faces.size(); ++face) {
      const int fp = lat.face_position[face];
      for (std::size_t v = 0; v < comb.vertices.size(); ++v) {
        const Integer& n = comb.incidence_v(face, v);
        if (n == 0) continue;
        const int vp = lat.vertex_position[v];
        if (comb.faces[face].sign < 0) set(fp, vp, n);
        else set(vp, fp, n);
      }
      if (comb.faces[face].sign > 0) {
        for (std::size_t other = 0; other < comb.faces.size(); ++other) {
          const Integer& e = comb.incidence_e(face, other);
          if (e == 0 || comb.faces[other].sign > 0) continue;
          set(fp, lat.face_position[other], Integer(max_min_sign) * e);
        }
      }
    }
    return form;
  };

  lat.form = build(1);
  if (audit(lat, comb)) return lat;
  lat.form = build(-1);
  lat.flipped = true;
  if (audit(lat, comb)) return lat;
  throw InvariantViolation("orientation audit failed");
}

MonodromyOperator monodromy_h0(const CycleLattice& lat) {
  MonodromyOperator op{"h0", IntegerMatrix::identity(lat.dim), IntegerMatrix::identity(lat.dim)};
  const auto saddles = lat.saddle_positions();
  for (int m = 0; m < lat.dim; ++m)
    for (int j : saddles) {
      const Integer& w = lat.form(m, j);
      if (w == 0) continue;
      op.matrix(j, m) -= w;
      op.inverse(j, m) += w;
    }
  return op;
}

MonodromyOperator monodromy_center(const CycleLattice& lat, int position) {
  MonodromyOperator op{"center " + std::to_string(position), IntegerMatrix::identity(lat.dim),
                       IntegerMatrix::identity(lat.dim)};
  for (int m = 0; m < lat.dim; ++m) {
    const Integer& w = lat.form(m, position);
    if (w == 0) continue;
    op.matrix(position, m) -= w;
    op.inverse(position, m) += w;
  }
  return op;
}

std::vector<MonodromyOperator> monodromy_generators(const CycleLattice& lat) {
  std::vector<MonodromyOperator> ops{monodromy_h0(lat)};
  for (int p : lat.center_positions()) ops.push_back(monodromy_center(lat, p));
  return ops;
}

std::vector<Cycle> radical_basis(const CycleLattice& lat) {
  std::vector<Cycle> out;
  for (const auto& v : nullspace(to_rational(lat.form))) out.push_back(primitive_integer_vector(v));
  return out;
}

std::size_t radical_rank(const CycleLattice& lat) {
  return static_cast<std::size_t>(lat.dim) - rank(to_rational(lat.form));
}

LineCycles line_cycles(const CycleLattice& lat, const Combinatorics& comb) {
  const auto signs = solve_signs(comb);
  if (!signs) throw InvariantViolation("no coherent signs");
  LineCycles out;
  out.signs = *signs;
  out.cycles = raw_line_cycles(lat, comb);
  for (std::size_t p = 0; p < out.cycles.size(); ++p)
    for (auto& x : out.cycles[p]) x *= out.signs[p];
  return out;
}

std::vector<Cycle> face_cycles(const CycleLattice& lat, const Combinatorics& comb) {
  std::vector<Cycle> out;
  const auto saddles = lat.saddle_positions();
  for (std::size_t face = 0; face < comb.faces.size(); ++face) {
    const int fp = lat.face_position[face];
    Cycle c(lat.dim, Integer(0));
    for (int j : saddles) c[j] = lat.form(fp, j);
    out.push_back(std::move(c));
  }
  return out;
}

std::size_t saddle_span_rank(const CycleLattice& lat, const Combinatorics& comb) {
  EchelonBasis span(lat.dim);
  auto insert = [&](const Cycle& c) {
    RationalVector v(c.begin(), c.end());
    span.insert(v);
  };
  const LineCycles lines = line_cycles(lat, comb);
  for (std::size_t p = 1; p < lines.cycles.size(); ++p) insert(lines.cycles[p]);
  for (const auto& c : face_cycles(lat, comb)) insert(c);
  return span.rank();
}

OrbitResult orbit_span(const CycleLattice& lat, const Cycle& start) {
  OrbitResult out;
  const auto ops = monodromy_generators(lat);
  EchelonBasis span(lat.dim);
  std::vector<RationalVector> members;
  std::deque<std::size_t> queue;

  RationalVector s(start.begin(), start.end());
  if (span.insert(s)) {
    members.push_back(s);
    queue.push_back(0);
    out.word_log.push_back("v0 = start");
  }
  auto to_rational_matrix = [](const IntegerMatrix& m) { return to_rational(m); };
  std::vector<std::pair<std::string, RationalMatrix>> moves;
  for (const auto& op : ops) {
    moves.emplace_back(op.label, to_rational_matrix(op.matrix));
    moves.emplace_back(op.label + "^-1", to_rational_matrix(op.inverse));
  }
  while (!queue.empty()) {
    const std::size_t k = queue.front();
    queue.pop_front();
    for (const auto& [label, m] : moves) {
      RationalVector image = m.apply(members[k]);
      if (!span.insert(image)) continue;
      out.word_log.push_back("v" + std::to_string(members.size()) + " = " + label + "(v" + std::to_string(k) + ")");
      members.push_back(std::move(image));
      queue.push_back(members.size() - 1);
    }
  }
  out.rank_total = span.rank();

  EchelonBasis with_radical(lat.dim);
  for (const auto& r : radical_basis(lat)) with_radical.insert(RationalVector(r.begin(), r.end()));
  const std::size_t rad = with_radical.rank();
  for (const auto& row : span.rows()) with_radical.insert(row);
  out.rank_mod_radical = with_radical.rank() - rad;
  out.certificate = static_cast<int>(out.rank_mod_radical) == lat.dim - lat.d;
  return out;
}

}  // namespace pencillab::lefschetz
