#include "pencillab/melnikov.hpp"

#include <algorithm>
#include <numeric>

#include "pencillab/petrov.hpp"
#include "pencillab/poly_system.hpp"

namespace pencillab::melnikov {

namespace {

BivariatePoly cofactor(const BivariatePoly& f, const BivariatePoly& g) {
  const auto q = f.divide_exact(g);
  if (!q) throw InvariantViolation("factor does not divide f");
  return *q;
}

Point intersection(const arrangement::Line& u, const arrangement::Line& v) {
  const Rational det = u.a * v.b - v.a * u.b;
  return {(u.b * v.c - v.b * u.c) / det, (u.c * v.a - v.c * u.a) / det};
}

int dim_polys(int n) { return (n + 1) * (n + 2) / 2; }

bool is_partition_of(const std::vector<int>& parts, int n) {
  if (parts.empty()) return false;
  for (int p : parts)
    if (p < 1) return false;
  return std::accumulate(parts.begin(), parts.end(), 0) == n;
}

// Columns d(f g) and p df for every monomial up to `cap`, plus the n = 3
// kernel generators standing for alpha_1 f and alpha_2 f^2.
bool order_2k_member(const OneForm& W, const Arrangement& arr, int cap) {
  if (W.is_zero()) return true;
  const OneForm df = exterior_derivative(arr.f);
  PolySystem sys(2);
  for (const auto& g : petrov::kernel_basis(arr.f, 3, arr.forms)) sys.add_unknown(g);
  for (const auto& m : monomials_up_to(cap)) {
    const BivariatePoly mono = BivariatePoly::term(m, 1);
    sys.add_unknown(exterior_derivative(arr.f * mono));
    sys.add_unknown(mono * df);
  }
  return sys.solve(W).feasible;
}

// Truncated power series in e with coefficients up to e^2.
using PolySeries = std::array<BivariatePoly, 3>;
using FormSeries = std::array<OneForm, 3>;

FormSeries mul(const PolySeries& a, const FormSeries& w) {
  FormSeries out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; i + j < 3; ++j) out[i + j] += a[i] * w[j];
  return out;
}

}  // namespace

OneForm log_form(const RationalVector& lambdas, const Arrangement& arr) {
  if (lambdas.size() != arr.forms.size()) throw InputError("lambda count does not match the number of lines");
  OneForm out;
  for (std::size_t p = 0; p < lambdas.size(); ++p)
    if (lambdas[p] != 0) out += lambdas[p] * (cofactor(arr.f, arr.forms[p]) * exterior_derivative(arr.forms[p]));
  return out;
}

std::optional<LogDecomposition> log_decompose(const OneForm& w, const Arrangement& arr) {
  if (!(w.degree() <= arr.d)) throw InputError("form degree exceeds d");
  const std::size_t n = arr.forms.size();
  PolySystem sys(2);
  std::vector<std::pair<std::size_t, Rational>> sum;
  for (std::size_t p = 0; p < n; ++p) {
    sum.push_back({sys.add_unknown(cofactor(arr.f, arr.forms[p]) * exterior_derivative(arr.forms[p])), 1});
  }
  sys.add_constraint(sum, 0);
  std::vector<Monomial> monomials;
  for (const auto& m : monomials_up_to(arr.d + 1)) {
    if (m.degree() == 0) continue;
    monomials.push_back(m);
    sys.add_unknown(exterior_derivative(BivariatePoly::term(m, 1)));
  }
  const LinearSolution sol = sys.solve(w);
  if (!sol.feasible) return std::nullopt;
  if (!sol.nullspace.empty()) throw InvariantViolation("log decomposition is not unique");
  LogDecomposition out;
  out.lambdas.assign(sol.particular.begin(), sol.particular.begin() + static_cast<std::ptrdiff_t>(n));
  out.P = combine(monomials, sol.particular, n);
  if (log_form(out.lambdas, arr) + exterior_derivative(out.P) != w)
    throw InvariantViolation("log decomposition does not re-expand");
  return out;
}

Grouping group_lambdas(const RationalVector& lambdas, const Arrangement& arr) {
  if (lambdas.size() != arr.forms.size()) throw InputError("lambda count does not match the number of lines");
  Grouping g;
  std::vector<Rational> values;
  for (std::size_t p = 0; p < lambdas.size(); ++p) {
    const auto it = std::find(values.begin(), values.end(), lambdas[p]);
    if (it == values.end()) {
      values.push_back(lambdas[p]);
      g.groups.push_back({static_cast<int>(p)});
    } else {
      g.groups[static_cast<std::size_t>(it - values.begin())].push_back(static_cast<int>(p));
    }
  }
  for (const auto& group : g.groups) {
    BivariatePoly poly(1);
    for (int p : group) poly = poly * arr.forms[p];
    g.polys.push_back(poly);
    g.degrees.push_back(static_cast<int>(group.size()));
  }
  return g;
}

Grouping consecutive_grouping(const std::vector<int>& partition, const Arrangement& arr) {
  if (!is_partition_of(partition, static_cast<int>(arr.forms.size()))) throw InputError("partition mismatch");
  RationalVector labels;
  for (std::size_t i = 0; i < partition.size(); ++i)
    for (int j = 0; j < partition[i]; ++j) labels.push_back(Rational(static_cast<long>(i)));
  return group_lambdas(labels, arr);
}

std::vector<Point> cross_group_vertices(const Grouping& g, const Arrangement& arr) {
  std::vector<int> group_of(arr.forms.size(), -1);
  for (std::size_t i = 0; i < g.groups.size(); ++i)
    for (int p : g.groups[i]) group_of[p] = static_cast<int>(i);
  std::vector<Point> out;
  for (std::size_t p = 0; p < arr.lines.size(); ++p)
    for (std::size_t q = p + 1; q < arr.lines.size(); ++q)
      if (group_of[p] != group_of[q]) out.push_back(intersection(arr.lines[p], arr.lines[q]));
  return out;
}

PkStructure pk_structure(const BivariatePoly& P, const Grouping& g, const Arrangement& arr) {
  PkStructure out;
  const auto vertices = cross_group_vertices(g, arr);
  if (!vertices.empty()) out.shift = P.evaluate(vertices[0].x, vertices[0].y);
  for (const auto& v : vertices)
    if (P.evaluate(v.x, v.y) != out.shift) out.violations.push_back(v);
  if (!out.violations.empty()) return out;

  PolySystem sys(1);
  std::vector<std::vector<Monomial>> monomials(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    const BivariatePoly co = cofactor(arr.f, g.polys[i]);
    const Monomial lead = g.polys[i].leading_monomial();
    for (const auto& m : monomials_up_to(g.degrees[i])) {
      const std::size_t col = sys.add_unknown(BivariatePoly::term(m, 1) * co);
      if (i > 0 && m == lead) sys.add_constraint({{col, 1}}, 0);
      monomials[i].push_back(m);
    }
  }
  const LinearSolution sol = sys.solve(P - out.shift);
  if (!sol.feasible) return out;
  std::size_t offset = 0;
  BivariatePoly check;
  for (std::size_t i = 0; i < g.size(); ++i) {
    out.A.push_back(combine(monomials[i], sol.particular, offset));
    offset += monomials[i].size();
    check += out.A.back() * cofactor(arr.f, g.polys[i]);
  }
  if (check != P - out.shift) throw InvariantViolation("structure cofactors do not re-expand");
  out.ok = true;
  return out;
}

DimensionAudit dimension_audit(int d, const std::vector<int>& partition) {
  const Arrangement arr = arrangement::canonical_arrangement(d);
  const Grouping g = consecutive_grouping(partition, arr);
  DimensionAudit out;
  out.d = d;
  out.partition = partition;

  const auto monomials = monomials_up_to(d + 1);
  const auto vertices = cross_group_vertices(g, arr);
  RationalMatrix eval(vertices.size(), monomials.size());
  for (std::size_t r = 0; r < vertices.size(); ++r)
    for (std::size_t c = 0; c < monomials.size(); ++c)
      eval(r, c) = BivariatePoly::term(monomials[c], 1).evaluate(vertices[r].x, vertices[r].y);
  out.vanishing_rank = static_cast<int>(monomials.size() - (vertices.empty() ? 0 : rank(eval)));

  PolySystem sys(1);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const BivariatePoly co = cofactor(arr.f, g.polys[i]);
    for (const auto& m : monomials_up_to(g.degrees[i])) sys.add_unknown(BivariatePoly::term(m, 1) * co);
  }
  out.representable_rank = static_cast<int>(sys.rank());

  int cross = 0;
  int groups_total = 0;
  for (std::size_t i = 0; i < partition.size(); ++i) {
    groups_total += dim_polys(partition[i]);
    for (std::size_t j = i + 1; j < partition.size(); ++j) cross += partition[i] * partition[j];
  }
  const int s = static_cast<int>(partition.size());
  out.vanishing_formula = dim_polys(d + 1) - cross;
  out.group_formula = groups_total - (s - 1);
  out.single_offset_formula = groups_total - 1;
  return out;
}

std::vector<std::vector<int>> partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  if (n >= 1) rec(rec, n, n);
  return out;
}

void validate(const Deformation& def, const Arrangement& arr) {
  if (def.k < 1) throw InputError("deformation order k must be at least 1");
  for (const auto& [order, w] : def.forms) {
    if (order < def.k || order > 2 * def.k)
      throw InputError("deformation order " + std::to_string(order) + " outside k..2k");
    if (!(w.degree() <= arr.d)) throw InputError("deformation form of order " + std::to_string(order) + " exceeds degree d");
  }
  const auto it = def.forms.find(def.k);
  if (it == def.forms.end() || it->second.is_zero()) throw InputError("omega_k must be nonzero");
}

Deformation log_deformation(const Grouping& g, const std::vector<Rational>& mu, const std::vector<BivariatePoly>& h,
                            int k) {
  if (mu.size() != g.size() || h.size() != g.size()) throw InputError("one mu and one h per group");
  if (k < 1) throw InputError("deformation order k must be at least 1");
  FormSeries total;
  for (std::size_t i = 0; i < g.size(); ++i) {
    FormSeries term{exterior_derivative(g.polys[i]), exterior_derivative(h[i]), OneForm{}};
    term = mul(PolySeries{BivariatePoly(1), BivariatePoly(mu[i]), BivariatePoly()}, term);
    for (std::size_t j = 0; j < g.size(); ++j)
      if (j != i) term = mul(PolySeries{g.polys[j], h[j], BivariatePoly()}, term);
    for (int e = 0; e < 3; ++e) total[e] += term[e];
  }
  BivariatePoly f(1);
  for (const auto& p : g.polys) f = f * p;
  if (total[0] != exterior_derivative(f)) throw InvariantViolation("log deformation does not start at df");
  Deformation def;
  def.k = k;
  if (!total[1].is_zero()) def.forms[k] = total[1];
  if (!total[2].is_zero()) def.forms[2 * k] = total[2];
  return def;
}

MelnikovOutcome francoise_recursion(const Deformation& def, const Arrangement& arr) {
  validate(def, arr);
  auto form_at = [&](int order) {
    const auto it = def.forms.find(order);
    return it == def.forms.end() ? OneForm{} : it->second;
  };

  MelnikovOutcome out;
  std::optional<LogDecomposition> first;
  for (int i = def.k; i < 2 * def.k; ++i) {
    const OneForm w = form_at(i);
    auto dec = log_decompose(w, arr);
    if (!dec) {
      out.order = i;
      out.residual = w;
      out.reason = "omega_" + std::to_string(i) + " is not f alpha + dP";
      return out;
    }
    if (i == def.k) first = std::move(dec);
  }

  const OneForm alpha_f = log_form(first->lambdas, arr);
  const OneForm W = arr.f * form_at(2 * def.k) - (first->P * alpha_f);
  bool member = order_2k_member(W, arr, arr.d + 2);
  if (!member) {
    out.log.push_back("order " + std::to_string(2 * def.k) + ": infeasible with degree cap " +
                      std::to_string(arr.d + 2) + ", retrying with cap " + std::to_string(2 * arr.d + 3));
    member = order_2k_member(W, arr, 2 * arr.d + 3);
  }
  if (!member) {
    out.order = 2 * def.k;
    out.residual = W;
    out.reason = "f omega_2k - P_k f alpha_k is not in alpha_1 f + alpha_2 f^2 + d(f g) + p df";
    return out;
  }

  LogCertificate cert;
  cert.lambdas = first->lambdas;
  cert.P = first->P;
  cert.grouping = group_lambdas(cert.lambdas, arr);
  const PkStructure pk = pk_structure(cert.P, cert.grouping, arr);
  if (!pk.ok) {
    out.order = 2 * def.k;
    out.residual = W;
    out.reason = pk.violations.empty() ? "P_k is not a combination of f / f_i"
                                       : "P_k does not vanish on " + std::to_string(pk.violations.size()) +
                                             " cross-group vertices";
    return out;
  }
  cert.shift = pk.shift;
  cert.A = pk.A;
  out.status = Status::LogCertificate;
  out.order = 2 * def.k;
  out.certificate = std::move(cert);
  return out;
}

Bounds codim_and_cyclicity(int d, const std::vector<int>& partition) {
  if (d < 1 || !is_partition_of(partition, d + 1)) throw InputError("partition mismatch");
  Bounds out;
  out.s = static_cast<int>(partition.size());
  if (out.s == 1) {
    out.codim_minus_one = (d + 2) * (d - 1) / 2;
  } else {
    int sum = 0;
    for (int di : partition) sum += dim_polys(di);
    out.codim_minus_one = (d + 1) * (d + 2) - sum - 1;
  }
  out.cyclicity_lower_bound = out.codim_minus_one;
  return out;
}

int tangent_codim_minus_one(int d, const std::vector<int>& partition) {
  if (d < 1 || !is_partition_of(partition, d + 1)) throw InputError("partition mismatch");
  const Arrangement arr = arrangement::canonical_arrangement(d);
  const Grouping g = consecutive_grouping(partition, arr);
  PolySystem sys(2);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const BivariatePoly co = cofactor(arr.f, g.polys[i]);
    sys.add_unknown(co * exterior_derivative(g.polys[i]));
    for (const auto& m : monomials_up_to(g.degrees[i]))
      sys.add_unknown(exterior_derivative(BivariatePoly::term(m, 1) * co));
  }
  return (d + 1) * (d + 2) - static_cast<int>(sys.rank()) - 1;
}

LogSpaceAudit log_space_audit(const Arrangement& arr) {
  LogSpaceAudit out;
  out.forms_dim = 2 * dim_polys(arr.d);
  PolySystem sys(2);
  for (const auto& m : monomials_up_to(arr.d + 1))
    if (m.degree() > 0) sys.add_unknown(exterior_derivative(BivariatePoly::term(m, 1)));
  out.exact_rank = static_cast<int>(sys.rank());
  for (std::size_t p = 0; p < arr.forms.size(); ++p)
    sys.add_unknown(cofactor(arr.f, arr.forms[p]) * exterior_derivative(arr.forms[p]));
  out.decomposable_rank = static_cast<int>(sys.rank());
  return out;
}

}  // namespace pencillab::melnikov
