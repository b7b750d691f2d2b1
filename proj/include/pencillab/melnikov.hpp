#ifndef PENCILLAB_MELNIKOV_HPP
#define PENCILLAB_MELNIKOV_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pencillab/arrangement.hpp"
#include "pencillab/forms.hpp"

namespace pencillab::melnikov {

using arrangement::Arrangement;
using arrangement::Point;

/// f * sum_p lambda_p dl_p / l_p as a polynomial form.
OneForm log_form(const RationalVector& lambdas, const Arrangement& arr);

/// w = f * sum_p lambda_p dl_p / l_p + dP with sum lambda_p = 0, deg P <= d+1
/// and P(0,0) = 0.
struct LogDecomposition {
  RationalVector lambdas;
  BivariatePoly P;
};

/// Unique normalized decomposition of a form of degree <= d, or nullopt.
/// Throws InputError when deg w > d.
std::optional<LogDecomposition> log_decompose(const OneForm& w, const Arrangement& arr);

/// Lines grouped by equal lambda, groups ordered by their first line.
struct Grouping {
  std::vector<std::vector<int>> groups;
  std::vector<BivariatePoly> polys;  // f_i = product of the group's lines
  std::vector<int> degrees;
  std::size_t size() const { return groups.size(); }
};

Grouping group_lambdas(const RationalVector& lambdas, const Arrangement& arr);
/// Groups given explicitly as consecutive runs of lines, e.g. {1, 2} for d = 2
/// gives {{0}, {1, 2}}.
Grouping consecutive_grouping(const std::vector<int>& partition, const Arrangement& arr);

/// Intersection points of lines lying in different groups.
std::vector<Point> cross_group_vertices(const Grouping& g, const Arrangement& arr);

/// P - shift = sum_i A_i f / f_i with deg A_i <= d_i. P is only fixed up to
/// an additive constant, so the constant value of P on the cross-group
/// vertices is split off as `shift`. Among the solutions the one with zero
/// coefficient of LM(f_i) in A_i for i >= 2 is returned.
struct PkStructure {
  bool ok = false;
  Rational shift;
  std::vector<BivariatePoly> A;
  std::vector<Point> violations;  // cross-group vertices where P - shift != 0
};

PkStructure pk_structure(const BivariatePoly& P, const Grouping& g, const Arrangement& arr);

/// Dimension of {P in P_{d+1} vanishing on cross-group vertices} against
/// the space of f * sum A_i / f_i, both by exact rank, with closed forms.
struct DimensionAudit {
  int d = 0;
  std::vector<int> partition;
  int vanishing_rank = 0;     // dimension by rank of the evaluation map
  int representable_rank = 0; // dimension of the span of A_i f / f_i
  int vanishing_formula = 0;  // (d+2)(d+3)/2 - sum_{i<j} d_i d_j
  int group_formula = 0;      // sum (d_i+1)(d_i+2)/2 - (s-1)
  int single_offset_formula = 0;  // sum (d_i+1)(d_i+2)/2 - 1
  bool consistent() const {
    return vanishing_rank == representable_rank && vanishing_rank == vanishing_formula &&
           vanishing_rank == group_formula;
  }
  bool single_offset_matches() const { return single_offset_formula == vanishing_rank; }
};

DimensionAudit dimension_audit(int d, const std::vector<int>& partition);

/// Partitions of n, parts in nonincreasing order, lexicographically descending.
std::vector<std::vector<int>> partitions(int n);

/// omega_eps = df + sum_{i=k}^{2k} eps^i omega_i; absent orders are zero.
struct Deformation {
  int k = 1;
  std::map<int, OneForm> forms;
};

/// Throws InputError unless k >= 1, every order lies in k..2k, omega_k is
/// present and nonzero and every form has degree <= d.
void validate(const Deformation& def, const Arrangement& arr);

/// The log deformation prod_j F_j^{lambda_j} with F_j = f_j + eps^k h_j and
/// lambda_j = 1 + eps^k mu_j over the given grouping, truncated after
/// order 2k.
Deformation log_deformation(const Grouping& g, const std::vector<Rational>& mu,
                            const std::vector<BivariatePoly>& h, int k);

struct LogCertificate {
  RationalVector lambdas;
  BivariatePoly P;
  Grouping grouping;
  Rational shift;
  std::vector<BivariatePoly> A;
};

enum class Status { LogCertificate, Obstructed };

struct MelnikovOutcome {
  Status status = Status::Obstructed;
  int order = 0;
  std::optional<LogCertificate> certificate;
  OneForm residual;               // representative of the obstruction
  std::string reason;
  std::vector<std::string> log;   // recorded events, e.g. cap increases
};

/// Orders k..2k-1 must decompose; at order 2k, W = f omega_2k - P_k f alpha_k
/// must lie in alpha_1 f + alpha_2 f^2 + d(f g) + p df, first with deg g,
/// deg p <= d+2 and, failing that, <= 2d+3. Then (lambda_k, P_k) must have
/// the grouped structure.
MelnikovOutcome francoise_recursion(const Deformation& def, const Arrangement& arr);

struct Bounds {
  int s = 0;
  int codim_minus_one = 0;
  int cyclicity_lower_bound = 0;
};

/// s = 1: (d+2)(d-1)/2; s > 1: (d+1)(d+2) - sum (d_i+1)(d_i+2)/2 - 1.
/// Throws InputError unless the parts are positive and sum to d+1.
Bounds codim_and_cyclicity(int d, const std::vector<int>& partition);

/// codim - 1 of the tangent space of the grouped log family at df for the
/// canonical arrangement, by exact rank: span of (f/f_i) df_i and
/// d(A f / f_i), deg A <= d_i, inside forms of degree <= d.
int tangent_codim_minus_one(int d, const std::vector<int>& partition);

/// Ranks inside forms of degree <= d for the canonical arrangement.
struct LogSpaceAudit {
  int forms_dim = 0;         // (d+1)(d+2)
  int exact_rank = 0;        // dP, deg P <= d+1
  int decomposable_rank = 0; // log forms plus exact forms
  int exact_codim_minus_one() const { return forms_dim - exact_rank - 1; }
  int decomposable_codim() const { return forms_dim - decomposable_rank; }
};

LogSpaceAudit log_space_audit(const Arrangement& arr);

}  // namespace pencillab::melnikov

#endif  // PENCILLAB_MELNIKOV_HPP
