#include "pencillab/sturm.hpp"

#include <stdexcept>

namespace pencillab {

std::vector<UnivariatePoly> sturm_sequence(const UnivariatePoly& p) {
  std::vector<UnivariatePoly> seq;
  if (p.is_zero()) return seq;
  seq.push_back(p);
  UnivariatePoly next = p.derivative();
  while (!next.is_zero()) {
    seq.push_back(next);
    const auto& a = seq[seq.size() - 2];
    const auto& b = seq.back();
    next = -(a % b);
  }
  return seq;
}

namespace {

enum class At { MinusInfinity, Zero, PlusInfinity };

int sign_at(const UnivariatePoly& p, At where) {
  switch (where) {
    case At::Zero:
      return sign(p.coefficient(0));
    case At::PlusInfinity:
      return sign(p.leading_coefficient());
    case At::MinusInfinity: {
      const int s = sign(p.leading_coefficient());
      return (p.degree().value() % 2 == 0) ? s : -s;
    }
  }
  return 0;
}

int variations(const std::vector<UnivariatePoly>& seq, At where) {
  int count = 0;
  int last = 0;
  for (const auto& q : seq) {
    const int s = sign_at(q, where);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

RootSigns sturm_sign_counts(const UnivariatePoly& p) {
  if (p.is_zero()) throw std::domain_error("sign counts of the zero polynomial");
  RootSigns out;
  out.squarefree_factors = squarefree_decomposition(p);
  for (const auto& [factor, mult] : out.squarefree_factors) {
    if (factor.coefficient(0) == 0) out.zero_multiplicity = mult;
  }

  UnivariatePoly s = squarefree_part(p);
  if (s.coefficient(0) == 0) {
    out.distinct.zero = 1;
    s = divmod(s, UnivariatePoly::t()).first;
  }
  // s is square free and nonzero at 0, so Sturm counts on (a, b] are exact.
  const auto seq = sturm_sequence(s);
  const int v_minus = variations(seq, At::MinusInfinity);
  const int v_zero = variations(seq, At::Zero);
  const int v_plus = variations(seq, At::PlusInfinity);
  out.distinct.negative = v_minus - v_zero;
  out.distinct.positive = v_zero - v_plus;
  return out;
}

}  // namespace pencillab
