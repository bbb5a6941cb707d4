#include "mideal/errors.hpp"
#include "mideal/verify.hpp"

namespace mideal::verify {

std::string to_string(LexCase c) {
  switch (c) {
    case LexCase::principal: return "principal";
    case LexCase::degree_one: return "degree_one";
    case LexCase::depth_one: return "depth_one";
    case LexCase::x2_power: return "x2_power";
    case LexCase::x2_power_xj: return "x2_power_xj";
    case LexCase::remaining: return "remaining";
    case LexCase::edge: return "edge";
  }
  return "?";
}

LexClassification classify_lexsegment(const Monomial& u, const Monomial& v) {
  require_same_ring(u, v);
  if (u.degree() != v.degree()) throw InvalidArgument("lexsegment endpoints must have equal degree");
  if (lex_greater(v, u)) throw InvalidArgument("lexsegment needs u >= v in lex order");

  const std::size_t n = u.num_vars();
  std::vector<Exponent> a(u.exponents().begin(), u.exponents().end());
  std::vector<Exponent> b(v.exponents().begin(), v.exponents().end());
  LexClassification out;
  std::size_t s = 0;  // first variable of the current ring
  std::size_t deg = u.degree();

  // Divide out the common power of the first variable, then drop leading
  // variables absent from both endpoints; each dropped variable adds one to
  // depth and size.
  for (;;) {
    if (a == b) {
      out.kind = LexCase::principal;
      return out;
    }
    if (b[s] > 0) {
      const Exponent c = b[s];
      a[s] -= c;
      b[s] -= c;
      deg -= c;
      out.stripped_degree += c;
      continue;
    }
    if (a[s] == 0) {
      ++s;
      ++out.dropped_vars;
      continue;
    }
    break;
  }
  const std::size_t r = out.dropped_vars;
  const std::size_t m = n - s;  // variables in the reduced ring
  if (deg < 2) {
    out.kind = LexCase::degree_one;
    return out;
  }

  std::vector<Exponent> w = a;
  w[s] -= 1;
  w[n - 1] += 1;
  if (compare_lex(Monomial(w), Monomial(b)) >= 0) {
    out.kind = LexCase::depth_one;
    out.depth_ideal = 1 + r;
    out.size = r;
    return out;
  }

  // Here u = x1 * x_l^{a_l} ... x_m^{a_m} in the reduced ring.
  std::size_t l = 0;
  for (std::size_t t = s + 1; t < n; ++t)
    if (a[t] > 0) {
      l = t - s + 1;
      break;
    }
  out.l = l;
  auto local = [&](std::size_t k) { return b[s + k - 1]; };  // 1-based exponent of v

  const bool v_is_x2_power = local(2) == deg;
  std::size_t j = 0;
  if (local(2) + 1 == deg)
    for (std::size_t k = 3; k <= m; ++k)
      if (local(k) == 1) j = k;
  out.j = j;

  if (v_is_x2_power) {
    if (l >= 4) {
      out.kind = LexCase::x2_power;
      out.depth_ideal = l - 1 + r;
      out.size = l - 2 + r;
    } else {
      out.kind = LexCase::edge;
    }
    return out;
  }
  if (j != 0) {
    if (j <= m - 2 && l >= j + 2) {
      out.kind = LexCase::x2_power_xj;
      out.depth_ideal = l - j + 1 + r;
      out.size = l - j + r;
    } else {
      out.kind = LexCase::edge;
    }
    return out;
  }
  out.kind = LexCase::remaining;
  out.depth_ideal = 2 + r;
  out.size = 1 + r;
  return out;
}

}  // namespace mideal::verify
