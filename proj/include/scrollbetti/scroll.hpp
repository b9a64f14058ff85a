#pragma once

#include <string>
#include <vector>

#include <scrollbetti/combinatorics.hpp>
#include <scrollbetti/errors.hpp>

namespace scrollbetti {

// A divisor class X ~ a*H + b*F on the smooth rational normal surface scroll
// S(a1, a2) in P^r, r = a1 + a2 + 1, with 1 <= a1 <= a2. H is the hyperplane
// class and F the ruling.
//
// Two nested conditions matter:
//  * nondegeneracy: the generic member of |aH + bF| is an irreducible
//    nondegenerate curve. Holds iff
//      a == 0 and b >  a2, or
//      a == 1 and b >= 1,  or
//      a >= 2 and b >= -a*a2.
//  * problem scope: the divisors this library resolves, the non-arithmetically
//    Cohen-Macaulay ones. Holds iff
//      a == 0 and b > a2, or a >= 1 and b >= 2.
struct ScrollDivisor {
  int a1;
  int a2;
  long a;
  long b;

  int r() const { return a1 + a2 + 1; }

  bool in_problem_scope() const {
    return (a == 0 && b > a2) || (a >= 1 && b >= 2);
  }
};

// Checks the scroll is smooth (1 <= a1 <= a2) and the class nondegenerate,
// and returns the validated divisor. The problem-scope flag is a property of
// the result, not a validation failure: degenerate-but-listable classes like
// a >= 1, b <= 1 pass validation and are only rejected by the operations
// that need scope.
inline ScrollDivisor validate_divisor(int a1, int a2, long a, long b) {
  if (a1 < 1 || a1 > a2)
    throw NotSmoothScroll("S(a1,a2) needs 1 <= a1 <= a2, got a1=" +
                          std::to_string(a1) + ", a2=" + std::to_string(a2));
  const bool nondegenerate = (a == 0 && b > a2) || (a == 1 && b >= 1) ||
                             (a >= 2 && b >= -a * static_cast<long>(a2));
  if (!nondegenerate)
    throw DegenerateDivisor(
        "class " + std::to_string(a) + "H + " + std::to_string(b) +
        "F on S(" + std::to_string(a1) + "," + std::to_string(a2) +
        ") has no irreducible nondegenerate member");
  return {a1, a2, a, b};
}

// Numerical invariants of an in-scope divisor class:
//   delta   = ceil((b-1)/a2), the number of two-row module summands
//   epsilon = b - (delta-1)*a2, always in [2, a2+1]
//   q[l-1]  = a1*a + b + (a1-a2)*(l-1) for l = 1..delta, the twists of the
//             summand modules E(r, a1, q_l); weakly decreasing in l and
//             strictly decreasing when a1 < a2
//   reg_x   = a + 1 + ceil((b-1)/a1), the regularity of X
//   reg_y   = regularity of the rolling-factor counterpart of X:
//             a + 2 for b <= a2+1, else a + 2 + ceil((b-a2-1)/a1)
struct DivisorInvariants {
  long delta;
  long epsilon;
  std::vector<long> q;
  long reg_x;
  long reg_y;
};

inline DivisorInvariants divisor_invariants(const ScrollDivisor& x) {
  if (!x.in_problem_scope())
    throw OutOfProblemScope(
        "class " + std::to_string(x.a) + "H + " + std::to_string(x.b) +
        "F on S(" + std::to_string(x.a1) + "," + std::to_string(x.a2) +
        ") is outside the resolved family (need a == 0 with b > a2, or "
        "a >= 1 with b >= 2)");
  DivisorInvariants inv;
  inv.delta = ceil_div(x.b - 1, x.a2);
  inv.epsilon = x.b - (inv.delta - 1) * x.a2;
  if (inv.epsilon < 2 || inv.epsilon > x.a2 + 1)
    throw std::logic_error("divisor_invariants: epsilon outside [2, a2+1]");
  inv.q.reserve(static_cast<std::size_t>(inv.delta));
  for (long l = 1; l <= inv.delta; ++l)
    inv.q.push_back(x.a1 * x.a + x.b + (x.a1 - x.a2) * (l - 1));
  // The last twist can be rewritten against epsilon; the identity pins down
  // delta and epsilon against the twist sequence.
  if (inv.q.back() != x.a1 * (x.a + inv.delta - 2) + inv.epsilon + x.a1)
    throw std::logic_error("divisor_invariants: twist/epsilon identity failed");
  inv.reg_x = x.a + 1 + ceil_div(x.b - 1, x.a1);
  inv.reg_y = (x.b <= x.a2 + 1) ? x.a + 2
                                : x.a + 2 + ceil_div(x.b - x.a2 - 1, x.a1);
  return inv;
}

// Which closed-form decomposition applies to an in-scope divisor class.
//
//   general:   a2 >= 2*a1 - 1 and a1+1 <= epsilon <= a2+1. Total is
//              beta(S) + beta(E(r-1,r-1,a1+epsilon))[a+delta-1]
//                      + sum_{l=1}^{delta} beta(E(r, a1, q_l)).
//   h-plus-2f: a1 == 2, epsilon == 2, a2 >= 3. Total is
//              beta(S) + beta(E(H+2F))[a+delta-2]
//                      + sum_{l=1}^{delta-1} beta(E(r, 2, q_l)).
//   balanced:  a1 == a2 == c and b == u*c + 1 with u >= 1. Total is
//              beta(S) + beta(E(2c,2c,2c+1))[a+u-1]
//                      + u * beta(E(2c+1, c, c+1))[a+u-1].
//   unsupported: none of the above; the reason lists which hypotheses fail.
//
// Routes are tried in this order, so a class matching several gets the first.
enum class Route { general, h_plus_2f, balanced, unsupported };

inline const char* route_name(Route r) {
  switch (r) {
    case Route::general: return "general";
    case Route::h_plus_2f: return "h-plus-2f";
    case Route::balanced: return "balanced";
    case Route::unsupported: return "unsupported";
  }
  return "unsupported";
}

struct RouteVerdict {
  Route route;
  std::string reason;
};

inline RouteVerdict decomposition_route(const ScrollDivisor& x) {
  const DivisorInvariants inv = divisor_invariants(x);
  const long eps = inv.epsilon;
  if (x.a2 >= 2 * x.a1 - 1 && eps >= x.a1 + 1)
    return {Route::general,
            "a2 >= 2*a1 - 1 and epsilon = " + std::to_string(eps) +
                " lies in [a1+1, a2+1]: full reduction to rational normal "
                "curve modules applies"};
  if (x.a1 == 2 && eps == 2 && x.a2 >= 3)
    return {Route::h_plus_2f,
            "a1 = 2, epsilon = 2, a2 >= 3: the closed form for the H+2F "
            "module applies"};
  if (x.a1 == x.a2 && (x.b - 1) % x.a1 == 0 && (x.b - 1) / x.a1 >= 1)
    return {Route::balanced,
            "a1 = a2 = " + std::to_string(x.a1) + " and b = " +
                std::to_string((x.b - 1) / x.a1) + "*" + std::to_string(x.a1) +
                " + 1: the balanced-scroll closed form applies"};
  std::string reason = "no closed form applies:";
  if (x.a2 < 2 * x.a1 - 1)
    reason += " a2 = " + std::to_string(x.a2) + " < 2*a1 - 1 = " +
              std::to_string(2 * x.a1 - 1) +
              " rules out the curve-module reduction;";
  else
    reason += " epsilon = " + std::to_string(eps) + " <= a1 = " +
              std::to_string(x.a1) +
              " and the H+epsilon*F module has no known closed form there;";
  if (x.a1 == x.a2)
    reason += " b = " + std::to_string(x.b) + " is not 1 mod " +
              std::to_string(x.a1) + " so the balanced form is out";
  else
    reason += " a1 != a2 so the balanced form is out";
  return {Route::unsupported, reason};
}

}  // namespace scrollbetti
