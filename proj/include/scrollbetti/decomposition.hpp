#pragma once

#include <string>
#include <utility>
#include <vector>

#include <scrollbetti/betti_table.hpp>
#include <scrollbetti/combinatorics.hpp>
#include <scrollbetti/errors.hpp>
#include <scrollbetti/module_e.hpp>
#include <scrollbetti/scroll.hpp>

namespace scrollbetti {

namespace detail {

// Second row (j = 3 before shifting) of the H+2F module table on S(2, a2),
// r = a2 + 3 >= 6. Piecewise in the column index:
//   C(r-2, i-1)      for i <= r-5
//   C(i+3, r-1-i)    for i in {r-4, r-3}
//   C(r+1, i+2)      for i in {r-2, r-1}
//   0                for i = r
inline Int h2f_second_row(int r, int i) {
  if (i <= r - 5) return binom(r - 2, i - 1);
  if (i == r - 4 || i == r - 3) return binom(i + 3, r - 1 - i);
  if (i == r - 2 || i == r - 1) return binom(r + 1, i + 2);
  return 0;
}

inline std::string shift_suffix(long l) {
  return l == 0 ? std::string{} : "[" + std::to_string(l) + "]";
}

// "beta(E(6,2,11)) = beta(E(6,2,3))[4]"; the rewriting against the base
// twist is dropped when the shift is zero.
inline std::string label_e(int r, int s, long t) {
  const auto [p, l] = split_twist(s, t);
  std::string base = "beta(E(" + std::to_string(r) + "," + std::to_string(s) +
                     "," + std::to_string(t) + "))";
  if (l == 0) return base;
  return base + " = beta(E(" + std::to_string(r) + "," + std::to_string(s) +
         "," + std::to_string(p) + "))" + shift_suffix(l);
}

inline std::string label_curve_module(int rm1, int p, long shift) {
  return "beta(E(" + std::to_string(rm1) + "," + std::to_string(rm1) + "," +
         std::to_string(p) + "))" + shift_suffix(shift);
}

}  // namespace detail

// Betti table of the module of the divisor H + eps*F on S(a1, a2), as an
// element of the (r+1)-column group, r = a1 + a2 + 1. Two closed forms:
//
//  * a1+1 <= eps <= a2+1:
//      beta(E(r-1, r-1, a1+eps))[1] + beta(E(r, a1, a1+eps))
//  * a1 == 2, eps == 2, a2 >= 3: an explicit two-row table on rows 2 and 3,
//      beta_{i,2} = C(r-2,i-2) - C(r+1,i+1) + (i+2) C(r-1,i+1) for i <= r-4
//      beta_{i,3} = detail::h2f_second_row.
//
// No closed form is known for eps <= a1 with a1 >= 3, nor for the leftover
// tiny case a1 = 2, eps = 2, a2 < 3.
inline BettiTable betti_e_h_plus_eps_f(int a1, int a2, long eps) {
  if (a1 < 1 || a1 > a2)
    throw NotSmoothScroll("S(a1,a2) needs 1 <= a1 <= a2, got a1=" +
                          std::to_string(a1) + ", a2=" + std::to_string(a2));
  const int r = a1 + a2 + 1;
  if (eps >= a1 + 1 && eps <= a2 + 1) {
    const int p = a1 + static_cast<int>(eps);
    return betti_rnc_module(r, p).shifted(1) + betti_e({r, a1, p});
  }
  if (a1 == 2 && eps == 2 && a2 >= 3) {
    BettiTable table(r + 1);
    for (int i = 0; i <= r - 4; ++i)
      table.add(i, 2,
                binom(r - 2, i - 2) - binom(r + 1, i + 1) +
                    Int(i + 2) * binom(r - 1, i + 1));
    for (int i = 0; i <= r - 1; ++i) table.add(i, 3, detail::h2f_second_row(r, i));
    return table;
  }
  throw NoClosedForm(
      "E(H + " + std::to_string(eps) + "F) on S(" + std::to_string(a1) + "," +
      std::to_string(a2) +
      "): closed form known only for epsilon in [a1+1, a2+1], or for "
      "epsilon = 2 with a1 = 2 and a2 >= 3");
}

// Independent route to the H+2F module table on S(2, r-3): resolve the
// associated curve section C first and subtract the surface strand,
//
//   beta_{0,2}(C) = C(r,2) - 2
//   beta_{i,2}(C) = beta_{i-1,3}(C) + r C(r-1,i+1) - C(r-1,i+2) - C(r+1,i+1)
//                   for 1 <= i <= r-2, and 0 past that
//   beta_{i,3}(C) = the same piecewise row as the direct closed form.
//
// The third row is shared with betti_e_h_plus_eps_f; the independent content
// of the cross-check is the entire second row.
inline BettiTable betti_e_h2f_via_curve(int r) {
  if (r < 6)
    throw ROutOfRange("the curve route needs r >= 6, got r=" + std::to_string(r));
  BettiTable table(r + 1);
  for (int i = 0; i <= r - 1; ++i) table.add(i, 3, detail::h2f_second_row(r, i));
  for (int i = 0; i <= r; ++i) {
    Int curve_row2 = 0;
    if (i == 0)
      curve_row2 = binom(r, 2) - 2;
    else if (i <= r - 2)
      curve_row2 = detail::h2f_second_row(r, i - 1) + Int(r) * binom(r - 1, i + 1) -
                   binom(r - 1, i + 2) - binom(r + 1, i + 1);
    table.add(i, 2, curve_row2 - Int(i + 1) * binom(r - 1, i + 2));
  }
  return table;
}

// One labelled piece of a decomposition. The label is the symbolic expression
// of the piece (with shifts and multiplicities); the source names the closed
// form that produced the numbers.
struct Summand {
  std::string label;
  std::string source;
  BettiTable table;
};

struct Decomposition {
  ScrollDivisor divisor;
  DivisorInvariants invariants;
  RouteVerdict route;
  std::vector<Summand> summands;
  BettiTable total;
};

// Betti table of the divisor class as a sum of closed-form pieces, along the
// route chosen by decomposition_route. Throws UnsupportedCase when no route
// applies. Postconditions checked on every call: the total is entrywise
// nonnegative and its top nonzero row equals reg_x.
inline Decomposition decompose(const ScrollDivisor& x) {
  const DivisorInvariants inv = divisor_invariants(x);
  const RouteVerdict verdict = decomposition_route(x);
  const std::string divisor_name =
      std::to_string(x.a) + "H + " + std::to_string(x.b) + "F on S(" +
      std::to_string(x.a1) + "," + std::to_string(x.a2) + ")";
  if (verdict.route == Route::unsupported)
    throw UnsupportedCase(divisor_name + ": " + verdict.reason);

  const int r = x.r();
  Decomposition out{x, inv, verdict, {}, BettiTable(r + 1)};
  auto add_part = [&out](std::string label, std::string source, BettiTable t) {
    out.total += t;
    out.summands.push_back({std::move(label), std::move(source), std::move(t)});
  };

  add_part("beta(S)", "scroll surface quadratic strand", betti_scroll_surface(r));

  switch (verdict.route) {
    case Route::general: {
      const int p = x.a1 + static_cast<int>(inv.epsilon);
      const long shift = x.a + inv.delta - 1;
      add_part(detail::label_curve_module(r - 1, p, shift),
               "rational normal curve module",
               betti_rnc_module(r, p).shifted(shift));
      for (long l = 1; l <= inv.delta; ++l)
        add_part(detail::label_e(r, x.a1, inv.q[static_cast<std::size_t>(l - 1)]),
                 "two-row module closed form",
                 betti_e({r, x.a1, inv.q[static_cast<std::size_t>(l - 1)]}));
      break;
    }
    case Route::h_plus_2f: {
      const long shift = x.a + inv.delta - 2;
      add_part("beta(E(H+2F))" + detail::shift_suffix(shift),
               "H+2F module closed form",
               betti_e_h_plus_eps_f(x.a1, x.a2, 2).shifted(shift));
      for (long l = 1; l <= inv.delta - 1; ++l)
        add_part(detail::label_e(r, x.a1, inv.q[static_cast<std::size_t>(l - 1)]),
                 "two-row module closed form",
                 betti_e({r, x.a1, inv.q[static_cast<std::size_t>(l - 1)]}));
      break;
    }
    case Route::balanced: {
      const int c = x.a1;
      const long u = (x.b - 1) / c;
      const long shift = x.a + u - 1;
      add_part(detail::label_curve_module(2 * c, 2 * c + 1, shift),
               "rational normal curve module",
               betti_rnc_module(r, 2 * c + 1).shifted(shift));
      const std::string mult = u == 1 ? "" : std::to_string(u) + "*";
      add_part(mult + "beta(E(" + std::to_string(r) + "," + std::to_string(c) +
                   "," + std::to_string(c + 1) + "))" +
                   detail::shift_suffix(shift),
               "two-row module closed form",
               betti_e({r, c, c + 1}).scaled(static_cast<unsigned long>(u))
                   .shifted(shift));
      // The balanced route also has a direct closed form for the total;
      // evaluating both and comparing turns every balanced call into a
      // self-check.
      BettiTable closed(r + 1);
      for (int i = 0; i <= r; ++i) {
        closed.add(i, 2, Int(i + 1) * binom(2 * c, i + 2));
        closed.add(i, x.a + u + 1,
                   Int(i + 1) * binom(2 * c, i + 1) + Int(u) * c * binom(2 * c, i));
      }
      if (closed != out.total)
        throw std::logic_error(
            "decompose: balanced closed form disagrees with its summands");
      break;
    }
    case Route::unsupported:
      break;  // unreachable, rejected above
  }

  if (!out.total.nonnegative())
    throw std::logic_error("decompose: negative entry in the total for " +
                           divisor_name);
  if (out.total.max_row() != std::optional<long>(inv.reg_x))
    throw std::logic_error("decompose: top nonzero row differs from reg_x for " +
                           divisor_name);
  return out;
}

}  // namespace scrollbetti
