#pragma once

#include <string>

#include <scrollbetti/betti_table.hpp>
#include <scrollbetti/combinatorics.hpp>
#include <scrollbetti/errors.hpp>

namespace scrollbetti {

// E(r, s, t) is the graded module  sum_{m >= 0} H^0(P^1, O(m*s - t))  over
// the homogeneous coordinate ring of P^r, where P^1 -> P^r is the degree-s
// rational normal curve spanning an s-plane and the ring acts through the
// s+1 coordinates of that subplane. Defined for r >= 3, 1 <= s <= r, t >= 2.
//
// Every admissible twist splits uniquely as t = p + l*s with 2 <= p <= s+1,
// and the minimal free resolution of E(r,s,t) is the resolution of E(r,s,p)
// with every row shifted by l: the Betti table is supported on the two rows
// j = l+1 and j = l+2 (the first row is empty exactly when t == 1 mod s,
// i.e. p == s+1).
struct ModuleESpec {
  int r;
  int s;
  long t;
};

inline void validate(const ModuleESpec& m) {
  if (m.r < 3)
    throw InvalidModuleSpec("E(r,s,t) needs ambient dimension r >= 3, got r=" +
                            std::to_string(m.r));
  if (m.s < 1 || m.s > m.r)
    throw InvalidModuleSpec("E(r,s,t) needs 1 <= s <= r, got s=" +
                            std::to_string(m.s) + ", r=" + std::to_string(m.r));
  if (m.t < 2)
    throw InvalidModuleSpec("E(r,s,t) needs twist t >= 2, got t=" +
                            std::to_string(m.t));
}

// The unique split t = p + l*s with 2 <= p <= s+1 (and l >= 0 for t >= 2).
struct TwistSplit {
  int p;
  long l;
};

inline TwistSplit split_twist(int s, long t) {
  long p = (t - 2) % s + 2;
  return {static_cast<int>(p), (t - p) / s};
}

// Castelnuovo-Mumford regularity of E(r,s,t): ceil((t-1)/s) + 1, which is
// l + 2 in terms of the twist split. Equals the index of the table's second
// row.
inline long regularity_e(const ModuleESpec& m) {
  validate(m);
  return ceil_div(m.t - 1, m.s) + 1;
}

// Betti table of E(r,s,t) as an element of the (r+1)-column group, from the
// two-row closed form for the base twist p and the row shift by l:
//
//   beta_{i,l+1} = sum_{k=0}^{s+1-p} (s+1-p-k) C(s,k) C(r-s, i-k)
//   beta_{i,l+2} = sum_{k=s+2-p}^{i+1} (k+p-s-1) C(s,k) C(r-s, i+1-k)
//
// Support lives in columns i <= r-1; the column i = r is evaluated anyway
// and a nonzero there (impossible by the binomial supports) is raised as a
// hard logic error rather than silently kept.
inline BettiTable betti_e(const ModuleESpec& m) {
  validate(m);
  const auto [p, l] = split_twist(m.s, m.t);
  const int r = m.r, s = m.s;
  BettiTable table(r + 1);
  for (int i = 0; i <= r; ++i) {
    Int first = 0;
    for (int k = 0; k <= s + 1 - p; ++k)
      first += Int(s + 1 - p - k) * binom(s, k) * binom(r - s, i - k);
    Int second = 0;
    for (int k = s + 2 - p; k <= i + 1; ++k)
      second += Int(k + p - s - 1) * binom(s, k) * binom(r - s, i + 1 - k);
    if (i == r) {
      if (first != 0 || second != 0)
        throw std::logic_error("betti_e: nonzero entry in column i=r");
      continue;
    }
    table.add(i, l + 1, first);
    table.add(i, l + 2, second);
  }
  return table;
}

// Betti table of E(r-1, r-1, p) for 2 <= p <= r, i.e. the module of the
// rational normal curve spanning a hyperplane, embedded into the
// (r+1)-column group by column padding:
//
//   beta_{i,1} = (r-p-i)   C(r-1, i)    for 0 <= i <= r-1-p, else 0
//   beta_{i,2} = (i+1+p-r) C(r-1, i+1)  for i >= r-p, else 0
inline BettiTable betti_rnc_module(int r, int p) {
  if (r < 3)
    throw InvalidModuleSpec("betti_rnc_module needs r >= 3, got r=" +
                            std::to_string(r));
  if (p < 2 || p > r)
    throw POutOfRange("betti_rnc_module: need 2 <= p <= r, got p=" +
                      std::to_string(p) + " with r=" + std::to_string(r));
  BettiTable table(r + 1);
  for (int i = 0; i <= r; ++i) {
    if (i <= r - 1 - p) table.add(i, 1, Int(r - p - i) * binom(r - 1, i));
    if (i >= r - p) table.add(i, 2, Int(i + 1 + p - r) * binom(r - 1, i + 1));
  }
  return table;
}

// Betti table of the smooth rational normal surface scroll of degree r-1 in
// P^r: a single quadratic strand
//
//   beta_{i,2} = (i+1) C(r-1, i+2).
inline BettiTable betti_scroll_surface(int r) {
  if (r < 3)
    throw InvalidModuleSpec("betti_scroll_surface needs r >= 3, got r=" +
                            std::to_string(r));
  BettiTable table(r + 1);
  for (int i = 0; i <= r; ++i) table.add(i, 2, Int(i + 1) * binom(r - 1, i + 2));
  return table;
}

}  // namespace scrollbetti
