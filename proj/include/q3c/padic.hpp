#pragma once

/* Reduction mod p and the lifting constraints on rational periods.
 *
 * For a prime p of good reduction (p not dividing the denominator of c),
 * a rational point of exact period n reduces to a cycle of some length m
 * mod p, and n is confined to m, m*r, or m*r*p^e, where r is the
 * multiplicative order mod p of the cycle's multiplier mu = prod 2a_i
 * (r = 1 when mu == 1; no lift at all beyond n = m when mu == 0).  The
 * sharper variant for p <= 3 allows only n = m, mr, mrp.  Intersecting the
 * constraints over several primes pins down the possible periods exactly.
 */

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "q3c/forms.hpp"
#include "q3c/pairs.hpp"

namespace q3c {

struct FpCycle {
  std::uint64_t p = 0;
  std::vector<std::uint64_t> elements;  // rotation starting at the smallest
  std::uint64_t mu = 0;                 // multiplier: prod of 2*a_i mod p
  std::uint64_t r = 0;                  // ord_p(mu); 0 encodes infinity (mu==0)
  std::size_t m() const { return elements.size(); }
};

/* All cycles of x -> x^2 + c on Z/p, via functional-graph traversal;
 * sorted by (length, elements). */
std::vector<FpCycle> cycles_mod_p(std::uint64_t p, std::uint64_t c_mod_p);

enum class Rule { MS, Pezda };

/* One family of admissible periods: {base * p^e : e >= 1}, or just
 * {base * p} when capped (the p <= 3 sharper rule). */
struct PeriodTail {
  std::uint64_t base = 0;
  std::uint64_t p = 0;
  bool capped = false;
};

struct PeriodConstraint {
  std::uint64_t p = 0;
  std::set<std::uint64_t> finite;
  std::vector<PeriodTail> tails;
};

/* Admissible periods at p for the map x^2 + c.  Throws domain_error
 * "bad reduction at p" when p divides the denominator of c. */
PeriodConstraint allowed_periods(std::uint64_t p, const BigRat& c, Rule rule);

struct ExcludeReport {
  ParamPair pair;
  std::vector<std::uint64_t> primes_used;     // good reduction only
  std::vector<std::uint64_t> primes_skipped;  // bad reduction, ignored
  bool poonen = false;              // periods 1 and 2 removed by assumption
  std::set<std::uint64_t> remaining;
  std::vector<PeriodTail> remaining_tails;  // nonempty only for tiny budgets
  bool only3 = false;               // remaining == {3}, no tails
  std::vector<PeriodConstraint> provenance;
};

/* Exact intersection of the per-prime constraints (tail/tail meets are
 * resolved by valuation bookkeeping, so the result is exact, not windowed).
 * The sharper rule is applied at p <= 3, the general rule above. */
ExcludeReport exclude_periods(const ParamPair& pair,
                              const std::vector<std::uint64_t>& primes,
                              bool assume_poonen);

struct ShapeDetail {
  std::uint64_t p = 0;
  std::uint64_t N = 0;                 // #c with a period-3 linear factor
  std::vector<std::uint64_t> cs;       // those residues, ascending
  BigInt bound;                        // floor((p + 2*legendre(-3,p)) / 3)
  bool within = false;
  bool equality = false;
};

/* Count of residues c mod p for which the period-3 divisor polynomial of
 * x^2 + c has a root in Z/p, with the proven upper bound. */
ShapeDetail phi3_shape_mod_p(std::uint64_t p);

struct Table2Row {
  std::uint64_t c = 0;
  FpCycle cycle;
  std::vector<std::uint64_t> n_candidates;  // {m} u {m*r}, finite part
};

/* The mod-29 census: for each residue c whose map has a 3-cycle
 * (c in {11,14,15,20,21,27} among nonzero residues), every cycle with its
 * multiplier data and finite period candidates. */
std::vector<Table2Row> table2();

}  // namespace q3c
