#pragma once

/* The closed-form machinery for rational 3-cycles of x^2 + c:
 * the period-3 divisor polynomial, the numerator/denominator forms
 * A, B, C, the cubic forms t1, t2, t3 (norms from the field of x^3 - x - 1),
 * cycle construction, and recovery of the parameter from a numerator
 * triangle.  Also the prime-class checks for the factors of A and t_i.
 */

#include <array>
#include <optional>
#include <vector>

#include "q3c/intmath.hpp"
#include "q3c/pairs.hpp"

namespace q3c {

/* A(m,n) = m^6 + 2m^5n + 4m^4n^2 + 8m^3n^3 + 9m^2n^4 + 4mn^5 + n^6 (> 0, odd). */
BigInt eval_A(const ParamPair& p);

/* (B, C) with C = mn(m+n)/2 (an integer; sign may be negative), B = 16 C^2. */
std::pair<BigInt, BigInt> eval_B_C(const ParamPair& p);

/* The sextic identity A = s3^2 + 7 (mn(m+n))^2 uses this cubic:
 * s3(m,n) = m^3 + m^2 n - 2 m n^2 - n^3. */
BigInt eval_s3(const ParamPair& p);

/* t1 = m^3+2m^2n+mn^2+n^3, t2 = m^3-mn^2-n^3, t3 = m^3+2m^2n+3mn^2+n^3. */
BigInt eval_t(int i, const ParamPair& p);

struct CVal {
  BigRat c;   // -A/B in lowest terms
  BigInt A, B, C;
};
CVal c_of_pair(const ParamPair& p);

struct CycleData {
  ParamPair pair;
  BigRat c;
  std::array<BigRat, 3> xs;          // x1, x2, x3 with f(x1)=x2, f(x2)=x3, f(x3)=x1
  std::array<BigInt, 3> numerators;  // t1, t2, -t3 (signs as in the x_i)
  BigInt denom;                      // shared exact denominator 4C
};
CycleData cycle_of_pair(const ParamPair& p);

/* The degree-6 polynomial in x whose roots are the period-3 points of
 * x^2 + y; zero exactly on (x, c) pairs where x has period 3 under x^2+c. */
BigRat phi3_eval(const BigRat& x, const BigRat& y);

/* Alternative single-variable parametrization; pole at t = +-1.
 * Returns (x(t), c(t)); t = 1 + 2s links it to the pair parametrization. */
std::pair<BigRat, BigRat> param_t(const BigRat& t);

/* The three exact integer identities t1^2 - A = 4C*t2, t2^2 - A = -4C*t3,
 * t3^2 - A = 4C*t1. */
bool norm_identity_check(const ParamPair& p);

/* s = -(a1^2 - a2^2)/(a1^2 - a3^2); error when a1^2 = a3^2 (degenerate). */
BigRat s_from_triangle(const BigInt& a1, const BigInt& a2, const BigInt& a3);

/* Tries all orderings of the triple through s_from_triangle and validates by
 * recomputing |t_i|; returns the canonical witness pair, or nothing when the
 * triple is not a numerator triangle. */
std::optional<ParamPair> pair_from_triangle(const BigInt& a1, const BigInt& a2,
                                            const BigInt& a3);

/* Prime-class conformance.
 *
 * Factors of A: apart from a single optional factor 7, every prime factor
 * must be == 1 (mod 7).  Factors of any t_i: must be odd and either 23,
 * a non-residue of -23, or a residue representable as x^2 + 23 y^2.
 * Class codes: A-side '7', '1' (== 1 mod 7), '!' (violation);
 * t-side 'i' (23), 'ii' -> 'n' (non-residue), 'iii' -> 'r' (representable),
 * '!' (violation).  '?' marks an unfactored composite cofactor. */
struct FactorClass {
  BigInt value;   // prime, or composite cofactor when code == '?'
  unsigned exp;
  char code;
};
struct ClassReport {
  BigInt value;                     // the integer that was classified
  std::vector<FactorClass> parts;
  bool conforms;                    // true when no '!' part and no '?' part
  bool complete;                    // factorization finished
};
ClassReport classify_A_value(const BigInt& A);
ClassReport classify_t_value(const BigInt& t);

/* Number of distinct roots of x^3 - x - 1 mod q (q prime): 0, 1, 2 (only at
 * q = 23, where one root is double), or 3. */
int cubic_root_count_mod(const BigInt& q);

}  // namespace q3c
