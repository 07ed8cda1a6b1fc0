#ifndef CODEKIT_FORMULAS_HPP
#define CODEKIT_FORMULAS_HPP

#include <cstdint>
#include <string>
#include <utility>

#include "codekit/code.hpp"

namespace codekit {

// C(n, k) with the convention that it vanishes for k < 0, n < k.
BigInt binom(std::ptrdiff_t n, std::ptrdiff_t k);

// Weight distribution of the Hamming code over GF(q) of redundancy m:
//   q^m A_k = sum_{i+j=k} C(n1,i) C(N,j) [ (q-1)^k + (-1)^j (q-1)^i (q^m-1) ]
// with n1 = (q^{m-1}-1)/(q-1) and N = q^{m-1}.
WeightDistribution hamming_wd_formula(std::uint32_t q, std::uint32_t m);

// Shortened-code counts from a full-support t-design code:
//   A_k(C_T) = C(k,t) C(n-t,k) / ( C(n,t) C(n-t,k-t) ) * A_k(C).
// The caller is responsible for the hypotheses; a non-integral count throws
// NonIntegral. Entries below k = t follow from d(C_T) >= d > t.
WeightDistribution shortened_wd_formula(const WeightDistribution& wd,
                                        std::size_t t);

// Punctured-code counts:
//   A_k(C^T) = sum_{i=0..t} C(n-t,k) C(k+i,t) C(t,i)
//              / ( C(n-t,k-t+i) C(n,t) ) * A_{k+i}(C).
WeightDistribution punctured_wd_formula(const WeightDistribution& wd,
                                        std::size_t t);

// Single-coordinate puncturing/shortening of a homogeneous code:
//   A_i(C^*) = ((n-i) A_i + (i+1) A_{i+1}) / n,   A_i(C_*) = (n-i) A_i / n.
// Returns (punctured, shortened); non-integral counts throw.
std::pair<WeightDistribution, WeightDistribution>
prange_formulas(const WeightDistribution& wd);

// Dual weight distribution of a [q^2+1, 4, q^2-q] ovoid code, q >= 4:
//   q^4 A_l = C(q^2+1,l)(q-1)^l
//           + u sum_{i+j=l} C(q^2-q,i)(-1)^i C(q+1,j)(q-1)^j
//           + v [ (-1)^l C(q^2,l) - (-1)^l (q-1) C(q^2,l-1) ]
// for 4 <= l <= q^2, with u = (q^2-q)(q^2+1), v = (q-1)(q^2+1).
WeightDistribution ovoid_dual_wd_formula(std::uint32_t q);

// One tag per theorem that predicts explicit enumerators for shortened
// codes and their duals.
enum class TheoremId {
    HamShort1,  // one shortened coordinate of a Hamming code; 4 codes
    HamShort2,  // two shortened coordinates; 3 codes
    RmShort1,   // one shortened coordinate of RM(1,m)/RM(m-2,m); 4 codes
    RmShort2,   // two coordinates; 4 codes
    RmShort3,   // three coordinates; 2 codes
    OvoidShort, // one shortened coordinate of an ovoid code; 4 codes
};

const char* theorem_name(TheoremId id);
TheoremId theorem_from_name(const std::string& name);
int theorem_subcode_count(TheoremId id);

struct PredictedCode {
    std::size_t n, k, d;
    WeightDistribution wd;
};

// The exact parameters and enumerator predicted for sub-code `sub`
// (1-based) of the tagged theorem. Enumerators the theorem leaves implicit
// are completed through the MacWilliams transform of the stated dual.
PredictedCode predicted_enumerator(TheoremId id, int sub, std::uint32_t q,
                                   std::uint32_t m);

// Sufficient condition for d(C^T) = d - t:
//   A_d > q^k - q^{k-t}(q-1)^t - 1  and  t <= k.
bool punctured_mindist_condition(std::size_t k, std::uint32_t q, std::size_t t,
                                 const BigInt& a_d);

} // namespace codekit

#endif
