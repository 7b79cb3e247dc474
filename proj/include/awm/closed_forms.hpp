#pragma once

#include <string>
#include <vector>

#include "awm/arith.hpp"

namespace awm {

enum class FormulaId {
  DoubleSum,
  TripleSum,
  D0,
  CD0,
  BQoverA,
  BnegA,
  SymmCDsum,
  SymmTriple,
  W87,
  W87AsqQ,
  Main,
  Main2,
  Q0,
  Flip,
  AntiSymABBA,
  AntiSymABAB,
  Tau2n,
  OPbar
};
const char* formula_name(FormulaId id);

enum class TwoParam { CD0, BQoverA, BnegA };
enum class Symm { CDsum, Triple };
enum class AntiSym { ABBA, ABAB };
enum class ABinding { Free, A_is_a, SqrtQ };

// All mu_* functions return the moment itself (no 2^n or 4^n prefactor).
RatFunc mu_double_sum(long n);
RatFunc mu_triple_sum(long n);
// m-indexed summands of 2^n mu_n, for term-by-term comparisons
std::vector<RatFunc> triple_sum_terms(long n);
RatFunc mu_d0(long n);                      // mu_n(a,b,c,0;q)
RatFunc mu_two_param(TwoParam v, long n);   // mu_n(a,b,0,0), (a,q/a,0,0), (a,-a,0,0)
RatFunc mu_symmetric(Symm v, long n);       // mu_{2n}(a,-a,c,-c;q)
MPoly tau_2n(long n);                       // throws if the quotient is not a polynomial

// (aA,bA,cA,dA;q)_m ews(m) as the finite j-sum; A is usually the variable A
RatFunc w87_finite_sum(long m, const MPoly& A);
RatFunc ews(long m, const MPoly& A);
MPoly w87_poly_sum(long m, const MPoly& A);  // the four-phi-three side
RatFunc mu_8w7(ABinding b, long n);         // for SqrtQ the result is in a,b,c,d,A with q = A^2
std::vector<RatFunc> w87_terms(ABinding b, long n);

MPoly op_bar(long n, long m);
RatFunc mu_main(long n);
RatFunc mu_main2(long n);
RatFunc mu_q0(long n);                      // mu_n(a,b,c,d;0)
RatFunc mu_flip(long n);                 // mu_n(a,b,q/a,q/b;q)
RatFunc mu_antisym(AntiSym v, long n);      // mu_{2n}(a,b,-b,-a) or mu_{2n}(a,b,-a,-b)

}  // namespace awm
