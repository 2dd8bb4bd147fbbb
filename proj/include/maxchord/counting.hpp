#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace maxchord {

// All sequence values are exact integers; the g=12 entry of the full count
// already has 27 digits. No floating point anywhere in this module.
using CountBig = boost::multiprecision::cpp_int;

// Quotient that must leave no remainder; a nonzero remainder signals a bug
// in a formula, never a data condition.
CountBig exact_div(const CountBig& num, const CountBig& den, const char* what);

CountBig factorial(unsigned m);

// C(n,k); zero when k < 0 or k > n.
CountBig binomial(unsigned n, long long k);

unsigned long long totient(unsigned long long q);

// Labelled maximal diagrams with 2g chords: (4g)! / (4^g (2g+1)!).
CountBig mu(unsigned g);

// Maximal diagrams with 2g chords up to rotations (Burnside over the cyclic
// group, folded into a divisor sum).
CountBig d_star(unsigned g);

// Diagrams fixed by a type II axis (through two opposite arc midpoints);
// equals the number of rooted one-face one-vertex maps with g edges on
// orientable plus non-orientable surfaces. Four-term recursion, memoized.
CountBig d_parallel(unsigned g);

// Diagrams fixed by a type I axis (through two opposite points):
// (2g-1) * d_parallel(g-1), the factor counting horizontal chord slots.
CountBig d_vertical(unsigned g);

// Maximal diagrams up to all dihedral symmetries:
// (2 d_star + d_vertical + d_parallel) / 4.
CountBig d_circle(unsigned g);

// (2n-1)!!, the number of chord diagrams with n chords.
CountBig double_factorial_odd(unsigned n);

// Catalan number, the count of genus-0 diagrams with n chords.
CountBig catalan(unsigned n);

} // namespace maxchord
