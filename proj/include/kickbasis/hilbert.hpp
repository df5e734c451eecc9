#pragma once

#include <map>
#include <string>
#include <vector>

#include "kickbasis/qtpoly.hpp"
#include "kickbasis/shape.hpp"

namespace kickbasis {

// F_mu(q,t) = sum over standard fillings of t^(x-degree) q^(y-degree) of the
// basis polynomial. Symmetric in q,t at (n(mu), n(mu')) with top coefficient 1
// and value n! at q=t=1.
QTPoly degree_polynomial(const Shape& shape, Family family, int cap = 9);
QTPoly degree_polynomial(const Shape& shape, int cap = 9);

// Top degrees (N, M) = (n(mu), n(mu')) used for the symmetry check.
std::pair<int, int> top_degrees(const Shape& shape);

struct SymmetryReport {
    bool pass = false;
    int N = 0, M = 0;                    // expected (t, q) top degrees
    int actual_t = -1, actual_q = -1;    // observed max exponents
};

// Passes iff reversing both variables at (N, M) fixes f and the observed max
// exponents equal (N, M) exactly.
SymmetryReport symmetry_report(const QTPoly& f, int N, int M);

struct JKey {
    int a, b, m;
    auto operator<=>(const JKey&) const = default;
};

// Refined family for the two-column shape (2^b, 1^(a-b)): J^m restricts the
// degree sum to fillings whose forced top block holds n, n-1, ..., n-m+1 in
// the left cells of rows b, b-1, ..., b-m+1, divided exactly by q^m.
// J^0 equals F_mu. Zero unless a >= b >= m >= 0.
QTPoly j_enumerated(int a, int b, int m, int cap = 9);

// Same values by recurrence; two independent routes.
QTPoly j_recurrence_first(int a, int b, int m);
QTPoly j_recurrence_second(int a, int b, int m);

// J^m is divisible by [a-b]_t! [b-m]_t! [m]_t!; the quotient Jt^m.
QTPoly j_reduced(const QTPoly& j, int a, int b, int m);
// Top degrees of J^m: (C(a-m,2) + C(b,2), b-m).
std::pair<int, int> j_top_degrees(int a, int b, int m);
// Top degrees of Jt^m: ((a-1)(b-m) - C(b-m,2), b-m).
std::pair<int, int> j_reduced_top_degrees(int a, int b, int m);

// All J^m for a+b <= sum_cap via one recurrence, keyed by (a,b,m).
std::map<JKey, QTPoly> j_table(int sum_cap);

}  // namespace kickbasis
