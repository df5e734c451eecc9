#pragma once

#include <map>
#include <string>
#include <vector>

#include "kickbasis/linfactor.hpp"
#include "kickbasis/qtpoly.hpp"
#include "kickbasis/shape.hpp"

namespace kickbasis {

// Dense multivariate polynomial in x_1..x_n, y_1..y_n over the rationals.
// Exponent vector layout: [x_1..x_n, y_1..y_n]. Slow by design; this is the
// independent route the fast code is checked against.
class MultiPoly {
  public:
    explicit MultiPoly(int n) : n_(n) {}
    int n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const std::vector<int>& exps, const Rational& c);
    MultiPoly& operator+=(const MultiPoly&);
    MultiPoly operator*(const MultiPoly&) const;
    MultiPoly scaled(const Rational& c) const;
    bool operator==(const MultiPoly&) const = default;

    MultiPoly d_dx(int i) const;  // partial derivative, i = 1..n
    MultiPoly d_dy(int i) const;

    // (total x-degree, total y-degree); every term of the polynomials this
    // oracle handles is bihomogeneous per use site, asserted by callers.
    std::pair<int, int> bidegree_of_leading() const;
    int term_count() const { return static_cast<int>(terms_.size()); }
    const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

  private:
    int n_;
    std::map<std::vector<int>, Rational> terms_;
};

// The shape determinant det(x_c^(p_r) y_c^(q_r)) over cells (p,q), expanded
// as a signed sum of n! monomials. Guarded by the oracle cap.
MultiPoly delta_determinant(const Shape& shape, int cap = 5);

// Expands a factor product into the oracle representation, substituting the
// concrete parameter values for the symbolic constants.
MultiPoly expand(const FactorProduct& fp, const Params& params, int n);

// Hilbert series of the span of all partial derivatives of the shape
// determinant, graded by bidegree: sum over (i,j) of dim t^i q^j.
// Independent of the basis machinery. Guarded by the oracle cap.
QTPoly harmonic_hilbert(const Shape& shape, int cap = 5);

}  // namespace kickbasis
