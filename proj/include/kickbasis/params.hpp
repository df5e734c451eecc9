#pragma once

#include <vector>

#include "kickbasis/rational.hpp"
#include "kickbasis/shape.hpp"

namespace kickbasis {

// Evaluation parameters. alpha holds one value per row of the shape, beta one
// per column; both lists must be pairwise distinct. Subscripts are 1-indexed.
struct Params {
    std::vector<Rational> alpha;
    std::vector<Rational> beta;

    const Rational& a(int j) const { return alpha.at(j - 1); }
    const Rational& b(int j) const { return beta.at(j - 1); }

    // alpha_i = i, beta_j = j.
    static Params defaults(const Shape& shape);
    // Seeded distinct rationals for robustness trials; deterministic per seed.
    static Params random(const Shape& shape, unsigned seed);

    void validate(const Shape& shape) const;  // sizes and distinctness
};

}  // namespace kickbasis
