#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kickbasis/filling.hpp"
#include "kickbasis/linfactor.hpp"
#include "kickbasis/params.hpp"
#include "kickbasis/shape.hpp"

namespace kickbasis {

// Evaluation matrix M[i][j] = phi_{S_i}(p_{S_j}) over the fillings in kicking
// order. Exact rationals. Guarded by the matrix cap (default n! <= 720).
std::vector<std::vector<Rational>> evaluation_matrix(
    const Shape& shape, Family family, const Params& params,
    std::int64_t max_entries = 720);

struct CertifyReport {
    bool nonsingular = false;
    // Witness for a singular verdict: kernel vector v with M v = 0, v != 0.
    std::vector<Rational> kernel;
};

// Exact nonsingularity verdict for an arbitrary rational matrix.
CertifyReport certify_nonsingular_matrix(
    const std::vector<std::vector<Rational>>& m);

// Verdict for the evaluation matrix of a shape.
CertifyReport certify_nonsingular(const Shape& shape, Family family,
                                  const Params& params,
                                  std::int64_t max_entries = 720);

// Hook evaluation matrices are upper triangular in kicking order. Checks
// every below-diagonal entry is zero and every diagonal entry nonzero;
// returns an offending (i, j) pair if any, else nullopt.
std::optional<std::pair<int, int>> check_triangular_violation(
    const std::vector<std::vector<Rational>>& m);

// Coarse zero pattern shared by both families: fillings grouped by the row
// of n, blocks ordered by the row preference on the empty shape; entries
// below-block must vanish. Returns an offending (i, j) or nullopt.
std::optional<std::pair<int, int>> check_block_triangular_by_largest(
    const Shape& shape, Family family, const Params& params,
    std::int64_t max_entries = 720);

}  // namespace kickbasis
