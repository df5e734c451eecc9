#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include "kickbasis/filling.hpp"
#include "kickbasis/params.hpp"

namespace kickbasis {

// Requested cancellation does not divide the product exactly.
struct CancellationError : std::runtime_error {
    explicit CancellationError(const std::string& what) : std::runtime_error(what) {}
};

enum class Axis { X, Y };

// (x_var - alpha_pidx) when axis==X, (y_var - beta_pidx) when axis==Y.
// Parameters stay symbolic; evaluation substitutes a concrete Params.
struct LinearFactor {
    Axis axis;
    int var;   // variable subscript, 1..n
    int pidx;  // parameter subscript, 1-indexed
    auto operator<=>(const LinearFactor&) const = default;
    std::string str() const;
};

// Multiset product of linear factors. The empty product is 1.
class FactorProduct {
  public:
    FactorProduct() = default;

    void mul(const LinearFactor& f);
    void mul(const FactorProduct& other);
    // Removes den's factors from this multiset; throws CancellationError if
    // some factor of den is missing.
    void divide_exact(const FactorProduct& den);

    int size() const { return static_cast<int>(fs_.size()); }
    const std::vector<LinearFactor>& factors() const { return fs_; }
    // (x-degree, y-degree) of the product.
    std::pair<int, int> bidegree() const;

    Rational evaluate(const OrbitPoint& pt, const Params& params) const;

    std::string str() const;  // "(x3-a1)(y1-b1)"; "()" when empty
    bool operator==(const FactorProduct&) const = default;

  private:
    std::vector<LinearFactor> fs_;  // kept sorted
};

}  // namespace kickbasis
