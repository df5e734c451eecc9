#pragma once

#include <memory>
#include <string>
#include <vector>

#include "kickbasis/filling.hpp"
#include "kickbasis/linfactor.hpp"
#include "kickbasis/qtpoly.hpp"
#include "kickbasis/shape.hpp"

namespace kickbasis {

// Basis polynomial of a standard filling, as a product of linear factors.
// Defined for all column lengths <= 2 (two-column route) and for hooks.
// Every brace denominator must cancel exactly; CancellationError otherwise.
FactorProduct phi_two_column(const Filling& f);
FactorProduct phi_hook(const Filling& f);
FactorProduct phi(const Filling& f, Family family);
FactorProduct phi(const Filling& f);  // family = shape().default_family()

// Kicking order on standard fillings of one shape: S precedes T when
// kick_less(S, T). Strict total order.
bool kick_less_two_column(const Filling& s, const Filling& t);
bool kick_less_hook(const Filling& s, const Filling& t);
bool kick_less(const Filling& s, const Filling& t, Family family);

// All standard fillings of the shape in kicking order. Throws CapExceeded
// when n() > cap.
std::vector<Filling> enumerate_fillings(const Shape& shape, Family family,
                                        int cap = 9);
std::vector<Filling> enumerate_fillings(const Shape& shape, int cap = 9);

// Kicking tree for a two-column shape. Entries are fixed from n down to 1;
// each node branches over the admissible rows for its entry, and completing a
// length-2 row forks into the two column orders. Edge labels multiply along a
// root-to-leaf path into the leaf's basis polynomial.
struct KickNode {
    Filling partial;                 // state after this node's placement
    int entry;                       // entry placed here; 0 at the root
    FactorProduct edge;              // label on the edge into this node
    std::vector<std::unique_ptr<KickNode>> children;
    bool is_leaf() const { return children.empty(); }
};
struct KickTree {
    std::unique_ptr<KickNode> root;
    // Leaves in depth-first order, each with its accumulated product.
    struct Leaf {
        Filling filling;
        FactorProduct product;
    };
    std::vector<Leaf> leaves() const;
};
KickTree build_kicking_tree(const Shape& shape, int cap = 9);

// Render of the tree, one node per line, children indented.
std::string tree_str(const KickTree& tree);

}  // namespace kickbasis
