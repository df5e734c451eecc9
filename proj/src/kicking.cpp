#include "kickbasis/kicking.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kickbasis {

namespace {

int pref_pos(const std::vector<int>& pref, int row_idx) {
    for (int i = 0; i < static_cast<int>(pref.size()); ++i)
        if (pref[i] == row_idx) return i;
    return -1;
}

// One level of a phi recursion: the factors contributed while removing one
// entry. Folding happens smallest entry first so that every denominator
// factor is already present when its division runs.
struct Level {
    FactorProduct placement, num, den;
};

FactorProduct fold_levels(const std::vector<Level>& levels) {
    FactorProduct acc;
    for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
        acc.mul(it->placement);
        acc.mul(it->num);
        acc.divide_exact(it->den);
    }
    return acc;
}

FactorProduct placement_factors(const Working& w, const std::vector<int>& pref, int ri, int n) {
    int pos = pref_pos(pref, ri);
    if (pos < 0) throw std::logic_error("phi: occupied row chosen for placement");
    FactorProduct out;
    for (int i = 0; i < pos; ++i)
        out.mul(LinearFactor{Axis::X, n, w.rows[pref[i]].orig_row});
    return out;
}

// Hook brace factors (y_k - beta_{l_k}) for the entries right of position ci
// in row ri; l_k is the largest current column (1-indexed) holding an entry
// larger than k further left. The entry being removed sits at ci, so the set
// is never empty.
FactorProduct hook_row_factors(const Working& w, int ri, int ci) {
    FactorProduct out;
    const auto& cells = w.rows[ri].cells;
    for (int pk = ci + 1; pk < static_cast<int>(cells.size()); ++pk) {
        int k = cells[pk].entry;
        int lk = 0;
        for (int pos = 0; pos < pk; ++pos)
            if (cells[pos].entry > k) lk = pos + 1;
        if (lk == 0) throw std::logic_error("phi: no larger entry left of " + std::to_string(k));
        out.mul(LinearFactor{Axis::Y, k, lk});
    }
    return out;
}

}  // namespace

FactorProduct phi_two_column(const Filling& f) {
    if (!f.shape().is_two_column())
        throw std::invalid_argument("phi_two_column: shape " + f.shape().str() + " has a row longer than 2");
    Working w = Working::from(f);
    std::vector<Level> levels;
    for (int n = f.n(); n >= 1; --n) {
        Level lv;
        int ri = 0, ci = 0;
        if (!w.locate(n, &ri, &ci)) throw std::logic_error("phi: lost entry");
        auto pref = prefer_rows_two_column(occupancy(w, n));
        lv.placement = placement_factors(w, pref, ri, n);
        if (w.rows[ri].cells.size() == 2 && ci == 0) {
            // n at the left of a full row; everything else is brace case 1.
            int k = w.rows[ri].cells[1].entry;
            lv.num.mul(LinearFactor{Axis::Y, k, 1});
            bool rectangle = std::all_of(w.rows.begin(), w.rows.end(), [](const WRow& r) {
                return r.cells.size() == 2;
            });
            if (!rectangle) {
                auto pref_k = prefer_rows_two_column(occupancy(w, k));
                int pos = pref_pos(pref_k, ri);
                if (pos < 0) throw std::logic_error("phi: partner row missing from preference");
                for (int i = 0; i < static_cast<int>(pref_k.size()); ++i) {
                    if (i == pos) continue;
                    LinearFactor fac{Axis::X, k, w.rows[pref_k[i]].orig_row};
                    if (i < pos) lv.den.mul(fac);
                    else lv.num.mul(fac);
                }
            }
        }
        levels.push_back(std::move(lv));
        w.remove_and_straighten_two_column(n);
    }
    return fold_levels(levels);
}

FactorProduct phi_hook(const Filling& f) {
    if (!f.shape().is_hook())
        throw std::invalid_argument("phi_hook: shape " + f.shape().str() + " is not a hook");
    bool single_row = f.shape().is_single_row();
    Working w = Working::from(f);
    std::vector<Level> levels;
    for (int n = f.n(); n >= 1; --n) {
        Level lv;
        int ri = 0, ci = 0;
        if (!w.locate(n, &ri, &ci)) throw std::logic_error("phi: lost entry");
        auto pref = prefer_rows_hook(occupancy(w, n));
        lv.placement = placement_factors(w, pref, ri, n);
        if (single_row) {
            // Column labels are the original ones carried by the cells.
            const auto& cells = w.rows[ri].cells;
            for (int j = ci + 1; j < static_cast<int>(cells.size()); ++j)
                lv.num.mul(LinearFactor{Axis::Y, n, cells[j].orig.q + 1});
        } else if (ri > 0 || ci > 0) {
            lv.num = hook_row_factors(w, ri, ci);
        } else {
            lv.num = hook_row_factors(w, 0, 0);
            if (w.rows[0].cells.size() >= 2) {
                int K = w.rows[0].cells[1].entry;
                auto pref_K = prefer_rows_hook(occupancy(w, K));
                int pos = pref_pos(pref_K, 0);
                if (pos < 0) throw std::logic_error("phi: bottom row missing from preference");
                for (int i = 0; i < pos; ++i)
                    lv.den.mul(LinearFactor{Axis::X, K, w.rows[pref_K[i]].orig_row});
            }
            // Leg entries exceeding the whole rest of the bottom row divide
            // out their own later placement over the bottom row.
            for (int r = 1; r < static_cast<int>(w.rows.size()); ++r) {
                int j = w.rows[r].cells[0].entry;
                bool dominates = true;
                for (int q = 1; q < static_cast<int>(w.rows[0].cells.size()); ++q)
                    if (w.rows[0].cells[q].entry > j) {
                        dominates = false;
                        break;
                    }
                if (!dominates) continue;
                auto pref_j = prefer_rows_hook(occupancy(w, j));
                int pos0 = pref_pos(pref_j, 0);
                int posr = pref_pos(pref_j, r);
                if (pos0 >= 0 && posr >= 0 && pos0 < posr)
                    lv.den.mul(LinearFactor{Axis::X, j, w.rows[0].orig_row});
            }
        }
        levels.push_back(std::move(lv));
        w.remove_and_straighten_hook(n);
    }
    return fold_levels(levels);
}

FactorProduct phi(const Filling& f, Family family) {
    return family == Family::TwoColumn ? phi_two_column(f) : phi_hook(f);
}

FactorProduct phi(const Filling& f) {
    return phi(f, f.shape().default_family());
}

namespace {

// Row/column assignment per entry: row1[e] is 1-indexed, col0[e] 0-indexed.
struct Key {
    std::vector<int> row1, col0;
};

Key key_of(const Filling& f) {
    Key k;
    k.row1.assign(f.n() + 1, 0);
    k.col0.assign(f.n() + 1, 0);
    for (const Cell& c : f.shape().cells()) {
        int e = f.entry_at(c);
        k.row1[e] = c.p + 1;
        k.col0[e] = c.q;
    }
    return k;
}

std::vector<RowOcc> key_occupancy(const Shape& sh, const Key& key, int k) {
    std::vector<RowOcc> occ(sh.num_rows());
    for (int p = 0; p < sh.num_rows(); ++p)
        occ[p] = RowOcc{sh.row_len(p + 1), p + 1, 0, 0};
    int n = static_cast<int>(key.row1.size()) - 1;
    for (int e = k + 1; e <= n; ++e) {
        RowOcc& r = occ[key.row1[e] - 1];
        ++r.count;
        r.occupant = std::max(r.occupant, e);
    }
    for (RowOcc& r : occ)
        if (r.len != 2 || r.count != 1) r.occupant = 0;
    return occ;
}

bool key_less_two_column(const Shape& sh, const Key& s, const Key& t) {
    int n = static_cast<int>(s.row1.size()) - 1;
    for (int k = n; k >= 1; --k) {
        if (s.row1[k] != t.row1[k]) {
            auto pref = prefer_rows_two_column(key_occupancy(sh, s, k));
            return pref_pos(pref, s.row1[k] - 1) < pref_pos(pref, t.row1[k] - 1);
        }
        if (sh.row_len(s.row1[k]) == 2) {
            int m = 0;
            for (int e = 1; e <= n; ++e)
                if (e != k && s.row1[e] == s.row1[k]) m = e;
            if (m > k && s.col0[k] != t.col0[k]) return s.col0[k] < t.col0[k];
        }
    }
    return false;
}

bool key_less_hook(const Shape& sh, const Key& s, const Key& t) {
    int n = static_cast<int>(s.row1.size()) - 1;
    int l = 0;
    for (int k = n; k >= 1; --k)
        if (s.row1[k] != t.row1[k]) {
            l = k;
            break;
        }
    auto row_pref_wrt_l = [&]() {
        auto pref = prefer_rows_hook(key_occupancy(sh, s, l));
        return pref_pos(pref, s.row1[l] - 1) < pref_pos(pref, t.row1[l] - 1);
    };
    if (l > 0) {
        bool small_bottom = false;
        for (int e = 1; e < l && !small_bottom; ++e)
            if (s.row1[e] == 1 || t.row1[e] == 1) small_bottom = true;
        if (small_bottom) return row_pref_wrt_l();
        // Bottom sets agree and sit above l: columns were fixed first,
        // smallest entry leftmost-first.
        for (int e = 1; e <= n; ++e) {
            if (s.row1[e] != 1) continue;
            if (s.col0[e] != t.col0[e]) return s.col0[e] < t.col0[e];
        }
        return row_pref_wrt_l();
    }
    // Rows agree everywhere; only bottom columns can differ. The branch order
    // flips when the bottom row holds exactly the smallest entries.
    int m1 = sh.row_len(1);
    bool smallest_bottom = true;
    for (int e = 1; e <= m1; ++e)
        if (s.row1[e] != 1) {
            smallest_bottom = false;
            break;
        }
    if (smallest_bottom) {
        for (int e = n; e >= 1; --e) {
            if (s.row1[e] != 1) continue;
            if (s.col0[e] != t.col0[e]) return s.col0[e] > t.col0[e];
        }
    } else {
        for (int e = 1; e <= n; ++e) {
            if (s.row1[e] != 1) continue;
            if (s.col0[e] != t.col0[e]) return s.col0[e] < t.col0[e];
        }
    }
    return false;
}

}  // namespace

bool kick_less_two_column(const Filling& s, const Filling& t) {
    if (!(s.shape() == t.shape())) throw std::invalid_argument("kicking order: shape mismatch");
    return key_less_two_column(s.shape(), key_of(s), key_of(t));
}

bool kick_less_hook(const Filling& s, const Filling& t) {
    if (!(s.shape() == t.shape())) throw std::invalid_argument("kicking order: shape mismatch");
    return key_less_hook(s.shape(), key_of(s), key_of(t));
}

bool kick_less(const Filling& s, const Filling& t, Family family) {
    return family == Family::TwoColumn ? kick_less_two_column(s, t) : kick_less_hook(s, t);
}

namespace {

// Occupancy of a partial filling on the full shape; every resident entry
// (placed or pending) exceeds k because entries arrive in decreasing order.
std::vector<RowOcc> occupancy_partial(const Filling& f, int k) {
    const Shape& sh = f.shape();
    std::vector<RowOcc> occ(sh.num_rows());
    for (int p = 0; p < sh.num_rows(); ++p)
        occ[p] = RowOcc{sh.row_len(p + 1), p + 1, 0, 0};
    for (const Cell& c : sh.cells()) {
        int e = f.entry_at(c);
        if (e > k) {
            ++occ[c.p].count;
            occ[c.p].occupant = std::max(occ[c.p].occupant, e);
        }
    }
    for (int e = k + 1; e <= f.n(); ++e)
        if (auto row1 = f.pending_row_of(e)) {
            ++occ[*row1 - 1].count;
            occ[*row1 - 1].occupant = std::max(occ[*row1 - 1].occupant, e);
        }
    for (RowOcc& r : occ)
        if (r.len != 2 || r.count != 1) r.occupant = 0;
    return occ;
}

void enumerate_two_column_rec(Filling& cur, int k, std::vector<Filling>& out) {
    if (k == 0) {
        out.push_back(cur);
        return;
    }
    auto occ = occupancy_partial(cur, k);
    auto pref = prefer_rows_two_column(occ);
    for (int ridx : pref) {
        int row1 = ridx + 1;
        if (occ[ridx].len == 1) {
            cur.place(Cell{ridx, 0}, k);
            enumerate_two_column_rec(cur, k - 1, out);
            cur.clear(Cell{ridx, 0});
        } else if (occ[ridx].count == 0) {
            cur.place_pending(row1, k);
            enumerate_two_column_rec(cur, k - 1, out);
            cur.remove_pending(k);
        } else {
            int m = occ[ridx].occupant;
            cur.fix_pending(m, 1);
            cur.place(Cell{ridx, 0}, k);
            enumerate_two_column_rec(cur, k - 1, out);
            cur.clear(Cell{ridx, 0});
            cur.clear(Cell{ridx, 1});
            cur.place_pending(row1, m);
            cur.fix_pending(m, 0);
            cur.place(Cell{ridx, 1}, k);
            enumerate_two_column_rec(cur, k - 1, out);
            cur.clear(Cell{ridx, 1});
            cur.clear(Cell{ridx, 0});
            cur.place_pending(row1, m);
        }
    }
}

std::int64_t factorial(int n) {
    std::int64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

std::vector<Filling> enumerate_fillings(const Shape& shape, Family family, int cap) {
    if (shape.n() > cap)
        throw CapExceeded("enumeration needs n <= " + std::to_string(cap) + ", got n = " +
                          std::to_string(shape.n()));
    std::vector<Filling> out;
    out.reserve(factorial(shape.n()));
    if (family == Family::TwoColumn) {
        if (!shape.is_two_column())
            throw std::invalid_argument("enumerate: " + shape.str() + " is not two-column");
        Filling cur(shape);
        enumerate_two_column_rec(cur, shape.n(), out);
    } else {
        if (!shape.is_hook())
            throw std::invalid_argument("enumerate: " + shape.str() + " is not a hook");
        auto cells = shape.cells();
        std::vector<int> word(shape.n());
        std::iota(word.begin(), word.end(), 1);
        std::vector<Key> keys;
        do {
            Filling f(shape);
            for (int i = 0; i < shape.n(); ++i) f.place(cells[i], word[i]);
            out.push_back(std::move(f));
        } while (std::next_permutation(word.begin(), word.end()));
        keys.reserve(out.size());
        for (const Filling& f : out) keys.push_back(key_of(f));
        std::vector<int> order(out.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int i, int j) {
            return key_less_hook(shape, keys[i], keys[j]);
        });
        std::vector<Filling> sorted;
        sorted.reserve(out.size());
        for (int i : order) sorted.push_back(std::move(out[i]));
        out = std::move(sorted);
    }
    return out;
}

std::vector<Filling> enumerate_fillings(const Shape& shape, int cap) {
    return enumerate_fillings(shape, shape.default_family(), cap);
}

namespace {

void build_tree_rec(KickNode* node, int k) {
    if (k == 0) return;
    const Filling& cur = node->partial;
    auto occ = occupancy_partial(cur, k);
    auto pref = prefer_rows_two_column(occ);
    for (int pi = 0; pi < static_cast<int>(pref.size()); ++pi) {
        int ridx = pref[pi];
        int row1 = ridx + 1;
        FactorProduct placement;
        for (int i = 0; i < pi; ++i)
            placement.mul(LinearFactor{Axis::X, k, pref[i] + 1});
        if (occ[ridx].len == 1 || occ[ridx].count == 0) {
            auto child = std::make_unique<KickNode>();
            child->partial = cur;
            child->entry = k;
            child->edge = std::move(placement);
            if (occ[ridx].len == 1)
                child->partial.place(Cell{ridx, 0}, k);
            else
                child->partial.place_pending(row1, k);
            build_tree_rec(child.get(), k - 1);
            node->children.push_back(std::move(child));
            continue;
        }
        // k fills the row holding m: fork into the two column orders. With a
        // non-rectangular region below m, the placement label moves onto the
        // increasing branch and the decreasing branch picks up the rows less
        // preferred than row(k).
        int m = occ[ridx].occupant;
        auto occ_m = occupancy_partial(cur, m);
        bool rectangle = true;
        for (int p = 0; p < cur.shape().num_rows() && rectangle; ++p) {
            if (occ_m[p].len == 1)
                rectangle = occ_m[p].count == 1;
            else
                rectangle = occ_m[p].count == 0 || occ_m[p].count == 2;
        }
        auto inter = std::make_unique<KickNode>();
        inter->partial = cur;
        inter->partial.place_pending(row1, k);
        inter->entry = k;
        if (rectangle) inter->edge = placement;

        auto left = std::make_unique<KickNode>();
        left->partial = cur;
        left->partial.fix_pending(m, 1);
        left->partial.place(Cell{ridx, 0}, k);
        left->entry = k;
        if (!rectangle) left->edge = placement;

        auto right = std::make_unique<KickNode>();
        right->partial = cur;
        right->partial.fix_pending(m, 0);
        right->partial.place(Cell{ridx, 1}, k);
        right->entry = k;
        right->edge.mul(LinearFactor{Axis::Y, k, 1});
        if (!rectangle)
            for (int i = pi + 1; i < static_cast<int>(pref.size()); ++i)
                right->edge.mul(LinearFactor{Axis::X, k, pref[i] + 1});

        build_tree_rec(left.get(), k - 1);
        build_tree_rec(right.get(), k - 1);
        inter->children.push_back(std::move(left));
        inter->children.push_back(std::move(right));
        node->children.push_back(std::move(inter));
    }
}

void collect_leaves(const KickNode* node, FactorProduct acc, std::vector<KickTree::Leaf>& out) {
    acc.mul(node->edge);
    if (node->is_leaf()) {
        out.push_back(KickTree::Leaf{node->partial, std::move(acc)});
        return;
    }
    for (const auto& child : node->children) collect_leaves(child.get(), acc, out);
}

void render(const KickNode* node, int depth, std::string& out) {
    out.append(2 * depth, ' ');
    out += node->partial.str();
    if (node->entry) {
        out += "  [";
        out += node->edge.str();
        out += "]";
    }
    out += '\n';
    for (const auto& child : node->children) render(child.get(), depth + 1, out);
}

}  // namespace

KickTree build_kicking_tree(const Shape& shape, int cap) {
    if (!shape.is_two_column())
        throw std::invalid_argument("kicking tree: " + shape.str() + " is not two-column");
    if (shape.n() > cap)
        throw CapExceeded("kicking tree needs n <= " + std::to_string(cap) + ", got n = " +
                          std::to_string(shape.n()));
    KickTree tree;
    tree.root = std::make_unique<KickNode>();
    tree.root->partial = Filling(shape);
    tree.root->entry = 0;
    build_tree_rec(tree.root.get(), shape.n());
    return tree;
}

std::vector<KickTree::Leaf> KickTree::leaves() const {
    std::vector<Leaf> out;
    collect_leaves(root.get(), FactorProduct{}, out);
    return out;
}

std::string tree_str(const KickTree& tree) {
    std::string out;
    render(tree.root.get(), 0, out);
    return out;
}

}  // namespace kickbasis
