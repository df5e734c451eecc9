#include "kickbasis/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace kickbasis {

void MultiPoly::add_term(const std::vector<int>& exps, const Rational& c) {
    if (static_cast<int>(exps.size()) != 2 * n_) {
        throw std::invalid_argument("exponent vector has the wrong length");
    }
    if (c == 0) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly r(n_);
    std::vector<int> e(2 * n_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < 2 * n_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
    MultiPoly r(n_);
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

MultiPoly MultiPoly::d_dx(int i) const {
    MultiPoly r(n_);
    const int idx = i - 1;
    std::vector<int> e;
    for (const auto& [exps, c] : terms_) {
        if (exps[idx] == 0) continue;
        e = exps;
        --e[idx];
        r.add_term(e, c * exps[idx]);
    }
    return r;
}

MultiPoly MultiPoly::d_dy(int i) const {
    MultiPoly r(n_);
    const int idx = n_ + i - 1;
    std::vector<int> e;
    for (const auto& [exps, c] : terms_) {
        if (exps[idx] == 0) continue;
        e = exps;
        --e[idx];
        r.add_term(e, c * exps[idx]);
    }
    return r;
}

std::pair<int, int> MultiPoly::bidegree_of_leading() const {
    if (terms_.empty()) return {-1, -1};
    const auto& e = terms_.rbegin()->first;
    const int dx = std::accumulate(e.begin(), e.begin() + n_, 0);
    const int dy = std::accumulate(e.begin() + n_, e.end(), 0);
    return {dx, dy};
}

MultiPoly delta_determinant(const Shape& shape, int cap) {
    const int n = shape.n();
    if (n > cap) {
        throw CapExceeded("shape determinant for n=" + std::to_string(n) +
                          " exceeds the oracle cap of " + std::to_string(cap));
    }
    const auto cells = shape.cells();
    MultiPoly d(n);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> e(2 * n);
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (perm[i] > perm[j]) ++inversions;
            }
        }
        std::fill(e.begin(), e.end(), 0);
        for (int r = 0; r < n; ++r) {
            e[perm[r]] += cells[r].p;
            e[n + perm[r]] += cells[r].q;
        }
        d.add_term(e, (inversions % 2 == 0) ? Rational(1) : Rational(-1));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return d;
}

MultiPoly expand(const FactorProduct& fp, const Params& params, int n) {
    MultiPoly acc(n);
    acc.add_term(std::vector<int>(2 * n, 0), Rational(1));
    for (const auto& f : fp.factors()) {
        MultiPoly lin(n);
        std::vector<int> e(2 * n, 0);
        e[(f.axis == Axis::X) ? (f.var - 1) : (n + f.var - 1)] = 1;
        lin.add_term(e, Rational(1));
        std::fill(e.begin(), e.end(), 0);
        lin.add_term(e, -((f.axis == Axis::X) ? params.a(f.pidx)
                                              : params.b(f.pidx)));
        acc = acc * lin;
    }
    return acc;
}

namespace {

// Pivot basis for one bidegree: each entry is monic at its key monomial and
// the keys are pairwise distinct, so insertion is plain elimination against
// the stored leading terms.
using PivotBasis = std::map<std::vector<int>, MultiPoly>;

bool insert_reduced(PivotBasis& basis, MultiPoly p) {
    while (!p.is_zero()) {
        const auto& lead = p.terms().rbegin()->first;
        const Rational c = p.terms().rbegin()->second;
        auto it = basis.find(lead);
        if (it == basis.end()) {
            basis.emplace(lead, p.scaled(Rational(1) / c));
            return true;
        }
        p += it->second.scaled(-c);
    }
    return false;
}

}  // namespace

QTPoly harmonic_hilbert(const Shape& shape, int cap) {
    const int n = shape.n();
    if (n > cap) {
        throw CapExceeded("harmonic closure for n=" + std::to_string(n) +
                          " exceeds the oracle cap of " + std::to_string(cap));
    }
    std::map<std::pair<int, int>, PivotBasis> graded;
    const std::pair<int, int> top{shape.n_mu(), shape.n_mu_conj()};
    insert_reduced(graded[top], delta_determinant(shape, cap));
    // Derivatives drop the total degree by exactly one, so sweeping levels
    // downward visits (i+1,j) and (i,j+1) before (i,j) and every component is
    // complete before its own derivatives are taken.
    for (int level = top.first + top.second; level > 0; --level) {
        std::vector<std::pair<int, int>> keys;
        for (const auto& [bideg, basis] : graded) {
            if (bideg.first + bideg.second == level && !basis.empty()) {
                keys.push_back(bideg);
            }
        }
        for (const auto& [i, j] : keys) {
            const PivotBasis& basis = graded[{i, j}];
            for (const auto& [lead, p] : basis) {
                for (int v = 1; v <= n; ++v) {
                    if (i > 0) {
                        MultiPoly d = p.d_dx(v);
                        if (!d.is_zero()) {
                            insert_reduced(graded[{i - 1, j}], std::move(d));
                        }
                    }
                    if (j > 0) {
                        MultiPoly d = p.d_dy(v);
                        if (!d.is_zero()) {
                            insert_reduced(graded[{i, j - 1}], std::move(d));
                        }
                    }
                }
            }
        }
    }
    QTPoly h;
    for (const auto& [bideg, basis] : graded) {
        if (!basis.empty()) {
            h += QTPoly::term(static_cast<std::int64_t>(basis.size()),
                              bideg.first, bideg.second);
        }
    }
    return h;
}

}  // namespace kickbasis
