#include "kickbasis/linfactor.hpp"

#include <algorithm>

namespace kickbasis {

std::string LinearFactor::str() const {
    std::string out = "(";
    out += (axis == Axis::X) ? 'x' : 'y';
    out += std::to_string(var);
    out += (axis == Axis::X) ? "-a" : "-b";
    out += std::to_string(pidx);
    out += ')';
    return out;
}

void FactorProduct::mul(const LinearFactor& f) {
    fs_.insert(std::lower_bound(fs_.begin(), fs_.end(), f), f);
}

void FactorProduct::mul(const FactorProduct& other) {
    for (const LinearFactor& f : other.fs_) mul(f);
}

void FactorProduct::divide_exact(const FactorProduct& den) {
    for (const LinearFactor& f : den.fs_) {
        auto it = std::lower_bound(fs_.begin(), fs_.end(), f);
        if (it == fs_.end() || !(*it == f))
            throw CancellationError("factor " + f.str() + " does not cancel");
        fs_.erase(it);
    }
}

std::pair<int, int> FactorProduct::bidegree() const {
    int dx = 0, dy = 0;
    for (const LinearFactor& f : fs_)
        (f.axis == Axis::X ? dx : dy) += 1;
    return {dx, dy};
}

Rational FactorProduct::evaluate(const OrbitPoint& pt, const Params& params) const {
    Rational v(1);
    for (const LinearFactor& f : fs_) {
        if (f.axis == Axis::X)
            v *= pt.xv(f.var) - params.a(f.pidx);
        else
            v *= pt.yv(f.var) - params.b(f.pidx);
        if (v == 0) return v;
    }
    return v;
}

std::string FactorProduct::str() const {
    if (fs_.empty()) return "()";
    std::string out;
    for (const LinearFactor& f : fs_) out += f.str();
    return out;
}

}  // namespace kickbasis
