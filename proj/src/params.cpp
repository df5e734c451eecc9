#include "kickbasis/params.hpp"

#include <random>
#include <set>
#include <stdexcept>

namespace kickbasis {

Params Params::defaults(const Shape& shape) {
    Params p;
    for (int i = 1; i <= shape.num_rows(); ++i) p.alpha.emplace_back(i);
    for (int j = 1; j <= shape.row_len(1); ++j) p.beta.emplace_back(j);
    return p;
}

Params Params::random(const Shape& shape, unsigned seed) {
    // Small random rationals, deterministic per seed, rejection-sampled to
    // keep each list pairwise distinct.
    std::mt19937 gen(seed);
    std::uniform_int_distribution<int> num(-40, 40);
    std::uniform_int_distribution<int> den(1, 12);
    auto draw_list = [&](int count) {
        std::vector<Rational> out;
        std::set<Rational> seen;
        while (static_cast<int>(out.size()) < count) {
            Rational r(num(gen), den(gen));
            r.canonicalize();
            if (seen.insert(r).second) out.push_back(r);
        }
        return out;
    };
    Params p;
    p.alpha = draw_list(shape.num_rows());
    p.beta = draw_list(shape.row_len(1));
    return p;
}

void Params::validate(const Shape& shape) const {
    if (static_cast<int>(alpha.size()) != shape.num_rows())
        throw std::invalid_argument("params: alpha needs one value per row");
    if (static_cast<int>(beta.size()) != shape.row_len(1))
        throw std::invalid_argument("params: beta needs one value per column");
    auto distinct = [](const std::vector<Rational>& v) {
        std::set<Rational> s(v.begin(), v.end());
        return s.size() == v.size();
    };
    if (!distinct(alpha)) throw std::invalid_argument("params: alpha values must be distinct");
    if (!distinct(beta)) throw std::invalid_argument("params: beta values must be distinct");
}

}  // namespace kickbasis
