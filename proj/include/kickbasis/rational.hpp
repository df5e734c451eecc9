#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace kickbasis {

using Rational = mpq_class;

// Parses "p", "-p", or "p/q" with q > 0 after canonicalization.
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    mpq_class r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

inline std::string rational_str(const Rational& r) {
    return r.get_str();
}

}  // namespace kickbasis
