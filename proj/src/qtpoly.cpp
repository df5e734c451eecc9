#include "kickbasis/qtpoly.hpp"

#include <cstdlib>

namespace kickbasis {

QTPoly::QTPoly(std::int64_t c) {
    if (c != 0) terms_[{0, 0}] = c;
}

QTPoly QTPoly::term(std::int64_t c, int tdeg, int qdeg) {
    QTPoly p;
    if (tdeg < 0 || qdeg < 0) throw DegreeOverflow("negative exponent");
    if (c != 0) p.terms_[{tdeg, qdeg}] = c;
    return p;
}

QTPoly& QTPoly::operator+=(const QTPoly& o) {
    for (const auto& [deg, c] : o.terms_) {
        auto it = terms_.find(deg);
        if (it == terms_.end()) {
            terms_[deg] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

QTPoly& QTPoly::operator-=(const QTPoly& o) {
    for (const auto& [deg, c] : o.terms_) {
        auto it = terms_.find(deg);
        if (it == terms_.end()) {
            terms_[deg] = -c;
        } else {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

QTPoly QTPoly::operator+(const QTPoly& o) const {
    QTPoly r = *this;
    r += o;
    return r;
}

QTPoly QTPoly::operator-(const QTPoly& o) const {
    QTPoly r = *this;
    r -= o;
    return r;
}

QTPoly QTPoly::operator*(const QTPoly& o) const {
    QTPoly r;
    for (const auto& [d1, c1] : terms_)
        for (const auto& [d2, c2] : o.terms_) {
            std::pair<int, int> d{d1.first + d2.first, d1.second + d2.second};
            auto it = r.terms_.find(d);
            if (it == r.terms_.end()) {
                r.terms_[d] = c1 * c2;
            } else {
                it->second += c1 * c2;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    return r;
}

std::int64_t QTPoly::coeff(int tdeg, int qdeg) const {
    auto it = terms_.find({tdeg, qdeg});
    return it == terms_.end() ? 0 : it->second;
}

std::pair<int, int> QTPoly::max_degrees() const {
    int mt = -1, mq = -1;
    for (const auto& [deg, c] : terms_) {
        if (deg.first > mt) mt = deg.first;
        if (deg.second > mq) mq = deg.second;
    }
    return {mt, mq};
}

QTPoly QTPoly::divide_exact(const QTPoly& d) const {
    if (d.is_zero()) throw NonDivisible("division by zero polynomial");
    // Eliminate against the divisor's lex-largest term. Division is exact
    // whenever the remainder reaches zero; a leading term not divisible by
    // the divisor's leading term proves non-divisibility.
    auto lead = std::prev(d.terms_.end());
    QTPoly rem = *this, quot;
    while (!rem.is_zero()) {
        auto rl = std::prev(rem.terms_.end());
        int dt = rl->first.first - lead->first.first;
        int dq = rl->first.second - lead->first.second;
        if (dt < 0 || dq < 0 || rl->second % lead->second != 0)
            throw NonDivisible("polynomial division leaves a remainder");
        QTPoly piece = term(rl->second / lead->second, dt, dq);
        quot += piece;
        rem -= piece * d;
    }
    return quot;
}

QTPoly QTPoly::shift_down_q(int m) const {
    QTPoly r;
    for (const auto& [deg, c] : terms_) {
        if (deg.second < m) throw NonExactDivision("not divisible by q^" + std::to_string(m));
        r.terms_[{deg.first, deg.second - m}] = c;
    }
    return r;
}

QTPoly QTPoly::qt_reverse(int N, int M) const {
    QTPoly r;
    for (const auto& [deg, c] : terms_) {
        if (deg.first > N || deg.second > M)
            throw DegreeOverflow("term beyond stated degrees (" + std::to_string(N) + "," +
                                 std::to_string(M) + ")");
        r.terms_[{N - deg.first, M - deg.second}] = c;
    }
    return r;
}

QTPoly QTPoly::swap_qt() const {
    QTPoly r;
    for (const auto& [deg, c] : terms_) r.terms_[{deg.second, deg.first}] = c;
    return r;
}

std::int64_t QTPoly::eval_one_one() const {
    std::int64_t s = 0;
    for (const auto& [deg, c] : terms_) s += c;
    return s;
}

namespace {

std::string power_str(char v, int e) {
    if (e == 0) return "";
    std::string s(1, v);
    if (e > 1) s += "^" + std::to_string(e);
    return s;
}

}  // namespace

std::string QTPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [deg, c] : terms_) {
        std::int64_t mag = c < 0 ? -c : c;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::string qs = power_str('q', deg.second);
        std::string ts = power_str('t', deg.first);
        std::string body;
        if (mag != 1 || (qs.empty() && ts.empty())) body = std::to_string(mag);
        for (const std::string& part : {qs, ts}) {
            if (part.empty()) continue;
            if (!body.empty()) body += "*";
            body += part;
        }
        out += body;
    }
    return out;
}

std::string QTPoly::json() const {
    std::string out = "{\"terms\":[";
    bool first = true;
    for (const auto& [deg, c] : terms_) {
        if (!first) out += ",";
        first = false;
        out += "{\"t\":" + std::to_string(deg.first) + ",\"q\":" + std::to_string(deg.second) +
               ",\"c\":" + std::to_string(c) + "}";
    }
    out += "]}";
    return out;
}

QTPoly t_int(int m) {
    QTPoly p;
    for (int i = 0; i < m; ++i) p += QTPoly::term(1, i, 0);
    return p;
}

QTPoly t_fact(int m) {
    QTPoly p(1);
    for (int i = 1; i <= m; ++i) p = p * t_int(i);
    return p;
}

}  // namespace kickbasis
