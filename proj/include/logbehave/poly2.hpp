#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "logbehave/quad.hpp"

namespace logbehave {

/// Sparse bivariate polynomial over Quad in (n, k).
class PolyQ2 {
public:
    using Key = std::pair<int, int>;  // (deg n, deg k)

    PolyQ2() = default;
    PolyQ2(Quad c) { add(0, 0, std::move(c)); }  // NOLINT
    PolyQ2(long c) : PolyQ2(Quad(c)) {}          // NOLINT

    static PolyQ2 n() { PolyQ2 p; p.add(1, 0, Quad(1)); return p; }
    static PolyQ2 k() { PolyQ2 p; p.add(0, 1, Quad(1)); return p; }

    void add(int i, int j, Quad c) {
        if (c.is_zero()) return;
        auto key = Key{i, j};
        auto it = c_.find(key);
        if (it == c_.end()) {
            c_.emplace(key, std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    bool is_zero() const { return c_.empty(); }
    const std::map<Key, Quad>& terms() const { return c_; }

    PolyQ2 operator-() const {
        PolyQ2 r;
        for (const auto& [key, c] : c_) r.c_.emplace(key, -c);
        return r;
    }
    friend PolyQ2 operator+(const PolyQ2& p, const PolyQ2& q) {
        PolyQ2 r = p;
        for (const auto& [key, c] : q.c_) r.add(key.first, key.second, c);
        return r;
    }
    friend PolyQ2 operator-(const PolyQ2& p, const PolyQ2& q) {
        return p + (-q);
    }
    friend PolyQ2 operator*(const PolyQ2& p, const PolyQ2& q) {
        PolyQ2 r;
        for (const auto& [a, ca] : p.c_)
            for (const auto& [b, cb] : q.c_)
                r.add(a.first + b.first, a.second + b.second, ca * cb);
        return r;
    }
    PolyQ2& operator+=(const PolyQ2& o) { return *this = *this + o; }
    PolyQ2& operator-=(const PolyQ2& o) { return *this = *this - o; }
    PolyQ2& operator*=(const PolyQ2& o) { return *this = *this * o; }
    friend bool operator==(const PolyQ2& p, const PolyQ2& q) {
        return (p - q).is_zero();
    }

    Quad operator()(const Quad& nv, const Quad& kv) const {
        Quad r(0);
        for (const auto& [key, c] : c_) {
            Quad t = c;
            for (int i = 0; i < key.first; ++i) t *= nv;
            for (int j = 0; j < key.second; ++j) t *= kv;
            r += t;
        }
        return r;
    }

    PolyQ2 d_dn() const {
        PolyQ2 r;
        for (const auto& [key, c] : c_)
            if (key.first > 0)
                r.add(key.first - 1, key.second, Quad(Rat(key.first)) * c);
        return r;
    }
    PolyQ2 d_dk() const {
        PolyQ2 r;
        for (const auto& [key, c] : c_)
            if (key.second > 0)
                r.add(key.first, key.second - 1, Quad(Rat(key.second)) * c);
        return r;
    }

    /// p(n + dn, k + dk), exact binomial expansion.
    PolyQ2 shifted(const Rat& dn, const Rat& dk) const {
        PolyQ2 r;
        for (const auto& [key, c] : c_) {
            // expand (n+dn)^i (k+dk)^j
            for (int a = 0; a <= key.first; ++a)
                for (int b = 0; b <= key.second; ++b) {
                    Rat f = Rat(binomial(Int(key.first), a)) * dn.pow(key.first - a) *
                            Rat(binomial(Int(key.second), b)) * dk.pow(key.second - b);
                    r.add(a, b, Quad(f) * c);
                }
        }
        return r;
    }

    /// All coefficients >= 0 (and not all zero unless allow_zero).
    bool nonneg_coeffs() const {
        for (const auto& [key, c] : c_)
            if (c.sign() < 0) return false;
        return true;
    }
    bool nonpos_coeffs() const {
        for (const auto& [key, c] : c_)
            if (c.sign() > 0) return false;
        return true;
    }

    std::string str() const;

private:
    std::map<Key, Quad> c_;
};

inline std::string PolyQ2::str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (const auto& [key, c] : c_) {
        if (!s.empty()) s += " + ";
        s += c.str();
        if (key.first) s += "*n" + (key.first > 1 ? "^" + std::to_string(key.first) : "");
        if (key.second) s += "*k" + (key.second > 1 ? "^" + std::to_string(key.second) : "");
    }
    return s;
}

/// Bivariate rational function; kept as an unreduced pair (bivariate gcd is
/// out of scope; evaluation and derivatives do not need it).
struct RatFun2 {
    PolyQ2 num = PolyQ2(Quad(0));
    PolyQ2 den = PolyQ2(Quad(1));

    RatFun2() = default;
    RatFun2(PolyQ2 n) : num(std::move(n)) {}  // NOLINT
    RatFun2(PolyQ2 n, PolyQ2 d) : num(std::move(n)), den(std::move(d)) {
        if (den.is_zero()) throw std::domain_error("RatFun2: zero denominator");
    }

    Quad operator()(const Quad& nv, const Quad& kv) const {
        Quad d = den(nv, kv);
        if (d.is_zero()) throw std::domain_error("RatFun2: pole");
        return num(nv, kv) / d;
    }

    RatFun2 d_dk() const {
        return RatFun2(num.d_dk() * den - num * den.d_dk(), den * den);
    }
    RatFun2 shifted(const Rat& dn, const Rat& dk) const {
        return RatFun2(num.shifted(dn, dk), den.shifted(dn, dk));
    }
};

}  // namespace logbehave
