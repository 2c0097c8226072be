#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "logbehave/quad.hpp"

namespace logbehave {

/// Dense univariate polynomial over Quad, coefficient i = coefficient of x^i.
/// Trailing zero coefficients are trimmed; the zero polynomial has no
/// coefficients. All coefficients must live in one quadratic field.
class PolyQ {
public:
    PolyQ() = default;
    PolyQ(Quad c) { if (!c.is_zero()) c_.push_back(std::move(c)); }  // NOLINT
    PolyQ(Rat c) : PolyQ(Quad(std::move(c))) {}                      // NOLINT
    PolyQ(long c) : PolyQ(Quad(c)) {}                                // NOLINT
    PolyQ(std::initializer_list<Quad> cs) : c_(cs) { trim(); }
    explicit PolyQ(std::vector<Quad> cs) : c_(std::move(cs)) { trim(); }

    static PolyQ x() { return PolyQ({Quad(0), Quad(1)}); }
    /// c * x^k
    static PolyQ monomial(Quad c, int k) {
        std::vector<Quad> v(k + 1, Quad(0));
        v[k] = std::move(c);
        return PolyQ(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Quad& leading() const {
        if (is_zero()) throw std::domain_error("PolyQ: zero polynomial");
        return c_.back();
    }
    Quad coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Quad(0);
    }
    const std::vector<Quad>& coeffs() const { return c_; }

    Quad operator()(const Quad& x) const {
        Quad r(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    PolyQ operator-() const {
        std::vector<Quad> v;
        v.reserve(c_.size());
        for (const auto& c : c_) v.push_back(-c);
        return PolyQ(std::move(v));
    }

    friend PolyQ operator+(const PolyQ& p, const PolyQ& q) {
        std::vector<Quad> v(std::max(p.c_.size(), q.c_.size()), Quad(0));
        for (size_t i = 0; i < v.size(); ++i) v[i] = p.coeff(i) + q.coeff(i);
        return PolyQ(std::move(v));
    }
    friend PolyQ operator-(const PolyQ& p, const PolyQ& q) { return p + (-q); }
    friend PolyQ operator*(const PolyQ& p, const PolyQ& q) {
        if (p.is_zero() || q.is_zero()) return {};
        std::vector<Quad> v(p.c_.size() + q.c_.size() - 1, Quad(0));
        for (size_t i = 0; i < p.c_.size(); ++i)
            for (size_t j = 0; j < q.c_.size(); ++j)
                v[i + j] += p.c_[i] * q.c_[j];
        return PolyQ(std::move(v));
    }
    PolyQ& operator+=(const PolyQ& o) { return *this = *this + o; }
    PolyQ& operator-=(const PolyQ& o) { return *this = *this - o; }
    PolyQ& operator*=(const PolyQ& o) { return *this = *this * o; }

    friend PolyQ operator*(const Quad& c, const PolyQ& p) {
        if (c.is_zero()) return {};
        std::vector<Quad> v;
        v.reserve(p.c_.size());
        for (const auto& pc : p.c_) v.push_back(c * pc);
        return PolyQ(std::move(v));
    }

    friend bool operator==(const PolyQ& p, const PolyQ& q) {
        return (p - q).is_zero();
    }
    friend bool operator!=(const PolyQ& p, const PolyQ& q) {
        return !(p == q);
    }

    PolyQ derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Quad> v;
        v.reserve(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) v.push_back(Quad(Rat(static_cast<long>(i))) * c_[i]);
        return PolyQ(std::move(v));
    }

    /// Euclidean division, q = quotient, r = remainder with deg r < deg b.
    static std::pair<PolyQ, PolyQ> divmod(const PolyQ& a, const PolyQ& b) {
        if (b.is_zero()) throw std::domain_error("PolyQ: division by zero");
        PolyQ r = a, q;
        Quad invlead = b.leading().inv();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int k = r.degree() - b.degree();
            Quad c = r.leading() * invlead;
            PolyQ t = monomial(c, k);
            q += t;
            r -= t * b;
        }
        return {q, r};
    }
    friend PolyQ operator/(const PolyQ& a, const PolyQ& b) {
        return divmod(a, b).first;
    }
    friend PolyQ operator%(const PolyQ& a, const PolyQ& b) {
        return divmod(a, b).second;
    }

    PolyQ monic() const {
        if (is_zero()) return {};
        return leading().inv() * *this;
    }

    /// Monic gcd over the coefficient field.
    static PolyQ gcd(PolyQ a, PolyQ b) {
        while (!b.is_zero()) {
            PolyQ r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

    PolyQ squarefree_part() const {
        if (is_zero() || degree() == 0) return monic();
        return (*this / gcd(*this, derivative())).monic();
    }

    std::string str(const std::string& var = "n") const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
        long d = 0;
        for (const auto& c : c_) {
            if (c.d() != 0) {
                if (d == 0) d = c.d();
                else if (d != c.d())
                    throw std::domain_error("PolyQ: mixed radicals");
            }
        }
    }

    std::vector<Quad> c_;
};

/// q with q(x) = p(x + c), by exact Taylor shift (binomial expansion).
inline PolyQ poly_shift(const PolyQ& p, const Rat& c) {
    if (p.is_zero() || c.is_zero()) return p;
    // Horner: p(x+c) = (...((a_d)(x+c) + a_{d-1})(x+c) + ...)
    PolyQ xc({Quad(c), Quad(1)});
    PolyQ r;
    for (int i = p.degree(); i >= 0; --i) r = r * xc + PolyQ(p.coeff(i));
    return r;
}

inline std::string PolyQ::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        Quad c = coeff(i);
        if (c.is_zero()) continue;
        bool neg = c.sign() < 0;
        std::string cs = (neg ? (-c).str() : c.str());
        if (cs.find_first_of("+-") != std::string::npos) cs = "(" + cs + ")";
        if (!s.empty()) s += neg ? " - " : " + ";
        else if (neg) s += "-";
        if (i == 0) {
            s += cs;
        } else {
            if (cs != "1") s += cs + "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

}  // namespace logbehave
