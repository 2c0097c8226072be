#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "logbehave/poly.hpp"

namespace logbehave {

/// Reduced rational function num/den over Quad in one variable.
/// Invariant: den is monic and shares no nonconstant factor with num.
class RatFun {
public:
    RatFun() : num_(), den_(1) {}
    RatFun(Quad c) : num_(std::move(c)), den_(1) {}  // NOLINT
    RatFun(Rat c) : num_(Quad(std::move(c))), den_(1) {}  // NOLINT
    RatFun(long c) : num_(Quad(c)), den_(1) {}  // NOLINT
    RatFun(PolyQ p) : num_(std::move(p)), den_(1) {}  // NOLINT
    RatFun(PolyQ num, PolyQ den) : num_(std::move(num)), den_(std::move(den)) {
        reduce();
    }

    static RatFun x() { return RatFun(PolyQ::x()); }

    const PolyQ& num() const { return num_; }
    const PolyQ& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    /// Numerator as a polynomial when the denominator is constant.
    PolyQ as_poly() const {
        if (!is_polynomial())
            throw std::domain_error("RatFun: not a polynomial");
        return den_.coeff(0).inv() * num_;
    }

    Quad operator()(const Quad& x) const {
        Quad d = den_(x);
        if (d.is_zero()) throw std::domain_error("RatFun: pole at " + x.str());
        return num_(x) / d;
    }

    RatFun operator-() const { return RatFun(-num_, den_, no_reduce{}); }

    friend RatFun operator+(const RatFun& f, const RatFun& g) {
        return RatFun(f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_);
    }
    friend RatFun operator-(const RatFun& f, const RatFun& g) {
        return f + (-g);
    }
    friend RatFun operator*(const RatFun& f, const RatFun& g) {
        return RatFun(f.num_ * g.num_, f.den_ * g.den_);
    }
    friend RatFun operator/(const RatFun& f, const RatFun& g) {
        if (g.is_zero()) throw std::domain_error("RatFun: division by zero");
        return RatFun(f.num_ * g.den_, f.den_ * g.num_);
    }
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

    friend bool operator==(const RatFun& f, const RatFun& g) {
        return (f - g).is_zero();
    }
    friend bool operator!=(const RatFun& f, const RatFun& g) {
        return !(f == g);
    }

    RatFun inv() const { return RatFun(1) / *this; }

    /// (num/den)' = (num' den - num den') / den^2, reduced.
    RatFun derivative() const {
        return RatFun(num_.derivative() * den_ - num_ * den_.derivative(),
                      den_ * den_);
    }

    /// f(x + c)
    RatFun shifted(const Rat& c) const {
        return RatFun(poly_shift(num_, c), poly_shift(den_, c));
    }

    std::string str(const std::string& var = "n") const {
        if (is_polynomial()) return as_poly().str(var);
        return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
    }

private:
    struct no_reduce {};
    RatFun(PolyQ n, PolyQ d, no_reduce) : num_(std::move(n)), den_(std::move(d)) {}

    void reduce() {
        if (den_.is_zero()) throw std::domain_error("RatFun: zero denominator");
        if (num_.is_zero()) {
            den_ = PolyQ(1);
            return;
        }
        PolyQ g = PolyQ::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        Quad lead = den_.leading();
        den_ = lead.inv() * den_;
        num_ = lead.inv() * num_;
    }

    PolyQ num_, den_;
};

}  // namespace logbehave
