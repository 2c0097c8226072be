#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "logbehave/rat.hpp"

namespace logbehave {

/// Element a + b*sqrt(d) of a real quadratic field Q(sqrt d), d squarefree.
/// The pure-rational case is d = 0 (and then b = 0). Values from different
/// fields combine only when one side is rational.
class Quad {
public:
    Quad() : a_(0), b_(0), d_(0) {}
    Quad(Rat a) : a_(std::move(a)), b_(0), d_(0) {}  // NOLINT
    Quad(long a) : a_(a), b_(0), d_(0) {}            // NOLINT
    Quad(Rat a, Rat b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
        normalize();
    }

    static Quad sqrt_of(long d) { return Quad(Rat(0), Rat(1), d); }

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    long d() const { return d_; }
    bool is_rational() const { return d_ == 0; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    /// Exact sign of a + b*sqrt(d), decided by comparing a^2 with d*b^2.
    int sign() const {
        int sa = a_.sign(), sb = b_.sign();
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        // opposite signs: compare |a| against |b| sqrt(d) via squares
        Rat a2 = a_ * a_, db2 = Rat(d_) * b_ * b_;
        if (a2 == db2) return 0;
        return a2 > db2 ? sa : sb;
    }

    Quad conj() const { return Quad(a_, -b_, d_); }
    Quad operator-() const { return Quad(-a_, -b_, d_); }

    friend Quad operator+(const Quad& x, const Quad& y) {
        long d = joined(x, y);
        return Quad(x.a_ + y.a_, x.b_ + y.b_, d);
    }
    friend Quad operator-(const Quad& x, const Quad& y) { return x + (-y); }
    friend Quad operator*(const Quad& x, const Quad& y) {
        long d = joined(x, y);
        return Quad(x.a_ * y.a_ + Rat(d) * x.b_ * y.b_,
                    x.a_ * y.b_ + x.b_ * y.a_, d);
    }
    friend Quad operator/(const Quad& x, const Quad& y) { return x * y.inv(); }

    Quad& operator+=(const Quad& o) { return *this = *this + o; }
    Quad& operator-=(const Quad& o) { return *this = *this - o; }
    Quad& operator*=(const Quad& o) { return *this = *this * o; }
    Quad& operator/=(const Quad& o) { return *this = *this / o; }

    Quad inv() const {
        if (is_zero()) throw std::domain_error("Quad: inverse of zero");
        // 1/(a+b sqrt d) = (a-b sqrt d)/(a^2-d b^2); the norm is nonzero
        // because sqrt(d) is irrational for squarefree d > 1.
        Rat norm = a_ * a_ - Rat(d_) * b_ * b_;
        return Quad(a_ / norm, -b_ / norm, d_);
    }

    friend bool operator==(const Quad& x, const Quad& y) {
        return (x - y).is_zero();
    }
    friend bool operator!=(const Quad& x, const Quad& y) { return !(x == y); }
    friend bool operator<(const Quad& x, const Quad& y) {
        return (x - y).sign() < 0;
    }
    friend bool operator<=(const Quad& x, const Quad& y) {
        return (x - y).sign() <= 0;
    }
    friend bool operator>(const Quad& x, const Quad& y) { return y < x; }
    friend bool operator>=(const Quad& x, const Quad& y) { return y <= x; }

    /// The rational part when the value is rational.
    const Rat& as_rat() const {
        if (!b_.is_zero())
            throw std::domain_error("Quad: value is irrational");
        return a_;
    }

    std::string str() const {
        if (b_.is_zero()) return a_.str();
        std::string s;
        if (!a_.is_zero()) s = a_.str() + (b_.sign() < 0 ? "" : "+");
        if (b_ == Rat(1)) {
        } else if (b_ == Rat(-1)) {
            s += "-";
        } else {
            s += b_.str() + "*";
        }
        return s + "sqrt(" + std::to_string(d_) + ")";
    }

    double approx() const;

private:
    static bool squarefree(long d) {
        for (long p = 2; p * p <= d; ++p)
            if (d % (p * p) == 0) return false;
        return true;
    }

    void normalize() {
        if (d_ < 0) throw std::domain_error("Quad: negative radicand");
        if (d_ == 1) {
            a_ += b_;
            b_ = Rat(0);
            d_ = 0;
            return;
        }
        if (b_.is_zero()) {
            d_ = 0;
            return;
        }
        if (d_ == 0) {
            b_ = Rat(0);
            return;
        }
        if (!squarefree(d_))
            throw std::domain_error("Quad: radicand must be squarefree");
    }

    static long joined(const Quad& x, const Quad& y) {
        if (x.d_ == y.d_ || y.d_ == 0) return x.d_;
        if (x.d_ == 0) return y.d_;
        throw std::domain_error("Quad: mixed radicals " +
                                std::to_string(x.d_) + " and " +
                                std::to_string(y.d_));
    }

    Rat a_, b_;
    long d_;
};

inline double Quad::approx() const {
    double r = a_.approx();
    if (!b_.is_zero()) {
        // exact integer sqrt bracket, then refine in double
        double s = std::sqrt(static_cast<double>(d_));
        r += b_.approx() * s;
    }
    return r;
}

/// Sign of x as a real number, in {-1, 0, +1}.
inline int quad_sign(const Quad& x) { return x.sign(); }

}  // namespace logbehave
