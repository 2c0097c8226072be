#pragma once

#include <stdexcept>
#include <vector>

#include "logbehave/rat.hpp"

namespace logbehave {

/// Truncated power series over Rat: coefficients 0..order, arithmetic
/// truncates at the common order.
class SeriesQ {
public:
    SeriesQ(int order, std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
        if (order < 0) throw std::domain_error("SeriesQ: negative order");
        c_.resize(order + 1, Rat(0));
    }
    explicit SeriesQ(int order) : c_(order + 1, Rat(0)) {}

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rat& coeff(int i) const { return c_[i]; }
    Rat& coeff(int i) { return c_[i]; }
    const std::vector<Rat>& coeffs() const { return c_; }

    friend SeriesQ operator+(const SeriesQ& a, const SeriesQ& b) {
        int n = std::min(a.order(), b.order());
        SeriesQ r(n);
        for (int i = 0; i <= n; ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend SeriesQ operator*(const SeriesQ& a, const SeriesQ& b) {
        int n = std::min(a.order(), b.order());
        SeriesQ r(n);
        for (int i = 0; i <= n; ++i)
            for (int j = 0; i + j <= n && j <= b.order(); ++j)
                r.c_[i + j] += a.c_[i] * b.c_[j];
        return r;
    }
    friend bool operator==(const SeriesQ& a, const SeriesQ& b) {
        return a.c_ == b.c_;
    }

private:
    std::vector<Rat> c_;
};

/// exp(a) as a truncated series, via the coefficient recursion for b' = a'b.
/// Requires a(0) = 0.
inline SeriesQ series_exp(const SeriesQ& a) {
    if (!a.coeff(0).is_zero())
        throw std::domain_error("series_exp: nonzero constant term");
    int n = a.order();
    SeriesQ b(n);
    b.coeff(0) = Rat(1);
    for (int m = 1; m <= n; ++m) {
        Rat s(0);
        for (int k = 1; k <= m; ++k) s += Rat(k) * a.coeff(k) * b.coeff(m - k);
        b.coeff(m) = s / Rat(m);
    }
    return b;
}

}  // namespace logbehave
