#pragma once

#include <stdexcept>
#include <vector>

#include "logbehave/poly.hpp"

namespace logbehave {

namespace detail {

/// Sturm chain of p (made squarefree internally). Works over any ordered
/// coefficient field; callers restrict the domain as they need.
inline std::vector<PolyQ> sturm_chain(const PolyQ& p) {
    std::vector<PolyQ> chain;
    PolyQ f = p.squarefree_part();
    chain.push_back(f);
    if (f.degree() >= 1) {
        chain.push_back(f.derivative());
        while (chain.back().degree() > 0) {
            PolyQ r = chain[chain.size() - 2] % chain.back();
            if (r.is_zero()) break;
            chain.push_back(-r);
        }
    }
    return chain;
}

inline int sign_variations(const std::vector<PolyQ>& chain, const Quad& x) {
    int var = 0, prev = 0;
    for (const auto& f : chain) {
        int s = f(x).sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

/// Number of distinct real roots of p in (lo, hi].
inline int root_count_interval(const PolyQ& p, const Quad& lo, const Quad& hi) {
    if (p.is_zero()) throw std::domain_error("sturm: zero polynomial");
    if (!(lo < hi)) throw std::domain_error("sturm: empty interval");
    if (p.degree() == 0) return 0;
    auto chain = sturm_chain(p);
    return sign_variations(chain, lo) - sign_variations(chain, hi);
}

}  // namespace detail

/// Number of distinct real roots of p in (lo, hi], by Sturm sign changes.
/// Coefficients must be rational (d = 0).
inline int sturm_root_count(const PolyQ& p, const Rat& lo, const Rat& hi) {
    for (const auto& c : p.coeffs())
        if (c.d() != 0)
            throw std::domain_error("sturm_root_count: rational coefficients only");
    return detail::root_count_interval(p, Quad(lo), Quad(hi));
}

}  // namespace logbehave
