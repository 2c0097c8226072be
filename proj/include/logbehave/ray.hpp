#pragma once

#include <optional>
#include <stdexcept>

#include "logbehave/poly.hpp"
#include "logbehave/sturm.hpp"

namespace logbehave {

enum class Verdict { Proved, Disproved, Inconclusive };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Proved: return "Proved";
        case Verdict::Disproved: return "Disproved";
        default: return "Inconclusive";
    }
}

/// Outcome of a ray-positivity query.
struct RayVerdict {
    Verdict status = Verdict::Inconclusive;
    std::optional<Rat> witness;       // point with a negative value
    std::optional<int> shift_used;    // accepted shift t
    PolyQ reduced;                    // final shifted polynomial

    bool proved() const { return status == Verdict::Proved; }
};

constexpr int kDefaultMaxShift = 64;

/// Decides p(x) >= 0 (or > 0 when strict) for all real x >= n0.
///
/// Counterexample scan on the integer points n0, n0+1, ..., n0+max_shift
/// first, then the shift ladder: accept t when p(x + n0 + t) has
/// sign-nonnegative coefficients with positive leading coefficient. For
/// t > 0 the gap (n0, n0+t] is certified root-free by a Sturm count so the
/// verdict covers the whole ray, not just [n0+t, inf).
inline RayVerdict ray_positive(const PolyQ& p, const Rat& n0,
                               bool strict = false,
                               int max_shift = kDefaultMaxShift) {
    RayVerdict out;
    out.reduced = p;
    if (max_shift < 0) throw std::domain_error("ray_positive: max_shift < 0");
    if (p.is_zero()) {
        if (strict) throw std::domain_error("ray_positive: zero polynomial");
        out.status = Verdict::Proved;
        out.shift_used = 0;
        return out;
    }

    for (int t = 0; t <= max_shift; ++t) {
        Rat x = n0 + Rat(t);
        int s = p(Quad(x)).sign();
        if (s < 0 || (strict && s == 0)) {
            out.status = Verdict::Disproved;
            out.witness = x;
            return out;
        }
    }

    for (int t = 0; t <= max_shift; ++t) {
        PolyQ q = poly_shift(p, n0 + Rat(t));
        bool ok = q.leading().sign() > 0;
        for (const auto& c : q.coeffs())
            if (c.sign() < 0) { ok = false; break; }
        if (ok && strict && q.coeff(0).sign() <= 0) ok = false;
        if (!ok) continue;
        if (t > 0 &&
            detail::root_count_interval(p, Quad(n0), Quad(n0 + Rat(t))) > 0)
            continue;  // cannot certify the gap below the shift point
        out.status = Verdict::Proved;
        out.shift_used = t;
        out.reduced = q;
        return out;
    }
    return out;
}

}  // namespace logbehave
