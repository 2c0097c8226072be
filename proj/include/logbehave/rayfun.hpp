#pragma once

#include <optional>

#include "logbehave/ratfun.hpp"
#include "logbehave/ray.hpp"

namespace logbehave {

/// Sign of f on [n0, inf), established by ray queries on numerator and
/// denominator. Returns +1 / -1 (nonstrict one-signedness), 0 for the zero
/// function, or nullopt when not provable.
inline std::optional<int> ratfun_sign_on_ray(const RatFun& f, const Rat& n0,
                                             int max_shift = kDefaultMaxShift) {
    if (f.is_zero()) return 0;
    if (!ray_positive(f.den(), n0, /*strict=*/true, max_shift).proved())
        return std::nullopt;
    if (ray_positive(f.num(), n0, false, max_shift).proved()) return +1;
    if (ray_positive(-f.num(), n0, false, max_shift).proved()) return -1;
    return std::nullopt;
}

}  // namespace logbehave
