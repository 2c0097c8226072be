#pragma once

#include <string>

#include "logbehave/rat.hpp"

namespace logbehave {
namespace oracle {

enum class PathFamily { Motzkin, Dyck, Delannoy, MotzkinMinPlateau };

struct PathCountSpec {
    PathFamily family = PathFamily::Motzkin;
    long length = 0;      // Motzkin: steps; Dyck: half-length; Delannoy: n
    long min_plateau = 0; // MotzkinMinPlateau only
    long cap = 60;
};

/// Exact lattice-path count from the step definition (dynamic programming
/// over (position, height, plateau-run, last-step) states).
Int count_paths(const PathCountSpec& spec);

/// Direct count of secondary structures of size n and rank l: noncrossing
/// partial matchings on [n] with |i-j| > l, loops permitted exactly when
/// l = -1. Structures are enumerated one by one (cap n <= 16).
Int count_secondary_direct(long n, long l);

enum class PermPredicate { Derangement, OrderDivides, CyclesAtMost, AscentsEqual };

/// Count of permutations of [n] satisfying the predicate, by filtering all
/// n! permutations (cap n <= 9).
Int count_permutations(long n, PermPredicate pred, long k = 0);

/// Derangement count for any n via inclusion-exclusion (independent second
/// oracle).
Int derangements_inclusion_exclusion(long n);

/// sum_k C(n,k)^r, exact (n <= 2000, r <= 8).
Int count_franel_direct(long n, long r);

/// Catalan number C(n) from the closed form.
Int catalan(long n);

}  // namespace oracle
}  // namespace logbehave
