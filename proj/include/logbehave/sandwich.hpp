#pragma once

#include <optional>
#include <string>
#include <vector>

#include "logbehave/engine.hpp"
#include "logbehave/ray.hpp"

namespace logbehave {

enum class Direction { Increasing, Decreasing };

/// Interlacing bound family b(n) as an exact rational function.
struct BoundFamily {
    RatFun expression;
};

/// One rewritten term of the quotient recurrence right-hand side:
/// coeff(n) * (q(n - bracket_lag) + bracket_shift) / prod_j q(n - j).
/// The plan must sum to the original right-hand side exactly; an empty plan
/// means "use the quotient recurrence terms as they are".
struct SubstitutionPlan {
    std::vector<QTerm> terms;
};

/// Certificate for the interlacing method: b(n) <= q(n) <= b(n+1) on a base
/// seed, monotone b, and induction step reduced to ray positivity.
struct SandwichCertificate {
    std::string name;
    QuotientRecurrence recurrence;
    QuotientSequence seed_quotients;  // exact q values covering the base
    BoundFamily bound;
    Direction direction = Direction::Increasing;
    long base_lo = 0, base_hi = 0;
    long mono_from = 0;  // exact monotonicity checked from here
    SubstitutionPlan plan;
    int max_shift = kDefaultMaxShift;
};

struct BaseComparison {
    long n;
    std::string kind;  // "sandwich" or "monotone"
    bool ok;
};

struct SandwichReport {
    Verdict status = Verdict::Inconclusive;
    std::vector<BaseComparison> base_results;
    RayVerdict lower_step, upper_step;
    PolyQ reduced_lower, reduced_upper;  // cleared numerators before shifting
    std::vector<std::string> notes;

    bool proved() const { return status == Verdict::Proved; }
};

/// Verifies a sandwich certificate:
///  1. exact seed checks b(n) <= q(n) <= b(n+1) on the top max-lag window
///     indices (reversed for decreasing direction), exact monotonicity of q
///     on [mono_from, base_hi + 1];
///  2. bound monotonicity and positivity on the ray;
///  3. plan identity and per-term coefficient one-signedness;
///  4. both induction steps as ray-positivity queries from base_lo.
/// Exact base failures give Disproved; unproven step inequalities give
/// Inconclusive.
SandwichReport verify_sandwich(const SandwichCertificate& cert);

/// Bundled certificates: motzkin, derangements, t2_matrices, sec_struct_1,
/// sec_struct_2.
SandwichCertificate sandwich_catalog(const std::string& name);
SandwichReport verify_sandwich_catalog(const std::string& name);
std::vector<std::string> sandwich_catalog_names();

}  // namespace logbehave
