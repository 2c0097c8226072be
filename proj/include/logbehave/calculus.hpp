#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "logbehave/engine.hpp"
#include "logbehave/ray.hpp"
#include "logbehave/sandwich.hpp"

namespace logbehave {

/// Data of a calculus-method check: quotient recurrence coefficients
/// f = R + S/f1 (+ T/(f1 f2)), a priori bounds m <= f <= M on [n0, inf),
/// and the exactly checked base prefix.
struct CalculusConditionSet {
    RatFun R, S;
    std::optional<RatFun> T;
    std::optional<RatFun> m;
    std::optional<RatFun> M;
    bool m_is_sqrt = false;  // the stored m is m(x)^2
    Rat n0;
    Direction direction = Direction::Increasing;
    long base_check_hi = 0;
    long prefix_from = 1;  // exact q-monotonicity checked from here
    // constant majorants usable in place of S, T in the three-term key
    std::optional<Rat> sup_S, sup_T;
    // rational lower bounds for products m(x-1)...m(x-j) when m is a radical
    std::map<int, RatFun> product_minorants;
    int max_shift = kDefaultMaxShift;
};

struct CalculusReport {
    Verdict status = Verdict::Inconclusive;
    std::vector<std::pair<std::string, RayVerdict>> condition_results;
    PolyQ reduced_key;
    std::vector<std::string> notes;

    bool proved() const { return status == Verdict::Proved; }
};

/// Sufficient conditions "R' >= 0, R'm1 + S' >= 0, S <= 0 ==> f' >= 0" (and the mirrored
/// decreasing variant), plus the exact base prefix.
CalculusReport check_thm41(const LinearRecurrence& rec,
                           const CalculusConditionSet& c);

/// Sufficient conditions "R' >= 0, S' >= 0, S >= 0, m1 m2 (R'm1+S') >= S (R1'M2+S1')
/// ==> f' >= 0" (mirrored variant for decreasing), plus the base prefix.
CalculusReport check_thm42(const LinearRecurrence& rec,
                           const CalculusConditionSet& c);

/// Inductive bound propagation m <= f <= M: substitutes the extreme
/// endpoint per the sign of S (and T), with exact endpoint checks on
/// [n0, base_check_hi].
CalculusReport check_bounds_invariant(const LinearRecurrence& rec,
                                      const CalculusConditionSet& c);

/// Three-term sufficient condition m^4 F >= (MS+T) M F1 + M T F2 with
/// F = R'f1f2 + S'f2 + T', bounds substituted at the prescribed extremes.
CalculusReport check_threeterm(const LinearRecurrence& rec,
                               const CalculusConditionSet& c);

/// One additive piece of a derivative formula:
///   coefficient(x) * (u f_lag + v) / f_lag^inv_power        (pure term)
///   coefficient(x) * f_lag' / f_lag^inv_power               (derivative term)
struct DecompositionTerm {
    RatFun coefficient;
    RatFun u, v;  // bracket u f + v; ignored for derivative terms
    bool uses_lag_derivative = false;
    int lag = 1;
    int inv_power = 0;
};

struct TermDecomposition {
    std::vector<DecompositionTerm> terms;
};

/// Validates the decomposition against the generic derivative formula
/// f' = (R'f1 + S')/f1 - (S/f1^2) f1' and decides every term's sign under
/// m <= f_lag <= M and the inductive derivative sign.
CalculusReport check_decomposition(const TermDecomposition& dec,
                                   const LinearRecurrence& rec,
                                   const CalculusConditionSet& c);

/// General P-recursive sufficient check via Wronskians W_i = Q P_i' - Q' P_i
/// with all lag products bounded by the m/M extremes.
CalculusReport wronskian_conditions(const LinearRecurrence& rec,
                                    const CalculusConditionSet& c);

/// Two-index checks for a(n,k) = R a(n-1,k-1) + S a(n-1,k):
/// grid audit of the free-term condition, the four Wronskian sufficient
/// conditions via two-variable shift positivity, and the special reduced-form
/// identity for the Eulerian coefficients.
struct TwoIndexReport {
    bool grid_ok = true;
    std::vector<std::pair<long, long>> grid_violations;
    std::optional<bool> wronskian_ok;  // set in wronskian mode
    std::vector<std::string> wronskian_notes;
    std::optional<bool> identity_ok;   // Eulerian reduced form
    std::vector<std::string> notes;
};
TwoIndexReport check_two_index(const TwoIndexRecurrence& rec, long grid_rows,
                               bool wronskian_mode);

/// Bundled condition sets for the built-in catalog sequences.
struct CalculusCertificate {
    std::string name;
    std::string kind;  // thm41 | thm42 | bounds | threeterm | decomposition | wronskian
    LinearRecurrence rec;
    CalculusConditionSet cond;
    std::optional<TermDecomposition> dec;
};
CalculusCertificate calculus_catalog(const std::string& name);
CalculusReport verify_calculus(const CalculusCertificate& cert);
std::vector<std::string> calculus_catalog_names();

}  // namespace logbehave
