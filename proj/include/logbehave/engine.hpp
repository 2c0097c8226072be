#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "logbehave/model.hpp"
#include "logbehave/series.hpp"

namespace logbehave {

/// Contiguous run of exact sequence values starting at origin_index.
struct TermList {
    long origin_index = 0;
    std::vector<Quad> terms;

    long last_index() const {
        return origin_index + static_cast<long>(terms.size()) - 1;
    }
    const Quad& at(long n) const {
        if (n < origin_index || n > last_index())
            throw std::out_of_range("TermList: index " + std::to_string(n));
        return terms[n - origin_index];
    }
};

enum class LogVerdict { LogConvex, LogConcave, Geometric, LogFibonacci, Indefinite };

inline const char* to_string(LogVerdict v) {
    switch (v) {
        case LogVerdict::LogConvex: return "LogConvex";
        case LogVerdict::LogConcave: return "LogConcave";
        case LogVerdict::Geometric: return "Geometric";
        case LogVerdict::LogFibonacci: return "LogFibonacci";
        default: return "Indefinite";
    }
}

/// Signs of Delta(n) = a(n)^2 - a(n-1)a(n+1) over a window, with the verdict
/// they support.
struct ClassificationReport {
    long lo = 0, hi = 0;
    std::vector<int> delta_signs;  // sign of Delta(n), n = lo..hi
    LogVerdict verdict = LogVerdict::Indefinite;
    std::optional<long> first_violation;

    int sign_at(long n) const { return delta_signs[n - lo]; }
};

struct QuotientSequence {
    long origin_index = 0;  // index of the first quotient q(origin)
    std::vector<Quad> quotients;

    const Quad& at(long n) const {
        if (n < origin_index ||
            n >= origin_index + static_cast<long>(quotients.size()))
            throw std::out_of_range("QuotientSequence: index " + std::to_string(n));
        return quotients[n - origin_index];
    }
    long last_index() const {
        return origin_index + static_cast<long>(quotients.size()) - 1;
    }
};

TermList eval_terms(const LinearRecurrence& rec, long count);
TermList eval_terms(const ConvolutionRecurrence& rec, long count);
TermList eval_terms(const NonhomRecurrence& rec, long count);
TermList eval_terms(const BcDefinition& def, long count);
TermList eval_terms(const Definition& def, long count);

/// Exact consecutive ratios q(n) = a(n)/a(n-1). Leading zero terms are
/// skipped; an interior zero is an error naming the index.
QuotientSequence quotients(const TermList& t);

/// Evaluates a quotient recurrence directly from its own recursion (used by
/// cross-checks against term ratios).
QuotientSequence eval_quotient_recurrence(const QuotientRecurrence& q,
                                          const QuotientSequence& seed,
                                          long up_to);

ClassificationReport classify_window(const TermList& t, long lo, long hi);

/// Last quotient of a monotone tail plus the last increment as the error
/// indicator. No extrapolation.
struct LimitEstimate {
    Quad value;
    Quad last_increment;
    bool increasing = true;
};
LimitEstimate limit_estimate(const QuotientSequence& q, long tail_from);

/// b_n = n! [x^n] exp(sum a_k x^k / k!), exact.
TermList bc_transform(const BcDefinition& a, long count);

/// Verifies 1, a_1, a_2, ... is nonnegative, log-concave and has no internal
/// zeros.
struct BcHypothesisReport {
    bool ok = true;
    std::optional<long> violation_index;
    std::string reason;
};
BcHypothesisReport bc_hypothesis_check(const BcDefinition& a, long horizon);

/// a_n a_m <= a_{n+m} <= C(m+n,n) a_n a_m for all m+n <= limit.
struct SemiAdditivityReport {
    bool ok = true;
    std::vector<std::pair<long, long>> violations;
};
SemiAdditivityReport semiadditivity_check(const TermList& t, long limit);

struct NewtonReport {
    bool log_concave = true;
    bool normalized_log_concave = true;
};
/// Finite tests on a row a_0..a_n: plain log-concavity and the
/// binomially normalized variant a_k / C(n,k).
NewtonReport newton_test(const std::vector<Rat>& a);

/// Log-behavior of a(n) = C1 a(n-1) - C2 a(n-2) from its first three terms.
LogVerdict constant_coeff_classify(const Rat& C1, const Rat& C2, const Rat& a0,
                                   const Rat& a1, long probe_horizon = 64);

/// Exact triangle a(n,k), 0 <= k <= n < rows.
using Triangle = std::vector<std::vector<Quad>>;
Triangle triangle_eval(const TwoIndexRecurrence& rec, long rows);

struct TriangleCheckReport {
    bool ok = true;
    std::vector<std::pair<long, long>> violations;  // (n, k)
};
enum class TriangleMode { Rows, Columns };
/// Rows: log-concavity in k across each row's positive support.
/// Columns: quotient monotonicity q(n+1,k) >= q(n,k) where defined.
TriangleCheckReport triangle_checks(const Triangle& tri, TriangleMode mode);

}  // namespace logbehave
