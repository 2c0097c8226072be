#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "logbehave/poly2.hpp"
#include "logbehave/ratfun.hpp"

namespace logbehave {

/// Q(n) a(n) = P[0](n) a(n-lag[0]) + ... with exact initial terms.
/// rhs[i] pairs with lags[i]; zero polynomials are allowed and skipped.
struct LinearRecurrence {
    std::string name;
    PolyQ lhs = PolyQ(1);              // Q(n), nonzero for n >= valid_from
    std::vector<int> lags;             // distinct positive lags, increasing
    std::vector<PolyQ> rhs;            // same length as lags
    long origin = 0;                   // index of initial_terms[0]
    long valid_from = 0;               // recurrence applies for n >= valid_from
    std::vector<Quad> initial_terms;

    int max_lag() const {
        int m = 0;
        for (int l : lags) m = std::max(m, l);
        return m;
    }
    void validate() const {
        if (lags.size() != rhs.size())
            throw std::domain_error(name + ": lag/coefficient count mismatch");
        if (static_cast<long>(initial_terms.size()) <
            valid_from - origin)
            throw std::domain_error(name + ": not enough initial terms");
    }
};

/// Convolution shapes used by the catalog.
struct ConvolutionRecurrence {
    enum class Kind {
        Secondary,  // S(n+1) = S(n) + sum_{m=rank}^{n-1} S(m) S(n-m-1)
        Schroder,   // r(n+1) = r(n) + sum_{j=0}^{n} r(j) r(n-j)
    };
    std::string name;
    Kind kind = Kind::Secondary;
    long rank = 0;  // l >= -1, Secondary only
    std::vector<Rat> initial_terms;  // Secondary: S(0..l+1), all ones
};

/// a(n) = R(n) a(n-1) + S(n)            (first order; S is the free term)
/// a(n) = R(n) a(n-1) + S(n) a(n-2) + T(n)   (second order when T present)
struct NonhomRecurrence {
    std::string name;
    RatFun R, S;
    std::optional<RatFun> T;
    long origin = 0;
    std::vector<Quad> initial_terms;
};

/// a(n,k) = R(n,k) a(n-1,k-1) + S(n,k) a(n-1,k) on the triangle 0<=k<=n.
struct TwoIndexRecurrence {
    enum class Edge { Ones, Delta };  // a(n,0) = 1 resp. [n = 0]
    std::string name;
    RatFun2 R, S;
    Edge left = Edge::Ones;  // a(0,k) is always [k = 0]
};

/// Bender-Canfield input data: a_1, a_2, ... (prefix; zero-extended, or the
/// last value repeated when repeat_last is set).
struct BcDefinition {
    std::string name;
    std::vector<Rat> prefix;
    bool repeat_last = false;

    Rat at(long k) const {  // a_k, k >= 1
        if (k <= 0) throw std::domain_error("BcDefinition: k >= 1");
        if (k <= static_cast<long>(prefix.size())) return prefix[k - 1];
        return repeat_last && !prefix.empty() ? prefix.back() : Rat(0);
    }
};

using Definition = std::variant<LinearRecurrence, ConvolutionRecurrence,
                                NonhomRecurrence, TwoIndexRecurrence,
                                BcDefinition>;

struct CatalogEntry {
    std::string name;
    std::vector<Definition> definitions;  // equivalent on overlap ranges
    std::optional<Quad> known_limit;
    std::vector<Rat> parameters;
    std::string anchor;  // human reference shown by `catalog list`

    const Definition& primary() const { return definitions.front(); }
};

/// One additive term of a quotient recurrence:
///   coeff(n) * (q(n - bracket_lag) + bracket_shift) / prod_j q(n - j).
/// The bracket factor is optional; plain terms have no bracket.
struct QTerm {
    RatFun coeff;
    std::vector<int> lags;  // distinct, increasing; may be empty
    std::optional<int> bracket_lag;
    Quad bracket_shift = Quad(0);
};

/// q(n) = sum of terms, derived from a linear recurrence by dividing
/// through by Q(n) a(n-1).
struct QuotientRecurrence {
    std::string name;
    std::vector<QTerm> terms;
    long first_index = 1;  // smallest n with q(n) defined
    long valid_from = 2;   // recurrence applies for n >= valid_from

    int max_lag() const {
        int m = 0;
        for (const auto& t : terms)
            for (int l : t.lags) m = std::max(m, l);
        return m;
    }
};

/// Divides Q(n) a(n) = sum P_i(n) a(n - k_i) by Q(n) a(n-1):
/// a(n-k)/a(n-1) = 1 / (q(n-1) ... q(n-k+1)).
inline QuotientRecurrence quotient_form(const LinearRecurrence& rec) {
    rec.validate();
    QuotientRecurrence q;
    q.name = rec.name;
    q.first_index = rec.origin + 1;
    q.valid_from = rec.valid_from;
    RatFun Q(rec.lhs);
    for (size_t i = 0; i < rec.lags.size(); ++i) {
        if (rec.rhs[i].is_zero()) continue;
        QTerm t;
        t.coeff = RatFun(rec.rhs[i]) / Q;
        for (int j = 1; j < rec.lags[i]; ++j) t.lags.push_back(j);
        q.terms.push_back(std::move(t));
    }
    return q;
}

/// Short quotient recurrence for a(n) = R(n) a(n-1) + S(n) (+ S a(n-2) + T):
/// first order:  q(n) = R + S/S_1 - R_1 S/S_1 * 1/q(n-1)
/// second order: q(n) = R + S/q(n-1) + T/T_1 [1 - R_1/q(n-1) - S_1/(q(n-1)q(n-2))]
/// A vanishing free term degenerates to the homogeneous form.
inline QuotientRecurrence nonhom_quotient_form(const NonhomRecurrence& rec) {
    QuotientRecurrence q;
    q.name = rec.name;
    q.first_index = rec.origin + 1;
    auto push = [&q](RatFun c, std::vector<int> lags) {
        if (c.is_zero()) return;
        QTerm t;
        t.coeff = std::move(c);
        t.lags = std::move(lags);
        q.terms.push_back(std::move(t));
    };
    if (!rec.T) {
        // first order with free term S
        if (rec.S.is_zero()) {
            q.valid_from = rec.origin + 1;
            push(rec.R, {});
            return q;
        }
        RatFun S1 = rec.S.shifted(Rat(-1));
        push(rec.R + rec.S / S1, {});
        push(-(rec.R.shifted(Rat(-1)) * rec.S / S1), {1});
        q.valid_from = rec.origin + 2;
        return q;
    }
    // second order with free term T
    if (rec.T->is_zero()) {
        push(rec.R, {});
        push(rec.S, {1});
        q.valid_from = rec.origin + 2;
        return q;
    }
    RatFun T1 = rec.T->shifted(Rat(-1));
    RatFun ratio = *rec.T / T1;
    push(rec.R + ratio, {});
    push(rec.S - ratio * rec.R.shifted(Rat(-1)), {1});
    push(-(ratio * rec.S.shifted(Rat(-1))), {1, 2});
    q.valid_from = rec.origin + 3;
    return q;
}

}  // namespace logbehave
