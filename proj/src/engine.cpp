#include "logbehave/engine.hpp"

namespace logbehave {

TermList eval_terms(const LinearRecurrence& rec, long count) {
    rec.validate();
    TermList out;
    out.origin_index = rec.origin;
    out.terms = rec.initial_terms;
    if (count < static_cast<long>(out.terms.size())) {
        out.terms.resize(count);
        return out;
    }
    for (long n = rec.origin + static_cast<long>(out.terms.size());
         out.terms.size() < static_cast<size_t>(count); ++n) {
        if (n < rec.valid_from)
            throw std::domain_error(rec.name +
                                    ": initial terms end before valid range");
        Quad qn = rec.lhs(Quad(Rat(n)));
        if (qn.is_zero())
            throw std::domain_error(rec.name + ": Q(" + std::to_string(n) +
                                    ") = 0");
        Quad acc(0);
        for (size_t i = 0; i < rec.lags.size(); ++i) {
            Quad c = rec.rhs[i](Quad(Rat(n)));
            if (c.is_zero()) continue;  // vanishing coefficient: term absent
            acc += c * out.at(n - rec.lags[i]);
        }
        out.terms.push_back(acc / qn);
    }
    return out;
}

TermList eval_terms(const ConvolutionRecurrence& rec, long count) {
    TermList out;
    out.origin_index = 0;
    std::vector<Quad> s;
    for (const auto& r : rec.initial_terms) s.emplace_back(r);
    if (rec.kind == ConvolutionRecurrence::Kind::Secondary) {
        if (static_cast<long>(s.size()) != rec.rank + 2)
            throw std::domain_error(rec.name + ": needs rank+2 initial terms");
        auto term = [&](long m) -> Quad {
            if (m == -1) return Quad(1);  // rank -1 convention (loops)
            return s[m];
        };
        while (static_cast<long>(s.size()) < count) {
            long n = static_cast<long>(s.size()) - 1;  // computing S(n+1)
            Quad acc = s[n];
            for (long m = rec.rank; m <= n - 1; ++m)
                acc += term(m) * term(n - m - 1);
            s.push_back(acc);
        }
    } else {
        while (static_cast<long>(s.size()) < count) {
            long n = static_cast<long>(s.size()) - 1;  // computing r(n+1)
            Quad acc = s[n];
            for (long j = 0; j <= n; ++j) acc += s[j] * s[n - j];
            s.push_back(acc);
        }
    }
    if (count < static_cast<long>(s.size())) s.resize(count);
    out.terms = std::move(s);
    return out;
}

TermList eval_terms(const NonhomRecurrence& rec, long count) {
    TermList out;
    out.origin_index = rec.origin;
    out.terms = rec.initial_terms;
    size_t order = rec.T ? 2 : 1;
    if (out.terms.size() < order)
        throw std::domain_error(rec.name + ": not enough initial terms");
    while (out.terms.size() < static_cast<size_t>(count)) {
        long n = rec.origin + static_cast<long>(out.terms.size());
        Quad x{Rat(n)};
        Quad v = rec.R(x) * out.at(n - 1);
        if (rec.T) {
            v += rec.S(x) * out.at(n - 2) + (*rec.T)(x);
        } else {
            v += rec.S(x);
        }
        out.terms.push_back(v);
    }
    return out;
}

TermList eval_terms(const BcDefinition& def, long count) {
    TermList t = bc_transform(def, count);
    return t;
}

TermList eval_terms(const Definition& def, long count) {
    return std::visit(
        [count](const auto& d) -> TermList {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, TwoIndexRecurrence>) {
                throw std::domain_error(
                    "eval_terms: two-index recurrences evaluate as triangles");
            } else {
                return eval_terms(d, count);
            }
        },
        def);
}

QuotientSequence quotients(const TermList& t) {
    QuotientSequence q;
    size_t i = 0;
    while (i < t.terms.size() && t.terms[i].is_zero()) ++i;  // leading zeros
    if (i + 1 >= t.terms.size())
        throw std::domain_error("quotients: fewer than two nonzero terms");
    q.origin_index = t.origin_index + static_cast<long>(i) + 1;
    for (size_t j = i + 1; j < t.terms.size(); ++j) {
        if (t.terms[j - 1].is_zero())
            throw std::domain_error(
                "quotients: interior zero term at index " +
                std::to_string(t.origin_index + static_cast<long>(j) - 1));
        q.quotients.push_back(t.terms[j] / t.terms[j - 1]);
    }
    return q;
}

QuotientSequence eval_quotient_recurrence(const QuotientRecurrence& qr,
                                          const QuotientSequence& seed,
                                          long up_to) {
    QuotientSequence q = seed;
    for (long n = q.last_index() + 1; n <= up_to; ++n) {
        Quad x{Rat(n)};
        Quad acc(0);
        for (const auto& t : qr.terms) {
            Quad v = t.coeff(x);
            if (t.bracket_lag)
                v *= q.at(n - *t.bracket_lag) + t.bracket_shift;
            for (int l : t.lags) v /= q.at(n - l);
            acc += v;
        }
        q.quotients.push_back(acc);
    }
    return q;
}

ClassificationReport classify_window(const TermList& t, long lo, long hi) {
    if (hi < lo) throw std::domain_error("classify_window: window too short");
    if (lo - 1 < t.origin_index || hi + 1 > t.last_index())
        throw std::domain_error("classify_window: window outside term range");
    ClassificationReport rep;
    rep.lo = lo;
    rep.hi = hi;
    bool all_le = true, all_ge = true, all_eq = true, alt = true;
    std::optional<long> first_tie, first_break;
    for (long n = lo; n <= hi; ++n) {
        Quad delta = t.at(n) * t.at(n) - t.at(n - 1) * t.at(n + 1);
        int s = delta.sign();
        rep.delta_signs.push_back(s);
        if (s != 0) all_eq = false;
        if (s > 0) all_le = false;
        if (s < 0) all_ge = false;
        if (s == 0 && !first_tie) first_tie = n;
        size_t i = rep.delta_signs.size() - 1;
        if (s == 0 || (i > 0 && rep.delta_signs[i - 1] != -s)) alt = false;
        if (!all_le && !all_ge && !alt && !first_break) first_break = n;
    }
    if (all_eq) {
        rep.verdict = LogVerdict::Geometric;
    } else if (all_le) {
        rep.verdict = LogVerdict::LogConvex;
        rep.first_violation = first_tie;
    } else if (all_ge) {
        rep.verdict = LogVerdict::LogConcave;
        rep.first_violation = first_tie;
    } else if (alt) {
        rep.verdict = LogVerdict::LogFibonacci;
    } else {
        rep.verdict = LogVerdict::Indefinite;
        rep.first_violation = first_break;
    }
    return rep;
}

LimitEstimate limit_estimate(const QuotientSequence& q, long tail_from) {
    if (tail_from < q.origin_index || tail_from >= q.last_index())
        throw std::domain_error("limit_estimate: tail outside range");
    int dir = 0;
    for (long n = tail_from; n < q.last_index(); ++n) {
        int s = (q.at(n + 1) - q.at(n)).sign();
        if (s == 0) continue;
        if (dir == 0) dir = s;
        else if (dir != s)
            throw std::domain_error("limit_estimate: tail not monotone at " +
                                    std::to_string(n));
    }
    LimitEstimate e{q.at(q.last_index()),
                    q.at(q.last_index()) - q.at(q.last_index() - 1),
                    dir >= 0};
    return e;
}

TermList bc_transform(const BcDefinition& a, long count) {
    if (count <= 0) return {0, {}};
    int order = static_cast<int>(count) - 1;
    SeriesQ inner(order);
    Rat kfac(1);
    for (long k = 1; k <= order; ++k) {
        kfac *= Rat(k);
        inner.coeff(k) = a.at(k) / kfac;
    }
    SeriesQ e = series_exp(inner);
    TermList out;
    out.origin_index = 0;
    Rat nfac(1);
    for (long n = 0; n <= order; ++n) {
        if (n > 0) nfac *= Rat(n);
        out.terms.emplace_back(e.coeff(n) * nfac);
    }
    return out;
}

BcHypothesisReport bc_hypothesis_check(const BcDefinition& a, long horizon) {
    BcHypothesisReport rep;
    // sequence 1, a_1, a_2, ... ; find the support end within the horizon
    std::vector<Rat> s{Rat(1)};
    for (long k = 1; k <= horizon; ++k) s.push_back(a.at(k));
    long last_nonzero = 0;
    for (long k = 0; k <= horizon; ++k)
        if (!s[k].is_zero()) last_nonzero = k;
    for (long k = 0; k <= horizon; ++k) {
        if (s[k].sign() < 0) {
            rep.ok = false;
            rep.violation_index = k;
            rep.reason = "negative term";
            return rep;
        }
        if (s[k].is_zero() && k < last_nonzero) {
            rep.ok = false;
            rep.violation_index = k;
            rep.reason = "internal zero";
            return rep;
        }
    }
    for (long k = 1; k < horizon; ++k) {
        if (s[k] * s[k] < s[k - 1] * s[k + 1]) {
            rep.ok = false;
            rep.violation_index = k;
            rep.reason = "log-concavity fails";
            return rep;
        }
    }
    return rep;
}

SemiAdditivityReport semiadditivity_check(const TermList& t, long limit) {
    if (t.origin_index != 0 || t.at(0) != Quad(1))
        throw std::domain_error("semiadditivity_check: requires a(0) = 1");
    SemiAdditivityReport rep;
    for (long n = 0; n <= limit; ++n) {
        for (long m = n; n + m <= limit; ++m) {
            Quad prod = t.at(n) * t.at(m);
            Quad sum = t.at(n + m);
            Quad bound = Quad(Rat(binomial(Int(m + n), static_cast<unsigned long>(n)))) * prod;
            if (!(prod <= sum && sum <= bound)) {
                rep.ok = false;
                rep.violations.emplace_back(n, m);
            }
        }
    }
    return rep;
}

NewtonReport newton_test(const std::vector<Rat>& a) {
    NewtonReport rep;
    long n = static_cast<long>(a.size()) - 1;
    for (long k = 1; k < n; ++k) {
        if (a[k] * a[k] < a[k - 1] * a[k + 1]) rep.log_concave = false;
        Rat bk(binomial(Int(n), static_cast<unsigned long>(k)));
        Rat bl(binomial(Int(n), static_cast<unsigned long>(k - 1)));
        Rat br(binomial(Int(n), static_cast<unsigned long>(k + 1)));
        Rat nk = a[k] / bk, nl = a[k - 1] / bl, nr = a[k + 1] / br;
        if (nk * nk < nl * nr) rep.normalized_log_concave = false;
    }
    return rep;
}

LogVerdict constant_coeff_classify(const Rat& C1, const Rat& C2, const Rat& a0,
                                   const Rat& a1, long probe_horizon) {
    if (C1.sign() <= 0 || C2.sign() <= 0 || a0.sign() <= 0 || a1.sign() <= 0)
        throw std::domain_error("constant_coeff_classify: positive data required");
    Rat prev = a0, cur = a1;
    for (long n = 2; n <= probe_horizon; ++n) {
        Rat next = C1 * cur - C2 * prev;
        if (next.sign() <= 0)
            throw std::domain_error(
                "constant_coeff_classify: sequence not positive at index " +
                std::to_string(n));
        prev = cur;
        cur = next;
    }
    Rat a2 = C1 * a1 - C2 * a0;
    Rat delta = a0 * a2 - a1 * a1;
    if (delta.sign() > 0) return LogVerdict::LogConvex;
    if (delta.sign() < 0) return LogVerdict::LogConcave;
    return LogVerdict::Geometric;
}

Triangle triangle_eval(const TwoIndexRecurrence& rec, long rows) {
    Triangle tri(rows);
    for (long n = 0; n < rows; ++n) {
        tri[n].resize(n + 1, Quad(0));
        for (long k = 0; k <= n; ++k) {
            if (n == 0) {
                tri[n][k] = Quad(k == 0 ? 1 : 0);
                continue;
            }
            if (k == 0) {
                tri[n][k] =
                    Quad(rec.left == TwoIndexRecurrence::Edge::Ones ? 1 : 0);
                continue;
            }
            Quad up = (k <= n - 1) ? tri[n - 1][k] : Quad(0);
            Quad diag = tri[n - 1][k - 1];
            Quad nn{Rat(n)}, kk{Rat(k)};
            tri[n][k] = rec.R(nn, kk) * diag + rec.S(nn, kk) * up;
        }
    }
    return tri;
}

TriangleCheckReport triangle_checks(const Triangle& tri, TriangleMode mode) {
    TriangleCheckReport rep;
    long rows = static_cast<long>(tri.size());
    if (mode == TriangleMode::Rows) {
        for (long n = 0; n < rows; ++n) {
            for (long k = 1; k + 1 <= n; ++k) {
                const Quad& l = tri[n][k - 1];
                const Quad& c = tri[n][k];
                const Quad& r = tri[n][k + 1];
                if (l.is_zero() || c.is_zero() || r.is_zero())
                    continue;  // outside the positive support
                if (c * c < l * r) {
                    rep.ok = false;
                    rep.violations.emplace_back(n, k);
                }
            }
        }
    } else {
        // q(n+1,k) >= q(n,k) with q(n,k) = a(n,k)/a(n,k-1), skipping
        // entries whose predecessor vanishes.
        for (long n = 0; n + 1 < rows; ++n) {
            for (long k = 1; k <= n; ++k) {
                if (tri[n][k - 1].is_zero() || tri[n + 1][k - 1].is_zero())
                    continue;
                Quad lhs = tri[n + 1][k] * tri[n][k - 1];
                Quad rhs = tri[n][k] * tri[n + 1][k - 1];
                if (lhs < rhs) {
                    rep.ok = false;
                    rep.violations.emplace_back(n, k);
                }
            }
        }
    }
    return rep;
}

}  // namespace logbehave
