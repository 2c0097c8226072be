// Acceptance suite: replays every headline result end to end and prints one
// pass/fail line per criterion. Exit code 0 only if all pass.

#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "logbehave/calculus.hpp"
#include "logbehave/catalog.hpp"
#include "logbehave/engine.hpp"
#include "logbehave/oracle.hpp"
#include "logbehave/sandwich.hpp"

using namespace logbehave;

namespace {

int failures = 0;

void criterion(const std::string& label, const std::function<bool()>& body) {
    bool ok = false;
    std::string error;
    try {
        ok = body();
    } catch (const std::exception& e) {
        error = e.what();
    }
    if (!ok) ++failures;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << label;
    if (!error.empty()) std::cout << " (" << error << ")";
    std::cout << std::endl;
}

TermList terms_of(const std::string& name, long count,
                  const std::vector<Rat>& params = {}) {
    return eval_terms(catalog_get(name, params).primary(), count);
}

bool equals_prefix(const TermList& t, std::vector<long> expect, long from = 0) {
    for (size_t i = 0; i < expect.size(); ++i)
        if (t.at(from + static_cast<long>(i)) != Quad(Rat(expect[i])))
            return false;
    return true;
}

QuotientSequence quotients_after_zeros(const TermList& t) {
    long start = t.origin_index;
    for (long n = t.origin_index; n <= t.last_index(); ++n)
        if (t.at(n).is_zero()) start = n + 1;
    TermList s;
    s.origin_index = start;
    for (long n = start; n <= t.last_index(); ++n) s.terms.push_back(t.at(n));
    return quotients(s);
}

TermList over_factorials(const TermList& t) {
    TermList s = t;
    Rat fact(1);
    for (size_t i = 0; i < s.terms.size(); ++i) {
        long n = s.origin_index + static_cast<long>(i);
        if (n > 0) fact *= Rat(n);
        s.terms[i] = s.terms[i] * Quad(Rat(1) / fact);
    }
    return s;
}

bool weakly(LogVerdict got, LogVerdict want) {
    return got == want || got == LogVerdict::Geometric;
}

bool classify_is(const std::string& name, long lo, long hi, LogVerdict want,
                 const std::vector<Rat>& params = {}) {
    TermList t = terms_of(name, hi + 2, params);
    return weakly(classify_window(t, lo, hi).verdict, want);
}

// relative proximity |q - limit| <= tol * limit, with q strictly on the
// claimed side of the limit; every comparison exact over Q(sqrt d)
bool limit_close(const QuotientSequence& q, const Quad& limit, const Rat& tol,
                 bool below) {
    Quad last = q.at(q.last_index());
    if (below && !(last < limit)) return false;
    Quad diff = below ? limit - last : last - limit;
    return diff <= Quad(tol) * limit && diff >= Quad(0);
}

}  // namespace

int main() {
    std::cout << "acceptance: exact replication of the printed results\n";

    criterion("1. reference-value regression: known values match exactly", [] {
        bool ok = true;
        ok &= equals_prefix(terms_of("derangements", 7), {1, 0, 1, 2, 9, 44, 265});
        ok &= equals_prefix(terms_of("e_k", 9, {Rat(5)}),
                            {1, 1, 1, 1, 1, 25, 145, 505, 1345});
        ok &= equals_prefix(terms_of("cycle_graphs", 5), {1, 1, 2, 5, 17});
        ok &= equals_prefix(terms_of("baxter", 4), {1, 1, 2, 6});
        ok &= equals_prefix(terms_of("directed_animals", 5), {1, 2, 5, 13, 35}, 1);
        ok &= equals_prefix(terms_of("sec_struct", 8, {Rat(1)}),
                            {1, 1, 1, 2, 4, 8, 17, 37});
        ok &= equals_prefix(terms_of("sec_struct", 8, {Rat(2)}),
                            {1, 1, 1, 1, 2, 4, 8, 16});
        ok &= equals_prefix(terms_of("sec_struct", 8, {Rat(3)}),
                            {1, 1, 1, 1, 1, 2, 4, 8});
        QuotientSequence f3 = quotients_after_zeros(terms_of("franel3", 4));
        ok &= f3.at(2) == Quad(5);
        QuotientSequence sch = quotients_after_zeros(terms_of("schroder_big", 5));
        ok &= sch.at(2) == Quad(3) && sch.at(3) == Quad(Rat(11, 3));
        QuotientSequence mo = quotients_after_zeros(terms_of("motzkin", 4));
        ok &= mo.at(2) == Quad(2);
        QuotientSequence t2 = quotients_after_zeros(terms_of("t2_matrices", 6));
        ok &= t2.at(3) == Quad(1) && t2.at(4) == Quad(6);
        return ok;
    });

    criterion("2. definition-vs-recurrence equivalences are exact", [] {
        bool ok = true;
        for (long r : {3L, 4L}) {
            TermList f = terms_of(r == 3 ? "franel3" : "franel4", 501);
            for (long n = 0; n <= 500; ++n)
                ok &= f.at(n) == Quad(Rat(oracle::count_franel_direct(n, r)));
        }
        CatalogEntry mz = catalog_get("motzkin");
        TermList a = eval_terms(mz.definitions[0], 501);
        TermList b = eval_terms(mz.definitions[1], 501);
        for (long n = 0; n <= 500; ++n) ok &= a.at(n) == b.at(n);
        for (long n = 0; n <= 40; ++n)
            ok &= a.at(n) ==
                  Quad(Rat(oracle::count_paths({oracle::PathFamily::Motzkin, n})));
        for (long l : {1L, 2L, 3L}) {
            CatalogEntry e = catalog_get("sec_struct", {Rat(l)});
            TermList s = eval_terms(e.definitions[0], 201);
            TermList conv = eval_terms(e.definitions[1], 201);
            for (long n = 0; n <= 200; ++n) ok &= s.at(n) == conv.at(n);
            for (long n = 0; n <= 14; ++n)
                ok &= s.at(n) == Quad(Rat(oracle::count_secondary_direct(n, l)));
        }
        auto eul = std::get<TwoIndexRecurrence>(catalog_get("eulerian").primary());
        Triangle tri = triangle_eval(eul, 9);
        for (long n = 1; n <= 8; ++n)
            for (long k = 0; k < n; ++k)
                ok &= tri[n][k] ==
                      Quad(Rat(oracle::count_permutations(
                          n, oracle::PermPredicate::AscentsEqual, k)));
        for (long n = 0; n <= 12; ++n)
            ok &= oracle::count_secondary_direct(n, -1) == oracle::catalan(n + 1);
        return ok;
    });

    criterion("3. certificate replays: sandwich and calculus all Proved", [] {
        bool ok = true;
        for (const char* name : {"motzkin", "derangements", "t2_matrices",
                                 "sec_struct_1", "sec_struct_2"})
            ok &= verify_sandwich_catalog(name).status == Verdict::Proved;
        for (const char* name :
             {"schroder_thm41", "motzkin_thm42", "directed_animals_thm42",
              "franel3_thm42", "baxter_threeterm", "gegenbauer_dec",
              "delannoy_dec", "gegenbauer_deriv_dec", "laguerre_dec"})
            ok &= verify_calculus(calculus_catalog(name)).status ==
                  Verdict::Proved;
        // reduced keys proportional (positive rational factor) to the
        // corrected printed quadratics: 1.5x^2+61.5x+177 and 643x^2-1127x+900
        auto proportional = [](const PolyQ& p, const PolyQ& q) {
            if (p.degree() != q.degree()) return false;
            Quad c = p.leading() / q.leading();
            return c.is_rational() && c.sign() > 0 && p == c * q;
        };
        CalculusReport mo = verify_calculus(calculus_catalog("motzkin_thm42"));
        ok &= proportional(mo.reduced_key,
                           PolyQ({Quad(Rat(177)), Quad(Rat(123, 2)), Quad(Rat(3, 2))}));
        CalculusReport fr = verify_calculus(calculus_catalog("franel3_thm42"));
        ok &= proportional(fr.reduced_key,
                           PolyQ({Quad(900), Quad(-1127), Quad(643)}));
        return ok;
    });

    criterion("4. quotient limits at n = 2000: monotone, bounded, close", [] {
        bool ok = true;
        auto tail = [](const std::string& name, const std::vector<Rat>& params,
                       long upto) {
            TermList t = terms_of(name, upto + 1, params);
            return quotients_after_zeros(t);
        };
        Quad sqrt2 = Quad::sqrt_of(2);
        Quad lim_schroder = Quad(3) + Quad(2) * sqrt2;
        Quad phi2{Rat(3, 2), Rat(1, 2), 5};
        Quad alpha2 = Quad(1) + sqrt2;

        ok &= limit_close(tail("motzkin", {}, 2000), Quad(3), Rat(1, 1000), true);
        ok &= limit_close(tail("schroder_big", {}, 2000), lim_schroder,
                          Rat(1, 100), true);
        ok &= limit_close(tail("delannoy", {}, 2000), lim_schroder, Rat(1, 100),
                          true);
        ok &= limit_close(tail("franel3", {}, 2000), Quad(8), Rat(1, 100), true);
        ok &= limit_close(tail("franel4", {}, 2000), Quad(16), Rat(1, 10), true);
        ok &= limit_close(tail("sec_struct", {Rat(1)}, 2000), phi2, Rat(1, 100),
                          true);
        ok &= limit_close(tail("sec_struct", {Rat(2)}, 2000), alpha2,
                          Rat(1, 100), true);
        ok &= limit_close(tail("baxter", {}, 2000), Quad(8), Rat(1, 10), true);
        return ok;
    });

    criterion("5. classification suite over exact delta signs", [] {
        bool ok = true;
        ok &= classify_is("motzkin", 1, 200, LogVerdict::LogConvex);
        ok &= classify_is("schroder_big", 1, 200, LogVerdict::LogConvex);
        ok &= classify_is("delannoy", 1, 200, LogVerdict::LogConvex);
        ok &= classify_is("franel3", 1, 200, LogVerdict::LogConvex);
        ok &= classify_is("franel4", 1, 200, LogVerdict::LogConvex);
        ok &= classify_is("bell", 1, 60, LogVerdict::LogConvex);
        ok &= classify_is("directed_animals", 2, 200, LogVerdict::LogConvex);
        ok &= classify_is("cycle_graphs", 1, 200, LogVerdict::LogConvex);
        ok &= classify_is("baxter", 1, 200, LogVerdict::LogConvex);
        ok &= classify_is("sym012_matrices", 1, 200, LogVerdict::LogConvex);
        ok &= classify_is("fib_odd", 1, 200, LogVerdict::LogConvex);
        ok &= classify_is("legendre", 1, 200, LogVerdict::LogConvex, {Rat(3)});
        for (long l : {1L, 2L, 3L})
            ok &= classify_is("sec_struct", 1, 200, LogVerdict::LogConvex,
                              {Rat(l)});
        for (long k : {1L, 2L, 3L, 4L})
            ok &= classify_is("c_k", 1, 58, LogVerdict::LogConvex, {Rat(k)});
        {
            TermList d = terms_of("derangements", 203);
            TermList trimmed;
            trimmed.origin_index = 2;
            for (long n = 2; n <= d.last_index(); ++n)
                trimmed.terms.push_back(d.at(n));
            ok &= classify_window(trimmed, 3, 200).verdict ==
                  LogVerdict::LogConvex;
        }
        ok &= classify_is("t2_matrices", 6, 200, LogVerdict::LogConvex);
        ok &= classify_is("fib_even", 2, 200, LogVerdict::LogConcave);
        ok &= classify_is("chebyshev_u", 1, 200, LogVerdict::LogConcave,
                          {Rat(3, 2)});
        ok &= classify_is("gegenbauer", 1, 200, LogVerdict::LogConcave,
                          {Rat(2), Rat(2)});
        ok &= classify_is("laguerre", 1, 200, LogVerdict::LogConcave, {Rat(-1)});
        ok &= weakly(classify_window(over_factorials(terms_of("motzkin", 202)),
                                     1, 200)
                         .verdict,
                     LogVerdict::LogConcave);
        ok &= weakly(classify_window(over_factorials(terms_of("bell", 62)), 1,
                                     60)
                         .verdict,
                     LogVerdict::LogConcave);
        ok &= classify_window(terms_of("fibonacci", 62), 2, 60).verdict ==
              LogVerdict::LogFibonacci;
        ok &= classify_window(terms_of("e_k", 42, {Rat(5)}), 5, 40).verdict ==
              LogVerdict::Indefinite;
        return ok;
    });

    criterion("6. exponential-transform property suite and semi-additivity", [] {
        bool ok = true;
        std::vector<std::pair<std::string, std::vector<Rat>>> inputs = {
            {"bell", {}}, {"involutions", {}}, {"c_k", {Rat(1)}},
            {"c_k", {Rat(2)}}, {"c_k", {Rat(3)}}, {"c_k", {Rat(4)}}};
        for (const auto& [name, params] : inputs) {
            CatalogEntry e = catalog_get(name, params);
            const auto& def = std::get<BcDefinition>(e.primary());
            if (!bc_hypothesis_check(def, 60).ok) return false;
            TermList b = bc_transform(def, 61);
            ok &= weakly(classify_window(b, 1, 59).verdict,
                         LogVerdict::LogConvex);
            ok &= weakly(classify_window(over_factorials(b), 1, 59).verdict,
                         LogVerdict::LogConcave);
        }
        ok &= semiadditivity_check(terms_of("bell", 41), 40).ok;
        ok &= semiadditivity_check(terms_of("motzkin", 41), 40).ok;
        return ok;
    });

    criterion("7. triangle suite: rows, columns, Newton tests", [] {
        bool ok = true;
        for (const char* name : {"binomial", "stirling1", "stirling2", "eulerian"}) {
            auto rec = std::get<TwoIndexRecurrence>(catalog_get(name).primary());
            Triangle tri = triangle_eval(rec, 26);
            ok &= triangle_checks(tri, TriangleMode::Rows).ok;
        }
        auto eul = std::get<TwoIndexRecurrence>(catalog_get("eulerian").primary());
        ok &= triangle_checks(triangle_eval(eul, 26), TriangleMode::Columns).ok;
        auto bin = std::get<TwoIndexRecurrence>(catalog_get("binomial").primary());
        Triangle b = triangle_eval(bin, 26);
        for (long n = 1; n <= 25; ++n) {
            std::vector<Rat> row;
            for (long k = 0; k <= n; ++k) row.push_back(b[n][k].as_rat());
            NewtonReport rep = newton_test(row);
            ok &= rep.log_concave && rep.normalized_log_concave;
        }
        return ok;
    });

    criterion("8. negative controls behave as stated", [] {
        bool ok = true;
        {
            SandwichCertificate cert = sandwich_catalog("derangements");
            cert.bound.expression = RatFun(PolyQ({Quad(1), Quad(1)}));  // n + 1
            ok &= verify_sandwich(cert).status == Verdict::Disproved;
        }
        {
            CalculusCertificate cert = calculus_catalog("motzkin_bounds");
            cert.cond.m = RatFun(3);
            ok &= verify_calculus(cert).status == Verdict::Disproved;
        }
        {
            // a(n) = 3a(n-1) + a(n-2): S = +1 > 0 violates the hypothesis
            LinearRecurrence rec;
            rec.name = "s_positive";
            rec.lhs = PolyQ(1);
            rec.lags = {1, 2};
            rec.rhs = {PolyQ(3), PolyQ(1)};
            rec.origin = 0;
            rec.valid_from = 2;
            rec.initial_terms = {Quad(1), Quad(1)};
            CalculusConditionSet c;
            c.m = RatFun(1);
            c.n0 = Rat(1);
            c.base_check_hi = 5;
            ok &= check_thm41(rec, c).status == Verdict::Disproved;
        }
        {
            SandwichCertificate cert = sandwich_catalog("sec_struct_1");
            cert.plan.terms.clear();  // no term splitting
            Verdict v = verify_sandwich(cert).status;
            ok &= v == Verdict::Inconclusive;
        }
        ok &= classify_window(terms_of("e_k", 42, {Rat(5)}), 5, 40).verdict ==
              LogVerdict::Indefinite;
        return ok;
    });

    if (failures == 0) {
        std::cout << "all acceptance criteria passed\n";
        return 0;
    }
    std::cout << failures << " acceptance criterion(s) failed\n";
    return 1;
}
