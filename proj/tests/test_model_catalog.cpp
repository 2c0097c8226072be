#include <doctest.h>

#include "logbehave/catalog.hpp"
#include "logbehave/engine.hpp"

using namespace logbehave;

namespace {

std::vector<long> prefix(const TermList& t, size_t n) {
    std::vector<long> out;
    for (size_t i = 0; i < n && i < t.terms.size(); ++i)
        out.push_back(t.terms[i].as_rat().num().get_si());
    return out;
}

TermList terms_of(const std::string& name, long count,
                  const std::vector<Rat>& params = {}) {
    return eval_terms(catalog_get(name, params).primary(), count);
}

}  // namespace

TEST_CASE("printed initial values reproduce exactly") {
    CHECK(prefix(terms_of("derangements", 7), 7) ==
          std::vector<long>{1, 0, 1, 2, 9, 44, 265});
    CHECK(prefix(terms_of("motzkin", 10), 10) ==
          std::vector<long>{1, 1, 2, 4, 9, 21, 51, 127, 323, 835});
    CHECK(prefix(terms_of("schroder_big", 6), 6) ==
          std::vector<long>{1, 2, 6, 22, 90, 394});
    CHECK(prefix(terms_of("delannoy", 5), 5) ==
          std::vector<long>{1, 3, 13, 63, 321});
    CHECK(prefix(terms_of("baxter", 8), 8) ==
          std::vector<long>{1, 1, 2, 6, 22, 92, 422, 2074});
    CHECK(prefix(terms_of("cycle_graphs", 5), 5) ==
          std::vector<long>{1, 1, 2, 5, 17});
    CHECK(prefix(terms_of("directed_animals", 5), 5) ==
          std::vector<long>{1, 2, 5, 13, 35});
    CHECK(prefix(terms_of("t2_matrices", 8), 8) ==
          std::vector<long>{1, 0, 1, 1, 6, 22, 130, 822});
    CHECK(prefix(terms_of("sym012_matrices", 4), 4) ==
          std::vector<long>{1, 1, 3, 11});
    CHECK(prefix(terms_of("e_k", 9, {Rat(5)}), 9) ==
          std::vector<long>{1, 1, 1, 1, 1, 25, 145, 505, 1345});
    CHECK(prefix(terms_of("fib_odd", 5), 5) ==
          std::vector<long>{1, 2, 5, 13, 34});
    CHECK(prefix(terms_of("fib_even", 5), 5) ==
          std::vector<long>{1, 3, 8, 21, 55});
    CHECK(prefix(terms_of("franel3", 4), 4) == std::vector<long>{1, 2, 10, 56});
    CHECK(prefix(terms_of("franel4", 4), 4) == std::vector<long>{1, 2, 18, 164});
}

TEST_CASE("secondary structure initial blocks match the explicit recurrences") {
    CHECK(prefix(terms_of("sec_struct", 11, {Rat(1)}), 11) ==
          std::vector<long>{1, 1, 1, 2, 4, 8, 17, 37, 82, 185, 423});
    CHECK(prefix(terms_of("sec_struct", 9, {Rat(2)}), 9) ==
          std::vector<long>{1, 1, 1, 1, 2, 4, 8, 16, 33});
    CHECK(prefix(terms_of("sec_struct", 9, {Rat(3)}), 9) ==
          std::vector<long>{1, 1, 1, 1, 1, 2, 4, 8, 16});
}

TEST_CASE("general A(l) coefficient table reproduces the explicit recurrences") {
    // l = 0 must coincide with the Motzkin short recurrence
    auto general0 = std::get<LinearRecurrence>(
        catalog_get("sec_struct_short", {Rat(0)}).primary());
    auto motzkin = std::get<LinearRecurrence>(catalog_get("motzkin").primary());
    REQUIRE(general0.lags == motzkin.lags);
    for (size_t i = 0; i < general0.lags.size(); ++i)
        CHECK(general0.rhs[i] == motzkin.rhs[i]);

    // l = 1,2,3: identical polynomial coefficients as the printed forms
    for (long l : {1L, 2L, 3L}) {
        auto general = std::get<LinearRecurrence>(
            catalog_get("sec_struct_short", {Rat(l)}).primary());
        auto expl = std::get<LinearRecurrence>(
            catalog_get("sec_struct", {Rat(l)}).primary());
        REQUIRE(general.lags == expl.lags);
        for (size_t i = 0; i < general.lags.size(); ++i)
            CHECK(general.rhs[i] == expl.rhs[i]);
    }
}

TEST_CASE("two-definition catalog entries agree on the overlap") {
    for (const char* name : {"motzkin", "schroder_big"}) {
        CatalogEntry e = catalog_get(name);
        REQUIRE(e.definitions.size() == 2);
        TermList a = eval_terms(e.definitions[0], 500);
        TermList b = eval_terms(e.definitions[1], 500);
        bool equal = true;
        for (long n = 0; n < 500; ++n) equal = equal && (a.at(n) == b.at(n));
        CHECK(equal);
    }
    for (long l : {1L, 2L, 3L}) {
        CatalogEntry e = catalog_get("sec_struct", {Rat(l)});
        TermList a = eval_terms(e.definitions[0], 200);
        TermList b = eval_terms(e.definitions[1], 200);
        bool equal = true;
        for (long n = 0; n < 200; ++n) equal = equal && (a.at(n) == b.at(n));
        CHECK(equal);
    }
}

TEST_CASE("general short form matches the convolution beyond rank 3") {
    for (long l : {4L, 5L}) {
        TermList a = eval_terms(
            catalog_get("sec_struct_short", {Rat(l)}).primary(), 120);
        TermList b = eval_terms(
            catalog_get("sec_struct_conv", {Rat(l)}).primary(), 120);
        bool equal = true;
        for (long n = 0; n < 120; ++n) equal = equal && (a.at(n) == b.at(n));
        CHECK(equal);
    }
}

TEST_CASE("schroder convolution values") {
    CHECK(prefix(terms_of("schroder_conv", 4), 4) ==
          std::vector<long>{1, 2, 6, 22});
}

TEST_CASE("quotient_form matches the printed quotient recurrences") {
    auto motzkin = std::get<LinearRecurrence>(catalog_get("motzkin").primary());
    QuotientRecurrence q = quotient_form(motzkin);
    REQUIRE(q.terms.size() == 2);
    // q(n) = (2n+1)/(n+2) + 3(n-1)/(n+2) / q(n-1)
    CHECK(q.terms[0].coeff ==
          RatFun(PolyQ({Quad(1), Quad(2)}), PolyQ({Quad(2), Quad(1)})));
    CHECK(q.terms[0].lags.empty());
    CHECK(q.terms[1].coeff ==
          RatFun(PolyQ({Quad(-3), Quad(3)}), PolyQ({Quad(2), Quad(1)})));
    CHECK(q.terms[1].lags == std::vector<int>{1});

    auto schroder = std::get<LinearRecurrence>(catalog_get("schroder_big").primary());
    QuotientRecurrence qs = quotient_form(schroder);
    CHECK(qs.terms[0].coeff ==
          RatFun(PolyQ({Quad(-3), Quad(6)}), PolyQ({Quad(1), Quad(1)})));
    CHECK(qs.terms[1].coeff ==
          RatFun(PolyQ({Quad(2), Quad(-1)}), PolyQ({Quad(1), Quad(1)})));

    // cycle graphs: q(n) = n - C(n-1,2) / (q(n-1) q(n-2))
    auto cycles = std::get<LinearRecurrence>(catalog_get("cycle_graphs").primary());
    QuotientRecurrence qc = quotient_form(cycles);
    REQUIRE(qc.terms.size() == 2);
    CHECK(qc.terms[0].coeff == RatFun(PolyQ({Quad(0), Quad(1)})));
    CHECK(qc.terms[1].lags == std::vector<int>{1, 2});
    CHECK(qc.terms[1].coeff ==
          RatFun(Quad(Rat(-1, 2)) * (PolyQ({Quad(-1), Quad(1)}) * PolyQ({Quad(-2), Quad(1)}))));
}

TEST_CASE("quotient recurrence evaluation equals term ratios exactly") {
    struct Case {
        const char* name;
        std::vector<Rat> params;
    };
    std::vector<Case> cases = {
        {"motzkin", {}},          {"schroder_big", {}},
        {"franel3", {}},          {"franel4", {}},
        {"baxter", {}},           {"cycle_graphs", {}},
        {"sym012_matrices", {}},  {"delannoy", {}},
        {"derangements", {}},     {"t2_matrices", {}},
        {"fib_odd", {}},          {"fib_even", {}},
        {"directed_animals", {}}, {"e_k", {Rat(5)}},
        {"sec_struct", {Rat(1)}}, {"sec_struct", {Rat(3)}},
        {"gegenbauer", {Rat(2), Rat(2)}},
        {"laguerre", {Rat(-1)}},
    };
    for (const auto& cs : cases) {
        auto rec = std::get<LinearRecurrence>(
            catalog_get(cs.name, cs.params).primary());
        QuotientRecurrence qr = quotient_form(rec);
        TermList t = eval_terms(rec, 201 - rec.origin);
        long start = rec.origin;  // quotients begin past the last zero term
        for (long n = rec.origin; n <= t.last_index(); ++n)
            if (t.at(n).is_zero()) start = n + 1;
        TermList trimmed;
        trimmed.origin_index = start;
        for (long n = start; n <= t.last_index(); ++n)
            trimmed.terms.push_back(t.at(n));
        QuotientSequence direct = quotients(trimmed);
        // seed the recurrence with just enough leading quotients
        QuotientSequence seed;
        seed.origin_index = direct.origin_index;
        long need = std::max<long>(qr.max_lag(),
                                   qr.valid_from - direct.origin_index);
        for (long i = 0; i < need; ++i)
            seed.quotients.push_back(direct.at(direct.origin_index + i));
        QuotientSequence rebuilt =
            eval_quotient_recurrence(qr, seed, direct.last_index());
        bool equal = true;
        for (long n = rebuilt.origin_index; n <= rebuilt.last_index(); ++n)
            equal = equal && (rebuilt.at(n) == direct.at(n));
        CHECK_MESSAGE(equal, cs.name);
    }
}

TEST_CASE("nonhomogeneous quotient transform") {
    // a(n) = 2a(n-1) + 1, a(0) = 1: terms 1,3,7,15 and q(n) = 3 - 2/q(n-1)
    NonhomRecurrence rec;
    rec.name = "mersenne";
    rec.R = RatFun(2);
    rec.S = RatFun(1);
    rec.initial_terms = {Quad(1)};
    TermList t = eval_terms(rec, 5);
    CHECK(prefix(t, 5) == std::vector<long>{1, 3, 7, 15, 31});

    QuotientRecurrence qr = nonhom_quotient_form(rec);
    REQUIRE(qr.terms.size() == 2);
    CHECK(qr.terms[0].coeff == RatFun(3));
    CHECK(qr.terms[1].coeff == RatFun(-2));
    CHECK(qr.terms[1].lags == std::vector<int>{1});
    QuotientSequence seed;
    seed.origin_index = 1;
    seed.quotients = {Quad(3)};
    QuotientSequence q = eval_quotient_recurrence(qr, seed, 4);
    CHECK(q.at(2) == Quad(Rat(7, 3)));
    CHECK(q.at(3) == Quad(Rat(15, 7)));

    // R = S = 1 gives q(n) = 2 - 1/q(n-1)
    NonhomRecurrence ones;
    ones.R = RatFun(1);
    ones.S = RatFun(1);
    ones.initial_terms = {Quad(1)};
    QuotientRecurrence q1 = nonhom_quotient_form(ones);
    CHECK(q1.terms[0].coeff == RatFun(2));
    CHECK(q1.terms[1].coeff == RatFun(-1));

    // second-order form with T == 0 reduces to the homogeneous quotient form
    NonhomRecurrence second;
    second.R = RatFun(PolyQ({Quad(1), Quad(2)}));
    second.S = RatFun(PolyQ({Quad(-3), Quad(3)}));
    second.T = RatFun(0);
    second.initial_terms = {Quad(1), Quad(1)};
    QuotientRecurrence q2 = nonhom_quotient_form(second);
    REQUIRE(q2.terms.size() == 2);
    CHECK(q2.terms[0].coeff == second.R);
    CHECK(q2.terms[1].coeff == second.S);
}

TEST_CASE("catalog errors") {
    CHECK_THROWS(catalog_get("unknown_sequence"));
    CHECK_THROWS(catalog_get("gegenbauer", {Rat(-1), Rat(2)}));  // nu <= -1/2
    CHECK_THROWS(catalog_get("gegenbauer", {Rat(1)}));           // arity
    CHECK_THROWS(catalog_get("e_k", {Rat(0)}));
    CHECK_THROWS(catalog_get("sec_struct", {Rat(9)}));
}

TEST_CASE("chebyshev and legendre specializations") {
    // U_n(3/2) = F_{2n+2}; P_n(3) = Delannoy
    TermList u = terms_of("chebyshev_u", 6, {Rat(3, 2)});
    CHECK(prefix(u, 6) == std::vector<long>{1, 3, 8, 21, 55, 144});
    TermList p = terms_of("legendre", 5, {Rat(3)});
    CHECK(prefix(p, 5) == std::vector<long>{1, 3, 13, 63, 321});
    // gegenbauer at nu=2, t=2: 1, 8, 46
    TermList g = terms_of("gegenbauer", 3, {Rat(2), Rat(2)});
    CHECK(prefix(g, 3) == std::vector<long>{1, 8, 46});
    // laguerre at t=-1: 1, 2, 7/2
    TermList lag = terms_of("laguerre", 3, {Rat(-1)});
    CHECK(lag.terms[2] == Quad(Rat(7, 2)));
    // gegenbauer derivatives at nu=1: C'_2 = 8t... values 2, 8t, ...
    TermList gd = terms_of("gegenbauer_deriv", 3, {Rat(1), Rat(2)});
    CHECK(gd.origin_index == 1);
    CHECK(gd.terms[0] == Quad(2));
    CHECK(gd.terms[1] == Quad(16));
}
