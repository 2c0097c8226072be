#include <doctest.h>

#include "logbehave/catalog.hpp"
#include "logbehave/engine.hpp"
#include "logbehave/oracle.hpp"

using namespace logbehave;
using namespace logbehave::oracle;

TEST_CASE("path counts: Motzkin, Dyck, Delannoy") {
    CHECK(count_paths({PathFamily::Motzkin, 4}) == 9);
    CHECK(count_paths({PathFamily::Dyck, 3}) == 5);
    CHECK(count_paths({PathFamily::Delannoy, 2}) == 13);
    CHECK(count_paths({PathFamily::Motzkin, 0}) == 1);
    CHECK_THROWS(count_paths({PathFamily::Motzkin, 99}));

    TermList m = eval_terms(catalog_get("motzkin").primary(), 41);
    for (long n = 0; n <= 40; ++n)
        CHECK(m.at(n) == Quad(Rat(count_paths({PathFamily::Motzkin, n}))));

    TermList d = eval_terms(catalog_get("delannoy").primary(), 31);
    for (long n = 0; n <= 30; ++n)
        CHECK(d.at(n) == Quad(Rat(count_paths({PathFamily::Delannoy, n}))));

    for (long n = 0; n <= 12; ++n)
        CHECK(count_paths({PathFamily::Dyck, n}) == catalan(n));
}

TEST_CASE("plateau-constrained Motzkin paths") {
    PathCountSpec spec;
    spec.family = PathFamily::MotzkinMinPlateau;
    spec.min_plateau = 1;
    spec.length = 3;
    CHECK(count_paths(spec) == 2);  // S^(1)(3) = 2
    // l = 0 recovers plain Motzkin paths
    for (long n = 0; n <= 12; ++n) {
        PathCountSpec s0{PathFamily::MotzkinMinPlateau, n, 0};
        CHECK(count_paths(s0) == count_paths({PathFamily::Motzkin, n}));
    }
}

TEST_CASE("direct secondary structure counts") {
    CHECK(count_secondary_direct(3, 1) == 2);
    CHECK(count_secondary_direct(7, -1) == 1430);  // C_8
    CHECK(count_secondary_direct(5, 0) == 21);     // M_5

    // bijection with plateau-constrained Motzkin paths (Prop. 3.6)
    for (long l = 0; l <= 3; ++l)
        for (long n = 0; n <= 14; ++n) {
            PathCountSpec spec{PathFamily::MotzkinMinPlateau, n, l};
            CHECK(count_paths(spec) == count_secondary_direct(n, l));
        }

    // rank -1 counts Catalan numbers shifted by one (Prop. 3.7)
    for (long n = 0; n <= 12; ++n)
        CHECK(count_secondary_direct(n, -1) == catalan(n + 1));

    // and the short/convolution recurrences match the enumeration
    for (long l = 1; l <= 3; ++l) {
        TermList s =
            eval_terms(catalog_get("sec_struct", {Rat(l)}).primary(), 15);
        for (long n = 0; n <= 14; ++n)
            CHECK(s.at(n) == Quad(Rat(count_secondary_direct(n, l))));
    }
    CHECK_THROWS(count_secondary_direct(17, 0));
}

TEST_CASE("permutation counts") {
    CHECK(count_permutations(4, PermPredicate::Derangement) == 9);
    CHECK(count_permutations(5, PermPredicate::OrderDivides, 5) == 25);
    CHECK(count_permutations(3, PermPredicate::AscentsEqual, 1) == 4);
    CHECK(count_permutations(0, PermPredicate::Derangement) == 1);
    CHECK_THROWS(count_permutations(10, PermPredicate::Derangement));

    TermList d = eval_terms(catalog_get("derangements").primary(), 10);
    for (long n = 0; n <= 9; ++n) {
        CHECK(d.at(n) == Quad(Rat(count_permutations(n, PermPredicate::Derangement))));
        CHECK(d.at(n) == Quad(Rat(derangements_inclusion_exclusion(n))));
    }
    // the two derangement oracles agree far beyond the exhaustive cap
    TermList dd = eval_terms(catalog_get("derangements").primary(), 61);
    for (long n = 0; n <= 60; ++n)
        CHECK(dd.at(n) == Quad(Rat(derangements_inclusion_exclusion(n))));

    TermList e5 = eval_terms(catalog_get("e_k", {Rat(5)}).primary(), 10);
    for (long n = 0; n <= 9; ++n)
        CHECK(e5.at(n) ==
              Quad(Rat(count_permutations(n, PermPredicate::OrderDivides, 5))));
    TermList e4 = eval_terms(catalog_get("e_k", {Rat(4)}).primary(), 10);
    for (long n = 0; n <= 9; ++n)
        CHECK(e4.at(n) ==
              Quad(Rat(count_permutations(n, PermPredicate::OrderDivides, 4))));
}

TEST_CASE("Franel power sums") {
    CHECK(count_franel_direct(1, 3) == 2);
    CHECK(count_franel_direct(2, 3) == 10);
    CHECK(count_franel_direct(0, 5) == 1);

    for (long r : {3L, 4L}) {
        TermList f = eval_terms(
            catalog_get(r == 3 ? "franel3" : "franel4").primary(), 501);
        for (long n = 0; n <= 500; ++n)
            CHECK(f.at(n) == Quad(Rat(count_franel_direct(n, r))));
    }
}

TEST_CASE("Catalan log-convexity from the closed form") {
    for (long n = 1; n <= 100; ++n) {
        Int c0 = catalan(n - 1), c1 = catalan(n), c2 = catalan(n + 1);
        CHECK(c1 * c1 <= c0 * c2);
    }
}

TEST_CASE("T2 via brute force over symmetric matrices, small n") {
    // symmetric N0-matrices with zero diagonal and all row sums 2: encode
    // the strict upper triangle with entries 0, 1, 2 and filter
    auto t2_direct = [](long n) {
        long cells = n * (n - 1) / 2;
        long total = 1;
        for (long i = 0; i < cells; ++i) total *= 3;
        Int count = 0;
        std::vector<long> entry(cells);
        for (long code = 0; code < total; ++code) {
            long c = code;
            for (long i = 0; i < cells; ++i) { entry[i] = c % 3; c /= 3; }
            bool ok = true;
            long idx = 0;
            std::vector<long> rowsum(n, 0);
            for (long i = 0; i < n && ok; ++i)
                for (long j = i + 1; j < n; ++j, ++idx) {
                    rowsum[i] += entry[idx];
                    rowsum[j] += entry[idx];
                }
            for (long i = 0; i < n; ++i) ok = ok && rowsum[i] == 2;
            if (ok) count += 1;
        }
        return count;
    };
    TermList t = eval_terms(catalog_get("t2_matrices").primary(), 7);
    for (long n = 2; n <= 6; ++n)
        CHECK(t.at(n) == Quad(Rat(t2_direct(n))));
}

TEST_CASE("sym012 via brute force over symmetric (0,1,2)-matrices") {
    // symmetric matrices, entries 0/1/2, every row sum 2, diagonal free
    auto direct = [](long n) {
        long cells = n * (n + 1) / 2;  // upper triangle including diagonal
        long total = 1;
        for (long i = 0; i < cells; ++i) total *= 3;
        Int count = 0;
        std::vector<long> entry(cells);
        for (long code = 0; code < total; ++code) {
            long c = code;
            for (long i = 0; i < cells; ++i) { entry[i] = c % 3; c /= 3; }
            long idx = 0;
            std::vector<long> rowsum(n, 0);
            for (long i = 0; i < n; ++i)
                for (long j = i; j < n; ++j, ++idx) {
                    rowsum[i] += entry[idx];
                    if (j != i) rowsum[j] += entry[idx];
                }
            bool ok = true;
            for (long i = 0; i < n; ++i) ok = ok && rowsum[i] == 2;
            if (ok) count += 1;
        }
        return count;
    };
    TermList s = eval_terms(catalog_get("sym012_matrices").primary(), 5);
    for (long n = 1; n <= 4; ++n) CHECK(s.at(n) == Quad(Rat(direct(n))));
}

TEST_CASE("T2 matrix printed values as the only cross-check") {
    TermList t = eval_terms(catalog_get("t2_matrices").primary(), 5);
    CHECK(t.at(0) == Quad(1));
    CHECK(t.at(1) == Quad(0));
    CHECK(t.at(2) == Quad(1));
    CHECK(t.at(3) == Quad(1));
    QuotientSequence q;
    q.origin_index = 3;
    q.quotients = {t.at(3) / t.at(2), t.at(4) / t.at(3)};
    CHECK(q.at(3) == Quad(1));
    CHECK(q.at(4) == Quad(6));
}
