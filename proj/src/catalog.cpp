#include "logbehave/catalog.hpp"

#include <stdexcept>

#include "logbehave/engine.hpp"

namespace logbehave {

namespace {

PolyQ P(std::initializer_list<long> coeffs) {  // ascending powers
    std::vector<Quad> v;
    for (long c : coeffs) v.emplace_back(c);
    return PolyQ(std::move(v));
}

std::vector<Quad> init_q(std::initializer_list<long> vals) {
    std::vector<Quad> v;
    for (long x : vals) v.emplace_back(x);
    return v;
}

LinearRecurrence linrec(std::string name, PolyQ lhs, std::vector<int> lags,
                        std::vector<PolyQ> rhs, long origin, long valid_from,
                        std::vector<Quad> init) {
    LinearRecurrence r;
    r.name = std::move(name);
    r.lhs = std::move(lhs);
    r.lags = std::move(lags);
    r.rhs = std::move(rhs);
    r.origin = origin;
    r.valid_from = valid_from;
    r.initial_terms = std::move(init);
    r.validate();
    return r;
}

/// A^(l)(n,k) of the general short recurrence for secondary structures:
/// three branches split at k = l+2.
PolyQ secondary_coeff(long l, long k) {
    Rat half(1, 2);
    if (k <= l + 1) {
        // -(1/2)(k-3)(2n+4-3k)
        Rat c = -half * Rat(k - 3);
        return PolyQ({Quad(c * Rat(4 - 3 * k)), Quad(c * Rat(2))});
    }
    if (k == l + 2) {
        // -(1/2)(l-3)(2n-3l-2)
        Rat c = -half * Rat(l - 3);
        return PolyQ({Quad(c * Rat(-3 * l - 2)), Quad(c * Rat(2))});
    }
    // -(1/2)(2l+3-k)(2n+4-3k)
    Rat c = -half * Rat(2 * l + 3 - k);
    return PolyQ({Quad(c * Rat(4 - 3 * k)), Quad(c * Rat(2))});
}

ConvolutionRecurrence secondary_conv(long l) {
    ConvolutionRecurrence c;
    c.name = "sec_struct_conv(" + std::to_string(l) + ")";
    c.kind = ConvolutionRecurrence::Kind::Secondary;
    c.rank = l;
    c.initial_terms.assign(l + 2, Rat(1));
    return c;
}

/// General short recurrence (n+2) S(n) = sum_{k=1}^{2l+2} A^(l)(n,k) S(n-k),
/// seeded from the convolution.
LinearRecurrence secondary_short(long l) {
    std::vector<int> lags;
    std::vector<PolyQ> rhs;
    for (long k = 1; k <= 2 * l + 2; ++k) {
        PolyQ c = secondary_coeff(l, k);
        if (c.is_zero()) continue;
        lags.push_back(static_cast<int>(k));
        rhs.push_back(std::move(c));
    }
    TermList seed = eval_terms(secondary_conv(l), 2 * l + 2);
    LinearRecurrence r;
    r.name = "sec_struct_short(" + std::to_string(l) + ")";
    r.lhs = P({2, 1});
    r.lags = std::move(lags);
    r.rhs = std::move(rhs);
    r.origin = 0;
    r.valid_from = 2 * l + 2;
    r.initial_terms = seed.terms;
    r.validate();
    return r;
}

/// nC(n) = 2t(nu+n-1)C(n-1) - (2nu+n-2)C(n-2), C0 = 1, C1 = 2 nu t.
LinearRecurrence gegenbauer_rec(const Rat& nu, const Rat& t) {
    LinearRecurrence r;
    r.name = "gegenbauer";
    r.lhs = PolyQ({Quad(0), Quad(1)});
    r.lags = {1, 2};
    r.rhs = {PolyQ({Quad(Rat(2) * t * (nu - Rat(1))), Quad(Rat(2) * t)}),
             PolyQ({Quad(-(Rat(2) * nu - Rat(2))), Quad(Rat(-1))})};
    r.origin = 0;
    r.valid_from = 2;
    r.initial_terms = {Quad(1), Quad(Rat(2) * nu * t)};
    return r;
}


LinearRecurrence e_k_rec(long k) {
    if (k < 1) throw std::domain_error("e_k: k >= 1");
    // e_k(n) = sum_{j | k} (n-1)(n-2)...(n-j+1) e_k(n-j)
    std::vector<int> lags;
    std::vector<PolyQ> rhs;
    for (long j = 1; j <= k; ++j) {
        if (k % j != 0) continue;
        PolyQ c(1);
        for (long i = 1; i <= j - 1; ++i) c *= PolyQ({Quad(Rat(-i)), Quad(1)});
        lags.push_back(static_cast<int>(j));
        rhs.push_back(std::move(c));
    }
    // seed the first k values with the same sum, zero-extended below 0
    std::vector<Quad> init{Quad(1)};
    for (long n = 1; n < k; ++n) {
        Quad acc(0);
        for (size_t i = 0; i < lags.size(); ++i) {
            long m = n - lags[i];
            Quad c = rhs[i](Quad(Rat(n)));
            if (m >= 0 && !c.is_zero()) acc += c * init[m];
        }
        init.push_back(acc);
    }
    return linrec("e_k(" + std::to_string(k) + ")", PolyQ(1), std::move(lags),
                  std::move(rhs), 0, k, std::move(init));
}

BcDefinition c_k_def(long k) {
    if (k < 1) throw std::domain_error("c_k: k >= 1");
    BcDefinition d;
    d.name = "c_k(" + std::to_string(k) + ")";
    d.prefix.assign(k, Rat(1));
    d.repeat_last = false;
    return d;
}

}  // namespace

CatalogEntry catalog_get(const std::string& name,
                         const std::vector<Rat>& parameters) {
    auto need = [&](size_t n) {
        if (parameters.size() != n)
            throw std::domain_error(name + ": expects " + std::to_string(n) +
                                    " parameter(s)");
    };
    auto int_param = [&](size_t i) {
        if (!parameters[i].is_integer())
            throw std::domain_error(name + ": integer parameter required");
        return parameters[i].num().get_si();
    };

    CatalogEntry e;
    e.name = name;
    e.parameters = parameters;

    if (name == "motzkin") {
        e.anchor = "(n+2)M(n) = (2n+1)M(n-1) + 3(n-1)M(n-2); M0=M1=1";
        e.definitions.push_back(linrec("motzkin", P({2, 1}), {1, 2},
                                       {P({1, 2}), P({-3, 3})}, 0, 2,
                                       init_q({1, 1})));
        ConvolutionRecurrence c = secondary_conv(0);
        c.name = "motzkin_conv";
        e.definitions.push_back(c);
        e.known_limit = Quad(3);
    } else if (name == "motzkin_conv") {
        e.anchor = "M(n+1) = M(n) + sum M(k)M(n-k-1)";
        ConvolutionRecurrence c = secondary_conv(0);
        c.name = "motzkin_conv";
        e.definitions.push_back(c);
        e.known_limit = Quad(3);
    } else if (name == "schroder_big") {
        e.anchor = "(n+1)r(n) = 3(2n-1)r(n-1) - (n-2)r(n-2); r0=1, r1=2";
        e.definitions.push_back(linrec("schroder_big", P({1, 1}), {1, 2},
                                       {P({-3, 6}), P({2, -1})}, 0, 2,
                                       init_q({1, 2})));
        ConvolutionRecurrence c;
        c.name = "schroder_conv";
        c.kind = ConvolutionRecurrence::Kind::Schroder;
        c.initial_terms = {Rat(1)};
        e.definitions.push_back(c);
        e.known_limit = Quad(Rat(3), Rat(2), 2);  // 3 + 2 sqrt 2
    } else if (name == "schroder_conv") {
        e.anchor = "r(n+1) = r(n) + sum_{j<=n} r(j)r(n-j); r0=1";
        ConvolutionRecurrence c;
        c.name = "schroder_conv";
        c.kind = ConvolutionRecurrence::Kind::Schroder;
        c.initial_terms = {Rat(1)};
        e.definitions.push_back(c);
        e.known_limit = Quad(Rat(3), Rat(2), 2);
    } else if (name == "delannoy") {
        e.anchor = "D(n) = P_n(3): nD(n) = 3(2n-1)D(n-1) - (n-1)D(n-2)";
        LinearRecurrence r = gegenbauer_rec(Rat(1, 2), Rat(3));
        r.name = "delannoy";
        e.definitions.push_back(std::move(r));
        e.known_limit = Quad(Rat(3), Rat(2), 2);
    } else if (name == "franel3") {
        e.anchor = "n^2 S(n) = (7n^2-7n+2)S(n-1) + 8(n-1)^2 S(n-2); 1, 2";
        e.definitions.push_back(linrec("franel3", P({0, 0, 1}), {1, 2},
                                       {P({2, -7, 7}), P({8, -16, 8})}, 0, 2,
                                       init_q({1, 2})));
        e.known_limit = Quad(8);
    } else if (name == "franel4") {
        e.anchor =
            "n^3 S(n) = 2(6n^3-9n^2+5n-1)S(n-1) + (4n-3)(4n-4)(4n-5)S(n-2)";
        e.definitions.push_back(linrec(
            "franel4", P({0, 0, 0, 1}), {1, 2},
            {P({-2, 10, -18, 12}), P({-60, 188, -192, 64})}, 0, 2,
            init_q({1, 2})));
        e.known_limit = Quad(16);
    } else if (name == "derangements") {
        e.anchor = "D(n) = (n-1)[D(n-1) + D(n-2)]; D0=1, D1=0";
        e.definitions.push_back(linrec("derangements", PolyQ(1), {1, 2},
                                       {P({-1, 1}), P({-1, 1})}, 0, 2,
                                       init_q({1, 0})));
    } else if (name == "t2_matrices") {
        e.anchor =
            "T2(n) = (n-1)T2(n-1) + (n-1)T2(n-2) - C(n-1,2)T2(n-3); 1,0,1,1";
        e.definitions.push_back(linrec(
            "t2_matrices", PolyQ(1), {1, 2, 3},
            {P({-1, 1}), P({-1, 1}),
             Quad(Rat(-1, 2)) * (P({-1, 1}) * P({-2, 1}))},
            0, 3, init_q({1, 0, 1})));
    } else if (name == "sec_struct") {
        need(1);
        long l = int_param(0);
        if (l < 1 || l > 3)
            throw std::domain_error("sec_struct: explicit recurrences cover l = 1, 2, 3");
        e.definitions.push_back(secondary_short(l));
        e.definitions.push_back(secondary_conv(l));
        if (l == 1) e.known_limit = Quad(Rat(3, 2), Rat(1, 2), 5);  // (3+sqrt5)/2
        if (l == 2) e.known_limit = Quad(Rat(1), Rat(1), 2);        // 1+sqrt2
    } else if (name == "sec_struct_conv") {
        need(1);
        long l = int_param(0);
        if (l < -1) throw std::domain_error("sec_struct_conv: l >= -1");
        e.definitions.push_back(secondary_conv(l));
    } else if (name == "sec_struct_short") {
        need(1);
        long l = int_param(0);
        if (l < 0) throw std::domain_error("sec_struct_short: l >= 0");
        e.definitions.push_back(secondary_short(l));
    } else if (name == "directed_animals") {
        e.anchor = "n a(n) = 2n a(n-1) + 3(n-2)a(n-2); a1=1, a2=2";
        e.definitions.push_back(linrec("directed_animals", P({0, 1}), {1, 2},
                                       {P({0, 2}), P({-6, 3})}, 1, 3,
                                       init_q({1, 2})));
        e.known_limit = Quad(3);
    } else if (name == "cycle_graphs") {
        e.anchor = "L(n) = nL(n-1) - C(n-1,2)L(n-3); 1,1,2";
        e.definitions.push_back(linrec(
            "cycle_graphs", PolyQ(1), {1, 3},
            {P({0, 1}), Quad(Rat(-1, 2)) * (P({-1, 1}) * P({-2, 1}))}, 0, 3,
            init_q({1, 1, 2})));
    } else if (name == "baxter") {
        e.anchor =
            "(n+1)(n+2)(n+3)(3n-2)B(n) = 2(n+1)(9n^3+3n^2-4n+4)B(n-1) + "
            "(3n-1)(n-2)(15n^2-5n-14)B(n-2) + 8(3n+1)(n-2)^2(n-3)B(n-3)";
        PolyQ Q = P({1, 1}) * P({2, 1}) * P({3, 1}) * P({-2, 3});
        PolyQ p1 = Quad(2) * (P({1, 1}) * P({4, -4, 3, 9}));
        PolyQ p2 = P({-1, 3}) * P({-2, 1}) * P({-14, -5, 15});
        PolyQ p3 = Quad(8) * (P({1, 3}) * P({-2, 1}) * P({-2, 1}) * P({-3, 1}));
        e.definitions.push_back(linrec("baxter", std::move(Q), {1, 2, 3},
                                       {std::move(p1), std::move(p2), std::move(p3)},
                                       0, 4, init_q({1, 1, 2, 6})));
        e.known_limit = Quad(8);
    } else if (name == "sym012_matrices") {
        e.anchor =
            "S(n) = (2n-1)S(n-1) - (n-1)(n-2)S(n-2) - (n-1)(n-2)S(n-3) + "
            "(1/2)(n-1)(n-2)(n-3)S(n-4); 1,1,3,11";
        PolyQ m12 = P({-1, 1}) * P({-2, 1});
        e.definitions.push_back(linrec(
            "sym012_matrices", PolyQ(1), {1, 2, 3, 4},
            {P({-1, 2}), -m12, -m12, Quad(Rat(1, 2)) * (m12 * P({-3, 1}))}, 0,
            4, init_q({1, 1, 3, 11})));
    } else if (name == "gegenbauer") {
        need(2);
        Rat nu = parameters[0], t = parameters[1];
        if (!(nu > Rat(-1, 2)))
            throw std::domain_error("gegenbauer: requires nu > -1/2");
        e.definitions.push_back(gegenbauer_rec(nu, t));
    } else if (name == "gegenbauer_deriv") {
        need(2);
        Rat nu = parameters[0], t = parameters[1];
        if (!(nu > Rat(-1, 2)))
            throw std::domain_error("gegenbauer_deriv: requires nu > -1/2");
        // (n-1) C'(n) = 2t(nu+n-1) C'(n-1) - (2nu+n-1) C'(n-2); from n=1:
        // C'(1) = 2nu, C'(2) = 4nu(nu+1)t
        LinearRecurrence r;
        r.name = "gegenbauer_deriv";
        r.lhs = P({-1, 1});
        r.lags = {1, 2};
        r.rhs = {PolyQ({Quad(Rat(2) * t * (nu - Rat(1))), Quad(Rat(2) * t)}),
                 PolyQ({Quad(-(Rat(2) * nu - Rat(1))), Quad(Rat(-1))})};
        r.origin = 1;
        r.valid_from = 3;
        r.initial_terms = {Quad(Rat(2) * nu),
                           Quad(Rat(4) * nu * (nu + Rat(1)) * t)};
        e.definitions.push_back(std::move(r));
    } else if (name == "chebyshev_u") {
        need(1);
        LinearRecurrence r = gegenbauer_rec(Rat(1), parameters[0]);
        r.name = "chebyshev_u";
        e.definitions.push_back(std::move(r));
    } else if (name == "legendre") {
        need(1);
        LinearRecurrence r = gegenbauer_rec(Rat(1, 2), parameters[0]);
        r.name = "legendre";
        e.definitions.push_back(std::move(r));
        if (parameters[0] == Rat(3)) e.known_limit = Quad(Rat(3), Rat(2), 2);
    } else if (name == "laguerre") {
        need(1);
        Rat t = parameters[0];
        e.anchor = "nL(n) = (2n-1-t)L(n-1) - (n-1)L(n-2); L0=1, L1=1-t";
        LinearRecurrence r;
        r.name = "laguerre";
        r.lhs = P({0, 1});
        r.lags = {1, 2};
        r.rhs = {PolyQ({Quad(Rat(-1) - t), Quad(2)}), P({1, -1})};
        r.origin = 0;
        r.valid_from = 2;
        r.initial_terms = {Quad(1), Quad(Rat(1) - t)};
        e.definitions.push_back(std::move(r));
        if (t.sign() < 0) e.known_limit = Quad(1);
    } else if (name == "fib_odd") {
        e.anchor = "a(n) = F(2n+1): a(n) = 3a(n-1) - a(n-2); a0=1, a1=2";
        e.definitions.push_back(linrec("fib_odd", PolyQ(1), {1, 2},
                                       {P({3}), P({-1})}, 0, 2,
                                       init_q({1, 2})));
    } else if (name == "fib_even") {
        e.anchor = "b(n) = F(2n): b(n) = 3b(n-1) - b(n-2); b1=1, b2=3";
        e.definitions.push_back(linrec("fib_even", PolyQ(1), {1, 2},
                                       {P({3}), P({-1})}, 1, 3,
                                       init_q({1, 3})));
    } else if (name == "fibonacci") {
        e.anchor = "F(n) = F(n-1) + F(n-2); F1=F2=1";
        e.definitions.push_back(linrec("fibonacci", PolyQ(1), {1, 2},
                                       {P({1}), P({1})}, 1, 3,
                                       init_q({1, 1})));
    } else if (name == "e_k") {
        need(1);
        e.definitions.push_back(e_k_rec(int_param(0)));
    } else if (name == "c_k") {
        need(1);
        e.definitions.push_back(c_k_def(int_param(0)));
    } else if (name == "involutions") {
        e.definitions.push_back(c_k_def(2));
    } else if (name == "bell") {
        e.anchor = "exp(e^x - 1): Bender-Canfield input a_k = 1 for all k";
        BcDefinition d;
        d.name = "bell";
        d.prefix = {Rat(1)};
        d.repeat_last = true;
        e.definitions.push_back(std::move(d));
    } else if (name == "eulerian") {
        e.anchor = "E(n,k) = (n-k)E(n-1,k-1) + (k+1)E(n-1,k)";
        TwoIndexRecurrence r;
        r.name = "eulerian";
        r.R = RatFun2(PolyQ2::n() - PolyQ2::k());
        r.S = RatFun2(PolyQ2::k() + PolyQ2(1));
        r.left = TwoIndexRecurrence::Edge::Ones;
        e.definitions.push_back(std::move(r));
    } else if (name == "binomial") {
        e.anchor = "C(n,k) = C(n-1,k-1) + C(n-1,k)";
        TwoIndexRecurrence r;
        r.name = "binomial";
        r.R = RatFun2(PolyQ2(1));
        r.S = RatFun2(PolyQ2(1));
        r.left = TwoIndexRecurrence::Edge::Ones;
        e.definitions.push_back(std::move(r));
    } else if (name == "stirling1") {
        e.anchor = "c(n,k) = c(n-1,k-1) + (n-1)c(n-1,k)";
        TwoIndexRecurrence r;
        r.name = "stirling1";
        r.R = RatFun2(PolyQ2(1));
        r.S = RatFun2(PolyQ2::n() - PolyQ2(1));
        r.left = TwoIndexRecurrence::Edge::Delta;
        e.definitions.push_back(std::move(r));
    } else if (name == "stirling2") {
        e.anchor = "S(n,k) = S(n-1,k-1) + k S(n-1,k)";
        TwoIndexRecurrence r;
        r.name = "stirling2";
        r.R = RatFun2(PolyQ2(1));
        r.S = RatFun2(PolyQ2::k());
        r.left = TwoIndexRecurrence::Edge::Delta;
        e.definitions.push_back(std::move(r));
    } else {
        throw std::domain_error("unknown catalog name: " + name);
    }
    if (name == "sec_struct") {
        long l = int_param(0);
        e.anchor = "secondary structures of rank " + std::to_string(l) +
                   ", short recurrence";
    }
    return e;
}

bool catalog_is_parameterized(const std::string& name) {
    return name == "sec_struct" || name == "sec_struct_conv" ||
           name == "sec_struct_short" || name == "gegenbauer" ||
           name == "gegenbauer_deriv" || name == "chebyshev_u" ||
           name == "legendre" || name == "laguerre" || name == "e_k" ||
           name == "c_k";
}

std::vector<std::pair<std::string, std::string>> catalog_names() {
    static const std::vector<std::pair<std::string, std::string>> names = {
        {"motzkin", "Motzkin numbers, short recurrence (log-convex)"},
        {"motzkin_conv", "Motzkin numbers, convolution form"},
        {"schroder_big", "big Schroder numbers, short recurrence (log-convex)"},
        {"schroder_conv", "big Schroder numbers, convolution form"},
        {"delannoy", "central Delannoy numbers D(n) = P_n(3) (log-convex)"},
        {"franel3", "Franel numbers of order 3 (log-convex)"},
        {"franel4", "Franel numbers of order 4 (log-convex)"},
        {"derangements", "derangement numbers (log-convex from n = 3)"},
        {"t2_matrices",
         "symmetric N0-matrices, row sums 2, zero trace (log-convex from 6)"},
        {"sec_struct", "secondary structures of rank l = 1..3, explicit short form"},
        {"sec_struct_conv", "secondary structures, convolution form, l >= -1"},
        {"sec_struct_short", "secondary structures, general short form, l >= 0"},
        {"directed_animals", "directed animals (log-convex)"},
        {"cycle_graphs", "graphs with all components cycles (log-convex)"},
        {"baxter", "Baxter permutations (log-convex)"},
        {"sym012_matrices", "symmetric (0,1,2)-matrices with line sums 2"},
        {"gegenbauer", "Gegenbauer values C_n^(nu)(t); params nu, t"},
        {"gegenbauer_deriv", "Gegenbauer derivative values; params nu, t"},
        {"chebyshev_u", "Chebyshev-U values U_n(t); param t"},
        {"legendre", "Legendre values P_n(t); param t"},
        {"laguerre", "Laguerre values L_n(t); param t"},
        {"fib_odd", "odd-indexed Fibonacci numbers (log-convex)"},
        {"fib_even", "even-indexed Fibonacci numbers (log-concave)"},
        {"fibonacci", "Fibonacci numbers (log-Fibonacci)"},
        {"e_k", "permutations with pi^k = id; param k"},
        {"c_k", "permutations with cycles of length <= k; param k"},
        {"involutions", "involutions = c_k at k = 2"},
        {"bell", "Bell numbers via the exponential transform (log-convex)"},
        {"eulerian", "Eulerian triangle E(n,k)"},
        {"binomial", "binomial triangle C(n,k)"},
        {"stirling1", "Stirling triangle of the first kind (unsigned)"},
        {"stirling2", "Stirling triangle of the second kind"},
    };
    return names;
}

}  // namespace logbehave
