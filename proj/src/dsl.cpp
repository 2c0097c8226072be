#include "logbehave/dsl.hpp"

#include <cctype>
#include <map>

#include "logbehave/catalog.hpp"

namespace logbehave {

namespace {

struct Token {
    enum Type { Ident, Number, Punct, End } type = End;
    std::string text;
    int line = 1, col = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& src) : s_(src) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg, tok_.line, tok_.col,
                         tok_.type == Token::End ? "<end>" : tok_.text);
    }

private:
    void advance() {
        while (i_ < s_.size()) {
            char c = s_[i_];
            if (c == '#') {  // comment to end of line
                while (i_ < s_.size() && s_[i_] != '\n') ++i_;
                continue;
            }
            if (c == '\n') { ++line_; col_ = 1; ++i_; continue; }
            if (std::isspace(static_cast<unsigned char>(c))) { ++col_; ++i_; continue; }
            break;
        }
        tok_ = Token{};
        tok_.line = line_;
        tok_.col = col_;
        if (i_ >= s_.size()) { tok_.type = Token::End; return; }
        char c = s_[i_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i_;
            while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) ++j;
            tok_.type = Token::Ident;
            tok_.text = s_.substr(i_, j - i_);
            col_ += static_cast<int>(j - i_);
            i_ = j;
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i_;
            while (j < s_.size() &&
                   (std::isdigit(static_cast<unsigned char>(s_[j])) ||
                    (s_[j] == '.' && j + 1 < s_.size() &&
                     std::isdigit(static_cast<unsigned char>(s_[j + 1])))))
                ++j;
            tok_.type = Token::Number;
            tok_.text = s_.substr(i_, j - i_);
            col_ += static_cast<int>(j - i_);
            i_ = j;
            return;
        }
        if (c == '.' && i_ + 1 < s_.size() && s_[i_ + 1] == '.') {
            tok_.type = Token::Punct;
            tok_.text = "..";
            col_ += 2;
            i_ += 2;
            return;
        }
        tok_.type = Token::Punct;
        tok_.text = std::string(1, c);
        ++col_;
        ++i_;
    }

    std::string s_;
    size_t i_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

/// Recursive-descent expression parser over RatFun in n with sqrt(d)
/// constants and parse-time binom expansion.
class ExprParser {
public:
    explicit ExprParser(Lexer& lx) : lx_(lx) {}

    RatFun parse() { return additive(); }

private:
    RatFun additive() {
        RatFun v = multiplicative();
        while (is_punct("+") || is_punct("-")) {
            std::string op = lx_.take().text;
            RatFun r = multiplicative();
            v = op == "+" ? v + r : v - r;
        }
        return v;
    }
    RatFun multiplicative() {
        RatFun v = unary();
        while (is_punct("*") || is_punct("/")) {
            std::string op = lx_.take().text;
            RatFun r = unary();
            v = op == "*" ? v * r : v / r;
        }
        return v;
    }
    RatFun unary() {
        if (is_punct("-")) {
            lx_.take();
            return -unary();
        }
        if (is_punct("+")) lx_.take();
        return power();
    }
    RatFun power() {
        RatFun v = atom();
        if (is_punct("^")) {
            lx_.take();
            bool neg = false;
            if (is_punct("-")) { lx_.take(); neg = true; }
            if (lx_.peek().type != Token::Number) lx_.fail("exponent expected");
            long e = std::stol(lx_.take().text);
            RatFun r(1);
            for (long i = 0; i < e; ++i) r *= v;
            return neg ? RatFun(1) / r : r;
        }
        return v;
    }
    RatFun atom() {
        const Token& t = lx_.peek();
        if (t.type == Token::Number) {
            std::string text = lx_.take().text;
            return RatFun(Quad(Rat::parse(text)));
        }
        if (t.type == Token::Ident) {
            std::string name = lx_.take().text;
            if (name == "n" || name == "x") return RatFun::x();
            if (name == "sqrt") {
                expect("(");
                if (lx_.peek().type != Token::Number) lx_.fail("sqrt expects an integer");
                long d = std::stol(lx_.take().text);
                expect(")");
                return RatFun(Quad::sqrt_of(d));
            }
            if (name == "binom") {
                expect("(");
                RatFun a = additive();
                expect(",");
                RatFun b = additive();
                expect(")");
                return expand_binom(a, b);
            }
            lx_.fail("unknown identifier '" + name + "'");
        }
        if (is_punct("(")) {
            lx_.take();
            RatFun v = additive();
            expect(")");
            return v;
        }
        lx_.fail("expression expected");
    }

    RatFun expand_binom(const RatFun& a, const RatFun& b) {
        // binom(p, k) with constant integer k >= 0: p(p-1)...(p-k+1)/k!
        if (!b.is_polynomial() || b.as_poly().degree() > 0)
            lx_.fail("binom: second argument must be a constant");
        Quad kq = b.is_zero() ? Quad(0) : b.as_poly().coeff(0);
        if (!kq.is_rational() || !kq.as_rat().is_integer() || kq.sign() < 0)
            lx_.fail("binom: second argument must be a nonnegative integer");
        long k = kq.as_rat().num().get_si();
        RatFun prod(1);
        for (long i = 0; i < k; ++i) prod *= (a - RatFun(Quad(Rat(i))));
        return prod / RatFun(Quad(Rat(factorial(static_cast<unsigned long>(k)))));
    }

    bool is_punct(const char* p) const {
        return lx_.peek().type == Token::Punct && lx_.peek().text == p;
    }
    void expect(const char* p) {
        if (!is_punct(p)) lx_.fail(std::string("'") + p + "' expected");
        lx_.take();
    }

    Lexer& lx_;
};

PolyQ as_polynomial(Lexer& lx, const RatFun& f) {
    if (!f.is_polynomial()) lx.fail("polynomial expected");
    return f.as_poly();
}

class Parser {
public:
    explicit Parser(const std::string& src) : lx_(src) {}

    std::vector<ParsedBlock> parse_file() {
        std::vector<ParsedBlock> blocks;
        while (lx_.peek().type != Token::End) {
            std::string kw = ident("block keyword");
            if (kw == "sequence") {
                LinearRecurrence r = sequence_block();
                sequences_[r.name] = r;
                blocks.emplace_back(std::move(r));
            } else if (kw == "certificate") {
                blocks.emplace_back(certificate_block());
            } else if (kw == "conditions") {
                blocks.emplace_back(conditions_block());
            } else {
                lx_.fail("expected sequence, certificate or conditions");
            }
        }
        return blocks;
    }

private:
    std::string ident(const char* what) {
        if (lx_.peek().type != Token::Ident)
            lx_.fail(std::string(what) + " expected");
        return lx_.take().text;
    }
    long integer() {
        bool neg = is_punct("-");
        if (neg) lx_.take();
        if (lx_.peek().type != Token::Number) lx_.fail("integer expected");
        long v = std::stol(lx_.take().text);
        return neg ? -v : v;
    }
    Rat rational() {
        bool neg = is_punct("-");
        if (neg) lx_.take();
        if (lx_.peek().type != Token::Number) lx_.fail("number expected");
        Rat v = Rat::parse(lx_.take().text);
        if (is_punct("/")) {
            lx_.take();
            if (lx_.peek().type != Token::Number) lx_.fail("denominator expected");
            v /= Rat::parse(lx_.take().text);
        }
        return neg ? -v : v;
    }
    bool is_punct(const char* p) const {
        return lx_.peek().type == Token::Punct && lx_.peek().text == p;
    }
    void expect(const char* p) {
        if (!is_punct(p)) lx_.fail(std::string("'") + p + "' expected");
        lx_.take();
    }
    void maybe_semicolon() {
        if (is_punct(";")) lx_.take();
    }
    RatFun expr() { return ExprParser(lx_).parse(); }

    LinearRecurrence sequence_block() {
        LinearRecurrence r;
        r.name = ident("sequence name");
        expect("{");
        std::map<long, Quad> init;
        std::map<int, PolyQ> ps;
        bool have_valid = false;
        while (!is_punct("}")) {
            std::string kw = ident("declaration");
            if (kw == "Q") {
                expect("("); ident("n"); expect(")");
                expect("=");
                r.lhs = as_polynomial(lx_, expr());
            } else if (kw.size() > 1 && kw[0] == 'P' &&
                       kw.find_first_not_of("0123456789", 1) == std::string::npos) {
                long lag = std::stol(kw.substr(1));
                expect("("); ident("n"); expect(")");
                expect("=");
                ps[static_cast<int>(lag)] = as_polynomial(lx_, expr());
            } else if (kw == "init") {
                while (true) {
                    ident("a");
                    expect("(");
                    long idx = integer();
                    expect(")");
                    expect("=");
                    init[idx] = Quad(rational());
                    if (is_punct(",")) { lx_.take(); continue; }
                    break;
                }
            } else if (kw == "valid") {
                ident("n");
                expect(">");
                expect("=");
                r.valid_from = integer();
                have_valid = true;
            } else {
                lx_.fail("unknown sequence declaration '" + kw + "'");
            }
            maybe_semicolon();
        }
        expect("}");
        if (init.empty()) lx_.fail("sequence needs init terms");
        long origin = init.begin()->first;
        for (auto& [idx, val] : init) {
            if (idx != origin + static_cast<long>(r.initial_terms.size()))
                lx_.fail("init indices must be contiguous");
            r.initial_terms.push_back(val);
        }
        r.origin = origin;
        for (auto& [lag, poly] : ps) {
            r.lags.push_back(lag);
            r.rhs.push_back(poly);
        }
        if (!have_valid)
            r.valid_from = origin + static_cast<long>(r.initial_terms.size());
        r.validate();
        return r;
    }

    LinearRecurrence resolve_sequence(const std::string& name,
                                      const std::vector<Rat>& params) {
        auto it = sequences_.find(name);
        if (it != sequences_.end()) return it->second;
        CatalogEntry e = catalog_get(name, params);
        if (auto* lin = std::get_if<LinearRecurrence>(&e.definitions.front()))
            return *lin;
        lx_.fail("'" + name + "' is not a linear recurrence");
    }

    std::pair<std::string, std::vector<Rat>> use_clause() {
        std::string name = ident("sequence name");
        std::vector<Rat> params;
        if (is_punct("(")) {
            lx_.take();
            while (!is_punct(")")) {
                params.push_back(rational());
                if (is_punct(",")) lx_.take();
            }
            expect(")");
        }
        return {name, params};
    }

    SandwichCertificate certificate_block() {
        SandwichCertificate c;
        c.name = ident("certificate name");
        expect("{");
        std::optional<LinearRecurrence> rec;
        long mono_from = -1;
        while (!is_punct("}")) {
            std::string kw = ident("declaration");
            if (kw == "use") {
                auto [name, params] = use_clause();
                rec = resolve_sequence(name, params);
            } else if (kw == "bound") {
                expect("=");
                c.bound.expression = expr();
            } else if (kw == "direction") {
                std::string d = ident("direction");
                if (d == "increasing") c.direction = Direction::Increasing;
                else if (d == "decreasing") c.direction = Direction::Decreasing;
                else lx_.fail("direction is increasing or decreasing");
            } else if (kw == "base") {
                c.base_lo = integer();
                expect("..");
                c.base_hi = integer();
            } else if (kw == "mono_from") {
                mono_from = integer();
            } else if (kw == "max_shift") {
                c.max_shift = static_cast<int>(integer());
            } else if (kw == "term") {
                QTerm t;
                t.coeff = expr();
                if (lx_.peek().type == Token::Ident && lx_.peek().text == "lags") {
                    lx_.take();
                    t.lags.push_back(static_cast<int>(integer()));
                    while (is_punct(",")) {
                        lx_.take();
                        t.lags.push_back(static_cast<int>(integer()));
                    }
                }
                if (lx_.peek().type == Token::Ident && lx_.peek().text == "bracket") {
                    lx_.take();
                    t.bracket_lag = static_cast<int>(integer());
                    t.bracket_shift = Quad(rational());
                }
                c.plan.terms.push_back(std::move(t));
            } else {
                lx_.fail("unknown certificate declaration '" + kw + "'");
            }
            maybe_semicolon();
        }
        expect("}");
        if (!rec) lx_.fail("certificate needs a 'use' clause");
        c.recurrence = quotient_form(*rec);
        c.mono_from = mono_from >= 0 ? mono_from : c.base_lo;

        // seed quotients past any zero terms
        TermList t = eval_terms(*rec, c.base_hi + 3 - rec->origin);
        long start = rec->origin;
        for (long n = rec->origin; n <= t.last_index(); ++n)
            if (t.at(n).is_zero()) start = n + 1;
        TermList trimmed;
        trimmed.origin_index = start;
        for (long n = start; n <= t.last_index(); ++n)
            trimmed.terms.push_back(t.at(n));
        c.seed_quotients = quotients(trimmed);
        return c;
    }

    CalculusCertificate conditions_block() {
        CalculusCertificate c;
        c.name = ident("conditions name");
        expect("{");
        std::optional<LinearRecurrence> rec;
        bool have_prefix = false;
        while (!is_punct("}")) {
            std::string kw = ident("declaration");
            if (kw == "use") {
                auto [name, params] = use_clause();
                rec = resolve_sequence(name, params);
            } else if (kw == "kind") {
                c.kind = ident("kind");
            } else if (kw == "m") {
                expect("=");
                c.cond.m = expr();
            } else if (kw == "M") {
                expect("=");
                c.cond.M = expr();
            } else if (kw == "m_squared") {
                expect("=");
                c.cond.m = expr();
                c.cond.m_is_sqrt = true;
            } else if (kw == "minorant") {
                long j = integer();
                expect("=");
                c.cond.product_minorants[static_cast<int>(j)] = expr();
            } else if (kw == "n0") {
                expect("=");
                c.cond.n0 = rational();
            } else if (kw == "base_check") {
                c.cond.base_check_hi = integer();
            } else if (kw == "prefix_from") {
                c.cond.prefix_from = integer();
                have_prefix = true;
            } else if (kw == "direction") {
                std::string d = ident("direction");
                if (d == "increasing") c.cond.direction = Direction::Increasing;
                else if (d == "decreasing") c.cond.direction = Direction::Decreasing;
                else lx_.fail("direction is increasing or decreasing");
            } else if (kw == "max_shift") {
                c.cond.max_shift = static_cast<int>(integer());
            } else if (kw == "sup_S") {
                expect("=");
                c.cond.sup_S = rational();
            } else if (kw == "sup_T") {
                expect("=");
                c.cond.sup_T = rational();
            } else {
                lx_.fail("unknown conditions declaration '" + kw + "'");
            }
            maybe_semicolon();
        }
        expect("}");
        if (!rec) lx_.fail("conditions need a 'use' clause");
        if (c.kind.empty()) lx_.fail("conditions need a 'kind'");
        c.rec = *rec;
        if (!have_prefix) c.cond.prefix_from = c.rec.origin + 1;
        return c;
    }

    Lexer lx_;
    std::map<std::string, LinearRecurrence> sequences_;
};

}  // namespace

std::vector<ParsedBlock> parse_dsl(const std::string& text) {
    return Parser(text).parse_file();
}

std::string print_dsl(const LinearRecurrence& rec) {
    std::string s = "sequence " + rec.name + " {\n";
    s += "  Q(n) = " + rec.lhs.str() + ";\n";
    for (size_t i = 0; i < rec.lags.size(); ++i)
        s += "  P" + std::to_string(rec.lags[i]) + "(n) = " + rec.rhs[i].str() +
             ";\n";
    s += "  init ";
    for (size_t i = 0; i < rec.initial_terms.size(); ++i) {
        if (i) s += ", ";
        s += "a(" + std::to_string(rec.origin + static_cast<long>(i)) + ") = " +
             rec.initial_terms[i].str();
    }
    s += ";\n  valid n >= " + std::to_string(rec.valid_from) + ";\n}\n";
    return s;
}

}  // namespace logbehave
