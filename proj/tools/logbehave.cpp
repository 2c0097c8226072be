// logbehave: exact evaluation, classification and certificate verification
// for recursively defined combinatorial sequences.

#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "logbehave/calculus.hpp"
#include "logbehave/catalog.hpp"
#include "logbehave/dsl.hpp"
#include "logbehave/engine.hpp"
#include "logbehave/oracle.hpp"
#include "logbehave/sandwich.hpp"

using json = nlohmann::ordered_json;
using namespace logbehave;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDisproved = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 3;

constexpr const char* kSchema = "logbehave-report/1";

struct Options {
    std::string format = "text";
    long terms = 10;
    std::string window;
    long rows = 10;
    long tail = -1;
    int max_shift = kDefaultMaxShift;
    int jobs = 1;
    std::string against = "conv";
    std::string k, nu, t, l;
    long from = -1;
};

std::vector<Rat> parameters_for(const std::string& name, const Options& opt) {
    auto need = [](const std::string& v, const char* flag) {
        if (v.empty())
            throw CLI::ValidationError(std::string("missing required flag ") + flag);
        return Rat::parse(v);
    };
    if (name == "e_k" || name == "c_k") return {need(opt.k, "--k")};
    if (name == "sec_struct" || name == "sec_struct_conv" ||
        name == "sec_struct_short")
        return {need(opt.l, "--l")};
    if (name == "gegenbauer" || name == "gegenbauer_deriv")
        return {need(opt.nu, "--nu"), need(opt.t, "--t")};
    if (name == "chebyshev_u" || name == "legendre" || name == "laguerre")
        return {need(opt.t, "--t")};
    return {};
}

std::string quad_str(const Quad& q) { return q.str(); }

void emit(const json& j, const Options& opt) {
    if (opt.format == "json") {
        std::cout << j.dump(2) << "\n";
    }
}

int exit_for(Verdict v) {
    switch (v) {
        case Verdict::Proved: return kExitOk;
        case Verdict::Disproved: return kExitDisproved;
        default: return kExitInconclusive;
    }
}

json verdict_json(const RayVerdict& v) {
    json j;
    j["status"] = to_string(v.status);
    if (v.witness) j["witness"] = v.witness->str();
    if (v.shift_used) j["shift_used"] = *v.shift_used;
    return j;
}

TermList entry_terms(const CatalogEntry& e, long count) {
    return eval_terms(e.primary(), count);
}

std::pair<long, long> parse_window(const std::string& w) {
    auto colon = w.find(':');
    if (colon == std::string::npos)
        throw CLI::ValidationError("--window expects lo:hi");
    return {std::stol(w.substr(0, colon)), std::stol(w.substr(colon + 1))};
}

int cmd_eval(const std::string& name, const Options& opt) {
    CatalogEntry e = catalog_get(name, parameters_for(name, opt));
    TermList t = entry_terms(e, opt.terms);
    if (opt.format == "csv") {
        std::cout << "n,value\n";
        for (size_t i = 0; i < t.terms.size(); ++i)
            std::cout << t.origin_index + static_cast<long>(i) << ","
                      << quad_str(t.terms[i]) << "\n";
    } else if (opt.format == "json") {
        json j{{"schema", kSchema}, {"command", "eval"}, {"name", name}};
        j["origin"] = t.origin_index;
        json vals = json::array();
        for (const auto& v : t.terms) vals.push_back(quad_str(v));
        j["terms"] = vals;
        emit(j, opt);
    } else {
        for (size_t i = 0; i < t.terms.size(); ++i)
            std::cout << "a(" << t.origin_index + static_cast<long>(i)
                      << ") = " << quad_str(t.terms[i]) << "\n";
    }
    return kExitOk;
}

QuotientSequence quotients_for(const CatalogEntry& e, long count, long from) {
    TermList t = entry_terms(e, count);
    long start = t.origin_index;
    if (from >= 0) {
        start = from;
    } else {
        for (long n = t.origin_index; n <= t.last_index(); ++n)
            if (t.at(n).is_zero()) start = n + 1;
    }
    TermList s;
    s.origin_index = start;
    for (long n = start; n <= t.last_index(); ++n) s.terms.push_back(t.at(n));
    return quotients(s);
}

int cmd_quotients(const std::string& name, const Options& opt) {
    CatalogEntry e = catalog_get(name, parameters_for(name, opt));
    QuotientSequence q = quotients_for(e, opt.terms, opt.from);
    if (opt.format == "csv") {
        std::cout << "n,q\n";
        for (size_t i = 0; i < q.quotients.size(); ++i)
            std::cout << q.origin_index + static_cast<long>(i) << ","
                      << quad_str(q.quotients[i]) << "\n";
    } else if (opt.format == "json") {
        json j{{"schema", kSchema}, {"command", "quotients"}, {"name", name}};
        j["origin"] = q.origin_index;
        json vals = json::array();
        for (const auto& v : q.quotients) vals.push_back(quad_str(v));
        j["quotients"] = vals;
        emit(j, opt);
    } else {
        for (size_t i = 0; i < q.quotients.size(); ++i)
            std::cout << "q(" << q.origin_index + static_cast<long>(i)
                      << ") = " << quad_str(q.quotients[i]) << "\n";
    }
    return kExitOk;
}

int cmd_classify(const std::string& name, const Options& opt) {
    CatalogEntry e = catalog_get(name, parameters_for(name, opt));
    auto [lo, hi] = parse_window(opt.window.empty() ? "1:40" : opt.window);
    TermList t = entry_terms(e, hi + 2);
    ClassificationReport rep = classify_window(t, lo, hi);
    if (opt.format == "json") {
        json j{{"schema", kSchema}, {"command", "classify"}, {"name", name}};
        j["window"] = {rep.lo, rep.hi};
        j["verdict"] = to_string(rep.verdict);
        j["delta_signs"] = rep.delta_signs;
        if (rep.first_violation) j["first_violation"] = *rep.first_violation;
        else j["first_violation"] = nullptr;
        emit(j, opt);
    } else {
        std::cout << name << " on [" << rep.lo << "," << rep.hi
                  << "]: " << to_string(rep.verdict) << "\n";
    }
    return rep.verdict == LogVerdict::Indefinite ? kExitDisproved : kExitOk;
}

int cmd_limit(const std::string& name, const Options& opt) {
    CatalogEntry e = catalog_get(name, parameters_for(name, opt));
    QuotientSequence q = quotients_for(e, opt.terms, opt.from);
    long tail = opt.tail >= 0 ? opt.tail : std::max(q.origin_index, q.last_index() - 10);
    LimitEstimate est = limit_estimate(q, tail);
    if (opt.format == "json") {
        json j{{"schema", kSchema}, {"command", "limit"}, {"name", name}};
        j["at"] = q.last_index();
        j["value"] = quad_str(est.value);
        j["value_approx"] = est.value.approx();
        j["last_increment"] = quad_str(est.last_increment);
        j["increasing"] = est.increasing;
        if (e.known_limit) {
            j["known_limit"] = quad_str(*e.known_limit);
            j["below_known_limit"] = est.value < *e.known_limit;
        }
        emit(j, opt);
    } else {
        std::cout << "q(" << q.last_index() << ") = " << quad_str(est.value)
                  << " ≈ " << est.value.approx()
                  << " (last increment " << est.last_increment.approx() << ")\n";
        if (e.known_limit)
            std::cout << "known limit: " << quad_str(*e.known_limit) << " ≈ "
                      << e.known_limit->approx() << "\n";
    }
    return kExitOk;
}

int cmd_triangle(const std::string& name, const Options& opt,
                 const std::string& checks) {
    CatalogEntry e = catalog_get(name, parameters_for(name, opt));
    auto* rec = std::get_if<TwoIndexRecurrence>(&e.definitions.front());
    if (!rec) throw CLI::ValidationError(name + " is not a triangle");
    Triangle tri = triangle_eval(*rec, opt.rows);
    if (!checks.empty()) {
        TriangleMode mode =
            checks == "rows" ? TriangleMode::Rows : TriangleMode::Columns;
        TriangleCheckReport rep = triangle_checks(tri, mode);
        if (opt.format == "json") {
            json j{{"schema", kSchema}, {"command", "triangle"}, {"name", name}};
            j["mode"] = checks;
            j["ok"] = rep.ok;
            json v = json::array();
            for (auto [n, k] : rep.violations) v.push_back({n, k});
            j["violations"] = v;
            emit(j, opt);
        } else {
            std::cout << name << " " << checks << " check: "
                      << (rep.ok ? "all hold" : "violations found") << "\n";
        }
        return rep.ok ? kExitOk : kExitDisproved;
    }
    if (opt.format == "csv") {
        std::cout << "n,k,value\n";
        for (size_t n = 0; n < tri.size(); ++n)
            for (size_t k = 0; k < tri[n].size(); ++k)
                std::cout << n << "," << k << "," << quad_str(tri[n][k]) << "\n";
    } else if (opt.format == "json") {
        json j{{"schema", kSchema}, {"command", "triangle"}, {"name", name}};
        json rows = json::array();
        for (const auto& row : tri) {
            json r = json::array();
            for (const auto& v : row) r.push_back(quad_str(v));
            rows.push_back(r);
        }
        j["rows"] = rows;
        emit(j, opt);
    } else {
        for (const auto& row : tri) {
            for (size_t k = 0; k < row.size(); ++k)
                std::cout << (k ? " " : "") << quad_str(row[k]);
            std::cout << "\n";
        }
    }
    return kExitOk;
}

int cmd_crosscheck(const std::string& name, const Options& opt) {
    long count = opt.terms;
    bool ok = true;
    std::string detail;
    auto params = parameters_for(name, opt);
    CatalogEntry e = catalog_get(name, params);
    if (opt.against == "conv") {
        if (e.definitions.size() < 2)
            throw CLI::ValidationError(name + " has no convolution form");
        TermList a = eval_terms(e.definitions[0], count);
        TermList b = eval_terms(e.definitions[1], count);
        for (long n = std::max(a.origin_index, b.origin_index);
             n <= std::min(a.last_index(), b.last_index()); ++n)
            if (a.at(n) != b.at(n)) { ok = false; detail = "n = " + std::to_string(n); break; }
    } else if (opt.against == "direct") {
        if (name == "franel3" || name == "franel4") {
            long r = name == "franel3" ? 3 : 4;
            TermList a = entry_terms(e, count);
            for (long n = 0; n < count; ++n)
                if (a.at(n) != Quad(Rat(oracle::count_franel_direct(n, r)))) {
                    ok = false; detail = "n = " + std::to_string(n); break;
                }
        } else if (name == "sec_struct_conv") {
            TermList a = entry_terms(e, count);
            long l = params[0].num().get_si();
            if (l != -1) throw CLI::ValidationError("direct form: rank -1 only");
            for (long n = 0; n < count; ++n)
                if (a.at(n) != Quad(Rat(oracle::catalan(n + 1)))) {
                    ok = false; detail = "n = " + std::to_string(n); break;
                }
        } else {
            throw CLI::ValidationError("no direct form for " + name);
        }
    } else if (opt.against == "oracle") {
        TermList a = entry_terms(e, count);
        auto check = [&](long n, const Int& expect) {
            if (n <= a.last_index() && a.at(n) != Quad(Rat(expect))) {
                ok = false;
                detail = "n = " + std::to_string(n);
            }
        };
        if (name == "motzkin") {
            for (long n = 0; n < std::min(count, 41L); ++n)
                check(n, oracle::count_paths({oracle::PathFamily::Motzkin, n}));
        } else if (name == "delannoy" || name == "legendre") {
            for (long n = 0; n < std::min(count, 41L); ++n)
                check(n, oracle::count_paths({oracle::PathFamily::Delannoy, n}));
        } else if (name == "sec_struct" || name == "sec_struct_short" ||
                   name == "sec_struct_conv") {
            long l = params[0].num().get_si();
            for (long n = 0; n < std::min(count, 15L); ++n)
                check(n, oracle::count_secondary_direct(n, l));
        } else if (name == "derangements") {
            for (long n = 0; n < count; ++n)
                check(n, oracle::derangements_inclusion_exclusion(n));
        } else if (name == "e_k") {
            long k = params[0].num().get_si();
            for (long n = 0; n < std::min(count, 10L); ++n)
                check(n, oracle::count_permutations(
                             n, oracle::PermPredicate::OrderDivides, k));
        } else if (name == "c_k" || name == "involutions") {
            long k = name == "involutions" ? 2 : params[0].num().get_si();
            for (long n = 0; n < std::min(count, 10L); ++n)
                check(n, oracle::count_permutations(
                             n, oracle::PermPredicate::CyclesAtMost, k));
        } else {
            throw CLI::ValidationError("no oracle for " + name);
        }
    } else {
        throw CLI::ValidationError("--against must be conv, oracle or direct");
    }
    if (opt.format == "json") {
        json j{{"schema", kSchema}, {"command", "crosscheck"}, {"name", name}};
        j["against"] = opt.against;
        j["terms"] = count;
        j["ok"] = ok;
        if (!ok) j["first_mismatch"] = detail;
        emit(j, opt);
    } else {
        std::cout << name << " vs " << opt.against << ": "
                  << (ok ? "agree" : "MISMATCH " + detail) << "\n";
    }
    return ok ? kExitOk : kExitDisproved;
}

json sandwich_json(const std::string& name, const SandwichReport& rep) {
    json j{{"schema", kSchema}, {"command", "verify_sandwich"}, {"name", name}};
    j["status"] = to_string(rep.status);
    json base = json::array();
    for (const auto& b : rep.base_results)
        base.push_back({{"n", b.n}, {"kind", b.kind}, {"ok", b.ok}});
    j["base"] = base;
    j["lower_step"] = verdict_json(rep.lower_step);
    j["upper_step"] = verdict_json(rep.upper_step);
    j["reduced_lower"] = rep.reduced_lower.str();
    j["reduced_upper"] = rep.reduced_upper.str();
    j["notes"] = rep.notes;
    return j;
}

json calculus_json(const std::string& name, const CalculusReport& rep) {
    json j{{"schema", kSchema}, {"command", "verify_calculus"}, {"name", name}};
    j["status"] = to_string(rep.status);
    json conds = json::array();
    for (const auto& [label, v] : rep.condition_results)
        conds.push_back({{"condition", label}, {"verdict", verdict_json(v)}});
    j["conditions"] = conds;
    j["reduced_key"] = rep.reduced_key.str();
    j["notes"] = rep.notes;
    return j;
}

struct VerifyResult {
    std::string name;
    Verdict status = Verdict::Inconclusive;
    json report;
    std::string text;
};

VerifyResult run_one_verification(const std::string& target, bool sandwich_kind,
                                  int max_shift) {
    VerifyResult out;
    out.name = target;
    std::ifstream in(target);
    if (in) {
        std::stringstream ss;
        ss << in.rdbuf();
        auto blocks = parse_dsl(ss.str());
        for (auto& b : blocks) {
            if (auto* cert = std::get_if<SandwichCertificate>(&b)) {
                if (max_shift != kDefaultMaxShift) cert->max_shift = max_shift;
                SandwichReport rep = verify_sandwich(*cert);
                out.status = rep.status;
                out.report = sandwich_json(cert->name, rep);
                out.text = cert->name + ": " + to_string(rep.status);
                return out;
            }
            if (auto* cc = std::get_if<CalculusCertificate>(&b)) {
                if (max_shift != kDefaultMaxShift) cc->cond.max_shift = max_shift;
                CalculusReport rep = verify_calculus(*cc);
                out.status = rep.status;
                out.report = calculus_json(cc->name, rep);
                out.text = cc->name + ": " + to_string(rep.status);
                return out;
            }
        }
        throw std::runtime_error(target + ": no certificate block found");
    }
    // not a file: a bundled certificate name
    if (sandwich_kind) {
        SandwichCertificate cert = sandwich_catalog(target);
        if (max_shift != kDefaultMaxShift) cert.max_shift = max_shift;
        SandwichReport rep = verify_sandwich(cert);
        out.status = rep.status;
        out.report = sandwich_json(target, rep);
        out.text = target + ": " + to_string(rep.status);
    } else {
        CalculusCertificate cert = calculus_catalog(target);
        if (max_shift != kDefaultMaxShift) cert.cond.max_shift = max_shift;
        CalculusReport rep = verify_calculus(cert);
        out.status = rep.status;
        out.report = calculus_json(target, rep);
        out.text = target + ": " + to_string(rep.status);
    }
    return out;
}

int cmd_verify(const std::vector<std::string>& targets, bool sandwich_kind,
               const Options& opt) {
    std::vector<VerifyResult> results(targets.size());
    if (opt.jobs > 1) {
        std::vector<std::future<VerifyResult>> futs;
        futs.reserve(targets.size());
        for (const auto& t : targets)
            futs.push_back(std::async(std::launch::async, run_one_verification,
                                      t, sandwich_kind, opt.max_shift));
        for (size_t i = 0; i < futs.size(); ++i) results[i] = futs[i].get();
    } else {
        for (size_t i = 0; i < targets.size(); ++i)
            results[i] = run_one_verification(targets[i], sandwich_kind,
                                              opt.max_shift);
    }
    Verdict worst = Verdict::Proved;
    for (const auto& r : results) {
        if (r.status == Verdict::Disproved) worst = Verdict::Disproved;
        else if (r.status == Verdict::Inconclusive && worst == Verdict::Proved)
            worst = Verdict::Inconclusive;
    }
    if (opt.format == "json") {
        json j = json::array();
        for (const auto& r : results) j.push_back(r.report);
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& r : results) std::cout << r.text << "\n";
    }
    return exit_for(worst);
}

int cmd_catalog_list(const Options& opt) {
    auto names = catalog_names();
    if (opt.format == "json") {
        json j{{"schema", kSchema}, {"command", "catalog_list"}};
        json arr = json::array();
        for (const auto& [n, info] : names)
            arr.push_back({{"name", n}, {"info", info}});
        j["entries"] = arr;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& [n, info] : names)
            std::cout << n << "  —  " << info << "\n";
        std::cout << "\nbundled sandwich certificates:";
        for (const auto& n : sandwich_catalog_names()) std::cout << " " << n;
        std::cout << "\nbundled calculus condition sets:";
        for (const auto& n : calculus_catalog_names()) std::cout << " " << n;
        std::cout << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact log-behavior analysis of recursively defined sequences"};
    app.require_subcommand(1);
    Options opt;

    std::string name;
    std::vector<std::string> targets;
    std::string checks;

    auto add_common = [&](CLI::App* sub, bool with_name = true) {
        if (with_name) sub->add_option("name", name, "catalog name")->required();
        sub->add_option("--format", opt.format, "text | csv | json")
            ->check(CLI::IsMember({"text", "csv", "json"}));
        sub->add_option("--k", opt.k, "parameter k (e_k, c_k)");
        sub->add_option("--nu", opt.nu, "parameter nu (rational)");
        sub->add_option("--t", opt.t, "parameter t (rational)");
        sub->add_option("--l", opt.l, "rank l (secondary structures)");
    };

    auto* eval = app.add_subcommand("eval", "evaluate exact terms");
    add_common(eval);
    eval->add_option("--terms", opt.terms, "number of terms");

    auto* quot = app.add_subcommand("quotients", "consecutive ratios");
    add_common(quot);
    quot->add_option("--terms", opt.terms, "number of terms");
    quot->add_option("--from", opt.from, "start quotients at this index");

    auto* cls = app.add_subcommand("classify", "log-behavior over a window");
    add_common(cls);
    cls->add_option("--window", opt.window, "lo:hi (delta indices)");

    auto* lim = app.add_subcommand("limit", "quotient limit estimate");
    add_common(lim);
    lim->add_option("--terms", opt.terms, "evaluate this many terms");
    lim->add_option("--tail", opt.tail, "monotone tail start");
    lim->add_option("--from", opt.from, "start quotients at this index");

    auto* tri = app.add_subcommand("triangle", "two-index triangles");
    add_common(tri);
    tri->add_option("--rows", opt.rows, "rows to evaluate");
    tri->add_option("--checks", checks, "rows | columns")
        ->check(CLI::IsMember({"rows", "columns"}));

    auto* cross = app.add_subcommand("crosscheck", "definition equivalences");
    add_common(cross);
    cross->add_option("--terms", opt.terms, "range to compare");
    cross->add_option("--against", opt.against, "conv | oracle | direct")
        ->check(CLI::IsMember({"conv", "oracle", "direct"}));

    auto* verify = app.add_subcommand("verify", "verify proof certificates");
    verify->require_subcommand(1);
    auto* vs = verify->add_subcommand("sandwich", "interlacing certificates");
    vs->add_option("targets", targets, "certificate files or bundled names")
        ->required();
    vs->add_option("--format", opt.format, "text | json");
    vs->add_option("--max-shift", opt.max_shift, "ray shift ladder bound");
    vs->add_option("--jobs", opt.jobs, "verify files concurrently");
    auto* vc = verify->add_subcommand("calculus", "calculus condition sets");
    vc->add_option("targets", targets, "condition files or bundled names")
        ->required();
    vc->add_option("--format", opt.format, "text | json");
    vc->add_option("--max-shift", opt.max_shift, "ray shift ladder bound");
    vc->add_option("--jobs", opt.jobs, "verify files concurrently");

    auto* cat = app.add_subcommand("catalog", "catalog information");
    auto* cl = cat->add_subcommand("list", "list all catalog entries");
    cl->add_option("--format", opt.format, "text | json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (eval->parsed()) return cmd_eval(name, opt);
        if (quot->parsed()) return cmd_quotients(name, opt);
        if (cls->parsed()) return cmd_classify(name, opt);
        if (lim->parsed()) return cmd_limit(name, opt);
        if (tri->parsed()) return cmd_triangle(name, opt, checks);
        if (cross->parsed()) return cmd_crosscheck(name, opt);
        if (verify->parsed())
            return cmd_verify(targets, vs->parsed(), opt);
        if (cat->parsed()) return cmd_catalog_list(opt);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
