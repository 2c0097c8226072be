#include "logbehave/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace logbehave {
namespace oracle {

namespace {

Int count_dyck(long n) {
    // heights after each of 2n steps, never below 0, end at 0
    std::vector<Int> h(2 * n + 1, 0);
    h[0] = 1;
    for (long s = 0; s < 2 * n; ++s) {
        std::vector<Int> nh(2 * n + 1, 0);
        for (long k = 0; k <= s; ++k) {
            if (h[k] == 0) continue;
            nh[k + 1] += h[k];
            if (k > 0) nh[k - 1] += h[k];
        }
        h = std::move(nh);
    }
    return h[0];
}

Int count_delannoy(long n) {
    std::vector<std::vector<Int>> d(n + 1, std::vector<Int>(n + 1, 0));
    d[0][0] = 1;
    for (long i = 0; i <= n; ++i)
        for (long j = 0; j <= n; ++j) {
            if (i > 0) d[i][j] += d[i - 1][j];
            if (j > 0) d[i][j] += d[i][j - 1];
            if (i > 0 && j > 0) d[i][j] += d[i - 1][j - 1];
        }
    return d[n][n];
}

/// Motzkin paths whose every plateau (level run preceded by Up and followed
/// by Down, including the empty run of a peak) has length >= l. State:
/// (height, current level-run length capped at l, run-preceded-by-Up flag).
Int count_motzkin_plateau(long n, long l) {
    struct Key {
        long h, run;
        bool after_up;
        bool operator<(const Key& o) const {
            return std::tie(h, run, after_up) < std::tie(o.h, o.run, o.after_up);
        }
    };
    std::map<Key, Int> cur;
    cur[{0, 0, false}] = 1;
    for (long s = 0; s < n; ++s) {
        std::map<Key, Int> next;
        for (const auto& [k, c] : cur) {
            // Up: any pending level run was not a plateau
            next[{k.h + 1, 0, true}] += c;
            // Level
            next[{k.h, std::min(k.run + 1, l), k.after_up}] += c;
            // Down: closes a plateau when the run follows an Up
            if (k.h > 0 && (!k.after_up || k.run >= l))
                next[{k.h - 1, 0, false}] += c;
        }
        cur = std::move(next);
    }
    Int total = 0;
    for (const auto& [k, c] : cur)
        if (k.h == 0) total += c;
    return total;
}

/// Depth-first construction of secondary structures: at each base, either
/// leave it unpaired, close the innermost open bond (nesting = condition
/// (d)), open a new bond, or attach a loop when rank is -1.
void secondary_rec(long v, long n, long l, std::vector<long>& open, Int& count) {
    if (v > n) {
        if (open.empty()) count += 1;
        return;
    }
    if (static_cast<long>(open.size()) > n - v + 1) return;  // cannot close all
    secondary_rec(v + 1, n, l, open, count);  // unpaired
    if (!open.empty() && v - open.back() > l) {
        long i = open.back();
        open.pop_back();
        secondary_rec(v + 1, n, l, open, count);  // close innermost
        open.push_back(i);
    }
    open.push_back(v);  // open a bond at v
    secondary_rec(v + 1, n, l, open, count);
    open.pop_back();
    if (l == -1) secondary_rec(v + 1, n, l, open, count);  // loop at v
}

}  // namespace

Int count_paths(const PathCountSpec& spec) {
    if (spec.length < 0 || spec.length > spec.cap)
        throw std::domain_error("count_paths: length cap exceeded");
    switch (spec.family) {
        case PathFamily::Motzkin:
            return count_motzkin_plateau(spec.length, 0);
        case PathFamily::Dyck:
            return count_dyck(spec.length);
        case PathFamily::Delannoy:
            return count_delannoy(spec.length);
        case PathFamily::MotzkinMinPlateau:
            if (spec.min_plateau < 0)
                throw std::domain_error("count_paths: plateau bound >= 0");
            return count_motzkin_plateau(spec.length, spec.min_plateau);
    }
    throw std::logic_error("count_paths: unreachable");
}

Int count_secondary_direct(long n, long l) {
    if (n < 0 || n > 16)
        throw std::domain_error("count_secondary_direct: cap n <= 16");
    if (l < -1) throw std::domain_error("count_secondary_direct: l >= -1");
    if (n == 0) return 1;
    Int count = 0;
    std::vector<long> open;
    secondary_rec(1, n, l, open, count);
    return count;
}

Int count_permutations(long n, PermPredicate pred, long k) {
    if (n < 0 || n > 9)
        throw std::domain_error("count_permutations: cap n <= 9");
    std::vector<long> p(n);
    std::iota(p.begin(), p.end(), 0);
    Int count = 0;
    do {
        bool ok = false;
        switch (pred) {
            case PermPredicate::Derangement: {
                ok = true;
                for (long i = 0; i < n; ++i)
                    if (p[i] == i) { ok = false; break; }
                break;
            }
            case PermPredicate::OrderDivides: {
                // pi^k = id: every cycle length divides k
                ok = true;
                std::vector<bool> seen(n, false);
                for (long i = 0; i < n && ok; ++i) {
                    if (seen[i]) continue;
                    long len = 0, j = i;
                    while (!seen[j]) { seen[j] = true; j = p[j]; ++len; }
                    if (k % len != 0) ok = false;
                }
                break;
            }
            case PermPredicate::CyclesAtMost: {
                ok = true;
                std::vector<bool> seen(n, false);
                for (long i = 0; i < n && ok; ++i) {
                    if (seen[i]) continue;
                    long len = 0, j = i;
                    while (!seen[j]) { seen[j] = true; j = p[j]; ++len; }
                    if (len > k) ok = false;
                }
                break;
            }
            case PermPredicate::AscentsEqual: {
                long asc = 0;
                for (long i = 0; i + 1 < n; ++i)
                    if (p[i] < p[i + 1]) ++asc;
                ok = (asc == k);
                break;
            }
        }
        if (ok) count += 1;
    } while (std::next_permutation(p.begin(), p.end()));
    return count;
}

Int derangements_inclusion_exclusion(long n) {
    Int total = 0;
    for (long j = 0; j <= n; ++j) {
        Int term = factorial(n) / factorial(j);
        if (j % 2 == 0) total += term;
        else total -= term;
    }
    return total;
}

Int count_franel_direct(long n, long r) {
    if (n < 0 || n > 2000 || r < 0 || r > 8)
        throw std::domain_error("count_franel_direct: caps n <= 2000, r <= 8");
    Int total = 0;
    Int c = 1;  // C(n, 0)
    for (long k = 0; k <= n; ++k) {
        Int p = 1;
        for (long i = 0; i < r; ++i) p *= c;
        total += p;
        if (k < n) c = c * (n - k) / (k + 1);
    }
    return total;
}

Int catalan(long n) {
    return binomial(Int(2 * n), static_cast<unsigned long>(n)) / Int(n + 1);
}

}  // namespace oracle
}  // namespace logbehave
