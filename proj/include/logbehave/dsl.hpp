#pragma once

#include <string>
#include <variant>
#include <vector>

#include "logbehave/calculus.hpp"
#include "logbehave/sandwich.hpp"

namespace logbehave {

/// Parse error with location and a source snippet.
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int line, int col,
               const std::string& snippet)
        : std::runtime_error(msg + " at " + std::to_string(line) + ":" +
                             std::to_string(col) + " near \"" + snippet + "\""),
          line(line),
          col(col) {}
    int line, col;
};

using ParsedBlock =
    std::variant<LinearRecurrence, SandwichCertificate, CalculusCertificate>;

/// Parses a DSL source file:
///   sequence NAME { Q(n) = ...; P1(n) = ...; init a(0)=1, a(1)=0;
///                   valid n >= 2 }
///   certificate NAME { use motzkin; bound = 6*n/(2*n+3); direction
///                      increasing; base 3 .. 3; mono_from 1;
///                      term (n-4)/(n+2) lags 1,2,3 bracket 3 -1 }
///   conditions NAME { use motzkin; kind thm42; m = 2; M = 7/2; n0 = 2;
///                     base_check 6 }
/// Sequences referenced by `use` resolve against earlier blocks in the same
/// file, then the built-in catalog.
std::vector<ParsedBlock> parse_dsl(const std::string& text);

/// Renders a recurrence back into DSL form (round-trips up to whitespace).
std::string print_dsl(const LinearRecurrence& rec);

}  // namespace logbehave
