#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "cgeo/region.hpp"

namespace cgeo {

// Region scripts.
//
//   expr      := term { ('∪' | '|') term }
//   term      := factor { ('∩' | '&') factor }
//   factor    := primitive | constraint | '(' expr ')'
//              | ('union' | 'inter') '(' expr {',' expr} ')'
//              | 'compl' '(' expr ')' | 'closed' '(' expr ')'
//              | 'translate' '(' expr ',' vector ')' | 'linmap' '(' expr ',' vector ')'
//   primitive := 'dcone' '(' vector ',' vector ')' | 'w1'
//              | 'wedge' '(' vector ',' number ',' vector ',' number ')'
//              | 'timeslice' '(' number ',' number ')' | 'shell' '(' number ',' number ')'
//              | 'ball' '(' vector ',' number ')' | 'box' '(' vector ',' vector ')'
//              | 'exterior' '(' vector ',' vector ')' | 'points' '(' vector {',' vector} ')'
//              | 'full' | 'empty'
//   constraint:= '{' linear ('>' | '>=' | '<' | '<=' | '=') linear '}'
//   linear    := signed sums of number, var and number ['*'] var; var is x0, x1, ... or x₀, x₁, ...
//
// The dimension comes from the first vector (linmap matrices excepted), else
// from the default. '#' starts a comment running to the end of the line.
struct ParseError : std::runtime_error {
    int line, column;
    std::vector<std::string> expected;
    ParseError(const std::string& msg, int l, int c, std::vector<std::string> exp = {});
};

RegionPtr parse_region(const std::string& src, int default_ncoords = 3);
// Canonical form; parse_region(print_region(r)) is structurally equal to r.
std::string print_region(const RegionPtr& r);

}  // namespace cgeo
