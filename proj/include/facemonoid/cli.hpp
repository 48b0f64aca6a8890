#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "facemonoid/monoid.hpp"

namespace fm {

// Element expression grammar:  word? ('e[' i(,i)* ']')? word?  joined by
// '.', with word = 's'i('.s'i)*.  Examples: "s3.e[1,2]", "e[1,2]", "s1.s2".
// Plain words parse to unit-group elements; throws ParseError with the
// offending position, NotSpecial surfaces from make_element.
FaceMonoidElement parse_element_expr(GcmPtr g, const std::string& text);

// Full CLI; returns the process exit status and writes JSON to out.
// Exit codes: 0 ok, 1 verification failures, 2 usage, 3 computational error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fm
