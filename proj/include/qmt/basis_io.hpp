#pragma once

#include "qmt/arithmetic.hpp"
#include "qmt/congruence.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace qmt {

// Malformed input; carries the 1-based line number.
struct ParseError : std::runtime_error {
    long line_no;
    ParseError(const std::string &msg, long line) : std::runtime_error(msg), line_no(line) {}
};

// Plain-text basis format:
//   level <N> weight 2 dim <d> bound <B>
//   form <i>
//   <n> <c_n>            (B lines, n ascending from 1)
CuspBasis parse_cusp_basis(const std::string &path);

// One model per line: "label <text> level <N> a <a1> <a2> <a3> <a4> <a6>".
// Throws ParseError naming the label for a singular model.
std::vector<CurveModel> parse_curves(const std::string &path);

}  // namespace qmt
