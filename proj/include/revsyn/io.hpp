/* revsyn: reversible circuit synthesis toolkit
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include "revsyn/circuit.hpp"
#include "revsyn/permutation.hpp"
#include "revsyn/realize.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace revsyn {

/// TFC circuit format:
///   .v a,b,c      all line names
///   .i a,b        significant inputs (other lines are constant-0 ancilla)
///   .o c          significant outputs in order
///   .c 0,0        constants for the non-input lines, in .v order
///   t2 a,b',c     gate: tN with N names, trailing one the target, ' marks a
///                 negative control
/// Comments start with '#'; BEGIN/END brackets are accepted and emitted.
struct TfcFile {
  Circuit circuit;
  std::vector<std::string> names;
};

TfcFile parse_tfc(std::istream& in);
TfcFile parse_tfc_string(const std::string& text);
std::string emit_tfc(const Circuit& c, const std::vector<std::string>& names = {},
                     const std::vector<std::string>& header_comments = {});

/// Truth table format:
///   .i 3
///   .o 3
/// then 2^n rows of output codes (decimal, 0b..., or a plain bit string read
/// most-significant-first); '-' marks a don't-care row.
BooleanMapping parse_table(std::istream& in);
std::string emit_table(const BooleanMapping& f, const std::vector<std::string>& header_comments = {});

/// Permutation files: either a truth table of a bijection, or a sparse cycle
/// list with lines like `(0 5 7) (2 3)`, optionally preceded by `.n <width>`.
Permutation parse_permutation(std::istream& in, int default_width = 0);
std::string emit_cycles(const Permutation& h);

} // namespace revsyn
