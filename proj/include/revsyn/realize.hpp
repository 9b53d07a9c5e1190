/* revsyn: reversible circuit synthesis toolkit
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include "revsyn/circuit.hpp"

#include <optional>
#include <vector>

namespace revsyn {

/// Truth table of a boolean mapping Z_2^n -> Z_2^m. Row v holds the output
/// code for input v (x_1 is the least-significant bit of the code). Rows may
/// be marked don't-care; synthesis rejects such tables, verification treats
/// them as always matching.
struct BooleanMapping {
  int n_in = 0;
  int m_out = 0;
  std::vector<code_t> table;       // size 2^n_in
  std::vector<std::uint8_t> care;  // empty = all rows defined

  bool row_defined(code_t v) const { return care.empty() || care[v] != 0; }
  bool fully_defined() const;
  bool is_bijection() const; // requires n_in == m_out and full definition

  static BooleanMapping identity(int n);
  static BooleanMapping from_table(int n, int m, std::vector<code_t> t);
};

/// Output projection: the circuit lines read, in order, as the realized
/// map's outputs. Defaults to the circuit's significant_outputs, else the
/// first m lines (strict realization).
std::vector<line_t> output_projection(const Circuit& c, const BooleanMapping& f,
                                      const std::optional<std::vector<line_t>>& pi);

/// True iff for every x in Z_2^n, feeding <x, 0...0> and projecting the
/// declared output lines yields f(x).
bool realizes(const Circuit& c, const BooleanMapping& f,
              const std::optional<std::vector<line_t>>& pi = std::nullopt);

/// First input whose projected output disagrees with f, if any.
std::optional<code_t> first_mismatch(const Circuit& c, const BooleanMapping& f,
                                     const std::optional<std::vector<line_t>>& pi = std::nullopt);

/// True iff on every significant input all lines outside the output
/// projection leave the circuit carrying 0 (no computational garbage).
bool garbage_free(const Circuit& c, const BooleanMapping& f,
                  const std::optional<std::vector<line_t>>& pi = std::nullopt);

} // namespace revsyn
