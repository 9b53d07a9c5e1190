/* revsyn: reversible circuit synthesis toolkit
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <stdexcept>
#include <string>

namespace revsyn {

enum class error_kind {
  structural,   // malformed gate or circuit
  capacity,     // width/state-space limits exceeded
  parity,       // odd permutation where an even one is required
  basis,        // requested gate basis cannot express the result
  parameter,    // algorithm parameter outside its valid regime
  domain,       // value outside the mathematical domain (e.g. inverse of 0)
  verification, // an input circuit does not realize its claimed map
  syntax        // file format error
};

class error : public std::runtime_error {
public:
  error(error_kind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}

  error_kind kind() const noexcept { return kind_; }

  const char* kind_name() const noexcept {
    switch (kind_) {
      case error_kind::structural: return "structural";
      case error_kind::capacity: return "capacity";
      case error_kind::parity: return "parity";
      case error_kind::basis: return "basis";
      case error_kind::parameter: return "parameter";
      case error_kind::domain: return "domain";
      case error_kind::verification: return "verification";
      case error_kind::syntax: return "syntax";
    }
    return "unknown";
  }

private:
  error_kind kind_;
};

struct structural_error : error {
  explicit structural_error(const std::string& m) : error(error_kind::structural, m) {}
};
struct capacity_error : error {
  explicit capacity_error(const std::string& m) : error(error_kind::capacity, m) {}
};
struct parity_error : error {
  explicit parity_error(const std::string& m) : error(error_kind::parity, m) {}
};
struct basis_error : error {
  explicit basis_error(const std::string& m) : error(error_kind::basis, m) {}
};
struct parameter_error : error {
  explicit parameter_error(const std::string& m) : error(error_kind::parameter, m) {}
};
struct domain_error : error {
  explicit domain_error(const std::string& m) : error(error_kind::domain, m) {}
};
struct verification_error : error {
  explicit verification_error(const std::string& m) : error(error_kind::verification, m) {}
};
struct syntax_error : error {
  syntax_error(const std::string& m, int line) : error(error_kind::syntax, m), line(line) {}
  int line;
};

} // namespace revsyn
