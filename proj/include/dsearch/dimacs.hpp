// Copyright 2026 The dsearch Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "dsearch/cnf.hpp"

namespace dsearch {

class DimacsError : public std::runtime_error {
 public:
  DimacsError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Standard DIMACS CNF: `c` comments, `p cnf <n> <M>` header, clauses as
// zero-terminated signed integers. Clause count must match the header.
CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs_string(const std::string& text);
CnfFormula parse_dimacs_file(const std::string& path);

void write_dimacs(const CnfFormula& f, std::ostream& out);
std::string to_dimacs_string(const CnfFormula& f);

}  // namespace dsearch
