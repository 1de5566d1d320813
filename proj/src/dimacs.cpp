// Copyright 2026 The dsearch Authors
// SPDX-License-Identifier: Apache-2.0

#include "dsearch/dimacs.hpp"

#include <fstream>
#include <sstream>

namespace dsearch {

CnfFormula parse_dimacs(std::istream& in) {
  int n = -1, declared_m = -1;
  std::vector<Clause> clauses;
  std::vector<Literal> current;
  std::string line;
  int lineno = 0;
  bool open_clause = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == 'c') continue;
    if (line[0] == 'p') {
      if (n >= 0) throw DimacsError(lineno, "duplicate problem line");
      std::istringstream hs(line);
      std::string p, fmt;
      if (!(hs >> p >> fmt >> n >> declared_m) || fmt != "cnf" || n < 0 || declared_m < 0)
        throw DimacsError(lineno, "malformed problem line (expected 'p cnf <n> <M>')");
      continue;
    }
    if (n < 0) throw DimacsError(lineno, "clause data before problem line");
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      int lit = 0;
      try {
        size_t used = 0;
        lit = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw DimacsError(lineno, "bad literal token '" + tok + "'");
      }
      if (lit == 0) {
        clauses.push_back(Clause(std::move(current)));
        current.clear();
        open_clause = false;
      } else {
        if (lit > n || lit < -n)
          throw DimacsError(lineno, "literal " + tok + " out of range for n=" + std::to_string(n));
        current.push_back(Literal::from_dimacs(lit));
        open_clause = true;
      }
    }
  }
  if (n < 0) throw DimacsError(lineno, "missing problem line");
  if (open_clause) throw DimacsError(lineno, "unterminated clause (missing 0)");
  if (static_cast<int>(clauses.size()) != declared_m)
    throw DimacsError(lineno, "clause count " + std::to_string(clauses.size()) +
                                  " does not match header M=" + std::to_string(declared_m));
  return CnfFormula(n, std::move(clauses));
}

CnfFormula parse_dimacs_string(const std::string& text) {
  std::istringstream in(text);
  return parse_dimacs(in);
}

CnfFormula parse_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_dimacs(in);
}

void write_dimacs(const CnfFormula& f, std::ostream& out) {
  out << "p cnf " << f.variable_count() << " " << f.clause_count() << "\n";
  for (const Clause& c : f.clauses()) {
    for (Literal lit : c.literals()) out << lit.dimacs() << " ";
    out << "0\n";
  }
}

std::string to_dimacs_string(const CnfFormula& f) {
  std::ostringstream out;
  write_dimacs(f, out);
  return out.str();
}

}  // namespace dsearch
