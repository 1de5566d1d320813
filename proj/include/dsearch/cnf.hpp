// Copyright 2026 The dsearch Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dsearch {

// A literal over variables 1..n, stored as its signed DIMACS code.
class Literal {
 public:
  Literal(int var, bool positive) : code_(positive ? var : -var) {}
  static Literal from_dimacs(int code);

  int var() const { return code_ < 0 ? -code_ : code_; }
  bool positive() const { return code_ > 0; }
  int dimacs() const { return code_; }
  Literal negated() const { return from_dimacs(-code_); }

  friend bool operator==(Literal a, Literal b) { return a.code_ == b.code_; }

 private:
  int code_;
};

// Literals sorted by variable, one literal per variable. A clause built from
// a complementary pair is kept as an explicit tautology marker; a clause with
// no literals is unsatisfiable.
class Clause {
 public:
  Clause() = default;
  explicit Clause(std::vector<Literal> lits);

  const std::vector<Literal>& literals() const { return lits_; }
  int width() const { return static_cast<int>(lits_.size()); }
  bool is_tautology() const { return tautology_; }
  bool is_empty() const { return lits_.empty() && !tautology_; }

  friend bool operator==(const Clause& a, const Clause& b);

 private:
  std::vector<Literal> lits_;
  bool tautology_ = false;
};

class Assignment {
 public:
  explicit Assignment(int n) : bits_(n, 0) {}
  static Assignment from_string(std::string_view s);
  // Bit i-1 of mask holds variable i; n <= 64.
  static Assignment from_mask(int n, uint64_t mask);

  int size() const { return static_cast<int>(bits_.size()); }
  bool get(int var) const { return bits_[var - 1] != 0; }
  void set(int var, bool value) { bits_[var - 1] = value ? 1 : 0; }
  uint64_t to_mask() const;
  std::string to_string() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<uint8_t> bits_;
};

// A value in {0,1,*}^n. Star marks a free coordinate.
class Restriction {
 public:
  Restriction() = default;  // length 0
  static Restriction all_stars(int n) { return Restriction(n); }
  static Restriction from_string(std::string_view s);

  int size() const { return static_cast<int>(vals_.size()); }
  bool is_fixed(int var) const { return vals_[var - 1] != kStar; }
  bool value(int var) const { return vals_[var - 1] == 1; }
  void fix(int var, bool value) { vals_[var - 1] = value ? 1 : 0; }
  void clear(int var) { vals_[var - 1] = kStar; }

  int star_count() const;
  int fixed_count() const { return size() - star_count(); }
  bool star_free() const { return star_count() == 0; }
  std::vector<int> star_positions() const;  // ascending, 1-based

  Assignment to_assignment() const;  // requires star_free()
  std::string to_string() const;

  friend bool operator==(const Restriction&, const Restriction&) = default;

 private:
  explicit Restriction(int n) : vals_(n, kStar) {}
  static constexpr int8_t kStar = -1;
  std::vector<int8_t> vals_;
};

// The assignment that agrees with pi on fixed coordinates and with x on stars.
Assignment overlay(const Restriction& pi, const Assignment& x);

// outer's stars filled by inner (star stays star); inner addresses outer's
// star positions in ascending order, so inner.size() == outer.star_count().
Restriction compose(const Restriction& outer, const Restriction& inner);

class CnfFormula {
 public:
  CnfFormula(int n, std::vector<Clause> clauses);

  static CnfFormula tautology(int n) { return CnfFormula(n, {}); }
  static CnfFormula unsatisfiable(int n) { return CnfFormula(n, {Clause{}}); }

  int variable_count() const { return n_; }
  int clause_count() const { return static_cast<int>(clauses_.size()); }
  const std::vector<Clause>& clauses() const { return clauses_; }

  int width() const;  // max clause width, 0 for a clause-free formula
  bool has_empty_clause() const;
  std::vector<int> occurring_vars() const;  // ascending

  bool evaluate(const Assignment& x) const;
  bool evaluate_mask(uint64_t mask) const;  // n <= 64 fast path

  // Satisfied clauses and tautologies dropped, falsified literals deleted.
  // An emptied clause collapses the result to the canonical unsatisfiable
  // formula; all clauses gone yields the canonical tautology. Variable
  // indexing is preserved (free variables = star positions of pi).
  CnfFormula restricted(const Restriction& pi) const;

  // Clauses wider than w keep only their w lowest-index literals.
  CnfFormula trimmed(int w) const;

  // Tautological clauses (x_i v ~x_i) appended until the clause count
  // reaches the variable count; the satisfying set is unchanged.
  CnfFormula padded() const;

  // Stable digest of (n, clause list); independent of memory layout.
  uint64_t fingerprint() const;

  friend bool operator==(const CnfFormula&, const CnfFormula&);

 private:
  int n_;
  std::vector<Clause> clauses_;
};

}  // namespace dsearch
