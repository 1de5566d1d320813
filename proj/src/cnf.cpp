// Copyright 2026 The dsearch Authors
// SPDX-License-Identifier: Apache-2.0

#include "dsearch/cnf.hpp"

#include <algorithm>
#include <stdexcept>

namespace dsearch {

Literal Literal::from_dimacs(int code) {
  if (code == 0) throw std::invalid_argument("literal code must be nonzero");
  return Literal(code < 0 ? -code : code, code > 0);
}

Clause::Clause(std::vector<Literal> lits) {
  std::sort(lits.begin(), lits.end(), [](Literal a, Literal b) {
    return a.var() != b.var() ? a.var() < b.var() : a.positive() && !b.positive();
  });
  std::vector<Literal> merged;
  merged.reserve(lits.size());
  for (Literal lit : lits) {
    if (!merged.empty() && merged.back().var() == lit.var()) {
      if (merged.back().positive() != lit.positive() && !tautology_) {
        // canonical tautology marker: the lowest complementary pair
        tautology_ = true;
        lits_ = {Literal(lit.var(), true), Literal(lit.var(), false)};
      }
      continue;  // duplicate on the same variable
    }
    merged.push_back(lit);
  }
  if (!tautology_) lits_ = std::move(merged);
}

bool operator==(const Clause& a, const Clause& b) {
  return a.tautology_ == b.tautology_ && a.lits_ == b.lits_;
}

Assignment Assignment::from_string(std::string_view s) {
  Assignment a(static_cast<int>(s.size()));
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1')
      a.bits_[i] = 1;
    else if (s[i] != '0')
      throw std::invalid_argument("assignment string must be over {0,1}");
  }
  return a;
}

Assignment Assignment::from_mask(int n, uint64_t mask) {
  Assignment a(n);
  for (int i = 0; i < n; ++i) a.bits_[i] = (mask >> i) & 1;
  return a;
}

uint64_t Assignment::to_mask() const {
  if (bits_.size() > 64) throw std::length_error("assignment too long for mask");
  uint64_t m = 0;
  for (size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) m |= uint64_t(1) << i;
  return m;
}

std::string Assignment::to_string() const {
  std::string s(bits_.size(), '0');
  for (size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) s[i] = '1';
  return s;
}

Restriction Restriction::from_string(std::string_view s) {
  Restriction pi(static_cast<int>(s.size()));
  for (size_t i = 0; i < s.size(); ++i) {
    switch (s[i]) {
      case '0': pi.vals_[i] = 0; break;
      case '1': pi.vals_[i] = 1; break;
      case '*': break;
      default: throw std::invalid_argument("restriction string must be over {0,1,*}");
    }
  }
  return pi;
}

int Restriction::star_count() const {
  int c = 0;
  for (int8_t v : vals_)
    if (v == kStar) ++c;
  return c;
}

std::vector<int> Restriction::star_positions() const {
  std::vector<int> pos;
  for (int i = 0; i < size(); ++i)
    if (vals_[i] == kStar) pos.push_back(i + 1);
  return pos;
}

Assignment Restriction::to_assignment() const {
  if (!star_free()) throw std::logic_error("restriction still has stars");
  Assignment a(size());
  for (int v = 1; v <= size(); ++v) a.set(v, value(v));
  return a;
}

std::string Restriction::to_string() const {
  std::string s(vals_.size(), '*');
  for (size_t i = 0; i < vals_.size(); ++i)
    if (vals_[i] != kStar) s[i] = vals_[i] ? '1' : '0';
  return s;
}

Assignment overlay(const Restriction& pi, const Assignment& x) {
  if (pi.size() != x.size()) throw std::invalid_argument("overlay: length mismatch");
  Assignment out(pi.size());
  for (int v = 1; v <= pi.size(); ++v)
    out.set(v, pi.is_fixed(v) ? pi.value(v) : x.get(v));
  return out;
}

Restriction compose(const Restriction& outer, const Restriction& inner) {
  if (inner.size() != outer.star_count())
    throw std::invalid_argument("compose: inner must address outer's star positions");
  Restriction out = outer;
  int j = 0;
  for (int v = 1; v <= outer.size(); ++v) {
    if (outer.is_fixed(v)) continue;
    ++j;
    if (inner.is_fixed(j)) out.fix(v, inner.value(j));
  }
  return out;
}

CnfFormula::CnfFormula(int n, std::vector<Clause> clauses)
    : n_(n), clauses_(std::move(clauses)) {
  if (n < 0) throw std::invalid_argument("negative variable count");
  for (const Clause& c : clauses_)
    for (Literal lit : c.literals())
      if (lit.var() > n_) throw std::invalid_argument("literal variable exceeds n");
}

int CnfFormula::width() const {
  int w = 0;
  for (const Clause& c : clauses_) w = std::max(w, c.width());
  return w;
}

bool CnfFormula::has_empty_clause() const {
  for (const Clause& c : clauses_)
    if (c.is_empty()) return true;
  return false;
}

std::vector<int> CnfFormula::occurring_vars() const {
  std::vector<uint8_t> seen(n_ + 1, 0);
  for (const Clause& c : clauses_)
    for (Literal lit : c.literals()) seen[lit.var()] = 1;
  std::vector<int> vars;
  for (int v = 1; v <= n_; ++v)
    if (seen[v]) vars.push_back(v);
  return vars;
}

bool CnfFormula::evaluate(const Assignment& x) const {
  if (x.size() != n_) throw std::invalid_argument("evaluate: length mismatch");
  for (const Clause& c : clauses_) {
    if (c.is_tautology()) continue;
    bool sat = false;
    for (Literal lit : c.literals()) {
      if (x.get(lit.var()) == lit.positive()) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

bool CnfFormula::evaluate_mask(uint64_t mask) const {
  for (const Clause& c : clauses_) {
    if (c.is_tautology()) continue;
    bool sat = false;
    for (Literal lit : c.literals()) {
      if (((mask >> (lit.var() - 1)) & 1) == static_cast<uint64_t>(lit.positive())) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

CnfFormula CnfFormula::restricted(const Restriction& pi) const {
  if (pi.size() != n_) throw std::invalid_argument("restricted: length mismatch");
  std::vector<Clause> out;
  out.reserve(clauses_.size());
  for (const Clause& c : clauses_) {
    if (c.is_tautology()) continue;
    bool satisfied = false;
    std::vector<Literal> kept;
    kept.reserve(c.literals().size());
    for (Literal lit : c.literals()) {
      if (!pi.is_fixed(lit.var())) {
        kept.push_back(lit);
      } else if (pi.value(lit.var()) == lit.positive()) {
        satisfied = true;
        break;
      }
      // falsified literal: dropped
    }
    if (satisfied) continue;
    if (kept.empty()) return unsatisfiable(n_);
    out.push_back(Clause(std::move(kept)));
  }
  return CnfFormula(n_, std::move(out));
}

CnfFormula CnfFormula::trimmed(int w) const {
  if (w < 1) throw std::invalid_argument("trim width must be >= 1");
  std::vector<Clause> out;
  out.reserve(clauses_.size());
  for (const Clause& c : clauses_) {
    if (c.width() <= w || c.is_tautology()) {
      out.push_back(c);
      continue;
    }
    // literals are sorted by variable: keep the w lowest indices
    std::vector<Literal> kept(c.literals().begin(), c.literals().begin() + w);
    out.push_back(Clause(std::move(kept)));
  }
  return CnfFormula(n_, std::move(out));
}

CnfFormula CnfFormula::padded() const {
  if (clause_count() >= n_) return *this;
  std::vector<Clause> out = clauses_;
  for (int i = 1; i <= n_ - clause_count(); ++i)
    out.push_back(Clause({Literal(i, true), Literal(i, false)}));
  return CnfFormula(n_, std::move(out));
}

uint64_t CnfFormula::fingerprint() const {
  auto mix = [](uint64_t h, uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  };
  uint64_t h = mix(0x8c2f1d6ad7b3e4f5ull, static_cast<uint64_t>(n_));
  for (const Clause& c : clauses_) {
    h = mix(h, c.is_tautology() ? 0x7fffffffull : static_cast<uint64_t>(c.width()));
    for (Literal lit : c.literals())
      h = mix(h, static_cast<uint64_t>(static_cast<int64_t>(lit.dimacs())));
  }
  return h;
}

bool operator==(const CnfFormula& a, const CnfFormula& b) {
  return a.n_ == b.n_ && a.clauses_ == b.clauses_;
}

}  // namespace dsearch
