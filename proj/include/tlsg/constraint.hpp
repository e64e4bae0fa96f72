// Copyright 2026 The tlsg authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace tlsg {

/// A k-variable Boolean constraint given by its satisfying set
/// L subseteq {0,1}^k. Assignments are packed little-endian: bit i of the
/// word is variable i (pin i).
class LogicalConstraint {
 public:
  LogicalConstraint(int arity, std::vector<std::uint32_t> satisfying)
      : k_(arity), rows_(std::move(satisfying)) {
    if (k_ < 1 || k_ > 6) throw std::invalid_argument("constraint arity must be in [1,6]");
    std::sort(rows_.begin(), rows_.end());
    rows_.erase(std::unique(rows_.begin(), rows_.end()), rows_.end());
    if (rows_.empty()) throw std::invalid_argument("satisfying set must be nonempty");
    for (auto r : rows_)
      if (r >= (1u << k_)) throw std::invalid_argument("assignment out of range for arity");
    if (rows_.size() == (std::size_t{1} << k_))
      throw std::invalid_argument("full-cube constraint needs no gadget");
  }

  static LogicalConstraint from_strings(const std::vector<std::string>& rows) {
    if (rows.empty()) throw std::invalid_argument("satisfying set must be nonempty");
    int k = static_cast<int>(rows[0].size());
    std::vector<std::uint32_t> packed;
    for (const auto& s : rows) {
      if (static_cast<int>(s.size()) != k)
        throw std::invalid_argument("inconsistent assignment lengths");
      std::uint32_t v = 0;
      for (int i = 0; i < k; ++i) {
        if (s[i] != '0' && s[i] != '1') throw std::invalid_argument("bad bit");
        if (s[i] == '1') v |= 1u << i;
      }
      packed.push_back(v);
    }
    return LogicalConstraint(k, std::move(packed));
  }

  int arity() const { return k_; }
  const std::vector<std::uint32_t>& rows() const { return rows_; }
  bool satisfies(std::uint32_t assignment) const {
    return std::binary_search(rows_.begin(), rows_.end(), assignment);
  }
  std::vector<std::string> row_strings() const {
    std::vector<std::string> out;
    for (auto r : rows_) {
      std::string s(k_, '0');
      for (int i = 0; i < k_; ++i)
        if ((r >> i) & 1) s[i] = '1';
      out.push_back(std::move(s));
    }
    return out;
  }

  /// Permutations of the pin slots that map the satisfying set onto itself.
  /// Used to cut symmetric pin orderings from the search stream.
  std::vector<std::vector<int>> automorphisms() const {
    std::vector<int> perm(k_);
    for (int i = 0; i < k_; ++i) perm[i] = i;
    std::vector<std::vector<int>> out;
    std::set<std::uint32_t> target(rows_.begin(), rows_.end());
    do {
      std::set<std::uint32_t> mapped;
      for (auto r : rows_) {
        std::uint32_t img = 0;
        for (int i = 0; i < k_; ++i)
          if ((r >> i) & 1) img |= 1u << perm[i];
        mapped.insert(img);
      }
      if (mapped == target) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  }

  friend bool operator==(const LogicalConstraint&, const LogicalConstraint&) = default;

 private:
  int k_;
  std::vector<std::uint32_t> rows_;
};

// Standard 2-to-1 gate tables with pin order (in1, in2, out).
inline LogicalConstraint gate_and() { return LogicalConstraint::from_strings({"000", "100", "010", "111"}); }
inline LogicalConstraint gate_or() { return LogicalConstraint::from_strings({"000", "101", "011", "111"}); }
inline LogicalConstraint gate_nand() { return LogicalConstraint::from_strings({"001", "101", "011", "110"}); }
inline LogicalConstraint gate_nor() { return LogicalConstraint::from_strings({"001", "100", "010", "110"}); }
inline LogicalConstraint gate_xor() { return LogicalConstraint::from_strings({"000", "101", "011", "110"}); }
inline LogicalConstraint gate_not() { return LogicalConstraint::from_strings({"01", "10"}); }

}  // namespace tlsg
