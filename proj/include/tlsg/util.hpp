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

#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace tlsg {

inline const char* version() {
#ifdef TLSG_VERSION
  return TLSG_VERSION;
#else
  return "0.0.0";
#endif
}

/// Error raised when an input exceeds a hard size cap (enumeration limits,
/// state-vector caps). Carries the offending size and the cap.
class size_limit_error : public std::runtime_error {
 public:
  size_limit_error(const std::string& what, std::size_t size, std::size_t cap)
      : std::runtime_error(what), size_(size), cap_(cap) {}
  std::size_t size() const { return size_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t size_;
  std::size_t cap_;
};

/// Error raised when a solver or stream exceeds its configured budget.
/// `best_bound` carries the best bound known at abort time (solver context).
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& what, long long best_bound = 0)
      : std::runtime_error(what), best_bound_(best_bound) {}
  long long best_bound() const { return best_bound_; }

 private:
  long long best_bound_;
};

/// Geometry violation during gadget composition or layout merging.
class geometry_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A required gadget is missing from the library; message names the
/// unmatched substructure signature.
class library_miss_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Dynamic bitset sized at construction. Vertex sets for graphs beyond 64
// vertices; word-parallel set algebra is the workhorse of the solvers.
// ---------------------------------------------------------------------------
class Bitset {
 public:
  Bitset() : n_(0) {}
  explicit Bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }

  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { w_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void clear() { std::fill(w_.begin(), w_.end(), 0); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  /// Index of the lowest set bit; size() if empty.
  std::size_t first() const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k]) return k * 64 + static_cast<std::size_t>(std::countr_zero(w_[k]));
    return n_;
  }
  /// Next set bit at index > i; size() if none.
  std::size_t next(std::size_t i) const {
    ++i;
    if (i >= n_) return n_;
    std::size_t k = i >> 6;
    std::uint64_t w = w_[k] & (~std::uint64_t{0} << (i & 63));
    while (true) {
      if (w) return k * 64 + static_cast<std::size_t>(std::countr_zero(w));
      if (++k == w_.size()) return n_;
      w = w_[k];
    }
  }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] |= o.w_[k];
    return *this;
  }
  Bitset& andnot(const Bitset& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= ~o.w_[k];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

  bool intersects(const Bitset& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & o.w_[k]) return true;
    return false;
  }
  bool is_subset_of(const Bitset& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & ~o.w_[k]) return false;
    return true;
  }
  bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator<(const Bitset& o) const {
    // Lexicographic by vertex index: lower-indexed membership decides.
    for (std::size_t k = 0; k < w_.size(); ++k) {
      if (w_[k] != o.w_[k]) {
        std::uint64_t diff = w_[k] ^ o.w_[k];
        std::uint64_t low = diff & (~diff + 1);
        return (o.w_[k] & low) != 0;  // o has the lowest differing bit => *this < o
      }
    }
    return false;
  }

  const std::vector<std::uint64_t>& words() const { return w_; }

 private:
  std::size_t n_;
  std::vector<std::uint64_t> w_;
};

// ---------------------------------------------------------------------------
// Exact rational arithmetic on int64. Magnitudes in the weight programs stay
// tiny (weights <= cap, dozens of rows), so overflow checks are assertions.
// ---------------------------------------------------------------------------
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n) : num(n), den(1) {}
  Rational(long long n, long long d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    if (num == 0) {
      den = 1;
      return;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    num /= g;
    den /= g;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num * b.den - b.num * a.den, a.den * b.den);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num * b.num, a.den * b.den);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num == 0) throw std::domain_error("rational division by zero");
    return Rational(a.num * b.den, a.den * b.num);
  }
  Rational operator-() const { return Rational(-num, den); }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num * b.den < b.num * a.den;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.num * b.den <= b.num * a.den;
  }
  bool is_integer() const { return den == 1; }
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
};

/// FNV-1a, used for stable config hashes embedded in artifact files.
inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

/// Thread-count override: TLSG_THREADS wins over hardware concurrency.
unsigned thread_count();

}  // namespace tlsg

#include <thread>

namespace tlsg {
inline unsigned thread_count() {
  if (const char* env = std::getenv("TLSG_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? hc : 1;
}
}  // namespace tlsg
