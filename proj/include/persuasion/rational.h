// Copyright 2026 The Persuasion Lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PERSUASION_RATIONAL_H_
#define PERSUASION_RATIONAL_H_

#include <compare>
#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace persuasion {

// Exact rational number in canonical form (positive denominator, reduced).
//
// Values that fit in 64-bit numerator/denominator are stored inline and use
// 128-bit intermediates; anything larger is promoted to a GMP rational and
// demoted again once it fits. Arithmetic never rounds.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit by design
  Rational(std::int64_t numerator, std::int64_t denominator);

  // Accepts "p/q", "p", with an optional leading sign. Throws
  // std::invalid_argument on malformed text or a zero denominator.
  static Rational Parse(std::string_view text);

  // Canonical text: "-3/4", "2", "0".
  std::string ToString() const;

  int sign() const;
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const;

  // Numerator and denominator in decimal (exact for promoted values too).
  std::string numerator_string() const;
  std::string denominator_string() const;

  // Inline representation; only meaningful when !is_big().
  std::int64_t small_numerator() const { return num_; }
  std::int64_t small_denominator() const { return den_; }
  bool is_big() const { return big_ != nullptr; }

  Rational operator-() const;
  Rational abs() const { return sign() < 0 ? -*this : *this; }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  mpq_class ToMpq() const;
  static Rational FromMpq(const mpq_class& q);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace persuasion

#endif  // PERSUASION_RATIONAL_H_
