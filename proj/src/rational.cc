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

#include "persuasion/rational.h"

#include <charconv>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace persuasion {
namespace {

using i128 = __int128;
using u128 = unsigned __int128;

// The inline range is symmetric so negation never overflows.
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

bool Fits(i128 v) { return v <= kMax && v >= -static_cast<i128>(kMax); }

u128 Abs128(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 Gcd128(u128 a, u128 b) {
  if (a <= std::numeric_limits<std::uint64_t>::max() &&
      b <= std::numeric_limits<std::uint64_t>::max()) {
    return std::gcd(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(b));
  }
  if (a == 0) return b;
  if (b == 0) return a;
  int shift = 0;
  while (((a | b) & 1) == 0) {
    a >>= 1;
    b >>= 1;
    ++shift;
  }
  while ((a & 1) == 0) a >>= 1;
  do {
    while ((b & 1) == 0) b >>= 1;
    if (a > b) std::swap(a, b);
    b -= a;
  } while (b != 0);
  return a << shift;
}

mpz_class MpzFrom128(i128 v) {
  u128 mag = Abs128(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
  mpz_class out = (hi << 64) + lo;
  return v < 0 ? mpz_class(-out) : out;
}

bool IsDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  i128 n = numerator;
  i128 d = denominator;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  u128 g = Gcd128(Abs128(n), static_cast<u128>(d));
  n /= static_cast<i128>(g);
  d /= static_cast<i128>(g);
  if (Fits(n) && Fits(d)) {
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
  } else {
    mpq_class q(MpzFrom128(n), MpzFrom128(d));
    q.canonicalize();
    *this = FromMpq(q);
  }
}

Rational Rational::Parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num_text = body;
  std::string_view den_text = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num_text = body.substr(0, slash);
    den_text = body.substr(slash + 1);
  }
  if (!IsDigits(num_text) || !IsDigits(den_text)) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  if (num_text.size() <= 18 && den_text.size() <= 18) {
    std::int64_t n = 0;
    std::int64_t d = 0;
    std::from_chars(num_text.data(), num_text.data() + num_text.size(), n);
    std::from_chars(den_text.data(), den_text.data() + den_text.size(), d);
    if (d == 0) {
      throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    }
    return Rational(negative ? -n : n, d);
  }
  mpz_class n(std::string(num_text), 10);
  mpz_class d(std::string(den_text), 10);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  mpq_class q(negative ? mpz_class(-n) : n, d);
  q.canonicalize();
  return FromMpq(q);
}

std::string Rational::ToString() const {
  if (big_) {
    if (big_->get_den() == 1) return big_->get_num().get_str();
    return big_->get_str();
  }
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return (num_ > 0) - (num_ < 0);
}

bool Rational::is_integer() const {
  if (big_) return big_->get_den() == 1;
  return den_ == 1;
}

std::string Rational::numerator_string() const {
  return big_ ? big_->get_num().get_str() : std::to_string(num_);
}

std::string Rational::denominator_string() const {
  return big_ ? big_->get_den().get_str() : std::to_string(den_);
}

Rational Rational::operator-() const {
  if (big_) return FromMpq(-*big_);
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    i128 n;
    i128 d;
    if (den_ == rhs.den_) {
      n = static_cast<i128>(num_) + rhs.num_;
      d = den_;
    } else {
      std::int64_t g = std::gcd(den_, rhs.den_);
      n = static_cast<i128>(num_) * (rhs.den_ / g) + static_cast<i128>(rhs.num_) * (den_ / g);
      d = static_cast<i128>(den_ / g) * rhs.den_;
    }
    u128 g = Gcd128(Abs128(n), static_cast<u128>(d));
    if (g > 1) {
      n /= static_cast<i128>(g);
      d /= static_cast<i128>(g);
    }
    if (Fits(n) && Fits(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      return *this;
    }
  }
  *this = FromMpq(ToMpq() + rhs.ToMpq());
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  if (!big_ && !rhs.big_) {
    if (num_ == 0 || rhs.num_ == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    std::int64_t g1 = std::gcd(num_, rhs.den_);
    std::int64_t g2 = std::gcd(rhs.num_, den_);
    i128 n = static_cast<i128>(num_ / g1) * (rhs.num_ / g2);
    i128 d = static_cast<i128>(den_ / g2) * (rhs.den_ / g1);
    if (Fits(n) && Fits(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      return *this;
    }
  }
  *this = FromMpq(ToMpq() * rhs.ToMpq());
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("rational division by zero");
  if (!rhs.big_) {
    Rational inv;
    inv.num_ = rhs.num_ < 0 ? -rhs.den_ : rhs.den_;
    inv.den_ = rhs.num_ < 0 ? -rhs.num_ : rhs.num_;
    return *this *= inv;
  }
  *this = FromMpq(ToMpq() / rhs.ToMpq());
  return *this;
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  return a.ToMpq() == b.ToMpq();
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    i128 lhs = static_cast<i128>(a.num_) * b.den_;
    i128 rhs = static_cast<i128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }
  int c = cmp(a.ToMpq(), b.ToMpq());
  return c <=> 0;
}

mpq_class Rational::ToMpq() const {
  if (big_) return *big_;
  return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

Rational Rational::FromMpq(const mpq_class& q) {
  const mpz_class& n = q.get_num();
  const mpz_class& d = q.get_den();
  Rational r;
  if (n.fits_slong_p() && d.fits_slong_p() && n.get_si() != std::numeric_limits<long>::min()) {
    r.num_ = n.get_si();
    r.den_ = d.get_si();
    return r;
  }
  r.num_ = 0;
  r.den_ = 1;
  r.big_ = std::make_shared<const mpq_class>(q);
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.ToString(); }

}  // namespace persuasion
