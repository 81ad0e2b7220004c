#pragma once

// Exact rational arithmetic over arbitrary-precision integers.
//
// Two value types live here:
//   Rat       - a nonnegative rational, the element type of every monoid.
//   SignedRat - a signed rational, used only where differences of monoid
//               elements are formed (difference groups, gap widths).
// Both are always stored in lowest terms with a positive denominator, and
// zero is 0/1.

#include <compare>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace puiseux {

using BigInt = mpz_class;

// Raised for malformed input: bad rational strings, zero denominators,
// values outside the domain of an operation.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);

class SignedRat;

class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(long long n);  // NOLINT(google-explicit-constructor): integer literals
  Rat(const BigInt& num, const BigInt& den);
  explicit Rat(const BigInt& n);

  // Parses "a" or "a/b" (decimal digits only, no sign, no whitespace).
  static Rat parse(std::string_view text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  // "a" for integers, "a/b" otherwise.
  std::string str() const;

  // Largest integer <= this.
  BigInt floor() const;
  // Smallest integer >= this.
  BigInt ceil() const;
  // floor(this + 1/2).
  BigInt round_half_up() const;

  double to_double() const;

  Rat operator+(const Rat& rhs) const;
  Rat operator*(const Rat& rhs) const;
  Rat operator/(const Rat& rhs) const;
  SignedRat operator-(const Rat& rhs) const;
  Rat& operator+=(const Rat& rhs) { return *this = *this + rhs; }
  Rat& operator*=(const Rat& rhs) { return *this = *this * rhs; }

  // this - rhs, which must be nonnegative.
  Rat minus(const Rat& rhs) const;

  Rat pow(unsigned e) const;

  bool operator==(const Rat& rhs) const {
    return num_ == rhs.num_ && den_ == rhs.den_;
  }
  std::strong_ordering operator<=>(const Rat& rhs) const;

 private:
  struct Reduced {};
  Rat(BigInt num, BigInt den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

  BigInt num_;
  BigInt den_;

  friend class SignedRat;
};

class SignedRat {
 public:
  SignedRat() : num_(0), den_(1) {}
  SignedRat(long long n);  // NOLINT(google-explicit-constructor)
  SignedRat(const BigInt& num, const BigInt& den);
  SignedRat(const Rat& r);  // NOLINT(google-explicit-constructor): widening

  // Accepts an optional leading '-'.
  static SignedRat parse(std::string_view text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  int sign() const { return sgn(num_); }
  bool is_zero() const { return num_ == 0; }
  std::string str() const;

  SignedRat operator+(const SignedRat& rhs) const;
  SignedRat operator-(const SignedRat& rhs) const;
  SignedRat operator-() const;
  SignedRat operator*(const SignedRat& rhs) const;
  SignedRat operator/(const SignedRat& rhs) const;

  SignedRat abs() const;
  // Narrowing; throws InputError when negative.
  Rat to_rat() const;

  bool operator==(const SignedRat& rhs) const {
    return num_ == rhs.num_ && den_ == rhs.den_;
  }
  std::strong_ordering operator<=>(const SignedRat& rhs) const;

 private:
  BigInt num_;
  BigInt den_;
};

// Numerator and denominator of a positive rational.
std::pair<BigInt, BigInt> num_den(const Rat& q);

struct RatSetSummary {
  BigInt numerator_gcd;
  BigInt denominator_lcm;
  std::set<BigInt> denominators;
};

// Numerator gcd, denominator lcm and denominator set of a nonempty list of
// positive rationals.
RatSetSummary summarize(const std::vector<Rat>& values);

// Parses a plain nonnegative decimal integer ("0", "17", ...).
BigInt parse_natural(std::string_view text);

}  // namespace puiseux
