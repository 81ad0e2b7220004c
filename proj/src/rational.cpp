#include "puiseux/rational.hpp"

#include <cctype>

namespace puiseux {

namespace {

BigInt from_ll(long long n) { return BigInt(static_cast<long>(n)); }

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::strong_ordering to_ordering(int c) {
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// Normalizes (num, den) in place: positive denominator, lowest terms.
void normalize(BigInt& num, BigInt& den) {
  if (den == 0) throw InputError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) {
    den = 1;
    return;
  }
  BigInt g = gcd(num, den);
  if (g != 1) {
    num /= g;
    den /= g;
  }
}

}  // namespace

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

BigInt parse_natural(std::string_view text) {
  if (!all_digits(text)) {
    throw InputError("expected a nonnegative integer, got \"" +
                     std::string(text) + "\"");
  }
  return BigInt(std::string(text), 10);
}

// ---------------------------------------------------------------- Rat

Rat::Rat(long long n) : num_(from_ll(n)), den_(1) {
  if (n < 0) throw InputError("negative value for a nonnegative rational");
}

Rat::Rat(const BigInt& n) : num_(n), den_(1) {
  if (n < 0) throw InputError("negative value for a nonnegative rational");
}

Rat::Rat(const BigInt& num, const BigInt& den) : num_(num), den_(den) {
  normalize(num_, den_);
  if (num_ < 0) throw InputError("negative value for a nonnegative rational");
}

Rat Rat::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!all_digits(text)) {
      throw InputError("malformed rational \"" + std::string(text) + "\"");
    }
    return Rat(BigInt(std::string(text), 10));
  }
  const auto a = text.substr(0, slash);
  const auto b = text.substr(slash + 1);
  if (!all_digits(a) || !all_digits(b)) {
    throw InputError("malformed rational \"" + std::string(text) + "\"");
  }
  return Rat(BigInt(std::string(a), 10), BigInt(std::string(b), 10));
}

std::string Rat::str() const {
  if (den_ == 1) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

BigInt Rat::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  return q;
}

BigInt Rat::ceil() const {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  return q;
}

BigInt Rat::round_half_up() const {
  BigInt twice_num = 2 * num_ + den_;
  BigInt twice_den = 2 * den_;
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), twice_num.get_mpz_t(), twice_den.get_mpz_t());
  return q;
}

double Rat::to_double() const {
  mpq_class q(num_, den_);
  return q.get_d();
}

Rat Rat::operator+(const Rat& rhs) const {
  if (den_ == rhs.den_) {
    BigInt n = num_ + rhs.num_;
    BigInt d = den_;
    normalize(n, d);
    return Rat(std::move(n), std::move(d), Reduced{});
  }
  BigInt n = num_ * rhs.den_ + rhs.num_ * den_;
  BigInt d = den_ * rhs.den_;
  normalize(n, d);
  return Rat(std::move(n), std::move(d), Reduced{});
}

Rat Rat::operator*(const Rat& rhs) const {
  BigInt n = num_ * rhs.num_;
  BigInt d = den_ * rhs.den_;
  normalize(n, d);
  return Rat(std::move(n), std::move(d), Reduced{});
}

Rat Rat::operator/(const Rat& rhs) const {
  if (rhs.is_zero()) throw InputError("division by zero");
  BigInt n = num_ * rhs.den_;
  BigInt d = den_ * rhs.num_;
  normalize(n, d);
  return Rat(std::move(n), std::move(d), Reduced{});
}

SignedRat Rat::operator-(const Rat& rhs) const {
  return SignedRat(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
}

Rat Rat::minus(const Rat& rhs) const { return (*this - rhs).to_rat(); }

Rat Rat::pow(unsigned e) const {
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), num_.get_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), den_.get_mpz_t(), e);
  return Rat(std::move(n), std::move(d), Reduced{});
}

std::strong_ordering Rat::operator<=>(const Rat& rhs) const {
  if (den_ == rhs.den_) return to_ordering(cmp(num_, rhs.num_));
  BigInt lhs_cross = num_ * rhs.den_;
  BigInt rhs_cross = rhs.num_ * den_;
  return to_ordering(cmp(lhs_cross, rhs_cross));
}

// ---------------------------------------------------------- SignedRat

SignedRat::SignedRat(long long n) : num_(from_ll(n)), den_(1) {}

SignedRat::SignedRat(const BigInt& num, const BigInt& den)
    : num_(num), den_(den) {
  normalize(num_, den_);
}

SignedRat::SignedRat(const Rat& r) : num_(r.num_), den_(r.den_) {}

SignedRat SignedRat::parse(std::string_view text) {
  if (!text.empty() && text.front() == '-') {
    return -SignedRat(Rat::parse(text.substr(1)));
  }
  return SignedRat(Rat::parse(text));
}

std::string SignedRat::str() const {
  if (den_ == 1) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

SignedRat SignedRat::operator+(const SignedRat& rhs) const {
  return SignedRat(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

SignedRat SignedRat::operator-(const SignedRat& rhs) const {
  return SignedRat(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
}

SignedRat SignedRat::operator-() const {
  SignedRat r = *this;
  r.num_ = -r.num_;
  return r;
}

SignedRat SignedRat::operator*(const SignedRat& rhs) const {
  return SignedRat(num_ * rhs.num_, den_ * rhs.den_);
}

SignedRat SignedRat::operator/(const SignedRat& rhs) const {
  if (rhs.is_zero()) throw InputError("division by zero");
  return SignedRat(num_ * rhs.den_, den_ * rhs.num_);
}

SignedRat SignedRat::abs() const { return sign() < 0 ? -*this : *this; }

Rat SignedRat::to_rat() const {
  if (num_ < 0) {
    throw InputError("negative value " + str() + " where a nonnegative rational is required");
  }
  return Rat(num_, den_);
}

std::strong_ordering SignedRat::operator<=>(const SignedRat& rhs) const {
  BigInt lhs_cross = num_ * rhs.den_;
  BigInt rhs_cross = rhs.num_ * den_;
  return to_ordering(cmp(lhs_cross, rhs_cross));
}

// ------------------------------------------------------------ helpers

std::pair<BigInt, BigInt> num_den(const Rat& q) {
  if (q.is_zero()) {
    throw InputError("numerator/denominator maps are defined on positive rationals only");
  }
  return {q.num(), q.den()};
}

RatSetSummary summarize(const std::vector<Rat>& values) {
  if (values.empty()) throw InputError("cannot summarize an empty set");
  RatSetSummary s{BigInt(0), BigInt(1), {}};
  for (const Rat& q : values) {
    const auto [n, d] = num_den(q);
    s.numerator_gcd = gcd(s.numerator_gcd, n);
    s.denominator_lcm = lcm(s.denominator_lcm, d);
    s.denominators.insert(d);
  }
  return s;
}

}  // namespace puiseux
