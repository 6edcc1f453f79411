#include "golodlab/field.hpp"

#include <cctype>
#include <charconv>

#include "golodlab/errors.hpp"

namespace golod {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1;
  base %= p;
  while (exp) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p)) throw DomainError("not a supported prime: " + std::to_string(p));
  return Field(p);
}

Field Field::parse(std::string_view spec) {
  if (spec == "q" || spec == "Q") return rationals();
  if (spec.size() >= 2 && (spec[0] == 'f' || spec[0] == 'F')) {
    std::uint32_t p = 0;
    auto [ptr, ec] = std::from_chars(spec.data() + 1, spec.data() + spec.size(), p);
    if (ec == std::errc() && ptr == spec.data() + spec.size()) return prime(p);
  }
  throw DomainError("unknown field '" + std::string(spec) + "' (expected q, f2, f3, f<p>)");
}

std::string Field::name() const { return is_rational() ? "Q" : "F" + std::to_string(modulus_); }

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long n) const {
  Scalar s;
  s.modulus_ = modulus_;
  if (modulus_ == 0) {
    s.rational_ = n;
  } else {
    long long r = n % static_cast<long long>(modulus_);
    if (r < 0) r += modulus_;
    s.residue_ = static_cast<std::uint32_t>(r);
  }
  return s;
}

void Scalar::check_same(const Scalar& o) const {
  if (modulus_ != o.modulus_) throw DomainError("arithmetic across different fields");
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (modulus_ == 0) {
    rational_ += o.rational_;
  } else {
    std::uint64_t r = std::uint64_t(residue_) + o.residue_;
    residue_ = static_cast<std::uint32_t>(r >= modulus_ ? r - modulus_ : r);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (modulus_ == 0) {
    rational_ -= o.rational_;
  } else {
    residue_ = residue_ >= o.residue_ ? residue_ - o.residue_ : residue_ + (modulus_ - o.residue_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (modulus_ == 0) {
    rational_ *= o.rational_;
  } else {
    residue_ = static_cast<std::uint32_t>(std::uint64_t(residue_) * o.residue_ % modulus_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (modulus_ == 0)
    r.rational_ = -rational_;
  else if (residue_ != 0)
    r.residue_ = modulus_ - residue_;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  Scalar r = *this;
  if (modulus_ == 0)
    r.rational_ = 1 / rational_;
  else
    r.residue_ = pow_mod(residue_, modulus_ - 2, modulus_);
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.modulus_ != b.modulus_) return false;
  return a.modulus_ == 0 ? a.rational_ == b.rational_ : a.residue_ == b.residue_;
}

std::string Scalar::to_string() const {
  return modulus_ == 0 ? rational_.str() : std::to_string(residue_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace golod
