#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace golod {

using Rational = boost::multiprecision::cpp_rational;

class Scalar;

/// Coefficient field: either the rationals or a prime field F_p with p < 2^31.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint32_t p);
  /// Accepts "q", "Q", "f2", "F3", "f101", ...
  static Field parse(std::string_view spec);

  bool is_rational() const { return modulus_ == 0; }
  std::uint32_t characteristic() const { return modulus_; }
  std::string name() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long n) const;

  bool operator==(const Field&) const = default;

 private:
  friend class Scalar;
  explicit Field(std::uint32_t m) : modulus_(m) {}
  std::uint32_t modulus_;
};

/// Exact field element. Residues are kept canonical in [0, p); rationals are
/// always reduced with positive denominator (cpp_rational guarantees this).
class Scalar {
 public:
  Scalar() = default;

  Field field() const { return Field(modulus_); }
  bool is_zero() const { return modulus_ == 0 ? rational_ == 0 : residue_ == 0; }
  bool is_one() const { return modulus_ == 0 ? rational_ == 1 : residue_ == 1; }

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Negate in place when `negate` is set; the common (-1)^k pattern.
  Scalar signed_by(bool negate) const { return negate ? -*this : *this; }

  std::string to_string() const;
  std::uint32_t residue() const { return residue_; }
  const Rational& rational() const { return rational_; }

 private:
  friend class Field;
  void check_same(const Scalar& o) const;

  std::uint32_t modulus_ = 0;
  std::uint32_t residue_ = 0;
  Rational rational_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace golod
