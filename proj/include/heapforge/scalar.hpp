#pragma once

// Exact field elements over Q or a prime field F_p.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace heapforge {

/// Raised for malformed input: shape or field mismatches, out-of-range
/// indices, unparsable text. Axiom failures are never reported this way.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace lin {

/// The ground field. Either the rationals or F_p for a prime p < 2^31.
class FieldSpec {
 public:
  enum class Kind { Rationals, PrimeField };

  /// Q.
  FieldSpec() : FieldSpec(Kind::Rationals, 0) {}
  static FieldSpec rationals() { return FieldSpec(Kind::Rationals, 0); }
  /// Throws InputError unless p is a prime below 2^31 (trial division).
  static FieldSpec prime(std::uint64_t p);

  Kind kind() const { return kind_; }
  bool is_rational() const { return kind_ == Kind::Rationals; }
  /// 0 for Q.
  std::uint32_t characteristic() const { return p_; }

  std::string describe() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(Kind k, std::uint32_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

/// An element of a FieldSpec. Rationals are kept in lowest terms with a
/// positive denominator; residues live in [0, p).
class Scalar {
 public:
  explicit Scalar(FieldSpec field) : field_(field) {}
  Scalar(FieldSpec field, long value);
  Scalar(FieldSpec field, const mpz_class& num, const mpz_class& den);

  static Scalar zero(FieldSpec f) { return Scalar(f); }
  static Scalar one(FieldSpec f) { return Scalar(f, 1); }

  /// "num/den" or "num" for Q; a decimal residue (any integer, reduced
  /// mod p; fractions are allowed and inverted mod p) for F_p.
  static Scalar parse(FieldSpec f, std::string_view text);
  /// Canonical text: "num/den" (den omitted when 1) or the residue.
  std::string to_string() const;

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar inverse() const;
  /// Multiplicative order in F_p; 0 for zero or for Q values other than +-1.
  std::uint64_t multiplicative_order() const;

  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  void check_same(const Scalar& o) const;

  FieldSpec field_;
  mpq_class q_;
  std::uint32_t r_ = 0;
};

}  // namespace lin
}  // namespace heapforge
