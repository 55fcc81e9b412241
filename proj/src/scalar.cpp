#include "heapforge/scalar.hpp"

#include <cctype>

namespace heapforge::lin {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
    throw InputError("field characteristic " + std::to_string(p) +
                     " is not a prime below 2^31");
  return FieldSpec(Kind::PrimeField, static_cast<std::uint32_t>(p));
}

std::string FieldSpec::describe() const {
  return is_rational() ? std::string("Q") : "F_" + std::to_string(p_);
}

namespace {

std::uint32_t reduce(long v, std::uint32_t p) {
  long r = v % static_cast<long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t reduce(const mpz_class& v, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

bool is_integer_literal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Scalar::Scalar(FieldSpec field, long value) : field_(field) {
  if (field_.is_rational())
    q_ = value;
  else
    r_ = reduce(value, field_.characteristic());
}

Scalar::Scalar(FieldSpec field, const mpz_class& num, const mpz_class& den)
    : field_(field) {
  if (den == 0) throw InputError("zero denominator");
  if (field_.is_rational()) {
    q_ = mpq_class(num, den);
    q_.canonicalize();
  } else {
    const auto p = field_.characteristic();
    const auto d = reduce(den, p);
    if (d == 0)
      throw InputError("denominator divisible by " + std::to_string(p));
    r_ = static_cast<std::uint32_t>(std::uint64_t{reduce(num, p)} *
                                    pow_mod(d, p - 2, p) % p);
  }
}

Scalar Scalar::parse(FieldSpec f, std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  const auto den_text =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num_text) || !is_integer_literal(den_text) ||
      den_text.front() == '-' || den_text.front() == '+')
    throw InputError("malformed scalar \"" + std::string(text) + "\"");
  std::string n(num_text);
  if (n.front() == '+') n.erase(0, 1);
  return Scalar(f, mpz_class(n), mpz_class(std::string(den_text)));
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) return q_.get_str();
  return std::to_string(r_);
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? sgn(q_) == 0 : r_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? q_ == 1 : r_ == 1;
}

void Scalar::check_same(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw InputError("field mismatch: " + field_.describe() + " vs " +
                     o.field_.describe());
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar r(*this);
  r += o;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational()) {
    q_ += o.q_;
  } else {
    const auto p = field_.characteristic();
    r_ = static_cast<std::uint32_t>((std::uint64_t{r_} + o.r_) % p);
  }
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar r(field_);
  if (field_.is_rational())
    r.q_ = -q_;
  else
    r.r_ = r_ == 0 ? 0 : field_.characteristic() - r_;
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (field_.is_rational())
    q_ *= o.q_;
  else
    r_ = static_cast<std::uint32_t>(std::uint64_t{r_} * o.r_ %
                                    field_.characteristic());
  return *this;
}

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar r(*this);
  r *= o;
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw InputError("division by zero");
  Scalar r(field_);
  if (field_.is_rational())
    r.q_ = 1 / q_;
  else
    r.r_ = pow_mod(r_, field_.characteristic() - 2, field_.characteristic());
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same(o);
  return *this * o.inverse();
}

std::uint64_t Scalar::multiplicative_order() const {
  if (is_zero()) return 0;
  if (field_.is_rational()) {
    if (q_ == 1) return 1;
    if (q_ == -1) return 2;
    return 0;
  }
  std::uint64_t acc = r_;
  for (std::uint64_t k = 1;; ++k) {
    if (acc == 1) return k;
    acc = acc * r_ % field_.characteristic();
  }
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

}  // namespace heapforge::lin
