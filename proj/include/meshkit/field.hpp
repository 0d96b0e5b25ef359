#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace meshkit {

class Scalar;

// Ground field: exact rationals (p == 0) or the prime field F_p.
struct GroundField {
  std::uint32_t p = 0;

  static GroundField rationals() { return {}; }
  static GroundField prime(std::uint32_t p);
  // Accepts "q", "Q", "f<p>", "F<p>".
  static GroundField parse(std::string_view text);

  bool is_rational() const { return p == 0; }
  std::string name() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from(long v) const;
  Scalar from(const mpq_class& v) const;
  // Parses "a" or "a/b".
  Scalar parse_scalar(std::string_view text) const;

  friend bool operator==(const GroundField&, const GroundField&) = default;
};

bool is_prime(std::uint64_t n);

// Element of Q or F_p. Elements with modulus 0 are rationals; they adopt the
// modulus of the other operand in mixed arithmetic (reduction Z_(p) -> F_p).
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(const mpq_class& v) : q_(v) { q_.canonicalize(); }
  Scalar(std::uint64_t residue, std::uint32_t p) : r_(residue % p), p_(p) {}

  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return p_ ? r_ == 0 : sgn(q_) == 0; }
  bool is_one() const { return p_ ? r_ == 1 : q_ == 1; }

  // Residue in F_p; throws if the denominator vanishes mod p.
  std::uint64_t residue(std::uint32_t p) const;
  const mpq_class& rational() const { return q_; }

  Scalar inverse() const;
  Scalar operator-() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string str() const;

 private:
  std::uint32_t common(const Scalar& o) const;
  void lift(std::uint32_t p);

  mpq_class q_;
  std::uint64_t r_ = 0;
  std::uint32_t p_ = 0;
};

}  // namespace meshkit
