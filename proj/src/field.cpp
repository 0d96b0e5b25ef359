#include "meshkit/field.hpp"

#include <cctype>

#include "meshkit/errors.hpp"

namespace meshkit {

namespace {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

std::uint64_t mpz_mod(const mpz_class& z, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

GroundField GroundField::prime(std::uint32_t p) {
  if (!is_prime(p)) throw InvalidInput("field characteristic " + std::to_string(p) + " is not prime");
  if (p >= (1u << 31)) throw InvalidInput("characteristic too large");
  GroundField f;
  f.p = p;
  return f;
}

GroundField GroundField::parse(std::string_view text) {
  if (text == "q" || text == "Q") return rationals();
  if (text.size() >= 2 && (text[0] == 'f' || text[0] == 'F')) {
    std::uint64_t v = 0;
    for (char c : text.substr(1)) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw InvalidInput("bad field: " + std::string(text));
      v = v * 10 + static_cast<std::uint64_t>(c - '0');
      if (v > 0xffffffffULL) throw InvalidInput("bad field: " + std::string(text));
    }
    return prime(static_cast<std::uint32_t>(v));
  }
  throw InvalidInput("bad field: " + std::string(text));
}

std::string GroundField::name() const { return p ? "F" + std::to_string(p) : "Q"; }

Scalar GroundField::zero() const { return from(0); }
Scalar GroundField::one() const { return from(1); }

Scalar GroundField::from(long v) const {
  if (!p) return Scalar(v);
  long m = v % static_cast<long>(p);
  if (m < 0) m += p;
  return Scalar(static_cast<std::uint64_t>(m), p);
}

Scalar GroundField::from(const mpq_class& v) const {
  Scalar s(v);
  if (!p) return s;
  return Scalar(s.residue(p), p);
}

Scalar GroundField::parse_scalar(std::string_view text) const {
  mpq_class q;
  std::string t(text);
  if (t.empty() || q.set_str(t, 10) != 0) throw InvalidInput("bad scalar: " + t);
  if (q.get_den() == 0) throw InvalidInput("zero denominator: " + t);
  return from(q);
}

std::uint64_t Scalar::residue(std::uint32_t p) const {
  if (p_ == p) return r_;
  if (p_) throw InvalidInput("mixed prime fields");
  std::uint64_t d = mpz_mod(q_.get_den(), p);
  if (d == 0) throw InvalidInput("denominator divisible by characteristic");
  std::uint64_t n = mpz_mod(q_.get_num(), p);
  return n * pow_mod(d, p - 2, p) % p;
}

std::uint32_t Scalar::common(const Scalar& o) const {
  if (p_ && o.p_ && p_ != o.p_) throw InvalidInput("mixed prime fields");
  return p_ ? p_ : o.p_;
}

void Scalar::lift(std::uint32_t p) {
  if (p_ == p) return;
  r_ = residue(p);
  p_ = p;
  q_ = 0;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw InvalidInput("division by zero");
  if (p_) return Scalar(pow_mod(r_, p_ - 2, p_), p_);
  Scalar s;
  s.q_ = 1 / q_;
  s.q_.canonicalize();
  return s;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (p_) {
    s.r_ = r_ ? p_ - r_ : 0;
  } else {
    s.q_ = -q_;
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  std::uint32_t p = common(o);
  if (!p) {
    q_ += o.q_;
    return *this;
  }
  lift(p);
  r_ = (r_ + o.residue(p)) % p;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  std::uint32_t p = common(o);
  if (!p) {
    q_ -= o.q_;
    return *this;
  }
  lift(p);
  r_ = (r_ + p - o.residue(p)) % p;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  std::uint32_t p = common(o);
  if (!p) {
    q_ *= o.q_;
    return *this;
  }
  lift(p);
  r_ = r_ * o.residue(p) % p;
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  std::uint32_t p = a.common(b);
  if (!p) return a.q_ == b.q_;
  return a.residue(p) == b.residue(p);
}

std::string Scalar::str() const { return p_ ? std::to_string(r_) : q_.get_str(); }

}  // namespace meshkit
