#include "brauerc/field.hpp"

#include <cctype>

namespace brauerc {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw MathError("division by zero in F_" + std::to_string(p));
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    std::int64_t q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

Field Field::prime(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw MathError("characteristic must be 0 or a prime below 2^31, got " + std::to_string(p));
  return Field(p);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long v) const {
  if (p_ == 0) return Scalar::from_mpq(mpq_class(mpz_class(std::to_string(v))));
  long long m = v % static_cast<long long>(p_);
  if (m < 0) m += p_;
  return Scalar::from_residue(p_, static_cast<std::uint64_t>(m));
}

Scalar Field::from_rational(const mpq_class& q) const {
  if (p_ == 0) return Scalar::from_mpq(q);
  mpz_class pm(p_);
  mpz_class n = q.get_num() % pm, d = q.get_den() % pm;
  if (n < 0) n += pm;
  if (d == 0) throw MathError("denominator " + q.get_den().get_str() + " vanishes in F_" + std::to_string(p_));
  auto num = static_cast<std::uint32_t>(n.get_ui());
  auto den = static_cast<std::uint32_t>(d.get_ui());
  return Scalar::from_residue(p_, static_cast<std::uint64_t>(num) * inverse_mod(den, p_));
}

Scalar Field::parse(std::string_view text) const {
  std::string s;
  for (std::size_t i = 0; i < text.size(); ++i) {
    // U+2212 MINUS SIGN is E2 88 92
    if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
        static_cast<unsigned char>(text[i + 1]) == 0x88 && static_cast<unsigned char>(text[i + 2]) == 0x92) {
      s += '-';
      i += 2;
      continue;
    }
    if (!std::isspace(static_cast<unsigned char>(text[i]))) s += text[i];
  }
  auto bad = [&]() { return ParseError("malformed scalar \"" + std::string(text) + "\""); };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t k = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (k == t.size()) return false;
    for (; k < t.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(t[k]))) return false;
    return true;
  };
  std::string num = s.substr(0, slash), den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') throw bad();
  if (num[0] == '+') num.erase(0, 1);
  mpz_class d(den);
  if (d == 0) throw ParseError("zero denominator in \"" + std::string(text) + "\"");
  mpq_class q(mpz_class(num), d);
  q.canonicalize();
  return from_rational(q);
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

Field Scalar::field() const { return Field::of_characteristic(p_); }

void Scalar::check(const Scalar& o) const {
  if (p_ != o.p_) throw MathError("mixing scalars from different fields");
}

bool Scalar::is_zero() const { return p_ ? residue() == 0 : sgn(rational()) == 0; }
bool Scalar::is_one() const { return p_ ? residue() == 1 : rational() == 1; }

Scalar Scalar::operator+(const Scalar& o) const {
  check(o);
  if (p_) return from_residue(p_, static_cast<std::uint64_t>(residue()) + o.residue());
  return from_mpq(rational() + o.rational());
}
Scalar Scalar::operator-(const Scalar& o) const {
  check(o);
  if (p_) return from_residue(p_, static_cast<std::uint64_t>(residue()) + p_ - o.residue());
  return from_mpq(rational() - o.rational());
}
Scalar Scalar::operator*(const Scalar& o) const {
  check(o);
  if (p_) return from_residue(p_, static_cast<std::uint64_t>(residue()) * o.residue());
  return from_mpq(rational() * o.rational());
}
Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }
Scalar Scalar::operator-() const {
  if (p_) return from_residue(p_, p_ - residue());
  return from_mpq(-rational());
}
Scalar Scalar::inverse() const {
  if (is_zero()) throw MathError("division by zero");
  if (p_) return from_residue(p_, inverse_mod(residue(), p_));
  return from_mpq(1 / rational());
}
Scalar Scalar::pow(long long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar base = *this, acc = field().one();
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}
bool Scalar::operator==(const Scalar& o) const {
  if (p_ != o.p_) return false;
  return p_ ? residue() == o.residue() : rational() == o.rational();
}
std::string Scalar::to_string() const {
  if (p_) return std::to_string(residue());
  return rational().get_str();
}

FieldSpec::FieldSpec(Field f, Scalar d) : field(f), delta(std::move(d)) {
  if (delta.characteristic() != f.characteristic()) throw MathError("delta does not lie in " + f.name());
}

FieldSpec FieldSpec::make(std::uint32_t characteristic, std::string_view delta_text) {
  Field f = Field::of_characteristic(characteristic);
  return FieldSpec(f, f.parse(delta_text));
}

std::string FieldSpec::key() const { return field.name() + "/d=" + delta.to_string(); }

}  // namespace brauerc
