#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace brauerc {

struct MathError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// column is 1-based within the parsed text; 0 when unknown.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what, std::size_t col = 0) : std::runtime_error(what), column(col) {}
  std::size_t column;
};

// 1-based column of token inside text, or 0.
inline std::size_t column_of(std::string_view text, std::string_view token) {
  auto pos = token.empty() ? std::string_view::npos : text.find(token);
  return pos == std::string_view::npos ? 0 : pos + 1;
}

class Scalar;

// Either the rationals (characteristic 0) or a prime field F_p.
class Field {
 public:
  Field() = default;
  static Field rationals() { return Field(); }
  static Field prime(std::uint32_t p);
  static Field of_characteristic(std::uint32_t p) { return p == 0 ? rationals() : prime(p); }

  std::uint32_t characteristic() const noexcept { return p_; }
  bool is_rational() const noexcept { return p_ == 0; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  // Fails in characteristic p when p divides the denominator.
  Scalar from_rational(const mpq_class& q) const;
  // Accepts "-3", "7/2", "4"; a leading U+2212 minus is also accepted.
  Scalar parse(std::string_view text) const;

  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

class Scalar {
 public:
  Scalar() : v_(mpq_class(0)) {}

  Field field() const;
  std::uint32_t characteristic() const noexcept { return p_; }
  bool is_zero() const;
  bool is_one() const;

  const mpq_class& rational() const { return std::get<mpq_class>(v_); }
  std::uint32_t residue() const { return std::get<std::uint32_t>(v_); }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inverse() const;
  Scalar pow(long long e) const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // "a/b" or "a"; residues printed as 0..p-1.
  std::string to_string() const;

  static Scalar from_residue(std::uint32_t p, std::uint64_t r) {
    Scalar s;
    s.p_ = p;
    s.v_ = static_cast<std::uint32_t>(r % p);
    return s;
  }
  static Scalar from_mpq(mpq_class q) {
    Scalar s;
    q.canonicalize();
    s.v_ = std::move(q);
    return s;
  }

 private:
  void check(const Scalar& o) const;
  std::uint32_t p_ = 0;
  std::variant<std::uint32_t, mpq_class> v_;
};

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);
bool is_prime(std::uint64_t n);

// The parameters of B(C_r, delta): a field and the loop value.
struct FieldSpec {
  Field field;
  Scalar delta;

  FieldSpec() : delta(Field().one()) {}
  FieldSpec(Field f, Scalar d);
  static FieldSpec make(std::uint32_t characteristic, std::string_view delta_text);
  std::string key() const;
};

}  // namespace brauerc
