#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "brauerc/field.hpp"
#include "brauerc/matrix.hpp"

namespace brauerc {

// Univariate polynomial, coefficients stored low degree first, no trailing zeros.
class Poly {
 public:
  explicit Poly(Field f = Field()) : field_(f) {}
  Poly(Field f, std::vector<Scalar> coeffs);
  static Poly x(Field f) { return Poly(f, {f.zero(), f.one()}); }
  static Poly constant(const Scalar& c) { return Poly(c.field(), {c}); }
  static Poly from_ints(Field f, const std::vector<long long>& coeffs);

  Field field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  Scalar coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
  const Scalar& lead() const { return c_.back(); }
  const std::vector<Scalar>& coeffs() const { return c_; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator/(const Poly& o) const { return divmod(o).first; }
  Poly operator%(const Poly& o) const { return divmod(o).second; }
  std::pair<Poly, Poly> divmod(const Poly& o) const;
  Poly scaled(const Scalar& s) const;
  Poly monic() const;
  Poly derivative() const;
  Scalar operator()(const Scalar& x) const;
  bool operator==(const Poly& o) const { return field_ == o.field_ && c_ == o.c_; }

  std::string to_string() const;

 private:
  void trim();
  Field field_;
  std::vector<Scalar> c_;
};

Poly gcd(Poly a, Poly b);
Poly powmod(const Poly& base, const mpz_class& e, const Poly& mod);

struct PolyFactor {
  Poly factor;  // monic
  int multiplicity = 1;
  bool irreducible = false;
};

// Over F_p: complete factorization into irreducibles (squarefree, distinct
// degree, equal degree). Over Q: pairwise coprime factors from squarefree
// decomposition plus rational roots; only linear factors are marked irreducible.
std::vector<PolyFactor> factor(const Poly& f, std::uint64_t seed = 0);

Poly minimal_polynomial(const Matrix& a);
Matrix evaluate(const Poly& p, const Matrix& a);

}  // namespace brauerc
