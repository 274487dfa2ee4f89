#include "brauerc/poly.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "brauerc/linalg.hpp"

namespace brauerc {

Poly::Poly(Field f, std::vector<Scalar> coeffs) : field_(f), c_(std::move(coeffs)) {
  for (const auto& s : c_)
    if (s.characteristic() != f.characteristic()) throw MathError("polynomial coefficient from another field");
  trim();
}

Poly Poly::from_ints(Field f, const std::vector<long long>& coeffs) {
  std::vector<Scalar> c;
  for (auto v : coeffs) c.push_back(f.from_int(v));
  return Poly(f, c);
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Scalar> r(std::max(c_.size(), o.c_.size()), field_.zero());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return Poly(field_, r);
}

Poly Poly::operator-(const Poly& o) const { return *this + o.scaled(-field_.one()); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly(field_);
  std::vector<Scalar> r(c_.size() + o.c_.size() - 1, field_.zero());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return Poly(field_, r);
}

std::pair<Poly, Poly> Poly::divmod(const Poly& o) const {
  if (o.is_zero()) throw MathError("polynomial division by zero");
  if (degree() < o.degree()) return {Poly(field_), *this};
  std::vector<Scalar> rem = c_;
  std::vector<Scalar> q(c_.size() - o.c_.size() + 1, field_.zero());
  Scalar inv = o.lead().inverse();
  for (int i = degree(); i >= o.degree(); --i) {
    Scalar f = rem[i] * inv;
    if (f.is_zero()) continue;
    q[i - o.degree()] = f;
    for (int j = 0; j <= o.degree(); ++j) rem[i - o.degree() + j] -= f * o.c_[j];
  }
  rem.resize(o.c_.size() - 1);
  return {Poly(field_, q), Poly(field_, rem)};
}

Poly Poly::scaled(const Scalar& s) const {
  std::vector<Scalar> r = c_;
  for (auto& x : r) x *= s;
  return Poly(field_, r);
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(lead().inverse());
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(field_);
  std::vector<Scalar> r;
  for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * field_.from_int(static_cast<long long>(i)));
  return Poly(field_, r);
}

Scalar Poly::operator()(const Scalar& x) const {
  Scalar acc = field_.zero();
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    bool unit = c_[i].is_one() && i > 0;
    if (!unit) os << c_[i].to_string();
    if (i > 0) os << (unit ? "" : "*") << "x" << (i > 1 ? "^" + std::to_string(i) : "");
  }
  return os.str();
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly powmod(const Poly& base, const mpz_class& e, const Poly& mod) {
  Poly acc = Poly::constant(base.field().one()) % mod;
  Poly b = base % mod;
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    acc = (acc * acc) % mod;
    if (mpz_tstbit(e.get_mpz_t(), i)) acc = (acc * b) % mod;
  }
  return acc;
}

namespace {

using Factors = std::vector<PolyFactor>;

// Square-free decomposition over F_p (handles vanishing derivatives).
void squarefree_fp(const Poly& f, int mult, Factors& out) {
  const Field fld = f.field();
  const std::uint32_t p = fld.characteristic();
  if (f.degree() <= 0) return;
  Poly c = gcd(f, f.derivative());
  Poly w = f / c;
  int i = 1;
  while (!w.is_one() && w.degree() > 0) {
    Poly y = gcd(w, c);
    Poly fac = w / y;
    if (fac.degree() > 0) out.push_back({fac.monic(), i * mult, false});
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0) {
    // c is a polynomial in x^p; its p-th root keeps coefficients (a^p = a).
    std::vector<Scalar> r;
    for (int k = 0; k <= c.degree(); k += static_cast<int>(p)) r.push_back(c.coeff(k));
    squarefree_fp(Poly(fld, r).monic(), mult * static_cast<int>(p), out);
  }
}

void equal_degree(const Poly& g, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (g.degree() == d) {
    out.push_back(g.monic());
    return;
  }
  const Field fld = g.field();
  const std::uint32_t p = fld.characteristic();
  mpz_class pd;
  mpz_ui_pow_ui(pd.get_mpz_t(), p, static_cast<unsigned long>(d));
  for (;;) {
    std::vector<Scalar> coeffs;
    for (int i = 0; i < g.degree(); ++i) coeffs.push_back(fld.from_int(static_cast<long long>(rng() % p)));
    Poly a(fld, coeffs);
    if (a.degree() <= 0) continue;
    Poly b(fld);
    if (p == 2) {
      Poly t = a % g;
      b = t;
      for (int i = 1; i < d; ++i) {
        t = (t * t) % g;
        b = b + t;
      }
    } else {
      b = powmod(a, (pd - 1) / 2, g) - Poly::constant(fld.one());
    }
    Poly u = gcd(g, b);
    if (u.degree() > 0 && u.degree() < g.degree()) {
      equal_degree(u, d, rng, out);
      equal_degree(g / u, d, rng, out);
      return;
    }
  }
}

void factor_fp(const Poly& f, std::uint64_t seed, Factors& out) {
  const Field fld = f.field();
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  Factors sqf;
  squarefree_fp(f.monic(), 1, sqf);
  const mpz_class p(fld.characteristic());
  for (const auto& part : sqf) {
    Poly g = part.factor;
    Poly xx = Poly::x(fld);
    Poly h = xx % g;
    int i = 1;
    while (g.degree() >= 2 * i) {
      h = powmod(h, p, g);
      Poly d = gcd(g, h - xx);
      if (d.degree() > 0) {
        std::vector<Poly> irr;
        equal_degree(d, i, rng, irr);
        for (auto& q : irr) out.push_back({q, part.multiplicity, true});
        g = g / d;
        h = h % g;
      }
      ++i;
    }
    if (g.degree() > 0) out.push_back({g.monic(), part.multiplicity, true});
  }
}

// Yun's square-free decomposition in characteristic 0.
Factors squarefree_q(const Poly& f) {
  Factors out;
  Poly fm = f.monic();
  Poly d = fm.derivative();
  Poly a = gcd(fm, d);
  Poly b = fm / a;
  Poly c = d / a;
  Poly dd = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    Poly ai = gcd(b, dd);
    b = b / ai;
    c = dd / ai;
    dd = c - b.derivative();
    if (ai.degree() > 0) out.push_back({ai.monic(), i, false});
    ++i;
  }
  return out;
}

// Rational reconstruction of r mod m with numerator and denominator bounded by sqrt(m/2).
bool rational_reconstruct(const mpz_class& r, const mpz_class& m, mpq_class& out) {
  mpz_class bound = sqrt(m / 2);
  mpz_class r0 = m, r1 = r, t0 = 0, t1 = 1;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1;
    mpz_class t2 = t0 - q * t1;
    r0 = r1, r1 = r2, t0 = t1, t1 = t2;
  }
  if (t1 == 0 || abs(t1) > bound) return false;
  out = mpq_class(r1, t1);
  out.canonicalize();
  return true;
}

// Rational roots of a square-free rational polynomial, found modulo a large
// prime and lifted by rational reconstruction; every candidate is checked exactly.
std::vector<mpq_class> rational_roots(const Poly& g, std::uint64_t seed) {
  std::vector<mpq_class> roots;
  if (g.degree() <= 0) return roots;
  mpz_class den = 1;
  for (const auto& c : g.coeffs()) den = lcm(den, c.rational().get_den());
  std::vector<mpz_class> ic;
  for (const auto& c : g.coeffs()) ic.push_back(mpz_class(c.rational() * den));
  for (std::uint32_t P : {2147483647u, 2147483629u, 2147483587u}) {
    if (ic.back() % P == 0) continue;
    Field fp = Field::prime(P);
    std::vector<Scalar> cs;
    for (const auto& z : ic) {
      mpz_class m = z % P;
      if (m < 0) m += P;
      cs.push_back(Scalar::from_residue(P, m.get_ui()));
    }
    Poly gp(fp, cs);
    Poly lin = gcd(gp, powmod(Poly::x(fp), mpz_class(P), gp) - Poly::x(fp));
    if (lin.degree() <= 0) return roots;
    std::vector<Poly> linear;
    std::mt19937_64 rng(seed + P);
    equal_degree(lin, 1, rng, linear);
    for (const auto& l : linear) {
      mpz_class rho = P - l.coeff(0).residue();
      if (rho == P) rho = 0;
      mpq_class q;
      if (!rational_reconstruct(rho, mpz_class(P), q)) continue;
      if (g(g.field().from_rational(q)).is_zero()) roots.push_back(q);
    }
    break;
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

void factor_q(const Poly& f, std::uint64_t seed, Factors& out) {
  const Field fld = f.field();
  for (auto& part : squarefree_q(f)) {
    Poly rest = part.factor;
    for (const auto& q : rational_roots(rest, seed)) {
      Poly lin(fld, {fld.from_rational(-q), fld.one()});
      rest = rest / lin;
      out.push_back({lin, part.multiplicity, true});
    }
    if (rest.degree() > 0) out.push_back({rest.monic(), part.multiplicity, rest.degree() == 1});
  }
}

}  // namespace

std::vector<PolyFactor> factor(const Poly& f, std::uint64_t seed) {
  if (f.is_zero()) throw MathError("cannot factor the zero polynomial");
  Factors out;
  if (f.degree() == 0) return out;
  if (f.field().is_rational())
    factor_q(f, seed, out);
  else
    factor_fp(f, seed, out);
  std::stable_sort(out.begin(), out.end(), [](const PolyFactor& a, const PolyFactor& b) {
    if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
    return a.multiplicity < b.multiplicity;
  });
  return out;
}

namespace {

// Minimal polynomial of the row vector w under right multiplication by a.
Poly vector_minimal_polynomial(const Matrix& w, const Matrix& a) {
  const Field f = a.field();
  SpanBuilder span(f, a.rows());
  Matrix v = w;
  for (;;) {
    auto dep = span.insert(v);
    if (dep) {
      std::vector<Scalar> c;
      for (std::size_t i = 0; i < dep->cols(); ++i) c.push_back(-dep->at(0, i));
      c.push_back(f.one());
      return Poly(f, c);
    }
    v = v * a;
  }
}

Matrix apply_poly(const Poly& p, const Matrix& w, const Matrix& a) {
  Matrix acc(a.field(), 1, a.cols());
  for (int i = p.degree(); i >= 0; --i) acc = acc * a + w.scaled(p.coeff(i));
  return acc;
}

}  // namespace

// lcm over the standard basis of the vector minimal polynomials, built as
// m <- m * mu(e_i m(a)).
Poly minimal_polynomial(const Matrix& a) {
  if (a.rows() != a.cols()) throw MathError("minimal polynomial of a non-square matrix");
  const Field f = a.field();
  const std::size_t n = a.rows();
  Poly m = Poly::constant(f.one());
  for (std::size_t i = 0; i < n && m.degree() < static_cast<int>(n); ++i) {
    Matrix e(f, 1, n);
    e.set(0, i, f.one());
    Matrix w = apply_poly(m, e, a);
    if (w.is_zero()) continue;
    m = m * vector_minimal_polynomial(w, a);
  }
  return m;
}

Matrix evaluate(const Poly& p, const Matrix& a) {
  const Field f = a.field();
  Matrix acc(f, a.rows(), a.cols());
  Matrix id = Matrix::identity(f, a.rows());
  for (int i = p.degree(); i >= 0; --i) acc = acc * a + id.scaled(p.coeff(i));
  return acc;
}

}  // namespace brauerc
