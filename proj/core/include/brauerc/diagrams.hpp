#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "brauerc/field.hpp"
#include "brauerc/hyperoct.hpp"

namespace brauerc {

struct DeltaZeroError : MathError {
  DeltaZeroError() : MathError("delta = 0: layer idempotents e_l (l >= 1) do not exist") {}
};

struct Vertex {
  bool bottom = false;
  int label = 0;  // in -r..-1, 1..r
  auto operator<=>(const Vertex&) const = default;
  std::string to_string() const { return (bottom ? "b" : "t") + std::to_string(label); }
};

// Symmetric perfect matching on {top, bottom} x {-r..-1, 1..r}. Vertex v is
// encoded as row*2r + position, position running left to right over -r..-1, 1..r.
class CDiagram {
 public:
  CDiagram() = default;
  CDiagram(int r, std::vector<std::uint8_t> partner);

  static CDiagram identity(int r);
  static CDiagram from_edges(int r, const std::vector<std::pair<Vertex, Vertex>>& edges);
  // "[t-1:t1, b-1:b1]"; rank inferred from the largest label unless r >= 0.
  static CDiagram parse(std::string_view text, int r = -1);

  int rank() const { return r_; }
  int partner(int v) const { return p_[v]; }
  const std::vector<std::uint8_t>& partners() const { return p_; }
  int top_arcs() const;
  std::vector<std::pair<Vertex, Vertex>> edges() const;  // canonical order
  std::string to_string() const;

  int encode(Vertex v) const;
  Vertex decode(int v) const;
  int mirror(int v) const;

  auto operator<=>(const CDiagram&) const = default;

 private:
  int r_ = 0;
  std::vector<std::uint8_t> p_;
};

struct DiagramProduct {
  int loops = 0;
  CDiagram result;
};

DiagramProduct multiply(const CDiagram& a, const CDiagram& b);
CDiagram involution(const CDiagram& a);
CDiagram as_diagram(const SignedPerm& s);

// Symmetric partial matching on one row of 2r vertices.
class Dangle {
 public:
  static constexpr std::uint8_t kFree = 0xff;
  Dangle() = default;
  Dangle(int r, std::vector<std::uint8_t> partner);

  int rank() const { return r_; }
  int edge_count() const;
  int partner(int pos) const { return p_[pos]; }
  bool is_free(int pos) const { return p_[pos] == kFree; }
  std::vector<std::pair<int, int>> edges() const;  // label pairs, sorted
  std::string to_string() const;

  auto operator<=>(const Dangle&) const = default;

 private:
  int r_ = 0;
  std::vector<std::uint8_t> p_;
};

std::vector<CDiagram> enumerate_basis(int r);
std::vector<Dangle> enumerate_dangles(int r, int l);
std::vector<CDiagram> ideal_basis(int r, int l);

// The nested axis arcs {-i, i}, i = 1..l, on both rows; verticals elsewhere.
CDiagram e_hat(int r, int l);
// Algebra generators: s_0..s_{r-1} then the arc generators e_0..e_{r-1}.
CDiagram arc_generator(int r, int k);
std::vector<CDiagram> algebra_generators(int r);

struct LayerDecomposition {
  Dangle top, bottom;
  SignedPerm through;  // in W_{r-l}
  int l = 0;
};

LayerDecomposition layer_decompose(const CDiagram& a);
CDiagram recompose(const Dangle& top, const Dangle& bottom, const SignedPerm& through);

// Sparse combination of diagrams of one rank over a FieldSpec.
class AlgebraElement {
 public:
  AlgebraElement(FieldSpec spec, int r) : spec_(std::move(spec)), r_(r) {}
  static AlgebraElement basis(const FieldSpec& spec, const CDiagram& d);

  const FieldSpec& spec() const { return spec_; }
  int rank() const { return r_; }
  const std::map<CDiagram, Scalar>& terms() const { return terms_; }
  void add(const CDiagram& d, const Scalar& c);
  Scalar coefficient(const CDiagram& d) const;

  AlgebraElement operator*(const AlgebraElement& o) const;
  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement scaled(const Scalar& s) const;
  bool operator==(const AlgebraElement& o) const { return r_ == o.r_ && terms_ == o.terms_; }
  std::string to_string() const;

 private:
  FieldSpec spec_;
  int r_;
  std::map<CDiagram, Scalar> terms_;
};

AlgebraElement idempotent_e_l(int l, int r, const FieldSpec& spec);

}  // namespace brauerc
