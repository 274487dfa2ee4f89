#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "brauerc/field.hpp"

namespace brauerc {

// Element of W_r in one-line signed image form: images()[i-1] = sigma(i).
// Products read left to right: (a * b)(x) = b(a(x)), i.e. "a, then b".
class SignedPerm {
 public:
  SignedPerm() = default;
  explicit SignedPerm(std::vector<int> images);

  static SignedPerm identity(int r);
  // s_0 flips the sign of 1; s_k (k >= 1) swaps k and k+1.
  static SignedPerm generator(int r, int k);
  static SignedPerm flip(int r, int i);
  static SignedPerm parse(std::string_view text);

  int rank() const { return static_cast<int>(img_.size()); }
  const std::vector<int>& images() const { return img_; }
  int operator()(int x) const { return x > 0 ? img_[x - 1] : -img_[-x - 1]; }

  SignedPerm inverse() const;
  int sign() const;
  bool is_identity() const;
  // Image inside W_n acting on letters offset+1 .. offset+rank.
  SignedPerm embed(int n, int offset) const;

  std::string to_string() const;
  auto operator<=>(const SignedPerm&) const = default;

 private:
  std::vector<int> img_;
};

SignedPerm compose(const SignedPerm& a, const SignedPerm& b);
inline SignedPerm operator*(const SignedPerm& a, const SignedPerm& b) { return compose(a, b); }
Scalar sgn_of(const SignedPerm& a, const Field& f);

// All 2^r r! elements, sorted.
std::vector<SignedPerm> enumerate_group(int r);
std::vector<SignedPerm> generators(int r);

}  // namespace brauerc
