#include "brauerc/hyperoct.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace brauerc {

SignedPerm::SignedPerm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size() + 1, false);
  for (int v : img_) {
    int a = v < 0 ? -v : v;
    if (a < 1 || a > rank() || seen[a]) throw MathError("not a signed permutation: " + to_string());
    seen[a] = true;
  }
}

SignedPerm SignedPerm::identity(int r) {
  std::vector<int> v(r);
  std::iota(v.begin(), v.end(), 1);
  return SignedPerm(v);
}

SignedPerm SignedPerm::generator(int r, int k) {
  if (k < 0 || k >= r) throw MathError("generator index out of range");
  if (k == 0) return flip(r, 1);
  auto v = identity(r).img_;
  std::swap(v[k - 1], v[k]);
  return SignedPerm(v);
}

SignedPerm SignedPerm::flip(int r, int i) {
  auto v = identity(r).img_;
  v[i - 1] = -i;
  return SignedPerm(v);
}

SignedPerm SignedPerm::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw ParseError("signed permutation must look like [-2,1]");
  std::vector<int> v;
  std::string body = s.substr(1, s.size() - 2);
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ','))
    try {
      std::size_t used = 0;
      v.push_back(std::stoi(item, &used));
      if (used != item.size()) throw ParseError("bad entry");
    } catch (const std::exception&) {
      throw ParseError("bad signed permutation entry \"" + item + "\"");
    }
  return SignedPerm(v);
}

SignedPerm SignedPerm::inverse() const {
  std::vector<int> v(img_.size());
  for (int i = 1; i <= rank(); ++i) {
    int t = img_[i - 1];
    v[(t < 0 ? -t : t) - 1] = t < 0 ? -i : i;
  }
  return SignedPerm(v);
}

int SignedPerm::sign() const {
  int s = 1;
  std::vector<int> a(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (img_[i] < 0) s = -s;
    a[i] = (img_[i] < 0 ? -img_[i] : img_[i]) - 1;
  }
  std::vector<bool> seen(a.size(), false);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = a[j]) seen[j] = true, ++len;
    if (len % 2 == 0) s = -s;
  }
  return s;
}

bool SignedPerm::is_identity() const {
  for (int i = 0; i < rank(); ++i)
    if (img_[i] != i + 1) return false;
  return true;
}

SignedPerm SignedPerm::embed(int n, int offset) const {
  if (offset + rank() > n) throw MathError("embedding does not fit");
  auto v = identity(n).img_;
  for (int i = 1; i <= rank(); ++i) {
    int t = img_[i - 1];
    v[offset + i - 1] = t < 0 ? t - offset : t + offset;
  }
  return SignedPerm(v);
}

std::string SignedPerm::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < img_.size(); ++i) s += (i ? "," : "") + std::to_string(img_[i]);
  return s + "]";
}

SignedPerm compose(const SignedPerm& a, const SignedPerm& b) {
  if (a.rank() != b.rank()) throw MathError("rank mismatch in compose");
  std::vector<int> v(a.rank());
  for (int i = 1; i <= a.rank(); ++i) v[i - 1] = b(a(i));
  return SignedPerm(v);
}

Scalar sgn_of(const SignedPerm& a, const Field& f) { return f.from_int(a.sign()); }

std::vector<SignedPerm> enumerate_group(int r) {
  std::vector<SignedPerm> out;
  std::vector<int> p(r);
  std::iota(p.begin(), p.end(), 1);
  do {
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
      std::vector<int> v = p;
      for (int i = 0; i < r; ++i)
        if (mask >> i & 1) v[i] = -v[i];
      out.emplace_back(v);
    }
  } while (std::next_permutation(p.begin(), p.end()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SignedPerm> generators(int r) {
  std::vector<SignedPerm> g;
  for (int k = 0; k < r; ++k) g.push_back(SignedPerm::generator(r, k));
  return g;
}

}  // namespace brauerc
