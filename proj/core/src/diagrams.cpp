#include "brauerc/diagrams.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace brauerc {

namespace {
int position(int r, int label) { return label < 0 ? label + r : label + r - 1; }
int label_at(int r, int pos) { return pos < r ? pos - r : pos - r + 1; }
}  // namespace

int CDiagram::encode(Vertex v) const { return (v.bottom ? 2 * r_ : 0) + position(r_, v.label); }

Vertex CDiagram::decode(int v) const {
  bool bottom = v >= 2 * r_;
  return Vertex{bottom, label_at(r_, bottom ? v - 2 * r_ : v)};
}

int CDiagram::mirror(int v) const {
  int row = v >= 2 * r_ ? 2 * r_ : 0;
  return row + (2 * r_ - 1 - (v - row));
}

CDiagram::CDiagram(int r, std::vector<std::uint8_t> partner) : r_(r), p_(std::move(partner)) {
  if (r < 0 || r > 60 || p_.size() != static_cast<std::size_t>(4 * r)) throw MathError("bad diagram size");
  for (int v = 0; v < 4 * r; ++v) {
    int w = p_[v];
    if (w >= 4 * r || w == v || p_[w] != v) throw MathError("diagram is not a perfect matching");
    if (p_[mirror(v)] != mirror(w)) throw MathError("diagram is not mirror symmetric");
  }
}

CDiagram CDiagram::identity(int r) {
  std::vector<std::uint8_t> p(4 * r);
  for (int i = 0; i < 2 * r; ++i) {
    p[i] = static_cast<std::uint8_t>(2 * r + i);
    p[2 * r + i] = static_cast<std::uint8_t>(i);
  }
  return CDiagram(r, p);
}

CDiagram CDiagram::from_edges(int r, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  std::vector<int> p(4 * r, -1);
  CDiagram shell;
  shell.r_ = r;
  for (const auto& [a, b] : edges) {
    for (const Vertex& v : {a, b})
      if (v.label == 0 || v.label < -r || v.label > r)
        throw ParseError("vertex " + v.to_string() + " outside rank " + std::to_string(r));
    int x = shell.encode(a), y = shell.encode(b);
    if (x == y || p[x] != -1 || p[y] != -1) throw ParseError("vertex used twice in diagram");
    p[x] = y;
    p[y] = x;
  }
  std::vector<std::uint8_t> q(4 * r);
  for (int v = 0; v < 4 * r; ++v) {
    if (p[v] < 0) throw ParseError("diagram leaves vertex " + shell.decode(v).to_string() + " unmatched");
    q[v] = static_cast<std::uint8_t>(p[v]);
  }
  for (int v = 0; v < 4 * r; ++v)
    if (q[shell.mirror(v)] != shell.mirror(q[v]))
      throw ParseError("diagram is not mirror symmetric at " + shell.decode(v).to_string());
  return CDiagram(r, q);
}

CDiagram CDiagram::parse(std::string_view text, int r) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s += c;
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw ParseError("diagram must be written [t-1:t1, ...]", 1);
  s = s.substr(1, s.size() - 2);
  std::vector<std::pair<Vertex, Vertex>> edges;
  auto vertex = [&](const std::string& t) {
    if (t.size() < 2 || (t[0] != 't' && t[0] != 'b')) throw ParseError("bad vertex \"" + t + "\"", column_of(text, t));
    std::size_t used = 0;
    int label = 0;
    try {
      label = std::stoi(t.substr(1), &used);
    } catch (const std::exception&) {
      throw ParseError("bad vertex \"" + t + "\"", column_of(text, t));
    }
    if (used != t.size() - 1 || label == 0) throw ParseError("bad vertex \"" + t + "\"", column_of(text, t));
    return Vertex{t[0] == 'b', label};
  };
  int maxl = 0;
  if (!s.empty()) {
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto colon = item.find(':');
      if (colon == std::string::npos) throw ParseError("edge \"" + item + "\" lacks ':'", column_of(text, item));
      Vertex a = vertex(item.substr(0, colon)), b = vertex(item.substr(colon + 1));
      maxl = std::max({maxl, std::abs(a.label), std::abs(b.label)});
      edges.emplace_back(a, b);
    }
  }
  if (r < 0) r = maxl;
  return from_edges(r, edges);
}

int CDiagram::top_arcs() const {
  int n = 0;
  for (int v = 0; v < 2 * r_; ++v)
    if (p_[v] < 2 * r_) ++n;
  return n / 2;
}

std::vector<std::pair<Vertex, Vertex>> CDiagram::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (int v = 0; v < 4 * r_; ++v)
    if (v < p_[v]) out.emplace_back(decode(v), decode(p_[v]));
  // endpoints sorted by (row, label), edges lexicographically
  for (auto& e : out)
    if (e.second < e.first) std::swap(e.first, e.second);
  std::sort(out.begin(), out.end());
  return out;
}

std::string CDiagram::to_string() const {
  std::string s = "[";
  bool first = true;
  for (const auto& [a, b] : edges()) {
    s += (first ? "" : ",") + a.to_string() + ":" + b.to_string();
    first = false;
  }
  return s + "]";
}

DiagramProduct multiply(const CDiagram& a, const CDiagram& b) {
  if (a.rank() != b.rank()) throw MathError("rank mismatch in diagram product");
  const int r = a.rank(), n = 2 * r;
  std::vector<std::uint8_t> res(4 * r, 0);
  std::vector<bool> done(4 * r, false), mid(n, false);
  for (int start = 0; start < 4 * r; ++start) {
    if (done[start]) continue;
    // start < n: top of a; otherwise bottom of b
    bool in_a = start < n;
    int cur = start;
    int end = -1;
    for (;;) {
      int w = in_a ? a.partner(cur) : b.partner(cur);
      if (in_a) {
        if (w < n) {
          end = w;
          break;
        }
        mid[w - n] = true;
        in_a = false;
        cur = w - n;
      } else {
        if (w >= n) {
          end = w;
          break;
        }
        mid[w] = true;
        in_a = true;
        cur = w + n;
      }
    }
    res[start] = static_cast<std::uint8_t>(end);
    res[end] = static_cast<std::uint8_t>(start);
    done[start] = done[end] = true;
  }
  int loops = 0;
  for (int k = 0; k < n; ++k) {
    if (mid[k]) continue;
    ++loops;
    int cur = k;
    do {
      mid[cur] = true;
      int w = a.partner(cur + n) - n;  // stays in the middle row
      mid[w] = true;
      cur = b.partner(w);
    } while (!mid[cur]);
  }
  return {loops, CDiagram(r, res)};
}

CDiagram involution(const CDiagram& a) {
  const int r = a.rank(), n = 2 * r;
  std::vector<std::uint8_t> p(4 * r);
  auto flip = [n](int v) { return v < n ? v + n : v - n; };
  for (int v = 0; v < 4 * r; ++v) p[flip(v)] = static_cast<std::uint8_t>(flip(a.partner(v)));
  return CDiagram(r, p);
}

CDiagram as_diagram(const SignedPerm& s) {
  const int r = s.rank();
  std::vector<std::uint8_t> p(4 * r);
  for (int pos = 0; pos < 2 * r; ++pos) {
    int x = label_at(r, pos);
    int y = position(r, s(x));
    p[pos] = static_cast<std::uint8_t>(2 * r + y);
    p[2 * r + y] = static_cast<std::uint8_t>(pos);
  }
  return CDiagram(r, p);
}

Dangle::Dangle(int r, std::vector<std::uint8_t> partner) : r_(r), p_(std::move(partner)) {
  if (p_.size() != static_cast<std::size_t>(2 * r)) throw MathError("bad dangle size");
  for (int v = 0; v < 2 * r; ++v) {
    int m = 2 * r - 1 - v;
    if (p_[v] == kFree) {
      if (p_[m] != kFree) throw MathError("dangle is not mirror symmetric");
      continue;
    }
    int w = p_[v];
    if (w >= 2 * r || w == v || p_[w] != v) throw MathError("dangle is not a partial matching");
    if (p_[m] != 2 * r - 1 - w) throw MathError("dangle is not mirror symmetric");
  }
}

int Dangle::edge_count() const {
  int n = 0;
  for (auto x : p_)
    if (x != kFree) ++n;
  return n / 2;
}

std::vector<std::pair<int, int>> Dangle::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < 2 * r_; ++v)
    if (p_[v] != kFree && v < p_[v]) out.emplace_back(label_at(r_, v), label_at(r_, p_[v]));
  return out;
}

std::string Dangle::to_string() const {
  std::string s = "{";
  bool first = true;
  for (auto [a, b] : edges()) {
    s += (first ? "" : ",") + std::to_string(a) + ":" + std::to_string(b);
    first = false;
  }
  return s + "}";
}

std::vector<CDiagram> enumerate_basis(int r) {
  std::vector<CDiagram> out;
  const int nv = 4 * r;
  CDiagram shell = CDiagram::identity(r);
  std::vector<int> p(nv, -1);
  std::function<void()> rec = [&]() {
    int v = 0;
    while (v < nv && p[v] != -1) ++v;
    if (v == nv) {
      std::vector<std::uint8_t> q(p.begin(), p.end());
      out.emplace_back(r, q);
      return;
    }
    int mv = shell.mirror(v);
    for (int w = v + 1; w < nv; ++w) {
      if (p[w] != -1) continue;
      if (w == mv) {
        p[v] = w, p[w] = v;
        rec();
        p[v] = p[w] = -1;
        continue;
      }
      int mw = shell.mirror(w);
      if (p[mv] != -1 || p[mw] != -1 || mw == v) continue;
      p[v] = w, p[w] = v, p[mv] = mw, p[mw] = mv;
      rec();
      p[v] = p[w] = p[mv] = p[mw] = -1;
    }
  };
  rec();
  std::sort(out.begin(), out.end(), [](const CDiagram& a, const CDiagram& b) {
    if (a.top_arcs() != b.top_arcs()) return a.top_arcs() < b.top_arcs();
    return a < b;
  });
  return out;
}

std::vector<Dangle> enumerate_dangles(int r, int l) {
  if (l < 0 || l > r) throw MathError("dangle edge count out of range");
  std::vector<Dangle> out;
  const int n = 2 * r;
  std::vector<int> p(n, -2);  // -2 undecided, -1 free
  std::function<void(int)> rec = [&](int edges) {
    int v = 0;
    while (v < n && p[v] != -2) ++v;
    if (v == n) {
      if (edges != l) return;
      std::vector<std::uint8_t> q(n);
      for (int i = 0; i < n; ++i) q[i] = p[i] < 0 ? Dangle::kFree : static_cast<std::uint8_t>(p[i]);
      out.emplace_back(r, q);
      return;
    }
    int mv = n - 1 - v;
    p[v] = p[mv] = -1;
    rec(edges);
    p[v] = p[mv] = -2;
    if (edges >= l) return;
    for (int w = v + 1; w < n; ++w) {
      if (p[w] != -2) continue;
      if (w == mv) {
        p[v] = w, p[w] = v;
        rec(edges + 1);
        p[v] = p[w] = -2;
        continue;
      }
      int mw = n - 1 - w;
      if (edges + 2 > l || p[mw] != -2 || mw == v) continue;
      p[v] = w, p[w] = v, p[mv] = mw, p[mw] = mv;
      rec(edges + 2);
      p[v] = p[w] = p[mv] = p[mw] = -2;
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<CDiagram> ideal_basis(int r, int l) {
  std::vector<CDiagram> out;
  for (auto& d : enumerate_basis(r))
    if (d.top_arcs() >= l) out.push_back(d);
  return out;
}

CDiagram e_hat(int r, int l) {
  if (l < 0 || l > r) throw MathError("layer out of range");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 1; i <= r; ++i) {
    if (i <= l) {
      edges.push_back({{false, -i}, {false, i}});
      edges.push_back({{true, -i}, {true, i}});
    } else {
      edges.push_back({{false, -i}, {true, -i}});
      edges.push_back({{false, i}, {true, i}});
    }
  }
  return CDiagram::from_edges(r, edges);
}

CDiagram arc_generator(int r, int k) {
  if (k < 0 || k >= r) throw MathError("arc generator index out of range");
  if (k == 0) {
    std::vector<std::pair<Vertex, Vertex>> edges{{{false, -1}, {false, 1}}, {{true, -1}, {true, 1}}};
    for (int i = 2; i <= r; ++i) {
      edges.push_back({{false, -i}, {true, -i}});
      edges.push_back({{false, i}, {true, i}});
    }
    return CDiagram::from_edges(r, edges);
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (bool row : {false, true}) {
    edges.push_back({{row, k}, {row, k + 1}});
    edges.push_back({{row, -k}, {row, -k - 1}});
  }
  for (int i = 1; i <= r; ++i) {
    if (i == k || i == k + 1) continue;
    edges.push_back({{false, -i}, {true, -i}});
    edges.push_back({{false, i}, {true, i}});
  }
  return CDiagram::from_edges(r, edges);
}

std::vector<CDiagram> algebra_generators(int r) {
  std::vector<CDiagram> g;
  for (int k = 0; k < r; ++k) g.push_back(as_diagram(SignedPerm::generator(r, k)));
  for (int k = 0; k < r; ++k) g.push_back(arc_generator(r, k));
  return g;
}

namespace {
// Order-preserving relabelling of the free positions of one row onto W_{r-l} letters.
std::vector<int> free_relabel(int r, const std::vector<bool>& is_free) {
  std::vector<int> lab(2 * r, 0);
  int next = 1;
  for (int x = 1; x <= r; ++x)
    if (is_free[position(r, x)]) {
      lab[position(r, x)] = next;
      lab[position(r, -x)] = -next;
      ++next;
    }
  return lab;
}
}  // namespace

LayerDecomposition layer_decompose(const CDiagram& a) {
  const int r = a.rank(), n = 2 * r;
  std::vector<std::uint8_t> top(n, Dangle::kFree), bot(n, Dangle::kFree);
  std::vector<bool> tfree(n, false), bfree(n, false);
  for (int v = 0; v < n; ++v) {
    int w = a.partner(v);
    if (w < n)
      top[v] = static_cast<std::uint8_t>(w);
    else
      tfree[v] = true;
    int wb = a.partner(n + v);
    if (wb >= n)
      bot[v] = static_cast<std::uint8_t>(wb - n);
    else
      bfree[v] = true;
  }
  auto tl = free_relabel(r, tfree), bl = free_relabel(r, bfree);
  const int l = a.top_arcs();
  std::vector<int> img(r - l);
  for (int x = 1; x <= r; ++x) {
    int v = position(r, x);
    if (!tfree[v]) continue;
    img[tl[v] - 1] = bl[a.partner(v) - n];
  }
  return {Dangle(r, top), Dangle(r, bot), SignedPerm(img), l};
}

CDiagram recompose(const Dangle& top, const Dangle& bottom, const SignedPerm& through) {
  const int r = top.rank(), n = 2 * r;
  if (bottom.rank() != r || top.edge_count() != bottom.edge_count() || through.rank() != r - top.edge_count())
    throw MathError("inconsistent layer data");
  std::vector<bool> tfree(n), bfree(n);
  for (int v = 0; v < n; ++v) tfree[v] = top.is_free(v), bfree[v] = bottom.is_free(v);
  auto tl = free_relabel(r, tfree), bl = free_relabel(r, bfree);
  std::vector<int> bpos(2 * (r - top.edge_count()) + 1);  // relabelled letter -> bottom position
  auto slot = [&](int x) { return x > 0 ? x - 1 : (r - top.edge_count()) - x - 1; };
  for (int v = 0; v < n; ++v)
    if (bfree[v]) bpos[slot(bl[v])] = v;
  std::vector<std::uint8_t> p(4 * r);
  for (int v = 0; v < n; ++v) {
    if (!tfree[v]) {
      p[v] = static_cast<std::uint8_t>(top.partner(v));
    } else {
      int w = n + bpos[slot(through(tl[v]))];
      p[v] = static_cast<std::uint8_t>(w);
      p[w] = static_cast<std::uint8_t>(v);
    }
    if (!bfree[v]) p[n + v] = static_cast<std::uint8_t>(n + bottom.partner(v));
  }
  return CDiagram(r, p);
}

AlgebraElement AlgebraElement::basis(const FieldSpec& spec, const CDiagram& d) {
  AlgebraElement e(spec, d.rank());
  e.add(d, spec.field.one());
  return e;
}

void AlgebraElement::add(const CDiagram& d, const Scalar& c) {
  if (d.rank() != r_) throw MathError("rank mismatch in algebra element");
  if (c.is_zero()) return;
  auto it = terms_.find(d);
  if (it == terms_.end()) {
    terms_.emplace(d, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Scalar AlgebraElement::coefficient(const CDiagram& d) const {
  auto it = terms_.find(d);
  return it == terms_.end() ? spec_.field.zero() : it->second;
}

AlgebraElement AlgebraElement::operator*(const AlgebraElement& o) const {
  if (r_ != o.r_) throw MathError("rank mismatch in algebra product");
  AlgebraElement out(spec_, r_);
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) {
      auto pr = multiply(a, b);
      out.add(pr.result, ca * cb * spec_.delta.pow(pr.loops));
    }
  return out;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  AlgebraElement out = *this;
  for (const auto& [d, c] : o.terms_) out.add(d, c);
  return out;
}

AlgebraElement AlgebraElement::scaled(const Scalar& s) const {
  AlgebraElement out(spec_, r_);
  for (const auto& [d, c] : terms_) out.add(d, c * s);
  return out;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [d, c] : terms_) {
    s += (first ? "" : " + ") + c.to_string() + " \xC2\xB7 " + d.to_string();
    first = false;
  }
  return s;
}

AlgebraElement idempotent_e_l(int l, int r, const FieldSpec& spec) {
  if (l >= 1 && spec.delta.is_zero()) throw DeltaZeroError();
  AlgebraElement e(spec, r);
  e.add(e_hat(r, l), spec.delta.pow(-l));
  return e;
}

}  // namespace brauerc
