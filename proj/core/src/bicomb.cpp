#include "brauerc/bicomb.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace brauerc {

int size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

Partition conjugate(const Partition& p) {
  Partition c;
  if (p.empty()) return c;
  for (int j = 1; j <= p[0]; ++j) {
    int n = 0;
    for (int x : p)
      if (x >= j) ++n;
    c.push_back(n);
  }
  return c;
}

std::vector<Partition> enumerate_partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int rem, int maxp) {
    if (rem == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(rem, maxp); k >= 1; --k) {
      cur.push_back(k);
      rec(rem - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

int BiPartition::size() const { return brauerc::size(first) + brauerc::size(second); }

namespace {
std::string part_text(const Partition& p) {
  if (p.empty()) return "-";
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s;
}

Partition parse_part(const std::string& s, std::string_view whole) {
  Partition p;
  if (s.empty() || s == "-" || s == "\xE2\x88\x85") return p;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw ParseError("bad partition part \"" + item + "\"", column_of(whole, item));
    }
    if (used != item.size() || v <= 0) throw ParseError("bad partition part \"" + item + "\"", column_of(whole, item));
    p.push_back(v);
  }
  if (!std::is_sorted(p.rbegin(), p.rend())) throw ParseError("partition parts must be weakly decreasing: " + s, column_of(whole, s));
  return p;
}
}  // namespace

std::string BiPartition::to_string() const { return part_text(first) + "|" + part_text(second); }

BiPartition BiPartition::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  auto bar = s.find('|');
  if (bar == std::string::npos || s.find('|', bar + 1) != std::string::npos)
    throw ParseError("bi-partition must look like \"2,1|1\", got \"" + std::string(text) + "\"",
                     bar == std::string::npos ? 1 : column_of(text.substr(column_of(text, "|")), "|") + column_of(text, "|"));
  return BiPartition{parse_part(s.substr(0, bar), text), parse_part(s.substr(bar + 1), text)};
}

std::vector<BiPartition> enumerate_bipartitions(int r) {
  std::vector<BiPartition> out;
  for (int a = r; a >= 0; --a)
    for (const auto& p : enumerate_partitions(a))
      for (const auto& q : enumerate_partitions(r - a)) out.push_back({p, q});
  return out;
}

bool dominates(const BiPartition& a, const BiPartition& b) {
  if (a.size() != b.size()) throw MathError("dominance between bi-partitions of different sizes");
  auto part = [](const Partition& p, std::size_t j) {
    int s = 0;
    for (std::size_t i = 0; i < j && i < p.size(); ++i) s += p[i];
    return s;
  };
  std::size_t n1 = std::max(a.first.size(), b.first.size());
  for (std::size_t j = 1; j <= n1; ++j)
    if (part(a.first, j) < part(b.first, j)) return false;
  int a1 = size(a.first), b1 = size(b.first);
  std::size_t n2 = std::max(a.second.size(), b.second.size());
  for (std::size_t j = 0; j <= n2; ++j)
    if (a1 + part(a.second, j) < b1 + part(b.second, j)) return false;
  return true;
}

BiPartition conjugate(const BiPartition& a) { return {conjugate(a.second), conjugate(a.first)}; }

namespace {
bool part_regular(const Partition& p, std::uint32_t q) {
  for (std::size_t i = 0; i < p.size();) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    if (j - i >= q) return false;
    i = j;
  }
  return true;
}
}  // namespace

bool is_p_regular(const BiPartition& a, std::uint32_t p) {
  if (p == 0) return true;
  if (p == 2) return a.first.empty() && part_regular(a.second, 2);
  return part_regular(a.first, p) && part_regular(a.second, p);
}

std::string to_string(SignPlacement s) { return s == SignPlacement::first ? "first" : "second"; }

SignPlacement parse_placement(std::string_view s) {
  if (s == "first") return SignPlacement::first;
  if (s == "second") return SignPlacement::second;
  throw ParseError("placement must be first or second");
}

BiTableau BiTableau::initial(const BiPartition& shape) {
  BiTableau t{shape, {}};
  int next = 1;
  const Partition* comps[2] = {&shape.first, &shape.second};
  for (int c = 0; c < 2; ++c)
    for (int len : *comps[c]) {
      std::vector<int> row;
      for (int k = 0; k < len; ++k) row.push_back(next++);
      t.rows[c].push_back(row);
    }
  return t;
}

BiTableau BiTableau::act(const SignedPerm& s) const {
  BiTableau t = *this;
  for (auto& comp : t.rows)
    for (auto& row : comp)
      for (auto& x : row) x = s(x);
  return t;
}

BiTableau BiTableau::conjugate() const {
  BiTableau t{brauerc::conjugate(shape), {}};
  // component c of the conjugate is the transpose of component 1-c
  for (int c = 0; c < 2; ++c) {
    const auto& src = rows[1 - c];
    std::size_t ncols = src.empty() ? 0 : src[0].size();
    for (std::size_t j = 0; j < ncols; ++j) {
      std::vector<int> col;
      for (const auto& row : src)
        if (j < row.size()) col.push_back(row[j]);
      t.rows[c].push_back(col);
    }
  }
  return t;
}

namespace {
std::string rows_text(const std::array<std::vector<std::vector<int>>, 2>& rows) {
  std::string s;
  for (int c = 0; c < 2; ++c) {
    s += c ? " | " : "";
    if (rows[c].empty()) s += "-";
    for (std::size_t i = 0; i < rows[c].size(); ++i) {
      s += i ? " / " : "";
      for (std::size_t j = 0; j < rows[c][i].size(); ++j) s += (j ? " " : "") + std::to_string(rows[c][i][j]);
    }
  }
  return s;
}
}  // namespace

std::string BiTableau::to_string() const { return rows_text(rows); }
std::string BiTabloid::to_string() const { return rows_text(rows); }

BiTabloid BiTabloid::of(const BiTableau& t, SignPlacement placement) {
  BiTabloid out{t.rows};
  const int s = sign_component(placement);
  for (int c = 0; c < 2; ++c)
    for (auto& row : out.rows[c]) {
      if (c == s)
        for (auto& x : row) x = x < 0 ? -x : x;
      std::sort(row.begin(), row.end(), [](int a, int b) { return std::abs(a) < std::abs(b); });
    }
  return out;
}

namespace {
// sigma stabilises every row as a set, with sign flips allowed in component `flip`.
bool stabilises_rows(const std::array<std::vector<std::vector<int>>, 2>& rows, const SignedPerm& g, int flip) {
  for (int c = 0; c < 2; ++c)
    for (const auto& row : rows[c]) {
      std::set<int> set(row.begin(), row.end()), abs_set;
      for (int x : row) abs_set.insert(std::abs(x));
      for (int x : row) {
        int y = g(x);
        if (c == flip ? !abs_set.count(std::abs(y)) : !set.count(y)) return false;
      }
    }
  return true;
}
}  // namespace

std::vector<SignedPerm> row_group(const BiTableau& t, SignPlacement placement) {
  std::vector<SignedPerm> out;
  for (const auto& g : enumerate_group(t.rank()))
    if (stabilises_rows(t.rows, g, sign_component(placement))) out.push_back(g);
  return out;
}

std::vector<SignedPerm> column_group(const BiTableau& t, SignPlacement placement) {
  return row_group(t.conjugate(), placement);
}

int BiComposition::size() const {
  return std::accumulate(first.begin(), first.end(), 0) + std::accumulate(second.begin(), second.end(), 0);
}

std::vector<SignedPerm> young_subgroup(const BiComposition& shape, SignPlacement placement) {
  for (int v : shape.first)
    if (v < 0) throw MathError("negative composition part");
  for (int v : shape.second)
    if (v < 0) throw MathError("negative composition part");
  std::array<std::vector<std::vector<int>>, 2> rows;
  int next = 1;
  const std::vector<int>* comps[2] = {&shape.first, &shape.second};
  for (int c = 0; c < 2; ++c)
    for (int len : *comps[c]) {
      std::vector<int> row;
      for (int k = 0; k < len; ++k) row.push_back(next++);
      rows[c].push_back(row);
    }
  std::vector<SignedPerm> out;
  for (const auto& g : enumerate_group(shape.size()))
    if (stabilises_rows(rows, g, sign_component(placement))) out.push_back(g);
  return out;
}

long long lr_coefficient(const Partition& alpha, const Partition& beta, const Partition& gamma) {
  if (size(alpha) + size(beta) != size(gamma)) return 0;
  if (alpha.size() > gamma.size()) return 0;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    if (alpha[i] > gamma[i]) return 0;
  // Cells of gamma/alpha in reverse reading order: rows top to bottom, right to left.
  std::vector<std::pair<int, int>> cells;
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    int start = i < alpha.size() ? alpha[i] : 0;
    for (int j = gamma[i] - 1; j >= start; --j) cells.emplace_back(static_cast<int>(i), j);
  }
  std::vector<std::vector<int>> fill(gamma.size());
  for (std::size_t i = 0; i < gamma.size(); ++i) fill[i].assign(gamma[i], 0);
  std::vector<int> count(beta.size() + 1, 0);
  long long total = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      ++total;
      return;
    }
    auto [i, j] = cells[k];
    for (int v = 1; v <= static_cast<int>(beta.size()); ++v) {
      if (count[v] >= beta[v - 1]) continue;
      if (v > 1 && count[v] + 1 > count[v - 1]) continue;  // lattice word
      if (j + 1 < gamma[i] && fill[i][j + 1] != 0 && v > fill[i][j + 1]) continue;  // weak rows
      int above_start = i > 0 && static_cast<std::size_t>(i - 1) < alpha.size() ? alpha[i - 1] : 0;
      if (i > 0 && j >= above_start && v <= fill[i - 1][j]) continue;  // strict columns
      fill[i][j] = v;
      ++count[v];
      rec(k + 1);
      --count[v];
      fill[i][j] = 0;
    }
  };
  rec(0);
  return total;
}

std::string CellIndex::to_string() const { return "(" + std::to_string(l) + "," + lam.to_string() + ")"; }

CellIndex CellIndex::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  if (s.size() < 5 || s.front() != '(' || s.back() != ')') throw ParseError("cell index must look like (1,1|-)", 1);
  auto comma = s.find(',');
  CellIndex idx;
  try {
    idx.l = std::stoi(s.substr(1, comma - 1));
  } catch (const std::exception&) {
    throw ParseError("bad layer in cell index " + s, 2);
  }
  try {
    idx.lam = BiPartition::parse(s.substr(comma + 1, s.size() - comma - 2));
  } catch (const ParseError& e) {
    throw ParseError(e.what(), e.column ? e.column + comma + 1 : 0);
  }
  return idx;
}

bool cell_geq(const CellIndex& a, const CellIndex& b) {
  if (a.l != b.l) return a.l < b.l;
  return dominates(b.lam, a.lam);
}

std::vector<CellIndex> cell_indices(int r) {
  std::vector<CellIndex> all;
  for (int l = 0; l <= r; ++l)
    for (const auto& lam : enumerate_bipartitions(r - l)) all.push_back({l, lam});
  auto key = [](const CellIndex& c) { return std::make_pair(c.l, c.lam.to_string()); };
  std::vector<CellIndex> out;
  std::vector<bool> used(all.size(), false);
  for (std::size_t step = 0; step < all.size(); ++step) {
    std::size_t best = all.size();
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (used[i]) continue;
      bool maximal = true;
      for (std::size_t j = 0; j < all.size() && maximal; ++j)
        if (!used[j] && j != i && cell_gt(all[j], all[i])) maximal = false;
      if (maximal && (best == all.size() || key(all[i]) < key(all[best]))) best = i;
    }
    used[best] = true;
    out.push_back(all[best]);
  }
  return out;
}

}  // namespace brauerc
