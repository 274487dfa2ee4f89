#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "brauerc/hyperoct.hpp"

namespace brauerc {

using Partition = std::vector<int>;

int size(const Partition& p);
Partition conjugate(const Partition& p);
std::vector<Partition> enumerate_partitions(int n);  // dominance-friendly: (n) first

struct BiPartition {
  Partition first, second;

  int size() const;
  std::string to_string() const;  // "2,1|1", empty side "-"
  static BiPartition parse(std::string_view text);
  auto operator<=>(const BiPartition&) const = default;
};

std::vector<BiPartition> enumerate_bipartitions(int r);
bool dominates(const BiPartition& a, const BiPartition& b);
BiPartition conjugate(const BiPartition& a);
bool is_p_regular(const BiPartition& a, std::uint32_t p);

// Which tableau component's rows admit sign changes.
enum class SignPlacement { first, second };
inline int sign_component(SignPlacement s) { return s == SignPlacement::first ? 0 : 1; }
std::string to_string(SignPlacement s);
SignPlacement parse_placement(std::string_view s);

struct BiTableau {
  BiPartition shape;
  std::array<std::vector<std::vector<int>>, 2> rows;

  // 1..r in reading order, first component then second, all positive.
  static BiTableau initial(const BiPartition& shape);
  BiTableau act(const SignedPerm& s) const;
  BiTableau conjugate() const;
  int rank() const { return shape.size(); }
  std::string to_string() const;
};

// Canonical representative of {t}: rows sorted by |entry|; in the sign-carrying
// component signs are dropped.
struct BiTabloid {
  std::array<std::vector<std::vector<int>>, 2> rows;
  static BiTabloid of(const BiTableau& t, SignPlacement placement);
  auto operator<=>(const BiTabloid&) const = default;
  std::string to_string() const;
};

std::vector<SignedPerm> row_group(const BiTableau& t, SignPlacement placement);
std::vector<SignedPerm> column_group(const BiTableau& t, SignPlacement placement);

// Parts may be zero or unordered; letters are assigned consecutively.
struct BiComposition {
  std::vector<int> first, second;
  int size() const;
};
std::vector<SignedPerm> young_subgroup(const BiComposition& shape, SignPlacement placement);

long long lr_coefficient(const Partition& alpha, const Partition& beta, const Partition& gamma);

struct CellIndex {
  int l = 0;
  BiPartition lam;

  std::string to_string() const;  // "(1,1|-)"
  static CellIndex parse(std::string_view text);
  auto operator<=>(const CellIndex&) const = default;
};

// (m,mu) >= (l,lam) iff m < l, or m = l and lam dominates mu.
bool cell_geq(const CellIndex& a, const CellIndex& b);
inline bool cell_gt(const CellIndex& a, const CellIndex& b) { return a != b && cell_geq(a, b); }

// All indices of Lambda for rank r, listed along a fixed linear extension in
// decreasing order (maximal elements first, ties by (l, text)).
std::vector<CellIndex> cell_indices(int r);

}  // namespace brauerc
