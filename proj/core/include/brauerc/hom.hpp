#pragma once

#include <vector>

#include "brauerc/module.hpp"

namespace brauerc {

struct HomBasis {
  Module source, target;
  std::vector<Matrix> maps;  // dim(source) x dim(target), v -> v * F
  std::size_t dim() const { return maps.size(); }
};

HomBasis hom_space(const Module& m, const Module& n);
std::size_t hom_dim(const Module& m, const Module& n);
bool is_homomorphism(const Module& m, const Module& n, const Matrix& f);

// A cyclic decomposition of m's underlying space: rows of `basis` are
// roots[i] * (word), found by breadth-first closure under the generators.
struct Spin {
  Matrix basis;                      // dim x dim, invertible
  std::vector<std::size_t> root_of;  // which generating vector each row descends from
  std::vector<long> parent;          // -1 for roots
  std::vector<std::size_t> via;      // generator applied to the parent
  Matrix roots;                      // generating vectors, as rows
  struct Relation {
    std::size_t row, gen;
    Matrix coef;  // basis[row] * g = coef * basis
  };
  std::vector<Relation> relations;
};

// Roots are chosen greedily from the standard basis unless `seeds` is given.
Spin spin(const Module& m, const Matrix* seeds = nullptr);

enum class Presentation { greedy, all_basis };

// dim Ext^1(m, n) via 0 -> Omega -> A^k -> m -> 0.
std::size_t ext1_dim(const Module& m, const Module& n, Presentation p = Presentation::greedy);

}  // namespace brauerc
