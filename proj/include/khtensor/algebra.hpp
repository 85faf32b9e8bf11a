#pragma once

/**
 * @file algebra.hpp
 * @brief The tensor product algebra T^l realized through its faithful
 * polynomial representation on the sum of the rings R/I_kappa.
 *
 * Diagrams are composed with the first factor on top, so the product ab
 * acts as the operator a o b.
 */

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "khtensor/combinatorics.hpp"
#include "khtensor/linalg.hpp"
#include "khtensor/schubert.hpp"

namespace kht {

enum class GenKind { Y, Psi, IotaPlus, IotaMinus };

std::string to_string(GenKind kind);

struct Generator {
  GenKind kind;
  int i;       // strand index (1-based black strand)
  int source;  // kappa indices
  int target;
  int degree;
  Matrix mat;  // R/I_target x R/I_source
  int star = -1;
};

/// Element of the algebra as a block operator; key is (target, source).
struct Element {
  std::map<std::pair<int, int>, Matrix> blocks;

  bool is_zero() const;
  Element operator*(const Element& o) const;
  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element scaled(const Scalar& s) const;
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend bool operator==(const Element& a, const Element& b) { return (a - b).is_zero(); }
};

struct BasisElement {
  int degree = 0;
  int gen = -1;     // last generator applied (-1 for the idempotent)
  int parent = -1;  // index in the same block
  std::vector<int> word;  // generator ids; the product word[0] * word[1] * ...
  Matrix mat;
};

struct Block {
  int target = -1, source = -1;
  std::vector<BasisElement> elems;
  std::map<int, Echelon> echelon;            // by degree
  std::map<int, std::vector<int>> members;  // degree -> element indices

  int dim() const { return static_cast<int>(elems.size()); }
};

class TensorAlgebra {
 public:
  TensorAlgebra(int l, int k);

  int l() const noexcept { return l_; }
  int k() const noexcept { return k_; }
  int num_kappas() const noexcept { return static_cast<int>(kappas_.size()); }
  const std::vector<Kappa>& kappas() const noexcept { return kappas_; }
  const Kappa& kappa(int idx) const { return kappas_.at(idx); }
  int kappa_index(const Kappa& kappa) const;
  const QuotientRing& ring(int idx) const { return rings_.at(idx); }

  const std::vector<Generator>& generators() const noexcept { return gens_; }
  const Generator& generator(int g) const { return gens_.at(g); }
  std::optional<int> find_generator(GenKind kind, int i, int source) const;
  /// Generators with the given source index.
  const std::vector<int>& generators_from(int source) const { return from_.at(source); }

  Element idempotent(int idx) const;
  Element generator_element(int g) const;
  /// Operator of black strands i, i+1 crossing with r reds between them,
  /// realized as the diagram "i crosses the reds, then the blacks cross,
  /// then the new i-th strand crosses back".
  Matrix psi_across(int i, int source) const;
  int psi_across_degree(int i, int source) const;

  /// Matrix of a generator word (word[0] on top).
  Matrix word_matrix(const std::vector<int>& word, int source) const;
  /// Reverse the word and star every letter.
  std::vector<int> star_word(const std::vector<int>& word) const;

  /// Basis of every block e_t T e_s, closed under left multiplication.
  const Block& block(int target, int source) const;
  int dim() const;
  int block_dim(int target, int source) const { return block(target, source).dim(); }
  /// Coordinates of a homogeneous matrix of the given degree in block basis.
  std::optional<Vec> express(int target, int source, int degree, const Matrix& m) const;
  /// Graded dimension of a block as degree -> dimension.
  std::map<int, int> block_graded_dim(int target, int source) const;

  /// Internal degree of basis vector idx of R/I_kappa.
  int ring_degree(int kappa, int idx) const { return rings_[kappa].internal_degree(idx); }
  bool is_homogeneous(int target, int source, const Matrix& m, int degree) const;

 private:
  void build_generators();
  void build_blocks();

  int l_, k_;
  std::vector<Kappa> kappas_;
  std::map<std::vector<int>, int> index_;
  std::vector<QuotientRing> rings_;
  std::vector<Generator> gens_;
  std::vector<std::vector<int>> from_;
  std::map<std::pair<int, int>, Block> blocks_;
};

/// Result of the relation audit.
struct RelationReport {
  int checked = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

RelationReport verify_relations(const TensorAlgebra& alg);

/// Diagram B_S for a backdrop, with its generator word.
struct BackdropDiagram {
  int top = -1, bottom = -1;  // kappa indices
  std::vector<int> word;
  Matrix mat;
  int degree = 0;
};

BackdropDiagram realize_backdrop(const TensorAlgebra& alg, const Backdrop& b);

struct CellularElement {
  Backdrop s, t;
  int target = -1, source = -1;
  int degree = 0;
  std::vector<int> word;
  Matrix mat;
};

std::vector<CellularElement> cellular_basis(const TensorAlgebra& alg);

/// Rank of the span of the cellular elements.
int cellular_rank(const TensorAlgebra& alg, const std::vector<CellularElement>& cells);

/// Dimension of e T e for e the sum of the listed idempotents.
int idempotent_subalgebra_dim(const TensorAlgebra& alg, const std::vector<int>& kappas);

}  // namespace kht
