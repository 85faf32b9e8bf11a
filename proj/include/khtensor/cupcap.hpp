#pragma once

/**
 * @file cupcap.hpp
 * @brief Cup, cap and crossing functors between categories of modules
 * over tensor product algebras.
 *
 * Red strands are numbered 1..l from left to right and gap i is the
 * region right of red i (gap 0 is left of everything).  The cup in gap i
 * is drawn at the left end of the gap: it becomes reds i+1 and i+2 of the
 * larger picture, with a single new black strand between its legs.
 */

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "khtensor/bimodule.hpp"

namespace kht {

/// Red labels after inserting a cup in gap i.
Kappa insert_cup(const Kappa& kappa, int i);

/// The idempotent with the cup removed, if kappa has the form insert_cup(mu, i).
std::optional<Kappa> remove_cup(const Kappa& kappa, int i);

/// Cup bimodule over (T^{l+2}_{k+1}, T^l_k).  Column kappa is the quotient
/// of the projective at insert_cup(kappa) by the new black's dot and its
/// two crossings with the legs.
struct CupBimodule {
  Bimodule bimodule;
  std::vector<int> image;  // right kappa -> left kappa index (or -1)
  std::vector<Vec> generator;  // image of the idempotent in block image[r] of column r
  bool descends = true;    // the right action preserved the relations
};
CupBimodule cup_bimodule(const ModuleContext& big, const TensorAlgebra& small, int i);

/// Unit T^{l+2} -> K (x) mirror(K) of the cup adjunction, normalized by the
/// bimodule map condition.  Empty when no nonzero solution exists.
struct Unit {
  Bimodule target;
  std::vector<ModMap> map;
  int solutions = 0;  // dimension of the space of admissible normalizations
};
Unit cup_unit(const ModuleContext& big, const CupBimodule& cup);

/// Counit K^ (x) K -> T^l of degree zero, normalized by the first triangle
/// identity.  Empty unless the space of such maps is one dimensional.
struct Counit {
  Bimodule source;
  std::vector<ModMap> map;
  int solutions = 0;
};
Counit cup_counit(const ModuleContext& small, const CupBimodule& cup, const Unit& unit);

/// The triangle composites K -> K (x) K^ (x) K -> K (per right column) and
/// K^ -> K^ (x) K (x) K^ -> K^ (per column of K^).
struct Zigzag {
  std::vector<ModMap> left, right;
};
Zigzag zigzag(const CupBimodule& cup, const Unit& unit, const Counit& counit);

/// Bimodule of the crossing of reds i+1 and i+2: kernel of the unit.
struct Crossing {
  Bimodule bimodule;
  bool surjective = false;  // the unit hits everything
};
Crossing crossing_bimodule(const ModuleContext& big, const TensorAlgebra& small, int i);

enum class TokenKind { Cup, Cap, Pos, Neg };

/// Elementary tangle piece acting at gap i (cup/cap) or on reds i+1, i+2.
struct Token {
  TokenKind kind;
  int i;
  friend bool operator==(const Token&, const Token&) = default;
};

/// Parses "cup 0, cup 1, pos 0, cap 1, cap 0" (commas or newlines).
std::vector<Token> parse_tangle(const std::string& text);

/// Tokens for the trace closure of a braid on n strands; generator s > 0
/// is a positive crossing of strands s, s+1 and -s its inverse.
std::vector<Token> trace_closure(const std::vector<int>& braid, int strands);

/// Checks that the reds chain from 0 back to 0; returns the maximal width.
int check_arity(const std::vector<Token>& word);

/// Bigrading constants of the functor pipeline.
struct Normalization {
  int cup_h = 0, cup_q = 0;
  int cap_h = -1, cap_q = -1;  // the twist <-1>
  int pos_h = 0, pos_q = 1;
  int neg_h = 0, neg_q = -1;
};

/// Applies cup, cap and crossing functors to complexes of projectives,
/// caching algebras and bimodules by (l, k).
class FunctorEngine {
 public:
  explicit FunctorEngine(Normalization norm = {}) : norm_(norm) {}

  const TensorAlgebra& algebra(int l, int k);
  const ModuleContext& context(int l, int k);
  const CupBimodule& cup(int l, int k, int i);  // over (T^{l+2}_{k+1}, T^l_k)
  const Unit& unit(int l, int k, int i);        // on T^{l+2}_{k+1}

  /// The complex P_empty over T^0_0.
  ProjComplex ground();
  ProjComplex apply_cup(const ProjComplex& c, int i);
  ProjComplex apply_cap(const ProjComplex& c, int i);
  ProjComplex apply_crossing(const ProjComplex& c, int i, int sign);
  ProjComplex run(const std::vector<Token>& word);

 private:
  ProjComplex minimize(const ModuleContext& ctx, const ModComplex& m);
  ModComplex unit_cone(const ProjComplex& c, int i);

  Normalization norm_;
  std::map<std::pair<int, int>, std::unique_ptr<TensorAlgebra>> algebras_;
  std::map<std::pair<int, int>, std::unique_ptr<ModuleContext>> contexts_;
  std::map<std::tuple<int, int, int>, std::unique_ptr<CupBimodule>> cups_;
  std::map<std::tuple<int, int, int>, std::unique_ptr<Unit>> units_;
};

/// Jones-Wenzl projection T e_0 (x)^L e_0 T e_0 (x) e_0 M, with e_0 the
/// idempotent with every black strand right of the reds.  The result is
/// built from projectives T eps with eps under e_0 and is cut off after
/// cutoff steps below the bottom of the input.
ProjComplex jw_projection(const ModuleContext& ctx, const ModComplex& c, int cutoff = 8);
ProjComplex jw_projection(const ModuleContext& ctx, const Module& m, int cutoff = 8);

/// Bigraded ranks (homological, quantum) of a complex over T^0_0.
std::map<std::pair<int, int>, int> ground_ranks(const ProjComplex& c);

/// Khovanov bigrading (i, j) = (n + d, d) of the ground ranks (n, d).
std::map<std::pair<int, int>, int> khovanov_ranks(const ProjComplex& c);

}  // namespace kht
