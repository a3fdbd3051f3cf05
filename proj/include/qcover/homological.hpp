#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qcover/module.hpp"

namespace qcover {

/// Minimal projective resolution P_k -> ... -> P_0 -> M, or minimal injective
/// coresolution M -> I^0 -> ... -> I^k.
struct Resolution {
  enum class Direction { Projective, Injective };

  Direction direction = Direction::Projective;
  Module object;
  /// terms[i] = P_i (resp. I^i), a direct sum of indecomposable projectives
  /// (injectives) at the vertices tops[i].
  std::vector<Module> terms;
  std::vector<std::vector<int>> tops;
  /// Projective: maps[0]: P_0 -> M and maps[i]: P_i -> P_{i-1}.
  /// Injective: maps[0]: M -> I^0 and maps[i]: I^{i-1} -> I^i.
  std::vector<Morphism> maps;
  /// kernels[i] = Ker(maps[i-1]) for projective, Coker for injective; kernels[0] = M.
  /// Projective summands are not removed here.
  std::vector<Module> kernels;

  std::size_t length() const { return terms.size(); }
  /// Consecutive composites vanish and every interior term is exact.
  bool is_exact() const;
};

Resolution min_proj_resolution(const Module& m, int k, bool strict = true);
Resolution min_inj_coresolution(const Module& m, int k, bool strict = true);

/// Yoneda coordinates of a projective resolution term: a morphism P_i -> N is
/// the list of images of the generators of the summands of P_i.
/// Precomposition with maps[i] as a matrix Hom(P_{i-1}, N) -> Hom(P_i, N), i >= 1.
Mat yoneda_differential(const Resolution& r, std::size_t i, const Module& n);
/// Morphism P_i -> N with the given coordinates (one row).
Morphism yoneda_morphism(const Resolution& r, std::size_t i, const Module& n, const Mat& coords);
Mat yoneda_coords(const Resolution& r, std::size_t i, const Morphism& f);
/// A morphism h: P_i -> X with h then g = f, for f: P_i -> Y and g: X -> Y
/// whose image contains the image of f.
Morphism lift_from_term(const Resolution& r, std::size_t i, const Morphism& f, const Morphism& g);

/// Module with its projective (injective) indecomposable summands removed.
Module strip_projective_summands(const Module& m);
Module strip_injective_summands(const Module& m);

Module syzygy(const Module& m, int i = 1, bool strict = true);
Module cosyzygy(const Module& m, int i = 1, bool strict = true);

/// Auslander-Bridger transpose: a module over the opposite algebra.
Module transpose(const Module& m, bool strict = true);
Module tau(const Module& m, bool strict = true);
Module tau_minus(const Module& m, bool strict = true);
/// tau o Omega^(n-1) and tau^- o Omega^-(n-1).
Module tau_n(const Module& m, int n, bool strict = true);
Module tau_n_minus(const Module& m, int n, bool strict = true);

struct ExtSpace {
  int degree = 0;
  std::size_t dim = 0;
  /// Rows: cocycles in Hom(P_i, N), written in Yoneda coordinates
  /// (one block N(x) per indecomposable summand P_x of P_i).
  Mat cocycles;
  /// Rows: representatives of a basis of Ext^i modulo coboundaries.
  Mat representatives;
};

ExtSpace ext_space(const Module& m, const Module& n, int i, bool strict = true);
std::size_t ext_dim(const Module& m, const Module& n, int i, bool strict = true);

/// Finite list of modules standing for its additive closure.
struct ModuleList {
  std::vector<Module> items;
};

/// Evaluation map (+)_i U_i^{Hom(U_i, M)} -> M.
Morphism right_approximation(const ModuleList& u, const Module& m);
/// Coevaluation M -> (+)_i U_i^{Hom(M, U_i)}.
Morphism left_approximation(const ModuleList& u, const Module& m);

/// Ext for the exact structure of sequences kept exact by Hom(U, -), computed
/// from a resolution by right add(U + projectives)-approximations.
std::size_t relative_ext_dim(const ModuleList& u, const Module& m, const Module& n, int i,
                             bool include_projectives = true);

/// An exact integer, or "at least bound" when the search stopped.
struct BoundedDim {
  std::size_t value = 0;
  bool at_least = false;

  std::string to_string() const { return (at_least ? ">=" : "") + std::to_string(value); }
  friend bool operator==(const BoundedDim&, const BoundedDim&) = default;
};

/// Injective dimension if at most bound, else {bound + 1, at_least}.
BoundedDim inj_dim_upto(const Module& m, std::size_t bound, bool strict = true);
BoundedDim proj_dim_upto(const Module& m, std::size_t bound, bool strict = true);
/// Number of leading projective terms in the minimal injective coresolution of
/// each P_x (x in `vertices`, or all vertices), minimized; "at least bound" when
/// all of the first `bound` terms are projective.
BoundedDim dominant_dimension_upto(const Algebra::Ptr& alg, std::size_t bound, const std::vector<int>& vertices = {},
                                   bool strict = true);

void clear_homological_caches();

}  // namespace qcover
