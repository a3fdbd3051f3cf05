#pragma once

#include <vector>

#include "qcover/module.hpp"

namespace qcover {

/// The category add(U_1, ..., U_m) as a basic bound quiver algebra E, with
/// E-modules playing the role of functors on U.
///
/// Object k is vertex k of E. An irreducible map f: U_i -> U_j becomes an arrow
/// j -> i, so that paths k to i span Hom(U_i, U_k) and the projective E-module
/// at k is U(-, U_k). The path a_1 ... a_r has value f_r then ... then f_1.
struct EndoCategory {
  std::vector<Module> objects;
  Algebra::Ptr algebra;
  /// Morphism of each arrow of E.
  std::vector<Morphism> arrow_maps;
  /// hom[i][j] = basis of Hom(U_i, U_j).
  std::vector<std::vector<std::vector<Morphism>>> hom;

  int size() const { return static_cast<int>(objects.size()); }
};

/// Objects must be pairwise non-isomorphic indecomposables over one algebra.
/// Border flags mark objects whose projective (border_out) or injective
/// (border_in) E-module is cut off by a truncation.
EndoCategory endo_category(const std::vector<Module>& objects, std::vector<bool> border_out = {},
                           std::vector<bool> border_in = {});

/// Phi(X) = Hom(-, X) restricted to the objects, an E-module.
Module phi(const EndoCategory& e, const Module& x);

/// Ext_E^i(M, E(-, x)) = 0 for 1 <= i <= n+1 and every object x. Throws
/// HypothesisUnverified unless E is n-minimal Auslander-Gorenstein, since the
/// finite test certifies Gorenstein projectivity only in that case.
bool is_gorenstein_projective(const EndoCategory& e, const Module& m, int n);

/// dom.dim >= n+1 and inj.dim of every projective <= n+1, on the given vertices.
bool satisfies_nmag(const Algebra::Ptr& alg, int n, const std::vector<int>& vertices = {}, bool strict = true);

}  // namespace qcover
