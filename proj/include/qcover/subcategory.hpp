#pragma once

#include <memory>
#include <vector>

#include "qcover/covering.hpp"
#include "qcover/module.hpp"

namespace qcover {

/// Where modules live: a plain algebra, or the window of a covering. On a
/// covering, Hom and Ext are summed over twists and modules are compared up to
/// twist, so that a finite list of orbit representatives stands for a
/// G-equivariant subcategory.
struct Carrier {
  Algebra::Ptr algebra;
  std::shared_ptr<const Covering> covering;

  static Carrier plain(Algebra::Ptr alg) { return {std::move(alg), nullptr}; }
  static Carrier cover(std::shared_ptr<const Covering> c) { return {c->algebra, c}; }
  /// The base algebra of a covering carrier.
  Carrier downstairs() const;

  bool is_covering() const { return covering != nullptr; }
  /// Vertices x with the modules C(-, x), DC(x, -) to test (identity shift on a covering).
  std::vector<int> fundamental_vertices() const;
  Module projective(int x) const { return projective_at(algebra, x, true); }
  Module injective(int x) const { return injective_at(algebra, x, true); }

  /// dim Ext^i(X, Y), or sum_a dim Ext^i(X, ^aY) on a covering.
  std::size_t ext(const Module& x, const Module& y, int i) const;
  std::size_t hom(const Module& x, const Module& y) const { return ext(x, y, 0); }
  /// Isomorphic, or isomorphic up to a twist on a covering.
  bool same_class(const Module& x, const Module& y) const;
  /// Canonical position of a module (recentered on a covering).
  Module normalize(const Module& m) const;
  /// Indecomposables up to twist: knitting on the window, then twist classes.
  std::vector<Module> pool(std::size_t dimcap = 64) const;
  Module push_down(const Module& m) const;
};

/// Additively closed subcategory given by pairwise non-isomorphic
/// indecomposable generators. On a covering with twist_closed set, the
/// generators are orbit representatives and the subcategory is add of all twists.
struct SubcategorySpec {
  std::vector<Module> generators;
  bool twist_closed = false;
};

/// Deduplicated indecomposable summands of the given modules.
SubcategorySpec make_subcategory(const Carrier& c, const std::vector<Module>& modules);
/// Index of the generator matching an indecomposable module, or -1.
int generator_index(const Carrier& c, const SubcategorySpec& u, const Module& m);
/// Every indecomposable summand of m lies in U.
bool in_add(const Carrier& c, const SubcategorySpec& u, const Module& m);
bool same_subcategory(const Carrier& c, const SubcategorySpec& a, const SubcategorySpec& b);

}  // namespace qcover
