#pragma once

#include <vector>

#include "qcover/module.hpp"

namespace qcover {

/// 0 -> left -f-> middle -g-> right -> 0 with right = M and left = tau M.
struct AlmostSplit {
  Module left, middle, right;
  Morphism f, g;
};

/// Almost split sequence ending at a non-projective indecomposable module.
/// The extension class is taken from the socle of Ext^1(M, tau M) over End(M)
/// and certified by dim Hom(M, E) = dim Hom(M, tau M) + dim rad End(M).
AlmostSplit almost_split_sequence(const Module& m, bool strict = false);

/// Indecomposables by knitting: start from simples, projectives and
/// injectives, close under tau, tau^- and middle terms of almost split
/// sequences. A closed finite family containing the projectives is all of ind
/// (Auslander), so the result is complete whenever it returns.
/// Raises CapExceeded beyond dimcap in total dimension or max_count classes.
std::vector<Module> list_indecomposables(const Algebra::Ptr& alg, std::size_t dimcap = 64,
                                         std::size_t max_count = 2048);

/// Index of the entry of `pool` isomorphic to m, or -1.
int find_in_pool(const std::vector<Module>& pool, const Module& m);

}  // namespace qcover
