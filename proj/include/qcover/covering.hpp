#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "qcover/module.hpp"
#include "qcover/presentation.hpp"
#include "qcover/report.hpp"

namespace qcover {

/// ^aM with (^aM)(v, g + a) = M(v, g). WindowTooSmall if the support leaves the box.
Module twist(const Covering& c, const Module& m, const GroupElem& a);

/// P_*: sums a window module over each G-orbit of vertices.
Module push_down(const Covering& c, const Module& m);
/// Block-diagonal P_*(f) between P_*(src) and P_*(tgt).
Morphism push_down(const Covering& c, const Morphism& f);

/// P^*N restricted to the window. Deliberately not a Module: a truncated
/// infinite module is not a module over the window, so it cannot enter Hom or Ext.
struct TruncatedModule {
  std::vector<std::size_t> dims;  // per window vertex
  std::vector<Mat> maps;          // per window arrow
  bool truncated = true;
  std::size_t total_dim() const;
};
TruncatedModule pull_up(const Covering& c, const Module& n);

/// theta = sum_a P_*(f_a) with f_a: X -> ^aY.
struct LiftingFamily {
  std::vector<std::pair<GroupElem, Morphism>> terms;
};
LiftingFamily lift_morphism(const Covering& c, const Module& x, const Module& y, const Morphism& theta);
Morphism assemble(const Covering& c, const Module& x, const Module& y, const LiftingFamily& fam);
/// The canonical identification P_*(^aY) -> P_*(Y).
Morphism pushdown_identification(const Covering& c, const Module& y, const GroupElem& a);

/// Twists a for which Ext^i(X, ^aY) can be nonzero: ^aY must meet the tops of
/// the i-th term of the minimal resolution of X. WindowTooSmall if such a
/// twist leaves the box.
std::vector<GroupElem> contributing_twists(const Covering& c, const Module& x, const Module& y, int i);
/// sum_a dim Ext^i(X, ^aY) over contributing twists.
std::size_t twisted_ext_sum(const Covering& c, const Module& x, const Module& y, int i);
inline std::size_t twisted_hom_sum(const Covering& c, const Module& x, const Module& y) {
  return twisted_ext_sum(c, x, y, 0);
}

/// Some a with ^aM = N up to iso.
std::optional<GroupElem> twist_equivalent(const Covering& c, const Module& m, const Module& n);
/// Twist moving the support to the middle of the box (identity for finite groups).
Module recenter(const Covering& c, const Module& m);

/// Twist classes of a pool, with recentered representatives.
struct TwistClasses {
  std::vector<Module> reps;
  std::vector<int> class_of;
};
TwistClasses twist_classes(const Covering& c, const std::vector<Module>& pool);

/// Window vertices with identity shift.
std::vector<int> fundamental_vertices(const Covering& c);

VerificationReport verify_ext_iso(const Covering& c, const Module& x, const Module& y, int i);
VerificationReport verify_indecomposable_preservation(const Covering& c, const Module& x);
VerificationReport verify_orbit_bijection(const Covering& c, std::size_t dimcap = 64);

}  // namespace qcover
