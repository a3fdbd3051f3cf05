#pragma once

#include <json.hpp>
#include <vector>

#include "qcover/endo.hpp"
#include "qcover/report.hpp"
#include "qcover/subcategory.hpp"

namespace qcover {

struct PreclusterVerdict {
  bool generator_cogenerator = false;
  bool tau_stable = false;
  bool tau_minus_stable = false;
  bool ext_vanishing = false;  // degrees 0 < i < n
  /// Finitely many generators per fundamental domain; stands in for
  /// functorial finiteness.
  bool finite_type = false;
  int n = 1;

  bool pass() const { return generator_cogenerator && tau_stable && tau_minus_stable && ext_vanishing && finite_type; }
  nlohmann::json to_json() const;
};

bool is_generator_cogenerator(const Carrier& c, const SubcategorySpec& u);
PreclusterVerdict is_n_precluster(const Carrier& c, const SubcategorySpec& u, int n);

/// add of tau_n^{-i}(projectives), i >= 0, resp. tau_n^i(injectives).
/// Throws CapExceeded when the closure has not stabilized after `cap` rounds.
SubcategorySpec compute_Pn(const Carrier& c, int n, std::size_t cap = 32);
SubcategorySpec compute_In(const Carrier& c, int n, std::size_t cap = 32);

/// Ext^i(X, U) = 0 (left) or Ext^i(U, X) = 0 (right) for 0 < i < n, over a pool.
struct PerpResult {
  SubcategorySpec left;
  SubcategorySpec right;
  bool symmetric = false;
};
PerpResult perpendiculars(const Carrier& c, const SubcategorySpec& u, const std::vector<Module>& pool, int n);
/// The left perpendicular, after checking it agrees with the right one.
/// Throws HypothesisUnverified on asymmetry.
SubcategorySpec compute_Z(const Carrier& c, const SubcategorySpec& u, const std::vector<Module>& pool, int n);

VerificationReport check_nMAG(const Algebra::Ptr& alg, int n, const std::vector<int>& vertices = {},
                              bool strict = true);
/// On a covering, the fundamental domain of the window.
VerificationReport check_nMAG(const Carrier& c, int n);

/// Push-down of a twist-closed U is n-precluster tilting downstairs.
VerificationReport verify_main1(const Carrier& cover, const SubcategorySpec& u, int n);
/// Indecomposables of the window pool whose push-down lies in V.
SubcategorySpec pushdown_preimage(const Carrier& cover, const SubcategorySpec& v, std::size_t dimcap = 64);
/// The preimage of a downstairs n-precluster tilting V is n-precluster tilting.
VerificationReport verify_main2(const Carrier& cover, const SubcategorySpec& v, int n, std::size_t dimcap = 64);
VerificationReport verify_Pn_pushdown(const Carrier& cover, int n, std::size_t cap = 32);
/// nMAG upstairs iff downstairs, for square-free bases.
VerificationReport verify_bongab(const Carrier& cover, int n);
/// The five equivalent conditions for tau_n-selfinjectivity, and on a
/// covering the agreement with the base.
VerificationReport verify_selfinjectivity_criteria(const Carrier& c, int n, std::size_t cap = 32,
                                                   std::size_t dimcap = 64);
/// Z(U) and the Gorenstein projective modules over End(U), on a plain carrier.
VerificationReport verify_equivalence_Z_Gp(const Carrier& c, const SubcategorySpec& u, int n, std::size_t dimcap = 64);
/// Compares mod-U on the window with mod-P_*(U) downstairs.
VerificationReport verify_mod_pushdown(const Carrier& cover, const SubcategorySpec& u, int n, std::size_t dimcap = 64);

/// Every subcategory of the pool containing the projectives and injectives
/// that passes is_n_precluster. CapExceeded beyond `subset_cap` candidates.
std::vector<SubcategorySpec> search_preclusters(const Carrier& c, int n, std::size_t dimcap = 64,
                                                std::size_t subset_cap = std::size_t{1} << 16);

}  // namespace qcover
