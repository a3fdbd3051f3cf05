#pragma once

#include <json.hpp>
#include <vector>

#include "qcover/report.hpp"
#include "qcover/subcategory.hpp"

namespace qcover {

/// A pair (M, P) inside an ambient subcategory. M is given by indecomposable
/// summands (orbit representatives on a covering), P by indecomposable
/// projectives.
struct TiltingPair {
  std::vector<Module> m;
  std::vector<Module> p;
  SubcategorySpec ambient;

  nlohmann::json to_json() const;
};

/// Both perpendicular categories over the pool equal U.
bool is_n_cluster_tilting(const Carrier& c, const SubcategorySpec& u, int n, const std::vector<Module>& pool);

/// Hom(M, ^a tau_n M) = 0 for every a (the twist sum on a covering).
bool is_G_tau_n_rigid(const Carrier& c, const std::vector<Module>& m, int n);
inline bool is_G_tau_n_rigid(const Carrier& c, const Module& m, int n) {
  return is_G_tau_n_rigid(c, std::vector<Module>{m}, n);
}
bool is_rigid_pair(const Carrier& c, const TiltingPair& t, int n);
/// Maximality among rigid pairs of the ambient and the projective support
/// condition. Throws AmbientNotClusterTilting when the ambient fails the test
/// over the carrier's pool.
bool is_support_tilting_pair(const Carrier& c, const TiltingPair& t, int n, std::size_t dimcap = 64);

/// All support tilting pairs with M in the ambient, up to twist. CapExceeded
/// beyond `cap` candidate subsets.
std::vector<TiltingPair> enumerate_support_tilting_pairs(const Carrier& c, const SubcategorySpec& ambient, int n,
                                                         std::size_t cap = std::size_t{1} << 20,
                                                         std::size_t dimcap = 64);

/// The pair is support tilting upstairs iff its push-down is downstairs.
VerificationReport verify_tilting_pushdown(const Carrier& cover, const TiltingPair& t, int n, std::size_t dimcap = 64);
/// Rigid indecomposables up to twist versus rigid indecomposables of the
/// base, per vertex of the fundamental domain.
VerificationReport scan_tau_n_tilting_finite(const Carrier& cover, int n, std::size_t dimcap = 64);
/// Downstairs enumeration against the push-down of the upstairs one.
VerificationReport verify_tilting_enumeration(const Carrier& cover, const SubcategorySpec& ambient, int n,
                                              std::size_t dimcap = 64);

}  // namespace qcover
