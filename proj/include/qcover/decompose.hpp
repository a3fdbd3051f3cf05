#pragma once

#include <vector>

#include "qcover/module.hpp"

namespace qcover {

/// Basis of End(M) together with its Jacobson radical.
struct EndoData {
  std::vector<Morphism> basis;
  Mat flat;         // rows: flattened basis morphisms
  Mat radical;      // rows: flattened morphisms spanning J(End M)
  std::size_t top_dim = 0;  // dim End(M) / J
};

/// Radical via the trace form; needs characteristic 0 or p > dim M.
EndoData endo_data(const Module& m);
/// Basis of rad End(M) as morphisms.
std::vector<Morphism> radical_endomorphisms(const Module& m);
bool in_radical(const EndoData& e, const Morphism& f);

struct Summand {
  Module module;
  std::size_t multiplicity = 1;
};

/// Krull-Schmidt decomposition; the splitting is certified by checking that
/// the sum of the summand inclusions is an isomorphism.
std::vector<Summand> decompose(const Module& m);
/// Indecomposable summands with repetition, each with its inclusion into m.
std::vector<SubObject> split_summands(const Module& m);
bool is_indecomposable(const Module& m);

bool is_isomorphic(const Module& m, const Module& n);
/// Some isomorphism m -> n, when one exists.
std::optional<Morphism> find_isomorphism(const Module& m, const Module& n);

}  // namespace qcover
