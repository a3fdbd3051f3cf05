#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qcover/algebra.hpp"
#include "qcover/matrix.hpp"

namespace qcover {

/// Finite-dimensional right module: a space M(v) per vertex and, for each
/// arrow a: x -> y, a dims(x) x dims(y) matrix acting on row vectors, so the
/// path a1 a2 acts by M(a1) * M(a2).  Cheap to copy.
class Module {
 public:
  Module() = default;
  Module(Algebra::Ptr alg, std::vector<std::size_t> dims, std::vector<Mat> maps);

  static Module zero(Algebra::Ptr alg);
  static Module simple(Algebra::Ptr alg, int v);

  const Algebra::Ptr& algebra() const { return d_->alg; }
  const Field& field() const { return d_->alg->field(); }
  const std::vector<std::size_t>& dims() const { return d_->dims; }
  std::size_t dim(int v) const { return d_->dims[v]; }
  std::size_t total_dim() const { return d_->total; }
  const Mat& map(int a) const { return d_->maps[a]; }
  const std::vector<Mat>& maps() const { return d_->maps; }
  bool is_zero() const { return d_->total == 0; }
  std::vector<int> support() const;

  /// Action of a path, dims(src) x dims(tgt).
  Mat act(const Path& p) const;
  /// Action of an element of A(x, y) given in normal-form coordinates.
  Mat act_element(int x, int y, const Mat& u) const;

  /// Throws RelationViolated when some relation does not vanish.
  void validate() const;
  /// Same data over another algebra object with the same presentation.
  Module rebind(Algebra::Ptr alg) const;

  /// Canonical serialization, usable as a cache key.
  const std::string& key() const { return d_->key; }
  nlohmann::json to_json() const;
  static Module from_json(Algebra::Ptr alg, const nlohmann::json& j);
  std::string dim_vector_string() const;

 private:
  struct Data {
    Algebra::Ptr alg;
    std::vector<std::size_t> dims;
    std::vector<Mat> maps;
    std::size_t total = 0;
    std::string key;
  };
  std::shared_ptr<const Data> d_;
};

/// Per-vertex matrices dims_src(v) x dims_tgt(v) commuting with arrow maps.
class Morphism {
 public:
  Morphism() = default;
  Morphism(Module src, Module tgt, std::vector<Mat> mats);

  static Morphism zero(const Module& src, const Module& tgt);
  static Morphism identity(const Module& m);

  const Module& src() const { return src_; }
  const Module& tgt() const { return tgt_; }
  const Mat& at(int v) const { return mats_[v]; }
  const std::vector<Mat>& mats() const { return mats_; }

  bool is_zero() const;
  bool is_iso() const;
  bool commutes() const;

  /// Row vector of all entries, vertex by vertex.
  Mat flatten() const;

  Morphism operator+(const Morphism& o) const;
  Morphism scaled(const Scalar& s) const;

 private:
  Module src_, tgt_;
  std::vector<Mat> mats_;
};

/// f then g.
Morphism compose(const Morphism& f, const Morphism& g);

std::vector<Morphism> hom_basis(const Module& m, const Module& n);
std::size_t hom_dim(const Module& m, const Module& n);
/// Linear combination of morphisms with the given coefficients.
Morphism combine(const std::vector<Morphism>& basis, const std::vector<Scalar>& coeffs, const Module& src,
                 const Module& tgt);

struct SubObject {
  Module module;
  Morphism map;  // inclusion, or projection for quotients
};

/// Submodule spanned per vertex by the given rows (must be stable under arrows).
SubObject submodule(const Module& m, const std::vector<Mat>& rows);
/// Quotient M / (submodule given by rows).
SubObject quotient(const Module& m, const std::vector<Mat>& rows);

SubObject kernel(const Morphism& f);
SubObject image(const Morphism& f);
SubObject cokernel(const Morphism& f);

struct DirectSum {
  Module sum;
  std::vector<Morphism> inclusions;
  std::vector<Morphism> projections;
};
DirectSum direct_sum(const std::vector<Module>& parts, const Algebra::Ptr& alg);
/// Morphism out of a direct sum given by its components.
Morphism from_sum(const DirectSum& s, const std::vector<Morphism>& components, const Module& tgt);
/// Morphism into a direct sum given by its components.
Morphism to_sum(const Module& src, const DirectSum& s, const std::vector<Morphism>& components);

/// Per-vertex row bases of rad M, soc M.
std::vector<Mat> radical_rows(const Module& m);
std::vector<Mat> socle_rows(const Module& m);
SubObject radical(const Module& m);
SubObject top(const Module& m);
SubObject socle(const Module& m);
std::vector<std::size_t> top_dims(const Module& m);
std::vector<std::size_t> socle_dims(const Module& m);

/// P_x = e_x A with P_x(y) spanned by basis paths x to y.  With strict=true,
/// a covering window raises WindowTooSmall when x is too close to the border.
Module projective_at(const Algebra::Ptr& alg, int x, bool strict = true);
/// I_x = D(A e_x).
Module injective_at(const Algebra::Ptr& alg, int x, bool strict = true);

/// Morphism P_x -> M sending e_x to the element m (1 x dim M(x)).
Morphism from_projective(const Module& px, int x, const Module& m, const Mat& elem);
/// Coordinates in M(x) of the image of e_x under f: P_x -> M.
Mat projective_generator_image(const Morphism& f, int x);

/// Vector space dual, a module over the opposite algebra.
Module dual(const Module& m);
Morphism dual(const Morphism& f);

struct Cover {
  Module object;
  Morphism map;
  std::vector<int> vertices;  // vertex of each indecomposable summand
};
Cover projective_cover(const Module& m, bool strict = true);
Cover injective_envelope(const Module& m, bool strict = true);

bool is_projective(const Module& m);
bool is_injective(const Module& m);

}  // namespace qcover
