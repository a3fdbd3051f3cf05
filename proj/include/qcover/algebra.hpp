#pragma once

#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qcover/field.hpp"
#include "qcover/matrix.hpp"

namespace qcover {

struct Arrow {
  std::string id;
  int src = 0;
  int tgt = 0;
};

/// Arrows composed left to right: [a, b] means a first, then b.
struct Path {
  int src = 0;
  int tgt = 0;
  std::vector<int> arrows;

  std::size_t length() const { return arrows.size(); }
  friend auto operator<=>(const Path&, const Path&) = default;
};

struct Term {
  Scalar coeff;
  Path path;
};
using Relation = std::vector<Term>;

struct BoundQuiver {
  Field field = Field::prime();
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<Relation> relations;
  int nilbound = 0;

  std::optional<int> vertex_index(const std::string& id) const;
  std::optional<int> arrow_index(const std::string& id) const;
  /// Builds a path from arrow ids; SchemaError if not composable.
  Path path_from_ids(const std::vector<std::string>& ids) const;
  std::string format_path(const Path& p) const;
};

/// Path algebra kQ/(I + R^{l+1}) with normal forms for every pair of vertices.
///
/// Algebras may carry border flags: when the algebra is a finite window of a
/// covering, a vertex within distance l of the complement of the window has
/// projective (border_out) or injective (border_in) that differs from the one
/// of the infinite category.  Strict constructions refuse to use those.
class Algebra : public std::enable_shared_from_this<Algebra> {
 public:
  using Ptr = std::shared_ptr<const Algebra>;

  /// Validates admissibility and local boundedness.
  static Ptr build(BoundQuiver q, std::vector<bool> border_out = {}, std::vector<bool> border_in = {});

  const BoundQuiver& quiver() const { return q_; }
  const Field& field() const { return q_.field; }
  int num_vertices() const { return static_cast<int>(q_.vertices.size()); }
  int nilbound() const { return q_.nilbound; }
  const std::vector<int>& out_arrows(int v) const { return out_[v]; }
  const std::vector<int>& in_arrows(int v) const { return in_[v]; }
  const Arrow& arrow(int a) const { return q_.arrows[a]; }

  std::size_t dim(int x, int y) const { return space(x, y).basis.size(); }
  /// Basis paths of e_x A e_y (paths x to y not reduced away).
  std::vector<Path> basis(int x, int y) const;
  /// 1 x dim(x,y) coordinates of a path in the normal-form basis.
  Mat coords(const Path& p) const;
  /// Right multiplication by an arrow a: e_x A e_{src a} -> e_x A e_{tgt a}.
  Mat right_mult(int x, int a) const;
  /// Left multiplication by an arrow a: e_{tgt a} A e_y -> e_{src a} A e_y.
  Mat left_mult(int a, int y) const;
  /// Right multiplication by an arbitrary element u of e_y A e_z:
  /// e_x A e_y -> e_x A e_z.
  Mat right_mult_element(int x, int y, int z, const Mat& u) const;
  /// Product of u in e_x A e_y and w in e_y A e_z.
  Mat multiply(int x, int y, int z, const Mat& u, const Mat& w) const;

  /// Opposite algebra (arrows and paths reversed); the same object on repeated calls.
  Ptr opposite() const;
  /// Coordinates in A^op(y, x) of the reversal of an element of A(x, y).
  Mat to_opposite(int x, int y, const Mat& u) const;

  bool border_out(int v) const { return !border_out_.empty() && border_out_[v]; }
  bool border_in(int v) const { return !border_in_.empty() && border_in_[v]; }
  bool has_border() const;
  /// Same algebra without border flags, for lenient computations.
  Ptr plain() const;
  /// True when both algebras have identical quivers and relations.
  bool same_presentation(const Algebra& o) const;

  std::size_t total_dim() const;

 private:
  struct PathSpace {
    std::vector<Path> paths;  // sorted: longer first
    std::vector<std::size_t> basis;
    Mat reduce;  // paths x basis
    std::map<std::vector<int>, std::size_t> index;
  };

  Algebra() = default;
  void compute_spaces();
  const PathSpace& space(int x, int y) const;

  BoundQuiver q_;
  std::vector<std::vector<int>> out_, in_;
  std::vector<std::unordered_map<int, PathSpace>> spaces_;
  std::vector<bool> border_out_, border_in_;

  mutable std::mutex op_mu_;
  mutable Ptr op_strong_;
  mutable std::weak_ptr<const Algebra> op_weak_;
};

}  // namespace qcover
