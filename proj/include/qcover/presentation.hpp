#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcover/algebra.hpp"
#include "qcover/group.hpp"

namespace qcover {

/// A bound quiver with a homogeneous G-grading of its arrows.  The bound quiver
/// itself presents the base algebra; the grading presents its covering.
struct Presentation {
  BoundQuiver quiver;
  Group group = Group::trivial();
  std::vector<GroupElem> weights;  // one per arrow
  Algebra::Ptr algebra;

  const Field& field() const { return quiver.field; }
  int num_vertices() const { return static_cast<int>(quiver.vertices.size()); }
  GroupElem path_weight(const Path& p) const;
};

/// Checks homogeneity and builds the base algebra.
Presentation make_presentation(BoundQuiver q, Group g, std::vector<GroupElem> weights);
Presentation load_presentation(const nlohmann::json& doc);
Presentation load_presentation_file(const std::string& path);
nlohmann::json presentation_to_json(const Presentation& p);

std::vector<Path> path_basis(const Presentation& p, int x, int y);
bool is_square_free(const Algebra& a);
inline bool is_square_free(const Presentation& p) { return is_square_free(*p.algebra); }

struct CoveringVertex {
  int base = 0;
  GroupElem shift;
};

/// Finite window of the smash cover: vertices base x box, arrow (a, g) from
/// (src a, g) to (tgt a, g + weight a), relations translated and cut to the box.
struct Covering {
  Covering(std::shared_ptr<const Presentation> b, const Window& w) : base(std::move(b)), window(w) {}

  std::shared_ptr<const Presentation> base;
  Window window;
  Algebra::Ptr algebra;
  std::vector<CoveringVertex> vertices;
  std::vector<std::pair<int, GroupElem>> arrows;  // base arrow, source shift
  std::vector<std::optional<int>> arrow_lookup;   // (shift index, base arrow) -> arrow

  const Group& group() const { return base->group; }
  int num_vertices() const { return static_cast<int>(vertices.size()); }
  std::optional<int> vertex_at(int base_vertex, const GroupElem& g) const;
  std::optional<int> arrow_at(int base_arrow, const GroupElem& g) const;
  /// Vertex shifted by a, if it stays in the window.
  std::optional<int> shifted(int v, const GroupElem& a) const;
  std::string vertex_name(int v) const;
};

Covering smash_cover(std::shared_ptr<const Presentation> pres, const Window& window);

/// Generator of a cyclic group acting on a bound quiver by permutations.
struct FiniteAction {
  std::int64_t order = 1;
  std::vector<int> vertex_perm;
  std::vector<int> arrow_perm;
};

/// Orbit presentation C/G with weights in Z/order.  Throws NotFreeAction.
Presentation orbit_of_finite_action(const BoundQuiver& c, const FiniteAction& act);
/// Collapses a smash cover back to a graded presentation.
Presentation reconstruct_from_cover(const Covering& cov);

/// Parses "v@g1,g2" / "a@g" style covering labels.
std::pair<std::string, GroupElem> parse_cover_label(const std::string& label, const Group& g);

}  // namespace qcover
