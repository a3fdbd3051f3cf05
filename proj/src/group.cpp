#include "qcover/group.hpp"

#include <algorithm>
#include <limits>

#include "qcover/errors.hpp"

namespace qcover {

Group Group::free_abelian(int rank) {
  if (rank < 0) throw SchemaError("negative group rank");
  Group g;
  g.kind_ = Kind::FreeAbelian;
  g.rank_ = rank;
  g.order_ = rank == 0 ? 1 : 0;
  return g;
}

Group Group::cyclic(std::int64_t order) {
  if (order < 1) throw SchemaError("cyclic group order must be positive");
  Group g;
  g.kind_ = Kind::Cyclic;
  g.rank_ = 0;
  g.order_ = order;
  return g;
}

GroupElem Group::normalize(GroupElem a) const {
  if (static_cast<int>(a.size()) != coords()) throw SchemaError("group element has wrong number of coordinates");
  if (kind_ == Kind::Cyclic) {
    a[0] %= order_;
    if (a[0] < 0) a[0] += order_;
  }
  return a;
}

GroupElem Group::add(const GroupElem& a, const GroupElem& b) const {
  GroupElem r(coords());
  for (int i = 0; i < coords(); ++i) r[i] = a[i] + b[i];
  return normalize(std::move(r));
}

GroupElem Group::neg(const GroupElem& a) const {
  GroupElem r(coords());
  for (int i = 0; i < coords(); ++i) r[i] = -a[i];
  return normalize(std::move(r));
}

bool Group::is_identity(const GroupElem& a) const {
  return std::all_of(a.begin(), a.end(), [](std::int64_t v) { return v == 0; });
}

std::vector<GroupElem> Group::all_elements() const {
  if (kind_ == Kind::Cyclic) {
    std::vector<GroupElem> out;
    for (std::int64_t i = 0; i < order_; ++i) out.push_back({i});
    return out;
  }
  if (rank_ == 0) return {GroupElem{}};
  throw SchemaError("infinite group has no finite element list");
}

std::string Group::format(const GroupElem& a) const {
  std::string s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s;
}

Window::Window(const Group& g, int lo, int hi) : group_(g), lo_(lo), hi_(hi) {
  if (lo > hi) throw SchemaError("empty window box");
  if (g.kind() == Group::Kind::Cyclic) {
    elements_ = g.all_elements();
    return;
  }
  const int r = g.rank();
  GroupElem cur(r, lo);
  if (r == 0) {
    elements_.push_back({});
    return;
  }
  // odometer over [-w, w]^r, ordered lexicographically
  while (true) {
    elements_.push_back(cur);
    int i = r - 1;
    while (i >= 0 && cur[i] == hi) {
      cur[i] = lo;
      --i;
    }
    if (i < 0) break;
    ++cur[i];
  }
}

std::optional<std::size_t> Window::index_of(const GroupElem& a) const {
  if (group_.kind() == Group::Kind::Cyclic) {
    auto n = group_.normalize(a);
    return static_cast<std::size_t>(n[0]);
  }
  const int r = group_.rank();
  if (static_cast<int>(a.size()) != r) return std::nullopt;
  std::size_t idx = 0;
  const std::size_t side = static_cast<std::size_t>(hi_ - lo_) + 1;
  for (int i = 0; i < r; ++i) {
    if (a[i] < lo_ || a[i] > hi_) return std::nullopt;
    idx = idx * side + static_cast<std::size_t>(a[i] - lo_);
  }
  return idx;
}

std::int64_t Window::depth(const GroupElem& a) const {
  if (group_.is_finite()) return std::numeric_limits<std::int64_t>::max();
  std::int64_t d = std::numeric_limits<std::int64_t>::max();
  for (auto v : a) d = std::min<std::int64_t>(d, std::min<std::int64_t>(hi_ - v, v - lo_));
  return d;
}

}  // namespace qcover
