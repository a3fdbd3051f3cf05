#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qcover {

/// Elements are integer vectors: rank coordinates for Z^r, one residue for Z/m.
using GroupElem = std::vector<std::int64_t>;

class Group {
 public:
  enum class Kind { FreeAbelian, Cyclic };

  static Group free_abelian(int rank);
  static Group cyclic(std::int64_t order);
  static Group trivial() { return free_abelian(0); }

  Kind kind() const { return kind_; }
  /// Number of coordinates of an element.
  int coords() const { return kind_ == Kind::Cyclic ? 1 : rank_; }
  int rank() const { return rank_; }
  std::int64_t order() const { return order_; }  // 0 when infinite
  bool is_finite() const { return kind_ == Kind::Cyclic || rank_ == 0; }
  bool is_trivial() const { return (kind_ == Kind::FreeAbelian && rank_ == 0) || order_ == 1; }

  GroupElem identity() const { return GroupElem(coords(), 0); }
  GroupElem normalize(GroupElem a) const;
  GroupElem add(const GroupElem& a, const GroupElem& b) const;
  GroupElem neg(const GroupElem& a) const;
  GroupElem sub(const GroupElem& a, const GroupElem& b) const { return add(a, neg(b)); }
  bool is_identity(const GroupElem& a) const;
  /// Every element when finite.
  std::vector<GroupElem> all_elements() const;

  std::string format(const GroupElem& a) const;

  friend bool operator==(const Group& a, const Group& b) {
    return a.kind_ == b.kind_ && a.rank_ == b.rank_ && a.order_ == b.order_;
  }

 private:
  Kind kind_ = Kind::FreeAbelian;
  int rank_ = 0;
  std::int64_t order_ = 0;
};

/// Finite box of group elements: [lo, hi]^r for Z^r, all residues for Z/m.
/// The symmetric box [-w, w]^r is the usual choice.
class Window {
 public:
  Window(const Group& g, int half_width) : Window(g, -half_width, half_width) {}
  Window(const Group& g, int lo, int hi);

  const Group& group() const { return group_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  int half_width() const { return hi_ >= -lo_ ? hi_ : -lo_; }
  bool is_symmetric() const { return lo_ == -hi_; }
  const std::vector<GroupElem>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  std::optional<std::size_t> index_of(const GroupElem& a) const;
  bool contains(const GroupElem& a) const { return index_of(a).has_value(); }
  /// Max-norm distance of a from the complement of the box (infinite groups).
  std::int64_t depth(const GroupElem& a) const;

 private:
  Group group_;
  int lo_, hi_;
  std::vector<GroupElem> elements_;
};

}  // namespace qcover
