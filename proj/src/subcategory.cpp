#include "qcover/subcategory.hpp"

#include "qcover/decompose.hpp"
#include "qcover/homological.hpp"
#include "qcover/indecomposables.hpp"

namespace qcover {

Carrier Carrier::downstairs() const {
  if (!covering) return *this;
  return plain(covering->base->algebra);
}

std::vector<int> Carrier::fundamental_vertices() const {
  if (covering) return qcover::fundamental_vertices(*covering);
  std::vector<int> out;
  for (int x = 0; x < algebra->num_vertices(); ++x) out.push_back(x);
  return out;
}

std::size_t Carrier::ext(const Module& x, const Module& y, int i) const {
  if (covering) return twisted_ext_sum(*covering, x, y, i);
  return ext_dim(x, y, i);
}

bool Carrier::same_class(const Module& x, const Module& y) const {
  if (covering) return twist_equivalent(*covering, x, y).has_value();
  return x.dims() == y.dims() && is_isomorphic(x, y);
}

Module Carrier::normalize(const Module& m) const { return covering ? recenter(*covering, m) : m; }

std::vector<Module> Carrier::pool(std::size_t dimcap) const {
  auto all = list_indecomposables(algebra, dimcap);
  if (!covering) return all;
  std::vector<Module> reps;
  for (const auto& r : twist_classes(*covering, all).reps) reps.push_back(recenter(*covering, r));
  return reps;
}

Module Carrier::push_down(const Module& m) const { return covering ? qcover::push_down(*covering, m) : m; }

int generator_index(const Carrier& c, const SubcategorySpec& u, const Module& m) {
  for (std::size_t i = 0; i < u.generators.size(); ++i)
    if (c.same_class(u.generators[i], m)) return static_cast<int>(i);
  return -1;
}

SubcategorySpec make_subcategory(const Carrier& c, const std::vector<Module>& modules) {
  SubcategorySpec u;
  u.twist_closed = c.is_covering();
  for (const auto& m : modules)
    for (const auto& s : split_summands(m))
      if (generator_index(c, u, s.module) < 0) u.generators.push_back(c.normalize(s.module));
  return u;
}

bool in_add(const Carrier& c, const SubcategorySpec& u, const Module& m) {
  if (m.is_zero()) return true;
  for (const auto& s : split_summands(m))
    if (generator_index(c, u, s.module) < 0) return false;
  return true;
}

bool same_subcategory(const Carrier& c, const SubcategorySpec& a, const SubcategorySpec& b) {
  if (a.generators.size() != b.generators.size()) return false;
  for (const auto& g : a.generators)
    if (generator_index(c, b, g) < 0) return false;
  return true;
}

}  // namespace qcover
