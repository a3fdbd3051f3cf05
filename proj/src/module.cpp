#include "qcover/module.hpp"

#include <sstream>
#include <stdexcept>

#include "qcover/errors.hpp"

namespace qcover {

using nlohmann::json;

Module::Module(Algebra::Ptr alg, std::vector<std::size_t> dims, std::vector<Mat> maps) {
  if (!alg) throw std::invalid_argument("module without algebra");
  if (static_cast<int>(dims.size()) != alg->num_vertices()) throw DimensionMismatch("one dimension per vertex required");
  if (maps.size() != alg->quiver().arrows.size()) throw DimensionMismatch("one matrix per arrow required");
  for (std::size_t a = 0; a < maps.size(); ++a) {
    const Arrow& ar = alg->arrow(static_cast<int>(a));
    if (maps[a].rows() != dims[ar.src] || maps[a].cols() != dims[ar.tgt]) {
      if (maps[a].rows() == 0 && maps[a].cols() == 0) {
        maps[a] = Mat(alg->field(), dims[ar.src], dims[ar.tgt]);
        continue;
      }
      throw DimensionMismatch("matrix for arrow '" + ar.id + "' has shape " + std::to_string(maps[a].rows()) + "x" +
                              std::to_string(maps[a].cols()));
    }
  }
  auto d = std::make_shared<Data>();
  d->alg = std::move(alg);
  d->dims = std::move(dims);
  d->maps = std::move(maps);
  for (auto v : d->dims) d->total += v;
  std::ostringstream os;
  os << reinterpret_cast<std::uintptr_t>(d->alg.get()) << '|';
  for (auto v : d->dims) os << v << ',';
  for (const auto& m : d->maps) {
    os << '|';
    for (const auto& s : m.data()) os << s.num << '/' << s.den << ' ';
  }
  d->key = os.str();
  d_ = std::move(d);
}

Module Module::zero(Algebra::Ptr alg) {
  std::vector<std::size_t> dims(alg->num_vertices(), 0);
  std::vector<Mat> maps(alg->quiver().arrows.size(), Mat(alg->field(), 0, 0));
  return Module(std::move(alg), std::move(dims), std::move(maps));
}

Module Module::simple(Algebra::Ptr alg, int v) {
  std::vector<std::size_t> dims(alg->num_vertices(), 0);
  dims[v] = 1;
  std::vector<Mat> maps;
  for (const auto& ar : alg->quiver().arrows) maps.emplace_back(alg->field(), dims[ar.src], dims[ar.tgt]);
  return Module(std::move(alg), std::move(dims), std::move(maps));
}

std::vector<int> Module::support() const {
  std::vector<int> s;
  for (std::size_t v = 0; v < dims().size(); ++v)
    if (dims()[v]) s.push_back(static_cast<int>(v));
  return s;
}

Mat Module::act(const Path& p) const {
  Mat r = Mat::identity(field(), dim(p.src));
  for (int a : p.arrows) r = r * map(a);
  return r;
}

Mat Module::act_element(int x, int y, const Mat& u) const {
  const Algebra& alg = *algebra();
  auto b = alg.basis(x, y);
  Mat r(field(), dim(x), dim(y));
  for (std::size_t i = 0; i < b.size(); ++i)
    if (!u(0, i).is_zero()) r = r + act(b[i]).scaled(u(0, i));
  return r;
}

void Module::validate() const {
  const auto& q = algebra()->quiver();
  for (std::size_t r = 0; r < q.relations.size(); ++r) {
    const Relation& rel = q.relations[r];
    const int s = rel.front().path.src, t = rel.front().path.tgt;
    Mat acc(field(), dim(s), dim(t));
    for (const auto& term : rel) acc = acc + act(term.path).scaled(term.coeff);
    if (!acc.is_zero())
      throw RelationViolated("relation " + std::to_string(r) + " (" + q.format_path(rel.front().path) +
                             ") does not vanish at vertex " + q.vertices[s]);
  }
}

Module Module::rebind(Algebra::Ptr alg) const {
  if (alg.get() == algebra().get()) return *this;
  if (!alg->same_presentation(*algebra())) throw CarrierMismatch("cannot rebind module to a different presentation");
  return Module(std::move(alg), dims(), maps());
}

namespace {

json mat_to_json(const Mat& m) {
  json rows = json::array();
  const Field& f = m.field();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Scalar& s = m(i, j);
      if (s.den == 1)
        row.push_back(s.num);
      else
        row.push_back(f.format(s));
    }
    rows.push_back(row);
  }
  return rows;
}

Mat mat_from_json(const Field& f, const json& j, std::size_t r, std::size_t c, const std::string& what) {
  Mat m(f, r, c);
  if (!j.is_array() || j.size() != r) throw SchemaError("matrix for " + what + " must have " + std::to_string(r) + " rows");
  for (std::size_t i = 0; i < r; ++i) {
    if (!j[i].is_array() || j[i].size() != c)
      throw SchemaError("matrix for " + what + " must have " + std::to_string(c) + " columns");
    for (std::size_t k = 0; k < c; ++k) {
      const json& e = j[i][k];
      if (e.is_number_integer())
        m(i, k) = f.from_int(e.get<std::int64_t>());
      else if (e.is_string())
        m(i, k) = f.parse(e.get<std::string>());
      else
        throw SchemaError("bad matrix entry for " + what);
    }
  }
  return m;
}

}  // namespace

json Module::to_json() const {
  const auto& q = algebra()->quiver();
  json j;
  j["dims"] = json::object();
  for (std::size_t v = 0; v < dims().size(); ++v)
    if (dims()[v]) j["dims"][q.vertices[v]] = dims()[v];
  j["arrowmaps"] = json::object();
  for (std::size_t a = 0; a < maps().size(); ++a)
    if (!map(static_cast<int>(a)).empty()) j["arrowmaps"][q.arrows[a].id] = mat_to_json(map(static_cast<int>(a)));
  return j;
}

Module Module::from_json(Algebra::Ptr alg, const json& j) {
  if (!j.is_object() || !j.contains("dims")) throw SchemaError("module literal needs 'dims'");
  const auto& q = alg->quiver();
  std::vector<std::size_t> dims(q.vertices.size(), 0);
  for (const auto& [name, val] : j["dims"].items()) {
    auto v = q.vertex_index(name);
    if (!v) throw SchemaError("module mentions unknown vertex '" + name + "'");
    if (!val.is_number_unsigned() && !(val.is_number_integer() && val.get<std::int64_t>() >= 0))
      throw SchemaError("bad dimension for vertex '" + name + "'");
    dims[*v] = val.get<std::size_t>();
  }
  std::vector<Mat> maps;
  for (const auto& ar : q.arrows) maps.emplace_back(alg->field(), dims[ar.src], dims[ar.tgt]);
  if (j.contains("arrowmaps")) {
    for (const auto& [name, val] : j["arrowmaps"].items()) {
      auto a = q.arrow_index(name);
      if (!a) throw SchemaError("module mentions unknown arrow '" + name + "'");
      const Arrow& ar = q.arrows[*a];
      if (dims[ar.src] == 0 || dims[ar.tgt] == 0) continue;
      maps[*a] = mat_from_json(alg->field(), val, dims[ar.src], dims[ar.tgt], "arrow '" + name + "'");
    }
  }
  Module m(std::move(alg), std::move(dims), std::move(maps));
  m.validate();
  return m;
}

std::string Module::dim_vector_string() const {
  std::string s = "(";
  for (std::size_t v = 0; v < dims().size(); ++v) {
    if (v) s += ",";
    s += std::to_string(dims()[v]);
  }
  return s + ")";
}

// ---------------------------------------------------------------------------

Morphism::Morphism(Module src, Module tgt, std::vector<Mat> mats)
    : src_(std::move(src)), tgt_(std::move(tgt)), mats_(std::move(mats)) {
  if (src_.algebra().get() != tgt_.algebra().get()) throw CarrierMismatch("morphism between different carriers");
  if (mats_.size() != src_.dims().size()) throw DimensionMismatch("one matrix per vertex required");
  for (std::size_t v = 0; v < mats_.size(); ++v)
    if (mats_[v].rows() != src_.dims()[v] || mats_[v].cols() != tgt_.dims()[v])
      throw DimensionMismatch("morphism component has wrong shape");
}

Morphism Morphism::zero(const Module& src, const Module& tgt) {
  std::vector<Mat> mats;
  for (std::size_t v = 0; v < src.dims().size(); ++v) mats.emplace_back(src.field(), src.dims()[v], tgt.dims()[v]);
  return Morphism(src, tgt, std::move(mats));
}

Morphism Morphism::identity(const Module& m) {
  std::vector<Mat> mats;
  for (auto d : m.dims()) mats.push_back(Mat::identity(m.field(), d));
  return Morphism(m, m, std::move(mats));
}

bool Morphism::is_zero() const {
  for (const auto& m : mats_)
    if (!m.is_zero()) return false;
  return true;
}

bool Morphism::is_iso() const {
  for (const auto& m : mats_) {
    if (m.rows() != m.cols()) return false;
    if (rank(m) != m.rows()) return false;
  }
  return true;
}

bool Morphism::commutes() const {
  const Algebra& alg = *src_.algebra();
  for (std::size_t a = 0; a < alg.quiver().arrows.size(); ++a) {
    const Arrow& ar = alg.arrow(static_cast<int>(a));
    if (!(src_.map(static_cast<int>(a)) * mats_[ar.tgt] == mats_[ar.src] * tgt_.map(static_cast<int>(a)))) return false;
  }
  return true;
}

Mat Morphism::flatten() const {
  std::size_t n = 0;
  for (const auto& m : mats_) n += m.rows() * m.cols();
  Mat r(src_.field(), 1, n);
  std::size_t k = 0;
  for (const auto& m : mats_)
    for (const auto& s : m.data()) r(0, k++) = s;
  return r;
}

Morphism Morphism::operator+(const Morphism& o) const {
  std::vector<Mat> m;
  for (std::size_t v = 0; v < mats_.size(); ++v) m.push_back(mats_[v] + o.mats_[v]);
  return Morphism(src_, tgt_, std::move(m));
}

Morphism Morphism::scaled(const Scalar& s) const {
  std::vector<Mat> m;
  for (const auto& x : mats_) m.push_back(x.scaled(s));
  return Morphism(src_, tgt_, std::move(m));
}

Morphism compose(const Morphism& f, const Morphism& g) {
  if (f.tgt().key() != g.src().key()) {
    if (f.tgt().dims() != g.src().dims()) throw DimensionMismatch("composing non-composable morphisms");
  }
  std::vector<Mat> m;
  for (std::size_t v = 0; v < f.mats().size(); ++v) m.push_back(f.at(static_cast<int>(v)) * g.at(static_cast<int>(v)));
  return Morphism(f.src(), g.tgt(), std::move(m));
}

std::vector<Morphism> hom_basis(const Module& m, const Module& n) {
  if (m.algebra().get() != n.algebra().get()) throw CarrierMismatch("Hom between modules over different carriers");
  const Algebra& alg = *m.algebra();
  const Field& f = m.field();
  const std::size_t nv = m.dims().size();
  std::vector<std::size_t> off(nv + 1, 0);
  for (std::size_t v = 0; v < nv; ++v) off[v + 1] = off[v] + m.dim(static_cast<int>(v)) * n.dim(static_cast<int>(v));
  const std::size_t unknowns = off[nv];
  if (unknowns == 0) return {};

  std::size_t rows = 0;
  for (std::size_t a = 0; a < alg.quiver().arrows.size(); ++a) {
    const Arrow& ar = alg.arrow(static_cast<int>(a));
    rows += m.dim(ar.src) * n.dim(ar.tgt);
  }
  Mat sys(f, rows, unknowns);
  std::size_t r0 = 0;
  for (std::size_t a = 0; a < alg.quiver().arrows.size(); ++a) {
    const Arrow& ar = alg.arrow(static_cast<int>(a));
    const std::size_t dmx = m.dim(ar.src), dmy = m.dim(ar.tgt), dnx = n.dim(ar.src), dny = n.dim(ar.tgt);
    const Mat& ma = m.map(static_cast<int>(a));
    const Mat& na = n.map(static_cast<int>(a));
    // M(a) f_y - f_x N(a) = 0, entry (i, j)
    for (std::size_t i = 0; i < dmx; ++i)
      for (std::size_t j = 0; j < dny; ++j) {
        std::size_t row = r0 + i * dny + j;
        for (std::size_t k = 0; k < dmy; ++k)
          if (!ma(i, k).is_zero()) {
            auto& e = sys(row, off[ar.tgt] + k * dny + j);
            e = f.add(e, ma(i, k));
          }
        for (std::size_t k = 0; k < dnx; ++k)
          if (!na(k, j).is_zero()) {
            auto& e = sys(row, off[ar.src] + i * dnx + k);
            e = f.sub(e, na(k, j));
          }
      }
    r0 += dmx * dny;
  }
  Mat ker = kernel_basis(sys);
  std::vector<Morphism> out;
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    std::vector<Mat> mats;
    for (std::size_t v = 0; v < nv; ++v) {
      Mat fv(f, m.dim(static_cast<int>(v)), n.dim(static_cast<int>(v)));
      for (std::size_t i = 0; i < fv.rows(); ++i)
        for (std::size_t j = 0; j < fv.cols(); ++j) fv(i, j) = ker(off[v] + i * fv.cols() + j, c);
      mats.push_back(std::move(fv));
    }
    out.emplace_back(m, n, std::move(mats));
  }
  return out;
}

std::size_t hom_dim(const Module& m, const Module& n) { return hom_basis(m, n).size(); }

Morphism combine(const std::vector<Morphism>& basis, const std::vector<Scalar>& coeffs, const Module& src,
                 const Module& tgt) {
  Morphism r = Morphism::zero(src, tgt);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!coeffs[i].is_zero()) r = r + basis[i].scaled(coeffs[i]);
  return r;
}

// ---------------------------------------------------------------------------

SubObject submodule(const Module& m, const std::vector<Mat>& rows) {
  const Algebra& alg = *m.algebra();
  std::vector<std::size_t> dims;
  for (const auto& r : rows) dims.push_back(r.rows());
  std::vector<Mat> maps;
  for (std::size_t a = 0; a < alg.quiver().arrows.size(); ++a) {
    const Arrow& ar = alg.arrow(static_cast<int>(a));
    const Mat& rx = rows[ar.src];
    const Mat& ry = rows[ar.tgt];
    if (rx.rows() == 0 || ry.rows() == 0) {
      if (rx.rows() != 0 && !(rx * m.map(static_cast<int>(a))).is_zero())
        throw std::logic_error("subspace is not a submodule");
      maps.emplace_back(m.field(), rx.rows(), ry.rows());
      continue;
    }
    auto x = solve_left(ry, rx * m.map(static_cast<int>(a)));
    if (!x) throw std::logic_error("subspace is not a submodule");
    maps.push_back(std::move(*x));
  }
  Module sub(m.algebra(), std::move(dims), std::move(maps));
  return {sub, Morphism(sub, m, rows)};
}

SubObject quotient(const Module& m, const std::vector<Mat>& rows) {
  const Algebra& alg = *m.algebra();
  const Field& f = m.field();
  const std::size_t nv = m.dims().size();
  std::vector<Mat> comp(nv), proj(nv);
  std::vector<std::size_t> dims(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    const std::size_t d = m.dim(static_cast<int>(v));
    comp[v] = complement_rows(rows[v], d);
    dims[v] = comp[v].rows();
    // coordinates of the standard basis w.r.t. [sub; comp], keep comp part
    Mat full = vstack(rows[v], comp[v]);
    if (d == 0) {
      proj[v] = Mat(f, 0, 0);
      continue;
    }
    auto inv = inverse(full);
    if (!inv) throw std::logic_error("quotient: rows are not independent");
    proj[v] = inv->block(0, rows[v].rows(), d, dims[v]);
  }
  std::vector<Mat> maps;
  for (std::size_t a = 0; a < alg.quiver().arrows.size(); ++a) {
    const Arrow& ar = alg.arrow(static_cast<int>(a));
    maps.push_back(comp[ar.src] * m.map(static_cast<int>(a)) * proj[ar.tgt]);
  }
  Module q(m.algebra(), std::move(dims), std::move(maps));
  return {q, Morphism(m, q, proj)};
}

SubObject kernel(const Morphism& f) {
  std::vector<Mat> rows;
  for (const auto& m : f.mats()) rows.push_back(left_kernel_basis(m));
  return submodule(f.src(), rows);
}

SubObject image(const Morphism& f) {
  std::vector<Mat> rows;
  for (const auto& m : f.mats()) rows.push_back(row_space_basis(m));
  return submodule(f.tgt(), rows);
}

SubObject cokernel(const Morphism& f) {
  std::vector<Mat> rows;
  for (const auto& m : f.mats()) rows.push_back(row_space_basis(m));
  return quotient(f.tgt(), rows);
}

DirectSum direct_sum(const std::vector<Module>& parts, const Algebra::Ptr& alg) {
  const Field& f = alg->field();
  const std::size_t nv = alg->num_vertices();
  std::vector<std::size_t> dims(nv, 0);
  for (const auto& p : parts)
    for (std::size_t v = 0; v < nv; ++v) dims[v] += p.dim(static_cast<int>(v));
  std::vector<Mat> maps;
  for (std::size_t a = 0; a < alg->quiver().arrows.size(); ++a) {
    const Arrow& ar = alg->arrow(static_cast<int>(a));
    Mat m(f, dims[ar.src], dims[ar.tgt]);
    std::size_t r = 0, c = 0;
    for (const auto& p : parts) {
      m.set_block(r, c, p.map(static_cast<int>(a)));
      r += p.dim(ar.src);
      c += p.dim(ar.tgt);
    }
    maps.push_back(std::move(m));
  }
  DirectSum s{Module(alg, dims, std::move(maps)), {}, {}};
  std::vector<std::size_t> off(nv, 0);
  for (const auto& p : parts) {
    std::vector<Mat> inc, pr;
    for (std::size_t v = 0; v < nv; ++v) {
      const std::size_t d = p.dim(static_cast<int>(v));
      Mat i(f, d, dims[v]), q(f, dims[v], d);
      for (std::size_t k = 0; k < d; ++k) {
        i(k, off[v] + k) = f.one();
        q(off[v] + k, k) = f.one();
      }
      off[v] += d;
      inc.push_back(std::move(i));
      pr.push_back(std::move(q));
    }
    s.inclusions.emplace_back(p, s.sum, std::move(inc));
    s.projections.emplace_back(s.sum, p, std::move(pr));
  }
  return s;
}

Morphism from_sum(const DirectSum& s, const std::vector<Morphism>& components, const Module& tgt) {
  Morphism r = Morphism::zero(s.sum, tgt);
  for (std::size_t i = 0; i < components.size(); ++i) r = r + compose(s.projections[i], components[i]);
  return r;
}

Morphism to_sum(const Module& src, const DirectSum& s, const std::vector<Morphism>& components) {
  Morphism r = Morphism::zero(src, s.sum);
  for (std::size_t i = 0; i < components.size(); ++i) r = r + compose(components[i], s.inclusions[i]);
  return r;
}

// ---------------------------------------------------------------------------

std::vector<Mat> radical_rows(const Module& m) {
  const Algebra& alg = *m.algebra();
  std::vector<Mat> rows;
  for (int y = 0; y < alg.num_vertices(); ++y) {
    Mat acc(m.field(), 0, m.dim(y));
    for (int a : alg.in_arrows(y)) acc = vstack(acc, m.map(a));
    rows.push_back(row_space_basis(acc));
  }
  return rows;
}

std::vector<Mat> socle_rows(const Module& m) {
  const Algebra& alg = *m.algebra();
  std::vector<Mat> rows;
  for (int x = 0; x < alg.num_vertices(); ++x) {
    Mat acc(m.field(), m.dim(x), 0);
    for (int a : alg.out_arrows(x)) acc = hstack(acc, m.map(a));
    rows.push_back(acc.cols() == 0 ? Mat::identity(m.field(), m.dim(x)) : left_kernel_basis(acc));
  }
  return rows;
}

SubObject radical(const Module& m) { return submodule(m, radical_rows(m)); }
SubObject top(const Module& m) { return quotient(m, radical_rows(m)); }
SubObject socle(const Module& m) { return submodule(m, socle_rows(m)); }

std::vector<std::size_t> top_dims(const Module& m) {
  auto r = radical_rows(m);
  std::vector<std::size_t> d;
  for (std::size_t v = 0; v < r.size(); ++v) d.push_back(m.dim(static_cast<int>(v)) - r[v].rows());
  return d;
}

std::vector<std::size_t> socle_dims(const Module& m) {
  std::vector<std::size_t> d;
  for (const auto& r : socle_rows(m)) d.push_back(r.rows());
  return d;
}

Module projective_at(const Algebra::Ptr& alg, int x, bool strict) {
  if (strict && alg->border_out(x))
    throw WindowTooSmall("projective at " + alg->quiver().vertices[x] + " reaches beyond the window");
  std::vector<std::size_t> dims;
  for (int y = 0; y < alg->num_vertices(); ++y) dims.push_back(alg->dim(x, y));
  std::vector<Mat> maps;
  for (std::size_t a = 0; a < alg->quiver().arrows.size(); ++a) maps.push_back(alg->right_mult(x, static_cast<int>(a)));
  return Module(alg, std::move(dims), std::move(maps));
}

Module injective_at(const Algebra::Ptr& alg, int x, bool strict) {
  if (strict && alg->border_in(x))
    throw WindowTooSmall("injective at " + alg->quiver().vertices[x] + " reaches beyond the window");
  std::vector<std::size_t> dims;
  for (int y = 0; y < alg->num_vertices(); ++y) dims.push_back(alg->dim(y, x));
  std::vector<Mat> maps;
  for (std::size_t a = 0; a < alg->quiver().arrows.size(); ++a)
    maps.push_back(alg->left_mult(static_cast<int>(a), x).transpose());
  return Module(alg, std::move(dims), std::move(maps));
}

Morphism from_projective(const Module& px, int x, const Module& m, const Mat& elem) {
  const Algebra& alg = *m.algebra();
  std::vector<Mat> mats;
  for (int y = 0; y < alg.num_vertices(); ++y) {
    auto b = alg.basis(x, y);
    Mat fy(m.field(), b.size(), m.dim(y));
    for (std::size_t i = 0; i < b.size(); ++i) fy.set_block(i, 0, elem * m.act(b[i]));
    mats.push_back(std::move(fy));
  }
  return Morphism(px, m, std::move(mats));
}

Mat projective_generator_image(const Morphism& f, int x) {
  auto b = f.src().algebra()->basis(x, x);
  for (std::size_t i = 0; i < b.size(); ++i)
    if (b[i].arrows.empty()) return f.at(x).row(i);
  throw std::logic_error("idempotent missing from path basis");
}

Module dual(const Module& m) {
  auto op = m.algebra()->opposite();
  std::vector<Mat> maps;
  for (const auto& a : m.maps()) maps.push_back(a.transpose());
  return Module(op, m.dims(), std::move(maps));
}

Morphism dual(const Morphism& f) {
  std::vector<Mat> mats;
  for (const auto& m : f.mats()) mats.push_back(m.transpose());
  return Morphism(dual(f.tgt()), dual(f.src()), std::move(mats));
}

Cover projective_cover(const Module& m, bool strict) {
  const auto& alg = m.algebra();
  auto rad = radical_rows(m);
  std::vector<Module> parts;
  std::vector<int> verts;
  std::vector<Mat> gens;
  for (int x = 0; x < alg->num_vertices(); ++x) {
    if (m.dim(x) == 0) continue;
    Mat comp = complement_rows(rad[x], m.dim(x));
    if (comp.rows() == 0) continue;
    Module px = projective_at(alg, x, strict);
    for (std::size_t i = 0; i < comp.rows(); ++i) {
      parts.push_back(px);
      verts.push_back(x);
      gens.push_back(comp.row(i));
    }
  }
  DirectSum s = direct_sum(parts, alg);
  std::vector<Morphism> comps;
  for (std::size_t i = 0; i < parts.size(); ++i) comps.push_back(from_projective(parts[i], verts[i], m, gens[i]));
  return {s.sum, from_sum(s, comps, m), verts};
}

Cover injective_envelope(const Module& m, bool strict) {
  Cover c = projective_cover(dual(m), strict);
  // D(c.map): D D M -> D P, where D D M carries exactly the data of M
  Morphism d = dual(c.map);
  return {d.tgt(), Morphism(m, d.tgt(), d.mats()), c.vertices};
}

bool is_projective(const Module& m) {
  if (m.is_zero()) return true;
  auto t = top_dims(m);
  std::size_t total = 0;
  for (std::size_t x = 0; x < t.size(); ++x)
    for (int y = 0; y < m.algebra()->num_vertices(); ++y) total += t[x] * m.algebra()->dim(static_cast<int>(x), y);
  return total == m.total_dim();
}

bool is_injective(const Module& m) {
  if (m.is_zero()) return true;
  auto s = socle_dims(m);
  std::size_t total = 0;
  for (std::size_t x = 0; x < s.size(); ++x)
    for (int y = 0; y < m.algebra()->num_vertices(); ++y) total += s[x] * m.algebra()->dim(y, static_cast<int>(x));
  return total == m.total_dim();
}

}  // namespace qcover
