#include "qcover/decompose.hpp"

#include <random>
#include <stdexcept>

#include "poly.hpp"
#include "qcover/errors.hpp"

namespace qcover {

namespace {

constexpr std::uint64_t kSeed = 0xC0FFEE;
constexpr int kSplitTries = 48;
constexpr int kIsoTries = 8;

Morphism random_combination(const std::vector<Morphism>& basis, const Module& src, const Module& tgt,
                            std::mt19937_64& rng) {
  const Field& f = src.field();
  std::vector<Scalar> c;
  if (f.is_prime()) {
    std::uniform_int_distribution<std::int64_t> d(0, f.characteristic() - 1);
    for (std::size_t i = 0; i < basis.size(); ++i) c.push_back(f.from_int(d(rng)));
  } else {
    std::uniform_int_distribution<std::int64_t> d(-3, 3);
    for (std::size_t i = 0; i < basis.size(); ++i) c.push_back(f.from_int(d(rng)));
  }
  return combine(basis, c, src, tgt);
}

Mat block_diagonal(const Morphism& f) {
  Mat r(f.src().field(), 0, 0);
  for (const auto& m : f.mats()) r = direct_sum(r, m);
  return r;
}

/// Endomorphism given by a polynomial in phi, vertex by vertex.
std::vector<Mat> poly_at(const poly::Poly& p, const Morphism& phi, std::size_t power_n) {
  std::vector<Mat> out;
  for (const auto& m : phi.mats()) out.push_back(power(poly::evaluate(p, m), power_n));
  return out;
}

/// Fitting decomposition of m with respect to an endomorphism g (given per
/// vertex, already raised to a stabilizing power): m = Ker g + Im g.
std::pair<SubObject, SubObject> fitting(const Module& m, const std::vector<Mat>& g) {
  std::vector<Mat> ker, im;
  for (const auto& x : g) {
    ker.push_back(left_kernel_basis(x));
    im.push_back(row_space_basis(x));
  }
  return {submodule(m, ker), submodule(m, im)};
}

/// Matrix of left multiplication by phi on End(M)/J.
Mat top_action(const EndoData& e, const Morphism& phi) {
  const Field& f = phi.src().field();
  const std::size_t n = e.basis.size();
  // coordinates of basis elements, and a complement of J in coordinates
  Mat jcoords(f, e.radical.rows(), n);
  for (std::size_t i = 0; i < e.radical.rows(); ++i) {
    auto c = solve_left(e.flat, e.radical.row(i));
    if (!c) throw std::logic_error("radical element outside End");
    jcoords.set_block(i, 0, *c);
  }
  Mat comp = complement_rows(row_space_basis(jcoords), n);
  Mat full = vstack(row_space_basis(jcoords), comp);
  auto full_inv = inverse(full);
  if (!full_inv) throw std::logic_error("bad complement of the radical");
  const std::size_t k = comp.rows(), off = n - k;
  Mat act(f, k, k);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Scalar> coeffs(n);
    for (std::size_t j = 0; j < n; ++j) coeffs[j] = comp(i, j);
    Morphism c = combine(e.basis, coeffs, phi.src(), phi.src());
    auto coords = solve_left(e.flat, compose(c, phi).flatten());
    if (!coords) throw std::logic_error("product outside End");
    Mat in_full = *coords * *full_inv;
    act.set_block(i, 0, in_full.block(0, off, 1, k));
  }
  return act;
}

std::vector<SubObject> split_rec(const Module& m, std::mt19937_64& rng) {
  if (m.is_zero()) return {};
  EndoData e = endo_data(m);
  if (e.top_dim == 1) return {{m, Morphism::identity(m)}};
  const Field& f = m.field();
  const std::size_t n = m.total_dim();

  for (int attempt = 0; attempt < kSplitTries; ++attempt) {
    Morphism phi = random_combination(e.basis, m, m, rng);
    auto chi = characteristic_polynomial(block_diagonal(phi));
    std::optional<poly::Poly> factor;
    if (f.is_prime()) {
      auto facs = poly::irreducible_factors(f, chi, rng);
      if (facs.size() >= 2) {
        factor = facs.front();
      } else {
        // E/J is a field exactly when phi generates it
        auto tchi = characteristic_polynomial(top_action(e, phi));
        auto tf = poly::irreducible_factors(f, tchi, rng);
        if (tf.size() == 1 && poly::degree(tf.front()) == static_cast<int>(e.top_dim))
          return {{m, Morphism::identity(m)}};
        if (tf.size() >= 2) {
          // a non-field top: some other element has two eigen-factors
          continue;
        }
      }
    } else {
      auto roots = poly::small_rational_roots(f, chi);
      if (!roots.empty()) {
        poly::Poly lin{f.neg(roots.front()), f.one()};
        auto [q, r] = poly::divmod(f, chi, lin);
        (void)r;
        // chi must have another factor for the split to be proper
        poly::Poly rest = q;
        while (poly::degree(rest) > 0 && poly::evaluate(f, rest, roots.front()).is_zero())
          rest = poly::divmod(f, rest, lin).first;
        if (poly::degree(rest) > 0) factor = lin;
      }
    }
    if (!factor) continue;
    auto [ker, im] = fitting(m, poly_at(*factor, phi, n));
    if (ker.module.is_zero() || im.module.is_zero()) continue;
    std::vector<SubObject> out;
    for (const auto* part : {&ker, &im})
      for (auto& s : split_rec(part->module, rng)) out.push_back({s.module, compose(s.map, part->map)});
    return out;
  }
  throw DecompositionInconclusive("could not split a module of dimension vector " + m.dim_vector_string() +
                                  " with endomorphism top of dimension " + std::to_string(e.top_dim));
}

bool iso_indecomposable(const Module& m, const Module& n, const EndoData& em, Morphism* witness) {
  auto mn = hom_basis(m, n);
  auto nm = hom_basis(n, m);
  for (const auto& f : mn)
    for (const auto& g : nm) {
      Morphism gf = compose(f, g);
      if (!in_radical(em, gf)) {
        // gf is a unit of the local ring End(m): f is split mono, hence iso
        if (witness) *witness = f;
        return true;
      }
    }
  return false;
}

}  // namespace

EndoData endo_data(const Module& m) {
  const Field& f = m.field();
  if (f.is_prime() && static_cast<std::size_t>(f.characteristic()) <= m.total_dim())
    throw DecompositionInconclusive("field characteristic does not exceed the module dimension");
  EndoData e;
  e.basis = hom_basis(m, m);
  const std::size_t n = e.basis.size();
  std::size_t width = 0;
  for (auto d : m.dims()) width += d * d;
  e.flat = Mat(f, n, width);
  for (std::size_t i = 0; i < n; ++i) e.flat.set_block(i, 0, e.basis[i].flatten());
  // trace form Tr(b_i b_j) on M
  Mat form(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Scalar t = f.zero();
      for (std::size_t v = 0; v < m.dims().size(); ++v) {
        const Mat& a = e.basis[i].at(static_cast<int>(v));
        const Mat& b = e.basis[j].at(static_cast<int>(v));
        for (std::size_t r = 0; r < a.rows(); ++r)
          for (std::size_t k = 0; k < a.cols(); ++k) t = f.add(t, f.mul(a(r, k), b(k, r)));
      }
      form(i, j) = form(j, i) = t;
    }
  Mat ker = kernel_basis(form);  // columns: coordinates of radical elements
  e.radical = ker.transpose() * e.flat;
  e.top_dim = n - ker.cols();
  return e;
}

std::vector<Morphism> radical_endomorphisms(const Module& m) {
  EndoData e = endo_data(m);
  std::vector<Morphism> out;
  for (std::size_t i = 0; i < e.radical.rows(); ++i) {
    auto c = solve_left(e.flat, e.radical.row(i));
    if (!c) throw std::logic_error("radical element outside End");
    std::vector<Scalar> coeffs(c->cols());
    for (std::size_t k = 0; k < c->cols(); ++k) coeffs[k] = (*c)(0, k);
    out.push_back(combine(e.basis, coeffs, m, m));
  }
  return out;
}

bool in_radical(const EndoData& e, const Morphism& f) {
  Mat v = f.flatten();
  if (v.is_zero()) return true;
  if (e.radical.rows() == 0) return false;
  return row_space_contains(e.radical, v);
}

std::vector<SubObject> split_summands(const Module& m) {
  std::mt19937_64 rng(kSeed);
  auto parts = split_rec(m, rng);
  if (!parts.empty()) {
    DirectSum s = direct_sum([&] {
      std::vector<Module> mods;
      for (const auto& p : parts) mods.push_back(p.module);
      return mods;
    }(), m.algebra());
    std::vector<Morphism> incs;
    for (const auto& p : parts) incs.push_back(p.map);
    if (!from_sum(s, incs, m).is_iso()) throw std::logic_error("decomposition certificate failed");
  }
  return parts;
}

std::vector<Summand> decompose(const Module& m) {
  std::vector<Summand> out;
  for (const auto& p : split_summands(m)) {
    bool merged = false;
    for (auto& s : out)
      if (is_isomorphic(s.module, p.module)) {
        ++s.multiplicity;
        merged = true;
        break;
      }
    if (!merged) out.push_back({p.module, 1});
  }
  return out;
}

bool is_indecomposable(const Module& m) {
  if (m.is_zero()) return false;
  if (endo_data(m).top_dim == 1) return true;
  return split_summands(m).size() == 1;
}

std::optional<Morphism> find_isomorphism(const Module& m, const Module& n) {
  if (m.algebra().get() != n.algebra().get()) throw CarrierMismatch("isomorphism test across carriers");
  if (m.dims() != n.dims()) return std::nullopt;
  if (m.is_zero()) return Morphism::zero(m, n);
  auto h = hom_basis(m, n);
  if (h.empty()) return std::nullopt;
  std::mt19937_64 rng(kSeed);
  for (int i = 0; i < kIsoTries; ++i) {
    Morphism f = random_combination(h, m, n, rng);
    if (f.is_iso()) return f;
  }
  // exact criterion through the decomposition
  auto pm = split_summands(m);
  if (pm.size() == 1) {
    Morphism w;
    if (!iso_indecomposable(m, n, endo_data(m), &w)) return std::nullopt;
    return w;
  }
  auto pn = split_summands(n);
  if (pm.size() != pn.size()) return std::nullopt;
  std::vector<bool> used(pn.size(), false);
  std::vector<Morphism> pieces(pm.size());
  std::vector<std::size_t> match(pm.size());
  for (std::size_t i = 0; i < pm.size(); ++i) {
    bool found = false;
    for (std::size_t j = 0; j < pn.size() && !found; ++j) {
      if (used[j] || pm[i].module.dims() != pn[j].module.dims()) continue;
      auto iso = find_isomorphism(pm[i].module, pn[j].module);
      if (iso) {
        used[j] = true;
        pieces[i] = *iso;
        match[i] = j;
        found = true;
      }
    }
    if (!found) return std::nullopt;
  }
  // assemble m -> (+) pm -> (+) pn -> n
  std::vector<Module> mods_m, mods_n;
  for (const auto& p : pm) mods_m.push_back(p.module);
  for (const auto& p : pn) mods_n.push_back(p.module);
  DirectSum sm = direct_sum(mods_m, m.algebra()), sn = direct_sum(mods_n, n.algebra());
  std::vector<Morphism> inc_m, inc_n;
  for (const auto& p : pm) inc_m.push_back(p.map);
  for (const auto& p : pn) inc_n.push_back(p.map);
  Morphism from_m = from_sum(sm, inc_m, m);
  auto inv_m = [&]() {
    std::vector<Mat> mats;
    for (const auto& x : from_m.mats()) mats.push_back(*inverse(x));
    return Morphism(m, sm.sum, mats);
  }();
  std::vector<Morphism> comps;
  for (std::size_t i = 0; i < pm.size(); ++i) comps.push_back(compose(pieces[i], sn.inclusions[match[i]]));
  Morphism mid = from_sum(sm, comps, sn.sum);
  Morphism to_n = from_sum(sn, inc_n, n);
  Morphism total = compose(compose(inv_m, mid), to_n);
  if (!total.is_iso() || !total.commutes()) throw std::logic_error("assembled isomorphism failed to verify");
  return total;
}

bool is_isomorphic(const Module& m, const Module& n) { return find_isomorphism(m, n).has_value(); }

}  // namespace qcover
