#include "qhlin/rep_oracle.hpp"

#include <algorithm>

#include "qhlin/errors.hpp"

namespace qhlin {

int QuiverRep::total_dim() const {
  int s = 0;
  for (int d : dims) s += d;
  return s;
}

bool operator==(const QuiverRep& a, const QuiverRep& b) { return a.dims == b.dims && a.maps == b.maps; }

void check_rep(const LinearQuiver& q, const QuiverRep& m) {
  if (static_cast<int>(m.dims.size()) != q.size() || static_cast<int>(m.maps.size()) != q.edge_count())
    throw InputError("representation does not match quiver size");
  for (int k = 1; k <= q.edge_count(); ++k) {
    const Matrix& a = m.maps[k - 1];
    if (static_cast<int>(a.rows()) != m.dim(q.arrow_target(k)) ||
        static_cast<int>(a.cols()) != m.dim(q.arrow_source(k)))
      throw InputError("arrow matrix shape does not match dimension vector");
  }
}

QuiverRep zero_rep(const LinearQuiver& q) {
  QuiverRep m;
  m.dims.assign(q.size(), 0);
  m.maps.assign(q.edge_count(), Matrix());
  return m;
}

QuiverRep rep_of_interval(const LinearQuiver& q, const Interval& x) {
  if (!x.empty() && (x.a < 1 || x.b > q.size()))
    throw InputError("interval " + x.str() + " outside quiver");
  QuiverRep m;
  m.dims.assign(q.size(), 0);
  for (int v = 1; v <= q.size(); ++v) m.dims[v - 1] = x.contains(v) ? 1 : 0;
  for (int k = 1; k <= q.edge_count(); ++k) {
    Matrix a(m.dim(q.arrow_target(k)), m.dim(q.arrow_source(k)));
    if (x.contains(k) && x.contains(k + 1)) a(0, 0) = 1;
    m.maps.push_back(std::move(a));
  }
  return m;
}

QuiverRep direct_sum(const QuiverRep& m, const QuiverRep& n) {
  QuiverRep s;
  for (std::size_t v = 0; v < m.dims.size(); ++v) s.dims.push_back(m.dims[v] + n.dims[v]);
  for (std::size_t k = 0; k < m.maps.size(); ++k) {
    const Matrix &a = m.maps[k], &b = n.maps[k];
    Matrix c(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t col = 0; col < a.cols(); ++col) c(r, col) = a(r, col);
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t col = 0; col < b.cols(); ++col) c(a.rows() + r, a.cols() + col) = b(r, col);
    s.maps.push_back(std::move(c));
  }
  return s;
}

namespace {

int reach(const LinearQuiver& q, int v, bool forward, int step) {
  for (;;) {
    const int w = v + step;
    if (w < 1 || w > q.size()) return v;
    const bool outgoing = q.arrow_source(std::min(v, w)) == v;
    if (outgoing != forward) return v;
    v = w;
  }
}

}  // namespace

Interval projective_support(const LinearQuiver& q, int v) {
  q.check_vertex(v);
  return {reach(q, v, true, -1), reach(q, v, true, +1)};
}

Interval injective_support(const LinearQuiver& q, int v) {
  q.check_vertex(v);
  return {reach(q, v, false, -1), reach(q, v, false, +1)};
}

std::vector<Rational> flatten(const RepMap& f) {
  std::vector<Rational> x;
  for (const auto& m : f)
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) x.push_back(m(r, c));
  return x;
}

RepMap unflatten(const std::vector<Rational>& x, const QuiverRep& m, const QuiverRep& n) {
  RepMap f;
  std::size_t at = 0;
  for (std::size_t v = 0; v < m.dims.size(); ++v) {
    Matrix a(n.dims[v], m.dims[v]);
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) = x[at++];
    f.push_back(std::move(a));
  }
  return f;
}

namespace {

// Linear system whose kernel is Hom(M, N), unknowns are the flattened blocks.
Matrix intertwiner_system(const LinearQuiver& q, const QuiverRep& m, const QuiverRep& n) {
  std::vector<std::size_t> off(q.size() + 1, 0);
  for (int v = 1; v <= q.size(); ++v)
    off[v] = off[v - 1] + static_cast<std::size_t>(m.dim(v)) * n.dim(v);
  std::size_t eqs = 0;
  for (int k = 1; k <= q.edge_count(); ++k)
    eqs += static_cast<std::size_t>(n.dim(q.arrow_target(k))) * m.dim(q.arrow_source(k));
  Matrix sys(eqs, off[q.size()]);
  std::size_t row = 0;
  for (int k = 1; k <= q.edge_count(); ++k) {
    const int s = q.arrow_source(k), t = q.arrow_target(k);
    const Matrix &mk = m.maps[k - 1], &nk = n.maps[k - 1];
    const int ms = m.dim(s), mt = m.dim(t), ns = n.dim(s), nt = n.dim(t);
    for (int r = 0; r < nt; ++r)
      for (int c = 0; c < ms; ++c, ++row) {
        for (int j = 0; j < mt; ++j)
          if (!mk(j, c).is_zero()) sys(row, off[t - 1] + r * mt + j) += mk(j, c);
        for (int j = 0; j < ns; ++j)
          if (!nk(r, j).is_zero()) sys(row, off[s - 1] + j * ms + c) -= nk(r, j);
      }
  }
  return sys;
}

}  // namespace

Matrix hom_basis(const LinearQuiver& q, const QuiverRep& m, const QuiverRep& n) {
  check_rep(q, m);
  check_rep(q, n);
  return linalg::nullspace(intertwiner_system(q, m, n));
}

int hom_dim_oracle(const LinearQuiver& q, const QuiverRep& m, const QuiverRep& n) {
  check_rep(q, m);
  check_rep(q, n);
  Matrix sys = intertwiner_system(q, m, n);
  return static_cast<int>(sys.cols() - linalg::rank(sys));
}

int euler_form(const LinearQuiver& q, const std::vector<int>& d, const std::vector<int>& e) {
  if (static_cast<int>(d.size()) != q.size() || static_cast<int>(e.size()) != q.size())
    throw InputError("dimension vector length mismatch");
  int s = 0;
  for (int v = 0; v < q.size(); ++v) s += d[v] * e[v];
  for (int k = 1; k <= q.edge_count(); ++k)
    s -= d[q.arrow_source(k) - 1] * e[q.arrow_target(k) - 1];
  return s;
}

Matrix path_map(const LinearQuiver& q, const QuiverRep& m, int from, int to) {
  auto p = path_between(q, from, to);
  if (!p) throw InputError("no path from " + std::to_string(from) + " to " + std::to_string(to));
  Matrix a = Matrix::identity(m.dim(from));
  for (int k : p->edges()) a = m.maps[k - 1] * a;
  return a;
}

RepMap compose_maps(const RepMap& g, const RepMap& f) {
  RepMap h;
  for (std::size_t v = 0; v < f.size(); ++v) h.push_back(g[v] * f[v]);
  return h;
}

RepMap identity_map(const QuiverRep& m) {
  RepMap f;
  for (int d : m.dims) f.push_back(Matrix::identity(d));
  return f;
}

bool is_morphism(const LinearQuiver& q, const QuiverRep& m, const QuiverRep& n, const RepMap& f) {
  for (int k = 1; k <= q.edge_count(); ++k) {
    const int s = q.arrow_source(k), t = q.arrow_target(k);
    if (!(f[t - 1] * m.maps[k - 1] == n.maps[k - 1] * f[s - 1])) return false;
  }
  return true;
}

namespace {

// Basis position of generator k inside the free representation at vertex w.
int free_index(const LinearQuiver& q, const std::vector<int>& gens, std::size_t k, int w) {
  int pos = 0;
  for (std::size_t j = 0; j < k; ++j)
    if (projective_support(q, gens[j]).contains(w)) ++pos;
  return pos;
}

}  // namespace

QuiverRep free_rep(const LinearQuiver& q, const std::vector<int>& generators) {
  QuiverRep p = zero_rep(q);
  for (int v : generators) p = direct_sum(p, rep_of_interval(q, projective_support(q, v)));
  return p;
}

RepMap map_from_free(const LinearQuiver& q, const std::vector<int>& generators,
                     const QuiverRep& target, const std::vector<Matrix>& images) {
  QuiverRep p = free_rep(q, generators);
  RepMap f;
  for (int w = 1; w <= q.size(); ++w) f.emplace_back(target.dim(w), p.dim(w));
  for (std::size_t k = 0; k < generators.size(); ++k) {
    const int v = generators[k];
    const Interval sup = projective_support(q, v);
    for (int w = sup.a; w <= sup.b; ++w) {
      Matrix col = path_map(q, target, v, w) * images[k];
      const int c = free_index(q, generators, k, w);
      for (std::size_t r = 0; r < col.rows(); ++r) f[w - 1](r, c) = col(r, 0);
    }
  }
  return f;
}

namespace {

struct Cover {
  std::vector<int> gens;
  std::vector<Matrix> images;
};

Cover top_generators(const LinearQuiver& q, const QuiverRep& m) {
  Cover c;
  for (int v = 1; v <= q.size(); ++v) {
    const int dv = m.dim(v);
    if (dv == 0) continue;
    std::vector<Matrix> blocks;
    for (int k = 1; k <= q.edge_count(); ++k)
      if (q.arrow_target(k) == v && m.maps[k - 1].cols() > 0) blocks.push_back(m.maps[k - 1]);
    Matrix span = hstack(blocks, dv);
    std::size_t rk = linalg::rank(span);
    for (int j = 0; j < dv && rk < static_cast<std::size_t>(dv); ++j) {
      Matrix e(dv, 1);
      e(j, 0) = 1;
      Matrix trial = hstack({span, e}, dv);
      if (linalg::rank(trial) > rk) {
        span = std::move(trial);
        ++rk;
        c.gens.push_back(v);
        c.images.push_back(std::move(e));
      }
    }
  }
  return c;
}

std::vector<Rational> column_vector(const Matrix& m, std::size_t c) {
  std::vector<Rational> x(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) x[r] = m(r, c);
  return x;
}

Matrix solve_columns(const Matrix& a, const Matrix& b) {
  Matrix x(a.cols(), b.cols());
  for (std::size_t c = 0; c < b.cols(); ++c) {
    auto s = linalg::solve(a, column_vector(b, c));
    if (!s) throw InvariantError("expected a solvable system");
    for (std::size_t r = 0; r < a.cols(); ++r) x(r, c) = (*s)[r];
  }
  return x;
}

}  // namespace

TwoTermResolution std_resolution(const LinearQuiver& q, const QuiverRep& m) {
  check_rep(q, m);
  TwoTermResolution res;
  res.target = m;
  Cover c0 = top_generators(q, m);
  res.p0 = c0.gens;
  res.P0 = free_rep(q, c0.gens);
  res.cover = map_from_free(q, c0.gens, m, c0.images);

  QuiverRep k;
  std::vector<Matrix> incl;
  for (int w = 1; w <= q.size(); ++w) {
    Matrix ns = res.cover[w - 1].rows() == 0 ? Matrix::identity(res.P0.dim(w))
                                             : linalg::nullspace(res.cover[w - 1]);
    k.dims.push_back(static_cast<int>(ns.cols()));
    incl.push_back(std::move(ns));
  }
  for (int e = 1; e <= q.edge_count(); ++e) {
    const int s = q.arrow_source(e), t = q.arrow_target(e);
    Matrix img = res.P0.maps[e - 1] * incl[s - 1];
    k.maps.push_back(incl[t - 1].cols() == 0 ? Matrix(0, img.cols()) : solve_columns(incl[t - 1], img));
  }
  Cover c1 = top_generators(q, k);
  res.p1 = c1.gens;
  res.P1 = free_rep(q, c1.gens);
  RepMap onto_k = map_from_free(q, c1.gens, k, c1.images);
  if (res.P1.dims != k.dims) throw InvariantError("kernel of a projective cover is not projective");
  for (int w = 1; w <= q.size(); ++w) res.d.push_back(incl[w - 1] * onto_k[w - 1]);
  return res;
}

namespace {

std::vector<Matrix> unit_images(const QuiverRep& y, int v) {
  std::vector<Matrix> out;
  for (int j = 0; j < y.dim(v); ++j) {
    Matrix e(y.dim(v), 1);
    e(j, 0) = 1;
    out.push_back(std::move(e));
  }
  return out;
}

// All maps from a free representation, one per (generator, basis vector) choice.
std::vector<RepMap> free_hom_basis(const LinearQuiver& q, const std::vector<int>& gens, const QuiverRep& y) {
  std::vector<RepMap> out;
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (auto& e : unit_images(y, gens[k])) {
      std::vector<Matrix> images;
      for (std::size_t j = 0; j < gens.size(); ++j)
        images.push_back(j == k ? e : Matrix(y.dim(gens[j]), 1));
      out.push_back(map_from_free(q, gens, y, images));
    }
  return out;
}

Matrix columns_of(const std::vector<RepMap>& maps, std::size_t len) {
  Matrix m(len, maps.size());
  for (std::size_t c = 0; c < maps.size(); ++c) {
    auto x = flatten(maps[c]);
    for (std::size_t r = 0; r < len; ++r) m(r, c) = x[r];
  }
  return m;
}

std::size_t flat_size(const QuiverRep& m, const QuiverRep& n) {
  std::size_t s = 0;
  for (std::size_t v = 0; v < m.dims.size(); ++v) s += static_cast<std::size_t>(m.dims[v]) * n.dims[v];
  return s;
}

int ext1_by_resolution(const LinearQuiver& q, const TwoTermResolution& r, const QuiverRep& n) {
  int hom_p1 = 0;
  for (int u : r.p1) hom_p1 += n.dim(u);
  std::vector<RepMap> images;
  for (auto& phi : free_hom_basis(q, r.p0, n)) images.push_back(compose_maps(phi, r.d));
  return hom_p1 - static_cast<int>(linalg::rank(columns_of(images, flat_size(r.P1, n))));
}

}  // namespace

int ext1_dim_oracle(const LinearQuiver& q, const QuiverRep& m, const QuiverRep& n) {
  return ext1_dim_oracle(q, std_resolution(q, m), n);
}

int ext1_dim_oracle(const LinearQuiver& q, const TwoTermResolution& res, const QuiverRep& n) {
  const QuiverRep& m = res.target;
  const int by_euler = hom_dim_oracle(q, m, n) - euler_form(q, m.dims, n.dims);
  const int by_resolution = ext1_by_resolution(q, res, n);
  if (by_euler != by_resolution)
    throw InvariantError("Ext1 disagreement: Euler form gives " + std::to_string(by_euler) +
                         ", resolution gives " + std::to_string(by_resolution));
  return by_euler;
}

const TwoTermResolution& YonedaContext::resolution(const QuiverRep& m) {
  for (const auto& [key, r] : cache_)
    if (key == m) return r;
  cache_.emplace_back(m, std_resolution(q_, m));
  return cache_.back().second;
}

Matrix YonedaContext::boundary_span(const QuiverRep& x, const QuiverRep& y) {
  const TwoTermResolution& r = resolution(x);
  std::vector<RepMap> images;
  for (auto& phi : free_hom_basis(q_, r.p0, y)) images.push_back(compose_maps(phi, r.d));
  return columns_of(images, flat_size(r.P1, y));
}

std::vector<YonedaElement> YonedaContext::basis(const QuiverRep& x, const QuiverRep& y, int degree) {
  std::vector<YonedaElement> out;
  if (degree == 0) {
    Matrix b = hom_basis(q_, x, y);
    for (std::size_t c = 0; c < b.cols(); ++c) out.push_back({0, unflatten(column_vector(b, c), x, y)});
    return out;
  }
  if (degree != 1) throw InputError("only degrees 0 and 1 are nonzero for a hereditary algebra");
  const TwoTermResolution r = resolution(x);
  Matrix span = boundary_span(x, y);
  std::size_t rk = linalg::rank(span);
  for (auto& f : free_hom_basis(q_, r.p1, y)) {
    Matrix trial = hstack({span, columns_of({f}, span.rows())}, span.rows());
    if (linalg::rank(trial) > rk) {
      span = std::move(trial);
      ++rk;
      out.push_back({1, f});
    }
  }
  return out;
}

bool YonedaContext::is_zero(const QuiverRep& x, const QuiverRep& y, const YonedaElement& e) {
  Matrix f = columns_of({e.map}, flat_size(e.degree == 0 ? x : resolution(x).P1, y));
  if (f.is_zero()) return true;
  if (e.degree == 0) return false;
  Matrix span = boundary_span(x, y);
  return linalg::rank(hstack({span, f}, span.rows())) == linalg::rank(span);
}

std::pair<RepMap, RepMap> YonedaContext::lift(const QuiverRep& x, const QuiverRep& y, const RepMap& h) {
  const TwoTermResolution rx = resolution(x);
  const TwoTermResolution ry = resolution(y);
  std::vector<Matrix> im0;
  for (std::size_t k = 0; k < rx.p0.size(); ++k) {
    const int v = rx.p0[k];
    Matrix target = h[v - 1] * rx.cover[v - 1].column(free_index(q_, rx.p0, k, v));
    im0.push_back(solve_columns(ry.cover[v - 1], target));
  }
  RepMap h0 = map_from_free(q_, rx.p0, ry.P0, im0);
  std::vector<Matrix> im1;
  for (std::size_t k = 0; k < rx.p1.size(); ++k) {
    const int u = rx.p1[k];
    Matrix target = h0[u - 1] * rx.d[u - 1].column(free_index(q_, rx.p1, k, u));
    im1.push_back(solve_columns(ry.d[u - 1], target));
  }
  RepMap h1 = map_from_free(q_, rx.p1, ry.P1, im1);
  return {h0, h1};
}

YonedaElement YonedaContext::compose(const QuiverRep& x, const QuiverRep& y, const QuiverRep& z,
                                     const YonedaElement& outer, const YonedaElement& inner) {
  (void)z;
  if (outer.degree + inner.degree > 1)
    throw InputError("Yoneda product of total degree " + std::to_string(outer.degree + inner.degree) +
                     " requested; the algebra is hereditary");
  if (outer.degree == 0) return {inner.degree, compose_maps(outer.map, inner.map)};
  auto [h0, h1] = lift(x, y, inner.map);
  (void)h0;
  return {1, compose_maps(outer.map, h1)};
}

namespace {

// Column basis for each vertex of a subspace family.
using Spaces = std::vector<Matrix>;

Matrix span_union(const Matrix& a, const Matrix& b, std::size_t rows) {
  if (a.cols() == 0) return linalg::column_basis(b);
  if (b.cols() == 0) return a;
  return linalg::column_basis(hstack({a, b}, rows));
}

QuiverRep quotient(const LinearQuiver& q, const QuiverRep& m, const Spaces& u) {
  QuiverRep out;
  std::vector<Matrix> proj, lift;
  for (int w = 1; w <= q.size(); ++w) {
    const int dw = m.dim(w);
    Matrix basis = u[w - 1];
    std::vector<std::size_t> comp;
    std::size_t rk = basis.cols();
    for (int j = 0; j < dw; ++j) {
      Matrix e(dw, 1);
      e(j, 0) = 1;
      Matrix trial = basis.cols() == 0 ? e : hstack({basis, e}, dw);
      if (linalg::rank(trial) > rk) {
        basis = std::move(trial);
        ++rk;
        comp.push_back(j);
      }
    }
    const std::size_t sub = u[w - 1].cols();
    Matrix inv = dw == 0 ? Matrix() : solve_columns(basis, Matrix::identity(dw));
    Matrix p(comp.size(), dw);
    for (std::size_t r = 0; r < comp.size(); ++r)
      for (int c = 0; c < dw; ++c) p(r, c) = inv(sub + r, c);
    Matrix l(dw, comp.size());
    for (std::size_t c = 0; c < comp.size(); ++c) l(comp[c], c) = 1;
    out.dims.push_back(static_cast<int>(comp.size()));
    proj.push_back(std::move(p));
    lift.push_back(std::move(l));
  }
  for (int k = 1; k <= q.edge_count(); ++k) {
    const int s = q.arrow_source(k), t = q.arrow_target(k);
    out.maps.push_back(proj[t - 1] * m.maps[k - 1] * lift[s - 1]);
  }
  return out;
}

QuiverRep subrep(const LinearQuiver& q, const QuiverRep& m, const Spaces& s) {
  QuiverRep out;
  for (int w = 1; w <= q.size(); ++w) out.dims.push_back(static_cast<int>(s[w - 1].cols()));
  for (int k = 1; k <= q.edge_count(); ++k) {
    const int src = q.arrow_source(k), t = q.arrow_target(k);
    Matrix img = m.maps[k - 1] * s[src - 1];
    out.maps.push_back(s[t - 1].cols() == 0 ? Matrix(0, img.cols()) : solve_columns(s[t - 1], img));
  }
  return out;
}

}  // namespace

QuiverRep standard_oracle(const LinearQuiver& q, const PartialOrder& order, int i) {
  QuiverRep p = rep_of_interval(q, projective_support(q, i));
  Spaces u;
  for (int w = 1; w <= q.size(); ++w)
    u.push_back(order.leq(w, i) ? Matrix(p.dim(w), 0) : Matrix::identity(p.dim(w)));
  for (bool grew = true; grew;) {
    grew = false;
    for (int k = 1; k <= q.edge_count(); ++k) {
      const int s = q.arrow_source(k), t = q.arrow_target(k);
      if (u[s - 1].cols() == 0) continue;
      Matrix next = span_union(u[t - 1], p.maps[k - 1] * u[s - 1], p.dim(t));
      if (next.cols() > u[t - 1].cols()) {
        u[t - 1] = std::move(next);
        grew = true;
      }
    }
  }
  return quotient(q, p, u);
}

QuiverRep costandard_oracle(const LinearQuiver& q, const PartialOrder& order, int i) {
  QuiverRep inj = rep_of_interval(q, injective_support(q, i));
  Spaces s;
  for (int w = 1; w <= q.size(); ++w)
    s.push_back(order.leq(w, i) ? Matrix::identity(inj.dim(w)) : Matrix(inj.dim(w), 0));
  for (bool shrank = true; shrank;) {
    shrank = false;
    for (int k = 1; k <= q.edge_count(); ++k) {
      const int src = q.arrow_source(k), t = q.arrow_target(k);
      const Matrix& b = s[src - 1];
      if (b.cols() == 0) continue;
      Matrix img = inj.maps[k - 1] * b;
      Matrix neg(s[t - 1].rows(), s[t - 1].cols());
      for (std::size_t r = 0; r < neg.rows(); ++r)
        for (std::size_t c = 0; c < neg.cols(); ++c) neg(r, c) = -s[t - 1](r, c);
      Matrix sys = hstack({img, neg}, img.rows());
      Matrix ns = linalg::nullspace(sys);
      Matrix y(b.cols(), ns.cols());
      for (std::size_t r = 0; r < b.cols(); ++r)
        for (std::size_t c = 0; c < ns.cols(); ++c) y(r, c) = ns(r, c);
      Matrix next = ns.cols() == 0 ? Matrix(b.rows(), 0) : linalg::column_basis(b * y);
      if (next.cols() < b.cols()) {
        s[src - 1] = std::move(next);
        shrank = true;
      }
    }
  }
  return subrep(q, inj, s);
}

Interval support_of(const QuiverRep& m) {
  int a = 0, b = -1;
  for (int v = 1; v <= static_cast<int>(m.dims.size()); ++v) {
    if (m.dim(v) > 1) throw InvariantError("representation is not thin");
    if (m.dim(v) == 1) {
      if (a == 0) a = v;
      else if (b != v - 1) throw InvariantError("support is not contiguous");
      b = v;
    }
  }
  if (a == 0) return Interval::zero();
  return {a, b};
}

}  // namespace qhlin
