#include "polyunion/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "polyunion/double_description.hpp"
#include "polyunion/errors.hpp"
#include "polyunion/parallel.hpp"

namespace polyunion {

namespace {

constexpr int kScalingCap = 64;
constexpr int kEpsilonCap = 64;

Rat max_over(const std::vector<QVec>& points, const QVec& c) {
  Rat best = dot(c, points.at(0));
  for (const QVec& x : points) best = std::max(best, dot(c, x));
  return best;
}

IndexSet argmax_set(const std::vector<QVec>& points, const QVec& c, const Rat& value) {
  IndexSet s(points.size());
  for (std::size_t i = 0; i < points.size(); ++i)
    if (dot(c, points[i]) == value) s.set(i);
  return s;
}

std::vector<QVec> points_in(const std::vector<QVec>& points, const IndexSet& s) {
  std::vector<QVec> out;
  for (std::size_t i = s.find_first(); i != IndexSet::npos; i = s.find_next(i)) out.push_back(points[i]);
  return out;
}

[[noreturn]] void certificate_failed(const std::string& why) {
  throw ConstructionError("certificate failed: " + why);
}

// Point maximizing the minimum slack of the inequality rows (slack capped at
// 1 so the LP stays bounded).
QVec max_slack_point(const HRep& h) {
  const std::size_t d = h.dim;
  HRep lp;
  lp.dim = d + 1;
  lp.A = QMat(0, d + 1);
  lp.E = QMat(0, d + 1);
  for (std::size_t i = 0; i < h.A.rows(); ++i) {
    QVec row = h.A.row_vec(i);
    row.push_back(1);
    lp.add_inequality(row, h.b[i]);
  }
  lp.add_inequality(unit_vector(d + 1, d), Rat(1));
  const LpResult r = optimize(lp, unit_vector(d + 1, d));
  if (r.status != LpStatus::Optimal || sgn(*r.value) <= 0)
    throw ConstructionError("max_slack_point: polytope has empty interior");
  return QVec(r.point->begin(), r.point->begin() + static_cast<std::ptrdiff_t>(d));
}

}  // namespace

QVec moment_curve_point(const Rat& t, std::size_t d) {
  if (d == 0) throw InputError("moment_curve_point: d must be positive");
  QVec x(d);
  Rat p = 1;
  for (std::size_t i = 0; i < d; ++i) {
    p *= t;
    x[i] = p;
  }
  return x;
}

VRep cyclic_points(std::size_t d, std::size_t k, const std::optional<std::vector<Rat>>& t) {
  if (d == 0) throw InputError("cyclic_polytope: d must be positive");
  if (k < d + 1) throw InputError("cyclic_polytope: need k >= d + 1");
  std::vector<Rat> params;
  if (t) {
    if (t->size() != k) throw InputError("cyclic_polytope: need k parameters");
    params = *t;
  } else {
    for (std::size_t i = 1; i <= k; ++i) params.emplace_back(static_cast<long>(i));
  }
  std::vector<Rat> sorted = params;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw InputError("cyclic_polytope: duplicate parameter");
  VRep v;
  v.dim = d;
  for (const Rat& ti : params) v.points.push_back(moment_curve_point(ti, d));
  return v;
}

Polytope cyclic_polytope(std::size_t d, std::size_t k, const std::optional<std::vector<Rat>>& t) {
  return make_polytope(cyclic_points(d, k, t));
}

bool is_simplicial(const Polytope& p) {
  for (const IndexSet& f : p.incidence)
    if (f.count() != static_cast<std::size_t>(p.dim())) return false;
  return true;
}

bool is_simple(const Polytope& p) {
  for (std::size_t i = 0; i < p.num_vertices(); ++i)
    if (p.vertex_facets(i).count() != static_cast<std::size_t>(p.dim())) return false;
  return true;
}

std::vector<std::size_t> f_vector(const Polytope& p) {
  std::vector<std::size_t> f(static_cast<std::size_t>(std::max(p.dim(), 0)), 0);
  for (const Face& face : face_lattice(p))
    if (face.dim >= 0 && face.dim < p.dim()) ++f[static_cast<std::size_t>(face.dim)];
  return f;
}

Polytope centered_polar(const Polytope& p) {
  if (!p.full_dimensional()) throw InputError("centered_polar: polytope is not full-dimensional");
  const std::size_t d = p.ambient_dim();
  QVec c = zeros(d);
  for (const QVec& v : p.v.points) c = add(c, v);
  c = scale(c, Rat(1) / Rat(static_cast<long>(p.num_vertices())));

  Polytope q;
  q.h.dim = d;
  q.h.A = QMat(0, d);
  q.h.E = QMat(0, d);
  for (const QVec& v : p.v.points) q.h.add_inequality(sub(v, c), Rat(1));
  q.h.irredundant = true;

  // Facet f of p (a x <= b) becomes the vertex a / (b - a c) of the polar.
  std::vector<std::pair<QVec, std::size_t>> verts;
  for (std::size_t f = 0; f < p.num_facets(); ++f) {
    const Rat rhs = p.h.b[f] - dot(p.h.A.row(f), c);
    if (sgn(rhs) <= 0) throw InternalError("centered_polar: centroid not interior");
    verts.emplace_back(scale(p.h.A.row(f), 1 / rhs), f);
  }
  std::sort(verts.begin(), verts.end(), [](const auto& x, const auto& y) { return lex_compare(x.first, y.first) < 0; });
  q.v.dim = d;
  q.v.minimal = true;
  q.incidence.assign(p.num_vertices(), IndexSet(verts.size()));
  for (std::size_t i = 0; i < verts.size(); ++i) {
    q.v.points.push_back(verts[i].first);
    for (std::size_t j = 0; j < p.num_vertices(); ++j)
      if (p.incidence[verts[i].second].test(j)) q.incidence[j].set(i);
  }
  return q;
}

Polytope polar_cyclic(std::size_t d, std::size_t k) { return centered_polar(cyclic_polytope(d, k)); }

std::vector<std::size_t> ColoredHRep::rows_of(std::size_t j) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < color.size(); ++i)
    if (color[i] == j) out.push_back(i);
  return out;
}

ColoredHRep color_facets(const HRep& h) {
  const std::size_t d = h.dim;
  if (d == 0 || d % 2 != 0) throw InputError("color_facets: dimension must be even and positive");
  if (h.A.rows() != d * d) throw InputError("color_facets: expected d^2 rows");
  ColoredHRep out;
  out.h = h;
  out.d = d;
  for (std::size_t i = 0; i < d * d; ++i) out.color.push_back(i / (2 * d) + 1);
  return out;
}

bool lemma4_condition_holds(const Polytope& p, std::size_t k, const std::vector<QVec>& basis) {
  const std::size_t d = p.ambient_dim();
  for (const Face& f : faces_of_dim(p, static_cast<int>(k))) {
    std::vector<QVec> span = cone_span_basis(optimality_cone_closed(p, f));
    const std::size_t base = span.size();
    span.insert(span.end(), basis.begin(), basis.end());
    if (rank_of_vectors(span, d) != base + basis.size()) return false;
  }
  return true;
}

std::vector<QVec> lemma4_subspace(const Polytope& p, std::size_t k) {
  const std::size_t d = p.ambient_dim();
  if (!p.full_dimensional()) throw InputError("lemma4_subspace: polytope is not full-dimensional");
  if (k > d) throw InputError("lemma4_subspace: k exceeds d");
  std::vector<QVec> basis;
  if (k == 0) return basis;

  const std::vector<Face> faces = faces_of_dim(p, static_cast<int>(k));
  std::vector<std::vector<QVec>> spans;
  for (const Face& f : faces) spans.push_back(cone_span_basis(optimality_cone_closed(p, f)));

  const std::size_t cap = 10 * d * faces.size();
  std::size_t rejected = 0;
  long t = 0;
  while (basis.size() < k) {
    ++t;
    const QVec v = moment_curve_point(Rat(t), d);
    bool ok = true;
    for (const std::vector<QVec>& span : spans) {
      std::vector<QVec> all = span;
      all.insert(all.end(), basis.begin(), basis.end());
      all.push_back(v);
      if (rank_of_vectors(all, d) != span.size() + basis.size() + 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      basis.push_back(v);
    } else if (++rejected >= cap) {
      throw ConstructionError("candidate sequence exhausted");
    }
  }
  if (!lemma4_condition_holds(p, k, basis)) throw InternalError("lemma4_subspace: verification failed");
  return basis;
}

PerturbationData centered_simplex_in_subspace(const std::vector<QVec>& V_basis) {
  if (V_basis.empty()) throw InputError("centered_simplex_in_subspace: empty basis");
  const std::size_t n = V_basis[0].size();
  const std::size_t m = V_basis.size();
  if (rank_of_vectors(V_basis, n) != m) throw InputError("centered_simplex_in_subspace: dependent basis");
  QVec mean = zeros(n);
  for (const QVec& b : V_basis) mean = add(mean, b);
  mean = scale(mean, Rat(1) / Rat(static_cast<long>(m)));

  PerturbationData out;
  out.V_basis = V_basis;
  for (const QVec& b : V_basis) out.u.push_back(sub(b, mean));
  out.nu.assign(m, Rat(1) / Rat(static_cast<long>(m)));
  if (affine_dimension(out.u) != static_cast<int>(m) - 1)
    throw InternalError("centered_simplex_in_subspace: u is not a simplex");
  return out;
}

HRep perturbed_rows(const ColoredHRep& colored, const std::vector<QVec>& u) {
  if (u.size() != colored.num_classes()) throw InputError("perturbed_polar: need one u per color class");
  HRep h;
  h.dim = colored.h.dim;
  h.A = QMat(0, h.dim);
  h.E = QMat(0, h.dim);
  for (std::size_t i = 0; i < colored.h.A.rows(); ++i)
    h.add_inequality(add(colored.h.A.row(i), u[colored.color[i] - 1]), colored.h.b[i]);
  return h;
}

PerturbedPolar perturbed_polar(const Polytope& D, const ColoredHRep& colored, const PerturbationData& pert) {
  if (!D.full_dimensional()) throw InputError("perturbed_polar: D is not full-dimensional");
  if (!is_simple(D)) throw InputError("perturbed_polar: D is not simple");
  if (colored.h.A != D.h.A || colored.h.b != D.h.b) throw InputError("perturbed_polar: coloring does not match D");
  PerturbedPolar out;
  out.pert = pert;
  for (int round = 0; round <= kScalingCap; ++round) {
    if (std::optional<Polytope> q = try_make_polytope(perturbed_rows(colored, out.pert.u))) {
      if (q->num_facets() == D.num_facets() && combinatorial_equal(D, *q)) {
        out.Q = std::move(*q);
        return out;
      }
    }
    if (round == kScalingCap) break;
    for (QVec& uj : out.pert.u) uj = scale(uj, Rat(1, 2));
    ++out.pert.scale_exponent;
  }
  throw ConstructionError("scaling cap");
}

VRep cayley_points(const VRep& v0, const VRep& v1) {
  if (v0.points.empty() || v1.points.empty()) throw InputError("cayley_embedding: empty input");
  if (v0.dim != v1.dim) throw InputError("cayley_embedding: dimension mismatch");
  VRep out;
  out.dim = v0.dim + 1;
  for (QVec x : v0.points) {
    x.push_back(0);
    out.points.push_back(std::move(x));
  }
  for (QVec x : v1.points) {
    x.push_back(1);
    out.points.push_back(std::move(x));
  }
  return out;
}

Polytope cayley_embedding(const VRep& v0, const VRep& v1) { return make_polytope(cayley_points(v0, v1)); }

HRep height_slice(const Polytope& p, const Rat& t) {
  const std::size_t n = p.ambient_dim();
  if (n == 0) throw InputError("height_slice: zero-dimensional ambient space");
  const std::size_t d = n - 1;
  HRep out;
  out.dim = d;
  out.A = QMat(0, d);
  out.E = QMat(0, d);
  auto restrict_row = [&](std::span<const Rat> row, const Rat& rhs) {
    return std::make_pair(QVec(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(d)), rhs - row[d] * t);
  };
  for (std::size_t i = 0; i < p.h.A.rows(); ++i) {
    auto [a, rhs] = restrict_row(p.h.A.row(i), p.h.b[i]);
    if (is_zero(a) && sgn(rhs) >= 0) continue;
    out.add_inequality(a, rhs);
  }
  for (std::size_t i = 0; i < p.h.E.rows(); ++i) {
    auto [a, rhs] = restrict_row(p.h.E.row(i), p.h.e[i]);
    if (is_zero(a) && sgn(rhs) == 0) continue;
    out.add_equation(a, rhs);
  }
  return out;
}

Polytope minkowski_combination(const VRep& v0, const VRep& v1, const Rat& t) {
  if (v0.dim != v1.dim) throw InputError("minkowski_combination: dimension mismatch");
  if (v0.points.empty() || v1.points.empty()) throw InputError("minkowski_combination: empty summand");
  VRep out;
  out.dim = v0.dim;
  const Rat s = 1 - t;
  for (const QVec& x : v0.points)
    for (const QVec& y : v1.points) out.points.push_back(add(scale(x, s), scale(y, t)));
  std::sort(out.points.begin(), out.points.end(), LexLess{});
  out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
  return make_polytope(out);
}

std::vector<std::vector<std::size_t>> colorful_faces(const ColoredHRep& colored) {
  const std::size_t m = colored.num_classes();
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t j = 1; j <= m; ++j) classes.push_back(colored.rows_of(j));
  std::vector<std::vector<std::size_t>> out;
  if (m == 0) return out;
  std::vector<std::size_t> pick(m, 0);
  for (;;) {
    std::vector<std::size_t> tuple(m);
    for (std::size_t j = 0; j < m; ++j) tuple[j] = classes[j][pick[j]];
    out.push_back(std::move(tuple));
    std::size_t j = m;
    while (j > 0 && ++pick[j - 1] == classes[j - 1].size()) pick[--j] = 0;
    if (j == 0) break;
  }
  return out;
}

int face_dimension(const Polytope& D, const std::vector<std::size_t>& rows) {
  IndexSet facets(D.num_facets());
  for (std::size_t r : rows) facets.set(r);
  std::vector<QVec> pts;
  const IndexSet on = D.vertices_on(facets);
  for (std::size_t i = on.find_first(); i != IndexSet::npos; i = on.find_next(i)) pts.push_back(D.v.points[i]);
  return affine_dimension(pts);
}

CayleyCertificate colorful_facet_certificate(const Polytope& D, const Polytope& Q, const ColoredHRep& colored,
                                             const PerturbationData& pert,
                                             const std::vector<std::size_t>& tuple) {
  const std::size_t d = D.ambient_dim();
  const std::size_t m = colored.num_classes();
  if (tuple.size() != m) certificate_failed("tuple length differs from the number of colors");
  if (pert.u.size() != m || pert.nu.size() != m) certificate_failed("perturbation data has the wrong size");
  for (std::size_t j = 0; j < m; ++j) {
    if (tuple[j] >= colored.color.size() || colored.color[tuple[j]] != j + 1)
      certificate_failed("tuple is not colorful");
    if (D.h.A.row_vec(tuple[j]) != colored.h.A.row_vec(tuple[j]))
      certificate_failed("coloring does not match D");
    if (Q.h.A.row_vec(tuple[j]) != add(D.h.A.row(tuple[j]), pert.u[j]))
      certificate_failed("Q row is not the perturbed D row");
  }

  CayleyCertificate cert;
  cert.colorful_indices = tuple;
  cert.mu = pert.nu;
  cert.r = zeros(d);
  for (std::size_t j = 0; j < m; ++j) {
    if (sgn(cert.mu[j]) <= 0) certificate_failed("multiplier not positive");
    cert.r = add(cert.r, scale(D.h.A.row(tuple[j]), cert.mu[j]));
  }

  const LpResult on_d = optimize(D.h, cert.r);
  const LpResult on_q = optimize(Q.h, cert.r);
  if (on_d.status != LpStatus::Optimal || on_q.status != LpStatus::Optimal)
    throw InternalError("colorful_facet_certificate: support LP not optimal");
  cert.beta0 = *on_d.value;
  cert.alpha = *on_d.value - *on_q.value;
  if (max_over(D.v.points, cert.r) != cert.beta0 || max_over(Q.v.points, cert.r) != *on_q.value)
    throw InternalError("colorful_facet_certificate: LP disagrees with the vertex maximum");

  IndexSet facets(D.num_facets());
  for (std::size_t r : tuple) facets.set(r);
  const IndexSet F = D.vertices_on(facets);
  const IndexSet Fp = Q.vertices_on(facets);
  if (F.none() || Fp.none()) certificate_failed("colorful face is empty");
  cert.face0 = argmax_set(D.v.points, cert.r, cert.beta0);
  cert.face1 = argmax_set(Q.v.points, cert.r, *on_q.value);
  if (cert.face0 != F) certificate_failed("tight set in D differs from the colorful face");
  if (cert.face1 != Fp) certificate_failed("tight set in Q differs from the colorful face");

  std::vector<QVec> tight;
  for (QVec x : points_in(D.v.points, F)) {
    x.push_back(0);
    tight.push_back(std::move(x));
  }
  for (QVec x : points_in(Q.v.points, Fp)) {
    x.push_back(1);
    tight.push_back(std::move(x));
  }
  if (affine_dimension(tight) != static_cast<int>(d)) certificate_failed("tight set is not a facet");

  // Columns (mu_1..mu_m, nu_1..nu_m); rows: sum a_j mu_j - sum (a_j + u_j) nu_j = 0
  // and sum u_j nu_j = 0.
  QMat sys(2 * d, 2 * m);
  for (std::size_t j = 0; j < m; ++j) {
    const std::span<const Rat> a = D.h.A.row(tuple[j]);
    for (std::size_t i = 0; i < d; ++i) {
      sys(i, j) = a[i];
      sys(i, m + j) = -(a[i] + pert.u[j][i]);
      sys(d + i, m + j) = pert.u[j][i];
    }
  }
  const std::vector<QVec> ker = kernel_basis(sys);
  if (ker.size() != 1) certificate_failed("multiplier system is not a single ray");
  QVec expected = pert.nu;
  expected.insert(expected.end(), pert.nu.begin(), pert.nu.end());
  if (primitive_integer(ker[0]) != primitive_integer(expected))
    certificate_failed("multiplier ray is not (nu, nu)");
  return cert;
}

std::pair<QVec, Rat> certificate_row(const CayleyCertificate& cert) {
  QVec row = cert.r;
  row.push_back(cert.alpha);
  return {row, cert.beta0};
}

CrossPolytopeFamily cross_polytope_family(std::size_t d) {
  if (d == 0) throw InputError("cross_polytope_family: d must be positive");
  if (d > 20) throw InputError("cross_polytope_family: d too large");
  CrossPolytopeFamily fam;
  HRep q;
  q.dim = d;
  q.A = QMat(0, d);
  q.E = QMat(0, d);
  for (std::size_t s = 0; s < (std::size_t{1} << d); ++s) {
    QVec row(d);
    for (std::size_t i = 0; i < d; ++i) row[i] = (s >> i) & 1 ? -1 : 1;
    q.add_inequality(row, Rat(1));
  }
  // Facets and vertices are known in closed form; 2^d LPs would dominate
  // the cost at the larger dimensions.
  q.irredundant = true;
  fam.Q.h = std::move(q);
  fam.Q.v.dim = d;
  for (std::size_t i = 0; i < d; ++i) {
    fam.Q.v.points.push_back(unit_vector(d, i));
    fam.Q.v.points.push_back(scale(unit_vector(d, i), Rat(-1)));
  }
  std::sort(fam.Q.v.points.begin(), fam.Q.v.points.end(), LexLess{});
  fam.Q.v.minimal = true;
  fam.Q.incidence = compute_incidence(fam.Q.h, fam.Q.v);

  auto simplex = [d](int sign) {
    HRep h;
    h.dim = d;
    h.A = QMat(0, d);
    h.E = QMat(0, d);
    for (std::size_t i = 0; i < d; ++i) h.add_inequality(scale(unit_vector(d, i), Rat(-sign)), Rat(0));
    const QVec ones(d, Rat(sign));
    h.add_inequality(ones, Rat(1));
    h.add_inequality(scale(ones, Rat(-1)), Rat(-1));
    return h;
  };
  fam.P1_h = simplex(1);
  fam.Pm1_h = simplex(-1);
  fam.P1 = make_polytope(fam.P1_h);
  fam.Pm1 = make_polytope(fam.Pm1_h);
  return fam;
}

std::vector<QVec> point_family_S(std::size_t d, const Rat& delta) {
  if (d == 0) throw InputError("point_family_S: d must be positive");
  if (d > 20) throw InputError("point_family_S: d too large");
  if (sgn(delta) <= 0) throw InputError("point_family_S: delta must be positive");
  const Rat entry = (1 + delta) / Rat(static_cast<long>(d));
  std::vector<QVec> out;
  out.reserve(std::size_t{1} << d);
  for (std::size_t s = 0; s < (std::size_t{1} << d); ++s) {
    QVec x(d);
    for (std::size_t i = 0; i < d; ++i) x[i] = (s >> i) & 1 ? Rat(-entry) : entry;
    out.push_back(std::move(x));
  }
  return out;
}

HRep homogenization(const VRep& q, const QVec& apex) {
  q.validate();
  if (q.points.empty()) throw InputError("homogenization: empty input");
  if (apex.size() != q.dim) throw InputError("homogenization: apex dimension mismatch");
  const HRep facets = facet_enumeration(q);
  if (facets.E.rows() == 0) throw InputError("homogenization: apex lies in the affine hull");
  QVec w(facets.E.rows());
  for (std::size_t k = 0; k < w.size(); ++k) w[k] = dot(facets.E.row(k), apex) - facets.e[k];
  if (is_zero(w)) throw InputError("homogenization: apex lies in the affine hull");
  const Rat ww = dot(w, w);

  HRep out;
  out.dim = q.dim;
  out.A = QMat(0, q.dim);
  out.E = QMat(0, q.dim);
  // Row a y <= b on aff(q) becomes (a + t^T E) x <= b + t^T e with t along w,
  // chosen so the hyperplane passes through the apex.
  for (std::size_t i = 0; i < facets.A.rows(); ++i) {
    const Rat s = (facets.b[i] - dot(facets.A.row(i), apex)) / ww;
    QVec g = facets.A.row_vec(i);
    Rat beta = facets.b[i];
    for (std::size_t k = 0; k < w.size(); ++k) {
      g = add(g, scale(facets.E.row(k), s * w[k]));
      beta += s * w[k] * facets.e[k];
    }
    const QVec prim = [&] {
      QVec full = g;
      full.push_back(beta);
      return to_rational(primitive_integer(full));
    }();
    out.add_inequality(std::span<const Rat>(prim.data(), q.dim), prim[q.dim]);
  }
  VRep with_apex = q;
  with_apex.points.push_back(apex);
  const HRep hull = facet_enumeration(with_apex);
  for (std::size_t k = 0; k < hull.E.rows(); ++k) out.add_equation(hull.E.row(k), hull.e[k]);
  return out;
}

Polytope truncate(const HRep& h, const QVec& a, const Rat& lo, const Rat& hi) {
  HRep t = h;
  t.irredundant = false;
  t.add_inequality(a, hi);
  t.add_inequality(scale(a, Rat(-1)), -lo);
  return make_polytope(t);
}

LiftProjectInstance lift_project_instance(std::size_t d) {
  if (d < 3 || d % 2 == 0) throw InputError("lift_project_instance: d must be odd and at least 3");
  const std::size_t n = d - 1;
  LiftProjectInstance inst;
  inst.d = d;
  inst.D = polar_cyclic(n, n * n);
  inst.colored = color_facets(inst.D.h);
  const PerturbationData start = centered_simplex_in_subspace(lemma4_subspace(inst.D, n / 2));
  PerturbedPolar pq = perturbed_polar(inst.D, inst.colored, start);
  inst.Q = std::move(pq.Q);
  inst.pert = std::move(pq.pert);

  const QVec x0 = max_slack_point(inst.D.h);
  const QVec x1 = max_slack_point(inst.Q.h);
  const std::size_t m0 = inst.D.num_facets();
  const std::size_t m1 = inst.Q.num_facets();

  auto build = [&](const Rat& eps) {
    HRep h;
    h.dim = d;
    h.A = QMat(0, d);
    h.E = QMat(0, d);
    for (std::size_t i = 0; i < m0; ++i) {
      QVec row = inst.D.h.A.row_vec(i);
      row.push_back((dot(inst.D.h.A.row(i), x0) - inst.D.h.b[i]) / eps);
      h.add_inequality(row, inst.D.h.b[i]);
    }
    for (std::size_t i = 0; i < m1; ++i) {
      const Rat c = (inst.Q.h.b[i] - dot(inst.Q.h.A.row(i), x1)) / eps;
      QVec row = inst.Q.h.A.row_vec(i);
      row.push_back(c);
      h.add_inequality(row, inst.Q.h.b[i] + c);
    }
    return h;
  };
  auto strictly_inside = [&](const HRep& h) {
    for (const QVec& y : inst.Q.v.points) {
      QVec z = y;
      z.push_back(1);
      for (std::size_t i = 0; i < m0; ++i)
        if (dot(h.A.row(i), z) >= h.b[i]) return false;
    }
    for (const QVec& y : inst.D.v.points) {
      QVec z = y;
      z.push_back(0);
      for (std::size_t i = m0; i < m0 + m1; ++i)
        if (dot(h.A.row(i), z) >= h.b[i]) return false;
    }
    return true;
  };

  Rat eps = 1;
  HRep cones = build(eps);
  while (!strictly_inside(cones)) {
    if (++inst.halvings > kEpsilonCap) throw ConstructionError("epsilon not found");
    eps /= 2;
    cones = build(eps);
  }
  inst.epsilon = eps;

  // Vertices of H0 n H1: the two apexes or strictly between the heights.
  {
    QVec apex0 = x0;
    apex0.push_back(-eps);
    QVec apex1 = x1;
    apex1.push_back(1 + eps);
    inst.trichotomy = true;
    for (const QVec& v : vertex_enumeration(cones).points) {
      const Rat& h = v[d - 1];
      if (v != apex0 && v != apex1 && !(sgn(h) > 0 && h < 1)) inst.trichotomy = false;
    }
  }

  HRep raw = cones;
  raw.add_inequality(scale(unit_vector(d, d - 1), Rat(-1)), Rat(0));
  raw.add_inequality(unit_vector(d, d - 1), Rat(1));
  const Polytope unscaled = make_polytope(raw);

  inst.offset = QVec(n);
  inst.scale = QVec(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rat lo = unscaled.v.points[0][i];
    Rat hi = lo;
    for (const QVec& v : unscaled.v.points) {
      lo = std::min(lo, v[i]);
      hi = std::max(hi, v[i]);
    }
    inst.offset[i] = lo;
    inst.scale[i] = hi - lo;
  }
  // x = offset + scale * x' turns a x + c x_d <= b into
  // (a * scale) x' + c x_d <= b - a offset.
  HRep normalized;
  normalized.dim = d;
  normalized.A = QMat(0, d);
  normalized.E = QMat(0, d);
  for (std::size_t i = 0; i < raw.A.rows(); ++i) {
    QVec row = raw.A.row_vec(i);
    Rat rhs = raw.b[i];
    for (std::size_t j = 0; j < n; ++j) {
      rhs -= row[j] * inst.offset[j];
      row[j] *= inst.scale[j];
    }
    normalized.add_inequality(row, rhs);
  }
  std::vector<std::size_t> kept;
  inst.P = make_polytope(normalized, &kept);
  for (std::size_t r = 0; r < kept.size(); ++r) {
    if (kept[r] < m0) inst.h0_rows.push_back(r);
    else if (kept[r] < m0 + m1) inst.h1_rows.push_back(r);
  }
  return inst;
}

std::pair<Polytope, Polytope> lift_project_faces(const LiftProjectInstance& inst) {
  const std::size_t n = inst.d - 1;
  auto face_at = [&](const std::vector<std::size_t>& rows, const Rat& height) {
    HRep h;
    h.dim = n;
    h.A = QMat(0, n);
    h.E = QMat(0, n);
    for (std::size_t r : rows) {
      const std::span<const Rat> row = inst.P.h.A.row(r);
      h.add_inequality(row.first(n), inst.P.h.b[r] - row[n] * height);
    }
    std::vector<std::size_t> kept;
    Polytope p = make_polytope(h, &kept);
    if (kept.size() != rows.size()) throw ConstructionError("lift_project_faces: face lost a facet");
    return p;
  };
  return {face_at(inst.h0_rows, Rat(0)), face_at(inst.h1_rows, Rat(1))};
}

PerturbationData normalized_perturbation(const LiftProjectInstance& inst) {
  PerturbationData out = inst.pert;
  auto stretch = [&](QVec v) {
    for (std::size_t j = 0; j < v.size(); ++j) v[j] *= inst.scale[j];
    return v;
  };
  for (QVec& b : out.V_basis) b = stretch(b);
  for (QVec& u : out.u) u = stretch(u);
  return out;
}

}  // namespace polyunion
