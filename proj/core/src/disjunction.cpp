#include "polyunion/disjunction.hpp"

#include <algorithm>

#include "polyunion/errors.hpp"

namespace polyunion {

namespace {

void require_polytope(const HRep& h, const char* what) {
  h.validate();
  if (is_empty(h)) throw InputError(std::string(what) + ": empty");
  if (!is_bounded(h)) throw InputError(std::string(what) + ": not a polytope");
}

Rat support(const HRep& h, std::span<const Rat> a) {
  const LpResult r = optimize(h, QVec(a.begin(), a.end()), Sense::Maximize);
  if (r.status != LpStatus::Optimal) throw InternalError("big_m: unbounded M");
  return *r.value;
}

HullCheck check_relaxation(const HRep& relaxation, std::size_t d, const Polytope& oracle,
                           ProjectionRoute route) {
  if (oracle.ambient_dim() != d) throw InputError("convex_hull_property_check: oracle dimension mismatch");
  std::vector<std::size_t> keep(d);
  for (std::size_t i = 0; i < d; ++i) keep[i] = i;
  HullCheck out;
  out.projection = fm_project(relaxation, keep, route);
  const Polytope proj = make_polytope(out.projection);
  if (proj.v.points == oracle.v.points) {
    out.holds = true;
    return out;
  }
  for (const QVec& x : proj.v.points) {
    if (!oracle.h.contains(x)) {
      if (in_convex_hull(oracle.v.points, x))
        throw InternalError("convex_hull_property_check: witness inside the oracle hull");
      out.witness = x;
      break;
    }
  }
  return out;
}

}  // namespace

DisjunctiveEF balas_ef(const HRep& h1, const HRep& h2) {
  require_polytope(h1, "balas_ef");
  require_polytope(h2, "balas_ef");
  if (h1.dim != h2.dim) throw InputError("balas_ef: dimension mismatch");
  const std::size_t d = h1.dim;
  const auto [A1, b1] = h1.as_inequalities();
  const auto [A2, b2] = h2.as_inequalities();

  DisjunctiveEF ef;
  ef.d = d;
  ef.f1 = A1.rows();
  ef.f2 = A2.rows();
  ef.h.dim = 2 * d + 1;
  ef.h.A = QMat(0, 2 * d + 1);
  ef.h.E = QMat(0, 2 * d + 1);
  const std::size_t lam = 2 * d;
  for (std::size_t i = 0; i < A1.rows(); ++i) {
    QVec row(2 * d + 1, Rat(0));
    for (std::size_t j = 0; j < d; ++j) row[d + j] = A1(i, j);
    row[lam] = -b1[i];
    ef.h.add_inequality(row, Rat(0));
  }
  for (std::size_t i = 0; i < A2.rows(); ++i) {
    QVec row(2 * d + 1, Rat(0));
    for (std::size_t j = 0; j < d; ++j) {
      row[j] = A2(i, j);
      row[d + j] = -A2(i, j);
    }
    row[lam] = b2[i];
    ef.h.add_inequality(row, b2[i]);
  }
  ef.h.add_inequality(scale(unit_vector(2 * d + 1, lam), Rat(-1)), Rat(0));
  ef.h.add_inequality(unit_vector(2 * d + 1, lam), Rat(1));
  return ef;
}

Polytope conv_union(const VRep& v1, const VRep& v2) {
  if (v1.points.empty() || v2.points.empty()) throw InputError("conv_union: empty input");
  if (v1.dim != v2.dim) throw InputError("conv_union: dimension mismatch");
  VRep all;
  all.dim = v1.dim;
  all.points = v1.points;
  all.points.insert(all.points.end(), v2.points.begin(), v2.points.end());
  return make_polytope(all);
}

MipRep big_m(const HRep& h1, const HRep& h2, BigMMode mode) {
  require_polytope(h1, "big_m");
  require_polytope(h2, "big_m");
  if (h1.dim != h2.dim) throw InputError("big_m: dimension mismatch");
  if (mode.kind == BigMMode::Kind::Factor && mode.rho < 1) throw InputError("big_m: factor below 1");
  const std::size_t d = h1.dim;
  const auto [A1, b1] = h1.as_inequalities();
  const auto [A2, b2] = h2.as_inequalities();

  MipRep rep;
  rep.d = d;
  rep.integral_vars = {d};
  for (std::size_t i = 0; i < A1.rows(); ++i) rep.M1.push_back(support(h2, A1.row(i)) - b1[i]);
  for (std::size_t i = 0; i < A2.rows(); ++i) rep.M2.push_back(support(h1, A2.row(i)) - b2[i]);
  if (mode.kind == BigMMode::Kind::Factor) {
    for (Rat& m : rep.M1) m = mode.rho * abs(m);
    for (Rat& m : rep.M2) m = mode.rho * abs(m);
  }

  rep.h.dim = d + 1;
  rep.h.A = QMat(0, d + 1);
  rep.h.E = QMat(0, d + 1);
  for (std::size_t i = 0; i < A1.rows(); ++i) {
    QVec row = A1.row_vec(i);
    row.push_back(rep.M1[i]);
    rep.h.add_inequality(row, b1[i] + rep.M1[i]);
  }
  for (std::size_t i = 0; i < A2.rows(); ++i) {
    QVec row = A2.row_vec(i);
    row.push_back(-rep.M2[i]);
    rep.h.add_inequality(row, b2[i]);
  }
  rep.h.add_inequality(scale(unit_vector(d + 1, d), Rat(-1)), Rat(0));
  rep.h.add_inequality(unit_vector(d + 1, d), Rat(1));
  return rep;
}

HRep lambda_slice(const MipRep& rep, const Rat& lambda) {
  const std::size_t d = rep.d;
  HRep out;
  out.dim = d;
  out.A = QMat(0, d);
  out.E = QMat(0, d);
  for (std::size_t i = 0; i < rep.h.A.rows(); ++i) {
    const std::span<const Rat> row = rep.h.A.row(i);
    const QVec a(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(d));
    const Rat rhs = rep.h.b[i] - row[d] * lambda;
    if (is_zero(a)) {
      if (sgn(rhs) < 0) out.add_inequality(a, rhs);
      continue;
    }
    out.add_inequality(a, rhs);
  }
  return out;
}

HullCheck convex_hull_property_check(const DisjunctiveEF& rep, const Polytope& oracle, ProjectionRoute route) {
  return check_relaxation(rep.h, rep.d, oracle, route);
}

HullCheck convex_hull_property_check(const MipRep& rep, const Polytope& oracle, ProjectionRoute route) {
  return check_relaxation(rep.h, rep.d, oracle, route);
}

SplitPieces split_disjunction(const Polytope& p, const QVec& pi, const Rat& pi0) {
  if (pi.size() != p.ambient_dim()) throw InputError("split_disjunction: dimension mismatch");
  SplitPieces out;
  out.p0 = p.h;
  out.p0.irredundant = false;
  out.p0.add_inequality(pi, pi0);
  out.p1 = p.h;
  out.p1.irredundant = false;
  out.p1.add_inequality(scale(pi, Rat(-1)), -(pi0 + 1));
  out.p0_empty = is_empty(out.p0);
  out.p1_empty = is_empty(out.p1);
  return out;
}

}  // namespace polyunion
