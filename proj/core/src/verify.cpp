#include "polyunion/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <set>

#include "polyunion/errors.hpp"
#include "polyunion/parallel.hpp"

namespace polyunion {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

nlohmann::json json_int(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

nlohmann::json json_vec(const QVec& v) {
  nlohmann::json a = nlohmann::json::array();
  for (const Rat& x : v) a.push_back(to_string(x));
  return a;
}

Integer binomial(std::size_t n, std::size_t k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer power(const Integer& base, std::size_t e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// max c x over conv(points) by a standard-form LP over convex weights.
Rat hull_support(const std::vector<QVec>& points, const QVec& c, Sense sense) {
  QMat M(1, points.size());
  QVec cost(points.size());
  for (std::size_t j = 0; j < points.size(); ++j) {
    M(0, j) = 1;
    cost[j] = sense == Sense::Maximize ? Rat(-dot(c, points[j])) : dot(c, points[j]);
  }
  const StandardFormResult r = solve_standard_form(M, QVec{Rat(1)}, cost);
  if (r.status != LpStatus::Optimal) throw InternalError("hull_support: LP not optimal");
  return sense == Sense::Maximize ? Rat(-r.value) : r.value;
}

Rat vertex_width(const std::vector<QVec>& points, const QVec& c) {
  Rat lo = dot(c, points.at(0));
  Rat hi = lo;
  for (const QVec& x : points) {
    const Rat v = dot(c, x);
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  return hi - lo;
}

std::set<QVec, LexLess> canonical_set(const HRep& h) {
  const auto rows = canonical_facets(h);
  return {rows.begin(), rows.end()};
}

HRep segment(long lo, long hi) {
  HRep h;
  h.dim = 1;
  h.A = QMat(0, 1);
  h.E = QMat(0, 1);
  h.add_inequality(QVec{Rat(1)}, Rat(hi));
  h.add_inequality(QVec{Rat(-1)}, Rat(-lo));
  return h;
}

}  // namespace

nlohmann::json CheckReport::to_json() const {
  return {{"check", check},   {"params", params},       {"pass", pass},
          {"counts", counts}, {"witnesses", witnesses}, {"runtime_ms", runtime_ms}};
}

std::vector<std::string> validate_report(const nlohmann::json& j) {
  std::vector<std::string> errors;
  if (!j.is_object()) return {"report is not an object"};
  static const std::vector<std::string> keys = {"check", "params", "pass", "counts", "witnesses", "runtime_ms"};
  for (const std::string& k : keys)
    if (!j.contains(k)) errors.push_back("missing key '" + k + "'");
  for (const auto& [k, v] : j.items())
    if (std::find(keys.begin(), keys.end(), k) == keys.end()) errors.push_back("unexpected key '" + k + "'");
  if (!errors.empty()) return errors;
  static const std::vector<std::string> suites = {"balas", "bigm", "construction", "approx", "liftproject", "census"};
  if (!j["check"].is_string() ||
      std::find(suites.begin(), suites.end(), j["check"].get<std::string>()) == suites.end())
    errors.push_back("'check' must name a known suite");
  if (!j["params"].is_object()) errors.push_back("'params' must be an object");
  if (!j["pass"].is_boolean()) errors.push_back("'pass' must be a boolean");
  if (!j["counts"].is_object()) errors.push_back("'counts' must be an object");
  if (!j["witnesses"].is_array()) errors.push_back("'witnesses' must be an array");
  if (!j["runtime_ms"].is_number() || j["runtime_ms"].get<double>() < 0)
    errors.push_back("'runtime_ms' must be a non-negative number");
  return errors;
}

BoundReport min_additional_vars_bound(const Integer& fP, const Integer& fQ) {
  if (fP < 1 || fQ < 1) throw InputError("min_additional_vars_bound: facet counts must be positive");
  BoundReport r;
  r.fP = fP;
  r.fQ = fQ;
  const Integer base = fQ + 1;
  Integer p = base;
  while (p < fP) {
    p *= base;
    ++r.min_m;
  }
  r.detail = "(" + base.get_str() + ")^" + std::to_string(r.min_m + 1) + " = " + p.get_str() + " >= " + fP.get_str();
  if (r.min_m > 0)
    r.detail += " > (" + base.get_str() + ")^" + std::to_string(r.min_m);
  return r;
}

CensusResult face_census(const Polytope& q, std::size_t d) {
  const int D = q.dim();
  if (d == 0 || D < static_cast<int>(d)) throw InputError("face_census: need 1 <= d <= dim(q)");
  CensusResult r;
  for (const Face& f : face_lattice(q))
    if (f.dim >= static_cast<int>(d) - 1 && f.dim < D) ++r.count;
  r.bound = power(Integer(static_cast<unsigned long>(q.num_facets() + 1)), static_cast<std::size_t>(D) - d + 1);
  r.holds = Integer(static_cast<unsigned long>(r.count)) <= r.bound;
  return r;
}

bool face_census_check(const Polytope& q, std::size_t d) { return face_census(q, d).holds; }

std::vector<CayleyCertificate> certify_all(const Polytope& D, const Polytope& Q, const ColoredHRep& colored,
                                           const PerturbationData& pert) {
  const auto tuples = colorful_faces(colored);
  std::vector<CayleyCertificate> certs(tuples.size());
  parallel_for(tuples.size(), [&](std::size_t i) {
    certs[i] = colorful_facet_certificate(D, Q, colored, pert, tuples[i]);
  });
  return certs;
}

namespace {

std::size_t distinct_tight_sets(const std::vector<CayleyCertificate>& certs) {
  std::set<std::pair<IndexSet, IndexSet>> seen;
  for (const CayleyCertificate& c : certs) seen.emplace(c.face0, c.face1);
  return seen.size();
}

bool rows_are_facets(const std::vector<CayleyCertificate>& certs, const HRep& facets) {
  const auto known = canonical_set(facets);
  for (const CayleyCertificate& c : certs) {
    auto [row, rhs] = certificate_row(c);
    row.push_back(rhs);
    if (!known.count(to_rational(primitive_integer(row)))) return false;
  }
  return true;
}

std::size_t max_bits(const Polytope& p) {
  std::size_t bits = 0;
  for (std::size_t i = 0; i < p.h.A.rows(); ++i)
    bits = std::max({bits, bit_size(p.h.A.row(i)), bit_size(std::span<const Rat>(&p.h.b[i], 1))});
  for (const QVec& x : p.v.points) bits = std::max(bits, bit_size(x));
  return bits;
}

}  // namespace

ConstructionResult theorem_construction_check(std::size_t d, unsigned sigma_degree) {
  if (d != 2 && d != 4 && d != 6) throw InputError("theorem_construction_check: d must be 2, 4 or 6");
  ConstructionResult res;
  res.d = d;
  const std::size_t expected = static_cast<std::size_t>(std::pow(2.0 * static_cast<double>(d), static_cast<double>(d / 2)));
  res.fQ = power(Integer(static_cast<unsigned long>(2 * d * d)), sigma_degree);

  if (d == 6) {
    // Colorful enumeration only: the rows of D^Cy(6,36) are the centered
    // moment-curve points.
    const VRep pts = cyclic_points(d, d * d);
    QVec c = zeros(d);
    for (const QVec& x : pts.points) c = add(c, x);
    c = scale(c, Rat(1) / Rat(static_cast<long>(pts.points.size())));
    HRep h;
    h.dim = d;
    h.A = QMat(0, d);
    h.E = QMat(0, d);
    for (const QVec& x : pts.points) h.add_inequality(sub(x, c), Rat(1));
    res.facets_P0 = h.A.rows();
    res.colorful_tuples = colorful_faces(color_facets(h)).size();
    res.pass = res.colorful_tuples == expected;
    if (!res.pass) res.failure = "colorful tuple count differs from (2d)^(d/2)";
    return res;
  }

  try {
    const Polytope D = polar_cyclic(d, d * d);
    const ColoredHRep colored = color_facets(D.h);
    const PerturbationData start = centered_simplex_in_subspace(lemma4_subspace(D, d / 2));
    const PerturbedPolar pq = perturbed_polar(D, colored, start);
    res.facets_P0 = D.num_facets();
    res.facets_P1 = pq.Q.num_facets();
    res.scale_exponent = pq.pert.scale_exponent;
    res.max_bit_size = std::max(max_bits(D), max_bits(pq.Q));
    res.colorful_tuples = colorful_faces(colored).size();
    const auto certs = certify_all(D, pq.Q, colored, pq.pert);
    res.certified = certs.size();
    res.certificates_verified = true;
    res.distinct_facets = distinct_tight_sets(certs);

    bool enumeration_ok = true;
    if (d == 2) {
      const Polytope cayley = cayley_embedding(D.v, pq.Q.v);
      res.total_facets = cayley.num_facets();
      enumeration_ok = rows_are_facets(certs, cayley.h) && *res.total_facets >= expected;
      if (!enumeration_ok) res.failure = "certificate rows not found among the enumerated facets";
    }
    const Integer fP(static_cast<unsigned long>(res.total_facets.value_or(res.distinct_facets)));
    res.bound = min_additional_vars_bound(fP, *res.fQ);
    res.pass = res.facets_P0 == d * d && res.facets_P1 == d * d && res.colorful_tuples == expected &&
               res.distinct_facets == expected && enumeration_ok;
    if (!res.pass && res.failure.empty()) res.failure = "facet or certificate counts differ from the expected values";
  } catch (const ConstructionError& e) {
    res.failure = e.what();
    res.pass = false;
  }
  return res;
}

CheckReport construction_report(std::size_t d, unsigned sigma_degree) {
  const auto start = Clock::now();
  const ConstructionResult r = theorem_construction_check(d, sigma_degree);
  CheckReport rep;
  rep.check = "construction";
  rep.params = {{"d", d}, {"sigma_degree", sigma_degree}};
  rep.pass = r.pass;
  rep.counts = {{"facets_P0", r.facets_P0},
                {"facets_P1", r.facets_P1},
                {"colorful_tuples", r.colorful_tuples},
                {"colorful_facets", r.distinct_facets},
                {"certified", r.certified},
                {"certificates_verified", r.certificates_verified}};
  if (r.total_facets) rep.counts["total_facets"] = *r.total_facets;
  if (r.scale_exponent) rep.counts["scale_exponent"] = *r.scale_exponent;
  if (r.max_bit_size) rep.counts["max_bit_size"] = r.max_bit_size;
  if (r.fQ) rep.counts["fQ"] = json_int(*r.fQ);
  if (r.bound) {
    rep.counts["min_m"] = r.bound->min_m;
    rep.counts["bound_detail"] = r.bound->detail;
  }
  if (!r.failure.empty()) rep.witnesses.push_back({{"failure", r.failure}});
  rep.runtime_ms = elapsed_ms(start);
  return rep;
}

Rat approx_gamma(const Rat& delta) { return (2 + delta) / (2 * (1 + delta)); }

FalsifyResult approx_falsify(const VRep& P, const VRep& Pprime, const Rat& epsilon,
                             const std::vector<QVec>& directions) {
  if (P.points.empty() || Pprime.points.empty()) throw InputError("approx_falsify: empty polytope");
  if (P.dim != Pprime.dim) throw InputError("approx_falsify: dimension mismatch");
  if (sgn(epsilon) < 0) throw InputError("approx_falsify: epsilon must be non-negative");
  for (const QVec& x : P.points) {
    if (std::find(Pprime.points.begin(), Pprime.points.end(), x) != Pprime.points.end()) continue;
    if (!in_convex_hull(Pprime.points, x)) throw InputError("approx_falsify: P is not contained in P'");
  }
  FalsifyResult out;
  const Rat factor = 1 + epsilon;
  for (std::size_t i = 0; i < directions.size(); ++i) {
    const QVec& c = directions[i];
    if (c.size() != P.dim) throw InputError("approx_falsify: direction of wrong dimension");
    if (vertex_width(Pprime.points, c) <= factor * vertex_width(P.points, c)) continue;
    const Rat wp = hull_support(P.points, c, Sense::Maximize) - hull_support(P.points, c, Sense::Minimize);
    const Rat wq = hull_support(Pprime.points, c, Sense::Maximize) - hull_support(Pprime.points, c, Sense::Minimize);
    if (!(wq > factor * wp)) throw InternalError("approx_falsify: LP widths disagree with the vertex scan");
    out.falsified = true;
    out.witness_direction = c;
    out.witness_index = i;
    return out;
  }
  return out;
}

FalsifyResult approx_falsify(const Polytope& P, const Polytope& Pprime, const Rat& epsilon,
                             const std::vector<QVec>& directions) {
  return approx_falsify(P.v, Pprime.v, epsilon, directions);
}

std::vector<QVec> sign_directions(std::size_t d) {
  if (d == 0 || d > 12) throw InputError("sign_directions: need 1 <= d <= 12");
  std::vector<QVec> out;
  for (std::size_t s = 0; s < (std::size_t{1} << d); ++s) {
    QVec c(d);
    for (std::size_t i = 0; i < d; ++i) c[i] = (s >> i) & 1 ? -1 : 1;
    out.push_back(std::move(c));
  }
  return out;
}

std::size_t cutoff_count(const QVec& a, const Rat& b, const std::vector<QVec>& S) {
  std::size_t n = 0;
  for (const QVec& x : S) {
    if (x.size() != a.size()) throw InputError("cutoff_count: dimension mismatch");
    if (dot(a, x) > b) ++n;
  }
  return n;
}

Integer cutoff_closed_form(std::size_t d, const Rat& delta) {
  const Rat gd = approx_gamma(delta) * Rat(static_cast<long>(d));
  Integer sum = 0;
  for (std::size_t j = 0; j <= d; ++j)
    if (Rat(static_cast<long>(j)) > gd) sum += binomial(d, j);
  return sum;
}

EntropyBound entropy_upper_bound(std::size_t n, std::size_t k) {
  if (2 * k > n) throw InputError("entropy_upper_bound: need k <= n/2");
  EntropyBound r;
  for (std::size_t j = 0; j <= k; ++j) r.binomial_sum += binomial(n, j);
  // 2^{n H(k/n)} = (n/k)^k (n/(n-k))^{n-k}, with 0^0 = 1.
  const Integer num = power(Integer(static_cast<unsigned long>(n)), n);
  const Integer den = power(Integer(static_cast<unsigned long>(k)), k) *
                      power(Integer(static_cast<unsigned long>(n - k)), n - k);
  r.analytic = make_rat(num, den);
  r.holds = Rat(r.binomial_sum) <= r.analytic;
  return r;
}

ApproxReport approx_suite(std::size_t d, const Rat& delta, const Rat& epsilon) {
  if (d == 0 || d > 12) throw InputError("approx_suite: need 1 <= d <= 12");
  if (sgn(epsilon) < 0) throw InputError("approx_suite: epsilon must be non-negative");
  if (!(delta > 2 * epsilon)) throw InputError("approx_suite: need delta > 2 epsilon");
  ApproxReport rep;
  rep.d = d;
  rep.delta = delta;
  rep.epsilon = epsilon;
  rep.gamma = approx_gamma(delta);

  const CrossPolytopeFamily fam = cross_polytope_family(d);
  const std::vector<QVec> S = point_family_S(d, delta);
  const std::size_t n = S.size();

  // Claim 1: adding any S-point is caught by its own sign direction.
  std::vector<char> caught(n, 0);
  parallel_for(n, [&](std::size_t i) {
    VRep bigger = fam.Q.v;
    bigger.points.push_back(S[i]);
    QVec c(d);
    for (std::size_t j = 0; j < d; ++j) c[j] = sgn(S[i][j]) > 0 ? 1 : -1;
    caught[i] = approx_falsify(fam.Q.v, bigger, epsilon, {c}).falsified ? 1 : 0;
  });
  rep.falsified_points = static_cast<std::size_t>(std::count(caught.begin(), caught.end(), 1));

  // Facet s x <= 1 and point with sign pattern t: s x = e (d - 2 |s xor t|),
  // so whether it is cut off depends only on the Hamming distance.
  const Rat e = (1 + delta) / Rat(static_cast<long>(d));
  std::vector<bool> cut_at(d + 1);
  for (std::size_t h = 0; h <= d; ++h) cut_at[h] = e * Rat(static_cast<long>(d) - 2 * static_cast<long>(h)) > 1;
  rep.cutoff_counts.assign(fam.Q.num_facets(), 0);
  for (std::size_t f = 0; f < fam.Q.num_facets(); ++f) {
    std::size_t mask = 0;
    for (std::size_t i = 0; i < d; ++i)
      if (sgn(fam.Q.h.A(f, i)) < 0) mask |= std::size_t{1} << i;
    std::size_t count = 0;
    for (std::size_t t = 0; t < n; ++t)
      if (cut_at[static_cast<std::size_t>(std::popcount(mask ^ t))]) ++count;
    rep.cutoff_counts[f] = count;
  }

  rep.closed_form = cutoff_closed_form(d, delta);
  const Rat one_minus = (1 - rep.gamma) * Rat(static_cast<long>(d));
  rep.complement_k = static_cast<std::size_t>(mpz_class(one_minus.get_num() / one_minus.get_den()).get_ui());
  rep.entropy_bound = entropy_upper_bound(d, rep.complement_k);

  const std::size_t canonical = cutoff_count(QVec(d, Rat(1)), Rat(1), S);
  const Integer closed = rep.closed_form;
  const bool counts_ok = std::all_of(rep.cutoff_counts.begin(), rep.cutoff_counts.end(),
                                     [&](std::size_t c) { return Integer(static_cast<unsigned long>(c)) == closed; });
  rep.kappa_measured = std::pow(closed.get_d() / static_cast<double>(n), 1.0 / static_cast<double>(d));
  rep.pass = rep.falsified_points == n && counts_ok && Integer(static_cast<unsigned long>(canonical)) == closed &&
             closed <= rep.entropy_bound.binomial_sum && rep.entropy_bound.holds;
  return rep;
}

CheckReport approx_report(std::size_t d, const Rat& delta, const Rat& epsilon) {
  const auto start = Clock::now();
  const ApproxReport r = approx_suite(d, delta, epsilon);
  CheckReport rep;
  rep.check = "approx";
  rep.params = {{"d", d}, {"delta", to_string(delta)}, {"epsilon", to_string(epsilon)}};
  rep.pass = r.pass;
  const auto [lo, hi] = std::minmax_element(r.cutoff_counts.begin(), r.cutoff_counts.end());
  rep.counts = {{"gamma", to_string(r.gamma)},
                {"points", std::size_t{1} << d},
                {"falsified_points", r.falsified_points},
                {"facets", r.cutoff_counts.size()},
                {"cutoff_min", *lo},
                {"cutoff_max", *hi},
                {"cutoff_closed_form", json_int(r.closed_form)},
                {"complement_k", r.complement_k},
                {"binomial_sum_bound", json_int(r.entropy_bound.binomial_sum)},
                {"entropy_bound", to_string(r.entropy_bound.analytic)},
                {"kappa_measured", r.kappa_measured}};
  rep.runtime_ms = elapsed_ms(start);
  return rep;
}

ConicCombination caratheodory_restrict(const Polytope& P, const QVec& a, const Rat& b) {
  if (!P.full_dimensional()) throw InputError("caratheodory_restrict: polytope is not full-dimensional");
  if (a.size() != P.ambient_dim()) throw InputError("caratheodory_restrict: dimension mismatch");
  const LpResult lp = optimize(P.h, a);
  if (lp.status != LpStatus::Optimal) throw InternalError("caratheodory_restrict: LP not optimal");
  if (*lp.value > b) throw InputError("caratheodory_restrict: inequality is not valid");

  std::vector<std::size_t> rows;
  QVec y;
  for (std::size_t i = 0; i < lp.dual.size(); ++i) {
    if (sgn(lp.dual[i]) > 0) {
      rows.push_back(i);
      y.push_back(lp.dual[i]);
    }
  }
  // Caratheodory: while the support rows are dependent, move along a kernel
  // direction until a multiplier hits zero. Support rows are tight at the
  // optimum, so the right-hand side is preserved.
  const std::size_t d = P.ambient_dim();
  for (;;) {
    std::vector<QVec> support;
    for (std::size_t r : rows) support.push_back(P.h.A.row_vec(r));
    if (rank_of_vectors(support, d) == rows.size()) break;
    const std::vector<QVec> ker = kernel_basis(QMat::from_rows(support, d).transpose());
    QVec z = ker.at(0);
    if (std::none_of(z.begin(), z.end(), [](const Rat& v) { return sgn(v) > 0; })) z = scale(z, Rat(-1));
    std::optional<Rat> t;
    for (std::size_t i = 0; i < z.size(); ++i)
      if (sgn(z[i]) > 0 && (!t || y[i] / z[i] < *t)) t = y[i] / z[i];
    std::vector<std::size_t> next_rows;
    QVec next_y;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Rat v = y[i] - *t * z[i];
      if (sgn(v) > 0) {
        next_rows.push_back(rows[i]);
        next_y.push_back(v);
      }
    }
    rows = std::move(next_rows);
    y = std::move(next_y);
  }

  ConicCombination out;
  out.rows = rows;
  out.multipliers = y;
  out.a = zeros(d);
  out.rhs = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out.a = add(out.a, scale(P.h.A.row(rows[i]), y[i]));
    out.rhs += y[i] * P.h.b[rows[i]];
  }
  if (out.a != a || out.rhs != *lp.value || rows.size() > d)
    throw InternalError("caratheodory_restrict: combination does not reproduce the inequality");
  return out;
}

LiftProjectResult lift_project_check(std::size_t d, unsigned sigma_degree) {
  if (d != 3 && d != 5) throw InputError("lift_project_check: d must be 3 or 5");
  LiftProjectResult res;
  res.d = d;
  res.expected_facets = 2 * (d - 1) * (d - 1) + 2;
  try {
    const LiftProjectInstance inst = lift_project_instance(d);
    res.facets = inst.P.num_facets();
    res.trichotomy = inst.trichotomy;
    res.max_bit_size = max_bits(inst.P);
    res.in_unit_cube = std::all_of(inst.P.v.points.begin(), inst.P.v.points.end(), [](const QVec& x) {
      return std::all_of(x.begin(), x.end(), [](const Rat& v) { return sgn(v) >= 0 && v <= 1; });
    });

    const auto [f0, f1] = lift_project_faces(inst);
    std::vector<QVec> bottom;
    std::vector<QVec> top;
    for (const QVec& x : inst.P.v.points) {
      const QVec head(x.begin(), x.end() - 1);
      if (sgn(x.back()) == 0) bottom.push_back(head);
      if (x.back() == 1) top.push_back(head);
    }
    std::sort(bottom.begin(), bottom.end(), LexLess{});
    std::sort(top.begin(), top.end(), LexLess{});
    res.faces_match = combinatorial_equal(inst.D, f0) && combinatorial_equal(inst.Q, f1) &&
                      bottom == f0.v.points && top == f1.v.points;

    const ColoredHRep colored = color_facets(f0.h);
    const auto certs = certify_all(f0, f1, colored, normalized_perturbation(inst));
    res.colorful_certified = certs.size();
    res.distinct_facets = distinct_tight_sets(certs);
    res.certificates_in_hull = true;
    if (d == 3) {
      const Polytope hull = cayley_embedding(f0.v, f1.v);
      res.hull_facets = hull.num_facets();
      res.certificates_in_hull = rows_are_facets(certs, hull.h);
    }
    const Integer fQ = power(Integer(static_cast<unsigned long>(res.facets)), sigma_degree);
    res.bound = min_additional_vars_bound(
        Integer(static_cast<unsigned long>(res.hull_facets.value_or(res.distinct_facets))), fQ);

    const std::size_t n = d - 1;
    const std::size_t expected_colorful =
        static_cast<std::size_t>(std::pow(2.0 * static_cast<double>(n), static_cast<double>(n / 2)));
    res.pass = res.facets == res.expected_facets && res.in_unit_cube && res.faces_match && res.trichotomy &&
               res.distinct_facets == expected_colorful && res.certificates_in_hull;
    if (!res.pass) res.failure = "lift-and-project instance failed a structural check";
  } catch (const ConstructionError& e) {
    res.failure = e.what();
  }
  return res;
}

CheckReport lift_project_report(std::size_t d, unsigned sigma_degree) {
  const auto start = Clock::now();
  const LiftProjectResult r = lift_project_check(d, sigma_degree);
  CheckReport rep;
  rep.check = "liftproject";
  rep.params = {{"d", d}, {"sigma_degree", sigma_degree}};
  rep.pass = r.pass;
  rep.counts = {{"facets", r.facets},
                {"expected_facets", r.expected_facets},
                {"in_unit_cube", r.in_unit_cube},
                {"faces_match", r.faces_match},
                {"trichotomy", r.trichotomy},
                {"colorful_certified", r.colorful_certified},
                {"colorful_facets", r.distinct_facets},
                {"certificates_in_hull", r.certificates_in_hull}};
  if (r.max_bit_size) rep.counts["max_bit_size"] = r.max_bit_size;
  if (r.hull_facets) rep.counts["hull_facets"] = *r.hull_facets;
  if (r.bound) {
    rep.counts["min_m"] = r.bound->min_m;
    rep.counts["bound_detail"] = r.bound->detail;
  }
  if (!r.failure.empty()) rep.witnesses.push_back({{"failure", r.failure}});
  rep.runtime_ms = elapsed_ms(start);
  return rep;
}

Polytope random_polytope(std::size_t d, std::mt19937_64& rng) {
  if (d == 0) throw InputError("random_polytope: d must be positive");
  for (;;) {
    VRep v;
    v.dim = d;
    for (std::size_t i = 0; i < d + 2; ++i) {
      QVec x(d);
      for (std::size_t j = 0; j < d; ++j) {
        const long num = static_cast<long>(rng() % 13) - 6;
        const long den = static_cast<long>(rng() % 3) + 1;
        x[j] = make_rat(num, den);
      }
      v.points.push_back(std::move(x));
    }
    if (affine_dimension(v.points) == static_cast<int>(d)) return make_polytope(v);
  }
}

std::vector<BalasTrial> balas_suite(const std::vector<std::size_t>& dims, std::size_t trials, std::uint64_t seed) {
  if (dims.empty()) throw InputError("balas_suite: no dimensions given");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Polytope, Polytope>> pairs;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::size_t d = dims[t % dims.size()];
    Polytope p1 = random_polytope(d, rng);
    Polytope p2 = random_polytope(d, rng);
    pairs.emplace_back(std::move(p1), std::move(p2));
  }
  std::vector<BalasTrial> out(trials);
  parallel_for(trials, [&](std::size_t t) {
    const auto& [p1, p2] = pairs[t];
    const std::size_t d = p1.ambient_dim();
    const DisjunctiveEF ef = balas_ef(p1.h, p2.h);
    BalasTrial& r = out[t];
    r.d = d;
    r.f1 = ef.f1;
    r.f2 = ef.f2;
    r.rows = ef.num_rows();
    r.vars = ef.num_vars();
    r.size_ok = r.rows == p1.num_facets() + p2.num_facets() + 2 && r.vars == 2 * d + 1;
    const Polytope oracle = conv_union(p1.v, p2.v);
    std::vector<std::size_t> keep(d);
    for (std::size_t i = 0; i < d; ++i) keep[i] = i;
    const HRep proj = fm_project(ef.h, keep);
    r.hull_equal = proj.E.rows() == 0 && oracle.h.E.rows() == 0 &&
                   canonical_facets(proj) == canonical_facets(oracle.h);
  });
  return out;
}

CheckReport balas_report(const std::vector<std::size_t>& dims, std::size_t trials, std::uint64_t seed) {
  const auto start = Clock::now();
  const auto results = balas_suite(dims, trials, seed);
  CheckReport rep;
  rep.check = "balas";
  rep.params = {{"dims", dims}, {"trials", trials}, {"seed", seed}};
  std::size_t equal = 0;
  std::size_t sized = 0;
  for (std::size_t t = 0; t < results.size(); ++t) {
    const BalasTrial& r = results[t];
    equal += r.hull_equal;
    sized += r.size_ok;
    if (!r.hull_equal || !r.size_ok)
      rep.witnesses.push_back({{"trial", t}, {"d", r.d}, {"size_ok", r.size_ok}, {"hull_equal", r.hull_equal}});
  }
  rep.pass = equal == results.size() && sized == results.size();
  rep.counts = {{"trials", results.size()}, {"hull_equal", equal}, {"size_ok", sized}};
  rep.runtime_ms = elapsed_ms(start);
  return rep;
}

CheckReport bigm_report(const Rat& rho) {
  const auto start = Clock::now();
  const HRep h1 = segment(0, 1);
  const HRep h2 = segment(2, 3);
  const Polytope p1 = make_polytope(h1);
  const Polytope p2 = make_polytope(h2);
  const Polytope oracle = conv_union(p1.v, p2.v);
  const MipRep tight = big_m(h1, h2, BigMMode::tight());
  const MipRep loose = big_m(h1, h2, BigMMode::factor(rho));

  auto slices_ok = [&](const MipRep& rep) {
    return same_set(make_polytope(lambda_slice(rep, Rat(1))), p1) &&
           same_set(make_polytope(lambda_slice(rep, Rat(0))), p2);
  };
  const HullCheck ct = convex_hull_property_check(tight, oracle);
  const HullCheck cl = convex_hull_property_check(loose, oracle);
  const bool witness_ok = cl.witness && !in_convex_hull(oracle.v.points, *cl.witness);

  CheckReport rep;
  rep.check = "bigm";
  rep.params = {{"rho", to_string(rho)}, {"P1", "[0,1]"}, {"P2", "[2,3]"}};
  rep.counts = {{"tight_M1", json_vec(tight.M1)},
                {"tight_M2", json_vec(tight.M2)},
                {"factor_M1", json_vec(loose.M1)},
                {"factor_M2", json_vec(loose.M2)},
                {"tight_holds", ct.holds},
                {"factor_holds", cl.holds},
                {"slices_ok", slices_ok(tight) && slices_ok(loose)}};
  if (cl.witness) rep.witnesses.push_back({{"mode", "factor"}, {"x", json_vec(*cl.witness)}});
  rep.pass = ct.holds && !cl.holds && witness_ok && slices_ok(tight) && slices_ok(loose);
  rep.runtime_ms = elapsed_ms(start);
  return rep;
}

CheckReport census_report() {
  const auto start = Clock::now();
  std::vector<std::pair<std::string, Polytope>> cases;
  {
    HRep cube;
    cube.dim = 3;
    cube.A = QMat(0, 3);
    cube.E = QMat(0, 3);
    for (std::size_t i = 0; i < 3; ++i) {
      cube.add_inequality(unit_vector(3, i), Rat(1));
      cube.add_inequality(scale(unit_vector(3, i), Rat(-1)), Rat(0));
    }
    cases.emplace_back("cube3", make_polytope(cube));
    VRep simplex;
    simplex.dim = 4;
    simplex.points.push_back(zeros(4));
    for (std::size_t i = 0; i < 4; ++i) simplex.points.push_back(unit_vector(4, i));
    cases.emplace_back("simplex4", make_polytope(simplex));
    const Polytope D = polar_cyclic(2, 4);
    const ColoredHRep colored = color_facets(D.h);
    const PerturbedPolar pq =
        perturbed_polar(D, colored, centered_simplex_in_subspace(lemma4_subspace(D, 1)));
    cases.emplace_back("cayley_d2", cayley_embedding(D.v, pq.Q.v));
  }
  CheckReport rep;
  rep.check = "census";
  rep.pass = true;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& [name, q] : cases) {
    for (std::size_t d = 1; d <= static_cast<std::size_t>(q.dim()); ++d) {
      const CensusResult c = face_census(q, d);
      rows.push_back({{"polytope", name}, {"d", d}, {"faces", c.count}, {"bound", json_int(c.bound)},
                      {"holds", c.holds}});
      if (!c.holds) {
        rep.pass = false;
        rep.witnesses.push_back({{"polytope", name}, {"d", d}});
      }
    }
  }
  rep.params = {{"polytopes", {"cube3", "simplex4", "cayley_d2"}}};
  rep.counts = {{"cases", rows.size()}, {"table", rows}};
  rep.runtime_ms = elapsed_ms(start);
  return rep;
}

}  // namespace polyunion
