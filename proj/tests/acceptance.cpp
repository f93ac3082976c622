// Runs the twelve acceptance checks and prints one PASS/FAIL line for each.
// Exit status is the number of failed checks.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>

#include "polyunion/constructions.hpp"
#include "polyunion/disjunction.hpp"
#include "polyunion/faces.hpp"
#include "polyunion/projection.hpp"
#include "polyunion/verify.hpp"

using namespace polyunion;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::vector<std::size_t> first_coords(std::size_t d) {
  std::vector<std::size_t> keep(d);
  for (std::size_t i = 0; i < d; ++i) keep[i] = i;
  return keep;
}

Outcome balas_hull() {
  const auto trials = balas_suite({1, 2, 3}, 20, 7);
  std::size_t ok = 0;
  for (const BalasTrial& t : trials) ok += t.hull_equal;
  return {trials.size() == 20 && ok == 20, std::to_string(ok) + "/20 projections equal the hull"};
}

Outcome ef_size() {
  std::size_t ok = 0, total = 0;
  for (const BalasTrial& t : balas_suite({1, 2, 3}, 20, 7)) {
    ++total;
    ok += t.rows == t.f1 + t.f2 + 2 && t.vars == 2 * t.d + 1;
  }
  // The fixed families as well.
  for (std::size_t d = 1; d <= 6; ++d) {
    const CrossPolytopeFamily fam = cross_polytope_family(d);
    const DisjunctiveEF ef = balas_ef(fam.P1_h, fam.Pm1_h);
    ++total;
    ok += ef.num_rows() == 2 * (d + 2) + 2 && ef.num_vars() == 2 * d + 1;
  }
  return {ok == total, std::to_string(ok) + "/" + std::to_string(total) + " formulations sized f1+f2+2 rows, 2d+1 vars"};
}

Outcome construction(std::size_t d) {
  const ConstructionResult r = theorem_construction_check(d);
  std::string detail = "P1/P2 facets " + std::to_string(r.facets_P0) + "/" + std::to_string(r.facets_P1) +
                       ", tuples " + std::to_string(r.colorful_tuples) + ", distinct facets " +
                       std::to_string(r.distinct_facets);
  if (r.total_facets) detail += ", enumerated " + std::to_string(*r.total_facets);
  if (!r.failure.empty()) detail += ", " + r.failure;
  const std::size_t expected = d == 2 ? 4 : 64;
  bool pass = r.pass && r.facets_P0 == d * d && r.facets_P1 == d * d && r.colorful_tuples == expected &&
              r.certified == expected && r.distinct_facets == expected;
  if (d == 2) pass = pass && r.total_facets.has_value();
  return {pass, detail};
}

Outcome lemma4_pipeline() {
  const Polytope D = polar_cyclic(4, 16);
  const std::vector<QVec> V = lemma4_subspace(D, 2);
  const std::size_t faces = faces_of_dim(D, 2).size();
  const bool rank_ok = V.size() == 2 && rank_of_vectors(V, 4) == 2 && lemma4_condition_holds(D, 2, V);
  const ColoredHRep colored = color_facets(D.h);
  const PerturbedPolar pq = perturbed_polar(D, colored, centered_simplex_in_subspace(V));
  std::vector<std::size_t> id(D.num_facets());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
  const bool comb = combinatorial_equal(D, pq.Q, id);
  return {rank_ok && faces == 120 && comb,
          "dim V " + std::to_string(V.size()) + ", " + std::to_string(faces) + " 2-faces checked, scale_exponent " +
              std::to_string(pq.pert.scale_exponent)};
}

Outcome census() {
  const CheckReport r = census_report();
  std::size_t held = 0;
  for (const auto& row : r.counts["table"]) held += row["holds"].get<bool>();
  return {r.pass, std::to_string(held) + "/" + std::to_string(r.counts["table"].size()) + " (polytope, d) cases within the bound"};
}

Outcome cross_polytope() {
  bool pass = true;
  std::string detail;
  for (std::size_t d = 1; d <= 6; ++d) {
    const CrossPolytopeFamily fam = cross_polytope_family(d);
    const Polytope hull = conv_union(fam.P1.v, fam.Pm1.v);
    const HRep proj = fm_project(balas_ef(fam.P1_h, fam.Pm1_h).h, first_coords(d));
    const bool ok = hull.num_facets() == (std::size_t{1} << d) && canonical_facets(proj) == canonical_facets(hull.h);
    pass = pass && ok;
    detail += (d > 1 ? " " : "") + std::to_string(hull.num_facets());
  }
  return {pass, "facets d=1..6:" + detail};
}

Outcome approximation() {
  const Rat delta(1, 2), eps(1, 5);
  const ApproxReport r = approx_suite(12, delta, eps);
  // Width of Q in a sign direction is 2; an S-point reaches 12 (1 + delta) / 12.
  const Rat reach = Rat(12) * (1 + delta) / 12;
  const bool width_ok = 1 + reach == Rat(5, 2) && (1 + eps) * 2 == Rat(12, 5) && Rat(5, 2) > Rat(12, 5);
  bool cut_ok = r.cutoff_counts.size() == 4096;
  for (std::size_t c : r.cutoff_counts) cut_ok = cut_ok && c == 13;
  const bool pass = r.pass && width_ok && r.falsified_points == 4096 && cut_ok && r.closed_form == 13 &&
                    r.complement_k == 2 && r.entropy_bound.binomial_sum == 79 && r.closed_form <= 79;
  return {pass, std::to_string(r.falsified_points) + " falsified, cutoffs " +
                    (cut_ok ? std::string("13 on every facet") : std::string("mismatch")) + ", bound " +
                    r.entropy_bound.binomial_sum.get_str()};
}

Outcome caratheodory() {
  std::mt19937_64 rng(2024);
  const Polytope q3 = cross_polytope_family(3).Q;
  const Polytope lp = lift_project_instance(3).P;
  std::size_t ok = 0, total = 0;
  for (const Polytope* p : {&q3, &lp}) {
    for (int t = 0; t < 20; ++t) {
      QVec a(3);
      do {
        for (Rat& x : a) x = make_rat(static_cast<long>(rng() % 13) - 6, static_cast<long>(rng() % 3) + 1);
      } while (is_zero(a));
      Rat best = dot(a, p->v.points.front());
      for (const QVec& x : p->v.points) best = std::max(best, dot(a, x));
      const Rat b = best + make_rat(static_cast<long>(rng() % 4), 2);
      const ConicCombination c = caratheodory_restrict(*p, a, b);
      QVec sum = zeros(3);
      Rat rhs = 0;
      bool positive = true;
      for (std::size_t i = 0; i < c.rows.size(); ++i) {
        positive = positive && sgn(c.multipliers[i]) > 0;
        sum = add(sum, scale(p->h.A.row(c.rows[i]), c.multipliers[i]));
        rhs += c.multipliers[i] * p->h.b[c.rows[i]];
      }
      ++total;
      ok += c.rows.size() <= 3 && positive && sum == a && rhs == best && rhs <= b;
    }
  }
  return {ok == 40, std::to_string(ok) + "/40 inequalities reproduced by <= 3 facet rows"};
}

Outcome lift_project() {
  const LiftProjectResult r = lift_project_check(3);
  const bool pass = r.pass && r.facets == 10 && r.faces_match && r.in_unit_cube && r.distinct_facets >= 4 &&
                    r.hull_facets.has_value() && r.certificates_in_hull;
  return {pass, std::to_string(r.facets) + " facets, " + std::to_string(r.distinct_facets) +
                    " colorful facets, hull " + std::to_string(r.hull_facets.value_or(0)) + " facets"};
}

Outcome big_m_contrast() {
  const CheckReport r = bigm_report(Rat(5));
  return {r.pass, r.witnesses.dump()};
}

Outcome cayley_slice() {
  std::mt19937_64 rng(12);
  const std::size_t dims[] = {1, 2, 3, 2, 3};
  std::size_t ok = 0;
  for (std::size_t d : dims) {
    const Polytope p0 = random_polytope(d, rng);
    const Polytope p1 = random_polytope(d, rng);
    const Polytope slice = make_polytope(height_slice(cayley_embedding(p0.v, p1.v), Rat(1, 2)));
    ok += same_set(slice, minkowski_combination(p0.v, p1.v, Rat(1, 2)));
  }
  return {ok == 5, std::to_string(ok) + "/5 slices equal the Minkowski mean"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Balas projection equals conv(P1 u P2) on 20 random pairs", balas_hull},
      {"extended formulation size", ef_size},
      {"construction d=2 certificates", [] { return construction(2); }},
      {"construction d=4 certificates", [] { return construction(4); }},
      {"subspace and perturbation d=4", lemma4_pipeline},
      {"face census", census},
      {"cross-polytope d=1..6", cross_polytope},
      {"approximation counting d=12", approximation},
      {"Caratheodory restriction", caratheodory},
      {"lift-and-project d=3", lift_project},
      {"big-M contrast", big_m_contrast},
      {"Cayley half slice", cayley_slice},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += !o.pass;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.pass ? "[PASS]" : "[FAIL]") << " criterion " << (i + 1) << ": " << criteria[i].first << " ("
              << o.detail << ", " << timing << ")" << std::endl;
  }
  return failed;
}
