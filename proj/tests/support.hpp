#pragma once

#include <initializer_list>
#include <random>

#include "polyunion/polytope.hpp"

namespace polyunion::testing {

inline QVec q(std::initializer_list<long> xs) {
  QVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline HRep empty_hrep(std::size_t d) {
  HRep h;
  h.dim = d;
  h.A = QMat(0, d);
  h.E = QMat(0, d);
  return h;
}

/// [lo, hi]^d.
inline HRep box(std::size_t d, long lo, long hi) {
  HRep h = empty_hrep(d);
  for (std::size_t i = 0; i < d; ++i) {
    h.add_inequality(unit_vector(d, i), Rat(hi));
    h.add_inequality(scale(unit_vector(d, i), Rat(-1)), Rat(-lo));
  }
  return h;
}

inline HRep interval(long lo, long hi) {
  HRep h = empty_hrep(1);
  h.add_inequality(q({1}), Rat(hi));
  h.add_inequality(q({-1}), Rat(-lo));
  return h;
}

inline VRep points(std::size_t d, std::initializer_list<std::initializer_list<long>> pts) {
  VRep v;
  v.dim = d;
  for (auto p : pts) v.points.push_back(q(p));
  return v;
}

inline QVec random_vec(std::size_t d, std::mt19937_64& rng, long range = 5) {
  QVec v(d);
  for (auto& x : v) x = Rat(static_cast<long>(rng() % (2 * range + 1)) - range);
  return v;
}

}  // namespace polyunion::testing
