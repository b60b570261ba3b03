#pragma once

#include "hocolim/chq.hpp"
#include "hocolim/fincat.hpp"
#include "hocolim/reedy.hpp"

#include <functional>
#include <map>
#include <vector>

namespace fixtures {

using chq::ChainComplex;
using chq::ChainMap;
using chq::Matrix;
using fincat::FinCategory;

// Poset category from a reflexive-transitive "leq" predicate: one morphism
// per comparable pair.
inline FinCategory poset(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& leq) {
  std::vector<fincat::MorphismData> morphisms;
  std::vector<std::size_t> identity;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  for (std::size_t o = 0; o < n; ++o) {
    identity.push_back(morphisms.size());
    index[{o, o}] = morphisms.size();
    morphisms.push_back({o, o});
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && leq(i, j)) {
        index[{i, j}] = morphisms.size();
        morphisms.push_back({i, j});
      }
  const auto morphisms_copy = morphisms;
  return FinCategory::from_compose_fn(
      n, std::move(morphisms), std::move(identity),
      [morphisms_copy, index](std::size_t g, std::size_t f) {
        return index.at({morphisms_copy[f].src, morphisms_copy[g].dst});
      });
}

inline FinCategory arrow() { return poset(2, [](std::size_t i, std::size_t j) { return i <= j; }); }

// Objects 0, 1, 2 with arrows a : 0 -> 1 and b : 0 -> 2.
inline FinCategory span() {
  return FinCategory(3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {0, 2}}, {0, 1, 2}, {});
}
inline constexpr std::size_t kSpanA = 3;
inline constexpr std::size_t kSpanB = 4;

inline FinCategory chain(std::size_t n) {
  return poset(n + 1, [](std::size_t i, std::size_t j) { return i <= j; });
}

// Commutative square 0 -> 1, 0 -> 2, 1 -> 3, 2 -> 3 (not free).
inline FinCategory square() {
  return poset(4, [](std::size_t i, std::size_t j) {
    if (i == j) return true;
    if (i == 0) return true;
    return j == 3;
  });
}

// 0 and 1 with mutually inverse nonidentity arrows; not direct.
inline FinCategory iso_pair() {
  return FinCategory(2, {{0, 0}, {1, 1}, {0, 1}, {1, 0}}, {0, 1}, {{3, 2, 0}, {2, 3, 1}});
}

inline ChainComplex point(int degree = 0) { return ChainComplex::point(degree); }

// Q in degrees 0 and 1 with zero differential.
inline ChainComplex circle() { return ChainComplex(0, {1, 1}, {Matrix::zero(1, 1)}); }

// Q in degrees 0 and 1 with an isomorphism differential; acyclic.
inline ChainComplex disk() {
  return ChainComplex(0, {1, 1}, {Matrix(1, 1, {ratlin::Rational(1)})});
}

// Two points and a segment joining them.
inline ChainComplex interval() {
  return ChainComplex(0, {2, 1}, {Matrix(2, 1, {ratlin::Rational(1), ratlin::Rational(-1)})});
}

inline ChainMap collapse_circle() {
  std::map<int, Matrix> comps;
  comps[0] = Matrix::identity(1);
  return ChainMap(circle(), point(), std::move(comps));
}

// Pt <- S1 -> Pt over the span; hocolim is the unreduced suspension.
inline reedy::Diagram suspension() {
  reedy::Diagram x;
  x.shape = span();
  x.at_object = {circle(), point(), point()};
  x.at_morphism = {ChainMap::identity(circle()), ChainMap::identity(point()),
                   ChainMap::identity(point()), collapse_circle(), collapse_circle()};
  return x;
}

// Pointwise direct sum of two diagrams over the same shape, with the
// inclusion of the first summand as a diagram map.
inline reedy::DiagramMap diagram_sum_inclusion(const reedy::Diagram& x, const reedy::Diagram& z) {
  reedy::Diagram total;
  total.shape = x.shape;
  std::vector<chq::DirectSumResult> sums;
  for (std::size_t o = 0; o < x.shape.object_count(); ++o) {
    sums.push_back(chq::direct_sum({x.at(o), z.at(o)}));
    total.at_object.push_back(sums.back().object);
  }
  for (std::size_t m = 0; m < x.shape.morphism_count(); ++m) {
    const std::size_t a = x.shape.src(m), b = x.shape.dst(m);
    total.at_morphism.push_back(chq::from_sum(
        sums[a], {chq::compose(sums[b].injections[0], x.map_at(m)),
                  chq::compose(sums[b].injections[1], z.map_at(m))}));
  }
  reedy::DiagramMap inclusion;
  inclusion.source = x;
  inclusion.target = total;
  for (std::size_t o = 0; o < x.shape.object_count(); ++o)
    inclusion.components.push_back(sums[o].injections[0]);
  return inclusion;
}

}  // namespace fixtures
