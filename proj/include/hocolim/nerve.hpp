#pragma once

#include "hocolim/chq.hpp"
#include "hocolim/fincat.hpp"

#include <cstddef>
#include <vector>

namespace nerve {

// Normalized chains on the nerve: the dimension-p basis is the set of
// composable strings of p nonidentity morphisms, dimension 0 is the objects.
struct NerveComplex {
  std::size_t max_dim = 0;
  // basis[p][k] = string of p morphism indices; basis[0] entries are empty
  // and stand for the objects in order.
  std::vector<std::vector<std::vector<std::size_t>>> basis;
  chq::ChainComplex chains;  // degrees 0..max_dim
};

NerveComplex nerve_chains(const fincat::FinCategory& c, std::size_t max_dim);

// Homology ranks b_0..b_{max_dim-1}; degrees >= max_dim are not certified by
// the truncation and are not reported.
std::vector<std::size_t> nerve_betti(const fincat::FinCategory& c, std::size_t max_dim);

struct CofinalityReport {
  bool ok = false;
  // Target objects whose under category is empty or disconnected, with the
  // per-object verdicts for reporting.
  std::vector<std::size_t> failing;
  std::vector<bool> nonempty;
  std::vector<bool> connected;
};

// Right cofinality: every (d2 | u) is nonempty with connected underlying
// graph.
CofinalityReport is_right_cofinal(const fincat::Functor& u);

// Necessary homological condition for homotopy right cofinality: each
// (d2 | u) has the reduced nerve homology of a point in degrees < n.
bool is_acyclic_cofinal_up_to(const fincat::Functor& u, std::size_t n);

}  // namespace nerve
