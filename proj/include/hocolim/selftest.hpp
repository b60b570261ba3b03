#pragma once

#include "hocolim/chq.hpp"
#include "hocolim/fincat.hpp"
#include "hocolim/hofrac.hpp"
#include "hocolim/reedy.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace selftest {

using Rng = std::mt19937_64;

// Free category on a random acyclic multigraph, pruned to the requested
// morphism budget. Free shapes keep random diagrams functorial: a diagram is
// any choice of maps on the generating edges.
struct FreeDirectShape {
  fincat::FinCategory cat;
  std::vector<std::size_t> generators;            // generating edges among the morphisms
  std::vector<std::vector<std::size_t>> path_of;  // generator word per morphism (empty = identity)
};

FreeDirectShape random_free_direct_shape(Rng& rng, std::size_t max_objects,
                                         std::size_t max_nonidentity);

chq::ChainComplex random_complex(Rng& rng, int lo_min = 0, int hi_max = 3,
                                 std::size_t max_dim = 3);
chq::ChainComplex random_acyclic(Rng& rng);

// Uniform-ish element of the exact solution space of the chain map equations.
chq::ChainMap random_chain_map(Rng& rng, const chq::ChainComplex& src,
                               const chq::ChainComplex& dst);

chq::ChainMap random_automorphism(Rng& rng, const chq::ChainComplex& a);
chq::ChainMap random_monic_from(Rng& rng, const chq::ChainComplex& src);
chq::ChainMap random_quasi_iso_from(Rng& rng, const chq::ChainComplex& src);
chq::ChainMap random_quasi_iso_to(Rng& rng, const chq::ChainComplex& dst);

reedy::Diagram random_diagram(Rng& rng, const FreeDirectShape& shape, int hi_max = 3,
                              std::size_t max_dim = 3);

// Functor between free shapes; falls back to a constant functor when the
// random object assignment admits no morphism choices.
fincat::Functor random_functor(Rng& rng, const FreeDirectShape& from, const FreeDirectShape& to);

hofrac::Fraction random_fraction(Rng& rng, const chq::ChainComplex& src,
                                 const chq::ChainComplex& dst);

struct CriterionResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// The acceptance criteria, deterministic under the seed. `quick` shrinks the
// instance counts for an interactive smoke run.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed, bool quick = false);

}  // namespace selftest
