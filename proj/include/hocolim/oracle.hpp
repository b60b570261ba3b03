#pragma once

#include "hocolim/chq.hpp"
#include "hocolim/reedy.hpp"

#include <vector>

namespace oracle {

// Total complex of the normalized simplicial replacement of a diagram over a
// finite direct shape: Tot_n = (+)_{p+q=n} (+)_{p-chains s} X_{first(s), q},
// d = d_bar + (-1)^p d_internal.
struct BarComplex {
  // chains[p] = composable strings of p nonidentity morphisms; chains[0]
  // entries are empty and stand for the objects in order.
  std::vector<std::vector<std::vector<std::size_t>>> chains;
  chq::ChainComplex total;
};

BarComplex bar_complex(const reedy::Diagram& x);

// Homology of the bar total complex; equals the hocolim homology and serves
// as the independent oracle for it.
chq::BettiProfile bar_hocolim_betti(const reedy::Diagram& x);

}  // namespace oracle
