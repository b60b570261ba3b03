#pragma once

#include "hocolim/chq.hpp"
#include "hocolim/fincat.hpp"

#include <optional>
#include <string>
#include <vector>

namespace reedy {

// Functor from a finite shape into bounded rational chain complexes.
struct Diagram {
  fincat::FinCategory shape;
  std::vector<chq::ChainComplex> at_object;
  std::vector<chq::ChainMap> at_morphism;

  const chq::ChainComplex& at(std::size_t o) const { return at_object[o]; }
  const chq::ChainMap& map_at(std::size_t m) const { return at_morphism[m]; }

  // Functoriality: identities to identities, composites to composites,
  // endpoints matching.
  std::optional<std::string> validate() const;
};

struct DiagramMap {
  Diagram source, target;
  std::vector<chq::ChainMap> components;

  std::optional<std::string> validate() const;  // naturality, exact
  bool is_pointwise_quasi_iso() const;
  bool is_pointwise_monic() const;
};

// Apex plus one leg per object of the shape, commuting with every arrow.
struct Cocone {
  chq::ChainComplex apex;
  std::vector<chq::ChainMap> legs;
};

struct Colimit {
  chq::ChainComplex object;
  Cocone cocone;
};

// (u^* x)_{d1} = x_{u d1}.
Diagram restrict(const fincat::Functor& u, const Diagram& x);

// For alpha : u => v, the pointwise map u^*X -> v^*X with components
// X_{alpha_d}.
DiagramMap whisker(const fincat::NaturalTransformation& alpha, const Diagram& x);

struct LatchingResult {
  chq::ChainComplex object;       // LX_d
  chq::ChainMap map_into;         // i_d : LX_d -> X_d
  Cocone cocone;                  // over the latching category
  fincat::LatchingCategory category;
};

// LX_d = colim over the latching category at d; recursive, requires the
// lower strata Reedy cofibrant (throws otherwise).
LatchingResult latching_object(const Diagram& x, std::size_t d);

struct ReedyReport {
  bool ok = false;
  std::optional<std::size_t> witness;  // first object with a non-monic latching map
};

ReedyReport is_reedy_cofibrant(const Diagram& x);

// Colimit over a finite direct shape, assembled stratum by stratum as a
// pushout of summed latching maps. Requires Reedy cofibrancy (throws).
Colimit colim_direct(const Diagram& x);

// The universal map out of a colimit determined by a compatible cocone.
chq::ChainMap factor_through_cocone(const Colimit& colimit,
                                    const std::vector<chq::ChainMap>& target_legs,
                                    const chq::ChainComplex& target);

// Universal map colim(source) -> colim(target) induced by a diagram map.
chq::ChainMap colim_of_map(const Colimit& source_colimit, const Colimit& target_colimit,
                           const DiagramMap& map);

struct Replacement {
  Diagram diagram;          // Reedy cofibrant
  DiagramMap to_original;   // pointwise quasi-iso
};

// Degreewise Reedy cofibrant replacement: each object is the mapping
// cylinder of its latching composite.
Replacement reedy_replace(const Diagram& x);

struct RelativeColimit {
  Diagram diagram;  // over the target shape
  std::vector<Colimit> per_object;
};

// colim^u computed pointwise over the over categories (u | d2).
RelativeColimit colim_relative(const fincat::Functor& u, const Diagram& x);

// colim of a Reedy cofibrant replacement; well-defined up to pointwise
// quasi-iso.
chq::ChainComplex hocolim_absolute(const Diagram& x);
Diagram hocolim_relative(const fincat::Functor& u, const Diagram& x);

struct BaseChangeReport {
  chq::BettiProfile over_side;       // hocolim over (u | d2) of the restriction
  chq::BettiProfile component_side;  // d2 component of hocolim^u
  bool comparison_quasi_iso = false;
  bool betti_equal = false;
};

BaseChangeReport base_change_check(const fincat::Functor& u, const Diagram& x, std::size_t d2);

}  // namespace reedy
