#include "hocolim/reedy.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace reedy {

using chq::ChainComplex;
using chq::ChainMap;
using chq::Matrix;
using fincat::FinCategory;
using fincat::Functor;

std::optional<std::string> Diagram::validate() const {
  if (at_object.size() != shape.object_count() || at_morphism.size() != shape.morphism_count())
    return "diagram size does not match its shape";
  for (std::size_t m = 0; m < shape.morphism_count(); ++m) {
    if (!(at_morphism[m].src() == at_object[shape.src(m)]) ||
        !(at_morphism[m].dst() == at_object[shape.dst(m)]))
      return "diagram map endpoints mismatch at morphism " + std::to_string(m);
  }
  for (std::size_t o = 0; o < shape.object_count(); ++o)
    if (!(at_morphism[shape.identity(o)] == ChainMap::identity(at_object[o])))
      return "identity not sent to the identity map at object " + std::to_string(o);
  for (std::size_t f = 0; f < shape.morphism_count(); ++f)
    for (std::size_t g : shape.morphisms_from(shape.dst(f)))
      if (!(at_morphism[shape.compose(g, f)] == chq::compose(at_morphism[g], at_morphism[f])))
        return "functoriality fails at (g, f) = (" + std::to_string(g) + ", " +
               std::to_string(f) + ")";
  return std::nullopt;
}

std::optional<std::string> DiagramMap::validate() const {
  if (!(source.shape == target.shape)) return "diagram map between different shapes";
  if (components.size() != source.shape.object_count()) return "one component per object required";
  for (std::size_t o = 0; o < components.size(); ++o)
    if (!(components[o].src() == source.at(o)) || !(components[o].dst() == target.at(o)))
      return "component endpoints mismatch at object " + std::to_string(o);
  for (std::size_t m = 0; m < source.shape.morphism_count(); ++m) {
    const std::size_t a = source.shape.src(m), b = source.shape.dst(m);
    if (!(chq::compose(components[b], source.map_at(m)) ==
          chq::compose(target.map_at(m), components[a])))
      return "naturality fails at morphism " + std::to_string(m);
  }
  return std::nullopt;
}

bool DiagramMap::is_pointwise_quasi_iso() const {
  for (const auto& c : components)
    if (!chq::is_quasi_iso(c)) return false;
  return true;
}

bool DiagramMap::is_pointwise_monic() const {
  for (const auto& c : components)
    if (!chq::is_monic(c)) return false;
  return true;
}

Diagram restrict(const fincat::Functor& u, const Diagram& x) {
  if (!(u.target() == x.shape)) throw std::invalid_argument("restrict: shape mismatch");
  Diagram out;
  out.shape = u.source();
  for (std::size_t o = 0; o < out.shape.object_count(); ++o)
    out.at_object.push_back(x.at(u.on_object(o)));
  for (std::size_t m = 0; m < out.shape.morphism_count(); ++m)
    out.at_morphism.push_back(x.map_at(u.on_morphism(m)));
  return out;
}

DiagramMap whisker(const fincat::NaturalTransformation& alpha, const Diagram& x) {
  if (auto err = alpha.validate()) throw std::invalid_argument("whisker: " + *err);
  if (!(alpha.source().target() == x.shape))
    throw std::invalid_argument("whisker: diagram shape mismatch");
  DiagramMap out;
  out.source = restrict(alpha.source(), x);
  out.target = restrict(alpha.target(), x);
  for (std::size_t d = 0; d < alpha.source().source().object_count(); ++d)
    out.components.push_back(x.map_at(alpha.component(d)));
  return out;
}

chq::ChainMap factor_through_cocone(const Colimit& colimit,
                                    const std::vector<chq::ChainMap>& target_legs,
                                    const chq::ChainComplex& target) {
  const ChainComplex& c = colimit.object;
  std::map<int, Matrix> comps;
  for (int n = c.lo(); n <= c.hi(); ++n) {
    if (c.dim(n) == 0 || target.dim(n) == 0) continue;
    std::vector<Matrix> colim_blocks, target_blocks;
    for (std::size_t o = 0; o < target_legs.size(); ++o) {
      colim_blocks.push_back(colimit.cocone.legs[o].f(n));
      target_blocks.push_back(target_legs[o].f(n));
    }
    const Matrix stacked = Matrix::hstack(colim_blocks);
    const Matrix wanted = Matrix::hstack(target_blocks);
    auto sol = ratlin::solve(stacked.transpose(), wanted.transpose());
    if (!sol)
      throw std::invalid_argument("factor_through_cocone: legs are not a compatible cocone");
    comps[n] = sol->transpose();
  }
  return ChainMap(c, target, std::move(comps));
}

chq::ChainMap colim_of_map(const Colimit& source_colimit, const Colimit& target_colimit,
                           const DiagramMap& map) {
  std::vector<ChainMap> legs;
  for (std::size_t o = 0; o < map.components.size(); ++o)
    legs.push_back(chq::compose(target_colimit.cocone.legs[o], map.components[o]));
  return factor_through_cocone(source_colimit, legs, target_colimit.object);
}

namespace {

// Objects grouped by degree, ascending; ascending index inside a stratum.
std::vector<std::vector<std::size_t>> strata(const fincat::DegreeFunction& deg) {
  std::size_t max_deg = 0;
  for (std::size_t d : deg.degrees) max_deg = std::max(max_deg, d);
  std::vector<std::vector<std::size_t>> out(deg.degrees.empty() ? 0 : max_deg + 1);
  for (std::size_t o = 0; o < deg.degrees.size(); ++o) out[deg.degrees[o]].push_back(o);
  return out;
}

// Block-diagonal sum of maps between the matching direct sums.
ChainMap sum_of_maps(const chq::DirectSumResult& src_sum, const chq::DirectSumResult& dst_sum,
                     const std::vector<ChainMap>& maps) {
  std::vector<ChainMap> legs;
  for (std::size_t i = 0; i < maps.size(); ++i)
    legs.push_back(chq::compose(dst_sum.injections[i], maps[i]));
  return chq::from_sum(src_sum, legs);
}

}  // namespace

LatchingResult latching_object(const Diagram& x, std::size_t d) {
  fincat::LatchingCategory lat = fincat::latching_category(x.shape, d);
  Diagram restricted = restrict(lat.projection, x);
  Colimit col = colim_direct(restricted);
  std::vector<ChainMap> into_legs;
  for (std::size_t o = 0; o < lat.objects.size(); ++o) into_legs.push_back(x.map_at(lat.legs[o]));
  LatchingResult out;
  out.map_into = factor_through_cocone(col, into_legs, x.at(d));
  out.object = std::move(col.object);
  out.cocone = std::move(col.cocone);
  out.category = std::move(lat);
  return out;
}

ReedyReport is_reedy_cofibrant(const Diagram& x) {
  const auto deg = fincat::is_direct(x.shape);
  if (!deg) throw std::invalid_argument("is_reedy_cofibrant requires a direct shape");
  std::vector<std::size_t> order;
  for (const auto& stratum : strata(*deg))
    for (std::size_t o : stratum) order.push_back(o);
  for (std::size_t o : order) {
    const LatchingResult lat = latching_object(x, o);
    if (!chq::is_monic(lat.map_into)) return ReedyReport{false, o};
  }
  return ReedyReport{true, std::nullopt};
}

Colimit colim_direct(const Diagram& x) {
  const auto deg = fincat::is_direct(x.shape);
  if (!deg) throw std::invalid_argument("colim_direct requires a direct shape");
  const std::size_t n_objects = x.shape.object_count();
  Colimit acc;
  acc.object = ChainComplex::zero();
  std::vector<ChainMap> legs(n_objects);
  std::vector<bool> processed(n_objects, false);
  for (const auto& stratum : strata(*deg)) {
    if (stratum.empty()) continue;
    std::vector<ChainComplex> latch_objects, stratum_objects;
    std::vector<ChainMap> latch_into, latch_to_colim;
    for (std::size_t d : stratum) {
      LatchingResult lat = latching_object(x, d);
      if (!chq::is_monic(lat.map_into))
        throw std::invalid_argument("colim_direct: diagram is not Reedy cofibrant at object " +
                                    std::to_string(d));
      // The current colimit restricted to the latching category is a cocone.
      std::vector<ChainMap> to_colim;
      for (std::size_t o = 0; o < lat.category.objects.size(); ++o)
        to_colim.push_back(legs[lat.category.objects[o].first]);
      latch_to_colim.push_back(factor_through_cocone(
          Colimit{lat.object, lat.cocone}, to_colim, acc.object));
      latch_objects.push_back(std::move(lat.object));
      latch_into.push_back(std::move(lat.map_into));
      stratum_objects.push_back(x.at(d));
    }
    auto latch_sum = chq::direct_sum(latch_objects);
    auto object_sum = chq::direct_sum(stratum_objects);
    const ChainMap i_sum = sum_of_maps(latch_sum, object_sum, latch_into);
    const ChainMap f_sum = chq::from_sum(latch_sum, latch_to_colim);
    auto po = chq::pushout(i_sum, f_sum);
    for (std::size_t o = 0; o < n_objects; ++o)
      if (processed[o]) legs[o] = chq::compose(po.from_c, legs[o]);
    for (std::size_t k = 0; k < stratum.size(); ++k) {
      legs[stratum[k]] = chq::compose(po.from_b, object_sum.injections[k]);
      processed[stratum[k]] = true;
    }
    acc.object = std::move(po.object);
  }
  acc.cocone.apex = acc.object;
  acc.cocone.legs = std::move(legs);
  return acc;
}

Replacement reedy_replace(const Diagram& x) {
  const auto deg = fincat::is_direct(x.shape);
  if (!deg) throw std::invalid_argument("reedy_replace requires a direct shape");
  const std::size_t n_objects = x.shape.object_count();
  Replacement out;
  out.diagram.shape = x.shape;
  out.diagram.at_object.resize(n_objects);
  out.diagram.at_morphism.resize(x.shape.morphism_count());
  std::vector<ChainMap> to_original(n_objects);
  for (const auto& stratum : strata(*deg))
    for (std::size_t d : stratum) {
      fincat::LatchingCategory lat = fincat::latching_category(x.shape, d);
      Diagram lower = restrict(lat.projection, out.diagram);
      Colimit latch = colim_direct(lower);
      std::vector<ChainMap> into_legs;
      for (std::size_t o = 0; o < lat.objects.size(); ++o)
        into_legs.push_back(
            chq::compose(x.map_at(lat.legs[o]), to_original[lat.objects[o].first]));
      const ChainMap composite = factor_through_cocone(latch, into_legs, x.at(d));
      auto fact = chq::factorize(composite);
      out.diagram.at_object[d] = fact.mid;
      to_original[d] = fact.retract;
      out.diagram.at_morphism[x.shape.identity(d)] = ChainMap::identity(fact.mid);
      // Arrows into d factor through the latching cocone and the cylinder
      // inclusion; arrows between lower objects were set in earlier strata.
      for (std::size_t o = 0; o < lat.objects.size(); ++o)
        out.diagram.at_morphism[lat.objects[o].second] =
            chq::compose(fact.into, latch.cocone.legs[o]);
    }
  out.to_original.source = out.diagram;
  out.to_original.target = x;
  out.to_original.components = std::move(to_original);
  return out;
}

RelativeColimit colim_relative(const fincat::Functor& u, const Diagram& x) {
  if (!(u.source() == x.shape)) throw std::invalid_argument("colim_relative: shape mismatch");
  if (!fincat::is_direct(u.source()))
    throw std::invalid_argument("colim_relative requires a direct source shape");
  const FinCategory& target_shape = u.target();
  RelativeColimit out;
  out.diagram.shape = target_shape;
  std::vector<fincat::OverCategory> overs;
  for (std::size_t d2 = 0; d2 < target_shape.object_count(); ++d2) {
    fincat::OverCategory over = fincat::over_category(u, d2);
    out.per_object.push_back(colim_direct(restrict(over.projection, x)));
    out.diagram.at_object.push_back(out.per_object.back().object);
    overs.push_back(std::move(over));
  }
  for (std::size_t h = 0; h < target_shape.morphism_count(); ++h) {
    const std::size_t a = target_shape.src(h), b = target_shape.dst(h);
    // Post-composition functor (u | a) -> (u | b): (d1, g) -> (d1, h g).
    std::vector<ChainMap> legs;
    for (const auto& [d1, g] : overs[a].objects) {
      const auto idx = overs[b].object_index(d1, target_shape.compose(h, g));
      if (!idx) throw std::logic_error("over-category functor misses an object");
      legs.push_back(out.per_object[b].cocone.legs[*idx]);
    }
    out.diagram.at_morphism.push_back(
        factor_through_cocone(out.per_object[a], legs, out.per_object[b].object));
  }
  return out;
}

chq::ChainComplex hocolim_absolute(const Diagram& x) {
  return colim_direct(reedy_replace(x).diagram).object;
}

Diagram hocolim_relative(const fincat::Functor& u, const Diagram& x) {
  return colim_relative(u, reedy_replace(x).diagram).diagram;
}

BaseChangeReport base_change_check(const fincat::Functor& u, const Diagram& x, std::size_t d2) {
  if (!(u.source() == x.shape)) throw std::invalid_argument("base_change_check: shape mismatch");
  if (!fincat::is_direct(u.source()))
    throw std::invalid_argument("base_change_check requires a direct source shape");
  const fincat::OverCategory over = fincat::over_category(u, d2);
  const Diagram restricted = restrict(over.projection, x);

  // The d2 component of hocolim^u, which is by construction the colimit of
  // the replacement restricted to (u | d2).
  const Replacement rep = reedy_replace(x);
  const Diagram rep_restricted = restrict(over.projection, rep.diagram);
  const Colimit component = colim_direct(rep_restricted);

  // hocolim over (u | d2) of the restriction, computed independently.
  const Colimit over_colim = colim_direct(reedy_replace(restricted).diagram);

  // Canonical comparison: replace the restricted replacement once more and
  // push the connecting pointwise quasi-iso through the colimits.
  const Replacement second = reedy_replace(rep_restricted);
  const Colimit second_colim = colim_direct(second.diagram);
  const ChainMap comparison = colim_of_map(second_colim, component, second.to_original);

  BaseChangeReport report;
  report.over_side = chq::homology(over_colim.object);
  report.component_side = chq::homology(component.object);
  report.comparison_quasi_iso = chq::is_quasi_iso(comparison);
  report.betti_equal = report.over_side == report.component_side;
  return report;
}

}  // namespace reedy
