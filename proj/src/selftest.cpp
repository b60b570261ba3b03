#include "hocolim/selftest.hpp"

#include "hocolim/nerve.hpp"
#include "hocolim/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace selftest {

using chq::BettiProfile;
using chq::ChainComplex;
using chq::ChainMap;
using chq::Matrix;
using fincat::FinCategory;
using ratlin::Rational;

namespace {

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

int pick_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Rational small_rational(Rng& rng) {
  static const int nums[] = {-2, -1, -1, 0, 0, 1, 1, 1, 2, 3};
  return Rational(nums[pick(rng, 0, 9)]);
}

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = small_rational(rng);
  return m;
}

}  // namespace

FreeDirectShape random_free_direct_shape(Rng& rng, std::size_t max_objects,
                                         std::size_t max_nonidentity) {
  const std::size_t n = pick(rng, 1, max_objects);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  const std::size_t attempts = pick(rng, 0, 2 * n);
  for (std::size_t k = 0; k < attempts && n > 1; ++k) {
    const std::size_t i = pick(rng, 0, n - 2);
    edges.push_back({i, pick(rng, i + 1, n - 1)});
  }
  // The morphisms of the free category are the edge paths of the DAG; prune
  // edges until the budget holds.
  auto enumerate_paths = [&]() {
    std::vector<std::pair<std::vector<std::size_t>, std::pair<std::size_t, std::size_t>>> paths;
    std::vector<std::pair<std::vector<std::size_t>, std::pair<std::size_t, std::size_t>>> frontier;
    for (std::size_t e = 0; e < edges.size(); ++e)
      frontier.push_back({{e}, edges[e]});
    while (!frontier.empty()) {
      decltype(frontier) next;
      for (auto& [word, ends] : frontier) {
        for (std::size_t e = 0; e < edges.size(); ++e)
          if (edges[e].first == ends.second) {
            auto extended = word;
            extended.push_back(e);
            next.push_back({std::move(extended), {ends.first, edges[e].second}});
          }
        paths.push_back({std::move(word), ends});
      }
      frontier = std::move(next);
    }
    std::sort(paths.begin(), paths.end(), [](const auto& a, const auto& b) {
      if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
      return a.first < b.first;
    });
    return paths;
  };
  auto paths = enumerate_paths();
  while (paths.size() > max_nonidentity) {
    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(pick(rng, 0, edges.size() - 1)));
    paths = enumerate_paths();
  }
  FreeDirectShape out;
  std::vector<fincat::MorphismData> morphisms;
  std::vector<std::size_t> identity;
  for (std::size_t o = 0; o < n; ++o) {
    morphisms.push_back({o, o});
    identity.push_back(o);
  }
  std::map<std::vector<std::size_t>, std::size_t> index;
  out.path_of.assign(n, {});
  for (const auto& [word, ends] : paths) {
    index[word] = morphisms.size();
    out.path_of.push_back(word);
    morphisms.push_back({ends.first, ends.second});
  }
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (index.count({e})) out.generators.push_back(index.at({e}));
  const auto path_of = out.path_of;
  out.cat = FinCategory::from_compose_fn(
      n, std::move(morphisms), std::move(identity),
      [path_of, index, n](std::size_t g, std::size_t f) {
        if (f < n) return g;  // identity first
        if (g < n) return f;
        auto word = path_of[f];
        word.insert(word.end(), path_of[g].begin(), path_of[g].end());
        return index.at(word);
      });
  return out;
}

ChainComplex random_complex(Rng& rng, int lo_min, int hi_max, std::size_t max_dim) {
  const int lo = pick_int(rng, lo_min, hi_max);
  const int hi = pick_int(rng, lo, hi_max);
  std::vector<std::size_t> dims;
  for (int nn = lo; nn <= hi; ++nn) dims.push_back(pick(rng, 0, max_dim));
  const std::size_t len = dims.size();
  std::vector<Matrix> diffs(len > 0 ? len - 1 : 0);
  // Built from the top degree down; each differential lands in the kernel of
  // the one above by construction.
  for (std::size_t i = len; i-- > 1;) {
    const std::size_t slot = i - 1;  // d_{lo+i} : dims[i] -> dims[i-1]
    if (slot + 1 < diffs.size()) {
      const Matrix& upper = diffs[slot + 1];  // dims[i] x dims[i+1]
      const auto qb = ratlin::quotient_basis(upper, dims[i]);
      diffs[slot] = random_matrix(rng, dims[i - 1], qb.projection.rows()) * qb.projection;
    } else {
      diffs[slot] = random_matrix(rng, dims[i - 1], dims[i]);
    }
  }
  return ChainComplex(lo, std::move(dims), std::move(diffs));
}

ChainComplex random_acyclic(Rng& rng) {
  const ChainComplex base = random_complex(rng, 0, 2, 2);
  if (base.is_zero()) return chq::mapping_cone(ChainMap::identity(ChainComplex::point(0)));
  return chq::mapping_cone(ChainMap::identity(base));
}

ChainMap random_chain_map(Rng& rng, const ChainComplex& src, const ChainComplex& dst) {
  if (src.is_zero() || dst.is_zero()) return ChainMap::zero(src, dst);
  const int lo = std::min(src.lo(), dst.lo());
  const int hi = std::max(src.hi(), dst.hi());
  std::map<int, std::size_t> offset;
  std::size_t n_vars = 0;
  for (int nn = lo; nn <= hi; ++nn)
    if (src.dim(nn) > 0 && dst.dim(nn) > 0) {
      offset[nn] = n_vars;
      n_vars += src.dim(nn) * dst.dim(nn);
    }
  if (n_vars == 0) return ChainMap::zero(src, dst);
  std::size_t n_eqs = 0;
  for (int nn = lo; nn <= hi + 1; ++nn) n_eqs += src.dim(nn) * dst.dim(nn - 1);
  Matrix system(n_eqs, n_vars);
  std::size_t eq = 0;
  for (int nn = lo; nn <= hi + 1; ++nn) {
    const Matrix db = dst.d(nn);
    const Matrix da = src.d(nn);
    const std::size_t rows = dst.dim(nn - 1), cols = src.dim(nn);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        const std::size_t row = eq + i * cols + j;
        if (auto it = offset.find(nn); it != offset.end())
          for (std::size_t k = 0; k < dst.dim(nn); ++k)
            if (db(i, k) != 0) system(row, it->second + k * cols + j) += db(i, k);
        if (auto it = offset.find(nn - 1); it != offset.end())
          for (std::size_t k = 0; k < src.dim(nn - 1); ++k)
            if (da(k, j) != 0) system(row, it->second + i * src.dim(nn - 1) + k) -= da(k, j);
      }
    eq += rows * cols;
  }
  const Matrix basis = ratlin::kernel_basis(system);
  Matrix coeffs(basis.cols(), 1);
  for (std::size_t k = 0; k < basis.cols(); ++k) coeffs(k, 0) = small_rational(rng);
  const Matrix vec = basis * coeffs;
  std::map<int, Matrix> comps;
  for (const auto& [nn, off] : offset) {
    Matrix f_n(dst.dim(nn), src.dim(nn));
    for (std::size_t k = 0; k < dst.dim(nn); ++k)
      for (std::size_t j = 0; j < src.dim(nn); ++j) f_n(k, j) = vec(off + k * src.dim(nn) + j, 0);
    comps[nn] = std::move(f_n);
  }
  return ChainMap(src, dst, std::move(comps));
}

ChainMap random_automorphism(Rng& rng, const ChainComplex& a) {
  const ChainMap id = ChainMap::identity(a);
  for (int attempt = 0; attempt < 5; ++attempt) {
    const ChainMap candidate = chq::add(id, random_chain_map(rng, a, a));
    bool invertible = true;
    for (int nn = a.lo(); nn <= a.hi() && invertible; ++nn)
      invertible = ratlin::rank(candidate.f(nn)) == a.dim(nn);
    if (invertible) return candidate;
  }
  return id;
}

ChainMap random_monic_from(Rng& rng, const ChainComplex& src) {
  if (pick(rng, 0, 1) == 0) {
    const auto fact = chq::factorize(random_chain_map(rng, src, random_complex(rng)));
    return chq::compose(random_automorphism(rng, fact.mid), fact.into);
  }
  const auto sum = chq::direct_sum({src, random_complex(rng)});
  return chq::compose(random_automorphism(rng, sum.object), sum.injections[0]);
}

ChainMap random_quasi_iso_from(Rng& rng, const ChainComplex& src) {
  if (src.is_zero() || pick(rng, 0, 2) == 0) return random_automorphism(rng, src);
  const auto fact = chq::factorize(ChainMap::identity(src));
  return chq::compose(random_automorphism(rng, fact.mid), fact.into);
}

ChainMap random_quasi_iso_to(Rng& rng, const ChainComplex& dst) {
  if (dst.is_zero() || pick(rng, 0, 2) == 0) return random_automorphism(rng, dst);
  const auto fact = chq::factorize(ChainMap::identity(dst));
  return chq::compose(fact.retract, random_automorphism(rng, fact.mid));
}

reedy::Diagram random_diagram(Rng& rng, const FreeDirectShape& shape, int hi_max,
                              std::size_t max_dim) {
  reedy::Diagram out;
  out.shape = shape.cat;
  for (std::size_t o = 0; o < shape.cat.object_count(); ++o)
    out.at_object.push_back(random_complex(rng, 0, hi_max, max_dim));
  std::map<std::size_t, ChainMap> generator_map;
  for (std::size_t g : shape.generators)
    generator_map[g] = random_chain_map(rng, out.at_object[shape.cat.src(g)],
                                        out.at_object[shape.cat.dst(g)]);
  // Generator words index edges; translate via the generator morphism order.
  std::map<std::size_t, std::size_t> edge_to_generator;
  for (std::size_t k = 0; k < shape.generators.size(); ++k) {
    const auto& word = shape.path_of[shape.generators[k]];
    edge_to_generator[word[0]] = shape.generators[k];
  }
  out.at_morphism.resize(shape.cat.morphism_count());
  for (std::size_t m = 0; m < shape.cat.morphism_count(); ++m) {
    if (shape.cat.is_identity(m)) {
      out.at_morphism[m] = ChainMap::identity(out.at_object[shape.cat.src(m)]);
      continue;
    }
    ChainMap acc = ChainMap::identity(out.at_object[shape.cat.src(m)]);
    for (std::size_t edge : shape.path_of[m])
      acc = chq::compose(generator_map.at(edge_to_generator.at(edge)), acc);
    out.at_morphism[m] = std::move(acc);
  }
  return out;
}

fincat::Functor random_functor(Rng& rng, const FreeDirectShape& from, const FreeDirectShape& to) {
  const FinCategory& d1 = from.cat;
  const FinCategory& d2 = to.cat;
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::vector<std::size_t> object_map;
    for (std::size_t o = 0; o < d1.object_count(); ++o)
      object_map.push_back(pick(rng, 0, d2.object_count() - 1));
    std::map<std::size_t, std::size_t> generator_image;
    bool ok = true;
    for (std::size_t g : from.generators) {
      const auto candidates = d2.hom(object_map[d1.src(g)], object_map[d1.dst(g)]);
      if (candidates.empty()) {
        ok = false;
        break;
      }
      generator_image[g] = candidates[pick(rng, 0, candidates.size() - 1)];
    }
    if (!ok) continue;
    std::map<std::size_t, std::size_t> edge_to_generator;
    for (std::size_t g : from.generators) edge_to_generator[from.path_of[g][0]] = g;
    std::vector<std::size_t> morphism_map(d1.morphism_count());
    for (std::size_t m = 0; m < d1.morphism_count(); ++m) {
      if (d1.is_identity(m)) {
        morphism_map[m] = d2.identity(object_map[d1.src(m)]);
        continue;
      }
      std::size_t acc = d2.identity(object_map[d1.src(m)]);
      for (std::size_t edge : from.path_of[m])
        acc = d2.compose(generator_image.at(edge_to_generator.at(edge)), acc);
      morphism_map[m] = acc;
    }
    return fincat::Functor(d1, d2, std::move(object_map), std::move(morphism_map));
  }
  // Constant functor fallback.
  const std::size_t t = pick(rng, 0, d2.object_count() - 1);
  std::vector<std::size_t> object_map(d1.object_count(), t);
  std::vector<std::size_t> morphism_map(d1.morphism_count(), d2.identity(t));
  return fincat::Functor(d1, d2, std::move(object_map), std::move(morphism_map));
}

hofrac::Fraction random_fraction(Rng& rng, const ChainComplex& src, const ChainComplex& dst) {
  const ChainMap s = random_quasi_iso_from(rng, dst);
  return hofrac::make_fraction(random_chain_map(rng, src, s.dst()), s);
}

namespace {

FinCategory span_category() {
  return FinCategory(3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {0, 2}}, {0, 1, 2}, {});
}

reedy::Diagram suspension_diagram() {
  const ChainComplex circle(0, {1, 1}, {Matrix::zero(1, 1)});
  const ChainComplex pt = ChainComplex::point(0);
  std::map<int, Matrix> collapse;
  collapse[0] = Matrix::identity(1);
  reedy::Diagram x;
  x.shape = span_category();
  x.at_object = {circle, pt, pt};
  x.at_morphism = {ChainMap::identity(circle), ChainMap::identity(pt), ChainMap::identity(pt),
                   ChainMap(circle, pt, collapse), ChainMap(circle, pt, collapse)};
  return x;
}

BettiProfile betti_sum(const std::vector<BettiProfile>& parts) {
  int lo = 0, hi = -1;
  bool any = false;
  for (const auto& p : parts) {
    if (p == BettiProfile()) continue;
    if (!any) {
      lo = p.lo();
      hi = p.hi();
      any = true;
    } else {
      lo = std::min(lo, p.lo());
      hi = std::max(hi, p.hi());
    }
  }
  if (!any) return BettiProfile();
  std::vector<std::size_t> totals;
  for (int nn = lo; nn <= hi; ++nn) {
    std::size_t total = 0;
    for (const auto& p : parts) total += p.at(nn);
    totals.push_back(total);
  }
  return BettiProfile(lo, std::move(totals));
}

std::string show(const BettiProfile& p) { return p.to_string(); }

}  // namespace

std::vector<CriterionResult> run_acceptance(std::uint64_t seed, bool quick) {
  std::vector<CriterionResult> results;
  const std::size_t c1_count = quick ? 10 : 50;
  const std::size_t c3_count = quick ? 5 : 20;
  const std::size_t c4_count = quick ? 5 : 20;
  const std::size_t c5_count = quick ? 10 : 50;
  const std::size_t c6_count = quick ? 10 : 50;
  const std::size_t c7_count = quick ? 3 : 10;
  const std::size_t c8_count = quick ? 6 : 30;
  const std::size_t c9_count = quick ? 6 : 30;
  const std::size_t c10_count = quick ? 3 : 10;

  {  // 1. Oracle equivalence.
    Rng rng(seed + 1);
    std::size_t failures = 0;
    std::string detail;
    for (std::size_t k = 0; k < c1_count; ++k) {
      const auto shape = random_free_direct_shape(rng, 6, 8);
      const auto x = random_diagram(rng, shape);
      const BettiProfile via_colim = chq::homology(reedy::hocolim_absolute(x));
      const BettiProfile via_bar = oracle::bar_hocolim_betti(x);
      if (!(via_colim == via_bar)) {
        ++failures;
        if (detail.empty())
          detail = "first mismatch: hocolim " + show(via_colim) + " vs bar " + show(via_bar);
      }
    }
    results.push_back({"oracle equivalence on " + std::to_string(c1_count) + " random diagrams",
                       failures == 0, failures == 0 ? "" : detail});
  }
  {  // 2. Suspension check.
    const BettiProfile expected(0, {1, 0, 1});
    const BettiProfile via_colim = chq::homology(reedy::hocolim_absolute(suspension_diagram()));
    const BettiProfile via_bar = oracle::bar_hocolim_betti(suspension_diagram());
    const bool pass = via_colim == expected && via_bar == expected;
    results.push_back({"suspension diagram hocolim Betti = (1, 0, 1)", pass,
                       pass ? "" : "got " + show(via_colim) + " / " + show(via_bar)});
  }
  {  // 3. Replacement well-definedness.
    Rng rng(seed + 3);
    std::size_t failures = 0;
    for (std::size_t k = 0; k < c3_count; ++k) {
      const auto shape = random_free_direct_shape(rng, 5, 7);
      const auto x = random_diagram(rng, shape);
      const auto first = reedy::reedy_replace(x);
      const auto second = reedy::reedy_replace(first.diagram);
      const BettiProfile b1 = chq::homology(reedy::colim_direct(first.diagram).object);
      const BettiProfile b2 = chq::homology(reedy::colim_direct(second.diagram).object);
      if (!(b1 == b2)) ++failures;
    }
    results.push_back({"replacement well-definedness on " + std::to_string(c3_count) + " diagrams",
                       failures == 0, failures == 0 ? "" : std::to_string(failures) + " failures"});
  }
  {  // 4. Base change.
    Rng rng(seed + 4);
    std::size_t failures = 0;
    for (std::size_t k = 0; k < c4_count; ++k) {
      const auto d1 = random_free_direct_shape(rng, 4, 6);
      const auto d2 = random_free_direct_shape(rng, 4, 6);
      const auto u = random_functor(rng, d1, d2);
      const auto x = random_diagram(rng, d1, 2, 2);
      const std::size_t target = pick(rng, 0, d2.cat.object_count() - 1);
      const auto report = reedy::base_change_check(u, x, target);
      if (!report.comparison_quasi_iso || !report.betti_equal) ++failures;
    }
    results.push_back({"base change on " + std::to_string(c4_count) + " random triples",
                       failures == 0, failures == 0 ? "" : std::to_string(failures) + " failures"});
  }
  {  // 5. Excision and gluing.
    Rng rng(seed + 5);
    std::size_t failures = 0;
    for (std::size_t k = 0; k < c5_count; ++k) {
      const ChainComplex a = random_complex(rng, 0, 2, 2);
      const ChainMap i = random_monic_from(rng, a);
      const ChainMap w = random_quasi_iso_from(rng, a);
      if (!chq::is_quasi_iso(chq::pushout(i, w).from_b)) ++failures;
    }
    for (std::size_t k = 0; k < c5_count; ++k) {
      const ChainComplex a1 = random_complex(rng, 0, 2, 2);
      const ChainMap f12 = random_monic_from(rng, a1);
      const ChainComplex a3 = random_complex(rng, 0, 2, 2);
      const ChainMap f13 = random_chain_map(rng, a1, a3);
      const ChainComplex c1 = random_acyclic(rng), c2 = random_acyclic(rng),
                         c3 = random_acyclic(rng);
      const auto sum1 = chq::direct_sum({a1, c1});
      const auto sum2 = chq::direct_sum({f12.dst(), c1, c2});
      const auto sum3 = chq::direct_sum({a3, c1, c3});
      const ChainMap phi2 = random_automorphism(rng, sum2.object);
      const ChainMap phi3 = random_automorphism(rng, sum3.object);
      const ChainMap u1 = sum1.injections[0];
      const ChainMap u2 = chq::compose(phi2, sum2.injections[0]);
      const ChainMap u3 = chq::compose(phi3, sum3.injections[0]);
      const ChainMap g12 = chq::compose(
          phi2, chq::from_sum(sum1, {chq::compose(sum2.injections[0], f12), sum2.injections[1]}));
      const ChainMap g13 = chq::compose(
          phi3, chq::from_sum(sum1, {chq::compose(sum3.injections[0], f13), sum3.injections[1]}));
      const auto pa = chq::pushout(f12, f13);
      const auto pb = chq::pushout(g12, g13);
      const ChainMap u4 =
          chq::pushout_induced(pa, chq::compose(pb.from_b, u2), chq::compose(pb.from_c, u3));
      if (!chq::is_quasi_iso(u4)) ++failures;
    }
    results.push_back({"excision and gluing, " + std::to_string(c5_count) + " instances each",
                       failures == 0, failures == 0 ? "" : std::to_string(failures) + " failures"});
  }
  {  // 6. Factorization contract.
    Rng rng(seed + 6);
    std::size_t failures = 0;
    for (std::size_t k = 0; k < c6_count; ++k) {
      const ChainComplex a = random_complex(rng), b = random_complex(rng);
      const ChainMap f = random_chain_map(rng, a, b);
      const auto fact = chq::factorize(f);
      if (!chq::is_monic(fact.into) || !chq::is_quasi_iso(fact.retract) ||
          !(chq::compose(fact.retract, fact.into) == f)) {
        ++failures;
        continue;
      }
      const auto brown = chq::brown_factorize(f);
      if (!(chq::compose(brown.retract, brown.section) == ChainMap::identity(b)) ||
          !(chq::compose(brown.retract, brown.cof) == f) || !chq::is_monic(brown.cof) ||
          !chq::is_monic(brown.section) || !chq::is_quasi_iso(brown.section))
        ++failures;
    }
    results.push_back({"factorization contracts on " + std::to_string(c6_count) + " random maps",
                       failures == 0, failures == 0 ? "" : std::to_string(failures) + " failures"});
  }
  {  // 7. Cofinality coherence.
    Rng rng(seed + 7);
    std::size_t done = 0, failures = 0, guard = 0;
    while (done < c7_count && guard < 400) {
      ++guard;
      const auto shape = random_free_direct_shape(rng, 5, 7);
      std::vector<std::size_t> subset;
      for (std::size_t o = 0; o < shape.cat.object_count(); ++o)
        if (pick(rng, 0, 1) == 0) subset.push_back(o);
      if (subset.empty()) continue;
      const auto sub = fincat::full_subcategory(shape.cat, subset);
      if (!nerve::is_right_cofinal(sub.inclusion).ok) continue;
      if (!fincat::is_direct(sub.cat)) continue;
      const auto x = reedy::reedy_replace(random_diagram(rng, shape, 2, 2)).diagram;
      const auto restricted = reedy::restrict(sub.inclusion, x);
      if (!reedy::is_reedy_cofibrant(restricted).ok) continue;
      const auto col_full = reedy::colim_direct(x);
      const auto col_res = reedy::colim_direct(restricted);
      std::vector<ChainMap> legs;
      for (std::size_t o = 0; o < subset.size(); ++o)
        legs.push_back(col_full.cocone.legs[subset[o]]);
      const ChainMap canonical = reedy::factor_through_cocone(col_res, legs, col_full.object);
      if (!(chq::homology(col_res.object) == chq::homology(col_full.object)) ||
          !chq::is_quasi_iso(canonical))
        ++failures;
      ++done;
    }
    const bool pass = failures == 0 && done == c7_count;
    results.push_back({"cofinality coherence on " + std::to_string(done) + " certified functors",
                       pass,
                       pass ? "" : std::to_string(failures) + " failures, " +
                                       std::to_string(done) + " instances"});
  }
  {  // 8. Homotopy-category laws.
    Rng rng(seed + 8);
    std::size_t failures = 0;
    for (std::size_t k = 0; k < c8_count; ++k) {
      const ChainComplex a = random_complex(rng, 0, 1, 2), b = random_complex(rng, 0, 1, 2),
                         c = random_complex(rng, 0, 1, 2), d = random_complex(rng, 0, 1, 2);
      const auto f1 = random_fraction(rng, a, b);
      const auto f2 = random_fraction(rng, b, c);
      const auto f3 = random_fraction(rng, c, d);
      const auto left = hofrac::compose(f3, hofrac::compose(f2, f1));
      const auto right = hofrac::compose(hofrac::compose(f3, f2), f1);
      if (!hofrac::fractions_equal(left, right)) ++failures;
      if (!hofrac::fractions_equal(hofrac::compose(hofrac::identity_fraction(b), f1), f1) ||
          !hofrac::fractions_equal(hofrac::compose(f1, hofrac::identity_fraction(a)), f1))
        ++failures;
      // Transitivity across equal-by-construction variants.
      const auto g1 = f1;
      const auto g2 = hofrac::normalize(f1);
      const auto g3 = hofrac::compose(f1, hofrac::identity_fraction(a));
      if (hofrac::fractions_equal(g1, g2) && hofrac::fractions_equal(g2, g3) &&
          !hofrac::fractions_equal(g1, g3))
        ++failures;
      const ChainMap m = random_chain_map(rng, a, b);
      const auto h = chq::solve_homotopy(m, m);
      if (!h) {
        ++failures;
      } else {
        for (int nn = a.lo() - 1; nn <= a.hi() + 1; ++nn)
          if (!h->h(nn).is_zero()) ++failures;
      }
    }
    results.push_back({"homotopy-category laws on " + std::to_string(c8_count) + " random triples",
                       failures == 0, failures == 0 ? "" : std::to_string(failures) + " failures"});
  }
  {  // 9. Two out of six.
    Rng rng(seed + 9);
    std::size_t failures = 0;
    for (std::size_t k = 0; k < c9_count; ++k) {
      const ChainComplex b = random_complex(rng, 0, 2, 2);
      const ChainMap f = random_quasi_iso_to(rng, b);
      const ChainMap g = random_quasi_iso_from(rng, b);
      const ChainMap h = random_quasi_iso_from(rng, g.dst());
      if (!chq::is_quasi_iso(chq::compose(g, f)) || !chq::is_quasi_iso(chq::compose(h, g))) {
        ++failures;  // premise must hold by construction
        continue;
      }
      if (!chq::is_quasi_iso(f) || !chq::is_quasi_iso(g) || !chq::is_quasi_iso(h) ||
          !chq::is_quasi_iso(chq::compose(h, chq::compose(g, f))))
        ++failures;
    }
    results.push_back({"two-out-of-six on " + std::to_string(c9_count) + " composable triples",
                       failures == 0, failures == 0 ? "" : std::to_string(failures) + " failures"});
  }
  {  // 10. Sum law.
    Rng rng(seed + 10);
    std::size_t failures = 0;
    for (std::size_t k = 0; k < c10_count; ++k) {
      std::vector<FreeDirectShape> shapes;
      std::vector<reedy::Diagram> diagrams;
      std::vector<FinCategory> cats;
      for (int part = 0; part < 3; ++part) {
        shapes.push_back(random_free_direct_shape(rng, 3, 4));
        diagrams.push_back(random_diagram(rng, shapes.back(), 2, 2));
        cats.push_back(shapes.back().cat);
      }
      const auto total = fincat::sum(cats);
      reedy::Diagram combined;
      combined.shape = total.cat;
      combined.at_object.resize(total.cat.object_count());
      combined.at_morphism.resize(total.cat.morphism_count());
      for (std::size_t part = 0; part < 3; ++part) {
        const auto& inj = total.injections[part];
        for (std::size_t o = 0; o < cats[part].object_count(); ++o)
          combined.at_object[inj.on_object(o)] = diagrams[part].at(o);
        for (std::size_t m = 0; m < cats[part].morphism_count(); ++m)
          combined.at_morphism[inj.on_morphism(m)] = diagrams[part].map_at(m);
      }
      const BettiProfile whole = chq::homology(reedy::hocolim_absolute(combined));
      std::vector<BettiProfile> parts;
      for (const auto& diagram : diagrams)
        parts.push_back(chq::homology(reedy::hocolim_absolute(diagram)));
      if (!(whole == betti_sum(parts))) ++failures;
    }
    results.push_back({"sum law over 3-component shapes, " + std::to_string(c10_count) +
                           " instances",
                       failures == 0, failures == 0 ? "" : std::to_string(failures) + " failures"});
  }
  return results;
}

}  // namespace selftest
