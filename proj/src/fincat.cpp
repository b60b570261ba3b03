#include "hocolim/fincat.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace fincat {

namespace {

constexpr std::size_t kMaxTableEntries = 50'000'000;

std::string mor_str(std::size_t m) { return "morphism " + std::to_string(m); }

// All strictly increasing maps {0..size-1} -> {0..top}.
std::vector<std::vector<std::size_t>> increasing_maps(std::size_t size, std::size_t top) {
  std::vector<std::vector<std::size_t>> out;
  if (size == 0) {
    out.push_back({});
    return out;
  }
  if (top + 1 < size) return out;
  std::vector<std::size_t> cur(size);
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    out.push_back(cur);
    std::size_t k = size;
    bool advanced = false;
    while (k > 0) {
      --k;
      if (cur[k] + (size - 1 - k) < top) {
        ++cur[k];
        for (std::size_t l = k + 1; l < size; ++l) cur[l] = cur[l - 1] + 1;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return out;
}

}  // namespace

FinCategory::FinCategory(std::size_t object_count, std::vector<MorphismData> morphisms,
                         std::vector<std::size_t> identity,
                         const std::vector<std::array<std::size_t, 3>>& compose_entries)
    : object_count_(object_count),
      morphisms_(std::move(morphisms)),
      identity_(std::move(identity)) {
  const std::size_t n = morphisms_.size();
  if (n * n > kMaxTableEntries) throw std::length_error("composition table too large");
  if (identity_.size() != object_count_)
    throw std::invalid_argument("one identity morphism per object required");
  for (const auto& m : morphisms_)
    if (m.src >= object_count_ || m.dst >= object_count_)
      throw std::invalid_argument("morphism endpoint out of range");
  for (std::size_t id : identity_)
    if (id >= n) throw std::invalid_argument("identity index out of range");
  compose_.assign(n * n, -1);
  // Identity composites are implied.
  for (std::size_t f = 0; f < n; ++f) {
    compose_[identity_[morphisms_[f].dst] * n + f] = static_cast<int32_t>(f);
    compose_[f * n + identity_[morphisms_[f].src]] = static_cast<int32_t>(f);
  }
  for (const auto& [g, f, gf] : compose_entries) {
    if (g >= n || f >= n || gf >= n)
      throw std::invalid_argument("composition entry index out of range");
    compose_[g * n + f] = static_cast<int32_t>(gf);
  }
}

FinCategory FinCategory::from_compose_fn(
    std::size_t object_count, std::vector<MorphismData> morphisms,
    std::vector<std::size_t> identity,
    const std::function<std::size_t(std::size_t, std::size_t)>& rule) {
  std::vector<std::array<std::size_t, 3>> entries;
  for (std::size_t g = 0; g < morphisms.size(); ++g)
    for (std::size_t f = 0; f < morphisms.size(); ++f)
      if (morphisms[f].dst == morphisms[g].src) entries.push_back({g, f, rule(g, f)});
  return FinCategory(object_count, std::move(morphisms), std::move(identity), entries);
}

FinCategory FinCategory::empty() { return FinCategory(0, {}, {}, {}); }

FinCategory FinCategory::terminal() { return FinCategory(1, {{0, 0}}, {0}, {}); }

FinCategory FinCategory::discrete(std::size_t n) {
  std::vector<MorphismData> morphisms;
  std::vector<std::size_t> identity;
  for (std::size_t o = 0; o < n; ++o) {
    morphisms.push_back({o, o});
    identity.push_back(o);
  }
  return FinCategory(n, std::move(morphisms), std::move(identity), {});
}

bool FinCategory::is_identity(std::size_t m) const {
  return morphisms_[m].src == morphisms_[m].dst && identity_[morphisms_[m].src] == m;
}

std::optional<std::size_t> FinCategory::compose_opt(std::size_t g, std::size_t f) const {
  const int32_t entry = compose_[g * morphisms_.size() + f];
  if (entry < 0) return std::nullopt;
  return static_cast<std::size_t>(entry);
}

std::size_t FinCategory::compose(std::size_t g, std::size_t f) const {
  const auto c = compose_opt(g, f);
  if (!c)
    throw std::invalid_argument("morphisms " + std::to_string(g) + " and " + std::to_string(f) +
                                " are not composable");
  return *c;
}

std::vector<std::size_t> FinCategory::hom(std::size_t a, std::size_t b) const {
  std::vector<std::size_t> out;
  for (std::size_t m = 0; m < morphisms_.size(); ++m)
    if (morphisms_[m].src == a && morphisms_[m].dst == b) out.push_back(m);
  return out;
}

std::vector<std::size_t> FinCategory::morphisms_into(std::size_t o) const {
  std::vector<std::size_t> out;
  for (std::size_t m = 0; m < morphisms_.size(); ++m)
    if (morphisms_[m].dst == o) out.push_back(m);
  return out;
}

std::vector<std::size_t> FinCategory::morphisms_from(std::size_t o) const {
  std::vector<std::size_t> out;
  for (std::size_t m = 0; m < morphisms_.size(); ++m)
    if (morphisms_[m].src == o) out.push_back(m);
  return out;
}

std::optional<std::string> FinCategory::validate() const {
  const std::size_t n = morphisms_.size();
  for (std::size_t o = 0; o < object_count_; ++o) {
    const std::size_t id = identity_[o];
    if (morphisms_[id].src != o || morphisms_[id].dst != o)
      return "identity of object " + std::to_string(o) + " has wrong endpoints";
  }
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t f = 0; f < n; ++f) {
      const bool composable = morphisms_[f].dst == morphisms_[g].src;
      const int32_t entry = compose_[g * n + f];
      if (composable && entry < 0)
        return "compose(" + std::to_string(g) + ", " + std::to_string(f) + ") missing";
      if (!composable && entry >= 0)
        return "compose(" + std::to_string(g) + ", " + std::to_string(f) +
               ") declared for a non-composable pair";
      if (entry >= 0) {
        const auto& gf = morphisms_[static_cast<std::size_t>(entry)];
        if (gf.src != morphisms_[f].src || gf.dst != morphisms_[g].dst)
          return "compose(" + std::to_string(g) + ", " + std::to_string(f) +
                 ") has wrong endpoints";
      }
    }
  for (std::size_t f = 0; f < n; ++f) {
    if (compose_[identity_[morphisms_[f].dst] * n + f] != static_cast<int32_t>(f))
      return "left identity law fails for " + mor_str(f);
    if (compose_[f * n + identity_[morphisms_[f].src]] != static_cast<int32_t>(f))
      return "right identity law fails for " + mor_str(f);
  }
  for (std::size_t f = 0; f < n; ++f)
    for (std::size_t g : morphisms_from(morphisms_[f].dst))
      for (std::size_t h : morphisms_from(morphisms_[g].dst)) {
        const std::size_t gf = *compose_opt(g, f);
        const std::size_t hg = *compose_opt(h, g);
        if (*compose_opt(h, gf) != *compose_opt(hg, f))
          return "associativity fails at (h, g, f) = (" + std::to_string(h) + ", " +
                 std::to_string(g) + ", " + std::to_string(f) + ")";
      }
  return std::nullopt;
}

bool FinCategory::operator==(const FinCategory& other) const {
  return object_count_ == other.object_count_ && morphisms_ == other.morphisms_ &&
         identity_ == other.identity_ && compose_ == other.compose_;
}

Functor::Functor(FinCategory source, FinCategory target, std::vector<std::size_t> object_map,
                 std::vector<std::size_t> morphism_map)
    : source_(std::move(source)),
      target_(std::move(target)),
      object_map_(std::move(object_map)),
      morphism_map_(std::move(morphism_map)) {
  if (object_map_.size() != source_.object_count() ||
      morphism_map_.size() != source_.morphism_count())
    throw std::invalid_argument("functor map sizes do not match the source category");
  for (std::size_t o : object_map_)
    if (o >= target_.object_count())
      throw std::invalid_argument("functor object image out of range");
  for (std::size_t m : morphism_map_)
    if (m >= target_.morphism_count())
      throw std::invalid_argument("functor morphism image out of range");
}

Functor Functor::identity(const FinCategory& c) {
  std::vector<std::size_t> objects(c.object_count()), morphisms(c.morphism_count());
  std::iota(objects.begin(), objects.end(), 0);
  std::iota(morphisms.begin(), morphisms.end(), 0);
  return Functor(c, c, std::move(objects), std::move(morphisms));
}

std::optional<std::string> Functor::validate() const {
  for (std::size_t m = 0; m < source_.morphism_count(); ++m) {
    const std::size_t image = morphism_map_[m];
    if (target_.src(image) != object_map_[source_.src(m)] ||
        target_.dst(image) != object_map_[source_.dst(m)])
      return "endpoints not preserved at " + mor_str(m);
  }
  for (std::size_t o = 0; o < source_.object_count(); ++o)
    if (morphism_map_[source_.identity(o)] != target_.identity(object_map_[o]))
      return "identity not preserved at object " + std::to_string(o);
  for (std::size_t f = 0; f < source_.morphism_count(); ++f)
    for (std::size_t g : source_.morphisms_from(source_.dst(f))) {
      const auto image = target_.compose_opt(morphism_map_[g], morphism_map_[f]);
      if (!image || *image != morphism_map_[*source_.compose_opt(g, f)])
        return "composition not preserved at (g, f) = (" + std::to_string(g) + ", " +
               std::to_string(f) + ")";
    }
  return std::nullopt;
}

bool Functor::operator==(const Functor& other) const {
  return source_ == other.source_ && target_ == other.target_ &&
         object_map_ == other.object_map_ && morphism_map_ == other.morphism_map_;
}

Functor compose_functors(const Functor& g, const Functor& f) {
  if (!(f.target() == g.source()))
    throw std::invalid_argument("compose_functors: endpoint mismatch");
  std::vector<std::size_t> objects, morphisms;
  for (std::size_t o = 0; o < f.source().object_count(); ++o)
    objects.push_back(g.on_object(f.on_object(o)));
  for (std::size_t m = 0; m < f.source().morphism_count(); ++m)
    morphisms.push_back(g.on_morphism(f.on_morphism(m)));
  return Functor(f.source(), g.target(), std::move(objects), std::move(morphisms));
}

NaturalTransformation::NaturalTransformation(Functor source, Functor target,
                                             std::vector<std::size_t> components)
    : source_(std::move(source)),
      target_(std::move(target)),
      components_(std::move(components)) {
  if (!(source_.source() == target_.source()) || !(source_.target() == target_.target()))
    throw std::invalid_argument("natural transformation requires parallel functors");
  if (components_.size() != source_.source().object_count())
    throw std::invalid_argument("one component per object required");
}

std::optional<std::string> NaturalTransformation::validate() const {
  const FinCategory& dom = source_.source();
  const FinCategory& cod = source_.target();
  for (std::size_t d = 0; d < dom.object_count(); ++d) {
    const std::size_t comp = components_[d];
    if (cod.src(comp) != source_.on_object(d) || cod.dst(comp) != target_.on_object(d))
      return "component at object " + std::to_string(d) + " has wrong endpoints";
  }
  for (std::size_t m = 0; m < dom.morphism_count(); ++m) {
    const std::size_t a = dom.src(m), b = dom.dst(m);
    const auto left = cod.compose_opt(components_[b], source_.on_morphism(m));
    const auto right = cod.compose_opt(target_.on_morphism(m), components_[a]);
    if (!left || !right || *left != *right) return "naturality square fails at " + mor_str(m);
  }
  return std::nullopt;
}

std::optional<DegreeFunction> is_direct(const FinCategory& c) {
  const std::size_t n = c.object_count();
  std::vector<std::vector<std::size_t>> incoming(n), outgoing(n);
  std::vector<std::size_t> pending(n, 0);
  for (std::size_t m = 0; m < c.morphism_count(); ++m) {
    if (c.is_identity(m)) continue;
    if (c.src(m) == c.dst(m)) return std::nullopt;  // nonidentity endomorphism
    incoming[c.dst(m)].push_back(c.src(m));
    outgoing[c.src(m)].push_back(c.dst(m));
    ++pending[c.dst(m)];
  }
  std::vector<std::size_t> order;
  for (std::size_t o = 0; o < n; ++o)
    if (pending[o] == 0) order.push_back(o);
  for (std::size_t head = 0; head < order.size(); ++head)
    for (std::size_t t : outgoing[order[head]])
      if (--pending[t] == 0) order.push_back(t);
  if (order.size() != n) return std::nullopt;  // cycle
  DegreeFunction deg;
  deg.degrees.assign(n, 0);
  for (std::size_t o : order)
    for (std::size_t s : incoming[o]) deg.degrees[o] = std::max(deg.degrees[o], deg.degrees[s] + 1);
  return deg;
}

FullSubcategory full_subcategory(const FinCategory& c, const std::vector<std::size_t>& objects) {
  FullSubcategory out;
  out.object_back = objects;
  std::vector<std::optional<std::size_t>> object_fwd(c.object_count());
  for (std::size_t i = 0; i < objects.size(); ++i) object_fwd[objects[i]] = i;
  std::vector<MorphismData> morphisms;
  std::vector<std::optional<std::size_t>> morphism_fwd(c.morphism_count());
  for (std::size_t m = 0; m < c.morphism_count(); ++m) {
    if (!object_fwd[c.src(m)] || !object_fwd[c.dst(m)]) continue;
    morphism_fwd[m] = morphisms.size();
    morphisms.push_back({*object_fwd[c.src(m)], *object_fwd[c.dst(m)]});
    out.morphism_back.push_back(m);
  }
  std::vector<std::size_t> identity;
  for (std::size_t o : objects) identity.push_back(*morphism_fwd[c.identity(o)]);
  const std::vector<std::size_t> back = out.morphism_back;
  out.cat = FinCategory::from_compose_fn(
      objects.size(), std::move(morphisms), std::move(identity),
      [&c, back, &morphism_fwd](std::size_t g, std::size_t f) {
        return *morphism_fwd[c.compose(back[g], back[f])];
      });
  out.inclusion = Functor(out.cat, c, out.object_back, out.morphism_back);
  return out;
}

namespace {

// Shared builder for over/under categories: objects are (d1, g) pairs and
// morphisms are morphisms f of `dom` whose triangles commute; composition is
// composition in `dom`.
struct SliceData {
  FinCategory cat;
  std::vector<std::pair<std::size_t, std::size_t>> objects;
  std::vector<std::size_t> morphism_underlying;
};

SliceData build_slice(const FinCategory& dom,
                      const std::vector<std::pair<std::size_t, std::size_t>>& objects,
                      const std::function<bool(std::size_t, std::size_t, std::size_t)>& carries) {
  SliceData out;
  out.objects = objects;
  std::vector<MorphismData> morphisms;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < objects.size(); ++i)
    for (std::size_t j = 0; j < objects.size(); ++j)
      for (std::size_t f : dom.hom(objects[i].first, objects[j].first)) {
        if (!carries(f, objects[i].second, objects[j].second)) continue;
        index[{i, j, f}] = morphisms.size();
        morphisms.push_back({i, j});
        out.morphism_underlying.push_back(f);
      }
  std::vector<std::size_t> identity;
  for (std::size_t i = 0; i < objects.size(); ++i)
    identity.push_back(index.at({i, i, dom.identity(objects[i].first)}));
  const std::vector<MorphismData> endpoints = morphisms;
  const std::vector<std::size_t> underlying = out.morphism_underlying;
  out.cat = FinCategory::from_compose_fn(
      objects.size(), std::move(morphisms), std::move(identity),
      [&dom, endpoints, underlying, &index](std::size_t g, std::size_t f) {
        const std::size_t composite = dom.compose(underlying[g], underlying[f]);
        return index.at({endpoints[f].src, endpoints[g].dst, composite});
      });
  return out;
}

}  // namespace

OverCategory over_category(const Functor& u, std::size_t d2) {
  if (d2 >= u.target().object_count())
    throw std::invalid_argument("over_category: object out of range");
  const FinCategory& d1cat = u.source();
  const FinCategory& d2cat = u.target();
  std::vector<std::pair<std::size_t, std::size_t>> objects;
  for (std::size_t d1 = 0; d1 < d1cat.object_count(); ++d1)
    for (std::size_t g : d2cat.hom(u.on_object(d1), d2)) objects.push_back({d1, g});
  auto carries = [&](std::size_t f, std::size_t g, std::size_t g2) {
    return d2cat.compose(g2, u.on_morphism(f)) == g;
  };
  SliceData slice = build_slice(d1cat, objects, carries);
  OverCategory out;
  out.cat = std::move(slice.cat);
  out.objects = std::move(slice.objects);
  out.morphism_underlying = std::move(slice.morphism_underlying);
  std::vector<std::size_t> object_map;
  for (const auto& [d1, g] : out.objects) {
    object_map.push_back(d1);
    out.cocone_legs.push_back(g);
  }
  out.projection = Functor(out.cat, d1cat, std::move(object_map), out.morphism_underlying);
  return out;
}

std::optional<std::size_t> OverCategory::object_index(std::size_t d1, std::size_t g) const {
  for (std::size_t i = 0; i < objects.size(); ++i)
    if (objects[i] == std::make_pair(d1, g)) return i;
  return std::nullopt;
}

UnderCategory under_category(const Functor& u, std::size_t d2) {
  if (d2 >= u.target().object_count())
    throw std::invalid_argument("under_category: object out of range");
  const FinCategory& d1cat = u.source();
  const FinCategory& d2cat = u.target();
  std::vector<std::pair<std::size_t, std::size_t>> objects;
  for (std::size_t d1 = 0; d1 < d1cat.object_count(); ++d1)
    for (std::size_t g : d2cat.hom(d2, u.on_object(d1))) objects.push_back({d1, g});
  auto carries = [&](std::size_t f, std::size_t g, std::size_t g2) {
    return d2cat.compose(u.on_morphism(f), g) == g2;
  };
  SliceData slice = build_slice(d1cat, objects, carries);
  UnderCategory out;
  out.cat = std::move(slice.cat);
  out.objects = std::move(slice.objects);
  out.morphism_underlying = std::move(slice.morphism_underlying);
  std::vector<std::size_t> object_map;
  for (const auto& [d1, g] : out.objects) object_map.push_back(d1);
  out.projection = Functor(out.cat, d1cat, std::move(object_map), out.morphism_underlying);
  return out;
}

LatchingCategory latching_category(const FinCategory& c, std::size_t d) {
  if (!is_direct(c)) throw std::invalid_argument("latching_category requires a direct category");
  const OverCategory over = over_category(Functor::identity(c), d);
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < over.objects.size(); ++i)
    if (!(over.objects[i].first == d && over.objects[i].second == c.identity(d)))
      kept.push_back(i);
  FullSubcategory sub = full_subcategory(over.cat, kept);
  LatchingCategory out;
  out.cat = std::move(sub.cat);
  for (std::size_t i : kept) {
    out.objects.push_back(over.objects[i]);
    out.legs.push_back(over.objects[i].second);
  }
  std::vector<std::size_t> object_map, morphism_map;
  for (const auto& [e, g] : out.objects) object_map.push_back(e);
  for (std::size_t m = 0; m < out.cat.morphism_count(); ++m)
    morphism_map.push_back(over.morphism_underlying[sub.morphism_back[m]]);
  out.projection = Functor(out.cat, c, std::move(object_map), std::move(morphism_map));
  return out;
}

GrothendieckResult grothendieck(const FinCategory& base, const std::vector<FinCategory>& fibers,
                                const std::vector<Functor>& transitions) {
  if (fibers.size() != base.object_count() || transitions.size() != base.morphism_count())
    throw std::invalid_argument("grothendieck: one fiber per object, one functor per morphism");
  for (std::size_t m = 0; m < base.morphism_count(); ++m) {
    if (!(transitions[m].source() == fibers[base.src(m)]) ||
        !(transitions[m].target() == fibers[base.dst(m)]))
      throw std::invalid_argument("grothendieck: transition endpoints mismatch at " + mor_str(m));
    if (transitions[m].validate())
      throw std::invalid_argument("grothendieck: transition not a functor at " + mor_str(m));
  }
  for (std::size_t o = 0; o < base.object_count(); ++o)
    if (!(transitions[base.identity(o)] == Functor::identity(fibers[o])))
      throw std::invalid_argument("grothendieck: identity transition not the identity functor");
  for (std::size_t f = 0; f < base.morphism_count(); ++f)
    for (std::size_t g : base.morphisms_from(base.dst(f)))
      if (!(transitions[base.compose(g, f)] == compose_functors(transitions[g], transitions[f])))
        throw std::invalid_argument("grothendieck: transitions not functorial at (g, f) = (" +
                                    std::to_string(g) + ", " + std::to_string(f) + ")");

  GrothendieckResult out;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> object_index;
  for (std::size_t d = 0; d < base.object_count(); ++d)
    for (std::size_t x = 0; x < fibers[d].object_count(); ++x) {
      object_index[{d, x}] = out.objects.size();
      out.objects.push_back({d, x});
    }
  std::vector<MorphismData> morphisms;
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> morphism_index;
  for (std::size_t f = 0; f < base.morphism_count(); ++f) {
    const std::size_t d1 = base.src(f), d2 = base.dst(f);
    for (std::size_t x1 = 0; x1 < fibers[d1].object_count(); ++x1)
      for (std::size_t phi : fibers[d2].morphisms_from(transitions[f].on_object(x1))) {
        const std::size_t from = object_index.at({d1, x1});
        const std::size_t to = object_index.at({d2, fibers[d2].dst(phi)});
        morphism_index[{from, f, phi}] = morphisms.size();
        morphisms.push_back({from, to});
        out.morphisms.push_back({f, phi});
      }
  }
  std::vector<std::size_t> identity;
  for (const auto& [d, x] : out.objects)
    identity.push_back(
        morphism_index.at({object_index.at({d, x}), base.identity(d), fibers[d].identity(x)}));
  const std::vector<MorphismData> endpoints = morphisms;
  const auto& pairs = out.morphisms;
  out.cat = FinCategory::from_compose_fn(
      out.objects.size(), std::move(morphisms), std::move(identity),
      [&](std::size_t g, std::size_t f) {
        const auto& [fg, phig] = pairs[g];
        const auto& [ff, phif] = pairs[f];
        const std::size_t base_comp = base.compose(fg, ff);
        const std::size_t fib_comp =
            fibers[base.dst(fg)].compose(phig, transitions[fg].on_morphism(phif));
        return morphism_index.at({endpoints[f].src, base_comp, fib_comp});
      });
  std::vector<std::size_t> object_map, morphism_map;
  for (const auto& [d, x] : out.objects) object_map.push_back(d);
  for (const auto& [f, phi] : out.morphisms) morphism_map.push_back(f);
  out.projection = Functor(out.cat, base, std::move(object_map), std::move(morphism_map));
  return out;
}

SumResult sum(const std::vector<FinCategory>& parts) {
  SumResult out;
  std::size_t object_count = 0, morphism_count = 0;
  std::vector<MorphismData> morphisms;
  std::vector<std::size_t> identity;
  std::vector<std::size_t> object_offset, morphism_offset;
  for (const auto& p : parts) {
    object_offset.push_back(object_count);
    morphism_offset.push_back(morphism_count);
    for (std::size_t m = 0; m < p.morphism_count(); ++m)
      morphisms.push_back({p.src(m) + object_count, p.dst(m) + object_count});
    for (std::size_t o = 0; o < p.object_count(); ++o)
      identity.push_back(p.identity(o) + morphism_count);
    object_count += p.object_count();
    morphism_count += p.morphism_count();
  }
  auto part_of = [&](std::size_t m) {
    std::size_t k = parts.size() - 1;
    while (morphism_offset[k] > m) --k;
    return k;
  };
  out.cat = FinCategory::from_compose_fn(
      object_count, std::move(morphisms), std::move(identity),
      [&parts, &morphism_offset, part_of](std::size_t g, std::size_t f) {
        const std::size_t k = part_of(f);
        return parts[k].compose(g - morphism_offset[k], f - morphism_offset[k]) +
               morphism_offset[k];
      });
  for (std::size_t k = 0; k < parts.size(); ++k) {
    std::vector<std::size_t> object_map, morphism_map;
    for (std::size_t o = 0; o < parts[k].object_count(); ++o)
      object_map.push_back(o + object_offset[k]);
    for (std::size_t m = 0; m < parts[k].morphism_count(); ++m)
      morphism_map.push_back(m + morphism_offset[k]);
    out.injections.emplace_back(parts[k], out.cat, std::move(object_map), std::move(morphism_map));
  }
  return out;
}

ProductResult product(const std::vector<FinCategory>& parts) {
  ProductResult out;
  if (parts.empty()) {
    out.cat = FinCategory::terminal();
    out.object_tuples = {{}};
    out.morphism_tuples = {{}};
    return out;
  }
  std::size_t object_count = 1, morphism_count = 1;
  for (const auto& p : parts) {
    object_count *= p.object_count();
    morphism_count *= p.morphism_count();
  }
  auto unrank = [&](std::size_t rank, bool objects_side) {
    std::vector<std::size_t> tuple(parts.size());
    for (std::size_t k = parts.size(); k-- > 0;) {
      const std::size_t radix = objects_side ? parts[k].object_count() : parts[k].morphism_count();
      tuple[k] = rank % radix;
      rank /= radix;
    }
    return tuple;
  };
  auto rank_of = [&](const std::vector<std::size_t>& tuple, bool objects_side) {
    std::size_t rank = 0;
    for (std::size_t k = 0; k < parts.size(); ++k) {
      const std::size_t radix = objects_side ? parts[k].object_count() : parts[k].morphism_count();
      rank = rank * radix + tuple[k];
    }
    return rank;
  };
  for (std::size_t r = 0; r < object_count; ++r) out.object_tuples.push_back(unrank(r, true));
  std::vector<MorphismData> morphisms;
  for (std::size_t r = 0; r < morphism_count; ++r) {
    const auto tuple = unrank(r, false);
    out.morphism_tuples.push_back(tuple);
    std::vector<std::size_t> src_tuple, dst_tuple;
    for (std::size_t k = 0; k < parts.size(); ++k) {
      src_tuple.push_back(parts[k].src(tuple[k]));
      dst_tuple.push_back(parts[k].dst(tuple[k]));
    }
    morphisms.push_back({rank_of(src_tuple, true), rank_of(dst_tuple, true)});
  }
  std::vector<std::size_t> identity;
  for (std::size_t r = 0; r < object_count; ++r) {
    std::vector<std::size_t> id_tuple;
    for (std::size_t k = 0; k < parts.size(); ++k)
      id_tuple.push_back(parts[k].identity(out.object_tuples[r][k]));
    identity.push_back(rank_of(id_tuple, false));
  }
  out.cat = FinCategory::from_compose_fn(
      object_count, std::move(morphisms), std::move(identity),
      [&](std::size_t g, std::size_t f) {
        std::vector<std::size_t> comp;
        for (std::size_t k = 0; k < parts.size(); ++k)
          comp.push_back(parts[k].compose(out.morphism_tuples[g][k], out.morphism_tuples[f][k]));
        return rank_of(comp, false);
      });
  for (std::size_t k = 0; k < parts.size(); ++k) {
    std::vector<std::size_t> object_map, morphism_map;
    for (std::size_t r = 0; r < object_count; ++r) object_map.push_back(out.object_tuples[r][k]);
    for (std::size_t r = 0; r < morphism_count; ++r)
      morphism_map.push_back(out.morphism_tuples[r][k]);
    out.projections.emplace_back(out.cat, parts[k], std::move(object_map),
                                 std::move(morphism_map));
  }
  return out;
}

bool ChainObject::operator<(const ChainObject& other) const {
  if (arrows.size() != other.arrows.size()) return arrows.size() < other.arrows.size();
  if (start != other.start) return start < other.start;
  return arrows < other.arrows;
}

DeltaPrimeResult delta_prime(const FinCategory& c, std::size_t max_len) {
  DeltaPrimeResult out;
  std::vector<std::size_t> chain_end;
  for (std::size_t o = 0; o < c.object_count(); ++o) {
    out.chains.push_back({o, {}});
    chain_end.push_back(o);
  }
  // Identity arrows are allowed, so every length up to max_len is inhabited.
  std::size_t level_begin = 0, level_end = out.chains.size();
  for (std::size_t len = 1; len <= max_len; ++len) {
    for (std::size_t i = level_begin; i < level_end; ++i)
      for (std::size_t m : c.morphisms_from(chain_end[i])) {
        ChainObject extended = out.chains[i];
        extended.arrows.push_back(m);
        out.chains.push_back(std::move(extended));
        chain_end.push_back(c.dst(m));
      }
    level_begin = level_end;
    level_end = out.chains.size();
  }
  auto object_at = [&](const ChainObject& t, std::size_t p) {
    std::size_t obj = t.start;
    for (std::size_t k = 0; k < p; ++k) obj = c.dst(t.arrows[k]);
    return obj;
  };
  auto composite = [&](const ChainObject& t, std::size_t p, std::size_t q) {
    std::size_t acc = c.identity(object_at(t, p));
    for (std::size_t k = p; k < q; ++k) acc = c.compose(t.arrows[k], acc);
    return acc;
  };
  std::vector<MorphismData> morphisms;
  std::map<std::pair<std::size_t, std::size_t>, std::map<std::vector<std::size_t>, std::size_t>>
      index;
  for (std::size_t i = 0; i < out.chains.size(); ++i)
    for (std::size_t j = 0; j < out.chains.size(); ++j) {
      const ChainObject& s = out.chains[i];
      const ChainObject& t = out.chains[j];
      const std::size_t n1 = s.arrows.size(), n2 = t.arrows.size();
      if (n1 > n2) continue;
      for (const auto& inj : increasing_maps(n1 + 1, n2)) {
        bool compatible = true;
        for (std::size_t k = 0; k <= n1 && compatible; ++k)
          compatible = object_at(s, k) == object_at(t, inj[k]);
        for (std::size_t k = 0; k < n1 && compatible; ++k)
          compatible = s.arrows[k] == composite(t, inj[k], inj[k + 1]);
        if (!compatible) continue;
        index[{i, j}][inj] = morphisms.size();
        morphisms.push_back({i, j});
        out.morphism_injections.push_back(inj);
      }
    }
  std::vector<std::size_t> identity;
  for (std::size_t i = 0; i < out.chains.size(); ++i) {
    std::vector<std::size_t> id_inj(out.chains[i].arrows.size() + 1);
    std::iota(id_inj.begin(), id_inj.end(), 0);
    identity.push_back(index.at({i, i}).at(id_inj));
  }
  const std::vector<MorphismData> endpoints = morphisms;
  out.cat = FinCategory::from_compose_fn(
      out.chains.size(), std::move(morphisms), std::move(identity),
      [&](std::size_t g, std::size_t f) {
        const auto& i1 = out.morphism_injections[f];
        const auto& i2 = out.morphism_injections[g];
        std::vector<std::size_t> comp(i1.size());
        for (std::size_t k = 0; k < i1.size(); ++k) comp[k] = i2[i1[k]];
        return index.at({endpoints[f].src, endpoints[g].dst}).at(comp);
      });
  std::vector<std::size_t> object_map, morphism_map;
  for (std::size_t i = 0; i < out.chains.size(); ++i)
    object_map.push_back(object_at(out.chains[i], out.chains[i].arrows.size()));
  for (std::size_t m = 0; m < out.cat.morphism_count(); ++m) {
    const std::size_t j = endpoints[m].dst;
    const auto& inj = out.morphism_injections[m];
    morphism_map.push_back(composite(out.chains[j], inj.back(), out.chains[j].arrows.size()));
  }
  out.terminal_projection = Functor(out.cat, c, std::move(object_map), std::move(morphism_map));
  return out;
}

namespace {

bool embedding_core(const Functor& u, bool open_side) {
  std::vector<bool> object_hit(u.target().object_count(), false);
  for (std::size_t o = 0; o < u.source().object_count(); ++o) {
    if (object_hit[u.on_object(o)]) return false;  // not injective on objects
    object_hit[u.on_object(o)] = true;
  }
  std::vector<bool> morphism_hit(u.target().morphism_count(), false);
  for (std::size_t m = 0; m < u.source().morphism_count(); ++m) {
    if (morphism_hit[u.on_morphism(m)]) return false;  // not faithful
    morphism_hit[u.on_morphism(m)] = true;
  }
  for (std::size_t m = 0; m < u.target().morphism_count(); ++m) {
    const std::size_t boundary = open_side ? u.target().dst(m) : u.target().src(m);
    if (object_hit[boundary] && !morphism_hit[m]) return false;
  }
  return true;
}

}  // namespace

bool is_open_embedding(const Functor& u) { return embedding_core(u, true); }

bool is_closed_embedding(const Functor& u) { return embedding_core(u, false); }

}  // namespace fincat
