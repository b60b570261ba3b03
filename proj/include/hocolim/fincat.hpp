#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fincat {

struct MorphismData {
  std::size_t src = 0;
  std::size_t dst = 0;
  bool operator==(const MorphismData&) const = default;
};

// Finite category with an explicit composition table. Objects and morphisms
// are dense integer indices; compose(g, f) means g after f. The constructor
// checks shapes only; categorical laws are checked by validate().
class FinCategory {
 public:
  FinCategory() = default;
  FinCategory(std::size_t object_count, std::vector<MorphismData> morphisms,
              std::vector<std::size_t> identity,
              const std::vector<std::array<std::size_t, 3>>& compose_entries);

  // Builds the full table from a composition rule; the rule is consulted for
  // every composable pair.
  static FinCategory from_compose_fn(
      std::size_t object_count, std::vector<MorphismData> morphisms,
      std::vector<std::size_t> identity,
      const std::function<std::size_t(std::size_t, std::size_t)>& rule);

  static FinCategory empty();
  static FinCategory terminal();
  static FinCategory discrete(std::size_t n);

  std::size_t object_count() const { return object_count_; }
  std::size_t morphism_count() const { return morphisms_.size(); }
  std::size_t src(std::size_t m) const { return morphisms_[m].src; }
  std::size_t dst(std::size_t m) const { return morphisms_[m].dst; }
  std::size_t identity(std::size_t o) const { return identity_[o]; }
  bool is_identity(std::size_t m) const;

  std::optional<std::size_t> compose_opt(std::size_t g, std::size_t f) const;
  std::size_t compose(std::size_t g, std::size_t f) const;

  std::vector<std::size_t> hom(std::size_t a, std::size_t b) const;
  std::vector<std::size_t> morphisms_into(std::size_t o) const;
  std::vector<std::size_t> morphisms_from(std::size_t o) const;

  // First broken identity/associativity/closure law, or nullopt when the data
  // is a category.
  std::optional<std::string> validate() const;

  bool operator==(const FinCategory& other) const;

 private:
  std::size_t object_count_ = 0;
  std::vector<MorphismData> morphisms_;
  std::vector<std::size_t> identity_;
  std::vector<int32_t> compose_;  // dense morphisms x morphisms, -1 = not composable
};

class Functor {
 public:
  Functor() = default;
  Functor(FinCategory source, FinCategory target, std::vector<std::size_t> object_map,
          std::vector<std::size_t> morphism_map);

  static Functor identity(const FinCategory& c);

  const FinCategory& source() const { return source_; }
  const FinCategory& target() const { return target_; }
  std::size_t on_object(std::size_t o) const { return object_map_[o]; }
  std::size_t on_morphism(std::size_t m) const { return morphism_map_[m]; }
  const std::vector<std::size_t>& object_map() const { return object_map_; }
  const std::vector<std::size_t>& morphism_map() const { return morphism_map_; }

  std::optional<std::string> validate() const;

  bool operator==(const Functor& other) const;

 private:
  FinCategory source_, target_;
  std::vector<std::size_t> object_map_, morphism_map_;
};

Functor compose_functors(const Functor& g, const Functor& f);

class NaturalTransformation {
 public:
  NaturalTransformation() = default;
  NaturalTransformation(Functor source, Functor target, std::vector<std::size_t> components);

  const Functor& source() const { return source_; }
  const Functor& target() const { return target_; }
  // Component at d: a morphism source(d) -> target(d) in the shared target
  // category.
  std::size_t component(std::size_t d) const { return components_[d]; }

  std::optional<std::string> validate() const;

 private:
  Functor source_, target_;
  std::vector<std::size_t> components_;
};

struct DegreeFunction {
  std::vector<std::size_t> degrees;
};

// Minimal degree function (longest nonidentity path into each object) when
// the nonidentity-arrow relation is acyclic; nullopt otherwise.
std::optional<DegreeFunction> is_direct(const FinCategory& c);

struct FullSubcategory {
  FinCategory cat;
  Functor inclusion;
  std::vector<std::size_t> object_back;    // subcategory object -> ambient object
  std::vector<std::size_t> morphism_back;  // subcategory morphism -> ambient morphism
};

FullSubcategory full_subcategory(const FinCategory& c, const std::vector<std::size_t>& objects);

// Over category (u | d2): objects are pairs (d1, g: u d1 -> d2).
struct OverCategory {
  FinCategory cat;
  Functor projection;                                     // forgets g
  std::vector<std::size_t> cocone_legs;                   // per object, the g
  std::vector<std::pair<std::size_t, std::size_t>> objects;  // (d1, g)
  std::vector<std::size_t> morphism_underlying;           // f in the source of u

  std::optional<std::size_t> object_index(std::size_t d1, std::size_t g) const;
};

OverCategory over_category(const Functor& u, std::size_t d2);

// Under category (d2 | u): objects are pairs (d1, g: d2 -> u d1).
struct UnderCategory {
  FinCategory cat;
  Functor projection;
  std::vector<std::pair<std::size_t, std::size_t>> objects;
  std::vector<std::size_t> morphism_underlying;
};

UnderCategory under_category(const Functor& u, std::size_t d2);

// Latching category of a direct c at d: the over category (c | d) minus the
// identity of d. Direct with the inherited degrees.
struct LatchingCategory {
  FinCategory cat;
  Functor projection;                    // into c
  std::vector<std::size_t> legs;         // per object, the arrow into d
  std::vector<std::pair<std::size_t, std::size_t>> objects;  // (e, g: e -> d)
};

LatchingCategory latching_category(const FinCategory& c, std::size_t d);

struct GrothendieckResult {
  FinCategory cat;
  Functor projection;  // to the base
  std::vector<std::pair<std::size_t, std::size_t>> objects;    // (d, x)
  std::vector<std::pair<std::size_t, std::size_t>> morphisms;  // (f, phi)
};

// transitions[f] : fibers[src f] -> fibers[dst f]; must be functorial in f
// (checked, throws std::invalid_argument otherwise).
GrothendieckResult grothendieck(const FinCategory& base, const std::vector<FinCategory>& fibers,
                                const std::vector<Functor>& transitions);

struct SumResult {
  FinCategory cat;
  std::vector<Functor> injections;
};

SumResult sum(const std::vector<FinCategory>& parts);

struct ProductResult {
  FinCategory cat;
  std::vector<Functor> projections;
  std::vector<std::vector<std::size_t>> object_tuples;
  std::vector<std::vector<std::size_t>> morphism_tuples;
};

ProductResult product(const std::vector<FinCategory>& parts);

// Truncated chain category: objects are composable strings of at most
// max_len arrows of c (identities allowed); maps are injective
// order-preserving reindexings with commuting triangles. Direct, with
// degree = string length.
struct ChainObject {
  std::size_t start = 0;
  std::vector<std::size_t> arrows;
  bool operator==(const ChainObject&) const = default;
  bool operator<(const ChainObject&) const;
};

struct DeltaPrimeResult {
  FinCategory cat;
  Functor terminal_projection;  // sends a string to its last object
  std::vector<ChainObject> chains;
  std::vector<std::vector<std::size_t>> morphism_injections;
};

DeltaPrimeResult delta_prime(const FinCategory& c, std::size_t max_len);

// Full, injective on objects, and every morphism into (resp. out of) the
// image lies in the image.
bool is_open_embedding(const Functor& u);
bool is_closed_embedding(const Functor& u);

}  // namespace fincat
