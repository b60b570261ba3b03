#pragma once

#include "hocolim/ratlin.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace chq {

using ratlin::Matrix;
using ratlin::Rational;

// Bounded chain complex of finite-dimensional rational vector spaces.
// d_n maps degree n to degree n-1; d_n . d_{n+1} = 0 is checked on
// construction. The zero complex has empty support.
class ChainComplex {
 public:
  ChainComplex() = default;  // zero complex
  // dims[i] is the dimension in degree lo + i; diffs[i] is d_{lo+i+1}
  // (a dims[i] x dims[i+1] matrix). Boundary zero dimensions are trimmed.
  ChainComplex(int lo, std::vector<std::size_t> dims, std::vector<Matrix> diffs);

  static ChainComplex zero() { return ChainComplex(); }
  // Q concentrated in degree n.
  static ChainComplex point(int degree = 0);

  bool is_zero() const { return dims_.empty(); }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(dims_.size()) - 1; }

  std::size_t dim(int n) const;
  // d_n as a dim(n-1) x dim(n) matrix; zero-sized outside the support.
  Matrix d(int n) const;

  std::size_t total_dim() const;

  // Complexes are compared on every degree, ignoring support padding.
  bool operator==(const ChainComplex& other) const;

  std::string dims_to_string() const;

 private:
  int lo_ = 0;
  std::vector<std::size_t> dims_;
  std::vector<Matrix> diffs_;
};

// Per-degree homology ranks, zero outside the stored window.
class BettiProfile {
 public:
  BettiProfile() = default;
  BettiProfile(int lo, std::vector<std::size_t> betti);

  std::size_t at(int n) const;
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(betti_.size()) - 1; }
  bool operator==(const BettiProfile& other) const;
  std::string to_string() const;

 private:
  int lo_ = 0;
  std::vector<std::size_t> betti_;
};

// Degreewise matrices commuting with the differentials (checked on
// construction).
class ChainMap {
 public:
  ChainMap() = default;
  ChainMap(ChainComplex src, ChainComplex dst, std::map<int, Matrix> components);

  static ChainMap identity(const ChainComplex& c);
  static ChainMap zero(const ChainComplex& src, const ChainComplex& dst);

  const ChainComplex& src() const { return src_; }
  const ChainComplex& dst() const { return dst_; }
  // f_n as a dst.dim(n) x src.dim(n) matrix.
  Matrix f(int n) const;

  bool operator==(const ChainMap& other) const;

 private:
  ChainComplex src_, dst_;
  std::map<int, Matrix> components_;  // only degrees with both dims > 0
};

ChainMap compose(const ChainMap& g, const ChainMap& f);
ChainMap add(const ChainMap& f, const ChainMap& g);
ChainMap negate(const ChainMap& f);

// f - g = d h + h d; h_n : src degree n -> dst degree n+1. Checked on
// construction.
class ChainHomotopy {
 public:
  ChainHomotopy() = default;
  ChainHomotopy(ChainMap from, ChainMap to, std::map<int, Matrix> components);

  const ChainMap& from() const { return from_; }
  const ChainMap& to() const { return to_; }
  Matrix h(int n) const;

 private:
  ChainMap from_, to_;
  std::map<int, Matrix> components_;
};

BettiProfile homology(const ChainComplex& c);

bool is_monic(const ChainMap& f);
bool is_quasi_iso(const ChainMap& f);

// Cone(f)_n = src_{n-1} (+) dst_n with d(a, b) = (-d a, d b - f a).
ChainComplex mapping_cone(const ChainMap& f);

struct PushoutResult {
  ChainComplex object;
  ChainMap from_b;  // monic iff g is; always a chain map
  ChainMap from_c;  // monic (pushout of the monic f)
};

// Pushout of B <-f- A -g-> C with f monic; D_n is the quotient of
// B_n (+) C_n by the span of (f_n, -g_n), with the deterministic
// quotient_basis coordinates.
PushoutResult pushout(const ChainMap& f, const ChainMap& g);

// Induced map D -> T out of a pushout, given legs B -> T and C -> T that
// agree on A. Exact, unique.
ChainMap pushout_induced(const PushoutResult& po, const ChainMap& from_b_to_t,
                         const ChainMap& from_c_to_t);

struct Factorization {
  ChainComplex mid;   // A (+) A[1] (+) B, the mapping cylinder
  ChainMap into;      // monic A -> mid, x -> (x, 0, 0)
  ChainMap retract;   // quasi-iso mid -> B, (x, y, z) -> f x + z
};

// Factors f = retract . into with into monic and retract a quasi-iso.
// Cylinder differential: d(x, y, z) = (d x + y, -d y, d z - f y).
Factorization factorize(const ChainMap& f);

struct CylinderResult {
  ChainComplex object;
  ChainMap i0, i1;  // monic, p . i0 = p . i1 = id
  ChainMap p;       // quasi-iso
};

// Factorization of the codiagonal A (+) A -> A through the mapping cylinder.
CylinderResult cylinder(const ChainComplex& a);

struct BrownFactorization {
  ChainComplex mid;
  ChainMap cof;      // monic f' with retract . cof = f
  ChainMap retract;  // r with r . section = id
  ChainMap section;  // monic quasi-iso s
};

// Brown factorization via factorize(f + 1_B).
BrownFactorization brown_factorize(const ChainMap& f);

// Chain homotopy h with f - g = d h + h d, when one exists. Absence
// certifies f and g are not equal in the homotopy category of this model.
std::optional<ChainHomotopy> solve_homotopy(const ChainMap& f, const ChainMap& g);

// A[k]_n = A_{n-k}, differential (-1)^k d.
ChainComplex shift(const ChainComplex& c, int k);

struct DirectSumResult {
  ChainComplex object;
  std::vector<ChainMap> injections;
  std::vector<ChainMap> projections;
};

DirectSumResult direct_sum(const std::vector<ChainComplex>& parts);

// The map (+) A_i -> T with the given components.
ChainMap from_sum(const DirectSumResult& sum, const std::vector<ChainMap>& legs);

}  // namespace chq
