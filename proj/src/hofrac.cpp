#include "hocolim/hofrac.hpp"

#include <stdexcept>

namespace hofrac {

using chq::ChainComplex;
using chq::ChainHomotopy;
using chq::ChainMap;
using chq::Matrix;

Fraction make_fraction(const chq::ChainMap& f, const chq::ChainMap& s) {
  if (!(f.dst() == s.dst()))
    throw std::invalid_argument("fraction legs must share their target");
  if (!chq::is_quasi_iso(s))
    throw std::invalid_argument("fraction denominator must be a quasi-isomorphism");
  return Fraction{f.src(), s.src(), f.dst(), f, s};
}

Fraction identity_fraction(const chq::ChainComplex& a) {
  const ChainMap id = ChainMap::identity(a);
  return Fraction{a, a, a, id, id};
}

Fraction from_map(const chq::ChainMap& f) {
  return Fraction{f.src(), f.dst(), f.dst(), f, ChainMap::identity(f.dst())};
}

Fraction compose(const Fraction& second, const Fraction& first) {
  if (!(first.dst == second.src))
    throw std::invalid_argument("fraction composition endpoint mismatch");
  const ChainComplex& b = first.dst;
  const auto cyl = chq::cylinder(b);
  // Q = IB u_B E2 along i1, then B'' = E1 u_B Q along the monic end
  // q_IB . i0; the pushout of a trivial cofibration stays a quasi-iso here.
  const auto po1 = chq::pushout(cyl.i1, second.numerator);
  const ChainMap end0 = chq::compose(po1.from_b, cyl.i0);
  const auto po2 = chq::pushout(end0, first.denominator);
  const ChainMap g_prime = po2.from_c;                        // E1 -> B''
  const ChainMap t_prime = chq::compose(po2.from_b, po1.from_c);  // E2 -> B''
  return make_fraction(chq::compose(g_prime, first.numerator),
                       chq::compose(t_prime, second.denominator));
}

HomotopyInverse invert_quasi_iso(const chq::ChainMap& s) {
  if (!chq::is_quasi_iso(s)) throw std::invalid_argument("invert_quasi_iso: not a quasi-iso");
  const ChainComplex& b = s.src();
  const ChainComplex& bp = s.dst();
  // Degreewise invertible maps invert exactly with zero homotopies.
  {
    bool invertible = true;
    for (int n = std::min(b.is_zero() ? 0 : b.lo(), bp.is_zero() ? 0 : bp.lo());
         n <= std::max(b.is_zero() ? 0 : b.hi(), bp.is_zero() ? 0 : bp.hi()) && invertible; ++n)
      invertible = b.dim(n) == bp.dim(n) && ratlin::rank(s.f(n)) == b.dim(n);
    if (invertible) {
      std::map<int, Matrix> inv_comps;
      for (int n = b.lo(); n <= b.hi(); ++n)
        if (b.dim(n) > 0) inv_comps[n] = *ratlin::solve(s.f(n), Matrix::identity(b.dim(n)));
      ChainMap g(bp, b, std::move(inv_comps));
      return HomotopyInverse{s, g, ChainHomotopy(chq::compose(g, s), ChainMap::identity(b), {}),
                             ChainHomotopy(chq::compose(s, g), ChainMap::identity(bp), {})};
    }
  }
  const ChainComplex cone = chq::mapping_cone(s);
  // Contracting homotopy H with dH + Hd = id: on cycles H is a chosen
  // preimage under d, on the chosen complement it is zero.
  std::map<int, Matrix> kernel, complement, proj;
  for (int n = cone.lo(); n <= cone.hi(); ++n) {
    const Matrix k = ratlin::kernel_basis(cone.d(n));
    auto qb = ratlin::quotient_basis(k, cone.dim(n));
    kernel[n] = k;
    complement[n] = qb.section;
    proj[n] = qb.projection;
  }
  std::map<int, Matrix> contraction;
  for (int n = cone.lo(); n <= cone.hi(); ++n) {
    if (cone.dim(n) == 0) continue;
    const Matrix p_ker =
        Matrix::identity(cone.dim(n)) - complement[n] * proj[n];  // projector onto cycles
    if (n == cone.hi()) {
      if (!p_ker.is_zero())
        throw std::logic_error("acyclic cone has cycles in the top degree");
      continue;
    }
    const Matrix d_next = cone.d(n + 1) * complement[n + 1];
    auto y = ratlin::solve(d_next, p_ker);
    if (!y) throw std::logic_error("cone contraction solve failed on an acyclic cone");
    contraction[n] = complement[n + 1] * (*y);
  }
  auto h_at = [&](int n) {
    auto it = contraction.find(n);
    if (it != contraction.end()) return it->second;
    return Matrix::zero(cone.dim(n + 1), cone.dim(n));
  };
  for (int n = cone.lo(); n <= cone.hi(); ++n)
    if (cone.d(n + 1) * h_at(n) + h_at(n - 1) * cone.d(n) != Matrix::identity(cone.dim(n)))
      throw std::logic_error("cone contraction identity failed");
  // Cone_n = B_{n-1} (+) B'_n. Blocks of H_n: the B' -> B corner gives the
  // homotopy inverse (up to sign), the diagonal corners the two homotopies.
  std::map<int, Matrix> inv_comps, left_comps, right_comps;
  const int lo = cone.lo(), hi = cone.hi();
  for (int n = lo; n <= hi; ++n) {
    const Matrix h = h_at(n);
    const std::size_t rows_b = b.dim(n), rows_bp = bp.dim(n + 1);
    const std::size_t cols_b = b.dim(n - 1), cols_bp = bp.dim(n);
    // h : B_{n-1} (+) B'_n -> B_n (+) B'_{n+1}
    if (rows_b + rows_bp != cone.dim(n + 1) || cols_b + cols_bp != cone.dim(n))
      throw std::logic_error("cone block sizes out of joint");
    if (rows_b > 0 && cols_bp > 0)
      inv_comps[n] = -h.block(0, rows_b, cols_b, cols_b + cols_bp);  // g_n : B'_n -> B_n
    if (rows_b > 0 && cols_b > 0)
      left_comps[n - 1] = h.block(0, rows_b, 0, cols_b);  // B_{n-1} -> B_n
    if (rows_bp > 0 && cols_bp > 0)
      right_comps[n] = h.block(rows_b, rows_b + rows_bp, cols_b, cols_b + cols_bp);
  }
  ChainMap g(bp, b, std::move(inv_comps));
  // g s - id = d k + k d with k the B->B corner blocks; id - s g = d h' + h' d
  // with h' the B'->B' corner blocks.
  ChainHomotopy left(chq::compose(g, s), ChainMap::identity(b), std::move(left_comps));
  std::map<int, Matrix> right_neg;
  for (auto& [n, m] : right_comps) right_neg[n] = -m;
  ChainHomotopy right(chq::compose(s, g), ChainMap::identity(bp), std::move(right_neg));
  return HomotopyInverse{s, std::move(g), std::move(left), std::move(right)};
}

bool fractions_equal(const Fraction& a, const Fraction& b) {
  if (!(a.src == b.src) || !(a.dst == b.dst))
    throw std::invalid_argument("fractions_equal: endpoint mismatch");
  const HomotopyInverse inv_a = invert_quasi_iso(a.denominator);
  const HomotopyInverse inv_b = invert_quasi_iso(b.denominator);
  const ChainMap ga = chq::compose(inv_a.inverse, a.numerator);
  const ChainMap gb = chq::compose(inv_b.inverse, b.numerator);
  return chq::solve_homotopy(ga, gb).has_value();
}

Fraction normalize(const Fraction& fr) {
  auto sum = chq::direct_sum({fr.src, fr.dst});
  const ChainMap f_plus_s = chq::from_sum(sum, {fr.numerator, fr.denominator});
  const auto fact = chq::factorize(f_plus_s);
  return make_fraction(chq::compose(fact.into, sum.injections[0]),
                       chq::compose(fact.into, sum.injections[1]));
}

}  // namespace hofrac
