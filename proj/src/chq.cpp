#include "hocolim/chq.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace chq {

namespace {

int min_lo(const ChainComplex& a, const ChainComplex& b) {
  if (a.is_zero()) return b.lo();
  if (b.is_zero()) return a.lo();
  return std::min(a.lo(), b.lo());
}

int max_hi(const ChainComplex& a, const ChainComplex& b) {
  if (a.is_zero()) return b.hi();
  if (b.is_zero()) return a.hi();
  return std::max(a.hi(), b.hi());
}

}  // namespace

ChainComplex::ChainComplex(int lo, std::vector<std::size_t> dims, std::vector<Matrix> diffs)
    : lo_(lo), dims_(std::move(dims)), diffs_(std::move(diffs)) {
  if (!dims_.empty() && diffs_.size() != dims_.size() - 1)
    throw std::invalid_argument("chain complex needs one differential per adjacent pair");
  for (std::size_t i = 0; i + 1 < dims_.size(); ++i)
    if (diffs_[i].rows() != dims_[i] || diffs_[i].cols() != dims_[i + 1])
      throw std::invalid_argument("differential shape mismatch at degree " +
                                  std::to_string(lo_ + static_cast<int>(i) + 1));
  for (std::size_t i = 0; i + 2 < dims_.size(); ++i)
    if (!(diffs_[i] * diffs_[i + 1]).is_zero())
      throw std::invalid_argument("d.d != 0 at degree " + std::to_string(lo_ + static_cast<int>(i) + 2));
  // Trim zero-dimensional padding at both ends.
  while (!dims_.empty() && dims_.back() == 0) {
    dims_.pop_back();
    if (!diffs_.empty()) diffs_.pop_back();
  }
  while (!dims_.empty() && dims_.front() == 0) {
    dims_.erase(dims_.begin());
    if (!diffs_.empty()) diffs_.erase(diffs_.begin());
    ++lo_;
  }
  if (dims_.empty()) {
    lo_ = 0;
    diffs_.clear();
  }
}

ChainComplex ChainComplex::point(int degree) { return ChainComplex(degree, {1}, {}); }

std::size_t ChainComplex::dim(int n) const {
  if (dims_.empty() || n < lo_ || n > hi()) return 0;
  return dims_[static_cast<std::size_t>(n - lo_)];
}

Matrix ChainComplex::d(int n) const {
  if (!dims_.empty() && n > lo_ && n <= hi())
    return diffs_[static_cast<std::size_t>(n - lo_ - 1)];
  return Matrix::zero(dim(n - 1), dim(n));
}

std::size_t ChainComplex::total_dim() const {
  std::size_t total = 0;
  for (std::size_t d : dims_) total += d;
  return total;
}

bool ChainComplex::operator==(const ChainComplex& other) const {
  if (is_zero() || other.is_zero()) return is_zero() && other.is_zero();
  const int lo = std::min(lo_, other.lo_), hi_n = std::max(hi(), other.hi());
  for (int n = lo; n <= hi_n; ++n) {
    if (dim(n) != other.dim(n)) return false;
    if (d(n) != other.d(n)) return false;
  }
  return true;
}

std::string ChainComplex::dims_to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  for (int n = lo(); n <= hi(); ++n) {
    if (n > lo()) out << ", ";
    out << n << ":" << dim(n);
  }
  return out.str();
}

BettiProfile::BettiProfile(int lo, std::vector<std::size_t> betti)
    : lo_(lo), betti_(std::move(betti)) {
  while (!betti_.empty() && betti_.back() == 0) betti_.pop_back();
  while (!betti_.empty() && betti_.front() == 0) {
    betti_.erase(betti_.begin());
    ++lo_;
  }
  if (betti_.empty()) lo_ = 0;
}

std::size_t BettiProfile::at(int n) const {
  if (betti_.empty() || n < lo_ || n > hi()) return 0;
  return betti_[static_cast<std::size_t>(n - lo_)];
}

bool BettiProfile::operator==(const BettiProfile& other) const {
  return lo_ == other.lo_ && betti_ == other.betti_;
}

std::string BettiProfile::to_string() const {
  if (betti_.empty()) return "0";
  std::ostringstream out;
  for (int n = lo(); n <= hi(); ++n) {
    if (n > lo()) out << ", ";
    out << "deg " << n << ": " << at(n);
  }
  return out.str();
}

ChainMap::ChainMap(ChainComplex src, ChainComplex dst, std::map<int, Matrix> components)
    : src_(std::move(src)), dst_(std::move(dst)), components_(std::move(components)) {
  for (auto it = components_.begin(); it != components_.end();) {
    const int n = it->first;
    if (it->second.rows() != dst_.dim(n) || it->second.cols() != src_.dim(n))
      throw std::invalid_argument("chain map component shape mismatch at degree " +
                                  std::to_string(n));
    if (dst_.dim(n) == 0 || src_.dim(n) == 0)
      it = components_.erase(it);
    else
      ++it;
  }
  const int lo = min_lo(src_, dst_), hi = max_hi(src_, dst_);
  for (int n = lo; n <= hi + 1; ++n)
    if (dst_.d(n) * f(n) != f(n - 1) * src_.d(n))
      throw std::invalid_argument("chain map does not commute with d at degree " +
                                  std::to_string(n));
}

ChainMap ChainMap::identity(const ChainComplex& c) {
  std::map<int, Matrix> comps;
  for (int n = c.lo(); n <= c.hi(); ++n)
    if (c.dim(n) > 0) comps[n] = Matrix::identity(c.dim(n));
  return ChainMap(c, c, std::move(comps));
}

ChainMap ChainMap::zero(const ChainComplex& src, const ChainComplex& dst) {
  return ChainMap(src, dst, {});
}

Matrix ChainMap::f(int n) const {
  const auto it = components_.find(n);
  if (it != components_.end()) return it->second;
  return Matrix::zero(dst_.dim(n), src_.dim(n));
}

bool ChainMap::operator==(const ChainMap& other) const {
  if (!(src_ == other.src_) || !(dst_ == other.dst_)) return false;
  const int lo = min_lo(src_, dst_), hi = max_hi(src_, dst_);
  for (int n = lo; n <= hi; ++n)
    if (f(n) != other.f(n)) return false;
  return true;
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  if (!(f.dst() == g.src())) throw std::invalid_argument("compose: endpoint mismatch");
  std::map<int, Matrix> comps;
  const int lo = f.src().lo(), hi = f.src().hi();
  for (int n = lo; n <= hi; ++n)
    if (f.src().dim(n) > 0 && g.dst().dim(n) > 0) comps[n] = g.f(n) * f.f(n);
  return ChainMap(f.src(), g.dst(), std::move(comps));
}

ChainMap add(const ChainMap& f, const ChainMap& g) {
  if (!(f.src() == g.src()) || !(f.dst() == g.dst()))
    throw std::invalid_argument("add: endpoint mismatch");
  std::map<int, Matrix> comps;
  for (int n = min_lo(f.src(), f.dst()); n <= max_hi(f.src(), f.dst()); ++n)
    if (f.src().dim(n) > 0 && f.dst().dim(n) > 0) comps[n] = f.f(n) + g.f(n);
  return ChainMap(f.src(), f.dst(), std::move(comps));
}

ChainMap negate(const ChainMap& f) {
  std::map<int, Matrix> comps;
  for (int n = min_lo(f.src(), f.dst()); n <= max_hi(f.src(), f.dst()); ++n)
    if (f.src().dim(n) > 0 && f.dst().dim(n) > 0) comps[n] = -f.f(n);
  return ChainMap(f.src(), f.dst(), std::move(comps));
}

ChainHomotopy::ChainHomotopy(ChainMap from, ChainMap to, std::map<int, Matrix> components)
    : from_(std::move(from)), to_(std::move(to)), components_(std::move(components)) {
  if (!(from_.src() == to_.src()) || !(from_.dst() == to_.dst()))
    throw std::invalid_argument("homotopy between non-parallel maps");
  const ChainComplex& a = from_.src();
  const ChainComplex& b = from_.dst();
  for (auto it = components_.begin(); it != components_.end();) {
    const int n = it->first;
    if (it->second.rows() != b.dim(n + 1) || it->second.cols() != a.dim(n))
      throw std::invalid_argument("homotopy component shape mismatch at degree " +
                                  std::to_string(n));
    if (b.dim(n + 1) == 0 || a.dim(n) == 0)
      it = components_.erase(it);
    else
      ++it;
  }
  for (int n = min_lo(a, b) - 1; n <= max_hi(a, b) + 1; ++n)
    if (from_.f(n) - to_.f(n) != b.d(n + 1) * h(n) + h(n - 1) * a.d(n))
      throw std::invalid_argument("not a chain homotopy at degree " + std::to_string(n));
}

Matrix ChainHomotopy::h(int n) const {
  const auto it = components_.find(n);
  if (it != components_.end()) return it->second;
  return Matrix::zero(from_.dst().dim(n + 1), from_.src().dim(n));
}

BettiProfile homology(const ChainComplex& c) {
  if (c.is_zero()) return BettiProfile();
  std::vector<std::size_t> betti;
  for (int n = c.lo(); n <= c.hi(); ++n) {
    const std::size_t cycles = c.dim(n) - ratlin::rank(c.d(n));
    betti.push_back(cycles - ratlin::rank(c.d(n + 1)));
  }
  return BettiProfile(c.lo(), std::move(betti));
}

bool is_monic(const ChainMap& f) {
  for (int n = f.src().lo(); n <= f.src().hi(); ++n)
    if (ratlin::rank(f.f(n)) != f.src().dim(n)) return false;
  return true;
}

ChainComplex mapping_cone(const ChainMap& f) {
  const ChainComplex& a = f.src();
  const ChainComplex& b = f.dst();
  if (a.is_zero() && b.is_zero()) return ChainComplex();
  const int lo = std::min(a.is_zero() ? b.lo() : a.lo() + 1, b.is_zero() ? a.lo() + 1 : b.lo());
  const int hi = std::max(a.is_zero() ? b.hi() : a.hi() + 1, b.is_zero() ? a.hi() + 1 : b.hi());
  std::vector<std::size_t> dims;
  std::vector<Matrix> diffs;
  for (int n = lo; n <= hi; ++n) dims.push_back(a.dim(n - 1) + b.dim(n));
  for (int n = lo + 1; n <= hi; ++n) {
    const Matrix top = Matrix::hstack({-a.d(n - 1), Matrix::zero(a.dim(n - 2), b.dim(n))});
    const Matrix bottom = Matrix::hstack({-f.f(n - 1), b.d(n)});
    diffs.push_back(Matrix::vstack({top, bottom}));
  }
  // diffs[i] built above is d_{lo+i+1}.
  return ChainComplex(lo, std::move(dims), std::move(diffs));
}

bool is_quasi_iso(const ChainMap& f) {
  return homology(mapping_cone(f)) == BettiProfile();
}

PushoutResult pushout(const ChainMap& f, const ChainMap& g) {
  if (!(f.src() == g.src())) throw std::invalid_argument("pushout: sources differ");
  if (!is_monic(f)) throw std::invalid_argument("pushout requires a monic first leg");
  const ChainComplex& a = f.src();
  const ChainComplex& b = f.dst();
  const ChainComplex& c = g.dst();
  const int lo = min_lo(b, c), hi = max_hi(b, c);
  if (b.is_zero() && c.is_zero()) {
    PushoutResult out;
    out.object = ChainComplex();
    out.from_b = ChainMap::zero(b, out.object);
    out.from_c = ChainMap::zero(c, out.object);
    return out;
  }
  std::vector<std::size_t> dims;
  std::vector<Matrix> projections, sections;
  for (int n = lo; n <= hi; ++n) {
    const Matrix span = Matrix::vstack({f.f(n), -g.f(n)});
    auto qb = ratlin::quotient_basis(span, b.dim(n) + c.dim(n));
    dims.push_back(qb.projection.rows());
    projections.push_back(std::move(qb.projection));
    sections.push_back(std::move(qb.section));
  }
  std::vector<Matrix> diffs;
  for (int n = lo + 1; n <= hi; ++n) {
    const Matrix d_sum = Matrix::diag({b.d(n), c.d(n)});
    diffs.push_back(projections[n - 1 - lo] * d_sum * sections[n - lo]);
  }
  PushoutResult out;
  out.object = ChainComplex(lo, dims, std::move(diffs));
  std::map<int, Matrix> comps_b, comps_c;
  for (int n = lo; n <= hi; ++n) {
    const std::size_t i = static_cast<std::size_t>(n - lo);
    if (dims[i] == 0) continue;
    if (b.dim(n) > 0) comps_b[n] = projections[i].block(0, dims[i], 0, b.dim(n));
    if (c.dim(n) > 0)
      comps_c[n] = projections[i].block(0, dims[i], b.dim(n), b.dim(n) + c.dim(n));
  }
  out.from_b = ChainMap(b, out.object, std::move(comps_b));
  out.from_c = ChainMap(c, out.object, std::move(comps_c));
  (void)a;
  return out;
}

ChainMap pushout_induced(const PushoutResult& po, const ChainMap& from_b_to_t,
                         const ChainMap& from_c_to_t) {
  if (!(from_b_to_t.dst() == from_c_to_t.dst()))
    throw std::invalid_argument("pushout_induced: leg targets differ");
  const ChainComplex& d = po.object;
  const ChainComplex& t = from_b_to_t.dst();
  // w = [u | v] . section; exact because [u | v] kills the pushout relations.
  std::map<int, Matrix> comps;
  for (int n = d.lo(); n <= d.hi(); ++n) {
    if (d.dim(n) == 0 || t.dim(n) == 0) continue;
    const Matrix uv = Matrix::hstack({from_b_to_t.f(n), from_c_to_t.f(n)});
    const Matrix stacked = Matrix::vstack({po.from_b.f(n), po.from_c.f(n)});
    // Solve w * stackedT = uvT columnwise via transpose.
    auto sol = ratlin::solve(stacked.transpose(), uv.transpose());
    if (!sol) throw std::logic_error("pushout_induced: legs do not agree on the relation");
    comps[n] = sol->transpose();
  }
  return ChainMap(d, t, std::move(comps));
}

Factorization factorize(const ChainMap& map) {
  const ChainComplex& a = map.src();
  const ChainComplex& b = map.dst();
  const int lo = min_lo(a, b);
  const int hi = std::max(a.is_zero() ? (b.is_zero() ? 0 : b.hi()) : a.hi() + 1,
                          b.is_zero() ? (a.is_zero() ? 0 : a.hi() + 1) : b.hi());
  Factorization out;
  if (a.is_zero() && b.is_zero()) {
    out.mid = ChainComplex();
    out.into = ChainMap::zero(a, out.mid);
    out.retract = ChainMap::zero(out.mid, b);
    return out;
  }
  std::vector<std::size_t> dims;
  std::vector<Matrix> diffs;
  for (int n = lo; n <= hi; ++n) dims.push_back(a.dim(n) + a.dim(n - 1) + b.dim(n));
  for (int n = lo + 1; n <= hi; ++n) {
    // d(x, y, z) = (d x + y, -d y, d z - f y)
    const std::size_t an = a.dim(n), an1 = a.dim(n - 1), an2 = a.dim(n - 2);
    const std::size_t bn = b.dim(n), bn1 = b.dim(n - 1);
    Matrix top = Matrix::hstack({a.d(n), Matrix::identity(an1), Matrix::zero(an1, bn)});
    Matrix middle = Matrix::hstack({Matrix::zero(an2, an), -a.d(n - 1), Matrix::zero(an2, bn)});
    Matrix bottom = Matrix::hstack({Matrix::zero(bn1, an), -map.f(n - 1), b.d(n)});
    diffs.push_back(Matrix::vstack({top, middle, bottom}));
  }
  out.mid = ChainComplex(lo, dims, std::move(diffs));
  std::map<int, Matrix> into_comps, retract_comps;
  for (int n = lo; n <= hi; ++n) {
    const std::size_t an = a.dim(n), an1 = a.dim(n - 1), bn = b.dim(n);
    const std::size_t mn = an + an1 + bn;
    if (mn == 0) continue;
    if (an > 0)
      into_comps[n] = Matrix::vstack({Matrix::identity(an), Matrix::zero(an1 + bn, an)});
    if (bn > 0)
      retract_comps[n] = Matrix::hstack({map.f(n), Matrix::zero(bn, an1), Matrix::identity(bn)});
  }
  out.into = ChainMap(a, out.mid, std::move(into_comps));
  out.retract = ChainMap(out.mid, b, std::move(retract_comps));
  return out;
}

CylinderResult cylinder(const ChainComplex& a) {
  auto sum = direct_sum({a, a});
  const ChainMap codiag = from_sum(sum, {ChainMap::identity(a), ChainMap::identity(a)});
  auto fact = factorize(codiag);
  CylinderResult out;
  out.object = fact.mid;
  out.i0 = compose(fact.into, sum.injections[0]);
  out.i1 = compose(fact.into, sum.injections[1]);
  out.p = fact.retract;
  return out;
}

BrownFactorization brown_factorize(const ChainMap& map) {
  auto sum = direct_sum({map.src(), map.dst()});
  const ChainMap f_plus_id = from_sum(sum, {map, ChainMap::identity(map.dst())});
  auto fact = factorize(f_plus_id);
  BrownFactorization out;
  out.mid = fact.mid;
  out.cof = compose(fact.into, sum.injections[0]);
  out.section = compose(fact.into, sum.injections[1]);
  out.retract = fact.retract;
  return out;
}

std::optional<ChainHomotopy> solve_homotopy(const ChainMap& f, const ChainMap& g) {
  if (!(f.src() == g.src()) || !(f.dst() == g.dst()))
    throw std::invalid_argument("solve_homotopy: maps are not parallel");
  const ChainComplex& a = f.src();
  const ChainComplex& b = f.dst();
  const int lo = min_lo(a, b), hi = max_hi(a, b);
  // Variable blocks h_n : A_n -> B_{n+1}, row-major.
  std::map<int, std::size_t> offset;
  std::size_t n_vars = 0;
  for (int n = lo - 1; n <= hi; ++n) {
    if (a.dim(n) > 0 && b.dim(n + 1) > 0) {
      offset[n] = n_vars;
      n_vars += a.dim(n) * b.dim(n + 1);
    }
  }
  std::size_t n_eqs = 0;
  for (int n = lo; n <= hi; ++n) n_eqs += a.dim(n) * b.dim(n);
  Matrix system(n_eqs, n_vars);
  Matrix rhs(n_eqs, 1);
  std::size_t eq = 0;
  for (int n = lo; n <= hi; ++n) {
    const Matrix diff_fg = f.f(n) - g.f(n);
    const Matrix db = b.d(n + 1);
    const Matrix da = a.d(n);
    const std::size_t an = a.dim(n), bn = b.dim(n);
    for (std::size_t i = 0; i < bn; ++i)
      for (std::size_t j = 0; j < an; ++j) {
        const std::size_t row = eq + i * an + j;
        rhs(row, 0) = diff_fg(i, j);
        if (auto it = offset.find(n); it != offset.end())
          for (std::size_t k = 0; k < b.dim(n + 1); ++k)
            if (db(i, k) != 0) system(row, it->second + k * an + j) += db(i, k);
        if (auto it = offset.find(n - 1); it != offset.end())
          for (std::size_t k = 0; k < a.dim(n - 1); ++k)
            if (da(k, j) != 0) system(row, it->second + i * a.dim(n - 1) + k) += da(k, j);
      }
    eq += an * bn;
  }
  auto sol = ratlin::solve(system, rhs);
  if (!sol) return std::nullopt;
  std::map<int, Matrix> comps;
  for (const auto& [n, off] : offset) {
    Matrix h_n(b.dim(n + 1), a.dim(n));
    for (std::size_t k = 0; k < b.dim(n + 1); ++k)
      for (std::size_t j = 0; j < a.dim(n); ++j) h_n(k, j) = (*sol)(off + k * a.dim(n) + j, 0);
    comps[n] = std::move(h_n);
  }
  return ChainHomotopy(f, g, std::move(comps));
}

ChainComplex shift(const ChainComplex& c, int k) {
  if (c.is_zero()) return c;
  std::vector<std::size_t> dims;
  std::vector<Matrix> diffs;
  for (int n = c.lo(); n <= c.hi(); ++n) dims.push_back(c.dim(n));
  const Rational sign = (k % 2 == 0) ? 1 : -1;
  for (int n = c.lo() + 1; n <= c.hi(); ++n) diffs.push_back(c.d(n) * sign);
  return ChainComplex(c.lo() + k, std::move(dims), std::move(diffs));
}

DirectSumResult direct_sum(const std::vector<ChainComplex>& parts) {
  DirectSumResult out;
  int lo = 0, hi = -1;
  bool any = false;
  for (const auto& p : parts) {
    if (p.is_zero()) continue;
    if (!any) {
      lo = p.lo();
      hi = p.hi();
      any = true;
    } else {
      lo = std::min(lo, p.lo());
      hi = std::max(hi, p.hi());
    }
  }
  if (!any) {
    out.object = ChainComplex();
    for (const auto& p : parts) {
      out.injections.push_back(ChainMap::zero(p, out.object));
      out.projections.push_back(ChainMap::zero(out.object, p));
    }
    return out;
  }
  std::vector<std::size_t> dims;
  std::vector<Matrix> diffs;
  for (int n = lo; n <= hi; ++n) {
    std::size_t total = 0;
    for (const auto& p : parts) total += p.dim(n);
    dims.push_back(total);
  }
  for (int n = lo + 1; n <= hi; ++n) {
    std::vector<Matrix> blocks;
    for (const auto& p : parts) blocks.push_back(p.d(n));
    diffs.push_back(Matrix::diag(blocks));
  }
  out.object = ChainComplex(lo, std::move(dims), std::move(diffs));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    std::map<int, Matrix> inj, proj;
    for (int n = lo; n <= hi; ++n) {
      std::size_t before = 0, total = 0;
      for (std::size_t k = 0; k < parts.size(); ++k) {
        if (k < i) before += parts[k].dim(n);
        total += parts[k].dim(n);
      }
      const std::size_t pn = parts[i].dim(n);
      if (pn == 0 || total == 0) continue;
      Matrix in_block(total, pn);
      for (std::size_t r = 0; r < pn; ++r) in_block(before + r, r) = 1;
      inj[n] = in_block;
      proj[n] = in_block.transpose();
    }
    out.injections.emplace_back(parts[i], out.object, std::move(inj));
    out.projections.emplace_back(out.object, parts[i], std::move(proj));
  }
  return out;
}

ChainMap from_sum(const DirectSumResult& sum, const std::vector<ChainMap>& legs) {
  if (legs.size() != sum.injections.size())
    throw std::invalid_argument("from_sum: one leg per summand required");
  if (legs.empty()) throw std::invalid_argument("from_sum: no legs");
  const ChainComplex& target = legs.front().dst();
  const ChainComplex& source = sum.object;
  std::map<int, Matrix> comps;
  for (int n = source.lo(); n <= source.hi(); ++n) {
    if (source.dim(n) == 0 || target.dim(n) == 0) continue;
    std::vector<Matrix> blocks;
    for (const auto& leg : legs) blocks.push_back(leg.f(n));
    comps[n] = Matrix::hstack(blocks);
  }
  return ChainMap(source, target, std::move(comps));
}

}  // namespace chq
