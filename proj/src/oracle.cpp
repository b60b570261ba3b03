#include "hocolim/oracle.hpp"

#include <map>
#include <stdexcept>

namespace oracle {

using chq::ChainComplex;
using chq::Matrix;

BarComplex bar_complex(const reedy::Diagram& x) {
  if (!fincat::is_direct(x.shape))
    throw std::invalid_argument("bar_complex requires a direct shape");
  const fincat::FinCategory& c = x.shape;
  BarComplex out;
  out.chains.emplace_back();
  for (std::size_t o = 0; o < c.object_count(); ++o) out.chains[0].push_back({});
  // In a direct category composable nonidentity strings strictly raise the
  // degree, so the enumeration terminates.
  while (true) {
    std::vector<std::vector<std::size_t>> next;
    if (out.chains.size() == 1) {
      for (std::size_t m = 0; m < c.morphism_count(); ++m)
        if (!c.is_identity(m)) next.push_back({m});
    } else {
      for (const auto& str : out.chains.back())
        for (std::size_t m : c.morphisms_from(c.dst(str.back()))) {
          if (c.is_identity(m)) continue;
          auto extended = str;
          extended.push_back(m);
          next.push_back(std::move(extended));
        }
    }
    if (next.empty()) break;
    out.chains.push_back(std::move(next));
  }
  const std::size_t max_p = out.chains.size() - 1;
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> lookup(max_p + 1);
  for (std::size_t p = 0; p <= max_p; ++p)
    for (std::size_t k = 0; k < out.chains[p].size(); ++k) lookup[p][out.chains[p][k]] = k;
  auto first_object = [&](std::size_t p, std::size_t k) {
    return p == 0 ? k : c.src(out.chains[p][k][0]);
  };
  // Internal degree bounds.
  int q_lo = 0, q_hi = -1;
  bool any = false;
  for (const auto& complex : x.at_object) {
    if (complex.is_zero()) continue;
    if (!any) {
      q_lo = complex.lo();
      q_hi = complex.hi();
      any = true;
    } else {
      q_lo = std::min(q_lo, complex.lo());
      q_hi = std::max(q_hi, complex.hi());
    }
  }
  if (!any) {
    out.total = ChainComplex::zero();
    return out;
  }
  const int lo = q_lo, hi = q_hi + static_cast<int>(max_p);
  // Block offsets per total degree: for p ascending, then chains in order.
  auto block_offsets = [&](int n) {
    std::vector<std::vector<std::size_t>> offsets(max_p + 1);
    std::size_t acc = 0;
    for (std::size_t p = 0; p <= max_p; ++p)
      for (std::size_t k = 0; k < out.chains[p].size(); ++k) {
        offsets[p].push_back(acc);
        acc += x.at(first_object(p, k)).dim(n - static_cast<int>(p));
      }
    return std::make_pair(offsets, acc);
  };
  std::vector<std::size_t> dims;
  for (int n = lo; n <= hi; ++n) dims.push_back(block_offsets(n).second);
  std::vector<Matrix> diffs;
  for (int n = lo + 1; n <= hi; ++n) {
    const auto [src_off, src_dim] = block_offsets(n);
    const auto [dst_off, dst_dim] = block_offsets(n - 1);
    Matrix d(dst_dim, src_dim);
    auto add_block = [&](std::size_t row0, std::size_t col0, const Matrix& block,
                         const chq::Rational& sign) {
      for (std::size_t i = 0; i < block.rows(); ++i)
        for (std::size_t j = 0; j < block.cols(); ++j)
          if (block(i, j) != 0) d(row0 + i, col0 + j) += sign * block(i, j);
    };
    for (std::size_t p = 0; p <= max_p; ++p)
      for (std::size_t k = 0; k < out.chains[p].size(); ++k) {
        const int q = n - static_cast<int>(p);
        const std::size_t d0 = first_object(p, k);
        const std::size_t width = x.at(d0).dim(q);
        if (width == 0) continue;
        const std::size_t col0 = src_off[p][k];
        // Internal differential with the (-1)^p Koszul sign.
        add_block(dst_off[p][k], col0, x.at(d0).d(q), (p % 2 == 0) ? 1 : -1);
        if (p == 0) continue;
        const auto& str = out.chains[p][k];
        for (std::size_t i = 0; i <= p; ++i) {
          const chq::Rational sign = (i % 2 == 0) ? 1 : -1;
          if (i == 0) {
            // Push along the first arrow.
            std::vector<std::size_t> face(str.begin() + 1, str.end());
            const std::size_t face_idx =
                (p == 1) ? c.dst(str[0]) : lookup[p - 1].at(face);
            add_block(dst_off[p - 1][face_idx], col0, x.map_at(str[0]).f(q), sign);
          } else if (i == p) {
            std::vector<std::size_t> face(str.begin(), str.end() - 1);
            const std::size_t face_idx = (p == 1) ? c.src(str[0]) : lookup[p - 1].at(face);
            add_block(dst_off[p - 1][face_idx], col0, Matrix::identity(width), sign);
          } else {
            // Inner faces compose adjacent arrows; composites of nonidentity
            // arrows stay nonidentity in a direct category.
            std::vector<std::size_t> face(str.begin(), str.end());
            face[i - 1] = c.compose(str[i], str[i - 1]);
            face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
            add_block(dst_off[p - 1][lookup[p - 1].at(face)], col0, Matrix::identity(width),
                      sign);
          }
        }
      }
    diffs.push_back(std::move(d));
  }
  out.total = ChainComplex(lo, std::move(dims), std::move(diffs));
  return out;
}

chq::BettiProfile bar_hocolim_betti(const reedy::Diagram& x) {
  return chq::homology(bar_complex(x).total);
}

}  // namespace oracle
