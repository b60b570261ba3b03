#include "hocolim/nerve.hpp"

#include <map>
#include <numeric>

namespace nerve {

using chq::Matrix;

NerveComplex nerve_chains(const fincat::FinCategory& c, std::size_t max_dim) {
  NerveComplex out;
  out.max_dim = max_dim;
  out.basis.resize(max_dim + 1);
  for (std::size_t o = 0; o < c.object_count(); ++o) out.basis[0].push_back({});
  for (std::size_t p = 1; p <= max_dim; ++p) {
    if (p == 1) {
      for (std::size_t m = 0; m < c.morphism_count(); ++m)
        if (!c.is_identity(m)) out.basis[1].push_back({m});
    } else {
      for (const auto& str : out.basis[p - 1])
        for (std::size_t m : c.morphisms_from(c.dst(str.back()))) {
          if (c.is_identity(m)) continue;
          auto extended = str;
          extended.push_back(m);
          out.basis[p].push_back(std::move(extended));
        }
    }
  }
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> lookup(max_dim + 1);
  for (std::size_t p = 0; p <= max_dim; ++p)
    for (std::size_t k = 0; k < out.basis[p].size(); ++k) lookup[p][out.basis[p][k]] = k;
  // Objects are looked up by index directly for p = 1 faces.
  std::vector<std::size_t> dims;
  for (std::size_t p = 0; p <= max_dim; ++p) dims.push_back(out.basis[p].size());
  std::vector<Matrix> diffs;
  for (std::size_t p = 1; p <= max_dim; ++p) {
    Matrix d(out.basis[p - 1].size(), out.basis[p].size());
    for (std::size_t k = 0; k < out.basis[p].size(); ++k) {
      const auto& str = out.basis[p][k];
      if (p == 1) {
        // d(f) = dst - src.
        d(c.dst(str[0]), k) += 1;
        d(c.src(str[0]), k) -= 1;
        continue;
      }
      for (std::size_t i = 0; i <= p; ++i) {
        const chq::Rational sign = (i % 2 == 0) ? 1 : -1;
        std::vector<std::size_t> face;
        if (i == 0) {
          face.assign(str.begin() + 1, str.end());
        } else if (i == p) {
          face.assign(str.begin(), str.end() - 1);
        } else {
          face.assign(str.begin(), str.end());
          const std::size_t composite = c.compose(str[i], str[i - 1]);
          if (c.is_identity(composite)) continue;  // degenerate face, zero in normalized chains
          face[i - 1] = composite;
          face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        }
        d(lookup[p - 1].at(face), k) += sign;
      }
    }
    diffs.push_back(std::move(d));
  }
  out.chains = chq::ChainComplex(0, std::move(dims), std::move(diffs));
  return out;
}

std::vector<std::size_t> nerve_betti(const fincat::FinCategory& c, std::size_t max_dim) {
  const NerveComplex nerve = nerve_chains(c, max_dim);
  const chq::BettiProfile profile = chq::homology(nerve.chains);
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < max_dim; ++k) out.push_back(profile.at(static_cast<int>(k)));
  return out;
}

CofinalityReport is_right_cofinal(const fincat::Functor& u) {
  CofinalityReport report;
  report.ok = true;
  for (std::size_t d2 = 0; d2 < u.target().object_count(); ++d2) {
    const fincat::UnderCategory under = under_category(u, d2);
    const std::size_t n = under.cat.object_count();
    const bool nonempty = n > 0;
    // Connectivity of the underlying graph.
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t m = 0; m < under.cat.morphism_count(); ++m)
      parent[find(under.cat.src(m))] = find(under.cat.dst(m));
    std::size_t components = 0;
    for (std::size_t o = 0; o < n; ++o)
      if (find(o) == o) ++components;
    const bool connected = nonempty && components == 1;
    report.nonempty.push_back(nonempty);
    report.connected.push_back(connected);
    if (!(nonempty && connected)) {
      report.ok = false;
      report.failing.push_back(d2);
    }
  }
  return report;
}

bool is_acyclic_cofinal_up_to(const fincat::Functor& u, std::size_t n) {
  for (std::size_t d2 = 0; d2 < u.target().object_count(); ++d2) {
    const fincat::UnderCategory under = under_category(u, d2);
    if (under.cat.object_count() == 0) return false;
    const std::vector<std::size_t> betti = nerve_betti(under.cat, n);
    for (std::size_t k = 0; k < betti.size(); ++k) {
      const std::size_t expected = (k == 0) ? 1 : 0;
      if (betti[k] != expected) return false;
    }
  }
  return true;
}

}  // namespace nerve
