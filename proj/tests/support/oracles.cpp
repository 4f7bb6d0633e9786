#include "oracles.hpp"

#include <unordered_map>

#include "invar/linalg.hpp"

namespace oracle {

bool graded_member(const invar::Polynomial& f, std::span<const invar::Polynomial> gens) {
  if (f.is_zero()) return true;
  const unsigned d = f.degree();
  const auto& ring = f.ring();
  const invar::Field& k = ring->k();
  std::unordered_map<invar::Monomial, std::uint32_t, invar::MonomialHash> index;
  const auto vec = [&](const invar::Polynomial& p) {
    invar::linalg::SparseVec v;
    for (const auto& t : p.terms()) {
      auto [it, ins] = index.try_emplace(t.mono, static_cast<std::uint32_t>(index.size()));
      v.entries.emplace_back(it->second, t.coeff);
    }
    std::sort(v.entries.begin(), v.entries.end());
    return v;
  };
  invar::linalg::Echelon span(k);
  for (const auto& g : gens) {
    if (g.is_zero() || g.degree() > d) continue;
    for (const auto& m : invar::monomials_of_degree(ring->nvars(), d - g.degree())) span.insert(vec(g.times(m)));
  }
  return span.reduce(vec(f)).empty();
}

}  // namespace oracle
