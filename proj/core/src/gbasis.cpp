#include "invar/gbasis.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "invar/errors.hpp"
#include "invar/linalg.hpp"

namespace invar {

namespace {

// Terms sorted descending under the working order.
using Terms = std::vector<Term>;

Terms to_terms(const Polynomial& f, const MonomialOrder& ord) {
  Terms t(f.terms().begin(), f.terms().end());
  if (ord.kind != OrderKind::degrevlex) {
    std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
  }
  return t;
}

// a[from..] - c * m * b, where m * lead(b) cancels a[from - 1] (already dropped).
Terms sub_mul(const Field& k, const MonomialOrder& ord, const Terms& a, std::size_t from, Coeff c,
              const Monomial& m, const Terms& b, std::size_t b_from) {
  Terms out;
  out.reserve(a.size() - from + b.size());
  std::size_t i = from;
  std::size_t j = b_from;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    const Monomial mb = b[j].mono * m;
    if (i == a.size()) {
      out.push_back({mb, k.neg(k.mul(c, b[j].coeff))});
      ++j;
      continue;
    }
    const auto cmp = ord.compare(a[i].mono, mb);
    if (cmp == std::strong_ordering::greater) {
      out.push_back(a[i++]);
    } else if (cmp == std::strong_ordering::less) {
      out.push_back({mb, k.neg(k.mul(c, b[j].coeff))});
      ++j;
    } else {
      const Coeff v = k.sub(a[i].coeff, k.mul(c, b[j].coeff));
      if (v != 0) out.push_back({mb, v});
      ++i;
      ++j;
    }
  }
  return out;
}

struct Reducers {
  const std::vector<Terms>* polys;
  std::vector<std::size_t> active;

  const Terms* find(const Monomial& m) const {
    for (const auto idx : active) {
      const Terms& g = (*polys)[idx];
      if (g.front().mono.divides(m)) return &g;
    }
    return nullptr;
  }
};

// Full reduction of f (descending terms) by monic reducers.
Terms reduce(const Field& k, const MonomialOrder& ord, Terms f, const Reducers& red) {
  Terms rem;
  std::size_t start = 0;
  while (start < f.size()) {
    const Term lt = f[start];
    if (const Terms* g = red.find(lt.mono)) {
      const Monomial m = g->front().mono.quotient_of(lt.mono);
      f = sub_mul(k, ord, f, start + 1, lt.coeff, m, *g, 1);
      start = 0;
    } else {
      rem.push_back(lt);
      ++start;
    }
  }
  return rem;
}

Terms make_monic(const Field& k, Terms t) {
  const Coeff inv = k.inv(t.front().coeff);
  for (auto& x : t) x.coeff = k.mul(x.coeff, inv);
  return t;
}

Terms spoly(const Field& k, const MonomialOrder& ord, const Terms& f, const Terms& g) {
  const Monomial l = lcm(f.front().mono, g.front().mono);
  const Monomial mf = f.front().mono.quotient_of(l);
  const Monomial mg = g.front().mono.quotient_of(l);
  Terms ff;
  ff.reserve(f.size());
  for (std::size_t i = 1; i < f.size(); ++i) ff.push_back({f[i].mono * mf, f[i].coeff});
  return sub_mul(k, ord, ff, 0, 1, mg, g, 1);
}

Polynomial from_terms(const RingPtr& ring, Terms t) { return Polynomial(ring, std::move(t)); }

}  // namespace

GroebnerBasis groebner(std::span<const Polynomial> gens, MonomialOrder order) {
  if (gens.empty()) throw Error(ErrorCode::ZeroGenerator, "empty generator list needs an explicit ring");
  return groebner(gens.front().ring(), gens, order);
}

GroebnerBasis groebner(const RingPtr& ring, std::span<const Polynomial> gens, MonomialOrder order) {
  const Field& k = ring->k();
  GroebnerBasis gb;
  gb.ring_ = ring;
  gb.order_ = order;
  gb.source_.assign(gens.begin(), gens.end());

  std::vector<Terms> basis;
  std::vector<bool> alive;
  for (const auto& g : gens) {
    if (!(*g.ring() == *ring)) throw Error(ErrorCode::RingMismatch, "generator from another ring");
    if (g.is_zero()) throw Error(ErrorCode::ZeroGenerator, "zero polynomial in generator list");
    basis.push_back(make_monic(k, to_terms(g, order)));
    alive.push_back(true);
  }

  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pairs.insert({i, j});
  }

  auto lead = [&](std::size_t i) -> const Monomial& { return basis[i].front().mono; };

  while (!pairs.empty()) {
    // Normal strategy.
    auto best = pairs.begin();
    Monomial best_lcm = lcm(lead(best->first), lead(best->second));
    for (auto it = std::next(pairs.begin()); it != pairs.end(); ++it) {
      const Monomial l = lcm(lead(it->first), lead(it->second));
      if (l.degree() < best_lcm.degree() ||
          (l.degree() == best_lcm.degree() && order.compare(l, best_lcm) == std::strong_ordering::less)) {
        best = it;
        best_lcm = l;
      }
    }
    const auto [i, j] = *best;
    pairs.erase(best);

    if (lead(i).coprime(lead(j))) continue;
    bool chain = false;
    for (std::size_t m = 0; m < basis.size() && !chain; ++m) {
      if (m == i || m == j) continue;
      if (!lead(m).divides(best_lcm)) continue;
      const auto pim = std::minmax(i, m);
      const auto pjm = std::minmax(j, m);
      if (!pairs.count({pim.first, pim.second}) && !pairs.count({pjm.first, pjm.second})) chain = true;
    }
    if (chain) continue;

    Reducers red{&basis, {}};
    for (std::size_t m = 0; m < basis.size(); ++m) red.active.push_back(m);
    Terms h = reduce(k, order, spoly(k, order, basis[i], basis[j]), red);
    if (h.empty()) continue;
    basis.push_back(make_monic(k, std::move(h)));
    alive.push_back(true);
    const std::size_t nw = basis.size() - 1;
    for (std::size_t m = 0; m < nw; ++m) pairs.insert({m, nw});
  }

  // Minimalise: drop elements whose leading monomial is divisible by another's.
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size() && alive[i]; ++j) {
      if (i == j || !alive[j]) continue;
      if (lead(j).divides(lead(i)) && (!(lead(j) == lead(i)) || j < i)) alive[i] = false;
    }
  }
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (alive[i]) keep.push_back(i);
  }
  // Inter-reduce tails.
  std::vector<Terms> reduced;
  for (const auto i : keep) {
    Reducers red{&basis, {}};
    for (const auto j : keep) {
      if (j != i) red.active.push_back(j);
    }
    Terms tail(basis[i].begin() + 1, basis[i].end());
    Terms r = reduce(k, order, std::move(tail), red);
    r.insert(r.begin(), basis[i].front());
    reduced.push_back(std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const Terms& a, const Terms& b) { return order.greater(b.front().mono, a.front().mono); });
  for (auto& t : reduced) {
    gb.leads_.push_back(t.front().mono);
    gb.gens_.push_back(from_terms(ring, std::move(t)));
  }
  return gb;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
  if (!(*f.ring() == *gb.ring())) throw Error(ErrorCode::RingMismatch, "normal form across rings");
  if (f.is_zero() || gb.generators().empty()) return f;
  std::vector<Terms> polys;
  polys.reserve(gb.generators().size());
  for (const auto& g : gb.generators()) polys.push_back(to_terms(g, gb.order()));
  Reducers red{&polys, {}};
  for (std::size_t i = 0; i < polys.size(); ++i) red.active.push_back(i);
  return from_terms(gb.ring(), reduce(gb.ring()->k(), gb.order(), to_terms(f, gb.order()), red));
}

Colength colength(const GroebnerBasis& gb) {
  Colength out;
  const std::size_t n = gb.ring()->nvars();
  const auto& leads = gb.leading_monomials();
  if (gb.is_unit()) {
    out.count = 0;
    return out;
  }
  // Zero-dimensional iff every variable has a pure power among the leads.
  for (std::size_t v = 0; v < n; ++v) {
    const bool pure = std::any_of(leads.begin(), leads.end(), [&](const Monomial& m) {
      return m[v] > 0 && m.degree() == m[v];
    });
    if (!pure) return out;
  }
  auto standard = [&](const Monomial& m) {
    return std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
  };
  // Enumerate the order ideal of standard monomials, extending by variables
  // with index >= the last one used so each monomial is visited once.
  std::uint64_t count = 0;
  unsigned socle = 0;
  std::vector<std::pair<Monomial, std::size_t>> stack{{Monomial{}, 0}};
  while (!stack.empty()) {
    auto [m, first] = stack.back();
    stack.pop_back();
    ++count;
    socle = std::max(socle, m.degree());
    for (std::size_t v = first; v < n; ++v) {
      Monomial next = m * Monomial::variable(v);
      if (standard(next)) stack.push_back({next, v});
    }
  }
  out.count = count;
  out.socle_degree = socle;
  return out;
}

std::size_t krull_dimension(const GroebnerBasis& gb) {
  const std::size_t n = gb.ring()->nvars();
  if (gb.is_unit()) return 0;
  const auto& leads = gb.leading_monomials();
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size <= best) continue;
    const bool independent = std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) {
      for (std::size_t v = 0; v < n; ++v) {
        if (l[v] != 0 && !(mask & (1U << v))) return false;
      }
      return true;
    });
    if (independent) best = size;
  }
  return best;
}

bool ideal_equal(std::span<const Polynomial> lhs, std::span<const Polynomial> rhs) {
  std::vector<Polynomial> a;
  std::vector<Polynomial> b;
  RingPtr ring;
  for (const auto& f : lhs) {
    ring = f.ring();
    if (!f.is_zero()) a.push_back(f);
  }
  for (const auto& f : rhs) {
    if (ring && !(*ring == *f.ring())) throw Error(ErrorCode::RingMismatch, "ideal_equal across rings");
    ring = f.ring();
    if (!f.is_zero()) b.push_back(f);
  }
  if (a.empty() || b.empty()) return a.empty() && b.empty();
  const GroebnerBasis ga = groebner(ring, a);
  const GroebnerBasis gb = groebner(ring, b);
  return std::all_of(b.begin(), b.end(), [&](const Polynomial& f) { return ideal_member(f, ga); }) &&
         std::all_of(a.begin(), a.end(), [&](const Polynomial& f) { return ideal_member(f, gb); });
}

std::vector<Polynomial> minimal_generators(std::span<const Polynomial> gens) {
  std::vector<const Polynomial*> sorted;
  for (const auto& g : gens) {
    if (!g.is_homogeneous()) throw Error(ErrorCode::NonHomogeneousInput, g.to_string());
    if (!g.is_zero()) sorted.push_back(&g);
  }
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Polynomial* a, const Polynomial* b) { return a->degree() < b->degree(); });
  std::vector<Polynomial> kept;
  std::size_t i = 0;
  while (i < sorted.size()) {
    const unsigned d = sorted[i]->degree();
    std::optional<GroebnerBasis> lower;
    if (!kept.empty()) lower = groebner(kept.front().ring(), kept);
    const Field& k = sorted[i]->ring()->k();
    linalg::Echelon ech(k);
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> index;
    for (; i < sorted.size() && sorted[i]->degree() == d; ++i) {
      const Polynomial nf = lower ? normal_form(*sorted[i], *lower) : *sorted[i];
      linalg::SparseVec v;
      for (const auto& t : nf.terms()) {
        auto [it, fresh] = index.emplace(t.mono, static_cast<std::uint32_t>(index.size()));
        v.entries.emplace_back(it->second, t.coeff);
      }
      std::sort(v.entries.begin(), v.entries.end());
      if (ech.insert(std::move(v))) kept.push_back(*sorted[i]);
    }
  }
  return kept;
}

bool is_complete_intersection(std::span<const Polynomial> gens) {
  const std::vector<Polynomial> mins = minimal_generators(gens);
  if (mins.empty()) return true;
  const GroebnerBasis gb = groebner(mins.front().ring(), mins);
  const std::size_t height = mins.front().ring()->nvars() - krull_dimension(gb);
  return mins.size() == height;
}

}  // namespace invar
