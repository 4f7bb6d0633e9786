#include "invar/hilbert.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <unordered_map>

#include "invar/errors.hpp"
#include "invar/linalg.hpp"

namespace invar {

namespace {

/// Images of monomials under a fixed list of group elements, built from cached
/// powers of the images of the variables. Variables fixed by an element are
/// folded into a single monomial factor.
class ActionCache {
 public:
  ActionCache(const RingPtr& ring, std::span<const GroupElement> gens) : ring_(ring) {
    const std::size_t n = ring->nvars();
    for (const auto& g : gens) {
      if (g.dim() != n) throw Error(ErrorCode::DimensionMismatch, "group element and ring differ in dimension");
      Slot slot;
      for (std::size_t v = 0; v < n; ++v) {
        auto img = g.image_of_variable(ring, v);
        slot.fixed.push_back(img == Polynomial::variable(ring, v));
        slot.powers.push_back({Polynomial::constant(ring, 1), std::move(img)});
      }
      slots_.push_back(std::move(slot));
    }
  }

  std::size_t size() const noexcept { return slots_.size(); }

  Polynomial image(std::size_t gi, const Monomial& m) {
    Slot& s = slots_[gi];
    Monomial fixed_part;
    Polynomial out = Polynomial::constant(ring_, 1);
    for (std::size_t v = 0; v < ring_->nvars(); ++v) {
      const unsigned e = m[v];
      if (e == 0) continue;
      if (s.fixed[v]) {
        fixed_part.set(v, e);
        continue;
      }
      auto& pw = s.powers[v];
      while (pw.size() <= e) pw.push_back(pw.back() * pw[1]);
      out = out * pw[e];
    }
    return out.times(fixed_part);
  }

 private:
  struct Slot {
    std::vector<bool> fixed;
    std::vector<std::vector<Polynomial>> powers;
  };
  RingPtr ring_;
  std::vector<Slot> slots_;
};

/// Kernel of f -> (g f - f)_g restricted to the span of `domain`, in reduced
/// echelon form with respect to the domain order.
std::vector<linalg::SparseVec> invariant_rows(const RingPtr& ring, std::span<const GroupElement> gens,
                                              std::span<const Monomial> domain) {
  ActionCache cache(ring, gens);
  const std::size_t ng = cache.size();
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> column;
  const auto column_of = [&](const Monomial& m) {
    auto [it, inserted] = column.try_emplace(m, static_cast<std::uint32_t>(column.size()));
    return it->second;
  };
  const Field& k = ring->k();
  std::vector<linalg::SparseVec> images;
  images.reserve(domain.size());
  for (const auto& m : domain) {
    linalg::SparseVec img;
    for (std::size_t gi = 0; gi < ng; ++gi) {
      Polynomial diff = cache.image(gi, m) - Polynomial::monomial(ring, m);
      for (const auto& t : diff.terms())
        img.entries.emplace_back(static_cast<std::uint32_t>(column_of(t.mono) * ng + gi), t.coeff);
    }
    std::sort(img.entries.begin(), img.entries.end());
    images.push_back(std::move(img));
  }
  return linalg::kernel(k, images);
}

Polynomial row_to_polynomial(const RingPtr& ring, const linalg::SparseVec& row, std::span<const Monomial> domain) {
  std::vector<Term> terms;
  terms.reserve(row.entries.size());
  for (const auto& [i, c] : row.entries) terms.push_back({domain[i], c});
  return Polynomial(ring, std::move(terms));
}

/// Coordinates of polynomials over a growing monomial index.
class CoordinateMap {
 public:
  linalg::SparseVec operator()(const Polynomial& f) {
    linalg::SparseVec v;
    for (const auto& t : f.terms()) {
      auto [it, inserted] = index_.try_emplace(t.mono, static_cast<std::uint32_t>(index_.size()));
      v.entries.emplace_back(it->second, t.coeff);
    }
    std::sort(v.entries.begin(), v.entries.end());
    return v;
  }

 private:
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> index_;
};

std::uint64_t saturating_product(std::span<const unsigned> degrees) {
  std::uint64_t p = 1;
  for (unsigned d : degrees) {
    if (d != 0 && p > std::numeric_limits<std::uint64_t>::max() / d) return std::numeric_limits<std::uint64_t>::max();
    p *= d;
  }
  return p;
}

std::vector<unsigned> degrees_of(std::span<const Polynomial> gens) {
  std::vector<unsigned> out;
  for (const auto& f : gens) out.push_back(f.degree());
  return out;
}

void require_fixes_prefix(std::span<const GroupElement> gens, std::size_t j) {
  for (const auto& g : gens) {
    if (beta(g) + 1 > j) {
      std::ostringstream os;
      os << "generator with beta " << beta(g) << " does not fix x_1..x_" << (j - 1);
      throw Error(ErrorCode::StructureInvalid, os.str());
    }
  }
}

}  // namespace

InvariantBasis invariants_of_degree(const RingPtr& ring, std::span<const GroupElement> gens, unsigned degree) {
  InvariantBasis out;
  out.degree = degree;
  const auto domain = monomials_of_degree(ring->nvars(), degree);
  for (const auto& row : invariant_rows(ring, gens, domain)) out.basis.push_back(row_to_polynomial(ring, row, domain));
  return out;
}

InvariantBasis invariants_of_degree(const RingPtr& ring, const GroupTable& group, unsigned degree) {
  return invariants_of_degree(ring, group.gens, degree);
}

std::string_view to_string(Method m) {
  return m == Method::bruteforce ? "bruteforce" : "constructive";
}

HilbertIdealResult hilbert_ideal_bruteforce(const RingPtr& ring, const GroupTable& group,
                                            const BruteforceOptions& options) {
  if (group.dim() != ring->nvars()) throw Error(ErrorCode::DimensionMismatch, "group and ring differ in dimension");
  HilbertIdealResult out;
  out.method = Method::bruteforce;
  std::optional<GroebnerBasis> gb;
  std::optional<unsigned> socle;
  for (unsigned d = 1;; ++d) {
    if (socle && d > *socle) {
      out.certified = true;
      out.certificate = "staircase";
      break;
    }
    if (options.degree_bound && d > *options.degree_bound) break;
    if (!options.degree_bound && options.structure_verified && d > group.order()) {
      out.certified = true;
      out.certificate = "group-order";
      break;
    }
    const auto inv = invariants_of_degree(ring, group.gens, d);
    out.degree_bound = d;
    linalg::Echelon ech(ring->k());
    CoordinateMap coords;
    bool added = false;
    for (const auto& f : inv.basis) {
      Polynomial nf = gb ? normal_form(f, *gb) : f;
      if (nf.is_zero()) continue;
      if (ech.insert(coords(nf))) {
        out.generators.push_back(f);
        out.degrees.push_back(d);
        added = true;
      }
    }
    if (added) {
      gb = groebner(ring, out.generators);
      if (krull_dimension(*gb) == 0) socle = colength(*gb).socle_degree;
    }
  }
  return out;
}

Polynomial find_Fj(const RingPtr& ring, std::span<const GroupElement> gens, std::size_t group_order, std::size_t j,
                   std::span<const Polynomial> prior) {
  const std::size_t n = ring->nvars();
  if (j < 1 || j > n) throw Error(ErrorCode::IndexOutOfRange, "variable index out of range");
  require_fixes_prefix(gens, j);
  const std::size_t top = std::max<std::size_t>(group_order, 1);
  for (unsigned d = 1; d <= top; ++d) {
    // Monomials outside (x_1..x_{j-1})S come first so that a kernel row with
    // its pivot there is exactly an invariant outside that ideal.
    std::vector<Monomial> outside, inside;
    for (const auto& m : monomials_of_degree(n, d)) {
      bool lower = false;
      for (std::size_t i = 0; i + 1 < j; ++i) lower = lower || m[i] != 0;
      if (lower) inside.push_back(m);
      else if (m[j - 1] != 0) outside.push_back(m);
    }
    const std::size_t split = outside.size();
    std::vector<Monomial> domain = std::move(outside);
    domain.insert(domain.end(), inside.begin(), inside.end());
    for (const auto& row : invariant_rows(ring, gens, domain)) {
      if (row.lead() >= split) continue;
      Polynomial F = row_to_polynomial(ring, row, domain);
      if (!prior.empty() && ideal_member(F, groebner(ring, prior)))
        throw Error(ErrorCode::VerificationFailed, "candidate lies in the ideal of earlier generators");
      return F;
    }
  }
  std::ostringstream os;
  os << "no invariant of degree <= " << top << " in (x_1..x_" << j << ") outside (x_1..x_" << (j - 1) << ")";
  throw Error(ErrorCode::NoCandidate, os.str());
}

ReductionTrace reduce_to_small_ring(const Polynomial& F, std::size_t j, std::span<const GroupElement> gens,
                                    const GroebnerBasis& prior) {
  const RingPtr& ring = F.ring();
  const std::size_t n = ring->nvars();
  if (j < 1 || j > n) throw Error(ErrorCode::IndexOutOfRange, "variable index out of range");
  if (F.is_zero()) throw Error(ErrorCode::ReductionEscape, "cannot reduce the zero polynomial");
  for (const auto& g : gens) {
    if (beta(g) > j) throw Error(ErrorCode::StructureInvalid, "derivations do not commute with the group");
  }

  ReductionTrace trace{F, F, {}, {}, true};
  std::vector<Monomial> alphas;
  for (const auto& t : F.terms()) {
    Monomial a;
    for (std::size_t i = j; i < n; ++i) a.set(i, t.mono[i]);
    if (std::find(alphas.begin(), alphas.end(), a) == alphas.end()) alphas.push_back(a);
  }
  // Exponents are supported on x_{j+1}..x_n, where lex compares from the
  // largest index down, i.e. the trailing revlex order.
  std::sort(alphas.begin(), alphas.end(),
            [](const Monomial& a, const Monomial& b) { return lex_compare(a, b) == std::strong_ordering::greater; });
  if (!alphas.back().is_one())
    throw Error(ErrorCode::ReductionEscape, "every term of F involves x_" + std::to_string(j + 1) + "..x_n");

  for (const auto& a : alphas) {
    if (a.is_one()) continue;
    auto d = hasse_composite(F, j, a);
    if (!is_invariant(d, gens)) trace.input_derivatives_invariant = false;
    trace.input_derivatives.push_back(std::move(d));
  }

  Polynomial cur = F;
  for (const auto& a : alphas) {
    if (a.is_one()) break;
    const bool src_inv = is_invariant(cur, gens);
    Polynomial delta = hasse_composite(cur, j, a);
    if (!delta.in_prefix_subring(j))
      throw Error(ErrorCode::ReductionEscape, "derivative leaves k[x_1..x_" + std::to_string(j) + "]");
    if (!ideal_member(delta, prior))
      throw Error(ErrorCode::ReductionEscape, "coefficient " + delta.to_string() + " is not in the earlier ideal");
    const bool inv = is_invariant(delta, gens);
    cur -= delta.times(a);
    trace.steps.push_back({a, std::move(delta), src_inv, inv});
  }
  if (!cur.in_prefix_subring(j)) throw Error(ErrorCode::ReductionEscape, "reduction did not reach the subring");
  if (cur.coefficient(Monomial::variable(j - 1, F.degree())) == 0)
    throw Error(ErrorCode::ReductionEscape, "reduced polynomial lost its pure power term");
  trace.result = std::move(cur);
  return trace;
}

std::string check_triangular_shape(std::span<const Polynomial> gens, std::size_t bound) {
  for (std::size_t j = 1; j <= gens.size(); ++j) {
    const auto& f = gens[j - 1];
    const std::string tag = "f_" + std::to_string(j);
    if (f.is_zero()) return tag + " is zero";
    if (!f.is_homogeneous()) return tag + " is not homogeneous";
    if (!f.in_prefix_subring(j)) return tag + " involves variables beyond x_" + std::to_string(j);
    const unsigned d = f.degree();
    if (bound != 0 && d > bound) return tag + " has degree above " + std::to_string(bound);
    if (f.coefficient(Monomial::variable(j - 1, d)) == 0) return tag + " lacks the term x_" + std::to_string(j) + "^" + std::to_string(d);
  }
  return {};
}

Polynomial change_ring(const Polynomial& f, const RingPtr& target) {
  if (*f.ring()->field() != *target->field()) throw Error(ErrorCode::RingMismatch, "rings have different fields");
  std::vector<Term> terms(f.terms().begin(), f.terms().end());
  for (const auto& t : terms) {
    for (std::size_t i = target->nvars(); i < kMaxVars; ++i) {
      if (t.mono[i] != 0) throw Error(ErrorCode::IndexOutOfRange, "polynomial uses variables outside the target ring");
    }
  }
  return Polynomial(target, std::move(terms));
}

HilbertIdealResult ci_generators(const RingPtr& ring, const GroupTable& group, const NakajimaStructure& structure,
                                 const ConstructiveOptions& options) {
  const std::size_t n = ring->nvars();
  if (group.dim() != n) throw Error(ErrorCode::DimensionMismatch, "group and ring differ in dimension");
  const auto& seq = structure.sequence;
  if (seq.empty() || structure.chain.size() != structure.r() || structure.blocks.size() != structure.r())
    throw Error(ErrorCode::StructureInvalid, "sequence, blocks and chain disagree in length");
  if (seq.back() > n) throw Error(ErrorCode::StructureInvalid, "sequence exceeds the number of variables");
  for (std::size_t k = 1; k <= structure.r(); ++k) {
    for (const auto& g : structure.blocks[k - 1]) {
      const auto moved = moved_indices(g);
      const bool in_range = std::all_of(moved.begin(), moved.end(), [&](unsigned i) { return seq[k - 1] < i && i <= seq[k]; });
      if (!in_range || beta(g) > seq[k - 1])
        throw Error(ErrorCode::StructureInvalid, "block " + std::to_string(k) + " element violates its index constraints");
    }
  }
  const std::size_t top_order = structure.chain.empty() ? 1 : structure.chain.back().order();
  if (top_order != group.order()) throw Error(ErrorCode::StructureInvalid, "chain does not reach the whole group");

  HilbertIdealResult out;
  out.method = Method::constructive;
  for (unsigned j = 1; j <= seq.front(); ++j) {
    out.generators.push_back(Polynomial::variable(ring, j - 1));
    out.provenance.push_back({j, 0, 1, 0, std::nullopt});
  }

  const auto step = [&](unsigned j, const GroupTable& table, std::size_t stage) {
    require_fixes_prefix(table.gens, j);
    Polynomial F = find_Fj(ring, table.gens, table.order(), j, out.generators);
    auto trace = reduce_to_small_ring(F, j, table.gens, groebner(ring, out.generators));
    out.generators.push_back(trace.result);
    out.provenance.push_back({j, stage, table.order(), trace.steps.size(), std::move(F)});
    out.traces.push_back(std::move(trace));
  };
  for (std::size_t k = 1; k <= structure.r(); ++k) {
    for (unsigned j = seq[k - 1] + 1; j <= seq[k]; ++j) step(j, structure.chain[k - 1], k);
  }
  for (unsigned j = seq.back() + 1; j <= n; ++j) step(j, group, structure.r() + 1);
  out.degrees = degrees_of(out.generators);

  if (options.verify) {
    const auto fail = [](const std::string& what) { throw Error(ErrorCode::VerificationFailed, what); };
    if (auto bad = check_triangular_shape(out.generators, group.order()); !bad.empty()) fail(bad);
    for (const auto& t : out.traces) {
      if (!t.input_derivatives_invariant) fail("a derivative of " + t.input.to_string() + " is not invariant");
    }
    const auto c = colength(groebner(ring, out.generators));
    if (!c.finite() || *c.count != saturating_product(out.degrees))
      fail("colength differs from the product of the degrees");
    for (std::size_t k = 1; k + 1 <= structure.r(); ++k) {
      for (const auto& g : structure.blocks[k]) {
        if (!restrict_to_prefix(g, seq[k]).is_identity())
          fail("block " + std::to_string(k + 1) + " moves x_1..x_" + std::to_string(seq[k]));
      }
    }
    for (std::size_t k = 1; k <= structure.r(); ++k) {
      const unsigned m = seq[k];
      std::vector<std::string> names(ring->names().begin(), ring->names().begin() + m);
      auto sub = Ring::create(ring->field(), m, names);
      std::vector<GroupElement> restricted;
      for (const auto& g : structure.chain[k - 1].gens) restricted.push_back(restrict_to_prefix(g, m));
      const GroupTable sub_group = restricted.empty() ? trivial_group(ring->field(), m) : group_closure(restricted);
      const auto oracle = hilbert_ideal_bruteforce(sub, sub_group);
      std::vector<Polynomial> prefix;
      for (unsigned j = 0; j < m; ++j) prefix.push_back(change_ring(out.generators[j], sub));
      if (!ideal_equal(prefix, oracle.generators))
        fail("f_1..f_" + std::to_string(m) + " differ from the Hilbert ideal of G_" + std::to_string(k));
    }
  }
  return out;
}

std::string_view to_string(Polynomiality v) {
  switch (v) {
    case Polynomiality::polynomial: return "polynomial";
    case Polynomiality::not_polynomial: return "not_polynomial";
    case Polynomiality::undetermined: return "undetermined";
  }
  return "undetermined";
}

PolynomialityReport polynomiality_report(const GroupTable& group, const HilbertIdealResult& result) {
  PolynomialityReport rep;
  rep.group_order = group.order();
  rep.degree_product = saturating_product(result.degrees);
  try {
    rep.complete_intersection = !result.generators.empty() && is_complete_intersection(result.generators);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NonHomogeneousInput) throw;
    rep.complete_intersection = false;
  }
  if (!rep.complete_intersection) rep.verdict = Polynomiality::undetermined;
  else if (rep.degree_product == rep.group_order) rep.verdict = Polynomiality::polynomial;
  else if (rep.degree_product > rep.group_order) rep.verdict = Polynomiality::not_polynomial;
  else rep.verdict = Polynomiality::undetermined;
  return rep;
}

}  // namespace invar
