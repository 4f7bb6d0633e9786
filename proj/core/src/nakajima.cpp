#include "invar/nakajima.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "invar/errors.hpp"

namespace invar {

namespace {

void require_triangular(const GroupTable& group) {
  for (const auto& g : group.elements) {
    if (!g.is_lower_unitriangular()) {
      throw Error(ErrorCode::NotTriangular, "group element is not lower unitriangular");
    }
  }
}

}  // namespace

unsigned beta(const GroupElement& g) {
  if (!g.is_lower_unitriangular()) throw Error(ErrorCode::NotTriangular, "beta needs a triangular element");
  unsigned b = 0;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (g.at(i, j) != 0) b = std::max(b, static_cast<unsigned>(j + 1));
    }
  }
  return b;
}

std::vector<unsigned> moved_indices(const GroupElement& g) {
  std::vector<unsigned> out;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = 0; j < g.dim(); ++j) {
      if (g.at(i, j) != (i == j ? 1 : 0)) {
        out.push_back(static_cast<unsigned>(i + 1));
        break;
      }
    }
  }
  return out;
}

StructureCheck verify_structure(const GroupTable& group, const std::vector<unsigned>& sequence,
                                linalg::Dense basis_change) {
  require_triangular(group);
  const std::size_t n = group.dim();
  if (sequence.empty() || sequence.size() > n) throw Error(ErrorCode::BadSequence, "sequence length must be 1..n");
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    if (sequence[i] < 1 || sequence[i] > n) throw Error(ErrorCode::BadSequence, "entries must lie in [1, n]");
    if (i > 0 && sequence[i] <= sequence[i - 1]) throw Error(ErrorCode::BadSequence, "sequence must increase");
  }

  StructureCheck out;
  NakajimaStructure s;
  s.basis_change = std::move(basis_change);
  s.sequence = sequence;
  std::vector<GroupElement> accumulated;
  for (std::size_t k = 1; k < sequence.size(); ++k) {
    const unsigned lo = sequence[k - 1];
    const unsigned hi = sequence[k];
    std::vector<GroupElement> block;
    for (const auto& g : group.elements) {
      if (g.is_identity()) continue;
      const auto moved = moved_indices(g);
      const bool in_range = std::all_of(moved.begin(), moved.end(), [&](unsigned i) { return lo < i && i <= hi; });
      if (in_range && beta(g) <= lo) block.push_back(g);
    }
    accumulated.insert(accumulated.end(), block.begin(), block.end());
    s.chain.push_back(accumulated.empty() ? trivial_group(group.field(), n)
                                          : group_closure(small_generating_set(accumulated)));
    s.blocks.push_back(std::move(block));
  }
  const std::size_t generated = s.chain.empty() ? 1 : s.chain.back().order();
  if (generated != group.order()) {
    std::ostringstream os;
    os << "blocks generate a subgroup of order " << generated << ", group has order " << group.order();
    out.refutation = os.str();
    return out;
  }
  out.structure = std::move(s);
  return out;
}

std::optional<NakajimaStructure> find_sequence(const GroupTable& group, linalg::Dense basis_change) {
  require_triangular(group);
  const unsigned n = static_cast<unsigned>(group.dim());
  std::vector<unsigned> seq;
  std::optional<NakajimaStructure> found;
  // Strictly increasing sequences of a given length in lexicographic order.
  std::function<bool(unsigned, std::size_t)> rec = [&](unsigned next, std::size_t len) -> bool {
    if (seq.size() == len) {
      auto check = verify_structure(group, seq, basis_change);
      if (check.ok()) {
        found = std::move(check.structure);
        return true;
      }
      return false;
    }
    for (unsigned v = next; v <= n; ++v) {
      seq.push_back(v);
      if (rec(v + 1, len)) return true;
      seq.pop_back();
    }
    return false;
  };
  for (std::size_t len = 1; len <= n; ++len) {
    seq.clear();
    if (rec(1, len)) break;
  }
  return found;
}

bool is_nakajima_classic(const GroupTable& group) {
  require_triangular(group);
  std::size_t product = 1;
  for (std::size_t i = 0; i < group.dim(); ++i) {
    std::size_t count = 0;
    for (const auto& g : group.elements) {
      const auto moved = moved_indices(g);
      if (moved.empty() || (moved.size() == 1 && moved.front() == i + 1)) ++count;
    }
    product *= count;
  }
  return product == group.order();
}

}  // namespace invar
