#pragma once

#include <optional>
#include <string>
#include <vector>

#include "invar/gaction.hpp"

namespace invar {

/// Largest j such that x_j occurs in some g.x_i - x_i (1-based); 0 for the
/// identity. Throws NotTriangular.
unsigned beta(const GroupElement& g);

/// 1-based indices i with g.x_i != x_i.
std::vector<unsigned> moved_indices(const GroupElement& g);

/// Generalised Nakajima data for a group in a triangular basis.
///
/// `sequence` holds (i_0, ..., i_r) as 1-based variable counts. Block k
/// (1-based, k = 1..r) collects every group element that moves only variables
/// in (i_{k-1}, i_k] and has beta <= i_{k-1}; `chain[k-1]` is the group
/// generated by blocks 1..k.
struct NakajimaStructure {
  linalg::Dense basis_change;
  std::vector<unsigned> sequence;
  std::vector<std::vector<GroupElement>> blocks;
  std::vector<GroupTable> chain;

  std::size_t r() const noexcept { return sequence.size() - 1; }
};

/// Outcome of checking one candidate sequence.
struct StructureCheck {
  std::optional<NakajimaStructure> structure;
  /// Why the candidate failed; empty on success.
  std::string refutation;

  bool ok() const noexcept { return structure.has_value(); }
};

/// Builds the blocks from all elements of the table and accepts iff they
/// generate the whole group. Throws NotTriangular and BadSequence.
StructureCheck verify_structure(const GroupTable& group, const std::vector<unsigned>& sequence,
                                linalg::Dense basis_change = {});

/// Exhaustive search: shortest sequences first, lexicographic within a length.
/// An empty result only means "no sequence in this basis".
std::optional<NakajimaStructure> find_sequence(const GroupTable& group, linalg::Dense basis_change = {});

/// Product criterion: with G_i the elements moving only x_i, accept iff
/// prod |G_i| = |G|.
bool is_nakajima_classic(const GroupTable& group);

}  // namespace invar
