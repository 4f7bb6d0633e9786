#pragma once

#include <optional>
#include <random>
#include <vector>

#include "invar/gaction.hpp"
#include "invar/mpoly.hpp"
#include "invar/nakajima.hpp"

namespace testing_support {

/// A randomly drawn group that is generalised Nakajima by construction.
struct NakajimaInstance {
  invar::FieldPtr field;
  invar::RingPtr ring;
  std::vector<unsigned> sequence;
  std::vector<invar::GroupElement> gens;
  invar::GroupTable group;
  invar::NakajimaStructure structure;
};

struct InstanceLimits {
  std::size_t max_n = 6;
  std::size_t max_order = 81;
  /// Rough cap on the number of monomials of degree prod(deg)-ish; keeps the
  /// brute-force oracle quick.
  std::size_t max_socle_monomials = 4000;
};

/// Draws p in {2,3}, a sequence i_0 < ... < i_r <= n and for each block one
/// or two elements x_i -> x_i + (combination of x_1..x_{i_{k-1}}) on the
/// block's indices. Retries until the group order is within limits.
NakajimaInstance random_nakajima(std::mt19937_64& rng, const InstanceLimits& limits = {});

/// Random polynomial with up to `terms` terms of total degree <= max_degree.
invar::Polynomial random_polynomial(std::mt19937_64& rng, const invar::RingPtr& ring, std::size_t terms,
                                    unsigned max_degree);

/// Random homogeneous polynomial of the given degree.
invar::Polynomial random_homogeneous(std::mt19937_64& rng, const invar::RingPtr& ring, std::size_t terms,
                                     unsigned degree);

/// Random lower unitriangular matrix (always unipotent, so p-power order).
invar::GroupElement random_unitriangular(std::mt19937_64& rng, const invar::FieldPtr& field, std::size_t n);

}  // namespace testing_support
