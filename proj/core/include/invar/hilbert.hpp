#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "invar/gaction.hpp"
#include "invar/gbasis.hpp"
#include "invar/mpoly.hpp"
#include "invar/nakajima.hpp"

namespace invar {

/// Basis of the degree-d invariants, in reduced echelon form over the
/// degrevlex-descending monomial basis (each element monic in its leading term).
struct InvariantBasis {
  unsigned degree = 0;
  std::vector<Polynomial> basis;
};

InvariantBasis invariants_of_degree(const RingPtr& ring, std::span<const GroupElement> gens, unsigned degree);
InvariantBasis invariants_of_degree(const RingPtr& ring, const GroupTable& group, unsigned degree);

enum class Method { bruteforce, constructive };
std::string_view to_string(Method m);

/// One step F_{j,k} -> F_{j,k+1} of the reduction into k[x_1..x_j].
struct ReductionStep {
  Monomial alpha;
  /// Delta^(alpha) applied to the current polynomial; equals its z^alpha coefficient.
  Polynomial delta;
  /// Whether the polynomial the step started from was invariant.
  bool source_invariant = false;
  bool delta_invariant = false;
};

struct ReductionTrace {
  Polynomial input;
  Polynomial result;
  std::vector<ReductionStep> steps;
  /// Delta^(alpha)(input) for every nonzero alpha in the trailing support.
  std::vector<Polynomial> input_derivatives;
  bool input_derivatives_invariant = true;
};

struct GeneratorProvenance {
  /// 1-based position j of f_j.
  std::size_t index = 0;
  /// Block k of the chain used (0: base generator x_j, r+1: trailing index past i_r).
  std::size_t stage = 0;
  std::size_t group_order = 1;
  /// Reduction length m (number of derivation steps).
  std::size_t trace_length = 0;
  /// F_j before reduction; absent for base generators.
  std::optional<Polynomial> lifted;
};

struct HilbertIdealResult {
  Method method = Method::bruteforce;
  std::vector<Polynomial> generators;
  std::vector<unsigned> degrees;

  // constructive
  std::vector<GeneratorProvenance> provenance;
  std::vector<ReductionTrace> traces;

  // bruteforce
  unsigned degree_bound = 0;
  /// True when the generating set is provably complete.
  bool certified = false;
  /// "staircase" (all higher degrees lie in the ideal), "group-order"
  /// (verified structure bounds degrees by |G|) or "none" (stopped at a user bound).
  std::string certificate = "none";
};

struct BruteforceOptions {
  /// Stop after this degree even when completeness is not yet certified.
  std::optional<unsigned> degree_bound;
  /// Generalised Nakajima structure is verified, so degree |G| suffices.
  bool structure_verified = false;
};

/// Ideal generated by all positive-degree invariants, computed degree by
/// degree and trimmed to a minimal homogeneous generating set.
HilbertIdealResult hilbert_ideal_bruteforce(const RingPtr& ring, const GroupTable& group,
                                            const BruteforceOptions& options = {});

/// Least-degree invariant in (x_1..x_j)S outside (x_1..x_{j-1})S. `j` is a
/// 1-based variable index; the generators must fix W^(j-1), i.e. beta <= j-1.
Polynomial find_Fj(const RingPtr& ring, std::span<const GroupElement> gens, std::size_t group_order,
                   std::size_t j, std::span<const Polynomial> prior);

/// Strips the x_{j+1}..x_n dependence of F with Hasse derivations, largest
/// trailing exponent (trailing revlex) first. Every removed coefficient must lie
/// in the prior ideal; throws ReductionEscape otherwise.
ReductionTrace reduce_to_small_ring(const Polynomial& F, std::size_t j, std::span<const GroupElement> gens,
                                    const GroebnerBasis& prior);

struct ConstructiveOptions {
  /// Runs the shape, complete-intersection and block-equality assertions.
  bool verify = true;
};

/// Generators f_1..f_n of the Hilbert ideal built along the chain
/// G_1 <= ... <= G_r of a verified structure. Throws StructureInvalid,
/// ReductionEscape, VerificationFailed.
HilbertIdealResult ci_generators(const RingPtr& ring, const GroupTable& group, const NakajimaStructure& structure,
                                 const ConstructiveOptions& options = {});

/// Checks f_j in k[x_1..x_j], homogeneous, deg <= bound, x_j^deg present.
/// Returns an empty string on success, otherwise the first violation.
std::string check_triangular_shape(std::span<const Polynomial> gens, std::size_t bound);

enum class Polynomiality { polynomial, not_polynomial, undetermined };
std::string_view to_string(Polynomiality v);

struct PolynomialityReport {
  Polynomiality verdict = Polynomiality::undetermined;
  bool complete_intersection = false;
  std::uint64_t degree_product = 0;
  std::size_t group_order = 0;
};

/// CI with product of degrees equal to |G| certifies a polynomial invariant
/// ring; a larger product certifies the opposite.
PolynomialityReport polynomiality_report(const GroupTable& group, const HilbertIdealResult& result);

/// Same polynomial viewed in another ring with at least as many variables
/// in use (terms are copied verbatim).
Polynomial change_ring(const Polynomial& f, const RingPtr& target);

}  // namespace invar
