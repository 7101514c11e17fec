#pragma once

#include "g2eds/symbol.hpp"

namespace g2eds {

/// One flag vector: a base direction w and the fiber part of the tangent
/// vector (in the coordinates of the system's fiber basis). For a flag inside
/// the graph of L the fiber part is L(w).
struct FlagVector {
  std::vector<mpq_class> w;      // length 7
  std::vector<mpq_class> fiber;  // length fiber_dim
};

/// Characters of one flag: polar ranks c_0..c_6, s_k = c_k - c_{k-1},
/// s_7 = fiber_dim - c_6, plus the Cartan-test bookkeeping.
struct CharacterData {
  enum class Verdict { involutive, not_involutive, inconsistent };

  std::array<int, 7> polar_ranks{};  // c_k
  std::array<int, 8> characters{};   // s_k
  int dimension = 0;    // dim of the integral-element variety
  int codimension = 0;  // rank of the symbol
  int sum_c = 0;        // c_0 + ... + c_6
  int sum_ks = 0;       // sum k * s_k
  // Involutivity defect codim - sum_c. Cartan's bound gives codim >= sum c_k
  // for every integral flag, so the defect is >= 0 and a flag with defect 0
  // certifies involutivity.
  int gap = 0;
  Verdict verdict = Verdict::not_involutive;
  std::vector<FlagVector> flag;

  bool involutive() const { return verdict == Verdict::involutive; }
};

/// Stacked polar equations of the first k flag vectors: one row per
/// (generator, (degree-1)-subset of the prefix), as covectors on W + fiber.
MatQ polar_matrix(const SymbolSystem& sys, const std::vector<FlagVector>& flag, int k);

/// Polar space of the flag prefix: kernel basis of the polar matrix together
/// with the number of independent polar equations c_k.
std::pair<std::vector<std::vector<mpq_class>>, int> polar_space(
    const SymbolSystem& sys, const std::vector<FlagVector>& flag, int k);

/// Characters of the flag spanned by the columns of flag_w inside the graph
/// of the element L (a 7m vector solving the system).
CharacterData cartan_characters(const SymbolSystem& sys, const std::vector<mpq_class>& element,
                                const MatQ& flag_w, Exec exec = Exec::parallel);

/// Regular-flag search: the identity flag, `trials` seeded random flags, and
/// a greedy per-step maximisation of (c_0,...,c_6) in lexicographic order.
/// The verdict is involutive iff some flag attains sum c_k = rank.
CharacterData cartan_test_system(const SymbolSystem& sys, int trials, std::uint64_t seed,
                                 Exec exec = Exec::parallel);

/// The soliton system at the point with the standard search (spec op).
CharacterData cartan_test(const FiberPoint& fp, const mpq_class& lambda, int trials,
                          std::uint64_t seed = 1);

struct HarmonicReport {
  CharacterData data;
  int rank = 0;
  int dimension = 0;
  int generality_count = 0;  // s_6 - 14
};

/// Appends the seven harmonic-coordinate generators and re-runs the test.
HarmonicReport harmonic_extension(const FiberPoint& fp, const mpq_class& lambda,
                                  int trials = 16, std::uint64_t seed = 1);

struct GradientReport {
  bool consistent = false;
  AltForm obstruction{1};       // X⌟τ
  Scalar obstruction_norm2;     // |X⌟τ|^2 in the induced metric
  long dim_if_consistent = -1;  // unknowns - rank when consistent
  bool matches_obstruction = false;  // inconsistent <=> X⌟τ != 0
  int rank = 0;
  int rank_augmented = 0;
};

/// Consistency of the gradient-augmented system against the X⌟τ obstruction.
GradientReport gradient_augmentation_consistency(const FiberPoint& fp, const mpq_class& lambda);

struct ZLocusReport {
  bool on_z = false;
  int dc_rank = 0;       // rank of the derivative of the defining map
  int tangent_dim = 0;   // fiber dimension of the tangent space of Z
  CharacterData data;
  int gap = 0;           // best-flag sum c_k minus the restricted codimension
};

/// Cartan test of the gradient-augmented system pulled back to the locus
/// Z = { z∧b∧s = 0 }. `expected_dc_rank`, when given, is the reference rank
/// of the stratum; a drop below it rejects the point as non-smooth.
ZLocusReport z_locus_cartan_test(const FiberPoint& fp, const mpq_class& lambda, int trials,
                                 std::uint64_t seed = 1,
                                 std::optional<int> expected_dc_rank = std::nullopt);

}  // namespace g2eds
