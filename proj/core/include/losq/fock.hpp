#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <variant>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "losq/gaussian.hpp"
#include "losq/operator_expr.hpp"

namespace losq {

// Brute-force truncated Fock-space engine. Everything here is built from the
// ladder operators and generator exponentials, never from covariance
// formulas, so it can serve as an independent check of the Gaussian closed
// forms.

using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using CSparse = Eigen::SparseMatrix<cplx>;

/// Largest norm (or trace) loss tolerated by fock_state.
inline constexpr double kTruncationBudget = 1e-8;
inline constexpr int kMaxPureCutoff = 512;
/// Single-mode density matrices of product states.
inline constexpr int kMaxProductMixedCutoff = 256;
/// Dense two-mode density operators (cutoff² × cutoff²).
inline constexpr int kMaxDenseMixedCutoff = 64;

struct LadderMatrices {
  int cutoff = 0;
  CMatrix single;  ///< <n−1|a|n> = √n
  CSparse a_mat;   ///< single ⊗ 1, two-mode index na·cutoff + nb
  CSparse b_mat;   ///< 1 ⊗ single
};

LadderMatrices build_ladder(int cutoff);

/// Truncated two-mode matrix of `e`, letters multiplied in operator order.
CSparse matrix_of(const OperatorExpr& e, const LadderMatrices& ladder);

/// One truncated mode, pure or mixed.
struct ModeState {
  int cutoff = 0;
  CMatrix density;
  std::optional<CVector> amplitudes;  ///< present for pure states

  bool is_pure() const noexcept { return amplitudes.has_value(); }
  double trace() const { return density.trace().real(); }

  static ModeState from_amplitudes(CVector amplitudes);
  static ModeState from_density(CMatrix density);
};

/// e^{−|α|²/2} αⁿ/√(n!).
CVector coherent_amplitudes(cplx alpha, int cutoff);
/// (−tanh ζ)^m √((2m)!)/(2^m m!)/√(cosh ζ) on |2m>.
CVector squeezed_vacuum_amplitudes(double zeta, int cutoff);
/// n̄ⁿ/(1+n̄)^{n+1}.
Eigen::VectorXd thermal_weights(double nbar, int cutoff);

/// D(α) e^{iφ a†a} S(r) ρ_th(m) S(r)† e^{−iφ a†a} D(α)†, where (r, m) come
/// from writing diag(e^{−2ζ}/2 + n̄, e^{2ζ}/2 + n̄) as a squeezed thermal
/// state. Generators are exponentiated in a padded space and the result is
/// cut to `cutoff` without renormalization.
ModeState single_mode_state(const StateParams& params, int cutoff);

/// Haar-random unit vector on the first `dim` levels, embedded in `cutoff`.
CVector random_pure_vector(int dim, int cutoff, std::mt19937_64& rng);

/// <a†^m a^n> of a truncated single mode.
cplx normal_moment(const ModeState& mode, int creators, int annihilators);

enum class FockKind { pure, mixed };

/// Two-mode truncated state over |na, nb>, na, nb < cutoff.
///
/// Pure states store the cutoff² amplitude tensor. Mixed states store either a
/// dense cutoff² × cutoff² density operator or, for uncorrelated modes, the two
/// single-mode density matrices.
class FockState {
 public:
  struct Pure {
    CVector amplitudes;
  };
  struct DenseMixed {
    CMatrix density;
  };
  struct ProductMixed {
    ModeState a;
    ModeState b;
  };

  static FockState pure(CVector amplitudes, int cutoff);
  static FockState mixed(CMatrix density, int cutoff);
  static FockState product(const ModeState& a, const ModeState& b);

  FockKind kind() const noexcept;
  int cutoff() const noexcept { return cutoff_; }
  /// 1 − norm² (pure) or 1 − trace (mixed).
  double truncation_deficit() const noexcept { return deficit_; }

  const std::variant<Pure, DenseMixed, ProductMixed>& storage() const noexcept { return data_; }

  /// Amplitude <na, nb|ψ>; pure states only.
  cplx amplitude(int na, int nb) const;

  /// <a†^m a^n b†^p b^q>, exact for the truncated state.
  cplx normal_moment(const NormalPowers& powers) const;

 private:
  FockState(std::variant<Pure, DenseMixed, ProductMixed> data, int cutoff, double deficit)
      : data_(std::move(data)), cutoff_(cutoff), deficit_(deficit) {}

  std::variant<Pure, DenseMixed, ProductMixed> data_;
  int cutoff_;
  double deficit_;
};

/// Product of the two single-mode states. Throws TruncationError when the
/// deficit exceeds `budget`.
FockState fock_state(const StateParams& si, const StateParams& lo, int cutoff,
                     double budget = kTruncationBudget);

/// <expr> via reorder(expr) and normally ordered moments.
cplx expect(const OperatorExpr& expr, const FockState& state);

/// <:A: f†f :A:>, nonnegative on every classical state.
double witness_general(const OperatorExpr& f, const FockState& state);

struct ConvergedValue {
  int cutoff = 0;
  cplx value;
};

/// Doubling schedule 2, 4, 8, ... up to `max_cutoff`: the first cutoff whose
/// value differs from the next one by less than `tol`. Cutoffs whose state
/// exceeds the truncation budget are skipped. Throws TruncationError when the
/// schedule runs out.
ConvergedValue converge_expectation(const StateParams& si, const StateParams& lo,
                                    const OperatorExpr& expr, double tol,
                                    int max_cutoff = kMaxPureCutoff);

int converged_cutoff(const StateParams& si, const StateParams& lo, const OperatorExpr& expr,
                     double tol, int max_cutoff = kMaxPureCutoff);

/// Reduced state of a after mixing with a vacuum mode c on a beam splitter of
/// transmissivity η: a -> √η a + √(1−η) c.
ModeState beam_splitter_loss(const CVector& amplitudes, double eta);

/// Reduced state of a after two-mode squeezing with a vacuum mode c at gain g:
/// a -> √g a + √(g−1) c†. `cutoff` sizes the output, the ancilla is padded.
ModeState two_mode_squeezer_gain(const CVector& amplitudes, double g, int cutoff);

}  // namespace losq
