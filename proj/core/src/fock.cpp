#include "losq/fock.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "losq/error.hpp"

namespace losq {

namespace {

void check_cutoff(int cutoff, int max_cutoff, const char* what) {
  if (cutoff < 2) {
    throw InvalidArgument(std::string(what) + ": cutoff must be >= 2");
  }
  if (cutoff > max_cutoff) {
    throw InvalidArgument(std::string(what) + ": cutoff " + std::to_string(cutoff) +
                          " exceeds the limit of " + std::to_string(max_cutoff));
  }
}

// √(n!/(n−k)!), the matrix element of a^k between |n> and |n−k>.
double lowering_factor(int n, int k) {
  double f = 1.0;
  for (int j = 0; j < k; ++j) f *= std::sqrt(static_cast<double>(n - j));
  return f;
}

// Padded working dimension for generator exponentials.
int padded_dimension(int cutoff) { return cutoff + cutoff / 2 + 32; }

CSparse single_mode_lowering(int dim) {
  std::vector<Eigen::Triplet<cplx>> entries;
  entries.reserve(dim);
  for (int n = 1; n < dim; ++n) entries.emplace_back(n - 1, n, std::sqrt(static_cast<double>(n)));
  CSparse a(dim, dim);
  a.setFromTriplets(entries.begin(), entries.end());
  return a;
}

double one_norm(const CSparse& g) {
  double best = 0.0;
  for (int k = 0; k < g.outerSize(); ++k) {
    double col = 0.0;
    for (CSparse::InnerIterator it(g, k); it; ++it) col += std::abs(it.value());
    best = std::max(best, col);
  }
  return best;
}

// exp(G)·block by scaled Taylor steps with ‖G/s‖₁ <= 1.
CMatrix apply_exponential(const CSparse& g, CMatrix block) {
  const double norm = one_norm(g);
  if (norm == 0.0) return block;
  const int steps = std::max(1, static_cast<int>(std::ceil(norm)));
  const CSparse h = g / static_cast<double>(steps);
  for (int s = 0; s < steps; ++s) {
    CMatrix term = block;
    CMatrix acc = block;
    for (int k = 1; k <= 100; ++k) {
      term = (h * term) / static_cast<double>(k);
      acc += term;
      if (term.norm() <= 1e-17 * acc.norm()) break;
    }
    block = std::move(acc);
  }
  return block;
}

// r/2 (a² − a†²)
CSparse squeeze_generator(double r, int dim) {
  const CSparse a = single_mode_lowering(dim);
  const CSparse a2 = a * a;
  const CSparse ad2 = CSparse(a2.adjoint());
  return (a2 - ad2) * cplx(r / 2.0);
}

// α a† − α* a
CSparse displacement_generator(cplx alpha, int dim) {
  const CSparse a = single_mode_lowering(dim);
  const CSparse ad = CSparse(a.adjoint());
  return ad * alpha - a * std::conj(alpha);
}

}  // namespace

LadderMatrices build_ladder(int cutoff) {
  check_cutoff(cutoff, kMaxDenseMixedCutoff, "build_ladder");
  LadderMatrices l;
  l.cutoff = cutoff;
  l.single = CMatrix::Zero(cutoff, cutoff);
  for (int n = 1; n < cutoff; ++n) l.single(n - 1, n) = std::sqrt(static_cast<double>(n));

  std::vector<Eigen::Triplet<cplx>> ta;
  std::vector<Eigen::Triplet<cplx>> tb;
  for (int na = 0; na < cutoff; ++na) {
    for (int nb = 0; nb < cutoff; ++nb) {
      if (na > 0) {
        ta.emplace_back((na - 1) * cutoff + nb, na * cutoff + nb, std::sqrt(static_cast<double>(na)));
      }
      if (nb > 0) {
        tb.emplace_back(na * cutoff + nb - 1, na * cutoff + nb, std::sqrt(static_cast<double>(nb)));
      }
    }
  }
  const int dim = cutoff * cutoff;
  l.a_mat.resize(dim, dim);
  l.b_mat.resize(dim, dim);
  l.a_mat.setFromTriplets(ta.begin(), ta.end());
  l.b_mat.setFromTriplets(tb.begin(), tb.end());
  return l;
}

CSparse matrix_of(const OperatorExpr& e, const LadderMatrices& ladder) {
  const int dim = ladder.cutoff * ladder.cutoff;
  const CSparse ad = CSparse(ladder.a_mat.adjoint());
  const CSparse bd = CSparse(ladder.b_mat.adjoint());
  CSparse identity(dim, dim);
  identity.setIdentity();

  CSparse total(dim, dim);
  for (const auto& [word, c] : e.terms()) {
    CSparse m = identity;
    for (Letter l : word) {
      switch (l) {
        case Letter::a: m = m * ladder.a_mat; break;
        case Letter::ad: m = m * ad; break;
        case Letter::b: m = m * ladder.b_mat; break;
        case Letter::bd: m = m * bd; break;
      }
    }
    total += m * c;
  }
  return total;
}

ModeState ModeState::from_amplitudes(CVector amplitudes) {
  ModeState s;
  s.cutoff = static_cast<int>(amplitudes.size());
  s.density = amplitudes * amplitudes.adjoint();
  s.amplitudes = std::move(amplitudes);
  return s;
}

ModeState ModeState::from_density(CMatrix density) {
  if (density.rows() != density.cols()) {
    throw InvalidArgument("density matrix must be square");
  }
  ModeState s;
  s.cutoff = static_cast<int>(density.rows());
  s.density = std::move(density);
  return s;
}

CVector coherent_amplitudes(cplx alpha, int cutoff) {
  check_cutoff(cutoff, kMaxPureCutoff, "coherent_amplitudes");
  CVector v(cutoff);
  v(0) = std::exp(-std::norm(alpha) / 2.0);
  for (int n = 1; n < cutoff; ++n) v(n) = v(n - 1) * alpha / std::sqrt(static_cast<double>(n));
  return v;
}

CVector squeezed_vacuum_amplitudes(double zeta, int cutoff) {
  check_cutoff(cutoff, kMaxPureCutoff, "squeezed_vacuum_amplitudes");
  CVector v = CVector::Zero(cutoff);
  const double t = -std::tanh(zeta);
  // c_m = t^m √((2m)!)/(2^m m!), built from the ratio c_m/c_{m−1} = t √((2m−1)(2m))/(2m).
  double c = 1.0 / std::sqrt(std::cosh(zeta));
  for (int m = 0; 2 * m < cutoff; ++m) {
    if (m > 0) c *= t * std::sqrt((2.0 * m - 1.0) * (2.0 * m)) / (2.0 * m);
    v(2 * m) = c;
  }
  return v;
}

Eigen::VectorXd thermal_weights(double nbar, int cutoff) {
  if (!(nbar >= 0.0)) throw InvalidArgument("thermal photon number must be >= 0");
  Eigen::VectorXd w = Eigen::VectorXd::Zero(cutoff);
  if (nbar == 0.0) {
    w(0) = 1.0;
    return w;
  }
  const double ratio = nbar / (1.0 + nbar);
  w(0) = 1.0 / (1.0 + nbar);
  for (int n = 1; n < cutoff; ++n) w(n) = w(n - 1) * ratio;
  return w;
}

ModeState single_mode_state(const StateParams& p, int cutoff) {
  if (!(p.nbar >= 0.0)) throw InvalidArgument("thermal photon number must be >= 0");
  const bool pure = p.nbar == 0.0;
  check_cutoff(cutoff, pure ? kMaxPureCutoff : kMaxProductMixedCutoff, "single_mode_state");
  const int dim = padded_dimension(cutoff);

  // Squeezed-thermal normal form of diag(e^{−2ζ}/2 + n̄, e^{2ζ}/2 + n̄).
  double r = p.zeta;
  double m = 0.0;
  if (!pure) {
    const double vx = std::exp(-2.0 * p.zeta) / 2.0 + p.nbar;
    const double vp = std::exp(2.0 * p.zeta) / 2.0 + p.nbar;
    m = std::sqrt(vx * vp) - 0.5;
    r = 0.25 * std::log(vp / vx);
  }

  const Eigen::VectorXd weights = thermal_weights(m, dim);
  int levels = 1;
  while (levels < dim && weights(levels) > 1e-20) ++levels;

  CMatrix block = CMatrix::Zero(dim, levels);
  for (int k = 0; k < levels; ++k) block(k, k) = std::sqrt(weights(k));

  if (r != 0.0) block = apply_exponential(squeeze_generator(r, dim), std::move(block));
  if (p.phi != 0.0) {
    for (int n = 0; n < dim; ++n) block.row(n) *= std::polar(1.0, p.phi * n);
  }
  if (p.alpha != cplx(0.0)) {
    block = apply_exponential(displacement_generator(p.alpha, dim), std::move(block));
  }

  const CMatrix kept = block.topRows(cutoff);
  if (pure) return ModeState::from_amplitudes(kept.col(0));
  return ModeState::from_density(kept * kept.adjoint());
}

CVector random_pure_vector(int dim, int cutoff, std::mt19937_64& rng) {
  if (dim < 1 || dim > cutoff) throw InvalidArgument("random_pure_vector: need 1 <= dim <= cutoff");
  std::normal_distribution<double> normal(0.0, 1.0);
  CVector v = CVector::Zero(cutoff);
  for (int k = 0; k < dim; ++k) {
    const double re = normal(rng);
    const double im = normal(rng);
    v(k) = cplx(re, im);
  }
  v /= v.norm();
  return v;
}

cplx normal_moment(const ModeState& mode, int creators, int annihilators) {
  // tr(ρ a†^m a^n) = Σ_k ρ[k, k−n+m] √(k!/(k−n)!) √(j!/(j−m)!), j = k − n + m
  const int n_dim = mode.cutoff;
  cplx sum = 0.0;
  for (int k = annihilators; k < n_dim; ++k) {
    const int j = k - annihilators + creators;
    if (j >= n_dim) break;
    sum += mode.density(k, j) * lowering_factor(k, annihilators) * lowering_factor(j, creators);
  }
  return sum;
}

FockState FockState::pure(CVector amplitudes, int cutoff) {
  check_cutoff(cutoff, kMaxPureCutoff, "FockState::pure");
  if (amplitudes.size() != static_cast<Eigen::Index>(cutoff) * cutoff) {
    throw InvalidArgument("pure two-mode state needs cutoff² amplitudes");
  }
  const double norm2 = amplitudes.squaredNorm();
  if (norm2 > 1.0 + 1e-10) throw InvalidArgument("state norm exceeds 1");
  return FockState(Pure{std::move(amplitudes)}, cutoff, std::max(0.0, 1.0 - norm2));
}

FockState FockState::mixed(CMatrix density, int cutoff) {
  check_cutoff(cutoff, kMaxDenseMixedCutoff, "FockState::mixed");
  const Eigen::Index dim = static_cast<Eigen::Index>(cutoff) * cutoff;
  if (density.rows() != dim || density.cols() != dim) {
    throw InvalidArgument("mixed two-mode state needs a cutoff² × cutoff² density");
  }
  if ((density - density.adjoint()).cwiseAbs().maxCoeff() > 1e-10) {
    throw InvalidArgument("density operator must be Hermitian");
  }
  const Eigen::SelfAdjointEigenSolver<CMatrix> eig(density, Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() < -1e-10) {
    throw InvalidArgument("density operator must be positive semidefinite");
  }
  const double tr = density.trace().real();
  if (tr > 1.0 + 1e-10) throw InvalidArgument("density trace exceeds 1");
  return FockState(DenseMixed{std::move(density)}, cutoff, std::max(0.0, 1.0 - tr));
}

FockState FockState::product(const ModeState& a, const ModeState& b) {
  if (a.cutoff != b.cutoff) throw InvalidArgument("both modes must share the cutoff");
  const int cutoff = a.cutoff;
  if (a.is_pure() && b.is_pure()) {
    CVector amps(static_cast<Eigen::Index>(cutoff) * cutoff);
    for (int na = 0; na < cutoff; ++na) {
      amps.segment(static_cast<Eigen::Index>(na) * cutoff, cutoff) = (*a.amplitudes)(na) * *b.amplitudes;
    }
    return pure(std::move(amps), cutoff);
  }
  check_cutoff(cutoff, kMaxProductMixedCutoff, "FockState::product");
  const double tr = a.trace() * b.trace();
  return FockState(ProductMixed{a, b}, cutoff, std::max(0.0, 1.0 - tr));
}

FockKind FockState::kind() const noexcept {
  return std::holds_alternative<Pure>(data_) ? FockKind::pure : FockKind::mixed;
}

cplx FockState::amplitude(int na, int nb) const {
  const auto* p = std::get_if<Pure>(&data_);
  if (p == nullptr) throw InvalidArgument("amplitude() needs a pure state");
  if (na < 0 || nb < 0 || na >= cutoff_ || nb >= cutoff_) return 0.0;
  return p->amplitudes(static_cast<Eigen::Index>(na) * cutoff_ + nb);
}

cplx FockState::normal_moment(const NormalPowers& w) const {
  const int n = cutoff_;
  if (const auto* prod = std::get_if<ProductMixed>(&data_)) {
    return losq::normal_moment(prod->a, w.ad, w.a) * losq::normal_moment(prod->b, w.bd, w.b);
  }
  // Σ conj-side index (ja, jb) = (ka − n_a + m_a, kb − n_b + m_b)
  const auto index = [n](int na, int nb) { return static_cast<Eigen::Index>(na) * n + nb; };
  cplx sum = 0.0;
  const auto* pure_state = std::get_if<Pure>(&data_);
  const auto* dense = std::get_if<DenseMixed>(&data_);
  for (int ka = w.a; ka < n; ++ka) {
    const int ja = ka - w.a + w.ad;
    if (ja >= n) break;
    const double fa = lowering_factor(ka, w.a) * lowering_factor(ja, w.ad);
    for (int kb = w.b; kb < n; ++kb) {
      const int jb = kb - w.b + w.bd;
      if (jb >= n) break;
      const double f = fa * lowering_factor(kb, w.b) * lowering_factor(jb, w.bd);
      const cplx rho = pure_state != nullptr
                           ? pure_state->amplitudes(index(ka, kb)) *
                                 std::conj(pure_state->amplitudes(index(ja, jb)))
                           : dense->density(index(ka, kb), index(ja, jb));
      sum += rho * f;
    }
  }
  return sum;
}

FockState fock_state(const StateParams& si, const StateParams& lo, int cutoff, double budget) {
  FockState s = FockState::product(single_mode_state(si, cutoff), single_mode_state(lo, cutoff));
  if (s.truncation_deficit() > budget) {
    throw TruncationError("truncation deficit " + std::to_string(s.truncation_deficit()) +
                          " at cutoff " + std::to_string(cutoff) + " exceeds the budget");
  }
  return s;
}

cplx expect(const OperatorExpr& expr, const FockState& state) {
  if (expr.degree() > kMaxDegree) throw DegreeError("expression degree exceeds the cap");
  const OperatorExpr ordered = reorder(expr);
  cplx sum = 0.0;
  for (const auto& [word, c] : ordered.terms()) {
    NormalPowers powers;
    normal_powers(word, powers);
    sum += c * state.normal_moment(powers);
  }
  return sum;
}

double witness_general(const OperatorExpr& f, const FockState& state) {
  if (f.degree() > kMaxDegree / 2) {
    throw DegreeError("witness functional must have degree <= " + std::to_string(kMaxDegree / 2));
  }
  return expect(formal_normal_order(adjoint_product(f), {Mode::A}), state).real();
}

ConvergedValue converge_expectation(const StateParams& si, const StateParams& lo,
                                    const OperatorExpr& expr, double tol, int max_cutoff) {
  if (!(tol > 0.0)) throw InvalidArgument("convergence tolerance must be > 0");
  std::optional<ConvergedValue> previous;
  for (int cutoff = 2; cutoff <= max_cutoff; cutoff *= 2) {
    std::optional<cplx> value;
    try {
      value = expect(expr, fock_state(si, lo, cutoff));
    } catch (const TruncationError&) {
      previous.reset();
      continue;
    }
    if (previous && std::abs(*value - previous->value) < tol) return *previous;
    previous = ConvergedValue{cutoff, *value};
  }
  throw TruncationError("expectation did not converge by cutoff " + std::to_string(max_cutoff));
}

int converged_cutoff(const StateParams& si, const StateParams& lo, const OperatorExpr& expr,
                     double tol, int max_cutoff) {
  return converge_expectation(si, lo, expr, tol, max_cutoff).cutoff;
}

ModeState beam_splitter_loss(const CVector& amplitudes, double eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) throw InvalidArgument("quantum efficiency must lie in [0, 1]");
  const int n = static_cast<int>(amplitudes.size());
  check_cutoff(n, kMaxDenseMixedCutoff, "beam_splitter_loss");
  // Modes (a, c), index na·n + nc; a†c conserves na + nc, so the truncation is exact.
  const double t = std::acos(std::sqrt(eta));
  std::vector<Eigen::Triplet<cplx>> entries;
  for (int na = 0; na < n; ++na) {
    for (int nc = 0; nc < n; ++nc) {
      // t (a†c − a c†)
      if (na + 1 < n && nc > 0) {
        entries.emplace_back((na + 1) * n + nc - 1, na * n + nc, t * std::sqrt((na + 1.0) * nc));
      }
      if (na > 0 && nc + 1 < n) {
        entries.emplace_back((na - 1) * n + nc + 1, na * n + nc, -t * std::sqrt(na * (nc + 1.0)));
      }
    }
  }
  CSparse g(n * n, n * n);
  g.setFromTriplets(entries.begin(), entries.end());

  CMatrix psi = CMatrix::Zero(n * n, 1);
  for (int na = 0; na < n; ++na) psi(na * n, 0) = amplitudes(na);
  psi = apply_exponential(g, std::move(psi));

  CMatrix rho = CMatrix::Zero(n, n);
  for (int nc = 0; nc < n; ++nc) {
    CVector slice(n);
    for (int na = 0; na < n; ++na) slice(na) = psi(na * n + nc, 0);
    rho += slice * slice.adjoint();
  }
  return ModeState::from_density(std::move(rho));
}

ModeState two_mode_squeezer_gain(const CVector& amplitudes, double g, int cutoff) {
  if (!(g >= 1.0)) throw InvalidArgument("amplifier gain must be >= 1");
  check_cutoff(cutoff, kMaxDenseMixedCutoff, "two_mode_squeezer_gain");
  const int in_dim = static_cast<int>(amplitudes.size());
  const int na_dim = std::max(cutoff, in_dim) + 48;
  const int nc_dim = cutoff + 48;
  const auto index = [nc_dim](int na, int nc) { return na * nc_dim + nc; };
  // r (a†c† − a c), cosh r = √g
  const double r = std::acosh(std::sqrt(g));
  std::vector<Eigen::Triplet<cplx>> entries;
  for (int na = 0; na < na_dim; ++na) {
    for (int nc = 0; nc < nc_dim; ++nc) {
      if (na + 1 < na_dim && nc + 1 < nc_dim) {
        entries.emplace_back(index(na + 1, nc + 1), index(na, nc), r * std::sqrt((na + 1.0) * (nc + 1.0)));
      }
      if (na > 0 && nc > 0) {
        entries.emplace_back(index(na - 1, nc - 1), index(na, nc), -r * std::sqrt(static_cast<double>(na) * nc));
      }
    }
  }
  CSparse gen(na_dim * nc_dim, na_dim * nc_dim);
  gen.setFromTriplets(entries.begin(), entries.end());

  CMatrix psi = CMatrix::Zero(na_dim * nc_dim, 1);
  for (int na = 0; na < in_dim; ++na) psi(index(na, 0), 0) = amplitudes(na);
  psi = apply_exponential(gen, std::move(psi));

  CMatrix rho = CMatrix::Zero(cutoff, cutoff);
  for (int nc = 0; nc < nc_dim; ++nc) {
    CVector slice(cutoff);
    for (int na = 0; na < cutoff; ++na) slice(na) = psi(index(na, nc), 0);
    rho += slice * slice.adjoint();
  }
  return ModeState::from_density(std::move(rho));
}

}  // namespace losq
