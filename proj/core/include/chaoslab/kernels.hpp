#pragma once

#include <array>
#include <string>
#include <vector>

namespace chaoslab {

// Spatial vector on the torus; component [1] is unused when dim == 1.
using Vec2 = std::array<double, 2>;

// ---------------------------------------------------------------------------
// Interaction kernel a : T^d -> R^d (pairwise velocity kernel).
// All built-in families except "sin" are divergence-free, which the transport
// analysis requires; "sin" exists as a negative control and for pure particle
// runs. Discontinuous families use the convention sign(0) = 0.
// ---------------------------------------------------------------------------

enum class InteractionFamily {
  Zero,
  Constant,          // a(x) = c, any dim
  Sin1D,             // a(x) = amp * sin(2 pi x), dim 1, NOT divergence-free
  ShearSign,         // a(x) = amp * (sign(sin 2 pi x2), 0), dim 2
  PerpGradientTrig,  // a = (d2 K, -d1 K), K = amp * sin(2 pi x1) sin(2 pi x2), dim 2
  Tabulated,         // componentwise nearest-node table on the displacement grid
};

class InteractionKernel {
 public:
  static InteractionKernel zero(int dim);
  static InteractionKernel constant(int dim, Vec2 value);
  static InteractionKernel sin_1d(double amplitude);
  static InteractionKernel shear_sign(double amplitude);
  static InteractionKernel perp_gradient_trig(double amplitude);
  // table: per-axis node count `nodes`, values[(i*nodes + j)*dim + comp] at
  // displacement (i/nodes, j/nodes); dim 1 uses values[i*dim ...] layout.
  static InteractionKernel tabulated(int dim, int nodes, std::vector<double> values);

  InteractionFamily family() const { return family_; }
  int dim() const { return dim_; }
  bool is_zero() const { return family_ == InteractionFamily::Zero; }

  // Evaluate at a displacement (wrapped internally).
  Vec2 operator()(const Vec2& dx) const;

  // Tight sup of |a| (Euclidean) over the torus, computed at construction.
  double sup_norm() const { return sup_norm_; }

  // Max |centered-difference divergence| over an n x n displacement grid
  // (dim 1: d/dx of the single component). Analytic families cancel exactly.
  double max_discrete_divergence(int n) const;

 private:
  InteractionFamily family_ = InteractionFamily::Zero;
  int dim_ = 1;
  double amplitude_ = 0.0;
  Vec2 constant_{0.0, 0.0};
  int nodes_ = 0;
  std::vector<double> table_;
  double sup_norm_ = 0.0;
};

// ---------------------------------------------------------------------------
// Weight factor chi: smooth bump compactly supported in (lo, hi).
//
// plateau == 0: the classical bump exp(1 - 1/(1-u^2)) with
//               u = (2m - lo - hi)/(hi - lo).
// plateau  > 0: flat top occupying that fraction of the support, joined by
//               C^inf ramps built from the standard smooth step
//               f(t)/(f(t)+f(1-t)), f(t) = exp(-1/t). Used to realize
//               influence kernels whose weight-derivative vanishes on a band.
// ---------------------------------------------------------------------------

struct BumpSpec {
  double lo = 0.5;
  double hi = 3.0;
  double plateau = 0.0;  // in [0, 1)
};

double bump_value(const BumpSpec& spec, double m);
double bump_derivative(const BumpSpec& spec, double m);

// ---------------------------------------------------------------------------
// Influence kernel S(x, m, y, n).
//
// Separable form:       S = chi1(m) * chi2(n) * s(x - y)
// Product-weights form: S = m * n * s(x - y)   (reduced mu-equation only;
//                       direct evaluation outside that mode is refused)
// ---------------------------------------------------------------------------

enum class InfluenceForm { Zero, Separable, ProductWeights };

enum class SpatialFactorFamily {
  Constant,  // s = amp                  (even)
  Sin,       // s = amp sin(2 pi (z1 + ... + zd))   (odd, smooth)
  Cos,       // s = amp cos(2 pi (z1 + ... + zd))   (even, smooth)
  SignSin,   // s = amp sign(sin(2 pi (z1 + ... + zd)))  (odd, discontinuous)
};

struct SpatialFactorSpec {
  SpatialFactorFamily family = SpatialFactorFamily::Constant;
  double amplitude = 1.0;
};

// Declared envelope constants for |S|, |dS/dm|, |d2S/dm2|. The kernel computes
// tight values by dense sampling; declared values may only be equal or larger.
struct InfluenceBounds {
  double sup = 0.0;      // bound on |S|
  double dm_sup = 0.0;   // bound on |dS/dm|
  double dmm_sup = 0.0;  // bound on |d2S/dm2|
};

class InfluenceKernel {
 public:
  static InfluenceKernel zero(int dim);
  static InfluenceKernel separable(int dim, BumpSpec chi1, BumpSpec chi2,
                                   SpatialFactorSpec spatial);
  static InfluenceKernel product_weights(int dim, SpatialFactorSpec spatial);

  InfluenceForm form() const { return form_; }
  int dim() const { return dim_; }
  bool is_zero() const { return form_ == InfluenceForm::Zero; }

  // S(x, m, y, n); refuses the product-weights form (reduced mode only).
  double operator()(const Vec2& x, double m, const Vec2& y, double n) const;
  // dS/dm and dS/dn at the same arguments.
  double dm(const Vec2& x, double m, const Vec2& y, double n) const;
  double dn(const Vec2& x, double m, const Vec2& y, double n) const;

  // Separable factors, exposed for the factored mean-field fast path.
  double chi1(double m) const;
  double chi1_prime(double m) const;
  double chi2(double n) const;
  double chi2_prime(double n) const;
  double spatial(const Vec2& dx) const;  // s(x - y), displacement wrapped
  const BumpSpec& chi1_spec() const { return chi1_; }
  const BumpSpec& chi2_spec() const { return chi2_; }

  // Declared bounds (defaults: tight sampled values).
  const InfluenceBounds& bounds() const { return declared_; }
  // Raise the declared bounds; refuses values below the sampled tight ones.
  void declare_bounds(const InfluenceBounds& declared);
  const InfluenceBounds& sampled_bounds() const { return tight_; }

 private:
  InfluenceForm form_ = InfluenceForm::Zero;
  int dim_ = 1;
  BumpSpec chi1_, chi2_;
  SpatialFactorSpec spatial_{};
  InfluenceBounds tight_{}, declared_{};
};

// ---------------------------------------------------------------------------
// Validation: bound consistency on a dense sample grid plus the
// divergence-free check for the interaction kernel.
// ---------------------------------------------------------------------------

struct KernelValidation {
  double interaction_sup = 0.0;
  double divergence_max = 0.0;       // centered differences, see above
  bool divergence_free = false;      // divergence_max <= tol
  double influence_sup_sampled = 0.0;
  double influence_dm_sampled = 0.0;
  double influence_dmm_sampled = 0.0;
  bool bounds_consistent = false;    // sampled <= declared everywhere
  // Max residual of the cross-derivative exchange identity
  // grad_x int S psi = int S grad_y psi (test field, coarse grid); recorded.
  double gradient_exchange_residual = 0.0;
  bool ok = false;
};

KernelValidation validate_kernels(const InteractionKernel& a,
                                  const InfluenceKernel& S,
                                  double divergence_tol = 1e-10);

}  // namespace chaoslab
