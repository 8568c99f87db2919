#include "chaoslab/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "chaoslab/errors.hpp"
#include "chaoslab/torus.hpp"

namespace chaoslab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// sign(sin(2 pi t)) with the exact convention sign(0) = 0: the zeros of the
// argument are located by parity reduction rather than by floating sin().
double sign_sin_2pi(double t) {
  double u = wrap01(t);
  if (u == 0.0 || u == 0.5) return 0.0;
  return u < 0.5 ? 1.0 : -1.0;
}

// Standard C^inf step: 0 for t <= 0, 1 for t >= 1.
double smooth_step(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  double f = std::exp(-1.0 / t);
  double g = std::exp(-1.0 / (1.0 - t));
  return f / (f + g);
}

double smooth_step_prime(double t) {
  if (t <= 0.0 || t >= 1.0) return 0.0;
  double f = std::exp(-1.0 / t);
  double g = std::exp(-1.0 / (1.0 - t));
  double fp = f / (t * t);
  double gp = g / ((1.0 - t) * (1.0 - t));  // = -g'(t)
  // d/dt f/(f+g) = (f' g - f g') / (f+g)^2 with g'(t) = -gp
  return (fp * g + f * gp) / ((f + g) * (f + g));
}

double ramp_width(const BumpSpec& b) { return 0.5 * (1.0 - b.plateau) * (b.hi - b.lo); }

}  // namespace

double bump_value(const BumpSpec& b, double m) {
  if (!(m > b.lo && m < b.hi)) return 0.0;
  if (b.plateau <= 0.0) {
    double u = (2.0 * m - b.lo - b.hi) / (b.hi - b.lo);
    double om = 1.0 - u * u;  // in (0, 1]
    return std::exp(1.0 - 1.0 / om);
  }
  double r = ramp_width(b);
  if (m < b.lo + r) return smooth_step((m - b.lo) / r);
  if (m > b.hi - r) return smooth_step((b.hi - m) / r);
  return 1.0;
}

double bump_derivative(const BumpSpec& b, double m) {
  if (!(m > b.lo && m < b.hi)) return 0.0;
  if (b.plateau <= 0.0) {
    double c = 2.0 / (b.hi - b.lo);
    double u = (2.0 * m - b.lo - b.hi) / (b.hi - b.lo);
    double om = 1.0 - u * u;
    return std::exp(1.0 - 1.0 / om) * (-2.0 * u / (om * om)) * c;
  }
  double r = ramp_width(b);
  if (m < b.lo + r) return smooth_step_prime((m - b.lo) / r) / r;
  if (m > b.hi - r) return -smooth_step_prime((b.hi - m) / r) / r;
  return 0.0;
}

namespace {

// Second derivative of the weight factor: analytic for the classical bump,
// finite differences of the analytic first derivative across plateau ramps.
double bump_second_derivative(const BumpSpec& b, double m) {
  if (!(m > b.lo && m < b.hi)) return 0.0;
  if (b.plateau <= 0.0) {
    double c = 2.0 / (b.hi - b.lo);
    double u = (2.0 * m - b.lo - b.hi) / (b.hi - b.lo);
    double om = 1.0 - u * u;
    double gp = -2.0 * u / (om * om);
    double gpp = -(2.0 + 6.0 * u * u) / (om * om * om);
    return std::exp(1.0 - 1.0 / om) * (gp * gp + gpp) * c * c;
  }
  double h = (b.hi - b.lo) * 1e-7;
  return (bump_derivative(b, m + h) - bump_derivative(b, m - h)) / (2.0 * h);
}

double bump_abs_max(const BumpSpec&) { return 1.0; }  // attained at the centre/plateau

double sampled_abs_max(const BumpSpec& b, double (*f)(const BumpSpec&, double),
                       int samples) {
  double best = 0.0;
  double span = b.hi - b.lo;
  for (int i = 0; i <= samples; ++i) {
    double m = b.lo + span * static_cast<double>(i) / samples;
    best = std::max(best, std::abs(f(b, m)));
  }
  return best;
}

}  // namespace

// ---------------------------------------------------------------------------
// InteractionKernel
// ---------------------------------------------------------------------------

InteractionKernel InteractionKernel::zero(int dim) {
  if (dim != 1 && dim != 2) throw ConfigError("interaction kernel: dim must be 1 or 2");
  InteractionKernel k;
  k.family_ = InteractionFamily::Zero;
  k.dim_ = dim;
  k.sup_norm_ = 0.0;
  return k;
}

InteractionKernel InteractionKernel::constant(int dim, Vec2 value) {
  if (dim != 1 && dim != 2) throw ConfigError("interaction kernel: dim must be 1 or 2");
  InteractionKernel k;
  k.family_ = InteractionFamily::Constant;
  k.dim_ = dim;
  k.constant_ = value;
  if (dim == 1) k.constant_[1] = 0.0;
  k.sup_norm_ = std::hypot(k.constant_[0], k.constant_[1]);
  return k;
}

InteractionKernel InteractionKernel::sin_1d(double amplitude) {
  InteractionKernel k;
  k.family_ = InteractionFamily::Sin1D;
  k.dim_ = 1;
  k.amplitude_ = amplitude;
  k.sup_norm_ = std::abs(amplitude);
  return k;
}

InteractionKernel InteractionKernel::shear_sign(double amplitude) {
  InteractionKernel k;
  k.family_ = InteractionFamily::ShearSign;
  k.dim_ = 2;
  k.amplitude_ = amplitude;
  k.sup_norm_ = std::abs(amplitude);
  return k;
}

InteractionKernel InteractionKernel::perp_gradient_trig(double amplitude) {
  InteractionKernel k;
  k.family_ = InteractionFamily::PerpGradientTrig;
  k.dim_ = 2;
  k.amplitude_ = amplitude;
  k.sup_norm_ = kTwoPi * std::abs(amplitude);
  return k;
}

InteractionKernel InteractionKernel::tabulated(int dim, int nodes,
                                               std::vector<double> values) {
  if (dim != 1 && dim != 2) throw ConfigError("interaction kernel: dim must be 1 or 2");
  if (nodes < 2) throw ConfigError("tabulated interaction kernel: need >= 2 nodes");
  std::size_t expect = static_cast<std::size_t>(dim == 1 ? nodes : nodes * nodes) *
                       static_cast<std::size_t>(dim);
  if (values.size() != expect)
    throw ConfigError("tabulated interaction kernel: wrong table size");
  InteractionKernel k;
  k.family_ = InteractionFamily::Tabulated;
  k.dim_ = dim;
  k.nodes_ = nodes;
  k.table_ = std::move(values);
  double best = 0.0;
  std::size_t sites = k.table_.size() / static_cast<std::size_t>(dim);
  for (std::size_t s = 0; s < sites; ++s) {
    double a0 = k.table_[s * dim];
    double a1 = dim == 2 ? k.table_[s * dim + 1] : 0.0;
    best = std::max(best, std::hypot(a0, a1));
  }
  k.sup_norm_ = best;
  return k;
}

Vec2 InteractionKernel::operator()(const Vec2& dx) const {
  switch (family_) {
    case InteractionFamily::Zero:
      return {0.0, 0.0};
    case InteractionFamily::Constant:
      return constant_;
    case InteractionFamily::Sin1D:
      return {amplitude_ * std::sin(kTwoPi * wrap_disp(dx[0])), 0.0};
    case InteractionFamily::ShearSign:
      return {amplitude_ * sign_sin_2pi(dx[1]), 0.0};
    case InteractionFamily::PerpGradientTrig: {
      double c1 = std::cos(kTwoPi * dx[0]), s1 = std::sin(kTwoPi * dx[0]);
      double c2 = std::cos(kTwoPi * dx[1]), s2 = std::sin(kTwoPi * dx[1]);
      return {amplitude_ * kTwoPi * s1 * c2, -amplitude_ * kTwoPi * c1 * s2};
    }
    case InteractionFamily::Tabulated: {
      auto node = [&](double t) {
        auto i = static_cast<long>(std::lround(wrap01(t) * nodes_));
        return static_cast<int>(i % nodes_);
      };
      int i = node(dx[0]);
      std::size_t site;
      if (dim_ == 1) {
        site = static_cast<std::size_t>(i);
      } else {
        int j = node(dx[1]);
        site = static_cast<std::size_t>(i) * nodes_ + j;
      }
      double a0 = table_[site * dim_];
      double a1 = dim_ == 2 ? table_[site * dim_ + 1] : 0.0;
      return {a0, a1};
    }
  }
  return {0.0, 0.0};
}

double InteractionKernel::max_discrete_divergence(int n) const {
  if (family_ == InteractionFamily::Zero || family_ == InteractionFamily::Constant)
    return 0.0;
  double h = 1.0 / n;
  double worst = 0.0;
  if (dim_ == 1) {
    for (int i = 0; i < n; ++i) {
      double x = i * h;
      double d = ((*this)({x + h, 0.0})[0] - (*this)({x - h, 0.0})[0]) / (2.0 * h);
      worst = std::max(worst, std::abs(d));
    }
    return worst;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double x = i * h, y = j * h;
      double d0 = ((*this)({x + h, y})[0] - (*this)({x - h, y})[0]) / (2.0 * h);
      double d1 = ((*this)({x, y + h})[1] - (*this)({x, y - h})[1]) / (2.0 * h);
      worst = std::max(worst, std::abs(d0 + d1));
    }
  }
  return worst;
}

// ---------------------------------------------------------------------------
// InfluenceKernel
// ---------------------------------------------------------------------------

namespace {

void check_bump(const BumpSpec& b, const char* which) {
  if (!(b.lo > 0.0) || !(b.hi > b.lo))
    throw ConfigError(std::string("influence kernel: ") + which +
                      " needs 0 < lo < hi");
  if (!(b.plateau >= 0.0) || b.plateau >= 1.0)
    throw ConfigError(std::string("influence kernel: ") + which +
                      " plateau fraction must lie in [0, 1)");
}

}  // namespace

InfluenceKernel InfluenceKernel::zero(int dim) {
  if (dim != 1 && dim != 2) throw ConfigError("influence kernel: dim must be 1 or 2");
  InfluenceKernel k;
  k.form_ = InfluenceForm::Zero;
  k.dim_ = dim;
  return k;
}

InfluenceKernel InfluenceKernel::separable(int dim, BumpSpec chi1, BumpSpec chi2,
                                           SpatialFactorSpec spatial) {
  if (dim != 1 && dim != 2) throw ConfigError("influence kernel: dim must be 1 or 2");
  check_bump(chi1, "chi1");
  check_bump(chi2, "chi2");
  InfluenceKernel k;
  k.form_ = InfluenceForm::Separable;
  k.dim_ = dim;
  k.chi1_ = chi1;
  k.chi2_ = chi2;
  k.spatial_ = spatial;
  const int samples = 400000;
  double s_sup = std::abs(spatial.amplitude);
  double c1 = bump_abs_max(chi1), c2 = bump_abs_max(chi2);
  double c1p = sampled_abs_max(chi1, &bump_derivative, samples);
  double c1pp = sampled_abs_max(chi1, &bump_second_derivative, samples);
  k.tight_ = {s_sup * c1 * c2, s_sup * c1p * c2, s_sup * c1pp * c2};
  k.declared_ = k.tight_;
  return k;
}

InfluenceKernel InfluenceKernel::product_weights(int dim, SpatialFactorSpec spatial) {
  if (dim != 1 && dim != 2) throw ConfigError("influence kernel: dim must be 1 or 2");
  InfluenceKernel k;
  k.form_ = InfluenceForm::ProductWeights;
  k.dim_ = dim;
  k.spatial_ = spatial;
  return k;
}

double InfluenceKernel::operator()(const Vec2& x, double m, const Vec2& y,
                                   double n) const {
  switch (form_) {
    case InfluenceForm::Zero:
      return 0.0;
    case InfluenceForm::Separable:
      return chi1(m) * chi2(n) * spatial({x[0] - y[0], x[1] - y[1]});
    case InfluenceForm::ProductWeights:
      throw ConfigError(
          "product-weights influence kernel queried outside reduced mode");
  }
  return 0.0;
}

double InfluenceKernel::dm(const Vec2& x, double m, const Vec2& y, double n) const {
  switch (form_) {
    case InfluenceForm::Zero:
      return 0.0;
    case InfluenceForm::Separable:
      return chi1_prime(m) * chi2(n) * spatial({x[0] - y[0], x[1] - y[1]});
    case InfluenceForm::ProductWeights:
      throw ConfigError(
          "product-weights influence kernel queried outside reduced mode");
  }
  return 0.0;
}

double InfluenceKernel::dn(const Vec2& x, double m, const Vec2& y, double n) const {
  switch (form_) {
    case InfluenceForm::Zero:
      return 0.0;
    case InfluenceForm::Separable:
      return chi1(m) * chi2_prime(n) * spatial({x[0] - y[0], x[1] - y[1]});
    case InfluenceForm::ProductWeights:
      throw ConfigError(
          "product-weights influence kernel queried outside reduced mode");
  }
  return 0.0;
}

double InfluenceKernel::chi1(double m) const {
  return form_ == InfluenceForm::Separable ? bump_value(chi1_, m) : 0.0;
}
double InfluenceKernel::chi1_prime(double m) const {
  return form_ == InfluenceForm::Separable ? bump_derivative(chi1_, m) : 0.0;
}
double InfluenceKernel::chi2(double n) const {
  return form_ == InfluenceForm::Separable ? bump_value(chi2_, n) : 0.0;
}
double InfluenceKernel::chi2_prime(double n) const {
  return form_ == InfluenceForm::Separable ? bump_derivative(chi2_, n) : 0.0;
}

double InfluenceKernel::spatial(const Vec2& dx) const {
  if (form_ == InfluenceForm::Zero) return 0.0;
  double z = wrap_disp(dx[0]);
  if (dim_ == 2) z += wrap_disp(dx[1]);
  switch (spatial_.family) {
    case SpatialFactorFamily::Constant:
      return spatial_.amplitude;
    case SpatialFactorFamily::Sin:
      return spatial_.amplitude * std::sin(kTwoPi * z);
    case SpatialFactorFamily::Cos:
      return spatial_.amplitude * std::cos(kTwoPi * z);
    case SpatialFactorFamily::SignSin:
      return spatial_.amplitude * sign_sin_2pi(z);
  }
  return 0.0;
}

void InfluenceKernel::declare_bounds(const InfluenceBounds& declared) {
  auto too_small = [](double want, double have) {
    return want < have * (1.0 - 1e-12);
  };
  if (too_small(declared.sup, tight_.sup) || too_small(declared.dm_sup, tight_.dm_sup) ||
      too_small(declared.dmm_sup, tight_.dmm_sup))
    throw ConfigError("declared influence bounds fall below sampled tight values");
  declared_ = declared;
}

// ---------------------------------------------------------------------------
// validate_kernels
// ---------------------------------------------------------------------------

namespace {

// Max residual of the exchange identity between grad_x of the averaged
// influence and the average against grad_y of the test density. Uses the
// factored form: W = s * w, compare centered-difference gradients of W with
// the convolution of s against the centered-difference gradient of w.
double gradient_exchange_residual(const InfluenceKernel& S) {
  if (S.form() != InfluenceForm::Separable) return 0.0;
  const int dim = S.dim();
  const int G = 24;
  const int M = 24;
  const double n_max = S.chi2_spec().hi + 1.0;
  const double hx = 1.0 / G;
  const double hn = n_max / M;
  const int sites = dim == 1 ? G : G * G;

  auto xc = [&](int i) { return (i + 0.5) * hx; };
  auto site_xy = [&](int s) {
    return dim == 1 ? Vec2{xc(s), 0.0} : Vec2{xc(s / G), xc(s % G)};
  };

  // Smooth positive test density on (y, n).
  auto test_density = [&](const Vec2& y, double n) {
    double f = 1.0 + 0.5 * std::cos(kTwoPi * y[0]);
    if (dim == 2) f *= 1.0 + 0.3 * std::sin(kTwoPi * y[1]);
    return f * std::exp(-n);
  };

  // w(y) = int chi2(n) psi(y, n) dn  and its centered spatial gradients.
  std::vector<double> w(sites, 0.0);
  for (int s = 0; s < sites; ++s) {
    double acc = 0.0;
    for (int c = 0; c < M; ++c) {
      double n = (c + 0.5) * hn;
      acc += S.chi2(n) * test_density(site_xy(s), n) * hn;
    }
    w[s] = acc;
  }

  auto conv_s = [&](const std::vector<double>& field, const Vec2& x) {
    double acc = 0.0;
    double vol = dim == 1 ? hx : hx * hx;
    for (int s = 0; s < sites; ++s) {
      Vec2 y = site_xy(s);
      acc += S.spatial({x[0] - y[0], x[1] - y[1]}) * field[s] * vol;
    }
    return acc;
  };

  // Centered gradient of w per axis.
  double worst = 0.0;
  for (int axis = 0; axis < dim; ++axis) {
    std::vector<double> gw(sites, 0.0);
    for (int s = 0; s < sites; ++s) {
      int i = dim == 1 ? s : s / G;
      int j = dim == 1 ? 0 : s % G;
      int ip, im;
      if (axis == 0) {
        ip = (i + 1) % G;
        im = (i + G - 1) % G;
        gw[s] = (w[dim == 1 ? ip : ip * G + j] - w[dim == 1 ? im : im * G + j]) /
                (2.0 * hx);
      } else {
        ip = (j + 1) % G;
        im = (j + G - 1) % G;
        gw[s] = (w[i * G + ip] - w[i * G + im]) / (2.0 * hx);
      }
    }
    for (int s = 0; s < sites; ++s) {
      Vec2 x = site_xy(s);
      Vec2 xp = x, xm = x;
      xp[axis] += hx;
      xm[axis] -= hx;
      double lhs = (conv_s(w, xp) - conv_s(w, xm)) / (2.0 * hx);
      double rhs = conv_s(gw, x);
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  }
  return worst;
}

}  // namespace

KernelValidation validate_kernels(const InteractionKernel& a, const InfluenceKernel& S,
                                  double divergence_tol) {
  KernelValidation v;
  v.interaction_sup = a.sup_norm();
  v.divergence_max = a.max_discrete_divergence(128);
  v.divergence_free = v.divergence_max <= divergence_tol;
  const auto& tight = S.sampled_bounds();
  const auto& declared = S.bounds();
  v.influence_sup_sampled = tight.sup;
  v.influence_dm_sampled = tight.dm_sup;
  v.influence_dmm_sampled = tight.dmm_sup;
  auto covered = [](double dec, double smp) { return dec >= smp * (1.0 - 1e-12); };
  v.bounds_consistent = covered(declared.sup, tight.sup) &&
                        covered(declared.dm_sup, tight.dm_sup) &&
                        covered(declared.dmm_sup, tight.dmm_sup);
  v.gradient_exchange_residual = gradient_exchange_residual(S);
  v.ok = v.divergence_free && v.bounds_consistent;
  return v;
}

}  // namespace chaoslab
