#include "hhm/transform.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <string>
#include <utility>

#include "hhm/errors.hpp"
#include "hhm/radial_ode.hpp"
#include "hhm/special.hpp"
#include "hhm/summation.hpp"
#include "text.hpp"

namespace hhm {

namespace {

// 15-point Kronrod abscissae/weights; odd indices are the 7-point Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Panel {
  double a;
  double b;
  double value;
  double error;
};

Panel gauss_kronrod(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kWgk[7];
  double gauss = fc * kWg[3];
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double pair = f(center - dx) + f(center + dx);
    kronrod += kWgk[j] * pair;
    if (j % 2 == 1) gauss += kWg[j / 2] * pair;
  }
  return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

// log sinh and log cosh without overflow for large x > 0.
double log_sinh(double x) { return x > 20.0 ? x + std::log1p(-std::exp(-2.0 * x)) - std::log(2.0) : std::log(std::sinh(x)); }
double log_cosh(double x) { return x + std::log1p(std::exp(-2.0 * x)) - std::log(2.0); }

struct LargerError {
  bool operator()(const Panel& x, const Panel& y) const { return x.error < y.error; }
};

}  // namespace

QuadratureResult quadrature(const std::function<double(double)>& f, double a, double b, double tol, int max_panels) {
  if (!(a < b)) throw DomainError("quadrature: requires a < b");
  if (!(tol > 0.0)) throw DomainError("quadrature: tolerance must be positive");

  std::priority_queue<Panel, std::vector<Panel>, LargerError> queue;
  queue.push(gauss_kronrod(f, a, b));
  double total_value = queue.top().value;
  double total_error = queue.top().error;

  while (total_error > tol * std::max(1.0, std::abs(total_value))) {
    if (static_cast<int>(queue.size()) >= max_panels) {
      throw MaxSubdivisions("quadrature: tolerance " + detail::num(tol) + " not reached with " +
                            std::to_string(max_panels) + " panels");
    }
    const Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Panel left = gauss_kronrod(f, worst.a, mid);
    const Panel right = gauss_kronrod(f, mid, worst.b);
    total_value += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
  }

  // Recombine in left-to-right order so the result does not depend on the
  // running-sum history.
  std::vector<Panel> panels;
  panels.reserve(queue.size());
  while (!queue.empty()) {
    panels.push_back(queue.top());
    queue.pop();
  }
  std::sort(panels.begin(), panels.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
  CompensatedSum<double> value;
  CompensatedSum<double> error;
  for (const Panel& p : panels) {
    value.add(p.value);
    error.add(p.error);
  }
  return {value.value(), error.value(), static_cast<int>(panels.size())};
}

RadialProfile bump_profile(double radius) {
  if (!(radius > 0.0)) throw DomainError("bump_profile: radius must be positive");
  return {radius,
          [radius](double r) {
            const double s = r / radius;
            if (std::abs(s) >= 1.0) return 0.0;
            return std::exp(1.0 - 1.0 / (1.0 - s * s));
          },
          "bump:R=" + detail::num(radius)};
}

RadialProfile zero_profile(double radius) {
  if (!(radius > 0.0)) throw DomainError("zero_profile: radius must be positive");
  return {radius, [](double) { return 0.0; }, "zero"};
}

RadialProfile sampled_profile(std::vector<double> radii, std::vector<double> values) {
  if (radii.size() != values.size()) throw DomainError("sampled_profile: radii and values differ in length");
  if (radii.size() < 2) throw DomainError("sampled_profile: need at least 2 samples");
  if (radii.front() < 0.0) throw DomainError("sampled_profile: radii must be nonnegative");
  for (std::size_t i = 1; i < radii.size(); ++i) {
    if (!(radii[i] > radii[i - 1])) throw DomainError("sampled_profile: radii must be strictly increasing");
  }
  const double support = radii.back();
  auto eval = [radii = std::move(radii), values = std::move(values)](double r) {
    const double x = std::abs(r);
    if (x >= radii.back()) return 0.0;
    if (x <= radii.front()) return values.front();
    const auto it = std::upper_bound(radii.begin(), radii.end(), x);
    const std::size_t hi = static_cast<std::size_t>(it - radii.begin());
    const std::size_t lo = hi - 1;
    const double t = (x - radii[lo]) / (radii[hi] - radii[lo]);
    return values[lo] + t * (values[hi] - values[lo]);
  };
  return {support, std::move(eval), "sampled"};
}

RadialProfile combine_profiles(double alpha, const RadialProfile& f1, const RadialProfile& f2) {
  return {std::max(f1.support_radius, f2.support_radius),
          [alpha, e1 = f1.eval, e2 = f2.eval](double r) { return alpha * e1(r) + e2(r); },
          "combination"};
}

TransformResult spherical_fourier(const ModelParams& p, const RadialProfile& f, double lambda, double tol) {
  if (!(f.support_radius > 0.0)) throw DomainError("spherical_fourier: profile support must be positive");
  TransformResult out;
  out.lambda = lambda;

  auto kernel = [&](double r) {
    try {
      const double v = spherical_function(p, lambda, r);
      ++out.evals_2f1;
      return v;
    } catch (const NoConvergence&) {
      ++out.evals_ode;
      OdeOptions opts;
      if (r <= opts.r_start) return frobenius_start(p, lambda, r).phi;
      const std::array<double, 2> grid{opts.r_start, r};
      return solve_eigen_ode(p, lambda, grid, opts).phi.back();
    }
  };
  auto integrand = [&](double r) {
    const double fr = f.eval(r);
    if (fr == 0.0) return 0.0;
    return fr * kernel(r) * theta(p, r);
  };

  const double omega = sphere_surface_constant(p.n());
  const QuadratureResult q = quadrature(integrand, 0.0, f.support_radius, tol);
  out.value = omega * q.value;
  out.quad_error = omega * q.error;
  return out;
}

double ball_volume(const ModelParams& p, double r, double tol) {
  if (!(r > 0.0)) throw DomainError("ball_volume: r must be positive");
  const QuadratureResult q = quadrature([&p](double t) { return theta(p, t); }, 0.0, r, tol);
  return sphere_surface_constant(p.n()) * q.value;
}

double log_ball_volume(const ModelParams& p, double r, double tol) {
  if (!(r > 0.0)) throw DomainError("log_ball_volume: r must be positive");
  // Theta(t) e^{-Q r} stays O(1) on [0, r]; log Theta is assembled from logs
  // so no intermediate overflows.
  const int d = p.n() - 1;
  const double log_scale = d * std::log(2.0 / p.ell());
  auto scaled = [&](double t) {
    if (t <= 0.0) return 0.0;
    const double x = 0.5 * p.ell() * t;
    const double log_theta = log_scale + d * log_sinh(x) + p.cosh_exponent() * log_cosh(x);
    return std::exp(log_theta - p.q() * r);
  };
  const QuadratureResult q = quadrature(scaled, 0.0, r, tol);
  return std::log(sphere_surface_constant(p.n())) + p.q() * r + std::log(q.value);
}

double entropy_from_sigma(const ModelParams& p, double r_max) {
  if (!(r_max >= 10.0 / p.ell())) throw DomainError("entropy_from_sigma: requires r_max >= 10/ell");
  return sigma(p, r_max);
}

double entropy_from_volume(const ModelParams& p, double r_max, double tol) {
  if (!(r_max >= 20.0 / p.ell())) throw DomainError("entropy_from_volume: requires r_max >= 20/ell");
  return log_ball_volume(p, r_max, tol) / r_max;
}

}  // namespace hhm
