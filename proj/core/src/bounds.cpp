#include "vcpack/bounds.hpp"

#include <cmath>

#include "vcpack/errors.hpp"

namespace vcpack {

const char* to_string(BoundName name) {
  switch (name) {
    case BoundName::HausslerUpper:
      return "HausslerUpper";
    case BoundName::GkmUpper:
      return "GkmUpper";
    case BoundName::KaryUpper:
      return "KaryUpper";
    case BoundName::SauerUpper:
      return "SauerUpper";
    case BoundName::GeneralizedSauer:
      return "GeneralizedSauer";
    case BoundName::RothSeroussi:
      return "RothSeroussi";
    case BoundName::RothSeroussiCn:
      return "RothSeroussiCn";
    case BoundName::HausslerLower:
      return "HausslerLower";
    default:
      return "GilbertVarshamovLower";
  }
}

double haussler_upper(double eps, long d) {
  if (!(eps > 0.0 && eps <= 1.0)) {
    throw domain_error("haussler_upper: need 0 < eps <= 1");
  }
  if (d < 1) throw domain_error("haussler_upper: need d >= 1");
  const double e = std::exp(1.0);
  return e * (d + 1) * std::pow(2.0 * e / eps, static_cast<double>(d));
}

double gkm_upper(double gamma, long d) {
  if (d < 1) throw domain_error("gkm_upper: need d >= 1");
  return 100.0 * std::exp2(d * beta(gamma));  // beta throws for gamma >= 1
}

BoundReport gkm_upper_report(double gamma, long d, std::optional<long> n) {
  BoundReport r;
  r.name = BoundName::GkmUpper;
  r.inputs = {{"gamma", gamma}, {"d", static_cast<double>(d)}};
  if (n) r.inputs["n"] = static_cast<double>(*n);
  if (d < 1) {
    r.notes = "need d >= 1";
    return r;
  }
  if (gamma < 0.0 || gamma >= 1.0) {
    r.notes = "need 0 <= gamma < 1 (diverges at 1)";
    return r;
  }
  r.value = gkm_upper(gamma, d);
  r.preconditions_met = true;
  if (n && 2 * d > *n) {
    r.notes = "warning: theorem assumes d <= n/2";
  }
  return r;
}

BoundReport kary_upper(double gamma, long k, long d, long n) {
  BoundReport r;
  r.name = BoundName::KaryUpper;
  r.inputs = {{"gamma", gamma},
              {"k", static_cast<double>(k)},
              {"d", static_cast<double>(d)},
              {"n", static_cast<double>(n)}};
  if (k < 2) {
    r.notes = "need k >= 2";
    return r;
  }
  if (gamma < 0.0 || gamma >= 1.0) {
    r.notes = "need 0 <= gamma < 1 (diverges at 1)";
    return r;
  }
  const double kd = static_cast<double>(k);
  const double lo = 6.0 * kd / (kd + 1.6);
  const double hi = static_cast<double>(n) * kd / (kd + 1.6);
  if (d < lo) {
    r.notes = "d < 6k/(k+1.6)";
    return r;
  }
  if (d > hi) {
    r.notes = "d > nk/(k+1.6)";
    return r;
  }
  r.value = 34.0 * std::pow(kd, static_cast<double>(d)) *
            std::exp2(d / delta(gamma, k));
  r.preconditions_met = true;
  if (k == 2) {
    r.notes = "k=2: the binary bound 100*2^{d beta(gamma)} is sharper";
  }
  return r;
}

double haussler_lower(double eps, long d, long n) {
  if (!(eps > 0.0)) throw domain_error("haussler_lower: need eps > 0");
  if (d < 1 || d > n) throw domain_error("haussler_lower: need 1 <= d <= n");
  const double e = std::exp(1.0);
  return std::pow(1.0 / (2.0 * e * (eps + static_cast<double>(d) / n)),
                  static_cast<double>(d));
}

double haussler_lower_limit(double eps, long d) {
  if (!(eps > 0.0)) throw domain_error("haussler_lower: need eps > 0");
  if (d < 1) throw domain_error("haussler_lower: need d >= 1");
  const double e = std::exp(1.0);
  return std::pow(1.0 / (2.0 * e * eps), static_cast<double>(d));
}

BoundReport roth_seroussi(long n, double gamma) {
  BoundReport r;
  r.name = BoundName::RothSeroussi;
  r.inputs = {{"n", static_cast<double>(n)}, {"gamma", gamma}};
  if (n < 2) {
    r.notes = "need n >= 2";
    return r;
  }
  if (gamma < 0.0) {
    r.notes = "need gamma >= 0";
    return r;
  }
  const double g2 = gamma * gamma;
  if (g2 >= 1.0 / n) {
    r.notes = "bound vacuous: gamma^2 >= 1/n";
    return r;
  }
  r.value = 1.0 / (1.0 - (1.0 - 1.0 / n) / (1.0 - g2));
  r.preconditions_met = true;
  return r;
}

double roth_seroussi_cn(long n, double c) {
  if (!(c > 1.0)) throw domain_error("roth_seroussi_cn: need c > 1");
  if (n < 1) throw domain_error("roth_seroussi_cn: need n >= 1");
  return (c * c * n - 1.0) / (c * c - 1.0);
}

bool roth_seroussi_identity_check(long n, double c, long prec) {
  if (!(c > 1.0) || n < 2) return false;
  const Interval one = Interval::exact(1L, prec);
  const Interval ci = Interval::exact(c, prec);
  const Interval ni = Interval::exact(n, prec);
  const Interval c2 = ci * ci;
  // Route 1: the gamma form with gamma^2 = 1/(c^2 n).
  const Interval g2 = one / (c2 * ni);
  const Interval route1 = one / (one - (one - one / ni) / (one - g2));
  // Route 2: (c^2 n - 1)/(c^2 - 1).
  const Interval route2 = (c2 * ni - one) / (c2 - one);
  const Interval diff = route1 - route2;
  return diff.contains_zero();
}

BigInt gv_lower(long n, long min_dist) {
  if (min_dist < 1 || min_dist > n) {
    throw domain_error("gv_lower: need 1 <= min_dist <= n");
  }
  const BigInt denom = binom_sum(n, min_dist - 1);
  const BigInt num = BigInt(1) << n;
  return (num + denom - 1) / denom;
}

std::pair<double, double> asymptotic_log_per_d(double gamma) {
  const double e = std::exp(1.0);
  return {std::log(2.0) * beta(gamma), std::log(4.0 * e / (1.0 - gamma))};
}

double crossover_gamma(double tol) {
  if (!(tol > 0.0)) throw domain_error("crossover_gamma: need tol > 0");
  auto diff = [](double g) {
    auto [gkm, hs] = asymptotic_log_per_d(g);
    return gkm - hs;
  };
  double lo = 0.0, hi = 0.15;
  if (!(diff(lo) < 0.0 && diff(hi) > 0.0)) {
    throw theorem_contradiction(
        "crossover_gamma: no sign change on [0, 0.15]");
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (diff(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace vcpack
