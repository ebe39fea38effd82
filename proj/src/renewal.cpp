#include "walkercount/renewal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "walkercount/errors.hpp"

namespace walkercount {

ReturnProbabilityProfile::ReturnProbabilityProfile(std::span<const double> values) {
  p_.reserve(values.size() + 1);
  p_.push_back(1.0);
  for (double v : values) {
    if (!(v >= 0.0 && v <= 1.0))
      throw std::invalid_argument("return probability outside [0, 1]: " + std::to_string(v));
    p_.push_back(v);
  }
}

InterReturnLaw InterReturnLaw::from_pmf(std::span<const double> f_from_one) {
  InterReturnLaw law;
  law.f.assign(1, 0.0);
  law.f.insert(law.f.end(), f_from_one.begin(), f_from_one.end());
  law.censored_tail = 1.0 - std::accumulate(law.f.begin(), law.f.end(), 0.0);
  return law;
}

double SnDistribution::mass() const { return std::accumulate(pmf.begin(), pmf.end(), 0.0); }

constexpr double kRoundoff = 1e-13;

InterReturnLaw renewal_invert(const ReturnProbabilityProfile& profile) {
  const auto& p = profile.values();
  const std::size_t n_max = p.size() - 1;
  InterReturnLaw law;
  law.f.assign(n_max + 1, 0.0);
  double total = 0.0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    double v = p[n];
    for (std::size_t m = 1; m < n; ++m) v -= law.f[m] * p[n - m];
    // Excursions below kRoundoff are cancellation error, not clamping.
    if (v < 0.0) {
      if (v < -kRoundoff) ++law.clamped_steps;
      law.clamped_mass += -v;
      v = 0.0;
    } else if (total + v > 1.0) {
      // An inconsistent (noisy) profile can ask for more than unit mass.
      if (total + v - 1.0 > kRoundoff) ++law.clamped_steps;
      law.clamped_mass += total + v - 1.0;
      v = 1.0 - total;
    }
    law.f[n] = v;
    total += v;
  }
  law.censored_tail = 1.0 - total;
  return law;
}

ReturnProbabilityProfile forward_profile(const InterReturnLaw& law, std::int64_t n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  const auto size = static_cast<std::size_t>(n_max);
  const std::size_t law_max = law.f.size() - 1;
  std::vector<double> p(size + 1, 0.0);
  p[0] = 1.0;
  for (std::size_t n = 1; n <= size; ++n) {
    double acc = 0.0;
    const std::size_t upper = std::min(n, law_max);
    for (std::size_t m = 1; m <= upper; ++m) acc += law.f[m] * p[n - m];
    p[n] = std::clamp(acc, 0.0, 1.0);
  }
  return ReturnProbabilityProfile(std::span<const double>(p).subspan(1));
}

double roundtrip_check(const ReturnProbabilityProfile& profile, const InterReturnLaw& law) {
  const auto forward = forward_profile(law, profile.n_max());
  double worst = 0.0;
  for (std::int64_t n = 1; n <= profile.n_max(); ++n)
    worst = std::max(worst, std::abs(profile(n) - forward(n)));
  return worst;
}

double expected_visits(const ReturnProbabilityProfile& profile, std::int64_t t) {
  if (t < 0) throw std::invalid_argument("expected_visits: negative time");
  if (t > profile.n_max())
    throw std::out_of_range("expected_visits: t = " + std::to_string(t) +
                            " exceeds profile range " + std::to_string(profile.n_max()));
  const auto& p = profile.values();
  return std::accumulate(p.begin() + 1, p.begin() + 1 + t, 0.0);
}

namespace {

struct Support {
  std::size_t lo = 1;
  std::size_t hi = 0;  // empty when lo > hi
};

Support support_of(std::span<const double> a) {
  Support s;
  std::size_t i = 0;
  while (i < a.size() && a[i] == 0.0) ++i;
  if (i == a.size()) return s;
  std::size_t j = a.size() - 1;
  while (a[j] == 0.0) --j;
  return {i, j};
}

}  // namespace

std::vector<double> convolve_truncated(std::span<const double> a, std::span<const double> b,
                                       std::int64_t t_max) {
  if (t_max < 0) throw std::invalid_argument("t_max must be >= 0");
  const auto limit = static_cast<std::size_t>(t_max);
  std::vector<double> c(limit + 1, 0.0);
  const Support sa = support_of(a);
  const Support sb = support_of(b);
  if (sa.lo > sa.hi || sb.lo > sb.hi) return c;
  for (std::size_t i = sa.lo; i <= sa.hi && i + sb.lo <= limit; ++i) {
    const double ai = a[i];
    if (ai == 0.0) continue;
    const std::size_t j_end = std::min(sb.hi, limit - i);
    double* out = c.data() + i;
    const double* bj = b.data();
    for (std::size_t j = sb.lo; j <= j_end; ++j) out[j] += ai * bj[j];
  }
  return c;
}

namespace {

SnDistribution combine(const SnDistribution& a, const SnDistribution& b, std::int64_t t_max) {
  SnDistribution out;
  out.n = a.n + b.n;
  out.pmf = convolve_truncated(a.pmf, b.pmf, t_max);
  out.censored = std::max(0.0, 1.0 - out.mass());
  return out;
}

}  // namespace

SnDistribution single_increment(const InterReturnLaw& law, std::int64_t t_max) {
  if (t_max < 0) throw std::invalid_argument("t_max must be >= 0");
  SnDistribution d;
  d.n = 1;
  d.pmf.assign(static_cast<std::size_t>(t_max) + 1, 0.0);
  const std::size_t upper = std::min(law.f.size() - 1, static_cast<std::size_t>(t_max));
  for (std::size_t t = 1; t <= upper; ++t) d.pmf[t] = law.f[t];
  d.censored = std::max(0.0, 1.0 - d.mass());
  return d;
}

SnDistribution sn_distribution(const InterReturnLaw& law, std::int64_t n, std::int64_t t_max) {
  if (n < 1) throw std::invalid_argument("sn_distribution: n must be >= 1");
  SnDistribution power = single_increment(law, t_max);
  SnDistribution result;
  bool have_result = false;
  for (std::int64_t rest = n;;) {
    if (rest & 1) {
      result = have_result ? combine(result, power, t_max) : power;
      have_result = true;
    }
    rest >>= 1;
    if (rest == 0) break;
    power = combine(power, power, t_max);
  }
  return result;
}

std::vector<SnDistribution> sn_ladder(const InterReturnLaw& law, int max_exponent,
                                      std::int64_t t_max) {
  if (max_exponent < 0) throw std::invalid_argument("sn_ladder: negative exponent");
  std::vector<SnDistribution> ladder;
  ladder.reserve(static_cast<std::size_t>(max_exponent) + 1);
  ladder.push_back(single_increment(law, t_max));
  for (int e = 1; e <= max_exponent; ++e) ladder.push_back(combine(ladder.back(), ladder.back(), t_max));
  return ladder;
}

std::int64_t median(const SnDistribution& dist) {
  double cumulative = 0.0;
  for (std::size_t t = 0; t < dist.pmf.size(); ++t) {
    cumulative += dist.pmf[t];
    if (cumulative > 0.5) return static_cast<std::int64_t>(t);
  }
  throw TailCensored("median of S_" + std::to_string(dist.n) + " lies beyond t_max = " +
                     std::to_string(dist.t_max()) + " (stored mass " + std::to_string(cumulative) +
                     ")");
}

}  // namespace walkercount
