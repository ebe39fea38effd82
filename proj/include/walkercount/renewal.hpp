#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace walkercount {

/// p(n) = P(a single walker is at the origin at time n) for n = 0..n_max,
/// stored with p(0) = 1.
class ReturnProbabilityProfile {
 public:
  ReturnProbabilityProfile() : p_{1.0} {}
  /// `values[i]` is p(i + 1). Throws std::invalid_argument for values outside [0, 1].
  explicit ReturnProbabilityProfile(std::span<const double> values);

  std::int64_t n_max() const { return static_cast<std::int64_t>(p_.size()) - 1; }
  double operator()(std::int64_t n) const { return p_[static_cast<std::size_t>(n)]; }
  /// Indexed from 0; element 0 is the implicit p(0) = 1.
  const std::vector<double>& values() const { return p_; }

 private:
  std::vector<double> p_;
};

/// First-return law f(n), n = 1..n_max, plus the mass it does not place there.
struct InterReturnLaw {
  std::vector<double> f{0.0};  // f[0] is always 0
  double censored_tail = 1.0;
  /// Recursion steps that produced a negative value (or overshot total mass 1)
  /// and were clamped. Exact profiles never clamp.
  std::size_t clamped_steps = 0;
  double clamped_mass = 0.0;

  std::int64_t n_max() const { return static_cast<std::int64_t>(f.size()) - 1; }
  double operator()(std::int64_t n) const { return f[static_cast<std::size_t>(n)]; }

  /// Builds a law from f(1..n) directly; censored tail is 1 - sum.
  static InterReturnLaw from_pmf(std::span<const double> f_from_one);
};

/// Truncated law of S_n = X_1 + ... + X_n on {0..t_max}.
struct SnDistribution {
  std::int64_t n = 0;
  std::vector<double> pmf;
  /// P(S_n > t_max), including every path through a censored increment.
  double censored = 1.0;

  std::int64_t t_max() const { return static_cast<std::int64_t>(pmf.size()) - 1; }
  double mass() const;
};

/// Scale n -> M_n.
using MedianTable = std::map<std::int64_t, std::int64_t>;

/// f(n) = p(n) - sum_{m<n} f(m) p(n-m), clamping negative steps to 0.
InterReturnLaw renewal_invert(const ReturnProbabilityProfile& profile);

/// p(n) = sum_{m=1..n} f(m) p(n-m) for n = 1..n_max. n_max may exceed the law's
/// range; f is taken as 0 there.
ReturnProbabilityProfile forward_profile(const InterReturnLaw& law, std::int64_t n_max);

/// Max |p(n) - p_forward(n)| over n <= n_max of the profile.
double roundtrip_check(const ReturnProbabilityProfile& profile, const InterReturnLaw& law);

/// Sum of p(s) for s = 1..t. Throws std::out_of_range when t exceeds the profile.
double expected_visits(const ReturnProbabilityProfile& profile, std::int64_t t);

/// c = a * b truncated to {0..t_max}.
std::vector<double> convolve_truncated(std::span<const double> a, std::span<const double> b,
                                       std::int64_t t_max);

/// The law of X truncated to {0..t_max}, as the starting point for convolutions.
SnDistribution single_increment(const InterReturnLaw& law, std::int64_t t_max);

/// n-fold convolution by binary powering: O(log n) truncated convolutions.
SnDistribution sn_distribution(const InterReturnLaw& law, std::int64_t n, std::int64_t t_max);

/// S_{2^0}, S_{2^1}, ..., S_{2^max_exponent} by repeated squaring.
std::vector<SnDistribution> sn_ladder(const InterReturnLaw& law, int max_exponent,
                                      std::int64_t t_max);

/// min{m : P(S_n <= m) > 1/2}. Throws TailCensored when the stored mass never
/// exceeds 1/2.
std::int64_t median(const SnDistribution& dist);

}  // namespace walkercount
