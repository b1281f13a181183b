#include "quivergrass/euler.hpp"

#include <set>

#include "quivergrass/error.hpp"
#include "quivergrass/linalg.hpp"
#include "quivergrass/modular.hpp"

namespace quivergrass {

Integer CountingPolynomial::evaluate(const Integer& q) const {
  Integer acc = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * q + *it;
  return acc;
}

std::string CountingPolynomial::to_string() const {
  std::string out;
  for (std::size_t k = coefficients.size(); k-- > 0;) {
    const Integer& c = coefficients[k];
    if (sgn(c) == 0) continue;
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    const Integer mag = abs(c);
    std::string power = k == 0 ? "" : (k == 1 ? "q" : "q^" + std::to_string(k));
    if (power.empty()) {
      out += mag.get_str();
    } else {
      out += (mag == 1 ? "" : mag.get_str() + "*") + power;
    }
  }
  return out.empty() ? "0" : out;
}

CountingPolynomial interpolate_counting_polynomial(std::span<const CountSample> samples, int degree_bound) {
  if (degree_bound < 0) throw Error(ErrorKind::invalid_argument, "negative degree bound");
  const std::size_t nodes = static_cast<std::size_t>(degree_bound) + 1;
  if (samples.size() < nodes + kHeldOutPrimes) {
    throw Error(ErrorKind::insufficient_samples, "need " + std::to_string(nodes + kHeldOutPrimes) +
                                                     " samples for degree " + std::to_string(degree_bound) +
                                                     ", got " + std::to_string(samples.size()));
  }
  std::set<std::uint64_t> distinct;
  for (const auto& s : samples) distinct.insert(s.prime);
  if (distinct.size() != samples.size()) throw Error(ErrorKind::insufficient_samples, "sample points repeat");

  // Newton divided differences.
  std::vector<Rational> xs(nodes), coef(nodes);
  for (std::size_t i = 0; i < nodes; ++i) {
    xs[i] = Rational(Integer(std::to_string(samples[i].prime)));
    coef[i] = Rational(samples[i].count);
  }
  for (std::size_t level = 1; level < nodes; ++level)
    for (std::size_t i = nodes - 1; i >= level; --i)
      coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - level]);

  // Expand the Newton form into ascending monomial coefficients.
  std::vector<Rational> mono(nodes, Rational(0));
  for (std::size_t k = nodes; k-- > 0;) {
    // mono <- mono * (q - x_k) + coef[k]
    std::vector<Rational> next(nodes, Rational(0));
    for (std::size_t j = 0; j < nodes; ++j) {
      if (sgn(mono[j]) == 0) continue;
      if (j + 1 < nodes) next[j + 1] += mono[j];
      next[j] -= mono[j] * xs[k];
    }
    next[0] += coef[k];
    mono = std::move(next);
  }

  CountingPolynomial poly;
  for (const Rational& c : mono) {
    if (c.get_den() != 1) {
      throw Error(ErrorKind::non_polynomial_count,
                  "interpolant has non-integral coefficient " + c.get_str() +
                      "; point counts are not polynomial in q (as for the quartic-curve Grassmannian, "
                      "see the `example4` command)");
    }
    poly.coefficients.push_back(c.get_num());
  }
  while (!poly.coefficients.empty() && sgn(poly.coefficients.back()) == 0) poly.coefficients.pop_back();
  poly.samples.assign(samples.begin(), samples.end());

  for (std::size_t i = nodes; i < samples.size(); ++i) {
    const Integer predicted = poly.evaluate(Integer(std::to_string(samples[i].prime)));
    if (predicted != samples[i].count) {
      throw Error(ErrorKind::non_polynomial_count,
                  "held-out prime " + std::to_string(samples[i].prime) + " has " + samples[i].count.get_str() +
                      " points, interpolant predicts " + predicted.get_str() +
                      "; point counts are not polynomial in q (as for the quartic-curve Grassmannian, "
                      "see the `example4` command)",
                  static_cast<std::int64_t>(samples[i].prime));
    }
  }
  return poly;
}

int dimension_bound(const DimensionVector& d, const DimensionVector& e) {
  int total = 0;
  for (std::size_t i = 0; i < d.size(); ++i) total += e[i] * (d[i] - e[i]);
  return total;
}

PrimeSchedule::PrimeSchedule(const Representation& rep) : rep_(rep) {
  validate_representation(rep_);
  if (rep_.domain().is_prime_field()) {
    throw Error(ErrorKind::domain_mismatch, "prime schedule needs an integer or rational representation");
  }
  rational_ranks_ = matrix_ranks(rep_);
  rational_end_dim_ = hom_dim(rep_, rep_);
}

bool PrimeSchedule::usable(std::uint32_t p) {
  try {
    Representation r = reduce_mod(rep_, p);
    if (matrix_ranks(r) != rational_ranks_ || hom_dim(r, r) != rational_end_dim_) return false;
    cache_.emplace(p, std::move(r));
    return true;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::domain_mismatch) return false;  // denominator vanishes mod p
    throw;
  }
}

std::vector<std::uint32_t> PrimeSchedule::first(std::size_t count) {
  while (usable_.size() < count) {
    const auto p = static_cast<std::uint32_t>(next_prime(last_tested_));
    last_tested_ = p;
    if (usable(p)) {
      usable_.push_back(p);
    } else {
      skipped_.push_back(p);
    }
  }
  return {usable_.begin(), usable_.begin() + static_cast<std::ptrdiff_t>(count)};
}

const Representation& PrimeSchedule::reduced(std::uint32_t p) {
  auto it = cache_.find(p);
  if (it == cache_.end()) it = cache_.emplace(p, reduce_mod(rep_, p)).first;
  return it->second;
}

std::vector<std::vector<CountSample>> sample_counts(PrimeSchedule& schedule, const DimensionVector& d,
                                                    const std::vector<DimensionVector>& targets,
                                                    const EnumerationOptions& options) {
  std::vector<std::size_t> needed;
  std::size_t most = 0;
  for (const auto& e : targets) {
    if (e.size() != d.size() || !e.fits_in(d)) {
      throw Error(ErrorKind::out_of_range,
                  "dimension vector " + e.to_string() + " outside 0 <= e <= " + d.to_string());
    }
    needed.push_back(static_cast<std::size_t>(dimension_bound(d, e)) + 1 + kHeldOutPrimes);
    most = std::max(most, needed.back());
  }
  const auto primes = schedule.first(most);
  std::vector<std::vector<CountSample>> samples(targets.size());
  for (std::size_t j = 0; j < primes.size(); ++j) {
    std::vector<std::size_t> index;
    std::vector<DimensionVector> batch;
    for (std::size_t t = 0; t < targets.size(); ++t) {
      if (needed[t] <= j) continue;
      index.push_back(t);
      batch.push_back(targets[t]);
    }
    const auto counts = count_subreps_many(schedule.reduced(primes[j]), batch, options);
    for (std::size_t k = 0; k < index.size(); ++k) samples[index[k]].push_back({primes[j], counts[k].count});
  }
  return samples;
}

EulerResult euler_from_samples(std::span<const CountSample> samples, const DimensionVector& d,
                               const DimensionVector& e) {
  const int bound = dimension_bound(d, e);
  EulerResult result;
  result.polynomial = interpolate_counting_polynomial(samples, bound);
  result.polynomial.dim_vector = e;
  result.chi = result.polynomial.evaluate(1);
  return result;
}

EulerResult euler_characteristic_detailed(PrimeSchedule& schedule, const DimensionVector& d,
                                          const DimensionVector& e, const EnumerationOptions& options) {
  const auto samples = sample_counts(schedule, d, {e}, options);
  EulerResult result = euler_from_samples(samples.front(), d, e);
  result.skipped_primes = schedule.skipped();
  return result;
}

EulerResult euler_characteristic_detailed(const Representation& rep, const DimensionVector& e,
                                          const EnumerationOptions& options) {
  PrimeSchedule schedule(rep);
  return euler_characteristic_detailed(schedule, rep.dims(), e, options);
}

Integer euler_characteristic(const Representation& rep, const DimensionVector& e, const EnumerationOptions& options) {
  return euler_characteristic_detailed(rep, e, options).chi;
}

FPolynomial f_polynomial(const Representation& rep, const EnumerationOptions& options) {
  PrimeSchedule schedule(rep);
  const auto targets = box(rep.dims());
  const auto samples = sample_counts(schedule, rep.dims(), targets, options);
  FPolynomial f(rep.quiver().num_vertices());
  for (std::size_t t = 0; t < targets.size(); ++t)
    f.add_term(targets[t].entries(), euler_from_samples(samples[t], rep.dims(), targets[t]).chi);
  return f;
}

}  // namespace quivergrass
