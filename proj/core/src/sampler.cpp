#include "quivergrass/sampler.hpp"

#include <algorithm>

#include "quivergrass/error.hpp"
#include "quivergrass/euler.hpp"
#include "quivergrass/io.hpp"
#include "quivergrass/linalg.hpp"
#include "quivergrass/rng.hpp"
#include "quivergrass/subspace.hpp"

namespace quivergrass {

Representation sample_general_rep(const Quiver& q, const DimensionVector& d, std::uint64_t seed, long bound) {
  if (bound < 2) throw Error(ErrorKind::invalid_argument, "sampling bound must be at least 2");
  if (d.size() != q.num_vertices()) throw Error(ErrorKind::out_of_range, "dimension vector has wrong length");
  SeededRng rng(seed);
  std::vector<Matrix<Scalar>> matrices;
  for (const auto& a : q.arrows()) {
    Matrix<Scalar> m(static_cast<std::size_t>(d[a.target]), static_cast<std::size_t>(d[a.source]));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = Scalar(static_cast<long>(rng.draw(-bound, bound)));
    matrices.push_back(std::move(m));
  }
  return Representation(q, d, std::move(matrices));
}

nlohmann::json SmoothnessReport::to_json() const {
  nlohmann::json dims = nlohmann::json::array();
  for (auto [dim, count] : tangent_dims) dims.push_back({{"tangent_dim", dim}, {"points", count}});
  return {{"prime", prime},
          {"e", e.entries()},
          {"expected_dim", expected_dim},
          {"points", points},
          {"tangent_dims", dims},
          {"verdict", smooth_consistent ? "smooth-consistent" : "inconsistent"}};
}

SmoothnessReport smoothness_probe(const Representation& rep, const DimensionVector& e, std::uint32_t p,
                                  const EnumerationOptions& options) {
  SmoothnessReport report;
  report.prime = p;
  report.e = e;
  report.expected_dim = euler_form(rep.quiver(), e, rep.dims() - e);
  const Representation reduced = reduce_mod(rep, p);
  report.points = for_each_subrep(
      reduced, e,
      [&](const SubspaceTuple& n) {
        const auto tangent = hom_dim(sub_representation(reduced, n), quotient_representation(reduced, n));
        ++report.tangent_dims[tangent];
      },
      options);
  report.smooth_consistent =
      report.tangent_dims.size() <= 1 &&
      (report.tangent_dims.empty() ||
       static_cast<long>(report.tangent_dims.begin()->first) == report.expected_dim);
  return report;
}

QuarticForm::QuarticForm(Polynomial f) : f_(std::move(f)) {
  if (f_.num_vars() != 3 || f_.is_zero() || !f_.is_homogeneous(4))
    throw Error(ErrorKind::degenerate_form, "not a nonzero ternary quartic form");
  for (std::size_t i = 0; i < 3; ++i) partials_[i] = f_.derivative(i);
}

std::uint32_t QuarticForm::evaluate_mod(const std::array<std::uint32_t, 3>& v, std::uint32_t p) const {
  return f_.evaluate_mod(v, p);
}

bool QuarticForm::is_singular_mod(const std::array<std::uint32_t, 3>& v, std::uint32_t p) const {
  if (f_.evaluate_mod(v, p) != 0) return false;
  return std::all_of(partials_.begin(), partials_.end(),
                     [&](const Polynomial& g) { return g.evaluate_mod(v, p) == 0; });
}

namespace {

void require_example4_shape(const Representation& rep) {
  if (!(rep.quiver() == Quiver::kronecker(4)) || rep.dims() != DimensionVector{3, 4})
    throw Error(ErrorKind::invalid_argument,
                "expected a (3,4) representation of the 4-arrow Kronecker quiver");
}

Integer integer_entry(const Scalar& s) {
  const Rational r = s.to_rational();
  if (r.get_den() != 1) throw Error(ErrorKind::invalid_argument, "expected integer matrix entries");
  return r.get_num();
}

}  // namespace

QuarticForm example4_quartic(const Representation& rep) {
  require_example4_shape(rep);
  PolynomialMatrix columns(4, 4, Polynomial(3));
  for (std::size_t k = 0; k < 4; ++k) {
    const auto& phi = rep.matrix(k);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        Exponent exp(3, 0);
        exp[j] = 1;
        columns(i, k).add_term(exp, integer_entry(phi(i, j)));
      }
  }
  Polynomial f = determinant(columns);
  if (f.is_zero())
    throw Error(ErrorKind::degenerate_form, "det[phi_1 v | ... | phi_4 v] vanishes identically; try another seed");
  return QuarticForm(std::move(f));
}

std::vector<std::array<std::uint32_t, 3>> projective_plane_points(std::uint32_t p) {
  std::vector<std::array<std::uint32_t, 3>> points;
  points.push_back({0, 0, 1});
  for (std::uint32_t c = 0; c < p; ++c) points.push_back({0, 1, c});
  for (std::uint32_t b = 0; b < p; ++b)
    for (std::uint32_t c = 0; c < p; ++c) points.push_back({1, b, c});
  return points;
}

bool Example4Report::gates_passed() const {
  return is_quartic && std::all_of(per_prime.begin(), per_prime.end(),
                                   [](const PrimeWitness& w) { return w.smooth && w.match; });
}

nlohmann::json Example4Report::to_json() const {
  auto point_list = [](const std::vector<std::array<std::uint32_t, 3>>& pts) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& v : pts) out.push_back(v);
    return out;
  };
  nlohmann::json smooth = nlohmann::json::array();
  nlohmann::json counts = nlohmann::json::array();
  for (const auto& w : per_prime) {
    smooth.push_back({{"prime", w.prime}, {"smooth", w.smooth}, {"singular_points", point_list(w.singular_points)}});
    counts.push_back({{"prime", w.prime},
                      {"curve_points", w.curve_points},
                      {"grassmannian_points", integer_to_json(w.grassmannian_points)},
                      {"rank_deficient_points", point_list(w.rank_deficient_points)},
                      {"match", w.match}});
  }
  return {{"quartic", quartic},
          {"is_quartic", is_quartic},
          {"smooth_over_each_p", smooth},
          {"point_count_match", counts},
          {"chi", chi ? nlohmann::json(*chi) : nlohmann::json(nullptr)},
          {"interpolation_non_polynomial", interpolation_non_polynomial},
          {"interpolation_message", interpolation_message}};
}

Example4Report example4_witnesses(const Representation& rep, const std::vector<std::uint32_t>& primes,
                                  const EnumerationOptions& options) {
  Example4Report report;
  const QuarticForm f = example4_quartic(rep);
  report.quartic = f.to_string();
  report.is_quartic = true;
  const DimensionVector e{1, 3};

  std::vector<std::uint32_t> sorted = primes;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (auto p : sorted) {
    ScalarDomain::prime_field(p);  // validates p
    PrimeWitness w;
    w.prime = p;
    const Representation reduced = reduce_mod(rep, p);
    const auto phis = mod_matrices(reduced, p);
    const PrimeField field(p);
    for (const auto& v : projective_plane_points(p)) {
      if (f.evaluate_mod(v, p) != 0) continue;
      ++w.curve_points;
      if (f.is_singular_mod(v, p)) w.singular_points.push_back(v);
      Matrix<std::uint32_t> images(4, 4, 0);
      for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t i = 0; i < 4; ++i) {
          std::uint32_t acc = 0;
          for (std::size_t j = 0; j < 3; ++j) acc = add_mod(acc, mul_mod(phis[k](i, j), v[j], p), p);
          images(i, k) = acc;
        }
      if (rank(images, field) < 3) w.rank_deficient_points.push_back(v);
    }
    w.smooth = w.singular_points.empty();
    w.grassmannian_points = count_subreps(reduced, e, options).count;
    w.match = w.rank_deficient_points.empty() && w.grassmannian_points == w.curve_points;
    report.per_prime.push_back(std::move(w));
  }

  try {
    euler_characteristic(rep, e, options);
    report.interpolation_message = "interpolation unexpectedly produced a polynomial count";
  } catch (const Error& err) {
    report.interpolation_non_polynomial = err.kind() == ErrorKind::non_polynomial_count;
    report.interpolation_message = err.what();
  }

  // Smooth plane quartic: genus (4-1)(4-2)/2 = 3, chi = 2 - 2g.
  if (!report.per_prime.empty() && report.gates_passed()) report.chi = -4;
  return report;
}

Example4Report example4_verify(const Representation& rep, const std::vector<std::uint32_t>& primes,
                               const EnumerationOptions& options) {
  Example4Report report = example4_witnesses(rep, primes, options);
  for (const auto& w : report.per_prime) {
    if (!w.smooth) {
      const auto& v = w.singular_points.front();
      throw Error(ErrorKind::smoothness_failure,
                  "quartic is singular mod " + std::to_string(w.prime) + " at (" + std::to_string(v[0]) + ":" +
                      std::to_string(v[1]) + ":" + std::to_string(v[2]) + ")",
                  w.prime);
    }
    if (!w.match)
      throw Error(ErrorKind::count_mismatch,
                  "mod " + std::to_string(w.prime) + ": " + std::to_string(w.curve_points) + " curve points, " +
                      w.grassmannian_points.get_str() + " subrepresentations, " +
                      std::to_string(w.rank_deficient_points.size()) + " rank-deficient points",
                  w.prime);
  }
  return report;
}

nlohmann::json PositivityReport::to_json() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& entry : entries) {
    nlohmann::json j{{"e", entry.e.entries()}};
    j["chi"] = entry.chi ? integer_to_json(*entry.chi) : nlohmann::json(nullptr);
    if (entry.refusal) j["refusal"] = *entry.refusal;
    if (entry.forwarded_chi) j["forwarded_chi"] = *entry.forwarded_chi;
    list.push_back(std::move(j));
  }
  nlohmann::json neg = nlohmann::json::array();
  for (const auto& e : negative) neg.push_back(e.entries());
  return {{"rigid", rigid}, {"entries", list}, {"negative", neg}};
}

PositivityReport positivity_scan(const Representation& rep, bool require_rigid, const EnumerationOptions& options,
                                 const Example4Report* counterexample) {
  if (hom_dim(rep, rep) != 1) throw Error(ErrorKind::invalid_argument, "representation is not a brick");
  PositivityReport report;
  report.rigid = is_rigid(rep);
  if (require_rigid && !report.rigid) throw Error(ErrorKind::invalid_argument, "representation is not rigid");

  PrimeSchedule schedule(rep);
  for (const auto& e : box(rep.dims())) {
    PositivityEntry entry{e, std::nullopt, std::nullopt, std::nullopt};
    try {
      entry.chi = euler_characteristic_detailed(schedule, rep.dims(), e, options).chi;
      if (*entry.chi < 0) report.negative.push_back(e);
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::non_polynomial_count) throw;
      entry.refusal = err.what();
      if (counterexample && counterexample->chi && e == DimensionVector{1, 3}) {
        entry.forwarded_chi = counterexample->chi;
        if (*counterexample->chi < 0) report.negative.push_back(e);
      }
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace quivergrass
