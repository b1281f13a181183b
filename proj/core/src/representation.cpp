#include "quivergrass/representation.hpp"

#include "quivergrass/error.hpp"
#include "quivergrass/linalg.hpp"

namespace quivergrass {

namespace {

void require_same_quiver(const Representation& a, const Representation& b) {
  if (!(a.quiver() == b.quiver())) {
    throw Error(ErrorKind::quiver_mismatch, a.quiver().to_string() + " vs " + b.quiver().to_string());
  }
}

void require_same_domain(const Representation& a, const Representation& b) {
  if (!(a.domain() == b.domain())) {
    throw Error(ErrorKind::mixed_scalar_domains,
                a.domain().to_string() + " vs " + b.domain().to_string());
  }
}

/// Builds the linear system whose kernel is Hom(A, B); unknowns are the
/// entries of g_v : A_v -> B_v stacked vertex by vertex.
template <typename Field>
std::size_t hom_dim_over(const Quiver& q, const DimensionVector& da, const DimensionVector& db,
                         const std::vector<Matrix<typename Field::value_type>>& fa,
                         const std::vector<Matrix<typename Field::value_type>>& fb,
                         const Field& field) {
  const std::size_t n = q.num_vertices();
  std::vector<std::size_t> offset(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v)
    offset[v + 1] = offset[v] + static_cast<std::size_t>(db[v]) * static_cast<std::size_t>(da[v]);
  const std::size_t unknowns = offset[n];
  if (unknowns == 0) return 0;

  std::size_t equations = 0;
  for (const Arrow& arr : q.arrows())
    equations += static_cast<std::size_t>(db[arr.target]) * static_cast<std::size_t>(da[arr.source]);

  Matrix<typename Field::value_type> system(equations, unknowns, field.zero());
  std::size_t row = 0;
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const std::size_t j = q.arrows()[a].source;
    const std::size_t i = q.arrows()[a].target;
    const auto& phi_a = fa[a];  // da[i] x da[j]
    const auto& phi_b = fb[a];  // db[i] x db[j]
    // (g_i phi_a - phi_b g_j)[r][c] = 0
    for (std::size_t r = 0; r < static_cast<std::size_t>(db[i]); ++r) {
      for (std::size_t c = 0; c < static_cast<std::size_t>(da[j]); ++c, ++row) {
        for (std::size_t k = 0; k < static_cast<std::size_t>(da[i]); ++k) {
          auto& slot = system(row, offset[i] + r * static_cast<std::size_t>(da[i]) + k);
          slot = field.add(slot, phi_a(k, c));
        }
        for (std::size_t k = 0; k < static_cast<std::size_t>(db[j]); ++k) {
          auto& slot = system(row, offset[j] + k * static_cast<std::size_t>(da[j]) + c);
          slot = field.sub(slot, phi_b(r, k));
        }
      }
    }
  }
  return unknowns - rank(std::move(system), field);
}

}  // namespace

Representation::Representation(Quiver quiver, DimensionVector dims, std::vector<Matrix<Scalar>> matrices,
                               ScalarDomain domain)
    : quiver_(std::move(quiver)),
      dims_(std::move(dims)),
      matrices_(std::move(matrices)),
      domain_(domain) {}

Representation Representation::zero(const Quiver& quiver, ScalarDomain domain) {
  std::vector<Matrix<Scalar>> mats(quiver.num_arrows());
  return Representation(quiver, DimensionVector::zero(quiver.num_vertices()), std::move(mats), domain);
}

Representation Representation::simple(const Quiver& quiver, std::size_t vertex, ScalarDomain domain) {
  std::vector<int> d(quiver.num_vertices(), 0);
  d.at(vertex) = 1;
  std::vector<Matrix<Scalar>> mats;
  for (const Arrow& a : quiver.arrows())
    mats.emplace_back(static_cast<std::size_t>(d[a.target]), static_cast<std::size_t>(d[a.source]),
                      zero_of(domain));
  return Representation(quiver, DimensionVector(d), std::move(mats), domain);
}

Representation Representation::from_integers(Quiver quiver, DimensionVector dims,
                                             const std::vector<std::vector<std::vector<long>>>& matrices) {
  std::vector<Matrix<Scalar>> mats;
  for (std::size_t a = 0; a < matrices.size(); ++a) {
    const auto& rows = matrices[a];
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    if (rows.empty() && a < quiver.num_arrows())
      cols = static_cast<std::size_t>(dims[quiver.arrows()[a].source]);
    Matrix<Scalar> m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw Error(ErrorKind::shape_mismatch, "ragged matrix", static_cast<std::int64_t>(a));
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = Scalar(rows[r][c]);
    }
    mats.push_back(std::move(m));
  }
  return Representation(std::move(quiver), std::move(dims), std::move(mats), ScalarDomain::integers());
}

void validate_representation(const Representation& rep) {
  const Quiver& q = rep.quiver();
  if (rep.dims().size() != q.num_vertices()) {
    throw Error(ErrorKind::out_of_range, "dimension vector has " + std::to_string(rep.dims().size()) +
                                             " entries for " + std::to_string(q.num_vertices()) + " vertices");
  }
  if (rep.matrices().size() != q.num_arrows()) {
    throw Error(ErrorKind::shape_mismatch,
                std::to_string(rep.matrices().size()) + " matrices for " + std::to_string(q.num_arrows()) + " arrows",
                static_cast<std::int64_t>(std::min(rep.matrices().size(), q.num_arrows())));
  }
  for (std::size_t a = 0; a < q.num_arrows(); ++a) {
    const Matrix<Scalar>& m = rep.matrices()[a];
    const auto want_rows = static_cast<std::size_t>(rep.dims()[q.arrows()[a].target]);
    const auto want_cols = static_cast<std::size_t>(rep.dims()[q.arrows()[a].source]);
    if (m.rows() != want_rows || m.cols() != want_cols) {
      throw Error(ErrorKind::shape_mismatch,
                  "arrow " + std::to_string(a + 1) + " expects " + std::to_string(want_rows) + "x" +
                      std::to_string(want_cols) + ", got " + std::to_string(m.rows()) + "x" +
                      std::to_string(m.cols()),
                  static_cast<std::int64_t>(a));
    }
    for (const Scalar& s : m.data()) {
      if (!(s.domain() == rep.domain())) {
        throw Error(ErrorKind::mixed_scalar_domains, "arrow " + std::to_string(a + 1) + " has an entry in " +
                                                         s.domain().to_string() + ", representation is over " +
                                                         rep.domain().to_string());
      }
    }
  }
}

Representation direct_sum(const Representation& a, const Representation& b) {
  require_same_quiver(a, b);
  require_same_domain(a, b);
  validate_representation(a);
  validate_representation(b);
  const Quiver& q = a.quiver();
  const Scalar zero = zero_of(a.domain());
  std::vector<Matrix<Scalar>> mats;
  for (std::size_t k = 0; k < q.num_arrows(); ++k) {
    const auto& ma = a.matrix(k);
    const auto& mb = b.matrix(k);
    Matrix<Scalar> m(ma.rows() + mb.rows(), ma.cols() + mb.cols(), zero);
    for (std::size_t r = 0; r < ma.rows(); ++r)
      for (std::size_t c = 0; c < ma.cols(); ++c) m(r, c) = ma(r, c);
    for (std::size_t r = 0; r < mb.rows(); ++r)
      for (std::size_t c = 0; c < mb.cols(); ++c) m(ma.rows() + r, ma.cols() + c) = mb(r, c);
    mats.push_back(std::move(m));
  }
  return Representation(q, a.dims() + b.dims(), std::move(mats), a.domain());
}

Representation dual_representation(const Representation& rep) {
  validate_representation(rep);
  std::vector<Matrix<Scalar>> mats;
  mats.reserve(rep.matrices().size());
  for (const auto& m : rep.matrices()) mats.push_back(m.transposed());
  return Representation(rep.quiver().opposite(), rep.dims(), std::move(mats), rep.domain());
}

Representation reduce_mod(const Representation& rep, std::uint32_t p) {
  validate_representation(rep);
  const ScalarDomain target = ScalarDomain::prime_field(p);
  if (rep.domain().is_prime_field() && rep.domain().prime != p) {
    throw Error(ErrorKind::domain_mismatch, "representation over " + rep.domain().to_string() +
                                                " cannot be reduced mod " + std::to_string(p));
  }
  std::vector<Matrix<Scalar>> mats;
  for (const auto& m : rep.matrices())
    mats.push_back(map_entries(m, [p](const Scalar& s) { return Scalar(ModInt{s.reduce_mod(p), p}); }));
  return Representation(rep.quiver(), rep.dims(), std::move(mats), target);
}

Representation to_rationals(const Representation& rep) {
  validate_representation(rep);
  std::vector<Matrix<Scalar>> mats;
  for (const auto& m : rep.matrices())
    mats.push_back(map_entries(m, [](const Scalar& s) { return Scalar(s.to_rational()); }));
  return Representation(rep.quiver(), rep.dims(), std::move(mats), ScalarDomain::rationals());
}

std::vector<Matrix<Rational>> rational_matrices(const Representation& rep) {
  std::vector<Matrix<Rational>> out;
  for (const auto& m : rep.matrices())
    out.push_back(map_entries(m, [](const Scalar& s) { return s.to_rational(); }));
  return out;
}

std::vector<Matrix<std::uint32_t>> mod_matrices(const Representation& rep, std::uint32_t p) {
  std::vector<Matrix<std::uint32_t>> out;
  for (const auto& m : rep.matrices())
    out.push_back(map_entries(m, [p](const Scalar& s) { return s.reduce_mod(p); }));
  return out;
}

std::vector<std::size_t> matrix_ranks(const Representation& rep) {
  validate_representation(rep);
  std::vector<std::size_t> ranks;
  if (rep.domain().is_prime_field()) {
    PrimeField f(rep.domain().prime);
    for (auto& m : mod_matrices(rep, rep.domain().prime)) ranks.push_back(rank(std::move(m), f));
  } else {
    for (auto& m : rational_matrices(rep)) ranks.push_back(rank(std::move(m), RationalField{}));
  }
  return ranks;
}

std::size_t hom_dim(const Representation& a, const Representation& b) {
  require_same_quiver(a, b);
  validate_representation(a);
  validate_representation(b);
  const bool a_mod = a.domain().is_prime_field();
  const bool b_mod = b.domain().is_prime_field();
  if (a_mod != b_mod || (a_mod && a.domain().prime != b.domain().prime)) {
    throw Error(ErrorKind::mixed_scalar_domains,
                "hom between " + a.domain().to_string() + " and " + b.domain().to_string());
  }
  if (a_mod) {
    const std::uint32_t p = a.domain().prime;
    return hom_dim_over(a.quiver(), a.dims(), b.dims(), mod_matrices(a, p), mod_matrices(b, p), PrimeField(p));
  }
  return hom_dim_over(a.quiver(), a.dims(), b.dims(), rational_matrices(a), rational_matrices(b),
                      RationalField{});
}

std::size_t ext1_dim(const Representation& rep) {
  const long form = euler_form(rep.quiver(), rep.dims(), rep.dims());
  const long hom = static_cast<long>(hom_dim(rep, rep));
  const long ext = hom - form;
  if (ext < 0) {
    throw Error(ErrorKind::negative_ext_dimension,
                "hom " + std::to_string(hom) + " - form " + std::to_string(form) + " < 0");
  }
  return static_cast<std::size_t>(ext);
}

bool is_rigid(const Representation& rep) { return ext1_dim(rep) == 0; }

}  // namespace quivergrass
