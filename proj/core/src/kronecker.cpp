#include "quivergrass/kronecker.hpp"

#include "quivergrass/error.hpp"

namespace quivergrass {

Integer binom_ext(const Integer& n, long k) {
  if (k < 0) return 0;
  Integer num = 1;
  Integer den = 1;
  for (long i = 0; i < k; ++i) {
    num *= n - i;
    den *= i + 1;
  }
  Integer out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

Integer ordinary_grassmannian_chi(long m, long e) {
  if (e < 0 || e > m) return 0;
  return binom_ext(m, e);
}

ProjectivePoint ProjectivePoint::infinity() {
  ProjectivePoint p;
  p.infinite_ = true;
  return p;
}

ProjectivePoint ProjectivePoint::parse(const std::string& text) {
  if (text == "inf" || text == "infinity" || text == "oo") return infinity();
  return ProjectivePoint(parse_rational(text));
}

std::string ProjectivePoint::to_string() const { return infinite_ ? "inf" : value_.get_str(); }

DimensionVector KroneckerKind::dims() const {
  if (m < 1) throw Error(ErrorKind::out_of_range, "Kronecker parameter m must be >= 1");
  switch (family) {
    case KroneckerFamily::preprojective: return {m - 1, m};
    case KroneckerFamily::preinjective: return {m, m - 1};
    case KroneckerFamily::regular: return {m, m};
  }
  return {};
}

std::string KroneckerKind::to_string() const {
  switch (family) {
    case KroneckerFamily::preprojective: return "pr(" + std::to_string(m) + ")";
    case KroneckerFamily::preinjective: return "inj(" + std::to_string(m) + ")";
    case KroneckerFamily::regular: return "reg_" + lambda.to_string() + "(" + std::to_string(m) + ")";
  }
  return "?";
}

KroneckerFamily parse_kronecker_family(const std::string& text) {
  if (text == "pr" || text == "preprojective") return KroneckerFamily::preprojective;
  if (text == "inj" || text == "preinjective") return KroneckerFamily::preinjective;
  if (text == "reg" || text == "regular") return KroneckerFamily::regular;
  throw Error(ErrorKind::parse_error, "unknown Kronecker family '" + text + "' (pr, inj, reg)");
}

Integer kronecker_chi(const KroneckerKind& kind, const DimensionVector& e) {
  const DimensionVector d = kind.dims();
  if (e.size() != 2 || !e.fits_in(d)) {
    throw Error(ErrorKind::out_of_range, e.to_string() + " outside 0 <= e <= " + d.to_string());
  }
  const long m = kind.m;
  const long e1 = e[0];
  const long e2 = e[1];
  switch (kind.family) {
    case KroneckerFamily::preprojective:
      return binom_ext(m - e1, e2 - e1) * binom_ext(e2 - 1, e1);
    case KroneckerFamily::preinjective:
      return binom_ext(e2 + 1, e2 - e1 + 1) * binom_ext(m - e1 - 1, m - e2 - 1);
    case KroneckerFamily::regular:
      return binom_ext(m - e1, e2 - e1) * binom_ext(e2, e1);
  }
  return 0;
}

Representation build_kronecker(const KroneckerKind& kind) {
  const DimensionVector d = kind.dims();
  const auto m = static_cast<std::size_t>(kind.m);
  const bool rational = kind.family == KroneckerFamily::regular && !kind.lambda.is_infinity() &&
                        kind.lambda.value().get_den() != 1;
  const ScalarDomain domain = rational ? ScalarDomain::rationals() : ScalarDomain::integers();
  const Scalar zero = zero_of(domain);
  const Scalar one = one_of(domain);
  const auto rows = static_cast<std::size_t>(d[1]);
  const auto cols = static_cast<std::size_t>(d[0]);
  Matrix<Scalar> phi1(rows, cols, zero);
  Matrix<Scalar> phi2(rows, cols, zero);

  switch (kind.family) {
    case KroneckerFamily::preprojective:
      // m x (m-1): identity over a zero row, and a zero row over identity.
      for (std::size_t i = 0; i + 1 < m; ++i) {
        phi1(i, i) = one;
        phi2(i + 1, i) = one;
      }
      break;
    case KroneckerFamily::preinjective:
      // (m-1) x m: [I | 0] and [0 | I].
      for (std::size_t i = 0; i + 1 < m; ++i) {
        phi1(i, i) = one;
        phi2(i, i + 1) = one;
      }
      break;
    case KroneckerFamily::regular: {
      Matrix<Scalar>& identity = kind.lambda.is_infinity() ? phi2 : phi1;
      Matrix<Scalar>& jordan = kind.lambda.is_infinity() ? phi1 : phi2;
      const Scalar eigen = kind.lambda.is_infinity()
                               ? zero
                               : (rational ? Scalar(kind.lambda.value()) : Scalar(Integer(kind.lambda.value().get_num())));
      for (std::size_t i = 0; i < m; ++i) {
        identity(i, i) = one;
        jordan(i, i) = eigen;
        if (i + 1 < m) jordan(i, i + 1) = one;
      }
      break;
    }
  }
  std::vector<Matrix<Scalar>> mats;
  mats.push_back(std::move(phi1));
  mats.push_back(std::move(phi2));
  return Representation(Quiver::kronecker(), d, std::move(mats), domain);
}

}  // namespace quivergrass
