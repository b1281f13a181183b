#include "quivergrass/subspace.hpp"

#include <algorithm>

#include "quivergrass/error.hpp"
#include "quivergrass/linalg.hpp"

namespace quivergrass {

namespace {

void require_prime_rep(const Representation& rep, std::uint32_t p) {
  validate_representation(rep);
  if (!rep.domain().is_prime_field() || rep.domain().prime != p) {
    throw Error(ErrorKind::domain_mismatch,
                "representation over " + rep.domain().to_string() + ", subspaces over F_" + std::to_string(p));
  }
}

void require_matching_tuple(const Representation& rep, const SubspaceTuple& n) {
  require_prime_rep(rep, n.prime);
  if (n.spaces.size() != rep.quiver().num_vertices()) {
    throw Error(ErrorKind::out_of_range, "subspace tuple has wrong vertex count");
  }
  for (std::size_t v = 0; v < n.spaces.size(); ++v) {
    if (n.spaces[v].prime() != n.prime) {
      throw Error(ErrorKind::domain_mismatch, "subspace at vertex " + std::to_string(v + 1) + " over another prime");
    }
    if (n.spaces[v].ambient_dim() != static_cast<std::size_t>(rep.dims()[v])) {
      throw Error(ErrorKind::out_of_range, "subspace at vertex " + std::to_string(v + 1) + " has wrong ambient space");
    }
  }
}

std::vector<std::uint32_t> apply(const Matrix<std::uint32_t>& m, std::span<const std::uint32_t> v, std::uint32_t p) {
  std::vector<std::uint32_t> out(m.rows(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) acc = (acc + std::uint64_t{m(r, c)} * v[c]) % p;
    out[r] = static_cast<std::uint32_t>(acc);
  }
  return out;
}

std::vector<std::size_t> non_pivots(const Subspace& s) {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < s.ambient_dim(); ++c)
    if (!std::binary_search(s.pivots().begin(), s.pivots().end(), c)) out.push_back(c);
  return out;
}

}  // namespace

Subspace Subspace::span(std::uint32_t p, std::size_t ambient_dim, const Matrix<std::uint32_t>& generators) {
  if (generators.rows() > 0 && generators.cols() != ambient_dim) {
    throw Error(ErrorKind::out_of_range, "generator width differs from ambient dimension");
  }
  Matrix<std::uint32_t> m = generators;
  auto pivots = row_reduce(m, PrimeField(p));
  m.truncate_rows(pivots.size());
  if (m.rows() == 0) m = Matrix<std::uint32_t>(0, ambient_dim);
  return Subspace(p, ambient_dim, std::move(m), std::move(pivots));
}

Subspace Subspace::zero(std::uint32_t p, std::size_t ambient_dim) {
  return Subspace(p, ambient_dim, Matrix<std::uint32_t>(0, ambient_dim), {});
}

Subspace Subspace::full(std::uint32_t p, std::size_t ambient_dim) {
  std::vector<std::size_t> pivots(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) pivots[i] = i;
  return Subspace(p, ambient_dim, Matrix<std::uint32_t>::identity(ambient_dim, 0, 1), std::move(pivots));
}

Subspace Subspace::from_echelon(std::uint32_t p, Matrix<std::uint32_t> basis) {
  Subspace s = span(p, basis.cols(), basis);
  if (!(s.basis_ == basis)) {
    throw Error(ErrorKind::invalid_argument, "basis is not reduced echelon with full row rank");
  }
  return s;
}

std::vector<std::uint32_t> Subspace::reduce(std::span<const std::uint32_t> v) const {
  std::vector<std::uint32_t> out(v.begin(), v.end());
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    const std::uint32_t factor = out[pivots_[r]];
    if (factor == 0) continue;
    for (std::size_t c = 0; c < ambient_; ++c)
      out[c] = sub_mod(out[c], mul_mod(factor, basis_(r, c), prime_), prime_);
  }
  return out;
}

bool Subspace::contains(std::span<const std::uint32_t> v) const {
  auto rest = reduce(v);
  return std::all_of(rest.begin(), rest.end(), [](std::uint32_t x) { return x == 0; });
}

DimensionVector SubspaceTuple::dims() const {
  std::vector<int> d;
  for (const auto& s : spaces) d.push_back(static_cast<int>(s.dim()));
  return DimensionVector(std::move(d));
}

SubspaceTuple zero_tuple(const Representation& rep) {
  require_prime_rep(rep, rep.domain().prime);
  SubspaceTuple t{rep.domain().prime, {}};
  for (int d : rep.dims()) t.spaces.push_back(Subspace::zero(t.prime, static_cast<std::size_t>(d)));
  return t;
}

SubspaceTuple full_tuple(const Representation& rep) {
  require_prime_rep(rep, rep.domain().prime);
  SubspaceTuple t{rep.domain().prime, {}};
  for (int d : rep.dims()) t.spaces.push_back(Subspace::full(t.prime, static_cast<std::size_t>(d)));
  return t;
}

bool is_subrepresentation(const Representation& rep, const SubspaceTuple& n) {
  require_matching_tuple(rep, n);
  const std::uint32_t p = n.prime;
  const auto mats = mod_matrices(rep, p);
  for (std::size_t a = 0; a < rep.quiver().num_arrows(); ++a) {
    const Arrow& arr = rep.quiver().arrows()[a];
    const Subspace& src = n.spaces[arr.source];
    for (std::size_t r = 0; r < src.dim(); ++r) {
      if (!n.spaces[arr.target].contains(apply(mats[a], src.basis().row(r), p))) return false;
    }
  }
  return true;
}

Representation sub_representation(const Representation& rep, const SubspaceTuple& n) {
  require_matching_tuple(rep, n);
  const std::uint32_t p = n.prime;
  const auto mats = mod_matrices(rep, p);
  std::vector<Matrix<Scalar>> out;
  for (std::size_t a = 0; a < rep.quiver().num_arrows(); ++a) {
    const Arrow& arr = rep.quiver().arrows()[a];
    const Subspace& src = n.spaces[arr.source];
    const Subspace& tgt = n.spaces[arr.target];
    Matrix<Scalar> m(tgt.dim(), src.dim(), Scalar(ModInt{0, p}));
    for (std::size_t c = 0; c < src.dim(); ++c) {
      auto image = apply(mats[a], src.basis().row(c), p);
      if (!tgt.contains(image)) throw Error(ErrorKind::invalid_argument, "tuple is not a subrepresentation");
      // In reduced echelon form the coordinate on basis row r is the entry at its pivot.
      for (std::size_t r = 0; r < tgt.dim(); ++r) m(r, c) = Scalar(ModInt{image[tgt.pivots()[r]], p});
    }
    out.push_back(std::move(m));
  }
  return Representation(rep.quiver(), n.dims(), std::move(out), rep.domain());
}

Representation quotient_representation(const Representation& rep, const SubspaceTuple& n) {
  require_matching_tuple(rep, n);
  const std::uint32_t p = n.prime;
  const auto mats = mod_matrices(rep, p);
  std::vector<std::vector<std::size_t>> free_cols;
  std::vector<int> qdims;
  for (const Subspace& s : n.spaces) {
    free_cols.push_back(non_pivots(s));
    qdims.push_back(static_cast<int>(free_cols.back().size()));
  }
  std::vector<Matrix<Scalar>> out;
  for (std::size_t a = 0; a < rep.quiver().num_arrows(); ++a) {
    const Arrow& arr = rep.quiver().arrows()[a];
    const auto& src_free = free_cols[arr.source];
    const auto& tgt_free = free_cols[arr.target];
    Matrix<Scalar> m(tgt_free.size(), src_free.size(), Scalar(ModInt{0, p}));
    for (std::size_t c = 0; c < src_free.size(); ++c) {
      std::vector<std::uint32_t> unit(static_cast<std::size_t>(rep.dims()[arr.source]), 0);
      unit[src_free[c]] = 1;
      auto image = n.spaces[arr.target].reduce(apply(mats[a], unit, p));
      for (std::size_t r = 0; r < tgt_free.size(); ++r) m(r, c) = Scalar(ModInt{image[tgt_free[r]], p});
    }
    out.push_back(std::move(m));
  }
  return Representation(rep.quiver(), DimensionVector(std::move(qdims)), std::move(out), rep.domain());
}

}  // namespace quivergrass
