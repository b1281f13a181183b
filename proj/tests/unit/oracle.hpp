#pragma once

// Reference implementations used only by the tests. Subspaces are explicit
// sets of vectors (encoded base p), so nothing here shares code with the
// echelon-form machinery under test.

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <tuple>
#include <vector>

#include "quivergrass/matrix.hpp"
#include "quivergrass/representation.hpp"

namespace oracle {

using Code = std::uint64_t;
using VectorSet = std::set<Code>;

inline std::vector<std::uint32_t> decode(Code c, std::size_t m, std::uint32_t p) {
  std::vector<std::uint32_t> v(m);
  for (std::size_t i = 0; i < m; ++i) {
    v[i] = static_cast<std::uint32_t>(c % p);
    c /= p;
  }
  return v;
}

inline Code encode(const std::vector<std::uint32_t>& v, std::uint32_t p) {
  Code c = 0;
  for (std::size_t i = v.size(); i-- > 0;) c = c * p + v[i];
  return c;
}

inline Code power(std::uint32_t p, std::size_t k) {
  Code r = 1;
  while (k-- > 0) r *= p;
  return r;
}

/// All vectors sum_i c_i g_i.
inline VectorSet span_set(const std::vector<Code>& gens, std::size_t m, std::uint32_t p) {
  VectorSet out{0};
  for (Code g : gens) {
    const auto gv = decode(g, m, p);
    VectorSet next;
    for (Code x : out) {
      auto xv = decode(x, m, p);
      for (std::uint32_t c = 0; c < p; ++c) {
        std::vector<std::uint32_t> y(m);
        for (std::size_t i = 0; i < m; ++i) y[i] = static_cast<std::uint32_t>((xv[i] + std::uint64_t{c} * gv[i]) % p);
        next.insert(encode(y, p));
      }
    }
    out = std::move(next);
  }
  return out;
}

/// Every e-dimensional subspace of F_p^m, each as its set of vectors.
inline const std::vector<VectorSet>& all_subspaces(std::uint32_t p, std::size_t m, std::size_t e) {
  static std::map<std::tuple<std::uint32_t, std::size_t, std::size_t>, std::vector<VectorSet>> cache;
  auto [it, fresh] = cache.try_emplace({p, m, e});
  if (!fresh) return it->second;
  std::set<VectorSet> found;
  const Code total = power(p, m);
  const Code want = power(p, e);
  std::vector<Code> gens(e, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == e) {
      VectorSet s = span_set(gens, m, p);
      if (s.size() == want) found.insert(std::move(s));
      return;
    }
    // Any subspace has a basis listed in increasing code order.
    for (Code c = k == 0 ? 1 : gens[k - 1] + 1; c < total; ++c) {
      gens[k] = c;
      rec(k + 1);
    }
  };
  rec(0);
  it->second.assign(found.begin(), found.end());
  return it->second;
}

inline Code apply(const quivergrass::Matrix<std::uint32_t>& phi, Code x, std::uint32_t p) {
  const auto v = decode(x, phi.cols(), p);
  std::vector<std::uint32_t> y(phi.rows(), 0);
  for (std::size_t i = 0; i < phi.rows(); ++i) {
    std::uint64_t acc = 0;
    for (std::size_t j = 0; j < phi.cols(); ++j) acc += std::uint64_t{phi(i, j)} * v[j];
    y[i] = static_cast<std::uint32_t>(acc % p);
  }
  return encode(y, p);
}

/// Number of subrepresentations of dimension e by testing every tuple of
/// subspaces, every vector of every source space.
inline std::uint64_t count_subreps(const quivergrass::Representation& rep_mod_p,
                                   const quivergrass::DimensionVector& e) {
  const std::uint32_t p = rep_mod_p.domain().prime;
  const auto maps = quivergrass::mod_matrices(rep_mod_p, p);
  const auto& q = rep_mod_p.quiver();
  const std::size_t n = q.num_vertices();
  std::vector<std::vector<VectorSet>> candidates(n);
  for (std::size_t v = 0; v < n; ++v)
    candidates[v] = all_subspaces(p, static_cast<std::size_t>(rep_mod_p.dims()[v]), static_cast<std::size_t>(e[v]));
  std::vector<const VectorSet*> chosen(n, nullptr);
  std::uint64_t count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t v) {
    if (v == n) {
      for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        const auto& arr = q.arrows()[a];
        for (Code x : *chosen[arr.source])
          if (!chosen[arr.target]->count(apply(maps[a], x, p))) return;
      }
      ++count;
      return;
    }
    for (const auto& s : candidates[v]) {
      chosen[v] = &s;
      rec(v + 1);
    }
  };
  rec(0);
  return count;
}

}  // namespace oracle
