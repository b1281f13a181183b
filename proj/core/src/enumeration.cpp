#include "quivergrass/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <thread>
#include <unordered_map>

#include "quivergrass/error.hpp"
#include "quivergrass/modular.hpp"

namespace quivergrass {

Integer gaussian_binomial(long m, long e, std::uint64_t q) {
  if (q == 0) throw Error(ErrorKind::invalid_argument, "gaussian_binomial needs q >= 2");
  if (q == 1) throw Error(ErrorKind::degenerate_base, "q = 1 divides by zero; use the ordinary binomial");
  if (e < 0 || e > m) return 0;
  const Integer base(std::to_string(q));
  Integer num = 1;
  Integer den = 1;
  for (long k = 0; k < e; ++k) {
    Integer a, b;
    mpz_pow_ui(a.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(m - k));
    mpz_pow_ui(b.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(k + 1));
    num *= a - 1;
    den *= b - 1;
  }
  Integer out;
  mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return out;
}

// ---------------------------------------------------------------------------
// SubspaceStream

void SubspaceStream::reset(std::uint32_t p, std::size_t m, std::size_t e) {
  p_ = p;
  m_ = m;
  e_ = e;
  started_ = false;
  done_ = e > m;
  pivots_.resize(e);
  for (std::size_t i = 0; i < e; ++i) pivots_[i] = i;
  if (!done_) rebuild();
}

void SubspaceStream::rebuild() {
  free_.clear();
  for (std::size_t r = 0; r < e_; ++r) {
    std::size_t next_pivot = 0;
    for (std::size_t c = pivots_[r] + 1; c < m_; ++c) {
      while (next_pivot < e_ && pivots_[next_pivot] < c) ++next_pivot;
      if (next_pivot < e_ && pivots_[next_pivot] == c) continue;
      free_.emplace_back(r, c);
    }
  }
  odometer_.assign(free_.size(), 0);
  basis_ = Matrix<std::uint32_t>(e_, m_, 0);
  for (std::size_t r = 0; r < e_; ++r) basis_(r, pivots_[r]) = 1;
}

bool SubspaceStream::advance_pivots() {
  // Next e-combination of {0..m-1} in lexicographic order.
  std::size_t i = e_;
  while (i > 0) {
    --i;
    if (pivots_[i] < m_ - e_ + i) {
      ++pivots_[i];
      for (std::size_t j = i + 1; j < e_; ++j) pivots_[j] = pivots_[j - 1] + 1;
      return true;
    }
  }
  return false;
}

bool SubspaceStream::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    return true;
  }
  for (std::size_t i = odometer_.size(); i > 0; --i) {
    auto& digit = odometer_[i - 1];
    const auto [r, c] = free_[i - 1];
    if (digit + 1 < p_) {
      ++digit;
      basis_(r, c) = digit;
      return true;
    }
    digit = 0;
    basis_(r, c) = 0;
  }
  if (!advance_pivots()) {
    done_ = true;
    return false;
  }
  rebuild();
  return true;
}

Integer search_size_estimate(const DimensionVector& d, const DimensionVector& e, std::uint32_t p) {
  Integer total = 1;
  for (std::size_t i = 0; i < d.size(); ++i) total *= gaussian_binomial(d[i], e[i], p);
  return total;
}

// ---------------------------------------------------------------------------
// Subrepresentation search

namespace {

/// Reduced row echelon form of the first `nrows` rows (stride `ncols`) in
/// place; writes pivot columns and returns the rank. Nonzero rows end up first.
std::size_t echelonize(std::uint32_t* data, std::size_t nrows, std::size_t ncols, std::uint32_t p,
                       std::size_t* pivots) {
  std::size_t lead = 0;
  for (std::size_t col = 0; col < ncols && lead < nrows; ++col) {
    std::size_t sel = lead;
    while (sel < nrows && data[sel * ncols + col] == 0) ++sel;
    if (sel == nrows) continue;
    std::uint32_t* lead_row = data + lead * ncols;
    if (sel != lead) std::swap_ranges(lead_row, lead_row + ncols, data + sel * ncols);
    const std::uint32_t inv = inv_mod(lead_row[col], p);
    for (std::size_t c = col; c < ncols; ++c) lead_row[c] = mul_mod(lead_row[c], inv, p);
    for (std::size_t r = 0; r < nrows; ++r) {
      std::uint32_t* row = data + r * ncols;
      if (r == lead || row[col] == 0) continue;
      const std::uint32_t f = row[col];
      for (std::size_t c = col; c < ncols; ++c) row[c] = sub_mod(row[c], mul_mod(f, lead_row[c], p), p);
    }
    pivots[lead++] = col;
  }
  return lead;
}

/// Chosen subspace at one vertex: reduced echelon rows (any row order) plus
/// the pivot of each row.
struct VertexSpace {
  std::vector<std::uint32_t> rows;  // dim x width
  std::vector<std::size_t> pivots;
  std::size_t dim = 0;
  std::size_t width = 0;

  const std::uint32_t* row(std::size_t r) const { return rows.data() + r * width; }
};

struct Plan {
  std::uint32_t p = 0;
  std::vector<std::size_t> d;
  std::vector<std::size_t> e;
  std::vector<Arrow> arrows;
  std::vector<Matrix<std::uint32_t>> maps;
  std::vector<std::size_t> order;                      // vertices enumerated, in this order
  std::vector<std::vector<std::size_t>> incoming;      // per depth: arrows from earlier vertices
  std::vector<std::vector<std::size_t>> back;          // per depth: arrows back into chosen vertices
  std::vector<std::size_t> fibers;                  // independent set counted in closed form
  std::vector<std::vector<std::size_t>> fiber_in;   // arrows into each fiber vertex
  std::vector<std::vector<std::size_t>> fiber_out;  // arrows out of each fiber vertex
  // Leaves are tallied by (dim W_v, dim K_v) over the fibers, mixed radix.
  std::vector<std::uint64_t> hist_strides;
  std::uint64_t hist_size = 1;
  std::vector<std::vector<Integer>> gauss;  // gauss[m][k] at p
  std::size_t max_dim = 0;
};

/// Sparse-or-dense tally of leaf keys.
class Histogram {
 public:
  explicit Histogram(std::uint64_t size) {
    if (size <= kDenseLimit) dense_.assign(size, 0);
  }

  void add(std::uint64_t key, std::uint64_t n = 1) {
    if (!dense_.empty()) {
      dense_[key] += n;
    } else {
      sparse_[key] += n;
    }
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < dense_.size(); ++k)
      if (dense_[k] != 0) f(static_cast<std::uint64_t>(k), dense_[k]);
    for (const auto& [k, n] : sparse_) f(k, n);
  }

  void merge(const Histogram& other) {
    other.for_each([&](std::uint64_t k, std::uint64_t n) { add(k, n); });
  }

 private:
  static constexpr std::uint64_t kDenseLimit = 1 << 20;
  std::vector<std::uint64_t> dense_;
  std::unordered_map<std::uint64_t, std::uint64_t> sparse_;
};

/// Vertices to count in closed form: an independent set (no arrow between
/// two members, no loops) of maximal total weight, where a vertex weighs the
/// dimension e_v (d_v - e_v) of its Grassmannian. Exhaustive for small
/// quivers, greedy otherwise.
std::vector<bool> choose_fibers(const Quiver& q, const std::vector<std::size_t>& weight) {
  const std::size_t n = q.num_vertices();
  std::vector<std::uint64_t> adjacent(n, 0);
  std::vector<bool> looped(n, false);
  std::vector<bool> best(n, false);

  if (n <= 16) {
    for (const auto& a : q.arrows()) {
      if (a.source == a.target) looped[a.source] = true;
      adjacent[a.source] |= std::uint64_t{1} << a.target;
      adjacent[a.target] |= std::uint64_t{1} << a.source;
    }
    std::uint64_t best_mask = 0;
    std::size_t best_weight = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      std::size_t w = 0;
      bool ok = true;
      for (std::size_t v = 0; v < n && ok; ++v) {
        if (!(mask >> v & 1)) continue;
        ok = !looped[v] && (adjacent[v] & mask) == 0;
        w += weight[v];
      }
      if (ok && w > best_weight) {
        best_weight = w;
        best_mask = mask;
      }
    }
    for (std::size_t v = 0; v < n; ++v) best[v] = best_mask >> v & 1;
    return best;
  }

  std::vector<std::vector<std::size_t>> neighbours(n);
  for (const auto& a : q.arrows()) {
    if (a.source == a.target) looped[a.source] = true;
    neighbours[a.source].push_back(a.target);
    neighbours[a.target].push_back(a.source);
  }
  std::vector<std::size_t> by_weight(n);
  for (std::size_t v = 0; v < n; ++v) by_weight[v] = v;
  std::stable_sort(by_weight.begin(), by_weight.end(),
                   [&](std::size_t a, std::size_t b) { return weight[a] > weight[b]; });
  std::vector<bool> blocked(n, false);
  for (std::size_t v : by_weight) {
    if (blocked[v] || looped[v] || weight[v] == 0) continue;
    best[v] = true;
    for (std::size_t u : neighbours[v]) blocked[u] = true;
  }
  return best;
}

void check_count_input(const Representation& rep, const DimensionVector& e) {
  if (!rep.domain().is_prime_field()) {
    throw Error(ErrorKind::domain_mismatch, "point counting needs a representation over F_p, got " +
                                                rep.domain().to_string());
  }
  if (e.size() != rep.quiver().num_vertices() || !e.fits_in(rep.dims())) {
    throw Error(ErrorKind::out_of_range, "dimension vector " + e.to_string() + " outside 0 <= e <= " +
                                             rep.dims().to_string());
  }
}

/// `fiber_mask == nullptr` plans a full enumeration (visiting mode); the
/// entries of e at fiber vertices are not used.
Plan make_plan(const Representation& rep, const DimensionVector& e, const std::vector<bool>* fiber_mask) {
  const bool closed_form_fibers = fiber_mask != nullptr;
  const Quiver& q = rep.quiver();
  Plan plan;
  plan.p = rep.domain().prime;
  for (std::size_t v = 0; v < q.num_vertices(); ++v) {
    plan.d.push_back(static_cast<std::size_t>(rep.dims()[v]));
    plan.e.push_back(static_cast<std::size_t>(e[v]));
    plan.max_dim = std::max(plan.max_dim, plan.d.back());
  }
  plan.arrows = q.arrows();
  plan.maps = mod_matrices(rep, plan.p);

  std::vector<std::size_t> base_order;
  if (auto topo = q.topological_order()) {
    base_order = *topo;
  } else {
    for (std::size_t v = 0; v < q.num_vertices(); ++v) base_order.push_back(v);
  }
  std::vector<bool> is_fiber(q.num_vertices(), false);
  if (closed_form_fibers) is_fiber = *fiber_mask;
  for (std::size_t v : base_order) {
    if (is_fiber[v]) {
      plan.fibers.push_back(v);
    } else {
      plan.order.push_back(v);
    }
  }
  // Sinks enumerated last in visiting mode; their constraints are then all
  // incoming and never need a back check.
  if (!closed_form_fibers) {
    std::stable_partition(plan.order.begin(), plan.order.end(), [&](std::size_t v) { return !q.is_sink(v); });
  }

  std::vector<std::size_t> position(q.num_vertices(), std::numeric_limits<std::size_t>::max());
  for (std::size_t k = 0; k < plan.order.size(); ++k) position[plan.order[k]] = k;
  plan.incoming.resize(plan.order.size());
  plan.back.resize(plan.order.size());
  for (std::size_t a = 0; a < plan.arrows.size(); ++a) {
    const Arrow& arr = plan.arrows[a];
    const std::size_t ps = position[arr.source];
    const std::size_t pt = position[arr.target];
    if (pt == std::numeric_limits<std::size_t>::max() || ps == std::numeric_limits<std::size_t>::max())
      continue;  // touches a fiber vertex
    if (ps < pt) {
      plan.incoming[pt].push_back(a);
    } else {
      plan.back[ps].push_back(a);  // includes loops (ps == pt)
    }
  }
  plan.fiber_in.resize(plan.fibers.size());
  plan.fiber_out.resize(plan.fibers.size());
  for (std::size_t f = 0; f < plan.fibers.size(); ++f)
    for (std::size_t a = 0; a < plan.arrows.size(); ++a) {
      if (plan.arrows[a].target == plan.fibers[f]) plan.fiber_in[f].push_back(a);
      if (plan.arrows[a].source == plan.fibers[f]) plan.fiber_out[f].push_back(a);
    }

  std::uint64_t stride = 1;
  for (std::size_t v : plan.fibers) {
    plan.hist_strides.push_back(stride);
    stride *= (plan.d[v] + 1) * (plan.d[v] + 1);
  }
  plan.hist_size = stride;

  plan.gauss.assign(plan.max_dim + 1, {});
  for (std::size_t m = 0; m <= plan.max_dim; ++m)
    for (std::size_t k = 0; k <= m; ++k)
      plan.gauss[m].push_back(gaussian_binomial(static_cast<long>(m), static_cast<long>(k), plan.p));
  return plan;
}

class Searcher {
 public:
  using Visitor = std::function<void(const SubspaceTuple&)>;

  Searcher(const Plan& plan, std::atomic<std::uint64_t>& visited, std::uint64_t cap, const Visitor* visit)
      : plan_(plan), visited_(visited), cap_(cap), visit_(visit), histogram_(plan.hist_size) {
    const std::size_t n = plan.d.size();
    chosen_.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
      chosen_[v].width = plan.d[v];
      chosen_[v].rows.assign(plan.d[v] * plan.d[v], 0);
      chosen_[v].pivots.assign(plan.d[v], 0);
    }
    const std::size_t depth = plan.order.size();
    streams_.resize(depth);
    forced_.resize(depth);
    quotient_cols_.resize(depth);
    std::size_t max_rows = 0;
    for (std::size_t a = 0; a < plan.arrows.size(); ++a) max_rows += plan.d[plan.arrows[a].source];
    scratch_.assign(std::max<std::size_t>(1, max_rows) * std::max<std::size_t>(1, plan.max_dim), 0);
    scratch_pivots_.assign(std::max<std::size_t>(1, max_rows), 0);
    image_.assign(plan.max_dim, 0);
  }

  /// Runs the search, taking every `stride`-th candidate at the first
  /// enumerated vertex starting from `offset`.
  void run(std::size_t stride, std::size_t offset) {
    stride_ = stride;
    offset_ = offset;
    descend(0);
  }

  const Histogram& histogram() const { return histogram_; }
  std::uint64_t points() const { return points_; }

 private:
  /// Span of the images of chosen subspaces along `arrows` inside vertex v;
  /// result in `out` (rows, pivots, dim).
  void forced_span(std::size_t v, const std::vector<std::size_t>& arrows, VertexSpace& out) {
    const std::uint32_t p = plan_.p;
    const std::size_t width = plan_.d[v];
    std::size_t nrows = 0;
    for (std::size_t a : arrows) {
      const VertexSpace& src = chosen_[plan_.arrows[a].source];
      const Matrix<std::uint32_t>& phi = plan_.maps[a];
      for (std::size_t r = 0; r < src.dim; ++r, ++nrows) {
        const std::uint32_t* b = src.row(r);
        std::uint32_t* dst = scratch_.data() + nrows * width;
        for (std::size_t i = 0; i < width; ++i) {
          std::uint64_t acc = 0;
          for (std::size_t c = 0; c < src.width; ++c) acc += std::uint64_t{phi(i, c)} * b[c] % p;
          dst[i] = static_cast<std::uint32_t>(acc % p);
        }
      }
    }
    out.width = width;
    out.dim = echelonize(scratch_.data(), nrows, width, p, scratch_pivots_.data());
    out.rows.assign(scratch_.begin(), scratch_.begin() + static_cast<std::ptrdiff_t>(out.dim * width));
    out.pivots.assign(scratch_pivots_.begin(), scratch_pivots_.begin() + static_cast<std::ptrdiff_t>(out.dim));
  }

  static constexpr std::size_t kNotContained = std::numeric_limits<std::size_t>::max();

  /// Dimension of K = {x in V_v : phi_a x in N_target(a) for all a in arrows},
  /// or kNotContained when `inner` is not inside K.
  std::size_t preimage_dim(std::size_t v, const std::vector<std::size_t>& arrows, const VertexSpace& inner) {
    const std::uint32_t p = plan_.p;
    const std::size_t width = plan_.d[v];
    if (arrows.empty() || width == 0) return width;
    // Rows of `residual` are the coordinates of x -> (phi_a x mod N_t),
    // one block per arrow; K is its kernel.
    std::size_t nrows = 0;
    for (std::size_t a : arrows) nrows += plan_.d[plan_.arrows[a].target];
    residual_.assign(nrows * width, 0);
    std::size_t base = 0;
    for (std::size_t a : arrows) {
      const VertexSpace& tgt = chosen_[plan_.arrows[a].target];
      const Matrix<std::uint32_t>& phi = plan_.maps[a];
      for (std::size_t c = 0; c < width; ++c) {
        for (std::size_t i = 0; i < tgt.width; ++i) image_[i] = phi(i, c);
        reduce_against(tgt, image_.data());
        for (std::size_t i = 0; i < tgt.width; ++i) residual_[(base + i) * width + c] = image_[i];
      }
      base += tgt.width;
    }
    for (std::size_t r = 0; r < inner.dim; ++r) {
      const std::uint32_t* x = inner.row(r);
      for (std::size_t i = 0; i < nrows; ++i) {
        std::uint64_t acc = 0;
        for (std::size_t c = 0; c < width; ++c) acc += std::uint64_t{residual_[i * width + c]} * x[c] % p;
        if (acc % p != 0) return kNotContained;
      }
    }
    residual_pivots_.resize(std::max(nrows, width));
    return width - echelonize(residual_.data(), nrows, width, p, residual_pivots_.data());
  }

  /// Subtracts from `vec` its component along the echelon rows of `space`.
  void reduce_against(const VertexSpace& space, std::uint32_t* vec) const {
    const std::uint32_t p = plan_.p;
    for (std::size_t t = 0; t < space.dim; ++t) {
      const std::uint32_t f = vec[space.pivots[t]];
      if (f == 0) continue;
      const std::uint32_t* row = space.row(t);
      for (std::size_t i = 0; i < space.width; ++i) vec[i] = sub_mod(vec[i], mul_mod(f, row[i], p), p);
    }
  }

  /// Every arrow in `arrows` maps chosen_[v] into its (already chosen) target.
  bool back_arrows_ok(std::size_t v, const std::vector<std::size_t>& arrows) {
    const std::uint32_t p = plan_.p;
    const VertexSpace& src = chosen_[v];
    for (std::size_t a : arrows) {
      const VertexSpace& tgt = chosen_[plan_.arrows[a].target];
      const Matrix<std::uint32_t>& phi = plan_.maps[a];
      for (std::size_t r = 0; r < src.dim; ++r) {
        const std::uint32_t* b = src.row(r);
        for (std::size_t i = 0; i < tgt.width; ++i) {
          std::uint64_t acc = 0;
          for (std::size_t c = 0; c < src.width; ++c) acc += std::uint64_t{phi(i, c)} * b[c] % p;
          image_[i] = static_cast<std::uint32_t>(acc % p);
        }
        reduce_against(tgt, image_.data());
        for (std::size_t i = 0; i < tgt.width; ++i)
          if (image_[i] != 0) return false;
      }
    }
    return true;
  }

  void charge() {
    const std::uint64_t seen = visited_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (seen > cap_) {
      throw Error(ErrorKind::search_too_large,
                  "more than " + std::to_string(cap_) + " candidate subspaces visited; raise the cap");
    }
  }

  void descend(std::size_t depth) {
    if (depth == plan_.order.size()) {
      leaf();
      return;
    }
    const std::uint32_t p = plan_.p;
    const std::size_t v = plan_.order[depth];
    const std::size_t width = plan_.d[v];
    const std::size_t want = plan_.e[v];

    VertexSpace& forced = forced_[depth];
    forced_span(v, plan_.incoming[depth], forced);
    if (forced.dim > want) return;

    auto& qcols = quotient_cols_[depth];
    qcols.clear();
    for (std::size_t c = 0, k = 0; c < width; ++c) {
      if (k < forced.dim && forced.pivots[k] == c) {
        ++k;
      } else {
        qcols.push_back(c);
      }
    }

    SubspaceStream& stream = streams_[depth];
    stream.reset(p, width - forced.dim, want - forced.dim);
    VertexSpace& here = chosen_[v];
    std::size_t index = 0;
    while (stream.next()) {
      if (depth == 0 && (index++ % stride_) != offset_) continue;
      charge();
      const Matrix<std::uint32_t>& u = stream.current();
      const auto& upiv = stream.pivots();
      // N_v = forced + lift(U): forced rows reduced against the lifted rows,
      // followed by the lifted rows themselves.
      here.dim = want;
      std::copy(forced.rows.begin(), forced.rows.end(), here.rows.begin());
      std::copy(forced.pivots.begin(), forced.pivots.end(), here.pivots.begin());
      for (std::size_t j = 0; j < u.rows(); ++j) {
        std::uint32_t* lifted = here.rows.data() + (forced.dim + j) * width;
        std::fill(lifted, lifted + width, 0);
        for (std::size_t c = 0; c < u.cols(); ++c) lifted[qcols[c]] = u(j, c);
        const std::size_t pivot_col = qcols[upiv[j]];
        here.pivots[forced.dim + j] = pivot_col;
        for (std::size_t r = 0; r < forced.dim; ++r) {
          std::uint32_t* row = here.rows.data() + r * width;
          const std::uint32_t f = row[pivot_col];
          if (f == 0) continue;
          for (std::size_t c = 0; c < width; ++c) row[c] = sub_mod(row[c], mul_mod(f, lifted[c], p), p);
        }
      }
      if (!back_arrows_ok(v, plan_.back[depth])) continue;
      descend(depth + 1);
    }
  }

  void leaf() {
    if (visit_ != nullptr) {
      SubspaceTuple tuple{plan_.p, {}};
      for (std::size_t v = 0; v < plan_.d.size(); ++v) {
        const VertexSpace& s = chosen_[v];
        Matrix<std::uint32_t> basis(s.dim, s.width);
        for (std::size_t r = 0; r < s.dim; ++r)
          for (std::size_t c = 0; c < s.width; ++c) basis(r, c) = s.row(r)[c];
        tuple.spaces.push_back(Subspace::span(plan_.p, s.width, basis));
      }
      (*visit_)(tuple);
      ++points_;
      return;
    }
    std::uint64_t key = 0;
    for (std::size_t f = 0; f < plan_.fibers.size(); ++f) {
      const std::size_t v = plan_.fibers[f];
      // W = forced images <= N_v <= K = preimage of the chosen targets.
      forced_span(v, plan_.fiber_in[f], fiber_scratch_);
      const std::size_t kernel_dim = preimage_dim(v, plan_.fiber_out[f], fiber_scratch_);
      if (kernel_dim == kNotContained) return;
      key += plan_.hist_strides[f] * (fiber_scratch_.dim * (plan_.d[v] + 1) + kernel_dim);
    }
    histogram_.add(key);
  }

  const Plan& plan_;
  std::atomic<std::uint64_t>& visited_;
  std::uint64_t cap_;
  const Visitor* visit_;
  std::size_t stride_ = 1;
  std::size_t offset_ = 0;

  std::vector<VertexSpace> chosen_;
  std::vector<VertexSpace> forced_;
  VertexSpace fiber_scratch_;
  std::vector<std::vector<std::size_t>> quotient_cols_;
  std::vector<SubspaceStream> streams_;
  std::vector<std::uint32_t> scratch_;
  std::vector<std::size_t> scratch_pivots_;
  std::vector<std::uint32_t> image_;
  std::vector<std::uint32_t> residual_;
  std::vector<std::size_t> residual_pivots_;
  Histogram histogram_;
  std::uint64_t points_ = 0;
};

}  // namespace

namespace {

Histogram run_search(const Plan& plan, const EnumerationOptions& options) {
  std::atomic<std::uint64_t> visited{0};
  const unsigned threads = plan.order.empty() ? 1U : std::max(1U, options.threads);
  if (threads == 1) {
    Searcher s(plan, visited, options.cap, nullptr);
    s.run(1, 0);
    return s.histogram();
  }

  std::vector<Searcher> searchers;
  searchers.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) searchers.emplace_back(plan, visited, options.cap, nullptr);
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          searchers[t].run(threads, t);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
  }
  for (const auto& err : errors)
    if (err) std::rethrow_exception(err);
  Histogram total(plan.hist_size);
  for (const auto& s : searchers) total.merge(s.histogram());
  return total;
}

Integer count_from_histogram(const Plan& plan, const Histogram& hist, const DimensionVector& e) {
  Integer total = 0;
  hist.for_each([&](std::uint64_t key, std::uint64_t n) {
    Integer product = 1;
    for (std::size_t f = 0; f < plan.fibers.size() && product != 0; ++f) {
      const std::size_t v = plan.fibers[f];
      const std::size_t radix = plan.d[v] + 1;
      const std::uint64_t digit = key / plan.hist_strides[f] % (radix * radix);
      const std::size_t w = digit / radix;
      const std::size_t k = digit % radix;
      const auto ev = static_cast<std::size_t>(e[v]);
      if (ev < w || ev > k) {
        product = 0;
      } else {
        product *= plan.gauss[k - w][ev - w];
      }
    }
    if (product != 0) total += product * Integer(std::to_string(n));
  });
  return total;
}

}  // namespace

PointCount count_subreps(const Representation& rep, const DimensionVector& e, const EnumerationOptions& options) {
  return count_subreps_many(rep, {e}, options).front();
}

std::vector<PointCount> count_subreps_many(const Representation& rep, const std::vector<DimensionVector>& targets,
                                           const EnumerationOptions& options) {
  validate_representation(rep);
  for (const auto& e : targets) check_count_input(rep, e);
  const Quiver& q = rep.quiver();
  const std::size_t n = q.num_vertices();

  std::vector<std::size_t> weight(n, 0);
  for (const auto& e : targets)
    for (std::size_t v = 0; v < n; ++v)
      weight[v] = std::max(weight[v], static_cast<std::size_t>(e[v] * (rep.dims()[v] - e[v])));
  const std::vector<bool> fibers = choose_fibers(q, weight);

  // Targets agreeing off the fibers share one enumeration.
  std::map<std::vector<int>, std::vector<std::size_t>> groups;
  for (std::size_t t = 0; t < targets.size(); ++t) {
    std::vector<int> key;
    for (std::size_t v = 0; v < n; ++v) key.push_back(fibers[v] ? -1 : targets[t][v]);
    groups[key].push_back(t);
  }

  std::vector<PointCount> results(targets.size());
  for (const auto& [key, members] : groups) {
    const Plan plan = make_plan(rep, targets[members.front()], &fibers);
    const Histogram hist = run_search(plan, options);
    for (std::size_t t : members) results[t] = {plan.p, targets[t], count_from_histogram(plan, hist, targets[t])};
  }
  return results;
}

std::uint64_t for_each_subrep(const Representation& rep, const DimensionVector& e,
                              const std::function<void(const SubspaceTuple&)>& visit,
                              const EnumerationOptions& options) {
  validate_representation(rep);
  check_count_input(rep, e);
  const Plan plan = make_plan(rep, e, nullptr);
  std::atomic<std::uint64_t> visited{0};
  Searcher s(plan, visited, options.cap, &visit);
  s.run(1, 0);
  return s.points();
}

}  // namespace quivergrass
