#include "resolv/matroid.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "resolv/error.hpp"
#include "resolv/parallel.hpp"

namespace resolv {

namespace {

// Depth-first walk over include/exclude decisions, keeping an echelon basis
// of the included columns; each leaf records the rank of its subset.
class RankWalker {
 public:
  RankWalker(const Matrix& h, std::uint8_t* ranks)
      : field_(h.field()), n_(h.cols()), m_(h.rows()), ranks_(ranks) {
    columns_.resize(n_, std::vector<FieldElement>(m_));
    for (std::size_t c = 0; c < n_; ++c)
      for (std::size_t r = 0; r < m_; ++r) columns_[c][r] = h(r, c);
    basis_.assign(m_ + 1, std::vector<FieldElement>(m_, 0));
    pivots_.assign(m_ + 1, 0);
    scratch_.assign(n_ + 1, std::vector<FieldElement>(m_, 0));
  }

  // Fixes the first `prefix` elements according to `sigma`, then walks the rest.
  void run(std::size_t prefix, Support sigma) {
    size_ = 0;
    for (std::size_t e = 0; e < prefix; ++e)
      if ((sigma >> e) & 1u) include(e);
    walk(prefix, sigma);
  }

 private:
  bool include(std::size_t e) {
    if (size_ == m_) return false;
    auto& v = scratch_[e];
    v = columns_[e];
    for (std::size_t b = 0; b < size_; ++b) {
      const FieldElement f = v[pivots_[b]];
      if (f == 0) continue;
      const FieldElement nf = field_.neg(f);
      for (std::size_t r = 0; r < m_; ++r)
        if (basis_[b][r] != 0) v[r] = field_.add(v[r], field_.mul(nf, basis_[b][r]));
    }
    std::size_t lead = 0;
    while (lead < m_ && v[lead] == 0) ++lead;
    if (lead == m_) return false;
    const FieldElement s = field_.inv(v[lead]);
    for (std::size_t r = 0; r < m_; ++r) basis_[size_][r] = field_.mul(s, v[r]);
    pivots_[size_] = lead;
    ++size_;
    return true;
  }

  void walk(std::size_t e, Support sigma) {
    if (e == n_) {
      ranks_[sigma] = static_cast<std::uint8_t>(size_);
      return;
    }
    walk(e + 1, sigma);
    const bool grew = include(e);
    walk(e + 1, sigma | (Support{1} << e));
    if (grew) --size_;
  }

  FiniteField field_;
  std::size_t n_, m_;
  std::uint8_t* ranks_;
  std::vector<std::vector<FieldElement>> columns_;
  std::vector<std::vector<FieldElement>> basis_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<FieldElement>> scratch_;
  std::size_t size_ = 0;
};

std::size_t popcount(Support s) { return static_cast<std::size_t>(std::popcount(s)); }

}  // namespace

NullityScan NullityScan::compute(const Matrix& h, const Budget& budget) {
  const std::size_t n = h.cols();
  if (n > budget.scan_limit || n > 30)
    throw Error(ErrorKind::BudgetExceeded, "subset scan over n = " + std::to_string(n) + " exceeds scan limit " +
                                               std::to_string(budget.scan_limit));
  NullityScan s;
  s.n_ = n;
  const std::size_t total = std::size_t{1} << n;
  s.rank_.assign(total, 0);

  const std::size_t threads = std::max<std::size_t>(1, budget.threads);
  std::size_t prefix = 0;
  while ((std::size_t{1} << prefix) < 4 * threads && prefix < n) ++prefix;
  if (threads == 1) prefix = 0;
  parallel_blocks(std::size_t{1} << prefix, threads, [&](std::size_t begin, std::size_t end) {
    RankWalker walker(h, s.rank_.data());
    for (std::size_t task = begin; task < end; ++task) walker.run(prefix, task);
  });

  // Subset-sum (zeta) transform of the signed indicator of independent sets.
  s.signed_faces_.assign(total, 0);
  parallel_blocks(total, threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t sigma = begin; sigma < end; ++sigma) {
      const std::size_t size = popcount(sigma);
      if (s.rank_[sigma] == size) s.signed_faces_[sigma] = (size % 2 == 0) ? 1 : -1;
    }
  });
  for (std::size_t bit = 0; bit < n; ++bit) {
    const Support mask = Support{1} << bit;
    parallel_blocks(total, threads, [&](std::size_t begin, std::size_t end) {
      for (std::size_t sigma = begin; sigma < end; ++sigma)
        if (sigma & mask) s.signed_faces_[sigma] += s.signed_faces_[sigma ^ mask];
    });
  }

  std::size_t max_nullity = 0;
  for (std::size_t sigma = 0; sigma < total; ++sigma) max_nullity = std::max(max_nullity, s.nullity(sigma));
  s.minimal_.assign(max_nullity + 1, {});
  const std::size_t blocks = std::min<std::size_t>(total, 64 * threads);
  std::vector<std::vector<std::vector<Support>>> local(blocks);
  parallel_blocks(blocks, threads, [&](std::size_t bbegin, std::size_t bend) {
    for (std::size_t b = bbegin; b < bend; ++b) {
      local[b].assign(max_nullity + 1, {});
      const std::size_t lo = total * b / blocks, hi = total * (b + 1) / blocks;
      for (std::size_t sigma = lo; sigma < hi; ++sigma)
        if (s.is_minimal(sigma)) local[b][s.nullity(sigma)].push_back(sigma);
    }
  });
  for (auto& block : local)
    for (std::size_t i = 0; i <= max_nullity; ++i)
      s.minimal_[i].insert(s.minimal_[i].end(), block[i].begin(), block[i].end());
  return s;
}

std::size_t NullityScan::nullity(Support sigma) const { return popcount(sigma) - rank_[sigma]; }

bool NullityScan::is_minimal(Support sigma) const {
  const std::size_t eta = nullity(sigma);
  if (eta == 0) return sigma == 0;
  for (Support rest = sigma; rest; rest &= rest - 1) {
    const Support e = rest & (~rest + 1);
    if (nullity(sigma ^ e) != eta - 1) return false;
  }
  return true;
}

MatroidView::MatroidView(Matrix parity_check) : h_(std::move(parity_check)), full_rank_(rank(h_)) {}

MatroidView::MatroidView(const LinearCode& code)
    : h_(code.parity_check()), full_rank_(code.length() - code.dimension()) {}

RankNullity MatroidView::rank_nullity(Support sigma) const {
  std::size_t r;
  {
    std::lock_guard lock(mutex_);
    auto it = memo_.find(sigma);
    if (it != memo_.end()) {
      r = it->second;
      return {r, popcount(sigma) - r};
    }
  }
  r = column_rank(h_, sigma);
  {
    std::lock_guard lock(mutex_);
    memo_.emplace(sigma, static_cast<std::uint8_t>(r));
  }
  return {r, popcount(sigma) - r};
}

std::shared_ptr<const NullityScan> MatroidView::scan(const Budget& budget) const {
  std::lock_guard lock(mutex_);
  if (!scan_) scan_ = std::make_shared<const NullityScan>(NullityScan::compute(h_, budget));
  return scan_;
}

NullityStratum minimal_nullity_sets(const MatroidView& matroid, std::size_t i, const Budget& budget) {
  if (i > matroid.code_dimension())
    throw Error(ErrorKind::OutOfRange, "nullity level above k");
  if (i == 0) return {0, {0}};
  const auto s = matroid.scan(budget);
  NullityStratum out{i, {}};
  if (i < s->minimal_sets().size()) out.minimal_sets = s->minimal_sets()[i];
  return out;
}

NullityStratum minimal_nullity_sets(const LinearCode& code, std::size_t i, NullityMethod method,
                                    const Budget& budget) {
  if (method == NullityMethod::Scan) return minimal_nullity_sets(MatroidView(code), i, budget);
  if (i > code.dimension()) throw Error(ErrorKind::OutOfRange, "nullity level above k");
  if (i == 0) return {0, {0}};
  NullityStratum out{i, {}};
  for (const Subcode& d : minimal_subcodes(code, i, budget)) out.minimal_sets.push_back(d.support);
  return out;
}

std::int64_t reduced_euler_char(const MatroidView& matroid, Support sigma, const Budget& budget) {
  const std::size_t size = popcount(sigma);
  if (size >= 63 || (std::uint64_t{1} << size) > budget.codewords)
    throw Error(ErrorKind::BudgetExceeded, "2^|sigma| subsets exceed the enumeration budget");
  std::int64_t signed_sum = 0;
  // Walk all submasks of sigma, including the empty face.
  for (Support tau = sigma;; tau = (tau - 1) & sigma) {
    const std::size_t t = popcount(tau);
    if (column_rank(matroid.parity_check(), tau) == t) signed_sum += (t % 2 == 0) ? 1 : -1;
    if (tau == 0) break;
  }
  return -signed_sum;
}

std::uint64_t betti_value(const MatroidView& matroid, Support sigma, const Budget& budget) {
  const std::size_t eta = matroid.rank_nullity(sigma).nullity;
  bool minimal = eta == 0 ? sigma == 0 : true;
  for (Support rest = sigma; minimal && eta > 0 && rest; rest &= rest - 1) {
    const Support e = rest & (~rest + 1);
    minimal = matroid.rank_nullity(sigma ^ e).nullity == eta - 1;
  }
  if (!minimal) throw Error(ErrorKind::NotMinimal, "subset is not minimal in its nullity stratum");
  const std::int64_t chi = reduced_euler_char(matroid, sigma, budget);
  return static_cast<std::uint64_t>(chi < 0 ? -chi : chi);
}

std::vector<std::size_t> homology_dims(const MatroidView& matroid, Support sigma, const Budget& budget) {
  const std::size_t size = popcount(sigma);
  if (size > budget.homology_limit)
    throw Error(ErrorKind::BudgetExceeded, "|sigma| = " + std::to_string(size) + " exceeds homology limit");
  const FiniteField prime = FiniteField::make(matroid.parity_check().field().characteristic(), 1);

  // faces[s]: independent subsets of sigma with s elements (dimension s-1).
  std::vector<std::vector<Support>> faces(size + 1);
  for (Support tau = sigma;; tau = (tau - 1) & sigma) {
    const std::size_t t = popcount(tau);
    if (matroid.rank_nullity(tau).rank == t) faces[t].push_back(tau);
    if (tau == 0) break;
  }
  for (auto& f : faces) std::sort(f.begin(), f.end());

  // boundary_rank[s] = rank of the map from size-s faces to size-(s-1) faces.
  std::vector<std::size_t> boundary_rank(size + 2, 0);
  for (std::size_t s = 1; s <= size; ++s) {
    if (faces[s].empty() || faces[s - 1].empty()) continue;
    Matrix d(prime, faces[s - 1].size(), faces[s].size());
    for (std::size_t col = 0; col < faces[s].size(); ++col) {
      const Support tau = faces[s][col];
      std::size_t position = 0;
      for (Support rest = tau; rest; rest &= rest - 1, ++position) {
        const Support facet = tau ^ (rest & (~rest + 1));
        const auto it = std::lower_bound(faces[s - 1].begin(), faces[s - 1].end(), facet);
        if (it == faces[s - 1].end() || *it != facet)
          throw Error(ErrorKind::ConstructionFailed, "independent sets are not closed under deletion");
        const std::size_t row = static_cast<std::size_t>(it - faces[s - 1].begin());
        d(row, col) = (position % 2 == 0) ? 1 : prime.neg(1);
      }
    }
    boundary_rank[s] = rank(d);
  }
  std::vector<std::size_t> dims(size + 1, 0);
  for (std::size_t s = 0; s <= size; ++s)
    dims[s] = faces[s].size() - boundary_rank[s] - boundary_rank[s + 1];
  return dims;
}

}  // namespace resolv
