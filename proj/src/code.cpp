#include "resolv/code.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "resolv/error.hpp"

namespace resolv {

namespace {

Support full_mask(std::size_t n) { return n >= 64 ? ~Support{0} : (Support{1} << n) - 1; }

void require_short(const LinearCode& code) {
  if (code.length() > 64)
    throw Error(ErrorKind::InvalidParameters, "support operations need n <= 64, got " + std::to_string(code.length()));
}

void require_dimension(const LinearCode& code, std::size_t i, std::size_t lowest) {
  if (i < lowest || i > code.dimension())
    throw Error(ErrorKind::OutOfRange, "subcode dimension " + std::to_string(i) + " outside [" +
                                           std::to_string(lowest) + "," + std::to_string(code.dimension()) + "]");
}

}  // namespace

LinearCode LinearCode::make(const Matrix& rows) {
  Matrix g = row_space_basis(rows);
  if (g.rows() == 0) throw Error(ErrorKind::ZeroCode, "generator rows have rank 0");
  Matrix h = row_space_basis(kernel_basis(g));
  if (h.rows() == 0) h = Matrix(g.field(), 0, g.cols());
  bool nondegenerate = true;
  for (std::size_t c = 0; c < g.cols() && nondegenerate; ++c) {
    bool any = false;
    for (std::size_t r = 0; r < g.rows(); ++r) any = any || g(r, c) != 0;
    nondegenerate = any;
  }
  return LinearCode(std::move(g), std::move(h), nondegenerate);
}

LinearCode dual(const LinearCode& code) {
  if (code.dimension() == code.length())
    throw Error(ErrorKind::ZeroCode, "dual of the full space is the zero code");
  return LinearCode::make(code.parity_check());
}

std::optional<std::uint64_t> code_size(const LinearCode& code) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < code.dimension(); ++i) {
    if (total > ~std::uint64_t{0} / code.q()) return std::nullopt;
    total *= code.q();
  }
  return total;
}

void for_each_codeword(const LinearCode& code, const Budget& budget,
                       const std::function<void(std::span<const FieldElement>)>& visit) {
  const auto total = code_size(code);
  if (!total || *total > budget.codewords)
    throw Error(ErrorKind::BudgetExceeded, "q^k codewords exceed the enumeration budget");
  const auto& F = code.field();
  const std::size_t n = code.length(), k = code.dimension();
  const std::uint32_t q = F.order();
  // multiples[j][a] = a * G_j
  std::vector<std::vector<FieldElement>> multiples(k * q, std::vector<FieldElement>(n));
  for (std::size_t j = 0; j < k; ++j)
    for (FieldElement a = 0; a < q; ++a)
      for (std::size_t c = 0; c < n; ++c) multiples[j * q + a][c] = F.mul(a, code.generator()(j, c));

  std::vector<std::vector<FieldElement>> partial(k + 1, std::vector<FieldElement>(n, 0));
  std::function<void(std::size_t)> descend = [&](std::size_t level) {
    if (level == k) {
      visit(partial[k]);
      return;
    }
    for (FieldElement a = 0; a < q; ++a) {
      const auto& add = multiples[level * q + a];
      for (std::size_t c = 0; c < n; ++c) partial[level + 1][c] = F.add(partial[level][c], add[c]);
      descend(level + 1);
    }
  };
  descend(0);
}

WeightDistribution weight_distribution(const LinearCode& code, const Budget& budget) {
  WeightDistribution dist;
  for_each_codeword(code, budget, [&](std::span<const FieldElement> c) {
    std::size_t w = 0;
    for (FieldElement x : c) w += x != 0;
    ++dist[w];
  });
  return dist;
}

std::size_t Subcode::weight() const { return static_cast<std::size_t>(std::popcount(support)); }

void for_each_subcode(const LinearCode& code, std::size_t i, const Budget& budget,
                      const std::function<void(const Subcode&)>& visit) {
  require_short(code);
  require_dimension(code, i, 0);
  const BigInt count = gaussian_binomial(code.dimension(), i, code.q());
  if (count > BigInt(static_cast<unsigned long>(budget.subcodes)))
    throw Error(ErrorKind::BudgetExceeded, "Grassmannian G_" + std::to_string(i) + " has " + count.get_str() +
                                               " subcodes, budget " + std::to_string(budget.subcodes));
  const Matrix& g = code.generator();
  for_each_subspace(code.field(), code.dimension(), i, [&](const Matrix& coeffs) {
    Subcode d{i, coeffs * g, 0};
    if (i == 0) d.basis = Matrix(code.field(), 0, code.length());
    for (std::size_t r = 0; r < i; ++r) d.support |= support_of(d.basis.row(r));
    visit(d);
  });
}

std::vector<Subcode> subcodes(const LinearCode& code, std::size_t i, const Budget& budget) {
  std::vector<Subcode> out;
  for_each_subcode(code, i, budget, [&](const Subcode& d) { out.push_back(d); });
  return out;
}

std::size_t s_hat_dimension(const LinearCode& code, Support sigma) {
  require_short(code);
  const Support outside = full_mask(code.length()) & ~sigma;
  return code.dimension() - column_rank(code.generator(), outside);
}

Subcode s_hat(const LinearCode& code, Support sigma) {
  require_short(code);
  const Support outside = full_mask(code.length()) & ~sigma;
  const Matrix& g = code.generator();
  // x with x * G vanishing outside sigma: left kernel of G restricted to the complement.
  Matrix restricted = g.select_columns(outside);
  Matrix coeffs = restricted.cols() == 0 ? Matrix::identity(code.field(), code.dimension())
                                         : kernel_basis(restricted.transpose());
  Subcode d{coeffs.rows(), Matrix(code.field(), 0, code.length()), 0};
  if (coeffs.rows() > 0) d.basis = row_space_basis(coeffs * g);
  for (std::size_t r = 0; r < d.basis.rows(); ++r) d.support |= support_of(d.basis.row(r));
  return d;
}

std::vector<Subcode> minimal_subcodes(const LinearCode& code, std::size_t i, const Budget& budget) {
  require_dimension(code, i, 1);
  std::vector<Subcode> out;
  for_each_subcode(code, i, budget, [&](const Subcode& d) {
    if (s_hat_dimension(code, d.support) == i) out.push_back(d);
  });
  std::sort(out.begin(), out.end(), [](const Subcode& a, const Subcode& b) { return a.support < b.support; });
  return out;
}

std::size_t ghw(const LinearCode& code, std::size_t i, const Budget& budget) {
  require_dimension(code, i, 1);
  std::size_t best = code.length() + 1;
  for_each_subcode(code, i, budget, [&](const Subcode& d) { best = std::min(best, d.weight()); });
  return best;
}

std::vector<std::size_t> ghw_hierarchy(const LinearCode& code, const Budget& budget) {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i <= code.dimension(); ++i) out.push_back(ghw(code, i, budget));
  return out;
}

bool is_h_mds(const LinearCode& code, std::size_t h, const Budget& budget) {
  return ghw(code, h, budget) == code.length() - code.dimension() + h;
}

}  // namespace resolv
