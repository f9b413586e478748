#include "resolv/betti.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "resolv/error.hpp"
#include "resolv/matroid.hpp"

namespace resolv {

namespace {

BigInt power(std::uint64_t base, std::size_t exp) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
  return out;
}

BigInt binomial(std::size_t n, std::size_t k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BigInt as_integer(const BigRational& r, const char* what) {
  if (r.get_den() != 1) throw Error(ErrorKind::NonIntegralBetti, std::string(what) + " = " + r.get_str());
  return r.get_num();
}

BigRational ratio(const BigInt& num, const BigInt& den) {
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

std::size_t weight(Support s) { return static_cast<std::size_t>(std::popcount(s)); }

}  // namespace

const char* to_string(BettiMethod method) {
  switch (method) {
    case BettiMethod::Hochster: return "hochster";
    case BettiMethod::ShiftsBsSolve: return "shifts+bs_solve";
    case BettiMethod::ClosedForm: return "closed_form";
  }
  return "unknown";
}

std::optional<BettiMethod> betti_method_from_string(std::string_view name) {
  if (name == "hochster") return BettiMethod::Hochster;
  if (name == "shifts+bs_solve") return BettiMethod::ShiftsBsSolve;
  if (name == "closed_form") return BettiMethod::ClosedForm;
  return std::nullopt;
}

BigInt BettiTable::at(std::size_t i, std::size_t j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? BigInt(0) : it->second;
}

std::set<std::size_t> BettiTable::shifts(std::size_t i) const {
  std::set<std::size_t> out;
  for (const auto& [cell, beta] : entries)
    if (cell.first == i && beta != 0) out.insert(cell.second);
  return out;
}

ShiftSets BettiTable::shift_sets() const {
  ShiftSets out;
  for (const auto& [cell, beta] : entries)
    if (beta != 0) out[cell.first].insert(cell.second);
  return out;
}

std::vector<std::size_t> BettiTable::ghw() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i <= k; ++i) {
    const auto s = shifts(i);
    if (s.empty()) break;
    out.push_back(*s.begin());
  }
  return out;
}

bool BettiTable::pure() const {
  if (shifts(0) != std::set<std::size_t>{0}) return false;
  for (std::size_t i = 1; i <= k; ++i)
    if (shifts(i).size() != 1) return false;
  return true;
}

std::optional<std::vector<std::size_t>> BettiTable::pure_type() const {
  if (!pure()) return std::nullopt;
  std::vector<std::size_t> out{0};
  for (std::size_t i = 1; i <= k; ++i) out.push_back(*shifts(i).begin());
  return out;
}

bool same_values(const BettiTable& a, const BettiTable& b) {
  return a.n == b.n && a.k == b.k && a.entries == b.entries;
}

BettiTable betti_table_hochster(const LinearCode& code, const Budget& budget) {
  const MatroidView matroid(code);
  const auto scan = matroid.scan(budget);
  BettiTable t{code.length(), code.dimension(), code.q(), BettiMethod::Hochster, {}};
  t.entries[{0, 0}] = 1;
  const auto& strata = scan->minimal_sets();
  for (std::size_t i = 1; i < strata.size(); ++i) {
    for (Support sigma : strata[i]) {
      const std::int64_t chi = scan->reduced_euler_char(sigma);
      t.entries[{i, weight(sigma)}] += BigInt(static_cast<long>(chi < 0 ? -chi : chi));
    }
  }
  return t;
}

ShiftSets betti_shifts(const LinearCode& code, const Budget& budget) {
  ShiftSets out;
  out[0] = {0};
  for (std::size_t i = 1; i <= code.dimension(); ++i) {
    auto& s = out[i];
    for_each_subcode(code, i, budget, [&](const Subcode& d) {
      if (s_hat_dimension(code, d.support) == i) s.insert(d.weight());
    });
  }
  return out;
}

std::map<std::size_t, BigInt> first_step_betti(const LinearCode& code, const Budget& budget) {
  std::map<std::size_t, BigInt> out;
  for_each_subcode(code, 1, budget, [&](const Subcode& d) {
    if (s_hat_dimension(code, d.support) == 1) out[d.weight()] += 1;
  });
  return out;
}

PurityReport purity(const LinearCode& code, const Budget& budget) {
  const std::size_t k = code.dimension();
  PurityReport report;
  report.step_weights.resize(k);
  std::vector<std::optional<PurityWitness>> witness(k);
  for (std::size_t i = 1; i <= k; ++i) {
    if (gaussian_binomial(k, i, code.q()) > BigInt(static_cast<unsigned long>(budget.subcodes))) continue;
    std::map<std::size_t, Subcode> first_of_weight;
    for_each_subcode(code, i, budget, [&](const Subcode& d) {
      if (s_hat_dimension(code, d.support) != i) return;
      first_of_weight.try_emplace(d.weight(), d);
    });
    std::set<std::size_t> weights;
    for (const auto& [w, d] : first_of_weight) weights.insert(w);
    report.step_weights[i - 1] = weights;
    if (weights.size() > 1)
      witness[i - 1] = PurityWitness{i, first_of_weight.begin()->second, first_of_weight.rbegin()->second};
  }

  bool any_impure = false, any_unresolved = false;
  for (const auto& w : report.step_weights) {
    if (!w) any_unresolved = true;
    else if (w->size() != 1) any_impure = true;
  }
  if (any_unresolved && !any_impure)
    throw Error(ErrorKind::BudgetExceeded, "purity undecided: some Grassmannians exceed the subcode budget");

  // Pure tail from the top step down.
  std::size_t h = k + 1;
  while (h > 1 && report.step_weights[h - 2] && report.step_weights[h - 2]->size() == 1) --h;
  if (h == 1 || report.step_weights[h - 2]) report.left_pure_from = h;
  report.pure = !any_unresolved && !any_impure;
  if (report.pure) {
    std::vector<std::size_t> type{0};
    for (const auto& w : report.step_weights) type.push_back(*w->begin());
    report.pure_type = type;
  }
  for (auto& w : witness)
    if (w) report.witnesses.push_back(std::move(*w));
  return report;
}

std::vector<BigInt> herzog_kuhl(std::span<const std::size_t> shifts) {
  if (shifts.empty() || shifts[0] != 0)
    throw Error(ErrorKind::InvalidParameters, "shift vector must start with d_0 = 0");
  for (std::size_t i = 1; i < shifts.size(); ++i)
    if (shifts[i] <= shifts[i - 1])
      throw Error(ErrorKind::RepeatedShift, "shifts must be strictly increasing");
  const std::size_t k = shifts.size() - 1;
  std::vector<BigInt> out;
  for (std::size_t i = 1; i <= k; ++i) {
    BigRational beta = 1;
    for (std::size_t j = 1; j <= k; ++j) {
      if (j == i) continue;
      const long dj = static_cast<long>(shifts[j]), di = static_cast<long>(shifts[i]);
      beta *= ratio(BigInt(dj), BigInt(dj - di));
    }
    if (beta < 0) beta = -beta;
    BigInt value = as_integer(beta, ("beta_" + std::to_string(i)).c_str());
    if (value <= 0) throw Error(ErrorKind::NegativeBetti, "beta_" + std::to_string(i) + " is not positive");
    out.push_back(value);
  }
  return out;
}

BsCheck bs_check(const BettiTable& table) {
  BsCheck out;
  for (std::size_t l = 0; l < table.k; ++l) {
    BigInt residual = 0;
    for (const auto& [cell, beta] : table.entries) {
      BigInt term = power(cell.second, l) * beta;
      if (cell.first % 2 == 0) residual += term;
      else residual -= term;
    }
    out.ok = out.ok && residual == 0;
    out.residuals.push_back(residual);
  }
  return out;
}

BettiTable bs_solve(std::size_t n, std::size_t k, std::uint64_t q, const ShiftSets& shifts,
                    const std::map<Cell, BigInt>& known) {
  BettiTable t{n, k, q, BettiMethod::ShiftsBsSolve, known};
  t.entries[{0, 0}] = 1;
  std::vector<Cell> unknown;
  for (const auto& [i, js] : shifts)
    for (std::size_t j : js)
      if (!t.entries.count({i, j})) unknown.emplace_back(i, j);
  if (unknown.size() > k)
    throw Error(ErrorKind::TooManyUnknowns, std::to_string(unknown.size()) + " unknowns but only " +
                                                std::to_string(k) + " equations");
  const std::size_t u = unknown.size();

  // Augmented system: rows l = 0..k-1, columns the unknowns, then the right-hand side.
  std::vector<std::vector<BigRational>> a(k, std::vector<BigRational>(u + 1));
  for (std::size_t l = 0; l < k; ++l) {
    for (std::size_t c = 0; c < u; ++c) {
      BigInt coeff = power(unknown[c].second, l);
      a[l][c] = (unknown[c].first % 2 == 0) ? BigRational(coeff) : BigRational(-coeff);
    }
    BigInt rhs = 0;
    for (const auto& [cell, beta] : t.entries) {
      BigInt term = power(cell.second, l) * beta;
      if (cell.first % 2 == 0) rhs -= term;
      else rhs += term;
    }
    a[l][u] = rhs;
  }

  std::size_t row = 0;
  std::vector<std::size_t> pivot_of(u, 0);
  for (std::size_t col = 0; col < u; ++col) {
    std::size_t sel = row;
    while (sel < k && a[sel][col] == 0) ++sel;
    if (sel == k) throw Error(ErrorKind::SingularSystem, "unknowns are not determined by the equations");
    std::swap(a[sel], a[row]);
    const BigRational lead = a[row][col];
    for (auto& x : a[row]) x /= lead;
    for (std::size_t r = 0; r < k; ++r) {
      if (r == row || a[r][col] == 0) continue;
      const BigRational f = a[r][col];
      for (std::size_t c = 0; c <= u; ++c) a[r][c] -= f * a[row][c];
    }
    pivot_of[col] = row++;
  }
  for (std::size_t r = row; r < k; ++r)
    if (a[r][u] != 0) throw Error(ErrorKind::InconsistentSystem, "known entries violate the equations");

  for (std::size_t c = 0; c < u; ++c) {
    const std::string name = "beta_{" + std::to_string(unknown[c].first) + "," + std::to_string(unknown[c].second) + "}";
    BigInt value = as_integer(a[pivot_of[c]][u], name.c_str());
    if (value <= 0) throw Error(ErrorKind::NegativeBetti, name + " = " + value.get_str());
    t.entries[unknown[c]] = value;
  }
  return t;
}

BettiTable closed_form(const ClosedFormKind& kind) {
  BettiTable t;
  t.method = BettiMethod::ClosedForm;
  t.entries[{0, 0}] = 1;
  if (const auto* mds = std::get_if<MdsForm>(&kind)) {
    if (mds->k == 0 || mds->k > mds->n) throw Error(ErrorKind::InvalidParameters, "MDS needs 1 <= k <= n");
    t.n = mds->n;
    t.k = mds->k;
    t.q = mds->q;
    for (std::size_t i = 1; i <= t.k; ++i)
      t.entries[{i, t.n - t.k + i}] = binomial(t.n - t.k + i - 1, i - 1) * binomial(t.n, t.k - i);
  } else if (const auto* cw = std::get_if<ConstantWeightForm>(&kind)) {
    if (cw->q < 2 || cw->k == 0 || cw->d == 0) throw Error(ErrorKind::InvalidParameters, "constant weight needs q >= 2, k >= 1, d >= 1");
    t.k = cw->k;
    t.q = cw->q;
    for (std::size_t i = 1; i <= t.k; ++i) {
      BigRational di(BigInt(static_cast<unsigned long>(cw->d)) * (power(cw->q, i) - 1),
                     power(cw->q, i - 1) * BigInt(static_cast<unsigned long>(cw->q - 1)));
      di.canonicalize();
      if (di.get_den() != 1)
        throw Error(ErrorKind::InvalidParameters, "d_" + std::to_string(i) + " is not an integer");
      const std::size_t shift = di.get_num().get_ui();
      t.entries[{i, shift}] = gaussian_binomial(t.k, i, cw->q) * power(cw->q, i * (i - 1) / 2);
      if (i == t.k) t.n = shift;
    }
  } else {
    const auto& rm = std::get<FirstOrderReedMullerForm>(kind);
    if (rm.q < 2 || rm.m == 0) throw Error(ErrorKind::InvalidParameters, "RM(1,m) needs q >= 2, m >= 1");
    const std::size_t m = rm.m;
    const BigInt qm = power(rm.q, m);
    t.n = qm.get_ui();
    t.k = m + 1;
    t.q = rm.q;
    for (std::size_t i = 1; i <= m + 1; ++i) {
      const BigInt di = qm - (i <= m ? power(rm.q, m - i) : BigInt(0));
      BigRational beta;
      if (i <= m) {
        beta = BigRational(power(rm.q, i * (i + 1) / 2));
        for (std::size_t j = 1; j <= m - i; ++j) {
          beta *= ratio(power(rm.q, m + 1 - j) - 1, power(rm.q, m + 1 - i - j) - 1);
          beta.canonicalize();
        }
      } else {
        beta = 1;
        for (std::size_t j = 1; j <= m; ++j) beta *= BigRational(power(rm.q, j) - 1);
      }
      t.entries[{i, di.get_ui()}] = as_integer(beta, "beta");
    }
  }
  return t;
}

}  // namespace resolv
