#include "resolv/verify.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <map>
#include <random>
#include <sstream>

#include "resolv/betti.hpp"
#include "resolv/error.hpp"
#include "resolv/families.hpp"
#include "resolv/matroid.hpp"

namespace resolv {

namespace {

template <class T>
std::string fmt(const std::vector<T>& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ")";
  return out.str();
}

std::string fmt(const std::set<std::size_t>& s) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (auto x : s) {
    out << (first ? "" : ",") << x;
    first = false;
  }
  out << "}";
  return out.str();
}

template <class V>
std::string fmt(const std::map<std::size_t, V>& m) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& [key, value] : m) {
    out << (first ? "" : ", ") << key << ":" << value;
    first = false;
  }
  out << "}";
  return out.str();
}

std::string fmt(const ShiftSets& s) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& [i, js] : s) {
    if (i == 0) continue;
    out << (first ? "" : ", ") << i << ":" << fmt(js);
    first = false;
  }
  out << "}";
  return out.str();
}

std::string fmt_entries(const BettiTable& t) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& [cell, beta] : t.entries) {
    if (cell.first == 0) continue;
    out << (first ? "" : ", ") << "(" << cell.first << "," << cell.second << "):" << beta;
    first = false;
  }
  out << "}";
  return out.str();
}

std::string fmt_pure_type(const BettiTable& t) {
  auto type = t.pure_type();
  return type ? fmt(*type) : std::string("not pure");
}

std::vector<BigInt> step_totals(const BettiTable& t) {
  std::vector<BigInt> out(t.k, 0);
  for (const auto& [cell, beta] : t.entries)
    if (cell.first >= 1 && cell.first <= t.k) out[cell.first - 1] += beta;
  return out;
}

std::vector<BigInt> ints(std::initializer_list<long> xs) {
  std::vector<BigInt> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

std::map<Cell, BigInt> step_one(const std::map<std::size_t, BigInt>& first) {
  std::map<Cell, BigInt> out;
  for (const auto& [w, beta] : first) out[{1, w}] = beta;
  return out;
}

class Recorder {
 public:
  explicit Recorder(VerifyItem& item) : item_(item) {}

  template <class A, class B>
  void expect(const std::string& what, const A& expected, const B& computed) {
    std::ostringstream e, c;
    e << expected;
    c << computed;
    record(what, e.str(), c.str());
  }

  void record(const std::string& what, const std::string& expected, const std::string& computed) {
    const bool ok = expected == computed;
    item_.lines.push_back(std::string(ok ? "ok   " : "FAIL ") + what + ": expected " + expected + ", computed " +
                          computed);
    if (!ok) failed_ = true;
  }

  void check(const std::string& what, bool ok) { record(what, "true", ok ? "true" : "false"); }

  void note(const std::string& text) { item_.notes.push_back(text); }

  bool failed() const { return failed_; }

 private:
  VerifyItem& item_;
  bool failed_ = false;
};

struct Context {
  Budget budget;
  std::vector<BettiTable> hochster_tables;

  BettiTable hochster(const LinearCode& code) {
    BettiTable t = betti_table_hochster(code, budget);
    hochster_tables.push_back(t);
    return t;
  }
};

bool linear(const BettiTable& t) {
  auto type = t.pure_type();
  if (!type) return false;
  for (std::size_t i = 2; i < type->size(); ++i)
    if ((*type)[i] != (*type)[i - 1] + 1) return false;
  return true;
}

void item_mds(Recorder& r, Context& ctx) {
  LinearCode code = projective_system_code(hyperoval(4));
  BettiTable t = ctx.hochster(code);
  r.expect("entries", "{(1,4):15, (2,5):24, (3,6):10}", fmt_entries(t));
  r.check("pure", t.pure());
  r.check("linear", linear(t));
  r.check("equals MDS closed form", same_values(t, closed_form(MdsForm{6, 3, 4})));
}

void item_simplex(Recorder& r, Context& ctx) {
  BettiTable t = ctx.hochster(simplex(2, 3));
  r.expect("pure type", "(0,4,6,7)", fmt_pure_type(t));
  r.expect("beta", fmt(ints({7, 14, 8})), fmt(step_totals(t)));
  r.check("equals constant-weight closed form", same_values(t, closed_form(ConstantWeightForm{2, 3, 4})));
}

void item_rm1(Recorder& r, Context& ctx) {
  BettiTable t = ctx.hochster(reed_muller(2, 1, 3, ctx.budget));
  r.expect("pure type", "(0,4,6,7,8)", fmt_pure_type(t));
  r.expect("beta", fmt(ints({14, 56, 64, 21})), fmt(step_totals(t)));
  r.check("equals first-order Reed-Muller closed form", same_values(t, closed_form(FirstOrderReedMullerForm{2, 3})));
}

void item_rm_binary(Recorder& r, Context& ctx) {
  LinearCode code = reed_muller(2, 2, 4, ctx.budget);
  r.expect("[n,k]", "[16,11]", "[" + std::to_string(code.length()) + "," + std::to_string(code.dimension()) + "]");
  auto first = first_step_betti(code, ctx.budget);
  std::set<std::size_t> keys;
  for (const auto& [w, b] : first) keys.insert(w);
  r.expect("first-step weights", "{4,6}", fmt(keys));
  FiniteField f = code.field();
  auto x = [&](std::size_t i) { return Polynomial::variable(f, 4, i); };
  auto word = poly_codeword(x(0) * x(1) + x(2) * x(3));
  r.expect("witness X1X2+X3X4 weight", 6, std::count_if(word.begin(), word.end(), [](auto v) { return v != 0; }));
}

void item_rm_q4(Recorder& r, Context& ctx) {
  LinearCode code = reed_muller(4, 2, 2, ctx.budget);
  r.expect("[n,k]_q", "[16,6]_4",
           "[" + std::to_string(code.length()) + "," + std::to_string(code.dimension()) + "]_" +
               std::to_string(code.q()));
  auto first = first_step_betti(code, ctx.budget);
  r.check("at least two first-step weights", first.size() >= 2);
  r.check("weight 8 present", first.count(8) == 1);
  r.check("weight 9 present", first.count(9) == 1);
  FiniteField f = code.field();
  auto word = poly_codeword((Polynomial::variable(f, 2, 1) - 1) * Polynomial::variable(f, 2, 0));
  r.expect("witness (X2-1)X1 weight", 9, std::count_if(word.begin(), word.end(), [](auto v) { return v != 0; }));
}

void item_tf1d_2(Recorder& r, Context& ctx) {
  LinearCode code = projective_system_code(dual_hyperoval(2));
  BettiTable t = ctx.hochster(code);
  r.expect("entries", "{(1,3):4, (1,4):3, (2,5):12, (3,6):6}", fmt_entries(t));
  BettiTable solved = bs_solve(code.length(), code.dimension(), code.q(), betti_shifts(code, ctx.budget),
                               step_one(first_step_betti(code, ctx.budget)));
  r.expect("bs_solve (beta_{2,5}, beta_{3,6})", "(12,6)", fmt(std::vector<BigInt>{solved.at(2, 5), solved.at(3, 6)}));
}

void item_tf1d_4(Recorder& r, Context& ctx) {
  ProjectiveSystem sys = dual_hyperoval(4);
  LinearCode code = projective_system_code(sys);
  auto first = first_step_betti(code, ctx.budget);
  r.expect("first_step_betti", "{10:6, 12:15}", fmt(first));
  BettiTable solved =
      bs_solve(code.length(), code.dimension(), code.q(), betti_shifts(code, ctx.budget), step_one(first));
  r.expect("bs_solve (beta_{2,14}, beta_{3,15})", "(60,40)",
           fmt(std::vector<BigInt>{solved.at(2, 14), solved.at(3, 15)}));
  WeightDistribution wd = weight_distribution(code, ctx.budget);
  wd.erase(0);
  r.expect("weight distribution", "{10:18, 12:45}", fmt(wd));
  auto spectrum = section_spectrum(sys, 1, ctx.budget);
  WeightDistribution from_sections;
  for (const auto& [size, count] : spectrum)
    if (size < code.length()) from_sections[code.length() - size] = (code.q() - 1) * count;
  r.expect("A_w = (q-1) nu_w", fmt(wd), fmt(from_sections));
  BettiTable t = ctx.hochster(code);
  r.check("Hochster scan agrees with bs_solve", same_values(t, solved));
}

void item_tf3(Recorder& r, Context& ctx) {
  BettiTable t = ctx.hochster(projective_system_code(ovoid(3)));
  r.expect("pure type", "(0,6,8,9,10)", fmt_pure_type(t));
  r.expect("beta", fmt(ints({30, 135, 160, 54})), fmt(step_totals(t)));
}

void item_rt3_curve(Recorder& r, Context& ctx) {
  BettiTable t = ctx.hochster(projective_system_code(hermitian(2, 3, ctx.budget)));
  r.expect("pure type", "(0,6,8,9)", fmt_pure_type(t));
  r.expect("beta", fmt(ints({12, 27, 16})), fmt(step_totals(t)));
  r.check("bs_check", bs_check(t).ok);
  const long q = 2;
  const long reference = q * (q * q - 1) * (q * q - q + 1);
  BettiTable forced = t;
  forced.entries[{3, 9}] = reference;
  r.note("reference closed form q(q^2-1)(q^2-q+1) gives beta_3 = " + std::to_string(reference) + "; computed " +
         t.at(3, 9).get_str() + "; with " + std::to_string(reference) + " the l=0 residual is " +
         bs_check(forced).residuals.at(0).get_str());
}

void item_rt3_surface(Recorder& r, Context& ctx) {
  LinearCode code = projective_system_code(hermitian(2, 4, ctx.budget));
  ShiftSets shifts = betti_shifts(code, ctx.budget);
  r.expect("betti_shifts", "{1:{32,36}, 2:{40,42}, 3:{44}, 4:{45}}", fmt(shifts));
  auto first = first_step_betti(code, ctx.budget);
  r.expect("first_step_betti", "{32:45, 36:40}", fmt(first));
  BettiTable solved = bs_solve(code.length(), code.dimension(), code.q(), shifts, step_one(first));
  r.expect("bs_solve (beta_{2,40}, beta_{2,42}, beta_{3,44}, beta_{4,45})", fmt(ints({108, 960, 2520, 1536})),
           fmt(std::vector<BigInt>{solved.at(2, 40), solved.at(2, 42), solved.at(3, 44), solved.at(4, 45)}));
  r.check("3-MDS", is_h_mds(code, 3, ctx.budget));
}

void item_tf2(Recorder& r, Context& ctx) {
  const std::uint64_t q = 8, h = 4;
  ProjectiveSystem arc = denniston_arc(q, h);
  std::set<std::size_t> spectrum;
  for (const auto& [size, count] : section_spectrum(arc, 1, ctx.budget)) spectrum.insert(size);
  r.expect("line spectrum", "{0,4}", fmt(spectrum));
  LinearCode code = projective_system_code(arc);
  std::set<std::size_t> weights;
  for (const auto& [w, count] : weight_distribution(code, ctx.budget))
    if (w > 0) weights.insert(w);
  r.expect("weights", "{24,28}", fmt(weights));
  PurityReport report = purity(code, ctx.budget);
  r.check("pure", report.pure);
  r.expect("shifts", "(0,24,27,28)", report.pure_type ? fmt(*report.pure_type) : std::string("not pure"));
  if (report.pure_type) {
    auto beta = herzog_kuhl(*report.pure_type);
    r.expect("herzog_kuhl", fmt(ints({63, 224, 162})), fmt(beta));
    BettiTable t{code.length(), code.dimension(), q, BettiMethod::ClosedForm, {}};
    t.entries[{0, 0}] = 1;
    for (std::size_t i = 1; i < report.pure_type->size(); ++i) t.entries[{i, (*report.pure_type)[i]}] = beta[i - 1];
    r.check("bs_check", bs_check(t).ok);
    const std::uint64_t reference = (q + 1) * (q + 1) - q / h;
    r.note("reference closed form (q+1)^2 - q/h gives beta_1 = " + std::to_string(reference) + "; computed " +
           beta[0].get_str());
  }

  // Lines meeting the arc, as a system of the dual plane; shift level only.
  ProjectiveSystem dual = lines_meeting(arc, h);
  LinearCode dual_code = projective_system_code(dual);
  ShiftSets shifts = betti_shifts(dual_code, ctx.budget);
  BettiTable solved = bs_solve(dual_code.length(), dual_code.dimension(), q, shifts,
                               step_one(first_step_betti(dual_code, ctx.budget)));
  const std::uint64_t reference = q * q * (q + 1) * (h - 1) / 2;
  r.note("dual arc [" + std::to_string(dual_code.length()) + ",3]_8: " + fmt_entries(solved) +
         "; reference closed form q^2(q+1)(h-1)/2 gives beta_3 = " + std::to_string(reference) + "; computed " +
         step_totals(solved).back().get_str());
}

void item_rt1(Recorder& r, Context& ctx) {
  LinearCode code = projective_system_code(subfield_system(2, 3));
  PurityReport report = purity(code, ctx.budget);
  r.check("pure", report.pure);
  r.expect("shifts", "(0,4,6,7)", report.pure_type ? fmt(*report.pure_type) : std::string("not pure"));
  if (report.pure_type) r.expect("beta", fmt(ints({7, 14, 8})), fmt(herzog_kuhl(*report.pure_type)));
  BettiTable t = ctx.hochster(code);
  r.expect("Hochster pure type", "(0,4,6,7)", fmt_pure_type(t));
  r.expect("Hochster beta", fmt(ints({7, 14, 8})), fmt(step_totals(t)));
}

void item_properties(Recorder& r, Context& ctx) {
  const auto corpus = random_projective_codes(25, 20240611);
  std::size_t ghw_ok = 0, homology_ok = 0, homology_total = 0, methods_ok = 0, methods_total = 0, tail_ok = 0;
  for (const LinearCode& code : corpus) {
    BettiTable t = ctx.hochster(code);
    if (ghw_hierarchy(code, ctx.budget) == t.ghw()) ++ghw_ok;

    const MatroidView matroid(code);
    auto scan = matroid.scan(ctx.budget);
    for (std::size_t i = 1; i < scan->minimal_sets().size(); ++i)
      for (Support sigma : scan->minimal_sets()[i]) {
        if (std::popcount(sigma) > 8) continue;
        ++homology_total;
        auto dims = homology_dims(matroid, sigma, ctx.budget);
        std::int64_t alternating = 0, total = 0;
        for (std::size_t j = 0; j < dims.size(); ++j) {
          alternating += (j % 2 == 0 ? -1 : 1) * static_cast<std::int64_t>(dims[j]);
          total += static_cast<std::int64_t>(dims[j]);
        }
        const std::int64_t chi = scan->reduced_euler_char(sigma);
        if (alternating == chi && total == std::abs(chi)) ++homology_ok;
      }

    for (std::size_t i = 0; i <= code.dimension(); ++i) {
      ++methods_total;
      auto a = minimal_nullity_sets(code, i, NullityMethod::Scan, ctx.budget).minimal_sets;
      auto b = minimal_nullity_sets(code, i, NullityMethod::Subcode, ctx.budget).minimal_sets;
      if (a == b) ++methods_ok;
    }

    const std::size_t n = code.length(), k = code.dimension();
    if (t.shifts(k - 1) == std::set<std::size_t>{n - 1} && t.shifts(k) == std::set<std::size_t>{n}) ++tail_ok;
  }
  std::size_t bs_ok = 0;
  for (const auto& t : ctx.hochster_tables)
    if (bs_check(t).ok) ++bs_ok;

  const auto count = [](std::size_t a, std::size_t b) { return std::to_string(a) + "/" + std::to_string(b); };
  r.record("(a) ghw equals least shifts", count(corpus.size(), corpus.size()), count(ghw_ok, corpus.size()));
  r.record("(b) bs_check on every Hochster table", count(ctx.hochster_tables.size(), ctx.hochster_tables.size()),
           count(bs_ok, ctx.hochster_tables.size()));
  r.record("(c) homology vs Euler characteristic, |sigma| <= 8", count(homology_total, homology_total),
           count(homology_ok, homology_total));
  r.check("(c) at least one sigma checked", homology_total > 0);
  r.record("(d) scan vs subcode minimal sets", count(methods_total, methods_total), count(methods_ok, methods_total));
  r.record("(e) single shifts n-1, n at steps k-1, k", count(corpus.size(), corpus.size()),
           count(tail_ok, corpus.size()));
}

struct ItemDef {
  int number;
  const char* tag;
  const char* title;
  double limit;
  void (*run)(Recorder&, Context&);
};

const ItemDef kItems[] = {
    {1, "mds", "hyperoval [6,3]_4 MDS table", 1, item_mds},
    {2, "simplex", "simplex [7,3]_2 constant-weight table", 1, item_simplex},
    {3, "rm1", "Reed-Muller RM_2(1,3) table", 5, item_rm1},
    {4, "rm-binary", "RM_2(2,4) is not pure", 10, item_rm_binary},
    {5, "rm-q4", "RM_4(2,2) is not pure", 30, item_rm_q4},
    {6, "tf1d", "dual hyperoval q=2", 1, item_tf1d_2},
    {7, "tf1d", "dual hyperoval q=4", 60, item_tf1d_4},
    {8, "tf3", "ovoid q=3", 10, item_tf3},
    {9, "rt3", "Hermitian curve q=2", 5, item_rt3_curve},
    {10, "rt3", "Hermitian surface q=2", 60, item_rt3_surface},
    {11, "tf2", "Denniston arc q=8, h=4", 60, item_tf2},
    {12, "rt1", "subfield system q=2, k=3", 5, item_rt1},
    {13, "properties", "random corpus properties", 600, item_properties},
};

}  // namespace

std::vector<std::string> verify_tags() {
  std::vector<std::string> out;
  for (const auto& s : kItems)
    if (std::find(out.begin(), out.end(), s.tag) == out.end()) out.push_back(s.tag);
  return out;
}

std::vector<VerifyItem> run_verification(const VerifyOptions& options) {
  for (const auto& tag : options.only)
    if (std::find_if(std::begin(kItems), std::end(kItems), [&](const ItemDef& s) { return tag == s.tag; }) ==
        std::end(kItems))
      throw Error(ErrorKind::InvalidParameters, "unknown verify tag " + tag);

  testing::set_field_fault_injection(options.inject_fault);
  Context ctx{options.budget, {}};
  std::vector<VerifyItem> out;
  for (const auto& def : kItems) {
    if (!options.only.empty() && !options.only.count(def.tag)) continue;
    VerifyItem item;
    item.number = def.number;
    item.tag = def.tag;
    item.title = def.title;
    item.limit_seconds = def.limit;
    Recorder rec(item);
    const auto start = std::chrono::steady_clock::now();
    try {
      def.run(rec, ctx);
      item.passed = !rec.failed();
    } catch (const std::exception& e) {
      item.lines.push_back(std::string("FAIL error: ") + e.what());
      item.passed = false;
    }
    item.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (item.seconds > item.limit_seconds) {
      item.lines.push_back("FAIL runtime " + std::to_string(item.seconds) + " s over the " +
                           std::to_string(item.limit_seconds) + " s limit");
      item.passed = false;
    }
    if (options.on_item) options.on_item(item);
    out.push_back(std::move(item));
  }
  testing::set_field_fault_injection(false);
  return out;
}

std::vector<LinearCode> random_projective_codes(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::uint64_t orders[] = {2, 3, 4};
  std::vector<LinearCode> out;
  while (out.size() < count) {
    const std::uint64_t q = orders[std::uniform_int_distribution<int>(0, 2)(rng)];
    const std::size_t k = std::uniform_int_distribution<std::size_t>(2, 4)(rng);
    FiniteField field = FiniteField::of_order(q);
    auto pool = projective_points(field, k);
    const std::size_t most = std::min<std::size_t>(10, pool.size());
    if (most <= k) continue;
    const std::size_t n = std::uniform_int_distribution<std::size_t>(k + 1, most)(rng);
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(n);
    ProjectiveSystem sys = make_projective_system(field, k, pool);
    if (!sys.nondegenerate()) continue;
    out.push_back(projective_system_code(sys));
  }
  return out;
}

}  // namespace resolv
