#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "resolv/betti.hpp"
#include "resolv/error.hpp"
#include "resolv/families.hpp"

using namespace resolv;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Parse;
}

std::size_t wt(const std::vector<FieldElement>& v) {
  return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](FieldElement x) { return x != 0; }));
}

std::set<std::size_t> weights(const LinearCode& c) {
  std::set<std::size_t> out;
  for (const auto& [w, n] : weight_distribution(c))
    if (w > 0) out.insert(w);
  return out;
}

std::set<std::size_t> section_sizes(const ProjectiveSystem& p, std::size_t codim = 1) {
  std::set<std::size_t> out;
  for (const auto& [size, n] : section_spectrum(p, codim)) out.insert(size);
  return out;
}

bool in_code(const LinearCode& c, const std::vector<FieldElement>& word) {
  return LinearCode::make(c.generator().stacked(Matrix::from_rows(c.field(), {word}))).dimension() == c.dimension();
}

}  // namespace

TEST_CASE("Reed-Muller parameters") {
  RMParameters a = rm_parameters(2, 2, 4);
  CHECK(a.n == 16);
  CHECK(a.k == 11);
  CHECK(a.d == 4);
  CHECK(a.t == 2);
  CHECK(a.s == 0);
  RMParameters b = rm_parameters(3, 1, 2);
  CHECK(b.n == 9);
  CHECK(b.k == 3);
  CHECK(b.d == 6);
  for (std::uint64_t q : {2, 3, 4})
    for (std::size_t m : {1, 2, 3}) {
      RMParameters full = rm_parameters(q, m * (q - 1), m);
      CHECK(full.k == full.n);
      CHECK(full.d == 1);
    }
  CHECK(kind_of([] { rm_parameters(2, 5, 4); }) == ErrorKind::OutOfRange);
  CHECK(kind_of([] { rm_parameters(2, 1, 0); }) == ErrorKind::OutOfRange);
}

TEST_CASE("Reed-Muller dimension equals generator rank for q^m <= 256") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16})
    for (std::size_t m = 1;; ++m) {
      std::uint64_t n = 1;
      for (std::size_t i = 0; i < m; ++i) n *= q;
      if (n > 256) break;
      for (std::size_t r = 0; r <= m * (q - 1); r += (q > 4 ? 3 : 1)) {
        CAPTURE(q);
        CAPTURE(m);
        CAPTURE(r);
        LinearCode c = reed_muller(q, r, m);
        CHECK(c.dimension() == rm_parameters(q, r, m).k);
        CHECK(c.length() == n);
      }
    }
}

TEST_CASE("Reed-Muller duality and minimum distance") {
  for (auto [q, m, r] : {std::tuple{2, 3, 1}, {2, 2, 1}, {3, 2, 0}, {3, 2, 1}, {3, 2, 2}, {3, 2, 3}}) {
    const std::size_t perp = m * (q - 1) - r - 1;
    CAPTURE(q);
    CAPTURE(r);
    CHECK(dual(reed_muller(q, r, m)) == reed_muller(q, perp, m));
  }
  CHECK(reed_muller(2, 1, 3).dimension() == 4);
  LinearCode high = reed_muller(2, 2, 3);
  CHECK(high.dimension() == 7);
  CHECK(is_h_mds(high, 1));
  CHECK(high == dual(reed_muller(2, 0, 3)));
  CHECK(reed_muller(2, 3, 3).dimension() == 8);
  for (std::uint64_t q : {2, 3, 4})
    for (std::size_t m : {1, 2, 3})
      for (std::size_t r = 0; r <= m * (q - 1); ++r) {
        RMParameters p = rm_parameters(q, r, m);
        std::uint64_t size = 1;
        bool small = true;
        for (std::size_t i = 0; i < p.k && small; ++i) small = (size *= q) <= (1u << 20);
        if (!small) continue;
        CAPTURE(q);
        CAPTURE(m);
        CAPTURE(r);
        CHECK(*weights(reed_muller(q, r, m)).begin() == p.d);
      }
}

TEST_CASE("polynomial codewords") {
  FiniteField f2 = FiniteField::of_order(2);
  auto one = poly_codeword(Polynomial::constant(f2, 4, 1));
  CHECK(wt(one) == 16);
  auto x = [&](std::size_t i) { return Polynomial::variable(f2, 4, i); };
  auto q43 = poly_codeword(x(0) * x(1) + x(2) * x(3));
  CHECK(wt(q43) == 6);
  CHECK(in_code(reed_muller(2, 2, 4), q43));

  FiniteField f4 = FiniteField::of_order(4);
  auto q44 = poly_codeword((Polynomial::variable(f4, 2, 1) - 1) * Polynomial::variable(f4, 2, 0));
  CHECK(wt(q44) == 9);
  CHECK(in_code(reed_muller(4, 2, 2), q44));

  CHECK(kind_of([&] { poly_codeword(x(0) * x(0)); }) == ErrorKind::DegreeTooHigh);
  CHECK((x(0) * x(0)).total_degree() == 2);
}

TEST_CASE("simplex and Reed-Solomon codes") {
  LinearCode s = simplex(2, 3);
  CHECK(s.length() == 7);
  CHECK(weights(s) == std::set<std::size_t>{4});
  LinearCode s3 = simplex(3, 3);
  CHECK(s3.length() == 13);
  CHECK(weights(s3) == std::set<std::size_t>{9});
  CHECK(simplex(5, 1).length() == 1);
  CHECK(simplex(5, 1).dimension() == 1);

  LinearCode rs = mds_rs(5, 4, 2);
  CHECK(*weights(rs).begin() == 3);
  LinearCode ext = mds_rs(4, 5, 3);
  CHECK(*weights(ext).begin() == 3);
  CHECK(kind_of([] { mds_rs(4, 6, 3); }) == ErrorKind::LengthTooLong);
  CHECK(kind_of([] { mds_rs(4, 3, 4); }) == ErrorKind::InvalidParameters);
}

TEST_CASE("projective systems") {
  FiniteField f2 = FiniteField::of_order(2);
  ProjectiveSystem plane = make_projective_system(f2, 3, projective_points(f2, 3));
  CHECK(projective_system_code(plane) == simplex(2, 3));
  CHECK(ps_higher_weights(hyperoval(4), 1) == 4);
  CHECK(ps_higher_weights(hyperoval(4), 3) == 6);
  CHECK(canonical_point(FiniteField::of_order(5), {0, 3, 1}) == std::vector<FieldElement>{0, 1, 2});
  ProjectiveSystem line = make_projective_system(f2, 3, {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}});
  CHECK_FALSE(line.nondegenerate());
  CHECK(kind_of([&] { projective_system_code(line); }) == ErrorKind::Degenerate);
  CHECK(kind_of([&] { make_projective_system(f2, 2, {{0, 0}}); }) == ErrorKind::InvalidParameters);
}

TEST_CASE("hyperovals and their duals") {
  CHECK(hyperoval(2).size() == 4);
  ProjectiveSystem h4 = hyperoval(4);
  CHECK(h4.size() == 6);
  CHECK(is_h_mds(projective_system_code(h4), 1));
  CHECK(section_sizes(hyperoval(8)) == std::set<std::size_t>{0, 2});
  CHECK(kind_of([] { hyperoval(3); }) == ErrorKind::OddCharacteristic);

  LinearCode d2 = projective_system_code(dual_hyperoval(2));
  CHECK(d2.length() == 6);
  CHECK(weights(d2) == std::set<std::size_t>{3, 4});
  ProjectiveSystem d4 = dual_hyperoval(4);
  auto wd = weight_distribution(projective_system_code(d4));
  CHECK(wd == WeightDistribution{{0, 1}, {10, 18}, {12, 45}});
  CHECK(section_sizes(d4) == std::set<std::size_t>{5, 3});
  CHECK(kind_of([] { dual_hyperoval(9); }) == ErrorKind::OddCharacteristic);
}

TEST_CASE("Denniston arcs") {
  ProjectiveSystem a = denniston_arc(4, 2);
  CHECK(a.size() == 6);
  CHECK(section_sizes(a) == std::set<std::size_t>{0, 2});
  ProjectiveSystem b = denniston_arc(8, 4);
  CHECK(b.size() == 28);
  CHECK(weights(projective_system_code(b)) == std::set<std::size_t>{24, 28});
  CHECK(section_sizes(denniston_arc(8, 2)) == std::set<std::size_t>{0, 2});
  CHECK(denniston_arc(16, 4).size() == 1 + 17 * 3);
  CHECK(kind_of([] { denniston_arc(8, 3); }) == ErrorKind::InvalidDivisor);
  CHECK(kind_of([] { denniston_arc(8, 8); }) == ErrorKind::InvalidDivisor);
  CHECK(kind_of([] { denniston_arc(9, 3); }) == ErrorKind::OddCharacteristic);
}

TEST_CASE("lines meeting a maximal arc") {
  ProjectiveSystem dual = lines_meeting(denniston_arc(8, 4), 4);
  CHECK(dual.size() == 63);
  LinearCode c = projective_system_code(dual);
  ShiftSets shifts = betti_shifts(c);
  CHECK(shifts == ShiftSets{{0, {0}}, {1, {54, 56}}, {2, {62}}, {3, {63}}});
  auto first = first_step_betti(c);
  CHECK(first == std::map<std::size_t, BigInt>{{54, 28}, {56, 45}});
  BettiTable t = bs_solve(63, 3, 8, shifts, {{{1, 54}, 28}, {{1, 56}, 45}});
  CHECK(t.at(2, 62) == 504);
  CHECK(t.at(3, 63) == 432);
}

TEST_CASE("ovoids") {
  ProjectiveSystem o = ovoid(3);
  CHECK(o.size() == 10);
  CHECK(weights(projective_system_code(o)) == std::set<std::size_t>{6, 9});
  CHECK(*section_sizes(o, 2).rbegin() == 2);
  CHECK(ovoid(4).size() == 17);
  CHECK(ovoid(5).size() == 26);
  CHECK(kind_of([] { ovoid(2); }) == ErrorKind::UnsupportedQ);
}

TEST_CASE("Hermitian varieties") {
  ProjectiveSystem curve = hermitian(2, 3);
  CHECK(curve.size() == 9);
  CHECK(weights(projective_system_code(curve)) == std::set<std::size_t>{6, 8});
  ProjectiveSystem surface = hermitian(2, 4);
  CHECK(surface.size() == 45);
  CHECK(section_sizes(surface) == std::set<std::size_t>{9, 13});
  CHECK(hermitian(3, 3).size() == 28);
  CHECK(hermitian_point_count(2, 4) == 45);
  Budget tiny;
  tiny.codewords = 100;
  CHECK(kind_of([&] { hermitian(2, 4, tiny); }) == ErrorKind::BudgetExceeded);
}

TEST_CASE("subfield systems") {
  ProjectiveSystem s = subfield_system(2, 3);
  LinearCode c = projective_system_code(s);
  CHECK(c.q() == 4);
  CHECK(weights(c) == std::set<std::size_t>{4, 6});
  PurityReport r = purity(c);
  CHECK(r.pure);
  CHECK(r.pure_type == std::vector<std::size_t>{0, 4, 6, 7});
  CHECK(herzog_kuhl(*r.pure_type) == std::vector<BigInt>{7, 14, 8});
  PurityReport line = purity(projective_system_code(subfield_system(2, 2)));
  CHECK(line.pure_type == std::vector<std::size_t>{0, 2, 3});
  CHECK(herzog_kuhl(*line.pure_type) == std::vector<BigInt>{3, 2});
}

TEST_CASE("hyperplane counts give the weight distribution") {
  std::vector<ProjectiveSystem> systems{hyperoval(4),        dual_hyperoval(4), denniston_arc(8, 4), ovoid(3),
                                        hermitian(2, 3),     hermitian(2, 4),   subfield_system(2, 3)};
  for (const auto& p : systems) {
    LinearCode c = projective_system_code(p);
    WeightDistribution wd = weight_distribution(c);
    WeightDistribution from_sections{{0, 1}};
    for (const auto& [size, nu] : section_spectrum(p, 1)) from_sections[p.size() - size] += (c.q() - 1) * nu;
    CHECK(wd == from_sections);
    CHECK(wd.size() == 3);
  }
}

TEST_CASE("higher weights of projective systems equal code GHWs") {
  std::vector<ProjectiveSystem> systems{hyperoval(4), dual_hyperoval(4), ovoid(3), hermitian(2, 3),
                                        subfield_system(2, 3), denniston_arc(4, 2)};
  for (const auto& p : systems) {
    LinearCode c = projective_system_code(p);
    for (std::size_t r = 1; r <= p.k; ++r) CHECK(ps_higher_weights(p, r) == ghw(c, r));
    CHECK(ps_higher_weights(p, p.k) == p.size());
  }
}
