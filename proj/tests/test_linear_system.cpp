#include <random>
#include <sstream>

#include "doctest.h"
#include "pathsys/linear_system.hpp"

using namespace pathsys;

namespace {

LinearSystem random_system(std::mt19937& rng, std::size_t vars, std::size_t rows) {
  LinearSystem sys;
  for (std::size_t i = 0; i < vars; ++i) sys.add_variable("x" + std::to_string(i));
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> bound(-2, 3);
  std::uniform_int_distribution<int> den(1, 3);
  for (std::size_t k = 0; k < rows; ++k) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < vars; ++i) {
      const int c = coeff(rng);
      if (c != 0) terms.push_back({i, Rational(c, den(rng))});
    }
    Rational b(bound(rng), den(rng));
    b.canonicalize();
    for (auto& t : terms) t.coeff.canonicalize();
    sys.add_row(std::move(terms), b, "r" + std::to_string(k));
  }
  return sys;
}

}  // namespace

TEST_SUITE("linsys") {

TEST_CASE("canonical rows") {
  LinearSystem sys;
  const auto x = sys.add_variable("x");
  const auto y = sys.add_variable("y");
  sys.add_row({{y, 2}, {x, 1}, {y, -2}, {x, 1}}, 1, "merged");
  CHECK(sys.row(0).terms == std::vector<Term>{{x, 2}});
  sys.add_row_le({{x, 1}}, 4);
  CHECK(sys.row(1).terms == std::vector<Term>{{x, -1}});
  CHECK(sys.row(1).bound == -4);
  CHECK_THROWS_AS(sys.add_variable("x"), InputError);
  CHECK_THROWS_AS(sys.add_variable("a b"), InputError);
  CHECK_THROWS_AS(sys.add_row({{7, 1}}, 0), InputError);
}

TEST_CASE("small feasibility examples") {
  LinearSystem bad;
  const auto x = bad.add_variable("x");
  bad.add_row({{x, 1}}, 1);
  bad.add_row({{x, -1}}, 0);
  const Verdict v = solve_feasibility(bad);
  REQUIRE_FALSE(is_feasible(v));
  const auto& cert = std::get<Infeasible>(v).certificate;
  REQUIRE(cert.size() == 2);
  CHECK(cert[0].second == cert[1].second);
  CHECK(verify_certificate(bad, v));

  LinearSystem good;
  const auto a = good.add_variable("x");
  const auto b = good.add_variable("y");
  good.add_row({{a, 1}}, 1);
  good.add_row({{b, 1}, {a, -1}}, 0);
  const Verdict w = solve_feasibility(good);
  REQUIRE(is_feasible(w));
  CHECK(verify_certificate(good, w));
}

TEST_CASE("constant rows") {
  LinearSystem sys;
  sys.add_row({}, 1, "0 >= 1");
  const Verdict v = solve_feasibility(sys);
  REQUIRE_FALSE(is_feasible(v));
  CHECK(verify_certificate(sys, v));

  LinearSystem fine;
  fine.add_row({}, -1);
  CHECK(is_feasible(solve_feasibility(fine)));
}

TEST_CASE("the all-ones probe is not required for feasibility") {
  LinearSystem sys;
  const auto x = sys.add_variable("x");
  const auto y = sys.add_variable("y");
  sys.add_row({{x, 1}, {y, -2}}, 3);
  sys.add_row({{y, 1}}, Rational(1, 2));
  sys.add_row({{x, -1}}, -10);
  const Verdict v = solve_feasibility(sys);
  REQUIRE(is_feasible(v));
  CHECK(verify_certificate(sys, v));
}

TEST_CASE("rational coefficients") {
  LinearSystem sys;
  const auto x = sys.add_variable("x");
  sys.add_row({{x, Rational(1, 2)}}, Rational(1, 3));
  sys.add_row({{x, Rational(-2, 3)}}, Rational(-1, 7));
  const Verdict v = solve_feasibility(sys);
  REQUIRE_FALSE(is_feasible(v));
  CHECK(verify_certificate(sys, v));
}

TEST_CASE("corrupted certificates are rejected") {
  LinearSystem sys;
  const auto x = sys.add_variable("x");
  const auto y = sys.add_variable("y");
  sys.add_row({{x, 1}}, 1);
  sys.add_row({{y, 1}}, 1);
  sys.add_row({{x, -1}, {y, -1}}, -1);
  sys.add_row({{x, -1}, {y, 1}}, 0);
  sys.add_row({{x, 1}, {y, -3}}, 0);
  const Verdict v = solve_feasibility(sys);
  REQUIRE_FALSE(is_feasible(v));
  REQUIRE(verify_certificate(sys, v));
  auto cert = std::get<Infeasible>(v).certificate;
  for (std::size_t i = 0; i < cert.size(); ++i) {
    auto zeroed = cert;
    zeroed[i].second = 0;
    CHECK_FALSE(verify_certificate(sys, Infeasible{zeroed}));
  }
  auto negative = cert;
  negative[0].second = -negative[0].second;
  CHECK_FALSE(verify_certificate(sys, Infeasible{negative}));
  CHECK_FALSE(verify_certificate(sys, Feasible{{1, 1}}));
  CHECK_THROWS_AS(verify_certificate(sys, Feasible{{1}}), InputError);
  CHECK_THROWS_AS(verify_certificate(sys, Infeasible{{{9, 1}}}), InputError);
}

TEST_CASE("every verdict on random systems verifies") {
  std::mt19937 rng(5);
  int feasible = 0;
  int infeasible = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const LinearSystem sys = random_system(rng, 1 + trial % 5, 1 + trial % 9);
    SolveStats stats;
    const Verdict v = solve_feasibility(sys, &stats);
    (is_feasible(v) ? feasible : infeasible)++;
    CHECK(verify_certificate(sys, v));
  }
  CHECK(feasible > 20);
  CHECK(infeasible > 20);
}

TEST_CASE("scaling a feasible witness of a homogeneous system") {
  LinearSystem sys;
  for (int i = 0; i < 3; ++i) sys.add_variable("w" + std::to_string(i));
  for (std::size_t i = 0; i < 3; ++i) sys.add_row({{i, 1}}, 1);
  sys.add_row({{0, 1}, {1, 1}, {2, -1}}, 0);
  sys.add_row({{2, 2}, {0, -3}}, 0);
  const Verdict v = solve_feasibility(sys);
  REQUIRE(is_feasible(v));
  auto doubled = std::get<Feasible>(v).witness;
  for (auto& x : doubled) x *= 2;
  CHECK(verify_certificate(sys, Feasible{doubled}));
}

TEST_CASE("linsys and verdict text round trip") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const LinearSystem sys = random_system(rng, 1 + trial % 4, 2 + trial % 6);
    std::ostringstream out;
    write_linear_system(out, sys);
    std::istringstream in(out.str());
    const LinearSystem back = read_linear_system(in);
    REQUIRE(back.num_rows() == sys.num_rows());
    CHECK(back.variables() == sys.variables());
    for (std::size_t k = 0; k < sys.num_rows(); ++k) {
      CHECK(back.row(k).terms == sys.row(k).terms);
      CHECK(back.row(k).bound == sys.row(k).bound);
      CHECK(back.row(k).tag == sys.row(k).tag);
    }
    std::ostringstream again;
    write_linear_system(again, back);
    CHECK(again.str() == out.str());

    const Verdict v = solve_feasibility(sys);
    std::ostringstream vout;
    write_verdict(vout, sys, v);
    std::istringstream vin(vout.str());
    const Verdict vback = read_verdict(vin, back);
    CHECK(is_feasible(vback) == is_feasible(v));
    std::ostringstream vagain;
    write_verdict(vagain, back, vback);
    CHECK(vagain.str() == vout.str());
    CHECK(verify_certificate(back, vback));
  }
}

TEST_CASE("linsys parse errors") {
  auto line_of = [](const std::string& text) -> std::size_t {
    std::istringstream in(text);
    try {
      read_linear_system(in);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("lin v1\n") == 1);
  CHECK(line_of("linsys v1\nvar x\nrow 1 : 1*y\n") == 3);
  CHECK(line_of("linsys v1\nvar x\nrow 1 : 1/0*x\n") == 3);
  CHECK(line_of("linsys v1\nvar x x\n") == 2);
  CHECK(line_of("linsys v1\nvar x\nrow 1 1*x\n") == 3);
  CHECK(line_of("linsys v1\nvar x\nrow 1 : 2.5*x\n") == 3);
  CHECK(line_of("linsys v1\nvar x\nrow -1/2 : 3/4*x\n") == 0);
}

}  // TEST_SUITE
