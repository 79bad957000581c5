#include "doctest.h"

#include <cmath>
#include <sstream>

#include "rootsum/io.hpp"

using namespace rootsum;

TEST_CASE("polynomial parsing with comments and blank lines") {
  std::istringstream in(
      "# a quadratic with zeros 2 and 3\n"
      "2\n"
      "\n"
      "6 0   # constant term\n"
      "-5 0\n"
      "1 0\n");
  Poly p = parse_poly(in);
  CHECK(p.degree() == 2);
  CHECK(p.at(0) == Complex(6.0));
  CHECK(p.at(1) == Complex(-5.0));
  CHECK(p.at(2) == Complex(1.0));
}

TEST_CASE("polynomial parsing rejects malformed input") {
  std::istringstream missing("2\n6 0\n-5 0\n");
  CHECK_THROWS_AS(parse_poly(missing), ParseError);
  std::istringstream badnum("1\n6 0\nx 0\n");
  CHECK_THROWS_AS(parse_poly(badnum), ParseError);
  std::istringstream zerolead("1\n1 0\n0 0\n");
  CHECK_THROWS_AS(parse_poly(zerolead), ParseError);
  std::istringstream negdeg("-1\n");
  CHECK_THROWS_AS(parse_poly(negdeg), ParseError);
  std::istringstream junkdeg("two\n");
  CHECK_THROWS_AS(parse_poly(junkdeg), ParseError);
}

TEST_CASE("matrix parsing") {
  std::istringstream in(
      "2\n"
      "1,0 2,-0.5\n"
      "0,0 3,0\n");
  CMatrix m = parse_matrix(in);
  CHECK(m.n == 2);
  CHECK(m.at(0, 0) == Complex(1.0));
  CHECK(m.at(0, 1) == Complex(2.0, -0.5));
  CHECK(m.at(1, 0) == Complex(0.0));
  CHECK(m.at(1, 1) == Complex(3.0));

  std::istringstream shortrow("2\n1,0\n0,0 3,0\n");
  CHECK_THROWS_AS(parse_matrix(shortrow), ParseError);
  std::istringstream badentry("1\n1;0\n");
  CHECK_THROWS_AS(parse_matrix(badentry), ParseError);
}

TEST_CASE("program parsing evaluates like the dense polynomial it encodes") {
  // f(x) = (x^2 - 2) via: 0 in; 1 mul 0 0; 2 const 2 0; 3 sub 1 2
  std::istringstream in(
      "0 in\n"
      "1 mul 0 0\n"
      "2 const 2 0\n"
      "3 sub 1 2\n");
  StraightLineProgram prog = parse_slp(in);
  NewtonOracle f = oracle_from_slp(prog, 2);
  NewtonOracle g = oracle_from_coeffs(Poly({{-2, 0}, {0, 0}, {1, 0}}));
  for (double x : {0.5, 1.7, -2.3}) {
    Complex a = f.evaluate(Complex(x, 0.3));
    Complex b = g.evaluate(Complex(x, 0.3));
    CHECK(std::abs(a - b) <= 1e-12 * (1.0 + std::abs(b)));
  }
}

TEST_CASE("program parsing rejects malformed instructions") {
  std::istringstream gap("0 in\n2 mul 0 0\n");
  CHECK_THROWS_AS(parse_slp(gap), ParseError);
  std::istringstream badop("0 in\n1 pow 0 0\n");
  CHECK_THROWS_AS(parse_slp(badop), ParseError);
  std::istringstream arity("0 in\n1 add 0\n");
  CHECK_THROWS_AS(parse_slp(arity), ParseError);
  std::istringstream empty("# nothing\n");
  CHECK_THROWS_AS(parse_slp(empty), ParseError);
}

TEST_CASE("centers parsing") {
  std::istringstream in("0.5 -1 # near the small zero\n2 3\n");
  auto centers = parse_centers(in);
  REQUIRE(centers.size() == 2);
  CHECK(centers[0] == Complex(0.5, -1.0));
  CHECK(centers[1] == Complex(2.0, 3.0));
  std::istringstream bad("1\n");
  CHECK_THROWS_AS(parse_centers(bad), ParseError);
}

TEST_CASE("real formatting round-trips exactly") {
  for (double x : {0.1, 1.0 / 3.0, -2.5e-17, 1e300, 0.0}) {
    std::string s = format_real(x);
    CHECK(std::stod(s) == x);
  }
  CHECK(format_complex(Complex(0.5, -0.25)) == "0.5 -0.25");
}

TEST_CASE("printed polynomials parse back bit-for-bit") {
  Poly p({{1.0 / 3.0, -0.7}, {2e-9, 1e9}, {-1.25, 0.0}});
  std::ostringstream out;
  print_poly(out, p);
  std::istringstream in(out.str());
  Poly q = parse_poly(in);
  REQUIRE(q.degree() == p.degree());
  for (int i = 0; i <= p.degree(); ++i) CHECK(q.at(i) == p.at(i));
}

TEST_CASE("missing files are reported by path") {
  CHECK_THROWS_AS(load_poly("/nonexistent/path/p.txt"), ParseError);
}
