#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "xcv/expr_io.hpp"

using namespace xcv;

namespace {
const std::vector<std::string> XY{"X", "Y"};
const std::vector<std::string> MP{"edge:0:near:1", "tri:0:center"};
}  // namespace

TEST_CASE("printing canonical forms") {
  Laurent f(2);
  f.add_term({2, -1}, Rat(3, 2));
  f.add_term({1, 0}, Rat(1));
  f.add_term({0, 0}, Rat(-2));
  CHECK(print_laurent(f, XY) == "-2 + X + 3/2 * X^2 * Y^-1");
  CHECK(print_laurent(Laurent(2), XY) == "0");
  CHECK(print_laurent(Laurent::constant(2, Rat(-7, 3)), XY) == "-7/3");
  CHECK(print_laurent(Laurent::variable(2, 1), XY) == "Y");
  Laurent neg(2);
  neg.add_term({1, 1}, Rat(-1));
  CHECK(print_laurent(neg, XY) == "-X * Y");
}

TEST_CASE("rational functions print as quotients only when needed") {
  RatFunc x = RatFunc::variable(2, 0);
  RatFunc y = RatFunc::variable(2, 1);
  RatFunc one = RatFunc::constant(2, 1);
  CHECK(print_ratfunc(x + one, XY) == "1 + X");
  CHECK(print_ratfunc(one / (one + y), XY) == "(1) / (1 + Y)");
  CHECK(print_ratfunc(x / y, XY) == "X * Y^-1");  // monomial denominators fold in
}

TEST_CASE("parsing basics") {
  CHECK(parse_ratfunc("X + 2 * Y", XY) ==
        RatFunc::variable(2, 0) + RatFunc::constant(2, 2) * RatFunc::variable(2, 1));
  CHECK(parse_ratfunc("(1 + X)^2 / Y", XY) ==
        (RatFunc::constant(2, 1) + RatFunc::variable(2, 0)).pow(2) / RatFunc::variable(2, 1));
  CHECK(parse_ratfunc("X^-1", XY) == RatFunc::variable(2, 0).pow(-1));
  CHECK(parse_ratfunc("-X - -Y", XY) ==
        -RatFunc::variable(2, 0) + RatFunc::variable(2, 1));
  CHECK(parse_ratfunc("3/2", XY) == RatFunc::constant(2, Rat(3, 2)));
  CHECK(parse_ratfunc("3 / 2", XY) == RatFunc::constant(2, Rat(3, 2)));
  CHECK(parse_ratfunc("2/4 * X", XY) == RatFunc::constant(2, Rat(1, 2)) * RatFunc::variable(2, 0));
}

TEST_CASE("marked point style names parse") {
  RatFunc f = parse_ratfunc("edge:0:near:1 * tri:0:center^-2", MP);
  CHECK(f == RatFunc::variable(2, 0) * RatFunc::variable(2, 1).pow(-2));
  CHECK(print_ratfunc(f, MP) == "edge:0:near:1 * tri:0:center^-2");
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_ratfunc("Q + 1", XY), std::invalid_argument);
  CHECK_THROWS_AS(parse_ratfunc("X +", XY), std::invalid_argument);
  CHECK_THROWS_AS(parse_ratfunc("X 1", XY), std::invalid_argument);
  CHECK_THROWS_AS(parse_ratfunc("(X", XY), std::invalid_argument);
  CHECK_THROWS_AS(parse_ratfunc("", XY), std::invalid_argument);
  CHECK_THROWS_AS(parse_laurent("1 / (1 + X)", XY), std::invalid_argument);
}

TEST_CASE("round-trip is bit-exact on random rational functions") {
  std::mt19937 rng(7301);
  std::uniform_int_distribution<int> nterms(1, 4), expo(-2, 2), coeff(-5, 5);
  auto random_laurent = [&](int arity) {
    Laurent r(arity);
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
      Exp m(arity);
      for (int i = 0; i < arity; ++i) m[i] = expo(rng);
      r.add_term(m, Rat(coeff(rng)));
    }
    return r;
  };
  int done = 0;
  while (done < 40) {
    Laurent num = random_laurent(2), den = random_laurent(2);
    if (den.is_zero()) continue;
    RatFunc f(num, den);
    std::string text = print_ratfunc(f, XY);
    RatFunc back = parse_ratfunc(text, XY);
    CHECK(back == f);
    CHECK(print_ratfunc(back, XY) == text);
    ++done;
  }
}
