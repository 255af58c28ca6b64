#include <catch2/catch_amalgamated.hpp>

#include "xcv/expr_io.hpp"
#include "xcv/positivity.hpp"

using namespace xcv;

namespace {
const std::vector<std::string> XY{"x", "y"};
RatFunc fn(const std::string& text) { return parse_ratfunc(text, XY); }
}  // namespace

TEST_CASE("positive Laurent polynomials certify directly") {
  PosCertificate c = certify_positive(fn("1 + x"));
  CHECK(c.status == PosStatus::POSITIVE_LAURENT);
  CHECK(c.integral);

  c = certify_positive(fn("x * y^-1 + 2"));
  CHECK(c.status == PosStatus::POSITIVE_LAURENT);
  CHECK(c.integral);

  c = certify_positive(fn("1/2 + x"));
  CHECK(c.status == PosStatus::POSITIVE_LAURENT);
  CHECK_FALSE(c.integral);
}

TEST_CASE("ratios of positive polynomials certify without multipliers") {
  PosCertificate c = certify_positive(fn("1 / (1 + x)"));
  CHECK(c.status == PosStatus::POSITIVE_RATIO);
  CHECK(c.multiplier.empty());

  c = certify_positive(fn("(1 + x * y) / (x + y)"));
  CHECK(c.status == PosStatus::POSITIVE_RATIO);
  CHECK(c.multiplier.empty());
}

TEST_CASE("alternating signs are cleared by library multipliers") {
  // (1 - x + x^2)(1 + x) = 1 + x^3.
  PosCertificate c = certify_positive(fn("1 - x + x^2"));
  CHECK(c.status == PosStatus::POSITIVE_RATIO);
  CHECK(!c.multiplier.empty());

  c = certify_positive(fn("(1 - x + x^2) / (1 - x^2 + x^4)"));
  CHECK(c.status == PosStatus::POSITIVE_RATIO);
  CHECK(!c.multiplier.empty());
}

TEST_CASE("negative values produce a concrete witness") {
  PosCertificate c = certify_positive(fn("x - 2"));
  REQUIRE(c.status == PosStatus::NEGATIVE_WITNESS);
  REQUIRE(c.witness.has_value());
  REQUIRE(c.witness_value.has_value());
  CHECK(*c.witness_value <= 0);
  CHECK((*c.witness)[0] > 0);
  RatFunc f = fn("x - 2");
  CHECK(f.eval(*c.witness) == *c.witness_value);

  c = certify_positive(RatFunc(2));  // the zero function is not positive
  CHECK(c.status == PosStatus::NEGATIVE_WITNESS);
  CHECK(*c.witness_value == 0);
}

TEST_CASE("positive-valued but uncertifiable input is indeterminate") {
  // Complex roots close to the positive axis defeat the small multiplier
  // library, and the function never dips to zero, so sampling cannot
  // refute it either.
  PosCertificate c = certify_positive(fn("x^2 - 29/10 * x + 22/10"));
  CHECK(c.status == PosStatus::INDETERMINATE);
  CHECK_FALSE(c.witness.has_value());
}

TEST_CASE("certificates are deterministic") {
  PosCertificate a = certify_positive(fn("x - 2"));
  PosCertificate b = certify_positive(fn("x - 2"));
  REQUIRE(a.witness.has_value());
  REQUIRE(b.witness.has_value());
  CHECK(*a.witness == *b.witness);
  CHECK(*a.witness_value == *b.witness_value);
}
