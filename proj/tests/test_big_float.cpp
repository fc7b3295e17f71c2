#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "spnet/errors.hpp"
#include "spnet/numerics/big_float.hpp"

using namespace spnet;

TEST_CASE("construction and rendering") {
    const BigFloat third(Rational(BigInt(1), BigInt(3)), 128);
    CHECK(third.precision() == 128);
    CHECK(third.to_fixed(6) == "0.333333");
    CHECK(BigFloat(std::string("3.5608393095389433"), 256).to_string(17) == "3.5608393095389433e+00");
    CHECK(BigFloat(BigInt(12345), 64).to_double() == 12345.0);
}

TEST_CASE("operations widen to the larger precision") {
    const BigFloat a(1.0, 64), b(3.0, 256);
    const BigFloat c = a / b;
    CHECK(c.precision() == 256);
    CHECK((c * b - a).abs() < BigFloat(std::string("1e-70"), 256));
}

TEST_CASE("elementary functions") {
    const BigFloat two(2.0, 256);
    CHECK(std::abs(two.sqrt().to_double() - std::sqrt(2.0)) < 1e-15);
    CHECK(std::abs(BigFloat::ln2(256).to_double() - std::log(2.0)) < 1e-15);
    CHECK((two.log().exp() - two).abs() < BigFloat(std::string("1e-70"), 256));
    CHECK(two.pow(10) == BigFloat(1024.0, 256));
    CHECK(std::abs(two.pow(BigFloat(-1.5, 256)).to_double() - std::pow(2.0, -1.5)) < 1e-15);
    CHECK(two.reciprocal() == BigFloat(0.5, 256));
}

TEST_CASE("bisect_root") {
    const BigFloat tol(std::string("1e-60"), 256);
    RealFunction identity = [](const BigFloat& x) { return x; };
    CHECK((bisect_root(identity, BigFloat(0.5, 256), BigFloat(0.0, 256), BigFloat(1.0, 256), tol) -
           BigFloat(0.5, 256)).abs() < tol);

    RealFunction square = [](const BigFloat& x) { return x * x; };
    const BigFloat root = bisect_root(square, BigFloat(2.0, 256), BigFloat(1.0, 256), BigFloat(2.0, 256), tol);
    CHECK((root - BigFloat(2.0, 256).sqrt()).abs() < tol);
    CHECK(root.to_string(9) == "1.41421356e+00");

    CHECK_THROWS_AS(bisect_root(square, BigFloat(9.0, 256), BigFloat(1.0, 256), BigFloat(2.0, 256), tol),
                    BracketingError);
}
