#include <doctest.h>

#include <cmath>
#include <limits>

#include "shms/objective.hpp"

using namespace shms;

namespace {

BoundedProblem box2() {
    return {"box", 2, {-1.0, 0.0}, {1.0, 10.0}, [](const Vec& x, Rng*) { return x[0] + x[1]; }};
}

}  // namespace

TEST_CASE("clamp projects onto the box and is idempotent") {
    auto p = box2();
    Vec x{-3.0, 12.0};
    Vec c = clamp(x, p);
    CHECK(c == Vec{-1.0, 10.0});
    CHECK(clamp(c, p) == c);
    CHECK(in_bounds(c, p));
    CHECK_FALSE(in_bounds(x, p));

    Rng rng(3);
    for (int i = 0; i < 1000; ++i) {
        Vec y{rng.uniform(-5, 5), rng.uniform(-20, 20)};
        Vec once = clamp(y, p);
        CHECK(clamp(once, p) == once);
        CHECK(in_bounds(once, p));
    }
}

TEST_CASE("evaluate counts calls and rejects non-finite values") {
    auto p = box2();
    EvalCounter n;
    CHECK(evaluate(p, {0.5, 1.0}, n) == doctest::Approx(1.5));
    CHECK(n.count == 1);

    p.eval = [](const Vec&, Rng*) { return std::numeric_limits<double>::quiet_NaN(); };
    try {
        evaluate(p, {0.0, 1.0}, n);
        FAIL("expected NonFiniteObjective");
    } catch (const NonFiniteObjective& e) {
        CHECK(e.point() == Vec{0.0, 1.0});
    }
    CHECK(n.count == 2);

    CHECK_THROWS_AS(evaluate(p, {0.0}, n), DimensionMismatch);
}

TEST_CASE("problem validation") {
    auto p = box2();
    CHECK_NOTHROW(p.validate());
    p.upper[0] = -2.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = box2();
    p.lower.pop_back();
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_CASE("rng streams are reproducible and in range") {
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
    Rng r(7);
    for (int i = 0; i < 10000; ++i) {
        double u = r.uniform();
        CHECK((u >= 0.0 && u < 1.0));
        double v = r.uniform_open();
        CHECK((v > 0.0 && v < 1.0));
        CHECK(r.index(5) < 5);
    }
}
