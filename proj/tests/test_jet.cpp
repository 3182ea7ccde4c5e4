#include "hyperflow/jet.hpp"

#include "hyperflow/lambda.hpp"
#include "support/generators.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

using namespace hyperflow;
namespace ts = hyperflow::testsupport;

namespace {

Rational factorial(int n) {
    Rational f(1);
    for (int i = 2; i <= n; ++i) f *= Rational(i);
    return f;
}

}  // namespace

TEST_CASE("time jet arithmetic") {
    TimeJet a(3);
    a.set_coeff(0, Rational(1));
    a.set_coeff(1, Rational(1, 2));
    TimeJet b(3);
    b.set_coeff(1, Rational(2));
    b.set_coeff(3, Rational(-1));

    const TimeJet sum = a + b;
    CHECK(sum.coeff(0) == Rational(1));
    CHECK(sum.coeff(1) == Rational(5, 2));
    CHECK(sum.coeff(3) == Rational(-1));

    const TimeJet prod = a * b;
    CHECK(prod.coeff(0) == Rational());
    CHECK(prod.coeff(1) == Rational(2));
    CHECK(prod.coeff(2) == Rational(1));
    CHECK(prod.coeff(3) == Rational(-1));

    const TimeJet sq = a.pow(2);
    CHECK(sq.coeff(0) == Rational(1));
    CHECK(sq.coeff(1) == Rational(1));
    CHECK(sq.coeff(2) == Rational(1, 4));

    CHECK(a.evaluate(2.0) == doctest::Approx(2.0));
    CHECK(TimeJet::constant(Rational(5), 2).is_constant());
    CHECK_FALSE(b.is_constant());
    CHECK_THROWS_AS(TimeJet(-1), std::invalid_argument);
    CHECK_THROWS_AS(a.coeff(4), std::out_of_range);
}

TEST_CASE("coordinate jets at simple points") {
    const Derivation d1{OpIndex(1)};

    Assignment p0;
    p0.set(Coordinate(1, 1), Rational(1));
    const TimeJet jet = taylor_jet(d1, p0, Coordinate(1, 1), 2);
    CHECK(jet.coeff(0) == Rational(1));
    CHECK(jet.coeff(1) == Rational());
    CHECK(jet.coeff(2) == Rational());

    // the origin is a fixed point: images carry no constant terms
    const TimeJet at_origin = taylor_jet(d1, Assignment(), Coordinate(2, 5), 4);
    for (int n = 0; n <= 4; ++n) CHECK(at_origin.coeff(n) == Rational());

    Assignment p1;
    p1.set(Coordinate(2, 1), Rational(1));
    const TimeJet moving = taylor_jet(d1, p1, Coordinate(1, 1), 1);
    CHECK(moving.coeff(0) == Rational());
    CHECK(moving.coeff(1) == Rational(1));
}

TEST_CASE("jets match the iterated symbolic route") {
    std::mt19937_64 rng(60601);
    const int order = 4;
    for (int k : {1, 3}) {
        const Derivation d{OpIndex(k)};
        for (int trial = 0; trial < 5; ++trial) {
            const Assignment p0 = ts::random_assignment(rng, 5, 4);
            for (const Coordinate c : {Coordinate(1, 1), Coordinate(2, 1), Coordinate(3, 3)}) {
                const TimeJet jet = taylor_jet(d, p0, c, order);
                for (int n = 0; n <= order; ++n) {
                    const Rational expected =
                        d.apply_power(Polynomial::coordinate(c), n).evaluate(p0) / factorial(n);
                    CAPTURE(k);
                    CAPTURE(n);
                    REQUIRE(jet.coeff(n) == expected);
                }
            }
        }
    }
}

TEST_CASE("jet of a polynomial observable is the composition") {
    std::mt19937_64 rng(801);
    const Derivation d3{OpIndex(3)};
    const Assignment p0 = ts::random_assignment(rng, 5, 4);
    FlowJets jets(d3, p0, 5);
    const Polynomial p =
        Polynomial::coordinate(Coordinate(1, 1)) * Polynomial::coordinate(Coordinate(2, 3)) +
        Polynomial::constant(Rational(1, 3));
    const TimeJet composed = jets.jet_of_polynomial(p);
    const TimeJet direct =
        jets.jet(Coordinate(1, 1)) * jets.jet(Coordinate(2, 3)) +
        TimeJet::constant(Rational(1, 3), 5);
    CHECK(composed == direct);
}

TEST_CASE("flow recurrence couples the rows") {
    // d/dt of the row-1 jet is the row-2 jet: (n+1) a_{n+1}(b[1,j]) = a_n(b[2,j])
    std::mt19937_64 rng(140);
    const Derivation d1{OpIndex(1)};
    const Assignment p0 = ts::random_assignment(rng, 7, 6);
    const int order = 6;
    FlowJets jets(d1, p0, order);
    for (int j : {1, 3, 5}) {
        const TimeJet row1 = jets.jet(Coordinate(1, j));
        const TimeJet row2 = jets.jet(Coordinate(2, j));
        for (int n = 0; n < order; ++n) {
            REQUIRE(row1.coeff(n + 1) * Rational(n + 1) == row2.coeff(n));
        }
    }
}

TEST_CASE("lambda jets are constant") {
    std::mt19937_64 rng(220);
    const Assignment p0 = ts::random_assignment(rng, 9, 8);

    const TimeJet j1 = lambda_jet(Derivation(OpIndex(1)), p0, 1, 6);
    CHECK(j1.is_constant());
    CHECK(j1.coeff(0) == lambda_poly(1).evaluate(p0));

    const TimeJet j2 = lambda_jet(Derivation(OpIndex(3)), Assignment(), 2, 4);
    CHECK(j2.is_constant());
    CHECK(j2.coeff(0) == Rational());

    const TimeJet j3 = lambda_jet(Derivation(OpIndex(5)), p0, 3, 6);
    CHECK(j3.is_constant());

    CHECK_THROWS_AS(lambda_jet(Derivation(OpIndex(1)), p0, 1, 0), std::invalid_argument);
}

TEST_CASE("flow sampling") {
    std::mt19937_64 rng(355);
    FlowSpec spec{OpIndex(3), ts::random_assignment(rng, 9, 8), 8,
                  {Coordinate(1, 1), Coordinate(2, 1)}, {1, 2},
                  {-0.1, -0.05, 0.0, 0.05, 0.1}};
    const FlowTable table = flow_sample(spec);

    CHECK(table.jets_conserved);
    CHECK(table.warnings.empty());
    REQUIRE(table.columns.size() == 1 + 2 + 2 + 2);
    CHECK(table.columns[0] == "t");
    CHECK(table.columns[1] == "b[1,1]");
    CHECK(table.columns[3] == "lambda_4");
    CHECK(table.columns[5] == "drift_4");
    REQUIRE(table.rows.size() == 5);

    // t = 0 row: coordinates at the initial point and zero drift
    const auto& zero_row = table.rows[2];
    CHECK(zero_row[0] == 0.0);
    CHECK(zero_row[1] == spec.initial.get(Coordinate(1, 1)).to_double());
    CHECK(zero_row[5] == 0.0);
    CHECK(zero_row[6] == 0.0);

    // conserved jets render as constant lambda columns: zero drift everywhere
    const double lambda4_at_zero = zero_row[3];
    for (const auto& row : table.rows) {
        CHECK(row[3] == lambda4_at_zero);
        CHECK(row[5] == 0.0);
        CHECK(row[6] == 0.0);
        CHECK(row[5] <= 1e-8);
        CHECK(row[6] <= 1e-8);
    }

    const std::string csv = table.to_csv();
    CHECK(csv.find("t,\"b[1,1]\",\"b[2,1]\",lambda_4,lambda_6,drift_4,drift_6\n") !=
          std::string::npos);

    const auto json = table.to_json();
    CHECK(json["columns"].size() == 7);
    CHECK(json["rows"].size() == 5);
    CHECK(json["jets_conserved"] == true);

    // a grid beyond the trustworthy range is flagged
    FlowSpec wide = spec;
    wide.times = {0.0, 1.0};
    const FlowTable flagged = flow_sample(wide);
    CHECK(!flagged.warnings.empty());
    CHECK(flagged.to_csv().find("# warning:") == 0);
}
