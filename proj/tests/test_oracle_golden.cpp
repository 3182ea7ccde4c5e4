#include "support/naive_lambda.hpp"

#include "hyperflow/lambda.hpp"
#include "support/generators.hpp"

#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#ifndef HYPERFLOW_GOLDEN_DIR
#error "HYPERFLOW_GOLDEN_DIR must be defined"
#endif

using namespace hyperflow;
namespace ts = hyperflow::testsupport;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE_MESSAGE(bool(in), "missing golden file ", path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string golden_path(int j) {
    return std::string(HYPERFLOW_GOLDEN_DIR) + "/lambda_" + std::to_string(2 * j + 2) + ".txt";
}

}  // namespace

TEST_CASE("the naive oracle and the series path agree") {
    for (int j = 1; j <= 6; ++j) {
        CAPTURE(j);
        REQUIRE(ts::naive_lambda(j) == lambda_poly(j));
    }
}

TEST_CASE("frozen golden files match the oracle byte for byte") {
    for (int j = 1; j <= 4; ++j) {
        CAPTURE(j);
        CHECK(read_file(golden_path(j)) == ts::naive_lambda(j).str() + "\n");
    }
}

TEST_CASE("evaluation agrees between the two lambda routes") {
    std::mt19937_64 rng(5150);
    const Polynomial via_series = lambda_poly(1);
    const Polynomial via_oracle = ts::naive_lambda(1);
    for (int i = 0; i < 25; ++i) {
        const Assignment at = ts::random_assignment(rng, 5);
        REQUIRE(via_series.evaluate(at) == via_oracle.evaluate(at));
    }
}

TEST_CASE("the first-order flow annihilates the oracle's lambda") {
    const Derivation d1{OpIndex(1)};
    CHECK(d1.apply(ts::naive_lambda(1)).is_zero());
    CHECK(d1.apply(ts::naive_lambda(2)).is_zero());
}
