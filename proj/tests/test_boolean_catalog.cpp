#include <doctest.h>

#include <algorithm>

#include "mwd/boolean_catalog.hpp"
#include "mwd/errors.hpp"
#include "test_util.hpp"

using namespace mwd;

namespace {

Point bits(std::initializer_list<uint32_t> coords) {
    return Point(std::vector<uint32_t>(coords));
}

// Variables with a nonzero exponent somewhere in f.
std::vector<int> polynomial_support(const Polynomial& f) {
    std::vector<int> vars;
    for (const auto& [m, c] : f.terms) {
        for (size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i] == 0) continue;
            int v = static_cast<int>(i) + 1;
            if (std::find(vars.begin(), vars.end(), v) == vars.end())
                vars.push_back(v);
        }
    }
    std::sort(vars.begin(), vars.end());
    return vars;
}

} // namespace

TEST_CASE("catalog holds the nine fanout-free functions") {
    const auto& catalog = table2_catalog();
    REQUIRE(catalog.size() == 9);

    for (size_t i = 0; i < catalog.size(); ++i) {
        CHECK(catalog[i].id == static_cast<int>(i) + 1);
        CHECK_FALSE(catalog[i].example_only);
        CHECK(catalog[i].support_size >= 1);
        CHECK(catalog[i].support_size <= 4);
    }

    const PrimeField F2(2);
    CHECK(catalog[3].polynomial ==
          parse_polynomial("x1*x2 + x1*x3 + x1*x2*x3", 3, F2));
    CHECK(poly_str(catalog[7].polynomial, 4) == "x1x2x3x4+x1x2+x3x4");
    CHECK(catalog[7].polynomial ==
          parse_polynomial("x1x2+x3x4+x1x2x3x4", 4, F2));
}

TEST_CASE("polynomial and boolean forms agree everywhere") {
    for (const auto& f : full_catalog()) {
        int k = f.support_size;
        for (uint32_t mask = 0; mask < (1u << k); ++mask) {
            std::vector<uint32_t> coords;
            for (int i = 0; i < k; ++i) coords.push_back((mask >> i) & 1);
            Point pt(coords);
            CHECK(evaluate(f, pt) == evaluate_boolean(f, pt));
        }
    }
}

TEST_CASE("every variable is read exactly once") {
    for (const auto& f : table2_catalog()) {
        auto counts = var_occurrences(*f.boolean_form, f.support_size);
        for (int c : counts) CHECK(c == 1);
        CHECK(polynomial_support(f.polynomial) ==
              [&] {
                  std::vector<int> all;
                  for (int v = 1; v <= f.support_size; ++v) all.push_back(v);
                  return all;
              }());
    }

    // The example function ignores x1 but still reads three coordinates.
    const auto& ex = example_function();
    CHECK(ex.id == 10);
    CHECK(ex.example_only);
    CHECK(var_occurrences(*ex.boolean_form, 3) == std::vector<int>{0, 1, 1});
    CHECK(polynomial_support(ex.polynomial) == std::vector<int>{2, 3});
}

TEST_CASE("evaluation uses the leading coordinates") {
    const auto& AND = table2_catalog()[1];
    CHECK(evaluate(AND, bits({1, 1, 0, 0, 0})) == 1);
    CHECK(evaluate(AND, bits({1, 1})) == 1);
    CHECK(evaluate(AND, bits({1, 0, 1, 1})) == 0);

    const auto& or4 = table2_catalog()[6]; // (x1 AND x2) OR x3 OR x4
    CHECK(evaluate(or4, bits({1, 1, 0, 0})) == 1);
    CHECK(evaluate_boolean(or4, bits({1, 1, 0, 0})) == 1);
    CHECK(evaluate(or4, bits({1, 0, 0, 0})) == 0);
    CHECK(evaluate(or4, bits({0, 0, 0, 1, 0, 0, 0, 0, 0, 0})) == 1);

    CHECK(evaluate(example_function(), bits({0, 1, 0})) == 0);
    CHECK(evaluate(example_function(), bits({0, 0, 0})) == 1);
    CHECK(evaluate(example_function(), bits({1, 1, 1})) == 1);

    CHECK_THROWS_AS(evaluate(AND, bits({1})), input_error);
    CHECK_THROWS_AS(evaluate(AND, bits({1, 2})), input_error);
}

TEST_CASE("lookup by id and by polynomial text") {
    CHECK(find_function(1)->support_size == 1);
    CHECK(find_function(9)->support_size == 4);
    CHECK(find_function(10)->example_only);
    CHECK(find_function(0) == nullptr);
    CHECK(find_function(11) == nullptr);

    CHECK(find_function("x1x2")->id == 2);
    CHECK(find_function("x2*x1")->id == 2);
    CHECK(find_function("x1x2+x3x4+x1x2x3x4")->id == 8);
    CHECK(find_function("1+x2+x2x3")->id == 10);
    CHECK(find_function("x1+x2") == nullptr);
    CHECK(find_function("") == nullptr);
}

TEST_CASE("boolean form printing") {
    const auto& catalog = table2_catalog();
    CHECK(bool_str(*catalog[0].boolean_form) == "x1");
    CHECK(bool_str(*catalog[1].boolean_form) == "x1 AND x2");
    CHECK(bool_str(*catalog[3].boolean_form) == "x1 AND (x2 OR x3)");
    CHECK(bool_str(*catalog[6].boolean_form) == "(x1 AND x2) OR x3 OR x4");
    CHECK(bool_str(*catalog[8].boolean_form) == "((x1 AND x2) OR x3) AND x4");
    CHECK(bool_str(*example_function().boolean_form) == "NOT x2 OR x3");
}
