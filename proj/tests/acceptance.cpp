// End-to-end checks, one line of output per criterion.  Run with no
// arguments for all twelve, or pass criterion numbers to run a subset.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mwd/boolean_catalog.hpp"
#include "mwd/design.hpp"
#include "mwd/errors.hpp"
#include "mwd/experiments.hpp"
#include "mwd/monomial_ideal.hpp"
#include "mwd/points_ideal.hpp"
#include "test_util.hpp"

using namespace mwd;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

Outcome fail(std::string detail) { return {false, std::move(detail)}; }

std::string minsets_text(const std::vector<Minset>& sets) {
    std::string s = "[";
    for (size_t i = 0; i < sets.size(); ++i) {
        if (i) s += ", ";
        s += minset_str(sets[i]);
    }
    return s + "]";
}

int rnd(std::mt19937_64& rng, int k) {
    return static_cast<int>(rng() % static_cast<std::uint64_t>(k));
}

// ------------------------------------------------------------ criterion 1

Outcome criterion_1() {
    auto base = tu::dset({"000", "101", "110", "011"}, {1, 1, 0, 1}, 2);
    auto got = minsets(base);
    std::vector<Minset> want = {tu::sf({1, 2}), tu::sf({1, 3}),
                                tu::sf({2, 3})};
    if (got != want)
        return fail("base data gave " + minsets_text(got));

    auto plus = tu::dset({"000", "101", "110", "011", "111"},
                         {1, 1, 0, 1, 1}, 2);
    if (minsets(plus).size() != 2)
        return fail("adding (111, 1) gave " + minsets_text(minsets(plus)));

    auto fixed = tu::dset({"000", "101", "110", "011", "111", "010"},
                          {1, 1, 0, 1, 1, 0}, 2);
    auto final_sets = minsets(fixed);
    if (final_sets != std::vector<Minset>{tu::sf({2, 3})})
        return fail("adding (010, 0) gave " + minsets_text(final_sets));
    return {};
}

// ------------------------------------------------------------ criterion 2

Outcome criterion_2() {
    auto V = tu::vset({"010", "110", "210", "212"}, 3);
    if (!guaranteed_unique_minset(V).guaranteed_unique)
        return fail("V = {010,110,210,212} was not judged guaranteed unique");

    auto U = tu::vset({"211", "002", "200", "201"}, 3);
    auto verdict = guaranteed_unique_minset(U);
    if (verdict.guaranteed_unique)
        return fail("U = {211,002,200,201} was judged guaranteed unique");

    auto got = minsets(DataSet(U, OutputAssignment{{0, 2, 0, 0}}));
    std::vector<Minset> required = {tu::sf({2}), tu::sf({3})};
    if (got != required) {
        // T = (0,2,0,0) separates point 2 from points 1, 3, and 4.  Point 2
        // differs from points 3 and 4 exactly in x1 and x3, so the
        // non-disposable ideal is <x1x3> and its minimal primes cannot
        // include {x2}; the required value is not reachable from this U.
        return fail("minsets(U, T=(0,2,0,0)): required [{x2},{x3}], computed " +
                    minsets_text(got));
    }
    return {};
}

// ------------------------------------------------------------ criterion 3

Outcome criterion_3() {
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 200; ++i) {
        std::uint32_t p = i % 2 == 0 ? 2 : 3;
        int n = 2 + i % 3;
        int space = 1;
        for (int j = 0; j < n; ++j) space *= static_cast<int>(p);
        int m = std::min(2 + rnd(rng, 4), std::min(5, space));
        auto V = random_scheme(n, m, rng, p);

        auto verdict = guaranteed_unique_minset(V);
        bool oracle = brute_force_unique(V);
        if (verdict.guaranteed_unique != oracle)
            return fail("disagreement with the exhaustive oracle at instance " +
                        std::to_string(i));
        if (verdict.witness) {
            auto sets = minsets(DataSet(V, verdict.witness->output));
            if (sets.size() < 2)
                return fail("witness with fewer than two minsets at instance " +
                            std::to_string(i));
        }
    }
    return {};
}

// ------------------------------------------------------------ criterion 4

Outcome criterion_4() {
    auto groups = exhaustive_enumeration(example_function(), 3, 4);
    std::vector<GroupedCount> want = {
        {Rational(4, 3), 1, 6},  {Rational(3, 2), 1, 8},
        {Rational(5, 3), 1, 24}, {Rational(11, 6), 1, 10},
        {Rational(11, 6), 2, 14}, {Rational(2), 1, 1},
        {Rational(2), 2, 5},     {Rational(2), 3, 2},
    };
    if (groups.size() != want.size())
        return fail("expected 8 groups, got " + std::to_string(groups.size()));
    long long total = 0;
    for (size_t i = 0; i < want.size(); ++i) {
        if (groups[i].d != want[i].d ||
            groups[i].num_minsets != want[i].num_minsets ||
            groups[i].count != want[i].count)
            return fail("group " + std::to_string(i) + " is (" +
                        numerator(groups[i].d).str() + "/" +
                        denominator(groups[i].d).str() + ", " +
                        std::to_string(groups[i].num_minsets) + ") x " +
                        std::to_string(groups[i].count));
        total += groups[i].count;
    }
    if (total != 70) return fail("counts sum to " + std::to_string(total));
    return {};
}

// ------------------------------------------------------------ criterion 5

Outcome criterion_5() {
    auto V = tu::vset({"001", "011", "101", "110"}, 2);
    auto bases = all_staircases(V);
    if (bases.size() != 2)
        return fail(std::to_string(bases.size()) + " staircases");
    if (staircase_str(bases[0].staircase, 3) != "{1,z,y,x}" ||
        staircase_str(bases[1].staircase, 3) != "{1,y,x,xy}")
        return fail("staircases " + staircase_str(bases[0].staircase, 3) +
                    " and " + staircase_str(bases[1].staircase, 3));

    auto common = common_standard_monomials(V);
    if (common.size() != 3 || !common[0].is_one() ||
        monomial_text(common[1], 3) != "y" ||
        monomial_text(common[2], 3) != "x")
        return fail("common standard monomials are not {1, y, x}");

    auto u = unique_normal_form(V, OutputAssignment{{1, 0, 0, 1}});
    if (!u.unique || poly_str(*u.normal_form, 3) != "x+y+1")
        return fail("T=(1,0,0,1) did not give the unique normal form x+y+1");

    OutputAssignment t2{{0, 1, 1, 1}};
    if (unique_normal_form(V, t2).unique)
        return fail("T=(0,1,1,1) was judged unique");
    auto fit = interpolate(DataSet(V, t2));
    std::set<std::string> nfs;
    for (const auto& gb : bases)
        nfs.insert(poly_str(normal_form(fit, gb), 3));
    if (nfs != std::set<std::string>{"x+y+z+1", "xy+x+y"})
        return fail("T=(0,1,1,1) normal forms differ from the expected pair");
    return {};
}

// ------------------------------------------------------------ criterion 6

Outcome criterion_6() {
    PrimeField F3(3);
    auto V = tu::vset({"12", "21"}, 3);
    auto bases = all_staircases(V);
    if (bases.size() != 2)
        return fail(std::to_string(bases.size()) + " reduced Groebner bases");

    const auto& a = bases[0];
    if (staircase_str(a.staircase, 2) != "{1,y}" ||
        a.generators.size() != 2 ||
        a.generators[0].poly != parse_polynomial("x+y", 2, F3) ||
        monomial_text(a.generators[0].lead, 2) != "x" ||
        a.generators[1].poly != parse_polynomial("y^2-1", 2, F3))
        return fail("first basis is not {x+y, y^2-1} with leading term x");

    const auto& b = bases[1];
    if (staircase_str(b.staircase, 2) != "{1,x}" ||
        b.generators.size() != 2 ||
        b.generators[0].poly != parse_polynomial("y+x", 2, F3) ||
        monomial_text(b.generators[0].lead, 2) != "y" ||
        b.generators[1].poly != parse_polynomial("x^2-1", 2, F3))
        return fail("second basis is not {y+x, x^2-1} with leading term y");
    return {};
}

// ------------------------------------------------------------ criterion 7

Outcome criterion_7() {
    std::mt19937_64 rng(777);
    for (int i = 0; i < 500; ++i) {
        int n = 1 + rnd(rng, 4);
        int space = 1 << n;
        int m = std::min(2 + rnd(rng, 7), std::min(8, space));
        auto V = random_scheme(n, m, rng);
        std::vector<std::uint32_t> values;
        for (int j = 0; j < m; ++j)
            values.push_back(static_cast<std::uint32_t>(rnd(rng, 2)));
        OutputAssignment T{values};

        auto u = unique_normal_form(V, T);
        if (!u.unique) continue;
        auto sets = minsets(DataSet(V, T));
        if (sets.size() != 1)
            return fail("unique normal form but " +
                        std::to_string(sets.size()) + " minsets at instance " +
                        std::to_string(i));
    }
    return {};
}

// ------------------------------------------------------------ criterion 8

Outcome criterion_8() {
    std::mt19937_64 rng(888);
    for (int i = 0; i < 200; ++i) {
        int n = 1 + rnd(rng, 4);
        int space = 1 << n;
        int m = std::min(2 + rnd(rng, 9), std::min(10, space));
        auto V = random_scheme(n, m, rng);

        bool unique_gb = has_unique_gb(V);
        auto diagonals = find_diagonals(V);
        if (unique_gb && !guaranteed_unique_minset(V).guaranteed_unique)
            return fail("unique basis without a guaranteed-unique minset at "
                        "instance " +
                        std::to_string(i));
        if (unique_gb && !diagonals.empty())
            return fail("unique basis with a diagonal at instance " +
                        std::to_string(i));
        if (!diagonals.empty() && brute_force_unique(V))
            return fail("diagonal but every assignment gives one minset at "
                        "instance " +
                        std::to_string(i));
    }
    return {};
}

// ------------------------------------------------------------ criterion 9

Outcome criterion_9() {
    std::mt19937_64 rng(999);
    for (int i = 0; i < 50; ++i) {
        int n = 1 + rnd(rng, 3);
        int space = 1 << n;
        int m = std::min(2 + rnd(rng, 5), std::min(6, space));
        auto V = random_scheme(n, m, rng);

        bool all_unique = true;
        for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
            std::vector<std::uint32_t> values;
            for (int j = 0; j < m; ++j) values.push_back((mask >> j) & 1);
            if (!unique_normal_form(V, OutputAssignment{values}).unique) {
                all_unique = false;
                break;
            }
        }
        bool one_staircase = all_staircases(V).size() == 1;
        if (all_unique != one_staircase)
            return fail("uniqueness for all outputs disagrees with the "
                        "staircase count at instance " +
                        std::to_string(i));
    }
    return {};
}

// ----------------------------------------------------------- criterion 10

Outcome criterion_10() {
    const std::uint64_t seed = 20260823;
    for (const auto& f : table2_catalog()) {
        auto random = run_trials(f, SchemeKind::Random, 10, 20, 500, seed);
        auto small =
            run_trials(f, SchemeKind::SmallDistance, 10, 20, 500, seed);

        Rational rd = 0, sd = 0;
        long long rm = 0, sm = 0;
        for (const auto& r : random) {
            rd += r.d;
            rm += r.num_minsets;
        }
        for (const auto& r : small) {
            sd += r.d;
            sm += r.num_minsets;
        }
        if (sm >= rm)
            return fail("function " + std::to_string(f.id) +
                        ": mean minsets " + std::to_string(sm) + "/500 vs " +
                        std::to_string(rm) + "/500");
        if (sd >= rd)
            return fail("function " + std::to_string(f.id) +
                        ": mean d did not drop under the small-distance "
                        "scheme");
    }
    return {};
}

// ----------------------------------------------------------- criterion 11

Outcome criterion_11() {
    for (const auto& f : table2_catalog()) {
        for (std::uint32_t mask = 0; mask < (1u << f.support_size); ++mask) {
            std::vector<std::uint32_t> coords;
            for (int j = 0; j < f.support_size; ++j)
                coords.push_back((mask >> j) & 1);
            Point pt(coords);
            if (evaluate(f, pt) != evaluate_boolean(f, pt))
                return fail("function " + std::to_string(f.id) +
                            " disagrees at " +
                            point_str(pt, PrimeField(2)));
        }
    }
    return {};
}

// ----------------------------------------------------------- criterion 12

Outcome criterion_12() {
    std::mt19937_64 rng(606);
    for (int i = 0; i < 50; ++i) {
        std::uint32_t p = i % 2 == 0 ? 2 : 3;
        int n = 1 + rnd(rng, 3);
        int space = 1;
        for (int j = 0; j < n; ++j) space *= static_cast<int>(p);
        int m = std::min(2 + rnd(rng, 5), std::min(6, space));
        auto V = random_scheme(n, m, rng, p);
        auto bases = all_staircases(V);

        for (int k = 0; k < 20; ++k) {
            std::vector<Rational> weights;
            bool positive = false;
            for (int j = 0; j < n; ++j) {
                weights.emplace_back(rnd(rng, 6), 1 + rnd(rng, 3));
                positive = positive || weights.back() > 0;
            }
            if (!positive) weights[static_cast<size_t>(rnd(rng, n))] = 1;
            std::vector<int> perm;
            for (int j = 0; j < n; ++j) perm.push_back(j);
            for (int j = n - 1; j > 0; --j)
                std::swap(perm[static_cast<size_t>(j)],
                          perm[static_cast<size_t>(rnd(rng, j + 1))]);

            auto gb = buchberger_moller(
                V, make_weighted_order(weights, perm));
            bool found = false;
            for (const auto& known : bases)
                found = found || known.staircase == gb.staircase;
            if (!found)
                return fail("a computed staircase is missing from the "
                            "enumeration at instance " +
                            std::to_string(i));
            for (const auto& g : gb.generators)
                for (const auto& pt : V.points)
                    if (evaluate(V.field, g.poly, pt) != 0)
                        return fail("a basis polynomial does not vanish on V "
                                    "at instance " +
                                    std::to_string(i));
        }
    }
    return {};
}

struct Criterion {
    int id;
    const char* name;
    double limit_s;
    Outcome (*run)();
};

const Criterion kCriteria[] = {
    {1, "data pipeline on the four-point biological example", 1, criterion_1},
    {2, "decision algorithm worked examples", 1, criterion_2},
    {3, "decision algorithm against the exhaustive oracle", 60, criterion_3},
    {4, "exhaustive statistics of the 70 four-point sets", 5, criterion_4},
    {5, "two staircases, common monomials, normal forms", 5, criterion_5},
    {6, "the two reduced bases of a two-point plane set", 1, criterion_6},
    {7, "unique normal form forces a unique minset", 120, criterion_7},
    {8, "unique basis implies uniqueness; diagonals break it", 120,
     criterion_8},
    {9, "all-outputs uniqueness matches the staircase count", 120,
     criterion_9},
    {10, "small-distance scheme lowers minsets and distance", 900,
     criterion_10},
    {11, "polynomial and Boolean forms of the function table", 1,
     criterion_11},
    {12, "weighted-order bases land in the enumeration", 120, criterion_12},
};

} // namespace

int main(int argc, char** argv) {
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));

    int failures = 0;
    for (const auto& c : kCriteria) {
        if (!selected.empty() &&
            std::find(selected.begin(), selected.end(), c.id) ==
                selected.end())
            continue;

        auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.run();
        } catch (const std::exception& e) {
            outcome = fail(std::string("exception: ") + e.what());
        }
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          start)
                .count();
        if (outcome.ok && elapsed >= c.limit_s)
            outcome = fail("exceeded the " + std::to_string(c.limit_s) +
                           "s budget");

        char line[512];
        std::snprintf(line, sizeof(line), "criterion %2d %s (%.2fs)  %s%s%s",
                      c.id, outcome.ok ? "PASS" : "FAIL", elapsed, c.name,
                      outcome.detail.empty() ? "" : " -- ",
                      outcome.detail.c_str());
        std::cout << line << "\n";
        failures += outcome.ok ? 0 : 1;
    }
    if (failures == 0) {
        std::cout << "all criteria passed\n";
    } else {
        std::cout << failures << (failures == 1 ? " criterion" : " criteria")
                  << " failed\n";
    }
    return failures;
}
