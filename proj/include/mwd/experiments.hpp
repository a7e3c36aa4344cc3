#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mwd/boolean_catalog.hpp"
#include "mwd/design.hpp"
#include "mwd/gf.hpp"

namespace mwd {

enum class SchemeKind { Random, SmallDistance };

std::string scheme_str(SchemeKind scheme); // "random" / "small-distance"
SchemeKind parse_scheme(const std::string& text);

struct TrialRecord {
    long long trial_id;
    SchemeKind scheme;
    int function_id;
    int n;
    int m;
    std::uint64_t seed; // run seed; the per-trial stream is seed ^ trial_id
    Rational d;
    int num_minsets;
};

struct GroupedCount {
    Rational d;
    int num_minsets;
    long long count;
};

// m distinct points of F_p^n, uniform without replacement.
InputSet random_scheme(int n, int m, std::mt19937_64& rng, std::uint32_t p = 2);

// m/2 distinct base points, each paired with a copy whose single switched
// coordinate keeps all m points distinct.  Collisions resample the switched
// coordinate up to n times, then the base point; a global budget of 100*m
// draws bounds the whole construction.
InputSet small_distance_scheme(int n, int m, std::mt19937_64& rng,
                               std::uint32_t p = 2);

// d(V) and the number of minsets of {(s, f(s)) : s in V}.
std::pair<Rational, int> trial_statistics(const FanoutFreeFunction& f,
                                          const InputSet& V);

std::vector<TrialRecord> run_trials(const FanoutFreeFunction& f,
                                    SchemeKind scheme, int n, int m,
                                    long long trials, std::uint64_t seed);

// Every m-subset of F_2^n, grouped by exact (d, #minsets), ascending.
std::vector<GroupedCount> exhaustive_enumeration(const FanoutFreeFunction& f,
                                                 int n, int m);

void write_trials_csv(std::ostream& out,
                      const std::vector<TrialRecord>& records);
void write_groups_csv(std::ostream& out,
                      const std::vector<GroupedCount>& groups);

} // namespace mwd
