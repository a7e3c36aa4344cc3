#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mwd/gf.hpp"

namespace mwd {

// A square-free monomial, identified with its set of variable indices.
// Bit i-1 of `vars` stands for x_i; the empty set is the monomial 1.
struct SqFreeMonomial {
    std::uint64_t vars = 0;

    SqFreeMonomial() = default;
    explicit SqFreeMonomial(std::uint64_t mask) : vars(mask) {}

    int size() const;
    bool empty() const { return vars == 0; }
    bool contains(int var) const { return (vars >> (var - 1)) & 1; }  // 1-based
    bool divides(const SqFreeMonomial& o) const { return (vars & ~o.vars) == 0; }

    // Sorted 1-based variable indices.
    std::vector<int> indices() const;

    bool operator==(const SqFreeMonomial& o) const = default;
};

// A minset is also just a set of variable indices; only the printed form
// and the invariants differ.
using Minset = SqFreeMonomial;

// Canonical order on variable sets: by size, then lexicographically on the
// sorted index lists ({x1,x2} < {x1,x3} < {x2,x3}).
bool varset_less(const SqFreeMonomial& a, const SqFreeMonomial& b);

// A square-free monomial ideal given by a generating set. A generating set
// containing the empty monomial denotes the unit ideal; an empty generating
// set denotes the zero ideal.
struct SFIdeal {
    std::vector<SqFreeMonomial> gens;
    int nvars = 0;

    bool is_unit() const;
    bool is_zero() const { return gens.empty(); }
};

// The set of coordinates in which two distinct points differ.
SqFreeMonomial pair_monomial(const Point& a, const Point& b);

// Divisibility-minimal generators, deduplicated and canonically sorted.
SFIdeal minimal_generators(const SFIdeal& ideal);

// True iff every minimal generator is a single variable. The zero ideal
// counts as prime (unique facet); the unit ideal is rejected.
bool is_prime(const SFIdeal& ideal);

// All inclusion-minimal transversals of the minimal-generator supports,
// canonically sorted. The zero ideal yields exactly [{}]; the unit ideal
// yields [].
std::vector<Minset> primary_decomposition(const SFIdeal& ideal);

// "x1x3" (or "1" for the empty monomial).
std::string monomial_str(const SqFreeMonomial& m);
// "{x1,x3}" (or "{}" for the empty minset).
std::string minset_str(const Minset& m);

}  // namespace mwd
