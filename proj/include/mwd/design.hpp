#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mwd/gf.hpp"
#include "mwd/monomial_ideal.hpp"

namespace mwd {

// An ordered set of distinct experimental inputs over a prime field.
struct InputSet {
    std::vector<Point> points;
    PrimeField field;

    InputSet(std::vector<Point> pts, PrimeField f);

    int size() const { return static_cast<int>(points.size()); }
    int dimension() const {
        return points.empty() ? 0 : points.front().dimension();
    }
};

// Observed outputs, one per input; repeats allowed.
struct OutputAssignment {
    std::vector<std::uint32_t> values;
};

struct DataSet {
    InputSet inputs;
    OutputAssignment outputs;

    DataSet(InputSet in, OutputAssignment out);
};

// The difference monomial of one input pair. Duplicate monomials from
// different pairs stay separate records. Indices are 0-based.
struct PairMonomialRecord {
    SqFreeMonomial monomial;
    int i = 0;
    int j = 0;
};

struct UniquenessVerdict {
    struct Witness {
        OutputAssignment output;      // yields at least two minsets
        SqFreeMonomial monomial;      // the triggering pair monomial
        int a = 0;                    // its pair, 0-based
        int b = 0;
    };
    bool guaranteed_unique = false;
    std::optional<Witness> witness;  // present exactly when not guaranteed
};

// One record per unordered pair, enumerated (0,1),(0,2),...,(m-2,m-1).
std::vector<PairMonomialRecord> pair_monomials(const InputSet& V);

// Generated by the difference monomials of pairs with unequal outputs.
SFIdeal nondisposable_ideal(const DataSet& D);

// Minimal wiring diagrams supported by the data.
std::vector<Minset> minsets(const DataSet& D);

// Decides whether every output assignment over V admits a single minset,
// without enumerating outputs. When not, constructs a two-valued witness
// assignment exhibiting multiple minsets.
UniquenessVerdict guaranteed_unique_minset(const InputSet& V);

// Exhaustive oracle over all p^m output assignments (guarded).
bool brute_force_unique(const InputSet& V);

// Points at Hamming distance >= 2 from every other point of V.
std::vector<Point> find_diagonals(const InputSet& V);

inline Rational internal_distance(const InputSet& V) {
    return internal_distance(V.points);
}

}  // namespace mwd
