#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mwd/gf.hpp"

namespace mwd {

// Dense matrix over F_p, row major, entries canonical in 0..p-1.
struct FpMatrix {
    PrimeField field;
    int rows = 0;
    int cols = 0;
    std::vector<std::uint32_t> data;

    FpMatrix(PrimeField f, int r, int c)
        : field(f), rows(r), cols(c),
          data(static_cast<std::size_t>(r) * c, 0) {}

    std::uint32_t& at(int r, int c) {
        return data[static_cast<std::size_t>(r) * cols + c];
    }
    std::uint32_t at(int r, int c) const {
        return data[static_cast<std::size_t>(r) * cols + c];
    }
    std::vector<std::uint32_t> column(int c) const;
};

// Incremental echelon-form tracker over F_p. Columns are inserted one at a
// time and the most recent insertion can be undone, which is what the
// backtracking staircase search needs. Each accepted column also records how
// its echelon form combines the originals, so membership queries return
// coefficients over the inserted columns.
class FpSolver {
  public:
    FpSolver(PrimeField f, int nrows) : field_(f), nrows_(nrows) {}

    int rank() const { return static_cast<int>(ech_.size()); }
    int nrows() const { return nrows_; }

    // Coefficients c with v = sum_k c_k * (k-th inserted column), if v lies
    // in the current span; nullopt otherwise.
    std::optional<std::vector<std::uint32_t>>
    express(const std::vector<std::uint32_t>& v) const;

    // Insert v if independent of the current span; returns false (state
    // untouched) if v is dependent.
    bool try_insert(const std::vector<std::uint32_t>& v);

    // Undo the most recent successful insertion.
    void pop();

  private:
    struct EchCol {
        std::vector<std::uint32_t> vec;  // pivot entry normalized to 1
        std::vector<std::uint32_t> rep;  // vec as combination of originals
        int pivot;
    };

    PrimeField field_;
    int nrows_;
    std::vector<EchCol> ech_;
};

// c with A*c = b if b lies in the column span of A, else nullopt.
std::optional<std::vector<std::uint32_t>>
solve_in_span(const FpMatrix& A, const std::vector<std::uint32_t>& b);

bool is_nonsingular(const FpMatrix& A);

// Homogeneous strict system: find w >= 0 with w . c > 0 for every listed c.
struct RationalConstraintSystem {
    int nvars = 0;
    std::vector<std::vector<Rational>> vectors;
};

// Exact decision by Fourier-Motzkin elimination; a returned witness
// satisfies every constraint with w . c >= 1.
std::optional<std::vector<Rational>>
strict_feasible(const RationalConstraintSystem& sys);

}  // namespace mwd
