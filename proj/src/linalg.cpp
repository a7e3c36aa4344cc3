#include "mwd/linalg.hpp"

#include <algorithm>

#include "mwd/errors.hpp"

namespace mwd {

std::vector<std::uint32_t> FpMatrix::column(int c) const {
    std::vector<std::uint32_t> v(rows);
    for (int r = 0; r < rows; ++r) v[r] = at(r, c);
    return v;
}

std::optional<std::vector<std::uint32_t>>
FpSolver::express(const std::vector<std::uint32_t>& v) const {
    if (static_cast<int>(v.size()) != nrows_)
        throw input_error("vector length does not match the matrix row count");
    std::vector<std::uint32_t> r = v;
    std::vector<std::uint32_t> acc(ech_.size(), 0);
    for (std::size_t k = 0; k < ech_.size(); ++k) {
        std::uint32_t f = r[ech_[k].pivot];
        if (!f) continue;
        for (int i = 0; i < nrows_; ++i)
            r[i] = field_.sub(r[i], field_.mul(f, ech_[k].vec[i]));
        for (std::size_t j = 0; j < ech_[k].rep.size(); ++j)
            acc[j] = field_.add(acc[j], field_.mul(f, ech_[k].rep[j]));
    }
    for (std::uint32_t x : r)
        if (x) return std::nullopt;
    return acc;
}

bool FpSolver::try_insert(const std::vector<std::uint32_t>& v) {
    if (static_cast<int>(v.size()) != nrows_)
        throw input_error("vector length does not match the matrix row count");
    std::vector<std::uint32_t> r = v;
    std::vector<std::uint32_t> acc(ech_.size(), 0);
    for (std::size_t k = 0; k < ech_.size(); ++k) {
        std::uint32_t f = r[ech_[k].pivot];
        if (!f) continue;
        for (int i = 0; i < nrows_; ++i)
            r[i] = field_.sub(r[i], field_.mul(f, ech_[k].vec[i]));
        for (std::size_t j = 0; j < ech_[k].rep.size(); ++j)
            acc[j] = field_.add(acc[j], field_.mul(f, ech_[k].rep[j]));
    }
    int pivot = -1;
    for (int i = 0; i < nrows_; ++i)
        if (r[i]) { pivot = i; break; }
    if (pivot < 0) return false;

    std::uint32_t scale = field_.inv(r[pivot]);
    EchCol col;
    col.pivot = pivot;
    col.vec.resize(nrows_);
    for (int i = 0; i < nrows_; ++i) col.vec[i] = field_.mul(scale, r[i]);
    // vec = scale * (v - sum acc_j * col_j), so the representation of vec over
    // the originals is -scale*acc on the old columns and scale on v itself.
    col.rep.resize(ech_.size() + 1);
    for (std::size_t j = 0; j < acc.size(); ++j)
        col.rep[j] = field_.mul(scale, field_.neg(acc[j]));
    col.rep.back() = scale;
    ech_.push_back(std::move(col));
    return true;
}

void FpSolver::pop() {
    // Echelon columns only reference earlier insertions, so dropping the last
    // one is a clean undo.
    ech_.pop_back();
}

std::optional<std::vector<std::uint32_t>>
solve_in_span(const FpMatrix& A, const std::vector<std::uint32_t>& b) {
    if (static_cast<int>(b.size()) != A.rows)
        throw input_error("right-hand side length does not match the matrix row count");
    FpSolver solver(A.field, A.rows);
    std::vector<int> inserted;  // solver column index -> original column
    for (int c = 0; c < A.cols; ++c)
        if (solver.try_insert(A.column(c))) inserted.push_back(c);
    auto combo = solver.express(b);
    if (!combo) return std::nullopt;
    std::vector<std::uint32_t> out(A.cols, 0);
    for (std::size_t k = 0; k < inserted.size(); ++k)
        out[inserted[k]] = (*combo)[k];
    return out;
}

bool is_nonsingular(const FpMatrix& A) {
    if (A.rows != A.cols) throw input_error("nonsingularity requires a square matrix");
    FpSolver solver(A.field, A.rows);
    for (int c = 0; c < A.cols; ++c) solver.try_insert(A.column(c));
    return solver.rank() == A.cols;
}

namespace {

// A row means: sum_j a_j * w_j >= rhs.
struct Row {
    std::vector<Rational> a;
    Rational rhs;
};

// Positive scaling to a canonical form so duplicates collapse.
void canonicalize(Row& row) {
    for (const Rational& c : row.a) {
        if (c != 0) {
            Rational t = c > 0 ? c : Rational(-c);
            for (Rational& x : row.a) x /= t;
            row.rhs /= t;
            return;
        }
    }
    if (row.rhs > 0) row.rhs = 1;  // pure contradiction, keep shape stable
}

bool row_less(const Row& x, const Row& y) {
    if (x.a != y.a) return x.a < y.a;
    return x.rhs < y.rhs;
}

bool row_eq(const Row& x, const Row& y) { return x.a == y.a && x.rhs == y.rhs; }

// Rows with all coefficients zero are constants: contradictions if rhs > 0,
// otherwise vacuous. Returns false on contradiction.
bool sweep_constants(std::vector<Row>& rows) {
    std::vector<Row> keep;
    for (Row& r : rows) {
        bool zero = std::all_of(r.a.begin(), r.a.end(),
                                [](const Rational& c) { return c == 0; });
        if (zero) {
            if (r.rhs > 0) return false;
        } else {
            keep.push_back(std::move(r));
        }
    }
    rows = std::move(keep);
    return true;
}

void dedup(std::vector<Row>& rows) {
    for (Row& r : rows) canonicalize(r);
    std::sort(rows.begin(), rows.end(), row_less);
    rows.erase(std::unique(rows.begin(), rows.end(), row_eq), rows.end());
}

}  // namespace

std::optional<std::vector<Rational>>
strict_feasible(const RationalConstraintSystem& sys) {
    const int n = sys.nvars;
    for (const auto& c : sys.vectors)
        if (static_cast<int>(c.size()) != n)
            throw input_error("constraint vector length does not match nvars");

    // Homogeneity lets w.c > 0 be normalized to w.c >= 1; nonnegativity of w
    // enters as plain rows so elimination handles everything uniformly.
    std::vector<Row> rows;
    for (const auto& c : sys.vectors) {
        Row r;
        r.a.assign(c.begin(), c.end());
        r.rhs = 1;
        rows.push_back(std::move(r));
    }
    for (int i = 0; i < n; ++i) {
        Row r;
        r.a.assign(n, Rational(0));
        r.a[i] = 1;
        r.rhs = 0;
        rows.push_back(std::move(r));
    }

    // Eliminate from the highest variable down, saving each stage's rows for
    // back substitution.
    std::vector<std::vector<Row>> stages(n);
    for (int e = n - 1; e >= 0; --e) {
        if (!sweep_constants(rows)) return std::nullopt;
        dedup(rows);
        stages[e] = rows;
        std::vector<Row> next;
        std::vector<const Row*> pos, neg;
        for (const Row& r : rows) {
            if (r.a[e] > 0) pos.push_back(&r);
            else if (r.a[e] < 0) neg.push_back(&r);
            else next.push_back(r);
        }
        for (const Row* p : pos) {
            for (const Row* q : neg) {
                // lam*p + mu*q with lam = -q_e > 0, mu = p_e > 0 cancels w_e.
                Rational lam = -q->a[e], mu = p->a[e];
                Row r;
                r.a.assign(n, Rational(0));
                for (int j = 0; j < e; ++j)
                    r.a[j] = lam * p->a[j] + mu * q->a[j];
                r.rhs = lam * p->rhs + mu * q->rhs;
                next.push_back(std::move(r));
            }
        }
        rows = std::move(next);
    }
    if (!sweep_constants(rows)) return std::nullopt;

    // Feasible: rebuild a witness one variable at a time. Any value between
    // the tightest bounds extends the partial assignment; the w_e >= 0 rows
    // guarantee a lower bound exists.
    std::vector<Rational> w(n, Rational(0));
    for (int e = 0; e < n; ++e) {
        bool has_lower = false, has_upper = false;
        Rational lower(0), upper(0);
        for (const Row& r : stages[e]) {
            if (r.a[e] == 0) continue;
            Rational partial = r.rhs;
            for (int j = 0; j < e; ++j) partial -= r.a[j] * w[j];
            Rational bound = partial / r.a[e];
            if (r.a[e] > 0) {
                if (!has_lower || bound > lower) lower = bound;
                has_lower = true;
            } else {
                if (!has_upper || bound < upper) upper = bound;
                has_upper = true;
            }
        }
        if (has_lower) w[e] = lower;
        else if (has_upper) w[e] = upper;
    }
    return w;
}

}  // namespace mwd
