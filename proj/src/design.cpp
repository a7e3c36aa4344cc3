#include "mwd/design.hpp"

#include <algorithm>
#include <numeric>

#include "mwd/errors.hpp"

namespace mwd {

InputSet::InputSet(std::vector<Point> pts, PrimeField f)
    : points(std::move(pts)), field(f) {
    if (!points.empty() && points.front().dimension() > kMaxVars)
        throw input_error("more than 64 variables are not supported");
    for (const Point& pt : points) {
        if (pt.dimension() != points.front().dimension())
            throw input_error("input points must all have the same dimension");
        for (std::uint32_t c : pt.coords)
            if (c >= field.p())
                throw input_error("point coordinate out of range for the field");
    }
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j])
                throw input_error("input points must be distinct");
}

DataSet::DataSet(InputSet in, OutputAssignment out)
    : inputs(std::move(in)), outputs(std::move(out)) {
    if (outputs.values.size() != inputs.points.size())
        throw input_error("output assignment length does not match the input set");
    for (std::uint32_t v : outputs.values)
        if (v >= inputs.field.p())
            throw input_error("output value out of range for the field");
}

std::vector<PairMonomialRecord> pair_monomials(const InputSet& V) {
    if (V.size() < 2)
        throw input_error("pair monomials require at least two input points");
    std::vector<PairMonomialRecord> records;
    records.reserve(static_cast<std::size_t>(V.size()) * (V.size() - 1) / 2);
    for (int i = 0; i < V.size(); ++i)
        for (int j = i + 1; j < V.size(); ++j)
            records.push_back({pair_monomial(V.points[i], V.points[j]), i, j});
    return records;
}

SFIdeal nondisposable_ideal(const DataSet& D) {
    SFIdeal ideal;
    ideal.nvars = D.inputs.dimension();
    if (D.inputs.size() < 2) return ideal;  // no pairs, zero ideal
    for (const auto& rec : pair_monomials(D.inputs))
        if (D.outputs.values[rec.i] != D.outputs.values[rec.j])
            ideal.gens.push_back(rec.monomial);
    return ideal;
}

std::vector<Minset> minsets(const DataSet& D) {
    return primary_decomposition(nondisposable_ideal(D));
}

namespace {

// Minimal union-find over point indices.
struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(int n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void join(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

UniquenessVerdict guaranteed_unique_minset(const InputSet& V) {
    if (V.size() < 1)
        throw input_error("uniqueness requires at least one input point");
    UniquenessVerdict verdict;
    verdict.guaranteed_unique = true;
    if (V.size() == 1) return verdict;  // no pairs, any output fits a constant

    const auto records = pair_monomials(V);
    for (const auto& rec : records) {
        if (rec.monomial.size() < 2) continue;
        // The equalities forced by single-variable monomials dividing this
        // one merge point indices; the pair itself demands a disequality, so
        // the system is consistent exactly when the two ends stay separate.
        DisjointSets dsu(V.size());
        for (const auto& other : records)
            if (other.monomial.size() == 1 &&
                other.monomial.divides(rec.monomial))
                dsu.join(other.i, other.j);
        if (dsu.find(rec.i) == dsu.find(rec.j)) continue;

        UniquenessVerdict::Witness w;
        w.monomial = rec.monomial;
        w.a = rec.i;
        w.b = rec.j;
        w.output.values.assign(V.size(), 0);
        int cls = dsu.find(rec.j);
        for (int k = 0; k < V.size(); ++k)
            if (dsu.find(k) == cls) w.output.values[k] = 1;
        verdict.guaranteed_unique = false;
        verdict.witness = std::move(w);
        return verdict;
    }
    return verdict;
}

bool brute_force_unique(const InputSet& V) {
    if (V.size() < 1)
        throw input_error("uniqueness requires at least one input point");
    const std::uint64_t limit = std::uint64_t{1} << 20;
    std::uint64_t total = 1;
    for (int k = 0; k < V.size(); ++k) {
        total *= V.field.p();
        if (total > limit)
            throw resource_error("too many output assignments to enumerate");
    }
    std::vector<std::uint32_t> t(V.size(), 0);
    for (std::uint64_t it = 0; it < total; ++it) {
        DataSet D(V, OutputAssignment{t});
        if (minsets(D).size() != 1) return false;
        for (int k = 0; k < V.size(); ++k) {
            if (++t[k] < V.field.p()) break;
            t[k] = 0;
        }
    }
    return true;
}

std::vector<Point> find_diagonals(const InputSet& V) {
    if (V.size() < 2)
        throw input_error("diagonal detection requires at least two input points");
    std::vector<Point> out;
    for (int i = 0; i < V.size(); ++i) {
        bool diagonal = true;
        for (int j = 0; j < V.size(); ++j) {
            if (i == j) continue;
            if (hamming(V.points[i], V.points[j]) < 2) {
                diagonal = false;
                break;
            }
        }
        if (diagonal) out.push_back(V.points[i]);
    }
    return out;
}

}  // namespace mwd
