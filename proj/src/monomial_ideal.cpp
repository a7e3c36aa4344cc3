#include "mwd/monomial_ideal.hpp"

#include <algorithm>
#include <bit>

#include "mwd/errors.hpp"

namespace mwd {

int SqFreeMonomial::size() const { return std::popcount(vars); }

std::vector<int> SqFreeMonomial::indices() const {
    std::vector<int> out;
    for (std::uint64_t m = vars; m;) {
        std::uint64_t low = m & (~m + 1);
        out.push_back(std::countr_zero(low) + 1);
        m ^= low;
    }
    return out;
}

bool varset_less(const SqFreeMonomial& a, const SqFreeMonomial& b) {
    int sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    if (a.vars == b.vars) return false;
    // Same size: lexicographic on sorted index lists == "who owns the lowest
    // bit where they differ".
    std::uint64_t d = a.vars ^ b.vars;
    return (a.vars & (d & (~d + 1))) != 0;
}

bool SFIdeal::is_unit() const {
    return std::any_of(gens.begin(), gens.end(),
                       [](const SqFreeMonomial& g) { return g.empty(); });
}

SqFreeMonomial pair_monomial(const Point& a, const Point& b) {
    if (a.dimension() != b.dimension())
        throw input_error("pair monomial of points with different dimensions");
    if (a.dimension() > kMaxVars)
        throw input_error("more than 64 variables are not supported");
    std::uint64_t mask = 0;
    for (int i = 0; i < a.dimension(); ++i)
        if (a[i] != b[i]) mask |= std::uint64_t{1} << i;
    if (mask == 0) throw input_error("pair monomial of two equal points");
    return SqFreeMonomial{mask};
}

SFIdeal minimal_generators(const SFIdeal& ideal) {
    SFIdeal out;
    out.nvars = ideal.nvars;
    for (const auto& g : ideal.gens) {
        bool redundant = false;
        for (const auto& h : ideal.gens) {
            if (h.vars != g.vars && h.divides(g)) { redundant = true; break; }
        }
        if (!redundant) out.gens.push_back(g);
    }
    std::sort(out.gens.begin(), out.gens.end(), varset_less);
    out.gens.erase(std::unique(out.gens.begin(), out.gens.end()),
                   out.gens.end());
    return out;
}

bool is_prime(const SFIdeal& ideal) {
    if (ideal.is_unit()) throw input_error("primality is undefined for the unit ideal");
    SFIdeal min = minimal_generators(ideal);
    return std::all_of(min.gens.begin(), min.gens.end(),
                       [](const SqFreeMonomial& g) { return g.size() == 1; });
}

namespace {

// Drop sets that strictly contain another set of the collection.
void prune_to_antichain(std::vector<std::uint64_t>& sets) {
    std::sort(sets.begin(), sets.end(), [](std::uint64_t a, std::uint64_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    std::vector<std::uint64_t> keep;
    for (std::uint64_t s : sets) {
        bool covered = false;
        for (std::uint64_t k : keep) {
            if ((k & ~s) == 0) { covered = true; break; }
        }
        if (!covered) keep.push_back(s);
    }
    sets = std::move(keep);
}

}  // namespace

std::vector<Minset> primary_decomposition(const SFIdeal& ideal) {
    if (ideal.is_unit()) return {};  // nothing hits the empty support
    SFIdeal min = minimal_generators(ideal);

    // Berge: fold generator supports into the running set of transversals,
    // pruning to an antichain after each step.
    std::vector<std::uint64_t> trans{0};
    for (const auto& g : min.gens) {
        std::vector<std::uint64_t> next;
        for (std::uint64_t t : trans) {
            if (t & g.vars) {
                next.push_back(t);
            } else {
                for (int i : g.indices())
                    next.push_back(t | (std::uint64_t{1} << (i - 1)));
            }
        }
        prune_to_antichain(next);
        trans = std::move(next);
    }

    std::vector<Minset> out;
    out.reserve(trans.size());
    for (std::uint64_t t : trans) out.push_back(Minset{t});
    std::sort(out.begin(), out.end(), varset_less);
    return out;
}

std::string monomial_str(const SqFreeMonomial& m) {
    if (m.empty()) return "1";
    std::string s;
    for (int i : m.indices()) s += "x" + std::to_string(i);
    return s;
}

std::string minset_str(const Minset& m) {
    std::string s = "{";
    bool first = true;
    for (int i : m.indices()) {
        if (!first) s += ",";
        s += "x" + std::to_string(i);
        first = false;
    }
    return s + "}";
}

}  // namespace mwd
