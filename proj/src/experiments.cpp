#include "mwd/experiments.hpp"

#include <map>
#include <ostream>
#include <set>

#include "mwd/errors.hpp"

namespace mwd {

namespace {

// How many subsets exhaustive_enumeration will walk before refusing.
constexpr long long kMaxSubsets = 5'000'000;

// Unbiased, and stable across platforms (mt19937_64 output is standardized,
// std::uniform_int_distribution is not).
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t k) {
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % k;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % k;
}

Point random_point(int n, std::uint32_t p, std::mt19937_64& rng) {
    std::vector<std::uint32_t> coords(static_cast<size_t>(n));
    for (auto& c : coords)
        c = static_cast<std::uint32_t>(uniform_below(rng, p));
    return Point(std::move(coords));
}

void check_capacity(int n, int m, std::uint32_t p) {
    if (n < 1 || n > kMaxVars)
        throw input_error("dimension must be between 1 and " +
                          std::to_string(kMaxVars));
    BigInt cap = 1;
    for (int i = 0; i < n && cap <= m; ++i) cap *= p;
    if (cap < m)
        throw input_error("cannot pick " + std::to_string(m) +
                          " distinct points in a space of " +
                          std::to_string(n) + " coordinates");
}

BigInt binomial(const BigInt& n, int k) {
    if (k < 0 || n < k) return 0;
    BigInt c = 1;
    for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return c;
}

} // namespace

std::string scheme_str(SchemeKind scheme) {
    return scheme == SchemeKind::Random ? "random" : "small-distance";
}

SchemeKind parse_scheme(const std::string& text) {
    if (text == "random") return SchemeKind::Random;
    if (text == "small-distance" || text == "small_distance")
        return SchemeKind::SmallDistance;
    throw input_error("unknown scheme \"" + text +
                      "\" (expected random or small-distance)");
}

InputSet random_scheme(int n, int m, std::mt19937_64& rng, std::uint32_t p) {
    PrimeField F(p);
    if (m < 1) throw input_error("need at least one point");
    check_capacity(n, m, p);
    std::set<Point> seen;
    std::vector<Point> points;
    while (points.size() < static_cast<size_t>(m)) {
        Point pt = random_point(n, p, rng);
        if (seen.insert(pt).second) points.push_back(std::move(pt));
    }
    return InputSet(std::move(points), F);
}

InputSet small_distance_scheme(int n, int m, std::mt19937_64& rng,
                               std::uint32_t p) {
    PrimeField F(p);
    if (m < 2 || m % 2 != 0)
        throw input_error("m must be a positive even number");
    check_capacity(n, m, p);

    long long budget = 100LL * m;
    auto draw = [&budget] {
        if (budget == 0)
            throw resource_error("point sampling budget exhausted");
        --budget;
    };

    std::set<Point> used;
    std::vector<Point> points;
    while (points.size() < static_cast<size_t>(m)) {
        Point base;
        do {
            draw();
            base = random_point(n, p, rng);
        } while (used.count(base) != 0);

        // Switch one coordinate; if the partner collides, try another
        // coordinate up to n times before giving up on this base.
        for (int tries = 0; tries < n; ++tries) {
            draw();
            auto c = static_cast<size_t>(uniform_below(rng, n));
            Point partner = base;
            if (p == 2) {
                partner.coords[c] ^= 1u;
            } else {
                auto shift = 1 + uniform_below(rng, p - 1);
                partner.coords[c] = static_cast<std::uint32_t>(
                    (partner.coords[c] + shift) % p);
            }
            if (used.count(partner) == 0) {
                used.insert(base);
                used.insert(partner);
                points.push_back(std::move(base));
                points.push_back(std::move(partner));
                break;
            }
        }
    }
    return InputSet(std::move(points), F);
}

std::pair<Rational, int> trial_statistics(const FanoutFreeFunction& f,
                                          const InputSet& V) {
    std::vector<std::uint32_t> values;
    values.reserve(V.points.size());
    for (const auto& pt : V.points) values.push_back(evaluate(f, pt));
    DataSet D(V, OutputAssignment{std::move(values)});
    auto M = minsets(D);
    return {internal_distance(V), static_cast<int>(M.size())};
}

std::vector<TrialRecord> run_trials(const FanoutFreeFunction& f,
                                    SchemeKind scheme, int n, int m,
                                    long long trials, std::uint64_t seed) {
    if (trials < 0) throw input_error("trial count cannot be negative");
    std::vector<TrialRecord> records;
    records.reserve(static_cast<size_t>(trials));
    for (long long t = 0; t < trials; ++t) {
        std::mt19937_64 rng(seed ^ static_cast<std::uint64_t>(t));
        InputSet V = scheme == SchemeKind::Random
                         ? random_scheme(n, m, rng)
                         : small_distance_scheme(n, m, rng);
        auto [d, k] = trial_statistics(f, V);
        records.push_back({t, scheme, f.id, n, m, seed, d, k});
    }
    return records;
}

std::vector<GroupedCount> exhaustive_enumeration(const FanoutFreeFunction& f,
                                                 int n, int m) {
    if (n < 1 || n > 62)
        throw input_error("dimension must be between 1 and 62");
    if (m < 2) throw input_error("need at least two points");
    BigInt npoints = BigInt(1) << n;
    BigInt total = binomial(npoints, m);
    if (total == 0)
        throw input_error("cannot pick " + std::to_string(m) +
                          " distinct points in a space of " +
                          std::to_string(n) + " coordinates");
    if (total > kMaxSubsets)
        throw resource_error("enumeration would visit " + total.str() +
                             " input sets (limit " +
                             std::to_string(kMaxSubsets) + ")");

    auto point_of = [n](std::uint64_t v) {
        std::vector<std::uint32_t> coords(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i)
            coords[static_cast<size_t>(i)] = (v >> i) & 1u;
        return Point(std::move(coords));
    };

    PrimeField F2(2);
    auto N = static_cast<std::uint64_t>(1) << n;
    std::vector<std::uint64_t> idx(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) idx[static_cast<size_t>(i)] = i;

    std::map<std::pair<Rational, int>, long long> groups;
    for (;;) {
        std::vector<Point> points;
        points.reserve(static_cast<size_t>(m));
        for (auto v : idx) points.push_back(point_of(v));
        auto [d, k] = trial_statistics(f, InputSet(std::move(points), F2));
        ++groups[{d, k}];

        // next m-combination of {0, ..., N-1}
        int pos = m - 1;
        while (pos >= 0 &&
               idx[static_cast<size_t>(pos)] == N - m + pos)
            --pos;
        if (pos < 0) break;
        ++idx[static_cast<size_t>(pos)];
        for (int j = pos + 1; j < m; ++j)
            idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }

    std::vector<GroupedCount> out;
    out.reserve(groups.size());
    for (const auto& [key, count] : groups)
        out.push_back({key.first, key.second, count});
    return out;
}

void write_trials_csv(std::ostream& out,
                      const std::vector<TrialRecord>& records) {
    out << "trial_id,scheme,function_id,n,m,d_num,d_den,num_minsets\n";
    for (const auto& r : records)
        out << r.trial_id << ',' << scheme_str(r.scheme) << ','
            << r.function_id << ',' << r.n << ',' << r.m << ','
            << numerator(r.d) << ',' << denominator(r.d) << ','
            << r.num_minsets << '\n';
}

void write_groups_csv(std::ostream& out,
                      const std::vector<GroupedCount>& groups) {
    out << "d_num,d_den,num_minsets,count\n";
    for (const auto& g : groups)
        out << numerator(g.d) << ',' << denominator(g.d) << ','
            << g.num_minsets << ',' << g.count << '\n';
}

} // namespace mwd
