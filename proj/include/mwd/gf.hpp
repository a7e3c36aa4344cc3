#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "mwd/errors.hpp"

namespace mwd {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Points are vectors over F_p with at most this many coordinates, so a set
// of variable indices always fits a 64-bit mask.
inline constexpr int kMaxVars = 64;

// The prime field F_p. Elements are canonical representatives 0..p-1.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p);

    std::uint32_t p() const { return p_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p_; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + p_ - b) % p_; }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>(std::uint64_t(a) * b % p_);
    }
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

    // Reduces an arbitrary integer (possibly "negative" notation) into 0..p-1.
    std::uint32_t canon(long long v) const;

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }
    bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

private:
    std::uint32_t p_;
};

// A point of F_p^n. The field is tracked by the containing InputSet, not here.
struct Point {
    std::vector<std::uint32_t> coords;

    Point() = default;
    explicit Point(std::vector<std::uint32_t> c) : coords(std::move(c)) {}

    int dimension() const { return static_cast<int>(coords.size()); }
    std::uint32_t operator[](int i) const { return coords[static_cast<size_t>(i)]; }

    bool operator==(const Point& o) const = default;
    auto operator<=>(const Point& o) const = default;
};

// Number of coordinates in which a and b differ.
int hamming(const Point& a, const Point& b);

// Exact mean of the pairwise Hamming distances over all unordered pairs.
// Requires at least two points, all distinct.
Rational internal_distance(const std::vector<Point>& points);

// Parsing/printing. For p <= 10 a point is a contiguous digit string
// ("010"); for larger p it is comma-separated ("11,0,12").
Point parse_point(const std::string& text, const PrimeField& field);
std::string point_str(const Point& pt, const PrimeField& field);

}  // namespace mwd
