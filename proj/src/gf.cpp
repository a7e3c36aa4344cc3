#include "mwd/gf.hpp"

#include <sstream>

namespace mwd {

namespace {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime_u32(p))
        throw input_error("modulus " + std::to_string(p) + " is not prime");
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
    a %= p_;
    if (a == 0) throw input_error("division by zero in F_" + std::to_string(p_));
    // extended Euclid; p_ is prime so gcd is 1
    std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<std::uint32_t>(t);
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t base = a % p_, acc = 1 % p_;
    while (e) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

std::uint32_t PrimeField::canon(long long v) const {
    long long m = v % static_cast<long long>(p_);
    if (m < 0) m += p_;
    return static_cast<std::uint32_t>(m);
}

int hamming(const Point& a, const Point& b) {
    if (a.dimension() != b.dimension())
        throw input_error("hamming: dimension mismatch (" + std::to_string(a.dimension()) +
                          " vs " + std::to_string(b.dimension()) + ")");
    int d = 0;
    for (size_t i = 0; i < a.coords.size(); ++i)
        if (a.coords[i] != b.coords[i]) ++d;
    return d;
}

Rational internal_distance(const std::vector<Point>& points) {
    if (points.size() < 2)
        throw input_error("internal_distance: need at least two points");
    long long sum = 0, pairs = 0;
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j) {
            int h = hamming(points[i], points[j]);
            if (h == 0) throw input_error("internal_distance: points are not distinct");
            sum += h;
            ++pairs;
        }
    return Rational(sum, pairs);
}

Point parse_point(const std::string& text, const PrimeField& field) {
    std::vector<std::uint32_t> coords;
    if (field.p() <= 10) {
        for (char c : text) {
            if (c < '0' || c > '9')
                throw input_error(std::string("invalid character '") + c + "' in point \"" +
                                  text + "\"");
            std::uint32_t v = static_cast<std::uint32_t>(c - '0');
            if (v >= field.p())
                throw input_error("coordinate " + std::to_string(v) + " out of range for F_" +
                                  std::to_string(field.p()));
            coords.push_back(v);
        }
    } else {
        std::stringstream ss(text);
        std::string part;
        while (std::getline(ss, part, ',')) {
            try {
                size_t pos = 0;
                long long v = std::stoll(part, &pos);
                if (pos != part.size() || v < 0) throw std::invalid_argument(part);
                if (v >= field.p())
                    throw input_error("coordinate " + std::to_string(v) +
                                      " out of range for F_" + std::to_string(field.p()));
                coords.push_back(static_cast<std::uint32_t>(v));
            } catch (const std::invalid_argument&) {
                throw input_error("invalid coordinate \"" + part + "\" in point \"" + text +
                                  "\"");
            } catch (const std::out_of_range&) {
                throw input_error("invalid coordinate \"" + part + "\" in point \"" + text +
                                  "\"");
            }
        }
    }
    if (coords.empty()) throw input_error("empty point \"" + text + "\"");
    if (coords.size() > kMaxVars)
        throw input_error("point has more than " + std::to_string(kMaxVars) + " coordinates");
    return Point(std::move(coords));
}

std::string point_str(const Point& pt, const PrimeField& field) {
    std::string out;
    for (size_t i = 0; i < pt.coords.size(); ++i) {
        if (field.p() <= 10) {
            out += static_cast<char>('0' + pt.coords[i]);
        } else {
            if (i) out += ',';
            out += std::to_string(pt.coords[i]);
        }
    }
    return out;
}

}  // namespace mwd
