#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mwd/design.hpp"
#include "mwd/gf.hpp"
#include "mwd/linalg.hpp"

namespace mwd {

struct Monomial {
    std::vector<int> e;

    static Monomial one(int n) { return Monomial{std::vector<int>(n, 0)}; }
    int nvars() const { return static_cast<int>(e.size()); }
    int degree() const;
    bool is_one() const;
    bool divides(const Monomial& o) const;
    Monomial times(int var) const;  // multiply by x_var (0-based)
    bool operator==(const Monomial&) const = default;
};

// Ascending degree-then-lexicographic comparison in the natural variable
// order; the canonical order used for term storage, display, and the
// canonical listing of staircases.
struct DeglexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

struct Polynomial {
    std::map<Monomial, std::uint32_t, DeglexLess> terms;

    bool is_zero() const { return terms.empty(); }
    bool operator==(const Polynomial&) const = default;
};

enum class OrderKind { lex, deglex, degrevlex, weighted };

// Total multiplicative monomial order. The permutation lists variables by
// significance, most significant first; weighted orders compare rational
// weights and fall back to lex (with the same permutation) on ties.
struct MonomialOrder {
    OrderKind kind = OrderKind::deglex;
    std::vector<int> perm;          // 0-based variable indices
    std::vector<Rational> weights;  // indexed by variable, natural order
};

MonomialOrder make_order(OrderKind kind, int nvars);
MonomialOrder make_order(OrderKind kind, std::vector<int> permutation);
MonomialOrder make_weighted_order(std::vector<Rational> weights,
                                  std::vector<int> permutation);

enum class Cmp { LT, EQ, GT };
Cmp compare(const MonomialOrder& order, const Monomial& a, const Monomial& b);

// Standard monomials of a vanishing ideal, stored in ascending canonical
// order; downward closed under divisibility and of size |V|.
struct Staircase {
    std::vector<Monomial> monomials;

    bool contains(const Monomial& m) const;
    bool operator==(const Staircase&) const = default;
};

// Sequence-lexicographic comparison of the canonical monomial listings.
bool staircase_less(const Staircase& a, const Staircase& b);

// A reduced Groebner basis with each generator's leading monomial marked,
// together with its staircase. Trailing monomials always lie in the
// staircase and leading coefficients are 1.
struct MarkedGB {
    struct Generator {
        Polynomial poly;
        Monomial lead;
    };

    PrimeField field;
    std::vector<Generator> generators;  // sorted by leading monomial
    Staircase staircase;
};

using EvaluationMatrix = FpMatrix;

std::uint32_t eval_monomial(const PrimeField& F, const Monomial& m,
                            const Point& pt);
std::uint32_t evaluate(const PrimeField& F, const Polynomial& f,
                       const Point& pt);

// f += c * m, keeping coefficients canonical and dropping zeros.
void add_term(const PrimeField& F, Polynomial& f, const Monomial& m,
              std::uint32_t c);

// Reduced Groebner basis of the vanishing ideal I(V) under the given order.
MarkedGB buchberger_moller(const InputSet& V, const MonomialOrder& order);

EvaluationMatrix evaluation_matrix(const std::vector<Monomial>& monomials,
                                   const InputSet& V);
EvaluationMatrix evaluation_matrix(const Staircase& S, const InputSet& V);

// Remainder of f on division by the marked generators; supported on the
// staircase and equal to f modulo the ideal.
Polynomial normal_form(const Polynomial& f, const MarkedGB& G);

// Some polynomial interpolating the data, supported on a staircase of I(V).
Polynomial interpolate(const DataSet& D);

// Every staircase of I(V) attainable by a monomial order, each with its
// reduced Groebner basis; canonically sorted.
std::vector<MarkedGB> all_staircases(const InputSet& V);

bool has_unique_gb(const InputSet& V);

// Intersection of all attainable staircases, ascending canonical order.
std::vector<Monomial> common_standard_monomials(const InputSet& V);

struct UniqueNF {
    bool unique = false;
    std::optional<Polynomial> normal_form;
};

// Whether the data (V, T) has the same normal form under every Groebner
// basis of I(V); if so, that normal form.
UniqueNF unique_normal_form(const InputSet& V, const OutputAssignment& T);

// Text form: variables print as x,y,z for up to three ambient variables and
// x1..xn otherwise; terms in descending canonical order with coefficients in
// 0..p-1. Parsing also accepts '-', '*', and '^'.
std::string monomial_text(const Monomial& m, int nvars);
std::string poly_str(const Polynomial& f, int nvars);
std::string staircase_str(const Staircase& S, int nvars);
// Marked leading term first, then the tail in descending canonical order.
std::string generator_str(const MarkedGB::Generator& g, int nvars);
Polynomial parse_polynomial(const std::string& text, int nvars,
                            const PrimeField& F);

}  // namespace mwd
