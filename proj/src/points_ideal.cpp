#include "mwd/points_ideal.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <queue>
#include <set>

#include "mwd/errors.hpp"

namespace mwd {

int Monomial::degree() const {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

bool Monomial::is_one() const { return degree() == 0; }

bool Monomial::divides(const Monomial& o) const {
    if (e.size() != o.e.size()) return false;
    for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > o.e[i]) return false;
    return true;
}

Monomial Monomial::times(int var) const {
    Monomial m = *this;
    ++m.e[var];
    return m;
}

bool DeglexLess::operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.e < b.e;
}

namespace {

void check_permutation(const std::vector<int>& perm) {
    std::vector<int> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < static_cast<int>(sorted.size()); ++i)
        if (sorted[i] != i)
            throw input_error("order permutation must list each variable once");
}

}  // namespace

MonomialOrder make_order(OrderKind kind, int nvars) {
    std::vector<int> perm(nvars);
    for (int i = 0; i < nvars; ++i) perm[i] = i;
    return make_order(kind, std::move(perm));
}

MonomialOrder make_order(OrderKind kind, std::vector<int> permutation) {
    if (kind == OrderKind::weighted)
        throw input_error("weighted orders require a weight vector");
    check_permutation(permutation);
    MonomialOrder o;
    o.kind = kind;
    o.perm = std::move(permutation);
    return o;
}

MonomialOrder make_weighted_order(std::vector<Rational> weights,
                                  std::vector<int> permutation) {
    check_permutation(permutation);
    if (weights.size() != permutation.size())
        throw input_error("weight vector length must match the variable count");
    bool positive = false;
    for (const Rational& w : weights) {
        if (w < 0) throw input_error("weights must be nonnegative");
        if (w > 0) positive = true;
    }
    if (!positive) throw input_error("weight vector needs a positive entry");
    MonomialOrder o;
    o.kind = OrderKind::weighted;
    o.perm = std::move(permutation);
    o.weights = std::move(weights);
    return o;
}

Cmp compare(const MonomialOrder& order, const Monomial& a, const Monomial& b) {
    const int n = a.nvars();
    if (b.nvars() != n || static_cast<int>(order.perm.size()) != n)
        throw input_error("monomial dimensions do not match the order");
    if (a == b) return Cmp::EQ;

    auto lex = [&]() {
        for (int v : order.perm)
            if (a.e[v] != b.e[v]) return a.e[v] > b.e[v] ? Cmp::GT : Cmp::LT;
        return Cmp::EQ;
    };

    switch (order.kind) {
        case OrderKind::lex:
            return lex();
        case OrderKind::deglex: {
            int da = a.degree(), db = b.degree();
            if (da != db) return da > db ? Cmp::GT : Cmp::LT;
            return lex();
        }
        case OrderKind::degrevlex: {
            int da = a.degree(), db = b.degree();
            if (da != db) return da > db ? Cmp::GT : Cmp::LT;
            for (int k = n - 1; k >= 0; --k) {
                int v = order.perm[k];
                if (a.e[v] != b.e[v])
                    return a.e[v] < b.e[v] ? Cmp::GT : Cmp::LT;
            }
            return Cmp::EQ;
        }
        case OrderKind::weighted: {
            Rational wa = 0, wb = 0;
            for (int v = 0; v < n; ++v) {
                wa += order.weights[v] * a.e[v];
                wb += order.weights[v] * b.e[v];
            }
            if (wa != wb) return wa > wb ? Cmp::GT : Cmp::LT;
            return lex();
        }
    }
    throw input_error("unknown order kind");
}

bool Staircase::contains(const Monomial& m) const {
    return std::binary_search(monomials.begin(), monomials.end(), m,
                              DeglexLess{});
}

bool staircase_less(const Staircase& a, const Staircase& b) {
    return std::lexicographical_compare(a.monomials.begin(), a.monomials.end(),
                                        b.monomials.begin(), b.monomials.end(),
                                        DeglexLess{});
}

std::uint32_t eval_monomial(const PrimeField& F, const Monomial& m,
                            const Point& pt) {
    if (m.nvars() != pt.dimension())
        throw input_error("monomial and point dimensions differ");
    std::uint32_t v = 1;
    for (int i = 0; i < m.nvars(); ++i)
        v = F.mul(v, F.pow(pt[i], static_cast<std::uint32_t>(m.e[i])));
    return v;
}

std::uint32_t evaluate(const PrimeField& F, const Polynomial& f,
                       const Point& pt) {
    std::uint32_t v = 0;
    for (const auto& [m, c] : f.terms)
        v = F.add(v, F.mul(c, eval_monomial(F, m, pt)));
    return v;
}

void add_term(const PrimeField& F, Polynomial& f, const Monomial& m,
              std::uint32_t c) {
    c %= F.p();
    if (!c) return;
    auto [it, fresh] = f.terms.try_emplace(m, 0);
    it->second = F.add(it->second, c);
    if (it->second == 0) f.terms.erase(it);
}

MarkedGB buchberger_moller(const InputSet& V, const MonomialOrder& order) {
    if (V.size() == 0)
        throw input_error("Groebner basis of an empty point set");
    const PrimeField F = V.field;
    const int n = V.dimension();
    const int m = V.size();

    auto greater = [&](const Monomial& a, const Monomial& b) {
        return compare(order, a, b) == Cmp::GT;
    };
    std::priority_queue<Monomial, std::vector<Monomial>, decltype(greater)>
        queue(greater);  // min at top
    std::set<std::vector<int>> seen;
    queue.push(Monomial::one(n));
    seen.insert(Monomial::one(n).e);

    FpSolver solver(F, m);
    std::vector<Monomial> standard;  // insertion order
    std::vector<MarkedGB::Generator> gens;

    while (!queue.empty()) {
        Monomial t = queue.top();
        queue.pop();
        bool in_lead_ideal = false;
        for (const auto& g : gens)
            if (g.lead.divides(t)) { in_lead_ideal = true; break; }
        if (in_lead_ideal) continue;

        std::vector<std::uint32_t> col(m);
        for (int r = 0; r < m; ++r) col[r] = eval_monomial(F, t, V.points[r]);

        if (auto combo = solver.express(col)) {
            // t is a new leading monomial; its normal form is the found
            // combination of earlier standard monomials.
            MarkedGB::Generator g;
            g.lead = t;
            add_term(F, g.poly, t, 1);
            for (std::size_t k = 0; k < combo->size(); ++k)
                if ((*combo)[k])
                    add_term(F, g.poly, standard[k], F.neg((*combo)[k]));
            gens.push_back(std::move(g));
        } else {
            solver.try_insert(col);
            standard.push_back(t);
            for (int v = 0; v < n; ++v) {
                Monomial child = t.times(v);
                if (seen.insert(child.e).second) queue.push(child);
            }
        }
    }

    MarkedGB gb{F, {}, {}};
    gb.generators = std::move(gens);
    std::sort(gb.generators.begin(), gb.generators.end(),
              [](const auto& a, const auto& b) {
                  return DeglexLess{}(a.lead, b.lead);
              });
    gb.staircase.monomials = std::move(standard);
    std::sort(gb.staircase.monomials.begin(), gb.staircase.monomials.end(),
              DeglexLess{});
    return gb;
}

EvaluationMatrix evaluation_matrix(const std::vector<Monomial>& monomials,
                                   const InputSet& V) {
    FpMatrix A(V.field, V.size(), static_cast<int>(monomials.size()));
    for (int r = 0; r < A.rows; ++r)
        for (int c = 0; c < A.cols; ++c)
            A.at(r, c) = eval_monomial(V.field, monomials[c], V.points[r]);
    return A;
}

EvaluationMatrix evaluation_matrix(const Staircase& S, const InputSet& V) {
    return evaluation_matrix(S.monomials, V);
}

Polynomial normal_form(const Polynomial& f, const MarkedGB& G) {
    const PrimeField& F = G.field;
    Polynomial work = f, result;
    while (!work.terms.empty()) {
        auto it = std::prev(work.terms.end());
        const Monomial m = it->first;
        const std::uint32_t c = it->second;
        const MarkedGB::Generator* hit = nullptr;
        for (const auto& g : G.generators)
            if (g.lead.divides(m)) { hit = &g; break; }
        if (!hit) {
            add_term(F, result, m, c);
            work.terms.erase(it);
            continue;
        }
        // work -= c * x^(m - lead) * g; the marked term cancels m exactly.
        Monomial shift = m;
        for (int i = 0; i < m.nvars(); ++i) shift.e[i] -= hit->lead.e[i];
        for (const auto& [gm, gc] : hit->poly.terms) {
            Monomial prod = gm;
            for (int i = 0; i < prod.nvars(); ++i) prod.e[i] += shift.e[i];
            add_term(F, work, prod, F.mul(c, F.neg(gc)));
        }
    }
    return result;
}

Polynomial interpolate(const DataSet& D) {
    const InputSet& V = D.inputs;
    MarkedGB gb = buchberger_moller(V, make_order(OrderKind::deglex,
                                                  V.dimension()));
    EvaluationMatrix A = evaluation_matrix(gb.staircase, V);
    auto combo = solve_in_span(A, D.outputs.values);
    // The staircase matrix is square and invertible, so this always solves.
    Polynomial f;
    for (std::size_t k = 0; k < combo->size(); ++k)
        add_term(V.field, f, gb.staircase.monomials[k], (*combo)[k]);
    return f;
}

std::vector<MarkedGB> all_staircases(const InputSet& V) {
    if (V.size() == 0)
        throw input_error("staircase enumeration of an empty point set");
    const PrimeField F = V.field;
    const int n = V.dimension();
    const int m = V.size();

    std::uint64_t box_size = 1;
    for (int i = 0; i < n; ++i) {
        box_size *= F.p();
        if (box_size > (std::uint64_t{1} << 20))
            throw resource_error("monomial box too large to enumerate");
    }

    // The box {0..p-1}^n in ascending canonical order; index 0 is 1.
    std::vector<Monomial> box;
    box.reserve(box_size);
    Monomial cur = Monomial::one(n);
    for (std::uint64_t k = 0; k < box_size; ++k) {
        box.push_back(cur);
        for (int i = 0; i < n; ++i) {
            if (++cur.e[i] < static_cast<int>(F.p())) break;
            cur.e[i] = 0;
        }
    }
    std::sort(box.begin(), box.end(), DeglexLess{});
    std::map<std::vector<int>, int> index_of;
    for (int i = 0; i < static_cast<int>(box.size()); ++i)
        index_of[box[i].e] = i;
    std::vector<std::vector<int>> parents(box.size());
    for (int i = 0; i < static_cast<int>(box.size()); ++i)
        for (int v = 0; v < n; ++v)
            if (box[i].e[v] > 0) {
                Monomial par = box[i];
                --par.e[v];
                parents[i].push_back(index_of[par.e]);
            }

    std::vector<std::vector<std::uint32_t>> cols(box.size());
    auto column = [&](int idx) -> const std::vector<std::uint32_t>& {
        if (cols[idx].empty()) {
            cols[idx].resize(m);
            for (int r = 0; r < m; ++r)
                cols[idx][r] = eval_monomial(F, box[idx], V.points[r]);
        }
        return cols[idx];
    };

    FpSolver solver(F, m);
    std::vector<int> chosen;
    std::vector<char> in_delta(box.size(), 0);
    std::vector<MarkedGB> result;

    auto finish = [&]() {
        // In-box borders: minimal monomials outside the staircase. Their
        // expansions over the staircase give the candidate generators, and
        // the staircase is attainable by some order exactly when a
        // nonnegative weight vector separates each border from its trailing
        // support.
        std::vector<std::pair<int, std::vector<std::uint32_t>>> borders;
        RationalConstraintSystem sys;
        sys.nvars = n;
        for (int i = 0; i < static_cast<int>(box.size()); ++i) {
            if (in_delta[i]) continue;
            bool minimal = true;
            for (int par : parents[i])
                if (!in_delta[par]) { minimal = false; break; }
            if (!minimal) continue;
            auto combo = solver.express(column(i));
            for (std::size_t k = 0; k < combo->size(); ++k) {
                if (!(*combo)[k]) continue;
                const Monomial& s = box[chosen[k]];
                std::vector<Rational> c(n);
                for (int v = 0; v < n; ++v) c[v] = box[i].e[v] - s.e[v];
                sys.vectors.push_back(std::move(c));
            }
            borders.emplace_back(i, std::move(*combo));
        }
        if (!strict_feasible(sys)) return;

        MarkedGB gb{F, {}, {}};
        for (const auto& [b, combo] : borders) {
            MarkedGB::Generator g;
            g.lead = box[b];
            add_term(F, g.poly, box[b], 1);
            for (std::size_t k = 0; k < combo.size(); ++k)
                if (combo[k])
                    add_term(F, g.poly, box[chosen[k]], F.neg(combo[k]));
            gb.generators.push_back(std::move(g));
        }
        // x_v^p - x_v completes the basis whenever x_v^(p-1) is standard;
        // every order marks x_v^p as its lead, so feasibility is unaffected.
        for (int v = 0; v < n; ++v) {
            Monomial top = Monomial::one(n);
            top.e[v] = static_cast<int>(F.p()) - 1;
            if (!in_delta[index_of[top.e]]) continue;
            MarkedGB::Generator g;
            g.lead = Monomial::one(n);
            g.lead.e[v] = static_cast<int>(F.p());
            add_term(F, g.poly, g.lead, 1);
            Monomial xv = Monomial::one(n);
            xv.e[v] = 1;
            add_term(F, g.poly, xv, F.p() - 1);
            gb.generators.push_back(std::move(g));
        }
        std::sort(gb.generators.begin(), gb.generators.end(),
                  [](const auto& a, const auto& b) {
                      return DeglexLess{}(a.lead, b.lead);
                  });
        for (int i : chosen) gb.staircase.monomials.push_back(box[i]);
        result.push_back(std::move(gb));
    };

    // Downward-closed subsets listed ascending have downward-closed
    // prefixes, so a DFS over ascending box indices visits every candidate
    // staircase exactly once; singular prefixes are pruned immediately.
    std::function<void(int)> dfs = [&](int start) {
        if (static_cast<int>(chosen.size()) == m) {
            finish();
            return;
        }
        const int need = m - static_cast<int>(chosen.size());
        for (int idx = start;
             idx + need <= static_cast<int>(box.size()); ++idx) {
            bool closed = true;
            for (int par : parents[idx])
                if (!in_delta[par]) { closed = false; break; }
            if (!closed) continue;
            if (!solver.try_insert(column(idx))) continue;
            chosen.push_back(idx);
            in_delta[idx] = 1;
            dfs(idx + 1);
            in_delta[idx] = 0;
            chosen.pop_back();
            solver.pop();
        }
    };
    dfs(0);

    std::sort(result.begin(), result.end(),
              [](const MarkedGB& a, const MarkedGB& b) {
                  return staircase_less(a.staircase, b.staircase);
              });
    return result;
}

bool has_unique_gb(const InputSet& V) { return all_staircases(V).size() == 1; }

std::vector<Monomial> common_standard_monomials(const InputSet& V) {
    auto list = all_staircases(V);
    std::vector<Monomial> common = list.front().staircase.monomials;
    for (std::size_t k = 1; k < list.size(); ++k) {
        std::vector<Monomial> next;
        std::set_intersection(common.begin(), common.end(),
                              list[k].staircase.monomials.begin(),
                              list[k].staircase.monomials.end(),
                              std::back_inserter(next), DeglexLess{});
        common = std::move(next);
    }
    return common;
}

UniqueNF unique_normal_form(const InputSet& V, const OutputAssignment& T) {
    if (static_cast<int>(T.values.size()) != V.size())
        throw input_error("output assignment length does not match the input set");
    for (std::uint32_t t : T.values)
        if (t >= V.field.p())
            throw input_error("output value out of range for the field");
    auto common = common_standard_monomials(V);
    EvaluationMatrix A = evaluation_matrix(common, V);
    auto combo = solve_in_span(A, T.values);
    UniqueNF out;
    if (!combo) return out;
    out.unique = true;
    Polynomial nf;
    for (std::size_t k = 0; k < combo->size(); ++k)
        add_term(V.field, nf, common[k], (*combo)[k]);
    out.normal_form = std::move(nf);
    return out;
}

namespace {

std::string var_name(int i, int nvars) {
    if (nvars <= 3) return std::string(1, "xyz"[i]);
    return "x" + std::to_string(i + 1);
}

[[noreturn]] void bad_poly(const std::string& msg) { throw input_error(msg); }

}  // namespace

std::string monomial_text(const Monomial& m, int nvars) {
    if (m.is_one()) return "1";
    std::string s;
    for (int i = 0; i < m.nvars(); ++i) {
        if (!m.e[i]) continue;
        s += var_name(i, nvars);
        if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
    }
    return s;
}

std::string poly_str(const Polynomial& f, int nvars) {
    if (f.is_zero()) return "0";
    std::string s;
    for (auto it = f.terms.rbegin(); it != f.terms.rend(); ++it) {
        if (!s.empty()) s += "+";
        const auto& [m, c] = *it;
        if (m.is_one()) {
            s += std::to_string(c);
            continue;
        }
        if (c != 1) s += std::to_string(c);
        s += monomial_text(m, nvars);
    }
    return s;
}

std::string generator_str(const MarkedGB::Generator& g, int nvars) {
    std::string s = monomial_text(g.lead, nvars);  // leading coefficient is 1
    for (auto it = g.poly.terms.rbegin(); it != g.poly.terms.rend(); ++it) {
        const auto& [m, c] = *it;
        if (m == g.lead) continue;
        s += "+";
        if (m.is_one()) {
            s += std::to_string(c);
            continue;
        }
        if (c != 1) s += std::to_string(c);
        s += monomial_text(m, nvars);
    }
    return s;
}

std::string staircase_str(const Staircase& S, int nvars) {
    std::string s = "{";
    for (std::size_t i = 0; i < S.monomials.size(); ++i) {
        if (i) s += ",";
        s += monomial_text(S.monomials[i], nvars);
    }
    return s + "}";
}

Polynomial parse_polynomial(const std::string& text, int nvars,
                            const PrimeField& F) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) bad_poly("empty polynomial");

    auto digits_at = [&](std::size_t i) {
        std::size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j])))
            ++j;
        return j;
    };

    Polynomial out;
    std::size_t i = 0;
    while (i < s.size()) {
        long long sign = 1;
        while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') sign = -sign;
            ++i;
        }
        if (i >= s.size()) bad_poly("dangling sign in polynomial");

        long long coeff = 1;
        bool saw_any = false;
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            std::size_t j = digits_at(i);
            if (j - i > 18) bad_poly("coefficient too long");
            coeff = std::stoll(s.substr(i, j - i));
            i = j;
            saw_any = true;
            if (i < s.size() && s[i] == '*') ++i;
        }

        Monomial mono = Monomial::one(nvars);
        while (i < s.size() && s[i] != '+' && s[i] != '-') {
            char v = s[i];
            int var = -1;
            if (v == 'x' && i + 1 < s.size() &&
                std::isdigit(static_cast<unsigned char>(s[i + 1]))) {
                std::size_t j = digits_at(i + 1);
                if (j - i - 1 > 6) bad_poly("variable index too long");
                long long k = std::stoll(s.substr(i + 1, j - i - 1));
                if (k < 1 || k > nvars)
                    bad_poly("variable index out of range");
                var = static_cast<int>(k) - 1;
                i = j;
            } else if (v == 'x' || v == 'y' || v == 'z') {
                if (nvars > 3)
                    bad_poly("use indexed variables x1..xn with more than "
                             "three variables");
                var = v - 'x';
                if (var >= nvars) bad_poly("variable out of range");
                ++i;
            } else {
                bad_poly(std::string("unexpected character '") + v +
                         "' in polynomial");
            }

            long long expo = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::size_t j = digits_at(i);
                if (j == i) bad_poly("expected digits after '^'");
                if (j - i > 6) bad_poly("exponent too long");
                expo = std::stoll(s.substr(i, j - i));
                i = j;
            }
            mono.e[var] += static_cast<int>(expo);
            saw_any = true;
            if (i < s.size() && s[i] == '*') {
                ++i;
                if (i >= s.size() || s[i] == '+' || s[i] == '-')
                    bad_poly("dangling '*' in polynomial");
            }
        }
        if (!saw_any) bad_poly("empty term in polynomial");
        add_term(F, out, mono, F.canon(sign < 0 ? -coeff : coeff));
    }
    return out;
}

}  // namespace mwd
