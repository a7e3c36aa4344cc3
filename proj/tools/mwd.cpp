#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mwd/boolean_catalog.hpp"
#include "mwd/design.hpp"
#include "mwd/errors.hpp"
#include "mwd/experiments.hpp"
#include "mwd/io.hpp"
#include "mwd/monomial_ideal.hpp"
#include "mwd/points_ideal.hpp"
#include "mwd/svg.hpp"

using nlohmann::ordered_json;

namespace {

std::string fixed4(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

int parse_int(const std::string& text, const std::string& what) {
    size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size())
        throw mwd::input_error("cannot read " + what + " \"" + text + "\"");
    return v;
}

ordered_json minset_json(const std::vector<mwd::Minset>& sets) {
    ordered_json list = ordered_json::array();
    for (const auto& s : sets) list.push_back(s.indices());
    return list;
}

void emit(const ordered_json& doc) { std::cout << doc.dump(2) << "\n"; }

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw mwd::input_error("cannot write " + path);
    out << text;
    if (!out) throw mwd::input_error("cannot write " + path);
}

// ---------------------------------------------------------------- minsets

struct MinsetsOpts {
    std::string data_file;
    std::uint32_t p = 2;
    bool json = false;
};

int run_minsets(const MinsetsOpts& opt) {
    mwd::PrimeField F(opt.p);
    auto D = mwd::read_data_file(opt.data_file, F);
    auto ideal = mwd::minimal_generators(mwd::nondisposable_ideal(D));
    auto sets = mwd::minsets(D);

    if (opt.json) {
        ordered_json doc;
        doc["p"] = opt.p;
        ordered_json gens = ordered_json::array();
        for (const auto& g : ideal.gens) gens.push_back(mwd::monomial_str(g));
        doc["ideal"] = gens;
        doc["minsets"] = minset_json(sets);
        emit(doc);
        return 0;
    }

    std::string gens;
    for (const auto& g : ideal.gens) {
        if (!gens.empty()) gens += ", ";
        gens += mwd::monomial_str(g);
    }
    std::cout << "non-disposable ideal: <" << (ideal.is_zero() ? "0" : gens)
              << ">\n";
    std::cout << sets.size() << (sets.size() == 1 ? " minset\n" : " minsets\n");
    for (const auto& s : sets) std::cout << mwd::minset_str(s) << "\n";
    return 0;
}

// ----------------------------------------------------------- unique-input

struct UniqueInputOpts {
    std::string points_file;
    std::uint32_t p = 2;
    bool json = false;
    std::string witness; // --check-witness
};

int run_unique_input(const UniqueInputOpts& opt) {
    mwd::PrimeField F(opt.p);
    auto V = mwd::read_points_file(opt.points_file, F);
    auto verdict = mwd::guaranteed_unique_minset(V);

    if (!opt.witness.empty()) {
        auto T = mwd::parse_point(opt.witness, F);
        if (T.dimension() != V.size())
            throw mwd::input_error(
                "witness must assign one output to each of the " +
                std::to_string(V.size()) + " points");
        mwd::OutputAssignment out{T.coords};
        auto sets = mwd::minsets(mwd::DataSet(V, out));
        bool confirmed = sets.size() >= 2;

        if (opt.json) {
            ordered_json doc;
            doc["p"] = opt.p;
            doc["guaranteed_unique"] = verdict.guaranteed_unique;
            doc["witness"] = mwd::point_str(T, F);
            doc["minsets"] = minset_json(sets);
            doc["confirmed"] = confirmed;
            emit(doc);
        } else {
            std::cout << "witness T: " << mwd::point_str(T, F) << "\n";
            std::cout << sets.size()
                      << (sets.size() == 1 ? " minset under T\n"
                                           : " minsets under T\n");
            for (const auto& s : sets) std::cout << mwd::minset_str(s) << "\n";
            std::cout << (confirmed ? "WITNESS CONFIRMED\n"
                                    : "WITNESS REJECTED\n");
        }
        return confirmed ? 0 : 1;
    }

    if (verdict.guaranteed_unique) {
        if (opt.json) {
            ordered_json doc;
            doc["p"] = opt.p;
            doc["guaranteed_unique"] = true;
            emit(doc);
        } else {
            std::cout << "GUARANTEED UNIQUE\n";
        }
        return 0;
    }

    const auto& w = *verdict.witness;
    mwd::Point T(w.output.values);
    auto sets = mwd::minsets(mwd::DataSet(V, w.output));

    if (opt.json) {
        ordered_json doc;
        doc["p"] = opt.p;
        doc["guaranteed_unique"] = false;
        doc["witness"] = mwd::point_str(T, F);
        doc["pair"] = {w.a + 1, w.b + 1};
        doc["monomial"] = mwd::monomial_str(w.monomial);
        doc["minsets"] = minset_json(sets);
        emit(doc);
    } else {
        std::cout << "NOT GUARANTEED UNIQUE\n";
        std::cout << "witness T: " << mwd::point_str(T, F) << "\n";
        std::cout << "separating pair: points " << w.a + 1 << " and "
                  << w.b + 1 << " with monomial "
                  << mwd::monomial_str(w.monomial) << "\n";
        std::cout << sets.size()
                  << (sets.size() == 1 ? " minset under T\n"
                                       : " minsets under T\n");
        for (const auto& s : sets) std::cout << mwd::minset_str(s) << "\n";
    }
    return 1;
}

// --------------------------------------------------------------- groebner

struct GroebnerOpts {
    std::string points_file;
    std::uint32_t p = 2;
    bool json = false;
    bool all = false;
    std::string order = "deglex";
    std::string perm;    // 1-based, most significant first, e.g. "3,1,2"
    std::string weights; // rationals, natural variable order, e.g. "1,1/2,0"
};

mwd::MonomialOrder build_order(const GroebnerOpts& opt, int nvars) {
    std::vector<int> perm;
    if (!opt.perm.empty()) {
        for (const auto& part : split(opt.perm, ','))
            perm.push_back(parse_int(part, "variable index") - 1);
    }
    if (!opt.weights.empty()) {
        std::vector<mwd::Rational> ws;
        for (const auto& part : split(opt.weights, ',')) {
            try {
                ws.emplace_back(part);
            } catch (const std::exception&) {
                throw mwd::input_error("cannot read weight \"" + part + "\"");
            }
        }
        if (perm.empty())
            for (int i = 0; i < nvars; ++i) perm.push_back(i);
        return mwd::make_weighted_order(std::move(ws), std::move(perm));
    }

    mwd::OrderKind kind;
    if (opt.order == "lex") kind = mwd::OrderKind::lex;
    else if (opt.order == "deglex") kind = mwd::OrderKind::deglex;
    else if (opt.order == "degrevlex") kind = mwd::OrderKind::degrevlex;
    else
        throw mwd::input_error("unknown order \"" + opt.order +
                               "\" (expected lex, deglex, or degrevlex)");
    if (perm.empty()) return mwd::make_order(kind, nvars);
    return mwd::make_order(kind, std::move(perm));
}

ordered_json basis_json(const mwd::MarkedGB& gb, int nvars) {
    ordered_json doc;
    ordered_json monos = ordered_json::array();
    for (const auto& m : gb.staircase.monomials)
        monos.push_back(mwd::monomial_text(m, nvars));
    doc["staircase"] = monos;
    ordered_json gens = ordered_json::array();
    for (const auto& g : gb.generators)
        gens.push_back(mwd::generator_str(g, nvars));
    doc["generators"] = gens;
    return doc;
}

void print_basis(const mwd::MarkedGB& gb, int nvars) {
    std::cout << "staircase " << mwd::staircase_str(gb.staircase, nvars)
              << "\n";
    for (const auto& g : gb.generators)
        std::cout << "  " << mwd::generator_str(g, nvars) << "\n";
}

int run_groebner(const GroebnerOpts& opt) {
    mwd::PrimeField F(opt.p);
    auto V = mwd::read_points_file(opt.points_file, F);
    int nvars = V.dimension();

    if (opt.all) {
        auto bases = mwd::all_staircases(V);
        if (opt.json) {
            ordered_json doc;
            doc["p"] = opt.p;
            ordered_json list = ordered_json::array();
            for (const auto& gb : bases) list.push_back(basis_json(gb, nvars));
            doc["bases"] = list;
            emit(doc);
        } else {
            std::cout << bases.size()
                      << (bases.size() == 1 ? " reduced Groebner basis\n"
                                            : " reduced Groebner bases\n");
            for (const auto& gb : bases) print_basis(gb, nvars);
        }
        return 0;
    }

    auto order = build_order(opt, nvars);
    auto gb = mwd::buchberger_moller(V, order);
    if (opt.json) {
        ordered_json doc;
        doc["p"] = opt.p;
        doc["basis"] = basis_json(gb, nvars);
        emit(doc);
    } else {
        print_basis(gb, nvars);
    }
    return 0;
}

// --------------------------------------------------------------------- nf

struct NfOpts {
    std::string data_file;
    std::uint32_t p = 2;
    bool json = false;
};

int run_nf(const NfOpts& opt) {
    mwd::PrimeField F(opt.p);
    auto D = mwd::read_data_file(opt.data_file, F);
    int nvars = D.inputs.dimension();
    auto result = mwd::unique_normal_form(D.inputs, D.outputs);

    if (result.unique) {
        if (opt.json) {
            ordered_json doc;
            doc["p"] = opt.p;
            doc["unique"] = true;
            doc["normal_form"] = mwd::poly_str(*result.normal_form, nvars);
            emit(doc);
        } else {
            std::cout << "UNIQUE NF: "
                      << mwd::poly_str(*result.normal_form, nvars) << "\n";
        }
        return 0;
    }

    auto fit = mwd::interpolate(D);
    auto bases = mwd::all_staircases(D.inputs);
    if (opt.json) {
        ordered_json doc;
        doc["p"] = opt.p;
        doc["unique"] = false;
        ordered_json list = ordered_json::array();
        for (const auto& gb : bases) {
            ordered_json entry;
            entry["staircase"] = mwd::staircase_str(gb.staircase, nvars);
            entry["normal_form"] =
                mwd::poly_str(mwd::normal_form(fit, gb), nvars);
            list.push_back(entry);
        }
        doc["normal_forms"] = list;
        emit(doc);
    } else {
        std::cout << "NOT UNIQUE\n";
        for (const auto& gb : bases)
            std::cout << "  " << mwd::staircase_str(gb.staircase, nvars)
                      << ": " << mwd::poly_str(mwd::normal_form(fit, gb), nvars)
                      << "\n";
    }
    return 1;
}

// ------------------------------------------------------------- experiment

struct ExperimentOpts {
    std::string function = "2";
    std::string scheme = "both";
    int n = 10;
    int m = 20;
    long long trials = 100;
    std::uint64_t seed = 0;
    std::string csv;
    std::string svg;
    std::uint32_t p = 2;
    bool json = false;
};

const mwd::FanoutFreeFunction& lookup_function(const std::string& key) {
    const mwd::FanoutFreeFunction* f = nullptr;
    size_t used = 0;
    int id = 0;
    try {
        id = std::stoi(key, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    f = used == key.size() ? mwd::find_function(id) : mwd::find_function(key);
    if (!f)
        throw mwd::input_error(
            "unknown function \"" + key +
            "\" (use an id 1..10 or a polynomial such as x1x2)");
    return *f;
}

void require_f2(std::uint32_t p) {
    mwd::PrimeField F(p);
    if (p != 2)
        throw mwd::input_error("experiments run over F_2 (got --p " +
                               std::to_string(p) + ")");
}

ordered_json record_json(const mwd::TrialRecord& r) {
    ordered_json doc;
    doc["trial_id"] = r.trial_id;
    doc["scheme"] = mwd::scheme_str(r.scheme);
    doc["d_num"] = numerator(r.d).convert_to<long long>();
    doc["d_den"] = denominator(r.d).convert_to<long long>();
    doc["num_minsets"] = r.num_minsets;
    return doc;
}

int run_experiment(const ExperimentOpts& opt) {
    require_f2(opt.p);
    const auto& f = lookup_function(opt.function);

    std::vector<mwd::SchemeKind> schemes;
    if (opt.scheme == "both") {
        schemes = {mwd::SchemeKind::Random, mwd::SchemeKind::SmallDistance};
    } else {
        schemes = {mwd::parse_scheme(opt.scheme)};
    }

    std::vector<mwd::TrialRecord> all;
    std::vector<std::pair<mwd::SchemeKind, std::vector<mwd::TrialRecord>>> runs;
    for (auto scheme : schemes) {
        auto records =
            mwd::run_trials(f, scheme, opt.n, opt.m, opt.trials, opt.seed);
        all.insert(all.end(), records.begin(), records.end());
        runs.emplace_back(scheme, std::move(records));
    }

    std::ostringstream csv;
    mwd::write_trials_csv(csv, all);
    if (!opt.csv.empty()) write_text_file(opt.csv, csv.str());

    if (!opt.svg.empty()) {
        std::vector<mwd::HistogramSeries> series;
        for (const auto& [scheme, records] : runs)
            series.push_back(mwd::minsets_histogram(records));
        write_text_file(opt.svg + "-hist.svg", mwd::histogram_svg(series));
    }

    auto mean = [&](const std::vector<mwd::TrialRecord>& records,
                    auto&& value) {
        mwd::Rational sum = 0;
        for (const auto& r : records) sum += value(r);
        if (!records.empty()) sum /= static_cast<long long>(records.size());
        return sum.convert_to<double>();
    };

    if (opt.json) {
        ordered_json doc;
        doc["p"] = opt.p;
        doc["function"] = f.id;
        doc["n"] = opt.n;
        doc["m"] = opt.m;
        doc["trials"] = opt.trials;
        doc["seed"] = opt.seed;
        ordered_json list = ordered_json::array();
        for (const auto& [scheme, records] : runs) {
            ordered_json entry;
            entry["scheme"] = mwd::scheme_str(scheme);
            entry["mean_d"] = mean(records, [](const auto& r) { return r.d; });
            entry["mean_minsets"] = mean(records, [](const auto& r) {
                return mwd::Rational(r.num_minsets);
            });
            ordered_json recs = ordered_json::array();
            for (const auto& r : records) recs.push_back(record_json(r));
            entry["records"] = recs;
            list.push_back(entry);
        }
        doc["schemes"] = list;
        emit(doc);
        return 0;
    }

    if (opt.csv.empty()) {
        std::cout << csv.str();
    } else {
        for (const auto& [scheme, records] : runs)
            std::cout << mwd::scheme_str(scheme) << ": " << records.size()
                      << " trials, mean d(V) = "
                      << fixed4(mean(records,
                                     [](const auto& r) { return r.d; }))
                      << ", mean minsets = "
                      << fixed4(mean(records,
                                     [](const auto& r) {
                                         return mwd::Rational(r.num_minsets);
                                     }))
                      << "\n";
        std::cout << "wrote " << opt.csv << "\n";
    }
    if (!opt.svg.empty()) std::cout << "wrote " << opt.svg << "-hist.svg\n";
    return 0;
}

// ------------------------------------------------------------- exhaustive

struct ExhaustiveOpts {
    std::string function = "10";
    int n = 3;
    int m = 4;
    std::string csv;
    std::string svg;
    std::uint32_t p = 2;
    bool json = false;
};

int run_exhaustive(const ExhaustiveOpts& opt) {
    require_f2(opt.p);
    const auto& f = lookup_function(opt.function);
    auto groups = mwd::exhaustive_enumeration(f, opt.n, opt.m);

    std::ostringstream csv;
    mwd::write_groups_csv(csv, groups);
    if (!opt.csv.empty()) write_text_file(opt.csv, csv.str());
    if (!opt.svg.empty())
        write_text_file(opt.svg + "-scatter.svg", mwd::scatter_svg(groups));

    long long total = 0;
    for (const auto& g : groups) total += g.count;

    if (opt.json) {
        ordered_json doc;
        doc["p"] = opt.p;
        doc["function"] = f.id;
        doc["n"] = opt.n;
        doc["m"] = opt.m;
        ordered_json list = ordered_json::array();
        for (const auto& g : groups) {
            ordered_json entry;
            entry["d_num"] = numerator(g.d).convert_to<long long>();
            entry["d_den"] = denominator(g.d).convert_to<long long>();
            entry["num_minsets"] = g.num_minsets;
            entry["count"] = g.count;
            list.push_back(entry);
        }
        doc["groups"] = list;
        doc["total"] = total;
        emit(doc);
        return 0;
    }

    if (opt.csv.empty()) {
        std::cout << csv.str();
    } else {
        std::cout << groups.size() << " groups over " << total
                  << " input sets\n";
        std::cout << "wrote " << opt.csv << "\n";
    }
    if (!opt.svg.empty()) std::cout << "wrote " << opt.svg << "-scatter.svg\n";
    return 0;
}

void add_p_json(CLI::App* cmd, std::uint32_t& p, bool& json) {
    cmd->add_option("--p", p, "field characteristic (a prime)")
        ->default_val(2);
    cmd->add_flag("--json", json, "machine-readable output");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"minimal wiring diagrams of finite dynamical systems"};
    app.require_subcommand(1);

    MinsetsOpts minsets_opt;
    auto* minsets_cmd = app.add_subcommand(
        "minsets", "minimal wiring diagrams supported by a data set");
    minsets_cmd
        ->add_option("data_file", minsets_opt.data_file,
                     "lines of \"<point> <output>\", e.g. \"010 1\"")
        ->required();
    add_p_json(minsets_cmd, minsets_opt.p, minsets_opt.json);

    UniqueInputOpts unique_opt;
    auto* unique_cmd = app.add_subcommand(
        "unique-input",
        "decide whether an input set guarantees one minimal wiring diagram");
    unique_cmd
        ->add_option("points_file", unique_opt.points_file,
                     "one point per line, e.g. \"010\"")
        ->required();
    unique_cmd->add_option(
        "--check-witness", unique_opt.witness,
        "verify that this output assignment yields several minsets");
    add_p_json(unique_cmd, unique_opt.p, unique_opt.json);

    GroebnerOpts groebner_opt;
    auto* groebner_cmd = app.add_subcommand(
        "groebner", "reduced Groebner bases of the vanishing ideal I(V)");
    groebner_cmd
        ->add_option("points_file", groebner_opt.points_file,
                     "one point per line")
        ->required();
    auto* all_flag = groebner_cmd->add_flag(
        "--all", groebner_opt.all, "every attainable staircase and basis");
    auto* order_opt =
        groebner_cmd
            ->add_option("--order", groebner_opt.order,
                         "monomial order: lex, deglex, or degrevlex")
            ->excludes(all_flag);
    groebner_cmd
        ->add_option("--perm", groebner_opt.perm,
                     "variable significance, most significant first "
                     "(1-based, e.g. 3,1,2)")
        ->excludes(all_flag);
    groebner_cmd
        ->add_option("--weights", groebner_opt.weights,
                     "rational weights in natural variable order "
                     "(e.g. 1,1/2,0); lex tie-break")
        ->excludes(all_flag)
        ->excludes(order_opt);
    add_p_json(groebner_cmd, groebner_opt.p, groebner_opt.json);

    NfOpts nf_opt;
    auto* nf_cmd = app.add_subcommand(
        "nf", "normal form of a data set, if independent of the basis");
    nf_cmd->add_option("data_file", nf_opt.data_file,
                       "lines of \"<point> <output>\"")
        ->required();
    add_p_json(nf_cmd, nf_opt.p, nf_opt.json);

    ExperimentOpts exp_opt;
    auto* exp_cmd = app.add_subcommand(
        "experiment", "randomized trials of input-set sampling schemes");
    exp_cmd->add_option("--function", exp_opt.function,
                        "function id 1..10 or polynomial (e.g. x1x2)");
    exp_cmd
        ->add_option("--scheme", exp_opt.scheme,
                     "random, small-distance, or both")
        ->check(CLI::IsMember(
            {"random", "small-distance", "small_distance", "both"}));
    exp_cmd->add_option("--n", exp_opt.n, "ambient dimension");
    exp_cmd->add_option("--m", exp_opt.m, "points per input set");
    exp_cmd->add_option("--trials", exp_opt.trials, "trials per scheme");
    exp_cmd->add_option("--seed", exp_opt.seed, "RNG seed");
    exp_cmd->add_option("--csv", exp_opt.csv, "write trial records here");
    exp_cmd->add_option("--svg", exp_opt.svg,
                        "write <prefix>-hist.svg (minsets per scheme)");
    add_p_json(exp_cmd, exp_opt.p, exp_opt.json);

    ExhaustiveOpts exh_opt;
    auto* exh_cmd = app.add_subcommand(
        "exhaustive",
        "statistics of every m-point input set, grouped by (d, #minsets)");
    exh_cmd->add_option("--function", exh_opt.function,
                        "function id 1..10 or polynomial");
    exh_cmd->add_option("--n", exh_opt.n, "ambient dimension");
    exh_cmd->add_option("--m", exh_opt.m, "points per input set");
    exh_cmd->add_option("--csv", exh_opt.csv, "write grouped counts here");
    exh_cmd->add_option("--svg", exh_opt.svg,
                        "write <prefix>-scatter.svg (d against #minsets)");
    add_p_json(exh_cmd, exh_opt.p, exh_opt.json);

    try {
        app.parse(argc, argv);
        if (*minsets_cmd) return run_minsets(minsets_opt);
        if (*unique_cmd) return run_unique_input(unique_opt);
        if (*groebner_cmd) return run_groebner(groebner_opt);
        if (*nf_cmd) return run_nf(nf_opt);
        if (*exp_cmd) return run_experiment(exp_opt);
        if (*exh_cmd) return run_exhaustive(exh_opt);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const mwd::resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const mwd::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
