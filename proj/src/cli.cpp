#include "monocrystal/cli.hpp"

#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "monocrystal/bruhat.hpp"
#include "monocrystal/cluster.hpp"
#include "monocrystal/crystal.hpp"
#include "monocrystal/laurent.hpp"
#include "monocrystal/paths.hpp"
#include "monocrystal/verify.hpp"

namespace monocrystal::cli {

namespace {

// minors are memoized on 32-bit column masks
constexpr int kMaxRank = 30;

CLI::Validator positive()
{
    return CLI::Range(1, std::numeric_limits<int>::max());
}

struct WordOptions {
    int r = 0;
    std::vector<int> word;
    int cycles = 0;
    int last = 0;

    void attach(CLI::App* app)
    {
        app->add_option("--r", r, "rank r of SL_{r+1}")->required()->check(CLI::Range(1, kMaxRank));
        app->add_option("--word", word, "explicit word, comma separated")->delimiter(',');
        app->add_option("--cycles", cycles, "cycle count m (with --last)");
        app->add_option("--last", last, "last letter i_n (with --cycles)");
    }

    WordSpec spec() const
    {
        if (!word.empty())
            return WordSpec::from_word(r, word);
        if (cycles > 0 || last > 0)
            return WordSpec(r, cycles, last);
        return WordSpec(r, r, 1);
    }
};

std::string render(const CrystalConfig& cfg, const LaurentPoly& p, const std::string& format, std::ostream& err)
{
    if (format == "y")
        return to_text(p);
    try {
        return tau_render(cfg, p);
    } catch (const NotTauRenderable& ex) {
        err << "note: " << ex.what() << "; falling back to Y notation\n";
        return to_text(p);
    }
}

std::vector<Rational> parse_rationals(const std::vector<std::string>& items, const std::string& what)
{
    std::vector<Rational> out;
    for (const auto& s : items) {
        Rational q;
        if (q.set_str(s, 10) != 0)
            throw ParseError("bad rational '" + s + "' in " + what);
        q.canonicalize();
        out.push_back(q);
    }
    return out;
}

std::string word_text(const WordSpec& w)
{
    std::string out;
    for (int x : w.letters())
        out += (out.empty() ? "" : ",") + std::to_string(x);
    return out;
}

void print_matrix(std::ostream& out, const SeedMatrix& b)
{
    out << "rows\\cols";
    for (int l : b.cols)
        out << '\t' << l;
    out << '\n';
    for (std::size_t a = 0; a < b.rows.size(); ++a) {
        out << b.rows[a];
        for (const Integer& x : b.entries[a])
            out << '\t' << x;
        out << '\n';
    }
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Monomial crystals, Demazure polynomials and generalized minors on L^{u,e}", "monocrystal"};
    app.require_subcommand(1);
    std::function<int()> action;

    // minor
    WordOptions minor_word;
    int minor_k = 0;
    std::string minor_format = "tau";
    std::vector<std::string> minor_torus;
    std::vector<std::string> minor_point;
    auto* minor = app.add_subcommand("minor", "generalized minor Delta^L(k;i), or Delta^G with --torus/--point");
    minor_word.attach(minor);
    minor->add_option("--k", minor_k, "word position")->required();
    minor->add_option("--format", minor_format, "tau | y | json")->check(CLI::IsMember({"tau", "y", "json"}));
    minor->add_option("--torus", minor_torus, "diagonal a_1..a_{r+1} (product 1)")->delimiter(',');
    minor->add_option("--point", minor_point, "t_1..t_n in word order")->delimiter(',');
    minor->callback([&] {
        action = [&] {
            MinorSpec spec(minor_word.spec(), minor_k);
            CrystalConfig cfg(spec.word().rank());
            LaurentPoly p = delta_L(spec);
            if (!minor_point.empty() || !minor_torus.empty()) {
                const WordSpec& w = spec.word();
                auto values = parse_rationals(minor_point, "--point");
                if (values.size() != static_cast<std::size_t>(w.length()))
                    throw ParseError("--point needs exactly n = " + std::to_string(w.length()) + " values");
                Assignment t;
                for (int k = 1; k <= w.length(); ++k)
                    t.emplace(w.var_at(k), values[static_cast<std::size_t>(k - 1)]);
                Torus a = minor_torus.empty() ? Torus::identity(w.rank())
                                              : Torus(parse_rationals(minor_torus, "--torus"));
                Rational g = delta_G(spec, a, t);
                if (minor_format == "json")
                    out << nlohmann::json{{"delta_G", g.get_str()}, {"delta_L", poly_eval(p, t).get_str()}}.dump()
                        << '\n';
                else
                    out << g << '\n';
                return kExitOk;
            }
            if (minor_format == "json") {
                nlohmann::json j{{"r", spec.word().rank()},
                                 {"word", spec.word().letters()},
                                 {"k", spec.k()},
                                 {"d", spec.d()},
                                 {"mprime", spec.mprime()},
                                 {"rows", minor_rows(spec)},
                                 {"poly", to_json(p)},
                                 {"tau", render(cfg, p, "tau", err)}};
                out << j.dump() << '\n';
            } else {
                out << render(cfg, p, minor_format, err) << '\n';
            }
            return kExitOk;
        };
    });

    // crystal
    auto* crystal = app.add_subcommand("crystal", "monomial crystals");
    crystal->require_subcommand(1);
    int crystal_r = 0;
    std::string crystal_seed;
    std::size_t crystal_cap = kDefaultCap;
    std::string crystal_format = "tau";
    std::vector<int> crystal_word;
    std::string crystal_sign = "minus";
    auto crystal_common = [&](CLI::App* sub, bool with_word) {
        sub->add_option("--r", crystal_r, "rank")->required()->check(CLI::Range(1, kMaxRank));
        sub->add_option("--seed", crystal_seed, "seed monomial, e.g. \"Y[-1,3]\"")->required();
        sub->add_option("--cap", crystal_cap, "node limit")->check(positive());
        if (with_word) {
            sub->add_option("--word", crystal_word, "reduced word, comma separated")->delimiter(',');
            sub->add_option("--sign", crystal_sign, "minus (e from a lowest seed) | plus (f from a highest seed)")
                ->check(CLI::IsMember({"minus", "plus"}));
        }
    };
    auto demazure_spec = [&] {
        CrystalConfig cfg(crystal_r);
        DemazureSpec spec{crystal_word, crystal_sign == "plus" ? DemazureSign::plus : DemazureSign::minus,
                          parse_monomial(crystal_seed)};
        validate(cfg, spec);
        return std::pair{cfg, spec};
    };

    auto* comp = crystal->add_subcommand("component", "connected component of the seed");
    crystal_common(comp, false);
    comp->add_option("--format", crystal_format, "tau | y | json | dot")
        ->check(CLI::IsMember({"tau", "y", "json", "dot"}));
    comp->callback([&] {
        action = [&] {
            CrystalConfig cfg(crystal_r);
            CrystalGraph g = component(cfg, parse_monomial(crystal_seed), crystal_cap);
            LabelStyle style = crystal_format == "y" ? LabelStyle::y : LabelStyle::tau;
            if (crystal_format == "json") {
                out << to_json(g).dump() << '\n';
            } else if (crystal_format == "dot") {
                out << to_dot(cfg, g, LabelStyle::tau);
            } else {
                out << "nodes " << g.nodes.size() << " edges " << g.edges.size() << '\n';
                for (std::size_t k = 0; k < g.nodes.size(); ++k)
                    out << "n" << k << " " << node_label(cfg, g.nodes[k], style) << '\n';
                for (const auto& e : g.edges)
                    out << "n" << e.from << " -" << e.color << "-> n" << e.to << '\n';
            }
            return kExitOk;
        };
    });

    auto* dem = crystal->add_subcommand("demazure", "Demazure crystal along a reduced word");
    crystal_common(dem, true);
    dem->add_option("--format", crystal_format, "tau | y | json")->check(CLI::IsMember({"tau", "y", "json"}));
    dem->callback([&] {
        action = [&] {
            auto [cfg, spec] = demazure_spec();
            auto set = demazure(cfg, spec, crystal_cap);
            if (crystal_format == "json") {
                auto j = nlohmann::json::array();
                for (const auto& m : set)
                    j.push_back(to_json(m));
                out << j.dump() << '\n';
            } else {
                for (const auto& m : set)
                    out << node_label(cfg, m, crystal_format == "y" ? LabelStyle::y : LabelStyle::tau) << '\n';
            }
            return kExitOk;
        };
    });

    auto* poly = crystal->add_subcommand("polynomial", "Demazure polynomial with unit coefficients");
    crystal_common(poly, true);
    poly->add_option("--format", crystal_format, "tau | y | json")->check(CLI::IsMember({"tau", "y", "json"}));
    poly->callback([&] {
        action = [&] {
            auto [cfg, spec] = demazure_spec();
            LaurentPoly p = demazure_polynomial(cfg, spec, crystal_cap);
            if (crystal_format == "json")
                out << to_json(p).dump() << '\n';
            else
                out << render(cfg, p, crystal_format, err) << '\n';
            return kExitOk;
        };
    });

    // paths
    auto* paths = app.add_subcommand("paths", "lattice paths X_d(m,m')");
    paths->require_subcommand(1);
    int paths_r = 0;
    PathSpec pspec;
    std::string paths_format = "tau";
    auto paths_common = [&](CLI::App* sub) {
        sub->add_option("--r", paths_r, "rank used for labels")->required()->check(CLI::Range(1, kMaxRank));
        sub->add_option("--d", pspec.d, "minor size d")->required();
        sub->add_option("--m", pspec.m, "cycle count m")->required();
        sub->add_option("--mprime", pspec.mprime, "cycle m' of position k")->required();
    };
    auto* penum = paths->add_subcommand("enum", "list paths with labels");
    paths_common(penum);
    penum->add_option("--format", paths_format, "tau | y | json | dot")
        ->check(CLI::IsMember({"tau", "y", "json", "dot"}));
    penum->callback([&] {
        action = [&] {
            CrystalConfig cfg(paths_r);
            auto list = enumerate(pspec);
            if (paths_format == "json") {
                out << to_json(cfg, pspec, list).dump() << '\n';
            } else if (paths_format == "dot") {
                out << to_dot(cfg, pspec, list);
            } else {
                LabelStyle style = paths_format == "y" ? LabelStyle::y : LabelStyle::tau;
                for (const Path& p : list) {
                    for (std::size_t s = 0; s < p.rows.size(); ++s) {
                        out << (s ? " -> (" : "(") << pspec.m - static_cast<int>(s);
                        for (std::size_t i = 0; i < p.rows[s].size(); ++i)
                            out << (i ? "," : ";") << p.rows[s][i];
                        out << ")";
                    }
                    out << "  " << node_label(cfg, label(pspec, p, paths_r), style) << '\n';
                }
            }
            return kExitOk;
        };
    });
    auto* psum = paths->add_subcommand("sum", "sum of path labels");
    paths_common(psum);
    psum->add_option("--format", paths_format, "tau | y | json")->check(CLI::IsMember({"tau", "y", "json"}));
    bool closed_d1 = false;
    auto* pclosed = paths->add_subcommand("closed-form", "sum over admissible K-arrays");
    paths_common(pclosed);
    pclosed->add_option("--format", paths_format, "tau | y | json")->check(CLI::IsMember({"tau", "y", "json"}));
    pclosed->add_flag("--d1", closed_d1, "use the d = 1 double-product formula");
    auto paths_poly = [&](const std::function<LaurentPoly()>& compute) {
        action = [&, compute] {
            CrystalConfig cfg(paths_r);
            LaurentPoly p = compute();
            if (paths_format == "json")
                out << to_json(p).dump() << '\n';
            else
                out << render(cfg, p, paths_format, err) << '\n';
            return kExitOk;
        };
    };
    psum->callback([&] { paths_poly([&] { return path_sum(pspec, paths_r); }); });
    pclosed->callback([&] {
        paths_poly([&] {
            if (!closed_d1)
                return closed_form_sum(pspec, paths_r);
            if (pspec.d != 1)
                throw InvalidPathSpec("--d1 needs d = 1");
            return d1_closed_form(pspec.m, pspec.mprime, paths_r);
        });
    });

    // seed
    auto* seed = app.add_subcommand("seed", "seed matrix B(i) and mutation");
    seed->require_subcommand(1);
    WordOptions seed_word;
    std::string seed_format = "text";
    std::vector<int> seed_dirs;
    auto* bmatrix = seed->add_subcommand("bmatrix", "B(i) with row and column labels");
    seed_word.attach(bmatrix);
    bmatrix->add_option("--format", seed_format, "text | json")->check(CLI::IsMember({"text", "json"}));
    bmatrix->callback([&] {
        action = [&] {
            SeedMatrix b = seed_matrix(seed_word.spec());
            if (seed_format == "json") {
                out << to_json(b).dump() << '\n';
            } else {
                print_matrix(out, b);
            }
            return kExitOk;
        };
    });
    auto* smut = seed->add_subcommand("mutate", "mutate B(i) along column labels, left to right");
    seed_word.attach(smut);
    smut->add_option("--k", seed_dirs, "column labels, comma separated")->required()->delimiter(',');
    smut->add_option("--format", seed_format, "text | json")->check(CLI::IsMember({"text", "json"}));
    smut->callback([&] {
        action = [&] {
            SeedMatrix b = seed_matrix(seed_word.spec());
            ExchangeSeed xs = exchange_seed(b);
            auto relations = nlohmann::json::array();
            std::vector<std::string> lines;
            for (int label : seed_dirs) {
                auto pos = std::find(b.cols.begin(), b.cols.end(), label);
                if (pos == b.cols.end())
                    throw IndexOutOfRange("label " + std::to_string(label) + " is not in e(i)");
                auto [rel, next] = exchange(xs, static_cast<int>(pos - b.cols.begin()) + 1);
                relations.push_back(to_json(rel));
                lines.push_back(to_text(rel));
                xs = next;
                b = mutate(b, label);
            }
            if (seed_format == "json") {
                out << nlohmann::json{{"matrix", to_json(b)}, {"exchanges", relations}}.dump() << '\n';
            } else {
                for (const auto& line : lines)
                    out << line << '\n';
                print_matrix(out, b);
            }
            return kExitOk;
        };
    });

    // phi
    auto* phi = app.add_subcommand("phi", "the map (a,t) -> (a(t), tau(t))");
    phi->require_subcommand(1);
    WordOptions phi_word;
    int phi_samples = 20;
    std::uint64_t phi_seed = kDefaultSeed;
    auto* pcheck = phi->add_subcommand("check", "a x^L(t) = x^G(phi(a,t)) at random rational points");
    phi_word.attach(pcheck);
    pcheck->add_option("--samples", phi_samples, "number of random points")->check(positive());
    pcheck->add_option("--seed", phi_seed, "random seed");
    pcheck->callback([&] {
        action = [&] {
            WordSpec w = phi_word.spec();
            std::mt19937_64 rng(phi_seed);
            for (int n = 0; n < phi_samples; ++n) {
                Torus a = random_torus(w.rank(), rng);
                Assignment t = random_point(w, rng);
                auto [a2, tau] = phi_map(w, a, t);
                if (xbarG(w, a, t) != xG(w, a2, tau)) {
                    out << "FAIL phi r=" << w.rank() << " word=" << word_text(w) << " sample=" << n << '\n';
                    return kExitVerificationFailed;
                }
            }
            out << "PASS phi r=" << w.rank() << " word=" << word_text(w) << " samples=" << phi_samples << '\n';
            return kExitOk;
        };
    });

    // verify
    auto* ver = app.add_subcommand("verify", "named identity sweeps");
    std::string check_name;
    int max_r = 4;
    std::vector<std::string> names = check_names();
    std::vector<std::string> allowed = names;
    allowed.push_back("all");
    ver->add_option("name", check_name, "check name or all")->required()->check(CLI::IsMember(allowed));
    ver->add_option("--max-r", max_r, "largest rank")->check(CLI::Range(1, kMaxRank));
    ver->callback([&] {
        action = [&] {
            std::vector<std::string> todo = check_name == "all" ? names : std::vector<std::string>{check_name};
            bool ok = true;
            for (const auto& name : todo) {
                CheckResult res = *run_check(name, max_r);
                out << res.line() << '\n';
                ok = ok && res.pass;
            }
            return ok ? kExitOk : kExitVerificationFailed;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }
    if (!action) {
        err << "no command\n";
        return kExitUsage;
    }
    try {
        return action();
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    std::vector<const char*> argv{"monocrystal"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace monocrystal::cli
