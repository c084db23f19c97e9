#include "monocrystal/verify.hpp"

#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace monocrystal {

std::string CheckResult::line() const
{
    std::ostringstream os;
    os << (pass ? "PASS " : "FAIL ") << name << " instances=" << instances;
    if (!detail.empty())
        os << " " << detail;
    return os.str();
}

Rational random_rational(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> mag(1, 9);
    std::uniform_int_distribution<int> coin(0, 1);
    int num = mag(rng) * (coin(rng) ? 1 : -1);
    Rational q(num, mag(rng));
    q.canonicalize();
    return q;
}

Torus random_torus(int r, std::mt19937_64& rng)
{
    std::vector<Rational> a;
    Rational product = 1;
    for (int k = 1; k <= r; ++k) {
        a.push_back(random_rational(rng));
        product *= a.back();
    }
    a.push_back(Rational(1) / product);
    return Torus(std::move(a));
}

Assignment random_point(const WordSpec& w, std::mt19937_64& rng)
{
    Assignment t;
    for (int k = 1; k <= w.length(); ++k)
        t.emplace(w.var_at(k), random_rational(rng));
    return t;
}

DemazureSpec demazure_spec_of(const MinorSpec& spec)
{
    const WordSpec& w = spec.word();
    DemazureSpec out;
    std::vector<int> letters = w.letters();
    out.word.assign(letters.begin(), letters.begin() + spec.k());
    out.sign = DemazureSign::minus;
    for (int s = spec.mprime(); s <= w.cycles() - 1; ++s)
        out.seed *= Monomial(VarId{s, spec.d()}, -1);
    return out;
}

std::optional<std::string> crystal_axiom_violation(const CrystalConfig& cfg, const CrystalGraph& g)
{
    const int r = cfg.rank();
    auto fail = [&](const Monomial& b, int i, const std::string& what) {
        return std::optional<std::string>(what + " at " + to_text(b) + " color " + std::to_string(i));
    };
    std::size_t f_arrows = 0;
    for (const Monomial& b : g.nodes) {
        CrystalNode nb = node_stats(cfg, b);
        for (int i = 1; i <= r; ++i) {
            if (nb.phi_at(i) < 0 || nb.eps_at(i) < 0)
                return fail(b, i, "negative phi/eps");
            if (nb.phi_at(i) - nb.eps_at(i) != nb.wt.pair(i))
                return fail(b, i, "phi - eps != wt(h_i)");
            const Weight alpha = Weight::simple_root(cfg, i);

            auto e = apply_e(cfg, b, i);
            if (e.has_value() != (nb.eps_at(i) > 0))
                return fail(b, i, "e_i defined iff eps_i > 0");
            if (e) {
                CrystalNode ne = node_stats(cfg, *e);
                if (ne.wt != nb.wt + alpha)
                    return fail(b, i, "wt(e_i b) != wt(b) + alpha_i");
                if (ne.eps_at(i) != nb.eps_at(i) - 1 || ne.phi_at(i) != nb.phi_at(i) + 1)
                    return fail(b, i, "eps/phi shift under e_i");
                if (apply_f(cfg, *e, i) != b)
                    return fail(b, i, "f_i e_i b != b");
                if (!g.index_of(*e))
                    return fail(b, i, "component not closed under e_i");
            }

            auto f = apply_f(cfg, b, i);
            if (f.has_value() != (nb.phi_at(i) > 0))
                return fail(b, i, "f_i defined iff phi_i > 0");
            if (f) {
                ++f_arrows;
                CrystalNode nf = node_stats(cfg, *f);
                if (nf.wt != nb.wt - alpha)
                    return fail(b, i, "wt(f_i b) != wt(b) - alpha_i");
                if (nf.eps_at(i) != nb.eps_at(i) + 1 || nf.phi_at(i) != nb.phi_at(i) - 1)
                    return fail(b, i, "eps/phi shift under f_i");
                if (apply_e(cfg, *f, i) != b)
                    return fail(b, i, "e_i f_i b != b");
                if (!g.index_of(*f))
                    return fail(b, i, "component not closed under f_i");
            }
        }
    }
    if (f_arrows != g.edges.size())
        return std::string("edge count differs from the number of f-arrows");
    for (const CrystalEdge& edge : g.edges) {
        const Monomial& x = g.nodes[edge.from];
        const Monomial& y = g.nodes[edge.to];
        if (apply_f(cfg, x, edge.color) != y || apply_e(cfg, y, edge.color) != x)
            return fail(x, edge.color, "edge does not match f_i / e_i");
    }
    return std::nullopt;
}

std::vector<MinorSpec> demazure_instances(int min_r, int max_r)
{
    std::vector<MinorSpec> out;
    for (int r = min_r; r <= max_r; ++r)
        for (const WordSpec& w : WordSpec::all(r))
            for (int k = 1; k <= w.length(); ++k)
                if (w.letter(k) == w.last())
                    out.emplace_back(w, k);
    return out;
}

namespace {

std::vector<MinorSpec> all_minors(int min_r, int max_r)
{
    std::vector<MinorSpec> out;
    for (int r = min_r; r <= max_r; ++r)
        for (const WordSpec& w : WordSpec::all(r))
            for (int k = 1; k <= w.length(); ++k)
                out.emplace_back(w, k);
    return out;
}

std::string describe(const WordSpec& w)
{
    std::ostringstream os;
    os << "r=" << w.rank() << " word=";
    auto letters = w.letters();
    for (std::size_t a = 0; a < letters.size(); ++a)
        os << (a ? "," : "") << letters[a];
    return os.str();
}

std::string describe(const MinorSpec& spec)
{
    return describe(spec.word()) + " k=" + std::to_string(spec.k());
}

// Pascal's rule, independent of any closed formula.
long binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    std::vector<long> row(static_cast<std::size_t>(n + 1), 0);
    row[0] = 1;
    for (int a = 1; a <= n; ++a)
        for (int b = a; b >= 1; --b)
            row[static_cast<std::size_t>(b)] += row[static_cast<std::size_t>(b - 1)];
    return row[static_cast<std::size_t>(k)];
}

bool unit_coefficients(const LaurentPoly& p)
{
    for (const auto& [mono, c] : p.terms())
        if (c != 1)
            return false;
    return true;
}

CheckResult run(const std::string& name, const std::function<void(CheckResult&)>& body)
{
    CheckResult res;
    res.name = name;
    try {
        body(res);
    } catch (const std::exception& ex) {
        res.pass = false;
        res.detail = std::string("exception: ") + ex.what();
    }
    return res;
}

} // namespace

CheckResult verify_demazure_minors(int min_r, int max_r)
{
    return run("thm5-5", [&](CheckResult& res) {
        std::map<int, std::size_t> per_rank;
        for (const MinorSpec& spec : demazure_instances(min_r, max_r)) {
            const int r = spec.word().rank();
            CrystalConfig cfg(r);
            LaurentPoly minor = delta_L(spec);
            LaurentPoly dem = demazure_polynomial(cfg, demazure_spec_of(spec));
            PathSpec ps = PathSpec::from_minor(spec);
            LaurentPoly paths = path_sum(ps, r);
            LaurentPoly closed = closed_form_sum(ps, r);
            ++res.instances;
            ++per_rank[r];
            if (!(dem == minor && minor == paths && paths == closed)) {
                res.pass = false;
                res.detail = "mismatch at " + describe(spec);
                return;
            }
        }
        for (const auto& [r, n] : per_rank)
            res.detail += (res.detail.empty() ? "" : " ") + ("r" + std::to_string(r) + "=" + std::to_string(n));
    });
}

CheckResult verify_path_sums(int max_r)
{
    return run("prop6-1", [&](CheckResult& res) {
        for (const MinorSpec& spec : all_minors(1, max_r)) {
            const int r = spec.word().rank();
            PathSpec ps = PathSpec::from_minor(spec);
            LaurentPoly minor = delta_L(spec);
            ++res.instances;
            if (minor != path_sum(ps, r) || !unit_coefficients(minor)
                || minor.term_count() != enumerate(ps).size()) {
                res.pass = false;
                res.detail = "mismatch at " + describe(spec);
                return;
            }
        }
    });
}

CheckResult verify_closed_forms(int max_r)
{
    return run("prop6-10", [&](CheckResult& res) {
        std::set<std::tuple<int, int, int>> seen;
        for (const MinorSpec& spec : all_minors(1, max_r)) {
            const int r = spec.word().rank();
            PathSpec ps = PathSpec::from_minor(spec);
            ++res.instances;
            if (closed_form_sum(ps, r) != path_sum(ps, r)) {
                res.pass = false;
                res.detail = "closed form differs at " + describe(spec);
                return;
            }
            if (!seen.insert({ps.d, ps.m, ps.mprime}).second)
                continue;
            std::set<std::vector<std::vector<int>>> ks;
            std::set<Monomial, CanonicalLess> labels;
            auto paths = enumerate(ps);
            for (const Path& p : paths) {
                PathStats st = stats(ps, p);
                for (std::size_t j = 0; j < st.q.size(); ++j)
                    for (std::size_t i = 0; i < st.q[j].size(); ++i)
                        if (st.q[j][i] != st.k[j][i] + static_cast<int>(j) - static_cast<int>(i) - 1) {
                            res.pass = false;
                            res.detail = "q != k + j - i - 1";
                            return;
                        }
                if (rebuild(ps, st.k) != p) {
                    res.pass = false;
                    res.detail = "rebuild(stats(p)) != p";
                    return;
                }
                ks.insert(st.k);
                labels.insert(label(ps, p, r));
            }
            auto admissible = admissible_k_arrays(ps);
            if (ks != std::set<std::vector<std::vector<int>>>(admissible.begin(), admissible.end())
                || labels.size() != paths.size()) {
                res.pass = false;
                res.detail = "path / K-array bijection fails for X_" + std::to_string(ps.d) + "("
                             + std::to_string(ps.m) + "," + std::to_string(ps.mprime) + ")";
                return;
            }
        }
    });
}

CheckResult verify_d1_closed_form(int max_r)
{
    return run("thm5-6", [&](CheckResult& res) {
        for (const MinorSpec& spec : all_minors(1, max_r)) {
            if (spec.d() != 1)
                continue;
            const int r = spec.word().rank();
            PathSpec ps = PathSpec::from_minor(spec);
            LaurentPoly closed = d1_closed_form(ps.m, ps.mprime, r);
            ++res.instances;
            if (closed != delta_L(spec)
                || static_cast<long>(closed.term_count()) != binomial(ps.m, ps.mprime)) {
                res.pass = false;
                res.detail = "mismatch at " + describe(spec);
                return;
            }
        }
    });
}

CheckResult verify_torus_minors(int max_r, int samples, std::uint64_t seed)
{
    return run("prop5-1", [&](CheckResult& res) {
        std::mt19937_64 rng(seed);
        for (const MinorSpec& spec : all_minors(1, max_r)) {
            const WordSpec& w = spec.word();
            LaurentPoly minor = delta_L(spec);
            for (int n = 0; n < samples; ++n) {
                Torus a = random_torus(w.rank(), rng);
                Assignment t = random_point(w, rng);
                Rational factor = 1;
                for (int j = spec.mprime() + 1; j <= spec.mprime() + spec.d(); ++j)
                    factor *= a.at(j);
                ++res.instances;
                if (delta_G(spec, a, t) != factor * poly_eval(minor, t)) {
                    res.pass = false;
                    res.detail = "mismatch at " + describe(spec);
                    return;
                }
            }
        }
    });
}

CheckResult verify_coordinate_change(int max_r, int samples, std::uint64_t seed)
{
    return run("prop2-4", [&](CheckResult& res) {
        std::mt19937_64 rng(seed);
        for (int r = 1; r <= max_r; ++r)
            for (const WordSpec& w : WordSpec::all(r))
                for (int n = 0; n < samples; ++n) {
                    Torus a = random_torus(r, rng);
                    Assignment t = random_point(w, rng);
                    auto [a2, tau] = phi_map(w, a, t);
                    ++res.instances;
                    if (xbarG(w, a, t) != xG(w, a2, tau)) {
                        res.pass = false;
                        res.detail = "mismatch at " + describe(w);
                        return;
                    }
                }
    });
}

CheckResult verify_truncation(int max_r)
{
    return run("truncation", [&](CheckResult& res) {
        for (int r = 1; r <= max_r; ++r)
            for (const WordSpec& w : WordSpec::all(r)) {
                auto ext = w.extended();
                if (!ext)
                    continue;
                const int next_letter = ext->letter(ext->length());
                for (int k = 1; k <= w.length(); ++k) {
                    if (w.letter(k) == next_letter)
                        continue;
                    ++res.instances;
                    if (!delta_L_truncation_check(w, k)) {
                        res.pass = false;
                        res.detail = "minor changed at " + describe(MinorSpec(w, k));
                        return;
                    }
                }
            }
    });
}

CheckResult verify_axioms(int max_r)
{
    return run("axioms", [&](CheckResult& res) {
        auto check = [&](const CrystalConfig& cfg, const Monomial& seed) {
            CrystalGraph g = component(cfg, seed);
            ++res.instances;
            if (auto bad = crystal_axiom_violation(cfg, g)) {
                res.pass = false;
                res.detail = "r=" + std::to_string(cfg.rank()) + " seed " + to_text(seed) + ": " + *bad;
                return false;
            }
            return true;
        };
        if (max_r >= 4 && !check(CrystalConfig(4), Monomial(VarId{-1, 3})))
            return;
        // fundamental weights: Y[0,d] generates B(Lambda_d)
        for (int r = 1; r <= max_r; ++r) {
            CrystalConfig cfg(r);
            for (int d = 1; d <= r; ++d) {
                Monomial seed(VarId{0, d});
                if (!check(cfg, seed))
                    return;
                auto size = static_cast<long>(component(cfg, seed).nodes.size());
                if (size != binomial(r + 1, d)) {
                    res.pass = false;
                    res.detail = "|B(Lambda_" + std::to_string(d) + ")| = " + std::to_string(size) + " at r="
                                 + std::to_string(r);
                    return;
                }
            }
        }
        std::map<int, std::set<Monomial, CanonicalLess>> seeds;
        for (const MinorSpec& spec : demazure_instances(2, max_r))
            seeds[spec.word().rank()].insert(demazure_spec_of(spec).seed);
        for (const auto& [r, group] : seeds)
            for (const Monomial& seed : group)
                if (!check(CrystalConfig(r), seed))
                    return;
    });
}

namespace {

IntMatrix random_sign_skew(std::mt19937_64& rng, int n)
{
    std::uniform_int_distribution<int> mag(0, 3);
    std::uniform_int_distribution<int> coin(0, 1);
    IntMatrix a(static_cast<std::size_t>(n), std::vector<Integer>(static_cast<std::size_t>(n), 0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            long v = mag(rng);
            if (v == 0)
                continue;
            long w = 1 + mag(rng) % 3;
            long sign = coin(rng) ? 1 : -1;
            a[i][j] = sign * v;
            a[j][i] = -sign * w;
        }
    return a;
}

// D S with S skew-symmetric and D a positive integer diagonal.
IntMatrix random_skew_symmetrizable(std::mt19937_64& rng, int n)
{
    std::uniform_int_distribution<int> entry(-2, 2);
    std::uniform_int_distribution<int> scale(1, 3);
    IntMatrix s(static_cast<std::size_t>(n), std::vector<Integer>(static_cast<std::size_t>(n), 0));
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            s[i][j] = entry(rng);
            s[j][i] = -s[i][j];
        }
    for (auto& row : s) {
        long d = scale(rng);
        for (Integer& x : row)
            x *= d;
    }
    return s;
}

bool stays_sign_skew(IntMatrix a, std::mt19937_64& rng, int steps)
{
    if (a.empty())
        return true;
    std::uniform_int_distribution<int> dir(1, static_cast<int>(a.size()));
    for (int s = 0; s < steps; ++s) {
        a = mutate(a, dir(rng));
        if (!is_sign_skew_symmetric(a))
            return false;
    }
    return true;
}

} // namespace

CheckResult verify_cluster(int max_r, int trials, std::uint64_t seed)
{
    return run("cluster", [&](CheckResult& res) {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> size(1, 12);
        for (int n = 0; n < trials; ++n) {
            IntMatrix a = random_sign_skew(rng, size(rng));
            for (int k = 1; k <= static_cast<int>(a.size()); ++k) {
                ++res.instances;
                if (mutate(mutate(a, k), k) != a) {
                    res.pass = false;
                    res.detail = "mutation is not an involution";
                    return;
                }
            }
        }
        for (int n = 0; n < trials; ++n) {
            ++res.instances;
            if (!stays_sign_skew(random_skew_symmetrizable(rng, size(rng)), rng, 20)) {
                res.pass = false;
                res.detail = "sign-skew-symmetry lost along a random mutation sequence";
                return;
            }
        }
        for (int r = 1; r <= max_r; ++r)
            for (const WordSpec& w : WordSpec::all(r)) {
                IntMatrix b = seed_matrix(w).principal();
                ++res.instances;
                auto d = skew_symmetrizer(b);
                if (!d) {
                    res.pass = false;
                    res.detail = "no skew-symmetrizer for " + describe(w);
                    return;
                }
                for (const Rational& x : *d)
                    if (x <= 0) {
                        res.pass = false;
                        res.detail = "non-positive symmetrizer for " + describe(w);
                        return;
                    }
                if (!stays_sign_skew(b, rng, 20)) {
                    res.pass = false;
                    res.detail = "seed matrix loses sign-skew-symmetry for " + describe(w);
                    return;
                }
            }
    });
}

std::vector<std::string> check_names()
{
    return {"thm5-5", "prop6-1", "prop6-10", "thm5-6", "prop5-1", "prop2-4", "truncation", "axioms", "cluster"};
}

std::optional<CheckResult> run_check(const std::string& name, int max_r)
{
    if (name == "thm5-5")
        return verify_demazure_minors(2, max_r);
    if (name == "prop6-1")
        return verify_path_sums(max_r);
    if (name == "prop6-10")
        return verify_closed_forms(max_r);
    if (name == "thm5-6")
        return verify_d1_closed_form(max_r);
    if (name == "prop5-1")
        return verify_torus_minors(max_r, 50);
    if (name == "prop2-4")
        return verify_coordinate_change(max_r, 20);
    if (name == "truncation")
        return verify_truncation(max_r);
    if (name == "axioms")
        return verify_axioms(max_r);
    if (name == "cluster")
        return verify_cluster(max_r, 1000);
    return std::nullopt;
}

} // namespace monocrystal
