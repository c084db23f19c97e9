#include "monocrystal/crystal.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <unordered_set>

namespace monocrystal {

CrystalConfig::CrystalConfig(int rank) : rank_(rank)
{
    if (rank < 1)
        throw ColorOutOfRange("rank must be >= 1, got " + std::to_string(rank));
}

CrystalConfig CrystalConfig::with_signs(int rank, const std::vector<std::vector<int>>& p)
{
    CrystalConfig cfg(rank);
    auto n = static_cast<std::size_t>(rank);
    if (p.size() < n + 1)
        throw UnsupportedSignSet("sign matrix must be indexed 1..r");
    for (int j = 1; j <= rank; ++j) {
        const auto& row = p[static_cast<std::size_t>(j)];
        if (row.size() < n + 1)
            throw UnsupportedSignSet("sign matrix must be indexed 1..r");
        for (int i = 1; i <= rank; ++i)
            if (i != j && row[static_cast<std::size_t>(i)] != cfg.p(j, i))
                throw UnsupportedSignSet("only p_{j,i} = 1 (j<i), 0 (j>i) is supported");
    }
    return cfg;
}

int CrystalConfig::cartan(int i, int j) const
{
    if (i == j)
        return 2;
    return std::abs(i - j) == 1 ? -1 : 0;
}

void CrystalConfig::check_color(int i) const
{
    if (i < 1 || i > rank_)
        throw ColorOutOfRange("color " + std::to_string(i) + " outside [1," + std::to_string(rank_) + "]");
}

Weight Weight::fundamental(int rank, int i)
{
    Weight w = zero(rank);
    w.coeffs.at(static_cast<std::size_t>(i - 1)) = 1;
    return w;
}

Weight Weight::simple_root(const CrystalConfig& cfg, int i)
{
    cfg.check_color(i);
    Weight w = zero(cfg.rank());
    for (int j = 1; j <= cfg.rank(); ++j)
        w.coeffs[static_cast<std::size_t>(j - 1)] = cfg.cartan(j, i);
    return w;
}

Weight& Weight::operator+=(const Weight& o)
{
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        coeffs[k] += o.coeffs.at(k);
    return *this;
}

Weight& Weight::operator-=(const Weight& o)
{
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        coeffs[k] -= o.coeffs.at(k);
    return *this;
}

Weight operator*(int k, Weight a)
{
    for (auto& c : a.coeffs)
        c *= k;
    return a;
}

Monomial a_monomial(const CrystalConfig& cfg, int s, int i)
{
    cfg.check_color(i);
    std::vector<Monomial::Factor> f{{VarId{s, i}, 1}, {VarId{s + 1, i}, 1}};
    // Y_{s + p_{j,i}, j}^{a_{j,i}} for the neighbours j = i +- 1
    for (int j : {i - 1, i + 1})
        if (j >= 1 && j <= cfg.rank())
            f.push_back({VarId{s + cfg.p(j, i), j}, cfg.cartan(j, i)});
    return Monomial::from_factors(std::move(f));
}

namespace {

struct ColorScan {
    int phi = 0;
    int total = 0;
    std::optional<int> n_f;
    std::optional<int> n_e;
};

// Partial sums of the color-i exponents in increasing s. Between support
// points the partial sum is constant, so the extremal n are read off the
// support positions.
ColorScan scan_color(const Monomial& m, int i)
{
    std::vector<std::pair<int, int>> column;  // (s, exponent)
    for (const auto& [v, e] : m.factors())
        if (v.i == i)
            column.emplace_back(v.s, e);

    ColorScan out;
    std::vector<int> partial;
    partial.reserve(column.size());
    int sum = 0;
    for (const auto& c : column) {
        sum += c.second;
        partial.push_back(sum);
        out.phi = std::max(out.phi, sum);
    }
    out.total = sum;

    if (out.phi > 0) {
        for (std::size_t k = 0; k < column.size(); ++k)
            if (partial[k] == out.phi) {
                out.n_f = column[k].first;
                break;
            }
    }

    // last block attaining phi; k = -1 stands for the region before the support
    long last = -1;
    bool found = out.phi == 0;
    for (std::size_t k = 0; k < column.size(); ++k)
        if (partial[k] == out.phi) {
            last = static_cast<long>(k);
            found = true;
        }
    if (found && static_cast<std::size_t>(last + 1) < column.size())
        out.n_e = column[static_cast<std::size_t>(last + 1)].first - 1;
    return out;
}

} // namespace

Weight weight_of(const CrystalConfig& cfg, const Monomial& m)
{
    Weight w = Weight::zero(cfg.rank());
    for (const auto& [v, e] : m.factors()) {
        cfg.check_color(v.i);
        w.coeffs[static_cast<std::size_t>(v.i - 1)] += e;
    }
    return w;
}

CrystalNode node_stats(const CrystalConfig& cfg, const Monomial& m)
{
    CrystalNode node{m, weight_of(cfg, m), {}, {}};
    for (int i = 1; i <= cfg.rank(); ++i) {
        ColorScan sc = scan_color(m, i);
        node.phi.push_back(sc.phi);
        node.eps.push_back(sc.phi - sc.total);
    }
    return node;
}

std::optional<Monomial> apply_e(const CrystalConfig& cfg, const Monomial& m, int i)
{
    cfg.check_color(i);
    ColorScan sc = scan_color(m, i);
    if (sc.phi - sc.total <= 0)
        return std::nullopt;
    return m * a_monomial(cfg, *sc.n_e, i);
}

std::optional<Monomial> apply_f(const CrystalConfig& cfg, const Monomial& m, int i)
{
    cfg.check_color(i);
    ColorScan sc = scan_color(m, i);
    if (sc.phi <= 0)
        return std::nullopt;
    return m / a_monomial(cfg, *sc.n_f, i);
}

std::optional<Monomial> apply_e_pow(const CrystalConfig& cfg, Monomial m, int i, int k)
{
    for (int step = 0; step < k; ++step) {
        auto next = apply_e(cfg, m, i);
        if (!next)
            return std::nullopt;
        m = std::move(*next);
    }
    return m;
}

std::optional<std::size_t> CrystalGraph::index_of(const Monomial& m) const
{
    auto it = std::find(nodes.begin(), nodes.end(), m);
    if (it == nodes.end())
        return std::nullopt;
    return static_cast<std::size_t>(it - nodes.begin());
}

CrystalGraph component(const CrystalConfig& cfg, const Monomial& seed, std::size_t cap)
{
    if (cap == 0)
        throw CapExceeded("cap must be positive");
    for (const auto& f : seed.factors())
        cfg.check_color(f.first.i);

    CrystalGraph g;
    std::unordered_map<Monomial, std::size_t> index;
    std::set<std::tuple<std::size_t, int, std::size_t>> seen_edges;
    std::deque<std::size_t> queue;

    auto visit = [&](const Monomial& m) {
        auto [it, inserted] = index.try_emplace(m, g.nodes.size());
        if (inserted) {
            if (g.nodes.size() >= cap)
                throw CapExceeded("component exceeds cap of " + std::to_string(cap) + " nodes");
            g.nodes.push_back(m);
            queue.push_back(it->second);
        }
        return it->second;
    };
    auto add_edge = [&](std::size_t from, int color, std::size_t to) {
        if (seen_edges.emplace(from, color, to).second)
            g.edges.push_back({from, color, to});
    };

    visit(seed);
    while (!queue.empty()) {
        std::size_t cur = queue.front();
        queue.pop_front();
        Monomial here = g.nodes[cur];
        for (int i = 1; i <= cfg.rank(); ++i)
            if (auto next = apply_f(cfg, here, i))
                add_edge(cur, i, visit(*next));
        for (int i = 1; i <= cfg.rank(); ++i)
            if (auto prev = apply_e(cfg, here, i))
                add_edge(visit(*prev), i, cur);
    }
    return g;
}

void validate(const CrystalConfig& cfg, const DemazureSpec& spec)
{
    for (int i : spec.word)
        cfg.check_color(i);
    CrystalNode node = node_stats(cfg, spec.seed);
    const auto& extremal = spec.sign == DemazureSign::minus ? node.phi : node.eps;
    for (std::size_t k = 0; k < extremal.size(); ++k)
        if (extremal[k] != 0)
            throw InvalidDemazureSpec(std::string("seed is not a ")
                                      + (spec.sign == DemazureSign::minus ? "lowest" : "highest")
                                      + " weight monomial (color " + std::to_string(k + 1) + ")");
}

std::vector<Monomial> demazure(const CrystalConfig& cfg, const DemazureSpec& spec, std::size_t cap)
{
    if (cap == 0)
        throw CapExceeded("cap must be positive");
    validate(cfg, spec);
    auto step = spec.sign == DemazureSign::minus ? apply_e : apply_f;

    std::unordered_set<Monomial> members{spec.seed};
    std::vector<Monomial> frontier{spec.seed};
    for (auto it = spec.word.rbegin(); it != spec.word.rend(); ++it) {
        std::vector<Monomial> grown;
        for (const Monomial& b : frontier) {
            Monomial cur = b;
            while (auto next = step(cfg, cur, *it)) {
                cur = std::move(*next);
                if (members.insert(cur).second) {
                    if (members.size() > cap)
                        throw CapExceeded("Demazure crystal exceeds cap of " + std::to_string(cap));
                    grown.push_back(cur);
                }
            }
        }
        frontier.insert(frontier.end(), grown.begin(), grown.end());
    }
    std::vector<Monomial> out(members.begin(), members.end());
    std::sort(out.begin(), out.end(), CanonicalLess{});
    return out;
}

LaurentPoly demazure_polynomial(const CrystalConfig& cfg, const DemazureSpec& spec, std::size_t cap)
{
    LaurentPoly p;
    for (const Monomial& m : demazure(cfg, spec, cap))
        p.add_term(m, 1);
    return p;
}

// ---------------------------------------------------------------------------
// tau renaming

int tau_offset(int rank, int s)
{
    return s * rank - s * (s - 1) / 2;
}

bool tau_renderable(int rank, VarId v)
{
    if (v.i < 1 || v.i > rank)
        return false;
    if (v.s == -1)
        return true;
    return v.s >= 0 && v.i <= rank - v.s;
}

int tau_index(int rank, VarId v)
{
    if (!tau_renderable(rank, v))
        throw NotTauRenderable(to_string(v) + " has no tau name at rank " + std::to_string(rank));
    if (v.s == -1)
        return -(rank + 1 - v.i);
    return tau_offset(rank, v.s) + v.i;
}

VarId var_of_tau(int rank, int k)
{
    if (k < 0) {
        if (k < -rank)
            throw NotTauRenderable("tau_" + std::to_string(k) + " out of range");
        return VarId{-1, rank + 1 + k};
    }
    for (int s = 0; s < rank; ++s) {
        int lo = tau_offset(rank, s);
        if (k > lo && k <= tau_offset(rank, s + 1))
            return VarId{s, k - lo};
    }
    throw NotTauRenderable("tau_" + std::to_string(k) + " out of range");
}

namespace {

std::string tau_name(int k)
{
    std::string idx = std::to_string(k);
    return idx.size() == 1 ? "τ_" + idx : "τ_{" + idx + "}";
}

std::string tau_product(const std::vector<std::pair<int, int>>& factors)
{
    std::string out;
    for (const auto& [k, e] : factors) {
        out += tau_name(k);
        if (e != 1)
            out += "^" + std::to_string(e);
    }
    return out;
}

} // namespace

std::string tau_render(const CrystalConfig& cfg, const Monomial& m)
{
    std::vector<std::pair<int, int>> num;
    std::vector<std::pair<int, int>> den;
    for (const auto& [v, e] : m.factors()) {
        int k = tau_index(cfg.rank(), v);
        (e > 0 ? num : den).emplace_back(k, std::abs(e));
    }
    std::string out = num.empty() ? "1" : tau_product(num);
    if (!den.empty()) {
        bool single = den.size() == 1 && den.front().second == 1;
        out += single ? "/" + tau_product(den) : "/(" + tau_product(den) + ")";
    }
    return out;
}

std::string tau_render(const CrystalConfig& cfg, const LaurentPoly& p)
{
    if (p.is_zero())
        return "0";
    std::string out;
    for (const auto& [m, c] : p.terms()) {
        Integer mag = abs(c);
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        std::string body = tau_render(cfg, m);
        if (mag == 1)
            out += body;
        else if (body.starts_with("1/"))
            out += mag.get_str() + body.substr(1);
        else if (body == "1")
            out += mag.get_str();
        else
            out += mag.get_str() + body;
    }
    return out;
}

std::string node_label(const CrystalConfig& cfg, const Monomial& m, LabelStyle style)
{
    if (style == LabelStyle::tau) {
        bool ok = std::all_of(m.factors().begin(), m.factors().end(),
                              [&](const auto& f) { return tau_renderable(cfg.rank(), f.first); });
        if (ok)
            return tau_render(cfg, m);
    }
    return to_text(m);
}

std::string to_dot(const CrystalConfig& cfg, const CrystalGraph& g, LabelStyle style)
{
    std::ostringstream out;
    out << "digraph crystal {\n";
    for (std::size_t k = 0; k < g.nodes.size(); ++k)
        out << "  n" << k << " [label=\"" << node_label(cfg, g.nodes[k], style) << "\"];\n";
    for (const auto& e : g.edges)
        out << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.color << "\"];\n";
    out << "}\n";
    return out.str();
}

nlohmann::json to_json(const CrystalGraph& g)
{
    auto nodes = nlohmann::json::array();
    for (const auto& m : g.nodes)
        nodes.push_back(to_json(LaurentPoly(m)));
    auto edges = nlohmann::json::array();
    for (const auto& e : g.edges)
        edges.push_back({{"from", e.from}, {"color", e.color}, {"to", e.to}});
    return {{"nodes", nodes}, {"edges", edges}};
}

} // namespace monocrystal
