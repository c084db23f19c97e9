#include "monocrystal/paths.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace monocrystal {

void PathSpec::validate() const
{
    if (d < 1)
        throw InvalidPathSpec("d must be >= 1");
    if (mprime < 1 || mprime > m)
        throw InvalidPathSpec("need 1 <= m' <= m");
}

PathSpec PathSpec::from_minor(const MinorSpec& spec)
{
    const WordSpec& w = spec.word();
    const int d = spec.d();
    int m = spec.mprime();
    for (int cycle = spec.mprime(); cycle <= w.cycles(); ++cycle)
        if (w.cycle_length(cycle) >= d)
            m = cycle;
    return PathSpec{d, m, spec.mprime()};
}

bool is_valid_path(const PathSpec& spec, const Path& p)
{
    const auto d = static_cast<std::size_t>(spec.d);
    if (p.rows.size() != static_cast<std::size_t>(spec.m + 1))
        return false;
    for (const auto& row : p.rows) {
        if (row.size() != d || row.front() < 1)
            return false;
        for (std::size_t i = 1; i < d; ++i)
            if (row[i] <= row[i - 1])
                return false;
    }
    for (std::size_t i = 0; i < d; ++i) {
        const int idx = static_cast<int>(i) + 1;
        if (p.rows.front()[i] != idx || p.rows.back()[i] != spec.mprime + idx)
            return false;
        for (std::size_t s = 0; s + 1 < p.rows.size(); ++s) {
            int step = p.rows[s + 1][i] - p.rows[s][i];
            if (step != 0 && step != 1)
                return false;
        }
    }
    return true;
}

std::vector<Path> enumerate(const PathSpec& spec)
{
    spec.validate();
    const int d = spec.d;
    std::vector<Path> out;
    Path current;
    std::vector<int> start(static_cast<std::size_t>(d));
    for (int i = 1; i <= d; ++i)
        start[static_cast<std::size_t>(i - 1)] = i;
    current.rows.push_back(start);

    // coordinate i must still be able to reach m'+i in the remaining steps
    auto reachable = [&](int s, int i, int value) {
        int target = spec.mprime + i;
        return value <= target && value + (spec.m - s) >= target;
    };

    std::vector<int> next(static_cast<std::size_t>(d));
    auto fill = [&](auto&& self, int s, int i) -> void {
        if (i > d) {
            current.rows.push_back(next);
            if (s + 1 == spec.m)
                out.push_back(current);
            else
                self(self, s + 1, 1);
            current.rows.pop_back();
            return;
        }
        if (i == 1)
            next.assign(static_cast<std::size_t>(d), 0);
        const int prev = current.rows.back()[static_cast<std::size_t>(i - 1)];
        std::vector<int> saved = next;
        for (int value : {prev, prev + 1}) {
            if (!reachable(s + 1, i, value))
                continue;
            if (i > 1 && value <= next[static_cast<std::size_t>(i - 2)])
                continue;
            next[static_cast<std::size_t>(i - 1)] = value;
            self(self, s, i + 1);
            next = saved;
        }
    };

    fill(fill, 0, 1);
    return out;
}

Monomial boundary_var(int r, int q, int j)
{
    if (j == 0 || j == r + 1)
        return Monomial();
    if (q < 0 || j < 0 || j > r - q)
        throw RankTooSmall("label needs " + to_string(VarId{q, j}) + ", outside the admissible range for r = "
                           + std::to_string(r));
    return Monomial(VarId{q, j});
}

Monomial edge_label(const PathSpec& spec, const Path& p, int s, int r)
{
    const int q = spec.m - s - 1;
    Monomial out;
    for (int i = 1; i <= spec.d; ++i) {
        out *= boundary_var(r, q, p.at(s + 1, i) - 1);
        out *= boundary_var(r, q, p.at(s, i)).inverse();
    }
    return out;
}

Monomial label(const PathSpec& spec, const Path& p, int r)
{
    Monomial out;
    for (int s = 0; s < spec.m; ++s)
        out *= edge_label(spec, p, s, r);
    return out;
}

LaurentPoly path_sum(const PathSpec& spec, int r)
{
    LaurentPoly out;
    for (const Path& p : enumerate(spec))
        out.add_term(label(spec, p, r), 1);
    return out;
}

PathStats stats(const PathSpec& spec, const Path& p)
{
    const auto stationary = static_cast<std::size_t>(spec.m - spec.mprime);
    PathStats out;
    out.q.assign(stationary, std::vector<int>(static_cast<std::size_t>(spec.d)));
    out.k = out.q;
    for (int i = 1; i <= spec.d; ++i) {
        std::size_t j = 0;
        for (int s = 0; s < spec.m; ++s) {
            if (p.at(s, i) != p.at(s + 1, i))
                continue;
            if (j >= stationary)
                throw InvalidPathSpec("path has too many stationary steps");
            out.q[j][static_cast<std::size_t>(i - 1)] = s;
            out.k[j][static_cast<std::size_t>(i - 1)] = p.at(s, i);
            ++j;
        }
        if (j != stationary)
            throw InvalidPathSpec("path has too few stationary steps");
    }
    return out;
}

Path rebuild(const PathSpec& spec, const std::vector<std::vector<int>>& K)
{
    spec.validate();
    const int stationary = spec.m - spec.mprime;
    if (K.size() != static_cast<std::size_t>(stationary))
        throw InvalidPathSpec("K must have m - m' rows");
    Path p;
    p.rows.assign(static_cast<std::size_t>(spec.m + 1), std::vector<int>(static_cast<std::size_t>(spec.d)));
    for (int i = 1; i <= spec.d; ++i) {
        std::set<int> still;
        for (int j = 1; j <= stationary; ++j) {
            const auto& row = K[static_cast<std::size_t>(j - 1)];
            if (row.size() != static_cast<std::size_t>(spec.d))
                throw InvalidPathSpec("K rows must have d entries");
            still.insert(row[static_cast<std::size_t>(i - 1)] + j - i - 1);
        }
        int a = i;
        for (int s = 0; s <= spec.m; ++s) {
            p.rows[static_cast<std::size_t>(s)][static_cast<std::size_t>(i - 1)] = a;
            if (!still.contains(s))
                ++a;
        }
    }
    if (!is_valid_path(spec, p) || stats(spec, p).k != K)
        throw InvalidPathSpec("K array is not admissible");
    return p;
}

std::vector<std::vector<std::vector<int>>> admissible_k_arrays(const PathSpec& spec)
{
    spec.validate();
    const int rows = spec.m - spec.mprime;
    const int d = spec.d;
    std::vector<std::vector<std::vector<int>>> out;
    std::vector<std::vector<int>> K(static_cast<std::size_t>(rows), std::vector<int>(static_cast<std::size_t>(d)));

    auto place = [&](auto&& self, int j, int i) -> void {
        if (j > rows) {
            out.push_back(K);
            return;
        }
        if (i > d) {
            self(self, j + 1, 1);
            return;
        }
        int lo = i;
        if (j > 1)
            lo = std::max(lo, K[static_cast<std::size_t>(j - 2)][static_cast<std::size_t>(i - 1)]);
        if (i > 1)
            lo = std::max(lo, K[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 2)] + 1);
        const int hi = spec.mprime + i;
        for (int v = lo; v <= hi; ++v) {
            K[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] = v;
            self(self, j, i + 1);
        }
    };
    place(place, 1, 1);
    return out;
}

Monomial c_bar(int r, int a, int b)
{
    return boundary_var(r, a, b - 1) * boundary_var(r, a, b).inverse();
}

LaurentPoly closed_form_sum(const PathSpec& spec, int r)
{
    LaurentPoly out;
    for (const auto& K : admissible_k_arrays(spec)) {
        Monomial term;
        for (std::size_t j = 0; j < K.size(); ++j)
            for (std::size_t i = 0; i < K[j].size(); ++i) {
                const int kv = K[j][i];
                const int jj = static_cast<int>(j) + 1;
                const int ii = static_cast<int>(i) + 1;
                term *= c_bar(r, spec.m - kv - jj + ii, kv);
            }
        out.add_term(term, 1);
    }
    return out;
}

LaurentPoly d1_closed_form(int m, int mprime, int r)
{
    PathSpec{1, m, mprime}.validate();
    LaurentPoly out;
    // js = (j_0 = -1, j_1, ..., j_{m'}, j_{m'+1} = m)
    std::vector<int> js(static_cast<std::size_t>(mprime + 2));
    js.front() = -1;
    js.back() = m;
    auto choose = [&](auto&& self, int slot) -> void {
        if (slot > mprime) {
            Monomial term;
            for (int nu = 0; nu <= mprime; ++nu)
                for (int i = js[static_cast<std::size_t>(nu)] + 1; i < js[static_cast<std::size_t>(nu + 1)]; ++i)
                    term *= boundary_var(r, m - 1 - i, nu) * boundary_var(r, m - 1 - i, nu + 1).inverse();
            out.add_term(term, 1);
            return;
        }
        for (int v = js[static_cast<std::size_t>(slot - 1)] + 1; v <= m - 1 - (mprime - slot); ++v) {
            js[static_cast<std::size_t>(slot)] = v;
            self(self, slot + 1);
        }
    };
    choose(choose, 1);
    return out;
}

nlohmann::json to_json(const CrystalConfig& cfg, const PathSpec& spec, const std::vector<Path>& paths)
{
    auto list = nlohmann::json::array();
    for (const Path& p : paths) {
        Monomial q = label(spec, p, cfg.rank());
        list.push_back({{"rows", p.rows}, {"label", node_label(cfg, q, LabelStyle::tau)}, {"vars", to_json(q)}});
    }
    return {{"d", spec.d}, {"m", spec.m}, {"mprime", spec.mprime}, {"paths", list}};
}

std::string to_dot(const CrystalConfig& cfg, const PathSpec& spec, const std::vector<Path>& paths)
{
    using Vertex = std::pair<int, std::vector<int>>;
    std::map<Vertex, std::size_t> ids;
    std::vector<Vertex> vertices;
    std::map<std::tuple<std::size_t, std::size_t>, Monomial> edges;

    auto id_of = [&](int s, const std::vector<int>& row) {
        Vertex v{s, row};
        auto [it, fresh] = ids.emplace(v, vertices.size());
        if (fresh)
            vertices.push_back(v);
        return it->second;
    };
    for (const Path& p : paths)
        for (int s = 0; s < spec.m; ++s) {
            std::size_t from = id_of(s, p.rows[static_cast<std::size_t>(s)]);
            std::size_t to = id_of(s + 1, p.rows[static_cast<std::size_t>(s + 1)]);
            edges.emplace(std::tuple{from, to}, edge_label(spec, p, s, cfg.rank()));
        }

    std::ostringstream os;
    os << "digraph paths {\n";
    for (std::size_t k = 0; k < vertices.size(); ++k) {
        const auto& [s, row] = vertices[k];
        os << "  v" << k << " [label=\"(" << spec.m - s;
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i == 0 ? ";" : ",") << row[i];
        os << ")\"];\n";
    }
    for (const auto& [key, mono] : edges)
        os << "  v" << std::get<0>(key) << " -> v" << std::get<1>(key) << " [label=\""
           << node_label(cfg, mono, LabelStyle::tau) << "\"];\n";
    os << "}\n";
    return os.str();
}

} // namespace monocrystal
