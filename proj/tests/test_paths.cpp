#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "monocrystal/bruhat.hpp"
#include "monocrystal/paths.hpp"
#include "support.hpp"

using namespace monocrystal;
using testing::pascal;
using testing::tau4;

namespace {

const PathSpec kX232{2, 3, 2};

Path make(std::vector<std::vector<int>> rows)
{
    return Path{std::move(rows)};
}

// Level-by-level search over all row tuples in [1, m'+d]^d, keeping only
// steps where every coordinate stays or moves up by one.
std::set<Path> brute_force(const PathSpec& spec)
{
    const int top = spec.mprime + spec.d;
    std::vector<std::vector<int>> candidates;
    std::vector<int> row(static_cast<std::size_t>(spec.d), 1);
    std::function<void(std::size_t)> fill = [&](std::size_t i) {
        if (i == row.size()) {
            candidates.push_back(row);
            return;
        }
        for (int v = 1; v <= top; ++v) {
            row[i] = v;
            fill(i + 1);
        }
    };
    fill(0);

    auto step_ok = [](const std::vector<int>& a, const std::vector<int>& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (b[i] != a[i] && b[i] != a[i] + 1)
                return false;
        return true;
    };

    std::set<Path> out;
    Path p;
    p.rows.resize(static_cast<std::size_t>(spec.m + 1));
    std::function<void(std::size_t)> walk = [&](std::size_t s) {
        if (s == p.rows.size()) {
            if (is_valid_path(spec, p))
                out.insert(p);
            return;
        }
        for (const auto& c : candidates) {
            if (s > 0 && !step_ok(p.rows[s - 1], c))
                continue;
            p.rows[s] = c;
            walk(s + 1);
        }
    };
    walk(0);
    return out;
}

} // namespace

TEST_CASE("the six paths of X_2(3,2)")
{
    auto paths = enumerate(kX232);
    REQUIRE(paths.size() == 6);
    CHECK(paths[0] == make({{1, 2}, {1, 2}, {2, 3}, {3, 4}}));
    CHECK(paths[1] == make({{1, 2}, {1, 3}, {2, 3}, {3, 4}}));
    CHECK(paths[2] == make({{1, 2}, {1, 3}, {2, 4}, {3, 4}}));
    CHECK(paths[3] == make({{1, 2}, {2, 3}, {2, 3}, {3, 4}}));
    CHECK(paths[4] == make({{1, 2}, {2, 3}, {2, 4}, {3, 4}}));
    CHECK(paths[5] == make({{1, 2}, {2, 3}, {3, 4}, {3, 4}}));

    std::vector<Monomial> expected{
        tau4(9, -1),
        tau4(6) * tau4(8, -1) * tau4(7, -1),
        tau4(3) * tau4(8, -1) * tau4(4, -1),
        tau4(5) * tau4(7, -1),
        tau4(5) * tau4(3) * tau4(6, -1) * tau4(4, -1),
        tau4(2) * tau4(4, -1),
    };
    for (std::size_t n = 0; n < 6; ++n)
        CHECK(label(kX232, paths[n], 4) == expected[n]);

    CrystalConfig cfg(4);
    CHECK(tau_render(cfg, label(kX232, paths[1], 4)) == "τ_6/(τ_7τ_8)");
    CHECK(tau_render(cfg, label(kX232, paths[0], 4)) == "1/τ_9");
}

TEST_CASE("path i-sequences")
{
    Path p = enumerate(kX232).front();
    CHECK(p.at(0, 1) == 1);
    CHECK(p.at(2, 1) == 2);
    CHECK(p.at(3, 2) == 4);
}

TEST_CASE("path stats and the K-array bijection")
{
    auto paths = enumerate(kX232);
    PathStats st = stats(kX232, paths[0]);
    CHECK(st.q[0][0] == 0);
    CHECK(st.k[0][0] == 1);
    for (const Path& p : paths) {
        PathStats s = stats(kX232, p);
        REQUIRE(s.k.size() == 1);
        CHECK(s.k[0].size() == 2);
        CHECK(rebuild(kX232, s.k) == p);
    }
    CHECK(admissible_k_arrays(kX232).size() == paths.size());
    CHECK_THROWS_AS(rebuild(kX232, {{2, 1}}), InvalidPathSpec);
}

TEST_CASE("graph export")
{
    CrystalConfig cfg(4);
    auto paths = enumerate(kX232);
    std::string dot = to_dot(cfg, kX232, paths);
    CHECK(std::count(dot.begin(), dot.end(), '\n') > 0);
    std::size_t edges = 0;
    std::size_t pos = 0;
    while ((pos = dot.find(" -> ", pos)) != std::string::npos) {
        ++edges;
        pos += 4;
    }
    CHECK(edges == 12);
    std::size_t vertices = 0;
    for (pos = 0; (pos = dot.find("[label=\"(", pos)) != std::string::npos; ++pos)
        ++vertices;
    CHECK(vertices == 8);
    CHECK(dot.find("\"(3;1,2)\"") != std::string::npos);
    CHECK(dot.find("\"(0;3,4)\"") != std::string::npos);

    auto j = to_json(cfg, kX232, paths);
    CHECK(j.dump().find("τ_9") != std::string::npos);
}

TEST_CASE("enumeration agrees with exhaustive search")
{
    for (int d = 1; d <= 3; ++d)
        for (int m = 1; m <= 4; ++m)
            for (int mp = 1; mp <= m; ++mp) {
                PathSpec spec{d, m, mp};
                auto paths = enumerate(spec);
                CHECK(std::is_sorted(paths.begin(), paths.end()));
                CHECK(std::set<Path>(paths.begin(), paths.end()) == brute_force(spec));
            }
}

TEST_CASE("forced paths and counts for d = 1")
{
    auto one = enumerate(PathSpec{2, 2, 2});
    REQUIRE(one.size() == 1);
    CHECK(label(PathSpec{2, 2, 2}, one[0], 4).is_one());
    for (int m = 1; m <= 6; ++m)
        for (int mp = 1; mp <= m; ++mp)
            CHECK(static_cast<long>(enumerate(PathSpec{1, m, mp}).size()) == pascal(m, mp));
}

TEST_CASE("labels are injective")
{
    for (int r = 2; r <= 5; ++r)
        for (int d = 1; d <= r; ++d)
            for (int m = 1; m <= r + 1 - d; ++m)
                for (int mp = 1; mp <= m; ++mp) {
                    PathSpec spec{d, m, mp};
                    std::set<Monomial, CanonicalLess> seen;
                    auto paths = enumerate(spec);
                    for (const Path& p : paths)
                        seen.insert(label(spec, p, r));
                    CHECK(seen.size() == paths.size());
                }
}

TEST_CASE("closed forms agree with the path sum and the minor")
{
    for (int r = 1; r <= 5; ++r)
        for (const WordSpec& w : WordSpec::all(r))
            for (int k = 1; k <= w.length(); ++k) {
                MinorSpec minor(w, k);
                PathSpec spec = PathSpec::from_minor(minor);
                LaurentPoly sum = path_sum(spec, r);
                CHECK(sum == closed_form_sum(spec, r));
                CHECK(sum == delta_L(minor));
                if (spec.d == 1) {
                    CHECK(d1_closed_form(spec.m, spec.mprime, r) == sum);
                    CHECK(static_cast<long>(sum.term_count()) == pascal(spec.m, spec.mprime));
                }
            }
}

TEST_CASE("c_bar")
{
    CHECK(c_bar(4, 1, 2) == Monomial(VarId{1, 1}) * Monomial(VarId{1, 2}).inverse());
    CHECK(c_bar(4, 0, 1) == Monomial(VarId{0, 1}).inverse());
}

TEST_CASE("path spec errors")
{
    CHECK_THROWS_AS(PathSpec({0, 1, 1}).validate(), InvalidPathSpec);
    CHECK_THROWS_AS(PathSpec({1, 2, 3}).validate(), InvalidPathSpec);
    CHECK_THROWS_AS(PathSpec({1, 2, 0}).validate(), InvalidPathSpec);
    CHECK_THROWS_AS(enumerate(PathSpec{1, 1, 2}), InvalidPathSpec);
    CHECK_THROWS_AS(path_sum(kX232, 2), RankTooSmall);
    CHECK_THROWS_AS(boundary_var(4, 2, 3), RankTooSmall);
    CHECK(boundary_var(4, 2, 0).is_one());
    CHECK(boundary_var(4, 1, 5).is_one());
    CHECK(boundary_var(4, 1, 3) == Monomial(VarId{1, 3}));
}

TEST_CASE("from_minor")
{
    WordSpec w = WordSpec::from_word(4, {1, 2, 3, 4, 1, 2, 3, 1, 2, 1});
    CHECK(PathSpec::from_minor(MinorSpec(w, 6)) == kX232);
    CHECK(PathSpec::from_minor(MinorSpec(w, 1)) == PathSpec{1, 4, 1});
}
