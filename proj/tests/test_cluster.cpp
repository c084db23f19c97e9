#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "monocrystal/cluster.hpp"

using namespace monocrystal;

namespace {

IntMatrix ints(const std::vector<std::vector<long>>& rows)
{
    IntMatrix out;
    for (const auto& row : rows) {
        std::vector<Integer> r;
        for (long x : row)
            r.emplace_back(x);
        out.push_back(std::move(r));
    }
    return out;
}

bool is_skew_symmetrized(const IntMatrix& a, const std::vector<Rational>& d)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (d[i] <= 0)
            return false;
        for (std::size_t j = 0; j < a.size(); ++j)
            if (d[i] * Rational(a[i][j]) != -d[j] * Rational(a[j][i]))
                return false;
    }
    return true;
}

IntMatrix random_skew_symmetrizable(std::mt19937_64& rng, std::size_t n)
{
    std::uniform_int_distribution<int> entry(-3, 3);
    std::uniform_int_distribution<int> weight(1, 3);
    std::vector<long> d(n);
    for (auto& x : d)
        x = weight(rng);
    IntMatrix a(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            long s = entry(rng);
            // d_i a_ij = s d_i d_j, d_j a_ji = -s d_i d_j
            a[i][j] = s * d[j];
            a[j][i] = -s * d[i];
        }
    return a;
}

} // namespace

TEST_CASE("e(i)")
{
    CHECK(e_set(WordSpec::from_word(4, {1, 2, 3, 4, 1, 2, 3, 1, 2, 1}))
          == std::vector<int>{-1, -2, -3, -4, 1, 2, 3, 5, 6, 8});
    CHECK(e_set(WordSpec::from_word(2, {1, 2, 1})) == std::vector<int>{-1, -2, 1});
    CHECK(e_set(WordSpec::from_word(3, {1, 2, 3})) == std::vector<int>{-1, -2, -3});
}

TEST_CASE("rank one seed matrix")
{
    SeedMatrix b = seed_matrix(WordSpec::from_word(1, {1}));
    CHECK(b.rows == std::vector<int>{-1, 1});
    CHECK(b.cols == std::vector<int>{-1});
    CHECK(b.at(1, -1) == 1);
    CHECK(b.at(-1, -1) == 0);
    CHECK_THROWS_AS(b.at(2, -1), IndexOutOfRange);
}

TEST_CASE("rank two seed matrix")
{
    SeedMatrix b = seed_matrix(WordSpec::from_word(2, {1, 2, 1}));
    CHECK(b.rows == std::vector<int>{-1, -2, 1, 2, 3});
    CHECK(b.cols == std::vector<int>{-1, -2, 1});
    IntMatrix p = b.principal();
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j)
            CHECK(p[i][j] == -p[j][i]);
}

TEST_CASE("seed matrices are skew-symmetrizable")
{
    for (int r = 1; r <= 4; ++r)
        for (const WordSpec& w : WordSpec::all(r)) {
            IntMatrix p = seed_matrix(w).principal();
            CHECK(is_sign_skew_symmetric(p));
            auto d = skew_symmetrizer(p);
            REQUIRE(d.has_value());
            CHECK(is_skew_symmetrized(p, *d));
        }
}

TEST_CASE("matrix mutation")
{
    IntMatrix a = ints({{0, 1}, {-1, 0}});
    CHECK(mutate(a, 1) == ints({{0, -1}, {1, 0}}));
    IntMatrix b = ints({{0, 2, -1}, {-1, 0, 1}, {1, -2, 0}});
    CHECK(mutate(b, 2) == ints({{0, -2, 1}, {1, 0, -1}, {-1, 2, 0}}));
    CHECK(mutate(mutate(b, 2), 2) == b);
    CHECK_THROWS_AS(mutate(a, 0), IndexOutOfRange);
    CHECK_THROWS_AS(mutate(a, 3), IndexOutOfRange);
    CHECK_THROWS_AS(mutate(ints({{0, 1}}), 1), Error);
}

TEST_CASE("mutation is an involution and keeps the symmetrizer")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + static_cast<std::size_t>(trial % 8);
        IntMatrix a = random_skew_symmetrizable(rng, n);
        auto d = skew_symmetrizer(a);
        REQUIRE(d.has_value());
        IntMatrix cur = a;
        for (int step = 0; step < 10; ++step) {
            int k = 1 + static_cast<int>(rng() % n);
            IntMatrix next = mutate(cur, k);
            CHECK(mutate(next, k) == cur);
            CHECK(is_sign_skew_symmetric(next));
            CHECK(is_skew_symmetrized(next, *d));
            cur = next;
        }
    }
}

TEST_CASE("seed matrix mutation by label")
{
    SeedMatrix b = seed_matrix(WordSpec::from_word(2, {1, 2, 1}));
    SeedMatrix m = mutate(b, 1);
    CHECK(m.at(1, 1) == 0);
    CHECK(mutate(m, 1).entries == b.entries);
    CHECK_THROWS_AS(mutate(b, 2), IndexOutOfRange);
}

TEST_CASE("a symmetrizer does not always exist")
{
    CHECK_FALSE(skew_symmetrizer(ints({{0, 1, 1}, {-1, 0, 1}, {-2, -1, 0}})).has_value());
    CHECK_FALSE(skew_symmetrizer(ints({{0, 1}, {1, 0}})).has_value());
    CHECK_FALSE(is_sign_skew_symmetric(ints({{1}})));
    auto d = skew_symmetrizer(ints({{0, 2}, {-1, 0}}));
    REQUIRE(d.has_value());
    CHECK((*d)[0] == 1);
    CHECK((*d)[1] == 2);
}

TEST_CASE("exchange relations")
{
    ExchangeSeed lone{{"x"}, {}, ints({{0}})};
    auto [rel, next] = exchange(lone, 1);
    CHECK(to_text(rel) == "x*x' = 1 + 1");
    CHECK(next.cluster == std::vector<std::string>{"x'"});

    ExchangeSeed two{{"x1", "x2"}, {}, ints({{0, 1}, {-1, 0}})};
    auto [r1, s1] = exchange(two, 1);
    CHECK(to_text(r1) == "x1*x1' = x2 + 1");
    auto [r2, s2] = exchange(two, 2);
    CHECK(to_text(r2) == "x2*x2' = 1 + x1");
    auto [back, s11] = exchange(s1, 1);
    CHECK(s11.matrix == two.matrix);
    CHECK(back.old_variable == "x1'");

    ExchangeSeed framed{{"x1"}, {"y1", "y2"}, ints({{0, 2, -3}})};
    auto [rf, sf] = exchange(framed, 1);
    CHECK(to_text(rf) == "x1*x1' = y1^2 + y2^3");
    CHECK(to_json(rf)["positive"].dump() == R"([["y1",2]])");
    CHECK_THROWS_AS(exchange(framed, 2), IndexOutOfRange);
}

TEST_CASE("seed matrices as exchange seeds")
{
    SeedMatrix b = seed_matrix(WordSpec::from_word(2, {1, 2, 1}));
    ExchangeSeed seed = exchange_seed(b);
    CHECK(seed.cluster == std::vector<std::string>{"x[-1]", "x[-2]", "x[1]"});
    CHECK(seed.frozen == std::vector<std::string>{"x[2]", "x[3]"});
    REQUIRE(seed.matrix.size() == 3);
    for (std::size_t c = 0; c < b.cols.size(); ++c)
        for (std::size_t a = 0; a < b.rows.size(); ++a)
            CHECK(seed.matrix[c][a] == b.entries[a][c]);
}

TEST_CASE("large entries serialize as strings")
{
    IntMatrix a = ints({{0, 1}, {-1, 0}});
    a[0][1] = Integer("123456789012345678901234567890");
    CHECK(to_json(a)[0][1] == "123456789012345678901234567890");
    CHECK(to_json(a)[1][0] == -1);
}
