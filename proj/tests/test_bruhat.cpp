#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "monocrystal/bruhat.hpp"
#include "monocrystal/crystal.hpp"
#include "monocrystal/verify.hpp"
#include "support.hpp"

using namespace monocrystal;
using testing::leibniz;
using testing::tau4;

namespace {

const std::vector<int> kLongest4{1, 2, 3, 4, 1, 2, 3, 1, 2, 1};

LaurentPoly mono(const Monomial& m)
{
    return LaurentPoly(m);
}

// Explicit left-to-right product of the generators.
SymMatrix multiplied(const WordSpec& w)
{
    auto m = SymMatrix::identity(static_cast<std::size_t>(w.rank() + 1));
    for (int k = 1; k <= w.length(); ++k)
        m = m * gen_xneg(w.rank(), w.letter(k), Monomial(w.var_at(k)));
    return m;
}

std::vector<int> iota_vec(int from, int to)
{
    std::vector<int> out;
    for (int x = from; x <= to; ++x)
        out.push_back(x);
    return out;
}

} // namespace

TEST_CASE("word specs")
{
    WordSpec w = WordSpec::from_word(4, kLongest4);
    CHECK(w.cycles() == 4);
    CHECK(w.last() == 1);
    CHECK(w.length() == 10);
    CHECK(w.letters() == kLongest4);
    CHECK(w.offset(0) == 0);
    CHECK(w.offset(1) == 4);
    CHECK(w.offset(2) == 7);
    CHECK(w.offset(3) == 9);
    CHECK(w.var_at(6) == VarId{1, 2});
    CHECK(w.cycle_of(6) == 2);
    CHECK(w.position_of(VarId{2, 2}) == 9);
    CHECK_FALSE(w.position_of(VarId{2, 3}).has_value());
    CHECK_FALSE(w.extended().has_value());

    CHECK(WordSpec::from_word(4, {1, 2, 3, 4, 1, 2}) == WordSpec(4, 2, 2));
    CHECK(WordSpec(4, 2, 3).extended() == WordSpec(4, 3, 1));
    CHECK(WordSpec(4, 2, 2).extended() == WordSpec(4, 2, 3));
    CHECK_THROWS_AS(WordSpec::from_word(4, {1, 3}), InvalidWordSpec);
    CHECK_THROWS_AS(WordSpec::from_word(4, {}), InvalidWordSpec);
    CHECK_THROWS_AS(WordSpec(3, 2, 3), InvalidWordSpec);
    CHECK_THROWS_AS(WordSpec(3, 4, 1), InvalidWordSpec);
    CHECK_THROWS_AS(WordSpec(0, 1, 1), InvalidWordSpec);
    CHECK_THROWS_AS(MinorSpec(w, 11), IndexOutOfRange);
    CHECK_THROWS_AS(MinorSpec(w, 0), IndexOutOfRange);
    for (int r = 1; r <= 6; ++r)
        CHECK(WordSpec::all(r).size() == static_cast<std::size_t>(r * (r + 1) / 2));
}

TEST_CASE("generator blocks")
{
    Monomial t(VarId{0, 1});
    SymMatrix x = gen_xneg(1, 1, t);
    CHECK(x(1, 1) == mono(t.inverse()));
    CHECK(x(1, 2).is_zero());
    CHECK(x(2, 1) == LaurentPoly(1));
    CHECK(x(2, 2) == mono(t));
    CHECK_THROWS_AS(gen_xneg(3, 4, t), ColorOutOfRange);
    CHECK_THROWS_AS(gen_y(3, 0, t), ColorOutOfRange);
}

TEST_CASE("generators are unimodular")
{
    for (int r = 1; r <= 3; ++r)
        for (int i = 1; i <= r; ++i) {
            Monomial t(VarId{0, i}, 1);
            CHECK(determinant(gen_x(r, i, t)) == LaurentPoly(1));
            CHECK(determinant(gen_y(r, i, t)) == LaurentPoly(1));
            CHECK(determinant(gen_xneg(r, i, t)) == LaurentPoly(1));
            CHECK(determinant(gen_alpha(r, i, t)) == LaurentPoly(1));
        }
}

TEST_CASE("x^L of the rank 4 longest word")
{
    WordSpec w = WordSpec::from_word(4, kLongest4);
    SymMatrix m = xL_matrix(w);
    CHECK(m == multiplied(w));
    // bottom row 1, t10, t9, t7, t4
    CHECK(m(5, 1) == LaurentPoly(1));
    CHECK(m(5, 2) == mono(tau4(10)));
    CHECK(m(5, 3) == mono(tau4(9)));
    CHECK(m(5, 4) == mono(tau4(7)));
    CHECK(m(5, 5) == mono(tau4(4)));
    // diagonal
    CHECK(m(1, 1) == mono(tau4(1, -1) * tau4(5, -1) * tau4(8, -1) * tau4(10, -1)));
    CHECK(m(2, 2) == mono(tau4(1) * tau4(5) * tau4(8) * tau4(10) * tau4(2, -1) * tau4(6, -1) * tau4(9, -1)));
    CHECK(m(3, 3) == mono(tau4(2) * tau4(6) * tau4(9) * tau4(3, -1) * tau4(7, -1)));
    CHECK(m(4, 4) == mono(tau4(3) * tau4(7) * tau4(4, -1)));
    CHECK(m(4, 3) == mono(tau4(3) * tau4(9) * tau4(4, -1)) + mono(tau4(6) * tau4(9) * tau4(7, -1)));
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 1; j <= 5; ++j)
            CHECK(m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).is_zero());
}

TEST_CASE("x^L has determinant one")
{
    for (int r = 1; r <= 3; ++r)
        for (const WordSpec& w : WordSpec::all(r))
            CHECK(determinant(xL_matrix(w)) == LaurentPoly(1));
}

TEST_CASE("u_{<=k}")
{
    WordSpec w = WordSpec::from_word(4, kLongest4);
    CHECK(u_leq(w, 6).apply({1, 2}) == std::vector<int>{3, 4});
    CHECK(u_leq(w, -3) == Permutation::identity(5));
    CHECK_THROWS_AS(u_leq(w, -5), IndexOutOfRange);
    CHECK_THROWS_AS(u_leq(w, 0), IndexOutOfRange);
    CHECK_THROWS_AS(u_leq(w, 11), IndexOutOfRange);

    for (int r = 1; r <= 6; ++r) {
        WordSpec longest(r, r, 1);
        // independent composition: s_{i_1}...s_{i_n} acting on positions
        std::vector<int> img = iota_vec(1, r + 1);
        for (int k = longest.length(); k >= 1; --k) {
            int i = longest.letter(k);
            for (int& x : img)
                x = x == i ? i + 1 : (x == i + 1 ? i : x);
        }
        std::vector<int> reversed = iota_vec(1, r + 1);
        std::reverse(reversed.begin(), reversed.end());
        CHECK(img == reversed);
        CHECK(u_leq(longest, longest.length()).images() == reversed);
    }
}

TEST_CASE("minor rows are a shifted interval")
{
    for (int r = 1; r <= 6; ++r)
        for (const WordSpec& w : WordSpec::all(r))
            for (int k = 1; k <= w.length(); ++k) {
                MinorSpec spec(w, k);
                CHECK(minor_rows(spec) == iota_vec(spec.mprime() + 1, spec.mprime() + spec.d()));
            }
}

TEST_CASE("the minor at k = 6 on the rank 4 longest word")
{
    CrystalConfig cfg(4);
    MinorSpec spec(WordSpec::from_word(4, kLongest4), 6);
    CHECK(spec.d() == 2);
    CHECK(spec.mprime() == 2);
    LaurentPoly p = delta_L(spec);
    CHECK(tau_render(cfg, p) == "τ_2/τ_4 + τ_3τ_5/(τ_4τ_6) + τ_5/τ_7 + τ_3/(τ_4τ_8) + τ_6/(τ_7τ_8) + 1/τ_9");
    LaurentPoly expected = mono(tau4(2) * tau4(4, -1)) + mono(tau4(3) * tau4(5) * tau4(4, -1) * tau4(6, -1))
                           + mono(tau4(5) * tau4(7, -1)) + mono(tau4(3) * tau4(4, -1) * tau4(8, -1))
                           + mono(tau4(6) * tau4(7, -1) * tau4(8, -1)) + mono(tau4(9, -1));
    CHECK(p == expected);
}

TEST_CASE("a 1x1 minor is a matrix entry")
{
    WordSpec w = WordSpec::from_word(4, kLongest4);
    CHECK(delta_L(MinorSpec(w, 1)) == xL_matrix(w)(2, 1));
}

TEST_CASE("minors agree with a dense determinant oracle")
{
    for (int r = 1; r <= 3; ++r)
        for (const WordSpec& w : WordSpec::all(r)) {
            SymMatrix m = multiplied(w);
            for (int k = 1; k <= w.length(); ++k) {
                MinorSpec spec(w, k);
                auto cols = iota_vec(1, spec.d());
                CHECK(delta_L(spec) == leibniz(m.submatrix(minor_rows(spec), cols)));
            }
        }
}

TEST_CASE("Laplace expansion matches the oracle on full matrices")
{
    std::mt19937_64 rng(11);
    for (int n = 1; n <= 5; ++n)
        for (int trial = 0; trial < 5; ++trial) {
            SymMatrix m(static_cast<std::size_t>(n));
            for (std::size_t i = 1; i <= m.size(); ++i)
                for (std::size_t j = 1; j <= m.size(); ++j)
                    m(i, j) = testing::random_poly(rng, 2);
            CHECK(determinant(m) == leibniz(m));

            QMatrix q(static_cast<std::size_t>(n));
            for (std::size_t i = 1; i <= q.size(); ++i)
                for (std::size_t j = 1; j <= q.size(); ++j)
                    q(i, j) = trial % 2 ? testing::random_nonzero(rng) : Rational(static_cast<long>(rng() % 3));
            CHECK(determinant(q) == leibniz(q));
        }
}

TEST_CASE("extending the word by a different letter leaves the minor unchanged")
{
    WordSpec w = WordSpec::from_word(4, {1, 2, 3, 4, 1, 2, 3, 1, 2});
    CHECK(delta_L_truncation_check(w, 6));
    CHECK(delta_L(MinorSpec(w, 6)) == delta_L(MinorSpec(WordSpec::from_word(4, kLongest4), 6)));
    CHECK_THROWS_AS(delta_L_truncation_check(WordSpec::from_word(4, {1, 2, 3, 4, 1, 2}), 3), InvalidExtension);
    CHECK_THROWS_AS(delta_L_truncation_check(WordSpec(3, 3, 1), 1), InvalidExtension);
    for (int r = 1; r <= 4; ++r)
        for (const WordSpec& v : WordSpec::all(r)) {
            auto ext = v.extended();
            if (!ext)
                continue;
            for (int k = 1; k <= v.length(); ++k)
                if (v.letter(k) != ext->letter(ext->length()))
                    CHECK(delta_L_truncation_check(v, k));
        }
}

TEST_CASE("torus elements")
{
    CHECK_THROWS_AS(Torus({Rational(2), Rational(2)}), NotInTorus);
    CHECK_THROWS_AS(Torus({Rational(0), Rational(1)}), ZeroAssignment);
    CHECK_NOTHROW(Torus({Rational(2), Rational(1, 2)}));
}

TEST_CASE("torus factor of the numeric minor")
{
    std::mt19937_64 rng(12);
    WordSpec w = WordSpec::from_word(4, kLongest4);
    MinorSpec spec(w, 6);
    LaurentPoly p = delta_L(spec);
    for (int n = 0; n < 20; ++n) {
        Assignment t = random_point(w, rng);
        CHECK(delta_G(spec, Torus::identity(4), t) == poly_eval(p, t));
        Torus a = random_torus(4, rng);
        CHECK(delta_G(spec, a, t) == a.at(3) * a.at(4) * poly_eval(p, t));
    }
    Assignment t = random_point(w, rng);
    Torus scaled({Rational(1), Rational(1), Rational(2), Rational(1), Rational(1, 2)});
    CHECK(delta_G(spec, scaled, t) == 2 * poly_eval(p, t));
    Torus other({Rational(1), Rational(1), Rational(1), Rational(2), Rational(1, 2)});
    CHECK(delta_G(spec, other, t) == 2 * poly_eval(p, t));
    Torus outside({Rational(2), Rational(1), Rational(1), Rational(1), Rational(1, 2)});
    CHECK(delta_G(spec, outside, t) == poly_eval(p, t));
}

TEST_CASE("the change of coordinates at the unit point")
{
    for (int r = 1; r <= 4; ++r)
        for (const WordSpec& w : WordSpec::all(r)) {
            Assignment ones;
            for (int k = 1; k <= w.length(); ++k)
                ones.emplace(w.var_at(k), 1);
            std::mt19937_64 rng(static_cast<std::uint64_t>(r));
            Torus a = random_torus(r, rng);
            auto [a2, tau] = phi_map(w, a, ones);
            CHECK(a2 == a);
            for (const auto& [v, x] : tau)
                CHECK(x == 1);
        }
}

TEST_CASE("a x^L(t) equals x^G at the transformed point")
{
    std::mt19937_64 rng(13);
    WordSpec w(2, 2, 1);
    for (int n = 0; n < 30; ++n) {
        Torus a = random_torus(2, rng);
        Assignment t = random_point(w, rng);
        auto [a2, tau] = phi_map(w, a, t);
        CHECK(xbarG(w, a, t) == xG(w, a2, tau));
    }
    for (int r = 1; r <= 4; ++r)
        for (const WordSpec& v : WordSpec::all(r))
            for (int n = 0; n < 3; ++n) {
                Torus a = random_torus(r, rng);
                Assignment t = random_point(v, rng);
                auto [a2, tau] = phi_map(v, a, t);
                CHECK(xbarG(v, a, t) == xG(v, a2, tau));
            }
}

TEST_CASE("commuting a coroot past y_j")
{
    const int r = 4;
    Monomial c(VarId{0, 1});
    Monomial t(VarId{0, 2});
    for (int i = 1; i <= r; ++i) {
        SymMatrix inv = gen_alpha(r, i, c.inverse());
        for (int j = 1; j <= r; ++j) {
            Monomial shifted = t;
            if (i == j)
                shifted = c * c * t;
            else if (std::abs(i - j) == 1)
                shifted = c.inverse() * t;
            CHECK(inv * gen_y(r, j, t) == gen_y(r, j, shifted) * inv);
        }
    }
}

TEST_CASE("matrix json")
{
    auto j = to_json(gen_xneg(1, 1, Monomial(VarId{0, 1})));
    CHECK(j.size() == 2);
    CHECK(j[1][0].dump() == R"([{"coeff":1,"vars":[]}])");
}
