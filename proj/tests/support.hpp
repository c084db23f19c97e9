#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "monocrystal/bruhat.hpp"
#include "monocrystal/laurent.hpp"

namespace testing {

using namespace monocrystal;

inline Monomial random_monomial(std::mt19937_64& rng, int vars = 3)
{
    std::uniform_int_distribution<int> count(0, vars);
    std::uniform_int_distribution<int> s(-1, 2);
    std::uniform_int_distribution<int> i(1, 3);
    std::uniform_int_distribution<int> e(-2, 2);
    std::vector<Monomial::Factor> f;
    for (int n = count(rng); n > 0; --n)
        f.emplace_back(VarId{s(rng), i(rng)}, e(rng));
    return Monomial::from_factors(std::move(f));
}

inline LaurentPoly random_poly(std::mt19937_64& rng, int terms = 4)
{
    std::uniform_int_distribution<int> count(0, terms);
    std::uniform_int_distribution<int> c(-5, 5);
    LaurentPoly p;
    for (int n = count(rng); n > 0; --n)
        p.add_term(random_monomial(rng), c(rng));
    return p;
}

inline Rational random_nonzero(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> mag(1, 7);
    std::uniform_int_distribution<int> coin(0, 1);
    Rational q(mag(rng) * (coin(rng) ? 1 : -1), mag(rng));
    q.canonicalize();
    return q;
}

/// A nonzero value for every variable the helpers above can produce.
inline Assignment random_assignment(std::mt19937_64& rng)
{
    Assignment a;
    for (int s = -1; s <= 2; ++s)
        for (int i = 1; i <= 3; ++i)
            a.emplace(VarId{s, i}, random_nonzero(rng));
    return a;
}

/// Leibniz expansion over all permutations; a dense oracle for the
/// memoized Laplace expansion.
template <class T>
T leibniz(const SquareMatrix<T>& m)
{
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    T total(0);
    do {
        int inversions = 0;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = a + 1; b < n; ++b)
                inversions += perm[a] > perm[b];
        T term(1);
        for (std::size_t row = 1; row <= n; ++row)
            term = term * m(row, perm[row - 1]);
        if (inversions % 2)
            total = total - term;
        else
            total = total + term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

inline long pascal(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    std::vector<std::vector<long>> t(static_cast<std::size_t>(n + 1));
    for (int a = 0; a <= n; ++a) {
        t[static_cast<std::size_t>(a)].assign(static_cast<std::size_t>(a + 1), 1);
        for (int b = 1; b < a; ++b)
            t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                t[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)]
                + t[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b)];
    }
    return t[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

/// tau_k as a monomial for the rank 4 fixtures.
inline Monomial tau4(int k, int e = 1)
{
    static const int offsets[] = {0, 4, 7, 9, 10};
    if (k < 0)
        return Monomial(VarId{-1, 5 + k}, e);
    int s = 0;
    while (k > offsets[s + 1])
        ++s;
    return Monomial(VarId{s, k - offsets[s]}, e);
}

} // namespace testing
