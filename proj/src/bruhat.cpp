#include "monocrystal/bruhat.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <unordered_map>

namespace monocrystal {

WordSpec::WordSpec(int rank, int cycles, int last) : rank_(rank), cycles_(cycles), last_(last)
{
    if (rank < 1)
        throw InvalidWordSpec("rank must be >= 1");
    if (cycles < 1 || cycles > rank)
        throw InvalidWordSpec("cycle count must lie in [1, r]");
    if (last < 1 || last > rank - cycles + 1)
        throw InvalidWordSpec("last index must lie in [1, r-m+1]");
}

WordSpec WordSpec::from_word(int rank, const std::vector<int>& word)
{
    if (rank < 1)
        throw InvalidWordSpec("rank must be >= 1");
    if (word.empty())
        throw InvalidWordSpec("word must be nonempty");
    int cycle = 1;
    int expected = 1;
    for (std::size_t pos = 0; pos < word.size(); ++pos) {
        if (expected > rank - cycle + 1) {
            ++cycle;
            expected = 1;
        }
        if (cycle > rank || word[pos] != expected)
            throw InvalidWordSpec("word is not a left factor of (1..r, 1..r-1, ..., 1)");
        ++expected;
    }
    return WordSpec(rank, cycle, expected - 1);
}

std::vector<WordSpec> WordSpec::all(int rank)
{
    std::vector<WordSpec> out;
    for (int m = 1; m <= rank; ++m)
        for (int last = 1; last <= rank - m + 1; ++last)
            out.emplace_back(rank, m, last);
    return out;
}

int WordSpec::offset(int s) const
{
    return s * rank_ - s * (s - 1) / 2;
}

int WordSpec::cycle_length(int cycle) const
{
    if (cycle < 1 || cycle > cycles_)
        return 0;
    return cycle == cycles_ ? last_ : rank_ - cycle + 1;
}

int WordSpec::length() const
{
    return offset(cycles_ - 1) + last_;
}

std::vector<int> WordSpec::letters() const
{
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(length()));
    for (int c = 1; c <= cycles_; ++c)
        for (int j = 1; j <= cycle_length(c); ++j)
            out.push_back(j);
    return out;
}

VarId WordSpec::var_at(int k) const
{
    if (k < 1 || k > length())
        throw IndexOutOfRange("position " + std::to_string(k) + " outside [1," + std::to_string(length()) + "]");
    int s = 0;
    while (k > offset(s + 1))
        ++s;
    return VarId{s, k - offset(s)};
}

int WordSpec::letter(int k) const
{
    return var_at(k).i;
}

int WordSpec::cycle_of(int k) const
{
    return var_at(k).s + 1;
}

std::optional<int> WordSpec::position_of(VarId v) const
{
    if (v.s < 0 || v.i < 1 || v.i > cycle_length(v.s + 1))
        return std::nullopt;
    return offset(v.s) + v.i;
}

std::optional<WordSpec> WordSpec::extended() const
{
    if (last_ < rank_ - cycles_ + 1)
        return WordSpec(rank_, cycles_, last_ + 1);
    if (cycles_ < rank_)
        return WordSpec(rank_, cycles_ + 1, 1);
    return std::nullopt;
}

MinorSpec::MinorSpec(WordSpec word, int k) : word_(word), k_(k)
{
    if (k < 1 || k > word_.length())
        throw IndexOutOfRange("minor index " + std::to_string(k) + " outside [1," + std::to_string(word_.length())
                              + "]");
}

// ---------------------------------------------------------------------------

Permutation::Permutation(std::vector<int> images) : images_(std::move(images))
{
    std::vector<bool> hit(images_.size(), false);
    for (int x : images_) {
        if (x < 1 || x > static_cast<int>(images_.size()) || hit[static_cast<std::size_t>(x - 1)])
            throw Error("not a permutation");
        hit[static_cast<std::size_t>(x - 1)] = true;
    }
}

Permutation Permutation::identity(int n)
{
    std::vector<int> images(static_cast<std::size_t>(n));
    std::iota(images.begin(), images.end(), 1);
    return Permutation(std::move(images));
}

Permutation Permutation::transposition(int n, int i)
{
    if (i < 1 || i >= n)
        throw ColorOutOfRange("s_" + std::to_string(i) + " outside S_" + std::to_string(n));
    Permutation p = identity(n);
    std::swap(p.images_[static_cast<std::size_t>(i - 1)], p.images_[static_cast<std::size_t>(i)]);
    return p;
}

std::vector<int> Permutation::apply(const std::vector<int>& points) const
{
    std::vector<int> out;
    out.reserve(points.size());
    for (int x : points)
        out.push_back((*this)(x));
    std::sort(out.begin(), out.end());
    return out;
}

Permutation operator*(const Permutation& a, const Permutation& b)
{
    if (a.size() != b.size())
        throw Error("permutation size mismatch");
    std::vector<int> images(b.images_.size());
    for (std::size_t x = 0; x < images.size(); ++x)
        images[x] = a(b.images_[x]);
    return Permutation(std::move(images));
}

// ---------------------------------------------------------------------------
// Generators

namespace {

void check_generator(int r, int i)
{
    if (i < 1 || i > r)
        throw ColorOutOfRange("generator index " + std::to_string(i) + " outside [1," + std::to_string(r) + "]");
}

template <class T>
SquareMatrix<T> block(int r, int i, T a, T b, T c, T d)
{
    check_generator(r, i);
    auto m = SquareMatrix<T>::identity(static_cast<std::size_t>(r + 1));
    auto k = static_cast<std::size_t>(i);
    m(k, k) = std::move(a);
    m(k, k + 1) = std::move(b);
    m(k + 1, k) = std::move(c);
    m(k + 1, k + 1) = std::move(d);
    return m;
}

} // namespace

SymMatrix gen_x(int r, int i, const Monomial& t)
{
    return block<LaurentPoly>(r, i, 1, t, 0, 1);
}

SymMatrix gen_y(int r, int i, const Monomial& t)
{
    return block<LaurentPoly>(r, i, 1, 0, t, 1);
}

SymMatrix gen_xneg(int r, int i, const Monomial& t)
{
    return block<LaurentPoly>(r, i, t.inverse(), 0, 1, t);
}

SymMatrix gen_alpha(int r, int i, const Monomial& t)
{
    return block<LaurentPoly>(r, i, t, 0, 0, t.inverse());
}

QMatrix gen_x(int r, int i, const Rational& t)
{
    return block<Rational>(r, i, 1, t, 0, 1);
}

QMatrix gen_y(int r, int i, const Rational& t)
{
    return block<Rational>(r, i, 1, 0, t, 1);
}

QMatrix gen_xneg(int r, int i, const Rational& t)
{
    if (t == 0)
        throw ZeroAssignment("x_{-i}(t) needs t != 0");
    return block<Rational>(r, i, Rational(1) / t, 0, 1, t);
}

QMatrix gen_alpha(int r, int i, const Rational& t)
{
    if (t == 0)
        throw ZeroAssignment("alpha_i(t) needs t != 0");
    return block<Rational>(r, i, t, 0, 0, Rational(1) / t);
}

SymMatrix xL_matrix(const WordSpec& w)
{
    const int r = w.rank();
    auto m = SymMatrix::identity(static_cast<std::size_t>(r + 1));
    // right multiplication by x_{-i}(t) only touches columns i and i+1
    for (int k = 1; k <= w.length(); ++k) {
        VarId v = w.var_at(k);
        Monomial t(v);
        Monomial t_inv = t.inverse();
        auto i = static_cast<std::size_t>(v.i);
        for (std::size_t row = 1; row <= m.size(); ++row) {
            LaurentPoly left = m(row, i) * LaurentPoly(t_inv) + m(row, i + 1);
            m(row, i + 1) = m(row, i + 1) * LaurentPoly(t);
            m(row, i) = std::move(left);
        }
    }
    return m;
}

Permutation u_leq(const WordSpec& w, int k)
{
    const int n = w.rank() + 1;
    if (k >= -w.rank() && k <= -1)
        return Permutation::identity(n);
    if (k < 1 || k > w.length())
        throw IndexOutOfRange("u_{<=k} needs k in [-r,-1] or [1,n], got " + std::to_string(k));
    Permutation u = Permutation::identity(n);
    for (int pos = 1; pos <= k; ++pos)
        u = u * Permutation::transposition(n, w.letter(pos));
    return u;
}

std::vector<int> minor_rows(const MinorSpec& spec)
{
    std::vector<int> cols(static_cast<std::size_t>(spec.d()));
    std::iota(cols.begin(), cols.end(), 1);
    return u_leq(spec.word(), spec.k()).apply(cols);
}

// ---------------------------------------------------------------------------
// Determinants

LaurentPoly determinant(const SymMatrix& m)
{
    const std::size_t n = m.size();
    if (n == 0)
        return 1;
    if (n > 31)
        throw Error("determinant: matrix too large for column-mask memoization");

    // expansion order: sparsest rows first
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 1);
    auto nonzeros = [&](std::size_t row) {
        std::size_t c = 0;
        for (std::size_t col = 1; col <= n; ++col)
            c += m(row, col).is_zero() ? 0 : 1;
        return c;
    };
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return nonzeros(a) < nonzeros(b); });

    // sign of the row reordering
    int sign = 1;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (order[a] > order[b])
                sign = -sign;

    std::unordered_map<std::uint32_t, LaurentPoly> memo;
    auto rec = [&](auto&& self, std::size_t depth, std::uint32_t free_cols) -> LaurentPoly {
        if (depth == n)
            return 1;
        if (auto it = memo.find(free_cols); it != memo.end())
            return it->second;
        LaurentPoly sum;
        int position = 0;
        for (std::size_t col = 1; col <= n; ++col) {
            std::uint32_t bit = 1u << (col - 1);
            if (!(free_cols & bit))
                continue;
            const LaurentPoly& entry = m(order[depth], col);
            if (!entry.is_zero()) {
                LaurentPoly minor = self(self, depth + 1, free_cols & ~bit);
                if (!minor.is_zero()) {
                    LaurentPoly term = entry * minor;
                    if (position % 2 == 0)
                        sum += term;
                    else
                        sum -= term;
                }
            }
            ++position;
        }
        memo.emplace(free_cols, sum);
        return sum;
    };
    LaurentPoly det = rec(rec, 0, (n == 32 ? ~0u : (1u << n) - 1u));
    return sign > 0 ? det : -det;
}

Rational determinant(const QMatrix& m)
{
    const std::size_t n = m.size();
    QMatrix a = m;
    Rational det = 1;
    for (std::size_t col = 1; col <= n; ++col) {
        std::size_t pivot = col;
        while (pivot <= n && a(pivot, col) == 0)
            ++pivot;
        if (pivot > n)
            return 0;
        if (pivot != col) {
            for (std::size_t j = 1; j <= n; ++j)
                std::swap(a(pivot, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        for (std::size_t row = col + 1; row <= n; ++row) {
            if (a(row, col) == 0)
                continue;
            Rational factor = a(row, col) / a(col, col);
            for (std::size_t j = col; j <= n; ++j)
                a(row, j) -= factor * a(col, j);
        }
    }
    return det;
}

LaurentPoly delta_L(const MinorSpec& spec)
{
    std::vector<int> cols(static_cast<std::size_t>(spec.d()));
    std::iota(cols.begin(), cols.end(), 1);
    return determinant(xL_matrix(spec.word()).submatrix(minor_rows(spec), cols));
}

bool delta_L_truncation_check(const WordSpec& w, int k)
{
    MinorSpec base(w, k);
    auto ext = w.extended();
    if (!ext)
        throw InvalidExtension("word is already the longest word; no extension exists");
    const int n1 = ext->length();
    if (ext->letter(n1) == base.d())
        throw InvalidExtension("extension letter equals i_k");
    LaurentPoly extended = delta_L(MinorSpec(*ext, k));
    return extended.free_of(ext->var_at(n1)) && extended == delta_L(base);
}

// ---------------------------------------------------------------------------
// Numeric maps

Torus::Torus(std::vector<Rational> diagonal) : a_(std::move(diagonal))
{
    if (a_.size() < 2)
        throw NotInTorus("torus needs at least two diagonal entries");
    Rational product = 1;
    for (const auto& x : a_) {
        if (x == 0)
            throw ZeroAssignment("torus entries must be nonzero");
        product *= x;
    }
    if (product != 1)
        throw NotInTorus("diagonal entries must multiply to 1, got " + product.get_str());
}

Torus Torus::identity(int r)
{
    return Torus(std::vector<Rational>(static_cast<std::size_t>(r + 1), Rational(1)));
}

QMatrix Torus::matrix() const
{
    QMatrix m(a_.size());
    for (std::size_t k = 1; k <= a_.size(); ++k)
        m(k, k) = a_[k - 1];
    return m;
}

namespace {

const Rational& value_at(const Assignment& t, VarId v)
{
    auto it = t.find(v);
    if (it == t.end())
        throw MissingAssignment("no value assigned to " + to_string(v));
    if (it->second == 0)
        throw ZeroAssignment(to_string(v) + " assigned zero");
    return it->second;
}

void check_torus_rank(const WordSpec& w, const Torus& a)
{
    if (a.diagonal().size() != static_cast<std::size_t>(w.rank() + 1))
        throw NotInTorus("torus size does not match rank");
}

} // namespace

QMatrix xL_numeric(const WordSpec& w, const Assignment& t)
{
    auto m = QMatrix::identity(static_cast<std::size_t>(w.rank() + 1));
    for (int k = 1; k <= w.length(); ++k) {
        VarId v = w.var_at(k);
        m = m * gen_xneg(w.rank(), v.i, value_at(t, v));
    }
    return m;
}

QMatrix xbarG(const WordSpec& w, const Torus& a, const Assignment& t)
{
    check_torus_rank(w, a);
    return a.matrix() * xL_numeric(w, t);
}

QMatrix xG(const WordSpec& w, const Torus& a, const Assignment& tau)
{
    check_torus_rank(w, a);
    QMatrix m = a.matrix();
    for (int k = 1; k <= w.length(); ++k) {
        VarId v = w.var_at(k);
        m = m * gen_y(w.rank(), v.i, value_at(tau, v));
    }
    return m;
}

Rational delta_G(const MinorSpec& spec, const Torus& a, const Assignment& t)
{
    QMatrix g = xbarG(spec.word(), a, t);
    std::vector<int> cols(static_cast<std::size_t>(spec.d()));
    std::iota(cols.begin(), cols.end(), 1);
    return determinant(g.submatrix(minor_rows(spec), cols));
}

std::pair<Torus, Assignment> phi_map(const WordSpec& w, const Torus& a, const Assignment& t)
{
    check_torus_rank(w, a);
    // t_{l_{z-1}+j} for cycle z; positions the word does not reach count as 1
    auto t_or_one = [&](int cycle, int j) -> Rational {
        if (auto pos = w.position_of(VarId{cycle - 1, j}))
            return value_at(t, w.var_at(*pos));
        return 1;
    };

    std::vector<Rational> diag = a.diagonal();
    for (int k = 1; k <= w.length(); ++k) {
        VarId v = w.var_at(k);
        const Rational& c = value_at(t, v);
        // alpha_i(c)^{-1} = diag(..., c^{-1} at i, c at i+1, ...)
        diag[static_cast<std::size_t>(v.i - 1)] /= c;
        diag[static_cast<std::size_t>(v.i)] *= c;
    }

    Assignment tau;
    const int m = w.cycles();
    for (int k = 1; k <= w.length(); ++k) {
        VarId v = w.var_at(k);
        const int s = v.s;
        const int j = v.i;
        Rational num = 1;
        Rational den = t_or_one(s + 1, j);
        for (int z = s + 2; z <= m; ++z) {
            num *= t_or_one(z, j - 1);
            Rational same = t_or_one(z, j);
            den *= same * same;
        }
        for (int z = s + 1; z <= m; ++z)
            num *= t_or_one(z, j + 1);
        tau.emplace(v, num / den);
    }
    return {Torus(std::move(diag)), std::move(tau)};
}

nlohmann::json to_json(const SymMatrix& m)
{
    auto rows = nlohmann::json::array();
    for (std::size_t i = 1; i <= m.size(); ++i) {
        auto row = nlohmann::json::array();
        for (std::size_t j = 1; j <= m.size(); ++j)
            row.push_back(to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

} // namespace monocrystal
