#pragma once

// SL_{r+1} side: the reduced words that are left factors of the standard
// longest word (1..r, 1..r-1, ..., 1,2, 1), the factorization maps of the
// reduced double Bruhat cell L^{u,e}, and generalized minors as exact
// determinants.
//
// Word position k = l_s + j (cycle s+1, color j) carries the variable
// Y[s,j]; tau_k is only its display name.

#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "monocrystal/laurent.hpp"
#include "monocrystal/matrix.hpp"

namespace monocrystal {

using SymMatrix = SquareMatrix<LaurentPoly>;
using QMatrix = SquareMatrix<Rational>;

/// The word (1..r, 1..r-1, ..., 1..r-m+2, 1..last) with m cycles.
class WordSpec {
public:
    WordSpec(int rank, int cycles, int last);

    /// Recognizes an explicit word; throws InvalidWordSpec unless it is a
    /// nonempty left factor of the standard longest word.
    static WordSpec from_word(int rank, const std::vector<int>& word);

    /// Every left factor for this rank, ordered by length.
    static std::vector<WordSpec> all(int rank);

    int rank() const { return rank_; }
    int cycles() const { return cycles_; }
    int last() const { return last_; }
    int length() const;

    /// l_s = r + (r-1) + ... + (r-s+1).
    int offset(int s) const;
    int cycle_length(int cycle) const;  // 1-based cycle number

    std::vector<int> letters() const;
    int letter(int k) const;    // 1-based position
    int cycle_of(int k) const;  // 1-based cycle number
    VarId var_at(int k) const;

    /// Position carrying Y[s,j], if the word reaches it.
    std::optional<int> position_of(VarId v) const;

    /// The next letter of the standard longest word, if any.
    std::optional<WordSpec> extended() const;

    friend bool operator==(const WordSpec&, const WordSpec&) = default;

private:
    int rank_;
    int cycles_;
    int last_;
};

/// Position k of a word with derived d = i_k and m' = cycle of k.
class MinorSpec {
public:
    MinorSpec(WordSpec word, int k);

    const WordSpec& word() const { return word_; }
    int k() const { return k_; }
    int d() const { return word_.letter(k_); }
    int mprime() const { return word_.cycle_of(k_); }

private:
    WordSpec word_;
    int k_;
};

class Permutation {
public:
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);
    static Permutation transposition(int n, int i);  // s_i = (i, i+1)

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int x) const { return images_.at(static_cast<std::size_t>(x - 1)); }
    const std::vector<int>& images() const { return images_; }

    /// Sorted image of a set of points.
    std::vector<int> apply(const std::vector<int>& points) const;

    /// (a * b)(x) = a(b(x)).
    friend Permutation operator*(const Permutation& a, const Permutation& b);
    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

// Generators. Symbolic versions take a monomial parameter so that x_{-i}
// and alpha_i can use its inverse.
SymMatrix gen_x(int r, int i, const Monomial& t);
SymMatrix gen_y(int r, int i, const Monomial& t);
SymMatrix gen_xneg(int r, int i, const Monomial& t);
SymMatrix gen_alpha(int r, int i, const Monomial& t);
QMatrix gen_x(int r, int i, const Rational& t);
QMatrix gen_y(int r, int i, const Rational& t);
QMatrix gen_xneg(int r, int i, const Rational& t);
QMatrix gen_alpha(int r, int i, const Rational& t);

/// x^L(tau) = x_{-i_1}(tau_1) ... x_{-i_n}(tau_n), symbolically.
SymMatrix xL_matrix(const WordSpec& w);

/// u_{<=k} = s_{i_1} ... s_{i_k}; identity for k in [-r, -1].
Permutation u_leq(const WordSpec& w, int k);

/// Rows u_{<=k}([1,d]) of the generalized minor.
std::vector<int> minor_rows(const MinorSpec& spec);

/// Laplace expansion with memoization on column subsets, rows taken
/// sparsest first.
LaurentPoly determinant(const SymMatrix& m);
Rational determinant(const QMatrix& m);

LaurentPoly delta_L(const MinorSpec& spec);

/// Extends the word by its next letter i_{n+1} (which must differ from
/// i_k) and checks that the minor is unchanged and free of tau_{n+1}.
bool delta_L_truncation_check(const WordSpec& w, int k);

/// Diagonal element of the maximal torus of SL_{r+1}.
class Torus {
public:
    explicit Torus(std::vector<Rational> diagonal);
    static Torus identity(int r);

    const std::vector<Rational>& diagonal() const { return a_; }
    const Rational& at(int k) const { return a_.at(static_cast<std::size_t>(k - 1)); }
    QMatrix matrix() const;

    friend bool operator==(const Torus&, const Torus&) = default;

private:
    std::vector<Rational> a_;
};

/// Numeric x^L(t); every position must be assigned a nonzero rational.
QMatrix xL_numeric(const WordSpec& w, const Assignment& t);

/// a * x^L(t).
QMatrix xbarG(const WordSpec& w, const Torus& a, const Assignment& t);

/// a * y_{i_1}(tau_1) ... y_{i_n}(tau_n).
QMatrix xG(const WordSpec& w, const Torus& a, const Assignment& tau);

/// Numeric generalized minor of a * x^L(t).
Rational delta_G(const MinorSpec& spec, const Torus& a, const Assignment& t);

/// (a, t) -> (a(t), tau(t)) with x^G(a(t); tau(t)) = a x^L(t).
std::pair<Torus, Assignment> phi_map(const WordSpec& w, const Torus& a, const Assignment& t);

nlohmann::json to_json(const SymMatrix& m);

} // namespace monocrystal
