#pragma once

// Seed matrices of the double Bruhat cell G^{u,e} and matrix mutation.
//
// Index convention for the seed matrix B(i): the word (-1, ..., -r, i_1, ...,
// i_n) with the letters of u read as negative, i_{-j} = -j, and for each
// index k
//   k+ = min{l > k : |i_l| = |i_k|}   (n+1 when there is none),
//   p = max(k, l),  q = min(k+, l+).
// Then
//   b_kl = -sgn((k-l) i_p)                   if p = q,
//   b_kl = -sgn((k-l) i_p a_{|i_k|,|i_l|})   if p < q and sgn(i_p i_q)(k-l)(k+ - l+) > 0,
//   b_kl = 0                                 otherwise.
// Rows run over [-1,-r] and [1,n], columns over e(i).

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "monocrystal/bruhat.hpp"
#include "monocrystal/laurent.hpp"

namespace monocrystal {

/// Rectangular integer matrix, row major. Entries are unbounded since
/// mutation sequences can grow them exponentially.
using IntMatrix = std::vector<std::vector<Integer>>;

/// [-1,-r] followed by the positions k with a later equal letter; the
/// negatives are listed -1, -2, ..., -r.
std::vector<int> e_set(const WordSpec& w);

struct SeedMatrix {
    std::vector<int> rows;  // index labels
    std::vector<int> cols;
    IntMatrix entries;      // entries[a][b] = b_{rows[a], cols[b]}

    const Integer& at(int k, int l) const;

    /// Square part on the column labels.
    IntMatrix principal() const;
};

SeedMatrix seed_matrix(const WordSpec& w);

/// Mutation of a square matrix in direction k (1-based).
IntMatrix mutate(const IntMatrix& a, int k);

/// Mutation of a seed matrix at column label k; every entry, including the
/// frozen rows, follows the same rule.
SeedMatrix mutate(const SeedMatrix& b, int label);

bool is_sign_skew_symmetric(const IntMatrix& a);

/// Positive diagonal d with d_i a_ij = -d_j a_ji, normalized to 1 on the
/// first index of each connected block; none when no such d exists.
std::optional<std::vector<Rational>> skew_symmetrizer(const IntMatrix& a);

/// A seed in the row convention: matrix is n x (n+m), row k drives the
/// exchange of x_k.
struct ExchangeSeed {
    std::vector<std::string> cluster;
    std::vector<std::string> frozen;
    IntMatrix matrix;

    std::size_t rank() const { return cluster.size(); }
    std::string tag(std::size_t column) const;  // 0-based over cluster then frozen
};

/// Formal monomial over seed tags.
using TagMonomial = std::vector<std::pair<std::string, Integer>>;

struct ExchangeRelation {
    std::string old_variable;
    std::string new_variable;
    TagMonomial positive;  // prod x_i^{b_ki}, b_ki > 0
    TagMonomial negative;  // prod x_i^{-b_ki}, b_ki < 0
};

/// Adjacent seed in direction k (1-based): x_k is replaced by the tag
/// "x_k'" and the matrix is mutated. Throws IndexOutOfRange.
std::pair<ExchangeRelation, ExchangeSeed> exchange(const ExchangeSeed& seed, int k);

/// Transposes B(i) into the row convention; cluster tags x_k for the
/// column labels, frozen tags for the remaining row labels.
ExchangeSeed exchange_seed(const SeedMatrix& b);

std::string to_text(const ExchangeRelation& rel);

nlohmann::json to_json(const SeedMatrix& b);
nlohmann::json to_json(const IntMatrix& a);
nlohmann::json to_json(const ExchangeRelation& rel);

} // namespace monocrystal
