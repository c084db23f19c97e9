#pragma once

// Lattice paths X_d(m, m'): directed paths
//   (m; 1..d) -> (m-1; a^(1)) -> ... -> (0; m'+1..m'+d)
// where each coordinate stays or moves up by one and rows stay strictly
// increasing. Labels are products of the edge monomials
//   prod_i Y[m-s-1, a^(s+1)_i - 1] / Y[m-s-1, a^(s)_i]
// with Y[q,0] = Y[q,r+1] = 1.

#include <string>
#include <vector>

#include <json.hpp>

#include "monocrystal/bruhat.hpp"
#include "monocrystal/crystal.hpp"
#include "monocrystal/laurent.hpp"

namespace monocrystal {

struct PathSpec {
    int d = 1;
    int m = 1;
    int mprime = 1;

    /// Throws InvalidPathSpec unless d >= 1 and 1 <= m' <= m.
    void validate() const;

    /// d = i_k, m' = cycle of k, m = cycle of the last occurrence of d; the
    /// letters after it do not change the minor.
    static PathSpec from_minor(const MinorSpec& spec);

    friend bool operator==(const PathSpec&, const PathSpec&) = default;
};

/// rows[s][i-1] = a^(s)_i for 0 <= s <= m.
struct Path {
    std::vector<std::vector<int>> rows;

    int at(int s, int i) const { return rows.at(static_cast<std::size_t>(s)).at(static_cast<std::size_t>(i - 1)); }

    friend bool operator==(const Path&, const Path&) = default;
    friend auto operator<=>(const Path&, const Path&) = default;
};

/// q[j-1][i-1] = q^(j)_i (stationary steps), k[j-1][i-1] = a^(q)_i at them.
struct PathStats {
    std::vector<std::vector<int>> q;
    std::vector<std::vector<int>> k;
};

bool is_valid_path(const PathSpec& spec, const Path& p);

/// All paths, lexicographic in the flattened rows.
std::vector<Path> enumerate(const PathSpec& spec);

/// Y[q,j] with the boundary convention; throws RankTooSmall outside the
/// tau-admissible range. Returns the empty monomial for j = 0 or r+1.
Monomial boundary_var(int r, int q, int j);

Monomial edge_label(const PathSpec& spec, const Path& p, int s, int r);
Monomial label(const PathSpec& spec, const Path& p, int r);
LaurentPoly path_sum(const PathSpec& spec, int r);

PathStats stats(const PathSpec& spec, const Path& p);

/// Inverse of stats: the path whose stationary steps are
/// q^(j)_i = K^(j)_i + j - i - 1. Throws InvalidPathSpec when K is not
/// admissible.
Path rebuild(const PathSpec& spec, const std::vector<std::vector<int>>& K);

/// Every K-array satisfying
///   K^(j)_1 < ... < K^(j)_d <= m'+d   and   i <= K^(1)_i <= ... <= K^(m-m')_i <= m'+i.
std::vector<std::vector<std::vector<int>>> admissible_k_arrays(const PathSpec& spec);

/// C(a,b) = Y[a,b-1] / Y[a,b].
Monomial c_bar(int r, int a, int b);

/// Sum over admissible K of prod_{i,j} C(m - K^(j)_i - j + i, K^(j)_i).
LaurentPoly closed_form_sum(const PathSpec& spec, int r);

/// The d = 1 double-product formula over 0 <= j_1 < ... < j_{m'} <= m-1.
LaurentPoly d1_closed_form(int m, int mprime, int r);

nlohmann::json to_json(const CrystalConfig& cfg, const PathSpec& spec, const std::vector<Path>& paths);

/// The union of all paths as a graph; vertices "(m-s; a^(s))", edges
/// labelled by their tau-rendered monomial.
std::string to_dot(const CrystalConfig& cfg, const PathSpec& spec, const std::vector<Path>& paths);

} // namespace monocrystal
