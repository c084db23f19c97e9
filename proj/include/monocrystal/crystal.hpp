#pragma once

// Monomial realization of type A_r crystals. Monomials in Y[s,i] carry the
// crystal structure attached to the sign set p_{j,i} = 1 (j < i), 0 (j > i):
//
//   wt(Y)     = sum_{s,i} z_{s,i} L_i
//   phi_i(Y)  = max_s sum_{k<=s} z_{k,i}          (the empty sum 0 included)
//   eps_i(Y)  = phi_i(Y) - wt(Y)(h_i)
//   f_i Y     = A_{n_f,i}^{-1} Y  when phi_i > 0,  n_f = first s attaining phi_i
//   e_i Y     = A_{n_e,i} Y       when eps_i > 0,  n_e = last s attaining phi_i
//
// with A_{s,i} = Y[s,i] Y[s+1,i] / (Y[s,i+1] Y[s+1,i-1]), boundary factors
// dropped for i = 1 and i = r.

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "monocrystal/laurent.hpp"

namespace monocrystal {

class CrystalConfig {
public:
    explicit CrystalConfig(int rank);

    /// Accepts an explicit sign matrix (1-based, p[j][i] for j != i) and
    /// rejects anything but the supported choice with UnsupportedSignSet.
    static CrystalConfig with_signs(int rank, const std::vector<std::vector<int>>& p);

    int rank() const { return rank_; }
    int p(int j, int i) const { return j < i ? 1 : 0; }
    int cartan(int i, int j) const;
    void check_color(int i) const;

private:
    int rank_;
};

/// Coefficients in the fundamental weight basis; pairing with h_i reads
/// entry i directly.
struct Weight {
    std::vector<int> coeffs;

    int pair(int i) const { return coeffs.at(static_cast<std::size_t>(i - 1)); }
    static Weight zero(int rank) { return Weight{std::vector<int>(static_cast<std::size_t>(rank), 0)}; }
    static Weight fundamental(int rank, int i);
    static Weight simple_root(const CrystalConfig& cfg, int i);

    Weight& operator+=(const Weight& o);
    Weight& operator-=(const Weight& o);
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator*(int k, Weight a);
    friend bool operator==(const Weight&, const Weight&) = default;
};

struct CrystalNode {
    Monomial monomial;
    Weight wt;
    std::vector<int> phi;  // phi[i-1]
    std::vector<int> eps;

    int phi_at(int i) const { return phi.at(static_cast<std::size_t>(i - 1)); }
    int eps_at(int i) const { return eps.at(static_cast<std::size_t>(i - 1)); }
};

Monomial a_monomial(const CrystalConfig& cfg, int s, int i);
Weight weight_of(const CrystalConfig& cfg, const Monomial& m);
CrystalNode node_stats(const CrystalConfig& cfg, const Monomial& m);

std::optional<Monomial> apply_e(const CrystalConfig& cfg, const Monomial& m, int i);
std::optional<Monomial> apply_f(const CrystalConfig& cfg, const Monomial& m, int i);

/// Applies e_i k times; none as soon as one step vanishes.
std::optional<Monomial> apply_e_pow(const CrystalConfig& cfg, Monomial m, int i, int k);

inline constexpr std::size_t kDefaultCap = 100000;

struct CrystalEdge {
    std::size_t from;  // f_color(nodes[from]) == nodes[to]
    int color;
    std::size_t to;

    friend bool operator==(const CrystalEdge&, const CrystalEdge&) = default;
};

struct CrystalGraph {
    std::vector<Monomial> nodes;
    std::vector<CrystalEdge> edges;

    std::optional<std::size_t> index_of(const Monomial& m) const;
};

/// Connected component of seed under all e_i, f_i, explored breadth first.
/// Nodes appear in discovery order; from each node f_1..f_r are tried before
/// e_1..e_r. Throws CapExceeded when more than cap nodes are reached.
CrystalGraph component(const CrystalConfig& cfg, const Monomial& seed, std::size_t cap = kDefaultCap);

enum class DemazureSign { plus, minus };

struct DemazureSpec {
    std::vector<int> word;  // reduced word (i_1, ..., i_n) of w
    DemazureSign sign = DemazureSign::minus;
    Monomial seed;          // highest (plus) or lowest (minus) monomial
};

void validate(const CrystalConfig& cfg, const DemazureSpec& spec);

/// Demazure crystal {X_{i_1}^{a_1} ... X_{i_n}^{a_n} seed} with X = e (minus)
/// or f (plus), built right to left over the word. Sorted canonically.
std::vector<Monomial> demazure(const CrystalConfig& cfg, const DemazureSpec& spec,
                               std::size_t cap = kDefaultCap);

/// Sum of the Demazure crystal's monomials with unit coefficients.
LaurentPoly demazure_polynomial(const CrystalConfig& cfg, const DemazureSpec& spec,
                                std::size_t cap = kDefaultCap);

// tau renaming: Y[s,j] -> tau_{l_s + j} for s >= 0, j <= r - s, where
// l_s = r + (r-1) + ... + (r-s+1); Y[-1,j] -> tau_{-(r+1-j)}.
int tau_offset(int rank, int s);
int tau_index(int rank, VarId v);
VarId var_of_tau(int rank, int k);
bool tau_renderable(int rank, VarId v);

std::string tau_render(const CrystalConfig& cfg, const Monomial& m);
std::string tau_render(const CrystalConfig& cfg, const LaurentPoly& p);

enum class LabelStyle { tau, y };

/// Node label; tau style falls back to the Y text for monomials with
/// variables outside the tau range.
std::string node_label(const CrystalConfig& cfg, const Monomial& m, LabelStyle style);

std::string to_dot(const CrystalConfig& cfg, const CrystalGraph& g, LabelStyle style = LabelStyle::tau);
nlohmann::json to_json(const CrystalGraph& g);

} // namespace monocrystal
