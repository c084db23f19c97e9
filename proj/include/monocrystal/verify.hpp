#pragma once

// Cross-module identity sweeps. Each check runs over every instance in its
// range and stops at the first counterexample, which it reports in detail.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "monocrystal/bruhat.hpp"
#include "monocrystal/cluster.hpp"
#include "monocrystal/crystal.hpp"
#include "monocrystal/paths.hpp"

namespace monocrystal {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::size_t instances = 0;
    std::string detail;  // first failure, or a short summary

    std::string line() const;
};

inline constexpr std::uint64_t kDefaultSeed = 20130529;

/// Nonzero rationals p/q with |p|, q in [1, 9].
Rational random_rational(std::mt19937_64& rng);

/// a_1..a_r random, a_{r+1} = 1 / (a_1 ... a_r).
Torus random_torus(int r, std::mt19937_64& rng);

/// A nonzero value for every position of the word.
Assignment random_point(const WordSpec& w, std::mt19937_64& rng);

/// Lowest-weight seed 1 / (Y[m-1,d] ... Y[m',d]) and the prefix word of k.
DemazureSpec demazure_spec_of(const MinorSpec& spec);

/// First violated crystal axiom on the graph, if any.
std::optional<std::string> crystal_axiom_violation(const CrystalConfig& cfg, const CrystalGraph& g);

/// All pairs (word, k) with i_k = i_n, for 2 <= r <= max_r.
std::vector<MinorSpec> demazure_instances(int min_r, int max_r);

CheckResult verify_demazure_minors(int min_r, int max_r);
CheckResult verify_path_sums(int max_r);
CheckResult verify_closed_forms(int max_r);
CheckResult verify_d1_closed_form(int max_r);
CheckResult verify_torus_minors(int max_r, int samples, std::uint64_t seed = kDefaultSeed);
CheckResult verify_coordinate_change(int max_r, int samples, std::uint64_t seed = kDefaultSeed);
CheckResult verify_truncation(int max_r);
CheckResult verify_axioms(int max_r);
CheckResult verify_cluster(int max_r, int trials, std::uint64_t seed = kDefaultSeed);

/// Runs a check by CLI name (thm5-5, prop6-1, prop6-10, thm5-6, prop5-1,
/// prop2-4, truncation, axioms, cluster); none for an unknown name.
std::optional<CheckResult> run_check(const std::string& name, int max_r);
std::vector<std::string> check_names();

} // namespace monocrystal
