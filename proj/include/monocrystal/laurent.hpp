#pragma once

// Exact Laurent monomials and polynomials in the doubly indexed variables
// Y[s,i] (s any integer, i a color >= 1), with big-integer coefficients and
// exact rational evaluation.

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "monocrystal/errors.hpp"

namespace monocrystal {

using Integer = mpz_class;
using Rational = mpq_class;

struct VarId {
    int s = 0;
    int i = 1;

    friend auto operator<=>(const VarId&, const VarId&) = default;
    friend bool operator==(const VarId&, const VarId&) = default;
};

std::string to_string(VarId v);

/// A Laurent monomial: finitely many variables with nonzero integer
/// exponents, stored sorted by VarId.
class Monomial {
public:
    using Factor = std::pair<VarId, int>;

    Monomial() = default;
    explicit Monomial(VarId v, int exponent = 1);
    Monomial(std::initializer_list<Factor> factors);

    /// Builds from arbitrary (possibly repeated, possibly zero) factors.
    static Monomial from_factors(std::vector<Factor> factors);

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }
    std::size_t size() const { return factors_.size(); }

    /// Exponent of v (0 when absent).
    int exponent(VarId v) const;

    Monomial inverse() const;
    Monomial pow(int k) const;

    /// The factors whose color equals i.
    Monomial restrict_color(int i) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend Monomial operator/(const Monomial& a, const Monomial& b) { return a * b.inverse(); }
    Monomial& operator*=(const Monomial& other) { return *this = *this * other; }

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<Factor> factors_;
};

Monomial mono_mul(const Monomial& a, const Monomial& b);

/// Canonical term order. Exponent vectors are compared starting from the
/// largest variable present; the larger exponent sorts first. For
/// tau-admissible variables this lists terms the way minors are usually
/// written, e.g. t2/t4 before t3t5/(t4t6) before 1/t9.
struct CanonicalLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

class LaurentPoly {
public:
    using TermMap = std::map<Monomial, Integer, CanonicalLess>;

    LaurentPoly() = default;
    LaurentPoly(long c);  // NOLINT(google-explicit-constructor): constants embed implicitly
    explicit LaurentPoly(const Integer& c);
    LaurentPoly(const Monomial& m, const Integer& c = 1);  // NOLINT

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Coefficient of m (0 when absent).
    Integer coefficient(const Monomial& m) const;

    /// True when no term mentions v.
    bool free_of(VarId v) const;

    void add_term(const Monomial& m, const Integer& c);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly& operator-=(const LaurentPoly& other);
    LaurentPoly& operator*=(const LaurentPoly& other) { return *this = *this * other; }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

private:
    TermMap terms_;
};

LaurentPoly poly_add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly poly_mul(const LaurentPoly& a, const LaurentPoly& b);

using Assignment = std::map<VarId, Rational>;

/// Exact value at a point. Every variable of p must be assigned a nonzero
/// rational; throws MissingAssignment / ZeroAssignment otherwise.
Rational poly_eval(const LaurentPoly& p, const Assignment& at);
Rational mono_eval(const Monomial& m, const Assignment& at);

// Canonical text form: factors `Y[s,i]^e` joined by `*` (exponent omitted
// when 1), terms joined by ` + `, coefficients prefixed as `c*`.
std::string to_text(const Monomial& m);
std::string to_text(const LaurentPoly& p);
Monomial parse_monomial(std::string_view text);
LaurentPoly parse_poly(std::string_view text);

// JSON form: [{"coeff": c, "vars": [[s,i,e], ...]}, ...]. Coefficients that
// do not fit in 64 bits are written as decimal strings.
nlohmann::json to_json(const Monomial& m);
nlohmann::json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const nlohmann::json& j);

} // namespace monocrystal

template <>
struct std::hash<monocrystal::Monomial> {
    std::size_t operator()(const monocrystal::Monomial& m) const noexcept
    {
        return monocrystal::MonomialHash{}(m);
    }
};
