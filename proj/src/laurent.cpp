#include "monocrystal/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

namespace monocrystal {

std::string to_string(VarId v)
{
    return "Y[" + std::to_string(v.s) + "," + std::to_string(v.i) + "]";
}

Monomial::Monomial(VarId v, int exponent)
{
    if (exponent != 0)
        factors_.emplace_back(v, exponent);
}

Monomial::Monomial(std::initializer_list<Factor> factors)
    : Monomial(from_factors(std::vector<Factor>(factors)))
{
}

Monomial Monomial::from_factors(std::vector<Factor> factors)
{
    std::sort(factors.begin(), factors.end(),
              [](const Factor& a, const Factor& b) { return a.first < b.first; });
    Monomial out;
    for (const auto& [v, e] : factors) {
        if (!out.factors_.empty() && out.factors_.back().first == v)
            out.factors_.back().second += e;
        else
            out.factors_.emplace_back(v, e);
        if (out.factors_.back().second == 0)
            out.factors_.pop_back();
    }
    return out;
}

int Monomial::exponent(VarId v) const
{
    auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                               [](const Factor& f, VarId key) { return f.first < key; });
    return (it != factors_.end() && it->first == v) ? it->second : 0;
}

Monomial Monomial::inverse() const
{
    Monomial out = *this;
    for (auto& f : out.factors_)
        f.second = -f.second;
    return out;
}

Monomial Monomial::pow(int k) const
{
    if (k == 0)
        return {};
    Monomial out = *this;
    for (auto& f : out.factors_)
        f.second *= k;
    return out;
}

Monomial Monomial::restrict_color(int i) const
{
    Monomial out;
    for (const auto& f : factors_)
        if (f.first.i == i)
            out.factors_.push_back(f);
    return out;
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    Monomial out;
    auto& dst = out.factors_;
    dst.reserve(a.factors_.size() + b.factors_.size());
    auto ia = a.factors_.begin();
    auto ib = b.factors_.begin();
    while (ia != a.factors_.end() || ib != b.factors_.end()) {
        if (ib == b.factors_.end() || (ia != a.factors_.end() && ia->first < ib->first)) {
            dst.push_back(*ia++);
        } else if (ia == a.factors_.end() || ib->first < ia->first) {
            dst.push_back(*ib++);
        } else {
            int e = ia->second + ib->second;
            if (e != 0)
                dst.emplace_back(ia->first, e);
            ++ia;
            ++ib;
        }
    }
    return out;
}

Monomial mono_mul(const Monomial& a, const Monomial& b)
{
    return a * b;
}

bool CanonicalLess::operator()(const Monomial& a, const Monomial& b) const
{
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    auto ia = fa.rbegin();
    auto ib = fb.rbegin();
    while (ia != fa.rend() || ib != fb.rend()) {
        if (ib == fb.rend() || (ia != fa.rend() && ib->first < ia->first)) {
            // a carries a variable b lacks
            return ia->second > 0;
        }
        if (ia == fa.rend() || ia->first < ib->first)
            return ib->second < 0;
        if (ia->second != ib->second)
            return ia->second > ib->second;
        ++ia;
        ++ib;
    }
    return false;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept
{
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (const auto& [v, e] : m.factors()) {
        std::size_t x = static_cast<std::size_t>(static_cast<unsigned>(v.s)) * 0x100000001b3ULL
                        ^ static_cast<std::size_t>(v.i) << 20 ^ static_cast<std::size_t>(static_cast<unsigned>(e)) << 40;
        h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

// ---------------------------------------------------------------------------

LaurentPoly::LaurentPoly(long c)
{
    if (c != 0)
        terms_.emplace(Monomial{}, Integer(c));
}

LaurentPoly::LaurentPoly(const Integer& c)
{
    if (c != 0)
        terms_.emplace(Monomial{}, c);
}

LaurentPoly::LaurentPoly(const Monomial& m, const Integer& c)
{
    if (c != 0)
        terms_.emplace(m, c);
}

Integer LaurentPoly::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
}

bool LaurentPoly::free_of(VarId v) const
{
    return std::none_of(terms_.begin(), terms_.end(),
                        [&](const auto& t) { return t.first.exponent(v) != 0; });
}

void LaurentPoly::add_term(const Monomial& m, const Integer& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly out = *this;
    for (auto& t : out.terms_)
        t.second = -t.second;
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other)
{
    for (const auto& [m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other)
{
    for (const auto& [m, c] : other.terms_)
        add_term(m, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
{
    LaurentPoly out;
    if (a.is_zero() || b.is_zero())
        return out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            out.add_term(ma * mb, ca * cb);
    return out;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b)
{
    return a.terms_.size() == b.terms_.size() && std::equal(a.terms_.begin(), a.terms_.end(), b.terms_.begin());
}

LaurentPoly poly_add(const LaurentPoly& a, const LaurentPoly& b)
{
    return a + b;
}

LaurentPoly poly_mul(const LaurentPoly& a, const LaurentPoly& b)
{
    return a * b;
}

Rational mono_eval(const Monomial& m, const Assignment& at)
{
    Rational value = 1;
    for (const auto& [v, e] : m.factors()) {
        auto it = at.find(v);
        if (it == at.end())
            throw MissingAssignment("no value assigned to " + to_string(v));
        if (it->second == 0)
            throw ZeroAssignment("Laurent variable " + to_string(v) + " assigned zero");
        Rational base = e > 0 ? it->second : Rational(1) / it->second;
        Rational p;
        mpz_pow_ui(p.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(std::abs(e)));
        mpz_pow_ui(p.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(std::abs(e)));
        value *= p;
    }
    return value;
}

Rational poly_eval(const LaurentPoly& p, const Assignment& at)
{
    Rational sum = 0;
    for (const auto& [m, c] : p.terms())
        sum += Rational(c) * mono_eval(m, at);
    return sum;
}

// ---------------------------------------------------------------------------
// Text form

std::string to_text(const Monomial& m)
{
    if (m.is_one())
        return "1";
    std::string out;
    for (const auto& [v, e] : m.factors()) {
        if (!out.empty())
            out += '*';
        out += to_string(v);
        if (e != 1)
            out += "^" + std::to_string(e);
    }
    return out;
}

std::string to_text(const LaurentPoly& p)
{
    if (p.is_zero())
        return "0";
    std::string out;
    for (const auto& [m, c] : p.terms()) {
        if (!out.empty())
            out += " + ";
        if (m.is_one())
            out += c.get_str();
        else if (c == 1)
            out += to_text(m);
        else if (c == -1)
            out += "-" + to_text(m);
        else
            out += c.get_str() + "*" + to_text(m);
    }
    return out;
}

namespace {

class TextCursor {
public:
    explicit TextCursor(std::string_view text) : text_(text) {}

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    bool done()
    {
        skip_ws();
        return pos_ >= text_.size();
    }
    bool peek(char c)
    {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }
    bool accept(char c)
    {
        if (!peek(c))
            return false;
        ++pos_;
        return true;
    }
    void expect(char c)
    {
        if (!accept(c))
            fail(std::string("expected '") + c + "'");
    }
    bool peek_digit()
    {
        skip_ws();
        return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
    }
    std::string digits()
    {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected digits");
        return std::string(text_.substr(start, pos_ - start));
    }
    int signed_int()
    {
        bool neg = accept('-');
        if (!neg)
            accept('+');
        std::string d = digits();
        long value = 0;
        auto [ptr, ec] = std::from_chars(d.data(), d.data() + d.size(), value);
        if (ec != std::errc{} || value > std::numeric_limits<int>::max())
            fail("integer out of range");
        return static_cast<int>(neg ? -value : value);
    }
    [[noreturn]] void fail(const std::string& why) const
    {
        throw ParseError(why + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

// factor := 'Y' '[' int ',' int ']' ('^' int)?
Monomial::Factor parse_factor(TextCursor& cur)
{
    cur.expect('Y');
    cur.expect('[');
    int s = cur.signed_int();
    cur.expect(',');
    int i = cur.signed_int();
    cur.expect(']');
    if (i < 1)
        cur.fail("color must be >= 1");
    int e = 1;
    if (cur.accept('^')) {
        bool paren = cur.accept('(');
        e = cur.signed_int();
        if (paren)
            cur.expect(')');
    }
    return {VarId{s, i}, e};
}

Monomial parse_factors(TextCursor& cur)
{
    std::vector<Monomial::Factor> factors;
    factors.push_back(parse_factor(cur));
    while (cur.accept('*'))
        factors.push_back(parse_factor(cur));
    return Monomial::from_factors(std::move(factors));
}

// term := '-'? (coeff ('*' factors)? | factors)
std::pair<Monomial, Integer> parse_term(TextCursor& cur)
{
    Integer sign = cur.accept('-') ? -1 : 1;
    if (cur.peek_digit()) {
        Integer c(cur.digits());
        if (cur.accept('*'))
            return {parse_factors(cur), sign * c};
        return {Monomial{}, sign * c};
    }
    return {parse_factors(cur), sign};
}

} // namespace

Monomial parse_monomial(std::string_view text)
{
    TextCursor cur(text);
    if (cur.peek('1')) {
        auto [m, c] = parse_term(cur);
        if (c != 1 || !cur.done())
            cur.fail("not a monomial");
        return m;
    }
    Monomial m = parse_factors(cur);
    if (!cur.done())
        cur.fail("trailing input");
    return m;
}

LaurentPoly parse_poly(std::string_view text)
{
    TextCursor cur(text);
    LaurentPoly p;
    if (cur.done())
        cur.fail("empty polynomial");
    do {
        auto [m, c] = parse_term(cur);
        p.add_term(m, c);
    } while (cur.accept('+'));
    if (!cur.done())
        cur.fail("trailing input");
    return p;
}

// ---------------------------------------------------------------------------
// JSON form

nlohmann::json to_json(const Monomial& m)
{
    auto vars = nlohmann::json::array();
    for (const auto& [v, e] : m.factors())
        vars.push_back({v.s, v.i, e});
    return vars;
}

nlohmann::json to_json(const LaurentPoly& p)
{
    auto out = nlohmann::json::array();
    for (const auto& [m, c] : p.terms()) {
        nlohmann::json coeff;
        if (c.fits_slong_p())
            coeff = c.get_si();
        else
            coeff = c.get_str();
        out.push_back({{"coeff", coeff}, {"vars", to_json(m)}});
    }
    return out;
}

LaurentPoly poly_from_json(const nlohmann::json& j)
{
    if (!j.is_array())
        throw ParseError("polynomial JSON must be an array of terms");
    LaurentPoly p;
    for (const auto& term : j) {
        if (!term.is_object() || !term.contains("coeff") || !term.contains("vars"))
            throw ParseError("term needs 'coeff' and 'vars'");
        Integer c;
        const auto& cj = term.at("coeff");
        if (cj.is_number_integer())
            c = Integer(cj.get<long>());
        else if (cj.is_string())
            c = Integer(cj.get<std::string>());
        else
            throw ParseError("coeff must be an integer or decimal string");
        std::vector<Monomial::Factor> factors;
        for (const auto& v : term.at("vars")) {
            if (!v.is_array() || v.size() != 3)
                throw ParseError("var entries are [s, i, e]");
            int i = v[1].get<int>();
            if (i < 1)
                throw ParseError("color must be >= 1");
            factors.push_back({VarId{v[0].get<int>(), i}, v[2].get<int>()});
        }
        p.add_term(Monomial::from_factors(std::move(factors)), c);
    }
    return p;
}

} // namespace monocrystal
