#include "monocrystal/cluster.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <sstream>

namespace monocrystal {

namespace {

int sgn(long v)
{
    return (v > 0) - (v < 0);
}

int cartan_a(int i, int j)
{
    if (i == j)
        return 2;
    return std::abs(i - j) == 1 ? -1 : 0;
}

// The signed word on [-r,-1] and [1,n]; u letters negative.
class SignedWord {
public:
    explicit SignedWord(const WordSpec& w) : r_(w.rank()), letters_(w.letters()) {}

    int n() const { return static_cast<int>(letters_.size()); }

    int at(int k) const { return k < 0 ? k : -letters_[static_cast<std::size_t>(k - 1)]; }

    int successor(int k) const
    {
        const int color = std::abs(at(k));
        for (int l = k + 1; l <= n(); ++l) {
            if (l == 0)
                continue;
            if (std::abs(at(l)) == color)
                return l;
        }
        return n() + 1;
    }

    std::vector<int> indices() const
    {
        std::vector<int> out;
        for (int j = 1; j <= r_; ++j)
            out.push_back(-j);
        for (int k = 1; k <= n(); ++k)
            out.push_back(k);
        return out;
    }

private:
    int r_;
    std::vector<int> letters_;
};

long entry(const SignedWord& w, int k, int l)
{
    const int kp = w.successor(k);
    const int lp = w.successor(l);
    const int p = std::max(k, l);
    const int q = std::min(kp, lp);
    if (p == q)
        return -sgn(static_cast<long>(k - l) * w.at(p));
    if (p < q) {
        const long test = sgn(static_cast<long>(w.at(p)) * w.at(q)) * static_cast<long>(k - l) * (kp - lp);
        if (test > 0)
            return -sgn(static_cast<long>(k - l) * w.at(p) * cartan_a(std::abs(w.at(k)), std::abs(w.at(l))));
    }
    return 0;
}

std::size_t find_label(const std::vector<int>& labels, int label)
{
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end())
        throw IndexOutOfRange("index " + std::to_string(label) + " is not a label of this matrix");
    return static_cast<std::size_t>(it - labels.begin());
}

// Mutation where direction k sits at row kr and column kc.
IntMatrix mutate_at(const IntMatrix& a, std::size_t kr, std::size_t kc)
{
    IntMatrix out = a;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) {
            if (i == kr || j == kc) {
                out[i][j] = -a[i][j];
                continue;
            }
            const Integer& aik = a[i][kc];
            const Integer& akj = a[kr][j];
            out[i][j] = a[i][j] + (abs(aik) * akj + aik * abs(akj)) / 2;
        }
    return out;
}

void check_square(const IntMatrix& a)
{
    for (const auto& row : a)
        if (row.size() != a.size())
            throw Error("matrix must be square");
}

} // namespace

std::vector<int> e_set(const WordSpec& w)
{
    SignedWord sw(w);
    std::vector<int> out;
    for (int j = 1; j <= w.rank(); ++j)
        out.push_back(-j);
    for (int k = 1; k <= sw.n(); ++k)
        if (sw.successor(k) <= sw.n())
            out.push_back(k);
    return out;
}

const Integer& SeedMatrix::at(int k, int l) const
{
    return entries[find_label(rows, k)][find_label(cols, l)];
}

IntMatrix SeedMatrix::principal() const
{
    IntMatrix out(cols.size(), std::vector<Integer>(cols.size()));
    for (std::size_t a = 0; a < cols.size(); ++a)
        for (std::size_t b = 0; b < cols.size(); ++b)
            out[a][b] = at(cols[a], cols[b]);
    return out;
}

SeedMatrix seed_matrix(const WordSpec& w)
{
    SignedWord sw(w);
    SeedMatrix b;
    b.rows = sw.indices();
    b.cols = e_set(w);
    b.entries.assign(b.rows.size(), std::vector<Integer>(b.cols.size()));
    for (std::size_t a = 0; a < b.rows.size(); ++a)
        for (std::size_t c = 0; c < b.cols.size(); ++c)
            b.entries[a][c] = entry(sw, b.rows[a], b.cols[c]);
    return b;
}

IntMatrix mutate(const IntMatrix& a, int k)
{
    check_square(a);
    if (k < 1 || k > static_cast<int>(a.size()))
        throw IndexOutOfRange("mutation direction " + std::to_string(k) + " outside [1," + std::to_string(a.size())
                              + "]");
    auto idx = static_cast<std::size_t>(k - 1);
    return mutate_at(a, idx, idx);
}

SeedMatrix mutate(const SeedMatrix& b, int label)
{
    SeedMatrix out = b;
    out.entries = mutate_at(b.entries, find_label(b.rows, label), find_label(b.cols, label));
    return out;
}

bool is_sign_skew_symmetric(const IntMatrix& a)
{
    check_square(a);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i; j < a.size(); ++j) {
            if (i == j) {
                if (a[i][i] != 0)
                    return false;
                continue;
            }
            if ((a[i][j] == 0) != (a[j][i] == 0))
                return false;
            if (sgn(a[i][j]) * sgn(a[j][i]) > 0)
                return false;
        }
    return true;
}

std::optional<std::vector<Rational>> skew_symmetrizer(const IntMatrix& a)
{
    check_square(a);
    if (!is_sign_skew_symmetric(a))
        return std::nullopt;
    const std::size_t n = a.size();
    std::vector<Rational> d(n, Rational(0));
    for (std::size_t root = 0; root < n; ++root) {
        if (d[root] != 0)
            continue;
        d[root] = 1;
        std::deque<std::size_t> queue{root};
        while (!queue.empty()) {
            std::size_t i = queue.front();
            queue.pop_front();
            for (std::size_t j = 0; j < n; ++j) {
                if (a[i][j] == 0)
                    continue;
                Rational want = -d[i] * Rational(a[i][j]) / Rational(a[j][i]);
                if (d[j] == 0) {
                    d[j] = want;
                    queue.push_back(j);
                } else if (d[j] != want) {
                    return std::nullopt;
                }
            }
        }
    }
    return d;
}

std::string ExchangeSeed::tag(std::size_t column) const
{
    return column < cluster.size() ? cluster[column] : frozen.at(column - cluster.size());
}

std::pair<ExchangeRelation, ExchangeSeed> exchange(const ExchangeSeed& seed, int k)
{
    const std::size_t n = seed.rank();
    if (k < 1 || k > static_cast<int>(n))
        throw IndexOutOfRange("exchange direction " + std::to_string(k) + " outside [1," + std::to_string(n) + "]");
    const auto row = static_cast<std::size_t>(k - 1);
    const auto& b = seed.matrix.at(row);
    if (b.size() != n + seed.frozen.size())
        throw Error("exchange matrix must have n + m columns");

    ExchangeRelation rel;
    rel.old_variable = seed.cluster[row];
    rel.new_variable = rel.old_variable + "'";
    for (std::size_t c = 0; c < b.size(); ++c) {
        if (b[c] > 0)
            rel.positive.emplace_back(seed.tag(c), b[c]);
        else if (b[c] < 0)
            rel.negative.emplace_back(seed.tag(c), -b[c]);
    }

    ExchangeSeed next = seed;
    next.cluster[row] = rel.new_variable;
    next.matrix = mutate_at(seed.matrix, row, row);
    return {rel, next};
}

ExchangeSeed exchange_seed(const SeedMatrix& b)
{
    auto tag = [](int k) { return "x[" + std::to_string(k) + "]"; };
    ExchangeSeed seed;
    std::vector<int> order = b.cols;
    for (int k : b.cols)
        seed.cluster.push_back(tag(k));
    for (int k : b.rows)
        if (std::find(b.cols.begin(), b.cols.end(), k) == b.cols.end()) {
            seed.frozen.push_back(tag(k));
            order.push_back(k);
        }
    for (int k : b.cols) {
        std::vector<Integer> row;
        for (int l : order)
            row.push_back(b.at(l, k));
        seed.matrix.push_back(std::move(row));
    }
    return seed;
}

namespace {

std::string tag_product(const TagMonomial& m)
{
    if (m.empty())
        return "1";
    std::ostringstream os;
    for (std::size_t a = 0; a < m.size(); ++a) {
        if (a > 0)
            os << '*';
        os << m[a].first;
        if (m[a].second != 1)
            os << '^' << m[a].second;
    }
    return os.str();
}

nlohmann::json integer_json(const Integer& x)
{
    if (x.fits_slong_p())
        return x.get_si();
    return x.get_str();
}

nlohmann::json tag_json(const TagMonomial& m)
{
    auto out = nlohmann::json::array();
    for (const auto& [tag, e] : m)
        out.push_back({tag, integer_json(e)});
    return out;
}

} // namespace

std::string to_text(const ExchangeRelation& rel)
{
    return rel.old_variable + "*" + rel.new_variable + " = " + tag_product(rel.positive) + " + "
           + tag_product(rel.negative);
}

nlohmann::json to_json(const IntMatrix& a)
{
    auto out = nlohmann::json::array();
    for (const auto& row : a) {
        auto jr = nlohmann::json::array();
        for (const Integer& x : row)
            jr.push_back(integer_json(x));
        out.push_back(jr);
    }
    return out;
}

nlohmann::json to_json(const SeedMatrix& b)
{
    return {{"rows", b.rows}, {"cols", b.cols}, {"entries", to_json(b.entries)}};
}

nlohmann::json to_json(const ExchangeRelation& rel)
{
    return {{"old", rel.old_variable},
            {"new", rel.new_variable},
            {"positive", tag_json(rel.positive)},
            {"negative", tag_json(rel.negative)}};
}

} // namespace monocrystal
