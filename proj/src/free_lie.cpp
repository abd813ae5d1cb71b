#include "loopdec/free_lie.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace loopdec {

namespace {

int moebius(int n)
{
    int result = 1;
    for (int d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            n /= d;
            if (n % d == 0)
                return 0;  // square factor
            result = -result;
        }
    }
    if (n > 1)
        result = -result;
    return result;
}

Int binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    Int b = 1;
    for (int i = 0; i < k; ++i) {
        b *= n - i;
        b /= i + 1;  // exact: product of j consecutive integers is divisible by j!
    }
    return b;
}

Int multinomial(const std::vector<int>& parts)
{
    Int result = 1;
    int total = 0;
    for (int part : parts) {
        total += part;
        result *= binomial(total, part);
    }
    return result;
}

}  // namespace

bool is_lyndon(const Word& w)
{
    if (w.empty())
        return false;
    for (size_t r = 1; r < w.size(); ++r) {
        Word rot(w.begin() + static_cast<long>(r), w.end());
        rot.insert(rot.end(), w.begin(), w.begin() + static_cast<long>(r));
        if (!(w < rot))
            return false;
    }
    return true;
}

std::vector<Word> lyndon_words(int m, int max_len)
{
    if (m < 1 || max_len < 1)
        throw std::invalid_argument("lyndon_words: need m >= 1 and max_len >= 1");
    /* Duval's iteration: from a Lyndon word w, extend to the periodic word
     * w w w ... cut at max_len, strip trailing copies of the largest letter,
     * increment the last letter. Visits every Lyndon word once, in lex
     * order. */
    std::vector<Word> out;
    Word w{0};
    while (true) {
        out.push_back(w);
        Word t = w;
        while (static_cast<int>(w.size()) < max_len)
            w.push_back(t[w.size() % t.size()]);
        while (!w.empty() && w.back() == m - 1)
            w.pop_back();
        if (w.empty())
            break;
        ++w.back();
    }
    std::stable_sort(out.begin(), out.end(), LengthLexLess{});
    return out;
}

std::vector<int> multidegree(const Word& w, int m)
{
    std::vector<int> alpha(static_cast<size_t>(m), 0);
    for (int g : w) {
        if (g < 0 || g >= m)
            throw std::out_of_range("letter " + std::to_string(g) + " outside alphabet");
        ++alpha[static_cast<size_t>(g)];
    }
    return alpha;
}

Int witt_count(int m, int n)
{
    if (n < 1)
        throw std::invalid_argument("witt_count: n must be >= 1");
    Int sum = 0;
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0)
            continue;
        Int power = 1;
        for (int i = 0; i < n / d; ++i)
            power *= m;
        sum += moebius(d) * power;
    }
    Int count = sum / n;
    if (count * n != sum)
        throw std::logic_error("witt_count: sum not divisible by n");
    return count;
}

Int witt_count_multi(const std::vector<int>& alpha)
{
    int total = 0, g = 0;
    for (int a : alpha) {
        if (a < 0)
            throw std::invalid_argument("witt_count_multi: negative multiplicity");
        total += a;
        g = std::gcd(g, a);
    }
    if (total == 0)
        throw std::invalid_argument("witt_count_multi: zero multidegree");
    Int sum = 0;
    for (int d = 1; d <= g; ++d) {
        if (g % d != 0)
            continue;
        std::vector<int> parts;
        parts.reserve(alpha.size());
        for (int a : alpha)
            parts.push_back(a / d);
        sum += moebius(d) * multinomial(parts);
    }
    Int count = sum / total;
    if (count * total != sum)
        throw std::logic_error("witt_count_multi: sum not divisible by |alpha|");
    return count;
}

Bracketing standard_bracketing(const Word& w)
{
    if (!is_lyndon(w))
        throw std::invalid_argument("standard_bracketing: input is not a Lyndon word");
    if (w.size() == 1) {
        Bracketing leaf;
        leaf.leaf = w[0];
        return leaf;
    }
    /* Standard factorization w = u v, v the longest proper Lyndon suffix;
     * u is then Lyndon as well. */
    size_t split = w.size() - 1;
    for (size_t s = 1; s < w.size(); ++s) {
        if (is_lyndon(Word(w.begin() + static_cast<long>(s), w.end()))) {
            split = s;
            break;
        }
    }
    Bracketing node;
    node.left = std::make_unique<Bracketing>(
        standard_bracketing(Word(w.begin(), w.begin() + static_cast<long>(split))));
    node.right = std::make_unique<Bracketing>(
        standard_bracketing(Word(w.begin() + static_cast<long>(split), w.end())));
    return node;
}

std::string to_string(const Bracketing& b, const TensorContext& ctx)
{
    if (b.is_leaf())
        return ctx.generator(b.leaf).name;
    return "[" + to_string(*b.left, ctx) + "," + to_string(*b.right, ctx) + "]";
}

Word bracketing_word(const Bracketing& b)
{
    if (b.is_leaf())
        return {b.leaf};
    Word w = bracketing_word(*b.left);
    Word right = bracketing_word(*b.right);
    w.insert(w.end(), right.begin(), right.end());
    return w;
}

TensorElement expand(const Bracketing& b, const TensorContext& ctx)
{
    if (b.is_leaf())
        return TensorElement::generator(ctx, b.leaf);
    TensorElement x = expand(*b.left, ctx);
    TensorElement y = expand(*b.right, ctx);
    TensorElement xy = concat_product(x, y);
    if (xy.truncated())
        throw std::out_of_range("bracket expansion exceeds the length cutoff");
    xy -= concat_product(y, x);
    return xy;
}

Subspace lie_power_subspace(const TensorContext& ctx, int n)
{
    if (n < 1 || n > ctx.max_length())
        throw std::invalid_argument("lie_power_subspace: length outside [1, max_length]");
    const int m = ctx.num_generators();
    std::vector<Word> words;
    for (const Word& w : lyndon_words(m, n))
        if (static_cast<int>(w.size()) == n)
            words.push_back(w);
    FpMatrix rows(ctx.field(), static_cast<int>(words.size()),
                  static_cast<int>(ctx.words_of_length(n)));
    for (size_t i = 0; i < words.size(); ++i) {
        TensorElement x = expand(standard_bracketing(words[i]), ctx);
        for (const auto& [w, c] : x.terms())
            rows.set(static_cast<int>(i), static_cast<int>(ctx.word_rank(w)), c);
    }
    Subspace span = Subspace::span(rows);
    if (span.dim() != witt_count(m, n))
        throw std::logic_error("Lyndon expansions of length " + std::to_string(n) +
                               " have rank " + std::to_string(span.dim()) +
                               ", Witt count says " + witt_count(m, n).str());
    return span;
}

namespace {

PbwReport report_from(TruncatedSeries lhs, TruncatedSeries rhs)
{
    std::optional<int> mismatch = first_difference(lhs, rhs);
    const bool ok = !mismatch.has_value();
    return {std::move(lhs), std::move(rhs), mismatch, ok};
}

}  // namespace

PbwReport pbw_series_check(int m, int cutoff)
{
    TruncatedSeries lhs = geometric_inverse(TruncatedSeries::monomial(1, cutoff, m));
    TruncatedSeries rhs = TruncatedSeries::one(cutoff);
    for (int n = 1; n <= cutoff; ++n) {
        const Int w = witt_count(m, n);
        if (w > std::numeric_limits<int>::max())
            throw std::overflow_error("Witt count at length " + std::to_string(n) +
                                      " too large for a power exponent");
        TruncatedSeries factor = TruncatedSeries::one(cutoff);
        factor.set_coeff(n, -1);
        rhs = mul(rhs, pow(unit_inverse(factor), static_cast<int>(w)));
    }
    return report_from(std::move(lhs), std::move(rhs));
}

PbwReport pbw_series_check(const TensorContext& ctx, int cutoff)
{
    if (cutoff > ctx.max_degree())
        throw std::invalid_argument("cutoff exceeds the context degree bound");
    TruncatedSeries v(cutoff);
    for (int i = 0; i < ctx.num_generators(); ++i) {
        const int d = ctx.generator(i).degree;
        if (d <= cutoff)
            v.set_coeff(d, v.coeff(d) + 1);
    }
    TruncatedSeries lhs = geometric_inverse(v);

    /* Lyndon words of internal degree <= cutoff have length <= cutoff /
     * min generator degree; each contributes a polynomial factor
     * 1/(1 - t^deg), the symmetric algebra on one even class. */
    const int max_len = cutoff / ctx.min_generator_degree();
    std::map<int, int> count_by_degree;
    for (const Word& w : lyndon_words(ctx.num_generators(), std::max(1, max_len))) {
        const int d = ctx.internal_degree(w);
        if (d <= cutoff)
            ++count_by_degree[d];
    }
    TruncatedSeries rhs = TruncatedSeries::one(cutoff);
    for (const auto& [d, count] : count_by_degree) {
        TruncatedSeries factor = TruncatedSeries::one(cutoff);
        factor.set_coeff(d, -1);
        rhs = mul(rhs, pow(unit_inverse(factor), count));
    }
    return report_from(std::move(lhs), std::move(rhs));
}

}  // namespace loopdec
