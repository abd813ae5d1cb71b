#include "loopdec/tensor_hopf.hpp"

#include <algorithm>
#include <sstream>

namespace loopdec {

bool LengthLexLess::operator()(const Word& a, const Word& b) const
{
    if (a.size() != b.size())
        return a.size() < b.size();
    return a < b;
}

TensorContext::TensorContext(std::vector<Generator> generators, PrimeField field,
                             int max_length, int max_degree)
    : generators_(std::move(generators)), field_(field), max_length_(max_length),
      max_degree_(max_degree)
{
    if (generators_.empty())
        throw std::invalid_argument("context needs at least one generator");
    if (max_length_ < 1)
        throw std::invalid_argument("max_length must be >= 1");
    int max_gen_degree = 0;
    for (size_t i = 0; i < generators_.size(); ++i) {
        if (generators_[i].degree < 1)
            throw std::invalid_argument("generator " + generators_[i].name +
                                        " has nonpositive internal degree");
        for (size_t j = i + 1; j < generators_.size(); ++j)
            if (generators_[i].name == generators_[j].name)
                throw std::invalid_argument("duplicate generator name " + generators_[i].name);
        max_gen_degree = std::max(max_gen_degree, generators_[i].degree);
    }
    if (max_degree_ < max_length_ * max_gen_degree)
        throw std::invalid_argument(
            "max_degree " + std::to_string(max_degree_) + " cannot host every word: need >= " +
            std::to_string(max_length_ * max_gen_degree));
    words_of_length(max_length_);  // overflow check up front
}

const Generator& TensorContext::generator(int i) const
{
    if (i < 0 || i >= num_generators())
        throw std::out_of_range("generator index " + std::to_string(i));
    return generators_[static_cast<size_t>(i)];
}

int TensorContext::internal_degree(const Word& w) const
{
    int d = 0;
    for (int g : w)
        d += generator(g).degree;
    return d;
}

int TensorContext::min_generator_degree() const
{
    int d = generators_[0].degree;
    for (const Generator& g : generators_)
        d = std::min(d, g.degree);
    return d;
}

long long TensorContext::words_of_length(int n) const
{
    if (n < 0)
        throw std::invalid_argument("word length must be >= 0");
    long long count = 1;
    for (int i = 0; i < n; ++i) {
        if (count > (1LL << 40) / num_generators())
            throw std::overflow_error("word count m^" + std::to_string(n) +
                                      " exceeds the dense-basis budget");
        count *= num_generators();
    }
    return count;
}

long long TensorContext::word_rank(const Word& w) const
{
    long long rank = 0;
    for (int g : w) {
        if (g < 0 || g >= num_generators())
            throw std::out_of_range("generator index " + std::to_string(g) + " in word");
        rank = rank * num_generators() + g;
    }
    return rank;
}

Word TensorContext::word_unrank(int length, long long rank) const
{
    Word w(static_cast<size_t>(length));
    for (int i = length - 1; i >= 0; --i) {
        w[static_cast<size_t>(i)] = static_cast<int>(rank % num_generators());
        rank /= num_generators();
    }
    if (rank != 0)
        throw std::out_of_range("rank exceeds word count at length " + std::to_string(length));
    return w;
}

TensorElement::TensorElement(const TensorContext& ctx) : ctx_(&ctx) {}

TensorElement TensorElement::unit(const TensorContext& ctx)
{
    TensorElement x(ctx);
    x.add_term({}, 1);
    return x;
}

TensorElement TensorElement::generator(const TensorContext& ctx, int i)
{
    ctx.generator(i);
    TensorElement x(ctx);
    x.add_term({i}, 1);
    return x;
}

TensorElement TensorElement::single_word(const TensorContext& ctx, const Word& w, long long c)
{
    TensorElement x(ctx);
    x.add_term(w, c);
    return x;
}

long long TensorElement::coeff(const Word& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
}

void TensorElement::add_term(const Word& w, long long c)
{
    if (static_cast<int>(w.size()) > ctx_->max_length())
        throw std::out_of_range("word of length " + std::to_string(w.size()) +
                                " exceeds the length cutoff " +
                                std::to_string(ctx_->max_length()));
    ctx_->word_rank(w);  // validates generator indices
    const long long v = ctx_->field().add(coeff(w), ctx_->field().reduce(c));
    if (v == 0)
        terms_.erase(w);
    else
        terms_[w] = v;
}

TensorElement& TensorElement::operator+=(const TensorElement& rhs)
{
    if (ctx_ != rhs.ctx_)
        throw std::invalid_argument("elements of different contexts");
    for (const auto& [w, c] : rhs.terms_)
        add_term(w, c);
    truncated_ = truncated_ || rhs.truncated_;
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& rhs)
{
    if (ctx_ != rhs.ctx_)
        throw std::invalid_argument("elements of different contexts");
    for (const auto& [w, c] : rhs.terms_)
        add_term(w, ctx_->field().neg(c));
    truncated_ = truncated_ || rhs.truncated_;
    return *this;
}

TensorElement& TensorElement::operator*=(long long scalar)
{
    scalar = ctx_->field().reduce(scalar);
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, c] : terms_)
        c = ctx_->field().mul(c, scalar);
    return *this;
}

bool operator==(const TensorElement& a, const TensorElement& b)
{
    return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
}

TensorElement concat_product(const TensorElement& a, const TensorElement& b)
{
    if (a.ctx_ != b.ctx_)
        throw std::invalid_argument("elements of different contexts");
    const TensorContext& ctx = *a.ctx_;
    TensorElement r(ctx);
    r.truncated_ = a.truncated_ || b.truncated_;
    for (const auto& [wa, ca] : a.terms()) {
        for (const auto& [wb, cb] : b.terms()) {
            if (static_cast<int>(wa.size() + wb.size()) > ctx.max_length()) {
                r.truncated_ = true;
                continue;
            }
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add_term(w, ctx.field().mul(ca, cb));
        }
    }
    return r;
}

std::string to_string(const TensorElement& x)
{
    if (x.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : x.terms()) {
        if (!first)
            out << "\n";
        first = false;
        out << c << " ·";
        if (w.empty()) {
            out << " 1";
        } else {
            for (int g : w)
                out << " " << x.context().generator(g).name;
        }
    }
    return out.str();
}

TensorSquareElement::TensorSquareElement(const TensorContext& ctx) : ctx_(&ctx) {}

long long TensorSquareElement::coeff(const Word& left, const Word& right) const
{
    auto it = terms_.find({left, right});
    return it == terms_.end() ? 0 : it->second;
}

void TensorSquareElement::add_term(const Word& left, const Word& right, long long c)
{
    if (static_cast<int>(left.size()) > ctx_->max_length() ||
        static_cast<int>(right.size()) > ctx_->max_length())
        throw std::out_of_range("tensor factor exceeds the length cutoff");
    const long long v = ctx_->field().add(coeff(left, right), ctx_->field().reduce(c));
    auto key = std::make_pair(left, right);
    if (v == 0)
        terms_.erase(key);
    else
        terms_[key] = v;
}

bool operator==(const TensorSquareElement& a, const TensorSquareElement& b)
{
    return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
}

TensorSquareElement coproduct(const TensorElement& x)
{
    const TensorContext& ctx = x.context();
    TensorSquareElement r(ctx);
    for (const auto& [w, c] : x.terms()) {
        const int n = static_cast<int>(w.size());
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            Word left, right;
            for (int i = 0; i < n; ++i) {
                if (mask & (1u << i))
                    left.push_back(w[static_cast<size_t>(i)]);
                else
                    right.push_back(w[static_cast<size_t>(i)]);
            }
            r.add_term(left, right, c);
        }
    }
    return r;
}

TensorSquareElement square_product(const TensorSquareElement& a, const TensorSquareElement& b)
{
    if (&a.context() != &b.context())
        throw std::invalid_argument("elements of different contexts");
    const TensorContext& ctx = a.context();
    TensorSquareElement r(ctx);
    for (const auto& [pa, ca] : a.terms()) {
        for (const auto& [pb, cb] : b.terms()) {
            if (static_cast<int>(pa.first.size() + pb.first.size()) > ctx.max_length() ||
                static_cast<int>(pa.second.size() + pb.second.size()) > ctx.max_length())
                continue;
            Word left = pa.first;
            left.insert(left.end(), pb.first.begin(), pb.first.end());
            Word right = pa.second;
            right.insert(right.end(), pb.second.begin(), pb.second.end());
            r.add_term(left, right, ctx.field().mul(ca, cb));
        }
    }
    return r;
}

TensorSquareElement tensor_pair(const TensorElement& a, const TensorElement& b)
{
    if (&a.context() != &b.context())
        throw std::invalid_argument("elements of different contexts");
    TensorSquareElement r(a.context());
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms())
            r.add_term(wa, wb, a.context().field().mul(ca, cb));
    return r;
}

Subspace primitives(const TensorContext& ctx, int n)
{
    if (n < 1 || n > ctx.max_length())
        throw std::invalid_argument("primitives: length " + std::to_string(n) +
                                    " outside [1, " + std::to_string(ctx.max_length()) + "]");
    const long long cols = ctx.words_of_length(n);
    /* Rows of the reduced coproduct: bidegree (i, n-i) blocks of word pairs,
     * i = 1..n-1. The (0, n) and (n, 0) parts cancel against x⊗1 + 1⊗x. */
    const long long block = cols;
    FpMatrix m(ctx.field(), static_cast<int>((n - 1) * block), static_cast<int>(cols));
    for (long long col = 0; col < cols; ++col) {
        const Word w = ctx.word_unrank(n, col);
        for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
            Word left, right;
            for (int i = 0; i < n; ++i) {
                if (mask & (1u << i))
                    left.push_back(w[static_cast<size_t>(i)]);
                else
                    right.push_back(w[static_cast<size_t>(i)]);
            }
            const int len = static_cast<int>(left.size());
            const long long row = (len - 1) * block +
                                  ctx.word_rank(left) * ctx.words_of_length(n - len) +
                                  ctx.word_rank(right);
            m.set(static_cast<int>(row), static_cast<int>(col),
                  m.at(static_cast<int>(row), static_cast<int>(col)) + 1);
        }
    }
    return kernel(m);
}

namespace {

/* Coordinates of the concatenation of basis words: rank(u·v) interleaves as
 * rank(u) * m^{|v|} + rank(v), so the product subspace span comes from outer
 * products of basis rows. */
FpMatrix product_rows(const TensorContext& ctx, const Subspace& left, int left_len,
                      const Subspace& right, int right_len)
{
    const long long rcols = ctx.words_of_length(right_len);
    const long long cols = ctx.words_of_length(left_len + right_len);
    FpMatrix rows(ctx.field(), left.dim() * right.dim(), static_cast<int>(cols));
    int out = 0;
    for (int i = 0; i < left.dim(); ++i) {
        for (int j = 0; j < right.dim(); ++j) {
            for (int a = 0; a < left.basis().cols(); ++a) {
                if (left.basis().at(i, a) == 0)
                    continue;
                for (int b = 0; b < right.basis().cols(); ++b) {
                    if (right.basis().at(j, b) == 0)
                        continue;
                    const long long col = a * rcols + b;
                    rows.set(out, static_cast<int>(col),
                             ctx.field().mul(left.basis().at(i, a), right.basis().at(j, b)));
                }
            }
            ++out;
        }
    }
    return rows;
}

FpMatrix stack(const PrimeField& f, int cols, const std::vector<FpMatrix>& parts)
{
    int total = 0;
    for (const FpMatrix& p : parts)
        total += p.rows();
    FpMatrix m(f, total, cols);
    int out = 0;
    for (const FpMatrix& p : parts) {
        for (int r = 0; r < p.rows(); ++r, ++out)
            for (int c = 0; c < cols; ++c)
                m.set(out, c, p.at(r, c));
    }
    return m;
}

}  // namespace

DegreewiseSubspaces generated_subalgebra(const TensorContext& ctx,
                                         const std::vector<std::pair<int, Subspace>>& family)
{
    /* Merge family entries per length. */
    std::vector<Subspace> gens;
    gens.reserve(static_cast<size_t>(ctx.max_length()) + 1);
    for (int n = 0; n <= ctx.max_length(); ++n)
        gens.push_back(Subspace::zero(ctx.field(), static_cast<int>(ctx.words_of_length(n))));
    for (const auto& [n, sub] : family) {
        if (n < 1 || n > ctx.max_length())
            throw std::invalid_argument("family length " + std::to_string(n) +
                                        " outside [1, max_length]");
        if (sub.ambient() != ctx.words_of_length(n))
            throw std::invalid_argument("family subspace at length " + std::to_string(n) +
                                        " has ambient " + std::to_string(sub.ambient()) +
                                        ", expected " + std::to_string(ctx.words_of_length(n)));
        gens[static_cast<size_t>(n)] =
            sum_and_intersect(gens[static_cast<size_t>(n)], sub).first;
    }

    DegreewiseSubspaces result;
    result.push_back(Subspace::full(ctx.field(), 1));  // the unit in length 0
    for (int len = 1; len <= ctx.max_length(); ++len) {
        /* Products ending in a family element: span(F_len) plus
         * span(result[len - j]) * span(F_j) over 0 < j < len; result[len - j]
         * already holds every shorter product. */
        std::vector<FpMatrix> parts;
        parts.push_back(gens[static_cast<size_t>(len)].basis());
        for (int j = 1; j < len; ++j) {
            const Subspace& head = result[static_cast<size_t>(len - j)];
            const Subspace& tail = gens[static_cast<size_t>(j)];
            if (head.dim() == 0 || tail.dim() == 0)
                continue;
            parts.push_back(product_rows(ctx, head, len - j, tail, j));
        }
        result.push_back(
            Subspace::span(stack(ctx.field(), static_cast<int>(ctx.words_of_length(len)), parts)));
    }
    return result;
}

SubcoalgebraCheck is_subcoalgebra(const TensorContext& ctx, const DegreewiseSubspaces& b)
{
    if (b.empty() || b[0].dim() != 1 || b[0].ambient() != 1)
        throw std::invalid_argument("component list must start with the unit line in length 0");
    if (static_cast<int>(b.size()) > ctx.max_length() + 1)
        throw std::invalid_argument("component list exceeds the length cutoff");
    for (size_t n = 0; n < b.size(); ++n)
        if (b[n].ambient() != ctx.words_of_length(static_cast<int>(n)))
            throw std::invalid_argument("component at length " + std::to_string(n) +
                                        " has wrong ambient dimension");

    auto word_in = [&](const Word& w, const Subspace& component) {
        std::vector<long long> v(static_cast<size_t>(component.ambient()), 0);
        v[static_cast<size_t>(ctx.word_rank(w))] = 1;
        return component.contains(v);
    };

    SubcoalgebraCheck check{true, 0, std::nullopt, {}, {}};
    for (size_t n = 2; n < b.size(); ++n) {
        const Subspace& bn = b[n];
        for (int row = 0; row < bn.dim(); ++row) {
            TensorElement x(ctx);
            for (int c = 0; c < bn.ambient(); ++c)
                if (bn.basis().at(row, c) != 0)
                    x.add_term(ctx.word_unrank(static_cast<int>(n), c), bn.basis().at(row, c));
            TensorSquareElement dx = coproduct(x);
            for (int i = 1; i < static_cast<int>(n) && check.ok; ++i) {
                const int j = static_cast<int>(n) - i;
                const long long li = ctx.words_of_length(i), lj = ctx.words_of_length(j);
                FpMatrix slice(ctx.field(), static_cast<int>(li), static_cast<int>(lj));
                for (const auto& [pair, c] : dx.terms()) {
                    if (static_cast<int>(pair.first.size()) != i)
                        continue;
                    slice.set(static_cast<int>(ctx.word_rank(pair.first)),
                              static_cast<int>(ctx.word_rank(pair.second)), c);
                }
                /* Column slices must land in B_i, row slices in B_j; together
                 * that is exactly membership in B_i ⊗ B_j. */
                for (long long col = 0; col < lj && check.ok; ++col) {
                    std::vector<long long> v(static_cast<size_t>(li));
                    for (long long r = 0; r < li; ++r)
                        v[static_cast<size_t>(r)] = slice.at(static_cast<int>(r),
                                                             static_cast<int>(col));
                    std::vector<long long> residue = b[static_cast<size_t>(i)].reduce(v);
                    for (long long r = 0; r < li; ++r) {
                        if (residue[static_cast<size_t>(r)] != 0) {
                            check.ok = false;
                            check.left = ctx.word_unrank(i, r);
                            check.right = ctx.word_unrank(j, col);
                            break;
                        }
                    }
                }
                for (long long r = 0; r < li && check.ok; ++r) {
                    std::vector<long long> v(static_cast<size_t>(lj));
                    for (long long col = 0; col < lj; ++col)
                        v[static_cast<size_t>(col)] = slice.at(static_cast<int>(r),
                                                               static_cast<int>(col));
                    std::vector<long long> residue = b[static_cast<size_t>(j)].reduce(v);
                    for (long long col = 0; col < lj; ++col) {
                        if (residue[static_cast<size_t>(col)] != 0) {
                            check.ok = false;
                            check.left = ctx.word_unrank(i, r);
                            check.right = ctx.word_unrank(j, col);
                            break;
                        }
                    }
                }
            }
            if (!check.ok) {
                check.length = static_cast<int>(n);
                check.element = x;
                /* Prefer a single coproduct term that escapes on its own, in
                 * term order; the slice residue stays as the fallback when
                 * only a combination escapes. */
                for (const auto& [pair, c] : dx.terms()) {
                    const int i = static_cast<int>(pair.first.size());
                    const int j = static_cast<int>(pair.second.size());
                    if (i == 0 || j == 0)
                        continue;
                    if (!word_in(pair.first, b[static_cast<size_t>(i)]) ||
                        !word_in(pair.second, b[static_cast<size_t>(j)])) {
                        check.left = pair.first;
                        check.right = pair.second;
                        break;
                    }
                }
                return check;
            }
        }
    }
    return check;
}

TruncatedSeries poincare_series_of(const TensorContext& ctx, Grading grading)
{
    if (grading == Grading::TensorLength) {
        TruncatedSeries s(ctx.max_length());
        for (int n = 0; n <= ctx.max_length(); ++n)
            s.set_coeff(n, Int(ctx.words_of_length(n)));
        return s;
    }
    TruncatedSeries v(ctx.max_degree());
    for (int i = 0; i < ctx.num_generators(); ++i) {
        const int d = ctx.generator(i).degree;
        v.set_coeff(d, v.coeff(d) + 1);
    }
    return geometric_inverse(v);
}

TruncatedSeries poincare_series_of(const TensorContext& ctx, const DegreewiseSubspaces& b,
                                   Grading grading)
{
    for (size_t n = 0; n < b.size(); ++n)
        if (b[n].ambient() != ctx.words_of_length(static_cast<int>(n)))
            throw std::invalid_argument("component at length " + std::to_string(n) +
                                        " has wrong ambient dimension");
    if (grading == Grading::TensorLength) {
        TruncatedSeries s(static_cast<int>(b.size()) - 1);
        for (size_t n = 0; n < b.size(); ++n)
            s.set_coeff(static_cast<int>(n), b[n].dim());
        return s;
    }

    const int hosted = static_cast<int>(b.size()) * ctx.min_generator_degree() - 1;
    TruncatedSeries s(std::min(ctx.max_degree(), hosted));
    for (size_t n = 0; n < b.size(); ++n) {
        const Subspace& bn = b[n];
        if (bn.dim() == 0)
            continue;
        if (n == 0) {
            s.set_coeff(0, s.coeff(0) + 1);
            continue;
        }
        /* Split B_n over the coordinate subspaces of fixed internal degree;
         * a shortfall means B_n mixes degrees and has no degree series. */
        std::map<int, std::vector<long long>> degree_words;
        for (long long c = 0; c < bn.ambient(); ++c)
            degree_words[ctx.internal_degree(ctx.word_unrank(static_cast<int>(n), c))]
                .push_back(c);
        int found = 0;
        for (const auto& [d, cols] : degree_words) {
            FpMatrix coords(ctx.field(), static_cast<int>(cols.size()), bn.ambient());
            for (size_t r = 0; r < cols.size(); ++r)
                coords.set(static_cast<int>(r), static_cast<int>(cols[r]), 1);
            auto [_, inter] = sum_and_intersect(bn, Subspace::span(coords));
            found += inter.dim();
            if (d <= s.cutoff())
                s.set_coeff(d, s.coeff(d) + inter.dim());
        }
        if (found != bn.dim())
            throw std::domain_error("component at length " + std::to_string(n) +
                                    " is not internally graded; degree series undefined");
    }
    return s;
}

}  // namespace loopdec
