#include "loopdec/subhopf.hpp"

#include <stdexcept>
#include <string>

#include "loopdec/free_lie.hpp"

namespace loopdec {

namespace {

bool is_power_of(int n, long long p)
{
    while (n % p == 0)
        n = static_cast<int>(n / p);
    return n == 1;
}

int component_ambient(const TensorContext& ctx, int n)
{
    long long words = ctx.words_of_length(n);
    if (words > 1'000'000)
        throw std::invalid_argument("length-" + std::to_string(n) +
                                    " component has " + std::to_string(words) +
                                    " words; too large for dense spans");
    return static_cast<int>(words);
}

TensorElement row_to_element(const TensorContext& ctx, int length,
                             const FpMatrix& basis, int row)
{
    TensorElement e(ctx);
    for (int c = 0; c < basis.cols(); ++c)
        if (basis.at(row, c) != 0)
            e.add_term(ctx.word_unrank(length, c), basis.at(row, c));
    return e;
}

std::vector<long long> coordinates_of(const TensorContext& ctx, const TensorElement& e,
                                      int length)
{
    std::vector<long long> v(static_cast<size_t>(ctx.words_of_length(length)), 0);
    for (const auto& [w, c] : e.terms())
        v[static_cast<size_t>(ctx.word_rank(w))] = c;
    return v;
}

/* Span of all products B_i * B_j with i + j = n, i, j >= 1, computed by
 * multiplying actual elements rather than reusing the subalgebra builder's
 * row machinery; quotient dimensions derived from these spans are an
 * independent check on the series arithmetic. Index 0 carries the unit
 * line so that subtracting the product series from b cancels the
 * constant term. */
DegreewiseSubspaces product_spans(const TensorContext& ctx, const DegreewiseSubspaces& basis)
{
    const PrimeField& field = ctx.field();
    DegreewiseSubspaces prods;
    prods.push_back(basis[0]);
    for (int n = 1; n < static_cast<int>(basis.size()); ++n) {
        const int ambient = component_ambient(ctx, n);
        std::vector<std::vector<long long>> rows;
        for (int i = 1; i < n; ++i) {
            const Subspace& left = basis[static_cast<size_t>(i)];
            const Subspace& right = basis[static_cast<size_t>(n - i)];
            for (int r = 0; r < left.dim(); ++r) {
                auto u = row_to_element(ctx, i, left.basis(), r);
                for (int s = 0; s < right.dim(); ++s) {
                    auto w = concat_product(u, row_to_element(ctx, n - i, right.basis(), s));
                    rows.push_back(coordinates_of(ctx, w, n));
                }
            }
        }
        if (rows.empty()) {
            prods.push_back(Subspace::zero(field, ambient));
            continue;
        }
        FpMatrix mat(field, static_cast<int>(rows.size()), ambient);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r)
            for (int c = 0; c < ambient; ++c)
                mat.set(r, c, rows[static_cast<size_t>(r)][static_cast<size_t>(c)]);
        prods.push_back(Subspace::span(mat));
    }
    return prods;
}

void reject_negative(const TruncatedSeries& s, const char* name)
{
    for (int d = 0; d <= s.cutoff(); ++d)
        if (s.coeff(d) < 0)
            throw std::domain_error(
                std::string("not coalgebra-split at this truncation: ") + name +
                " coefficient at degree " + std::to_string(d) + " is negative");
}

}  // namespace

GeneratingFamily lie_power_family(const TensorContext& ctx, int max_length)
{
    if (max_length > ctx.max_length())
        throw std::invalid_argument("family length " + std::to_string(max_length) +
                                    " exceeds the context cutoff " +
                                    std::to_string(ctx.max_length()));
    GeneratingFamily family;
    for (int n = 2; n <= max_length; ++n)
        if (!is_power_of(n, ctx.field().p()))
            family.emplace_back(n, lie_power_subspace(ctx, n));
    return family;
}

SubHopfResult analyze_family(const TensorContext& ctx, const GeneratingFamily& family)
{
    auto basis = generated_subalgebra(ctx, family);
    const bool closed = is_subcoalgebra(ctx, basis).ok;

    auto b = poincare_series_of(ctx, basis, Grading::TensorLength);
    auto inverse_b = unit_inverse(b);
    auto q = sub(TruncatedSeries::one(b.cutoff()), inverse_b);
    auto a = mul(poincare_series_of(ctx, Grading::TensorLength).truncated(b.cutoff()),
                 inverse_b);
    reject_negative(q, "q");
    reject_negative(a, "a");

    auto prods = product_spans(ctx, basis);
    std::vector<Int> quotient_dims;
    quotient_dims.reserve(basis.size());
    quotient_dims.push_back(0);  // the unit is not an indecomposable
    for (size_t n = 1; n < basis.size(); ++n)
        quotient_dims.push_back(basis[n].dim() - prods[n].dim());

    /* Stagewise factorization: adding the length-n generators multiplies
     * the series by a factor that is 1, stays nonnegative, sits still
     * through degrees 1..n-1, and picks up exactly the new indecomposables
     * at degree n. */
    std::vector<FiltrationCheck> checks;
    GeneratingFamily prefix;
    for (const auto& [len, space] : family)
        if (len <= 1)
            prefix.emplace_back(len, space);
    auto prev = poincare_series_of(ctx, generated_subalgebra(ctx, prefix),
                                   Grading::TensorLength);
    for (int n = 2; n <= ctx.max_length(); ++n) {
        for (const auto& [len, space] : family)
            if (len == n)
                prefix.emplace_back(len, space);
        auto cur = poincare_series_of(ctx, generated_subalgebra(ctx, prefix),
                                      Grading::TensorLength);
        auto factor = mul(cur, unit_inverse(prev));
        bool passed = factor.coeff(0) == 1 && factor.coeff(n) == q.coeff(n);
        for (int d = 1; d < n; ++d)
            passed = passed && factor.coeff(d) == 0;
        for (int d = 0; d <= factor.cutoff(); ++d)
            passed = passed && factor.coeff(d) >= 0;
        checks.push_back({n, passed});
        prev = cur;
    }

    return {std::move(basis), std::move(b),     std::move(q), std::move(a),
            std::move(quotient_dims), closed, std::move(checks)};
}

TruncatedSeries minimal_complement_series(const TensorContext& ctx, int max_length)
{
    return analyze_family(ctx, lie_power_family(ctx, max_length)).a;
}

LocalizationReport primitive_localization_check(const TensorContext& ctx, int max_length)
{
    auto basis = generated_subalgebra(ctx, lie_power_family(ctx, max_length));
    LocalizationReport report{{}, true};
    for (int n = 2; n <= max_length; ++n) {
        if (is_power_of(n, ctx.field().p()))
            continue;
        const auto prim = primitives(ctx, n);
        bool passed = true;
        for (int r = 0; r < prim.dim(); ++r) {
            std::vector<long long> v(static_cast<size_t>(prim.ambient()));
            for (int c = 0; c < prim.ambient(); ++c)
                v[static_cast<size_t>(c)] = prim.basis().at(r, c);
            passed = passed && member(v, basis[static_cast<size_t>(n)]);
        }
        report.lengths.push_back({n, passed});
        report.ok = report.ok && passed;
    }
    return report;
}

SeriesIdentityReport loop_splitting_check(const SpaceDescriptor& y, long long p, int cutoff)
{
    if (cutoff < 0)
        throw std::invalid_argument("cutoff must be nonnegative");
    if (y.cutoff() < cutoff + 1)
        throw std::invalid_argument(
            "descriptor " + y.name() + " is only certified through degree " +
            std::to_string(y.cutoff()) + "; this check needs " +
            std::to_string(cutoff + 1));

    const auto s = y.desuspended();
    std::vector<Generator> generators;
    for (int d = 1; d <= std::min(cutoff, s.cutoff()); ++d) {
        const Int& c = s.coeff(d);
        if (c == 0)
            continue;
        if (d % 2 != 0)
            throw std::invalid_argument(
                "even mode needs generators in even degrees; " + y.name() +
                " desuspends to degree " + std::to_string(d));
        if (c > 1024)
            throw std::invalid_argument("degree " + std::to_string(d) + " of " +
                                        y.name() + " has too many cells");
        for (long long i = 0; i < c.convert_to<long long>(); ++i)
            generators.push_back({"x" + std::to_string(d) + "_" + std::to_string(i),
                                  d});
    }

    auto lhs = loop_series(y).truncated(cutoff);
    if (generators.empty()) {
        auto rhs = TruncatedSeries::one(cutoff);
        auto mismatch = first_difference(lhs, rhs);
        return {std::move(lhs), std::move(rhs), mismatch, !mismatch.has_value()};
    }

    int min_degree = generators.front().degree;
    int max_degree = generators.front().degree;
    for (const auto& g : generators) {
        min_degree = std::min(min_degree, g.degree);
        max_degree = std::max(max_degree, g.degree);
    }
    const int max_length = std::max(1, cutoff / min_degree);
    TensorContext ctx(generators, PrimeField(p), max_length,
                      std::max(max_length * max_degree, cutoff));

    auto result = analyze_family(ctx, lie_power_family(ctx, max_length));
    auto b_int = poincare_series_of(ctx, result.basis, Grading::InternalDegree);
    auto products_int =
        poincare_series_of(ctx, product_spans(ctx, result.basis), Grading::InternalDegree);
    auto q_int = sub(b_int, products_int).truncated(cutoff);

    auto a_int = mul(poincare_series_of(ctx, Grading::InternalDegree).truncated(cutoff),
                     unit_inverse(b_int.truncated(cutoff)));
    auto rhs = mul(a_int, geometric_inverse(q_int));

    auto mismatch = first_difference(lhs, rhs);
    return {std::move(lhs), std::move(rhs), mismatch, !mismatch.has_value()};
}

}  // namespace loopdec
