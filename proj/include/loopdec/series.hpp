#ifndef LOOPDEC_SERIES_HPP
#define LOOPDEC_SERIES_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace loopdec {

using Int = boost::multiprecision::cpp_int;

/* Formal power series with exact integer coefficients, truncated at an
 * inclusive degree cutoff. All arithmetic propagates the minimum cutoff of
 * its operands: a result never claims coefficients beyond what both inputs
 * certify. */
class TruncatedSeries {
public:
    explicit TruncatedSeries(int cutoff);

    static TruncatedSeries zero(int cutoff);
    static TruncatedSeries one(int cutoff);
    static TruncatedSeries constant(const Int& c, int cutoff);
    static TruncatedSeries monomial(int degree, int cutoff, const Int& c = 1);

    int cutoff() const { return cutoff_; }

    /* Coefficient of t^degree; zero outside [0, cutoff]. */
    const Int& coeff(int degree) const;
    void set_coeff(int degree, Int c);

    bool is_zero() const;
    /* Smallest degree with nonzero coefficient, or nullopt if zero through
     * the cutoff. */
    std::optional<int> bottom_degree() const;

    TruncatedSeries truncated(int new_cutoff) const;

    TruncatedSeries operator-() const;
    TruncatedSeries& operator+=(const TruncatedSeries& rhs);
    TruncatedSeries& operator-=(const TruncatedSeries& rhs);
    TruncatedSeries& operator*=(const Int& scalar);

private:
    int cutoff_;
    std::vector<Int> coeffs_;  // dense, size cutoff_ + 1
};

/* Coefficientwise sum; cutoff = min of the operands'. */
TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);

/* Cauchy product truncated at the minimum cutoff. */
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

/* result^k by repeated squaring, k >= 0. */
TruncatedSeries pow(const TruncatedSeries& s, int k);

/* Series of the tensor algebra on a module with series s: the inverse of
 * 1 - s. Requires s(0) = 0; the result g satisfies (1 - s) * g = 1 through
 * the cutoff and has integer coefficients. */
TruncatedSeries geometric_inverse(const TruncatedSeries& s);

/* Multiplicative inverse of a series with constant term +-1. With a unit
 * constant term the inverse is integral, by the standard reciprocal
 * recurrence b_n = -s_0 * sum_{k=1..n} s_k b_{n-k}. */
TruncatedSeries unit_inverse(const TruncatedSeries& s);

/* Multiplication by t^d. Suspension is d = +1, desuspension d = -1; a
 * negative shift that would push a nonzero coefficient below degree 0 is
 * rejected, naming the offending degree. Shifting down also lowers the
 * cutoff by |d|, because the top coefficients would have to come from
 * degrees beyond the input's certified range. */
TruncatedSeries shift(const TruncatedSeries& s, int d);

/* First degree <= min(a.cutoff, b.cutoff) where the coefficients differ,
 * or nullopt when the series agree through the common cutoff. */
std::optional<int> first_difference(const TruncatedSeries& a, const TruncatedSeries& b);

/* Equality of all coefficients through the common cutoff. */
bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);
bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b);

/* "c0 + c1*t + c2*t^2 + ..." with zero terms omitted; "0" for the zero
 * series. */
std::string to_string(const TruncatedSeries& s);

/* Formal power series in several variables with exact integer coefficients
 * and an inclusive per-variable exponent cutoff. */
class MultiSeries {
public:
    using Exponents = std::vector<int>;

    explicit MultiSeries(Exponents cutoffs);

    static MultiSeries zero(Exponents cutoffs);
    static MultiSeries one(Exponents cutoffs);
    static MultiSeries monomial(const Exponents& exps, Exponents cutoffs, const Int& c = 1);

    int arity() const { return static_cast<int>(cutoffs_.size()); }
    const Exponents& cutoffs() const { return cutoffs_; }

    Int coeff(const Exponents& exps) const;
    void set_coeff(const Exponents& exps, Int c);

    const std::map<Exponents, Int>& terms() const { return coeffs_; }

    MultiSeries& operator+=(const MultiSeries& rhs);
    MultiSeries& operator-=(const MultiSeries& rhs);

private:
    void check_arity(const Exponents& exps) const;

    Exponents cutoffs_;
    std::map<Exponents, Int> coeffs_;  // nonzero entries only
};

MultiSeries add(const MultiSeries& a, const MultiSeries& b);
MultiSeries mul(const MultiSeries& a, const MultiSeries& b);

/* Inverse of 1 - u for u with zero constant term, truncated per variable. */
MultiSeries geometric_inverse(const MultiSeries& u);

/* Substitutes t^{weights[i]} for variable i. The assignment must cover all
 * variables with positive weights; the result cutoff is the largest single
 * degree certified by the per-variable cutoffs. */
TruncatedSeries specialize(const MultiSeries& m, const std::vector<int>& weights);

bool operator==(const MultiSeries& a, const MultiSeries& b);

}  // namespace loopdec

#endif
