#include "loopdec/series.hpp"

#include <algorithm>
#include <sstream>

namespace loopdec {

namespace {
const Int kZero = 0;

int common_cutoff(const TruncatedSeries& a, const TruncatedSeries& b)
{
    return std::min(a.cutoff(), b.cutoff());
}
}  // namespace

TruncatedSeries::TruncatedSeries(int cutoff) : cutoff_(cutoff)
{
    if (cutoff < 0)
        throw std::invalid_argument("series cutoff must be >= 0");
    coeffs_.assign(static_cast<size_t>(cutoff) + 1, Int(0));
}

TruncatedSeries TruncatedSeries::zero(int cutoff) { return TruncatedSeries(cutoff); }

TruncatedSeries TruncatedSeries::one(int cutoff) { return constant(1, cutoff); }

TruncatedSeries TruncatedSeries::constant(const Int& c, int cutoff)
{
    TruncatedSeries s(cutoff);
    s.coeffs_[0] = c;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(int degree, int cutoff, const Int& c)
{
    TruncatedSeries s(cutoff);
    if (degree < 0)
        throw std::invalid_argument("monomial degree must be >= 0");
    if (degree <= cutoff)
        s.coeffs_[static_cast<size_t>(degree)] = c;
    return s;
}

const Int& TruncatedSeries::coeff(int degree) const
{
    if (degree < 0 || degree > cutoff_)
        return kZero;
    return coeffs_[static_cast<size_t>(degree)];
}

void TruncatedSeries::set_coeff(int degree, Int c)
{
    if (degree < 0 || degree > cutoff_)
        throw std::out_of_range("set_coeff: degree " + std::to_string(degree) +
                                " outside [0, " + std::to_string(cutoff_) + "]");
    coeffs_[static_cast<size_t>(degree)] = std::move(c);
}

bool TruncatedSeries::is_zero() const
{
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Int& c) { return c == 0; });
}

std::optional<int> TruncatedSeries::bottom_degree() const
{
    for (int d = 0; d <= cutoff_; ++d)
        if (coeffs_[static_cast<size_t>(d)] != 0)
            return d;
    return std::nullopt;
}

TruncatedSeries TruncatedSeries::truncated(int new_cutoff) const
{
    TruncatedSeries r(std::min(new_cutoff, cutoff_));
    for (int d = 0; d <= r.cutoff_; ++d)
        r.coeffs_[static_cast<size_t>(d)] = coeffs_[static_cast<size_t>(d)];
    return r;
}

TruncatedSeries TruncatedSeries::operator-() const
{
    TruncatedSeries r(*this);
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs)
{
    *this = add(*this, rhs);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs)
{
    *this = sub(*this, rhs);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const Int& scalar)
{
    for (auto& c : coeffs_)
        c *= scalar;
    return *this;
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b)
{
    TruncatedSeries r(common_cutoff(a, b));
    for (int d = 0; d <= r.cutoff(); ++d)
        r.set_coeff(d, a.coeff(d) + b.coeff(d));
    return r;
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b)
{
    TruncatedSeries r(common_cutoff(a, b));
    for (int d = 0; d <= r.cutoff(); ++d)
        r.set_coeff(d, a.coeff(d) - b.coeff(d));
    return r;
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const int n = common_cutoff(a, b);
    TruncatedSeries r(n);
    for (int i = 0; i <= n; ++i) {
        if (a.coeff(i) == 0)
            continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b.coeff(j) == 0)
                continue;
            r.set_coeff(i + j, r.coeff(i + j) + a.coeff(i) * b.coeff(j));
        }
    }
    return r;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return add(a, b); }
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return sub(a, b); }
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return mul(a, b); }

TruncatedSeries pow(const TruncatedSeries& s, int k)
{
    if (k < 0)
        throw std::invalid_argument("pow: exponent must be >= 0");
    TruncatedSeries r = TruncatedSeries::one(s.cutoff());
    TruncatedSeries base = s;
    while (k > 0) {
        if (k & 1)
            r = mul(r, base);
        base = mul(base, base);
        k >>= 1;
    }
    return r;
}

TruncatedSeries geometric_inverse(const TruncatedSeries& s)
{
    if (s.coeff(0) != 0)
        throw std::domain_error(
            "geometric_inverse: series has nonzero constant term " + s.coeff(0).str() +
            "; the tensor-algebra series 1/(1-s) needs s(0) = 0");
    /* g_n = sum_{k=1..n} s_k g_{n-k}, g_0 = 1: the coefficient recurrence of
     * (1 - s) * g = 1. */
    TruncatedSeries g(s.cutoff());
    g.set_coeff(0, 1);
    for (int n = 1; n <= s.cutoff(); ++n) {
        Int acc = 0;
        for (int k = 1; k <= n; ++k)
            acc += s.coeff(k) * g.coeff(n - k);
        g.set_coeff(n, acc);
    }
    return g;
}

TruncatedSeries unit_inverse(const TruncatedSeries& s)
{
    const Int& c0 = s.coeff(0);
    if (c0 != 1 && c0 != -1)
        throw std::domain_error("unit_inverse: constant term " + c0.str() +
                                " is not a unit (+1 or -1); inverse would not be integral");
    TruncatedSeries b(s.cutoff());
    b.set_coeff(0, c0);  // 1/c0 = c0 for c0 = +-1
    for (int n = 1; n <= s.cutoff(); ++n) {
        Int acc = 0;
        for (int k = 1; k <= n; ++k)
            acc += s.coeff(k) * b.coeff(n - k);
        b.set_coeff(n, -c0 * acc);
    }
    return b;
}

TruncatedSeries shift(const TruncatedSeries& s, int d)
{
    if (d < 0) {
        if (s.cutoff() + d < 0)
            throw std::invalid_argument("shift: cutoff " + std::to_string(s.cutoff()) +
                                        " leaves nothing certified after shift by " +
                                        std::to_string(d));
        for (int deg = 0; deg < -d; ++deg)
            if (s.coeff(deg) != 0)
                throw std::domain_error(
                    "shift: coefficient at degree " + std::to_string(deg) +
                    " would land below degree 0 under shift by " + std::to_string(d));
    }
    /* Shifting down surrenders the top |d| degrees: their preimages lie
     * beyond the cutoff and are not certified. */
    TruncatedSeries r(d < 0 ? s.cutoff() + d : s.cutoff());
    for (int deg = 0; deg <= s.cutoff(); ++deg) {
        const int target = deg + d;
        if (target >= 0 && target <= r.cutoff())
            r.set_coeff(target, s.coeff(deg));
    }
    return r;
}

std::optional<int> first_difference(const TruncatedSeries& a, const TruncatedSeries& b)
{
    const int n = common_cutoff(a, b);
    for (int d = 0; d <= n; ++d)
        if (a.coeff(d) != b.coeff(d))
            return d;
    return std::nullopt;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b)
{
    return !first_difference(a, b).has_value();
}

bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) { return !(a == b); }

std::string to_string(const TruncatedSeries& s)
{
    std::ostringstream out;
    bool first = true;
    for (int d = 0; d <= s.cutoff(); ++d) {
        const Int& c = s.coeff(d);
        if (c == 0)
            continue;
        Int abs = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0)
                out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (d == 0) {
            out << abs.str();
        } else {
            if (abs != 1)
                out << abs.str() << "*";
            out << "t";
            if (d != 1)
                out << "^" << d;
        }
    }
    if (first)
        out << "0";
    return out.str();
}

MultiSeries::MultiSeries(Exponents cutoffs) : cutoffs_(std::move(cutoffs))
{
    for (int c : cutoffs_)
        if (c < 0)
            throw std::invalid_argument("multiseries cutoffs must be >= 0");
}

MultiSeries MultiSeries::zero(Exponents cutoffs) { return MultiSeries(std::move(cutoffs)); }

MultiSeries MultiSeries::one(Exponents cutoffs)
{
    MultiSeries s(std::move(cutoffs));
    s.set_coeff(Exponents(s.cutoffs_.size(), 0), 1);
    return s;
}

MultiSeries MultiSeries::monomial(const Exponents& exps, Exponents cutoffs, const Int& c)
{
    MultiSeries s(std::move(cutoffs));
    s.check_arity(exps);
    bool inside = true;
    for (size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] < 0)
            throw std::invalid_argument("monomial exponents must be >= 0");
        inside = inside && exps[i] <= s.cutoffs_[i];
    }
    if (inside)
        s.set_coeff(exps, c);
    return s;
}

void MultiSeries::check_arity(const Exponents& exps) const
{
    if (exps.size() != cutoffs_.size())
        throw std::invalid_argument("multidegree arity " + std::to_string(exps.size()) +
                                    " does not match series arity " +
                                    std::to_string(cutoffs_.size()));
}

Int MultiSeries::coeff(const Exponents& exps) const
{
    check_arity(exps);
    auto it = coeffs_.find(exps);
    return it == coeffs_.end() ? Int(0) : it->second;
}

void MultiSeries::set_coeff(const Exponents& exps, Int c)
{
    check_arity(exps);
    for (size_t i = 0; i < exps.size(); ++i)
        if (exps[i] < 0 || exps[i] > cutoffs_[i])
            throw std::out_of_range("set_coeff: exponent outside per-variable cutoff");
    if (c == 0)
        coeffs_.erase(exps);
    else
        coeffs_[exps] = std::move(c);
}

MultiSeries& MultiSeries::operator+=(const MultiSeries& rhs)
{
    *this = add(*this, rhs);
    return *this;
}

MultiSeries& MultiSeries::operator-=(const MultiSeries& rhs)
{
    MultiSeries neg = rhs;
    for (auto& [e, c] : neg.coeffs_)
        c = -c;
    *this = add(*this, neg);
    return *this;
}

namespace {
MultiSeries::Exponents min_cutoffs(const MultiSeries& a, const MultiSeries& b)
{
    if (a.arity() != b.arity())
        throw std::invalid_argument("multiseries arity mismatch");
    MultiSeries::Exponents c(a.cutoffs().size());
    for (size_t i = 0; i < c.size(); ++i)
        c[i] = std::min(a.cutoffs()[i], b.cutoffs()[i]);
    return c;
}
}  // namespace

MultiSeries add(const MultiSeries& a, const MultiSeries& b)
{
    MultiSeries r(min_cutoffs(a, b));
    for (const auto& [e, c] : a.terms()) {
        bool inside = true;
        for (size_t i = 0; i < e.size(); ++i)
            inside = inside && e[i] <= r.cutoffs()[i];
        if (inside)
            r.set_coeff(e, c);
    }
    for (const auto& [e, c] : b.terms()) {
        bool inside = true;
        for (size_t i = 0; i < e.size(); ++i)
            inside = inside && e[i] <= r.cutoffs()[i];
        if (inside)
            r.set_coeff(e, r.coeff(e) + c);
    }
    return r;
}

MultiSeries mul(const MultiSeries& a, const MultiSeries& b)
{
    MultiSeries r(min_cutoffs(a, b));
    MultiSeries::Exponents e(static_cast<size_t>(r.arity()));
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            bool inside = true;
            for (size_t i = 0; i < e.size(); ++i) {
                e[i] = ea[i] + eb[i];
                inside = inside && e[i] <= r.cutoffs()[i];
            }
            if (inside)
                r.set_coeff(e, r.coeff(e) + ca * cb);
        }
    }
    return r;
}

MultiSeries geometric_inverse(const MultiSeries& u)
{
    if (u.coeff(MultiSeries::Exponents(static_cast<size_t>(u.arity()), 0)) != 0)
        throw std::domain_error("geometric_inverse: multiseries has nonzero constant term");
    /* g = 1 + u*g reaches a fixed point once the iteration count exceeds the
     * total-degree budget, since u raises total degree by at least 1. */
    int budget = 1;
    for (int c : u.cutoffs())
        budget += c;
    MultiSeries g = MultiSeries::one(u.cutoffs());
    for (int k = 0; k < budget; ++k) {
        MultiSeries next = add(MultiSeries::one(u.cutoffs()), mul(u, g));
        if (next == g)
            break;
        g = std::move(next);
    }
    return g;
}

TruncatedSeries specialize(const MultiSeries& m, const std::vector<int>& weights)
{
    if (static_cast<int>(weights.size()) != m.arity())
        throw std::invalid_argument("specialize: assignment must cover all variables");
    for (int w : weights)
        if (w <= 0)
            throw std::invalid_argument("specialize: monomial weights must be >= 1");
    /* Degree D is certified when every exponent vector contributing to D is
     * within the per-variable cutoffs; variable i can contribute exponents up
     * to D / weights[i]. */
    int cutoff = weights[0] * m.cutoffs()[0];
    for (size_t i = 1; i < weights.size(); ++i)
        cutoff = std::min(cutoff, weights[i] * m.cutoffs()[i]);
    TruncatedSeries r(cutoff);
    for (const auto& [e, c] : m.terms()) {
        long long deg = 0;
        for (size_t i = 0; i < e.size(); ++i)
            deg += static_cast<long long>(e[i]) * weights[i];
        if (deg <= cutoff)
            r.set_coeff(static_cast<int>(deg), r.coeff(static_cast<int>(deg)) + c);
    }
    return r;
}

bool operator==(const MultiSeries& a, const MultiSeries& b)
{
    MultiSeries::Exponents c = min_cutoffs(a, b);
    auto within = [&](const MultiSeries::Exponents& e) {
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > c[i])
                return false;
        return true;
    };
    for (const auto& [e, v] : a.terms())
        if (within(e) && b.coeff(e) != v)
            return false;
    for (const auto& [e, v] : b.terms())
        if (within(e) && a.coeff(e) != v)
            return false;
    return true;
}

}  // namespace loopdec
