#include "loopdec/fplinalg.hpp"

#include <algorithm>
#include <string>

namespace loopdec {

namespace {
bool is_prime(long long n)
{
    if (n < 2)
        return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}
}  // namespace

PrimeField::PrimeField(long long p) : p_(p)
{
    if (!is_prime(p))
        throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
    if (p > (1LL << 31))
        throw std::invalid_argument("modulus too large for 64-bit product arithmetic");
}

long long PrimeField::reduce(long long a) const
{
    long long r = a % p_;
    return r < 0 ? r + p_ : r;
}

long long PrimeField::inv(long long a) const
{
    a = reduce(a);
    if (a == 0)
        throw std::domain_error("inverse of 0 mod " + std::to_string(p_));
    /* Fermat: a^(p-2) mod p. */
    long long result = 1, base = a, e = p_ - 2;
    while (e > 0) {
        if (e & 1)
            result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

FpMatrix::FpMatrix(PrimeField field, int rows, int cols)
    : field_(field), rows_(rows), cols_(cols)
{
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("matrix dimensions must be >= 0");
    data_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), 0);
}

FpMatrix FpMatrix::identity(PrimeField field, int n)
{
    FpMatrix m(field, n, n);
    for (int i = 0; i < n; ++i)
        m.set(i, i, 1);
    return m;
}

size_t FpMatrix::index(int r, int c) const
{
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("matrix index (" + std::to_string(r) + ", " +
                                std::to_string(c) + ") outside " + std::to_string(rows_) +
                                "x" + std::to_string(cols_));
    return static_cast<size_t>(r) * static_cast<size_t>(cols_) + static_cast<size_t>(c);
}

void FpMatrix::swap_rows(int r1, int r2)
{
    for (int c = 0; c < cols_; ++c)
        std::swap(data_[index(r1, c)], data_[index(r2, c)]);
}

void FpMatrix::add_multiple(int r1, long long c, int r2)
{
    c = field_.reduce(c);
    if (c == 0)
        return;
    for (int col = 0; col < cols_; ++col)
        data_[index(r1, col)] = field_.add(data_[index(r1, col)], field_.mul(c, data_[index(r2, col)]));
}

void FpMatrix::scale_row(int r, long long c)
{
    c = field_.reduce(c);
    for (int col = 0; col < cols_; ++col)
        data_[index(r, col)] = field_.mul(data_[index(r, col)], c);
}

bool operator==(const FpMatrix& a, const FpMatrix& b)
{
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.data_ == b.data_;
}

RrefResult rref(const FpMatrix& m)
{
    FpMatrix r = m;
    const PrimeField& f = r.field();
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < r.cols() && row < r.rows(); ++col) {
        int pivot_row = -1;
        for (int i = row; i < r.rows(); ++i) {
            if (r.at(i, col) != 0) {
                pivot_row = i;
                break;
            }
        }
        if (pivot_row < 0)
            continue;
        if (pivot_row != row)
            r.swap_rows(pivot_row, row);
        r.scale_row(row, f.inv(r.at(row, col)));
        for (int i = 0; i < r.rows(); ++i) {
            if (i != row && r.at(i, col) != 0)
                r.add_multiple(i, f.neg(r.at(i, col)), row);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(r), std::move(pivots)};
}

Subspace::Subspace(int ambient, FpMatrix basis, std::vector<int> pivots)
    : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots))
{
}

Subspace Subspace::zero(PrimeField field, int ambient)
{
    return Subspace(ambient, FpMatrix(field, 0, ambient), {});
}

Subspace Subspace::full(PrimeField field, int ambient)
{
    std::vector<int> pivots(static_cast<size_t>(ambient));
    for (int i = 0; i < ambient; ++i)
        pivots[static_cast<size_t>(i)] = i;
    return Subspace(ambient, FpMatrix::identity(field, ambient), std::move(pivots));
}

Subspace Subspace::span(const FpMatrix& vectors)
{
    RrefResult r = rref(vectors);
    const int rank = static_cast<int>(r.pivots.size());
    FpMatrix basis(vectors.field(), rank, vectors.cols());
    for (int i = 0; i < rank; ++i)
        for (int c = 0; c < vectors.cols(); ++c)
            basis.set(i, c, r.mat.at(i, c));
    return Subspace(vectors.cols(), std::move(basis), std::move(r.pivots));
}

std::vector<long long> Subspace::reduce(std::vector<long long> v) const
{
    if (static_cast<int>(v.size()) != ambient_)
        throw std::invalid_argument("vector length " + std::to_string(v.size()) +
                                    " does not match ambient dimension " +
                                    std::to_string(ambient_));
    const PrimeField& f = field();
    for (auto& x : v)
        x = f.reduce(x);
    for (int i = 0; i < dim(); ++i) {
        const int pc = pivots_[static_cast<size_t>(i)];
        const long long c = v[static_cast<size_t>(pc)];
        if (c == 0)
            continue;
        for (int col = pc; col < ambient_; ++col)
            v[static_cast<size_t>(col)] =
                f.sub(v[static_cast<size_t>(col)], f.mul(c, basis_.at(i, col)));
    }
    return v;
}

bool Subspace::contains(const std::vector<long long>& v) const
{
    std::vector<long long> r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](long long x) { return x == 0; });
}

bool operator==(const Subspace& a, const Subspace& b)
{
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
}

std::pair<Subspace, Subspace> sum_and_intersect(const Subspace& a, const Subspace& b)
{
    if (a.ambient() != b.ambient())
        throw std::invalid_argument("ambient dimensions differ: " +
                                    std::to_string(a.ambient()) + " vs " +
                                    std::to_string(b.ambient()));
    if (!(a.field() == b.field()))
        throw std::invalid_argument("subspaces live over different primes");
    const int n = a.ambient();
    const PrimeField f = a.field();

    /* Zassenhaus block matrix [[A A], [B 0]]: after reduction the left halves
     * of the pivot rows span a + b, and the right halves of the rows whose
     * left half vanished span the intersection. */
    FpMatrix block(f, a.dim() + b.dim(), 2 * n);
    for (int i = 0; i < a.dim(); ++i) {
        for (int c = 0; c < n; ++c) {
            block.set(i, c, a.basis().at(i, c));
            block.set(i, n + c, a.basis().at(i, c));
        }
    }
    for (int i = 0; i < b.dim(); ++i)
        for (int c = 0; c < n; ++c)
            block.set(a.dim() + i, c, b.basis().at(i, c));

    RrefResult r = rref(block);
    FpMatrix sum_rows(f, 0, n), int_rows(f, 0, n);
    {
        int sum_count = 0, int_count = 0;
        for (int p : r.pivots)
            (p < n ? sum_count : int_count)++;
        sum_rows = FpMatrix(f, sum_count, n);
        int_rows = FpMatrix(f, int_count, n);
        int si = 0, ii = 0;
        for (size_t row = 0; row < r.pivots.size(); ++row) {
            if (r.pivots[row] < n) {
                for (int c = 0; c < n; ++c)
                    sum_rows.set(si, c, r.mat.at(static_cast<int>(row), c));
                ++si;
            } else {
                for (int c = 0; c < n; ++c)
                    int_rows.set(ii, c, r.mat.at(static_cast<int>(row), n + c));
                ++ii;
            }
        }
    }
    Subspace sum = Subspace::span(sum_rows);
    Subspace inter = Subspace::span(int_rows);
    if (a.dim() + b.dim() != sum.dim() + inter.dim())
        throw std::logic_error("Grassmann identity violated: " + std::to_string(a.dim()) +
                               " + " + std::to_string(b.dim()) + " != " +
                               std::to_string(sum.dim()) + " + " + std::to_string(inter.dim()));
    return {std::move(sum), std::move(inter)};
}

Subspace kernel(const FpMatrix& m)
{
    RrefResult r = rref(m);
    const PrimeField& f = m.field();
    const int n = m.cols();
    std::vector<bool> is_pivot(static_cast<size_t>(n), false);
    for (int p : r.pivots)
        is_pivot[static_cast<size_t>(p)] = true;

    const int nullity = n - static_cast<int>(r.pivots.size());
    FpMatrix basis(f, nullity, n);
    int out = 0;
    for (int free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[static_cast<size_t>(free_col)])
            continue;
        /* Solution with the free variable set to 1: pivot variable of row i
         * equals -entry(i, free_col). */
        basis.set(out, free_col, 1);
        for (size_t row = 0; row < r.pivots.size(); ++row)
            basis.set(out, r.pivots[row],
                      f.neg(r.mat.at(static_cast<int>(row), free_col)));
        ++out;
    }
    return Subspace::span(basis);
}

bool member(const std::vector<long long>& v, const Subspace& s) { return s.contains(v); }

}  // namespace loopdec
