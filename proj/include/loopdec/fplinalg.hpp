#ifndef LOOPDEC_FPLINALG_HPP
#define LOOPDEC_FPLINALG_HPP

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace loopdec {

/* Arithmetic in the prime field F_p. The modulus is checked for primality at
 * construction; p = 2 is allowed but flagged, since the decomposition theory
 * downstream assumes an odd prime. */
class PrimeField {
public:
    explicit PrimeField(long long p);

    long long p() const { return p_; }

    /* True when p = 2; callers surface this as a warning rather than an
     * error, the linear algebra itself is characteristic-agnostic. */
    bool characteristic_two() const { return p_ == 2; }

    long long reduce(long long a) const;
    long long add(long long a, long long b) const { return (a + b) % p_; }
    long long sub(long long a, long long b) const { return (a - b + p_) % p_; }
    long long mul(long long a, long long b) const { return (a * b) % p_; }
    long long neg(long long a) const { return (p_ - a) % p_; }
    long long inv(long long a) const;

    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

private:
    long long p_;
};

/* Dense matrix of residues mod p; every stored entry lies in [0, p). */
class FpMatrix {
public:
    FpMatrix(PrimeField field, int rows, int cols);

    static FpMatrix identity(PrimeField field, int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const PrimeField& field() const { return field_; }

    long long at(int r, int c) const { return data_[index(r, c)]; }
    void set(int r, int c, long long v) { data_[index(r, c)] = field_.reduce(v); }

    void swap_rows(int r1, int r2);
    /* row r1 += c * row r2 */
    void add_multiple(int r1, long long c, int r2);
    void scale_row(int r, long long c);

    friend bool operator==(const FpMatrix& a, const FpMatrix& b);

private:
    size_t index(int r, int c) const;

    PrimeField field_;
    int rows_;
    int cols_;
    std::vector<long long> data_;
};

struct RrefResult {
    FpMatrix mat;
    std::vector<int> pivots;  // pivot column of each nonzero row, strictly increasing
};

/* Reduced row-echelon form with a fixed elimination order (leftmost pivot
 * column, topmost nonzero row), so the result is reproducible across runs. */
RrefResult rref(const FpMatrix& m);

/* Subspace of F_p^n held as a reduced row-echelon basis. The echelon form is
 * canonical, so equal subspaces compare equal entrywise. */
class Subspace {
public:
    static Subspace zero(PrimeField field, int ambient);
    static Subspace full(PrimeField field, int ambient);
    /* Span of the rows of the given matrix. */
    static Subspace span(const FpMatrix& vectors);

    int ambient() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    const PrimeField& field() const { return basis_.field(); }
    const FpMatrix& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }

    bool contains(const std::vector<long long>& v) const;

    /* Residue of v after subtracting its projection onto the echelon basis;
     * zero exactly when v lies in the subspace. */
    std::vector<long long> reduce(std::vector<long long> v) const;

    friend bool operator==(const Subspace& a, const Subspace& b);

private:
    Subspace(int ambient, FpMatrix basis, std::vector<int> pivots);

    int ambient_;
    FpMatrix basis_;
    std::vector<int> pivots_;
};

/* Sum and intersection in one pass (Zassenhaus). The Grassmann identity
 * dim a + dim b = dim sum + dim intersection is checked internally and a
 * violation throws, it would mean a reduction bug. */
std::pair<Subspace, Subspace> sum_and_intersect(const Subspace& a, const Subspace& b);

/* Null space of m, as a subspace of F_p^cols. */
Subspace kernel(const FpMatrix& m);

bool member(const std::vector<long long>& v, const Subspace& s);

}  // namespace loopdec

#endif
