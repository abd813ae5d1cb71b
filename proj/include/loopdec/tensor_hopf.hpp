#ifndef LOOPDEC_TENSOR_HOPF_HPP
#define LOOPDEC_TENSOR_HOPF_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "loopdec/fplinalg.hpp"
#include "loopdec/series.hpp"

namespace loopdec {

/* A word in the tensor algebra: a sequence of generator indices. The empty
 * word is the unit. */
using Word = std::vector<int>;

/* Global basis order: by length first, then lexicographically by generator
 * index. Within a fixed length this is plain lex order, so the rank of a
 * word is its base-m numeral. */
struct LengthLexLess {
    bool operator()(const Word& a, const Word& b) const;
};

struct Generator {
    std::string name;
    int degree;  // internal degree, >= 1
};

/* The tensor algebra T(V) on a finite weighted alphabet over F_p, truncated
 * by tensor length. Internal degree is carried as a weight for series; the
 * degree cutoff must cover every hostable word, so a context requires
 * max_degree >= max_length * (largest generator degree). All generators are
 * treated as even: the coproduct combinatorics applies no Koszul signs even
 * for odd internal degrees. */
class TensorContext {
public:
    TensorContext(std::vector<Generator> generators, PrimeField field, int max_length,
                  int max_degree);

    int num_generators() const { return static_cast<int>(generators_.size()); }
    const Generator& generator(int i) const;
    const PrimeField& field() const { return field_; }
    int max_length() const { return max_length_; }
    int max_degree() const { return max_degree_; }

    int internal_degree(const Word& w) const;
    int min_generator_degree() const;

    /* Number of length-n words, m^n; guarded against overflow. */
    long long words_of_length(int n) const;
    /* Rank of w among words of its own length, in lex order. */
    long long word_rank(const Word& w) const;
    Word word_unrank(int length, long long rank) const;

private:
    std::vector<Generator> generators_;
    PrimeField field_;
    int max_length_;
    int max_degree_;
};

/* Element of T(V): sparse linear combination of words with coefficients in
 * F_p. Identity comparisons of the context are by address; elements of two
 * different context objects never mix. */
class TensorElement {
public:
    explicit TensorElement(const TensorContext& ctx);

    static TensorElement unit(const TensorContext& ctx);
    static TensorElement generator(const TensorContext& ctx, int i);
    static TensorElement single_word(const TensorContext& ctx, const Word& w, long long c = 1);

    const TensorContext& context() const { return *ctx_; }

    using Terms = std::map<Word, long long, LengthLexLess>;
    const Terms& terms() const { return terms_; }
    long long coeff(const Word& w) const;

    /* Adds c * w; words beyond the length cutoff are rejected here (the
     * dropping-with-flag path is reserved for products). */
    void add_term(const Word& w, long long c);

    bool is_zero() const { return terms_.empty(); }

    /* Set when a product dropped words beyond the length cutoff; identities
     * involving a flagged element are only certified below the cutoff. */
    bool truncated() const { return truncated_; }

    TensorElement& operator+=(const TensorElement& rhs);
    TensorElement& operator-=(const TensorElement& rhs);
    TensorElement& operator*=(long long scalar);

    friend bool operator==(const TensorElement& a, const TensorElement& b);

private:
    friend TensorElement concat_product(const TensorElement& a, const TensorElement& b);

    const TensorContext* ctx_;
    Terms terms_;
    bool truncated_ = false;
};

/* Bilinear concatenation of words. Products that overflow the length cutoff
 * are dropped and the result is flagged as truncated. */
TensorElement concat_product(const TensorElement& a, const TensorElement& b);

/* One line per term, "c · g1 g2 ... gk", length-lex order; the empty word
 * prints as 1. */
std::string to_string(const TensorElement& x);

/* Element of T(V) ⊗ T(V), sparse over word pairs. */
class TensorSquareElement {
public:
    explicit TensorSquareElement(const TensorContext& ctx);

    const TensorContext& context() const { return *ctx_; }

    using Terms = std::map<std::pair<Word, Word>, long long>;
    const Terms& terms() const { return terms_; }
    long long coeff(const Word& left, const Word& right) const;
    void add_term(const Word& left, const Word& right, long long c);

    friend bool operator==(const TensorSquareElement& a, const TensorSquareElement& b);

private:
    const TensorContext* ctx_;
    Terms terms_;
};

/* Δ, determined by declaring every generator primitive and extending
 * multiplicatively: a word of length n splits over all 2^n position subsets,
 * subword ⊗ complementary subword, sign-free. */
TensorSquareElement coproduct(const TensorElement& x);

/* Product in T(V) ⊗ T(V), componentwise concatenation. */
TensorSquareElement square_product(const TensorSquareElement& a, const TensorSquareElement& b);

TensorSquareElement tensor_pair(const TensorElement& a, const TensorElement& b);

/* Primitives of tensor length n: the kernel of the reduced coproduct
 * Δ̄(x) = Δ(x) − x⊗1 − 1⊗x on the length-n component, as a subspace of
 * T_n(V) in word coordinates. */
Subspace primitives(const TensorContext& ctx, int n);

/* Degreewise subspace list indexed by tensor length 0..max_length; the
 * length-0 component lives in the 1-dimensional span of the empty word. */
using DegreewiseSubspaces = std::vector<Subspace>;

/* The subalgebra generated by the given homogeneous family: for each length
 * l, the span of all products of family elements with lengths summing to l,
 * with the unit at length 0. */
DegreewiseSubspaces generated_subalgebra(const TensorContext& ctx,
                                         const std::vector<std::pair<int, Subspace>>& family);

struct SubcoalgebraCheck {
    bool ok;
    /* On failure: the offending basis element and the first coproduct term
     * that escapes B ⊗ B. */
    int length = 0;
    std::optional<TensorElement> element;
    Word left, right;
};

/* Coproduct closure Δ(B) ⊆ B ⊗ B, the machine-checkable face of being a
 * subcoalgebra. The bidegree-(i, j) component of Δ(x) lies in B_i ⊗ B_j
 * exactly when its column slices lie in B_i and its row slices in B_j. */
SubcoalgebraCheck is_subcoalgebra(const TensorContext& ctx, const DegreewiseSubspaces& b);

enum class Grading { TensorLength, InternalDegree };

/* Dimension series of T(V) itself. Length grading counts all words; the
 * internal grading is the exact series of the untruncated tensor algebra,
 * 1/(1 − v(t)) for v the generator-degree series. */
TruncatedSeries poincare_series_of(const TensorContext& ctx, Grading grading);

/* Dimension series of a degreewise subspace list. In the internal grading
 * each component must split over the per-degree coordinate subspaces (it is
 * an error if a component is not internally graded); the cutoff is capped at
 * the largest degree all of whose words fit inside the hosted lengths. */
TruncatedSeries poincare_series_of(const TensorContext& ctx, const DegreewiseSubspaces& b,
                                   Grading grading);

}  // namespace loopdec

#endif
