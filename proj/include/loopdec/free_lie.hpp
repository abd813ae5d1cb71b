#ifndef LOOPDEC_FREE_LIE_HPP
#define LOOPDEC_FREE_LIE_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "loopdec/series.hpp"
#include "loopdec/tensor_hopf.hpp"

namespace loopdec {

/* True when w is strictly smaller than every proper cyclic rotation. */
bool is_lyndon(const Word& w);

/* All Lyndon words over {0, ..., m-1} up to max_len, in length-then-lex
 * order (Duval enumeration, re-bucketed by length). This order is the
 * canonical index set for basis elements everywhere downstream. */
std::vector<Word> lyndon_words(int m, int max_len);

/* Occurrence counts of each letter, as a length-m vector. */
std::vector<int> multidegree(const Word& w, int m);

/* Number of Lyndon words of length n over m letters:
 * (1/n) Σ_{d|n} μ(d) m^{n/d}. */
Int witt_count(int m, int n);

/* Number of Lyndon words with occurrence vector α:
 * (1/|α|) Σ_{d | gcd(α)} μ(d) · multinomial(|α|/d; α/d). */
Int witt_count_multi(const std::vector<int>& alpha);

/* Binary bracketing tree; a leaf holds a generator index. */
struct Bracketing {
    int leaf = -1;
    std::unique_ptr<Bracketing> left, right;

    bool is_leaf() const { return !left; }
};

/* Standard (right-normed Lyndon) bracketing: w = u·v with v the longest
 * proper Lyndon suffix, recursively. */
Bracketing standard_bracketing(const Word& w);

/* Rendering like "[a,[a,b]]" using the context's generator names. */
std::string to_string(const Bracketing& b, const TensorContext& ctx);

/* The word at the leaves, left to right. */
Word bracketing_word(const Bracketing& b);

/* Recursive expansion [x, y] = xy - yx into the tensor algebra, sign-free. */
TensorElement expand(const Bracketing& b, const TensorContext& ctx);

/* L_n(V) inside T_n(V): the span of the expansions of all length-n Lyndon
 * words. The dimension is checked against the Witt count; expansions are
 * unitriangular against lex order, so the check cannot fail for any p. */
Subspace lie_power_subspace(const TensorContext& ctx, int n);

struct PbwReport {
    TruncatedSeries lhs, rhs;
    std::optional<int> first_mismatch;
    bool ok;
};

/* Length-graded Poincaré–Birkhoff–Witt identity for the free Lie algebra on
 * m letters: 1/(1 - m t) = Π_n (1 - t^n)^{-W(m, n)} through the cutoff. */
PbwReport pbw_series_check(int m, int cutoff);

/* Internal-degree form: 1/(1 - v(t)) = Π_w 1/(1 - t^{deg w}) over Lyndon
 * words w, where deg w sums the letter degrees. Requires even generators in
 * spirit; this artifact is sign-free throughout. */
PbwReport pbw_series_check(const TensorContext& ctx, int cutoff);

}  // namespace loopdec

#endif
