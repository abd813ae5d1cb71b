#ifndef LOOPDEC_QSYMM_HPP
#define LOOPDEC_QSYMM_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "loopdec/series.hpp"

namespace loopdec {

/* A composition: a finite sequence of positive integers. Compositions of n
 * index both the monomial basis z_a = z_{a1}...z_{al} of the weight-n part
 * of NSymm and the dual monomial basis M_a of QSymm. */
using Composition = std::vector<int>;

int composition_weight(const Composition& alpha);

/* All compositions of n, smallest first part first. compositions_of(0) is
 * the singleton empty composition. */
std::vector<Composition> compositions_of(int n);

/* Weight, then length, then lexicographic. Keeps sparse term maps listed
 * in degree order, which is what the printers want. */
struct CompositionOrder {
    bool operator()(const Composition& a, const Composition& b) const;
};

/* An element of NSymm, the free associative algebra on generators z_1,
 * z_2, ... with z_n in topological degree 2n, stored as a sparse integer
 * combination of basis monomials z_a. The Hopf structure lives in free
 * functions below: concatenation product, the coproduct sending z_n to
 * sum_{s+t=n} z_s (x) z_t, and the antipode solved from its axiom. */
class NSymmElement {
public:
    using Terms = std::map<Composition, Int, CompositionOrder>;

    NSymmElement() = default;

    static NSymmElement unit();
    static NSymmElement generator(int n);
    static NSymmElement monomial(const Composition& alpha);

    const Terms& terms() const { return terms_; }
    Int coeff(const Composition& alpha) const;
    void add_term(const Composition& alpha, const Int& c);
    bool is_zero() const { return terms_.empty(); }

    NSymmElement& operator+=(const NSymmElement& rhs);
    NSymmElement& operator-=(const NSymmElement& rhs);
    NSymmElement& operator*=(const Int& scalar);

    bool operator==(const NSymmElement& rhs) const { return terms_ == rhs.terms_; }
    bool operator!=(const NSymmElement& rhs) const { return !(*this == rhs); }

private:
    Terms terms_;
};

/* Product of NSymm: bilinear extension of concatenation of compositions. */
NSymmElement nsymm_concat(const NSymmElement& x, const NSymmElement& y);

/* Coefficient of the empty monomial. */
Int nsymm_counit(const NSymmElement& x);

/* Sparse element of a tensor square, indexed by ordered pairs of
 * compositions. Used both for the NSymm coproduct (z basis on each side)
 * and for the QSymm deconcatenation coproduct (M basis); which basis is
 * meant is fixed by the operation that produced the element. */
class CompositionSquare {
public:
    using Key = std::pair<Composition, Composition>;
    struct KeyOrder {
        bool operator()(const Key& a, const Key& b) const;
    };
    using Terms = std::map<Key, Int, KeyOrder>;

    CompositionSquare() = default;

    const Terms& terms() const { return terms_; }
    Int coeff(const Composition& left, const Composition& right) const;
    void add_term(const Composition& left, const Composition& right, const Int& c);
    bool is_zero() const { return terms_.empty(); }

    bool operator==(const CompositionSquare& rhs) const { return terms_ == rhs.terms_; }
    bool operator!=(const CompositionSquare& rhs) const { return !(*this == rhs); }

private:
    Terms terms_;
};

/* Coproduct of NSymm: the algebra map with z_n |-> sum_{s+t=n} z_s (x) z_t,
 * the s = 0 and t = 0 terms landing on the unit. Every generator has even
 * topological degree, so no signs enter the componentwise products.
 * Weight is preserved, so the expansion of each input monomial is finite
 * and exact. The two-argument form drops input terms of weight above the
 * cutoff before expanding. */
CompositionSquare nsymm_coproduct(const NSymmElement& x);
CompositionSquare nsymm_coproduct(const NSymmElement& x, int weight_cutoff);

/* The antipode chi of NSymm on generators through a weight bound, solved
 * degreewise from the axiom (multiply) o (chi (x) id) o coproduct = unit o
 * counit, which pins chi(z_n) = -z_n - sum_{s=1}^{n-1} chi(z_s) z_{n-s}.
 * The report compares the solved values with the closed candidate sums
 * over compositions of n: with the sign (-1)^{length}, the candidate
 * matches; without signs it fails already at weight 1, and the first
 * failing weight is recorded. axiom_holds certifies both one-sided axioms
 * by direct expansion, including the right-handed one the recursion never
 * used. */
struct AntipodeReport {
    int max_weight = 0;
    std::vector<NSymmElement> chi;  // chi[n] is chi(z_n); chi[0] is the unit
    bool axiom_holds = false;
    bool matches_signed_formula = false;
    bool matches_unsigned_formula = false;
    std::optional<int> first_unsigned_mismatch;
};

AntipodeReport antipode(int max_weight);

/* chi extended to all of NSymm as an antiautomorphism: a monomial maps to
 * the reversed product of its generators' antipodes. Rejects elements
 * containing a generator beyond the report's weight bound. */
NSymmElement apply_antipode(const AntipodeReport& rep, const NSymmElement& x);

/* (multiply) o (chi (x) id) o coproduct applied to x. Equals
 * counit(x) * unit exactly when the antipode axiom holds on x, so this is
 * the spot check for elements the report's generator-level certificate
 * does not directly cover. */
NSymmElement antipode_convolution(const AntipodeReport& rep, const NSymmElement& x);

/* An element of QSymm, the graded dual of NSymm, as a sparse integer
 * combination of the monomial basis M_a dual to the z_a. The product is
 * the quasi-shuffle dual to the NSymm coproduct and the coproduct is
 * deconcatenation, dual to the NSymm product. */
class QSymmElement {
public:
    using Terms = std::map<Composition, Int, CompositionOrder>;

    QSymmElement() = default;

    static QSymmElement unit();
    static QSymmElement monomial(const Composition& alpha);

    const Terms& terms() const { return terms_; }
    Int coeff(const Composition& alpha) const;
    void add_term(const Composition& alpha, const Int& c);
    bool is_zero() const { return terms_.empty(); }

    QSymmElement& operator+=(const QSymmElement& rhs);
    QSymmElement& operator-=(const QSymmElement& rhs);
    QSymmElement& operator*=(const Int& scalar);

    bool operator==(const QSymmElement& rhs) const { return terms_ == rhs.terms_; }
    bool operator!=(const QSymmElement& rhs) const { return !(*this == rhs); }

private:
    Terms terms_;
};

/* The pairing <M_a, z_b> = delta_{ab}, extended bilinearly. */
Int dual_pairing(const QSymmElement& f, const NSymmElement& x);

/* Product of QSymm by the overlapping-shuffle recursion: the leading part
 * of a product term comes from the left factor, from the right factor, or
 * from merging both leading parts. Duality with the NSymm coproduct,
 * <f * g, x> = <f (x) g, coproduct(x)>, is enforced by tests against an
 * independent expansion. */
QSymmElement quasi_shuffle(const QSymmElement& f, const QSymmElement& g);

/* Coproduct of QSymm: M_a maps to the sum of M_prefix (x) M_suffix over
 * the length + 1 ways to cut a in two. */
CompositionSquare deconcatenation(const QSymmElement& f);

/* Series data for the p-local wedge decompositions of the suspension of
 * CP^infinity and of its smash with CP^infinity. Degrees are topological:
 * the class x^a (x squared to the a-th power, x the degree-2 generator)
 * suspends to degree 2a + 1, and the smash class x^a ^ x^b to degree
 * 2a + 2b + 1. wedge holds the one-variable summands A_i, indexed by the
 * residue i of the exponent in [1, p-1] modulo p - 1; block holds the
 * smash summands A_{i,j} indexed row-major by the residue pair, and
 * block_symmetric / block_antisymmetric their refinement under the factor
 * swap. Each builder fills only its own part and leaves the rest empty. */
struct SplittingTable {
    int prime = 0;
    int cutoff = 0;
    /* Populated by refined_splitting; flags the residue bookkeeping choice
     * in the second block coordinate. */
    std::string note;

    std::vector<TruncatedSeries> wedge;
    std::vector<TruncatedSeries> block;
    std::vector<TruncatedSeries> block_symmetric;
    std::vector<TruncatedSeries> block_antisymmetric;

    const TruncatedSeries& wedge_at(int i) const;
    const TruncatedSeries& block_at(int i, int j) const;
    const TruncatedSeries& symmetric_at(int i, int j) const;
    const TruncatedSeries& antisymmetric_at(int i, int j) const;
};

/* Split the reduced series of the suspension of CP^infinity into the p - 1
 * summands A_i collecting the degrees 2i + 1 + 2k(p - 1), k >= 0. The
 * summand series partition the full reduced series exactly. Requires p an
 * odd prime. */
SplittingTable mnt_splitting(int p, int cutoff);

/* Split the reduced series of (Sigma CP^infinity) ^ CP^infinity. A smash
 * class x^a ^ x^b lands in the block with i = residue(a), j = residue(b).
 * The factor swap sends x^a ^ x^b to x^b ^ x^a with no sign, both classes
 * being even before suspension, so orbits with a < b split into one
 * symmetric and one antisymmetric class and the diagonal a = b is
 * symmetric; the symmetric class of an orbit is booked in the block of
 * (min, max) and the antisymmetric one in the block of (max, min). The
 * per-block symmetric and antisymmetric series sum to the block series,
 * and all blocks together partition the smash series exactly. Requires p
 * an odd prime. */
SplittingTable refined_splitting(int p, int cutoff);

/* The loop decomposition induced by evaluation: with c the reduced series
 * of CP^infinity (one class in each positive even degree), the loop space
 * on the suspension has series 1/(1 - c), and splitting off one
 * CP^infinity factor leaves the loops on the smash, so
 * 1/(1 - c) = (1 + c) * 1/(1 - c^2). algebraic_rhs takes the right side
 * verbatim; refined_rhs reroutes the smash series through the blocks of
 * refined_splitting, so it additionally certifies that the blocks
 * partition the smash. */
struct GaneaReport {
    TruncatedSeries lhs;
    TruncatedSeries algebraic_rhs;
    TruncatedSeries refined_rhs;
    std::optional<int> first_algebraic_mismatch;
    std::optional<int> first_refined_mismatch;
    bool algebraic_ok = false;
    bool refined_ok = false;
    bool ok = false;
};

GaneaReport ganea_loop_check(int p, int cutoff);

/* Two p-local product decompositions of the loop space on the suspension
 * of CP^infinity, compared as factorizations of the series of QSymm,
 * 1/(1 - c). The wedge route loops the p - 1 one-variable summands A_i
 * through the Hilton-Milnor index; the refined route splits off a
 * CP^infinity factor and loops the 2(p-1)^2 smash blocks, so it has
 * strictly more summands for every odd p. empty_blocks names refined
 * summands with no cells through the cutoff; their loop factors are
 * trivial in range but the count still treats them as summands. */
struct FactorizationReport {
    TruncatedSeries target;
    TruncatedSeries wedge_product;
    TruncatedSeries refined_product;
    std::size_t wedge_summands = 0;
    std::size_t refined_summands = 0;  // counts the CP^infinity factor too
    std::vector<std::string> empty_blocks;
    bool wedge_ok = false;
    bool refined_ok = false;
    bool strictly_finer = false;
    std::optional<int> first_wedge_mismatch;
    std::optional<int> first_refined_mismatch;
};

FactorizationReport qsymm_factorization_report(int p, int cutoff);

}  // namespace loopdec

#endif
