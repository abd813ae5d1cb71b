#include "loopdec/qsymm.hpp"

#include <stdexcept>
#include <utility>

#include "loopdec/hilton_milnor.hpp"
#include "loopdec/space.hpp"

namespace loopdec {

namespace {

void check_composition(const Composition& alpha)
{
    for (int part : alpha)
        if (part < 1)
            throw std::invalid_argument("composition entries must be positive; got " +
                                        std::to_string(part));
}

void require_odd_prime(int p)
{
    if (p < 3 || p % 2 == 0)
        throw std::invalid_argument("the splitting needs an odd prime; got " +
                                    std::to_string(p));
    for (int d = 3; d * d <= p; d += 2)
        if (p % d == 0)
            throw std::invalid_argument("the splitting needs an odd prime; got " +
                                        std::to_string(p) + " = " + std::to_string(d) +
                                        " * " + std::to_string(p / d));
}

void require_cutoff(int cutoff)
{
    if (cutoff < 0)
        throw std::invalid_argument("cutoff must be nonnegative; got " +
                                    std::to_string(cutoff));
}

/* 0-based residue class of an exponent in [1, p-1] modulo p - 1. */
int residue_index(int exponent, int p)
{
    return (exponent - 1) % (p - 1);
}

void bump(TruncatedSeries& s, int degree)
{
    s.set_coeff(degree, s.coeff(degree) + 1);
}

/* Reduced series of CP^infinity: one class in each positive even degree. */
TruncatedSeries cp_reduced(int cutoff)
{
    TruncatedSeries c = TruncatedSeries::zero(cutoff);
    for (int d = 2; d <= cutoff; d += 2)
        c.set_coeff(d, 1);
    return c;
}

std::string block_label(int i, int j, bool symmetric)
{
    return std::string(symmetric ? "A+(" : "A-(") + std::to_string(i) + "," +
           std::to_string(j) + ")";
}

}  // namespace

int composition_weight(const Composition& alpha)
{
    int w = 0;
    for (int part : alpha)
        w += part;
    return w;
}

std::vector<Composition> compositions_of(int n)
{
    if (n < 0)
        throw std::invalid_argument("compositions_of: n must be nonnegative; got " +
                                    std::to_string(n));
    if (n == 0)
        return {Composition{}};
    std::vector<Composition> out;
    for (int first = 1; first <= n; ++first)
        for (auto rest : compositions_of(n - first)) {
            rest.insert(rest.begin(), first);
            out.push_back(std::move(rest));
        }
    return out;
}

bool CompositionOrder::operator()(const Composition& a, const Composition& b) const
{
    const int wa = composition_weight(a);
    const int wb = composition_weight(b);
    if (wa != wb)
        return wa < wb;
    if (a.size() != b.size())
        return a.size() < b.size();
    return a < b;
}

NSymmElement NSymmElement::unit()
{
    NSymmElement e;
    e.add_term({}, 1);
    return e;
}

NSymmElement NSymmElement::generator(int n)
{
    if (n < 1)
        throw std::invalid_argument("generator weight must be at least 1; got " +
                                    std::to_string(n));
    NSymmElement e;
    e.add_term({n}, 1);
    return e;
}

NSymmElement NSymmElement::monomial(const Composition& alpha)
{
    NSymmElement e;
    e.add_term(alpha, 1);
    return e;
}

Int NSymmElement::coeff(const Composition& alpha) const
{
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Int(0) : it->second;
}

void NSymmElement::add_term(const Composition& alpha, const Int& c)
{
    check_composition(alpha);
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(alpha, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

NSymmElement& NSymmElement::operator+=(const NSymmElement& rhs)
{
    for (const auto& [alpha, c] : rhs.terms_)
        add_term(alpha, c);
    return *this;
}

NSymmElement& NSymmElement::operator-=(const NSymmElement& rhs)
{
    for (const auto& [alpha, c] : rhs.terms_)
        add_term(alpha, -c);
    return *this;
}

NSymmElement& NSymmElement::operator*=(const Int& scalar)
{
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [alpha, c] : terms_)
        c *= scalar;
    return *this;
}

NSymmElement nsymm_concat(const NSymmElement& x, const NSymmElement& y)
{
    NSymmElement out;
    for (const auto& [alpha, cx] : x.terms())
        for (const auto& [beta, cy] : y.terms()) {
            Composition joined = alpha;
            joined.insert(joined.end(), beta.begin(), beta.end());
            out.add_term(joined, cx * cy);
        }
    return out;
}

Int nsymm_counit(const NSymmElement& x)
{
    return x.coeff({});
}

bool CompositionSquare::KeyOrder::operator()(const Key& a, const Key& b) const
{
    CompositionOrder less;
    if (less(a.first, b.first))
        return true;
    if (less(b.first, a.first))
        return false;
    return less(a.second, b.second);
}

Int CompositionSquare::coeff(const Composition& left, const Composition& right) const
{
    auto it = terms_.find({left, right});
    return it == terms_.end() ? Int(0) : it->second;
}

void CompositionSquare::add_term(const Composition& left, const Composition& right,
                                 const Int& c)
{
    check_composition(left);
    check_composition(right);
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(Key{left, right}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

CompositionSquare nsymm_coproduct(const NSymmElement& x)
{
    CompositionSquare out;
    for (const auto& [alpha, c] : x.terms()) {
        const std::size_t l = alpha.size();
        /* Odometer over the alpha_i + 1 ways to split each part between the
         * two sides; parts sent whole to one side vanish from the other. */
        std::vector<int> left_share(l, 0);
        for (;;) {
            Composition left;
            Composition right;
            for (std::size_t i = 0; i < l; ++i) {
                if (left_share[i] > 0)
                    left.push_back(left_share[i]);
                if (alpha[i] - left_share[i] > 0)
                    right.push_back(alpha[i] - left_share[i]);
            }
            out.add_term(left, right, c);
            std::size_t i = 0;
            while (i < l && left_share[i] == alpha[i])
                left_share[i++] = 0;
            if (i == l)
                break;
            ++left_share[i];
        }
    }
    return out;
}

CompositionSquare nsymm_coproduct(const NSymmElement& x, int weight_cutoff)
{
    NSymmElement kept;
    for (const auto& [alpha, c] : x.terms())
        if (composition_weight(alpha) <= weight_cutoff)
            kept.add_term(alpha, c);
    return nsymm_coproduct(kept);
}

AntipodeReport antipode(int max_weight)
{
    if (max_weight < 0)
        throw std::invalid_argument("antipode: max_weight must be nonnegative; got " +
                                    std::to_string(max_weight));
    AntipodeReport rep;
    rep.max_weight = max_weight;
    rep.chi.reserve(static_cast<std::size_t>(max_weight) + 1);
    rep.chi.push_back(NSymmElement::unit());
    for (int n = 1; n <= max_weight; ++n) {
        NSymmElement value;
        value -= NSymmElement::generator(n);
        for (int s = 1; s < n; ++s)
            value -= nsymm_concat(rep.chi[static_cast<std::size_t>(s)],
                                  NSymmElement::generator(n - s));
        rep.chi.push_back(std::move(value));
    }

    /* Certify both convolution identities by direct expansion. The left one
     * is the recursion read back; the right one was never used to solve for
     * chi, and the algebra is noncommutative, so it is an independent
     * constraint. */
    rep.axiom_holds = true;
    for (int n = 1; n <= max_weight; ++n) {
        NSymmElement left;
        NSymmElement right;
        for (int s = 0; s <= n; ++s) {
            const NSymmElement zs =
                s == 0 ? NSymmElement::unit() : NSymmElement::generator(s);
            const NSymmElement zt =
                s == n ? NSymmElement::unit() : NSymmElement::generator(n - s);
            left += nsymm_concat(rep.chi[static_cast<std::size_t>(s)], zt);
            right += nsymm_concat(zs, rep.chi[static_cast<std::size_t>(n - s)]);
        }
        if (!left.is_zero() || !right.is_zero())
            rep.axiom_holds = false;
    }

    rep.matches_signed_formula = true;
    for (int n = 1; n <= max_weight; ++n) {
        NSymmElement with_sign;
        NSymmElement without_sign;
        for (const auto& alpha : compositions_of(n)) {
            without_sign.add_term(alpha, 1);
            with_sign.add_term(alpha, alpha.size() % 2 == 0 ? 1 : -1);
        }
        if (with_sign != rep.chi[static_cast<std::size_t>(n)])
            rep.matches_signed_formula = false;
        if (without_sign != rep.chi[static_cast<std::size_t>(n)] &&
            !rep.first_unsigned_mismatch)
            rep.first_unsigned_mismatch = n;
    }
    rep.matches_unsigned_formula = !rep.first_unsigned_mismatch.has_value();
    return rep;
}

NSymmElement apply_antipode(const AntipodeReport& rep, const NSymmElement& x)
{
    NSymmElement out;
    for (const auto& [alpha, c] : x.terms()) {
        NSymmElement factor = NSymmElement::unit();
        for (auto it = alpha.rbegin(); it != alpha.rend(); ++it) {
            if (*it > rep.max_weight)
                throw std::invalid_argument(
                    "apply_antipode: generator weight " + std::to_string(*it) +
                    " exceeds the table bound " + std::to_string(rep.max_weight));
            factor = nsymm_concat(factor, rep.chi[static_cast<std::size_t>(*it)]);
        }
        factor *= c;
        out += factor;
    }
    return out;
}

NSymmElement antipode_convolution(const AntipodeReport& rep, const NSymmElement& x)
{
    NSymmElement out;
    const CompositionSquare dx = nsymm_coproduct(x);
    for (const auto& [pair, c] : dx.terms()) {
        NSymmElement piece = nsymm_concat(
            apply_antipode(rep, NSymmElement::monomial(pair.first)),
            NSymmElement::monomial(pair.second));
        piece *= c;
        out += piece;
    }
    return out;
}

QSymmElement QSymmElement::unit()
{
    QSymmElement e;
    e.add_term({}, 1);
    return e;
}

QSymmElement QSymmElement::monomial(const Composition& alpha)
{
    QSymmElement e;
    e.add_term(alpha, 1);
    return e;
}

Int QSymmElement::coeff(const Composition& alpha) const
{
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Int(0) : it->second;
}

void QSymmElement::add_term(const Composition& alpha, const Int& c)
{
    check_composition(alpha);
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(alpha, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

QSymmElement& QSymmElement::operator+=(const QSymmElement& rhs)
{
    for (const auto& [alpha, c] : rhs.terms_)
        add_term(alpha, c);
    return *this;
}

QSymmElement& QSymmElement::operator-=(const QSymmElement& rhs)
{
    for (const auto& [alpha, c] : rhs.terms_)
        add_term(alpha, -c);
    return *this;
}

QSymmElement& QSymmElement::operator*=(const Int& scalar)
{
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [alpha, c] : terms_)
        c *= scalar;
    return *this;
}

Int dual_pairing(const QSymmElement& f, const NSymmElement& x)
{
    Int total = 0;
    for (const auto& [alpha, c] : f.terms())
        total += c * x.coeff(alpha);
    return total;
}

namespace {

void shuffle_into(const Composition& a, std::size_t ia, const Composition& b,
                  std::size_t ib, Composition& acc, QSymmElement& out)
{
    if (ia == a.size() && ib == b.size()) {
        out.add_term(acc, 1);
        return;
    }
    if (ia < a.size()) {
        acc.push_back(a[ia]);
        shuffle_into(a, ia + 1, b, ib, acc, out);
        acc.pop_back();
    }
    if (ib < b.size()) {
        acc.push_back(b[ib]);
        shuffle_into(a, ia, b, ib + 1, acc, out);
        acc.pop_back();
    }
    if (ia < a.size() && ib < b.size()) {
        acc.push_back(a[ia] + b[ib]);
        shuffle_into(a, ia + 1, b, ib + 1, acc, out);
        acc.pop_back();
    }
}

}  // namespace

QSymmElement quasi_shuffle(const QSymmElement& f, const QSymmElement& g)
{
    QSymmElement out;
    for (const auto& [alpha, cf] : f.terms())
        for (const auto& [beta, cg] : g.terms()) {
            QSymmElement prod;
            Composition acc;
            shuffle_into(alpha, 0, beta, 0, acc, prod);
            prod *= cf * cg;
            out += prod;
        }
    return out;
}

CompositionSquare deconcatenation(const QSymmElement& f)
{
    CompositionSquare out;
    for (const auto& [alpha, c] : f.terms())
        for (std::size_t cut = 0; cut <= alpha.size(); ++cut)
            out.add_term(
                Composition(alpha.begin(), alpha.begin() + static_cast<long>(cut)),
                Composition(alpha.begin() + static_cast<long>(cut), alpha.end()), c);
    return out;
}

namespace {

const TruncatedSeries& block_entry(const SplittingTable& t,
                                   const std::vector<TruncatedSeries>& part, int i,
                                   int j)
{
    if (part.empty())
        throw std::out_of_range("splitting table has no smash block part");
    if (i < 1 || i > t.prime - 1 || j < 1 || j > t.prime - 1)
        throw std::out_of_range("block residues must lie in [1, p-1]; got (" +
                                std::to_string(i) + ", " + std::to_string(j) + ")");
    return part[static_cast<std::size_t>((i - 1) * (t.prime - 1) + (j - 1))];
}

}  // namespace

const TruncatedSeries& SplittingTable::wedge_at(int i) const
{
    if (wedge.empty())
        throw std::out_of_range("splitting table has no wedge part");
    if (i < 1 || i > prime - 1)
        throw std::out_of_range("wedge residue must lie in [1, p-1]; got " +
                                std::to_string(i));
    return wedge[static_cast<std::size_t>(i - 1)];
}

const TruncatedSeries& SplittingTable::block_at(int i, int j) const
{
    return block_entry(*this, block, i, j);
}

const TruncatedSeries& SplittingTable::symmetric_at(int i, int j) const
{
    return block_entry(*this, block_symmetric, i, j);
}

const TruncatedSeries& SplittingTable::antisymmetric_at(int i, int j) const
{
    return block_entry(*this, block_antisymmetric, i, j);
}

SplittingTable mnt_splitting(int p, int cutoff)
{
    require_odd_prime(p);
    require_cutoff(cutoff);
    SplittingTable table;
    table.prime = p;
    table.cutoff = cutoff;
    table.wedge.assign(static_cast<std::size_t>(p - 1), TruncatedSeries::zero(cutoff));
    for (int a = 1; 2 * a + 1 <= cutoff; ++a)
        bump(table.wedge[static_cast<std::size_t>(residue_index(a, p))], 2 * a + 1);
    return table;
}

SplittingTable refined_splitting(int p, int cutoff)
{
    require_odd_prime(p);
    require_cutoff(cutoff);
    SplittingTable table;
    table.prime = p;
    table.cutoff = cutoff;
    const std::size_t blocks = static_cast<std::size_t>(p - 1) * (p - 1);
    table.block.assign(blocks, TruncatedSeries::zero(cutoff));
    table.block_symmetric.assign(blocks, TruncatedSeries::zero(cutoff));
    table.block_antisymmetric.assign(blocks, TruncatedSeries::zero(cutoff));
    table.note =
        "Blocks are indexed by independent residues (i, j) of the two smash "
        "exponents; renderings of the bidegree pattern that repeat the first "
        "residue in the second coordinate disagree with the one-variable degree "
        "pattern and are treated as a misprint.";
    for (int a = 1; 2 * a + 3 <= cutoff; ++a)
        for (int b = 1; 2 * (a + b) + 1 <= cutoff; ++b) {
            const int degree = 2 * (a + b) + 1;
            const std::size_t at = static_cast<std::size_t>(
                residue_index(a, p) * (p - 1) + residue_index(b, p));
            bump(table.block[at], degree);
            if (a <= b)
                bump(table.block_symmetric[at], degree);
            else
                bump(table.block_antisymmetric[at], degree);
        }
    return table;
}

namespace {

TruncatedSeries refined_total(const SplittingTable& table)
{
    TruncatedSeries total = TruncatedSeries::zero(table.cutoff);
    for (const auto& s : table.block_symmetric)
        total += s;
    for (const auto& s : table.block_antisymmetric)
        total += s;
    return total;
}

std::vector<SpaceDescriptor> wedge_descriptors(const SplittingTable& table)
{
    std::vector<SpaceDescriptor> ys;
    for (int i = 1; i <= table.prime - 1; ++i)
        ys.emplace_back("A" + std::to_string(i), table.wedge_at(i));
    return ys;
}

std::vector<SpaceDescriptor> block_descriptors(const SplittingTable& table)
{
    std::vector<SpaceDescriptor> ys;
    for (int i = 1; i <= table.prime - 1; ++i)
        for (int j = 1; j <= table.prime - 1; ++j) {
            ys.emplace_back(block_label(i, j, true), table.symmetric_at(i, j));
            ys.emplace_back(block_label(i, j, false), table.antisymmetric_at(i, j));
        }
    return ys;
}

}  // namespace

GaneaReport ganea_loop_check(int p, int cutoff)
{
    require_odd_prime(p);
    require_cutoff(cutoff);
    const TruncatedSeries c = cp_reduced(cutoff);
    const TruncatedSeries one_plus_c = TruncatedSeries::one(cutoff) + c;
    const TruncatedSeries lhs = geometric_inverse(c);
    const TruncatedSeries algebraic_rhs =
        mul(one_plus_c, geometric_inverse(mul(c, c)));

    /* Build the blocks one degree past the cutoff so their desuspension is
     * still certified through it. */
    const TruncatedSeries smash = refined_total(refined_splitting(p, cutoff + 1));
    const TruncatedSeries refined_rhs =
        mul(one_plus_c, geometric_inverse(shift(smash, -1)));

    const auto first_algebraic = first_difference(lhs, algebraic_rhs);
    const auto first_refined = first_difference(lhs, refined_rhs);
    GaneaReport rep{lhs,
                    algebraic_rhs,
                    refined_rhs,
                    first_algebraic,
                    first_refined,
                    !first_algebraic.has_value(),
                    !first_refined.has_value(),
                    false};
    rep.ok = rep.algebraic_ok && rep.refined_ok;
    return rep;
}

FactorizationReport qsymm_factorization_report(int p, int cutoff)
{
    require_odd_prime(p);
    require_cutoff(cutoff);
    const TruncatedSeries c = cp_reduced(cutoff);
    const TruncatedSeries target = geometric_inverse(c);
    const TruncatedSeries one_plus_c = TruncatedSeries::one(cutoff) + c;

    /* Either route needs summand series certified one degree past the
     * cutoff, for the same desuspension reason as every loop series. */
    const HmReport on_wedge = verify_hm(wedge_descriptors(mnt_splitting(p, cutoff + 1)), cutoff);
    const SplittingTable refined = refined_splitting(p, cutoff + 1);
    const HmReport on_blocks = verify_hm(block_descriptors(refined), cutoff);
    const TruncatedSeries refined_product = mul(one_plus_c, on_blocks.rhs);

    std::vector<std::string> empty_blocks;
    for (int i = 1; i <= p - 1; ++i)
        for (int j = 1; j <= p - 1; ++j) {
            if (refined.symmetric_at(i, j).truncated(cutoff).is_zero())
                empty_blocks.push_back(block_label(i, j, true));
            if (refined.antisymmetric_at(i, j).truncated(cutoff).is_zero())
                empty_blocks.push_back(block_label(i, j, false));
        }

    const std::size_t wedge_summands = static_cast<std::size_t>(p - 1);
    const std::size_t refined_summands =
        2 * static_cast<std::size_t>(p - 1) * (p - 1) + 1;
    const auto first_wedge = first_difference(on_wedge.rhs, target);
    const auto first_refined = first_difference(refined_product, target);
    return FactorizationReport{target,
                               on_wedge.rhs,
                               refined_product,
                               wedge_summands,
                               refined_summands,
                               std::move(empty_blocks),
                               on_wedge.ok && !first_wedge.has_value(),
                               on_blocks.ok && !first_refined.has_value(),
                               refined_summands > wedge_summands,
                               first_wedge,
                               first_refined};
}

}  // namespace loopdec
