#include "loopdec/oracles.hpp"

#include <stdexcept>

namespace loopdec {

LyndonCounts oracle_lyndon(int m, int max_len)
{
    if (m < 1 || max_len < 1)
        throw std::invalid_argument("oracle_lyndon: need m >= 1 and max_len >= 1");
    if (max_len > 15 || m > 4)
        throw std::invalid_argument("oracle_lyndon: instance beyond desk scale");
    LyndonCounts counts;
    for (int len = 1; len <= max_len; ++len)
        counts.by_length[len] = 0;
    std::vector<int> w;
    for (int len = 1; len <= max_len; ++len) {
        w.assign(static_cast<size_t>(len), 0);
        while (true) {
            bool minimal = true;
            for (int r = 1; r < len && minimal; ++r) {
                /* compare w against its rotation by r */
                for (int i = 0; i < len; ++i) {
                    const int a = w[static_cast<size_t>(i)];
                    const int b = w[static_cast<size_t>((i + r) % len)];
                    if (a != b) {
                        minimal = a < b;
                        break;
                    }
                    if (i == len - 1)
                        minimal = false;  // equal to a proper rotation
                }
            }
            if (minimal) {
                counts.by_length[len] += 1;
                std::vector<int> alpha(static_cast<size_t>(m), 0);
                for (int g : w)
                    ++alpha[static_cast<size_t>(g)];
                counts.by_multidegree[alpha] += 1;
            }
            /* next word in base m */
            int pos = len - 1;
            while (pos >= 0 && w[static_cast<size_t>(pos)] == m - 1)
                w[static_cast<size_t>(pos--)] = 0;
            if (pos < 0)
                break;
            ++w[static_cast<size_t>(pos)];
        }
    }
    return counts;
}

std::vector<Int> oracle_series_product(const std::vector<std::vector<Int>>& factors, int cutoff)
{
    if (cutoff < 0)
        throw std::invalid_argument("oracle_series_product: cutoff must be >= 0");
    std::vector<Int> acc(static_cast<size_t>(cutoff) + 1, 0);
    acc[0] = 1;
    for (const std::vector<Int>& f : factors) {
        std::vector<Int> next(static_cast<size_t>(cutoff) + 1, 0);
        for (int i = 0; i <= cutoff; ++i)
            for (int j = 0; i + j <= cutoff; ++j)
                if (j < static_cast<int>(f.size()))
                    next[static_cast<size_t>(i + j)] += acc[static_cast<size_t>(i)] * f[static_cast<size_t>(j)];
        acc = std::move(next);
    }
    return acc;
}

std::vector<Int> oracle_inverse_power_factor(int n, const Int& w, int cutoff)
{
    if (n < 1)
        throw std::invalid_argument("oracle_inverse_power_factor: period must be >= 1");
    if (w < 0)
        throw std::invalid_argument("oracle_inverse_power_factor: exponent must be >= 0");
    std::vector<Int> out(static_cast<size_t>(cutoff) + 1, 0);
    Int c = 1;  // C(w - 1 + k, k), updated multiplicatively
    for (int k = 0; k * n <= cutoff; ++k) {
        if (k > 0) {
            c *= w - 1 + k;
            c /= k;
        }
        out[static_cast<size_t>(k * n)] = c;
    }
    return out;
}

int oracle_primitives(int num_generators, long long p, int n)
{
    if (num_generators < 1 || n < 1 || p < 2)
        throw std::invalid_argument("oracle_primitives: bad instance");
    long long cols = 1;
    for (int i = 0; i < n; ++i) {
        cols *= num_generators;
        if (cols > 4096)
            throw std::invalid_argument("oracle_primitives: instance beyond desk scale");
    }

    /* Rows: one per (split position count i, left word, right word). Each
     * column word w contributes 1 for every proper subset of its positions,
     * the subset picking the left factor. */
    std::vector<std::vector<long long>> rows(
        static_cast<size_t>((n - 1) * cols), std::vector<long long>(static_cast<size_t>(cols), 0));
    for (long long col = 0; col < cols; ++col) {
        std::vector<int> w(static_cast<size_t>(n));
        long long rest = col;
        for (int i = n - 1; i >= 0; --i) {
            w[static_cast<size_t>(i)] = static_cast<int>(rest % num_generators);
            rest /= num_generators;
        }
        for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
            long long left = 0, right = 0;
            int left_len = 0, right_len = 0;
            for (int i = 0; i < n; ++i) {
                if (mask & (1u << i)) {
                    left = left * num_generators + w[static_cast<size_t>(i)];
                    ++left_len;
                } else {
                    right = right * num_generators + w[static_cast<size_t>(i)];
                    ++right_len;
                }
            }
            long long right_words = 1;
            for (int i = 0; i < right_len; ++i)
                right_words *= num_generators;
            const long long row = (left_len - 1) * cols + left * right_words + right;
            auto& entry = rows[static_cast<size_t>(row)][static_cast<size_t>(col)];
            entry = (entry + 1) % p;
        }
    }

    /* Forward elimination only; rank is all we need. */
    int rank = 0;
    for (long long col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
        size_t pivot = rows.size();
        for (size_t r = static_cast<size_t>(rank); r < rows.size(); ++r) {
            if (rows[r][static_cast<size_t>(col)] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows.size())
            continue;
        std::swap(rows[static_cast<size_t>(rank)], rows[pivot]);
        /* scale pivot row to 1 via brute-force inverse */
        long long inv = 0;
        for (long long x = 1; x < p; ++x)
            if ((rows[static_cast<size_t>(rank)][static_cast<size_t>(col)] * x) % p == 1) {
                inv = x;
                break;
            }
        for (auto& v : rows[static_cast<size_t>(rank)])
            v = (v * inv) % p;
        for (size_t r = static_cast<size_t>(rank) + 1; r < rows.size(); ++r) {
            const long long factor = rows[r][static_cast<size_t>(col)];
            if (factor == 0)
                continue;
            for (long long c2 = 0; c2 < cols; ++c2) {
                auto& v = rows[r][static_cast<size_t>(c2)];
                v = (v - factor * rows[static_cast<size_t>(rank)][static_cast<size_t>(c2)]) % p;
                if (v < 0)
                    v += p;
            }
        }
        ++rank;
    }
    return static_cast<int>(cols) - rank;
}

QSymmElement oracle_quasi_shuffle(const Composition& alpha, const Composition& beta)
{
    const int w = composition_weight(alpha) + composition_weight(beta);
    QSymmElement out;
    const unsigned long long masks = w == 0 ? 1 : 1ULL << (w - 1);
    for (unsigned long long mask = 0; mask < masks; ++mask) {
        /* Bit k of the mask cuts gamma between positions k and k + 1. */
        Composition gamma;
        int run = 0;
        for (int pos = 0; pos < w; ++pos) {
            ++run;
            if (pos == w - 1 || (mask >> pos) & 1) {
                gamma.push_back(run);
                run = 0;
            }
        }
        /* Count the splits gamma_i = s_i + t_i whose nonzero halves spell
         * out alpha on the left and beta on the right. */
        Int ways = 0;
        std::vector<int> left_share(gamma.size(), 0);
        for (;;) {
            Composition left;
            Composition right;
            for (size_t i = 0; i < gamma.size(); ++i) {
                if (left_share[i] > 0)
                    left.push_back(left_share[i]);
                if (gamma[i] - left_share[i] > 0)
                    right.push_back(gamma[i] - left_share[i]);
            }
            if (left == alpha && right == beta)
                ++ways;
            size_t i = 0;
            while (i < gamma.size() && left_share[i] == gamma[i])
                left_share[i++] = 0;
            if (i == gamma.size())
                break;
            ++left_share[i];
        }
        if (ways != 0)
            out.add_term(gamma, ways);
    }
    return out;
}

namespace {

/* Forward elimination mod p over dense long long rows, in place. Returns the
 * rank and leaves the first rank rows independent. */
int eliminate_rows(std::vector<std::vector<long long>>& rows, long long p)
{
    const size_t cols = rows.empty() ? 0 : rows[0].size();
    int rank = 0;
    for (size_t col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
        size_t pivot = rows.size();
        for (size_t r = static_cast<size_t>(rank); r < rows.size(); ++r) {
            if (rows[r][col] % p != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows.size())
            continue;
        std::swap(rows[static_cast<size_t>(rank)], rows[pivot]);
        auto& lead = rows[static_cast<size_t>(rank)];
        long long head = ((lead[col] % p) + p) % p;
        long long inv = 0;
        for (long long x = 1; x < p; ++x)
            if ((head * x) % p == 1) {
                inv = x;
                break;
            }
        for (auto& v : lead)
            v = ((v % p) * inv % p + p) % p;
        for (size_t r = static_cast<size_t>(rank) + 1; r < rows.size(); ++r) {
            const long long factor = ((rows[r][col] % p) + p) % p;
            if (factor == 0)
                continue;
            for (size_t c2 = 0; c2 < cols; ++c2)
                rows[r][c2] = (((rows[r][c2] - factor * lead[c2]) % p) + p) % p;
        }
        ++rank;
    }
    rows.resize(static_cast<size_t>(rank), std::vector<long long>());
    return rank;
}

/* Dense expansion, over words indexed base-m left to right, of the
 * right-nested bracket determined by a generator sequence. */
std::vector<long long> bracket_expansion(const std::vector<int>& seq, int m, long long p)
{
    std::vector<long long> v(static_cast<size_t>(m), 0);
    v[static_cast<size_t>(seq.back())] = 1;
    long long span = m;  // number of words of v's current length
    for (size_t i = seq.size() - 1; i-- > 0;) {
        const long long g = seq[i];
        std::vector<long long> next(static_cast<size_t>(span * m), 0);
        for (long long idx = 0; idx < span; ++idx) {
            if (v[static_cast<size_t>(idx)] == 0)
                continue;
            const long long c = v[static_cast<size_t>(idx)];
            auto& front = next[static_cast<size_t>(g * span + idx)];
            front = (front + c) % p;
            auto& back = next[static_cast<size_t>(idx * m + g)];
            back = ((back - c) % p + p) % p;
        }
        v = std::move(next);
        span *= m;
    }
    return v;
}

}  // namespace

std::vector<Int> oracle_subalgebra_dims(int num_generators, long long p,
                                        const std::vector<int>& lengths, int max_length)
{
    if (num_generators < 1 || p < 2 || max_length < 0)
        throw std::invalid_argument("oracle_subalgebra_dims: bad instance");
    long long top_words = 1;
    for (int i = 0; i < max_length; ++i) {
        top_words *= num_generators;
        if (top_words > 4096)
            throw std::invalid_argument("oracle_subalgebra_dims: instance beyond desk scale");
    }

    /* Lie components: eliminate the expansions of every right-nested
     * bracket of each requested length. */
    std::vector<std::vector<std::vector<long long>>> bases(static_cast<size_t>(max_length) + 1);
    for (int n : lengths) {
        if (n < 1 || n > max_length)
            throw std::invalid_argument("oracle_subalgebra_dims: length outside [1, max_length]");
        long long count = 1;
        for (int i = 0; i < n; ++i)
            count *= num_generators;
        std::vector<std::vector<long long>> rows;
        std::vector<int> seq(static_cast<size_t>(n));
        for (long long code = 0; code < count; ++code) {
            long long rest = code;
            for (int i = n - 1; i >= 0; --i) {
                seq[static_cast<size_t>(i)] = static_cast<int>(rest % num_generators);
                rest /= num_generators;
            }
            rows.push_back(bracket_expansion(seq, num_generators, p));
        }
        eliminate_rows(rows, p);
        bases[static_cast<size_t>(n)] = std::move(rows);
    }

    /* Products: for each total length, concatenate one basis vector per part
     * over every ordered composition into family lengths, then take the
     * rank of everything collected. */
    std::vector<Int> dims(static_cast<size_t>(max_length) + 1, 0);
    dims[0] = 1;  // the empty product
    for (int total = 1; total <= max_length; ++total) {
        std::vector<std::vector<long long>> rows;
        std::vector<int> parts;
        const auto descend = [&](auto&& self, int remaining) -> void {
            if (remaining == 0) {
                std::vector<std::vector<long long>> partial{{1}};
                for (int part : parts) {
                    std::vector<std::vector<long long>> next;
                    for (const auto& u : partial)
                        for (const auto& v : bases[static_cast<size_t>(part)]) {
                            std::vector<long long> w(u.size() * v.size(), 0);
                            for (size_t i = 0; i < u.size(); ++i)
                                for (size_t j = 0; j < v.size(); ++j)
                                    w[i * v.size() + j] = (u[i] * v[j]) % p;
                            next.push_back(std::move(w));
                        }
                    partial = std::move(next);
                }
                for (auto& row : partial)
                    rows.push_back(std::move(row));
                return;
            }
            for (int part : lengths) {
                if (part > remaining)
                    continue;
                parts.push_back(part);
                self(self, remaining - part);
                parts.pop_back();
            }
        };
        descend(descend, total);
        dims[static_cast<size_t>(total)] = eliminate_rows(rows, p);
    }
    return dims;
}

std::vector<Int> oracle_unit_inverse(const std::vector<Int>& coeffs)
{
    if (coeffs.empty() || (coeffs[0] != 1 && coeffs[0] != -1))
        throw std::invalid_argument("oracle_unit_inverse: constant term must be 1 or -1");
    std::vector<Int> inv(coeffs.size(), 0);
    inv[0] = coeffs[0];  // its own inverse either way
    for (size_t n = 1; n < coeffs.size(); ++n) {
        Int acc = 0;
        for (size_t j = 1; j <= n; ++j)
            acc += coeffs[j] * inv[n - j];
        inv[n] = -coeffs[0] * acc;
    }
    return inv;
}

}  // namespace loopdec
