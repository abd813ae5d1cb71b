#ifndef LOOPDEC_ORACLES_HPP
#define LOOPDEC_ORACLES_HPP

#include <map>
#include <vector>

#include "loopdec/qsymm.hpp"
#include "loopdec/series.hpp"

namespace loopdec {

/* Deliberately naive reference implementations, kept independent of the main
 * code paths so a bug would have to appear twice to go unnoticed. Exponential
 * enumeration throughout; keep instances at desk scale. */

struct LyndonCounts {
    std::map<int, Int> by_length;
    std::map<std::vector<int>, Int> by_multidegree;
};

/* Counts words that are strictly minimal among their rotations, by trying
 * every rotation of every word of every length up to max_len. */
LyndonCounts oracle_lyndon(int m, int max_len);

/* Plain nested-loop convolution of explicit coefficient vectors, all indexed
 * from degree 0. The empty product is 1. */
std::vector<Int> oracle_series_product(const std::vector<std::vector<Int>>& factors, int cutoff);

/* Coefficients of (1 - t^n)^{-w} through the cutoff, from the binomial
 * series: the t^{nk} coefficient is C(w - 1 + k, k). */
std::vector<Int> oracle_inverse_power_factor(int n, const Int& w, int cutoff);

/* Dimension of the primitives of tensor length n for num_generators free
 * generators over F_p, by building the reduced-coproduct matrix from scratch
 * and running its own elimination. */
int oracle_primitives(int num_generators, long long p, int n);

/* Dimension, per tensor length 0..max_length, of the subalgebra of the free
 * associative algebra generated by the Lie components at the listed lengths,
 * for num_generators generators over F_p. Lie spans come from expanding
 * every right-nested bracket [x_{i1},[x_{i2},[...,x_{ik}]]] into words,
 * products from concatenating those spans tuple by tuple, ranks from its own
 * elimination. */
std::vector<Int> oracle_subalgebra_dims(int num_generators, long long p,
                                        const std::vector<int>& lengths, int max_length);

/* Reciprocal of a coefficient vector whose constant term is 1 or -1, solved
 * one coefficient at a time from the convolution identity. */
std::vector<Int> oracle_unit_inverse(const std::vector<Int>& coeffs);

/* Product of the monomial quasi-symmetric functions M_alpha * M_beta by the
 * dual route: the coefficient of M_gamma is the number of ways to split each
 * part of gamma in two so that the nonzero left halves read alpha and the
 * right halves beta. Enumerates every composition of the combined weight via
 * cut-point bitmasks and every split via its own odometer. */
QSymmElement oracle_quasi_shuffle(const Composition& alpha, const Composition& beta);

}  // namespace loopdec

#endif
