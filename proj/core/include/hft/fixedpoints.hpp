#ifndef HFT_FIXEDPOINTS_HPP
#define HFT_FIXEDPOINTS_HPP

// Torus-fixed points of the rank-r moduli space on local P^1 and their
// chart-wise characters.

#include <vector>

#include <hft/charring.hpp>

namespace hft
{

enum class Chart { alpha, beta };

// Cokernel lengths per frame summand: d (alpha, the chart at 0) and c (beta,
// the chart at infinity).
struct BoxTuple {
    int rank = 1;
    std::vector<int> alpha;
    std::vector<int> beta;

    static BoxTuple empty(int rank);

    int length() const;
    // Throws Error(InvalidArgument) on a malformed tuple.
    void validate() const;

    friend bool operator==(const BoxTuple &, const BoxTuple &) = default;
};

// All tuples of total length k in lexicographic order of (d1..dr, c1..cr).
std::vector<BoxTuple> enumerate_fixed(int rank, int k);

// sum_i w_i t1^-d_i / (1 - t1) on alpha, sum_i w_i t1^c_i / (1 - t1^-1) on
// beta. The twist does not enter here.
RationalCharacter leg_character(const BoxTuple &b, Chart chart);

// (C + P) / ((1-t1)(1-t2)(1-t3)).
RationalCharacter char_from_poincare(const LaurentPoly &poincare, const LaurentPoly &correction);
// Inverse of char_from_poincare: F (1-t1)(1-t2)(1-t3) - C.
LaurentPoly poincare_from_char(const RationalCharacter &f, const LaurentPoly &correction);

} // namespace hft

#endif
