#pragma once

#include "qrsums/arith.hpp"

#include <cstdint>
#include <vector>

namespace qrs {

/// Quadratic-residue statistics for a prime p = 3 (mod 4).
///
/// Built in one pass over [1, p-1] from the table of squares.  The interval
/// sums split [1, (p-1)/2] at (p-3)/4 | (p+1)/4; for p = 3 the low interval
/// is empty and s_low is 0.
struct ResidueProfile {
    OddPrime p;
    std::vector<bool> qr_table;    // index k in [0, p); entry 0 is false

    std::int64_t q_o = 0;          // odd residues in [1, p-1]
    std::int64_t q_e = 0;          // even residues in [1, p-1]
    std::int64_t s_low = 0;        // sum of (k/p), 1 <= k <= (p-3)/4
    std::int64_t s_high = 0;       // sum of (k/p), (p+1)/4 <= k <= (p-1)/2
    std::int64_t even_below_half = 0;
    std::int64_t even_above_half = 0;
    std::int64_t a_sum = 0;        // sum of (k/p) over odd k in [1, p-2]
    std::int64_t m_sum = 0;        // sum of (k/p) * k over [1, p-1]
    std::int64_t half_odd = 0;     // sum of (k/p) over odd k <= (p-1)/2
    std::int64_t half_even = 0;    // sum of (k/p) over even k <= (p-1)/2

    bool is_residue(std::uint64_t k) const { return qr_table[k % p.value()]; }
    int symbol(std::uint64_t k) const;
    std::int64_t half_sum() const noexcept { return s_low + s_high; }
    int legendre_two() const noexcept { return p.class_mod8() == 7 ? 1 : -1; }
};

// Sorted residues {j^2 mod p : 1 <= j <= (p-1)/2}.  Any odd prime.
std::vector<std::uint64_t> quadratic_residues(OddPrime p);

// Membership table indexed by k in [0, p).  Any odd prime.
std::vector<bool> residue_table(OddPrime p);

ResidueProfile residue_profile(OddPrime p);

struct IntervalSums {
    std::int64_t s_low;
    std::int64_t s_high;
};
IntervalSums interval_sums(OddPrime p);

struct EvenHalfCounts {
    std::int64_t below;
    std::int64_t above;
};
EvenHalfCounts even_half_counts(OddPrime p);

std::int64_t m_sum(OddPrime p);
std::int64_t a_sum(OddPrime p);

} // namespace qrs
