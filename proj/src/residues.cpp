#include "qrsums/residues.hpp"

namespace qrs {

int ResidueProfile::symbol(std::uint64_t k) const {
    const std::uint64_t r = k % p.value();
    if (r == 0)
        return 0;
    return qr_table[r] ? 1 : -1;
}

std::vector<bool> residue_table(OddPrime p) {
    const std::uint64_t n = p.value();
    std::vector<bool> table(n, false);
    // (j+1)^2 = j^2 + 2j + 1
    std::uint64_t sq = 0;
    for (std::uint64_t j = 1; j <= (n - 1) / 2; ++j) {
        sq += 2 * j - 1;
        if (sq >= n)
            sq -= n;
        table[sq] = true;
    }
    return table;
}

std::vector<std::uint64_t> quadratic_residues(OddPrime p) {
    const auto table = residue_table(p);
    std::vector<std::uint64_t> out;
    out.reserve((p.value() - 1) / 2);
    for (std::uint64_t k = 1; k < p.value(); ++k)
        if (table[k])
            out.push_back(k);
    return out;
}

// A symbol sum over a set of k is 2 * (residues in the set) - (size of the
// set), so every statistic follows from one pass over the (p-1)/2 squares.
ResidueProfile residue_profile(OddPrime p) {
    require_3_mod_4(p, "residue_profile");
    const std::uint64_t n = p.value();
    const std::uint64_t half = (n - 1) / 2;
    const std::uint64_t low_end = (n - 3) / 4;

    ResidueProfile prof{p, std::vector<bool>(n, false)};
    std::int64_t low = 0, odd_half = 0, even_half = 0;
    u128 total = 0;
    std::uint64_t sq = 0;
    for (std::uint64_t j = 1; j <= half; ++j) {
        sq += 2 * j - 1;
        if (sq >= n)
            sq -= n;
        prof.qr_table[sq] = true;
        total += sq;
        const std::int64_t odd = sq & 1;
        const std::int64_t in_half = sq <= half;
        prof.q_o += odd;
        prof.q_e += odd ^ 1;
        low += sq <= low_end;
        odd_half += odd & in_half;
        even_half += (odd ^ 1) & in_half;
    }
    const auto h = static_cast<std::int64_t>(half);
    const auto le = static_cast<std::int64_t>(low_end);
    prof.even_below_half = even_half;
    prof.even_above_half = prof.q_e - even_half;
    prof.a_sum = 2 * prof.q_o - h;                      // h odd k in [1, p-2]
    prof.s_low = 2 * low - le;
    prof.s_high = 2 * (odd_half + even_half - low) - (h - le);
    prof.half_odd = 2 * odd_half - (h + 1) / 2;
    prof.half_even = 2 * even_half - h / 2;
    const i128 m = 2 * static_cast<i128>(total) - static_cast<i128>(n) * (n - 1) / 2;
    prof.m_sum = narrow_exact(m, "residue_profile: M(p)");
    return prof;
}

IntervalSums interval_sums(OddPrime p) {
    const auto prof = residue_profile(p);
    return {prof.s_low, prof.s_high};
}

EvenHalfCounts even_half_counts(OddPrime p) {
    const auto prof = residue_profile(p);
    return {prof.even_below_half, prof.even_above_half};
}

std::int64_t m_sum(OddPrime p) { return residue_profile(p).m_sum; }

std::int64_t a_sum(OddPrime p) { return residue_profile(p).a_sum; }

} // namespace qrs
