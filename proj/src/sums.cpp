#include "qrsums/sums.hpp"

namespace qrs {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b, const char* what) {
    return narrow_exact(static_cast<i128>(a) * b, what);
}

struct AlternatingSums {
    std::int64_t full = 0;   // sum_{k=1}^{p-1} (-1)^(k+1) (k/p)
    std::int64_t half = 0;   // sum_{k=1}^{(p-1)/2} (-1)^(k+1) (k/p)
    std::int64_t plain = 0;  // sum_{k=1}^{(p-1)/2} (k/p)
    std::int64_t odd = 0;    // sum over odd k in [1, p-2] of (k/p)
};

AlternatingSums alternating_sums(const ResidueProfile& prof) {
    AlternatingSums s;
    const std::uint64_t n = prof.p.value();
    const std::uint64_t half = (n - 1) / 2;
    for (std::uint64_t k = 1; k < n; ++k) {
        const int chi = prof.qr_table[k] ? 1 : -1;
        const int signed_chi = (k & 1) ? chi : -chi;
        s.full += signed_chi;
        if (k <= half) {
            s.half += signed_chi;
            s.plain += chi;
        }
        if (k & 1)
            s.odd += chi;
    }
    return s;
}

} // namespace

std::int64_t t_exact(const ResidueProfile& prof) {
    return checked_mul(prof.p.signed_value(), prof.q_o - prof.q_e, "t_exact");
}

std::int64_t t_exact(OddPrime p) { return t_exact(residue_profile(p)); }

std::array<std::int64_t, 5> t_expressions(const ResidueProfile& prof) {
    const std::int64_t p = prof.p.signed_value();
    const auto s = alternating_sums(prof);
    if (s.full % 2 != 0)
        throw InvariantViolation("t_expressions: alternating sum over [1, p-1] is odd for p = " +
                                 std::to_string(p));

    std::array<std::int64_t, 5> out{};
    out[0] = checked_mul(p, s.full / 2, "t_expressions[0]");
    out[1] = checked_mul(p, s.half, "t_expressions[1]");
    out[2] = checked_mul(p, s.odd, "t_expressions[2]");
    out[3] = checked_mul(-p * prof.legendre_two(), s.plain, "t_expressions[3]");
    out[4] = prof.p.class_mod8() == 3 ? checked_mul(p, prof.s_high, "t_expressions[4]")
                                      : checked_mul(-p, prof.s_low, "t_expressions[4]");
    return out;
}

std::array<std::int64_t, 5> t_expressions(OddPrime p) { return t_expressions(residue_profile(p)); }

std::int64_t c_exact(const ResidueProfile& prof) {
    const std::int64_t t = t_exact(prof);
    if (prof.p.class_mod8() == 7)
        return -t;
    if (t % 3 != 0)
        throw InvariantViolation("c_exact: T(" + std::to_string(prof.p.value()) + ") = " +
                                 std::to_string(t) + " is not divisible by 3");
    return t / 3;
}

std::int64_t c_exact(OddPrime p) { return c_exact(residue_profile(p)); }

std::int64_t t_from_m(const ResidueProfile& prof) {
    return prof.p.class_mod8() == 7 ? prof.m_sum : checked_mul(-3, prof.m_sum, "t_from_m");
}

std::int64_t t_from_m(OddPrime p) { return t_from_m(residue_profile(p)); }

SumRecord sum_record(const ResidueProfile& prof) {
    return SumRecord{prof.p,         t_exact(prof), c_exact(prof), t_expressions(prof),
                     prof.m_sum,     prof.a_sum};
}

std::vector<Erratum> errata_at(OddPrime p) {
    const auto prof = residue_profile(p);
    const std::int64_t pv = p.signed_value();
    const std::int64_t t = t_exact(prof);
    const bool seven = p.class_mod8() == 7;

    std::vector<Erratum> out;
    out.push_back({kErrataIds[0], "T as a multiple of the odd-numerator symbol sum A",
                   "T = 2p * A", "T = p * A", p.value(), 2 * pv * prof.a_sum, pv * prof.a_sum, t});
    out.push_back({kErrataIds[1], "T in terms of M = sum (k/p) k",
                   seven ? "T = -M" : "T = 3M", seven ? "T = M" : "T = -3M", p.value(),
                   seven ? -prof.m_sum : 3 * prof.m_sum, t_from_m(prof), t});
    if (seven)
        out.push_back({kErrataIds[2], "T as p times the low-interval symbol sum (p = 7 mod 8)",
                       "T = p * s_low", "T = -p * s_low", p.value(), pv * prof.s_low,
                       -pv * prof.s_low, t});
    return out;
}

} // namespace qrs
