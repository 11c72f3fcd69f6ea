#pragma once

#include "qrsums/arith.hpp"
#include "qrsums/residues.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace qrs {

// Exact values of the tangent sum T(p) and the cotangent sum C(p) for
// p = 3 (mod 4), together with the equivalent Legendre-sum forms of T.
struct SumRecord {
    OddPrime p;
    std::int64_t t_value;
    std::int64_t c_value;
    std::array<std::int64_t, 5> t_expr;
    std::int64_t m_value;
    std::int64_t a_value;
};

// T(p) = p * (q_o - q_e)
std::int64_t t_exact(const ResidueProfile& prof);
std::int64_t t_exact(OddPrime p);

/// The five Legendre-sum expressions for T(p), in order:
///   [0] (p/2) * sum_{k<p} (-1)^(k+1) (k/p)
///   [1] p * sum_{k<=(p-1)/2} (-1)^(k+1) (k/p)
///   [2] p * A, A = sum of (k/p) over odd k
///   [3] -p * (2/p) * sum_{k<=(p-1)/2} (k/p)
///   [4] p * s_high if p = 3 (mod 8), -p * s_low if p = 7 (mod 8)
/// Each is evaluated from its own sum over the residue table.
std::array<std::int64_t, 5> t_expressions(const ResidueProfile& prof);
std::array<std::int64_t, 5> t_expressions(OddPrime p);

// C(p) = -T(p) for p = 7 (mod 8), T(p)/3 for p = 3 (mod 8).
std::int64_t c_exact(const ResidueProfile& prof);
std::int64_t c_exact(OddPrime p);

// T(p) = M(p) for p = 7 (mod 8), -3 M(p) for p = 3 (mod 8).
std::int64_t t_from_m(const ResidueProfile& prof);
std::int64_t t_from_m(OddPrime p);

SumRecord sum_record(const ResidueProfile& prof);

/// A misprinted identity for T(p): both the printed and the corrected
/// right-hand sides, evaluated at one prime, next to the exact T(p).
struct Erratum {
    std::string id;
    std::string identity;          // what the identity expresses
    std::string printed_form;
    std::string corrected_form;
    std::uint64_t p;
    std::int64_t printed_value;
    std::int64_t corrected_value;
    std::int64_t t_value;

    bool printed_disagrees() const noexcept { return printed_value != t_value; }
    bool corrected_agrees() const noexcept { return corrected_value == t_value; }
};

// Identifiers of the known misprints, in report order.
inline constexpr std::array<const char*, 3> kErrataIds = {"odd-symbol-factor", "t-from-m-signs",
                                                          "interval-form-7mod8-sign"};

/// Evaluates every misprint that applies to p (the interval-form misprint
/// only affects p = 7 (mod 8)).
std::vector<Erratum> errata_at(OddPrime p);

} // namespace qrs
