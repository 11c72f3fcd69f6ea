#pragma once

#include "qrsums/arith.hpp"
#include "qrsums/residues.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace qrs {

// a x^2 + b xy + c y^2 with b^2 - 4ac = -p, |b| <= a <= c, and b >= 0
// when |b| = a or a = c.
struct ReducedForm {
    std::int64_t a;
    std::int64_t b;
    std::int64_t c;

    friend bool operator==(const ReducedForm&, const ReducedForm&) = default;
    friend auto operator<=>(const ReducedForm&, const ReducedForm&) = default;
};

// Throws InvariantViolation naming the first violated condition.
void check_reduced_form(const ReducedForm& f, OddPrime p);

struct ClassRecord {
    OddPrime p;
    std::vector<ReducedForm> forms;
    std::int64_t h_forms;
    std::int64_t h_residues;
    std::optional<double> h_float;  // filled by callers that run float checks
};

// Half the number of roots of unity in Q(sqrt(-p)): 3 for p = 3, else 1.
// The analytic class-number relations carry this factor.
int unit_index(OddPrime p) noexcept;

// Ordered by (a, b).
std::vector<ReducedForm> reduced_forms(OddPrime p);

std::int64_t h_from_forms(OddPrime p);

/// Class number from the odd/even residue counts:
///   h = q_e - q_o              for p = 7 (mod 8)
///   h = w' (q_o - q_e) / 3     for p = 3 (mod 8)
/// with w' = unit_index(p).  Inexact division or h <= 0 is an
/// InvariantViolation.
std::int64_t h_from_residues(const ResidueProfile& prof);
std::int64_t h_from_residues(OddPrime p);

ClassRecord class_record(const ResidueProfile& prof);

} // namespace qrs
