#include "qrsums/classnum.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <string>

namespace qrs {

namespace {

std::int64_t isqrt(std::int64_t n) {
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

// Appends every reduced form with leading coefficient a.
void forms_with_a(std::int64_t a, std::int64_t p, std::vector<ReducedForm>& out) {
    for (std::int64_t b = -a; b <= a; ++b) {
        if ((b & 1) == 0)
            continue;
        const std::int64_t num = b * b + p;
        if (num % (4 * a) != 0)
            continue;
        const std::int64_t c = num / (4 * a);
        if (c < a)
            continue;
        if (b < 0 && (-b == a || a == c))
            continue;
        out.push_back({a, b, c});
    }
}

} // namespace

void check_reduced_form(const ReducedForm& f, OddPrime p) {
    auto fail = [&](const char* what) {
        throw InvariantViolation("reduced form (" + std::to_string(f.a) + ", " + std::to_string(f.b) +
                                 ", " + std::to_string(f.c) + ") for p = " + std::to_string(p.value()) +
                                 ": " + what);
    };
    if (f.b * f.b - 4 * f.a * f.c != -p.signed_value())
        fail("discriminant is not -p");
    if (f.a <= 0 || std::llabs(f.b) > f.a || f.a > f.c)
        fail("not reduced");
    if ((std::llabs(f.b) == f.a || f.a == f.c) && f.b < 0)
        fail("not the canonical representative");
    if (std::gcd(std::gcd(f.a, std::llabs(f.b)), f.c) != 1)
        fail("not primitive");
    if ((f.b & 1) == 0)
        fail("b is even");
}

int unit_index(OddPrime p) noexcept { return p.value() == 3 ? 3 : 1; }

std::vector<ReducedForm> reduced_forms(OddPrime p) {
    require_3_mod_4(p, "reduced_forms");
    const std::int64_t n = p.signed_value();
    const std::int64_t a_max = isqrt(n / 3);

    std::vector<ReducedForm> forms;
    for (std::int64_t a = 1; a <= a_max; ++a)
        forms_with_a(a, n, forms);
    for (const auto& f : forms)
        check_reduced_form(f, p);

    std::vector<ReducedForm> beyond;
    forms_with_a(a_max + 1, n, beyond);
    if (!beyond.empty())
        throw InvariantViolation("reduced_forms: found a form past a = floor(sqrt(p/3)) for p = " +
                                 std::to_string(p.value()));
    return forms;
}

std::int64_t h_from_forms(OddPrime p) { return static_cast<std::int64_t>(reduced_forms(p).size()); }

std::int64_t h_from_residues(const ResidueProfile& prof) {
    const std::int64_t diff = prof.q_o - prof.q_e;
    std::int64_t h;
    if (prof.p.class_mod8() == 7) {
        h = -diff;
    } else {
        const std::int64_t scaled = diff * unit_index(prof.p);
        if (scaled % 3 != 0)
            throw InvariantViolation("h_from_residues: q_o - q_e = " + std::to_string(diff) +
                                     " gives a non-integral class number for p = " +
                                     std::to_string(prof.p.value()));
        h = scaled / 3;
    }
    if (h <= 0)
        throw InvariantViolation("h_from_residues: nonpositive class number for p = " +
                                 std::to_string(prof.p.value()));
    return h;
}

std::int64_t h_from_residues(OddPrime p) { return h_from_residues(residue_profile(p)); }

ClassRecord class_record(const ResidueProfile& prof) {
    auto forms = reduced_forms(prof.p);
    const auto h = static_cast<std::int64_t>(forms.size());
    return ClassRecord{prof.p, std::move(forms), h, h_from_residues(prof), std::nullopt};
}

} // namespace qrs
