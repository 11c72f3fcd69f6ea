#include "qrsums/app.hpp"

#include "qrsums/analytic.hpp"
#include "qrsums/classnum.hpp"
#include "qrsums/residues.hpp"

#include <cmath>
#include <ostream>

namespace qrs::app {

namespace {

class Checker {
public:
    Checker(VerifyReport& rep, OddPrime p) : rep_(rep), p_(p) {}

    void eq(const char* name, std::int64_t expected, std::int64_t actual) {
        that(name, expected == actual, std::to_string(expected), std::to_string(actual));
    }

    void that(const char* name, bool ok, std::string expected, std::string actual) {
        ++rep_.checks_run;
        if (!ok)
            rep_.failures.push_back({p_.value(), name, std::move(expected), std::move(actual)});
    }

    void float_check(const FloatCheckResult& r) {
        that(r.name.c_str(), r.pass,
             r.kind == CheckKind::Closeness
                 ? "|computed - " + format_real(r.reference.real()) + "| <= " + format_real(r.tolerance)
                 : "bound above " + format_real(r.reference.real()),
             format_real(r.computed.real()) +
                 (r.computed.imag() != 0.0 ? " + " + format_real(r.computed.imag()) + "i" : ""));
    }

private:
    VerifyReport& rep_;
    OddPrime p_;
};

void residue_checks(Checker& ck, const ResidueProfile& prof) {
    const OddPrime p = prof.p;
    const std::uint64_t n = p.value();
    const auto half = static_cast<std::int64_t>((n - 1) / 2);
    const bool three = p.class_mod8() == 3;
    const std::int64_t diff = prof.q_o - prof.q_e;

    ck.eq("residues.count_total", half, prof.q_o + prof.q_e);

    std::int64_t cardinality = 0;
    std::uint64_t both = 0, mismatches = 0;
    for (std::uint64_t k = 1; k < n; ++k) {
        cardinality += prof.qr_table[k];
        if (prof.qr_table[k] && prof.qr_table[n - k])
            ++both;
        if ((prof.qr_table[k] ? 1 : -1) != legendre(static_cast<std::int64_t>(k), p))
            ++mismatches;
    }
    ck.eq("residues.table_cardinality", half, cardinality);
    ck.eq("residues.minus_one_nonresidue", 0, static_cast<std::int64_t>(both));
    ck.eq("residues.table_vs_euler", 0, static_cast<std::int64_t>(mismatches));
    ck.eq("residues.even_split", prof.q_e, prof.even_below_half + prof.even_above_half);
    ck.that("residues.diff_odd", diff % 2 != 0, "odd", std::to_string(diff));
    ck.that("residues.diff_sign", (diff > 0) == three, three ? "> 0" : "< 0", std::to_string(diff));
    if (three && n > 3)
        ck.that("residues.diff_multiple_of_3", diff > 0 && diff % 3 == 0, "positive multiple of 3",
                std::to_string(diff));
    ck.that("residues.half_sum_positive", prof.half_sum() > 0, "> 0", std::to_string(prof.half_sum()));
    ck.that("residues.m_negative", prof.m_sum < 0, "< 0", std::to_string(prof.m_sum));

    const int chi2 = prof.legendre_two();
    ck.eq("residues.even_odd_numerators", (1 + chi2) * prof.half_odd, (1 - chi2) * prof.half_even);
    ck.eq("residues.a_relation", -chi2 * prof.half_sum(), prof.a_sum);

    if (three) {
        ck.eq("residues.s_low_zero", 0, prof.s_low);
        ck.that("residues.s_high_positive", prof.s_high > 0, "> 0", std::to_string(prof.s_high));
        ck.eq("residues.even_below_half", static_cast<std::int64_t>((n - 3) / 8), prof.even_below_half);
    } else {
        ck.eq("residues.s_high_zero", 0, prof.s_high);
        ck.that("residues.s_low_positive", prof.s_low > 0, "> 0", std::to_string(prof.s_low));
        ck.eq("residues.even_above_half", static_cast<std::int64_t>((n + 1) / 8), prof.even_above_half);
    }
}

void sum_checks(Checker& ck, const ResidueProfile& prof, const SumRecord& s) {
    const std::int64_t p = prof.p.signed_value();
    const bool three = prof.p.class_mod8() == 3;

    ck.eq("sums.t_counts", p * (prof.q_o - prof.q_e), s.t_value);
    static constexpr const char* kExprNames[] = {"sums.t_expr1", "sums.t_expr2", "sums.t_expr3",
                                                 "sums.t_expr4", "sums.t_expr5"};
    for (std::size_t i = 0; i < 5; ++i)
        ck.eq(kExprNames[i], s.t_value, s.t_expr[i]);
    ck.eq("sums.t_from_m", s.t_value, t_from_m(prof));

    const std::int64_t q = s.t_value / p;
    ck.that("sums.t_divisible_by_p", s.t_value % p == 0, "p | T", std::to_string(s.t_value));
    ck.that("sums.t_over_p_odd", q % 2 != 0, "odd", std::to_string(q));
    ck.that("sums.t_over_p_not_multiple_of_p", q % p != 0, "p does not divide T/p", std::to_string(q));
    ck.that("sums.t_sign", (s.t_value > 0) == three, three ? "> 0" : "< 0", std::to_string(s.t_value));

    ck.that("sums.c_positive", s.c_value > 0, "> 0", std::to_string(s.c_value));
    ck.that("sums.c_odd", s.c_value % 2 != 0, "odd", std::to_string(s.c_value));
    if (p > 3)
        ck.that("sums.c_exact_power_of_p", s.c_value % p == 0 && (s.c_value / p) % p != 0,
                "p || C", std::to_string(s.c_value));
}

void class_checks(Checker& ck, const ResidueProfile& prof, const SumRecord& s, const ClassRecord& cls) {
    const std::int64_t p = prof.p.signed_value();
    const std::int64_t w = unit_index(prof.p);
    const std::int64_t h = cls.h_forms;

    ck.eq("classnum.forms_vs_residues", h, cls.h_residues);
    ck.that("classnum.h_odd", h % 2 != 0, "odd", std::to_string(h));
    ck.eq("classnum.c_is_p_h", p * h, w * s.c_value);
    ck.eq("classnum.t_from_h", prof.p.class_mod8() == 7 ? -p * h : 3 * p * h, w * s.t_value);
}

void float_checks(Checker& ck, OddPrime p, const ResidueProfile& prof, std::int64_t h,
                  const VerifyOptions& opts) {
    const auto t = t_float(p);
    ck.float_check(t);
    ck.float_check(c_float(p));
    const auto diff = std::llround(t.computed.real() / static_cast<double>(p.value()));
    ck.eq("float.t_rounds_to_count_difference", prof.q_o - prof.q_e, diff);
    ck.float_check(whiteman_sum(p));
    const auto leb = lebesgue_float(p);
    ck.float_check(leb);
    ck.eq("float.lebesgue_rounds_to_h", h, std::llround(leb.computed.real()));
    ck.float_check(berndt_m_float(p));
    if (p.value() <= opts.gauss_cap)
        for (std::uint64_t k = 1; k < p.value(); ++k)
            ck.float_check(gauss_sum_float(static_cast<std::int64_t>(k), p));
}

// Errata checks are reported separately and do not count toward checks_run.
void errata_checks(VerifyReport& rep) {
    const auto counted = rep.checks_run;
    for (std::uint64_t pv : kErrataPrimes) {
        const OddPrime p = OddPrime::make(pv);
        Checker ck(rep, p);
        for (auto& e : errata_at(p)) {
            ck.that(("errata." + e.id + ".printed_disagrees").c_str(), e.printed_disagrees(),
                    "!= " + std::to_string(e.t_value), std::to_string(e.printed_value));
            ck.eq(("errata." + e.id + ".corrected_agrees").c_str(), e.t_value, e.corrected_value);
            rep.errata.push_back(std::move(e));
        }
    }
    rep.checks_run = counted;
}

} // namespace

VerifyReport verify(const VerifyOptions& opts) {
    check_scan_range(opts.lo, opts.hi);
    VerifyReport rep;
    rep.lo = opts.lo;
    rep.hi = opts.hi;

    for_each_prime(opts.lo, opts.hi, [&](OddPrime p) {
        Checker ck(rep, p);
        if (p.class_mod4() == 1) {
            if (opts.with_float && p.value() <= opts.float_cap) {
                ck.float_check(t_float(p));
                ck.float_check(c_float(p));
            }
            return;
        }
        ++rep.primes_checked;
        const auto prof = residue_profile(p);
        const auto sums = sum_record(prof);
        const auto cls = class_record(prof);

        residue_checks(ck, prof);
        sum_checks(ck, prof, sums);
        class_checks(ck, prof, sums, cls);
        ck.float_check(bound_prop3(p));
        ck.float_check(bound_pv(p));
        if (opts.with_float && p.value() <= opts.float_cap)
            float_checks(ck, p, prof, cls.h_forms, opts);
    });

    errata_checks(rep);
    return rep;
}

void print_verify_report(const VerifyReport& rep, std::ostream& out) {
    out << "range: " << rep.lo << ".." << rep.hi << '\n'
        << "primes checked (p = 3 mod 4): " << rep.primes_checked << '\n'
        << "checks run: " << rep.checks_run << '\n'
        << "failures: " << rep.failures.size() << '\n';
    for (const auto& f : rep.failures)
        out << "  FAIL p=" << f.p << ' ' << f.check << ": expected " << f.expected << ", got "
            << f.actual << '\n';
    out << "errata (printed vs corrected identities for T):\n";
    for (const auto& e : rep.errata)
        out << "  p=" << e.p << ' ' << e.id << ": printed " << e.printed_form << " gives "
            << e.printed_value << "; corrected " << e.corrected_form << " gives " << e.corrected_value
            << "; exact T = " << e.t_value << (e.printed_disagrees() && e.corrected_agrees() ? " [confirmed]" : " [NOT confirmed]")
            << '\n';
    out << (rep.ok() ? "result: PASS" : "result: FAIL") << '\n';
}

} // namespace qrs::app
