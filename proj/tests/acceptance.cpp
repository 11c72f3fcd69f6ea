// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.

#include "qrsums/analytic.hpp"
#include "qrsums/app.hpp"
#include "qrsums/classnum.hpp"
#include "qrsums/residues.hpp"
#include "qrsums/sums.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

using namespace qrs;

namespace {

struct Outcome {
    std::vector<std::string> failures;
    std::vector<std::string> notes;
    std::string summary;

    void require(bool ok, const std::string& what) {
        if (!ok && failures.size() < 50)
            failures.push_back(what);
        else if (!ok)
            failures.emplace_back();
    }
};

std::string at(OddPrime p, const std::string& what) { return "p=" + std::to_string(p.value()) + ": " + what; }

Outcome identity_suite() {
    Outcome o;
    std::size_t primes = 0;
    for (auto p : primes_in_range(3, 20000, ClassFilter::mod4(3))) {
        ++primes;
        const auto prof = residue_profile(p);
        const auto rec = sum_record(prof);
        const auto n = p.signed_value();
        const bool three = p.class_mod8() == 3;
        const std::int64_t t = rec.t_value, c = rec.c_value;
        const std::int64_t h_forms = h_from_forms(p);
        const std::int64_t h_res = h_from_residues(prof);
        const std::int64_t w = unit_index(p);

        for (std::size_t i = 0; i < 5; ++i)
            o.require(rec.t_expr[i] == t, at(p, "expression " + std::to_string(i + 1) + " != T"));
        o.require(t_from_m(prof) == t, at(p, "t_from_m != T"));
        // w = 1 for every p > 3, where this is literally C = p h.
        o.require(w * c == n * h_forms, at(p, "C != p h_forms"));
        o.require(h_forms == h_res, at(p, "h_forms != h_residues"));
        o.require((t > 0) == three, at(p, "sign of T"));
        o.require(t % n == 0 && (t / n) % 2 != 0 && (t / n) % n != 0, at(p, "T/p odd, not 0 mod p"));
        o.require(c % 2 != 0, at(p, "C odd"));
        if (n > 3)
            o.require(c % n == 0 && (c / n) % n != 0, at(p, "p || C"));
        o.require(h_forms % 2 == 1, at(p, "h odd"));
        const int chi2 = prof.legendre_two();
        o.require((1 + chi2) * prof.half_odd == (1 - chi2) * prof.half_even, at(p, "even/odd numerators"));
        if (three) {
            o.require(prof.s_low == 0 && prof.s_high > 0, at(p, "interval sums (3 mod 8)"));
            o.require(prof.even_below_half == (n - 3) / 8, at(p, "even residues below p/2"));
        } else {
            o.require(prof.s_high == 0 && prof.s_low > 0, at(p, "interval sums (7 mod 8)"));
            o.require(prof.even_above_half == (n + 1) / 8, at(p, "even residues above p/2"));
        }
        o.require(prof.m_sum < 0, at(p, "M < 0"));
        o.require(prof.half_sum() > 0, at(p, "half-range symbol sum > 0"));
    }
    const auto three = OddPrime::make(3);
    o.notes.push_back("p=3 uses the unit index w(-3)/2 = 3: literal C = p h gives " +
                      std::to_string(c_exact(three)) + " vs " + std::to_string(3 * h_from_forms(three)) +
                      "; 3 C = p h holds");
    o.summary = std::to_string(primes) + " primes = 3 (mod 4) in [3, 20000]";
    return o;
}

Outcome bounds_suite() {
    Outcome o;
    std::size_t primes = 0;
    for (auto p : primes_in_range(3, 20000, ClassFilter::mod4(3))) {
        ++primes;
        const auto prof = residue_profile(p);
        const double x = static_cast<double>(p.value());
        const double t = std::abs(static_cast<double>(t_exact(prof)));
        const double prop3 = 2 * x * std::sqrt(x) / std::numbers::pi * (1 + 0.5 * std::log(x - 2));
        o.require(t < prop3, at(p, "|T| < (2p sqrt p / pi)(1 + ln(p-2)/2)"));
        o.require(std::abs(static_cast<double>(prof.half_sum())) < std::sqrt(x) * std::log(x),
                  at(p, "|sum (k/p)| < sqrt p ln p"));
        o.require(bound_prop3(p).pass && bound_pv(p).pass, at(p, "library bound checks"));
    }
    o.summary = std::to_string(primes) + " primes, 0 violations allowed";
    return o;
}

Outcome float_suite() {
    Outcome o;
    std::size_t primes = 0;
    double worst = 0;
    for (auto p : primes_in_range(3, 10000)) {
        ++primes;
        const auto t = t_float(p);
        const auto c = c_float(p);
        const double tau = scalar_tolerance(p.value());
        o.require(t.residual <= tau, at(p, "t_float residual " + std::to_string(t.residual)));
        o.require(c.residual <= tau, at(p, "c_float residual " + std::to_string(c.residual)));
        worst = std::max({worst, t.residual / tau, c.residual / tau});
        if (p.class_mod4() == 3) {
            const auto prof = residue_profile(p);
            o.require(std::llround(t.computed.real() / static_cast<double>(p.value())) == prof.q_o - prof.q_e,
                      at(p, "round(t_float / p) != q_o - q_e"));
        } else {
            o.require(std::abs(t.computed.real()) <= tau, at(p, "|t_float| > tau for p = 1 mod 4"));
        }
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", worst);
    o.summary = std::to_string(primes) + " primes, worst residual/tau = " + buf;
    return o;
}

Outcome gauss_suite() {
    Outcome o;
    std::size_t sums = 0;
    for (auto p : primes_in_range(3, 500, ClassFilter::mod4(3)))
        for (std::int64_t k = 1; k < p.signed_value(); ++k) {
            ++sums;
            const auto r = gauss_sum_float(k, p);
            const std::complex<double> ref(0.0, legendre(k, p) * std::sqrt(static_cast<double>(p.value())));
            o.require(std::abs(r.computed - ref) <= 1e-9 * static_cast<double>(p.value()),
                      at(p, "S(" + std::to_string(k) + ", p)"));
        }
    o.summary = std::to_string(sums) + " Gauss sums";
    return o;
}

Outcome spot_values() {
    Outcome o;
    auto P = [](std::uint64_t n) { return OddPrime::make(n); };
    o.require(c_exact(P(3)) == 1, "C(3) = 1");
    o.require(t_exact(P(7)) == -7, "T(7) = -7");
    o.require(t_exact(P(11)) == 33, "T(11) = 33");
    o.require(t_exact(P(19)) == 57, "T(19) = 57");
    o.require(t_exact(P(23)) == -69, "T(23) = -69");
    o.require(h_from_forms(P(23)) == 3, "h(-23) = 3");
    for (std::uint64_t n : {3, 7, 11, 19, 23}) {
        const auto l = lebesgue_float(P(n));
        o.require(std::llround(l.computed.real()) == h_from_forms(P(n)),
                  "Lebesgue formula rounds to h at p = " + std::to_string(n));
    }
    o.summary = "C(3), T(7), T(11), T(19), T(23), h(-23), Lebesgue at 3, 7, 11, 19, 23";
    return o;
}

Outcome errata_suite() {
    Outcome o;
    const auto rep = app::verify({3, 11});
    o.require(rep.ok(), "verify(3, 11) reported failures");
    std::size_t confirmed = 0;
    for (std::uint64_t n : {7, 11}) {
        for (const char* id : kErrataIds) {
            const bool applies = std::string(id) != "interval-form-7mod8-sign" || n % 8 == 7;
            if (!applies)
                continue;
            bool found = false;
            for (const auto& e : rep.errata)
                if (e.p == n && e.id == id) {
                    found = true;
                    o.require(e.printed_disagrees(), "printed " + e.id + " agrees with T at p=" + std::to_string(n));
                    o.require(e.corrected_agrees(), "corrected " + e.id + " disagrees at p=" + std::to_string(n));
                    confirmed += e.printed_disagrees() && e.corrected_agrees();
                }
            o.require(found, std::string("missing erratum ") + id + " at p=" + std::to_string(n));
        }
    }
    std::ostringstream text;
    app::print_verify_report(rep, text);
    o.require(text.str().find("printed T = 2p * A gives -14; corrected T = p * A gives -7") != std::string::npos,
              "report text for the odd-symbol factor at p=7");
    o.summary = std::to_string(confirmed) + " misprints confirmed at p = 7, 11";
    return o;
}

Outcome determinism_suite() {
    Outcome o;
    std::ostringstream one, eight;
    app::scan({3, 10000, app::Format::Csv, 1}, one);
    app::scan({3, 10000, app::Format::Csv, 8}, eight);
    o.require(one.str() == eight.str(), "scan output differs between 1 and 8 workers");
    o.summary = std::to_string(one.str().size()) + " bytes, jobs 1 vs 8";
    return o;
}

struct Criterion {
    int id;
    const char* name;
    double time_limit_s;  // 0: none
    std::function<Outcome()> run;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "identity suite", 60, identity_suite},
        {2, "bounds", 0, bounds_suite},
        {3, "float suite", 120, float_suite},
        {4, "gauss sums", 0, gauss_suite},
        {5, "spot values", 0, spot_values},
        {6, "errata confirmation", 0, errata_suite},
        {7, "determinism", 0, determinism_suite},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.failures.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.time_limit_s > 0 && secs >= c.time_limit_s)
            o.failures.push_back("runtime " + std::to_string(secs) + " s exceeds limit");
        const bool pass = o.failures.empty();
        failed += !pass;
        std::printf("[%s] criterion %d (%s): %s (%.2f s)\n", pass ? "PASS" : "FAIL", c.id, c.name,
                    o.summary.c_str(), secs);
        for (const auto& n : o.notes)
            std::printf("       note: %s\n", n.c_str());
        for (const auto& f : o.failures)
            if (!f.empty())
                std::printf("       - %s\n", f.c_str());
        if (o.failures.size() >= 50)
            std::printf("       (further failures omitted)\n");
    }
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
