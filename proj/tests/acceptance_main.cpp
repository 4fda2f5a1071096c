// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
//
// Every tolerance is exact (integer/polynomial equality); the timed criteria
// carry their runtime budgets in the check itself.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lagtori/lagtori.hpp"

using namespace lagtori;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
    std::string name;
    std::function<bool(std::string&)> run;
};

LaurentPoly random_poly(std::mt19937& rng, int max_terms, int max_abs_exp, int max_abs_coeff) {
    static const std::vector<std::string> vars = {"t", "x", "y"};
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> exp(-max_abs_exp, max_abs_exp);
    std::uniform_int_distribution<int> coeff(-max_abs_coeff, max_abs_coeff);
    std::uniform_int_distribution<std::size_t> nvars(1, vars.size());
    LaurentPoly p;
    const int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        Monomial::ExpList exps;
        const std::size_t used = nvars(rng);
        for (std::size_t v = 0; v < used; ++v) {
            int e = exp(rng);
            if (e != 0) exps.emplace_back(vars[v], e);
        }
        p += LaurentPoly::term(coeff(rng), Monomial(std::move(exps)));
    }
    return p;
}

bool criterion_bound_grid(std::string& detail) {
    const auto t0 = Clock::now();
    for (int p = 1; p <= 60; ++p)
        for (int q = 1; q <= p; ++q) {
            const LaurentPoly P = p_poly(LinkFamilyParams(p, q));
            if (static_cast<std::int64_t>(P.term_count()) < p - q + 1) {
                detail = "term count below bound at p=" + std::to_string(p) +
                         " q=" + std::to_string(q);
                return false;
            }
        }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    detail = "1830 pairs in " + std::to_string(ms) + " ms";
    return ms < 10000;
}

bool criterion_survivors(std::string& detail) {
    for (int p = 1; p <= 60; ++p)
        for (int q = 1; q <= p; ++q) {
            const LaurentPoly P = p_poly(LinkFamilyParams(p, q));
            for (std::int64_t e : survivor_exponents(LinkFamilyParams(p, q)))
                if (P.coefficient(Monomial::variable("t", e)) != 1) {
                    detail = "coefficient of t^" + std::to_string(e) + " != 1 at p=" +
                             std::to_string(p) + " q=" + std::to_string(q);
                    return false;
                }
        }
    detail = "all survivor coefficients are exactly 1";
    return true;
}

bool criterion_cancellation(std::string& detail) {
    long long checked = 0;
    for (int p = 1; p <= 30; ++p)
        for (int q = 1; q <= p; ++q) {
            const LinkFamilyParams params(p, q);
            const std::int64_t threshold = p - q + 1;
            for (std::int64_t n = 0; n <= 2 * threshold; ++n, ++checked) {
                const auto kl = cancellation_check(params, n);
                const bool solvable = kl.has_value();
                if (solvable != (n >= threshold)) {
                    detail = "solvability mismatch at p=" + std::to_string(p) + " q=" +
                             std::to_string(q) + " n=" + std::to_string(n);
                    return false;
                }
                if (n == threshold && (kl->first != 0 || kl->second != p - 1)) {
                    detail = "first witness is not (0, p-1) at p=" + std::to_string(p) +
                             " q=" + std::to_string(q);
                    return false;
                }
            }
        }
    detail = std::to_string(checked) + " (p,q,n) triples match the closed form";
    return true;
}

bool criterion_torres(std::string& detail) {
    const LaurentPoly t = LaurentPoly::variable("t");
    for (int p = 1; p <= 60; ++p) {
        const LaurentPoly delta = alexander_torus_knot(p, p + 1);
        if (p_poly(LinkFamilyParams(p, 1)) != delta) {
            detail = "P_{p,1} != torus knot polynomial at p=" + std::to_string(p);
            return false;
        }
        for (int q = 1; q <= p; ++q) {
            const LaurentPoly P = p_poly(LinkFamilyParams(p, q));
            if ((t - 1) * P != (LaurentPoly::variable("t", q) - 1) * delta) {
                detail = "(t-1)P != (t^q-1)Delta at p=" + std::to_string(p) +
                         " q=" + std::to_string(q);
                return false;
            }
        }
    }
    detail = "both identities hold on the full grid";
    return true;
}

bool criterion_gamma_braids(std::string& detail) {
    const auto t0 = Clock::now();
    for (int p = 2; p <= 8; ++p) {
        const BraidWord gamma = gamma_braid(p);
        if (!closure_permutation(gamma).is_knot()) {
            detail = "gamma braid closure is not a knot at p=" + std::to_string(p);
            return false;
        }
        if (alexander_of_knot_closure(gamma) != symmetrize(alexander_torus_knot(p, p + 1))) {
            detail = "Alexander mismatch at p=" + std::to_string(p);
            return false;
        }
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    detail = "p = 2..8 identified with T(p,p+1) in " + std::to_string(ms) + " ms";
    return ms < 60000;
}

bool criterion_burau_oracle(std::string& detail) {
    for (int a = 2; a <= 7; ++a)
        for (int b = a + 1; b <= 7; ++b) {
            if (std::gcd(a, b) != 1) continue;
            if (alexander_of_knot_closure(torus_braid(a, b)) !=
                symmetrize(alexander_torus_knot(a, b))) {
                detail = "mismatch at T(" + std::to_string(a) + "," + std::to_string(b) + ")";
                return false;
            }
        }
    detail = "Burau route equals the quotient formula for all coprime 2 <= a < b <= 7";
    return true;
}

bool criterion_sw_map(std::string& detail) {
    std::mt19937 rng(90007);
    for (int i = 0; i < 1000; ++i) {
        const LaurentPoly p = random_poly(rng, 8, 6, 9);
        if (sw_map(p).term_count() != p.term_count()) {
            detail = "term count changed on random polynomial " + std::to_string(i);
            return false;
        }
    }
    for (int p = 1; p <= 60; ++p)
        for (int q = 1; q <= p; ++q) {
            const LaurentPoly P = symmetrize(p_poly(LinkFamilyParams(p, q)));
            if (sw_map(P).term_count() != P.term_count()) {
                detail = "term count changed at p=" + std::to_string(p) +
                         " q=" + std::to_string(q);
                return false;
            }
        }
    detail = "term counts preserved on 1000 random polynomials and the full grid";
    return true;
}

bool criterion_ring_suite(std::string& detail) {
    std::mt19937 rng(90008);
    for (int i = 0; i < 10000; ++i) {
        const LaurentPoly a = random_poly(rng, 4, 4, 6);
        const LaurentPoly b = random_poly(rng, 4, 4, 6);
        const LaurentPoly c = random_poly(rng, 4, 4, 6);
        if (a + b != b + a || (a + b) + c != a + (b + c) || a * b != b * a ||
            (a * b) * c != a * (b * c) || a * (b + c) != a * b + a * c) {
            detail = "ring axiom failed at iteration " + std::to_string(i);
            return false;
        }
        if (!b.is_zero() && div_exact(a * b, b) != a) {
            detail = "div_exact round trip failed at iteration " + std::to_string(i);
            return false;
        }
    }
    const LaurentPoly t_inv = LaurentPoly::variable("t", -1);
    for (int p = 1; p <= 60; ++p) {
        const LaurentPoly s = symmetrize(alexander_torus_knot(p, p + 1));
        if (symmetrize(s) != s) {
            detail = "symmetrize not idempotent at p=" + std::to_string(p);
            return false;
        }
        if (substitute(s, "t", t_inv) != s) {
            detail = "t <-> 1/t symmetry failed at p=" + std::to_string(p);
            return false;
        }
    }
    detail = "10000 randomized round-trips and all grid symmetry checks passed";
    return true;
}

bool criterion_divergence_witness(std::string& detail) {
    for (int q : {1, 2, 3})
        for (int N : {5, 25, 100}) {
            const auto t0 = Clock::now();
            const LinkFamilyParams params = divergence_witness(q, N);
            const Certificate cert = certificate(params);
            const auto ms =
                std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0)
                    .count();
            if (!cert.verified || cert.bound < N) {
                detail = "witness failed at q=" + std::to_string(q) + " N=" + std::to_string(N);
                return false;
            }
            if (ms >= 5000) {
                detail = "witness too slow at q=" + std::to_string(q) +
                         " N=" + std::to_string(N) + ": " + std::to_string(ms) + " ms";
                return false;
            }
        }
    detail = "verified witnesses with bound >= N for q in {1,2,3}, N in {5,25,100}";
    return true;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"term_count(P_{p,q}) >= p-q+1 for 1 <= q <= p <= 60, under 10 s",
         criterion_bound_grid},
        {"survivor exponents carry coefficient exactly 1 on the full grid",
         criterion_survivors},
        {"cancellation solvable iff n >= p-q+1 with first witness (0, p-1), p <= 30",
         criterion_cancellation},
        {"(t-1)P_{p,q} = (t^q-1)Delta_{T(p,p+1)} and P_{p,1} = Delta_{T(p,p+1)}, p <= 60",
         criterion_torres},
        {"gamma braids close to knots with the T(p,p+1) polynomial, p = 2..8, under 60 s",
         criterion_gamma_braids},
        {"Burau closure polynomial matches the quotient formula, coprime 2 <= a < b <= 7",
         criterion_burau_oracle},
        {"sw_map preserves term counts on 1000 random polynomials and the grid",
         criterion_sw_map},
        {"ring axioms, div_exact round-trips, symmetrize idempotence and t-symmetry",
         criterion_ring_suite},
        {"divergence witnesses verify with bound >= N in under 5 s per call",
         criterion_divergence_witness},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string detail;
        bool ok = false;
        try {
            ok = criteria[i].run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::cout << (ok ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].name
                  << " -- " << detail << "\n";
        if (!ok) ++failures;
    }
    if (failures) {
        std::cout << failures << " of " << criteria.size() << " criteria failed\n";
        return 1;
    }
    std::cout << "all " << criteria.size() << " criteria passed\n";
    return 0;
}
