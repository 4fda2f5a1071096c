#pragma once

// Certificates bounding the number of Seiberg-Witten basic classes of the
// link-surgery manifolds X_{p,q} from below.
//
// The chain certified here: the basic-class count equals the number of
// nonzero terms of the three-variable Alexander polynomial of L_{p,q},
// which is bounded below by the term count of the specialization P_{p,q}(t),
// which in turn contains p-q+1 uncancelled terms of coefficient 1. The full
// three-variable polynomial is never computed; only the specialization
// enters the certificate.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "lagtori/errors.hpp"
#include "lagtori/family.hpp"
#include "lagtori/laurent.hpp"

namespace lagtori {

// Variable squaring x -> x^2, y -> y^2, t -> t^2 relating the symmetrized
// Alexander polynomial to the Seiberg-Witten polynomial. Injective on
// monomials, so the term count is preserved.
inline LaurentPoly sw_map(const LaurentPoly& delta_sym) {
    LaurentPoly r = delta_sym;
    for (const auto& v : delta_sym.support_variables())
        r = substitute(r, v, LaurentPoly::variable(v, 2));
    return r;
}

// Exponents (q-1)(p+1) + n*p for n = 0..p-q: the p-q+1 terms of P_{p,q}
// certified to survive all cancellations.
inline std::vector<std::int64_t> survivor_exponents(const LinkFamilyParams& params) {
    const std::int64_t base = static_cast<std::int64_t>(params.q - 1) * (params.p + 1);
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(params.p - params.q + 1));
    for (int n = 0; n <= params.p - params.q; ++n)
        out.push_back(base + static_cast<std::int64_t>(n) * params.p);
    return out;
}

namespace detail {
inline std::vector<std::pair<std::int64_t, Integer>> read_survivors(
    const LinkFamilyParams& params, const LaurentPoly& p_expanded) {
    std::vector<std::pair<std::int64_t, Integer>> out;
    for (std::int64_t e : survivor_exponents(params)) {
        Integer c = p_expanded.coefficient(Monomial::variable("t", e));
        if (c == 0) throw SurvivorCancelled(e);
        out.emplace_back(e, std::move(c));
    }
    return out;
}
}  // namespace detail

// Coefficients of the survivor exponents, read off the exact expansion of
// P_{p,q}. Throws SurvivorCancelled if any of them vanishes.
inline std::vector<std::pair<std::int64_t, Integer>> verify_survivors(
    const LinkFamilyParams& params) {
    return detail::read_survivors(params, p_poly(params));
}

// Brute-force search for k >= 0, 0 <= l <= p-1 with
//     (q-1)(p+1) + n*p = k*p + l*(p+1) + q.
// Returns the lexicographically smallest (k, l) solution, or nothing.
inline std::optional<std::pair<std::int64_t, std::int64_t>> cancellation_check(
    const LinkFamilyParams& params, std::int64_t n) {
    if (n < 0) throw InvalidParams("cancellation index n must be >= 0");
    const std::int64_t p = params.p, q = params.q;
    const std::int64_t lhs = (q - 1) * (p + 1) + n * p;
    const std::int64_t k_max = (lhs + p - 1) / p;  // beyond this k*p alone exceeds lhs
    for (std::int64_t k = 0; k <= k_max; ++k)
        for (std::int64_t l = 0; l <= p - 1; ++l)
            if (k * p + l * (p + 1) + q == lhs) return std::make_pair(k, l);
    return std::nullopt;
}

struct CancellationWitness {
    std::int64_t n;
    std::int64_t k;
    std::int64_t l;

    friend bool operator==(const CancellationWitness&, const CancellationWitness&) = default;
};

struct Certificate {
    LinkFamilyParams params;
    std::int64_t exact_terms_P = 0;  // term_count(P_{p,q})
    std::int64_t bound = 0;          // p - q + 1
    std::vector<std::pair<std::int64_t, Integer>> survivors;
    std::optional<CancellationWitness> cancellation_witness;
    bool verified = false;
};

// Assemble and check the full certificate for (p, q). Throws ChainViolation
// if term_count(P) < p-q+1 and SurvivorCancelled if a survivor coefficient
// is zero; weaker mismatches (a survivor coefficient other than 1, or a
// cancellation witness off the modular prediction) leave verified = false.
inline Certificate certificate(const LinkFamilyParams& params) {
    Certificate cert{params, 0, 0, {}, std::nullopt, false};
    const LaurentPoly expanded = p_poly(params);
    cert.exact_terms_P = static_cast<std::int64_t>(expanded.term_count());
    cert.bound = params.p - params.q + 1;
    if (cert.exact_terms_P < cert.bound)
        throw ChainViolation("term_count(P_{" + std::to_string(params.p) + "," +
                             std::to_string(params.q) + "}) = " +
                             std::to_string(cert.exact_terms_P) + " < bound " +
                             std::to_string(cert.bound));
    cert.survivors = detail::read_survivors(params, expanded);

    bool survivors_are_one = true;
    for (const auto& [e, c] : cert.survivors)
        if (c != 1) survivors_are_one = false;

    // First n with a solution; the modular argument predicts n = p-q+1 with
    // witness (k, l) = (0, p-1), so the scan cannot run past bound + p.
    for (std::int64_t n = 0; n <= cert.bound + params.p; ++n) {
        if (auto kl = cancellation_check(params, n)) {
            cert.cancellation_witness = CancellationWitness{n, kl->first, kl->second};
            break;
        }
    }

    const bool witness_matches = cert.cancellation_witness &&
                                 cert.cancellation_witness->n == cert.bound &&
                                 cert.cancellation_witness->k == 0 &&
                                 cert.cancellation_witness->l == params.p - 1;
    cert.verified = survivors_are_one && witness_matches;
    return cert;
}

// Parameters whose certificate bound is at least N for the given q.
inline LinkFamilyParams divergence_witness(int q, int N) {
    if (q < 1 || N < 1) throw InvalidParams("require q >= 1 and N >= 1");
    return LinkFamilyParams(N + q - 1, q);
}

}  // namespace lagtori
