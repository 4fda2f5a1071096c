#pragma once

// Closed-form invariants of the three-component link family L_{p,q}:
// linking data, the torus-knot Alexander polynomial, the quotient
// polynomial P_{p,q}(t) and its Torres product form, and the q = 1 splice.

#include <cstdint>
#include <numeric>
#include <string>

#include "lagtori/errors.hpp"
#include "lagtori/laurent.hpp"

namespace lagtori {

struct LinkFamilyParams {
    int p;
    int q;

    LinkFamilyParams(int p_, int q_) : p(p_), q(q_) {
        if (q < 1 || q > p)
            throw InvalidParams("require 1 <= q <= p, got p=" + std::to_string(p) +
                                " q=" + std::to_string(q));
    }

    friend bool operator==(const LinkFamilyParams&, const LinkFamilyParams&) = default;
};

// Off-diagonal linking numbers of L_{p,q} = K u M u gamma; the diagonal of
// the linking matrix is left unspecified. Independent of p.
struct LinkingData {
    int lk_K_M;
    int lk_K_gamma;
    int lk_M_gamma;

    static constexpr const char* component_names[3] = {"K", "M", "gamma"};
};

// Class of gamma_{p,q} in first homology of the link exterior of K u M,
// written in the meridian basis [mu(K)], [mu(M)].
struct HomologyClass {
    int mu_K_coefficient;
    int mu_M_coefficient;

    friend bool operator==(const HomologyClass&, const HomologyClass&) = default;
};

inline LinkingData linking_matrix(const LinkFamilyParams& params) {
    return LinkingData{1, 0, params.q};
}

inline HomologyClass homology_class(const LinkFamilyParams& params) {
    const LinkingData lk = linking_matrix(params);
    return HomologyClass{lk.lk_K_gamma, lk.lk_M_gamma};
}

namespace detail {
inline LaurentPoly one_minus_t_pow(std::int64_t e) {
    return LaurentPoly(1) - LaurentPoly::variable("t", e);
}
}  // namespace detail

// Alexander polynomial of the torus knot T(a,b), expanded exactly from
//     (1 - t)(1 - t^{ab}) / ((1 - t^a)(1 - t^b)),
// unsymmetrized (support starts at exponent 0).
inline LaurentPoly alexander_torus_knot(int a, int b) {
    if (a < 1 || b < 1) throw InvalidParams("torus knot parameters must be >= 1");
    if (std::gcd(a, b) != 1) throw NotCoprime(a, b);
    const std::int64_t ab = static_cast<std::int64_t>(a) * b;
    return div_exact(detail::one_minus_t_pow(1) * detail::one_minus_t_pow(ab),
                     detail::one_minus_t_pow(a) * detail::one_minus_t_pow(b));
}

// P_{p,q}(t) = (1 - t^q)(1 - t^{p(p+1)}) / ((1 - t^p)(1 - t^{p+1})),
// expanded exactly. The division has zero remainder for every valid
// parameter pair; a nonzero remainder would falsify the quotient form.
inline LaurentPoly p_poly(const LinkFamilyParams& params) {
    const std::int64_t p = params.p;
    try {
        return div_exact(
            detail::one_minus_t_pow(params.q) * detail::one_minus_t_pow(p * (p + 1)),
            detail::one_minus_t_pow(p) * detail::one_minus_t_pow(p + 1));
    } catch (const NotDivisible&) {
        throw Error("internal: quotient form of P_{p,q} left a remainder for p=" +
                    std::to_string(params.p) + " q=" + std::to_string(params.q));
    }
}

// Torres specialization ((t^q - 1)/(t - 1)) * Delta_{T(p,p+1)}(t); equals
// p_poly(params) as an identity.
inline LaurentPoly torres_specialize(const LinkFamilyParams& params) {
    const LaurentPoly t = LaurentPoly::variable("t");
    const LaurentPoly cyclotomic_sum =
        div_exact(LaurentPoly::variable("t", params.q) - 1, t - 1);
    return cyclotomic_sum * alexander_torus_knot(params.p, params.p + 1);
}

// Alexander polynomial of gamma_{p,1} u M via the splice with the
// three-component necklace link: the result is Delta_{T(p,p+1)}(t),
// constant in y, returned with y declared.
inline LaurentPoly splice_q1(int p) {
    if (p < 2) throw InvalidParams("splice requires p >= 2");
    return alexander_torus_knot(p, p + 1).with_variable("y");
}

// Torres step from the two-component polynomial up to the x = 1
// specialization of the full three-variable polynomial: multiply by
// y^{lk(M,K)} t^{lk(gamma,K)} - 1 = y - 1.
inline LaurentPoly specialization_x1(const LinkFamilyParams& params,
                                     const LaurentPoly& two_var) {
    const LinkingData lk = linking_matrix(params);
    const LaurentPoly factor =
        LaurentPoly::term(1, Monomial({{"y", lk.lk_K_M}, {"t", lk.lk_K_gamma}})) -
        LaurentPoly(1);
    return factor * two_var;
}

}  // namespace lagtori
