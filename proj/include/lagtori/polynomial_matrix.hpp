#pragma once

// Dense matrices of Laurent polynomials and a fraction-free determinant.

#include <cstddef>
#include <utility>
#include <vector>

#include "lagtori/errors.hpp"
#include "lagtori/laurent.hpp"

namespace lagtori {

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

inline PolyMatrix identity_matrix(std::size_t n) {
    PolyMatrix m(n, std::vector<LaurentPoly>(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = LaurentPoly(1);
    return m;
}

inline PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
    const std::size_t n = a.size(), k = b.size(), cols = k ? b[0].size() : 0;
    PolyMatrix r(n, std::vector<LaurentPoly>(cols));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            LaurentPoly acc;
            for (std::size_t s = 0; s < k; ++s) {
                if (a[i][s].is_zero() || b[s][j].is_zero()) continue;
                acc += a[i][s] * b[s][j];
            }
            r[i][j] = std::move(acc);
        }
    return r;
}

// Bareiss elimination over the integer Laurent ring. Negative exponents are
// first cleared by a global monomial shift (det scales by shift^n, undone at
// the end); every interior division is exact by the Sylvester minor identity.
inline LaurentPoly determinant(PolyMatrix m) {
    const std::size_t n = m.size();
    if (n == 0) return LaurentPoly(1);

    Monomial::ExpList lows;
    {
        std::map<std::string, std::int64_t> lo;
        for (const auto& row : m)
            for (const auto& entry : row)
                for (const auto& [mono, c] : entry.terms())
                    for (const auto& [name, e] : mono.exponents()) {
                        auto [it, fresh] = lo.try_emplace(name, e);
                        if (!fresh && e < it->second) it->second = e;
                    }
        for (const auto& [name, e] : lo)
            if (e < 0) lows.emplace_back(name, e);
    }
    const Monomial shift = Monomial(std::move(lows)).inverse();
    if (!shift.is_constant()) {
        const LaurentPoly s = LaurentPoly::term(1, shift);
        for (auto& row : m)
            for (auto& entry : row) entry *= s;
    }

    bool negate = false;
    LaurentPoly prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < n && m[r][k].is_zero()) ++r;
            if (r == n) return LaurentPoly(0);
            std::swap(m[k], m[r]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = div_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
        prev = m[k][k];
    }

    LaurentPoly det = std::move(m[n - 1][n - 1]);
    if (negate) det = -det;
    if (!shift.is_constant())
        det = det * LaurentPoly::term(1, shift.pow(static_cast<std::int64_t>(n)).inverse());
    return det;
}

}  // namespace lagtori
