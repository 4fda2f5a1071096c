#pragma once

// Braid words, the reduced Burau representation, and Alexander polynomials
// of knot closures.
//
// Burau convention (one of several in the literature; mirror ambiguity is
// absorbed by symmetrization): sigma_i acts on the (n-1)-dimensional reduced
// module as the identity except in row i, where
//     B[i][i-1] = t,  B[i][i] = -t,  B[i][i+1] = 1     (1-indexed, clipped),
// and the inverse generator has row i equal to
//     B[i][i-1] = 1,  B[i][i] = -t^-1,  B[i][i+1] = t^-1.

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "lagtori/errors.hpp"
#include "lagtori/laurent.hpp"
#include "lagtori/polynomial_matrix.hpp"

namespace lagtori {

class BraidWord {
  public:
    BraidWord(int strands, std::vector<int> letters)
        : strands_(strands), letters_(std::move(letters)) {
        if (strands_ < 2)
            throw InputError("braid needs at least 2 strands, got " +
                             std::to_string(strands_));
        for (int ell : letters_)
            if (ell == 0 || std::abs(ell) > strands_ - 1)
                throw InputError("braid letter " + std::to_string(ell) +
                                 " out of range for " + std::to_string(strands_) +
                                 " strands");
    }

    int strands() const { return strands_; }
    const std::vector<int>& letters() const { return letters_; }

    std::int64_t exponent_sum() const {
        std::int64_t s = 0;
        for (int ell : letters_) s += (ell > 0) ? 1 : -1;
        return s;
    }

    // Text format: "strands=3; 1,2,1" (letters optional for the identity braid).
    static BraidWord parse(std::string_view text) {
        auto fail = [&] { throw InputError("malformed braid: '" + std::string(text) + "'"); };
        auto trim = [](std::string_view s) {
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
            return s;
        };
        auto parse_int = [&](std::string_view s) {
            s = trim(s);
            int value = 0;
            auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
            if (ec != std::errc{} || ptr != s.data() + s.size()) fail();
            return value;
        };

        std::string_view rest = trim(text);
        constexpr std::string_view kHeader = "strands=";
        if (!rest.starts_with(kHeader)) fail();
        rest.remove_prefix(kHeader.size());
        std::size_t semi = rest.find(';');
        if (semi == std::string_view::npos) fail();
        int strands = parse_int(rest.substr(0, semi));
        rest = trim(rest.substr(semi + 1));

        std::vector<int> letters;
        while (!rest.empty()) {
            std::size_t comma = rest.find(',');
            std::string_view tok = (comma == std::string_view::npos) ? rest : rest.substr(0, comma);
            letters.push_back(parse_int(tok));
            rest = (comma == std::string_view::npos) ? std::string_view{} : trim(rest.substr(comma + 1));
        }
        return BraidWord(strands, std::move(letters));
    }

    std::string str() const {
        std::ostringstream os;
        os << "strands=" << strands_ << ";";
        for (std::size_t i = 0; i < letters_.size(); ++i)
            os << (i == 0 ? " " : ",") << letters_[i];
        return os.str();
    }

    friend bool operator==(const BraidWord&, const BraidWord&) = default;

  private:
    int strands_;
    std::vector<int> letters_;
};

// Permutation of strand positions induced by closing a braid; the number of
// cycles is the number of components of the closure.
struct ClosurePermutation {
    std::vector<int> images;  // images[start position] = end position, 0-based

    int cycle_count() const {
        std::vector<bool> seen(images.size(), false);
        int cycles = 0;
        for (std::size_t i = 0; i < images.size(); ++i) {
            if (seen[i]) continue;
            ++cycles;
            for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images[j]))
                seen[j] = true;
        }
        return cycles;
    }

    bool is_knot() const { return cycle_count() == 1; }
};

inline BraidWord compose(const BraidWord& a, const BraidWord& b) {
    if (a.strands() != b.strands()) throw StrandMismatch(a.strands(), b.strands());
    std::vector<int> letters = a.letters();
    letters.insert(letters.end(), b.letters().begin(), b.letters().end());
    return BraidWord(a.strands(), std::move(letters));
}

// Cancel adjacent sigma_i sigma_i^-1 pairs to a fixpoint.
inline BraidWord free_reduce(const BraidWord& w) {
    std::vector<int> stack;
    for (int ell : w.letters()) {
        if (!stack.empty() && stack.back() == -ell)
            stack.pop_back();
        else
            stack.push_back(ell);
    }
    return BraidWord(w.strands(), std::move(stack));
}

inline ClosurePermutation closure_permutation(const BraidWord& w) {
    const int n = w.strands();
    std::vector<int> at(n);  // at[position] = strand index that started there
    std::iota(at.begin(), at.end(), 0);
    for (int ell : w.letters()) {
        int i = std::abs(ell) - 1;
        std::swap(at[i], at[i + 1]);
    }
    std::vector<int> images(n);
    for (int pos = 0; pos < n; ++pos) images[at[pos]] = pos;
    return ClosurePermutation{std::move(images)};
}

inline PolyMatrix burau_reduced(const BraidWord& w) {
    const int n = w.strands();
    const std::size_t dim = static_cast<std::size_t>(n - 1);
    PolyMatrix m = identity_matrix(dim);
    const LaurentPoly t = LaurentPoly::variable("t");
    const LaurentPoly t_inv = LaurentPoly::variable("t", -1);

    // Right-multiplying by a generator only touches columns r-1, r, r+1.
    for (int ell : w.letters()) {
        const std::size_t r = static_cast<std::size_t>(std::abs(ell) - 1);
        const bool pos = ell > 0;
        for (std::size_t i = 0; i < dim; ++i) {
            LaurentPoly v = std::move(m[i][r]);
            if (v.is_zero()) {
                m[i][r] = LaurentPoly();
                continue;
            }
            if (r > 0) m[i][r - 1] += pos ? v * t : v;
            if (r + 1 < dim) m[i][r + 1] += pos ? v : v * t_inv;
            m[i][r] = pos ? -(v * t) : -(v * t_inv);
        }
    }
    return m;
}

// Alexander polynomial of the closure of w, which must be a knot:
//     det(burau(w) - I) * (1 - t) / (1 - t^n),
// computed exactly and then symmetrized. The division is exact whenever the
// closure is a knot; a nonzero remainder would be an internal error.
inline LaurentPoly alexander_of_knot_closure(const BraidWord& w) {
    const ClosurePermutation perm = closure_permutation(w);
    const int components = perm.cycle_count();
    if (components != 1) throw NotAKnot(components);

    PolyMatrix m = burau_reduced(w);
    for (std::size_t i = 0; i < m.size(); ++i) m[i][i] -= LaurentPoly(1);
    const LaurentPoly det = determinant(std::move(m));

    const LaurentPoly t = LaurentPoly::variable("t");
    const LaurentPoly num = det * (LaurentPoly(1) - t);
    const LaurentPoly den = LaurentPoly(1) - LaurentPoly::variable("t", w.strands());
    LaurentPoly quotient;
    try {
        quotient = div_exact(num, den);
    } catch (const NotDivisible&) {
        throw Error("internal: Burau closure determinant not divisible by 1 - t^n");
    }
    return symmetrize(quotient);
}

// (sigma_1 ... sigma_{a-1})^b on a strands; closure is the torus link T(a,b).
inline BraidWord torus_braid(int a, int b) {
    if (a < 2 || b < 1)
        throw InvalidParams("torus braid needs a >= 2 and b >= 1");
    std::vector<int> letters;
    letters.reserve(static_cast<std::size_t>(a - 1) * static_cast<std::size_t>(b));
    for (int rep = 0; rep < b; ++rep)
        for (int i = 1; i < a; ++i) letters.push_back(i);
    return BraidWord(a, std::move(letters));
}

namespace detail {
// Positive half twist on p strands: each strand passes across every strand
// to its right exactly once.
inline std::vector<int> halftwist_letters(int p) {
    std::vector<int> letters;
    letters.reserve(static_cast<std::size_t>(p) * static_cast<std::size_t>(p - 1) / 2);
    for (int k = 1; k < p; ++k)
        for (int i = k; i >= 1; --i) letters.push_back(i);
    return letters;
}
}  // namespace detail

inline BraidWord halftwist(int p) {
    if (p < 2) throw InvalidParams("half twist needs at least 2 strands");
    return BraidWord(p, detail::halftwist_letters(p));
}

// The curve gamma_p as a braid on p+1 strands: a full twist (two half
// twists) on the first p strands, then one strand carried across all p
// others. Its closure is certified elsewhere to be the torus knot T(p,p+1);
// the braid word itself is a reconstruction, pinned down by those checks.
inline BraidWord gamma_braid(int p) {
    if (p < 2) throw InvalidParams("gamma braid needs p >= 2");
    std::vector<int> letters = detail::halftwist_letters(p);
    const std::vector<int> half = letters;
    letters.insert(letters.end(), half.begin(), half.end());
    for (int i = p; i >= 1; --i) letters.push_back(i);
    return BraidWord(p + 1, std::move(letters));
}

}  // namespace lagtori
