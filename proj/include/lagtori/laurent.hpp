#pragma once

// Exact multivariate Laurent polynomials over arbitrary-precision integers.
//
// Values are immutable in spirit: every operation returns a new canonical
// polynomial (no zero coefficients, no zero exponents, sorted terms). The
// canonical term order is lexicographic on variable name, then exponent,
// with absent variables counting as exponent zero; this order fixes the
// serialized form byte-exactly.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lagtori/errors.hpp"

namespace lagtori {

// Expression templates are disabled so Integer behaves as a plain value type
// inside standard containers.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;

// Product of formal variables with (possibly negative) integer exponents.
// Zero exponents are never stored.
class Monomial {
  public:
    using ExpList = std::vector<std::pair<std::string, std::int64_t>>;

    Monomial() = default;

    explicit Monomial(ExpList exps) : exps_(std::move(exps)) {
        std::sort(exps_.begin(), exps_.end());
        ExpList merged;
        for (auto& [name, e] : exps_) {
            if (!merged.empty() && merged.back().first == name) {
                merged.back().second += e;
            } else {
                merged.emplace_back(name, e);
            }
        }
        std::erase_if(merged, [](const auto& p) { return p.second == 0; });
        exps_ = std::move(merged);
    }

    static Monomial variable(std::string name, std::int64_t e = 1) {
        Monomial m;
        if (e != 0) m.exps_.emplace_back(std::move(name), e);
        return m;
    }

    const ExpList& exponents() const { return exps_; }
    bool is_constant() const { return exps_.empty(); }

    std::int64_t exponent(std::string_view var) const {
        for (const auto& [name, e] : exps_)
            if (name == var) return e;
        return 0;
    }

    Monomial times(const Monomial& o) const {
        Monomial r;
        r.exps_.reserve(exps_.size() + o.exps_.size());
        auto ia = exps_.begin(), ib = o.exps_.begin();
        while (ia != exps_.end() && ib != o.exps_.end()) {
            int c = ia->first.compare(ib->first);
            if (c < 0) {
                r.exps_.push_back(*ia++);
            } else if (c > 0) {
                r.exps_.push_back(*ib++);
            } else {
                std::int64_t e = ia->second + ib->second;
                if (e != 0) r.exps_.emplace_back(ia->first, e);
                ++ia, ++ib;
            }
        }
        r.exps_.insert(r.exps_.end(), ia, exps_.end());
        r.exps_.insert(r.exps_.end(), ib, o.exps_.end());
        return r;
    }

    Monomial inverse() const {
        Monomial r(*this);
        for (auto& [name, e] : r.exps_) e = -e;
        return r;
    }

    Monomial pow(std::int64_t k) const {
        if (k == 0) return Monomial{};
        Monomial r(*this);
        for (auto& [name, e] : r.exps_) e *= k;
        return r;
    }

    // Exponentwise divisibility (this | other), for ordinary monomials.
    bool divides(const Monomial& other) const {
        for (const auto& [name, e] : exps_)
            if (other.exponent(name) < e) return false;
        return true;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

    // Canonical order: walk variable names in ascending order, treating a
    // missing variable as exponent zero; the first differing exponent decides.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        auto ia = a.exps_.begin(), ib = b.exps_.begin();
        while (ia != a.exps_.end() && ib != b.exps_.end()) {
            int c = ia->first.compare(ib->first);
            if (c < 0) return ia->second <=> 0;
            if (c > 0) return 0 <=> ib->second;
            if (ia->second != ib->second) return ia->second <=> ib->second;
            ++ia, ++ib;
        }
        if (ia != a.exps_.end()) return ia->second <=> 0;
        if (ib != b.exps_.end()) return 0 <=> ib->second;
        return std::strong_ordering::equal;
    }

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (const auto& [name, e] : exps_) {
            if (!first) os << "*";
            os << name;
            if (e != 1) os << "^" << e;
            first = false;
        }
        return os.str();
    }

  private:
    ExpList exps_;  // sorted by name, exponents nonzero
};

class LaurentPoly {
  public:
    using TermMap = std::map<Monomial, Integer>;

    LaurentPoly() = default;
    LaurentPoly(int c) : LaurentPoly(Integer(c)) {}
    LaurentPoly(long long c) : LaurentPoly(Integer(c)) {}
    LaurentPoly(Integer c) {
        if (c != 0) terms_.emplace(Monomial{}, std::move(c));
    }

    static LaurentPoly variable(std::string name, std::int64_t e = 1) {
        return term(1, Monomial::variable(std::move(name), e));
    }

    static LaurentPoly term(Integer coeff, Monomial m) {
        LaurentPoly p;
        p.note_vars(m);
        if (coeff != 0) p.terms_.emplace(std::move(m), std::move(coeff));
        return p;
    }

    // Declared variables: always a superset of the variables appearing in
    // terms. Two polynomials compare equal iff their term maps are equal;
    // the declared set only affects serialization.
    const std::vector<std::string>& variables() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    LaurentPoly with_variable(const std::string& name) const {
        LaurentPoly r(*this);
        r.add_var(name);
        return r;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    bool is_monomial() const { return terms_.size() == 1; }

    // A unit of the Laurent ring: a single term with coefficient +-1.
    bool is_unit_monomial() const {
        return terms_.size() == 1 &&
               (terms_.begin()->second == 1 || terms_.begin()->second == -1);
    }

    Integer coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    // Variables that actually occur in some term.
    std::vector<std::string> support_variables() const {
        std::vector<std::string> out;
        for (const auto& [m, c] : terms_)
            for (const auto& [name, e] : m.exponents()) out.push_back(name);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    // Extremal exponents of `var` over the support; 0 when var is absent.
    std::int64_t min_exponent(std::string_view var) const {
        bool any = false;
        std::int64_t lo = 0;
        for (const auto& [m, c] : terms_) {
            std::int64_t e = m.exponent(var);
            if (!any || e < lo) lo = e;
            any = true;
        }
        return lo;
    }
    std::int64_t max_exponent(std::string_view var) const {
        bool any = false;
        std::int64_t hi = 0;
        for (const auto& [m, c] : terms_) {
            std::int64_t e = m.exponent(var);
            if (!any || e > hi) hi = e;
            any = true;
        }
        return hi;
    }

    // Value at all variables = 1.
    Integer sum_of_coefficients() const {
        Integer s = 0;
        for (const auto& [m, c] : terms_) s += c;
        return s;
    }

    LaurentPoly operator-() const {
        LaurentPoly r(*this);
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r(a);
        r.merge_vars(b.vars_);
        for (const auto& [m, c] : b.terms_) r.accumulate(m, c);
        return r;
    }

    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r(a);
        r.merge_vars(b.vars_);
        for (const auto& [m, c] : b.terms_) r.accumulate(m, -c);
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        r.vars_ = a.vars_;
        r.merge_vars(b.vars_);
        if (a.is_zero() || b.is_zero()) return r;

        // Single-variable products run on dense coefficient vectors; the
        // generic map accumulation handles the multivariate case.
        std::string uni;
        if (univariate_pair(a, b, uni)) {
            mul_dense(a, b, uni, r);
            return r;
        }
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.accumulate(ma.times(mb), ca * cb);
        return r;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        if (this == &o) {
            for (auto& [m, c] : terms_) c *= 2;
            return *this;
        }
        merge_vars(o.vars_);
        for (const auto& [m, c] : o.terms_) accumulate(m, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        if (this == &o) {
            terms_.clear();
            return *this;
        }
        merge_vars(o.vars_);
        for (const auto& [m, c] : o.terms_) accumulate(m, -c);
        return *this;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }

    LaurentPoly pow(std::int64_t k) const {
        if (k < 0) {
            if (!is_unit_monomial())
                throw NonInvertibleImage("negative power of a non-unit polynomial");
            const auto& [m, c] = *terms_.begin();
            Integer coeff = (c == -1 && (k % 2 != 0)) ? -1 : 1;
            return term(coeff, m.pow(k));
        }
        LaurentPoly acc(1);
        LaurentPoly base(*this);
        while (k > 0) {
            if (k & 1) acc *= base;
            base = (k >>= 1) > 0 ? base * base : base;
        }
        return acc;
    }

    // Human-readable form, terms in canonical order: "1 - t + t^2".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Integer a = c;
            if (first) {
                if (a < 0) {
                    os << "-";
                    a = -a;
                }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            if (m.is_constant()) {
                os << a.str();
            } else {
                if (a != 1) os << a.str() << "*";
                os << m.str();
            }
            first = false;
        }
        return os.str();
    }

  private:
    std::vector<std::string> vars_;  // sorted unique
    TermMap terms_;

    void add_var(const std::string& name) {
        auto it = std::lower_bound(vars_.begin(), vars_.end(), name);
        if (it == vars_.end() || *it != name) vars_.insert(it, name);
    }
    void note_vars(const Monomial& m) {
        for (const auto& [name, e] : m.exponents()) add_var(name);
    }
    void merge_vars(const std::vector<std::string>& other) {
        if (other.empty()) return;
        std::vector<std::string> merged;
        std::set_union(vars_.begin(), vars_.end(), other.begin(), other.end(),
                       std::back_inserter(merged));
        vars_ = std::move(merged);
    }
    void accumulate(const Monomial& m, Integer c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    // True when the supports of a and b involve at most one common variable;
    // that variable (or "" for constants) is reported in `var`.
    static bool univariate_pair(const LaurentPoly& a, const LaurentPoly& b,
                                std::string& var) {
        var.clear();
        for (const LaurentPoly* p : {&a, &b}) {
            for (const auto& [m, c] : p->terms_) {
                for (const auto& [name, e] : m.exponents()) {
                    if (var.empty())
                        var = name;
                    else if (var != name)
                        return false;
                }
            }
        }
        return true;
    }

    static void mul_dense(const LaurentPoly& a, const LaurentPoly& b,
                          const std::string& var, LaurentPoly& out) {
        const std::int64_t alo = a.min_exponent(var), ahi = a.max_exponent(var);
        const std::int64_t blo = b.min_exponent(var), bhi = b.max_exponent(var);
        std::vector<Integer> ca(static_cast<std::size_t>(ahi - alo) + 1);
        std::vector<Integer> cb(static_cast<std::size_t>(bhi - blo) + 1);
        for (const auto& [m, c] : a.terms_) ca[static_cast<std::size_t>(m.exponent(var) - alo)] = c;
        for (const auto& [m, c] : b.terms_) cb[static_cast<std::size_t>(m.exponent(var) - blo)] = c;
        std::vector<Integer> cr(ca.size() + cb.size() - 1);
        for (std::size_t i = 0; i < ca.size(); ++i) {
            if (ca[i] == 0) continue;
            for (std::size_t j = 0; j < cb.size(); ++j) {
                if (cb[j] == 0) continue;
                cr[i + j] += ca[i] * cb[j];
            }
        }
        for (std::size_t k = 0; k < cr.size(); ++k) {
            if (cr[k] == 0) continue;
            out.terms_.emplace_hint(
                out.terms_.end(),
                Monomial::variable(var, alo + blo + static_cast<std::int64_t>(k)),
                std::move(cr[k]));
        }
    }

    friend LaurentPoly div_exact(const LaurentPoly&, const LaurentPoly&);
};

// --- named operation aliases -------------------------------------------------

inline LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
inline LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }
inline std::size_t term_count(const LaurentPoly& p) { return p.term_count(); }

namespace detail {

// Monomial gcd of the support: per-variable minimum exponent. Dividing by it
// shifts a Laurent polynomial to an ordinary one with trivial content.
inline Monomial monomial_content(const LaurentPoly& p) {
    Monomial::ExpList exps;
    for (const auto& v : p.support_variables()) {
        std::int64_t lo = p.min_exponent(v);
        if (lo != 0) exps.emplace_back(v, lo);
    }
    return Monomial(exps);
}

// Exact division of ordinary (nonnegative-exponent) polynomials in at most
// one variable, on dense coefficient vectors.
inline LaurentPoly divide_dense(const LaurentPoly& num, const LaurentPoly& den,
                                const std::string& var) {
    const std::int64_t nhi = num.max_exponent(var);
    const std::int64_t dhi = den.max_exponent(var);
    if (nhi < dhi) throw NotDivisible();
    std::vector<Integer> r(static_cast<std::size_t>(nhi) + 1);
    std::vector<Integer> d(static_cast<std::size_t>(dhi) + 1);
    for (const auto& [m, c] : num.terms()) r[static_cast<std::size_t>(m.exponent(var))] = c;
    for (const auto& [m, c] : den.terms()) d[static_cast<std::size_t>(m.exponent(var))] = c;

    std::vector<std::size_t> dsupp;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] != 0) dsupp.push_back(i);
    const Integer& dtop = d[static_cast<std::size_t>(dhi)];

    std::vector<Integer> q(static_cast<std::size_t>(nhi - dhi) + 1);
    for (std::int64_t k = nhi - dhi; k >= 0; --k) {
        Integer& lead = r[static_cast<std::size_t>(k + dhi)];
        if (lead == 0) continue;
        Integer qk, rem;
        boost::multiprecision::divide_qr(lead, dtop, qk, rem);
        if (rem != 0) throw NotDivisible();
        q[static_cast<std::size_t>(k)] = qk;
        for (std::size_t i : dsupp) r[static_cast<std::size_t>(k) + i] -= qk * d[i];
    }
    for (const Integer& c : r)
        if (c != 0) throw NotDivisible();

    LaurentPoly out;
    for (std::size_t k = 0; k < q.size(); ++k)
        if (q[k] != 0)
            out += LaurentPoly::term(q[k], Monomial::variable(var, static_cast<std::int64_t>(k)));
    return out;
}

// Exact multivariate division by repeated leading-term reduction in the
// canonical order. If num = q*den the leading term of every partial
// remainder stays divisible by the leading term of den, so a failed step
// certifies that no exact quotient exists.
inline LaurentPoly divide_multivariate(const LaurentPoly& num, const LaurentPoly& den) {
    LaurentPoly::TermMap rest(num.terms());
    const auto& dlead = *den.terms().rbegin();
    LaurentPoly quotient;
    while (!rest.empty()) {
        const auto& [rm, rc] = *rest.rbegin();
        if (!dlead.first.divides(rm)) throw NotDivisible();
        Integer qc, rem;
        boost::multiprecision::divide_qr(rc, dlead.second, qc, rem);
        if (rem != 0) throw NotDivisible();
        Monomial qm = rm.times(dlead.first.inverse());
        for (const auto& [dm, dc] : den.terms()) {
            Monomial m = qm.times(dm);
            auto [it, inserted] = rest.try_emplace(m, -qc * dc);
            if (!inserted) {
                it->second -= qc * dc;
                if (it->second == 0) rest.erase(it);
            }
        }
        quotient += LaurentPoly::term(qc, qm);
    }
    return quotient;
}

}  // namespace detail

// Exact quotient in the Laurent ring: returns q with q*den == num, or throws
// NotDivisible. Both operands are first shifted to ordinary polynomials by
// dividing out their monomial content; monomials are units, so divisibility
// is unaffected.
inline LaurentPoly div_exact(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw DivisionByZero();
    LaurentPoly out;
    out.vars_ = num.vars_;
    out.merge_vars(den.vars_);
    if (num.is_zero()) return out;

    const Monomial nshift = detail::monomial_content(num);
    const Monomial dshift = detail::monomial_content(den);
    const LaurentPoly n0 = num * LaurentPoly::term(1, nshift.inverse());
    const LaurentPoly d0 = den * LaurentPoly::term(1, dshift.inverse());

    LaurentPoly q0;
    std::string var;
    if (d0.is_monomial() && d0.terms().begin()->first.is_constant()) {
        // den was a single term: divide every coefficient by it.
        const Integer& dc = d0.terms().begin()->second;
        if (dc == 1) {
            q0 = n0;
        } else if (dc == -1) {
            q0 = -n0;
        } else {
            for (const auto& [m, c] : n0.terms()) {
                Integer qc, rem;
                boost::multiprecision::divide_qr(c, dc, qc, rem);
                if (rem != 0) throw NotDivisible();
                q0 += LaurentPoly::term(qc, m);
            }
        }
    } else if (LaurentPoly::univariate_pair(n0, d0, var) && !var.empty()) {
        q0 = detail::divide_dense(n0, d0, var);
    } else {
        q0 = detail::divide_multivariate(n0, d0);
    }
    out += q0 * LaurentPoly::term(1, nshift.times(dshift.inverse()));
    return out;
}

// Substitution var := image. Negative powers of var require image to be a
// unit monomial; a zero image is rejected whenever var occurs.
inline LaurentPoly substitute(const LaurentPoly& p, const std::string& var,
                              const LaurentPoly& image) {
    bool occurs = false, negative = false;
    for (const auto& [m, c] : p.terms()) {
        std::int64_t e = m.exponent(var);
        occurs |= (e != 0);
        negative |= (e < 0);
    }
    if (!occurs) return p;
    if (image.is_zero())
        throw NonInvertibleImage("substitution image is the zero polynomial");
    if (negative && !image.is_unit_monomial())
        throw NonInvertibleImage("negative power of '" + var +
                                 "' needs a unit monomial image");

    LaurentPoly result;
    for (const auto& v : p.variables())
        if (v != var) result = result.with_variable(v);
    for (const auto& v : image.variables()) result = result.with_variable(v);

    if (image.is_monomial()) {
        // Monomial images map terms one-by-one; no polynomial powers needed.
        const auto& [im, ic] = *image.terms().begin();
        for (const auto& [m, c] : p.terms()) {
            std::int64_t e = m.exponent(var);
            Monomial rest = m.times(Monomial::variable(var, -e));
            Integer coeff = c;
            if (ic == -1) {
                if (e % 2 != 0) coeff = -coeff;
            } else if (ic != 1 && e > 0) {  // e < 0 forces a unit image
                coeff *= boost::multiprecision::pow(ic, static_cast<unsigned>(e));
            }
            result += LaurentPoly::term(coeff, rest.times(im.pow(e)));
        }
        return result;
    }

    std::map<std::int64_t, LaurentPoly> powers;
    for (const auto& [m, c] : p.terms()) {
        std::int64_t e = m.exponent(var);
        auto it = powers.find(e);
        if (it == powers.end()) it = powers.emplace(e, image.pow(e)).first;
        Monomial rest = m.times(Monomial::variable(var, -e));
        result += LaurentPoly::term(c, rest) * it->second;
    }
    return result;
}

// Unit normalization: center the exponent support of every variable around
// zero. A variable with odd span is first doubled (var := var^2), so the
// center is always integral. The sign is fixed by requiring the coefficient
// sum at all-variables = 1 to be nonnegative; if that sum is zero, the
// lowest term in canonical order is made positive.
inline LaurentPoly symmetrize(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    LaurentPoly r = p;
    for (const auto& v : p.support_variables()) {
        std::int64_t span = r.max_exponent(v) - r.min_exponent(v);
        if (span % 2 != 0) r = substitute(r, v, LaurentPoly::variable(v, 2));
    }
    Monomial::ExpList shift;
    for (const auto& v : r.support_variables()) {
        std::int64_t c = (r.min_exponent(v) + r.max_exponent(v)) / 2;
        if (c != 0) shift.emplace_back(v, -c);
    }
    if (!shift.empty()) r = r * LaurentPoly::term(1, Monomial(shift));
    Integer s = r.sum_of_coefficients();
    if (s < 0 || (s == 0 && r.terms().begin()->second < 0)) r = -r;
    return r;
}

}  // namespace lagtori
