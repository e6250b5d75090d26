#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "weylwt/rational.hpp"

namespace weylwt {

// Sparse multivariate polynomial over the rationals with variables of type
// Var. Canonical form: no zero coefficients, no zero exponents inside a
// monomial. Equality of represented elements is equality of the maps.
template <typename Var>
class Poly {
public:
    using Monomial = std::map<Var, int>;  // variable -> positive exponent
    using TermMap = std::map<Monomial, Rational>;

    Poly() = default;
    Poly(const Rational& c) {  // NOLINT: implicit by intent
        if (c != 0)
            terms_[Monomial{}] = c;
    }
    Poly(long long c) : Poly(Rational(c)) {}

    static Poly variable(const Var& v, int exp = 1) {
        Poly p;
        if (exp != 0)
            p.terms_[Monomial{{v, exp}}] = 1;
        else
            p.terms_[Monomial{}] = 1;
        return p;
    }

    static Poly term(const Monomial& m, const Rational& c) {
        Poly p;
        if (c != 0) {
            Monomial clean;
            for (const auto& [v, e] : m)
                if (e != 0)
                    clean[v] = e;
            p.terms_[clean] = c;
        }
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }

    Rational constant_term() const {
        auto it = terms_.find(Monomial{});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) {
            auto it = terms_.find(m);
            if (it == terms_.end()) {
                terms_.emplace(m, c);
            } else {
                it->second += c;
                if (it->second == 0)
                    terms_.erase(it);
            }
        }
        return *this;
    }

    Poly operator+(const Poly& o) const {
        Poly r = *this;
        r += o;
        return r;
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& [m, c] : r.terms_)
            c = -c;
        return r;
    }

    Poly operator-(const Poly& o) const { return *this + (-o); }
    Poly& operator-=(const Poly& o) { return *this += -o; }

    Poly operator*(const Poly& o) const {
        Poly r;
        for (const auto& [m1, c1] : terms_) {
            for (const auto& [m2, c2] : o.terms_) {
                Monomial m = m1;
                for (const auto& [v, e] : m2) {
                    m[v] += e;
                    if (m[v] == 0)
                        m.erase(v);
                }
                Rational c = c1 * c2;
                auto it = r.terms_.find(m);
                if (it == r.terms_.end()) {
                    if (c != 0)
                        r.terms_.emplace(std::move(m), c);
                } else {
                    it->second += c;
                    if (it->second == 0)
                        r.terms_.erase(it);
                }
            }
        }
        return r;
    }

    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly pow(int e) const {
        Poly r(1);
        for (int k = 0; k < e; ++k)
            r *= *this;
        return r;
    }

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
    bool operator<(const Poly& o) const { return terms_ < o.terms_; }

    // Image under the ring map sending each variable v to f(v), where f
    // returns values in R (anything with +, *, and a Rational constructor).
    template <typename R, typename F>
    R substitute(F&& f) const {
        R acc = R(Rational(0));
        for (const auto& [m, c] : terms_) {
            R t = R(c);
            for (const auto& [v, e] : m) {
                R base = f(v);
                for (int k = 0; k < e; ++k)
                    t = t * base;
            }
            acc = acc + t;
        }
        return acc;
    }

    // Renders e.g. "2*s^2 - 1/3". Variables printed via var_name.
    template <typename NameFn>
    std::string to_string(NameFn&& var_name) const {
        if (terms_.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        // constants render last
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            Rational a = c;
            if (first) {
                if (a < 0) {
                    os << "-";
                    a = -a;
                }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0)
                    a = -a;
            }
            first = false;
            bool need_coeff = (a != 1) || m.empty();
            if (need_coeff)
                os << rational_to_string(a);
            bool first_var = true;
            for (const auto& [v, e] : m) {
                if (!first_var || need_coeff)
                    os << "*";
                os << var_name(v);
                if (e != 1)
                    os << "^" << e;
                first_var = false;
            }
        }
        return os.str();
    }

private:
    TermMap terms_;
};

}  // namespace weylwt
