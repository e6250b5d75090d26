#pragma once

#include <map>
#include <set>
#include <string>

#include "weylwt/poly.hpp"
#include "weylwt/weight.hpp"

namespace weylwt {

// Polynomial in the commuting generators t_i = X_i Y_i of A0.
using A0Poly = Poly<Index>;

inline std::string a0poly_to_string(const A0Poly& q) {
    return q.to_string([](Index i) { return "t" + std::to_string(i); });
}

// Substitute t_i -> p_i.
Scalar eval_a0(const A0Poly& q, const Weight& p);

// Element of the Weyl algebra A in normal form: a finite sum of ordered
// monomials X_v with A0 coefficients written on the right,
//     a = sum_v X_v * q_v(t).
// Here X_v is the product of X_i^{v_i} over v_i > 0 and Y_i^{-v_i} over
// v_i < 0.
class WeylElement {
public:
    WeylElement() = default;

    static WeylElement zero() { return WeylElement(); }
    static WeylElement one() { return from_a0(A0Poly(1)); }
    static WeylElement X(Index i, int power = 1);
    static WeylElement Y(Index i, int power = 1);
    static WeylElement t(Index i) { return from_a0(A0Poly::variable(i)); }
    static WeylElement from_a0(const A0Poly& q);
    static WeylElement monomial(const Shift& v, const A0Poly& q);

    const std::map<Shift, A0Poly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Shift& v, const A0Poly& q);

    WeylElement operator+(const WeylElement& o) const;
    WeylElement operator-() const;
    WeylElement operator-(const WeylElement& o) const { return *this + (-o); }
    WeylElement operator*(const WeylElement& o) const;  // normal product
    WeylElement& operator*=(const WeylElement& o) { return *this = *this * o; }
    WeylElement& operator+=(const WeylElement& o) { return *this = *this + o; }

    WeylElement scaled(const Rational& c) const;
    WeylElement pow(int e) const;

    bool operator==(const WeylElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const WeylElement& o) const { return !(*this == o); }

    // Indices appearing in any shift or coefficient; drives probe sets.
    std::set<Index> touched_indices() const;
    // max over terms of |v| + deg(q), an upper bound on operator degree.
    long long total_degree() const;

    std::string to_string() const;

private:
    std::map<Shift, A0Poly> terms_;
};

// The standard involutive anti-automorphism of A with X_i -> Y_i; fixes A0
// pointwise.
WeylElement involution(const WeylElement& a);

// The order-4 automorphism theta_J: X_j -> Y_j, Y_j -> -X_j for j in J,
// identity elsewhere. On t it acts by t_j -> -t_j - 1.
WeylElement theta_algebra(const std::set<Index>& J, const WeylElement& a);

}  // namespace weylwt
