#include "weylwt/weyl.hpp"

#include <sstream>
#include <stdexcept>

namespace weylwt {

Scalar eval_a0(const A0Poly& q, const Weight& p) {
    return q.substitute<Scalar>([&p](Index i) { return p.at(i).to_scalar(); });
}

WeylElement WeylElement::X(Index i, int power) {
    return monomial(Shift::unit(i, power), A0Poly(1));
}

WeylElement WeylElement::Y(Index i, int power) {
    return monomial(Shift::unit(i, -power), A0Poly(1));
}

WeylElement WeylElement::from_a0(const A0Poly& q) { return monomial(Shift(), q); }

WeylElement WeylElement::monomial(const Shift& v, const A0Poly& q) {
    WeylElement a;
    a.add_term(v, q);
    return a;
}

void WeylElement::add_term(const Shift& v, const A0Poly& q) {
    if (q.is_zero())
        return;
    auto it = terms_.find(v);
    if (it == terms_.end()) {
        terms_.emplace(v, q);
    } else {
        it->second += q;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

WeylElement WeylElement::operator+(const WeylElement& o) const {
    WeylElement r = *this;
    for (const auto& [v, q] : o.terms_)
        r.add_term(v, q);
    return r;
}

WeylElement WeylElement::operator-() const {
    WeylElement r = *this;
    for (auto& [v, q] : r.terms_)
        q = -q;
    return r;
}

WeylElement WeylElement::scaled(const Rational& c) const {
    WeylElement r;
    for (const auto& [v, q] : terms_)
        r.add_term(v, q * A0Poly(c));
    return r;
}

namespace {

// Substitute t_i -> t_i + w_i, i.e. commute an A0 coefficient past X_w.
A0Poly shift_vars(const A0Poly& q, const Shift& w) {
    if (w.is_zero())
        return q;
    return q.substitute<A0Poly>([&w](Index i) {
        return A0Poly::variable(i) + A0Poly(w.at(i));
    });
}

// The single-coordinate straightening X_a X_b = X_{a+b} * c(t_i), where
// X_n means X_i^n for n > 0 and Y_i^{-n} for n < 0. Nontrivial only when
// an X power meets a Y power:
//   X^b Y^b = t(t-1)...(t-b+1),   Y^a X^a = (t+1)(t+2)...(t+a).
A0Poly straighten_coord(Index i, long long a, long long b) {
    A0Poly c(1);
    A0Poly ti = A0Poly::variable(i);
    if (a > 0 && b < 0) {
        long long B = -b;
        if (a >= B) {
            for (long long j = 0; j < B; ++j)
                c *= ti - A0Poly(j);
        } else {
            for (long long j = 0; j < a; ++j)
                c *= ti - A0Poly((B - a) + j);
        }
    } else if (a < 0 && b > 0) {
        long long A = -a;
        if (A >= b) {
            for (long long j = 1; j <= b; ++j)
                c *= ti + A0Poly(j);
        } else {
            for (long long j = 1; j <= A; ++j)
                c *= ti + A0Poly((b - A) + j);
        }
    }
    return c;
}

}  // namespace

WeylElement WeylElement::operator*(const WeylElement& o) const {
    // (X_v q)(X_w r) = X_{v+w} * c_{v,w}(t) * q(t+w) * r(t), where c is the
    // product of the per-coordinate straightening factors of X_v X_w.
    WeylElement res;
    for (const auto& [v, q] : terms_) {
        for (const auto& [w, r] : o.terms_) {
            A0Poly coeff = shift_vars(q, w) * r;
            std::set<Index> idx;
            for (const auto& [i, a] : v.entries())
                idx.insert(i);
            for (const auto& [i, b] : w.entries())
                idx.insert(i);
            for (Index i : idx)
                coeff *= straighten_coord(i, v.at(i), w.at(i));
            res.add_term(v + w, coeff);
        }
    }
    return res;
}

WeylElement WeylElement::pow(int e) const {
    WeylElement r = one();
    for (int k = 0; k < e; ++k)
        r *= *this;
    return r;
}

std::set<Index> WeylElement::touched_indices() const {
    std::set<Index> idx;
    for (const auto& [v, q] : terms_) {
        for (const auto& [i, a] : v.entries())
            idx.insert(i);
        for (const auto& [m, c] : q.terms())
            for (const auto& [i, e] : m)
                idx.insert(i);
    }
    return idx;
}

long long WeylElement::total_degree() const {
    long long d = 0;
    for (const auto& [v, q] : terms_) {
        long long qd = 0;
        for (const auto& [m, c] : q.terms()) {
            long long md = 0;
            for (const auto& [i, e] : m)
                md += e;
            qd = std::max(qd, md);
        }
        d = std::max(d, v.total_degree() + 2 * qd);
    }
    return d;
}

std::string WeylElement::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, q] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        bool have_mono = !v.is_zero();
        bool mono_first = true;
        for (const auto& [i, a] : v.entries()) {
            if (a > 0) {
                if (!mono_first)
                    os << " ";
                os << "X" << i;
                if (a > 1)
                    os << "^" << a;
                mono_first = false;
            }
        }
        for (const auto& [i, a] : v.entries()) {
            if (a < 0) {
                if (!mono_first)
                    os << " ";
                os << "Y" << i;
                if (a < -1)
                    os << "^" << -a;
                mono_first = false;
            }
        }
        if (!have_mono) {
            os << a0poly_to_string(q);
        } else if (!(q.is_constant() && q.constant_term() == 1)) {
            os << " * (" << a0poly_to_string(q) << ")";
        }
    }
    return os.str();
}

WeylElement involution(const WeylElement& a) {
    // diamond(X_v q) = q X_{-v} = X_{-v} q(t - v); A0 is fixed pointwise.
    WeylElement r;
    for (const auto& [v, q] : a.terms())
        r.add_term(-v, shift_vars(q, -v));
    return r;
}

WeylElement theta_algebra(const std::set<Index>& J, const WeylElement& a) {
    WeylElement r;
    for (const auto& [v, q] : a.terms()) {
        // theta(X_v): coordinatewise X_j^k -> Y_j^k and Y_j^k -> (-X_j)^k
        // on J; distinct coordinates commute so the image is +-X_{v'}.
        Shift vp = v;
        int sign = 1;
        for (const auto& [i, n] : v.entries()) {
            if (J.count(i)) {
                vp.set(i, -n);
                if (n < 0 && ((-n) % 2 == 1))
                    sign = -sign;
            }
        }
        A0Poly qp = q.substitute<A0Poly>([&J](Index i) {
            A0Poly ti = A0Poly::variable(i);
            return J.count(i) ? -ti - A0Poly(1) : ti;
        });
        if (sign < 0)
            qp = -qp;
        r.add_term(vp, qp);
    }
    return r;
}

}  // namespace weylwt
