#pragma once

#include <compare>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "weylwt/scalar.hpp"

namespace weylwt {

// Coordinates are indexed by the natural numbers.
using Index = int;

// One coordinate of a weight: either an integer, or sign*symbol + offset
// for a transcendental symbol. Two values lie in the same Z-coset iff both
// are integers or both carry the same (sign, symbol).
class CoordValue {
public:
    CoordValue() : kind_(Kind::Int), value_(0), sign_(0) {}

    static CoordValue integer(long long v) {
        CoordValue c;
        c.kind_ = Kind::Int;
        c.value_ = v;
        return c;
    }

    static CoordValue nonint(int sign, Symbol symbol, long long offset) {
        if (sign != 1 && sign != -1)
            throw std::invalid_argument("CoordValue sign must be +1 or -1");
        CoordValue c;
        c.kind_ = Kind::NonInt;
        c.value_ = offset;
        c.sign_ = sign;
        c.symbol_ = std::move(symbol);
        return c;
    }

    bool is_int() const { return kind_ == Kind::Int; }
    long long int_value() const { return value_; }
    long long offset() const { return value_; }
    int sign() const { return sign_; }
    const Symbol& symbol() const { return symbol_; }

    // Integer coordinates split into the nonnegative class {0,1,2,...} and
    // the negative class {-1,-2,...}; this drives every support condition.
    bool is_nonneg_int() const { return is_int() && value_ >= 0; }
    bool is_neg_int() const { return is_int() && value_ < 0; }

    bool same_coset(const CoordValue& o) const {
        if (is_int() != o.is_int())
            return false;
        if (is_int())
            return true;
        return sign_ == o.sign_ && symbol_ == o.symbol_;
    }

    // Difference with a same-coset value, as an integer.
    long long minus(const CoordValue& o) const {
        if (!same_coset(o))
            throw std::invalid_argument("CoordValue::minus across cosets");
        return value_ - o.value_;
    }

    CoordValue plus(long long n) const {
        CoordValue c = *this;
        c.value_ += n;
        return c;
    }

    // The involution v -> -v - 1 (flips the two integer sign classes).
    CoordValue negated_minus_one() const {
        CoordValue c = *this;
        c.value_ = -c.value_ - 1;
        if (!is_int())
            c.sign_ = -c.sign_;
        return c;
    }

    Scalar to_scalar() const {
        if (is_int())
            return Scalar(value_);
        return Scalar(Rational(sign_)) * scalar_symbol(symbol_) + Scalar(value_);
    }

    std::string to_string() const {
        if (is_int())
            return std::to_string(value_);
        std::ostringstream os;
        if (sign_ < 0)
            os << "-";
        os << symbol_;
        if (value_ > 0)
            os << "+" << value_;
        else if (value_ < 0)
            os << value_;
        return os.str();
    }

    auto operator<=>(const CoordValue&) const = default;

private:
    enum class Kind { Int, NonInt };
    Kind kind_;
    long long value_;
    int sign_;
    Symbol symbol_;
};

// Finitely supported integral vector (an element of Z_f^I); no zero entries
// stored. Also serves as the group H acting on weights.
class Shift {
public:
    Shift() = default;
    explicit Shift(std::map<Index, long long> entries) {
        for (auto& [i, v] : entries)
            if (v != 0)
                entries_.emplace(i, v);
    }

    static Shift unit(Index i, long long v = 1) { return Shift({{i, v}}); }

    const std::map<Index, long long>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }

    long long at(Index i) const {
        auto it = entries_.find(i);
        return it == entries_.end() ? 0 : it->second;
    }

    void set(Index i, long long v) {
        if (v == 0)
            entries_.erase(i);
        else
            entries_[i] = v;
    }

    Shift operator+(const Shift& o) const {
        Shift r = *this;
        for (const auto& [i, v] : o.entries_)
            r.set(i, r.at(i) + v);
        return r;
    }

    Shift operator-() const {
        Shift r = *this;
        for (auto& [i, v] : r.entries_)
            v = -v;
        return r;
    }

    Shift operator-(const Shift& o) const { return *this + (-o); }

    long long total_degree() const {
        long long d = 0;
        for (const auto& [i, v] : entries_)
            d += v > 0 ? v : -v;
        return d;
    }

    auto operator<=>(const Shift&) const = default;

private:
    std::map<Index, long long> entries_;
};

// A point of k^I: a default coordinate value plus finitely many overrides.
// Canonical form: no stored override equals the default.
class Weight {
public:
    Weight() = default;
    explicit Weight(CoordValue default_value) : default_(std::move(default_value)) {}

    static Weight constant(long long v) { return Weight(CoordValue::integer(v)); }

    const CoordValue& default_value() const { return default_; }
    const std::map<Index, CoordValue>& overrides() const { return overrides_; }

    const CoordValue& at(Index i) const {
        auto it = overrides_.find(i);
        return it == overrides_.end() ? default_ : it->second;
    }

    void set(Index i, const CoordValue& v) {
        if (v == default_)
            overrides_.erase(i);
        else
            overrides_[i] = v;
    }

    Weight with(Index i, const CoordValue& v) const {
        Weight w = *this;
        w.set(i, v);
        return w;
    }

    std::set<Index> override_indices() const {
        std::set<Index> s;
        for (const auto& [i, v] : overrides_)
            s.insert(i);
        return s;
    }

    // True iff o - *this lies in Z_f^I.
    bool same_lattice(const Weight& o) const {
        if (!default_.same_coset(o.default_value()) ||
            default_.minus(o.default_value()) != 0)
            return false;
        for (Index i : touched_indices(*this, o))
            if (!at(i).same_coset(o.at(i)))
                return false;
        return true;
    }

    // The difference *this - o as a Shift; requires same_lattice(o).
    Shift minus(const Weight& o) const {
        if (!same_lattice(o))
            throw std::invalid_argument("Weight::minus across lattices");
        Shift s;
        for (Index i : touched_indices(*this, o))
            s.set(i, at(i).minus(o.at(i)));
        return s;
    }

    static std::set<Index> touched_indices(const Weight& a, const Weight& b) {
        std::set<Index> s = a.override_indices();
        for (Index i : b.override_indices())
            s.insert(i);
        return s;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << "(default " << default_.to_string();
        for (const auto& [i, v] : overrides_)
            os << ", " << i << ":" << v.to_string();
        os << ")";
        return os.str();
    }

    auto operator<=>(const Weight&) const = default;

private:
    CoordValue default_;
    std::map<Index, CoordValue> overrides_;
};

// A finite or cofinite set of indices; cofinite sets arise from defaults
// (e.g. the J of a canonical form when the default falls in the negative
// integer class).
class IndexSet {
public:
    IndexSet() : cofinite_(false) {}
    IndexSet(std::initializer_list<Index> xs) : cofinite_(false), elems_(xs) {}
    static IndexSet finite(std::set<Index> xs) {
        IndexSet s;
        s.elems_ = std::move(xs);
        return s;
    }
    static IndexSet cofinite(std::set<Index> excluded) {
        IndexSet s;
        s.cofinite_ = true;
        s.elems_ = std::move(excluded);
        return s;
    }
    static IndexSet all() { return cofinite({}); }

    bool is_cofinite() const { return cofinite_; }
    bool is_finite() const { return !cofinite_; }
    bool empty() const { return !cofinite_ && elems_.empty(); }
    // Members if finite, non-members if cofinite.
    const std::set<Index>& elems() const { return elems_; }

    bool contains(Index i) const {
        bool listed = elems_.count(i) > 0;
        return cofinite_ ? !listed : listed;
    }

    IndexSet complement() const {
        IndexSet s = *this;
        s.cofinite_ = !s.cofinite_;
        return s;
    }

    std::string to_string() const {
        std::ostringstream os;
        if (cofinite_)
            os << "~";
        os << "{";
        bool first = true;
        for (Index i : elems_) {
            if (!first)
                os << ",";
            os << i;
            first = false;
        }
        os << "}";
        return os.str();
    }

    auto operator<=>(const IndexSet&) const = default;

private:
    bool cofinite_;
    std::set<Index> elems_;
};

// sigma_shift: the free action of Z_f^I on k^I, p -> p + v.
inline Weight sigma_shift(const Weight& p, const Shift& v) {
    Weight w = p;
    for (const auto& [i, n] : v.entries())
        w.set(i, w.at(i).plus(n));
    return w;
}

// theta_weight: coordinatewise p_i -> -p_i - 1 on J, identity elsewhere.
// An involution on weights.
inline Weight theta_weight(const IndexSet& J, const Weight& p) {
    // The default transforms iff unlisted indices belong to J.
    Weight w(J.is_cofinite() ? p.default_value().negated_minus_one()
                             : p.default_value());
    std::set<Index> touched = p.override_indices();
    for (Index i : J.elems())
        touched.insert(i);
    for (Index i : touched)
        w.set(i, J.contains(i) ? p.at(i).negated_minus_one() : p.at(i));
    return w;
}

}  // namespace weylwt
