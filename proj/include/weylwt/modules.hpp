#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>

#include "weylwt/weyl.hpp"

namespace weylwt {

// Per-coordinate action rule of a monomial module. Each mode fixes, for X_i
// and Y_i, a direction and a coefficient affine in the monomial exponent
// m_i:
//   Plain        X: +e, 1        Y: -e, m        (polynomial action)
//   DualPlain    X: +e, m+1      Y: -e, 1        (restricted dual)
//   Twisted      X: -e, m        Y: +e, -1       (theta twist)
//   DualTwisted  X: -e, -1       Y: +e, m+1      (dual of a twist)
enum class CoordMode { Plain, DualPlain, Twisted, DualTwisted };

CoordMode dual_mode(CoordMode m);
CoordMode theta_flip_mode(CoordMode m);

// Per-coordinate support constraint on monomial exponents.
enum class Constraint { Free, GeqZero, LeqMinusOne };

// Construction tag, kept for rendering and descriptors.
struct ModuleLabel {
    enum class Kind { B, N, NPrime, L, ThetaTwist, Dual, Localized };
    Kind kind = Kind::B;
    IndexSet J;  // ThetaTwist / Localized
    std::shared_ptr<const ModuleLabel> inner;

    std::string to_string() const;
};

// A weight module with one-dimensional weight spaces: monomials x^m with m
// in base + Z_f^I, cut out by per-coordinate support constraints, acted on
// through per-coordinate modes. Monomials pushed outside the support are
// dropped (the quotient construction).
class MonomialModule {
public:
    MonomialModule(Weight base, CoordMode default_mode, Constraint default_constraint,
                   ModuleLabel label);

    const Weight& base() const { return base_; }
    const ModuleLabel& label() const { return label_; }

    CoordMode mode_at(Index i) const;
    Constraint constraint_at(Index i) const;
    CoordMode default_mode() const { return default_mode_; }
    Constraint default_constraint() const { return default_constraint_; }
    const std::map<Index, CoordMode>& mode_overrides() const { return mode_overrides_; }
    const std::map<Index, Constraint>& constraint_overrides() const {
        return constraint_overrides_;
    }

    void set_mode(Index i, CoordMode m);
    void set_constraint(Index i, Constraint c);
    void set_default_mode(CoordMode m) { normalize_mode_default(m); }
    void set_default_constraint(Constraint c) { normalize_constraint_default(c); }
    void set_base(const Weight& b) { base_ = b; }
    void set_label(ModuleLabel l) { label_ = std::move(l); }

    // Membership of the monomial exponent m (lattice + constraints).
    bool monomial_in_support(const Weight& m) const;

    // The module weight of the monomial x^m: coordinatewise m_i for
    // Plain/DualPlain, -m_i - 1 for Twisted/DualTwisted.
    Weight weight_of_monomial(const Weight& m) const;
    // Inverse of weight_of_monomial (defined on the whole lattice).
    Weight monomial_of_weight(const Weight& w) const;

    // Equality of the realized module (lattice, modes, constraints); labels
    // are bookkeeping and not compared.
    bool same_realization(const MonomialModule& o) const;

    std::string to_string() const;

private:
    void normalize_mode_default(CoordMode m);
    void normalize_constraint_default(Constraint c);
    void check_constraint_site(Index i, Constraint c) const;

    Weight base_;
    CoordMode default_mode_;
    std::map<Index, CoordMode> mode_overrides_;
    Constraint default_constraint_;
    std::map<Index, Constraint> constraint_overrides_;
    ModuleLabel label_;
};

// Finite scalar combination of monomials of a module; keys are monomial
// exponents, values nonzero Scalars.
class WeightVector {
public:
    WeightVector() = default;
    static WeightVector monomial(const Weight& m, const Scalar& c = Scalar(1));

    const std::map<Weight, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Weight& m, const Scalar& c);
    WeightVector operator+(const WeightVector& o) const;
    WeightVector scaled(const Scalar& c) const;
    bool operator==(const WeightVector& o) const { return terms_ == o.terms_; }
    bool operator!=(const WeightVector& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    std::map<Weight, Scalar> terms_;
};

// Realizations.
MonomialModule realize_B(const Weight& p);
MonomialModule realize_N(const Weight& p);
MonomialModule realize_NPrime(const Weight& p);
MonomialModule realize_L(const Weight& p);
// Twist by theta_J (J finite); flips Plain<->Twisted, DualPlain<->DualTwisted
// on J.
MonomialModule theta_twist(const MonomialModule& M, const std::set<Index>& J);
// Restricted dual; same support, transposed action.
MonomialModule dual_module(const MonomialModule& M);

// Action of a normal-form Weyl element on a vector of M. Requires every
// term of v to lie in the support of M.
WeightVector act(const MonomialModule& M, const WeylElement& a, const WeightVector& v);

// Membership of the weight w in supp(M).
bool support_contains(const MonomialModule& M, const Weight& w);

// --- Classification ---

// k in bar(p): same lattice, and at integer coordinates the sign class of k
// matches that of p.
bool bar_contains(const Weight& p, const Weight& k);

// bar(p) == bar(q), i.e. L(p) iso L(q).
bool equivalent(const Weight& p, const Weight& q);

// p in k^I_+ (integer coordinates all nonnegative).
bool in_k_plus(const Weight& p);

// The set J_p of integer coordinates of p.
IndexSet integral_coords(const Weight& p);

struct CanonicalForm {
    Weight p_plus;  // in k^I_+
    IndexSet J;     // {i : p_i in {-1,-2,...}}, finite or cofinite
    bool operator==(const CanonicalForm& o) const = default;
};

// Cor 41-style canonical form: p = theta_J(p_plus).
CanonicalForm canonical_form(const Weight& p);

// Canonical representative of the coset p + Z_f^I. Negative-sign symbols are
// normalized to sign + with the flip recorded in the symbol table.
struct BlockKey {
    Weight weight;
    std::map<Symbol, int> flipped_symbols;  // symbol -> original sign (-1 entries only)
    auto operator<=>(const BlockKey&) const = default;
};

BlockKey block_key(const Weight& p);

}  // namespace weylwt
