#include "weylwt/modules.hpp"

#include <sstream>
#include <stdexcept>

namespace weylwt {

CoordMode dual_mode(CoordMode m) {
    switch (m) {
        case CoordMode::Plain: return CoordMode::DualPlain;
        case CoordMode::DualPlain: return CoordMode::Plain;
        case CoordMode::Twisted: return CoordMode::DualTwisted;
        case CoordMode::DualTwisted: return CoordMode::Twisted;
    }
    return CoordMode::Plain;
}

CoordMode theta_flip_mode(CoordMode m) {
    switch (m) {
        case CoordMode::Plain: return CoordMode::Twisted;
        case CoordMode::Twisted: return CoordMode::Plain;
        case CoordMode::DualPlain: return CoordMode::DualTwisted;
        case CoordMode::DualTwisted: return CoordMode::DualPlain;
    }
    return CoordMode::Plain;
}

namespace {

const char* mode_name(CoordMode m) {
    switch (m) {
        case CoordMode::Plain: return "plain";
        case CoordMode::DualPlain: return "dual-plain";
        case CoordMode::Twisted: return "twisted";
        case CoordMode::DualTwisted: return "dual-twisted";
    }
    return "?";
}

const char* constraint_name(Constraint c) {
    switch (c) {
        case Constraint::Free: return "free";
        case Constraint::GeqZero: return ">=0";
        case Constraint::LeqMinusOne: return "<=-1";
    }
    return "?";
}

bool satisfies(const CoordValue& v, Constraint c) {
    switch (c) {
        case Constraint::Free: return true;
        case Constraint::GeqZero: return v.is_int() && v.int_value() >= 0;
        case Constraint::LeqMinusOne: return v.is_int() && v.int_value() <= -1;
    }
    return false;
}

// The (involutive) exponent <-> weight map of a single coordinate.
CoordValue coord_weight(const CoordValue& m, CoordMode mode) {
    if (mode == CoordMode::Twisted || mode == CoordMode::DualTwisted)
        return m.negated_minus_one();
    return m;
}

}  // namespace

std::string ModuleLabel::to_string() const {
    switch (kind) {
        case Kind::B: return "B";
        case Kind::N: return "N";
        case Kind::NPrime: return "N'";
        case Kind::L: return "L";
        case Kind::ThetaTwist:
            return "theta" + J.to_string() + "(" + (inner ? inner->to_string() : "?") + ")";
        case Kind::Dual:
            return "dual(" + (inner ? inner->to_string() : std::string("?")) + ")";
        case Kind::Localized:
            return "loc" + J.to_string() + "(" + (inner ? inner->to_string() : "?") + ")";
    }
    return "?";
}

MonomialModule::MonomialModule(Weight base, CoordMode default_mode,
                               Constraint default_constraint, ModuleLabel label)
    : base_(std::move(base)),
      default_mode_(default_mode),
      default_constraint_(default_constraint),
      label_(std::move(label)) {
    if (default_constraint_ != Constraint::Free && !base_.default_value().is_int())
        throw std::invalid_argument("sign constraint on a non-integral default coordinate");
}

CoordMode MonomialModule::mode_at(Index i) const {
    auto it = mode_overrides_.find(i);
    return it == mode_overrides_.end() ? default_mode_ : it->second;
}

Constraint MonomialModule::constraint_at(Index i) const {
    auto it = constraint_overrides_.find(i);
    return it == constraint_overrides_.end() ? default_constraint_ : it->second;
}

void MonomialModule::check_constraint_site(Index i, Constraint c) const {
    if (c != Constraint::Free && !base_.at(i).is_int())
        throw std::invalid_argument("sign constraint on non-integral coordinate " +
                                    std::to_string(i));
}

void MonomialModule::set_mode(Index i, CoordMode m) {
    if (m == default_mode_)
        mode_overrides_.erase(i);
    else
        mode_overrides_[i] = m;
}

void MonomialModule::set_constraint(Index i, Constraint c) {
    check_constraint_site(i, c);
    if (c == default_constraint_)
        constraint_overrides_.erase(i);
    else
        constraint_overrides_[i] = c;
}

void MonomialModule::normalize_mode_default(CoordMode m) {
    // Re-express overrides against the new default.
    std::map<Index, CoordMode> table;
    for (auto& [i, v] : mode_overrides_)
        table[i] = v;
    default_mode_ = m;
    mode_overrides_.clear();
    for (auto& [i, v] : table)
        set_mode(i, v);
}

void MonomialModule::normalize_constraint_default(Constraint c) {
    std::map<Index, Constraint> table;
    for (auto& [i, v] : constraint_overrides_)
        table[i] = v;
    if (c != Constraint::Free && !base_.default_value().is_int())
        throw std::invalid_argument("sign constraint on a non-integral default coordinate");
    default_constraint_ = c;
    constraint_overrides_.clear();
    for (auto& [i, v] : table)
        set_constraint(i, v);
}

bool MonomialModule::monomial_in_support(const Weight& m) const {
    if (!m.same_lattice(base_))
        return false;
    if (!satisfies(m.default_value(), default_constraint_))
        return false;
    std::set<Index> touched = m.override_indices();
    for (const auto& [i, c] : constraint_overrides_)
        touched.insert(i);
    for (Index i : touched)
        if (!satisfies(m.at(i), constraint_at(i)))
            return false;
    return true;
}

Weight MonomialModule::weight_of_monomial(const Weight& m) const {
    Weight w(coord_weight(m.default_value(), default_mode_));
    std::set<Index> touched = m.override_indices();
    for (const auto& [i, md] : mode_overrides_)
        touched.insert(i);
    for (Index i : touched)
        w.set(i, coord_weight(m.at(i), mode_at(i)));
    return w;
}

Weight MonomialModule::monomial_of_weight(const Weight& w) const {
    return weight_of_monomial(w);  // the coordinate map is an involution
}

bool MonomialModule::same_realization(const MonomialModule& o) const {
    if (!base_.same_lattice(o.base_))
        return false;
    if (default_mode_ != o.default_mode_ || mode_overrides_ != o.mode_overrides_)
        return false;
    if (default_constraint_ != o.default_constraint_ ||
        constraint_overrides_ != o.constraint_overrides_)
        return false;
    return true;
}

std::string MonomialModule::to_string() const {
    std::ostringstream os;
    os << label_.to_string() << " base=" << base_.to_string();
    os << " mode=" << mode_name(default_mode_);
    for (const auto& [i, m] : mode_overrides_)
        os << "," << i << ":" << mode_name(m);
    os << " support=" << constraint_name(default_constraint_);
    for (const auto& [i, c] : constraint_overrides_)
        os << "," << i << ":" << constraint_name(c);
    return os.str();
}

WeightVector WeightVector::monomial(const Weight& m, const Scalar& c) {
    WeightVector v;
    v.add_term(m, c);
    return v;
}

void WeightVector::add_term(const Weight& m, const Scalar& c) {
    if (c.is_zero())
        return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

WeightVector WeightVector::operator+(const WeightVector& o) const {
    WeightVector r = *this;
    for (const auto& [m, c] : o.terms_)
        r.add_term(m, c);
    return r;
}

WeightVector WeightVector::scaled(const Scalar& c) const {
    WeightVector r;
    for (const auto& [m, s] : terms_)
        r.add_term(m, s * c);
    return r;
}

std::string WeightVector::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << scalar_to_string(c) << ")*x^" << m.to_string();
    }
    return os.str();
}

namespace {

Constraint sign_constraint(const CoordValue& v) {
    if (v.is_nonneg_int())
        return Constraint::GeqZero;
    if (v.is_neg_int())
        return Constraint::LeqMinusOne;
    return Constraint::Free;
}

}  // namespace

MonomialModule realize_B(const Weight& p) {
    return MonomialModule(p, CoordMode::Plain, Constraint::Free, ModuleLabel{ModuleLabel::Kind::B});
}

MonomialModule realize_N(const Weight& p) {
    Constraint def = p.default_value().is_nonneg_int() ? Constraint::GeqZero : Constraint::Free;
    MonomialModule m(p, CoordMode::Plain, def, ModuleLabel{ModuleLabel::Kind::N});
    for (const auto& [i, v] : p.overrides())
        m.set_constraint(i, v.is_nonneg_int() ? Constraint::GeqZero : Constraint::Free);
    return m;
}

MonomialModule realize_NPrime(const Weight& p) {
    Constraint def = p.default_value().is_int() ? Constraint::GeqZero : Constraint::Free;
    MonomialModule m(p, CoordMode::Plain, def, ModuleLabel{ModuleLabel::Kind::NPrime});
    for (const auto& [i, v] : p.overrides())
        m.set_constraint(i, v.is_int() ? Constraint::GeqZero : Constraint::Free);
    return m;
}

MonomialModule realize_L(const Weight& p) {
    MonomialModule m(p, CoordMode::Plain, sign_constraint(p.default_value()),
                     ModuleLabel{ModuleLabel::Kind::L});
    for (const auto& [i, v] : p.overrides())
        m.set_constraint(i, sign_constraint(v));
    return m;
}

MonomialModule theta_twist(const MonomialModule& M, const std::set<Index>& J) {
    MonomialModule r = M;
    for (Index i : J)
        r.set_mode(i, theta_flip_mode(M.mode_at(i)));
    ModuleLabel l{ModuleLabel::Kind::ThetaTwist, IndexSet::finite(J),
                  std::make_shared<ModuleLabel>(M.label())};
    r.set_label(std::move(l));
    return r;
}

MonomialModule dual_module(const MonomialModule& M) {
    MonomialModule r = M;
    r.set_default_mode(dual_mode(M.default_mode()));
    for (const auto& [i, m] : M.mode_overrides())
        r.set_mode(i, dual_mode(m));
    ModuleLabel l{ModuleLabel::Kind::Dual, IndexSet(),
                  std::make_shared<ModuleLabel>(M.label())};
    r.set_label(std::move(l));
    return r;
}

namespace {

// One generator step. Returns false if the image monomial leaves the
// support (the term is dropped); otherwise updates m and multiplies coeff.
bool generator_step(const MonomialModule& M, Index i, bool is_X, Weight& m, Scalar& coeff) {
    CoordMode mode = M.mode_at(i);
    const CoordValue cur = m.at(i);
    long long dir = 0;
    Scalar c;
    switch (mode) {
        case CoordMode::Plain:
            dir = is_X ? 1 : -1;
            c = is_X ? Scalar(1) : cur.to_scalar();
            break;
        case CoordMode::DualPlain:
            dir = is_X ? 1 : -1;
            c = is_X ? cur.to_scalar() + Scalar(1) : Scalar(1);
            break;
        case CoordMode::Twisted:
            dir = is_X ? -1 : 1;
            c = is_X ? cur.to_scalar() : Scalar(-1);
            break;
        case CoordMode::DualTwisted:
            dir = is_X ? -1 : 1;
            c = is_X ? Scalar(-1) : cur.to_scalar() + Scalar(1);
            break;
    }
    coeff *= c;
    if (coeff.is_zero())
        return false;
    m.set(i, cur.plus(dir));
    switch (M.constraint_at(i)) {
        case Constraint::Free:
            return true;
        case Constraint::GeqZero:
            return m.at(i).is_int() && m.at(i).int_value() >= 0;
        case Constraint::LeqMinusOne:
            return m.at(i).is_int() && m.at(i).int_value() <= -1;
    }
    return false;
}

}  // namespace

WeightVector act(const MonomialModule& M, const WeylElement& a, const WeightVector& v) {
    for (const auto& [m, c] : v.terms())
        if (!M.monomial_in_support(m))
            throw std::invalid_argument("act: vector term outside module support");
    WeightVector out;
    for (const auto& [shift, q] : a.terms()) {
        for (const auto& [m0, c0] : v.terms()) {
            Scalar coeff = c0 * eval_a0(q, M.weight_of_monomial(m0));
            if (coeff.is_zero())
                continue;
            Weight m = m0;
            bool alive = true;
            // X_v applies its Y part first, then its X part.
            for (const auto& [i, n] : shift.entries()) {
                if (n >= 0)
                    continue;
                for (long long k = 0; alive && k < -n; ++k)
                    alive = generator_step(M, i, /*is_X=*/false, m, coeff);
                if (!alive)
                    break;
            }
            if (alive) {
                for (const auto& [i, n] : shift.entries()) {
                    if (n <= 0)
                        continue;
                    for (long long k = 0; alive && k < n; ++k)
                        alive = generator_step(M, i, /*is_X=*/true, m, coeff);
                    if (!alive)
                        break;
                }
            }
            if (alive)
                out.add_term(m, coeff);
        }
    }
    return out;
}

bool support_contains(const MonomialModule& M, const Weight& w) {
    return M.monomial_in_support(M.monomial_of_weight(w));
}

bool bar_contains(const Weight& p, const Weight& k) {
    if (!p.same_lattice(k))
        return false;
    for (Index i : Weight::touched_indices(p, k)) {
        const CoordValue& pi = p.at(i);
        const CoordValue& ki = k.at(i);
        if (pi.is_nonneg_int() && !ki.is_nonneg_int())
            return false;
        if (pi.is_neg_int() && !ki.is_neg_int())
            return false;
    }
    return true;
}

bool equivalent(const Weight& p, const Weight& q) {
    return bar_contains(p, q) && bar_contains(q, p);
}

bool in_k_plus(const Weight& p) {
    if (p.default_value().is_neg_int())
        return false;
    for (const auto& [i, v] : p.overrides())
        if (v.is_neg_int())
            return false;
    return true;
}

IndexSet integral_coords(const Weight& p) {
    std::set<Index> listed;
    if (p.default_value().is_int()) {
        for (const auto& [i, v] : p.overrides())
            if (!v.is_int())
                listed.insert(i);
        return IndexSet::cofinite(std::move(listed));
    }
    for (const auto& [i, v] : p.overrides())
        if (v.is_int())
            listed.insert(i);
    return IndexSet::finite(std::move(listed));
}

CanonicalForm canonical_form(const Weight& p) {
    std::set<Index> listed;
    IndexSet J;
    if (p.default_value().is_neg_int()) {
        for (const auto& [i, v] : p.overrides())
            if (!v.is_neg_int())
                listed.insert(i);
        J = IndexSet::cofinite(std::move(listed));
    } else {
        for (const auto& [i, v] : p.overrides())
            if (v.is_neg_int())
                listed.insert(i);
        J = IndexSet::finite(std::move(listed));
    }
    return CanonicalForm{theta_weight(J, p), J};
}

namespace {

CoordValue block_coord(const CoordValue& v, std::map<Symbol, int>& flipped) {
    if (v.is_int())
        return CoordValue::integer(0);
    if (v.sign() < 0) {
        flipped[v.symbol()] = -1;
        return CoordValue::nonint(1, "-" + v.symbol(), 0);
    }
    return CoordValue::nonint(1, v.symbol(), 0);
}

}  // namespace

BlockKey block_key(const Weight& p) {
    BlockKey key;
    key.weight = Weight(block_coord(p.default_value(), key.flipped_symbols));
    for (const auto& [i, v] : p.overrides())
        key.weight.set(i, block_coord(v, key.flipped_symbols));
    return key;
}

}  // namespace weylwt
