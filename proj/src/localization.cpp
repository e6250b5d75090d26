#include "weylwt/localization.hpp"

#include <functional>
#include <stdexcept>

namespace weylwt {

MonomialModule localize(const MonomialModule& M, const IndexSet& J) {
    // Mode check on J: defaults plus overrides cover all coordinates.
    if (J.is_cofinite() && M.default_mode() != CoordMode::Plain)
        throw std::invalid_argument("localize: non-plain default mode inside J");
    for (const auto& [i, m] : M.mode_overrides())
        if (J.contains(i) && m != CoordMode::Plain)
            throw std::invalid_argument("localize: non-plain mode at coordinate " +
                                        std::to_string(i) + " inside J");
    if (J.is_finite())
        for (Index i : J.elems())
            if (M.mode_at(i) != CoordMode::Plain)
                throw std::invalid_argument("localize: non-plain mode at coordinate " +
                                            std::to_string(i) + " inside J");

    MonomialModule r = M;
    std::set<Index> touched;
    for (const auto& [i, c] : M.constraint_overrides())
        touched.insert(i);
    for (Index i : J.elems())
        touched.insert(i);
    Constraint new_default =
        J.is_cofinite() ? Constraint::Free : M.default_constraint();
    std::map<Index, Constraint> table;
    for (Index i : touched)
        table[i] = J.contains(i) ? Constraint::Free : M.constraint_at(i);
    r.set_default_constraint(new_default);
    for (const auto& [i, c] : table)
        r.set_constraint(i, c);
    ModuleLabel l{ModuleLabel::Kind::Localized, J,
                  std::make_shared<ModuleLabel>(M.label())};
    r.set_label(std::move(l));
    return r;
}

MonomialModule phi_twist(const MonomialModule& M, const Shift& x) {
    for (const auto& [i, n] : x.entries())
        if (M.constraint_at(i) != Constraint::Free)
            throw std::invalid_argument("phi_twist: coordinate " + std::to_string(i) +
                                        " is not localized (constrained support)");
    MonomialModule r = M;
    r.set_base(sigma_shift(M.base(), x));
    return r;
}

MonomialModule reseat_base(const MonomialModule& M, const Weight& new_base) {
    const Weight& old = M.base();
    std::set<Index> touched = Weight::touched_indices(old, new_base);
    auto changed = [&](Index i) { return old.at(i) != new_base.at(i); };
    if (old.default_value() != new_base.default_value() &&
        M.default_constraint() != Constraint::Free)
        throw std::invalid_argument("reseat_base: constrained default coordinate moved");
    for (Index i : touched)
        if (changed(i) && M.constraint_at(i) != Constraint::Free)
            throw std::invalid_argument("reseat_base: constrained coordinate " +
                                        std::to_string(i) + " moved");
    MonomialModule r = M;
    r.set_base(new_base);
    return r;
}

namespace {

std::set<Index> probe_indices(const Weight& p) {
    std::set<Index> idx = p.override_indices();
    // one fresh index probes the default coordinate behavior
    idx.insert(idx.empty() ? 1 : *idx.rbegin() + 1);
    return idx;
}

void enumerate_box(const std::vector<Index>& idx, int radius, size_t k, Shift& cur,
                   const std::function<void(const Shift&)>& fn) {
    if (k == idx.size()) {
        fn(cur);
        return;
    }
    for (int v = -radius; v <= radius; ++v) {
        cur.set(idx[k], v);
        enumerate_box(idx, radius, k + 1, cur, fn);
    }
    cur.set(idx[k], 0);
}

// Compares support and the X_i/Y_i action coefficients of two realizations
// on a probe box around `center`.
void compare_on_box(const MonomialModule& lhs, const MonomialModule& rhs,
                    const Weight& center, int radius, const std::set<Index>& indices,
                    const std::string& tag, LocalizationReport& rep) {
    std::vector<Index> idx(indices.begin(), indices.end());
    Shift cur;
    enumerate_box(idx, radius, 0, cur, [&](const Shift& v) {
        ++rep.probes;
        Weight m = sigma_shift(center, v);
        bool in_l = lhs.monomial_in_support(m);
        bool in_r = rhs.monomial_in_support(m);
        if (in_l != in_r) {
            rep.ok = false;
            rep.failures.push_back(tag + ": support mismatch at x^" + m.to_string() +
                                   " (lhs " + (in_l ? "yes" : "no") + ", rhs " +
                                   (in_r ? "yes" : "no") + ")");
            return;
        }
        if (!in_l)
            return;
        WeightVector base = WeightVector::monomial(m);
        for (Index i : indices) {
            for (bool use_x : {true, false}) {
                WeylElement g = use_x ? WeylElement::X(i) : WeylElement::Y(i);
                WeightVector a = act(lhs, g, base);
                WeightVector b = act(rhs, g, base);
                if (a != b) {
                    rep.ok = false;
                    rep.failures.push_back(
                        tag + ": action mismatch of " + g.to_string() + " at x^" +
                        m.to_string() + ": lhs " + a.to_string() + " vs rhs " +
                        b.to_string());
                }
            }
        }
    });
}

}  // namespace

LocalizationReport verify_localization_realizations(const Weight& p, int radius) {
    if (!in_k_plus(p))
        throw std::invalid_argument(
            "verify_localization_realizations: weight is not in k^I_+");
    LocalizationReport rep;
    IndexSet Jp = integral_coords(p);
    std::set<Index> probes = probe_indices(p);

    // (a) L(p) as the p'-twist of L(0) localized away from J_p. The twist
    // by the (possibly non-integral) p' is the shifted-lattice module. The
    // starting point is the integral skeleton of p (non-integer coordinates
    // zeroed), which is the zero weight itself whenever p has an integral
    // default of zero or a non-integral default.
    Weight zero(p.default_value().is_int() ? p.default_value() : CoordValue::integer(0));
    for (const auto& [i, v] : p.overrides())
        zero.set(i, v.is_int() ? v : CoordValue::integer(0));
    MonomialModule from_zero =
        reseat_base(localize(realize_L(zero), Jp.complement()), p);
    MonomialModule direct = realize_L(p);
    compare_on_box(direct, from_zero, p, radius, probes, "claim (a)", rep);

    // (b) F_{J_p} L(p) = B(p) under x^m x^q -> x^{m+q}; in the monomial
    // realization the map is the identity on exponents.
    MonomialModule l_loc = localize(realize_L(p), Jp);
    MonomialModule b_p = realize_B(p);
    compare_on_box(l_loc, b_p, p, radius, probes, "claim (b)", rep);
    return rep;
}

}  // namespace weylwt
