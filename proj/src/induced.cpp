#include "weylwt/induced.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace weylwt {

InducedElement InducedElement::basis(const Shift& v, const Scalar& c) {
    InducedElement e;
    e.add_term(v, c);
    return e;
}

void InducedElement::add_term(const Shift& v, const Scalar& c) {
    if (c.is_zero())
        return;
    auto it = terms_.find(v);
    if (it == terms_.end()) {
        terms_.emplace(v, c);
    } else {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

InducedElement InducedElement::operator+(const InducedElement& o) const {
    InducedElement r = *this;
    for (const auto& [v, c] : o.terms_)
        r.add_term(v, c);
    return r;
}

InducedElement InducedElement::scaled(const Scalar& c) const {
    InducedElement r;
    for (const auto& [v, s] : terms_)
        r.add_term(v, s * c);
    return r;
}

std::string InducedElement::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [v, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << scalar_to_string(c) << ")*"
           << (v.is_zero() ? std::string("1") : WeylElement::monomial(v, A0Poly(1)).to_string())
           << "(x)1";
    }
    return os.str();
}

InducedElement induced_act(const Weight& p, const WeylElement& a, const InducedElement& w) {
    InducedElement out;
    for (const auto& [v, c] : w.terms()) {
        WeylElement prod = a * WeylElement::monomial(v, A0Poly(1));
        for (const auto& [u, q] : prod.terms())
            out.add_term(u, c * eval_a0(q, p));
    }
    return out;
}

ModHom ModHom::to_monomial(Weight source_base, MonomialModule target, WeightVector gen_image) {
    ModHom h;
    h.source_base_ = std::move(source_base);
    h.target_mono_ = std::move(target);
    h.mono_image_ = std::move(gen_image);
    return h;
}

ModHom ModHom::to_induced(Weight source_base, Weight target_base, InducedElement gen_image) {
    for (const auto& [v, c] : gen_image.terms())
        if (sigma_shift(target_base, v) != source_base)
            throw std::invalid_argument(
                "ModHom::to_induced: generator image has wrong weight component");
    ModHom h;
    h.source_base_ = std::move(source_base);
    h.target_base_ = std::move(target_base);
    h.induced_image_ = std::move(gen_image);
    return h;
}

bool ModHom::is_zero_map() const {
    return target_is_induced() ? induced_image_.is_zero() : mono_image_.is_zero();
}

WeightVector ModHom::apply_mono(const InducedElement& x) const {
    WeightVector out;
    for (const auto& [v, c] : x.terms()) {
        WeightVector img =
            act(*target_mono_, WeylElement::monomial(v, A0Poly(1)), mono_image_);
        out = out + img.scaled(c);
    }
    return out;
}

InducedElement ModHom::apply_induced(const InducedElement& x) const {
    InducedElement out;
    for (const auto& [v, c] : x.terms()) {
        InducedElement img =
            induced_act(target_base_, WeylElement::monomial(v, A0Poly(1)), induced_image_);
        out = out + img.scaled(c);
    }
    return out;
}

ModHom compose(const ModHom& first, const ModHom& second) {
    if (!first.target_is_induced() || !second.target_is_induced())
        throw std::invalid_argument("compose: both homs must target induced projectives");
    if (first.target_base() != second.source_base())
        throw std::invalid_argument("compose: endpoint mismatch");
    return ModHom::to_induced(first.source_base(), second.target_base(),
                              second.apply_induced(first.induced_image()));
}

ModHom hom_from_projective(const Weight& p, const MonomialModule& M,
                           const WeightVector& target) {
    for (const auto& [m, c] : target.terms())
        if (M.weight_of_monomial(m) != p)
            throw std::invalid_argument("hom_from_projective: target has mixed weight");
    return ModHom::to_monomial(p, M, target);
}

namespace {

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

}  // namespace

IsoBoxReport iso_on_box(const ModHom& h, int radius, const std::set<Index>& indices) {
    IsoBoxReport rep;
    if (h.target_is_induced())
        throw std::invalid_argument("iso_on_box: monomial-module target required");
    if (h.is_zero_map()) {
        rep.ok = false;
        rep.detail = "zero homomorphism";
        return rep;
    }
    const MonomialModule& M = h.target_module();
    const Weight& p = h.source_base();
    std::vector<Index> idx(indices.begin(), indices.end());
    Shift cur;
    enumerate_box(idx, radius, 0, cur, [&](const Shift& v) {
        if (!rep.ok)
            return;
        Weight w = sigma_shift(p, v);
        bool target_supported = support_contains(M, w);
        WeightVector img = h.apply_mono(InducedElement::basis(v));
        if (!target_supported) {
            rep.ok = false;
            rep.witness = v;
            rep.detail = "supports differ at weight " + w.to_string() +
                         ": source P(p) is nonzero there, target is not";
        } else if (img.is_zero()) {
            rep.ok = false;
            rep.witness = v;
            rep.detail = "weight space at " + w.to_string() +
                         " is supported in the target but the image vanishes";
        }
    });
    return rep;
}

ReachabilityResult simple_reachability(const Weight& p, const Weight& m_from,
                                       const Weight& m_to) {
    ReachabilityResult res;
    if (!bar_contains(p, m_from)) {
        res.diagnostic = "m_from " + m_from.to_string() + " is outside bar(p)";
        return res;
    }
    if (!bar_contains(p, m_to)) {
        res.diagnostic = "m_to " + m_to.to_string() + " is outside bar(p)";
        return res;
    }
    Shift diff = m_to.minus(m_from);
    WeylElement word = WeylElement::one();
    // Per-coordinate monotone moves; inside bar(p) every step has a nonzero
    // coefficient.
    for (const auto& [i, n] : diff.entries())
        word *= n > 0 ? WeylElement::X(i, static_cast<int>(n))
                      : WeylElement::Y(i, static_cast<int>(-n));
    MonomialModule L = realize_L(p);
    WeightVector img = act(L, word, WeightVector::monomial(m_from));
    auto it = img.terms().find(m_to);
    if (img.terms().size() != 1 || it == img.terms().end()) {
        res.diagnostic = "witness word failed to reach target monomial";
        return res;
    }
    res.ok = true;
    res.word = word;
    res.coefficient = it->second;
    return res;
}

}  // namespace weylwt
