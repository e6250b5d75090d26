#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weylwt/modules.hpp"

namespace weylwt {

// Element of the induced projective P(p) = A (x)_{A0} k_p: a finite scalar
// combination of the basis vectors X_v (x) 1. The weight of the X_v
// component is p + v; all weight spaces are one-dimensional.
class InducedElement {
public:
    InducedElement() = default;
    static InducedElement generator() { return basis(Shift()); }
    static InducedElement basis(const Shift& v, const Scalar& c = Scalar(1));

    const std::map<Shift, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Shift& v, const Scalar& c);
    InducedElement operator+(const InducedElement& o) const;
    InducedElement scaled(const Scalar& c) const;
    bool operator==(const InducedElement& o) const { return terms_ == o.terms_; }

    std::string to_string() const;

private:
    std::map<Shift, Scalar> terms_;
};

// Action of a on P(p): multiply in A, then evaluate the right A0
// coefficients at p.
InducedElement induced_act(const Weight& p, const WeylElement& a, const InducedElement& w);

// A homomorphism out of P(source_base), determined by the image of the
// generator (the adjunction Hom(P(p), M) = M_p). The target is either a
// monomial module or another induced projective.
class ModHom {
public:
    static ModHom to_monomial(Weight source_base, MonomialModule target,
                              WeightVector gen_image);
    static ModHom to_induced(Weight source_base, Weight target_base,
                             InducedElement gen_image);

    const Weight& source_base() const { return source_base_; }
    bool target_is_induced() const { return target_mono_ == std::nullopt; }
    const MonomialModule& target_module() const { return *target_mono_; }
    const Weight& target_base() const { return target_base_; }
    const WeightVector& mono_image() const { return mono_image_; }
    const InducedElement& induced_image() const { return induced_image_; }

    bool is_zero_map() const;

    // Evaluation by generator chasing.
    WeightVector apply_mono(const InducedElement& x) const;
    InducedElement apply_induced(const InducedElement& x) const;

private:
    Weight source_base_;
    std::optional<MonomialModule> target_mono_;
    WeightVector mono_image_;
    Weight target_base_;
    InducedElement induced_image_;
};

// first, then second (both between induced projectives).
ModHom compose(const ModHom& first, const ModHom& second);

// The unique homomorphism P(p) -> M sending the generator to target; the
// target must have pure weight p in M. Throws on mixed weight.
ModHom hom_from_projective(const Weight& p, const MonomialModule& M,
                           const WeightVector& target);

struct IsoBoxReport {
    bool ok = true;
    std::optional<Shift> witness;  // first failing weight-space shift
    std::string detail;
};

// Checks h : P(p) -> M on the probe box: every weight space p + v with v
// ranging over [-radius, radius] on the given indices must be hit
// nontrivially, and source/target supports must agree there.
IsoBoxReport iso_on_box(const ModHom& h, int radius, const std::set<Index>& indices);

struct ReachabilityResult {
    bool ok = false;
    WeylElement word;
    Scalar coefficient;
    std::string diagnostic;
};

// Constructs a generator word carrying x^{m_from} to a nonzero multiple of
// x^{m_to} inside L(p); both weights must lie in bar(p).
ReachabilityResult simple_reachability(const Weight& p, const Weight& m_from,
                                       const Weight& m_to);

}  // namespace weylwt
