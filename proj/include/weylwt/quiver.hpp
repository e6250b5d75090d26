#pragma once

#include <set>
#include <string>
#include <vector>

#include "weylwt/weight.hpp"

namespace weylwt {

// Vertex of Q_E: a finite subset of E.
using Vertex = std::set<Index>;

std::string vertex_to_string(const Vertex& v);
Vertex vertex_toggle(const Vertex& v, Index i);
Vertex symmetric_difference(const Vertex& a, const Vertex& b);

// Normal form of a morphism in the path category C_E. A nonzero path is
// determined by its source and the set of coordinates it toggles: the
// square relation identifies all reduced routes, and a word dies iff it
// toggles some coordinate twice.
class PathNF {
public:
    static PathNF zero() { return PathNF(); }
    static PathNF reduced(Vertex source, std::set<Index> toggles);
    static PathNF identity(Vertex v) { return reduced(std::move(v), {}); }
    static PathNF arrow(Vertex source, Index i) { return reduced(std::move(source), {i}); }

    bool is_zero() const { return zero_; }
    const Vertex& source() const { return source_; }
    const std::set<Index>& toggles() const { return toggles_; }
    Vertex target() const { return symmetric_difference(source_, toggles_); }
    int length() const { return static_cast<int>(toggles_.size()); }

    auto operator<=>(const PathNF&) const = default;

    std::string to_string() const;

private:
    PathNF() : zero_(true) {}
    bool zero_ = true;
    Vertex source_;
    std::set<Index> toggles_;
};

// a then b. Zero absorbs; otherwise endpoints must match (throws), and the
// composite is Zero iff the toggle sets intersect.
PathNF path_compose(const PathNF& a, const PathNF& b);

// Basis of Hom_{C_E}(U, W): always the singleton {Reduced(U, U^W)}.
std::vector<PathNF> hom_basis(const Vertex& U, const Vertex& W);

// Total dimension of C_E, computed by enumerating hom spaces: 4^{|E|}.
long long algebra_dim(const std::set<Index>& E);

std::vector<Vertex> all_subsets(const std::set<Index>& E);

// DOT export: vertices = subsets of E, one arrow per direction at symmetric
// difference one.
std::string quiver_export_dot(const std::set<Index>& E);

}  // namespace weylwt
