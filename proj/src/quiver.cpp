#include "weylwt/quiver.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace weylwt {

std::string vertex_to_string(const Vertex& v) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (Index i : v) {
        if (!first)
            os << ",";
        os << i;
        first = false;
    }
    os << "}";
    return os.str();
}

Vertex vertex_toggle(const Vertex& v, Index i) {
    Vertex r = v;
    if (!r.erase(i))
        r.insert(i);
    return r;
}

Vertex symmetric_difference(const Vertex& a, const Vertex& b) {
    Vertex r;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::inserter(r, r.begin()));
    return r;
}

PathNF PathNF::reduced(Vertex source, std::set<Index> toggles) {
    PathNF p;
    p.zero_ = false;
    p.source_ = std::move(source);
    p.toggles_ = std::move(toggles);
    return p;
}

std::string PathNF::to_string() const {
    if (zero_)
        return "0";
    return vertex_to_string(source_) + "->" + vertex_to_string(target()) +
           " via " + vertex_to_string(toggles_);
}

PathNF path_compose(const PathNF& a, const PathNF& b) {
    if (a.is_zero() || b.is_zero())
        return PathNF::zero();
    if (a.target() != b.source())
        throw std::invalid_argument("path_compose: endpoint mismatch " +
                                    vertex_to_string(a.target()) + " vs " +
                                    vertex_to_string(b.source()));
    std::set<Index> meet;
    std::set_intersection(a.toggles().begin(), a.toggles().end(), b.toggles().begin(),
                          b.toggles().end(), std::inserter(meet, meet.begin()));
    if (!meet.empty())
        return PathNF::zero();
    std::set<Index> all = a.toggles();
    all.insert(b.toggles().begin(), b.toggles().end());
    return PathNF::reduced(a.source(), std::move(all));
}

std::vector<PathNF> hom_basis(const Vertex& U, const Vertex& W) {
    return {PathNF::reduced(U, symmetric_difference(U, W))};
}

std::vector<Vertex> all_subsets(const std::set<Index>& E) {
    std::vector<Index> elems(E.begin(), E.end());
    std::vector<Vertex> out;
    size_t n = elems.size();
    for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
        Vertex v;
        for (size_t k = 0; k < n; ++k)
            if (mask & (size_t{1} << k))
                v.insert(elems[k]);
        out.push_back(std::move(v));
    }
    return out;
}

long long algebra_dim(const std::set<Index>& E) {
    long long dim = 0;
    for (const Vertex& u : all_subsets(E))
        for (const Vertex& w : all_subsets(E))
            dim += static_cast<long long>(hom_basis(u, w).size());
    return dim;
}

std::string quiver_export_dot(const std::set<Index>& E) {
    std::ostringstream os;
    os << "digraph quiver {\n";
    for (const Vertex& v : all_subsets(E))
        os << "  \"" << vertex_to_string(v) << "\";\n";
    for (const Vertex& v : all_subsets(E))
        for (Index i : E) {
            Vertex w = vertex_toggle(v, i);
            os << "  \"" << vertex_to_string(v) << "\" -> \"" << vertex_to_string(w)
               << "\" [label=\"" << i << "\"];\n";
        }
    os << "}\n";
    return os.str();
}

}  // namespace weylwt
