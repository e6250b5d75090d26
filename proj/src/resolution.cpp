#include "weylwt/resolution.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace weylwt {

Matrix GradedModule::arrow(const Vertex& v, Index i, int degree) const {
    auto it = arrows_.find({v, i, degree});
    if (it != arrows_.end())
        return it->second;
    SpaceKey src{v, degree};
    SpaceKey dst{vertex_toggle(v, i), degree + 1};
    return Matrix(dim(dst), dim(src));
}

void GradedModule::set_arrow(const Vertex& v, Index i, int degree, Matrix m) {
    SpaceKey src{v, degree};
    SpaceKey dst{vertex_toggle(v, i), degree + 1};
    if (m.rows() != dim(dst) || m.cols() != dim(src))
        throw std::invalid_argument("GradedModule::set_arrow: shape mismatch");
    arrows_[{v, i, degree}] = std::move(m);
}

bool GradedModule::validate(std::string* why) const {
    auto fail = [&](const std::string& msg) {
        if (why)
            *why = msg;
        return false;
    };
    for (const auto& [k, n] : dims_) {
        for (Index i : E_) {
            for (Index j : E_) {
                // route i then j out of (k.vertex, k.degree)
                Matrix a = arrow(k.vertex, i, k.degree);
                Matrix b = arrow(vertex_toggle(k.vertex, i), j, k.degree + 1);
                Matrix ba = b * a;
                if (i == j) {
                    if (ba != Matrix(ba.rows(), ba.cols()))
                        return fail("double toggle " + std::to_string(i) + " not zero at " +
                                    vertex_to_string(k.vertex));
                } else {
                    Matrix c = arrow(k.vertex, j, k.degree);
                    Matrix d = arrow(vertex_toggle(k.vertex, j), i, k.degree + 1);
                    if (ba != d * c)
                        return fail("square " + std::to_string(i) + "," + std::to_string(j) +
                                    " does not commute at " + vertex_to_string(k.vertex));
                }
            }
        }
    }
    return true;
}

GradedModule build_simple(const Vertex& U, const std::set<Index>& E, int degree_shift) {
    GradedModule m(E);
    m.set_dim({U, degree_shift}, 1);
    return m;
}

GradedModule build_projective(const Vertex& U, const std::set<Index>& E, int degree_shift) {
    GradedModule m(E);
    // Basis vector per toggle set T, living at (U^T, shift + |T|); each
    // (vertex, degree) space is at most one-dimensional.
    for (const Vertex& t : all_subsets(E))
        m.set_dim({symmetric_difference(U, t), degree_shift + int(t.size())}, 1);
    for (const Vertex& t : all_subsets(E)) {
        Vertex v = symmetric_difference(U, t);
        int d = degree_shift + int(t.size());
        for (Index i : E) {
            Matrix a(m.dim({vertex_toggle(v, i), d + 1}), 1);
            if (!t.count(i) && a.rows() == 1)
                a.at(0, 0) = 1;
            m.set_arrow(v, i, d, a);
        }
    }
    return m;
}

namespace {

// Basis layout of a direct sum of shifted projectives P_{W_g}<d_g>.
struct FreeLayout {
    std::set<Index> E;
    std::vector<FreeSummand> gens;

    // Generator indices with a basis vector at (V, d), in order.
    std::vector<int> basis_at(const SpaceKey& k) const {
        std::vector<int> out;
        for (int g = 0; g < int(gens.size()); ++g) {
            Vertex t = symmetric_difference(gens[g].vertex, k.vertex);
            if (gens[g].degree + int(t.size()) == k.degree)
                out.push_back(g);
        }
        return out;
    }

    std::vector<SpaceKey> keys() const {
        std::vector<SpaceKey> out;
        int dmin = 0, dmax = 0;
        for (const auto& g : gens) {
            dmin = std::min(dmin, g.degree);
            dmax = std::max(dmax, g.degree + int(E.size()));
        }
        for (const Vertex& v : all_subsets(E))
            for (int d = dmin; d <= dmax; ++d)
                if (!basis_at({v, d}).empty())
                    out.push_back({v, d});
        return out;
    }

    Matrix arrow(const SpaceKey& k, Index i) const {
        std::vector<int> src = basis_at(k);
        std::vector<int> dst = basis_at({vertex_toggle(k.vertex, i), k.degree + 1});
        Matrix a(int(dst.size()), int(src.size()));
        for (int c = 0; c < int(src.size()); ++c) {
            int g = src[c];
            if (symmetric_difference(gens[g].vertex, k.vertex).count(i))
                continue;  // double toggle dies
            auto it = std::find(dst.begin(), dst.end(), g);
            if (it != dst.end())
                a.at(int(it - dst.begin()), c) = 1;
        }
        return a;
    }

    GradedModule to_module() const {
        GradedModule m(E);
        for (const SpaceKey& k : keys())
            m.set_dim(k, int(basis_at(k).size()));
        for (const SpaceKey& k : keys())
            for (Index i : E)
                m.set_arrow(k.vertex, i, k.degree, arrow(k, i));
        return m;
    }
};

// Apply the path from (V, d) with the given toggles to a vector of M.
std::vector<Rational> path_action(const GradedModule& m, Vertex v, int d,
                                  const std::set<Index>& toggles,
                                  std::vector<Rational> x) {
    for (Index i : toggles) {
        x = m.arrow(v, i, d).apply(x);
        v = vertex_toggle(v, i);
        ++d;
    }
    return x;
}

}  // namespace

CoverResult projective_cover(const GradedModule& m) {
    const std::set<Index>& E = m.ambient();
    CoverResult res;

    // Top of M: complement of the radical (the image of all arrows) in each
    // space; one cover generator per complement coordinate.
    std::vector<std::vector<Rational>> gen_images;
    for (const auto& [k, n] : m.spaces()) {
        std::vector<std::vector<Rational>> rad_cols;
        for (Index i : E) {
            Vertex src_v = vertex_toggle(k.vertex, i);
            Matrix a = m.arrow(src_v, i, k.degree - 1);
            for (int j = 0; j < a.cols(); ++j)
                rad_cols.push_back(a.column(j));
        }
        Matrix rad = Matrix::from_columns(n, rad_cols);
        for (int j : complement_indices(rad, n)) {
            res.generators.push_back({k.vertex, k.degree});
            std::vector<Rational> e(n);
            e[j] = 1;
            gen_images.push_back(std::move(e));
        }
    }

    FreeLayout layout{E, res.generators};
    res.cover = layout.to_module();

    // Cover map per space, then kernel bases and induced arrows.
    std::map<SpaceKey, Matrix> phi;
    for (const SpaceKey& k : layout.keys()) {
        std::vector<int> basis = layout.basis_at(k);
        Matrix f(m.dim(k), int(basis.size()));
        for (int c = 0; c < int(basis.size()); ++c) {
            int g = basis[c];
            Vertex t = symmetric_difference(res.generators[g].vertex, k.vertex);
            std::vector<Rational> img =
                path_action(m, res.generators[g].vertex, res.generators[g].degree, t,
                            gen_images[g]);
            for (int r = 0; r < int(img.size()); ++r)
                f.at(r, c) = img[r];
        }
        phi[k] = std::move(f);
    }

    res.surjective = true;
    for (const auto& [k, f] : phi)
        if (rank(f) != m.dim(k))
            res.surjective = false;

    std::map<SpaceKey, Matrix> ker_basis;
    res.kernel = GradedModule(E);
    res.minimal = true;
    for (const auto& [k, f] : phi) {
        Matrix n = nullspace(f);
        res.kernel.set_dim(k, n.cols());
        // Minimality: kernel avoids the generator coordinates.
        std::vector<int> basis = layout.basis_at(k);
        for (int c = 0; c < n.cols(); ++c)
            for (int r = 0; r < int(basis.size()); ++r) {
                int g = basis[r];
                bool gen_position = res.generators[g].vertex == k.vertex &&
                                    res.generators[g].degree == k.degree;
                if (gen_position && n.at(r, c) != 0)
                    res.minimal = false;
            }
        ker_basis[k] = std::move(n);
    }
    for (const auto& [k, n] : ker_basis) {
        for (Index i : E) {
            SpaceKey k2{vertex_toggle(k.vertex, i), k.degree + 1};
            Matrix a = layout.arrow(k, i);
            auto it = ker_basis.find(k2);
            Matrix n2 = it == ker_basis.end() ? Matrix(a.rows(), 0) : it->second;
            Matrix induced(n2.cols(), n.cols());
            for (int c = 0; c < n.cols(); ++c) {
                std::vector<Rational> w = a.apply(n.column(c));
                auto x = solve(n2, w);
                if (!x)
                    throw std::logic_error(
                        "projective_cover: arrow image escapes the kernel");
                for (int r = 0; r < n2.cols(); ++r)
                    induced.at(r, c) = (*x)[r];
            }
            if (res.kernel.dim(k) > 0 || res.kernel.dim(k2) > 0)
                res.kernel.set_arrow(k.vertex, i, k.degree, std::move(induced));
        }
    }
    return res;
}

long long BettiTable::total(int k) const {
    auto it = entries.find(k);
    if (it == entries.end())
        return 0;
    long long t = 0;
    for (const auto& [key, mult] : it->second)
        t += mult;
    return t;
}

bool BettiTable::is_linear(std::vector<std::string>* violations) const {
    bool ok = true;
    for (const auto& [k, row] : entries)
        for (const auto& [key, mult] : row)
            if (key.degree != k) {
                ok = false;
                if (violations)
                    violations->push_back("homological degree " + std::to_string(k) +
                                          ": generator at vertex " +
                                          vertex_to_string(key.vertex) +
                                          " in internal degree " +
                                          std::to_string(key.degree));
            }
    return ok;
}

std::string BettiTable::render() const {
    int dmax = 0, kmax = 0;
    for (const auto& [k, row] : entries) {
        kmax = std::max(kmax, k);
        for (const auto& [key, mult] : row)
            dmax = std::max(dmax, key.degree);
    }
    std::ostringstream os;
    os << "k\\d";
    for (int d = 0; d <= dmax; ++d)
        os << "\t" << d;
    os << "\n";
    for (int k = 0; k <= kmax; ++k) {
        os << k;
        auto it = entries.find(k);
        for (int d = 0; d <= dmax; ++d) {
            long long t = 0;
            if (it != entries.end())
                for (const auto& [key, mult] : it->second)
                    if (key.degree == d)
                        t += mult;
            os << "\t" << (t == 0 ? "." : std::to_string(t));
        }
        os << "\n";
    }
    return os.str();
}

BettiTable minimal_resolution(const Vertex& U, const std::set<Index>& E, int upto) {
    BettiTable table;
    GradedModule m = build_simple(U, E);
    for (int k = 0; k <= upto; ++k) {
        CoverResult cov = projective_cover(m);
        if (!cov.surjective)
            throw std::logic_error("minimal_resolution: cover not surjective");
        if (!cov.minimal)
            throw std::logic_error("minimal_resolution: cover not minimal");
        if (cov.kernel.total_dim() != cov.cover.total_dim() - m.total_dim())
            throw std::logic_error("minimal_resolution: exactness bookkeeping failed");
        for (const FreeSummand& g : cov.generators)
            ++table.entries[k][{g.vertex, g.degree}];
        m = std::move(cov.kernel);
    }
    return table;
}

KoszulReport koszul_check(const std::set<Index>& E, int upto) {
    KoszulReport rep;
    rep.upto = upto;
    for (const Vertex& u : all_subsets(E)) {
        BettiTable t = minimal_resolution(u, E, upto);
        std::vector<std::string> v;
        if (!t.is_linear(&v)) {
            rep.koszul = false;
            for (const std::string& s : v)
                rep.violations.push_back("S_" + vertex_to_string(u) + ": " + s);
        }
        rep.tables.emplace(u, std::move(t));
    }
    return rep;
}

}  // namespace weylwt
