#pragma once

#include <map>
#include <string>
#include <vector>

#include "weylwt/linalg.hpp"
#include "weylwt/quiver.hpp"

namespace weylwt {

struct SpaceKey {
    Vertex vertex;
    int degree = 0;
    auto operator<=>(const SpaceKey&) const = default;
};

// Finite-dimensional graded module over the path category C_E: a space with
// chosen basis per (vertex, degree) and a degree-1 linear map per arrow.
class GradedModule {
public:
    explicit GradedModule(std::set<Index> E) : E_(std::move(E)) {}

    const std::set<Index>& ambient() const { return E_; }
    const std::map<SpaceKey, int>& spaces() const { return dims_; }

    int dim(const SpaceKey& k) const {
        auto it = dims_.find(k);
        return it == dims_.end() ? 0 : it->second;
    }

    long long total_dim() const {
        long long d = 0;
        for (const auto& [k, n] : dims_)
            d += n;
        return d;
    }

    void set_dim(const SpaceKey& k, int n) {
        if (n == 0)
            dims_.erase(k);
        else
            dims_[k] = n;
    }

    // The map (V, d) -> (V toggle i, d + 1); zero matrix when unset.
    Matrix arrow(const Vertex& v, Index i, int degree) const;
    void set_arrow(const Vertex& v, Index i, int degree, Matrix m);

    // Checks the C_E relations (double toggle zero, commuting squares) and
    // matrix shapes.
    bool validate(std::string* why = nullptr) const;

private:
    std::set<Index> E_;
    std::map<SpaceKey, int> dims_;
    std::map<std::tuple<Vertex, Index, int>, Matrix> arrows_;
};

// Simple module S_U concentrated in (U, degree_shift).
GradedModule build_simple(const Vertex& U, const std::set<Index>& E, int degree_shift = 0);

// Projective P_U<degree_shift>: basis {paths U -> U^T : T subset of E}, path
// action by composition; dimension 2^{|E|}.
GradedModule build_projective(const Vertex& U, const std::set<Index>& E,
                              int degree_shift = 0);

struct FreeSummand {
    Vertex vertex;
    int degree = 0;
    auto operator<=>(const FreeSummand&) const = default;
};

struct CoverResult {
    std::vector<FreeSummand> generators;
    GradedModule cover;
    GradedModule kernel;
    bool surjective = false;
    bool minimal = false;  // kernel contained in rad(cover)
    CoverResult() : cover({}), kernel({}) {}
};

// Minimal projective cover of M with kernel, by exact rational linear
// algebra. One summand P_U<d> per top generator.
CoverResult projective_cover(const GradedModule& m);

// Graded Betti data: homological degree -> (vertex, internal degree) ->
// multiplicity.
struct BettiTable {
    std::map<int, std::map<SpaceKey, int>> entries;

    long long total(int k) const;
    // All entries at homological degree k in internal degree k.
    bool is_linear(std::vector<std::string>* violations = nullptr) const;
    std::string render() const;  // rows = homological degree, cols = internal degree
};

// Iterated projective covers of S_U to homological degree upto; throws
// std::logic_error if a cover fails its minimality or exactness
// certificate.
BettiTable minimal_resolution(const Vertex& U, const std::set<Index>& E, int upto);

struct KoszulReport {
    bool koszul = true;
    int upto = 0;
    std::vector<std::string> violations;
    std::map<Vertex, BettiTable> tables;
};

// Linearity of the minimal resolutions of all simples of C_E up to the
// bound.
KoszulReport koszul_check(const std::set<Index>& E, int upto);

}  // namespace weylwt
