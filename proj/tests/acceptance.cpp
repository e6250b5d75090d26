// Acceptance gate: one line per criterion, all checks exact, each criterion
// under its wall-time bound. Exits nonzero if anything fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "oracles.hpp"
#include "weylwt/blocks.hpp"
#include "weylwt/json_io.hpp"
#include "weylwt/resolution.hpp"

using namespace weylwt;
using namespace oracles;

namespace {

struct Criterion {
    int number;
    std::string name;
    double bound_seconds;
    std::function<bool(std::string&)> run;
};

bool g_all_ok = true;

void run_criterion(const Criterion& c) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = c.run(detail);
    } catch (const std::exception& e) {
        ok = false;
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                      .count();
    bool in_time = secs < c.bound_seconds;
    if (!ok || !in_time)
        g_all_ok = false;
    std::printf("criterion %2d (%s): %s [%s%.2fs < %.0fs]%s%s\n", c.number,
                c.name.c_str(), ok && in_time ? "PASS" : "FAIL",
                in_time ? "" : "TIME ", secs, c.bound_seconds,
                detail.empty() ? "" : " ", detail.c_str());
}

// --- shared generators -----------------------------------------------------

Weight rand_mixed_weight() {
    // guarantees all three coordinate flavors appear across the suite
    Weight p(rand_coord());
    long long n = rand_int(1, 3);
    for (long long k = 0; k < n; ++k) {
        Index i = Index(rand_int(1, 5));
        switch (rand_int(0, 2)) {
            case 0: p.set(i, CoordValue::integer(rand_int(0, 4))); break;
            case 1: p.set(i, CoordValue::integer(rand_int(-4, -1))); break;
            default:
                p.set(i, CoordValue::nonint(rand_int(0, 1) ? 1 : -1, "s",
                                            rand_int(-2, 2)));
        }
    }
    return p;
}

Weight support_monomial_near(const MonomialModule& M, const std::set<Index>& idx,
                             int radius) {
    for (int attempt = 0; attempt < 64; ++attempt) {
        Weight m = M.base();
        for (Index i : idx)
            m.set(i, m.at(i).plus(rand_int(-radius, radius)));
        if (M.monomial_in_support(m))
            return m;
    }
    return M.base();
}

// --- criterion 1 -----------------------------------------------------------

bool crit_relations(std::string& detail) {
    int cases = 0;
    while (cases < 200) {
        Weight p = rand_mixed_weight();
        MonomialModule m = [&]() {
            switch (cases % 4) {
                case 0: return realize_B(p);
                case 1: return realize_L(p);
                case 2:
                    return theta_twist(realize_B(p),
                                       {Index(rand_int(1, 4)), Index(rand_int(1, 4))});
                default: return dual_module(realize_L(p));
            }
        }();
        Index i = Index(rand_int(1, 4));
        Index j = Index(rand_int(1, 4));
        Weight mono = support_monomial_near(m, {i, j}, 2);
        WeightVector v = WeightVector::monomial(mono);
        std::vector<WeylElement> rels;
        rels.push_back(WeylElement::X(i) * WeylElement::X(j) -
                       WeylElement::X(j) * WeylElement::X(i));
        rels.push_back(WeylElement::Y(i) * WeylElement::Y(j) -
                       WeylElement::Y(j) * WeylElement::Y(i));
        if (i != j) {
            rels.push_back(WeylElement::X(i) * WeylElement::Y(j) -
                           WeylElement::Y(j) * WeylElement::X(i));
            rels.push_back(WeylElement::X(j) * WeylElement::Y(i) -
                           WeylElement::Y(i) * WeylElement::X(j));
        }
        rels.push_back(WeylElement::Y(i) * WeylElement::X(i) -
                       WeylElement::X(i) * WeylElement::Y(i) - WeylElement::one());
        rels.push_back(WeylElement::Y(j) * WeylElement::X(j) -
                       WeylElement::X(j) * WeylElement::Y(j) - WeylElement::one());
        for (const WeylElement& r : rels)
            if (!act(m, r, v).is_zero()) {
                detail = "relation violated on " + m.to_string();
                return false;
            }
        ++cases;
    }
    detail = std::to_string(cases) + " cases";
    return true;
}

// --- criterion 2 -----------------------------------------------------------

bool product_matches_oracle(const WeylElement& a, const WeylElement& b) {
    WeylElement ab = a * b;
    std::set<Index> idx = ab.touched_indices();
    for (Index i : a.touched_indices())
        idx.insert(i);
    for (Index i : b.touched_indices())
        idx.insert(i);
    idx.insert(1);
    std::vector<Index> v(idx.begin(), idx.end());
    bool ok = true;
    std::function<void(size_t, DefMono)> rec = [&](size_t k, DefMono m) {
        if (!ok)
            return;
        if (k == v.size() || k == 3) {
            if (def_apply(ab, def_monomial(m)) !=
                def_apply(a, def_apply(b, def_monomial(m))))
                ok = false;
            return;
        }
        for (int e = 0; e <= 5; ++e) {
            DefMono m2 = m;
            if (e > 0)
                m2[v[k]] = e;
            rec(k + 1, m2);
        }
    };
    rec(0, {});
    return ok;
}

bool crit_normal_form(std::string& detail) {
    for (int trial = 0; trial < 100; ++trial) {
        WeylElement a = rand_weyl(3), b = rand_weyl(3);
        if (!product_matches_oracle(a, b)) {
            detail = "product disagrees with the defining representation";
            return false;
        }
    }
    for (int trial = 0; trial < 50; ++trial) {
        WeylElement a = rand_weyl(2), b = rand_weyl(2), c = rand_weyl(2);
        if ((a * b) * c != a * (b * c)) {
            detail = "associativity failed";
            return false;
        }
    }
    detail = "100 pairs, 50 triples";
    return true;
}

// --- criterion 3 -----------------------------------------------------------

bool crit_classification(std::string& detail) {
    for (int trial = 0; trial < 200; ++trial) {
        Weight p = rand_mixed_weight();
        CanonicalForm cf = canonical_form(p);
        if (!in_k_plus(cf.p_plus) || theta_weight(cf.J, cf.p_plus) != p) {
            detail = "canonical form does not round-trip at " + p.to_string();
            return false;
        }
        // companion weight: sometimes an in-class move, sometimes a jump
        Weight q = p;
        for (int k = 0; k < 2; ++k) {
            Index i = Index(rand_int(1, 5));
            q.set(i, q.at(i).plus(rand_int(-3, 3)));
        }
        if (rand_int(0, 3) == 0)
            q = rand_mixed_weight();
        CanonicalForm cfq = canonical_form(q);
        bool same_form = p.same_lattice(q) && cf.J == cfq.J &&
                         equivalent(cf.p_plus, cfq.p_plus);
        if (equivalent(p, q) != same_form) {
            detail = "equivalence disagrees with canonical forms";
            return false;
        }
        if (equivalent(p, q) != (bar_contains(p, q) && bar_contains(q, p))) {
            detail = "equivalence disagrees with mutual bar membership";
            return false;
        }
    }
    detail = "200 pairs";
    return true;
}

// --- criterion 4 -----------------------------------------------------------

bool crit_projective_box(std::string& detail) {
    for (int trial = 0; trial < 20; ++trial) {
        Weight p(rand_int(0, 1)
                     ? CoordValue::nonint(rand_int(0, 1) ? 1 : -1, "s", rand_int(-2, 2))
                     : CoordValue::integer(rand_int(-5, -1)));
        long long n = rand_int(0, 3);
        for (long long k = 0; k < n; ++k) {
            Index i = Index(rand_int(1, 5));
            if (rand_int(0, 1))
                p.set(i, CoordValue::integer(rand_int(-6, -1)));
            else
                p.set(i, CoordValue::nonint(rand_int(0, 1) ? 1 : -1, "u",
                                            rand_int(-2, 2)));
        }
        MonomialModule b = realize_B(p);
        ModHom h =
            hom_from_projective(p, b, WeightVector::monomial(b.monomial_of_weight(p)));
        std::set<Index> idx = p.override_indices();
        idx.insert(1);
        idx.insert(2);
        IsoBoxReport rep = iso_on_box(h, 3, idx);
        if (!rep.ok) {
            detail = "unexpected failure: " + rep.detail;
            return false;
        }
    }
    // a nonnegative coordinate within reach defeats the map, with a witness
    for (int trial = 0; trial < 5; ++trial) {
        Weight p = Weight::constant(-1).with(1, CoordValue::integer(rand_int(0, 2)));
        MonomialModule b = realize_B(p);
        ModHom h =
            hom_from_projective(p, b, WeightVector::monomial(b.monomial_of_weight(p)));
        IsoBoxReport rep = iso_on_box(h, 3, {1});
        if (rep.ok || !rep.witness.has_value()) {
            detail = "missing failure witness for a nonnegative coordinate";
            return false;
        }
    }
    detail = "20 positive cases, 5 witnesses";
    return true;
}

// --- criterion 5 -----------------------------------------------------------

bool crit_reachability(std::string& detail) {
    for (int trial = 0; trial < 20; ++trial) {
        Weight p = rand_mixed_weight();
        MonomialModule l = realize_L(p);
        std::set<Index> idx;
        for (Index i : p.override_indices()) {
            idx.insert(i);
            if (idx.size() == 2)
                break;
        }
        idx.insert(1);
        std::vector<Index> iv(idx.begin(), idx.end());
        // enumerate the radius-2 box, keep the bar(p) points
        std::vector<Weight> monos;
        std::function<void(size_t, Weight)> rec = [&](size_t k, Weight m) {
            if (k == iv.size()) {
                if (bar_contains(p, m))
                    monos.push_back(m);
                return;
            }
            for (int d = -2; d <= 2; ++d)
                rec(k + 1, m.with(iv[k], m.at(iv[k]).plus(d)));
        };
        rec(0, p);
        for (const Weight& a : monos)
            for (const Weight& b : monos) {
                ReachabilityResult r = simple_reachability(p, a, b);
                if (!r.ok) {
                    detail = "unreachable pair in bar(p): " + r.diagnostic;
                    return false;
                }
                if (act(l, r.word, WeightVector::monomial(a)) !=
                    WeightVector::monomial(b, r.coefficient)) {
                    detail = "witness word is not certified by the action";
                    return false;
                }
            }
    }
    detail = "20 weights, all box pairs";
    return true;
}

// --- criterion 6 -----------------------------------------------------------

bool crit_highest_weight_ones(std::string& detail) {
    Weight p = Weight::constant(1);
    MonomialModule l = realize_L(p);
    for (int trial = 0; trial < 20; ++trial) {
        WeightVector v;
        long long terms = rand_int(1, 3);
        for (long long k = 0; k < terms; ++k) {
            Weight m = p;
            for (int j = 0; j < 2; ++j)
                m.set(Index(rand_int(1, 4)), CoordValue::integer(rand_int(0, 3)));
            v = v + WeightVector::monomial(m, Scalar(rand_int(1, 4)));
        }
        if (v.is_zero()) {
            detail = "degenerate random vector";
            return false;
        }
        std::set<Index> idx;
        long long max_exp = 0;
        for (const auto& [m, c] : v.terms())
            for (Index i : Weight::touched_indices(p, m))
                idx.insert(i);
        idx.insert(Index(6));  // an untouched default coordinate
        bool some_nonzero = false;
        for (Index i : idx) {
            if (!act(l, WeylElement::Y(i), v).is_zero())
                some_nonzero = true;
            for (const auto& [m, c] : v.terms())
                max_exp = std::max(max_exp, m.at(i).int_value());
        }
        if (!some_nonzero) {
            detail = "no Y acts nonzero on a nonzero vector";
            return false;
        }
        for (Index i : idx)
            if (!act(l, WeylElement::Y(i, int(max_exp) + 1), v).is_zero()) {
                detail = "Y_" + std::to_string(i) + " is not locally nilpotent";
                return false;
            }
    }
    detail = "20 vectors";
    return true;
}

// --- criterion 7 -----------------------------------------------------------

bool crit_localization(std::string& detail) {
    for (int trial = 0; trial < 20; ++trial) {
        Weight p(rand_int(0, 1)
                     ? CoordValue::integer(rand_int(0, 3))
                     : CoordValue::nonint(rand_int(0, 1) ? 1 : -1, "s", rand_int(-2, 2)));
        long long n = rand_int(0, 3);
        for (long long k = 0; k < n; ++k) {
            Index i = Index(rand_int(1, 5));
            if (rand_int(0, 1))
                p.set(i, CoordValue::integer(rand_int(0, 4)));
            else
                p.set(i, CoordValue::nonint(rand_int(0, 1) ? 1 : -1, "u",
                                            rand_int(-2, 2)));
        }
        LocalizationReport rep = verify_localization_realizations(p, 3);
        if (!rep.ok) {
            detail = rep.failures.empty() ? "failed" : rep.failures.front();
            return false;
        }
    }
    detail = "20 weights at radius 3";
    return true;
}

// --- criterion 8 -----------------------------------------------------------

bool crit_quiver(std::string& detail) {
    std::vector<Index> letters{1, 2, 3};
    for (int trial = 0; trial < 500; ++trial) {
        Vertex source;
        for (Index i : letters)
            if (rand_int(0, 1))
                source.insert(i);
        std::vector<Index> word;
        long long len = rand_int(0, 6);
        for (long long k = 0; k < len; ++k)
            word.push_back(letters[rand_int(0, 2)]);
        PathNF expect = word_oracle(source, word);
        if (word_fold(source, word) != expect ||
            word_fold_random(source, word) != expect) {
            detail = "confluence failure";
            return false;
        }
    }
    for (int n = 0; n <= 3; ++n) {
        std::set<Index> E;
        for (Index i = 1; i <= n; ++i)
            E.insert(i);
        long long expect = 1;
        for (int k = 0; k < n; ++k)
            expect *= 4;
        if (algebra_dim(E) != expect) {
            detail = "algebra dimension mismatch at |E|=" + std::to_string(n);
            return false;
        }
        for (const Vertex& u : all_subsets(E))
            for (const Vertex& w : all_subsets(E))
                if (hom_basis(u, w).size() != 1) {
                    detail = "hom space is not one-dimensional";
                    return false;
                }
    }
    detail = "500 words, |E| <= 3";
    return true;
}

// --- criterion 9 -----------------------------------------------------------

bool crit_koszul(std::string& detail) {
    struct Case {
        int n;
        int upto;
    };
    for (Case c : {Case{1, 6}, Case{2, 5}, Case{3, 4}}) {
        std::set<Index> E;
        for (Index i = 1; i <= c.n; ++i)
            E.insert(i);
        KoszulReport rep = koszul_check(E, c.upto);
        if (!rep.koszul) {
            detail = "non-linear resolution at |E|=" + std::to_string(c.n);
            return false;
        }
        for (const auto& [u, table] : rep.tables) {
            for (int k = 0; k <= c.upto; ++k) {
                if (table.total(k) != binomial(k + c.n - 1, c.n - 1)) {
                    detail = "Betti total mismatch at |E|=" + std::to_string(c.n);
                    return false;
                }
                std::map<Vertex, long long> expect = tensor_betti(u, E, k);
                std::map<Vertex, long long> got;
                auto it = table.entries.find(k);
                if (it != table.entries.end())
                    for (const auto& [key, mult] : it->second)
                        got[key.vertex] += mult;
                if (got != expect) {
                    detail = "Betti table disagrees with the tensor oracle";
                    return false;
                }
            }
        }
    }
    detail = "|E|=1..3 against two oracles";
    return true;
}

// --- criterion 10 ----------------------------------------------------------

bool crit_blocks(std::string& detail) {
    int done = 0;
    for (int n = 1; n <= 3; ++n) {
        std::set<Index> E;
        for (Index i = 1; i <= n; ++i)
            E.insert(i);
        for (int trial = 0; trial < 4; ++trial) {
            Weight p = Weight::constant(rand_int(0, 1) ? 0 : -1);
            // mixed positive / negative / zero values on E
            int slot = 0;
            for (Index i : E) {
                long long vals[3] = {rand_int(1, 3), rand_int(-3, -1), 0};
                p.set(i, CoordValue::integer(vals[(slot + trial) % 3]));
                ++slot;
            }
            BlockReport rep = verify_block(p, E);
            if (!rep.ok) {
                detail = rep.failures.empty() ? "failed" : rep.failures.front();
                return false;
            }
            ++done;
        }
    }
    detail = std::to_string(done) + " blocks across |E|=1..3";
    return true;
}

// --- criterion 11 ----------------------------------------------------------

std::string run_cli(const std::string& args, int& exit_code) {
    std::string cmd = std::string(WEYLWT_CLI_PATH) + " " + args;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        exit_code = -1;
        return "";
    }
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
        out.append(buf, n);
    exit_code = pclose(pipe);
    return out;
}

bool crit_cli(std::string& detail) {
    int code = 0;
    std::string dot = run_cli("quiver {1,2} --format dot", code);
    if (code != 0) {
        detail = "quiver subcommand failed";
        return false;
    }
    // parse vertices and edges from the DOT text
    std::vector<std::string> verts;
    std::vector<std::pair<std::string, std::string>> edges;
    std::istringstream is(dot);
    std::string line;
    while (std::getline(is, line)) {
        size_t arrow = line.find("->");
        size_t q1 = line.find('"');
        if (q1 == std::string::npos)
            continue;
        size_t q2 = line.find('"', q1 + 1);
        std::string a = line.substr(q1 + 1, q2 - q1 - 1);
        if (arrow == std::string::npos) {
            verts.push_back(a);
        } else {
            size_t q3 = line.find('"', arrow);
            size_t q4 = line.find('"', q3 + 1);
            edges.emplace_back(a, line.substr(q3 + 1, q4 - q3 - 1));
        }
    }
    if (verts.size() != 4 || edges.size() != 8) {
        detail = "expected 4 vertices and 8 arrows, got " +
                 std::to_string(verts.size()) + "/" + std::to_string(edges.size());
        return false;
    }
    // expected square: subsets of {1,2} with one arrow per toggle, each way
    std::vector<Vertex> expect_v = all_subsets({1, 2});
    std::set<std::pair<int, int>> expect_e;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            if (symmetric_difference(expect_v[a], expect_v[b]).size() == 1)
                expect_e.insert({a, b});
    // brute-force graph isomorphism over the 24 bijections
    std::vector<int> perm{0, 1, 2, 3};
    bool iso = false;
    std::map<std::string, int> vid;
    for (int i = 0; i < 4; ++i)
        vid[verts[i]] = i;
    std::set<std::pair<int, int>> got_e;
    for (const auto& [a, b] : edges) {
        if (!vid.count(a) || !vid.count(b)) {
            detail = "edge references an unknown vertex";
            return false;
        }
        got_e.insert({vid[a], vid[b]});
    }
    if (got_e.size() != 8) {
        detail = "duplicate arrows";
        return false;
    }
    do {
        std::set<std::pair<int, int>> mapped;
        for (const auto& [a, b] : got_e)
            mapped.insert({perm[a], perm[b]});
        if (mapped == expect_e) {
            iso = true;
            break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!iso) {
        detail = "DOT graph is not isomorphic to the square with doubled arrows";
        return false;
    }

    // JSON round-trip identity on every schema
    for (int trial = 0; trial < 10; ++trial) {
        CoordValue cv = rand_coord();
        if (coord_from_json(coord_to_json(cv)) != cv)
            return false;
        Weight p = rand_weight();
        if (weight_from_json(weight_to_json(p)) != p)
            return false;
        Shift s;
        s.set(Index(rand_int(1, 4)), rand_int(-3, 3));
        if (shift_from_json(shift_to_json(s)) != s)
            return false;
        Scalar sc = scalar_symbol("s") * Scalar(Rational(rand_int(-3, 3))) +
                    Scalar(Rational(rand_int(-3, 3)));
        if (scalar_from_json(scalar_to_json(sc)) != sc)
            return false;
        WeylElement a = rand_weyl(3);
        if (weyl_from_json(weyl_to_json(a)) != a)
            return false;
        IndexSet J = rand_int(0, 1) ? IndexSet{1, 3} : IndexSet::cofinite({2});
        if (indexset_from_json(indexset_to_json(J)) != J)
            return false;
        WeightVector v = WeightVector::monomial(rand_weight(), scalar_symbol("u"));
        if (vector_from_json(vector_to_json(v)) != v)
            return false;
        ModuleDescriptor d;
        d.label = "L";
        d.base = rand_weight();
        d.twist = {2};
        ModuleDescriptor back = descriptor_from_json(descriptor_to_json(d));
        if (back.label != d.label || back.base != d.base || back.twist != d.twist ||
            back.dual != d.dual)
            return false;
    }
    detail = "dot isomorphism + schema round-trips";
    return true;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria{
        {1, "defining relations on modules", 5, crit_relations},
        {2, "normal-form soundness", 10, crit_normal_form},
        {3, "classification", 5, crit_classification},
        {4, "projective realization on boxes", 10, crit_projective_box},
        {5, "simplicity via reachability", 10, crit_reachability},
        {6, "highest weight at all-ones", 2, crit_highest_weight_ones},
        {7, "localization realizations", 10, crit_localization},
        {8, "quiver combinatorics", 5, crit_quiver},
        {9, "Koszulity and Betti numbers", 60, crit_koszul},
        {10, "block relations", 60, crit_blocks},
        {11, "CLI quiver export and JSON round-trip", 1, crit_cli},
    };
    for (const Criterion& c : criteria)
        run_criterion(c);
    return g_all_ok ? 0 : 1;
}
