#include <doctest.h>

#include "oracles.hpp"
#include "weylwt/quiver.hpp"

using namespace weylwt;
using namespace oracles;

TEST_CASE("path normal forms and composition") {
    PathNF a = PathNF::arrow({}, 1);            // {} -> {1}
    PathNF b = PathNF::arrow({1}, 1);           // {1} -> {}
    CHECK(path_compose(a, b).is_zero());        // double toggle dies
    PathNF c = PathNF::arrow({1}, 2);           // {1} -> {1,2}
    PathNF ac = path_compose(a, c);
    CHECK(ac == PathNF::reduced({}, {1, 2}));
    // the other route around the square is the same morphism
    PathNF other = path_compose(PathNF::arrow({}, 2), PathNF::arrow({2}, 1));
    CHECK(ac == other);
    // identities are neutral
    CHECK(path_compose(PathNF::identity({}), a) == a);
    CHECK(path_compose(a, PathNF::identity({1})) == a);
    // zero absorbs
    CHECK(path_compose(PathNF::zero(), a).is_zero());
    CHECK(path_compose(a, PathNF::zero()).is_zero());
    // endpoint mismatch is an error
    CHECK_THROWS_AS(path_compose(a, PathNF::arrow({2}, 1)), std::invalid_argument);
}

TEST_CASE("word rewriting is confluent") {
    std::set<Index> E{1, 2, 3};
    std::vector<Index> letters(E.begin(), E.end());
    for (int trial = 0; trial < 600; ++trial) {
        Vertex source;
        for (Index i : E)
            if (rand_int(0, 1))
                source.insert(i);
        std::vector<Index> word;
        long long len = rand_int(0, 6);
        for (long long k = 0; k < len; ++k)
            word.push_back(letters[rand_int(0, (long long)letters.size() - 1)]);
        PathNF expect = word_oracle(source, word);
        CHECK(word_fold(source, word) == expect);
        CHECK(word_fold_random(source, word) == expect);
    }
}

TEST_CASE("hom spaces are one-dimensional") {
    CHECK(hom_basis({}, {}) == std::vector<PathNF>{PathNF::identity({})});
    std::set<Index> E{1, 2};
    CHECK(hom_basis({}, {1, 2}).size() == 1);
    CHECK(hom_basis({}, {1, 2})[0].length() == 2);
    for (const Vertex& u : all_subsets(E))
        for (const Vertex& w : all_subsets(E)) {
            auto basis = hom_basis(u, w);
            REQUIRE(basis.size() == 1);
            CHECK(basis[0].source() == u);
            CHECK(basis[0].target() == w);
            // oracle: enumerate all words up to length 2|E| and count
            // distinct nonzero normal forms from u to w
            std::set<PathNF> reachable;
            std::vector<Index> letters(E.begin(), E.end());
            std::function<void(std::vector<Index>&)> rec = [&](std::vector<Index>& word) {
                PathNF p = word_oracle(u, word);
                if (!p.is_zero() && p.target() == w)
                    reachable.insert(p);
                if (word.size() >= 2 * E.size())
                    return;
                for (Index i : letters) {
                    word.push_back(i);
                    rec(word);
                    word.pop_back();
                }
            };
            std::vector<Index> start;
            rec(start);
            CHECK(reachable.size() == 1);
            CHECK(*reachable.begin() == basis[0]);
        }
}

TEST_CASE("total dimension of the path category") {
    CHECK(algebra_dim({}) == 1);
    CHECK(algebra_dim({1}) == 4);
    CHECK(algebra_dim({1, 2}) == 16);
    CHECK(algebra_dim({1, 2, 3}) == 64);
}

TEST_CASE("subset enumeration") {
    std::set<Index> E{1, 2, 3};
    auto subs = all_subsets(E);
    CHECK(subs.size() == 8);
    std::set<Vertex> distinct(subs.begin(), subs.end());
    CHECK(distinct.size() == 8);
    for (const Vertex& v : subs)
        for (Index i : v)
            CHECK(E.count(i));
}

TEST_CASE("dot export of the two-coordinate quiver") {
    std::string dot = quiver_export_dot({1, 2});
    // 4 vertices
    for (const char* v : {"\"{}\"", "\"{1}\"", "\"{2}\"", "\"{1,2}\""})
        CHECK(dot.find(v) != std::string::npos);
    // 8 arrows
    size_t arrows = 0, pos = 0;
    while ((pos = dot.find("->", pos)) != std::string::npos) {
        ++arrows;
        pos += 2;
    }
    CHECK(arrows == 8);
    // the single-coordinate quiver: 2 vertices, 2 arrows
    std::string dot1 = quiver_export_dot({1});
    size_t arrows1 = 0;
    pos = 0;
    while ((pos = dot1.find("->", pos)) != std::string::npos) {
        ++arrows1;
        pos += 2;
    }
    CHECK(arrows1 == 2);
    // no coordinates: a single vertex, no arrows
    std::string dot0 = quiver_export_dot({});
    CHECK(dot0.find("\"{}\"") != std::string::npos);
    CHECK(dot0.find("->") == std::string::npos);
}
