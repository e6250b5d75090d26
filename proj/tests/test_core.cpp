#include <doctest.h>

#include "oracles.hpp"
#include "weylwt/scalar.hpp"
#include "weylwt/weight.hpp"

using namespace weylwt;
using namespace oracles;

TEST_CASE("rational strings") {
    CHECK(rational_to_string(Rational(5)) == "5");
    CHECK(rational_to_string(Rational(-3, 4)) == "-3/4");
    CHECK(rational_from_string("7/2") == Rational(7, 2));
    CHECK(rational_from_string("-6") == Rational(-6));
    CHECK_THROWS_AS(rational_from_string("abc"), std::invalid_argument);
}

TEST_CASE("scalar arithmetic") {
    Scalar s = scalar_symbol("s");
    CHECK((s + Scalar(1)) + Scalar(-1) == s);
    CHECK(s * (s + Scalar(2)) == s * s + Scalar(2) * s);
    CHECK(s * Scalar(0) == Scalar(0));
    CHECK((s + Scalar(1)) - s - Scalar(1) == Scalar(0));
    // s is transcendental: s - 3 is not zero
    CHECK((s - Scalar(3)).is_zero() == false);
    CHECK(Scalar(0).is_zero());
    CHECK(scalar_to_string(Scalar(2) * s * s - Scalar(Rational(1, 3))) ==
          "2*s^2 - 1/3");
}

TEST_CASE("scalar ring axioms, randomized") {
    for (int trial = 0; trial < 50; ++trial) {
        auto rnd = [&]() {
            Scalar a(Rational(rand_int(-4, 4)));
            if (rand_int(0, 1))
                a = a * scalar_symbol("s");
            if (rand_int(0, 1))
                a = a + scalar_symbol("u") * Scalar(Rational(rand_int(-2, 2)));
            return a;
        };
        Scalar a = rnd(), b = rnd(), c = rnd();
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * Scalar(1) == a);
        CHECK(a + Scalar(0) == a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("coordinate values") {
    CHECK(CoordValue::integer(0).is_nonneg_int());
    CHECK(CoordValue::integer(-1).is_neg_int());
    CHECK(CoordValue::integer(3).same_coset(CoordValue::integer(-7)));
    CHECK_FALSE(CoordValue::integer(3).same_coset(CoordValue::nonint(1, "s", 3)));
    CHECK(CoordValue::nonint(1, "s", 0).same_coset(CoordValue::nonint(1, "s", 9)));
    CHECK_FALSE(CoordValue::nonint(1, "s", 0).same_coset(CoordValue::nonint(-1, "s", 0)));
    CHECK_FALSE(CoordValue::nonint(1, "s", 0).same_coset(CoordValue::nonint(1, "u", 0)));
    CHECK(CoordValue::nonint(1, "s", 2).minus(CoordValue::nonint(1, "s", -1)) == 3);
    CHECK_THROWS_AS(CoordValue::integer(1).minus(CoordValue::nonint(1, "s", 0)),
                    std::invalid_argument);
}

TEST_CASE("coordinate involution v -> -v-1") {
    CHECK(CoordValue::integer(3).negated_minus_one() == CoordValue::integer(-4));
    CHECK(CoordValue::nonint(1, "s", 1).negated_minus_one() ==
          CoordValue::nonint(-1, "s", -2));
    for (int trial = 0; trial < 30; ++trial) {
        CoordValue v = rand_coord();
        CHECK(v.negated_minus_one().negated_minus_one() == v);
        // it swaps the two integer sign classes
        if (v.is_int())
            CHECK(v.is_nonneg_int() == v.negated_minus_one().is_neg_int());
    }
}

TEST_CASE("weights: overrides and lattices") {
    Weight p = Weight::constant(0);
    p.set(1, CoordValue::integer(2));
    CHECK(p.at(1) == CoordValue::integer(2));
    CHECK(p.at(7) == CoordValue::integer(0));
    // setting back to the default removes the override
    p.set(1, CoordValue::integer(0));
    CHECK(p.override_indices().empty());

    Weight q = Weight::constant(0).with(2, CoordValue::integer(-5));
    CHECK(p.same_lattice(q));
    CHECK(q.minus(p) == Shift::unit(2, -5));
    Weight r(CoordValue::nonint(1, "s", 0));
    CHECK_FALSE(p.same_lattice(r));
}

TEST_CASE("sigma_shift is a free action") {
    Weight p = Weight::constant(0);
    CHECK(sigma_shift(p, Shift::unit(1)).at(1) == CoordValue::integer(1));
    Weight pn(CoordValue::nonint(1, "s", 0));
    CHECK(sigma_shift(pn, Shift::unit(1, -1)).at(1) == CoordValue::nonint(1, "s", -1));
    for (int trial = 0; trial < 40; ++trial) {
        Weight w = rand_weight();
        Shift v, u;
        for (int k = 0; k < 3; ++k) {
            v.set(Index(rand_int(1, 4)), rand_int(-2, 2));
            u.set(Index(rand_int(1, 4)), rand_int(-2, 2));
        }
        CHECK(sigma_shift(sigma_shift(w, v), u) == sigma_shift(w, v + u));
        // freeness: equal translates force equal shifts
        if (sigma_shift(w, v) == sigma_shift(w, u))
            CHECK(v == u);
        CHECK(sigma_shift(w, v).minus(w) == v);
    }
}

TEST_CASE("theta_weight coordinatewise") {
    Weight p = Weight::constant(0).with(1, CoordValue::integer(3));
    Weight t = theta_weight(IndexSet{1}, p);
    CHECK(t.at(1) == CoordValue::integer(-4));
    CHECK(t.at(2) == CoordValue::integer(0));

    Weight q = Weight::constant(0).with(2, CoordValue::nonint(1, "s", 1));
    CHECK(theta_weight(IndexSet{2}, q).at(2) == CoordValue::nonint(-1, "s", -2));
}

TEST_CASE("theta_weight is an involution, including cofinite J") {
    for (int trial = 0; trial < 40; ++trial) {
        Weight p = rand_weight();
        std::set<Index> js;
        for (int k = 0; k < 3; ++k)
            if (rand_int(0, 1))
                js.insert(Index(rand_int(1, 5)));
        IndexSet J = rand_int(0, 1) ? IndexSet::finite(js) : IndexSet::cofinite(js);
        Weight t = theta_weight(J, p);
        CHECK(theta_weight(J, t) == p);
        for (Index i = 0; i <= 6; ++i) {
            if (J.contains(i))
                CHECK(t.at(i) == p.at(i).negated_minus_one());
            else
                CHECK(t.at(i) == p.at(i));
        }
    }
}

TEST_CASE("index sets") {
    IndexSet J{1, 3};
    CHECK(J.contains(1));
    CHECK_FALSE(J.contains(2));
    IndexSet C = J.complement();
    CHECK(C.contains(2));
    CHECK_FALSE(C.contains(3));
    CHECK(C.is_cofinite());
    CHECK(C.complement() == J);
    CHECK(IndexSet::all().contains(123));
    CHECK(J.to_string() == "{1,3}");
    CHECK(C.to_string() == "~{1,3}");
}
