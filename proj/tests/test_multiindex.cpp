#include "common.hpp"

using namespace t;

TEST_CASE("add is pointwise") {
    CHECK(M("{k0:1}") + M("{k0:1,(1,0):2}") == M("{k0:2,(1,0):2}"));
    CHECK(M("{k3:1,(0,2):1}") + MultiIndex{} == M("{k3:1,(0,2):1}"));
    auto e0 = MultiIndex::e(Key::K(0));
    CHECK(e0 + e0 == M("{k0:2}"));
}

TEST_CASE("homogeneity") {
    CHECK(M("{k0:1}").homogeneity() == HomDegree{1, 0});
    CHECK(M("{(2,1):1}").homogeneity() == HomDegree{0, 3});
    CHECK(M("{k0:2,(1,0):1}").homogeneity() == HomDegree{2, 1});
    CHECK(MultiIndex{}.homogeneity() == HomDegree{0, 0});
    Config cfg(2, Q(1, 2));
    CHECK(M("{k0:2,(1,0):1}").homogeneity().value(cfg) == 2);
}

TEST_CASE("compare_hom") {
    Config half(2, Q(1, 2));
    CHECK(compare_hom({1, 0}, {0, 1}, half) == std::weak_ordering::less);
    CHECK(compare_hom({2, 0}, {0, 1}, half) == std::weak_ordering::equivalent);
    for (Rational a : {Q(1, 3), Q(1, 2), Q(3, 4), Q(99, 100)})
        CHECK(compare_hom({1, 0}, {0, 0}, Config(2, a)) == std::weak_ordering::greater);
}

TEST_CASE("enumerate_below without K-support beyond k0") {
    Config cfg(2, Q(1, 2));
    CHECK(enumerate_below(Q(0), cfg) == std::vector<MultiIndex>{MultiIndex{}});
    auto a = enumerate_below(Q(1, 2), cfg, 0);
    std::sort(a.begin(), a.end());
    std::vector<MultiIndex> want_a{MultiIndex{}, M("{k0:1}")};
    std::sort(want_a.begin(), want_a.end());
    CHECK(a == want_a);
    auto b = enumerate_below(Q(1), cfg, 0);
    std::sort(b.begin(), b.end());
    std::vector<MultiIndex> want_b{MultiIndex{}, M("{k0:1}"), M("{k0:2}"), M("{(1,0):1}"), M("{(0,1):1}")};
    std::sort(want_b.begin(), want_b.end());
    CHECK(b == want_b);
}

TEST_CASE("enumerate_below default K-cap") {
    Config cfg(2, Q(1, 2));
    // |e_k| = alpha for every k, so bound alpha admits e_0 and e_1 under the cap floor(1/2 / 1/2) = 1
    auto a = enumerate_below(Q(1, 2), cfg);
    CHECK(a.size() == 3);
    CHECK(std::count(a.begin(), a.end(), M("{k1:1}")) == 1);
    CHECK(std::count(a.begin(), a.end(), M("{k2:1}")) == 0);
    for (auto& g : enumerate_below(Q(3, 2), Config(2, Q(3, 4)))) {
        CHECK(g.homogeneity().value(Config(2, Q(3, 4))) <= Q(3, 2));
        CHECK(g.max_k() <= 2);
    }
    CHECK(enumerate_below(Q(3, 2), Config(2, Q(3, 4))).size() == 12);
}

TEST_CASE("vectors_up_to") {
    auto v = vectors_up_to(2, 2);
    CHECK(v.size() == 5);
    CHECK(v.front() == std::vector<int>{0, 1});
    CHECK(vectors_up_to(2, 2, 0).size() == 6);
    CHECK(vectors_up_to(3, 1).size() == 3);
}

TEST_CASE("multi-index helpers") {
    auto g = M("{k0:2,k3:1,(1,0):1}");
    CHECK(g.k_count() == 3);
    CHECK(g.total_degree() == 4);
    CHECK(g.max_k() == 3);
    CHECK(g.dim() == 2);
    CHECK(g.symmetry_factor() == 2);
    CHECK(g[Key::K(0)] == 2);
    CHECK(g[Key::K(1)] == 0);
    CHECK(M("{k0:1}").divides(g));
    CHECK_FALSE(M("{k0:3}").divides(g));
    CHECK(g.minus(M("{k0:1,(1,0):1}")) == M("{k0:1,k3:1}"));
    CHECK(g.shifted(Key::K(0), -2) == M("{k3:1,(1,0):1}"));
    CHECK_THROWS(g.shifted(Key::K(1), -1));
    CHECK(MultiIndex({{Key::K(0), 0}, {Key::K(1), 1}}) == M("{k1:1}"));
    CHECK(MultiIndex({{Key::K(0), 1}, {Key::K(0), 2}}) == M("{k0:3}"));
}

TEST_CASE("multi-index text round trip") {
    Config cfg(2, Q(3, 4));
    for (auto& g : enumerate_below(Q(5, 2), cfg)) CHECK(parse_multiindex(to_string(g)) == g);
    CHECK(to_string(M("{(1,0):2, k0:1}")) == "{k0:1,(1,0):2}");
    CHECK(to_string(MultiIndex{}) == "{}");
}

TEST_CASE("multi-index parse errors") {
    CHECK_THROWS_AS(parse_multiindex("{k0:1"), ParseError);
    CHECK_THROWS_AS(parse_multiindex("{q0:1}"), ParseError);
    CHECK_THROWS_AS(parse_multiindex("{k0:-1}"), ParseError);
    CHECK_THROWS_AS(parse_multiindex("{(0,0):1}"), ParseError);
    CHECK_THROWS_AS(parse_multiindex("{k0:1} x"), ParseError);
    CHECK_THROWS_AS(parse_multiindex("{k0:0}"), ParseError);
    CHECK_THROWS_AS(parse_multiindex("{(1,0):1,(1,0,0):1}"), ParseError);
    CHECK_THROWS_AS(MultiIndex({{Key::N({1, 0}), 1}, {Key::N({1, 0, 0}), 1}}), DimensionError);
    try {
        parse_multiindex("{k0:1,\n  q}");
        FAIL("no error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 3);
    }
}

TEST_CASE("config validation") {
    CHECK_THROWS(Config(2, Q(0)));
    CHECK_THROWS(Config(2, Q(1)));
    CHECK_THROWS(Config(0, Q(1, 2)));
    Config c(3, Q(2, 3));
    CHECK(c.p() == 2);
    CHECK(c.q() == 3);
}
