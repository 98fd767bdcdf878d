#include "doctest.h"

#include "amorph/errors.hpp"
#include "amorph/families.hpp"
#include "amorph/srg.hpp"

using namespace amorph;

namespace {

using Graph = std::vector<std::vector<int>>;

// union of the given classes of a scheme as a graph
Graph graph_of(const AssociationScheme& s, std::initializer_list<int> classes) {
    Graph g(static_cast<std::size_t>(s.n()), std::vector<int>(static_cast<std::size_t>(s.n()), 0));
    for (int x = 0; x < s.n(); ++x)
        for (int y = 0; y < s.n(); ++y)
            for (int c : classes)
                if (s.matrix()(x, y) == c) g[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = 1;
    return g;
}

Graph cycle(int n) {
    Graph g(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    for (int x = 0; x < n; ++x) {
        g[static_cast<std::size_t>(x)][static_cast<std::size_t>((x + 1) % n)] = 1;
        g[static_cast<std::size_t>((x + 1) % n)][static_cast<std::size_t>(x)] = 1;
    }
    return g;
}

// Z_2^4, adjacent when the difference has weight 1 or 4
Graph clebsch() {
    Graph g(16, std::vector<int>(16, 0));
    for (int x = 0; x < 16; ++x)
        for (int y = 0; y < 16; ++y) {
            int w = __builtin_popcount(x ^ y);
            g[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = (w == 1 || w == 4) ? 1 : 0;
        }
    return g;
}

}  // namespace

TEST_CASE("srg from graph") {
    auto p13 = srg_from_graph(graph_of(paley(13), {1}));
    CHECK(p13.n == 13);
    CHECK(p13.k == 6);
    CHECK(p13.lambda == 2);
    CHECK(p13.mu == 3);
    CHECK(p13.r == TowerNumber::parse("(-1+sqrt(13))/2"));
    CHECK(p13.s == TowerNumber::parse("(-1-sqrt(13))/2"));
    CHECK(p13.m1 == 6);
    CHECK(p13.m2 == 6);
    CHECK(p13.tag.kind == SrgKind::Conference);
    CHECK(p13.tag.n == 13);

    auto c5 = srg_from_graph(cycle(5));
    CHECK(c5.k == 2);
    CHECK(c5.lambda == 0);
    CHECK(c5.mu == 1);
    CHECK(c5.tag.kind == SrgKind::Conference);

    for (int p : {5, 13, 17, 29}) {
        auto params = srg_from_graph(graph_of(paley(p), {1}));
        CHECK(params.tag.kind == SrgKind::Conference);
        CHECK(params.tag.n == p);
        CHECK(params.lambda == params.mu - 1);
        CHECK(params.n == 4 * params.mu + 1);
    }

    auto cl = srg_from_graph(clebsch());
    CHECK(cl.k == 5);
    CHECK(cl.lambda == 0);
    CHECK(cl.mu == 2);
    CHECK(cl.tag == negative_latin_tag(1, 4));

    // unions of g parallel classes of a Latin net are L_g(v)
    auto net4 = latin_net_scheme(cyclic_latin_square(4));
    CHECK(srg_from_graph(graph_of(net4, {1})).tag == latin_tag(1, 4));
    CHECK(srg_from_graph(graph_of(net4, {1, 2})).tag == latin_tag(2, 4));
    CHECK(srg_from_graph(graph_of(net4, {1, 2, 3})).tag == latin_tag(3, 4));
    CHECK(srg_from_graph(graph_of(latin_net_scheme(cyclic_latin_square(3)), {2})).tag == latin_tag(1, 3));

    Graph path = {{0, 1, 0}, {1, 0, 1}, {0, 1, 0}};
    CHECK_THROWS_AS(srg_from_graph(path), NotStronglyRegular);
    auto c6 = cycle(6);  // regular, mu not constant
    try {
        srg_from_graph(c6);
        FAIL("C6 is not strongly regular");
    } catch (const NotStronglyRegular& e) {
        CHECK(e.x() != e.y());
    }
    Graph asym = {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
    CHECK_THROWS_AS(srg_from_graph(asym), NotStronglyRegular);
}

TEST_CASE("classification") {
    auto l25 = make_srg_params(25, 8, 3, 2);
    CHECK(l25.r == TowerNumber(3));
    CHECK(l25.s == TowerNumber(-2));
    CHECK(l25.m1 == 8);
    CHECK(l25.tag == latin_tag(2, 5));

    auto nl = make_srg_params(16, 5, 0, 2);
    CHECK(nl.r == TowerNumber(1));
    CHECK(nl.s == TowerNumber(-3));
    CHECK(nl.m2 == 5);
    CHECK(nl.tag == negative_latin_tag(1, 4));

    // odd v: L_{(v+1)/2}(v) and NL_{(v-1)/2}(v) coincide and are conference
    auto c25 = make_srg_params(25, 12, 5, 6);
    CHECK(c25.tag.kind == SrgKind::Conference);
    CHECK(c25.tag.aliases == std::vector<SrgTag>{latin_tag(3, 5), negative_latin_tag(2, 5)});
    CHECK(params_from_type(latin_tag(3, 5)).tag.kind == SrgKind::Conference);

    auto petersen = make_srg_params(10, 3, 0, 1);
    CHECK(petersen.tag.kind == SrgKind::Other);

    CHECK_THROWS_AS(make_srg_params(10, 3, 1, 1), InconsistentSrg);
    CHECK_THROWS_AS(make_srg_params(5, 4, 3, 0), InconsistentSrg);    // complete
    CHECK_THROWS_AS(make_srg_params(7, 3, 0, 2), InconsistentSrg);    // irrational r, s with m1 != m2
    CHECK(make_srg_params(21, 10, 4, 5).tag.kind == SrgKind::Conference);  // feasible on parameters alone
}

TEST_CASE("params from type") {
    auto l = params_from_type(latin_tag(2, 5));
    CHECK((l.n == 25 && l.k == 8 && l.lambda == 3 && l.mu == 2));
    auto nl = params_from_type(negative_latin_tag(1, 4));
    CHECK((nl.n == 16 && nl.k == 5 && nl.lambda == 0 && nl.mu == 2));
    auto k3 = params_from_type(latin_tag(1, 3));
    CHECK((k3.n == 9 && k3.k == 2 && k3.lambda == 1 && k3.mu == 0));

    CHECK_THROWS_AS(params_from_type(latin_tag(0, 5)), InfeasibleParameters);
    CHECK_THROWS_AS(params_from_type(latin_tag(6, 5)), InfeasibleParameters);         // complete graph
    CHECK_THROWS_AS(params_from_type(negative_latin_tag(1, 10)), InfeasibleParameters);  // lambda < 0
    CHECK_THROWS_AS(params_from_type(SrgTag{}), OutOfRange);

    // round trip on every tag whose multiplicities differ
    int checked = 0;
    for (long long v = 2; v <= 30; ++v) {
        for (long long g = 1; g <= v + 1; ++g) {
            for (const auto& tag : {latin_tag(g, v), negative_latin_tag(g, v)}) {
                SrgParams p;
                try {
                    p = params_from_type(tag);
                } catch (const InfeasibleParameters&) {
                    continue;
                }
                CAPTURE(tag.to_string());
                if (p.m1 == p.m2) {
                    CHECK(p.tag.kind == SrgKind::Conference);
                    continue;
                }
                CHECK(classify(p) == tag);
                if (tag.kind == SrgKind::LatinSquare) {
                    CHECK(p.r == TowerNumber(v - g));
                    CHECK(p.s == TowerNumber(-g));
                } else {
                    CHECK(p.r == TowerNumber(g));
                    CHECK(p.s == TowerNumber(g - v));
                }
                ++checked;
            }
        }
    }
    CHECK(checked > 500);
}

TEST_CASE("parameter identities and the 3-class eigenmatrix") {
    for (long long v = 3; v <= 12; ++v)
        for (long long g = 1; g <= v; ++g) {
            for (const auto& tag : {latin_tag(g, v), negative_latin_tag(g, v)}) {
                SrgParams p;
                try {
                    p = params_from_type(tag);
                } catch (const InfeasibleParameters&) {
                    continue;
                }
                CHECK(p.k * (p.k - p.lambda - 1) == (p.n - p.k - 1) * p.mu);
                CHECK(TowerNumber(p.k) + TowerNumber(p.m1) * p.r + TowerNumber(p.m2) * p.s == TowerNumber(0));
                CHECK(p.r * p.r - TowerNumber(p.lambda - p.mu) * p.r - TowerNumber(p.k - p.mu) == TowerNumber(0));
                CHECK(p.t == -p.r - TowerNumber(1));
                CHECK(verify_orthogonality(srg_scheme_eigenmatrix(p)).ok);
            }
        }

    auto e = srg_scheme_eigenmatrix(params_from_type(latin_tag(2, 5)));
    CHECK(e.exact == Matrix<TowerNumber>{{1, 8, 16}, {1, 3, -4}, {1, -2, 1}});
    CHECK(e.multiplicities == std::vector<long long>{1, 8, 16});

    auto c13 = srg_scheme_eigenmatrix(make_srg_params(13, 6, 2, 3));
    CHECK(c13.exact(1, 1) == TowerNumber::parse("(-1+sqrt(13))/2"));
    CHECK(c13.exact(2, 1) == TowerNumber::parse("(-1-sqrt(13))/2"));
    CHECK(verify_orthogonality(c13).ok);

    // complement swaps columns 1 and 2 (rows follow the r >= 0 > s convention)
    auto p = params_from_type(latin_tag(2, 5));
    auto q = complement(p);
    auto ep = srg_scheme_eigenmatrix(p), eq = srg_scheme_eigenmatrix(q);
    for (int h = 0; h < 3; ++h) {
        int hq = h == 0 ? 0 : 3 - h;
        CHECK(eq.exact(hq, 1) == ep.exact(h, 2));
        CHECK(eq.exact(hq, 2) == ep.exact(h, 1));
    }
    CHECK(q.m1 == p.m2);
}
