#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ucc/graph_zoo.hpp"
#include "ucc/stable_sets.hpp"

using namespace ucc;

namespace {

// adjacency restated straight from the product definitions
bool product_adjacent(GridKind kind, int m, int n, int i1, int j1, int i2, int j2) {
    auto path_step = [](int a, int b) { return std::abs(a - b) == 1; };
    auto cycle_step = [](int a, int b, int len) {
        int d = std::abs(a - b);
        return d == 1 || d == len - 1;
    };
    const bool i_step = kind == GridKind::grid ? path_step(i1, i2)
                                               : cycle_step(i1, i2, m);
    const bool j_step = kind == GridKind::torus ? cycle_step(j1, j2, n)
                                                : path_step(j1, j2);
    return (i1 == i2 && j_step) || (j1 == j2 && i_step);
}

int vertex_of(const BipartiteGraph& g, const std::string& label) {
    int v = g.find_label(label);
    REQUIRE(v >= 0);
    return v;
}

}  // namespace

TEST_CASE("grid(2,2) is the 4-cycle with parity classes") {
    BipartiteGraph g = generate(GridSpec::grid(2, 2));
    CHECK(g.nx == 2);
    CHECK(g.ny == 2);
    CHECK(g.edge_count() == 4);
    CHECK(g.labels[0] == "(0,0)");
    CHECK(g.labels[1] == "(1,1)");
    CHECK(g.labels[2] == "(0,1)");
    CHECK(g.labels[3] == "(1,0)");
}

TEST_CASE("cylinder(4,2) is 3-regular on 8 vertices") {
    BipartiteGraph g = generate(GridSpec::cylinder(4, 2));
    CHECK(g.vertex_count() == 8);
    CHECK(g.edge_count() == 12);
    for (int v = 0; v < 8; ++v) CHECK(g.degree(v) == 3);
}

TEST_CASE("parity refusals name the condition") {
    try {
        generate(GridSpec::cylinder(3, 2));
        FAIL("cylinder(3,2) must be refused");
    } catch (const ArgumentError& e) {
        CHECK(std::string(e.what()).find("m is even") != std::string::npos);
    }
    CHECK_THROWS_AS(generate(GridSpec::torus(4, 5)), ArgumentError);
    CHECK_THROWS_AS(generate(GridSpec::torus(3, 4)), ArgumentError);
    CHECK_THROWS_AS(generate(GridSpec::torus(4, 2)), ArgumentError);  // doubled edges
    CHECK_THROWS_AS(generate(GridSpec::moebius(4)), ArgumentError);
    CHECK_THROWS_AS(generate(GridSpec::grid(0, 3)), ArgumentError);
    CHECK_THROWS_AS(generate(GridSpec::crown(1)), ArgumentError);
}

TEST_CASE("product edge sets match the definitional adjacency predicate") {
    struct Case {
        GridSpec spec;
    } cases[] = {{GridSpec::grid(3, 4)}, {GridSpec::grid(1, 5)}, {GridSpec::cylinder(4, 3)},
                 {GridSpec::cylinder(6, 2)}, {GridSpec::torus(4, 4)}, {GridSpec::torus(4, 6)}};
    for (const auto& [spec] : cases) {
        BipartiteGraph g = generate(spec);
        REQUIRE(g.vertex_count() == spec.m * spec.n);
        for (int i1 = 0; i1 < spec.m; ++i1)
            for (int j1 = 0; j1 < spec.n; ++j1)
                for (int i2 = 0; i2 < spec.m; ++i2)
                    for (int j2 = 0; j2 < spec.n; ++j2) {
                        const int u = vertex_of(g, "(" + std::to_string(i1) + "," +
                                                       std::to_string(j1) + ")");
                        const int v = vertex_of(g, "(" + std::to_string(i2) + "," +
                                                       std::to_string(j2) + ")");
                        CHECK(g.adjacent(u, v) ==
                              product_adjacent(spec.kind, spec.m, spec.n, i1, j1, i2, j2));
                    }
    }
}

TEST_CASE("hypercube, crown and moebius shapes") {
    BipartiteGraph q3 = generate(GridSpec::hypercube(3));
    CHECK(q3.vertex_count() == 8);
    CHECK(q3.edge_count() == 12);
    for (int v = 0; v < 8; ++v) CHECK(q3.degree(v) == 3);

    BipartiteGraph cr = generate(GridSpec::crown(4));
    CHECK(cr.vertex_count() == 8);
    CHECK(cr.edge_count() == 12);
    CHECK_FALSE(cr.adjacent(vertex_of(cr, "x2"), vertex_of(cr, "y2")));
    CHECK(cr.adjacent(vertex_of(cr, "x2"), vertex_of(cr, "y0")));

    BipartiteGraph mo = generate(GridSpec::moebius(3));
    CHECK(mo.vertex_count() == 6);
    // C6 plus three rungs: K_{3,3}
    CHECK(mo.edge_count() == 9);
    for (int v = 0; v < 6; ++v) CHECK(mo.degree(v) == 3);
}

TEST_CASE("canonical_swap_map across kinds and parameters") {
    for (GridSpec spec : {GridSpec::cylinder(4, 3), GridSpec::cylinder(6, 2),
                          GridSpec::torus(4, 4), GridSpec::grid(2, 3), GridSpec::grid(3, 2),
                          GridSpec::grid(4, 4)}) {
        BipartiteGraph g = generate(spec);
        CHECK(is_swap_automorphism(g, canonical_swap_map(spec, g)));
    }

    // the cylinder map really is the +1 row shift
    GridSpec cyl = GridSpec::cylinder(4, 3);
    BipartiteGraph g = generate(cyl);
    VertexBijection f = canonical_swap_map(cyl, g);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 3; ++j) {
            const int from = vertex_of(g, "(" + std::to_string(i) + "," + std::to_string(j) + ")");
            const int to = vertex_of(g, "(" + std::to_string((i + 1) % 4) + "," +
                                            std::to_string(j) + ")");
            CHECK(f(from) == to);
        }

    BipartiteGraph odd = generate(GridSpec::grid(3, 3));
    CHECK_THROWS_AS(canonical_swap_map(GridSpec::grid(3, 3), odd), ArgumentError);
    BipartiteGraph q3 = generate(GridSpec::hypercube(3));
    CHECK_THROWS_AS(canonical_swap_map(GridSpec::hypercube(3), q3), ArgumentError);
}

TEST_CASE("neighbors of degree-2 vertices are rare") {
    DegreeTwoReport g22 = degree_two_neighbor_rare_check(generate(GridSpec::grid(2, 2)));
    CHECK(g22.degree_two_vertices == 4);
    CHECK(g22.ok());

    DegreeTwoReport g33 = degree_two_neighbor_rare_check(generate(GridSpec::grid(3, 3)));
    CHECK(g33.degree_two_vertices == 4);  // the corners
    CHECK(g33.ok());

    // all cylinder degrees are 3: vacuous
    DegreeTwoReport cyl = degree_two_neighbor_rare_check(generate(GridSpec::cylinder(4, 2)));
    CHECK(cyl.vacuous());
    CHECK(cyl.ok());
}
