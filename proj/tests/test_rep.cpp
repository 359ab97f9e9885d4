#include "qhopf/rep.hpp"

#include "qhopf/expr.hpp"
#include "qhopf/hopf.hpp"
#include "qhopf/quiver.hpp"
#include "qhopf/render.hpp"
#include "qhopf/symalg.hpp"

#include <doctest.h>

using namespace qhopf;

namespace {

DoubleQuiver loop1() { return build_double(parse_quiver("vertices: v\nedges: e: v -> v")); }

DoubleQuiver a2loop() {
    return build_double(parse_quiver("vertices: v w\nedges: a: v -> w, b: v -> v"));
}

DimVector dims(std::initializer_list<int> ds) {
    DimVector l;
    l.dims = ds;
    return l;
}

RepPoly poly_of(VarId v) { return RepPoly::basis(RepMono::var(v)); }

}  // namespace

TEST_CASE("variable packing and the canonical pairing") {
    DoubleQuiver dq = a2loop();
    DartId a = dq.dart_id("a"), as = dq.dart_id("a*");
    VarId x = make_var(a, 2, 1);
    CHECK(var_dart(x) == a);
    CHECK(var_row(x) == 2);
    CHECK(var_col(x) == 1);
    CHECK(conj_var(x, dq) == make_var(as, 1, 2));
    CHECK(conj_var(conj_var(x, dq), dq) == x);
}

TEST_CASE("dimension vectors parse against the vertex list") {
    Quiver q = parse_quiver("vertices: v w\nedges: a: v -> w");
    DimVector l = parse_dims("2,1", q);
    CHECK(l.at(0) == 2);
    CHECK(l.at(1) == 1);
    CHECK_THROWS_AS(parse_dims("2", q), Error);
    CHECK_THROWS_AS(parse_dims("2,1,1", q), Error);
    CHECK_THROWS_AS(parse_dims("2,99", q), Error);
}

TEST_CASE("trace of a cycle at size one is the product of its entries") {
    DoubleQuiver dq = loop1();
    RepPoly t = trace_rep(parse_element("(e e*)", dq), dims({1}), dq);
    RepMono want = RepMono::var(make_var(dq.dart_id("e"), 1, 1))
                       .times(RepMono::var(make_var(dq.dart_id("e*"), 1, 1)));
    CHECK(t == RepPoly::basis(want));
}

TEST_CASE("trace of a single letter at size two is the matrix trace") {
    DoubleQuiver dq = loop1();
    RepPoly t = trace_rep(parse_element("(e)", dq), dims({2}), dq);
    RepPoly want;
    want.add(RepMono::var(make_var(dq.dart_id("e"), 1, 1)), HPoly::one());
    want.add(RepMono::var(make_var(dq.dart_id("e"), 2, 2)), HPoly::one());
    CHECK(t == want);
}

TEST_CASE("idempotents trace to their dimension and zero sizes kill words") {
    DoubleQuiver dq = a2loop();
    CHECK(trace_rep(parse_element("@w", dq), dims({2, 3}), dq) ==
          RepPoly::basis(RepMono::one()).scaled(HPoly(Rat(3))));
    CHECK(trace_rep(parse_element("(a a*)", dq), dims({2, 0}), dq).is_zero());
    CHECK(trace_rep(parse_element("(b)", dq), dims({0, 1}), dq).is_zero());
    // A monomial multiplies its factors' traces.
    RepPoly t = trace_rep(parse_element("@v&@v", dq), dims({2, 1}), dq);
    CHECK(t == RepPoly::basis(RepMono::one()).scaled(HPoly(Rat(4))));
}

TEST_CASE("trace respects the junction orientation across vertices") {
    DoubleQuiver dq = a2loop();
    // (a a*) at l=(1,2): junctions j0 at v (size 1), j1 at w (size 2);
    // letter a gets (M_a)_{j1 j0}, letter a* gets (M_{a*})_{j0 j1}.
    RepPoly t = trace_rep(parse_element("(a a*)", dq), dims({1, 2}), dq);
    DartId a = dq.dart_id("a"), as = dq.dart_id("a*");
    RepPoly want;
    for (int j = 1; j <= 2; ++j)
        want.add(RepMono::var(make_var(a, j, 1)).times(RepMono::var(make_var(as, 1, j))),
                 HPoly::one());
    CHECK(t == want);
}

TEST_CASE("flat star product of a canonical pair") {
    DoubleQuiver dq = loop1();
    DimVector l = dims({1});
    VarId x = make_var(dq.dart_id("e"), 1, 1);
    VarId y = conj_var(x, dq);
    RepPoly xy = classical_moyal(poly_of(x), poly_of(y), l, dq);
    RepPoly want = rep_mul(poly_of(x), poly_of(y));
    want.add(RepMono::one(), HPoly(rat(1, 2), 1));
    CHECK(xy == want);  // x*y = xy + h/2
    RepPoly yx = classical_moyal(poly_of(y), poly_of(x), l, dq);
    CHECK(xy - yx == RepPoly::basis(RepMono::one()).scaled(HPoly::h()));
}

TEST_CASE("flat star couples nothing except conjugate entries") {
    DoubleQuiver dq = a2loop();
    DimVector l = dims({2, 2});
    VarId a11 = make_var(dq.dart_id("a"), 1, 1);
    VarId as12 = make_var(dq.dart_id("a*"), 1, 2);
    // (M_{a*})_{12} pairs with (M_a)_{21}, not with (M_a)_{11}.
    RepPoly prod = classical_moyal(poly_of(a11), poly_of(as12), l, dq);
    CHECK(prod == rep_mul(poly_of(a11), poly_of(as12)));
    VarId as11 = make_var(dq.dart_id("a*"), 1, 1);
    RepPoly paired = classical_moyal(poly_of(a11), poly_of(as11), l, dq);
    RepPoly want = rep_mul(poly_of(a11), poly_of(as11));
    want.add(RepMono::one(), HPoly(rat(1, 2), 1));
    CHECK(paired == want);
}

TEST_CASE("poisson part matches the bracket of traces at size two") {
    DoubleQuiver dq = loop1();
    DimVector l = dims({2});
    SymLElement f = parse_element("(e)", dq), g = parse_element("(e*)", dq);
    RepPoly lhs = trace_rep(bracket(f, g, dq), l, dq);
    CHECK(lhs == RepPoly::basis(RepMono::one()).scaled(HPoly(Rat(2))));  // tr(1_v) = 2
    RepPoly rhs = rep_poisson(trace_rep(f, l, dq), trace_rep(g, l, dq), l, dq);
    CHECK(lhs == rhs);
}

TEST_CASE("normal ordering of a derivative past a coordinate") {
    DoubleQuiver dq = loop1();
    VarId x = make_var(dq.dart_id("e"), 1, 1);
    DiffOp xs = DiffOp::basis(DiffTerm{RepMono::var(x), RepMono::one()});
    DiffOp dx = DiffOp::basis(DiffTerm{RepMono::one(), RepMono::var(x)});
    // d x = x d + 1.
    DiffOp want = DiffOp::basis(DiffTerm{RepMono::var(x), RepMono::var(x)});
    want.add(DiffTerm{RepMono::one(), RepMono::one()}, HPoly::one());
    CHECK(diff_mul(dx, xs) == want);
    // x d stays normal ordered.
    CHECK(diff_mul(xs, dx) == DiffOp::basis(DiffTerm{RepMono::var(x), RepMono::var(x)}));
    // d^2 x^2 = x^2 d^2 + 4 x d + 2.
    DiffOp d2 = diff_mul(dx, dx);
    DiffOp x2 = diff_mul(xs, xs);
    DiffOp got = diff_mul(d2, x2);
    DiffOp expect = DiffOp::basis(DiffTerm{RepMono({{x, 2}}), RepMono({{x, 2}})});
    expect.add(DiffTerm{RepMono::var(x), RepMono::var(x)}, HPoly(Rat(4)));
    expect.add(DiffTerm{RepMono::one(), RepMono::one()}, HPoly(Rat(2)));
    CHECK(got == expect);
}

TEST_CASE("weyl symmetrization of the canonical pair products") {
    DoubleQuiver dq = loop1();
    VarId x = make_var(dq.dart_id("e"), 1, 1);
    VarId y = conj_var(x, dq);
    // xy symmetrizes to (XY + YX)/2 with Y = -h d/dx: -h x d/dx - h/2.
    RepPoly xy = rep_mul(poly_of(x), poly_of(y));
    DiffOp got = weyl_symmetrize(xy, dq);
    DiffOp want = DiffOp::basis(DiffTerm{RepMono::var(x), RepMono::var(x)})
                      .scaled(-HPoly::h());
    want.add(DiffTerm{RepMono::one(), RepMono::one()}, HPoly(rat(-1, 2), 1));
    CHECK(got == want);
}

TEST_CASE("rho orders letter atoms by height") {
    DoubleQuiver dq = loop1();
    DimVector l = dims({1});
    DartId e = dq.dart_id("e"), es = dq.dart_id("e*");
    VarId x = make_var(e, 1, 1);
    HeightedCollection asc({HeightedNecklace::cyclic({{e, 1}, {es, 2}})});
    DiffOp low_first = rho(asc, l, dq);
    // x composed before -h d/dx in normal order: -h x d/dx.
    CHECK(low_first ==
          DiffOp::basis(DiffTerm{RepMono::var(x), RepMono::var(x)}).scaled(-HPoly::h()));
    HeightedCollection desc({HeightedNecklace::cyclic({{e, 2}, {es, 1}})});
    DiffOp high_first = rho(desc, l, dq);
    DiffOp want = DiffOp::basis(DiffTerm{RepMono::var(x), RepMono::var(x)}).scaled(-HPoly::h());
    want.add(DiffTerm{RepMono::one(), RepMono::one()}, -HPoly::h());
    CHECK(high_first == want);  // -h d/dx x = -h x d/dx - h
}

TEST_CASE("rho of idempotents and inconsistent heights") {
    DoubleQuiver dq = a2loop();
    DimVector l = dims({3, 2});
    DiffOp scalar = rho(HeightedCollection({HeightedNecklace::idempotent(1)}), l, dq);
    CHECK(scalar == diff_one().scaled(HPoly(Rat(2))));
    DartId b = dq.dart_id("b");
    HeightedCollection bad({HeightedNecklace::cyclic({{b, 2}})});
    CHECK_THROWS_AS(rho(bad, l, dq), Error);
}

TEST_CASE("transport: quantized trace of the symmetrization equals weyl of the trace") {
    DoubleQuiver dq = loop1();
    DimVector l = dims({1});
    SymLElement p = parse_element("(e e*)", dq);
    DiffOp lhs = rho(phi_w(p, dq), l, dq);
    DiffOp rhs = weyl_symmetrize(trace_rep(p, l, dq), dq);
    CHECK(lhs == rhs);
    VarId x = make_var(dq.dart_id("e"), 1, 1);
    DiffOp spot = DiffOp::basis(DiffTerm{RepMono::var(x), RepMono::var(x)}).scaled(-HPoly::h());
    spot.add(DiffTerm{RepMono::one(), RepMono::one()}, HPoly(rat(-1, 2), 1));
    CHECK(lhs == spot);
    CHECK(check_transport(parse_element("(e)&(e e*)", dq), l, dq).ok);
    DoubleQuiver dq2 = a2loop();
    CHECK(check_transport(parse_element("(a a*)&(b)", dq2), dims({2, 2}), dq2).ok);
}

TEST_CASE("diagram: trace of star equals flat star of traces") {
    DoubleQuiver dq = loop1();
    SymLElement p = parse_element("(e)", dq), r = parse_element("(e*)", dq);
    CHECK(check_diagram(p, r, dims({1}), dq).ok);

    // Spot value at l=(2): both sides are tr(M_e) tr(M_{e*}) + h; the h term
    // collects h/2 from each diagonal coupling (11,11) and (22,22).
    DimVector l2 = dims({2});
    RepPoly lhs = trace_rep(star(p, r, dq), l2, dq);
    RepPoly want;
    DartId e = dq.dart_id("e"), es = dq.dart_id("e*");
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            want.add(RepMono::var(make_var(e, i, i)).times(RepMono::var(make_var(es, j, j))),
                     HPoly::one());
    want.add(RepMono::one(), HPoly::h());
    CHECK(lhs == want);
    CHECK(classical_moyal(trace_rep(p, l2, dq), trace_rep(r, l2, dq), l2, dq) == want);
}

TEST_CASE("poisson homomorphism on a two-vertex example") {
    DoubleQuiver dq = a2loop();
    DartId a = dq.dart_id("a"), as = dq.dart_id("a*"), b = dq.dart_id("b");
    Necklace f = Necklace::cyclic({a, as}, dq);
    Necklace g = Necklace::cyclic({a, as, b}, dq);
    CHECK(check_poisson_hom(f, g, dims({2, 1}), dq).ok);
    CHECK(check_poisson_hom(f, g, dims({1, 2}), dq).ok);
    CHECK(check_poisson_hom(Necklace::cyclic({b}, dq), f, dims({2, 2}), dq).ok);
}

TEST_CASE("trace rank detects the idempotent collision and clean bases") {
    DoubleQuiver dq = loop1();
    // With the idempotent included, tr(@v) is the constant l_v: dependent.
    RankReport with_idem = check_injectivity(1, dims({1}), dq, true);
    CHECK_FALSE(with_idem.independent);
    CHECK(with_idem.count == 4);
    CHECK(with_idem.rank == 3);
    RankReport l2 = check_injectivity(1, dims({2}), dq, true);
    CHECK_FALSE(l2.independent);
    // Without idempotents the degree-1 basis {1, tr e, tr e*} is free.
    RankReport clean = check_injectivity(1, dims({2}), dq, false);
    CHECK(clean.independent);
    CHECK(clean.count == 3);
    RankReport deg2 = check_injectivity(2, dims({2}), dq, false);
    CHECK(deg2.independent);
}
