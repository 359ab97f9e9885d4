#include "qhopf/cutglue.hpp"

#include "qhopf/quiver.hpp"

#include <doctest.h>

#include <set>
#include <vector>

using namespace qhopf;

namespace {

DoubleQuiver loop1() { return build_double(parse_quiver("vertices: v\nedges: e: v -> v")); }

DoubleQuiver a2() { return build_double(parse_quiver("vertices: v w\nedges: a: v -> w")); }

long long pairings_of(int n, int m) {
    // sum_k C(n,k) C(m,k) k!
    long long total = 0;
    for (int k = 0; k <= std::min(n, m); ++k) {
        Int c = binomial(n, k) * binomial(m, k) * factorial(static_cast<unsigned>(k));
        total += c.convert_to<long long>();
    }
    return total;
}

}  // namespace

TEST_CASE("edge sets flatten letter positions and skip idempotents") {
    DoubleQuiver dq = loop1();
    DartId e = dq.dart_id("e"), es = dq.dart_id("e*");
    std::vector<Necklace> fs{Necklace::idempotent(0), Necklace::cyclic({e, es}, dq)};
    EdgeSet set = EdgeSet::of(fs);
    REQUIRE(set.count() == 2);
    CHECK(set.dart[0] == e);
    CHECK(set.dart[1] == es);
    CHECK(set.factor[0] == 1);
    CHECK(set.next[0] == 1);
    CHECK(set.next[1] == 0);
}

TEST_CASE("successor steps cyclically and detours through partners") {
    DoubleQuiver dq = loop1();
    DartId e = dq.dart_id("e"), es = dq.dart_id("e*");
    std::vector<Necklace> fs{Necklace::cyclic({e, es}, dq)};
    EdgeSet set = EdgeSet::of(fs);
    std::vector<int> unmatched{-1, -1};
    CHECK(successor(set, unmatched, 0) == 1);
    CHECK(successor(set, unmatched, 1) == 0);
    // Fully matched swap: each position detours back to itself.
    std::vector<int> swapped{1, 0};
    CHECK(successor(set, swapped, 0) == 0);
    CHECK(successor(set, swapped, 1) == 1);
}

TEST_CASE("matching enumeration is channel-by-channel with the empty matching first") {
    DoubleQuiver dq = loop1();
    DartId e = dq.dart_id("e"), es = dq.dart_id("e*");

    // One e and one e* inside a single word: 2 internal matchings.
    EdgeSet one = EdgeSet::of(std::vector<Necklace>{Necklace::cyclic({e, es}, dq)});
    auto ms = enumerate_internal_matchings(one, dq);
    REQUIRE(ms.size() == 2);
    CHECK(ms[0].size() == 0);
    REQUIRE(ms[1].size() == 1);
    CHECK(ms[1].pairs[0] == std::pair<int, int>{0, 1});

    // Two e's and two e*'s: 1 + 4 + 2 = 7.
    EdgeSet two = EdgeSet::of(std::vector<Necklace>{Necklace::cyclic({e, e, es, es}, dq)});
    CHECK(enumerate_internal_matchings(two, dq).size() == pairings_of(2, 2));

    // Across a product (e e*) x (e e*): each dart gives one 1x1 channel.
    std::vector<Necklace> both{Necklace::cyclic({e, es}, dq), Necklace::cyclic({e, es}, dq)};
    EdgeSet prod = EdgeSet::of(both);
    auto pm = enumerate_pair_matchings(prod, 2, dq);
    CHECK(pm.size() == 4);  // {} , e->e*, e*->e, both
    CHECK(pm[0].size() == 0);
    // Every pair joins a left position to a right position of the reverse dart.
    for (const Matching& m : pm)
        for (auto [x, y] : m.pairs) {
            CHECK(x < 2);
            CHECK(y >= 2);
            CHECK(prod.dart[static_cast<std::size_t>(y)] ==
                  dq.reverse(prod.dart[static_cast<std::size_t>(x)]));
        }
}

TEST_CASE("matching counts follow the binomial-factorial formula") {
    DoubleQuiver dq = loop1();
    DartId e = dq.dart_id("e"), es = dq.dart_id("e*");
    // (e e e*) x (e e* e*): left has 2 e / 1 e*, right has 1 e / 2 e*.
    std::vector<Necklace> fs{Necklace::cyclic({e, e, es}, dq),
                             Necklace::cyclic({e, es, es}, dq)};
    EdgeSet set = EdgeSet::of(fs);
    auto pm = enumerate_pair_matchings(set, 3, dq);
    // e-channel pairs left e's with right e*'s (2x2), e*-channel left e*'s
    // with right e's (1x1): 7 * 2 = 14.
    CHECK(static_cast<long long>(pm.size()) == pairings_of(2, 2) * pairings_of(1, 1));

    std::set<std::vector<std::pair<int, int>>> distinct;
    for (const Matching& m : pm) distinct.insert(m.pairs);
    CHECK(distinct.size() == pm.size());
}

TEST_CASE("gluing a fully matched pair of single letters gives an idempotent") {
    DoubleQuiver dq = loop1();
    DartId e = dq.dart_id("e"), es = dq.dart_id("e*");
    NecklaceMonomial left = NecklaceMonomial::single(Necklace::cyclic({e}, dq));
    NecklaceMonomial right = NecklaceMonomial::single(Necklace::cyclic({es}, dq));
    Matching m{{{0, 1}}};
    GlueResult g = cut_and_glue_pair(left, right, m, dq);
    REQUIRE(g.factors.size() == 1);
    CHECK(g.factors[0] == Necklace::idempotent(0));
    CHECK(g.cut_count == 1);
    CHECK(g.orbit_count == 1);
    CHECK(g.orbit_of[0] == 0);
    CHECK(g.orbit_of[1] == 0);
}

TEST_CASE("gluing the swap matching inside one word gives two idempotents") {
    DoubleQuiver dq = loop1();
    DartId e = dq.dart_id("e"), es = dq.dart_id("e*");
    NecklaceMonomial mono = NecklaceMonomial::single(Necklace::cyclic({e, es}, dq));
    Matching m{{{0, 1}}};
    GlueResult g = cut_and_glue_internal(mono, m, dq);
    REQUIRE(g.factors.size() == 2);
    CHECK(g.factors[0] == Necklace::idempotent(0));
    CHECK(g.factors[1] == Necklace::idempotent(0));
    CHECK(g.orbit_of[0] != g.orbit_of[1]);
}

TEST_CASE("gluing across a product splices the words") {
    DoubleQuiver dq = a2();
    DartId a = dq.dart_id("a"), as = dq.dart_id("a*");
    NecklaceMonomial left = NecklaceMonomial::single(Necklace::cyclic({a, as}, dq));
    NecklaceMonomial right = NecklaceMonomial::single(Necklace::cyclic({a, as}, dq));
    // Match the a at left position 0 with the a* at right position 3.
    Matching m{{{0, 3}}};
    GlueResult g = cut_and_glue_pair(left, right, m, dq);
    REQUIRE(g.factors.size() == 1);
    CHECK(g.factors[0] == Necklace::cyclic({a, as}, dq));
    CHECK(g.orbit_count == 1);
}

TEST_CASE("an internal cut splits one necklace into a product") {
    DoubleQuiver dq = loop1();
    DartId e = dq.dart_id("e"), es = dq.dart_id("e*");
    NecklaceMonomial mono = NecklaceMonomial::single(Necklace::cyclic({e, e, es, es}, dq));
    // Match the e at position 1 with the e* at position 3: the cycle falls
    // apart into the orbits {0,1} and {2,3}.
    GlueResult g = cut_and_glue_internal(mono, Matching{{{1, 3}}}, dq);
    REQUIRE(g.factors.size() == 2);
    NecklaceMonomial want({Necklace::cyclic({e}, dq), Necklace::cyclic({es}, dq)});
    CHECK(g.monomial() == want);
    // Matching position 1 with the adjacent e* keeps one long orbit and
    // leaves the all-matched orbit {2} as an idempotent.
    GlueResult g2 = cut_and_glue_internal(mono, Matching{{{1, 2}}}, dq);
    NecklaceMonomial want2({Necklace::cyclic({e, es}, dq), Necklace::idempotent(0)});
    CHECK(g2.monomial() == want2);
}

TEST_CASE("idempotent factors ride through gluing untouched") {
    DoubleQuiver dq = loop1();
    DartId e = dq.dart_id("e"), es = dq.dart_id("e*");
    NecklaceMonomial left({Necklace::idempotent(0), Necklace::cyclic({e}, dq)});
    NecklaceMonomial right = NecklaceMonomial::single(Necklace::cyclic({es}, dq));
    Matching m{{{0, 1}}};
    GlueResult g = cut_and_glue_pair(left, right, m, dq);
    NecklaceMonomial got = g.monomial();
    NecklaceMonomial want({Necklace::idempotent(0), Necklace::idempotent(0)});
    CHECK(got == want);
}
