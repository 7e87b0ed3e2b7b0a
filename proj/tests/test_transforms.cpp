#include <doctest.h>

#include "slee/canonical.hpp"
#include "slee/errors.hpp"
#include "slee/families.hpp"
#include "slee/spectral.hpp"
#include "slee/transforms.hpp"
#include "support/oracles.hpp"

using namespace slee;

TEST_CASE("transfer moves edges and keeps the counts") {
  // G2 on 6: triangle 0,1,2 with pendants 3,4 on 0 and 5 on 1.
  const Graph g = make_g2(6);
  const std::vector<Vertex> w{5};
  const auto plan = transfer(g, 1, 0, w);
  CHECK(plan.result.order() == g.order());
  CHECK(plan.result.size() == g.size());
  CHECK(plan.result.adjacent(0, 5));
  CHECK_FALSE(plan.result.adjacent(1, 5));
  CHECK(plan.route.size() == g.size() - 1);
  CHECK(plan.source == g);
  CHECK(plan.result_connected);
  CHECK(isomorphic(plan.result, make_g1(6)));
  const auto check = check_transfer_lemma(plan);
  CHECK(check.hypotheses_hold);
  CHECK(check.delta > 0);
  CHECK_FALSE(check.contradicted);
  CHECK(check.slee_at_v == doctest::Approx(slee::slee(g)));
  CHECK(check.slee_at_u == doctest::Approx(slee::slee(make_g1(6))));
}

TEST_CASE("transfer validation") {
  const Graph g = make_g2(6);
  auto reason = [&](Vertex v, Vertex u, std::vector<Vertex> w) {
    try {
      transfer(g, v, u, w);
    } catch (const TransferError& e) {
      return e.reason();
    }
    FAIL("expected a TransferError");
    return TransferError::Reason::SameVertex;
  };
  CHECK(reason(0, 0, {3}) == TransferError::Reason::SameVertex);
  CHECK(reason(0, 1, {1}) == TransferError::Reason::TargetInSet);
  CHECK(reason(0, 1, {5}) == TransferError::Reason::NotANeighbor);
  CHECK(reason(0, 1, {2}) == TransferError::Reason::CommonNeighbor);
  CHECK(reason(0, 1, {3, 3}) == TransferError::Reason::Duplicate);
  CHECK_THROWS_AS(transfer(g, 0, 9, std::vector<Vertex>{3}), ArgumentError);
}

TEST_CASE("transfer result connectivity is computed, not assumed") {
  const Graph p = make_path(5);  // 0-1-2-3-4
  const std::vector<Vertex> w{0};
  const auto plan = transfer(p, 1, 3, w);
  CHECK(plan.result_connected);
  const std::vector<Vertex> w2{2};
  const auto cut = transfer(Graph(5, {{0, 1}, {1, 2}, {3, 4}}), 1, 3, w2);
  CHECK_FALSE(cut.result_connected);
}

TEST_CASE("transfer there and back is the identity up to isomorphism") {
  std::mt19937_64 rng(53);
  int done = 0;
  for (int trial = 0; trial < 2000 && done < 300; ++trial) {
    const int n = 4 + trial % 9;
    Graph g = oracle::random_connected(n, 0.2, rng);
    const int v = std::uniform_int_distribution<int>(0, n - 1)(rng);
    const int u = std::uniform_int_distribution<int>(0, n - 1)(rng);
    if (u == v) continue;
    std::vector<Vertex> w;
    for (int x : g.neighbors(v))
      if (x != u && !g.adjacent(x, u) && std::bernoulli_distribution(0.6)(rng)) w.push_back(x);
    if (w.empty()) continue;
    const auto there = transfer(g, v, u, w);
    const auto back = transfer(there.result, u, v, w);
    CHECK(isomorphic(back.result, g));
    CHECK(back.result == g);
    ++done;
  }
  CHECK(done == 300);
}

TEST_CASE("lemma check against an explicit route") {
  // Route: path 0-1-2-3-4 plus a fresh vertex 5 to be attached.
  // Hanging 5 at the middle beats hanging it at an end.
  const Graph route = Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  const std::vector<Vertex> w{5};
  const auto c = check_transfer_lemma(route, 0, 2, w);
  CHECK(c.vertex_verdict.relation == Dominance::StrictlyLess);
  CHECK(c.pair_verdicts.size() == 1);
  CHECK(c.pair_verdicts[0].relation == Dominance::Equal);
  CHECK(c.hypotheses_hold);
  CHECK(c.delta > 1e-9);
  CHECK(c.slee_at_v == doctest::Approx(slee::slee(make_path(6))));

  // The reverse direction fails the hypothesis and is not a contradiction.
  const auto r = check_transfer_lemma(route, 2, 0, w);
  CHECK_FALSE(r.hypotheses_hold);
  CHECK_FALSE(r.contradicted);
  CHECK(r.delta < 0);

  // w must not already hang on v or u in the route.
  CHECK_THROWS_AS(check_transfer_lemma(route, 0, 2, std::vector<Vertex>{1}), ArgumentError);
}
