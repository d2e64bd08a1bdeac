#include <doctest.h>

#include <atomic>

#include "fincat/counterexample.hpp"
#include "fincat/enumcat.hpp"
#include "fincat/error.hpp"
#include "fincat/instances.hpp"
#include "fincat/parallel.hpp"
#include "support.hpp"

using namespace fincat;
using fincat::test::isomorphic_under;
using fincat::test::order_isomorphic_under;

namespace {

FinFn fn(std::size_t n, std::size_t m, std::vector<Elem> t) {
  return FinFn(FinSet::canonical(n), FinSet::canonical(m), std::move(t));
}

} // namespace

TEST_SUITE("enumcat") {

TEST_CASE("instances satisfy the category axioms at bound") {
  CHECK(check_category_axioms(FinSetCat(2)).holds);
  CHECK(check_category_axioms(FinPosCat(3)).holds);
  CHECK(check_category_axioms(CosliceCat(FinSet::canonical(2), 2)).holds);
}

TEST_CASE("is_coequalizer examples") {
  const FinSetCat cat(3);
  const FinFn f = fn(1, 3, {0});
  const FinFn g = fn(1, 3, {2});
  CHECK(is_coequalizer(cat, f, g, coequalizer_fn(f, g).projection).holds);
  const Verdict not_surj = is_coequalizer(cat, f, g, fn(3, 3, {0, 1, 0}));
  CHECK_FALSE(not_surj.holds);
  CHECK_FALSE(not_surj.reason.empty());
  CHECK(is_coequalizer(cat, f, f, FinFn::identity(FinSet::canonical(3))).holds);
  CHECK_FALSE(is_coequalizer(cat, f, g, FinFn::identity(FinSet::canonical(3))).holds);
}

TEST_CASE("is_pullback examples") {
  const FinSetCat cat(3);
  const FinFn f = fn(3, 2, {0, 0, 1});
  const FinFn g = fn(2, 2, {1, 0});
  const auto pb = pullback_fn(f, g);
  CHECK(is_pullback(cat, PullbackSquare<FinFn>{f, g, pb.proj1, pb.proj2}).holds);

  // Enlarge the apex by a copy of its first element: the square still
  // commutes but mediating maps stop being unique.
  std::vector<Elem> t1(pb.proj1.table().begin(), pb.proj1.table().end());
  std::vector<Elem> t2(pb.proj2.table().begin(), pb.proj2.table().end());
  t1.push_back(t1[0]);
  t2.push_back(t2[0]);
  const FinSet big = FinSet::canonical(t1.size());
  const PullbackSquare<FinFn> enlarged{f, g, FinFn(big, f.dom(), t1), FinFn(big, g.dom(), t2)};
  CHECK_FALSE(is_pullback(cat, enlarged).holds);

  const FinFn id = FinFn::identity(FinSet::canonical(2));
  CHECK(is_pullback(cat, PullbackSquare<FinFn>{id, id, id, id}).holds);
  CHECK_THROWS_AS(is_pullback(cat, PullbackSquare<FinFn>{id, g, id, id}), InvariantViolation);
}

TEST_CASE("constructions pass their checkers (soundness)") {
  const FinSetCat sets(3);
  for (std::size_t n = 0; n <= 2; ++n)
    for (std::size_t m = 0; m <= 2; ++m) {
      const auto hs = enumerate_fns(FinSet::canonical(n), FinSet::canonical(m));
      for (const auto& f : hs)
        for (const auto& g : hs) CHECK(is_coequalizer(sets, f, g, coequalizer_fn(f, g).projection).holds);
    }
  const auto fns = fincat::test::all_fns_up_to(2);
  for (const auto& f : fns)
    for (const auto& g : fns) {
      if (!(f.cod() == g.cod())) continue;
      const auto pb = pullback_fn(f, g);
      CHECK(is_pullback(sets, PullbackSquare<FinFn>{f, g, pb.proj1, pb.proj2}).holds);
    }

  const FinPosCat posets(3);
  const auto ps = enumerate_posets_up_to(2);
  for (const auto& x : ps)
    for (const auto& y : ps)
      for (const auto& z : ps)
        for (const auto& f : enumerate_monotone(x, z))
          for (const auto& g : enumerate_monotone(y, z)) {
            const auto pb = pullback_pos(f, g);
            CHECK(is_pullback(posets, PullbackSquare<MonotoneMap>{f, g, pb.proj1, pb.proj2}).holds);
          }
}

TEST_CASE("accepted coequalizers are the constructed ones (completeness at bound)") {
  const FinSetCat sets(3);
  for (std::size_t n = 0; n <= 2; ++n)
    for (std::size_t m = 0; m <= 2; ++m) {
      const auto hs = enumerate_fns(FinSet::canonical(n), FinSet::canonical(m));
      for (const auto& f : hs)
        for (const auto& g : hs) {
          const FinFn built = coequalizer_fn(f, g).projection;
          for (std::size_t z = 0; z <= 2; ++z)
            for (const auto& q : enumerate_fns(FinSet::canonical(m), FinSet::canonical(z)))
              if (is_coequalizer(sets, f, g, q).holds) CHECK(isomorphic_under(built, q));
        }
    }

  const FinPosCat posets(3);
  const auto ps = enumerate_posets_up_to(2);
  for (const auto& x : ps)
    for (const auto& y : ps) {
      const auto hs = enumerate_monotone(x, y);
      for (const auto& f : hs)
        for (const auto& g : hs) {
          const MonotoneMap built = coequalizer_pos(f, g).projection;
          for (const auto& z : ps)
            for (const auto& q : enumerate_monotone(y, z))
              if (is_coequalizer(posets, f, g, q).holds) CHECK(order_isomorphic_under(built, q));
        }
    }
}

TEST_CASE("is_epi_in and is_regular_epi_in") {
  const FinSetCat sets(3);
  for (const auto& f : fincat::test::all_fns_up_to(3)) {
    CHECK(is_epi_in(sets, f).holds == f.surjective());
    if (f.surjective()) {
      CHECK(is_regular_epi_in(sets, f).regular);
      CHECK(is_regular_epi_in(sets, f, RegularEpiMethod::parallel_pair_search).regular);
    }
  }
  const auto b = pos_counterexample();
  const FinPosCat posets(4);
  const auto rk = is_regular_epi_in(posets, b.u_prime);
  CHECK_FALSE(rk.regular);
  CHECK(rk.method == RegularEpiMethod::kernel_pair);
  const auto rs = is_regular_epi_in(posets, b.u_prime, RegularEpiMethod::parallel_pair_search);
  CHECK_FALSE(rs.regular);
  CHECK(rs.pairs_examined > 0);
  CHECK(is_regular_epi_in(posets, b.p).regular);
  CHECK(is_regular_epi_in(posets, MonotoneMap::identity(b.b)).regular);
  CHECK(is_regular_epi_in(sets, FinFn::identity(FinSet::canonical(2))).regular);
}

TEST_CASE("audits: clean for sets, witness for posets") {
  const auto s = audit_regularity(FinSetCat(3));
  CHECK(s.report.clean());
  CHECK(s.report.checks.regular_epi_pullback_stable);
  CHECK(s.report.verdict() == "no violation up to bound 3");
  CHECK(s.report.scanned.squares > 0);

  const auto p = audit_regularity(FinPosCat(4));
  REQUIRE_FALSE(p.report.clean());
  CHECK(p.report.verdict() == "violation found at bound 4");
  REQUIRE(p.square.has_value());
  CHECK(classify_pos(p.square->f).regular_epi);
  CHECK(classify_pos(p.square->proj2) == PosClass{true, false});
  // Isomorphic to the hand-built square.
  const auto b = pos_counterexample();
  CHECK(are_isomorphic(p.square->f.dom(), b.a));
  CHECK(are_isomorphic(p.square->g.dom(), b.c));
  CHECK(are_isomorphic(p.square->proj2.dom(), b.pullback.apex));
  CHECK((*p.report.witness)["kind"] == "unstable_regular_epi");
}

TEST_CASE("audit reports are deterministic and thread-independent") {
  const std::string one = audit_regularity(FinPosCat(4), {1, true}).report.to_json().dump();
  CHECK(audit_regularity(FinPosCat(4), {1, true}).report.to_json().dump() == one);
  CHECK(audit_regularity(FinPosCat(4), {3, true}).report.to_json().dump() == one);
  const std::string s1 = audit_regularity(FinSetCat(3), {1, true}).report.to_json().dump();
  CHECK(audit_regularity(FinSetCat(3), {4, true}).report.to_json().dump() == s1);
}

TEST_CASE("Pos audits are clean below bound 4") {
  CHECK(audit_regularity(FinSetCat(1)).report.clean());
  CHECK(audit_regularity(FinSetCat(2)).report.clean());
  CHECK(audit_regularity(FinPosCat(2)).report.clean());
  CHECK(audit_regularity(FinPosCat(3)).report.clean());
  CHECK_FALSE(audit_regularity(FinPosCat(4)).report.clean());
}

TEST_CASE("report JSON layout") {
  const Json j = audit_regularity(FinSetCat(2)).report.to_json();
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"instance", "bound", "checks", "verdict", "witness", "scanned"});
  CHECK(j["witness"].is_null());
  const Json c = audit_regularity(CosliceCat(FinSet::canonical(1), 2)).report.to_json();
  CHECK(c["parameters"]["base_size"] == 1);
}

TEST_CASE("parallel_for covers every index and rethrows") {
  std::vector<std::atomic<int>> hits(100);
  parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i].fetch_add(1); });
  for (const auto& h : hits) CHECK(h.load() == 1);
  CHECK_THROWS_AS(parallel_for(10, 3,
                               [](std::size_t i) {
                                 if (i == 7) throw DefectError("boom");
                               }),
                  DefectError);
  parallel_for(0, 2, [](std::size_t) { FAIL("no work expected"); });
}

} // TEST_SUITE

// Registered as its own ctest entry; the bound 5 scan takes most of a minute.
TEST_SUITE("slow") {

TEST_CASE("the bound 4 Pos witness is reproduced verbatim at bound 5") {
  const auto w4 = audit_regularity(FinPosCat(4)).report.witness;
  const auto w5 = audit_regularity(FinPosCat(5)).report.witness;
  REQUIRE(w4.has_value());
  REQUIRE(w5.has_value());
  CHECK(w4->dump() == w5->dump());
}

} // TEST_SUITE
