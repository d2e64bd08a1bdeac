#include <doctest.h>

#include "fincat/comma.hpp"
#include "fincat/diagram.hpp"
#include "fincat/error.hpp"
#include "support.hpp"

using namespace fincat;
using fincat::test::chain;

namespace {

FinSet c(std::size_t n) { return FinSet::canonical(n); }

bool isomorphic(const SynObj& x, const SynObj& y) {
  if (x.size() != y.size()) return false;
  for (const auto& h : synthetic_homs(x, y))
    if (is_order_isomorphism(h.map())) return true;
  return false;
}

// Functor shape -> FinSet underlying a fiber object over the empty base.
Diagram underlying_diagram(const SynObj& x) {
  const std::size_t n = x.size();
  std::vector<FinSet> objs;
  std::vector<FinFn> arr(n * n);
  for (Elem p = 0; p < n; ++p) objs.push_back(x.obj(p).carrier());
  for (Elem p = 0; p < n; ++p)
    for (Elem q = 0; q < n; ++q)
      if (x.shape().leq(p, q)) arr[p * n + q] = x.arr(p, q);
  return Diagram(x.shape(), std::move(objs), std::move(arr));
}

// lim(alpha) : lim D -> lim D', computed on compatible families.
FinFn limit_map(const NatTrans& alpha, const Limit& src, const Limit& dst) {
  std::vector<Elem> t;
  for (const auto& fam : src.families) {
    std::vector<Elem> image;
    for (Elem p = 0; p < fam.size(); ++p) image.push_back(alpha.component(p)(fam[p]));
    const auto it = std::find(dst.families.begin(), dst.families.end(), image);
    REQUIRE(it != dst.families.end());
    t.push_back(static_cast<Elem>(it - dst.families.begin()));
  }
  return FinFn(src.carrier, dst.carrier, std::move(t));
}

struct Enlarged {
  FinPoset apex;
  PullbackSquare<MonotoneMap> square;
};

// Adds a duplicate of the first apex element to a square.
Enlarged enlarge(const PosPullback& pb, const MonotoneMap& f, const MonotoneMap& g) {
  const std::size_t n = pb.apex.size();
  std::vector<std::uint8_t> m((n + 1) * (n + 1), 0);
  for (Elem x = 0; x <= n; ++x) m[x * (n + 1) + x] = 1;
  const FinPoset big(FinSet::canonical(n + 1), m);
  std::vector<Elem> t1(pb.proj1.table().begin(), pb.proj1.table().end());
  std::vector<Elem> t2(pb.proj2.table().begin(), pb.proj2.table().end());
  t1.push_back(t1[0]);
  t2.push_back(t2[0]);
  return {big, {f, g, MonotoneMap(big, f.dom(), t1), MonotoneMap(big, g.dom(), t2)}};
}

} // namespace

TEST_SUITE("comma") {

TEST_CASE("catalog and limits") {
  const CommaCat cat(c(1), 0);
  CHECK(cat.catalog().size() == 3);
  CHECK(cat.catalog().front() == base_identity(c(1)));
  // The empty model plus one one-point model per catalog entry.
  CHECK(cat.objects().size() == 4);
  CHECK(coslice_values(c(2), 2).size() == 5);
  CHECK_THROWS_AS(CommaCat(c(1), CommaCat::kMaxBound + 1), BoundExceeded);
  CHECK_THROWS_AS(CommaCat(c(CommaCat::kMaxBaseSize + 1), 1), BoundExceeded);
  CHECK_THROWS_AS(FiberCat(chain(5), c(1), 1), BoundExceeded);
}

TEST_CASE("objects are the isomorphism classes of decorations") {
  for (std::size_t bound = 0; bound <= 2; ++bound) {
    const CommaCat cat(c(1), bound);
    std::size_t classes = 0;
    for (const auto& shape : enumerate_posets_up_to(bound + 1)) {
      std::vector<SynObj> reps;
      for (const auto& d : enumerate_decorations(shape, c(1), cat.catalog())) {
        bool seen = false;
        for (const auto& r : reps) seen = seen || isomorphic(r, d);
        if (!seen) reps.push_back(d);
      }
      classes += reps.size();
    }
    CHECK(cat.objects().size() == classes);
    const auto objs = cat.objects();
    for (std::size_t i = 0; i < objs.size(); ++i)
      for (std::size_t k = i + 1; k < objs.size(); ++k)
        if (objs[i].size() == objs[k].size()) CHECK_FALSE(isomorphic(objs[i], objs[k]));
  }
}

TEST_CASE("the comma instance is a category and its constructions pass the checkers") {
  const CommaCat cat(c(1), 1);
  CHECK(check_category_axioms(cat).holds);
  const auto objs = cat.objects();
  std::size_t pairs = 0;
  for (const auto& x : objs)
    for (const auto& y : objs) {
      const auto hs = cat.homs(x, y);
      for (const auto& f : hs)
        for (const auto& g : hs) {
          if (auto q = cat.coequalizer(f, g)) {
            CHECK(is_coequalizer(cat, f, g, *q).holds);
            ++pairs;
          }
          const auto sq = cat.pullback(f, g);
          REQUIRE(sq.has_value());
          CHECK(is_pullback(cat, *sq).holds);
        }
    }
  CHECK(pairs > 0);
}

TEST_CASE("projection_S is a functor") {
  const CommaCat cat(c(1), 1);
  const auto objs = cat.objects();
  for (const auto& x : objs) {
    CHECK(projection_S(SynMor::identity(x)) == MonotoneMap::identity(projection_S(x)));
    for (const auto& y : objs)
      for (const auto& f : cat.homs(x, y))
        for (const auto& z : objs)
          for (const auto& g : cat.homs(y, z))
            CHECK(projection_S(compose(g, f)) == compose(projection_S(g), projection_S(f)));
  }
  CHECK(projection_S(name_embedding(base_identity(c(1)))).size() == 1);
}

TEST_CASE("morphisms over an identity shape map are identities") {
  const CommaCat cat(c(1), 2);
  for (const auto& x : cat.objects()) {
    std::size_t over_identity = 0;
    for (const auto& h : cat.homs(x, x))
      if (h.map() == MonotoneMap::identity(x.shape())) {
        ++over_identity;
        CHECK(h == SynMor::identity(x));
      }
    CHECK(over_identity == 1);
  }
}

TEST_CASE("fiber examples") {
  // One point: the coslice values themselves.
  CHECK(fiber(chain(1), c(1), 2).objects().size() == coslice_values(c(1), 2).size());
  CHECK(fiber(chain(0), c(2), 2).objects().size() == 1);
  // Commuting triangles A -> X -> Y with |A| = 1 and |X|, |Y| <= 2:
  // sum over X, Y of |X|^|A| * |Y|^|X| = 3 + 10.
  CHECK(fiber(chain(2), c(1), 2).objects().size() == 13);
  CHECK(check_category_axioms(fiber(chain(2), c(1), 1)).holds);
}

TEST_CASE("fiber matches (diagram, point of the limit) pairs") {
  const FinPoset shapes[] = {chain(1), chain(2), FinPoset::antichain(c(2)), chain(0)};
  for (const auto& shape : shapes)
    for (std::size_t a = 0; a <= 2; ++a) {
      const FiberCheck fc = fiber_as_coslice_check(shape, c(a), 2);
      CHECK(fc.passed());
      CHECK(fc.fiber_objects == fc.coslice_objects);
      CHECK(fc.strict_non_identity == 0);
    }
}

TEST_CASE("cone/point correspondence at small size") {
  const ConePointCheck r = cone_point_correspondence(2, 2, 2);
  CHECK(r.passed());
  CHECK(r.cones == r.points);
  CHECK(r.diagrams > 0);
}

TEST_CASE("cone/point bijection is natural in the diagram") {
  std::size_t squares = 0;
  for (const auto& shape : enumerate_posets_up_to(2)) {
    const FiberCat fc(shape, c(0), 2);
    const auto objs = fc.objects();
    for (const auto& x : objs)
      for (const auto& y : objs) {
        const Diagram dx = underlying_diagram(x);
        const Diagram dy = underlying_diagram(y);
        const Limit lx = limit_of_diagram(dx);
        const Limit ly = limit_of_diagram(dy);
        for (const auto& alpha : fc.homs(x, y)) {
          const FinFn la = limit_map(alpha, lx, ly);
          for (std::size_t na = 0; na <= 2; ++na)
            for (const auto& cone : enumerate_cones(c(na), dx)) {
              std::vector<FinFn> legs;
              for (Elem p = 0; p < shape.size(); ++p) legs.push_back(compose(alpha.component(p), cone.leg(p)));
              const Cone pushed(c(na), dy, std::move(legs));
              CHECK(cone_to_point(pushed, ly) == compose(la, cone_to_point(cone, lx)));
              ++squares;
            }
        }
      }
  }
  CHECK(squares > 0);
}

TEST_CASE("lifted counterexample") {
  const CommaCat cat(c(1), 3);
  const auto l = lift_counterexample(cat);
  CHECK(l.projection_matches);
  CHECK(l.square_is_pullback);
  CHECK(l.p_regular.regular);
  CHECK(l.u_prime_epi);
  CHECK_FALSE(l.u_prime_regular.regular);
  CHECK_FALSE(l.u_prime_search.regular);
  CHECK(projection_S(l.square.proj2) == l.pos.u_prime);
}

TEST_CASE("proof obligations on constant decorations") {
  const CommaCat cat(c(1), 3);
  const auto b = pos_counterexample();
  const auto kp = kernel_pair_pos(b.p);
  const SynObj k = constant_decoration(kp.apex, c(1));
  const SynObj a = constant_decoration(b.a, c(1));
  const SynObj bb = constant_decoration(b.b, c(1));
  CHECK(check_c1(cat, kp.proj1, kp.proj2, b.p, k, a, bb).holds);
  CHECK(check_c1(cat, MonotoneMap::identity(b.a), MonotoneMap::identity(b.a), MonotoneMap::identity(b.a), a, a, a)
            .holds);
  // Non-surjective "coequalizer" into a longer chain.
  const FinPoset c4 = chain(4);
  const MonotoneMap wide(b.a, c4, {0, 1, 1, 2});
  CHECK_FALSE(check_c1(cat, kp.proj1, kp.proj2, wide, k, a, constant_decoration(c4, c(1))).holds);
  // Decorations that do not commute are rejected before checking.
  const SynObj other = SynObj::constant(b.b, CoslObj(FinFn(c(1), c(2), {1})));
  CHECK_THROWS_AS(check_c1(cat, kp.proj1, kp.proj2, b.p, k, a, other), InvariantViolation);

  const auto& pb = b.pullback;
  const PullbackSquare<MonotoneMap> sq{b.p, b.i, pb.proj1, pb.proj2};
  const SynObj cc = constant_decoration(b.c, c(1));
  CHECK(check_c2(cat, sq, a, cc, bb, constant_decoration(pb.apex, c(1))).holds);
  const auto big = enlarge(pb, b.p, b.i);
  CHECK_FALSE(check_c2(cat, big.square, a, cc, bb, constant_decoration(big.apex, c(1))).holds);
}

TEST_CASE("coproducts are not preserved by the name embedding") {
  const CommaCat cat(c(1), 3);
  const auto w = coproduct_nonpreservation_witness(cat);
  CHECK(w.coslice_verified);
  CHECK(w.comma_verified);
  CHECK(w.comma.size() == 2);
  CHECK(w.name_of_coslice.size() == 1);
  CHECK_FALSE(w.preserved);
  // The witness does not depend on the bound once it fits.
  const auto w2 = coproduct_nonpreservation_witness(CommaCat(c(1), 2));
  CHECK(to_json(w2).dump() == to_json(w).dump());
}

TEST_CASE("small comma audits find nothing") {
  // Witnesses need a 4-element shape.
  CHECK(audit_regularity(CommaCat(c(1), 1)).report.clean());
  CHECK(audit_regularity(CommaCat(c(1), 2)).report.clean());
}

} // TEST_SUITE
