#include <doctest.h>

#include "fincat/diagram.hpp"
#include "fincat/error.hpp"
#include "support.hpp"

using namespace fincat;
using fincat::test::chain;

namespace {

FinSet c(std::size_t n) { return FinSet::canonical(n); }

Diagram two_chain(std::size_t a, std::size_t b, std::vector<Elem> t) {
  std::vector<FinFn> arr(4);
  arr[0] = FinFn::identity(c(a));
  arr[1] = FinFn(c(a), c(b), std::move(t));
  arr[3] = FinFn::identity(c(b));
  return Diagram(chain(2), {c(a), c(b)}, std::move(arr));
}

} // namespace

TEST_SUITE("diagram") {

TEST_CASE("Diagram validates functoriality") {
  std::vector<FinFn> arr(4);
  arr[0] = FinFn(c(2), c(2), {1, 0});
  arr[1] = FinFn(c(2), c(1), {0, 0});
  arr[3] = FinFn::identity(c(1));
  CHECK_THROWS_AS(Diagram(chain(2), {c(2), c(1)}, arr), InvariantViolation);
  CHECK_NOTHROW(two_chain(2, 1, {0, 0}));
  CHECK_THROWS_AS(two_chain(2, 1, {0, 0}).arr(1, 0), ShapeMismatch);
}

TEST_CASE("from_covers composes along chains and detects disagreement") {
  // Square 0 < 1, 0 < 2, 1 < 3, 2 < 3.
  const std::pair<Elem, Elem> rel[] = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  const FinPoset sq(FinPreorder::generated_by(c(4), rel));
  const std::vector<FinSet> objs{c(1), c(2), c(2), c(2)};
  const FinFn pick0(c(1), c(2), {0});
  const FinFn pick1(c(1), c(2), {1});
  const FinFn id2 = FinFn::identity(c(2));
  const FinFn swap(c(2), c(2), {1, 0});
  const auto ok = Diagram::from_covers(sq, objs, {{{0, 1}, pick0}, {{0, 2}, pick1}, {{1, 3}, id2}, {{2, 3}, swap}});
  CHECK(ok.arr(0, 3) == pick0);
  CHECK_THROWS_AS(Diagram::from_covers(sq, objs, {{{0, 1}, pick0}, {{0, 2}, pick1}, {{1, 3}, id2}, {{2, 3}, id2}}),
                  InvariantViolation);
  CHECK_FALSE(arrows_from_covers(sq, objs, {{{0, 1}, pick0}, {{0, 2}, pick1}, {{1, 3}, id2}, {{2, 3}, id2}}));
}

TEST_CASE("limit examples") {
  const Diagram point(chain(1), {c(3)}, {FinFn::identity(c(3))});
  CHECK(limit_of_diagram(point).carrier.size() == 3);

  const FinPoset disc = FinPoset::antichain(c(2));
  std::vector<FinFn> arr(4);
  arr[0] = FinFn::identity(c(2));
  arr[3] = FinFn::identity(c(3));
  const Diagram prod(disc, {c(2), c(3)}, arr);
  const Limit lp = limit_of_diagram(prod);
  CHECK(lp.carrier.size() == 6);
  CHECK(lp.carrier.label(0) == "(0,0)");

  const Limit lc = limit_of_diagram(two_chain(3, 2, {0, 1, 1}));
  CHECK(lc.carrier.size() == 3);
  CHECK(lc.cone.leg(0).injective());

  const Diagram empty(chain(0), {}, {});
  CHECK(limit_of_diagram(empty).carrier.size() == 1);
}

TEST_CASE("enumerate_diagrams counts") {
  CHECK(enumerate_diagrams(chain(1), 2).size() == 3);
  // Pairs (a, b) with a function a -> b: 1 + 1 + 1 + 0 + 1 + 2 + 0 + 1 + 4.
  CHECK(enumerate_diagrams(chain(2), 2).size() == 11);
  CHECK(enumerate_diagrams(FinPoset::antichain(c(2)), 1).size() == 4);
}

TEST_CASE("the limit cone is terminal among cones with small apexes") {
  for (std::size_t n = 0; n <= 3; ++n)
    for (const auto& shape : enumerate_posets(n)) {
      if (n == 3 && shape.strict_relation_count() == 0) continue;
      for (const auto& d : enumerate_diagrams(shape, 2)) {
        const Limit lim = limit_of_diagram(d);
        for (std::size_t a = 0; a <= 2; ++a) {
          const FinSet apex = c(a);
          const auto cones = enumerate_cones(apex, d);
          CHECK(cones.size() == enumerate_fns(apex, lim.carrier).size());
          for (const auto& cone : cones) {
            std::size_t mediating = 0;
            for (const auto& m : enumerate_fns(apex, lim.carrier)) {
              bool factors = true;
              for (Elem p = 0; p < n && factors; ++p) factors = compose(lim.cone.leg(p), m) == cone.leg(p);
              mediating += factors ? 1 : 0;
            }
            CHECK(mediating == 1);
          }
        }
      }
    }
}

TEST_CASE("cone_to_point and point_to_cone") {
  const Diagram d = two_chain(2, 2, {1, 1});
  const Limit lim = limit_of_diagram(d);
  for (const auto& a : enumerate_fns(c(2), lim.carrier)) CHECK(cone_to_point(point_to_cone(a, d)) == a);
  const Diagram point(chain(1), {c(2)}, {FinFn::identity(c(2))});
  const Cone leg(c(3), point, {FinFn(c(3), c(2), {1, 0, 1})});
  CHECK(cone_to_point(leg).table()[0] == 1);
  const Cone none(c(0), d, {FinFn(c(0), c(2), {}), FinFn(c(0), c(2), {})});
  CHECK(cone_to_point(none).dom().size() == 0);
  CHECK_THROWS_AS(point_to_cone(FinFn(c(1), c(7), {0}), d), ShapeMismatch);
  CHECK_THROWS_AS(Cone(c(1), d, {FinFn(c(1), c(2), {0}), FinFn(c(1), c(2), {0})}), InvariantViolation);
}

} // TEST_SUITE
