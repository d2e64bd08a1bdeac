#include <doctest.h>

#include <string>

#include "fincat/comma.hpp"
#include "fincat/coslice.hpp"
#include "fincat/error.hpp"
#include "support.hpp"

using namespace fincat;
using fincat::test::chain;

namespace {

FinSet c(std::size_t n) { return FinSet::canonical(n); }

CoslObj cobj(std::size_t a, std::size_t x, std::vector<Elem> t) { return CoslObj(FinFn(c(a), c(x), std::move(t))); }

// 2-chain decorated by A -> X -> Y.
SynObj two_step(const CoslObj& lo, const FinFn& step) {
  std::vector<FinFn> arr(4);
  arr[0] = FinFn::identity(lo.carrier());
  arr[1] = step;
  arr[3] = FinFn::identity(step.cod());
  return SynObj(chain(2), lo.base(), {lo, CoslObj(compose(step, lo.arrow()))}, std::move(arr));
}

std::string message_of(auto&& body) {
  try {
    body();
  } catch (const InvariantViolation& e) {
    return e.what();
  }
  return {};
}

} // namespace

TEST_SUITE("coslice") {

TEST_CASE("coslice morphisms are commuting triangles") {
  const CoslObj x = cobj(1, 2, {0});
  const CoslObj y = cobj(1, 2, {1});
  CHECK_NOTHROW(CoslMor(x, y, FinFn(c(2), c(2), {1, 0})));
  CHECK_THROWS_AS(CoslMor(x, y, FinFn::identity(c(2))), InvariantViolation);
  CHECK(coslice_homs(x, y).size() == 2);
  CHECK(coslice_homs(x, cobj(1, 3, {2})).size() == 3);
  CHECK(coslice_homs(cobj(1, 1, {0}), cobj(2, 1, {0, 0})).empty());
  const auto id = CoslMor::identity(x);
  const CoslMor f(x, y, FinFn(c(2), c(2), {1, 1}));
  CHECK(compose(f, id) == f);
  CHECK_THROWS_AS(compose(id, f), ShapeMismatch);
}

TEST_CASE("SynObj validation names the failing equation") {
  const CoslObj lo = cobj(1, 2, {0});
  const FinFn step(c(2), c(2), {1, 1});
  CHECK_NOTHROW(two_step(lo, step));
  std::vector<FinFn> arr(4);
  arr[0] = FinFn::identity(c(2));
  arr[1] = step;
  arr[3] = FinFn::identity(c(2));
  // obj(1) must equal arr(0<=1) . obj(0).
  const std::string msg = message_of([&] { SynObj(chain(2), c(1), {lo, lo}, arr); });
  CHECK(msg.find("arr(0<=1) . obj(0) != obj(1)") != std::string::npos);
  arr[0] = FinFn(c(2), c(2), {0, 0});
  CHECK(message_of([&] { SynObj(chain(2), c(1), {lo, cobj(1, 2, {1})}, arr); }).find("identity") != std::string::npos);
}

TEST_CASE("SynObj helpers") {
  const CoslObj x = cobj(2, 2, {0, 1});
  const SynObj n = SynObj::name_of(x);
  CHECK(n.size() == 1);
  CHECK(n.shape().carrier().label(0) == "*");
  CHECK(n.obj(0) == x);
  const SynObj k = SynObj::constant(chain(3), x);
  CHECK(k.arr(0, 2) == FinFn::identity(c(2)));
  CHECK_THROWS_AS(k.arr(2, 0), ShapeMismatch);
  const MonotoneMap h(chain(2), chain(3), {0, 2});
  const SynObj r = k.reindex(h);
  CHECK(r.size() == 2);
  CHECK(r.obj(1) == x);
  CHECK_THROWS_AS(k.reindex(MonotoneMap::identity(chain(2))), ShapeMismatch);
}

TEST_CASE("SynMor strictness and composition") {
  const CoslObj lo = cobj(1, 2, {0});
  const SynObj x = two_step(lo, FinFn(c(2), c(2), {1, 1}));
  const SynObj pt = SynObj::name_of(lo);
  CHECK_NOTHROW(SynMor(pt, x, MonotoneMap(pt.shape(), chain(2), {0})));
  // obj(1) of x is a different coslice object.
  CHECK_THROWS_AS(SynMor(pt, x, MonotoneMap(pt.shape(), chain(2), {1})), InvariantViolation);
  CHECK(decorations_agree(pt, x, std::vector<Elem>{0}));
  CHECK_FALSE(decorations_agree(pt, x, std::vector<Elem>{1}));
}

TEST_CASE("strict commutation is closed under composition") {
  const CommaCat cat(c(1), 1);
  const auto objs = cat.objects();
  std::size_t composites = 0;
  for (const auto& x : objs)
    for (const auto& y : objs)
      for (const auto& f : cat.homs(x, y))
        for (const auto& z : objs)
          for (const auto& g : cat.homs(y, z)) {
            const SynMor h = compose(g, f);
            CHECK(decorations_agree(x, z, h.map().table()));
            CHECK_NOTHROW(SynMor(x, z, h.map()));
            ++composites;
          }
  CHECK(composites > 0);
}

} // TEST_SUITE
