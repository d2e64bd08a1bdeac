#include <doctest.h>

#include "fincat/error.hpp"
#include "fincat/finset.hpp"
#include "fincat/order.hpp"
#include "support.hpp"

using namespace fincat;
using fincat::test::all_fns_up_to;
using fincat::test::all_partitions;
using fincat::test::isomorphic_under;

namespace {

FinFn fn(std::size_t n, std::size_t m, std::vector<Elem> t) {
  return FinFn(FinSet::canonical(n), FinSet::canonical(m), std::move(t));
}

// Underlying function of the monotone surjection {a,b} x 2 -> 3.
FinFn p_underlying() {
  return FinFn(FinSet({"(a,0)", "(a,1)", "(b,0)", "(b,1)"}), FinSet::canonical(3), {0, 1, 1, 2});
}

} // namespace

TEST_SUITE("finset") {

TEST_CASE("FinSet rejects duplicate labels and interns canonical carriers") {
  CHECK_THROWS_AS(FinSet({"x", "x"}), InvariantViolation);
  CHECK(FinSet::canonical(3) == FinSet({"0", "1", "2"}));
  CHECK(FinSet::canonical(0).empty());
  CHECK(FinSet({"p", "q"}).index_of("q") == Elem{1});
  CHECK_FALSE(FinSet({"p"}).index_of("z").has_value());
}

TEST_CASE("FinFn validates its table") {
  CHECK_THROWS_AS(fn(2, 2, {0}), InvariantViolation);
  CHECK_THROWS_AS(fn(2, 2, {0, 2}), InvariantViolation);
  CHECK_NOTHROW(fn(0, 0, {}));
  CHECK_THROWS_AS(compose(fn(2, 2, {0, 1}), fn(1, 3, {0})), ShapeMismatch);
}

TEST_CASE("enumerate_fns counts and order") {
  CHECK(enumerate_fns(FinSet::canonical(0), FinSet::canonical(0)).size() == 1);
  CHECK(enumerate_fns(FinSet::canonical(0), FinSet::canonical(3)).size() == 1);
  CHECK(enumerate_fns(FinSet::canonical(2), FinSet::canonical(0)).empty());
  CHECK(enumerate_fns(FinSet::canonical(2), FinSet::canonical(2)).size() == 4);
  const auto fs = enumerate_fns(FinSet::canonical(3), FinSet::canonical(2));
  CHECK(fs.size() == 8);
  std::size_t surj = 0;
  for (const auto& f : fs) surj += f.surjective() ? 1 : 0;
  CHECK(surj == 6);
  for (std::size_t i = 1; i < fs.size(); ++i) CHECK(compare_tables(fs[i - 1].table(), fs[i].table()) < 0);
}

TEST_CASE("kernel_partition examples") {
  CHECK(kernel_partition(fn(3, 1, {0, 0, 0})).num_classes() == 1);
  CHECK(kernel_partition(FinFn::identity(FinSet::canonical(3))).num_classes() == 3);
  const Partition k = kernel_partition(p_underlying());
  REQUIRE(k.num_classes() == 3);
  CHECK(k.classes() == std::vector<std::vector<Elem>>{{0}, {1, 2}, {3}});
}

TEST_CASE("Partition canonicalizes class ids") {
  const std::size_t ids[] = {5, 2, 5};
  const Partition p(FinSet::canonical(3), ids);
  CHECK(std::vector<std::size_t>(p.class_ids().begin(), p.class_ids().end()) == std::vector<std::size_t>{0, 1, 0});
  const std::pair<Elem, Elem> pairs[] = {{0, 2}, {2, 3}};
  const Partition g = Partition::generated_by(FinSet::canonical(4), pairs);
  CHECK(g.num_classes() == 2);
  CHECK(g.same_class(0, 3));
}

TEST_CASE("refines examples") {
  const FinSet x = FinSet::canonical(3);
  const std::size_t coarse_ids[] = {0, 0, 1};
  const Partition coarse(x, coarse_ids);
  CHECK(refines(Partition::discrete(x), coarse));
  CHECK(refines(coarse, coarse));
  CHECK_FALSE(refines(coarse, Partition::discrete(x)));
  CHECK_THROWS_AS(refines(coarse, Partition::discrete(FinSet::canonical(2))), ShapeMismatch);
}

TEST_CASE("refines is a partial order on partitions") {
  for (std::size_t n = 0; n <= 3; ++n) {
    const auto ps = all_partitions(n);
    for (const auto& p : ps) {
      CHECK(refines(p, p));
      for (const auto& q : ps) {
        if (refines(p, q) && refines(q, p)) CHECK(p == q);
        for (const auto& r : ps)
          if (refines(p, q) && refines(q, r)) CHECK(refines(p, r));
      }
    }
  }
}

TEST_CASE("quotient examples") {
  const FinSet x = FinSet::canonical(3);
  const auto d = quotient(Partition::discrete(x));
  CHECK((d.projection.injective() && d.projection.surjective()));
  CHECK(quotient(Partition::indiscrete(x)).carrier.size() == 1);
  const auto q = quotient(kernel_partition(p_underlying()));
  CHECK(q.carrier.size() == 3);
  CHECK(isomorphic_under(q.projection, p_underlying()));
  // Labels come from the least member of each class.
  CHECK(q.carrier.label(1) == "(a,1)");
}

TEST_CASE("induced_map examples and functoriality") {
  const FinSet x = FinSet::canonical(3);
  const Partition d = Partition::discrete(x);
  const Partition top = Partition::indiscrete(x);
  CHECK(induced_map(d, d) == FinFn::identity(quotient(d).carrier));
  const FinFn c = induced_map(d, top);
  CHECK(c.dom().size() == 3);
  CHECK(c.cod().size() == 1);
  CHECK_THROWS_AS(induced_map(top, d), InvariantViolation);

  for (std::size_t n = 0; n <= 3; ++n) {
    const auto ps = all_partitions(n);
    for (const auto& p : ps)
      for (const auto& q : ps)
        for (const auto& r : ps)
          if (refines(p, q) && refines(q, r)) CHECK(compose(induced_map(q, r), induced_map(p, q)) == induced_map(p, r));
  }
}

TEST_CASE("induced_map commutes with projections for every h = f . k") {
  for (std::size_t a = 0; a <= 3; ++a)
    for (std::size_t x = 0; x <= 3; ++x)
      for (const auto& k : enumerate_fns(FinSet::canonical(a), FinSet::canonical(x)))
        for (std::size_t y = 0; y <= 2; ++y)
          for (const auto& f : enumerate_fns(FinSet::canonical(x), FinSet::canonical(y))) {
            const FinFn h = compose(f, k);
            const Partition pk = kernel_partition(k);
            const Partition ph = kernel_partition(h);
            REQUIRE(refines(pk, ph));
            CHECK(compose(induced_map(pk, ph), quotient(pk).projection) == quotient(ph).projection);
          }
}

TEST_CASE("kernel of a composite is refined by the kernel of the first map") {
  const auto fs = all_fns_up_to(3);
  for (const auto& f : fs)
    for (const auto& g : fs)
      if (f.cod() == g.dom()) CHECK(refines(kernel_partition(f), kernel_partition(compose(g, f))));
}

TEST_CASE("quotient of a kernel recovers a surjection") {
  for (const auto& f : all_fns_up_to(3))
    if (f.surjective()) CHECK(isomorphic_under(quotient(kernel_partition(f)).projection, f));
}

TEST_CASE("pullback_fn examples") {
  const FinFn f = fn(3, 2, {0, 0, 1});
  const auto id = pullback_fn(f, FinFn::identity(FinSet::canonical(2)));
  CHECK(id.apex.size() == 3);
  CHECK((id.proj1.injective() && id.proj1.surjective()));
  const auto full = pullback_fn(fn(3, 1, {0, 0, 0}), fn(2, 1, {0, 0}));
  CHECK(full.apex.size() == 6);
  CHECK(full.apex.label(1) == "(0,1)");
  CHECK_THROWS_AS(pullback_fn(f, fn(1, 3, {0})), ShapeMismatch);
}

TEST_CASE("kernel_pair examples") {
  CHECK(kernel_pair(fn(3, 2, {0, 0, 1})).apex.size() == 5);
  const auto diag = kernel_pair(fn(3, 4, {0, 3, 1}));
  CHECK(diag.apex.size() == 3);
  CHECK(diag.proj1 == diag.proj2);
  CHECK(kernel_pair(fn(3, 1, {0, 0, 0})).apex.size() == 9);
}

TEST_CASE("coequalizer_fn examples") {
  const FinFn f = fn(2, 3, {0, 2});
  const auto same = coequalizer_fn(f, f);
  CHECK((same.projection.injective() && same.projection.surjective()));
  CHECK(coequalizer_fn(fn(2, 3, {0, 1}), fn(2, 3, {1, 2})).carrier.size() == 1);
  CHECK_THROWS_AS(coequalizer_fn(f, fn(2, 2, {0, 1})), ShapeMismatch);
}

TEST_CASE("coequalizer of the kernel pair of a surjection is that surjection") {
  for (const auto& f : all_fns_up_to(3)) {
    if (!f.surjective()) continue;
    const auto kp = kernel_pair(f);
    CHECK(isomorphic_under(coequalizer_fn(kp.proj1, kp.proj2).projection, f));
  }
}

TEST_CASE("classify_fn examples and epi iff regular epi") {
  CHECK(classify_fn(FinFn::identity(FinSet::canonical(2))) == FnClass{true, true, true});
  const FnClass inc = classify_fn(fn(1, 2, {0}));
  CHECK(inc.mono);
  CHECK_FALSE(inc.epi);
  for (const auto& f : all_fns_up_to(3)) {
    const FnClass c = classify_fn(f);
    CHECK(c.epi == f.surjective());
    CHECK(c.mono == f.injective());
    CHECK(c.epi == c.regular_epi);
  }
}

TEST_CASE("factor_through_surjection") {
  const FinFn q = fn(3, 2, {0, 0, 1});
  const auto m = factor_through_surjection(q, fn(3, 3, {2, 2, 0}));
  REQUIRE(m.has_value());
  CHECK(m->table()[0] == 2);
  CHECK_FALSE(factor_through_surjection(q, fn(3, 3, {0, 1, 1})).has_value());
}

TEST_CASE("relations compose and graphs embed functions") {
  const FinFn f = fn(2, 3, {1, 2});
  const FinFn g = fn(3, 2, {0, 0, 1});
  CHECK(compose(FinRel::graph(g), FinRel::graph(f)) == FinRel::graph(compose(g, f)));
  CHECK_THROWS_AS(FinRel(FinSet::canonical(1), FinSet::canonical(1), {{0, 1}}), InvariantViolation);
  const FinRel r(FinSet::canonical(2), FinSet::canonical(2), {{1, 0}, {0, 1}, {1, 0}});
  CHECK(r.pairs().size() == 2);
  CHECK(r.contains(0, 1));
}

} // TEST_SUITE
