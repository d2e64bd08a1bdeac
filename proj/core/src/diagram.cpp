#include "fincat/diagram.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "fincat/error.hpp"

namespace fincat {

namespace {

std::string pair_name(const FinPoset& shape, Elem p, Elem q) {
  return shape.carrier().label(p) + "<=" + shape.carrier().label(q);
}

// Elements sorted so that p < q implies p comes first.
std::vector<Elem> linear_extension(const FinPoset& shape) {
  std::vector<Elem> order(shape.size());
  std::iota(order.begin(), order.end(), Elem{0});
  std::vector<std::size_t> down(shape.size(), 0);
  for (Elem p = 0; p < shape.size(); ++p)
    for (Elem q = 0; q < shape.size(); ++q) down[p] += shape.leq(q, p);
  std::stable_sort(order.begin(), order.end(), [&](Elem a, Elem b) { return down[a] < down[b]; });
  return order;
}

} // namespace

std::optional<std::vector<FinFn>> arrows_from_covers(
    const FinPoset& shape, const std::vector<FinSet>& objects,
    const std::vector<std::pair<std::pair<Elem, Elem>, FinFn>>& cover_maps) {
  const std::size_t n = shape.size();
  std::vector<FinFn> arrows(n * n);
  std::vector<char> set(n * n, 0);
  for (Elem p = 0; p < n; ++p) {
    arrows[p * n + p] = FinFn::identity(objects[p]);
    set[p * n + p] = 1;
  }
  for (Elem q : linear_extension(shape)) {
    for (const auto& [edge, fn] : cover_maps) {
      const auto [c, target] = edge;
      if (target != q) continue;
      for (Elem p = 0; p < n; ++p) {
        if (!shape.leq(p, c)) continue;
        FinFn via = compose(fn, arrows[p * n + c]);
        if (!set[p * n + q]) {
          arrows[p * n + q] = std::move(via);
          set[p * n + q] = 1;
        } else if (!(arrows[p * n + q] == via)) {
          return std::nullopt;
        }
      }
    }
  }
  return arrows;
}

Diagram::Diagram(FinPoset shape, std::vector<FinSet> objects, std::vector<FinFn> arrows)
    : shape_(std::move(shape)), objects_(std::move(objects)), arrows_(std::move(arrows)) {
  const std::size_t n = shape_.size();
  if (objects_.size() != n) throw InvariantViolation("diagram: one object per shape element is required");
  if (arrows_.size() != n * n) throw InvariantViolation("diagram: arrow table must have n*n slots");
  for (Elem p = 0; p < n; ++p)
    for (Elem q = 0; q < n; ++q) {
      if (!shape_.leq(p, q)) continue;
      const FinFn& f = arrows_[p * n + q];
      if (!(f.dom() == objects_[p]) || !(f.cod() == objects_[q])) {
        throw InvariantViolation("diagram: arr(" + pair_name(shape_, p, q) + ") has the wrong endpoints");
      }
      if (p == q && !(f == FinFn::identity(objects_[p]))) {
        throw InvariantViolation("diagram: arr(" + pair_name(shape_, p, p) + ") is not the identity");
      }
    }
  for (Elem p = 0; p < n; ++p)
    for (Elem q = 0; q < n; ++q) {
      if (!shape_.leq(p, q)) continue;
      for (Elem r = 0; r < n; ++r) {
        if (!shape_.leq(q, r)) continue;
        if (!(compose(arrows_[q * n + r], arrows_[p * n + q]) == arrows_[p * n + r])) {
          throw InvariantViolation("diagram: arr(" + pair_name(shape_, q, r) + ") . arr(" +
                                   pair_name(shape_, p, q) + ") != arr(" + pair_name(shape_, p, r) + ")");
        }
      }
    }
}

Diagram Diagram::from_covers(FinPoset shape, std::vector<FinSet> objects,
                             const std::vector<std::pair<std::pair<Elem, Elem>, FinFn>>& cover_maps) {
  auto arrows = arrows_from_covers(shape, objects, cover_maps);
  if (!arrows) throw InvariantViolation("diagram: two chains of covering maps disagree");
  return Diagram(std::move(shape), std::move(objects), std::move(*arrows));
}

const FinFn& Diagram::arr(Elem p, Elem q) const {
  if (!shape_.leq(p, q)) throw ShapeMismatch("diagram: no arrow for unrelated elements");
  return arrows_[p * shape_.size() + q];
}

Cone::Cone(FinSet apex, Diagram diagram, std::vector<FinFn> legs)
    : apex_(std::move(apex)), diagram_(std::move(diagram)), legs_(std::move(legs)) {
  const auto& shape = diagram_.shape();
  if (legs_.size() != shape.size()) throw InvariantViolation("cone: one leg per shape element is required");
  for (Elem p = 0; p < shape.size(); ++p) {
    if (!(legs_[p].dom() == apex_) || !(legs_[p].cod() == diagram_.obj(p))) {
      throw InvariantViolation("cone: leg " + shape.carrier().label(p) + " has the wrong endpoints");
    }
  }
  for (Elem p = 0; p < shape.size(); ++p)
    for (Elem q = 0; q < shape.size(); ++q) {
      if (!shape.leq(p, q)) continue;
      if (!(compose(diagram_.arr(p, q), legs_[p]) == legs_[q])) {
        throw InvariantViolation("cone: not natural at " + pair_name(shape, p, q));
      }
    }
}

Limit limit_of_diagram(const Diagram& d) {
  const auto& shape = d.shape();
  const std::size_t n = shape.size();
  Limit lim;
  std::vector<Elem> x(n, 0);
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (k == n) {
      lim.families.push_back(x);
      return;
    }
    for (Elem v = 0; v < d.obj(k).size(); ++v) {
      bool ok = true;
      for (Elem i = 0; i < k && ok; ++i) {
        if (shape.leq(i, k) && d.arr(i, k)(x[i]) != v) ok = false;
        if (shape.leq(k, i) && d.arr(k, i)(v) != x[i]) ok = false;
      }
      if (!ok) continue;
      x[k] = v;
      go(k + 1);
    }
  };
  go(0);

  std::vector<std::string> labels;
  labels.reserve(lim.families.size());
  for (const auto& fam : lim.families) {
    std::string s = "(";
    for (Elem p = 0; p < n; ++p) {
      if (p) s += ',';
      s += d.obj(p).label(fam[p]);
    }
    s += ')';
    labels.push_back(std::move(s));
  }
  lim.carrier = FinSet(std::move(labels));
  std::vector<FinFn> legs;
  for (Elem p = 0; p < n; ++p) {
    std::vector<Elem> t;
    t.reserve(lim.families.size());
    for (const auto& fam : lim.families) t.push_back(fam[p]);
    legs.push_back(make_fn_unchecked(lim.carrier, d.obj(p), std::move(t)));
  }
  lim.cone = Cone(lim.carrier, d, std::move(legs));
  return lim;
}

FinFn cone_to_point(const Cone& c, const Limit& lim) {
  if (!(c.diagram() == lim.cone.diagram())) throw ShapeMismatch("cone_to_point: limit of a different diagram");
  std::map<std::vector<Elem>, Elem> index;
  for (Elem i = 0; i < lim.families.size(); ++i) index.emplace(lim.families[i], i);
  const std::size_t n = c.diagram().shape().size();
  std::vector<Elem> t(c.apex().size());
  std::vector<Elem> fam(n);
  for (Elem a = 0; a < c.apex().size(); ++a) {
    for (Elem p = 0; p < n; ++p) fam[p] = c.leg(p)(a);
    auto it = index.find(fam);
    if (it == index.end()) throw DefectError("cone_to_point: a natural cone produced an incompatible family");
    t[a] = it->second;
  }
  return make_fn_unchecked(c.apex(), lim.carrier, std::move(t));
}

FinFn cone_to_point(const Cone& c) { return cone_to_point(c, limit_of_diagram(c.diagram())); }

Cone point_to_cone(const FinFn& a, const Limit& lim) {
  if (!(a.cod() == lim.carrier)) throw ShapeMismatch("point_to_cone: codomain is not the limit carrier");
  std::vector<FinFn> legs;
  for (const auto& proj : lim.cone.legs()) legs.push_back(compose(proj, a));
  return Cone(a.dom(), lim.cone.diagram(), std::move(legs));
}

Cone point_to_cone(const FinFn& a, const Diagram& d) { return point_to_cone(a, limit_of_diagram(d)); }

std::vector<Diagram> enumerate_diagrams(const FinPoset& shape, std::size_t value_bound) {
  std::vector<Diagram> out;
  const std::size_t n = shape.size();
  const auto covers = shape.covers();
  for (const auto& sizes : FunctionTables(n, value_bound + 1)) {
    std::vector<FinSet> objects;
    for (auto s : sizes) objects.push_back(FinSet::canonical(s));
    std::vector<std::vector<FinFn>> choices;
    for (const auto& [p, q] : covers) choices.push_back(enumerate_fns(objects[p], objects[q]));
    std::vector<std::size_t> pick(covers.size(), 0);
    bool any = std::all_of(choices.begin(), choices.end(), [](const auto& c) { return !c.empty(); });
    while (any) {
      std::vector<std::pair<std::pair<Elem, Elem>, FinFn>> cover_maps;
      for (std::size_t i = 0; i < covers.size(); ++i) cover_maps.emplace_back(covers[i], choices[i][pick[i]]);
      if (auto arrows = arrows_from_covers(shape, objects, cover_maps)) {
        out.emplace_back(shape, objects, std::move(*arrows));
      }
      std::size_t i = covers.size();
      while (i > 0) {
        --i;
        if (++pick[i] < choices[i].size()) break;
        pick[i] = 0;
        if (i == 0) any = false;
      }
      if (covers.empty()) any = false;
    }
  }
  return out;
}

std::vector<Cone> enumerate_cones(const FinSet& apex, const Diagram& d) {
  const std::size_t n = d.shape().size();
  std::vector<std::vector<FinFn>> choices;
  for (Elem p = 0; p < n; ++p) choices.push_back(enumerate_fns(apex, d.obj(p)));
  std::vector<Cone> out;
  for (const auto& c : choices)
    if (c.empty()) return out;
  std::vector<std::size_t> pick(n, 0);
  for (;;) {
    bool natural = true;
    for (Elem p = 0; p < n && natural; ++p)
      for (Elem q = 0; q < n && natural; ++q)
        if (d.shape().leq(p, q) && !(compose(d.arr(p, q), choices[p][pick[p]]) == choices[q][pick[q]])) {
          natural = false;
        }
    if (natural) {
      std::vector<FinFn> legs;
      for (Elem p = 0; p < n; ++p) legs.push_back(choices[p][pick[p]]);
      out.emplace_back(apex, d, std::move(legs));
    }
    std::size_t i = n;
    bool done = true;
    while (i > 0) {
      --i;
      if (++pick[i] < choices[i].size()) {
        done = false;
        break;
      }
      pick[i] = 0;
    }
    if (done) break;
  }
  return out;
}

} // namespace fincat
