#include "fincat/finset.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>

#include "fincat/error.hpp"

namespace fincat {

namespace {

std::shared_ptr<const std::vector<std::string>> make_canonical_labels(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return std::make_shared<const std::vector<std::string>>(std::move(labels));
}

constexpr std::size_t kInterned = 64;

} // namespace

FinSet::FinSet() : FinSet(canonical(0)) {}

FinSet::FinSet(std::vector<std::string> labels) {
  std::set<std::string_view> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) throw InvariantViolation("FinSet: duplicate label \"" + l + "\"");
  }
  labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

FinSet FinSet::canonical(std::size_t n) {
  static const auto interned = [] {
    std::array<std::shared_ptr<const std::vector<std::string>>, kInterned> table;
    for (std::size_t i = 0; i < kInterned; ++i) table[i] = make_canonical_labels(i);
    return table;
  }();
  return FinSet(n < kInterned ? interned[n] : make_canonical_labels(n));
}

std::optional<Elem> FinSet::index_of(std::string_view label) const {
  const auto& ls = *labels_;
  for (Elem i = 0; i < ls.size(); ++i) {
    if (ls[i] == label) return i;
  }
  return std::nullopt;
}

FinFn::FinFn(FinSet dom, FinSet cod, std::vector<Elem> table)
    : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {
  if (table_.size() != dom_.size()) {
    throw InvariantViolation("FinFn: table has " + std::to_string(table_.size()) +
                             " entries for a domain of size " + std::to_string(dom_.size()));
  }
  for (Elem x = 0; x < table_.size(); ++x) {
    if (table_[x] >= cod_.size()) {
      throw InvariantViolation("FinFn: entry " + std::to_string(x) + " maps to " +
                               std::to_string(table_[x]) + ", outside a codomain of size " +
                               std::to_string(cod_.size()));
    }
  }
}

FinFn FinFn::identity(const FinSet& x) {
  std::vector<Elem> t(x.size());
  std::iota(t.begin(), t.end(), Elem{0});
  return FinFn(Unchecked{}, x, x, std::move(t));
}

bool FinFn::injective() const {
  std::vector<char> hit(cod_.size(), 0);
  for (Elem y : table_) {
    if (hit[y]) return false;
    hit[y] = 1;
  }
  return true;
}

bool FinFn::surjective() const {
  std::vector<char> hit(cod_.size(), 0);
  std::size_t count = 0;
  for (Elem y : table_) {
    if (!hit[y]) {
      hit[y] = 1;
      ++count;
    }
  }
  return count == cod_.size();
}

FinFn compose(const FinFn& g, const FinFn& f) {
  if (!(f.cod() == g.dom())) throw ShapeMismatch("compose: codomain of f is not the domain of g");
  std::vector<Elem> t(f.table_.size());
  for (Elem x = 0; x < t.size(); ++x) t[x] = g.table_[f.table_[x]];
  return FinFn(FinFn::Unchecked{}, f.dom_, g.cod_, std::move(t));
}

FinFn make_fn_unchecked(FinSet dom, FinSet cod, std::vector<Elem> table) {
  return FinFn(FinFn::Unchecked{}, std::move(dom), std::move(cod), std::move(table));
}

FinRel::FinRel(FinSet dom, FinSet cod, std::vector<std::pair<Elem, Elem>> pairs)
    : dom_(std::move(dom)), cod_(std::move(cod)), pairs_(std::move(pairs)) {
  for (const auto& [x, y] : pairs_) {
    if (x >= dom_.size() || y >= cod_.size()) {
      throw InvariantViolation("FinRel: pair (" + std::to_string(x) + "," + std::to_string(y) +
                               ") lies outside dom x cod");
    }
  }
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

FinRel FinRel::graph(const FinFn& f) {
  std::vector<std::pair<Elem, Elem>> pairs;
  pairs.reserve(f.dom().size());
  for (Elem x = 0; x < f.dom().size(); ++x) pairs.emplace_back(x, f(x));
  return FinRel(f.dom(), f.cod(), std::move(pairs));
}

bool FinRel::contains(Elem x, Elem y) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), std::pair{x, y});
}

FinRel compose(const FinRel& second, const FinRel& first) {
  if (!(first.cod() == second.dom())) throw ShapeMismatch("relation composite: middle sets differ");
  std::vector<std::pair<Elem, Elem>> out;
  for (const auto& [x, y] : first.pairs()) {
    for (const auto& [y2, z] : second.pairs()) {
      if (y == y2) out.emplace_back(x, z);
    }
  }
  return FinRel(first.dom(), second.cod(), std::move(out));
}

Partition::Partition(FinSet carrier, std::span<const std::size_t> class_of)
    : carrier_(std::move(carrier)) {
  if (class_of.size() != carrier_.size()) {
    throw InvariantViolation("Partition: class_of has " + std::to_string(class_of.size()) +
                             " entries for a carrier of size " + std::to_string(carrier_.size()));
  }
  // Relabel in first-occurrence order.
  std::vector<std::pair<std::size_t, std::size_t>> seen;
  class_of_.resize(class_of.size());
  for (Elem x = 0; x < class_of.size(); ++x) {
    auto it = std::find_if(seen.begin(), seen.end(),
                           [&](const auto& kv) { return kv.first == class_of[x]; });
    if (it == seen.end()) {
      seen.emplace_back(class_of[x], seen.size());
      class_of_[x] = seen.size() - 1;
    } else {
      class_of_[x] = it->second;
    }
  }
  num_classes_ = seen.size();
}

Partition Partition::discrete(const FinSet& carrier) {
  std::vector<std::size_t> ids(carrier.size());
  std::iota(ids.begin(), ids.end(), std::size_t{0});
  return Partition(carrier, ids);
}

Partition Partition::indiscrete(const FinSet& carrier) {
  std::vector<std::size_t> ids(carrier.size(), 0);
  return Partition(carrier, ids);
}

Partition Partition::generated_by(const FinSet& carrier,
                                  std::span<const std::pair<Elem, Elem>> pairs) {
  std::vector<Elem> parent(carrier.size());
  std::iota(parent.begin(), parent.end(), Elem{0});
  auto find = [&](Elem x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [a, b] : pairs) {
    if (a >= carrier.size() || b >= carrier.size()) {
      throw ShapeMismatch("Partition::generated_by: pair outside the carrier");
    }
    Elem ra = find(a);
    Elem rb = find(b);
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  }
  std::vector<std::size_t> ids(carrier.size());
  for (Elem x = 0; x < ids.size(); ++x) ids[x] = find(x);
  return Partition(carrier, ids);
}

std::vector<std::vector<Elem>> Partition::classes() const {
  std::vector<std::vector<Elem>> out(num_classes_);
  for (Elem x = 0; x < class_of_.size(); ++x) out[class_of_[x]].push_back(x);
  return out;
}

Partition kernel_partition(const FinFn& h) { return Partition(h.dom(), h.table()); }

bool refines(const Partition& p, const Partition& q) {
  if (!(p.carrier() == q.carrier())) throw ShapeMismatch("refines: partitions live on different carriers");
  // p refines q iff the q-class is a function of the p-class.
  std::vector<std::optional<std::size_t>> target(p.num_classes());
  for (Elem x = 0; x < p.carrier().size(); ++x) {
    auto& t = target[p.class_of(x)];
    if (!t) {
      t = q.class_of(x);
    } else if (*t != q.class_of(x)) {
      return false;
    }
  }
  return true;
}

SetQuotient quotient(const Partition& p) {
  std::vector<std::string> labels(p.num_classes());
  std::vector<char> named(p.num_classes(), 0);
  for (Elem x = 0; x < p.carrier().size(); ++x) {
    auto c = p.class_of(x);
    if (!named[c]) {
      labels[c] = p.carrier().label(x);
      named[c] = 1;
    }
  }
  FinSet classes(std::move(labels));
  std::vector<Elem> table(p.class_ids().begin(), p.class_ids().end());
  return {classes, make_fn_unchecked(p.carrier(), classes, std::move(table))};
}

FinFn induced_map(const Partition& p, const Partition& q) {
  if (!refines(p, q)) throw InvariantViolation("induced_map: first partition does not refine the second");
  auto qp = quotient(p);
  auto qq = quotient(q);
  std::vector<Elem> table(p.num_classes());
  for (Elem x = 0; x < p.carrier().size(); ++x) table[p.class_of(x)] = q.class_of(x);
  return make_fn_unchecked(qp.carrier, qq.carrier, std::move(table));
}

std::string pair_label(std::string_view a, std::string_view b) {
  std::string s;
  s.reserve(a.size() + b.size() + 3);
  s += '(';
  s += a;
  s += ',';
  s += b;
  s += ')';
  return s;
}

SetPullback pullback_fn(const FinFn& f, const FinFn& g) {
  if (!(f.cod() == g.cod())) throw ShapeMismatch("pullback_fn: the two maps have different codomains");
  std::vector<std::string> labels;
  std::vector<Elem> t1;
  std::vector<Elem> t2;
  for (Elem x = 0; x < f.dom().size(); ++x) {
    for (Elem y = 0; y < g.dom().size(); ++y) {
      if (f(x) != g(y)) continue;
      labels.push_back(pair_label(f.dom().label(x), g.dom().label(y)));
      t1.push_back(x);
      t2.push_back(y);
    }
  }
  FinSet apex(std::move(labels));
  return {apex, make_fn_unchecked(apex, f.dom(), std::move(t1)),
          make_fn_unchecked(apex, g.dom(), std::move(t2))};
}

SetPullback kernel_pair(const FinFn& f) { return pullback_fn(f, f); }

SetQuotient coequalizer_fn(const FinFn& f, const FinFn& g) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod())) {
    throw ShapeMismatch("coequalizer_fn: maps are not parallel");
  }
  std::vector<std::pair<Elem, Elem>> pairs;
  pairs.reserve(f.dom().size());
  for (Elem x = 0; x < f.dom().size(); ++x) pairs.emplace_back(f(x), g(x));
  return quotient(Partition::generated_by(f.cod(), pairs));
}

std::optional<FinFn> factor_through_surjection(const FinFn& q, const FinFn& f) {
  if (!(q.dom() == f.dom())) throw ShapeMismatch("factor_through_surjection: different domains");
  constexpr Elem unset = static_cast<Elem>(-1);
  std::vector<Elem> table(q.cod().size(), unset);
  for (Elem x = 0; x < q.dom().size(); ++x) {
    Elem& slot = table[q(x)];
    if (slot == unset) {
      slot = f(x);
    } else if (slot != f(x)) {
      return std::nullopt;
    }
  }
  if (std::find(table.begin(), table.end(), unset) != table.end()) return std::nullopt;
  return make_fn_unchecked(q.cod(), f.cod(), std::move(table));
}

FnClass classify_fn(const FinFn& f) {
  FnClass c;
  c.mono = f.injective();
  c.epi = f.surjective();
  auto kp = kernel_pair(f);
  auto coeq = coequalizer_fn(kp.proj1, kp.proj2);
  auto comparison = factor_through_surjection(coeq.projection, f);
  if (!comparison) throw DefectError("classify_fn: f does not coequalize its own kernel pair");
  c.regular_epi = comparison->injective() && comparison->surjective();
  return c;
}

FunctionTables::iterator& FunctionTables::iterator::operator++() {
  // Odometer, least significant digit last.
  for (std::size_t i = cur_.size(); i-- > 0;) {
    if (++cur_[i] < m_) return *this;
    cur_[i] = 0;
  }
  done_ = true;
  return *this;
}

std::vector<FinFn> enumerate_fns(const FinSet& x, const FinSet& y) {
  std::vector<FinFn> out;
  for (const auto& t : FunctionTables(x.size(), y.size())) out.push_back(make_fn_unchecked(x, y, t));
  return out;
}

} // namespace fincat
