#include "fincat/order.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <mutex>
#include <numeric>
#include <set>
#include <tuple>

#include "fincat/error.hpp"

namespace fincat {

namespace {

// Reflexive-transitive closure by repeated boolean squaring.
std::vector<std::uint8_t> close_by_squaring(std::size_t n, std::vector<std::uint8_t> m) {
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1;
  for (;;) {
    std::vector<std::uint8_t> sq(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        if (!m[i * n + k]) continue;
        for (std::size_t j = 0; j < n; ++j) sq[i * n + j] |= m[k * n + j];
      }
    }
    if (sq == m) return m;
    m = std::move(sq);
  }
}

bool transitive(std::size_t n, std::span<const std::uint8_t> m) {
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (m[x * n + y])
        for (std::size_t z = 0; z < n; ++z)
          if (m[y * n + z] && !m[x * n + z]) return false;
  return true;
}

} // namespace

FinPreorder::FinPreorder(FinSet carrier, std::vector<std::uint8_t> matrix)
    : carrier_(std::move(carrier)), leq_(std::move(matrix)) {
  const std::size_t n = carrier_.size();
  if (leq_.size() != n * n) {
    throw InvariantViolation("leq matrix has " + std::to_string(leq_.size()) + " entries, expected " +
                             std::to_string(n * n));
  }
  for (auto v : leq_) {
    if (v > 1) throw InvariantViolation("leq matrix entries must be 0 or 1");
  }
  for (Elem x = 0; x < n; ++x) {
    if (!leq(x, x)) throw InvariantViolation("leq not reflexive at " + carrier_.label(x));
  }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (leq(x, y))
        for (Elem z = 0; z < n; ++z)
          if (leq(y, z) && !leq(x, z)) {
            throw InvariantViolation("leq not transitive: " + carrier_.label(x) + " <= " +
                                     carrier_.label(y) + " <= " + carrier_.label(z) + " but not " +
                                     carrier_.label(x) + " <= " + carrier_.label(z));
          }
}

FinPreorder FinPreorder::generated_by(const FinSet& carrier,
                                      std::span<const std::pair<Elem, Elem>> pairs) {
  const std::size_t n = carrier.size();
  std::vector<std::uint8_t> m(n * n, 0);
  for (const auto& [x, y] : pairs) {
    if (x >= n || y >= n) throw ShapeMismatch("FinPreorder::generated_by: pair outside the carrier");
    m[x * n + y] = 1;
  }
  return FinPreorder(Unchecked{}, carrier, close_by_squaring(n, std::move(m)));
}

FinPreorder FinPreorder::discrete(const FinSet& carrier) {
  return generated_by(carrier, {});
}

bool FinPreorder::is_antisymmetric() const {
  for (Elem x = 0; x < size(); ++x)
    for (Elem y = x + 1; y < size(); ++y)
      if (leq(x, y) && leq(y, x)) return false;
  return true;
}

std::size_t FinPreorder::strict_relation_count() const {
  std::size_t c = 0;
  for (Elem x = 0; x < size(); ++x)
    for (Elem y = 0; y < size(); ++y)
      if (x != y && leq(x, y)) ++c;
  return c;
}

FinPreorder make_preorder_unchecked(FinSet carrier, std::vector<std::uint8_t> leq) {
  return FinPreorder(FinPreorder::Unchecked{}, std::move(carrier), std::move(leq));
}

FinPoset::FinPoset(FinPreorder order) : FinPreorder(std::move(order)) {
  for (Elem x = 0; x < size(); ++x)
    for (Elem y = x + 1; y < size(); ++y)
      if (leq(x, y) && leq(y, x)) {
        throw InvariantViolation("leq not antisymmetric: " + carrier_.label(x) + " <= " +
                                 carrier_.label(y) + " <= " + carrier_.label(x));
      }
}

FinPoset::FinPoset(FinSet carrier, std::vector<std::uint8_t> leq)
    : FinPoset(FinPreorder(std::move(carrier), std::move(leq))) {}

FinPoset FinPoset::chain(const FinSet& carrier) {
  const std::size_t n = carrier.size();
  std::vector<std::uint8_t> m(n * n, 0);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = x; y < n; ++y) m[x * n + y] = 1;
  return FinPoset(make_preorder_unchecked(carrier, std::move(m)));
}

FinPoset FinPoset::antichain(const FinSet& carrier) {
  return FinPoset(FinPreorder::discrete(carrier));
}

std::vector<std::pair<Elem, Elem>> FinPoset::covers() const {
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem x = 0; x < size(); ++x)
    for (Elem y = 0; y < size(); ++y) {
      if (!less(x, y)) continue;
      bool between = false;
      for (Elem z = 0; z < size() && !between; ++z) between = less(x, z) && less(z, y);
      if (!between) out.emplace_back(x, y);
    }
  return out;
}

bool is_monotone(const FinPreorder& dom, const FinPreorder& cod, std::span<const Elem> table) {
  if (table.size() != dom.size()) return false;
  for (Elem y : table)
    if (y >= cod.size()) return false;
  for (Elem x = 0; x < dom.size(); ++x)
    for (Elem y = 0; y < dom.size(); ++y)
      if (dom.leq(x, y) && !cod.leq(table[x], table[y])) return false;
  return true;
}

MonotoneMap::MonotoneMap(FinPreorder dom, FinPreorder cod, std::vector<Elem> table)
    : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {
  if (table_.size() != dom_.size()) {
    throw InvariantViolation("monotone map: table has " + std::to_string(table_.size()) +
                             " entries for a domain of size " + std::to_string(dom_.size()));
  }
  for (Elem x = 0; x < table_.size(); ++x) {
    if (table_[x] >= cod_.size()) {
      throw InvariantViolation("monotone map: entry " + std::to_string(x) + " is outside the codomain");
    }
  }
  for (Elem x = 0; x < dom_.size(); ++x)
    for (Elem y = 0; y < dom_.size(); ++y)
      if (dom_.leq(x, y) && !cod_.leq(table_[x], table_[y])) {
        throw InvariantViolation("map not monotone: " + dom_.carrier().label(x) + " <= " +
                                 dom_.carrier().label(y) + " but images " +
                                 cod_.carrier().label(table_[x]) + ", " +
                                 cod_.carrier().label(table_[y]) + " are not ordered");
      }
}

MonotoneMap MonotoneMap::identity(const FinPreorder& x) {
  std::vector<Elem> t(x.size());
  std::iota(t.begin(), t.end(), Elem{0});
  return MonotoneMap(Unchecked{}, x, x, std::move(t));
}

FinFn MonotoneMap::underlying() const {
  return make_fn_unchecked(dom_.carrier(), cod_.carrier(), table_);
}

MonotoneMap make_monotone_unchecked(FinPreorder dom, FinPreorder cod, std::vector<Elem> table) {
  return MonotoneMap(MonotoneMap::Unchecked{}, std::move(dom), std::move(cod), std::move(table));
}

MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
  if (!(f.cod() == g.dom())) throw ShapeMismatch("compose: codomain of f is not the domain of g");
  std::vector<Elem> t(f.dom().size());
  for (Elem x = 0; x < t.size(); ++x) t[x] = g(f(x));
  return make_monotone_unchecked(f.dom(), g.cod(), std::move(t));
}

bool is_order_isomorphism(const MonotoneMap& f) {
  if (f.dom().size() != f.cod().size()) return false;
  if (!f.underlying().injective()) return false;
  for (Elem x = 0; x < f.dom().size(); ++x)
    for (Elem y = 0; y < f.dom().size(); ++y)
      if (f.cod().leq(f(x), f(y)) && !f.dom().leq(x, y)) return false;
  return true;
}

std::string class_label(const FinSet& carrier, std::span<const Elem> members) {
  std::vector<std::string_view> ls;
  ls.reserve(members.size());
  for (Elem m : members) ls.emplace_back(carrier.label(m));
  std::sort(ls.begin(), ls.end());
  std::string out;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (i) out += '=';
    out += ls[i];
  }
  return out;
}

namespace {

FinSet labelled_classes(const Partition& p) {
  std::vector<std::string> labels;
  for (const auto& members : p.classes()) labels.push_back(class_label(p.carrier(), members));
  return FinSet(std::move(labels));
}

// Order on the classes of p induced by the image of `order`, closed.
std::vector<std::uint8_t> image_order(const Partition& p, const FinPreorder& order) {
  const std::size_t k = p.num_classes();
  std::vector<std::uint8_t> m(k * k, 0);
  for (Elem x = 0; x < order.size(); ++x)
    for (Elem y = 0; y < order.size(); ++y)
      if (order.leq(x, y)) m[p.class_of(x) * k + p.class_of(y)] = 1;
  return close_by_squaring(k, std::move(m));
}

} // namespace

Reflection posetal_reflection(const FinPreorder& x) {
  std::vector<std::pair<Elem, Elem>> cycles;
  for (Elem a = 0; a < x.size(); ++a)
    for (Elem b = a + 1; b < x.size(); ++b)
      if (x.leq(a, b) && x.leq(b, a)) cycles.emplace_back(a, b);
  auto part = Partition::generated_by(x.carrier(), cycles);
  FinSet classes = labelled_classes(part);
  FinPoset poset(make_preorder_unchecked(classes, image_order(part, x)));
  std::vector<Elem> t(part.class_ids().begin(), part.class_ids().end());
  auto unit = make_monotone_unchecked(x, poset, std::move(t));
  return {std::move(poset), std::move(unit)};
}

PosPullback pullback_pos(const MonotoneMap& f, const MonotoneMap& g) {
  if (!(f.cod() == g.cod())) throw ShapeMismatch("pullback_pos: the two maps have different codomains");
  std::vector<std::string> labels;
  std::vector<Elem> t1;
  std::vector<Elem> t2;
  const auto& x = f.dom();
  const auto& y = g.dom();
  for (Elem a = 0; a < x.size(); ++a) {
    for (Elem b = 0; b < y.size(); ++b) {
      if (f(a) != g(b)) continue;
      labels.push_back(pair_label(x.carrier().label(a), y.carrier().label(b)));
      t1.push_back(a);
      t2.push_back(b);
    }
  }
  const std::size_t n = t1.size();
  std::vector<std::uint8_t> m(n * n, 0);
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j) m[i * n + j] = x.leq(t1[i], t1[j]) && y.leq(t2[i], t2[j]);
  FinPoset apex(make_preorder_unchecked(FinSet(std::move(labels)), std::move(m)));
  auto p1 = make_monotone_unchecked(apex, x, std::move(t1));
  auto p2 = make_monotone_unchecked(apex, y, std::move(t2));
  return {std::move(apex), std::move(p1), std::move(p2)};
}

PosPullback kernel_pair_pos(const MonotoneMap& f) { return pullback_pos(f, f); }

PreorderQuotient coequalizer_preord(const MonotoneMap& f, const MonotoneMap& g) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod())) {
    throw ShapeMismatch("coequalizer_preord: maps are not parallel");
  }
  std::vector<std::pair<Elem, Elem>> pairs;
  for (Elem x = 0; x < f.dom().size(); ++x) pairs.emplace_back(f(x), g(x));
  auto part = Partition::generated_by(f.cod().carrier(), pairs);
  auto quotient = make_preorder_unchecked(labelled_classes(part), image_order(part, f.cod()));
  std::vector<Elem> t(part.class_ids().begin(), part.class_ids().end());
  auto proj = make_monotone_unchecked(f.cod(), quotient, std::move(t));
  return {std::move(quotient), std::move(proj)};
}

PosQuotient coequalizer_pos(const MonotoneMap& f, const MonotoneMap& g) {
  auto pre = coequalizer_preord(f, g);
  auto refl = posetal_reflection(pre.quotient);
  // Relabel the final classes by the cod labels they contain.
  std::vector<Elem> t(f.cod().size());
  for (Elem y = 0; y < t.size(); ++y) t[y] = refl.unit(pre.projection(y));
  Partition part(f.cod().carrier(), t);
  FinSet labels = labelled_classes(part);
  FinPoset poset(make_preorder_unchecked(labels, std::vector<std::uint8_t>(refl.poset.matrix().begin(),
                                                                            refl.poset.matrix().end())));
  auto proj = make_monotone_unchecked(f.cod(), poset, std::move(t));
  return {std::move(poset), std::move(proj)};
}

std::optional<MonotoneMap> factor_through_surjection(const MonotoneMap& q, const MonotoneMap& f) {
  auto m = factor_through_surjection(q.underlying(), f.underlying());
  if (!m || !is_monotone(q.cod(), f.cod(), m->table())) return std::nullopt;
  return make_monotone_unchecked(q.cod(), f.cod(), std::vector<Elem>(m->table().begin(), m->table().end()));
}

PosClass classify_pos(const MonotoneMap& f) {
  PosClass c;
  c.epi = f.underlying().surjective();
  auto kp = kernel_pair_pos(f);
  auto coeq = coequalizer_pos(kp.proj1, kp.proj2);
  auto comparison = factor_through_surjection(coeq.projection, f);
  if (!comparison) throw DefectError("classify_pos: f does not factor through its kernel-pair coequalizer");
  c.regular_epi = is_order_isomorphism(*comparison);
  return c;
}

// ---------------------------------------------------------------------------
// canonical labelling

namespace {

using Invariant = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>;

std::vector<Invariant> element_invariants(const FinPreorder& x) {
  const std::size_t n = x.size();
  std::vector<Invariant> inv(n);
  auto strictly = [&](Elem a, Elem b) { return x.leq(a, b) && !x.leq(b, a); };
  for (Elem e = 0; e < n; ++e) {
    std::size_t down = 0;
    std::size_t up = 0;
    std::size_t cover_in = 0;
    std::size_t cover_out = 0;
    for (Elem o = 0; o < n; ++o) {
      down += x.leq(o, e);
      up += x.leq(e, o);
      auto covers = [&](Elem lo, Elem hi) {
        if (!strictly(lo, hi)) return false;
        for (Elem z = 0; z < n; ++z)
          if (strictly(lo, z) && strictly(z, hi)) return false;
        return true;
      };
      cover_in += covers(o, e);
      cover_out += covers(e, o);
    }
    inv[e] = {down, up, cover_in, cover_out};
  }
  return inv;
}

// Shell order: when position k is placed, the entries (k, 0..k) and (0..k-1, k)
// become known. Comparing shell by shell lets the search prune prefixes.
struct CanonSearch {
  const FinPreorder& x;
  std::vector<Invariant> slot_inv;  // invariant required at each position
  std::vector<Invariant> elem_inv;
  std::vector<Elem> order;
  std::vector<char> used;
  std::vector<Elem> best;
  std::vector<std::uint8_t> best_shells;
  std::vector<std::uint8_t> shells;

  void shell(std::size_t k, std::vector<std::uint8_t>& out) const {
    for (std::size_t i = 0; i <= k; ++i) out.push_back(x.leq(order[k], order[i]));
    for (std::size_t i = 0; i < k; ++i) out.push_back(x.leq(order[i], order[k]));
  }

  void run(std::size_t k) {
    const std::size_t n = x.size();
    if (k == n) {
      if (best.empty() || shells > best_shells) {
        best = order;
        best_shells = shells;
      }
      return;
    }
    for (Elem e = 0; e < n; ++e) {
      if (used[e] || elem_inv[e] != slot_inv[k]) continue;
      order[k] = e;
      used[e] = 1;
      const std::size_t mark = shells.size();
      shell(k, shells);
      // Prune once the known prefix is already below the best full code.
      bool prune = !best.empty() &&
                   std::lexicographical_compare(shells.begin(), shells.end(), best_shells.begin(),
                                                best_shells.begin() + static_cast<std::ptrdiff_t>(shells.size()));
      if (!prune) run(k + 1);
      shells.resize(mark);
      used[e] = 0;
    }
  }
};

std::vector<Elem> canonical_order(const FinPreorder& x) {
  CanonSearch s{x, {}, element_invariants(x), std::vector<Elem>(x.size()),
                std::vector<char>(x.size(), 0), {}, {}, {}};
  s.slot_inv = s.elem_inv;
  std::sort(s.slot_inv.begin(), s.slot_inv.end());
  s.run(0);
  return s.best;
}

} // namespace

CanonicalForm canonical_form(const FinPreorder& x) {
  CanonicalForm cf;
  cf.order = canonical_order(x);
  const std::size_t n = x.size();
  cf.code.resize(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cf.code[i * n + j] = x.leq(cf.order[i], cf.order[j]);
  return cf;
}

FinPoset canonical_poset(const FinPoset& x) {
  auto cf = canonical_form(x);
  return FinPoset(make_preorder_unchecked(FinSet::canonical(x.size()), std::move(cf.code)));
}

bool are_isomorphic(const FinPreorder& a, const FinPreorder& b) {
  if (a.size() != b.size()) return false;
  return canonical_form(a).code == canonical_form(b).code;
}

std::vector<std::vector<Elem>> automorphisms(const FinPreorder& x) {
  const std::size_t n = x.size();
  auto inv = element_invariants(x);
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> perm(n);
  std::vector<char> used(n, 0);
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (k == n) {
      out.push_back(perm);
      return;
    }
    for (Elem e = 0; e < n; ++e) {
      if (used[e] || inv[e] != inv[k]) continue;
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) {
        ok = x.leq(i, k) == x.leq(perm[i], e) && x.leq(k, i) == x.leq(e, perm[i]);
      }
      if (!ok) continue;
      perm[k] = e;
      used[e] = 1;
      go(k + 1);
      used[e] = 0;
    }
  };
  go(0);
  // The identity is always found first because candidates are tried in order.
  return out;
}

// ---------------------------------------------------------------------------
// enumeration

namespace {

std::vector<FinPoset> generate_posets(std::size_t n) {
  // Every poset has a natural labelling, so relations i < j with i < j suffice.
  std::vector<std::pair<Elem, Elem>> slots;
  for (Elem i = 0; i < n; ++i)
    for (Elem j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::set<std::vector<std::uint8_t>> seen;
  std::vector<std::pair<std::size_t, std::vector<std::uint8_t>>> found;
  const std::uint64_t limit = std::uint64_t{1} << slots.size();
  std::vector<std::uint8_t> m(n * n);
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    std::fill(m.begin(), m.end(), 0);
    for (Elem i = 0; i < n; ++i) m[i * n + i] = 1;
    std::size_t strict = 0;
    for (std::size_t b = 0; b < slots.size(); ++b) {
      if (mask >> b & 1U) {
        m[slots[b].first * n + slots[b].second] = 1;
        ++strict;
      }
    }
    if (!transitive(n, m)) continue;
    auto cf = canonical_form(make_preorder_unchecked(FinSet::canonical(n), m));
    if (seen.insert(cf.code).second) found.emplace_back(strict, std::move(cf.code));
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second > b.second;
  });
  std::vector<FinPoset> out;
  out.reserve(found.size());
  for (auto& [strict, code] : found) {
    out.emplace_back(make_preorder_unchecked(FinSet::canonical(n), std::move(code)));
  }
  return out;
}

} // namespace

std::vector<FinPoset> enumerate_posets(std::size_t n) {
  if (n > kMaxPosetEnumeration) {
    throw BoundExceeded("enumerate_posets: " + std::to_string(n) + " exceeds the limit of " +
                        std::to_string(kMaxPosetEnumeration) + " elements");
  }
  static std::array<std::once_flag, kMaxPosetEnumeration + 1> once;
  static std::array<std::vector<FinPoset>, kMaxPosetEnumeration + 1> cache;
  std::call_once(once[n], [n] { cache[n] = generate_posets(n); });
  return cache[n];
}

std::vector<FinPoset> enumerate_posets_up_to(std::size_t n) {
  std::vector<FinPoset> out;
  for (std::size_t k = 0; k <= n; ++k) {
    auto level = enumerate_posets(k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<FinPreorder> enumerate_preorders(std::size_t n) {
  if (n > 5) throw BoundExceeded("enumerate_preorders: at most 5 elements");
  std::vector<std::pair<Elem, Elem>> slots;
  for (Elem i = 0; i < n; ++i)
    for (Elem j = 0; j < n; ++j)
      if (i != j) slots.emplace_back(i, j);
  std::vector<FinPreorder> out;
  const std::uint64_t limit = std::uint64_t{1} << slots.size();
  std::vector<std::uint8_t> m(n * n);
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    std::fill(m.begin(), m.end(), 0);
    for (Elem i = 0; i < n; ++i) m[i * n + i] = 1;
    for (std::size_t b = 0; b < slots.size(); ++b)
      if (mask >> b & 1U) m[slots[b].first * n + slots[b].second] = 1;
    if (transitive(n, m)) out.push_back(make_preorder_unchecked(FinSet::canonical(n), m));
  }
  return out;
}

std::vector<MonotoneMap> enumerate_monotone(const FinPreorder& x, const FinPreorder& y) {
  std::vector<MonotoneMap> out;
  const std::size_t n = x.size();
  const std::size_t m = y.size();
  if (n > 0 && m == 0) return out;
  std::vector<Elem> t(n, 0);
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (k == n) {
      out.push_back(make_monotone_unchecked(x, y, t));
      return;
    }
    for (Elem v = 0; v < m; ++v) {
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) {
        if (x.leq(i, k) && !y.leq(t[i], v)) ok = false;
        if (x.leq(k, i) && !y.leq(v, t[i])) ok = false;
      }
      if (!ok) continue;
      t[k] = v;
      go(k + 1);
    }
  };
  go(0);
  return out;
}

} // namespace fincat
