#pragma once

#include <algorithm>
#include <atomic>
#include <concepts>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fincat/error.hpp"
#include "fincat/finset.hpp"
#include "fincat/json.hpp"
#include "fincat/parallel.hpp"

namespace fincat {

// A cospan f : X -> Z <- Y : g together with a commuting cone
// f . proj1 == g . proj2.
template <typename M>
struct PullbackSquare {
  M f;
  M g;
  M proj1;
  M proj2;
};

// A category whose objects up to a bound can be listed and whose hom-sets are
// finite and listable. table(f) must determine f within its hom-set.
template <typename C>
concept EnumerableCategory = requires(const C& cat, const typename C::Object& x, const typename C::Morphism& f) {
  typename C::Object;
  typename C::Morphism;
  { cat.name() } -> std::convertible_to<std::string>;
  { cat.bound() } -> std::convertible_to<std::size_t>;
  { cat.objects() } -> std::convertible_to<std::span<const typename C::Object>>;
  { cat.homs(x, x) } -> std::same_as<std::vector<typename C::Morphism>>;
  { cat.dom(f) } -> std::convertible_to<const typename C::Object&>;
  { cat.cod(f) } -> std::convertible_to<const typename C::Object&>;
  { cat.compose(f, f) } -> std::same_as<typename C::Morphism>;
  { cat.identity(x) } -> std::same_as<typename C::Morphism>;
  { cat.table(f) } -> std::convertible_to<std::span<const Elem>>;
  { cat.object_json(x) } -> std::same_as<Json>;
  { cat.morphism_json(f) } -> std::same_as<Json>;
  { x == x } -> std::convertible_to<bool>;
  { f == f } -> std::convertible_to<bool>;
};

template <typename C>
concept HasPullbacks = EnumerableCategory<C> && requires(const C& cat, const typename C::Morphism& f) {
  { cat.pullback(f, f) } -> std::same_as<std::optional<PullbackSquare<typename C::Morphism>>>;
};

template <typename C>
concept HasCoequalizers = EnumerableCategory<C> && requires(const C& cat, const typename C::Morphism& f) {
  { cat.coequalizer(f, f) } -> std::same_as<std::optional<typename C::Morphism>>;
};

// factor_through_epi(q, f): the m with m . q == f when it exists.
template <typename C>
concept HasEpiFactorization = EnumerableCategory<C> && requires(const C& cat, const typename C::Morphism& f) {
  { cat.factor_through_epi(f, f) } -> std::same_as<std::optional<typename C::Morphism>>;
  { cat.is_iso(f) } -> std::convertible_to<bool>;
};

struct Verdict {
  bool holds = false;
  std::string reason;
  explicit operator bool() const noexcept { return holds; }
  static Verdict yes() { return {true, {}}; }
  static Verdict no(std::string why) { return {false, std::move(why)}; }
};

namespace detail {

using Key = std::vector<Elem>;

template <typename C>
Key key_of(const C& cat, const typename C::Morphism& m) {
  auto t = cat.table(m);
  return Key(t.begin(), t.end());
}

template <typename C>
std::vector<Key> sorted_keys(const C& cat, const std::vector<typename C::Morphism>& ms) {
  std::vector<Key> out;
  out.reserve(ms.size());
  for (const auto& m : ms) out.push_back(key_of(cat, m));
  std::sort(out.begin(), out.end());
  return out;
}

inline bool has_duplicate(const std::vector<Key>& sorted) {
  return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

// Number of (i, j) with a[i] == b[j]; both sorted.
inline std::size_t matching_pairs(const std::vector<Key>& a, const std::vector<Key>& b) {
  std::size_t count = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      std::size_t ei = i;
      std::size_t ej = j;
      while (ei < a.size() && a[ei] == a[i]) ++ei;
      while (ej < b.size() && b[ej] == b[j]) ++ej;
      count += (ei - i) * (ej - j);
      i = ei;
      j = ej;
    }
  }
  return count;
}

// m with m . q == f, found by search when the instance has no factorization.
template <EnumerableCategory C>
std::optional<typename C::Morphism> factor_by_search(const C& cat, const typename C::Morphism& q,
                                                     const typename C::Morphism& f) {
  if constexpr (HasEpiFactorization<C>) {
    return cat.factor_through_epi(q, f);
  } else {
    for (auto& m : cat.homs(cat.cod(q), cat.cod(f)))
      if (cat.compose(m, q) == f) return m;
    return std::nullopt;
  }
}

template <EnumerableCategory C>
bool iso_by_search(const C& cat, const typename C::Morphism& m) {
  if constexpr (HasEpiFactorization<C>) {
    return cat.is_iso(m);
  } else {
    const auto id_dom = cat.identity(cat.dom(m));
    const auto id_cod = cat.identity(cat.cod(m));
    for (auto& n : cat.homs(cat.cod(m), cat.dom(m)))
      if (cat.compose(n, m) == id_dom && cat.compose(m, n) == id_cod) return true;
    return false;
  }
}

} // namespace detail

/// q . f == q . g and every h with h . f == h . g into an enumerated object
/// factors through q exactly once.
template <EnumerableCategory C>
Verdict is_coequalizer(const C& cat, const typename C::Morphism& f, const typename C::Morphism& g,
                       const typename C::Morphism& q) {
  if (!(cat.dom(f) == cat.dom(g)) || !(cat.cod(f) == cat.cod(g))) {
    throw ShapeMismatch("is_coequalizer: the pair is not parallel");
  }
  if (!(cat.dom(q) == cat.cod(f))) throw ShapeMismatch("is_coequalizer: q does not start at the codomain of the pair");
  if (!(cat.compose(q, f) == cat.compose(q, g))) return Verdict::no("q does not coequalize the pair");
  const auto objs = cat.objects();
  for (std::size_t t = 0; t < objs.size(); ++t) {
    std::size_t cocones = 0;
    for (const auto& h : cat.homs(cat.cod(f), objs[t]))
      if (cat.compose(h, f) == cat.compose(h, g)) ++cocones;
    std::vector<typename C::Morphism> via;
    for (const auto& u : cat.homs(cat.cod(q), objs[t])) via.push_back(cat.compose(u, q));
    const auto keys = detail::sorted_keys(cat, via);
    if (detail::has_duplicate(keys)) {
      return Verdict::no("two maps out of the coequalizer agree after q (test object #" + std::to_string(t) + ")");
    }
    if (keys.size() != cocones) {
      return Verdict::no("a coequalizing map into test object #" + std::to_string(t) + " does not factor through q");
    }
  }
  return Verdict::yes();
}

/// Terminality among cones from every enumerated test object.
template <EnumerableCategory C>
Verdict is_pullback(const C& cat, const PullbackSquare<typename C::Morphism>& sq) {
  if (!(cat.cod(sq.f) == cat.cod(sq.g)) || !(cat.cod(sq.proj1) == cat.dom(sq.f)) ||
      !(cat.cod(sq.proj2) == cat.dom(sq.g)) || !(cat.dom(sq.proj1) == cat.dom(sq.proj2))) {
    throw ShapeMismatch("is_pullback: arrows do not form a square");
  }
  if (!(cat.compose(sq.f, sq.proj1) == cat.compose(sq.g, sq.proj2))) {
    throw InvariantViolation("is_pullback: the square does not commute");
  }
  const auto objs = cat.objects();
  for (std::size_t t = 0; t < objs.size(); ++t) {
    std::vector<typename C::Morphism> left;
    std::vector<typename C::Morphism> right;
    for (const auto& t1 : cat.homs(objs[t], cat.dom(sq.f))) left.push_back(cat.compose(sq.f, t1));
    for (const auto& t2 : cat.homs(objs[t], cat.dom(sq.g))) right.push_back(cat.compose(sq.g, t2));
    const std::size_t cones = detail::matching_pairs(detail::sorted_keys(cat, left), detail::sorted_keys(cat, right));
    std::vector<detail::Key> mediated;
    for (const auto& m : cat.homs(objs[t], cat.dom(sq.proj1))) {
      detail::Key k = detail::key_of(cat, cat.compose(sq.proj1, m));
      k.push_back(std::numeric_limits<Elem>::max());
      auto k2 = detail::key_of(cat, cat.compose(sq.proj2, m));
      k.insert(k.end(), k2.begin(), k2.end());
      mediated.push_back(std::move(k));
    }
    std::sort(mediated.begin(), mediated.end());
    if (detail::has_duplicate(mediated)) {
      return Verdict::no("mediating map from test object #" + std::to_string(t) + " is not unique");
    }
    if (mediated.size() != cones) {
      return Verdict::no("a cone from test object #" + std::to_string(t) + " does not factor through the apex");
    }
  }
  return Verdict::yes();
}

/// Right-cancellable against every map into an enumerated test object.
template <EnumerableCategory C>
Verdict is_epi_in(const C& cat, const typename C::Morphism& f) {
  const auto objs = cat.objects();
  for (std::size_t t = 0; t < objs.size(); ++t) {
    std::vector<typename C::Morphism> via;
    for (const auto& h : cat.homs(cat.cod(f), objs[t])) via.push_back(cat.compose(h, f));
    if (detail::has_duplicate(detail::sorted_keys(cat, via))) {
      return Verdict::no("two maps into test object #" + std::to_string(t) + " agree after f");
    }
  }
  return Verdict::yes();
}

enum class RegularEpiMethod { automatic, kernel_pair, parallel_pair_search };

inline const char* to_string(RegularEpiMethod m) {
  switch (m) {
    case RegularEpiMethod::automatic: return "automatic";
    case RegularEpiMethod::kernel_pair: return "kernel_pair";
    case RegularEpiMethod::parallel_pair_search: return "parallel_pair_search";
  }
  return "?";
}

struct RegularEpiVerdict {
  bool regular = false;
  /// The method actually used; never `automatic`.
  RegularEpiMethod method = RegularEpiMethod::kernel_pair;
  std::string detail;
  /// Parallel pairs examined by the search.
  std::size_t pairs_examined = 0;

  Json to_json() const {
    return Json{{"regular_epi", regular}, {"method", to_string(method)}, {"detail", detail}};
  }
};

/// Comparison from the coequalizer of the kernel pair; nullopt when the
/// instance lacks that kernel pair or its coequalizer.
template <EnumerableCategory C>
  requires HasPullbacks<C> && HasCoequalizers<C>
std::optional<bool> regular_by_kernel_pair(const C& cat, const typename C::Morphism& f) {
  auto kp = cat.pullback(f, f);
  if (!kp) return std::nullopt;
  auto q = cat.coequalizer(kp->proj1, kp->proj2);
  if (!q) return std::nullopt;
  auto m = detail::factor_by_search(cat, *q, f);
  return m && detail::iso_by_search(cat, *m);
}

/// Searches parallel pairs W => dom(f) over every enumerated W for one that f
/// coequalizes universally.
template <EnumerableCategory C>
RegularEpiVerdict regular_by_parallel_pairs(const C& cat, const typename C::Morphism& f) {
  RegularEpiVerdict v;
  v.method = RegularEpiMethod::parallel_pair_search;
  const auto objs = cat.objects();
  for (std::size_t w = 0; w < objs.size(); ++w) {
    const auto hs = cat.homs(objs[w], cat.dom(f));
    std::vector<typename C::Morphism> after;
    after.reserve(hs.size());
    for (const auto& h : hs) after.push_back(cat.compose(f, h));
    for (std::size_t i = 0; i < hs.size(); ++i)
      for (std::size_t k = i; k < hs.size(); ++k) {
        if (!(after[i] == after[k])) continue;
        ++v.pairs_examined;
        if (is_coequalizer(cat, hs[i], hs[k], f)) {
          v.regular = true;
          v.detail = "coequalizes parallel pair #" + std::to_string(i) + ", #" + std::to_string(k) +
                     " out of test object #" + std::to_string(w);
          return v;
        }
      }
  }
  v.detail = "no enumerated parallel pair has f as its coequalizer";
  return v;
}

template <EnumerableCategory C>
RegularEpiVerdict is_regular_epi_in(const C& cat, const typename C::Morphism& f,
                                    RegularEpiMethod method = RegularEpiMethod::automatic) {
  if constexpr (HasPullbacks<C> && HasCoequalizers<C>) {
    if (method != RegularEpiMethod::parallel_pair_search) {
      if (auto r = regular_by_kernel_pair(cat, f)) {
        RegularEpiVerdict v;
        v.regular = *r;
        v.method = RegularEpiMethod::kernel_pair;
        v.detail = *r ? "comparison from the kernel-pair coequalizer is an isomorphism"
                      : "comparison from the kernel-pair coequalizer is not an isomorphism";
        return v;
      }
      if (method == RegularEpiMethod::kernel_pair) {
        throw InvariantViolation("is_regular_epi_in: the instance lacks this kernel pair or its coequalizer");
      }
    }
  } else {
    if (method == RegularEpiMethod::kernel_pair) {
      throw InvariantViolation("is_regular_epi_in: the instance provides no kernel pairs");
    }
  }
  return regular_by_parallel_pairs(cat, f);
}

/// Unit laws, associativity, endpoints of composites and distinct hom
/// entries over every enumerated object.
template <EnumerableCategory C>
Verdict check_category_axioms(const C& cat) {
  const auto objs = cat.objects();
  const std::size_t n = objs.size();
  std::vector<std::vector<typename C::Morphism>> hom(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      hom[x * n + y] = cat.homs(objs[x], objs[y]);
      if (detail::has_duplicate(detail::sorted_keys(cat, hom[x * n + y]))) {
        return Verdict::no("hom(#" + std::to_string(x) + ", #" + std::to_string(y) + ") lists a morphism twice");
      }
      for (const auto& f : hom[x * n + y]) {
        if (!(cat.dom(f) == objs[x]) || !(cat.cod(f) == objs[y])) {
          return Verdict::no("hom(#" + std::to_string(x) + ", #" + std::to_string(y) + ") has a stray morphism");
        }
        if (!(cat.compose(cat.identity(objs[y]), f) == f) || !(cat.compose(f, cat.identity(objs[x])) == f)) {
          return Verdict::no("unit law fails in hom(#" + std::to_string(x) + ", #" + std::to_string(y) + ")");
        }
      }
    }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        for (const auto& f : hom[x * n + y])
          for (const auto& g : hom[y * n + z]) {
            const auto gf = cat.compose(g, f);
            if (!(cat.dom(gf) == objs[x]) || !(cat.cod(gf) == objs[z])) {
              return Verdict::no("composite has the wrong endpoints");
            }
            for (std::size_t w = 0; w < n; ++w)
              for (const auto& h : hom[z * n + w]) {
                if (!(cat.compose(h, gf) == cat.compose(cat.compose(h, g), f))) {
                  return Verdict::no("associativity fails through objects #" + std::to_string(x) + ", #" +
                                     std::to_string(y) + ", #" + std::to_string(z) + ", #" + std::to_string(w));
                }
              }
          }
  return Verdict::yes();
}

// ---------------------------------------------------------------------------
// Regularity audit

struct RegularityChecks {
  bool kernel_pairs_exist = true;
  bool kernel_pair_coequalizers_exist = true;
  bool regular_epi_pullback_stable = true;
};

struct ScanCounts {
  std::size_t objects = 0;
  std::size_t arrows = 0;
  std::size_t squares = 0;
};

struct RegularityReport {
  std::string instance;
  std::size_t bound = 0;
  Json parameters = Json::object();
  RegularityChecks checks;
  std::optional<Json> witness;
  ScanCounts scanned;

  bool clean() const noexcept { return !witness.has_value(); }

  std::string verdict() const {
    return clean() ? "no violation up to bound " + std::to_string(bound)
                   : "violation found at bound " + std::to_string(bound);
  }

  Json to_json() const {
    Json j;
    j["instance"] = instance;
    j["bound"] = bound;
    if (!parameters.empty()) j["parameters"] = parameters;
    j["checks"] = Json{{"kernel_pairs_exist", checks.kernel_pairs_exist},
                       {"kernel_pair_coequalizers_exist", checks.kernel_pair_coequalizers_exist},
                       {"regular_epi_pullback_stable", checks.regular_epi_pullback_stable}};
    j["verdict"] = verdict();
    j["witness"] = witness ? *witness : Json(nullptr);
    j["scanned"] = Json{{"objects", scanned.objects}, {"arrows", scanned.arrows}, {"squares", scanned.squares}};
    return j;
  }
};

struct AuditOptions {
  std::size_t threads = 1;
  /// Re-check a found witness with the universal-property checkers and
  /// the parallel-pair search; a failed re-check throws DefectError.
  bool verify_witness = true;
};

template <typename M>
struct AuditResult {
  RegularityReport report;
  /// The failing square for a stability violation: f = u (regular), g = q,
  /// proj2 = u' (not regular).
  std::optional<PullbackSquare<M>> square;
};

namespace detail {

template <EnumerableCategory C>
Json square_json(const C& cat, const PullbackSquare<typename C::Morphism>& sq) {
  return Json{{"u", cat.morphism_json(sq.f)},
              {"q", cat.morphism_json(sq.g)},
              {"u_prime", cat.morphism_json(sq.proj2)},
              {"q_prime", cat.morphism_json(sq.proj1)}};
}

} // namespace detail

/// Scans codomains B in canonical order. For each B, every arrow into B is
/// checked for a kernel pair and its coequalizer; then every square
/// (u regular into B, q any into B) is pulled back and u' tested, with u
/// ordered by (source object, hom index) and q likewise. Stops at the first
/// violation. The result does not depend on opt.threads.
template <EnumerableCategory C>
  requires HasPullbacks<C> && HasCoequalizers<C>
AuditResult<typename C::Morphism> audit_regularity(const C& cat, const AuditOptions& opt = {}) {
  using M = typename C::Morphism;
  AuditResult<M> res;
  RegularityReport& rep = res.report;
  rep.instance = cat.name();
  rep.bound = cat.bound();
  if constexpr (requires { { cat.parameters() } -> std::convertible_to<Json>; }) rep.parameters = cat.parameters();
  const auto objs = cat.objects();
  rep.scanned.objects = objs.size();

  struct ArrowInfo {
    M arrow;
    bool kernel_pair = false;
    bool coequalizer = false;
    bool regular = false;
  };
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();

  for (std::size_t b = 0; b < objs.size(); ++b) {
    std::vector<std::vector<ArrowInfo>> by_source(objs.size());
    parallel_for(objs.size(), opt.threads, [&](std::size_t d) {
      for (auto& h : cat.homs(objs[d], objs[b])) {
        ArrowInfo info{h};
        if (auto kp = cat.pullback(h, h)) {
          info.kernel_pair = true;
          if (auto q = cat.coequalizer(kp->proj1, kp->proj2)) {
            info.coequalizer = true;
            auto m = detail::factor_by_search(cat, *q, h);
            info.regular = m && detail::iso_by_search(cat, *m);
          }
        }
        by_source[d].push_back(std::move(info));
      }
    });
    std::vector<ArrowInfo> arrows;
    for (auto& v : by_source)
      for (auto& a : v) arrows.push_back(std::move(a));
    by_source.clear();

    for (std::size_t k = 0; k < arrows.size(); ++k) {
      if (arrows[k].kernel_pair && arrows[k].coequalizer) continue;
      rep.scanned.arrows += k + 1;
      if (!arrows[k].kernel_pair) {
        rep.checks.kernel_pairs_exist = false;
        rep.witness = Json{{"kind", "missing_kernel_pair"},
                           {"cospan", Json{{"f", cat.morphism_json(arrows[k].arrow)},
                                           {"g", cat.morphism_json(arrows[k].arrow)}}}};
      } else {
        rep.checks.kernel_pair_coequalizers_exist = false;
        auto kp = cat.pullback(arrows[k].arrow, arrows[k].arrow);
        rep.witness = Json{{"kind", "missing_coequalizer"},
                           {"arrow", cat.morphism_json(arrows[k].arrow)},
                           {"pair", Json{{"p0", cat.morphism_json(kp->proj1)}, {"p1", cat.morphism_json(kp->proj2)}}}};
      }
      return res;
    }
    rep.scanned.arrows += arrows.size();

    std::vector<std::size_t> regular;
    for (std::size_t k = 0; k < arrows.size(); ++k)
      if (arrows[k].regular) regular.push_back(k);

    struct Found {
      std::size_t q_index = 0;
      std::optional<PullbackSquare<M>> square;
    };
    std::vector<std::optional<Found>> found(regular.size());
    std::atomic<std::size_t> best{none};
    parallel_for(regular.size(), opt.threads, [&](std::size_t i) {
      if (i > best.load()) return;
      const M& u = arrows[regular[i]].arrow;
      for (std::size_t j = 0; j < arrows.size(); ++j) {
        auto sq = cat.pullback(u, arrows[j].arrow);
        bool violation = !sq;
        if (sq) {
          auto r = regular_by_kernel_pair(cat, sq->proj2);
          violation = !r || !*r;
        }
        if (!violation) continue;
        found[i] = Found{j, std::move(sq)};
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
        return;
      }
    });

    std::size_t first = none;
    for (std::size_t i = 0; i < found.size(); ++i)
      if (found[i]) {
        first = i;
        break;
      }
    if (first == none) {
      rep.scanned.squares += regular.size() * arrows.size();
      continue;
    }
    const Found& hit = *found[first];
    rep.scanned.squares += first * arrows.size() + hit.q_index + 1;
    rep.checks.regular_epi_pullback_stable = false;
    const M& u = arrows[regular[first]].arrow;
    const M& q = arrows[hit.q_index].arrow;
    if (!hit.square) {
      rep.witness = Json{{"kind", "missing_pullback"},
                         {"cospan", Json{{"f", cat.morphism_json(u)}, {"g", cat.morphism_json(q)}}}};
      return res;
    }
    const auto& sq = *hit.square;
    Json w;
    w["kind"] = "unstable_regular_epi";
    w["square"] = detail::square_json(cat, sq);
    if (opt.verify_witness) {
      auto pb = is_pullback(cat, sq);
      if (!pb) throw DefectError("audit witness is not a pullback: " + pb.reason);
      auto ru = is_regular_epi_in(cat, u, RegularEpiMethod::kernel_pair);
      if (!ru.regular) throw DefectError("audit witness: u is not a regular epi on re-check");
      auto rk = is_regular_epi_in(cat, sq.proj2, RegularEpiMethod::kernel_pair);
      auto rs = is_regular_epi_in(cat, sq.proj2, RegularEpiMethod::parallel_pair_search);
      if (rk.regular || rs.regular) throw DefectError("audit witness: u' is regular on re-check");
      auto epi = is_epi_in(cat, sq.proj2);
      w["verification"] = Json{{"square_is_pullback", true},
                               {"u", ru.to_json()},
                               {"u_prime_epi", epi.holds},
                               {"u_prime", rk.to_json()},
                               {"u_prime_search", rs.to_json()}};
    }
    rep.witness = std::move(w);
    res.square = sq;
    return res;
  }
  return res;
}

} // namespace fincat
