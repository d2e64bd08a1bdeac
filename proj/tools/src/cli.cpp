#include "fincat_cli/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "fincat/comma.hpp"
#include "fincat/counterexample.hpp"
#include "fincat/error.hpp"
#include "fincat/instances.hpp"
#include "fincat/ran.hpp"
#include "fincat/version.hpp"

namespace fincat::cli {

namespace {

// Counts of posets up to isomorphism, indexed by size.
constexpr double kPosetCounts[] = {1, 1, 2, 5, 16, 63, 318, 2045, 16999, 183231};

double poset_count(std::size_t n) {
  return n < std::size(kPosetCounts) ? kPosetCounts[n] : std::pow(2.0, double(n * n) / 4.0);
}

// Objects times (arrows into one codomain)^2, with hom sizes bounded by m^m.
double squares_from(double objects, double max_hom) { return objects * std::pow(objects * max_hom, 2.0); }

template <typename C>
Output audit_output(const C& cat, std::size_t threads) {
  auto res = audit_regularity(cat, AuditOptions{threads, true});
  return {res.report.clean() ? kExitClean : kExitWitness, res.report.to_json()};
}

void require(bool ok, const std::string& what) {
  if (!ok) throw DefectError("verification failed: " + what);
}

const Json& field(const Json& input, const char* key, const std::string& query) {
  if (!input.is_object() || !input.contains(key)) {
    throw UsageError("check " + query + ": input must be an object with key \"" + key + "\"");
  }
  return input.at(key);
}

// A morphism JSON whose dom carries "elements" is monotone; "labels" means a
// plain function.
bool is_monotone_json(const Json& m) {
  return m.is_object() && m.contains("dom") && m.at("dom").is_object() && m.at("dom").contains("elements");
}

std::size_t test_bound(std::size_t largest) { return std::max<std::size_t>(2, std::min<std::size_t>(largest, 3)); }

Json check_pullback(const Json& input) {
  const Json& jf = field(input, "f", "pullback");
  const Json& jg = field(input, "g", "pullback");
  if (is_monotone_json(jf) != is_monotone_json(jg)) throw UsageError("check pullback: f and g are of different kinds");
  if (is_monotone_json(jf)) {
    const MonotoneMap f = monotone_from_json(jf);
    const MonotoneMap g = monotone_from_json(jg);
    if (!(f.cod() == g.cod())) throw UsageError("check pullback: f and g must share a codomain");
    auto pb = pullback_pos(f, g);
    const FinPosCat cat(test_bound(pb.apex.size()));
    const Verdict v = is_pullback(cat, PullbackSquare<MonotoneMap>{f, g, pb.proj1, pb.proj2});
    require(v.holds, "pullback: " + v.reason);
    return Json{{"query", "pullback"},
                {"kind", "monotone"},
                {"apex", to_json(static_cast<const FinPreorder&>(pb.apex))},
                {"proj1", to_json(pb.proj1)},
                {"proj2", to_json(pb.proj2)},
                {"verified", true}};
  }
  const FinFn f = finfn_from_json(jf);
  const FinFn g = finfn_from_json(jg);
  if (!(f.cod() == g.cod())) throw UsageError("check pullback: f and g must share a codomain");
  auto pb = pullback_fn(f, g);
  const FinSetCat cat(test_bound(pb.apex.size()));
  const Verdict v = is_pullback(cat, PullbackSquare<FinFn>{f, g, pb.proj1, pb.proj2});
  require(v.holds, "pullback: " + v.reason);
  return Json{{"query", "pullback"},
              {"kind", "function"},
              {"apex", to_json(pb.apex)},
              {"proj1", to_json(pb.proj1)},
              {"proj2", to_json(pb.proj2)},
              {"verified", true}};
}

Json check_coequalizer(const Json& input) {
  const Json& jf = field(input, "f", "coequalizer");
  const Json& jg = field(input, "g", "coequalizer");
  if (is_monotone_json(jf) != is_monotone_json(jg)) {
    throw UsageError("check coequalizer: f and g are of different kinds");
  }
  if (is_monotone_json(jf)) {
    const MonotoneMap f = monotone_from_json(jf);
    const MonotoneMap g = monotone_from_json(jg);
    if (!(f.dom() == g.dom()) || !(f.cod() == g.cod())) throw UsageError("check coequalizer: f and g are not parallel");
    auto q = coequalizer_pos(f, g);
    const FinPosCat cat(3);
    const Verdict v = is_coequalizer(cat, f, g, q.projection);
    require(v.holds, "coequalizer: " + v.reason);
    return Json{{"query", "coequalizer"},
                {"kind", "monotone"},
                {"quotient", to_json(static_cast<const FinPreorder&>(q.quotient))},
                {"projection", to_json(q.projection)},
                {"projection_is_iso", is_order_isomorphism(q.projection)},
                {"verified", true}};
  }
  const FinFn f = finfn_from_json(jf);
  const FinFn g = finfn_from_json(jg);
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod())) throw UsageError("check coequalizer: f and g are not parallel");
  auto q = coequalizer_fn(f, g);
  const FinSetCat cat(2);
  const Verdict v = is_coequalizer(cat, f, g, q.projection);
  require(v.holds, "coequalizer: " + v.reason);
  return Json{{"query", "coequalizer"},
              {"kind", "function"},
              {"quotient", to_json(q.carrier)},
              {"projection", to_json(q.projection)},
              {"projection_is_iso", q.projection.injective() && q.projection.surjective()},
              {"verified", true}};
}

Json check_classify(const Json& input) {
  const Json& jf = field(input, "f", "classify");
  if (is_monotone_json(jf)) {
    const MonotoneMap f = monotone_from_json(jf);
    const PosClass c = classify_pos(f);
    const FinPosCat cat(3);
    const bool epi = is_epi_in(cat, f).holds;
    const auto reg = is_regular_epi_in(cat, f);
    require(epi == c.epi, "classify: epi disagrees with the enumerated test");
    require(reg.regular == c.regular_epi, "classify: regular_epi disagrees with the enumerated test");
    return Json{{"query", "classify"},
                {"kind", "monotone"},
                {"f", to_json(f)},
                {"epi", c.epi},
                {"regular_epi", c.regular_epi},
                {"verified", true}};
  }
  const FinFn f = finfn_from_json(jf);
  const FnClass c = classify_fn(f);
  const FinSetCat cat(2);
  const bool epi = is_epi_in(cat, f).holds;
  const auto reg = is_regular_epi_in(cat, f);
  require(epi == c.epi, "classify: epi disagrees with the enumerated test");
  require(reg.regular == c.regular_epi, "classify: regular_epi disagrees with the enumerated test");
  return Json{{"query", "classify"},
              {"kind", "function"},
              {"f", to_json(f)},
              {"mono", c.mono},
              {"epi", c.epi},
              {"regular_epi", c.regular_epi},
              {"verified", true}};
}

Json check_fibers(const Json& input) {
  const FinPoset shape = poset_from_json(field(input, "shape", "fibers"));
  const FinSet base = finset_from_json(field(input, "base", "fibers"));
  const Json& jvb = field(input, "value_bound", "fibers");
  if (!jvb.is_number_integer() || jvb.get<long long>() < 0) throw UsageError("check fibers: value_bound must be a non-negative integer");
  const auto vb = jvb.get<std::size_t>();
  FiberCheck fc;
  try {
    fc = fiber_as_coslice_check(shape, base, vb);
  } catch (const BoundExceeded& e) {
    throw UsageError(std::string("check fibers: ") + e.what());
  }
  require(fc.passed(), "fibers: the fiber does not match the (diagram, point) enumeration");
  Json j{{"query", "fibers"}, {"shape", to_json(static_cast<const FinPreorder&>(shape))}, {"base", to_json(base)},
         {"value_bound", vb}};
  j["result"] = fc.to_json();
  return j;
}

Json check_ran(const Json& input) {
  const FinFn k = finfn_from_json(field(input, "k", "ran"));
  const FinFn h = finfn_from_json(field(input, "h", "ran"));
  if (!(k.dom() == h.dom())) throw UsageError("check ran: k and h must share a domain");
  const RAnObj src(k);
  const RAnObj dst(h);
  const bool hom = ran_hom_exists(src, dst);
  const auto fn = closing_function(k, h);
  require(!fn || hom, "ran: a closing function exists without refinement");
  if (fn) require(compose(*fn, k) == h, "ran: closing function does not close the triangle");
  Json j{{"query", "ran"}, {"k", to_json(k)}, {"h", to_json(h)}, {"refines", hom}};
  if (hom) {
    const FinRel r = closing_relation(src, dst);
    require(closes_exactly(r, k, h), "ran: closing relation fails the composition equation");
    j["closing_relation"] = to_json(r);
  } else {
    j["closing_relation"] = nullptr;
  }
  j["closing_function"] = fn ? to_json(*fn) : Json(nullptr);
  j["verified"] = true;
  return j;
}

} // namespace

InstanceLimits limits_for(const std::string& instance) {
  if (instance == "finset") return {3, 4, 0, 0};
  if (instance == "finpos") return {4, 5, 0, 0};
  if (instance == "coslice") return {3, 4, 2, 3};
  if (instance == "comma") return {3, CommaCat::kMaxBound, 1, CommaCat::kMaxBaseSize};
  throw UsageError("unknown instance '" + instance + "' (expected finset, finpos, coslice or comma)");
}

double estimate_squares(const std::string& instance, std::size_t bound, std::size_t base_size) {
  const double n = double(bound);
  if (instance == "finset") {
    double total = 0;
    for (std::size_t b = 0; b <= bound; ++b) {
      double into = 0;
      for (std::size_t d = 0; d <= bound; ++d) into += std::pow(double(b), double(d));
      total += into * into;
    }
    return total;
  }
  if (instance == "finpos") {
    double objects = 0;
    for (std::size_t k = 0; k <= bound; ++k) objects += poset_count(k);
    return squares_from(objects, std::pow(n, n));
  }
  if (instance == "coslice") {
    const double objects = (n + 1) * std::pow(n + 1, double(base_size));
    return squares_from(objects, std::pow(n, n));
  }
  if (instance == "comma") {
    const double m = n + 1;
    double catalog = 1;
    for (std::size_t v = 0; v <= CommaCat::kMaxValueBound; ++v) catalog += std::pow(double(v), double(base_size));
    double objects = 0;
    for (std::size_t k = 0; k <= bound + 1; ++k) objects += poset_count(k) * std::pow(catalog, double(k));
    return squares_from(objects, std::pow(m, m));
  }
  limits_for(instance);
  return 0;
}

Output cmd_audit(const AuditRequest& req) {
  const InstanceLimits lim = limits_for(req.instance);
  const std::size_t bound = req.bound.value_or(lim.default_bound);
  const std::size_t base = req.base_size.value_or(lim.default_base_size);
  if (bound > lim.max_bound || base > lim.max_base_size) {
    std::ostringstream msg;
    msg << "audit " << req.instance << ": bound " << bound << ", base size " << base
        << " is past the limit (bound <= " << lim.max_bound << ", base size <= " << lim.max_base_size
        << "); estimated search space ~" << std::scientific;
    msg.precision(2);
    msg << estimate_squares(req.instance, bound, base) << " pullback squares";
    throw UsageError(msg.str());
  }
  if (req.base_size && (req.instance == "finset" || req.instance == "finpos") && *req.base_size != 0) {
    throw UsageError("audit " + req.instance + ": --base-size applies to coslice and comma only");
  }
  if (req.instance == "finset") return audit_output(FinSetCat(bound), req.threads);
  if (req.instance == "finpos") return audit_output(FinPosCat(bound), req.threads);
  if (req.instance == "coslice") return audit_output(CosliceCat(FinSet::canonical(base), bound), req.threads);
  return audit_output(CommaCat(FinSet::canonical(base), bound), req.threads);
}

Output cmd_counterexample(const std::string& target, std::size_t base_size) {
  if (target == "pos") {
    const CounterexampleBundle b = pos_counterexample();
    const FinPosCat cat(3);
    require(is_regular_epi_in(cat, b.p).regular, "pos: p is not a regular epi in the enumerated category");
    require(is_epi_in(cat, b.u_prime).holds, "pos: u' is not an epi in the enumerated category");
    require(!is_regular_epi_in(cat, b.u_prime, RegularEpiMethod::parallel_pair_search).regular,
            "pos: u' coequalizes an enumerated parallel pair");
    return {kExitClean, to_json(b)};
  }
  if (target == "comma" || target == "coproduct") {
    if (base_size > CommaCat::kMaxBaseSize) {
      throw UsageError("counterexample " + target + ": base size must be <= " + std::to_string(CommaCat::kMaxBaseSize));
    }
    const CommaCat cat(FinSet::canonical(base_size), CommaCat::kMaxBound);
    if (target == "comma") return {kExitClean, to_json(lift_counterexample(cat))};
    const CoproductWitness w = coproduct_nonpreservation_witness(cat);
    require(w.coslice_verified && w.comma_verified && !w.preserved, "coproduct witness");
    return {kExitClean, to_json(w)};
  }
  if (target == "coeq-divergence") return {kExitClean, to_json(cat_vs_pos_divergence_witness())};
  throw UsageError("unknown counterexample '" + target + "' (expected pos, comma, coeq-divergence or coproduct)");
}

Output cmd_check(const Json& input, const std::string& query) {
  if (query == "pullback") return {kExitClean, check_pullback(input)};
  if (query == "coequalizer") return {kExitClean, check_coequalizer(input)};
  if (query == "classify") return {kExitClean, check_classify(input)};
  if (query == "fibers") return {kExitClean, check_fibers(input)};
  if (query == "ran") return {kExitClean, check_ran(input)};
  throw UsageError("unknown query '" + query + "' (expected pullback, coequalizer, classify, fibers or ran)");
}

Conclusion NoGoReport::conclusion() const noexcept {
  return coslice_audit.clean() && !comma_audit.clean() ? Conclusion::obstruction_certified_at_bound
                                                         : Conclusion::inconclusive;
}

Json NoGoReport::to_json() const {
  const bool certified = conclusion() == Conclusion::obstruction_certified_at_bound;
  const std::string at = "base size " + std::to_string(bounds.base_size) + ", coslice bound " +
                         std::to_string(bounds.coslice_bound) + ", comma bound " + std::to_string(bounds.comma_bound);
  Json j;
  j["engine_version"] = engine_version;
  j["bounds"] = Json{{"base_size", bounds.base_size},
                     {"coslice_bound", bounds.coslice_bound},
                     {"comma_bound", bounds.comma_bound}};
  j["coslice_audit"] = coslice_audit.to_json();
  j["comma_audit"] = comma_audit.to_json();
  j["conclusion"] = certified ? "obstruction_certified_at_bound" : "inconclusive";
  j["statement"] = certified
                       ? "obstruction certified at bound (" + at +
                             "): the coslice audit is clean and the comma audit found a witness"
                       : "inconclusive at bound (" + at + "): no obstruction certified";
  return j;
}

NoGoReport run_nogo(const NoGoRequest& req) {
  const InstanceLimits cl = limits_for("coslice");
  const InstanceLimits ml = limits_for("comma");
  if (req.base_size > std::min(cl.max_base_size, ml.max_base_size) || req.coslice_bound > cl.max_bound ||
      req.comma_bound > ml.max_bound) {
    throw UsageError("nogo: bounds past the limit (base size <= " +
                     std::to_string(std::min(cl.max_base_size, ml.max_base_size)) + ", coslice bound <= " +
                     std::to_string(cl.max_bound) + ", comma bound <= " + std::to_string(ml.max_bound) + ")");
  }
  NoGoReport r;
  r.bounds = req;
  r.engine_version = kVersion;
  const FinSet base = FinSet::canonical(req.base_size);
  r.coslice_audit = audit_regularity(CosliceCat(base, req.coslice_bound), AuditOptions{req.threads, true}).report;
  r.comma_audit = audit_regularity(CommaCat(base, req.comma_bound), AuditOptions{req.threads, true}).report;
  return r;
}

Output cmd_nogo(const NoGoRequest& req) {
  const NoGoReport r = run_nogo(req);
  return {r.conclusion() == Conclusion::obstruction_certified_at_bound ? kExitClean : kExitInconclusive, r.to_json()};
}

std::size_t resolve_threads(std::optional<std::size_t> flag) {
  if (flag) {
    if (*flag == 0) throw UsageError("--threads must be positive");
    return *flag;
  }
  if (const char* env = std::getenv("FINCAT_THREADS"); env && *env) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (*end != '\0' || v == 0) throw UsageError(std::string("FINCAT_THREADS must be a positive integer, got '") + env + "'");
    return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string render(const Json& report, Format format) {
  if (format == Format::json) return report.dump(2) + "\n";
  return render_text(report);
}

} // namespace fincat::cli
