#include "fincat/json.hpp"

#include <sstream>

#include "fincat/error.hpp"

namespace fincat {

namespace {

template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error&) {
    throw;
  } catch (const nlohmann::json::exception& e) {
    throw InvariantViolation(std::string(what) + ": malformed input: " + e.what());
  }
}

const Json& field(const Json& j, const char* key, const char* what) {
  if (!j.is_object()) throw InvariantViolation(std::string(what) + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InvariantViolation(std::string(what) + ": missing key \"" + key + "\"");
  return *it;
}

std::vector<Elem> index_array(const Json& j, const char* what) {
  if (!j.is_array()) throw InvariantViolation(std::string(what) + ": expected an array of indices");
  std::vector<Elem> out;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<long long>() < 0) {
      throw InvariantViolation(std::string(what) + ": indices must be non-negative integers");
    }
    out.push_back(v.get<Elem>());
  }
  return out;
}

std::string rel_key(const FinPoset& shape, Elem p, Elem q) {
  return shape.carrier().label(p) + "<=" + shape.carrier().label(q);
}

void render(const Json& j, int indent, std::ostringstream& out);

bool is_scalar_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& v : j)
    if (v.is_structured() && !is_scalar_array(v)) return false;
  return true;
}

void render(const Json& j, int indent, std::ostringstream& out) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const Json& v = it.value();
      if (v.is_object() && !v.empty()) {
        out << pad << it.key() << ":\n";
        render(v, indent + 1, out);
      } else if (v.is_array() && !is_scalar_array(v)) {
        out << pad << it.key() << ":\n";
        render(v, indent + 1, out);
      } else {
        out << pad << it.key() << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
      }
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      const Json& v = j[i];
      if (v.is_structured() && !is_scalar_array(v)) {
        out << pad << "- [" << i << "]\n";
        render(v, indent + 1, out);
      } else {
        out << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
      }
    }
  } else {
    out << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

} // namespace

Json to_json(const FinSet& x) { return Json{{"labels", x.labels()}}; }

Json to_json(const FinFn& f) {
  return Json{{"dom", to_json(f.dom())}, {"cod", to_json(f.cod())}, {"table", f.table()}};
}

Json to_json(const FinRel& r) {
  Json pairs = Json::array();
  for (const auto& [x, y] : r.pairs()) pairs.push_back({x, y});
  return Json{{"dom", to_json(r.dom())}, {"cod", to_json(r.cod())}, {"pairs", pairs}};
}

Json to_json(const Partition& p) {
  Json ids = Json::array();
  for (auto c : p.class_ids()) ids.push_back(c);
  return Json{{"carrier", to_json(p.carrier())}, {"class_of", ids}};
}

Json to_json(const FinPreorder& x) {
  Json leq = Json::array();
  for (Elem i = 0; i < x.size(); ++i) {
    Json row = Json::array();
    for (Elem k = 0; k < x.size(); ++k) row.push_back(x.leq(i, k) ? 1 : 0);
    leq.push_back(row);
  }
  return Json{{"elements", x.carrier().labels()}, {"leq", leq}};
}

Json to_json(const MonotoneMap& f) {
  return Json{{"dom", to_json(f.dom())}, {"cod", to_json(f.cod())}, {"table", f.table()}};
}

Json to_json(const CoslObj& x) { return Json{{"base", to_json(x.base())}, {"arrow", to_json(x.arrow())}}; }

Json to_json(const CoslMor& f) {
  return Json{{"src", to_json(f.src())}, {"dst", to_json(f.dst())}, {"map", to_json(f.map())}};
}

Json to_json(const SynObj& x) {
  Json obj = Json::object();
  Json arr = Json::object();
  const auto& shape = x.shape();
  for (Elem p = 0; p < x.size(); ++p) obj[shape.carrier().label(p)] = to_json(x.obj(p).arrow());
  for (Elem p = 0; p < x.size(); ++p)
    for (Elem q = 0; q < x.size(); ++q)
      if (shape.leq(p, q)) arr[rel_key(shape, p, q)] = to_json(x.arr(p, q));
  return Json{{"shape", to_json(static_cast<const FinPreorder&>(shape))},
              {"base", to_json(x.base())},
              {"obj", obj},
              {"arr", arr}};
}

Json to_json(const SynMor& f) {
  return Json{{"src", to_json(f.src())}, {"dst", to_json(f.dst())}, {"map", to_json(f.map())}};
}

Json to_json(const RAnObj& x) { return Json{{"arrow", to_json(x.arrow())}}; }

FinSet finset_from_json(const Json& j) {
  return guarded("FinSet", [&] {
    const Json& labels = field(j, "labels", "FinSet");
    if (!labels.is_array()) throw InvariantViolation("FinSet: labels must be an array");
    std::vector<std::string> out;
    for (const auto& v : labels) {
      if (!v.is_string()) throw InvariantViolation("FinSet: labels must be strings");
      out.push_back(v.get<std::string>());
    }
    return FinSet(std::move(out));
  });
}

FinFn finfn_from_json(const Json& j) {
  return guarded("FinFn", [&] {
    return FinFn(finset_from_json(field(j, "dom", "FinFn")), finset_from_json(field(j, "cod", "FinFn")),
                 index_array(field(j, "table", "FinFn"), "FinFn"));
  });
}

FinRel finrel_from_json(const Json& j) {
  return guarded("FinRel", [&] {
    const Json& pairs = field(j, "pairs", "FinRel");
    if (!pairs.is_array()) throw InvariantViolation("FinRel: pairs must be an array");
    std::vector<std::pair<Elem, Elem>> out;
    for (const auto& pr : pairs) {
      auto v = index_array(pr, "FinRel");
      if (v.size() != 2) throw InvariantViolation("FinRel: each pair must have two entries");
      out.emplace_back(v[0], v[1]);
    }
    return FinRel(finset_from_json(field(j, "dom", "FinRel")), finset_from_json(field(j, "cod", "FinRel")),
                  std::move(out));
  });
}

Partition partition_from_json(const Json& j) {
  return guarded("Partition", [&] {
    FinSet carrier = finset_from_json(field(j, "carrier", "Partition"));
    auto ids = index_array(field(j, "class_of", "Partition"), "Partition");
    if (ids.size() != carrier.size()) throw InvariantViolation("Partition: class_of must cover the carrier");
    std::size_t k = 0;
    for (auto c : ids) k = std::max(k, c + 1);
    std::vector<char> used(k, 0);
    for (auto c : ids) used[c] = 1;
    for (std::size_t c = 0; c < k; ++c) {
      if (!used[c]) throw InvariantViolation("Partition: class id " + std::to_string(c) + " is unused");
    }
    return Partition(std::move(carrier), ids);
  });
}

FinPreorder preorder_from_json(const Json& j) {
  return guarded("FinPreorder", [&] {
    const Json& elements = field(j, "elements", "FinPreorder");
    FinSet carrier = finset_from_json(Json{{"labels", elements}});
    const Json& leq = field(j, "leq", "FinPreorder");
    const std::size_t n = carrier.size();
    if (!leq.is_array() || leq.size() != n) throw InvariantViolation("FinPreorder: leq must have one row per element");
    std::vector<std::uint8_t> m;
    m.reserve(n * n);
    for (const auto& row : leq) {
      auto r = index_array(row, "FinPreorder");
      if (r.size() != n) throw InvariantViolation("FinPreorder: leq must be square");
      for (auto v : r) {
        if (v > 1) throw InvariantViolation("FinPreorder: leq entries must be 0 or 1");
        m.push_back(static_cast<std::uint8_t>(v));
      }
    }
    return FinPreorder(std::move(carrier), std::move(m));
  });
}

FinPoset poset_from_json(const Json& j) { return FinPoset(preorder_from_json(j)); }

MonotoneMap monotone_from_json(const Json& j) {
  return guarded("MonotoneMap", [&] {
    return MonotoneMap(preorder_from_json(field(j, "dom", "MonotoneMap")),
                       preorder_from_json(field(j, "cod", "MonotoneMap")),
                       index_array(field(j, "table", "MonotoneMap"), "MonotoneMap"));
  });
}

CoslObj coslobj_from_json(const Json& j) {
  return guarded("CoslObj", [&] {
    FinSet base = finset_from_json(field(j, "base", "CoslObj"));
    FinFn arrow = finfn_from_json(field(j, "arrow", "CoslObj"));
    if (!(arrow.dom() == base)) throw InvariantViolation("CoslObj: arrow.dom must equal base");
    return CoslObj(std::move(arrow));
  });
}

SynObj synobj_from_json(const Json& j) {
  return guarded("SynObj", [&] {
    FinPoset shape = poset_from_json(field(j, "shape", "SynObj"));
    FinSet base = finset_from_json(field(j, "base", "SynObj"));
    const Json& obj = field(j, "obj", "SynObj");
    const Json& arr = field(j, "arr", "SynObj");
    if (!obj.is_object() || !arr.is_object()) throw InvariantViolation("SynObj: obj and arr must be objects");
    const std::size_t n = shape.size();
    std::vector<CoslObj> objs;
    for (Elem p = 0; p < n; ++p) {
      const auto& lbl = shape.carrier().label(p);
      auto it = obj.find(lbl);
      if (it == obj.end()) throw InvariantViolation("SynObj: missing obj(" + lbl + ")");
      FinFn f = finfn_from_json(*it);
      if (!(f.dom() == base)) throw InvariantViolation("SynObj: obj(" + lbl + ") is not over the common base");
      objs.emplace_back(std::move(f));
    }
    std::vector<FinFn> arrows(n * n);
    for (Elem p = 0; p < n; ++p)
      for (Elem q = 0; q < n; ++q) {
        if (!shape.leq(p, q)) continue;
        const std::string key = rel_key(shape, p, q);
        auto it = arr.find(key);
        if (it != arr.end()) {
          arrows[p * n + q] = finfn_from_json(*it);
        } else if (p == q) {
          arrows[p * n + q] = FinFn::identity(objs[p].carrier());
        } else {
          throw InvariantViolation("SynObj: missing arr(" + key + ")");
        }
      }
    for (auto it = arr.begin(); it != arr.end(); ++it) {
      bool known = false;
      for (Elem p = 0; p < n && !known; ++p)
        for (Elem q = 0; q < n && !known; ++q) known = shape.leq(p, q) && rel_key(shape, p, q) == it.key();
      if (!known) throw InvariantViolation("SynObj: arr(" + it.key() + ") names no relation of the shape");
    }
    return SynObj(std::move(shape), std::move(base), std::move(objs), std::move(arrows));
  });
}

SynMor synmor_from_json(const Json& j, const SynObj& src, const SynObj& dst) {
  return guarded("SynMor", [&] {
    return SynMor(src, dst, monotone_from_json(field(j, "map", "SynMor")));
  });
}

SynMor synmor_from_json(const Json& j) {
  return guarded("SynMor", [&] {
    return synmor_from_json(j, synobj_from_json(field(j, "src", "SynMor")),
                            synobj_from_json(field(j, "dst", "SynMor")));
  });
}

RAnObj ranobj_from_json(const Json& j) {
  return guarded("RAnObj", [&] { return RAnObj(finfn_from_json(field(j, "arrow", "RAnObj"))); });
}

std::string render_text(const Json& j) {
  std::ostringstream out;
  render(j, 0, out);
  return out.str();
}

} // namespace fincat
