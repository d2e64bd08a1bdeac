#include "fincat/coslice.hpp"

#include <algorithm>

#include "fincat/error.hpp"

namespace fincat {

CoslMor::CoslMor(CoslObj src, CoslObj dst, FinFn map)
    : src_(std::move(src)), dst_(std::move(dst)), map_(std::move(map)) {
  if (!(src_.base() == dst_.base())) throw InvariantViolation("coslice morphism: objects over different bases");
  if (!(map_.dom() == src_.carrier()) || !(map_.cod() == dst_.carrier())) {
    throw InvariantViolation("coslice morphism: map has the wrong endpoints");
  }
  if (!(compose(map_, src_.arrow()) == dst_.arrow())) {
    throw InvariantViolation("coslice morphism: triangle map . src.arrow == dst.arrow fails");
  }
}

CoslMor CoslMor::identity(const CoslObj& x) {
  return CoslMor(Unchecked{}, x, x, FinFn::identity(x.carrier()));
}

CoslMor make_coslmor_unchecked(CoslObj src, CoslObj dst, FinFn map) {
  return CoslMor(CoslMor::Unchecked{}, std::move(src), std::move(dst), std::move(map));
}

CoslMor compose(const CoslMor& g, const CoslMor& f) {
  if (!(f.dst() == g.src())) throw ShapeMismatch("compose: coslice morphisms are not composable");
  return make_coslmor_unchecked(f.src(), g.dst(), compose(g.map(), f.map()));
}

std::vector<CoslMor> coslice_homs(const CoslObj& src, const CoslObj& dst) {
  std::vector<CoslMor> out;
  if (!(src.base() == dst.base())) return out;
  const auto& a = src.arrow();
  const auto& b = dst.arrow();
  // Entries on the image of src.arrow are forced; the rest range freely.
  constexpr Elem unset = static_cast<Elem>(-1);
  std::vector<Elem> forced(src.carrier().size(), unset);
  for (Elem z = 0; z < a.dom().size(); ++z) {
    Elem& slot = forced[a(z)];
    if (slot == unset) {
      slot = b(z);
    } else if (slot != b(z)) {
      return out;
    }
  }
  std::vector<Elem> free;
  for (Elem x = 0; x < forced.size(); ++x)
    if (forced[x] == unset) free.push_back(x);
  for (const auto& choice : FunctionTables(free.size(), dst.carrier().size())) {
    std::vector<Elem> t = forced;
    for (std::size_t i = 0; i < free.size(); ++i) t[free[i]] = choice[i];
    out.push_back(make_coslmor_unchecked(src, dst, make_fn_unchecked(src.carrier(), dst.carrier(), std::move(t))));
  }
  // FunctionTables order over the free slots is lexicographic over full tables too.
  return out;
}

// ---------------------------------------------------------------------------

SynObj::SynObj() : SynObj(Unchecked{}, FinPoset{}, FinSet{}, {}, {}) {}

SynObj::SynObj(Unchecked, FinPoset shape, FinSet base, std::vector<CoslObj> obj, std::vector<FinFn> arr)
    : rep_(std::make_shared<const Rep>(Rep{std::move(shape), std::move(base), std::move(obj), std::move(arr)})) {}

SynObj::SynObj(FinPoset shape, FinSet base, std::vector<CoslObj> obj, std::vector<FinFn> arr)
    : SynObj(Unchecked{}, std::move(shape), std::move(base), std::move(obj), std::move(arr)) {
  const auto& r = *rep_;
  const std::size_t n = r.shape.size();
  auto lbl = [&](Elem p) { return r.shape.carrier().label(p); };
  if (r.obj.size() != n) throw InvariantViolation("synthetic object: one decoration per shape element is required");
  if (r.arr.size() != n * n) throw InvariantViolation("synthetic object: arrow table must have n*n slots");
  for (Elem p = 0; p < n; ++p) {
    if (!(r.obj[p].base() == r.base)) {
      throw InvariantViolation("synthetic object: obj(" + lbl(p) + ") is not over the common base");
    }
  }
  for (Elem p = 0; p < n; ++p)
    for (Elem q = 0; q < n; ++q) {
      if (!r.shape.leq(p, q)) continue;
      const FinFn& f = r.arr[p * n + q];
      const std::string name = "arr(" + lbl(p) + "<=" + lbl(q) + ")";
      if (!(f.dom() == r.obj[p].carrier()) || !(f.cod() == r.obj[q].carrier())) {
        throw InvariantViolation("synthetic object: " + name + " has the wrong endpoints");
      }
      if (!(compose(f, r.obj[p].arrow()) == r.obj[q].arrow())) {
        throw InvariantViolation("synthetic object: " + name + " . obj(" + lbl(p) + ") != obj(" + lbl(q) + ")");
      }
      if (p == q && !(f == FinFn::identity(r.obj[p].carrier()))) {
        throw InvariantViolation("synthetic object: " + name + " is not the identity");
      }
    }
  for (Elem p = 0; p < n; ++p)
    for (Elem q = 0; q < n; ++q) {
      if (!r.shape.leq(p, q)) continue;
      for (Elem s = 0; s < n; ++s) {
        if (!r.shape.leq(q, s)) continue;
        if (!(compose(r.arr[q * n + s], r.arr[p * n + q]) == r.arr[p * n + s])) {
          throw InvariantViolation("synthetic object: arr(" + lbl(q) + "<=" + lbl(s) + ") . arr(" + lbl(p) +
                                   "<=" + lbl(q) + ") != arr(" + lbl(p) + "<=" + lbl(s) + ")");
        }
      }
    }
}

SynObj make_synobj_unchecked(FinPoset shape, FinSet base, std::vector<CoslObj> obj, std::vector<FinFn> arr) {
  return SynObj(SynObj::Unchecked{}, std::move(shape), std::move(base), std::move(obj), std::move(arr));
}

SynObj SynObj::name_of(const CoslObj& x) {
  FinPoset point = FinPoset::chain(FinSet({"*"}));
  return make_synobj_unchecked(point, x.base(), {x}, {FinFn::identity(x.carrier())});
}

SynObj SynObj::constant(const FinPoset& shape, const CoslObj& x) {
  const std::size_t n = shape.size();
  std::vector<FinFn> arr(n * n);
  const FinFn id = FinFn::identity(x.carrier());
  for (Elem p = 0; p < n; ++p)
    for (Elem q = 0; q < n; ++q)
      if (shape.leq(p, q)) arr[p * n + q] = id;
  return make_synobj_unchecked(shape, x.base(), std::vector<CoslObj>(n, x), std::move(arr));
}

const FinFn& SynObj::arr(Elem p, Elem q) const {
  if (!rep_->shape.leq(p, q)) throw ShapeMismatch("synthetic object: no arrow for unrelated elements");
  return rep_->arr[p * size() + q];
}

SynObj SynObj::reindex(const MonotoneMap& h) const {
  if (!(h.cod() == static_cast<const FinPreorder&>(shape()))) {
    throw ShapeMismatch("reindex: map does not land in the shape");
  }
  const std::size_t n = h.dom().size();
  std::vector<CoslObj> obj;
  obj.reserve(n);
  for (Elem p = 0; p < n; ++p) obj.push_back(this->obj(h(p)));
  std::vector<FinFn> arr(n * n);
  for (Elem p = 0; p < n; ++p)
    for (Elem q = 0; q < n; ++q)
      if (h.dom().leq(p, q)) arr[p * n + q] = this->arr(h(p), h(q));
  return make_synobj_unchecked(FinPoset(h.dom()), base(), std::move(obj), std::move(arr));
}

bool operator==(const SynObj& a, const SynObj& b) {
  if (a.rep_ == b.rep_) return true;
  const auto& ra = *a.rep_;
  const auto& rb = *b.rep_;
  if (!(ra.shape == rb.shape) || !(ra.base == rb.base) || ra.obj != rb.obj) return false;
  const std::size_t n = ra.shape.size();
  for (Elem p = 0; p < n; ++p)
    for (Elem q = 0; q < n; ++q)
      if (ra.shape.leq(p, q) && !(ra.arr[p * n + q] == rb.arr[p * n + q])) return false;
  return true;
}

bool decorations_agree(const SynObj& src, const SynObj& dst, std::span<const Elem> h) {
  const std::size_t n = src.size();
  if (h.size() != n) return false;
  for (Elem p = 0; p < n; ++p) {
    if (h[p] >= dst.size() || !(dst.obj(h[p]) == src.obj(p))) return false;
  }
  for (Elem p = 0; p < n; ++p)
    for (Elem q = 0; q < n; ++q) {
      if (!src.shape().leq(p, q)) continue;
      if (!dst.shape().leq(h[p], h[q])) return false;
      if (!(dst.arr(h[p], h[q]) == src.arr(p, q))) return false;
    }
  return true;
}

SynMor::SynMor(SynObj src, SynObj dst, MonotoneMap map)
    : src_(std::move(src)), dst_(std::move(dst)), map_(std::move(map)) {
  if (!(map_.dom() == static_cast<const FinPreorder&>(src_.shape())) ||
      !(map_.cod() == static_cast<const FinPreorder&>(dst_.shape()))) {
    throw InvariantViolation("synthetic morphism: map does not go between the two shapes");
  }
  if (!(src_.base() == dst_.base())) throw InvariantViolation("synthetic morphism: different bases");
  const auto& sl = src_.shape().carrier();
  const auto& dl = dst_.shape().carrier();
  for (Elem p = 0; p < src_.size(); ++p) {
    if (!(dst_.obj(map_(p)) == src_.obj(p))) {
      throw InvariantViolation("synthetic morphism: dst.obj(" + dl.label(map_(p)) + ") != src.obj(" + sl.label(p) + ")");
    }
  }
  for (Elem p = 0; p < src_.size(); ++p)
    for (Elem q = 0; q < src_.size(); ++q) {
      if (!src_.shape().leq(p, q)) continue;
      if (!(dst_.arr(map_(p), map_(q)) == src_.arr(p, q))) {
        throw InvariantViolation("synthetic morphism: dst.arr(" + dl.label(map_(p)) + "<=" + dl.label(map_(q)) +
                                 ") != src.arr(" + sl.label(p) + "<=" + sl.label(q) + ")");
      }
    }
}

SynMor SynMor::identity(const SynObj& x) {
  return SynMor(Unchecked{}, x, x, MonotoneMap::identity(x.shape()));
}

SynMor make_synmor_unchecked(SynObj src, SynObj dst, MonotoneMap map) {
  return SynMor(SynMor::Unchecked{}, std::move(src), std::move(dst), std::move(map));
}

SynMor compose(const SynMor& g, const SynMor& f) {
  if (!(f.dst() == g.src())) throw ShapeMismatch("compose: synthetic morphisms are not composable");
  return make_synmor_unchecked(f.src(), g.dst(), compose(g.map(), f.map()));
}

} // namespace fincat
