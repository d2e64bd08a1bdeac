#include "fincat/instances.hpp"

#include <map>

#include "fincat/error.hpp"

namespace fincat {

FinSetCat::FinSetCat(std::size_t bound) : bound_(bound) {
  for (std::size_t n = 0; n <= bound; ++n) objects_.push_back(FinSet::canonical(n));
}

std::optional<PullbackSquare<FinFn>> FinSetCat::pullback(const FinFn& f, const FinFn& g) const {
  auto pb = pullback_fn(f, g);
  return PullbackSquare<FinFn>{f, g, std::move(pb.proj1), std::move(pb.proj2)};
}

std::optional<FinFn> FinSetCat::coequalizer(const FinFn& f, const FinFn& g) const {
  return coequalizer_fn(f, g).projection;
}

std::optional<FinFn> FinSetCat::factor_through_epi(const FinFn& q, const FinFn& f) const {
  return factor_through_surjection(q, f);
}

FinPosCat::FinPosCat(std::size_t bound) : bound_(bound) {
  for (auto& p : enumerate_posets_up_to(bound)) objects_.push_back(std::move(p));
}

std::optional<PullbackSquare<MonotoneMap>> FinPosCat::pullback(const MonotoneMap& f, const MonotoneMap& g) const {
  auto pb = pullback_pos(f, g);
  return PullbackSquare<MonotoneMap>{f, g, std::move(pb.proj1), std::move(pb.proj2)};
}

std::optional<MonotoneMap> FinPosCat::coequalizer(const MonotoneMap& f, const MonotoneMap& g) const {
  return coequalizer_pos(f, g).projection;
}

std::optional<MonotoneMap> FinPosCat::factor_through_epi(const MonotoneMap& q, const MonotoneMap& f) const {
  return factor_through_surjection(q, f);
}

std::vector<std::vector<Elem>> restricted_growth_strings(std::size_t length, std::size_t n) {
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> s(length, 0);
  auto go = [&](auto& self, std::size_t k, std::size_t used) -> void {
    if (k == length) {
      out.push_back(s);
      return;
    }
    for (Elem v = 0; v <= used && v < n; ++v) {
      s[k] = v;
      self(self, k + 1, std::max<std::size_t>(used, v + 1));
    }
  };
  go(go, 0, 0);
  return out;
}

CosliceCat::CosliceCat(FinSet base, std::size_t bound) : base_(std::move(base)), bound_(bound) {
  for (std::size_t n = 0; n <= bound; ++n) {
    const FinSet x = FinSet::canonical(n);
    for (auto& rgs : restricted_growth_strings(base_.size(), n)) {
      objects_.emplace_back(make_fn_unchecked(base_, x, std::move(rgs)));
    }
  }
}

std::optional<PullbackSquare<CoslMor>> CosliceCat::pullback(const CoslMor& f, const CoslMor& g) const {
  if (!(f.dst() == g.dst())) throw ShapeMismatch("pullback: codomain mismatch");
  auto pb = pullback_fn(f.map(), g.map());
  std::map<std::pair<Elem, Elem>, Elem> index;
  for (Elem i = 0; i < pb.apex.size(); ++i) index.emplace(std::pair{pb.proj1(i), pb.proj2(i)}, i);
  std::vector<Elem> t;
  const auto& a = f.src().arrow();
  const auto& b = g.src().arrow();
  for (Elem z = 0; z < a.dom().size(); ++z) t.push_back(index.at({a(z), b(z)}));
  CoslObj apex(make_fn_unchecked(a.dom(), pb.apex, std::move(t)));
  return PullbackSquare<CoslMor>{f, g, make_coslmor_unchecked(apex, f.src(), std::move(pb.proj1)),
                                 make_coslmor_unchecked(apex, g.src(), std::move(pb.proj2))};
}

std::optional<CoslMor> CosliceCat::coequalizer(const CoslMor& f, const CoslMor& g) const {
  if (!(f.src() == g.src()) || !(f.dst() == g.dst())) throw ShapeMismatch("coequalizer: non-parallel pair");
  auto q = coequalizer_fn(f.map(), g.map());
  CoslObj target(fincat::compose(q.projection, f.dst().arrow()));
  return make_coslmor_unchecked(f.dst(), std::move(target), std::move(q.projection));
}

std::optional<CoslMor> CosliceCat::factor_through_epi(const CoslMor& q, const CoslMor& f) const {
  if (!(q.src() == f.src())) throw ShapeMismatch("factor_through_epi: different sources");
  auto m = factor_through_surjection(q.map(), f.map());
  if (!m) return std::nullopt;
  return make_coslmor_unchecked(q.dst(), f.dst(), std::move(*m));
}

CoslCoproduct coslice_coproduct(const CoslObj& x, const CoslObj& y) {
  if (!(x.base() == y.base())) throw ShapeMismatch("coslice_coproduct: different bases");
  std::vector<std::string> labels;
  for (const auto& l : x.carrier().labels()) labels.push_back(pair_label("1", l));
  for (const auto& l : y.carrier().labels()) labels.push_back(pair_label("2", l));
  const FinSet sum(std::move(labels));
  std::vector<Elem> t1(x.carrier().size());
  std::vector<Elem> t2(y.carrier().size());
  for (Elem i = 0; i < t1.size(); ++i) t1[i] = i;
  for (Elem i = 0; i < t2.size(); ++i) t2[i] = x.carrier().size() + i;
  const FinFn i1 = make_fn_unchecked(x.carrier(), sum, std::move(t1));
  const FinFn i2 = make_fn_unchecked(y.carrier(), sum, std::move(t2));
  auto q = coequalizer_fn(compose(i1, x.arrow()), compose(i2, y.arrow()));
  CoslObj object(compose(q.projection, compose(i1, x.arrow())));
  CoslMor in1(x, object, compose(q.projection, i1));
  CoslMor in2(y, object, compose(q.projection, i2));
  return {std::move(object), std::move(in1), std::move(in2)};
}

} // namespace fincat
