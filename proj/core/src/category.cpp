#include "lattica/category.hpp"

#include <algorithm>

namespace lattica {

namespace {

std::pair<Bits, Bits> split(const Bits& z, std::size_t left) {
  Bits x(left), y(z.size() - left);
  for_each_member(z, [&](std::size_t i) {
    if (i < left) x.set(i);
    else y.set(i - left);
  });
  return {std::move(x), std::move(y)};
}

void require_same(const SemilatticeRef& a, const SemilatticeRef& b, const std::string& what) {
  if (!same_semilattice(a, b)) throw MismatchError(what);
}

}  // namespace

std::string tag_name(Side side, const std::string& name) {
  return (side == Side::left ? "l:" : "r:") + name;
}

FormalContext terminal() { return FormalContext::from_rows({}, {}, {}); }

ApproximableMapping bang(const SemLattice& p) {
  auto one = sem_lattice(terminal());
  return ApproximableMapping::constant_bottom(p.shared(), one.shared());
}

ProductContext product_context(const FormalContext& p, const FormalContext& q) {
  ProductContext out;
  const auto np = p.attribute_count(), nq = q.attribute_count();
  std::vector<std::string> objects, attributes;
  for (std::size_t a = 0; a < np; ++a) {
    attributes.push_back(tag_name(Side::left, p.attributes()[a]));
    out.attribute_side.push_back(Side::left);
    out.attribute_origin.push_back(a);
  }
  for (std::size_t a = 0; a < nq; ++a) {
    attributes.push_back(tag_name(Side::right, q.attributes()[a]));
    out.attribute_side.push_back(Side::right);
    out.attribute_origin.push_back(a);
  }
  std::vector<Bits> rows;
  for (std::size_t o = 0; o < p.object_count(); ++o) {
    objects.push_back(tag_name(Side::left, p.objects()[o]));
    out.object_side.push_back(Side::left);
    out.object_origin.push_back(o);
    Bits row(np + nq);
    for_each_member(p.row(o), [&](std::size_t a) { row.set(a); });
    for (std::size_t a = 0; a < nq; ++a) row.set(np + a);
    rows.push_back(std::move(row));
  }
  for (std::size_t o = 0; o < q.object_count(); ++o) {
    objects.push_back(tag_name(Side::right, q.objects()[o]));
    out.object_side.push_back(Side::right);
    out.object_origin.push_back(o);
    Bits row(np + nq);
    for (std::size_t a = 0; a < np; ++a) row.set(a);
    for_each_member(q.row(o), [&](std::size_t a) { row.set(np + a); });
    rows.push_back(std::move(row));
  }
  out.context = FormalContext::from_rows(std::move(objects), std::move(attributes), std::move(rows));
  out.left_attribute_count = np;
  return out;
}

Product Product::make(const FormalContext& p, const FormalContext& q, const Limits& limits) {
  Product out;
  out.context_ = product_context(p, q);
  out.left_ = sem_lattice(p, limits);
  out.right_ = sem_lattice(q, limits);
  out.sem_ = sem_lattice(out.context_.context, limits);
  const auto nl = out.left_.size(), nr = out.right_.size();
  constexpr auto unset = static_cast<std::size_t>(-1);
  out.pair_index_.assign(nl, std::vector<std::size_t>(nr, unset));
  for (std::size_t z = 0; z < out.sem_.size(); ++z) {
    auto [x, y] = split(out.sem_.closed(z), out.context_.left_attribute_count);
    auto xi = out.left_.find(x);
    auto yi = out.right_.find(y);
    if (!xi || !yi)
      throw ValidationError("product-closure", {out.sem_.name(z)},
                            "closed set of the product does not split into closed sets");
    out.components_.emplace_back(*xi, *yi);
    out.pair_index_[*xi][*yi] = z;
  }
  for (std::size_t x = 0; x < nl; ++x)
    for (std::size_t y = 0; y < nr; ++y)
      if (out.pair_index_[x][y] == unset)
        throw ValidationError("product-size", {out.left_.name(x), out.right_.name(y)},
                              "disjoint union of closed sets is not closed in the product");
  return out;
}

ApproximableMapping proj_left(const Product& pq) {
  std::vector<Bits> image;
  const auto& order = pq.left().semilattice().poset();
  for (std::size_t z = 0; z < pq.sem().size(); ++z) image.push_back(order.down(pq.components(z).first));
  return ApproximableMapping::make(pq.sem().shared(), pq.left().shared(), std::move(image));
}

ApproximableMapping proj_right(const Product& pq) {
  std::vector<Bits> image;
  const auto& order = pq.right().semilattice().poset();
  for (std::size_t z = 0; z < pq.sem().size(); ++z)
    image.push_back(order.down(pq.components(z).second));
  return ApproximableMapping::make(pq.sem().shared(), pq.right().shared(), std::move(image));
}

ApproximableMapping pair(const Product& pq, const ApproximableMapping& to_left,
                         const ApproximableMapping& to_right) {
  require_same(to_left.source_ref(), to_right.source_ref(), "pairing needs a common source");
  require_same(to_left.target_ref(), pq.left().shared(), "left mapping must target Sem(P)");
  require_same(to_right.target_ref(), pq.right().shared(), "right mapping must target Sem(Q)");
  std::vector<Bits> image;
  for (std::size_t r = 0; r < to_left.source().size(); ++r) {
    Bits row(pq.sem().size());
    for_each_member(to_left.image(r), [&](std::size_t x) {
      for_each_member(to_right.image(r), [&](std::size_t y) { row.set(pq.pair_index(x, y)); });
    });
    image.push_back(std::move(row));
  }
  return ApproximableMapping::make(to_left.source_ref(), pq.sem().shared(), std::move(image));
}

std::string fresh_name(const std::string& base, const std::vector<std::string>& taken) {
  std::string name = base + "+";
  while (std::find(taken.begin(), taken.end(), name) != taken.end()) name += "+";
  return name;
}

FormalContext plus(const FormalContext& p) {
  auto objects = p.objects();
  auto attributes = p.attributes();
  objects.push_back(fresh_name("g", p.objects()));
  attributes.push_back(fresh_name("m", p.attributes()));
  const auto n = attributes.size();
  std::vector<Bits> rows;
  for (std::size_t o = 0; o < p.object_count(); ++o) {
    Bits row = p.row(o);
    row.resize(n);
    row.set(n - 1);
    rows.push_back(std::move(row));
  }
  rows.push_back(full_bits(n));
  return FormalContext::from_rows(std::move(objects), std::move(attributes), std::move(rows));
}

TensorContext tensor_context(const FormalContext& p, const FormalContext& q,
                             const Limits& limits) {
  TensorContext out;
  out.left_plus = plus(p);
  out.right_plus = plus(q);
  const auto& lp = out.left_plus;
  const auto& rp = out.right_plus;
  const auto n1 = lp.attribute_count(), n2 = rp.attribute_count();
  check_guard("tensor attributes", limits.max_tensor_attributes, n1 * n2);
  std::vector<std::string> objects, attributes;
  for (std::size_t a = 0; a < n1; ++a)
    for (std::size_t b = 0; b < n2; ++b) {
      attributes.push_back(encode_pair(lp.attributes()[a], rp.attributes()[b]));
      out.attribute_pairs.emplace_back(a, b);
    }
  std::vector<Bits> rows;
  for (std::size_t o1 = 0; o1 < lp.object_count(); ++o1)
    for (std::size_t o2 = 0; o2 < rp.object_count(); ++o2) {
      objects.push_back(encode_pair(lp.objects()[o1], rp.objects()[o2]));
      out.object_pairs.emplace_back(o1, o2);
      Bits row(n1 * n2);
      for_each_member(lp.row(o1), [&](std::size_t a) {
        for_each_member(rp.row(o2), [&](std::size_t b) { row.set(a * n2 + b); });
      });
      rows.push_back(std::move(row));
    }
  out.context = FormalContext::from_rows(std::move(objects), std::move(attributes), std::move(rows));
  return out;
}

Tensor Tensor::make(const FormalContext& p, const FormalContext& q, const Limits& limits) {
  Tensor out;
  out.context_ = tensor_context(p, q, limits);
  out.sem_ = sem_lattice(out.context_.context, limits);
  out.product_ = Product::make(p, q, limits);
  return out;
}

std::pair<Bits, Bits> Tensor::projections(const Bits& pairs) const {
  const auto n1 = context_.left_plus.attribute_count();
  const auto n2 = context_.right_plus.attribute_count();
  Bits p1(n1), p2(n2);
  for_each_member(pairs, [&](std::size_t k) {
    p1.set(k / n2);
    p2.set(k % n2);
  });
  return {std::move(p1), std::move(p2)};
}

ApproximableMapping Tensor::iso_plus() const {
  const auto np = context_.left_plus.attribute_count() - 1;
  const auto nq = context_.right_plus.attribute_count() - 1;
  const auto& prod = product_.sem();
  std::vector<Bits> image;
  for (std::size_t x = 0; x < prod.size(); ++x) {
    const Bits& xs = prod.closed(x);
    Bits row(sem_.size());
    for (std::size_t y = 0; y < sem_.size(); ++y) {
      auto [p1, p2] = projections(sem_.closed(y));
      bool ok = true;
      for_each_member(p1, [&](std::size_t a) { ok = ok && (a >= np || xs.test(a)); });
      for_each_member(p2, [&](std::size_t b) { ok = ok && (b >= nq || xs.test(np + b)); });
      if (ok) row.set(y);
    }
    image.push_back(std::move(row));
  }
  return ApproximableMapping::make(prod.shared(), sem_.shared(), std::move(image));
}

ApproximableMapping Tensor::iso_minus() const {
  const auto np = context_.left_plus.attribute_count() - 1;
  const auto& prod = product_.sem();
  std::vector<Bits> image;
  for (std::size_t y = 0; y < sem_.size(); ++y) {
    auto [p1, p2] = projections(sem_.closed(y));
    Bits row(prod.size());
    for (std::size_t x = 0; x < prod.size(); ++x) {
      bool ok = true;
      for_each_member(prod.closed(x), [&](std::size_t a) {
        ok = ok && (a < np ? p1.test(a) : p2.test(a - np));
      });
      if (ok) row.set(x);
    }
    image.push_back(std::move(row));
  }
  return ApproximableMapping::make(sem_.shared(), prod.shared(), std::move(image));
}

bool Tensor::closed_sets_are_rectangles() const {
  const auto& lp = context_.left_plus;
  const auto& rp = context_.right_plus;
  for (const auto& y : sem_.closed_sets()) {
    auto [p1, p2] = projections(y);
    if (y.count() != p1.count() * p2.count()) return false;
    if (lp.attr_closure(p1) != p1 || rp.attr_closure(p2) != p2) return false;
  }
  return true;
}

FunctionSpace FunctionSpace::make(const SemLattice& p, const SemLattice& q, const Limits& limits) {
  FunctionSpace out;
  out.source_ = p;
  out.target_ = q;
  const auto n = p.size() * q.size();
  check_guard("function-space attributes", limits.max_funcspace_attributes, n);
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < q.size(); ++b) {
      out.attributes_.emplace_back(a, b);
      out.names_.push_back(encode_pair(p.name(a), q.name(b)));
    }
  out.literal_limit_ = limits.max_literal_funcspace_attributes;
  if (n <= out.literal_limit_) {
    std::vector<std::string> objects;
    std::vector<Bits> rows;
    for_each_subset(full_bits(n), [&](const Bits& o) {
      objects.push_back(encode_set(o, out.names_));
      Bits row(n);
      for (std::size_t k = 0; k < n; ++k)
        if (out.models(o, k)) row.set(k);
      rows.push_back(std::move(row));
    });
    out.literal_ = std::make_shared<const FormalContext>(
        FormalContext::from_rows(std::move(objects), out.names_, std::move(rows)));
  }
  const FunctionSpace& self = out;
  out.sem_ = SemLattice::by_saturation(out.names_,
                                       [&self](const Bits& x) { return self.saturate(x); });
  return out;
}

bool FunctionSpace::models(const Bits& object, std::size_t attribute) const {
  const auto& src = source_.semilattice();
  const auto& tgt = target_.semilattice();
  const auto [a, b] = attributes_[attribute];
  std::size_t bound = tgt.bottom();
  for_each_member(object, [&](std::size_t k) {
    const auto [ai, bi] = attributes_[k];
    if (src.poset().leq(ai, a)) bound = tgt.join(bound, bi);
  });
  return tgt.poset().leq(b, bound);
}

const FormalContext& FunctionSpace::literal_context() const {
  if (!literal_)
    throw GuardExceeded("literal function-space context", literal_limit_, attributes_.size());
  return *literal_;
}

Bits FunctionSpace::saturate(const Bits& attributes) const {
  const auto& src = source_.semilattice();
  const auto& tgt = target_.semilattice();
  const auto np = source_.size(), nq = target_.size();
  std::vector<Bits> image(np, Bits(nq));
  for_each_member(attributes, [&](std::size_t k) { image[k / nq].set(k % nq); });
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < np; ++a) {
      Bits next = image[a];
      next.set(tgt.bottom());
      for_each_member(src.poset().down(a), [&](std::size_t lower) { next |= image[lower]; });
      next = tgt.poset().down(tgt.join_all(next));
      if (next != image[a]) {
        image[a] = std::move(next);
        changed = true;
      }
    }
  }
  Bits out(np * nq);
  for (std::size_t a = 0; a < np; ++a)
    for_each_member(image[a], [&](std::size_t b) { out.set(a * nq + b); });
  return out;
}

Bits FunctionSpace::closure(const Bits& attributes, ClosureEngine engine) const {
  if (engine == ClosureEngine::literal) return literal_context().attr_closure(attributes);
  return saturate(attributes);
}

ApproximableMapping FunctionSpace::as_mapping(const Bits& pairs) const {
  const auto nq = target_.size();
  std::vector<Bits> image(source_.size(), Bits(nq));
  for_each_member(pairs, [&](std::size_t k) { image[k / nq].set(k % nq); });
  return ApproximableMapping::make(source_.shared(), target_.shared(), std::move(image));
}

Bits FunctionSpace::as_attributes(const ApproximableMapping& m) const {
  require_same(m.source_ref(), source_.shared(), "mapping source differs from Sem(P)");
  require_same(m.target_ref(), target_.shared(), "mapping target differs from Sem(Q)");
  Bits out(attributes_.size());
  for (std::size_t a = 0; a < source_.size(); ++a)
    for_each_member(m.image(a), [&](std::size_t b) { out.set(attribute_index(a, b)); });
  return out;
}

ApproximableMapping curry(const Product& pq, const FunctionSpace& qr,
                          const ApproximableMapping& m) {
  require_same(m.source_ref(), pq.sem().shared(), "mapping source is not Sem(P x Q)");
  require_same(m.target_ref(), qr.target().shared(), "mapping target is not Sem(R)");
  require_same(pq.right().shared(), qr.source().shared(), "function space is not over Q");
  const auto nr = qr.target().size();
  const auto& fs = qr.sem();
  std::vector<Bits> image;
  for (std::size_t x = 0; x < pq.left().size(); ++x) {
    Bits row(fs.size());
    for (std::size_t w = 0; w < fs.size(); ++w) {
      bool ok = true;
      for_each_member(fs.closed(w), [&](std::size_t k) {
        ok = ok && m.relates(pq.pair_index(x, k / nr), k % nr);
      });
      if (ok) row.set(w);
    }
    image.push_back(std::move(row));
  }
  return ApproximableMapping::make(pq.left().shared(), fs.shared(), std::move(image));
}

ApproximableMapping uncurry(const Product& pq, const FunctionSpace& qr,
                            const ApproximableMapping& m) {
  require_same(m.source_ref(), pq.left().shared(), "mapping source is not Sem(P)");
  require_same(m.target_ref(), qr.sem().shared(), "mapping target is not Sem([Q ~> R])");
  require_same(pq.right().shared(), qr.source().shared(), "function space is not over Q");
  const auto nr = qr.target().size();
  std::vector<Bits> image;
  for (std::size_t z = 0; z < pq.sem().size(); ++z) {
    const auto [x, y] = pq.components(z);
    Bits row(nr);
    for_each_member(m.image(x), [&](std::size_t w) {
      const Bits& pairs = qr.sem().closed(w);
      for (std::size_t r = 0; r < nr; ++r)
        if (pairs.test(y * nr + r)) row.set(r);
    });
    image.push_back(std::move(row));
  }
  return ApproximableMapping::make(pq.sem().shared(), qr.target().shared(), std::move(image));
}

}  // namespace lattica
