#include "lattica/morphism.hpp"

#include <algorithm>

namespace lattica {

bool same_semilattice(const SemilatticeRef& a, const SemilatticeRef& b) {
  return a == b || (a && b && *a == *b);
}

bool same_lattice(const LatticeRef& a, const LatticeRef& b) {
  return a == b || (a && b && *a == *b);
}

std::optional<AxiomViolation> find_axiom_violation(const JoinSemilattice& source,
                                                   const JoinSemilattice& target,
                                                   std::span<const Bits> image) {
  const auto& sp = source.poset();
  const auto& tp = target.poset();
  if (image.size() != source.size())
    return AxiomViolation{"shape", {}, "relation rows do not match the source"};
  for (const auto& row : image)
    if (row.size() != target.size())
      return AxiomViolation{"shape", {}, "relation row width does not match the target"};

  for (std::size_t a = 0; a < source.size(); ++a) {
    if (!image[a].test(target.bottom())) {
      return AxiomViolation{"am1", {sp.name(a), tp.name(target.bottom())},
                            "'" + sp.name(a) + "' is not related to the target bottom"};
    }
  }
  for (std::size_t a = 0; a < source.size(); ++a) {
    const auto& row = image[a];
    for (auto b = row.find_first(); b != Bits::npos; b = row.find_next(b))
      for (auto c = row.find_next(b); c != Bits::npos; c = row.find_next(c))
        if (!row.test(target.join(b, c))) {
          return AxiomViolation{"am2", {sp.name(a), tp.name(b), tp.name(c)},
                                "'" + sp.name(a) + "' is related to '" + tp.name(b) + "' and '" +
                                    tp.name(c) + "' but not to their join"};
        }
  }
  for (std::size_t a = 0; a < source.size(); ++a) {
    const auto below = tp.down_set(image[a]);
    for (auto hi = sp.up(a).find_first(); hi != Bits::npos; hi = sp.up(a).find_next(hi)) {
      if (!below.is_subset_of(image[hi])) {
        const auto b = (below - image[hi]).find_first();
        return AxiomViolation{"am3", {sp.name(a), sp.name(hi), tp.name(b)},
                              "'" + sp.name(a) + "' <= '" + sp.name(hi) + "' but '" +
                                  tp.name(b) + "' is lost"};
      }
    }
  }
  return std::nullopt;
}

ApproximableMapping ApproximableMapping::make(SemilatticeRef source, SemilatticeRef target,
                                              std::vector<Bits> image) {
  if (!source || !target) throw MismatchError("approximable mapping needs both semilattices");
  if (auto v = find_axiom_violation(*source, *target, image))
    throw ValidationError(v->rule, v->witness, v->message);
  ApproximableMapping m;
  m.source_ = std::move(source);
  m.target_ = std::move(target);
  m.image_ = std::move(image);
  return m;
}

ApproximableMapping ApproximableMapping::from_pairs(
    SemilatticeRef source, SemilatticeRef target,
    std::span<const std::pair<std::size_t, std::size_t>> pairs) {
  std::vector<Bits> image(source->size(), Bits(target->size()));
  for (auto [a, b] : pairs) {
    if (a >= source->size() || b >= target->size())
      throw ValidationError("shape", {}, "pair index out of range");
    image[a].set(b);
  }
  return make(std::move(source), std::move(target), std::move(image));
}

ApproximableMapping ApproximableMapping::from_named_pairs(SemilatticeRef source,
                                                          SemilatticeRef target,
                                                          std::span<const NamePair> pairs) {
  std::vector<Bits> image(source->size(), Bits(target->size()));
  for (const auto& [a, b] : pairs) image[source->poset().index(a)].set(target->poset().index(b));
  return make(std::move(source), std::move(target), std::move(image));
}

ApproximableMapping ApproximableMapping::identity(SemilatticeRef s) {
  std::vector<Bits> image;
  for (std::size_t a = 0; a < s->size(); ++a) image.push_back(s->poset().down(a));
  return make(s, s, std::move(image));
}

ApproximableMapping ApproximableMapping::constant_bottom(SemilatticeRef source,
                                                         SemilatticeRef target) {
  std::vector<Bits> image(source->size(), singleton_bits(target->size(), target->bottom()));
  return make(std::move(source), std::move(target), std::move(image));
}

std::size_t ApproximableMapping::pair_count() const {
  std::size_t n = 0;
  for (const auto& row : image_) n += row.count();
  return n;
}

std::vector<std::pair<std::size_t, std::size_t>> ApproximableMapping::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < image_.size(); ++a)
    for_each_member(image_[a], [&](std::size_t b) { out.emplace_back(a, b); });
  return out;
}

std::vector<NamePair> ApproximableMapping::named_pairs() const {
  std::vector<NamePair> out;
  for (auto [a, b] : pairs()) out.emplace_back(source_->poset().name(a), target_->poset().name(b));
  std::sort(out.begin(), out.end());
  return out;
}

std::string ApproximableMapping::encoding() const {
  std::vector<std::string> parts;
  for (const auto& [a, b] : named_pairs()) parts.push_back(encode_pair(a, b));
  std::sort(parts.begin(), parts.end());
  std::string out = "{";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out.push_back(',');
    out += parts[i];
  }
  return out + "}";
}

ApproximableMapping compose(const ApproximableMapping& first, const ApproximableMapping& second) {
  if (!same_semilattice(first.target_ref(), second.source_ref()))
    throw MismatchError("cannot compose: target of the first mapping is not the source of the second");
  std::vector<Bits> image(first.source().size(), Bits(second.target().size()));
  for (std::size_t s = 0; s < image.size(); ++s)
    for_each_member(first.image(s), [&](std::size_t r) { image[s] |= second.image(r); });
  return ApproximableMapping::make(first.source_ref(), second.target_ref(), std::move(image));
}

// ---- Scott functions -------------------------------------------------------------

bool is_monotone(const FiniteLattice& source, const FiniteLattice& target,
                 std::span<const std::size_t> table) {
  for (std::size_t x = 0; x < source.size(); ++x)
    for (auto y = source.poset().up(x).find_first(); y != Bits::npos;
         y = source.poset().up(x).find_next(y))
      if (!target.leq(table[x], table[y])) return false;
  return true;
}

bool preserves_directed_suprema(const FiniteLattice& source, const FiniteLattice& target,
                                std::span<const std::size_t> table, const Limits& limits) {
  bool ok = true;
  for_each_directed_subset(source.poset(), limits, [&](const Bits& d) {
    if (!ok) return;
    Bits image = target.poset().none();
    for_each_member(d, [&](std::size_t x) { image.set(table[x]); });
    if (table[source.join_all(d)] != target.join_all(image)) ok = false;
  });
  return ok;
}

ScottFunction ScottFunction::make(LatticeRef source, LatticeRef target,
                                  std::vector<std::size_t> table, const Limits& limits) {
  if (!source || !target) throw MismatchError("Scott function needs both lattices");
  if (table.size() != source->size())
    throw ValidationError("shape", {}, "function table does not match the source");
  for (auto v : table)
    if (v >= target->size()) throw ValidationError("shape", {}, "function value out of range");
  const bool monotone = is_monotone(*source, *target, table);
  if (source->size() <= limits.max_directed_carrier) {
    const bool continuous = preserves_directed_suprema(*source, *target, table, limits);
    if (monotone != continuous)
      throw ValidationError("scott-continuity", {},
                            "monotonicity and directed-suprema preservation disagree");
  }
  if (!monotone) throw ValidationError("monotone", {}, "function is not monotone");
  ScottFunction f;
  f.source_ = std::move(source);
  f.target_ = std::move(target);
  f.table_ = std::move(table);
  return f;
}

ScottFunction ScottFunction::identity(LatticeRef l) {
  std::vector<std::size_t> table(l->size());
  for (std::size_t i = 0; i < table.size(); ++i) table[i] = i;
  return make(l, l, std::move(table));
}

ScottFunction compose(const ScottFunction& first, const ScottFunction& second) {
  if (!same_lattice(first.target_ref(), second.source_ref()))
    throw MismatchError("cannot compose: target of the first function is not the source of the second");
  std::vector<std::size_t> table(first.source().size());
  for (std::size_t x = 0; x < table.size(); ++x) table[x] = second(first(x));
  return ScottFunction::make(first.source_ref(), second.target_ref(), std::move(table));
}

ScottFunction idl_on_morphism(const ApproximableMapping& m, const Limits& limits) {
  const auto from = ideal_completion(m.source(), limits);
  const auto to = ideal_completion(m.target(), limits);
  std::vector<std::size_t> table(from.size());
  for (std::size_t i = 0; i < from.size(); ++i) {
    Bits acc = m.target().poset().none();
    for_each_member(from.members(i), [&](std::size_t a) { acc |= m.image(a); });
    table[i] = to.index_of(acc);
  }
  return ScottFunction::make(from.shared(), to.shared(), std::move(table), limits);
}

SemilatticeRef compact_semilattice(const FiniteLattice& l, const Limits& limits) {
  return std::make_shared<const JoinSemilattice>(JoinSemilattice::from_poset(compacts(l, limits)));
}

ApproximableMapping k_on_morphism(const ScottFunction& f, const Limits& limits) {
  const auto kl = compact_elements(f.source(), limits);
  const auto km = compact_elements(f.target(), limits);
  auto from = compact_semilattice(f.source(), limits);
  auto to = compact_semilattice(f.target(), limits);
  std::vector<Bits> image;
  for_each_member(kl, [&](std::size_t a) {
    image.push_back(compress_bits(f.target().poset().down(f(a)) & km, km));
  });
  return ApproximableMapping::make(std::move(from), std::move(to), std::move(image));
}

ScottFunction eta(const LatticeRef& l, const Limits& limits) {
  const auto k = compact_elements(*l, limits);
  const auto ks = compact_semilattice(*l, limits);
  const auto idl = ideal_completion(*ks, limits);
  std::vector<std::size_t> table(l->size());
  for (std::size_t x = 0; x < l->size(); ++x)
    table[x] = idl.index_of(compress_bits(l->poset().down(x) & k, k));
  return ScottFunction::make(l, idl.shared(), std::move(table), limits);
}

ApproximableMapping epsilon(const SemilatticeRef& s, const Limits& limits) {
  const auto idl = ideal_completion(*s, limits);
  const auto k = compact_elements(idl.lattice(), limits);
  auto kidl = compact_semilattice(idl.lattice(), limits);
  std::vector<Bits> image(s->size(), Bits(k.count()));
  for (std::size_t a = 0; a < s->size(); ++a) {
    std::size_t rank = 0;
    for_each_member(k, [&](std::size_t i) {
      if (idl.members(i).is_subset_of(s->poset().down(a))) image[a].set(rank);
      ++rank;
    });
  }
  return ApproximableMapping::make(s, std::move(kidl), std::move(image));
}

ApproximableMapping epsilon_inverse(const SemilatticeRef& s, const Limits& limits) {
  const auto idl = ideal_completion(*s, limits);
  const auto k = compact_elements(idl.lattice(), limits);
  auto kidl = compact_semilattice(idl.lattice(), limits);
  std::vector<Bits> image;
  for_each_member(k, [&](std::size_t i) {
    const auto& ideal = idl.members(i);
    auto b = s->poset().greatest(ideal);
    if (!b || s->poset().down(*b) != ideal)
      throw ValidationError("principal", {idl.lattice().poset().name(i)},
                            "compact ideal is not principal");
    image.push_back(s->poset().down(*b));
  });
  return ApproximableMapping::make(std::move(kidl), s, std::move(image));
}

bool is_isomorphism(const ScottFunction& f) {
  return is_order_isomorphism(f.source().poset(), f.target().poset(), f.table());
}

std::vector<ApproximableMapping> enumerate_mappings(const SemilatticeRef& source,
                                                    const SemilatticeRef& target,
                                                    const Limits& limits) {
  const auto idl = ideal_completion(*target, limits);
  const auto& sp = source->poset();
  const auto& ip = idl.lattice().poset();
  const auto n = sp.size();
  std::vector<std::size_t> value(n);
  std::vector<ApproximableMapping> out;
  auto search = [&](auto&& self, std::size_t a) -> void {
    if (a == n) {
      check_guard("approximable mapping enumeration", limits.max_mappings, out.size() + 1);
      std::vector<Bits> image;
      for (auto v : value) image.push_back(idl.members(v));
      out.push_back(ApproximableMapping::make(source, target, std::move(image)));
      return;
    }
    for (std::size_t v = 0; v < idl.size(); ++v) {
      bool ok = true;
      for (std::size_t b = 0; b < a && ok; ++b) {
        if (sp.leq(b, a) && !ip.leq(value[b], v)) ok = false;
        if (sp.leq(a, b) && !ip.leq(v, value[b])) ok = false;
      }
      if (!ok) continue;
      value[a] = v;
      self(self, a + 1);
    }
  };
  search(search, 0);
  std::vector<std::pair<std::string, std::size_t>> keys;
  for (std::size_t i = 0; i < out.size(); ++i) keys.emplace_back(out[i].encoding(), i);
  std::sort(keys.begin(), keys.end());
  std::vector<ApproximableMapping> sorted;
  sorted.reserve(out.size());
  for (const auto& [key, i] : keys) sorted.push_back(std::move(out[i]));
  return sorted;
}

}  // namespace lattica
