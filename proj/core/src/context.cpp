#include "lattica/context.hpp"

#include <algorithm>
#include <set>

namespace lattica {

namespace {

std::unordered_map<std::string, std::size_t> index_unique(const std::vector<std::string>& names,
                                                          const char* kind) {
  std::unordered_map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!idx.emplace(names[i], i).second) {
      throw ValidationError("duplicate", {names[i]},
                            std::string("duplicate ") + kind + " '" + names[i] + "'");
    }
  }
  return idx;
}

}  // namespace

FormalContext FormalContext::make(std::vector<std::string> objects,
                                  std::vector<std::string> attributes,
                                  std::span<const NamePair> incidence) {
  auto oi = index_unique(objects, "object");
  auto ai = index_unique(attributes, "attribute");
  std::vector<Bits> rows(objects.size(), Bits(attributes.size()));
  for (const auto& [o, a] : incidence) {
    auto io = oi.find(o);
    if (io == oi.end()) throw UnknownElement(o);
    auto ia = ai.find(a);
    if (ia == ai.end()) throw UnknownElement(a);
    rows[io->second].set(ia->second);
  }
  return from_rows(std::move(objects), std::move(attributes), std::move(rows));
}

FormalContext FormalContext::from_rows(std::vector<std::string> objects,
                                       std::vector<std::string> attributes,
                                       std::vector<Bits> rows) {
  FormalContext c;
  c.object_index_ = index_unique(objects, "object");
  c.attribute_index_ = index_unique(attributes, "attribute");
  if (rows.size() != objects.size())
    throw ValidationError("incidence", {}, "row count does not match object count");
  c.cols_.assign(attributes.size(), Bits(objects.size()));
  for (std::size_t o = 0; o < rows.size(); ++o) {
    if (rows[o].size() != attributes.size())
      throw ValidationError("incidence", {objects[o]}, "row width does not match attribute count");
    for_each_member(rows[o], [&](std::size_t a) { c.cols_[a].set(o); });
  }
  c.objects_ = std::move(objects);
  c.attributes_ = std::move(attributes);
  c.rows_ = std::move(rows);
  return c;
}

std::size_t FormalContext::object_index(const std::string& name) const {
  auto it = object_index_.find(name);
  if (it == object_index_.end()) throw UnknownElement(name);
  return it->second;
}

std::size_t FormalContext::attribute_index(const std::string& name) const {
  auto it = attribute_index_.find(name);
  if (it == attribute_index_.end()) throw UnknownElement(name);
  return it->second;
}

Bits FormalContext::object_set(std::span<const std::string> names) const {
  Bits b(object_count());
  for (const auto& n : names) b.set(object_index(n));
  return b;
}

Bits FormalContext::attribute_set(std::span<const std::string> names) const {
  Bits b(attribute_count());
  for (const auto& n : names) b.set(attribute_index(n));
  return b;
}

std::vector<std::string> FormalContext::object_names(const Bits& b) const {
  std::vector<std::string> out;
  for_each_member(b, [&](std::size_t i) { out.push_back(objects_[i]); });
  return out;
}

std::vector<std::string> FormalContext::attribute_names(const Bits& b) const {
  std::vector<std::string> out;
  for_each_member(b, [&](std::size_t i) { out.push_back(attributes_[i]); });
  return out;
}

Bits FormalContext::alpha(const Bits& objs) const {
  Bits r = full_bits(attribute_count());
  for_each_member(objs, [&](std::size_t o) { r &= rows_[o]; });
  return r;
}

Bits FormalContext::omega(const Bits& attrs) const {
  Bits r = full_bits(object_count());
  for_each_member(attrs, [&](std::size_t a) { r &= cols_[a]; });
  return r;
}

Bits FormalContext::approx_closure(const Bits& attrs, const Limits& limits) const {
  check_guard("approximable closure", limits.max_powerset_attributes, attrs.count());
  Bits r(attribute_count());
  for_each_subset(attrs, [&](const Bits& x) { r |= attr_closure(x); });
  return r;
}

std::vector<NamePair> FormalContext::incidence() const {
  std::vector<NamePair> out;
  for (std::size_t o = 0; o < rows_.size(); ++o)
    for_each_member(rows_[o], [&](std::size_t a) { out.emplace_back(objects_[o], attributes_[a]); });
  return out;
}

// ---- SemLattice -------------------------------------------------------------

SemLattice SemLattice::assemble(std::vector<std::string> attributes, std::vector<Bits> closed,
                                const AttributeClosure& closure) {
  std::map<std::string, Bits> by_name;
  for (auto& c : closed) by_name.emplace(encode_set(c, attributes), std::move(c));
  SemLattice s;
  std::vector<std::string> names;
  for (auto& [name, set] : by_name) {
    s.lookup_.emplace(set, s.closed_.size());
    names.push_back(name);
    s.closed_.push_back(std::move(set));
  }
  auto poset = FinitePoset::by_inclusion(std::move(names), s.closed_);
  auto lattice = JoinSemilattice::from_poset(std::move(poset));
  const auto n = s.closed_.size();
  if (s.closed_[lattice.bottom()] != closure(Bits(attributes.size())))
    throw ValidationError("sem-bottom", {}, "least closed set is not the closure of the empty set");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (s.closed_[lattice.join(i, j)] != closure(s.closed_[i] | s.closed_[j])) {
        throw ValidationError("sem-join", {lattice.poset().name(i), lattice.poset().name(j)},
                              "join of closed sets is not the closure of their union");
      }
    }
  }
  s.attributes_ = std::move(attributes);
  s.lattice_ = std::make_shared<const JoinSemilattice>(std::move(lattice));
  return s;
}

SemLattice SemLattice::by_powerset(std::vector<std::string> attributes,
                                   const AttributeClosure& closure, const Limits& limits) {
  check_guard("powerset closure scan", limits.max_powerset_attributes, attributes.size());
  std::set<Bits> closed;
  for_each_subset(full_bits(attributes.size()), [&](const Bits& x) { closed.insert(closure(x)); });
  return assemble(std::move(attributes), {closed.begin(), closed.end()}, closure);
}

SemLattice SemLattice::by_saturation(std::vector<std::string> attributes,
                                     const AttributeClosure& closure) {
  const auto n = attributes.size();
  std::set<Bits> closed{closure(Bits(n))};
  std::vector<Bits> frontier{*closed.begin()};
  for (std::size_t a = 0; a < n; ++a) {
    auto c = closure(singleton_bits(n, a));
    if (closed.insert(c).second) frontier.push_back(c);
  }
  std::vector<Bits> generators(closed.begin(), closed.end());
  while (!frontier.empty()) {
    auto x = std::move(frontier.back());
    frontier.pop_back();
    for (const auto& g : generators) {
      auto c = closure(x | g);
      if (closed.insert(c).second) frontier.push_back(std::move(c));
    }
  }
  return assemble(std::move(attributes), {closed.begin(), closed.end()}, closure);
}

SemLattice SemLattice::from_closed_sets(std::vector<std::string> attributes,
                                        std::vector<Bits> closed,
                                        const AttributeClosure& closure) {
  for (const auto& c : closed) {
    if (c.size() != attributes.size() || closure(c) != c)
      throw ValidationError("closed", {encode_set(c, attributes)}, "set is not closed");
  }
  return assemble(std::move(attributes), std::move(closed), closure);
}

std::optional<std::size_t> SemLattice::find(const Bits& closed) const {
  auto it = lookup_.find(closed);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t SemLattice::index_of(const Bits& closed) const {
  if (auto i = find(closed)) return *i;
  throw UnknownElement(closed.size() == attributes_.size() ? encode_set(closed, attributes_)
                                                           : "<attribute set>");
}

SemLattice sem_lattice(const FormalContext& p, const Limits& limits) {
  auto closure = [&p](const Bits& x) { return p.attr_closure(x); };
  if (p.attribute_count() <= limits.max_powerset_attributes)
    return SemLattice::by_powerset(p.attributes(), closure, limits);
  return SemLattice::by_saturation(p.attributes(), closure);
}

SubsetLattice alg_lattice(const FormalContext& p, const Limits& limits) {
  const auto n = p.attribute_count();
  check_guard("approximable concept scan", limits.max_powerset_attributes, n);
  const std::uint64_t total = std::uint64_t{1} << n;
  // c(Y) = union of aw(X) over X subset of Y = aw(Y) u union over y of c(Y - y)
  std::vector<Bits> c(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    c[mask] = p.attr_closure(bits_from_mask(n, mask));
    for (std::size_t y = 0; y < n; ++y)
      if (mask >> y & 1u) c[mask] |= c[mask & ~(std::uint64_t{1} << y)];
  }
  std::set<Bits> image(c.begin(), c.end());
  return SubsetLattice::make(p.attributes(), {image.begin(), image.end()});
}

FormalContext context_of_semilattice(const JoinSemilattice& s) {
  const auto& p = s.poset();
  std::vector<Bits> rows;
  for (std::size_t o = 0; o < p.size(); ++o) rows.push_back(p.down(o));
  return FormalContext::from_rows(p.names(), p.names(), std::move(rows));
}

ClosureOperator attribute_closure_operator(const FormalContext& p, const SubsetLattice& powerset) {
  if (powerset.carrier() != p.attributes())
    throw MismatchError("powerset carrier is not the attribute set of the context");
  std::vector<std::size_t> table(powerset.size());
  for (std::size_t x = 0; x < powerset.size(); ++x)
    table[x] = powerset.index_of(p.attr_closure(powerset.members(x)));
  return ClosureOperator::make(powerset.shared(), std::move(table));
}

}  // namespace lattica
