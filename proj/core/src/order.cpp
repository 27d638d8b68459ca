#include "lattica/order.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace lattica {

namespace {

std::unordered_map<std::string, std::size_t> index_names(const std::vector<std::string>& names) {
  std::unordered_map<std::string, std::size_t> idx;
  idx.reserve(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!idx.emplace(names[i], i).second)
      throw ValidationError("duplicate", {names[i]}, "duplicate element '" + names[i] + "'");
  }
  return idx;
}

std::vector<std::vector<std::size_t>> sup_table(const FinitePoset& p, bool upper,
                                                const char* rule) {
  const auto n = p.size();
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      auto pair = p.none();
      pair.set(a);
      pair.set(b);
      auto v = upper ? p.supremum(pair) : p.infimum(pair);
      if (!v) {
        throw ValidationError(rule, {p.name(a), p.name(b)},
                              std::string("no ") + (upper ? "least upper" : "greatest lower") +
                                  " bound for '" + p.name(a) + "' and '" + p.name(b) + "'");
      }
      t[a][b] = t[b][a] = *v;
    }
  }
  return t;
}

void check_table(const FinitePoset& p, const std::vector<std::vector<std::size_t>>& t,
                 bool upper, const char* rule) {
  const auto n = p.size();
  if (t.size() != n) throw ValidationError(rule, {}, std::string(rule) + " table has wrong size");
  for (std::size_t a = 0; a < n; ++a) {
    if (t[a].size() != n)
      throw ValidationError(rule, {}, std::string(rule) + " table has wrong size");
    for (std::size_t b = 0; b < n; ++b) {
      auto pair = p.none();
      pair.set(a);
      pair.set(b);
      auto v = upper ? p.supremum(pair) : p.infimum(pair);
      if (!v || t[a][b] != *v) {
        throw ValidationError(rule, {p.name(a), p.name(b)},
                              std::string(rule) + " table entry for '" + p.name(a) + "', '" +
                                  p.name(b) + "' is not the bound in the order");
      }
    }
  }
}

}  // namespace

// ---- FinitePoset -------------------------------------------------------------

FinitePoset FinitePoset::make(std::vector<std::string> elements, std::span<const NamePair> pairs) {
  auto idx = index_names(elements);
  const auto n = elements.size();
  std::vector<Bits> up(n, Bits(n));
  for (const auto& [a, b] : pairs) {
    auto ia = idx.find(a);
    if (ia == idx.end()) throw UnknownElement(a);
    auto ib = idx.find(b);
    if (ib == idx.end()) throw UnknownElement(b);
    up[ia->second].set(ib->second);
  }
  return from_relation(std::move(elements), std::move(up));
}

FinitePoset FinitePoset::from_relation(std::vector<std::string> elements, std::vector<Bits> up) {
  FinitePoset p;
  p.index_ = index_names(elements);
  p.names_ = std::move(elements);
  const auto n = p.names_.size();
  if (up.size() != n) throw ValidationError("relation", {}, "relation rows do not match elements");
  for (auto& row : up) {
    if (row.size() != n) throw ValidationError("relation", {}, "relation row has wrong width");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!up[i].test(i)) {
      throw ValidationError("reflexivity", {p.names_[i], p.names_[i]},
                            "missing reflexive pair ('" + p.names_[i] + "', '" + p.names_[i] + "')");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (up[i].test(j) && up[j].test(i)) {
        throw ValidationError("antisymmetry", {p.names_[i], p.names_[j]},
                              "'" + p.names_[i] + "' and '" + p.names_[j] +
                                  "' are below each other but distinct");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!up[i].test(j)) continue;
      if (!up[j].is_subset_of(up[i])) {
        auto k = (up[j] - up[i]).find_first();
        throw ValidationError("transitivity", {p.names_[i], p.names_[k]},
                              "'" + p.names_[i] + "' <= '" + p.names_[j] + "' <= '" +
                                  p.names_[k] + "' but ('" + p.names_[i] + "', '" +
                                  p.names_[k] + "') is missing");
      }
    }
  }
  p.down_.assign(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i)
    for_each_member(up[i], [&](std::size_t j) { p.down_[j].set(i); });
  p.up_ = std::move(up);
  return p;
}

FinitePoset FinitePoset::by_inclusion(std::vector<std::string> elements,
                                      std::span<const Bits> sets) {
  const auto n = sets.size();
  std::vector<Bits> up(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (sets[i].is_subset_of(sets[j])) up[i].set(j);
  return from_relation(std::move(elements), std::move(up));
}

std::size_t FinitePoset::index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw UnknownElement(name);
  return it->second;
}

std::optional<std::size_t> FinitePoset::find(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Bits FinitePoset::subset(std::span<const std::string> names) const {
  Bits b = none();
  for (const auto& n : names) b.set(index(n));
  return b;
}

std::vector<std::string> FinitePoset::names_of(const Bits& b) const {
  std::vector<std::string> out;
  for_each_member(b, [&](std::size_t i) { out.push_back(names_[i]); });
  return out;
}

Bits FinitePoset::down_set(const Bits& x) const {
  Bits r = none();
  for_each_member(x, [&](std::size_t i) { r |= down_[i]; });
  return r;
}

Bits FinitePoset::up_set(const Bits& x) const {
  Bits r = none();
  for_each_member(x, [&](std::size_t i) { r |= up_[i]; });
  return r;
}

Bits FinitePoset::upper_bounds(const Bits& x) const {
  Bits r = all();
  for_each_member(x, [&](std::size_t i) { r &= up_[i]; });
  return r;
}

Bits FinitePoset::lower_bounds(const Bits& x) const {
  Bits r = all();
  for_each_member(x, [&](std::size_t i) { r &= down_[i]; });
  return r;
}

Bits FinitePoset::minimal(const Bits& x) const {
  Bits r = none();
  for_each_member(x, [&](std::size_t i) {
    if ((down_[i] & x).count() == 1) r.set(i);
  });
  return r;
}

Bits FinitePoset::maximal(const Bits& x) const {
  Bits r = none();
  for_each_member(x, [&](std::size_t i) {
    if ((up_[i] & x).count() == 1) r.set(i);
  });
  return r;
}

std::optional<std::size_t> FinitePoset::least(const Bits& x) const {
  for (auto i = x.find_first(); i != Bits::npos; i = x.find_next(i))
    if (x.is_subset_of(up_[i])) return i;
  return std::nullopt;
}

std::optional<std::size_t> FinitePoset::greatest(const Bits& x) const {
  for (auto i = x.find_first(); i != Bits::npos; i = x.find_next(i))
    if (x.is_subset_of(down_[i])) return i;
  return std::nullopt;
}

std::optional<std::size_t> FinitePoset::supremum(const Bits& x) const {
  return least(upper_bounds(x));
}

std::optional<std::size_t> FinitePoset::infimum(const Bits& x) const {
  return greatest(lower_bounds(x));
}

bool FinitePoset::is_lower_set(const Bits& x) const { return down_set(x) == x; }
bool FinitePoset::is_upper_set(const Bits& x) const { return up_set(x) == x; }

bool FinitePoset::is_directed(const Bits& x) const {
  if (x.none()) return false;
  for (auto i = x.find_first(); i != Bits::npos; i = x.find_next(i))
    for (auto j = x.find_next(i); j != Bits::npos; j = x.find_next(j))
      if (!(up_[i] & up_[j]).intersects(x)) return false;
  return true;
}

bool FinitePoset::is_filtered(const Bits& x) const {
  if (x.none()) return false;
  for (auto i = x.find_first(); i != Bits::npos; i = x.find_next(i))
    for (auto j = x.find_next(i); j != Bits::npos; j = x.find_next(j))
      if (!(down_[i] & down_[j]).intersects(x)) return false;
  return true;
}

FinitePoset FinitePoset::dual() const { return from_relation(names_, down_); }

FinitePoset FinitePoset::restrict_to(const Bits& keep) const {
  std::vector<std::string> names;
  std::vector<Bits> up;
  for_each_member(keep, [&](std::size_t i) {
    names.push_back(names_[i]);
    up.push_back(compress_bits(up_[i], keep));
  });
  return from_relation(std::move(names), std::move(up));
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < size(); ++a)
    for_each_member(up_[a], [&](std::size_t b) {
      if (a != b && (up_[a] & down_[b]).count() == 2) out.emplace_back(a, b);
    });
  return out;
}

std::vector<NamePair> FinitePoset::leq_pairs() const {
  std::vector<NamePair> out;
  for (std::size_t a = 0; a < size(); ++a)
    for_each_member(up_[a], [&](std::size_t b) { out.emplace_back(names_[a], names_[b]); });
  std::sort(out.begin(), out.end());
  return out;
}

// ---- semilattices and lattices ---------------------------------------------

JoinSemilattice JoinSemilattice::from_poset(FinitePoset poset) {
  auto bottom = poset.least(poset.all());
  if (!bottom) throw ValidationError("bottom", {}, "join-semilattice needs a least element");
  JoinSemilattice s;
  s.join_ = sup_table(poset, true, "join");
  s.bottom_ = *bottom;
  s.poset_ = std::move(poset);
  return s;
}

JoinSemilattice JoinSemilattice::from_table(FinitePoset poset, std::size_t bottom,
                                            std::vector<std::vector<std::size_t>> join) {
  if (bottom >= poset.size() || poset.up(bottom) != poset.all())
    throw ValidationError("bottom", {}, "declared bottom is not the least element");
  check_table(poset, join, true, "join");
  JoinSemilattice s;
  s.poset_ = std::move(poset);
  s.bottom_ = bottom;
  s.join_ = std::move(join);
  return s;
}

std::size_t JoinSemilattice::join_all(const Bits& x) const {
  std::size_t r = bottom_;
  for_each_member(x, [&](std::size_t i) { r = join_[r][i]; });
  return r;
}

MeetSemilattice MeetSemilattice::from_poset(FinitePoset poset) {
  auto top = poset.greatest(poset.all());
  if (!top) throw ValidationError("top", {}, "meet-semilattice needs a greatest element");
  MeetSemilattice s;
  s.meet_ = sup_table(poset, false, "meet");
  s.top_ = *top;
  s.poset_ = std::move(poset);
  return s;
}

MeetSemilattice MeetSemilattice::from_table(FinitePoset poset, std::size_t top,
                                            std::vector<std::vector<std::size_t>> meet) {
  if (top >= poset.size() || poset.down(top) != poset.all())
    throw ValidationError("top", {}, "declared top is not the greatest element");
  check_table(poset, meet, false, "meet");
  MeetSemilattice s;
  s.poset_ = std::move(poset);
  s.top_ = top;
  s.meet_ = std::move(meet);
  return s;
}

std::size_t MeetSemilattice::meet_all(const Bits& x) const {
  std::size_t r = top_;
  for_each_member(x, [&](std::size_t i) { r = meet_[r][i]; });
  return r;
}

JoinSemilattice MeetSemilattice::dual() const { return JoinSemilattice::from_poset(poset_.dual()); }

FiniteLattice FiniteLattice::from_poset(FinitePoset poset) {
  auto bottom = poset.least(poset.all());
  auto top = poset.greatest(poset.all());
  if (!bottom || !top)
    throw ValidationError("bounds", {}, "lattice needs a least and a greatest element");
  FiniteLattice l;
  l.join_ = sup_table(poset, true, "join");
  l.meet_ = sup_table(poset, false, "meet");
  l.bottom_ = *bottom;
  l.top_ = *top;
  l.poset_ = std::move(poset);
  return l;
}

std::size_t FiniteLattice::join_all(const Bits& x) const {
  std::size_t r = bottom_;
  for_each_member(x, [&](std::size_t i) { r = join_[r][i]; });
  return r;
}

std::size_t FiniteLattice::meet_all(const Bits& x) const {
  std::size_t r = top_;
  for_each_member(x, [&](std::size_t i) { r = meet_[r][i]; });
  return r;
}

JoinSemilattice FiniteLattice::as_join_semilattice() const {
  return JoinSemilattice::from_table(poset_, bottom_, join_);
}

MeetSemilattice FiniteLattice::as_meet_semilattice() const {
  return MeetSemilattice::from_table(poset_, top_, meet_);
}

FiniteLattice FiniteLattice::dual() const { return from_poset(poset_.dual()); }

SubsetLattice SubsetLattice::make(std::vector<std::string> carrier, std::vector<Bits> sets) {
  std::map<std::string, Bits> by_name;
  for (auto& s : sets) {
    if (s.size() != carrier.size())
      throw MismatchError("subset width does not match carrier size");
    by_name.emplace(encode_set(s, carrier), std::move(s));
  }
  SubsetLattice out;
  std::vector<std::string> names;
  for (auto& [name, set] : by_name) {
    out.lookup_.emplace(set, out.sets_.size());
    names.push_back(name);
    out.sets_.push_back(set);
  }
  out.carrier_ = std::move(carrier);
  out.lattice_ = std::make_shared<const FiniteLattice>(
      FiniteLattice::from_poset(FinitePoset::by_inclusion(std::move(names), out.sets_)));
  return out;
}

std::optional<std::size_t> SubsetLattice::find(const Bits& set) const {
  auto it = lookup_.find(set);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t SubsetLattice::index_of(const Bits& set) const {
  if (auto i = find(set)) return *i;
  throw UnknownElement(set.size() == carrier_.size() ? encode_set(set, carrier_) : "<set>");
}

// ---- ideals and filters -----------------------------------------------------

bool is_ideal(const FinitePoset& p, const Bits& x) {
  return p.is_lower_set(x) && p.is_directed(x);
}

bool is_filter(const FinitePoset& p, const Bits& x) {
  return p.is_upper_set(x) && p.is_filtered(x);
}

Ideal Ideal::make(const FinitePoset& p, Bits members) {
  if (!is_ideal(p, members))
    throw ValidationError("ideal", p.names_of(members), "not a directed lower set");
  return Ideal(std::move(members));
}

Filter Filter::make(const FinitePoset& p, Bits members) {
  if (!is_filter(p, members))
    throw ValidationError("filter", p.names_of(members), "not a filtered upper set");
  return Filter(std::move(members));
}

// Beyond the subset-scan limit the candidates are the principal sets: a
// finite non-empty directed set contains its own upper bound.
std::vector<Bits> ideals(const FinitePoset& p, const Limits& limits) {
  std::vector<Bits> out;
  if (p.size() > limits.max_directed_carrier) {
    std::set<Bits> found;
    for (std::size_t x = 0; x < p.size(); ++x)
      if (is_ideal(p, p.down(x))) found.insert(p.down(x));
    return {found.begin(), found.end()};
  }
  for_each_subset(p.all(), [&](const Bits& x) {
    if (is_ideal(p, x)) out.push_back(x);
  });
  return out;
}

std::vector<Bits> filters(const FinitePoset& p, const Limits& limits) {
  std::vector<Bits> out;
  if (p.size() > limits.max_directed_carrier) {
    std::set<Bits> found;
    for (std::size_t x = 0; x < p.size(); ++x)
      if (is_filter(p, p.up(x))) found.insert(p.up(x));
    return {found.begin(), found.end()};
  }
  for_each_subset(p.all(), [&](const Bits& x) {
    if (is_filter(p, x)) out.push_back(x);
  });
  return out;
}

SubsetLattice ideal_completion(const JoinSemilattice& s, const Limits& limits) {
  return SubsetLattice::make(s.poset().names(), ideals(s.poset(), limits));
}

SubsetLattice flt_lattice(const MeetSemilattice& s, const Limits& limits) {
  return SubsetLattice::make(s.poset().names(), filters(s.poset(), limits));
}

SubsetLattice lower_set_lattice(const FinitePoset& p, const Limits& limits) {
  check_guard("lower-set enumeration", limits.max_directed_carrier, p.size());
  std::vector<Bits> out;
  for_each_subset(p.all(), [&](const Bits& x) {
    if (p.is_lower_set(x)) out.push_back(x);
  });
  return SubsetLattice::make(p.names(), std::move(out));
}

// ---- compactness ----------------------------------------------------------------

Bits compact_elements(const FiniteLattice& l, const Limits& limits) {
  const auto& p = l.poset();
  Bits failing = p.none();
  for_each_directed_subset(p, limits, [&](const Bits& d) {
    const auto sup = l.join_all(d);
    for_each_member(p.down(sup), [&](std::size_t c) {
      if (!p.up(c).intersects(d)) failing.set(c);
    });
  });
  return ~failing;
}

FinitePoset compacts(const FiniteLattice& l, const Limits& limits) {
  return l.poset().restrict_to(compact_elements(l, limits));
}

bool is_algebraic(const FiniteLattice& l, const Limits& limits) {
  const auto k = compact_elements(l, limits);
  for (std::size_t x = 0; x < l.size(); ++x)
    if (l.join_all(l.poset().down(x) & k) != x) return false;
  return true;
}

// ---- isomorphisms ---------------------------------------------------------------

bool is_order_isomorphism(const FinitePoset& from, const FinitePoset& to,
                          std::span<const std::size_t> map) {
  if (from.size() != to.size() || map.size() != from.size()) return false;
  Bits hit = to.none();
  for (auto v : map) {
    if (v >= to.size() || hit.test(v)) return false;
    hit.set(v);
  }
  for (std::size_t a = 0; a < from.size(); ++a)
    for (std::size_t b = 0; b < from.size(); ++b)
      if (from.leq(a, b) != to.leq(map[a], map[b])) return false;
  return true;
}

std::optional<std::vector<std::size_t>> find_order_isomorphism(const FinitePoset& from,
                                                               const FinitePoset& to) {
  const auto n = from.size();
  if (n != to.size()) return std::nullopt;
  std::vector<std::size_t> map(n);
  Bits used = to.none();
  auto consistent = [&](std::size_t a, std::size_t v) {
    if (from.up(a).count() != to.up(v).count() || from.down(a).count() != to.down(v).count())
      return false;
    for (std::size_t b = 0; b < a; ++b) {
      if (from.leq(a, b) != to.leq(v, map[b]) || from.leq(b, a) != to.leq(map[b], v))
        return false;
    }
    return true;
  };
  auto search = [&](auto&& self, std::size_t a) -> bool {
    if (a == n) return true;
    for (std::size_t v = 0; v < n; ++v) {
      if (used.test(v) || !consistent(a, v)) continue;
      map[a] = v;
      used.set(v);
      if (self(self, a + 1)) return true;
      used.reset(v);
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return map;
}

namespace {

IsoCheck finish_iso(const FinitePoset& from, const FinitePoset& to,
                    const std::vector<std::size_t>& map, IsoCheck check) {
  for (std::size_t i = 0; i < map.size(); ++i)
    check.mapping.emplace_back(from.name(i), to.name(map[i]));
  if (!check.failure.empty()) return check;
  if (!is_order_isomorphism(from, to, map)) {
    check.failure = "map is not an order isomorphism";
    return check;
  }
  check.ok = true;
  return check;
}

}  // namespace

IsoCheck iso_check(const FinitePoset& from, const FinitePoset& to,
                   const std::vector<std::size_t>& map) {
  return finish_iso(from, to, map, IsoCheck{});
}

CompletionIsoReport check_completion_isos(const JoinSemilattice& s, const FiniteLattice& l,
                                          const Limits& limits) {
  CompletionIsoReport report;
  {
    const auto idl = ideal_completion(s, limits);
    const auto k = compact_elements(idl.lattice(), limits);
    const auto kposet = idl.lattice().poset().restrict_to(k);
    std::vector<std::size_t> map(s.size());
    IsoCheck check;
    for (std::size_t a = 0; a < s.size(); ++a) {
      auto i = idl.find(s.poset().down(a));
      if (!i || !k.test(*i)) {
        check.failure = "principal ideal of '" + s.poset().name(a) + "' is not a compact ideal";
        break;
      }
      map[a] = compress_bits(singleton_bits(idl.size(), *i), k).find_first();
    }
    if (check.failure.empty() && kposet.size() != s.size())
      check.failure = "compact ideals outnumber the semilattice elements";
    report.principal_ideals = check.failure.empty() ? finish_iso(s.poset(), kposet, map, check)
                                                    : check;
  }
  {
    IsoCheck check;
    const auto k = compact_elements(l, limits);
    const auto kposet = l.poset().restrict_to(k);
    try {
      const auto ks = JoinSemilattice::from_poset(kposet);
      const auto idl = ideal_completion(ks, limits);
      std::vector<std::size_t> map(l.size());
      for (std::size_t x = 0; x < l.size() && check.failure.empty(); ++x) {
        auto i = idl.find(compress_bits(l.poset().down(x) & k, k));
        if (!i) check.failure = "down-set of '" + l.poset().name(x) + "' in K(L) is not an ideal";
        else map[x] = *i;
      }
      report.compact_ideals = check.failure.empty()
                                  ? finish_iso(l.poset(), idl.lattice().poset(), map, check)
                                  : check;
    } catch (const ValidationError& e) {
      check.failure = std::string("compact elements do not form a join-semilattice: ") + e.what();
      report.compact_ideals = check;
    }
  }
  return report;
}

// ---- closure operators ------------------------------------------------------------

ClosureOperator ClosureOperator::make(std::shared_ptr<const FiniteLattice> carrier,
                                      std::vector<std::size_t> table) {
  const auto& l = *carrier;
  const auto& p = l.poset();
  if (table.size() != l.size())
    throw ValidationError("closure", {}, "closure table size does not match the lattice");
  for (auto v : table)
    if (v >= l.size()) throw ValidationError("closure", {}, "closure value out of range");
  for (std::size_t x = 0; x < l.size(); ++x) {
    if (!p.leq(x, table[x]))
      throw ValidationError("inflationary", {p.name(x)}, "c(" + p.name(x) + ") is not above it");
    if (table[table[x]] != table[x])
      throw ValidationError("idempotent", {p.name(x)}, "c(c(" + p.name(x) + ")) != c(" + p.name(x) + ")");
  }
  for (std::size_t x = 0; x < l.size(); ++x)
    for_each_member(p.up(x), [&](std::size_t y) {
      if (!p.leq(table[x], table[y]))
        throw ValidationError("monotone", {p.name(x), p.name(y)},
                              "c is not monotone on '" + p.name(x) + "' <= '" + p.name(y) + "'");
    });
  ClosureOperator c;
  c.carrier_ = std::move(carrier);
  c.table_ = std::move(table);
  return c;
}

Bits ClosureOperator::image() const {
  Bits b(table_.size());
  for (auto v : table_) b.set(v);
  return b;
}

std::optional<std::vector<std::size_t>> infima_closure_violation(const FiniteLattice& l,
                                                                 const Bits& system) {
  if (!system.test(l.top())) return std::vector<std::size_t>{};
  for (auto x = system.find_first(); x != Bits::npos; x = system.find_next(x))
    for (auto y = system.find_next(x); y != Bits::npos; y = system.find_next(y))
      if (!system.test(l.meet(x, y))) return std::vector<std::size_t>{x, y};
  return std::nullopt;
}

ClosureOperator closure_from_system(std::shared_ptr<const FiniteLattice> l, const Bits& system) {
  if (auto bad = infima_closure_violation(*l, system)) {
    std::vector<std::string> w;
    for (auto i : *bad) w.push_back(l->poset().name(i));
    throw ValidationError("infima", w,
                          bad->empty() ? "closure system lacks the top element (empty meet)"
                                       : "closure system lacks the meet of '" + w[0] + "' and '" +
                                             w[1] + "'");
  }
  std::vector<std::size_t> table(l->size());
  for (std::size_t x = 0; x < l->size(); ++x)
    table[x] = l->meet_all(l->poset().up(x) & system);
  return ClosureOperator::make(std::move(l), std::move(table));
}

SubsetLattice powerset_lattice(std::vector<std::string> base, const Limits& limits) {
  check_guard("powerset lattice", limits.max_powerset_lattice_base, base.size());
  std::vector<Bits> sets;
  for_each_subset(full_bits(base.size()), [&](const Bits& x) { sets.push_back(x); });
  return SubsetLattice::make(std::move(base), std::move(sets));
}

ClosureOperator finite_extension(const ClosureOperator& c, const SubsetLattice& powerset) {
  if (!(c.carrier() == powerset.lattice()))
    throw MismatchError("closure operator is not defined on the given powerset lattice");
  std::vector<std::size_t> table(powerset.size());
  for (std::size_t x = 0; x < powerset.size(); ++x) {
    Bits acc(powerset.carrier().size());
    // every subset of a finite set is finite
    for_each_subset(powerset.members(x), [&](const Bits& a) {
      acc |= powerset.members(c(powerset.index_of(a)));
    });
    table[x] = powerset.index_of(acc);
  }
  return ClosureOperator::make(powerset.shared(), std::move(table));
}

// ---- primes ---------------------------------------------------------------------

Bits meet_primes(const FiniteLattice& l) {
  Bits out = l.poset().none();
  for (std::size_t x = 0; x < l.size(); ++x) {
    if (x == l.top()) continue;
    bool prime = true;
    for (std::size_t y = 0; y < l.size() && prime; ++y)
      for (std::size_t z = 0; z < l.size() && prime; ++z)
        if (l.leq(l.meet(y, z), x) && !l.leq(y, x) && !l.leq(z, x)) prime = false;
    if (prime) out.set(x);
  }
  return out;
}

Bits meet_irreducibles(const FiniteLattice& l) {
  Bits out = l.poset().none();
  for (std::size_t x = 0; x < l.size(); ++x) {
    if (x == l.top()) continue;
    bool irreducible = true;
    for (std::size_t y = 0; y < l.size() && irreducible; ++y)
      for (std::size_t z = 0; z < l.size() && irreducible; ++z)
        if (l.meet(y, z) == x && y != x && z != x) irreducible = false;
    if (irreducible) out.set(x);
  }
  return out;
}

Bits join_primes(const FiniteLattice& l) {
  Bits out = l.poset().none();
  for (std::size_t x = 0; x < l.size(); ++x) {
    if (x == l.bottom()) continue;
    bool prime = true;
    for (std::size_t y = 0; y < l.size() && prime; ++y)
      for (std::size_t z = 0; z < l.size() && prime; ++z)
        if (l.leq(x, l.join(y, z)) && !l.leq(x, y) && !l.leq(x, z)) prime = false;
    if (prime) out.set(x);
  }
  return out;
}

Bits join_irreducibles(const FiniteLattice& l) {
  Bits out = l.poset().none();
  for (std::size_t x = 0; x < l.size(); ++x) {
    if (x == l.bottom()) continue;
    bool irreducible = true;
    for (std::size_t y = 0; y < l.size() && irreducible; ++y)
      for (std::size_t z = 0; z < l.size() && irreducible; ++z)
        if (l.join(y, z) == x && y != x && z != x) irreducible = false;
    if (irreducible) out.set(x);
  }
  return out;
}

std::optional<std::array<std::size_t, 3>> distributivity_violation(const FiniteLattice& l) {
  const auto n = l.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z)))
          return std::array<std::size_t, 3>{x, y, z};
  return std::nullopt;
}

}  // namespace lattica
