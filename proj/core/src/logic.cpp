#include "lattica/logic.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>

namespace lattica {

namespace {

std::string set_name(const Bits& b, std::span<const std::string> names) {
  return encode_set(b, names);
}

std::size_t index_in(std::span<const std::string> names, const std::string& name) {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw UnknownElement(name);
  return static_cast<std::size_t>(it - names.begin());
}

void check_unique(const std::vector<std::string>& names) {
  auto sorted = names;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end())
    throw ValidationError("duplicate", {*dup}, "proposition '" + *dup + "' declared twice");
}

// Forward chaining of Horn rules (premise mask -> conclusion) from every subset.
std::vector<Bits> horn_table(std::size_t n,
                             const std::vector<std::pair<std::uint64_t, std::size_t>>& rules) {
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<Bits> table;
  table.reserve(total);
  for (std::uint64_t x = 0; x < total; ++x) {
    std::uint64_t c = x;
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& [premise, conclusion] : rules) {
        const auto bit = std::uint64_t{1} << conclusion;
        if ((premise & ~c) == 0 && !(c & bit)) {
          c |= bit;
          changed = true;
        }
      }
    }
    table.push_back(bits_from_mask(n, c));
  }
  return table;
}

// Inflationary, monotone on covers and idempotent. Returns the rule broken and
// its witness, naming `inflation` / `transfer` after the caller's axioms.
void validate_closure_table(const std::vector<std::string>& names, const std::vector<Bits>& table,
                            const std::string& inflation, const std::string& transfer) {
  const auto n = names.size();
  const std::uint64_t total = std::uint64_t{1} << n;
  if (table.size() != total)
    throw Error("consequence table has " + std::to_string(table.size()) + " rows, expected " +
                std::to_string(total));
  for (const auto& row : table)
    if (row.size() != n) throw Error("consequence table row has the wrong width");
  for (std::uint64_t x = 0; x < total; ++x) {
    const Bits xs = bits_from_mask(n, x);
    if (!xs.is_subset_of(table[x])) {
      const auto a = (xs - table[x]).find_first();
      throw ValidationError(inflation, {set_name(xs, names), names[a]},
                            "a member of a premise set is not entailed by it");
    }
  }
  for (std::uint64_t x = 0; x < total; ++x) {
    const Bits& cx = table[x];
    const auto cm = mask_of(cx);
    if (table[cm] != cx) {
      const auto a = (table[cm] - cx).find_first();
      throw ValidationError(transfer,
                            {set_name(bits_from_mask(n, x), names), set_name(cx, names), names[a]},
                            "consequences of the consequences are not consequences");
    }
    for (std::size_t b = 0; b < n; ++b) {
      const auto y = x | std::uint64_t{1} << b;
      if (y == x || cx.is_subset_of(table[y])) continue;
      const auto a = (cx - table[y]).find_first();
      throw ValidationError(transfer,
                            {set_name(bits_from_mask(n, y), names),
                             set_name(bits_from_mask(n, x), names), names[a]},
                            "enlarging the premises loses a consequence");
    }
  }
}

void skip_space(std::string_view s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

bool atom_char(char c) {
  return !std::isspace(static_cast<unsigned char>(c)) && c != '&' && c != ',' && c != '(' &&
         c != ')';
}

Formula parse_conj(std::string_view s, std::size_t& i);

Formula parse_unit(std::string_view s, std::size_t& i) {
  skip_space(s, i);
  if (i >= s.size()) throw Error("formula: unexpected end of input");
  if (s[i] == '(') {
    ++i;
    auto f = parse_conj(s, i);
    skip_space(s, i);
    if (i >= s.size() || s[i] != ')') throw Error("formula: missing ')'");
    ++i;
    return f;
  }
  const auto start = i;
  while (i < s.size() && atom_char(s[i])) ++i;
  if (i == start) throw Error("formula: unexpected '" + std::string(1, s[i]) + "'");
  std::string name(s.substr(start, i - start));
  return name == "T" ? Formula::top() : Formula::atom(std::move(name));
}

Formula parse_conj(std::string_view s, std::size_t& i) {
  auto f = parse_unit(s, i);
  for (;;) {
    skip_space(s, i);
    if (i >= s.size() || (s[i] != '&' && s[i] != ',')) return f;
    ++i;
    f = Formula::conj(std::move(f), parse_unit(s, i));
  }
}

}  // namespace

// ---- formulas ----------------------------------------------------------------

Formula Formula::top() { return Formula{}; }

Formula Formula::atom(std::string name) {
  Formula f;
  f.kind_ = Kind::atom;
  f.name_ = std::move(name);
  return f;
}

Formula Formula::conj(Formula left, Formula right) {
  Formula f;
  f.kind_ = Kind::conj;
  f.left_ = std::make_shared<const Formula>(std::move(left));
  f.right_ = std::make_shared<const Formula>(std::move(right));
  return f;
}

std::string Formula::to_string() const {
  switch (kind_) {
    case Kind::top: return "T";
    case Kind::atom: return name_;
    case Kind::conj: return "(" + left_->to_string() + " & " + right_->to_string() + ")";
  }
  return {};
}

std::vector<std::string> Formula::atoms() const {
  std::vector<std::string> out;
  std::vector<const Formula*> stack{this};
  while (!stack.empty()) {
    const Formula* f = stack.back();
    stack.pop_back();
    if (f->kind_ == Kind::atom) {
      if (std::find(out.begin(), out.end(), f->name_) == out.end()) out.push_back(f->name_);
    } else if (f->kind_ == Kind::conj) {
      stack.push_back(f->right_.get());
      stack.push_back(f->left_.get());
    }
  }
  return out;
}

Bits Formula::normalize(std::span<const std::string> propositions) const {
  Bits out(propositions.size());
  for (const auto& a : atoms()) out.set(index_in(propositions, a));
  return out;
}

Formula parse_formula(std::string_view text) {
  std::size_t i = 0;
  auto f = parse_conj(text, i);
  skip_space(text, i);
  if (i != text.size()) throw Error("formula: trailing input at '" + std::string(text.substr(i)) + "'");
  return f;
}

// ---- information systems ---------------------------------------------------------

InformationSystem InformationSystem::close_entailment(std::vector<std::string> propositions,
                                                      std::span<const Entailment> raw,
                                                      const Limits& limits) {
  check_unique(propositions);
  const auto n = propositions.size();
  check_guard("information-system propositions", limits.max_propositions, n);
  std::vector<std::pair<std::uint64_t, std::size_t>> rules;
  for (const auto& e : raw) {
    std::uint64_t premise = 0;
    for (const auto& p : e.premises) premise |= std::uint64_t{1} << index_in(propositions, p);
    rules.emplace_back(premise, index_in(propositions, e.conclusion));
  }
  InformationSystem out;
  out.table_ = horn_table(n, rules);
  out.propositions_ = std::move(propositions);
  return out;
}

InformationSystem InformationSystem::from_table(std::vector<std::string> propositions,
                                                std::vector<Bits> table, const Limits& limits) {
  check_unique(propositions);
  check_guard("information-system propositions", limits.max_propositions, propositions.size());
  validate_closure_table(propositions, table, "ISi", "ISii");
  InformationSystem out;
  out.propositions_ = std::move(propositions);
  out.table_ = std::move(table);
  return out;
}

std::vector<std::pair<Bits, std::size_t>> InformationSystem::pairs() const {
  std::vector<std::pair<Bits, std::size_t>> out;
  const auto n = size();
  for (std::uint64_t x = 0; x < table_.size(); ++x)
    for_each_member(table_[x], [&](std::size_t a) { out.emplace_back(bits_from_mask(n, x), a); });
  return out;
}

std::vector<std::pair<Bits, std::size_t>> InformationSystem::nontrivial_pairs() const {
  std::vector<std::pair<Bits, std::size_t>> out;
  const auto n = size();
  for (std::uint64_t x = 0; x < table_.size(); ++x)
    for_each_member(table_[x], [&](std::size_t a) {
      if (!(x >> a & 1u)) out.emplace_back(bits_from_mask(n, x), a);
    });
  return out;
}

// ---- CCP systems -------------------------------------------------------------------

CcpSystem CcpSystem::from_matrix(std::vector<std::string> propositions, std::vector<Bits> rel,
                                 const Limits& limits) {
  check_unique(propositions);
  const auto n = propositions.size();
  check_guard("materialized sequent propositions", limits.max_materialized_propositions, n);
  const std::uint64_t total = std::uint64_t{1} << n;
  if (rel.size() != total) throw Error("sequent matrix has the wrong number of rows");
  for (const auto& row : rel)
    if (row.size() != total) throw Error("sequent matrix row has the wrong width");
  auto name = [&](std::uint64_t m) { return set_name(bits_from_mask(n, m), propositions); };

  for (std::uint64_t x = 0; x < total; ++x) {
    if (!rel[x].test(0)) throw ValidationError("T", {name(x)}, "sequent X |- T is missing");
    if (!rel[x].test(x)) throw ValidationError("R", {name(x)}, "sequent X |- X is missing");
  }
  for (std::uint64_t x = 0; x < total; ++x)
    for (auto y = rel[x].find_first(); y != Bits::npos; y = rel[x].find_next(y))
      for (std::size_t b = 0; b < n; ++b)
        if ((y >> b & 1u) && !rel[x].test(y & ~(std::uint64_t{1} << b)))
          throw ValidationError("W", {name(x), name(y), propositions[b]},
                                "weakening the consequent is not derivable");
  std::vector<Bits> cons;
  cons.reserve(total);
  for (std::uint64_t x = 0; x < total; ++x) {
    std::uint64_t u = 0;
    for (auto y = rel[x].find_first(); y != Bits::npos; y = rel[x].find_next(y)) u |= y;
    if (!rel[x].test(u)) {
      for (auto y = rel[x].find_first(); y != Bits::npos; y = rel[x].find_next(y))
        for (auto z = rel[x].find_first(); z != Bits::npos; z = rel[x].find_next(z))
          if (!rel[x].test(y | z))
            throw ValidationError("And", {name(x), name(y), name(z)},
                                  "conjunction of two consequents is not derivable");
    }
    cons.push_back(bits_from_mask(n, u));
  }
  for (std::uint64_t x = 0; x < total; ++x)
    for (auto y = rel[x].find_first(); y != Bits::npos; y = rel[x].find_next(y))
      if (!rel[y].is_subset_of(rel[x])) {
        const auto z = (rel[y] - rel[x]).find_first();
        throw ValidationError("Cut", {name(x), name(y), name(z)},
                              "chained sequents do not compose");
      }
  CcpSystem out;
  out.propositions_ = std::move(propositions);
  out.cons_ = std::move(cons);
  return out;
}

CcpSystem CcpSystem::from_sequents(std::vector<std::string> propositions,
                                   std::span<const Sequent> sequents, const Limits& limits) {
  const auto n = propositions.size();
  check_guard("materialized sequent propositions", limits.max_materialized_propositions, n);
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<Bits> rel(total, Bits(total));
  for (const auto& [x, y] : sequents) {
    if (x.size() != n || y.size() != n) throw Error("sequent over a different proposition set");
    rel[mask_of(x)].set(mask_of(y));
  }
  return from_matrix(std::move(propositions), std::move(rel), limits);
}

CcpSystem CcpSystem::from_consequences(std::vector<std::string> propositions,
                                       std::vector<Bits> table, const Limits& limits) {
  check_unique(propositions);
  check_guard("CCP propositions", limits.max_propositions, propositions.size());
  validate_closure_table(propositions, table, "R", "Cut");
  CcpSystem out;
  out.propositions_ = std::move(propositions);
  out.cons_ = std::move(table);
  return out;
}

CcpSystem CcpSystem::generate(std::vector<std::string> propositions,
                              std::span<const Sequent> generators, const Limits& limits) {
  check_unique(propositions);
  const auto n = propositions.size();
  check_guard("CCP propositions", limits.max_propositions, n);
  std::vector<std::pair<std::uint64_t, std::size_t>> rules;
  for (const auto& [x, y] : generators) {
    if (x.size() != n || y.size() != n) throw Error("sequent over a different proposition set");
    for_each_member(y, [&](std::size_t b) { rules.emplace_back(mask_of(x), b); });
  }
  return from_consequences(std::move(propositions), horn_table(n, rules), limits);
}

bool CcpSystem::proves(const Bits& antecedent, const Bits& consequent) const {
  return consequent.is_subset_of(consequences(antecedent));
}

std::vector<Sequent> CcpSystem::sequents(const Limits& limits) const {
  const auto n = size();
  check_guard("materialized sequent propositions", limits.max_materialized_propositions, n);
  std::vector<Sequent> out;
  for (std::uint64_t x = 0; x < cons_.size(); ++x) {
    const auto u = mask_of(cons_[x]);
    const Bits xs = bits_from_mask(n, x);
    for (std::uint64_t y = 0; y < cons_.size(); ++y)
      if ((y & ~u) == 0) out.emplace_back(xs, bits_from_mask(n, y));
  }
  return out;
}

CcpSystem is_to_ccp(const InformationSystem& is, const Limits& limits) {
  const auto n = is.size();
  if (n > limits.max_materialized_propositions)
    return CcpSystem::from_consequences(is.propositions(), is.table(), limits);
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<Bits> rel(total, Bits(total));
  for (std::uint64_t x = 0; x < total; ++x) {
    const auto entailed = mask_of(is.table()[x]);
    for (std::uint64_t y = 0; y < total; ++y)
      if ((y & ~entailed) == 0) rel[x].set(y);
  }
  return CcpSystem::from_matrix(is.propositions(), std::move(rel), limits);
}

InformationSystem ccp_to_is(const CcpSystem& c, const Limits& limits) {
  const auto n = c.size();
  check_guard("information-system propositions", limits.max_propositions, n);
  std::vector<Bits> table;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    const Bits xs = bits_from_mask(n, x);
    Bits row(n);
    for (std::size_t b = 0; b < n; ++b)
      if (c.proves(xs, singleton_bits(n, b))) row.set(b);
    table.push_back(std::move(row));
  }
  return InformationSystem::from_table(c.propositions(), std::move(table), limits);
}

std::size_t LindenbaumAlgebra::class_of(const CcpSystem& c, const Bits& formula) const {
  const Bits& cons = c.consequences(formula);
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (classes[i] == cons) return i;
  throw MismatchError("formula belongs to a different deductive system");
}

LindenbaumAlgebra lindenbaum(const CcpSystem& c, const Limits& limits) {
  const auto n = c.size();
  check_guard("CCP propositions", limits.max_propositions, n);
  std::vector<std::pair<std::string, Bits>> named;
  {
    std::vector<Bits> seen;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
      const Bits& cons = c.consequences(bits_from_mask(n, x));
      if (std::find(seen.begin(), seen.end(), cons) == seen.end()) seen.push_back(cons);
    }
    for (auto& s : seen) named.emplace_back(set_name(s, c.propositions()), std::move(s));
  }
  std::sort(named.begin(), named.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  LindenbaumAlgebra out;
  std::vector<std::string> names;
  for (auto& [name, cons] : named) {
    names.push_back(name);
    out.classes.push_back(cons);
  }
  std::vector<Bits> up(names.size(), Bits(names.size()));
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = 0; j < names.size(); ++j)
      if (out.classes[j].is_subset_of(out.classes[i])) up[i].set(j);
  out.algebra = MeetSemilattice::from_poset(FinitePoset::from_relation(names, std::move(up)));
  return out;
}

CcpSystem semilattice_to_ccp(const MeetSemilattice& s, const Limits& limits) {
  const auto& p = s.poset();
  const auto n = p.size();
  check_guard("CCP propositions", limits.max_propositions, n);
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<std::size_t> meet(total, s.top());
  for (std::uint64_t x = 1; x < total; ++x) {
    const auto low = static_cast<std::size_t>(__builtin_ctzll(x));
    meet[x] = s.meet(meet[x & (x - 1)], low);
  }
  if (n <= limits.max_materialized_propositions) {
    std::vector<Bits> rel(total, Bits(total));
    for (std::uint64_t x = 0; x < total; ++x)
      for (std::uint64_t y = 0; y < total; ++y)
        if (p.leq(meet[x], meet[y])) rel[x].set(y);
    return CcpSystem::from_matrix(p.names(), std::move(rel), limits);
  }
  std::vector<Bits> table;
  for (std::uint64_t x = 0; x < total; ++x) table.push_back(p.up(meet[x]));
  return CcpSystem::from_consequences(p.names(), std::move(table), limits);
}

IsoCheck check_lindenbaum_roundtrip(const MeetSemilattice& s, const Limits& limits) {
  const auto c = semilattice_to_ccp(s, limits);
  const auto la = lindenbaum(c, limits);
  std::vector<std::size_t> map;
  for (std::size_t a = 0; a < s.size(); ++a)
    map.push_back(la.class_of(c, singleton_bits(s.size(), a)));
  return iso_check(s.poset(), la.algebra.poset(), map);
}

SubsetLattice elements(const InformationSystem& is) {
  std::vector<Bits> closed;
  const auto n = is.size();
  for (std::uint64_t x = 0; x < is.table().size(); ++x)
    if (mask_of(is.table()[x]) == x) closed.push_back(bits_from_mask(n, x));
  return SubsetLattice::make(is.propositions(), std::move(closed));
}

IsoCheck check_elements_are_filters(const InformationSystem& is, const Limits& limits) {
  const auto elems = elements(is);
  const auto c = is_to_ccp(is, limits);
  const auto la = lindenbaum(c, limits);
  const auto flt = flt_lattice(la.algebra, limits);
  std::vector<std::size_t> map;
  for (std::size_t e = 0; e < elems.size(); ++e) {
    Bits filter(la.classes.size());
    for (std::size_t i = 0; i < la.classes.size(); ++i)
      if (la.classes[i].is_subset_of(elems.members(e))) filter.set(i);
    auto f = flt.find(filter);
    if (!f) {
      IsoCheck check;
      check.failure = "image of element '" + elems.lattice().poset().name(e) + "' is not a filter";
      return check;
    }
    map.push_back(*f);
  }
  return iso_check(elems.lattice().poset(), flt.lattice().poset(), map);
}

InformationSystem context_to_is(const FormalContext& p, const Limits& limits) {
  const auto n = p.attribute_count();
  check_guard("information-system propositions", limits.max_propositions, n);
  std::vector<Bits> table;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x)
    table.push_back(p.attr_closure(bits_from_mask(n, x)));
  return InformationSystem::from_table(p.attributes(), std::move(table), limits);
}

// ---- RZ -------------------------------------------------------------------------

Bits minimal_upper_bounds(const FinitePoset& d, const Bits& x) {
  return d.minimal(d.upper_bounds(x));
}

bool rz_entails(const FinitePoset& d, const Bits& x, const Bits& y) {
  const auto mubs = minimal_upper_bounds(d, x);
  for (auto m = mubs.find_first(); m != Bits::npos; m = mubs.find_next(m))
    if (!y.is_subset_of(d.down(m))) return false;
  return true;
}

bool rz_entails(const FinitePoset& d, std::span<const std::string> x,
                std::span<const std::string> y) {
  return rz_entails(d, d.subset(x), d.subset(y));
}

RzReport rz_closure_check(const FormalContext& p, const Limits& limits) {
  const auto n = p.attribute_count();
  check_guard("attribute powerset", limits.max_powerset_attributes, n);
  const auto d = alg_lattice(p, limits);
  const auto& order = d.lattice().poset();
  std::vector<std::size_t> iota;
  for (std::size_t a = 0; a < n; ++a) iota.push_back(d.index_of(p.attr_closure(singleton_bits(n, a))));
  RzReport report;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    const Bits xs = bits_from_mask(n, x);
    Bits image(order.size());
    for_each_member(xs, [&](std::size_t a) { image.set(iota[a]); });
    Bits rz(n);
    for (std::size_t a = 0; a < n; ++a)
      if (rz_entails(order, image, singleton_bits(order.size(), iota[a]))) rz.set(a);
    const Bits closure = p.attr_closure(xs);
    ++report.sets_checked;
    if (rz != closure) {
      report.ok = false;
      report.witness = p.attribute_names(xs);
      report.closure = p.attribute_names(closure);
      report.rz_closure = p.attribute_names(rz);
      break;
    }
  }
  return report;
}

}  // namespace lattica
