#ifndef LATTICA_ORDER_HPP_
#define LATTICA_ORDER_HPP_

#include <array>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lattica/bits.hpp"
#include "lattica/error.hpp"

namespace lattica {

using NamePair = std::pair<std::string, std::string>;

/// A finite partially ordered set over opaque string identifiers.
///
/// Elements are addressed by their position in `names()`; that order is the
/// canonical enumeration order of every derived scan. The relation is stored
/// as one up-set and one down-set bitset per element.
class FinitePoset {
 public:
  FinitePoset() = default;

  /// Validates `pairs` as a partial order on `elements`. No closure is
  /// applied: the pairs must already be reflexive, antisymmetric and
  /// transitive. Throws ValidationError naming the first violated axiom.
  static FinitePoset make(std::vector<std::string> elements, std::span<const NamePair> pairs);

  /// `up[i]` holds every j with i <= j.
  static FinitePoset from_relation(std::vector<std::string> elements, std::vector<Bits> up);

  /// Poset of the given sets ordered by inclusion.
  static FinitePoset by_inclusion(std::vector<std::string> elements, std::span<const Bits> sets);

  std::size_t size() const noexcept { return names_.size(); }
  bool empty() const noexcept { return names_.empty(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::size_t index(const std::string& name) const;
  std::optional<std::size_t> find(const std::string& name) const;

  bool leq(std::size_t a, std::size_t b) const { return up_[a].test(b); }
  const Bits& up(std::size_t a) const { return up_[a]; }
  const Bits& down(std::size_t a) const { return down_[a]; }

  Bits none() const { return Bits(size()); }
  Bits all() const { return full_bits(size()); }
  Bits subset(std::span<const std::string> names) const;
  std::vector<std::string> names_of(const Bits& b) const;

  Bits down_set(const Bits& x) const;
  Bits up_set(const Bits& x) const;
  Bits upper_bounds(const Bits& x) const;
  Bits lower_bounds(const Bits& x) const;
  Bits minimal(const Bits& x) const;
  Bits maximal(const Bits& x) const;
  std::optional<std::size_t> least(const Bits& x) const;
  std::optional<std::size_t> greatest(const Bits& x) const;
  std::optional<std::size_t> supremum(const Bits& x) const;
  std::optional<std::size_t> infimum(const Bits& x) const;

  bool is_lower_set(const Bits& x) const;
  bool is_upper_set(const Bits& x) const;
  // Non-empty, and any two members have an upper (lower) bound inside.
  bool is_directed(const Bits& x) const;
  bool is_filtered(const Bits& x) const;

  FinitePoset dual() const;
  FinitePoset restrict_to(const Bits& keep) const;

  /// Hasse diagram edges (lower, upper), sorted by index.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;
  /// All (a, b) with a <= b, by name, sorted lexicographically.
  std::vector<NamePair> leq_pairs() const;

  friend bool operator==(const FinitePoset& a, const FinitePoset& b) {
    return a.names_ == b.names_ && a.up_ == b.up_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<Bits> up_;
  std::vector<Bits> down_;
};

/// Calls f(D) for every non-empty directed subset D of `p`, checking
/// directedness from the definition (pairwise upper bounds inside D).
template <typename F>
void for_each_directed_subset(const FinitePoset& p, const Limits& limits, F&& f) {
  check_guard("directed-subset enumeration", limits.max_directed_carrier, p.size());
  for_each_subset(p.all(), [&](const Bits& d) {
    if (p.is_directed(d)) f(d);
  });
}

/// Poset with a least element in which every pair has a least upper bound.
class JoinSemilattice {
 public:
  JoinSemilattice() = default;
  static JoinSemilattice from_poset(FinitePoset poset);
  /// Checks the supplied table against the order.
  static JoinSemilattice from_table(FinitePoset poset, std::size_t bottom,
                                    std::vector<std::vector<std::size_t>> join);

  const FinitePoset& poset() const noexcept { return poset_; }
  std::size_t size() const noexcept { return poset_.size(); }
  std::size_t bottom() const noexcept { return bottom_; }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a][b]; }
  std::size_t join_all(const Bits& x) const;
  bool leq(std::size_t a, std::size_t b) const { return poset_.leq(a, b); }
  const std::vector<std::vector<std::size_t>>& table() const noexcept { return join_; }

  friend bool operator==(const JoinSemilattice& a, const JoinSemilattice& b) {
    return a.poset_ == b.poset_;
  }

 private:
  FinitePoset poset_;
  std::size_t bottom_ = 0;
  std::vector<std::vector<std::size_t>> join_;
};

/// Order dual of JoinSemilattice: greatest element and binary meets.
class MeetSemilattice {
 public:
  MeetSemilattice() = default;
  static MeetSemilattice from_poset(FinitePoset poset);
  static MeetSemilattice from_table(FinitePoset poset, std::size_t top,
                                    std::vector<std::vector<std::size_t>> meet);

  const FinitePoset& poset() const noexcept { return poset_; }
  std::size_t size() const noexcept { return poset_.size(); }
  std::size_t top() const noexcept { return top_; }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a][b]; }
  std::size_t meet_all(const Bits& x) const;
  bool leq(std::size_t a, std::size_t b) const { return poset_.leq(a, b); }

  JoinSemilattice dual() const;

  friend bool operator==(const MeetSemilattice& a, const MeetSemilattice& b) {
    return a.poset_ == b.poset_;
  }

 private:
  FinitePoset poset_;
  std::size_t top_ = 0;
  std::vector<std::vector<std::size_t>> meet_;
};

/// Finite (hence complete) lattice with precomputed join and meet tables.
class FiniteLattice {
 public:
  FiniteLattice() = default;
  static FiniteLattice from_poset(FinitePoset poset);

  const FinitePoset& poset() const noexcept { return poset_; }
  std::size_t size() const noexcept { return poset_.size(); }
  std::size_t bottom() const noexcept { return bottom_; }
  std::size_t top() const noexcept { return top_; }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a][b]; }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a][b]; }
  std::size_t join_all(const Bits& x) const;
  std::size_t meet_all(const Bits& x) const;
  bool leq(std::size_t a, std::size_t b) const { return poset_.leq(a, b); }

  JoinSemilattice as_join_semilattice() const;
  MeetSemilattice as_meet_semilattice() const;
  FiniteLattice dual() const;

  friend bool operator==(const FiniteLattice& a, const FiniteLattice& b) {
    return a.poset_ == b.poset_;
  }

 private:
  FinitePoset poset_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
  std::vector<std::vector<std::size_t>> join_;
  std::vector<std::vector<std::size_t>> meet_;
};

/// A lattice whose elements are subsets of a named carrier, ordered by
/// inclusion. Element names are the canonical encodings of the member sets
/// and elements are sorted by that encoding.
class SubsetLattice {
 public:
  SubsetLattice() = default;
  /// Duplicates in `sets` are merged. Throws if inclusion is not a lattice.
  static SubsetLattice make(std::vector<std::string> carrier, std::vector<Bits> sets);

  const FiniteLattice& lattice() const noexcept { return *lattice_; }
  std::shared_ptr<const FiniteLattice> shared() const noexcept { return lattice_; }
  const std::vector<std::string>& carrier() const noexcept { return carrier_; }
  std::size_t size() const noexcept { return sets_.size(); }
  const Bits& members(std::size_t i) const { return sets_.at(i); }
  const std::vector<Bits>& sets() const noexcept { return sets_; }
  std::optional<std::size_t> find(const Bits& set) const;
  std::size_t index_of(const Bits& set) const;

 private:
  std::vector<std::string> carrier_;
  std::vector<Bits> sets_;
  std::map<Bits, std::size_t> lookup_;
  std::shared_ptr<const FiniteLattice> lattice_;
};

// ---- ideals and filters ----------------------------------------------------

class Ideal {
 public:
  /// Throws ValidationError unless `members` is a non-empty directed lower set.
  static Ideal make(const FinitePoset& p, Bits members);
  const Bits& members() const noexcept { return members_; }

 private:
  explicit Ideal(Bits m) : members_(std::move(m)) {}
  Bits members_;
};

class Filter {
 public:
  /// Throws ValidationError unless `members` is a non-empty filtered upper set.
  static Filter make(const FinitePoset& p, Bits members);
  const Bits& members() const noexcept { return members_; }

 private:
  explicit Filter(Bits m) : members_(std::move(m)) {}
  Bits members_;
};

bool is_ideal(const FinitePoset& p, const Bits& x);
bool is_filter(const FinitePoset& p, const Bits& x);

/// All ideals of `p`, found by scanning every subset while |p| is within
/// limits.max_directed_carrier and among the principal down-sets beyond.
std::vector<Bits> ideals(const FinitePoset& p, const Limits& limits = {});
std::vector<Bits> filters(const FinitePoset& p, const Limits& limits = {});

/// Ideals of S under inclusion. Meets are intersections; the join of two
/// ideals is the least ideal containing their union.
SubsetLattice ideal_completion(const JoinSemilattice& s, const Limits& limits = {});
SubsetLattice flt_lattice(const MeetSemilattice& s, const Limits& limits = {});
/// All lower sets of `p` under inclusion.
SubsetLattice lower_set_lattice(const FinitePoset& p, const Limits& limits = {});

// ---- compactness and algebraicity -----------------------------------------

/// Elements c such that c <= sup D implies c <= d for some d in D, for every
/// directed D. Tested from the definition.
Bits compact_elements(const FiniteLattice& l, const Limits& limits = {});
/// Sub-poset of compact elements, carrying the induced order.
FinitePoset compacts(const FiniteLattice& l, const Limits& limits = {});
/// Every x equals the join of the compact elements below it.
bool is_algebraic(const FiniteLattice& l, const Limits& limits = {});

// ---- order isomorphisms ---------------------------------------------------

/// True iff `map` is a bijection with a <= b <=> map[a] <= map[b].
bool is_order_isomorphism(const FinitePoset& from, const FinitePoset& to,
                          std::span<const std::size_t> map);
/// Backtracking search for any order isomorphism.
std::optional<std::vector<std::size_t>> find_order_isomorphism(const FinitePoset& from,
                                                               const FinitePoset& to);

struct IsoCheck {
  bool ok = false;
  std::vector<NamePair> mapping;  // (source name, target name)
  std::string failure;            // empty when ok
};

/// Reports whether `map` is an order isomorphism, with the named mapping.
IsoCheck iso_check(const FinitePoset& from, const FinitePoset& to,
                   const std::vector<std::size_t>& map);

struct CompletionIsoReport {
  IsoCheck principal_ideals;  // S -> K(Idl(S)), a |-> down(a)
  IsoCheck compact_ideals;    // L -> Idl(K(L)), x |-> down(x) & K(L)
  bool ok() const { return principal_ideals.ok && compact_ideals.ok; }
};

/// Checks that both canonical maps between a semilattice, its ideal
/// completion and a lattice's compact elements are order-isomorphisms.
CompletionIsoReport check_completion_isos(const JoinSemilattice& s, const FiniteLattice& l,
                                          const Limits& limits = {});

// ---- closure operators ----------------------------------------------------

class ClosureOperator {
 public:
  /// Throws ValidationError unless `table` is inflationary, monotone and
  /// idempotent on `carrier`.
  static ClosureOperator make(std::shared_ptr<const FiniteLattice> carrier,
                              std::vector<std::size_t> table);

  const FiniteLattice& carrier() const noexcept { return *carrier_; }
  std::size_t operator()(std::size_t x) const { return table_[x]; }
  const std::vector<std::size_t>& table() const noexcept { return table_; }
  Bits image() const;

  friend bool operator==(const ClosureOperator& a, const ClosureOperator& b) {
    return a.table_ == b.table_ && *a.carrier_ == *b.carrier_;
  }

 private:
  std::shared_ptr<const FiniteLattice> carrier_;
  std::vector<std::size_t> table_;
};

/// Whether `system` contains the top and all binary meets of its members.
/// On failure returns the offending subset (empty for a missing top).
std::optional<std::vector<std::size_t>> infima_closure_violation(const FiniteLattice& l,
                                                                 const Bits& system);

/// x |-> meet{y in C | x <= y}. Throws ValidationError("infima", ...) if C is
/// not closed under infima.
ClosureOperator closure_from_system(std::shared_ptr<const FiniteLattice> l, const Bits& system);

/// Lattice of all subsets of `base`.
SubsetLattice powerset_lattice(std::vector<std::string> base, const Limits& limits = {});

/// X |-> union{ c(A) | A subset of X, A finite }, for c on a powerset lattice.
ClosureOperator finite_extension(const ClosureOperator& c, const SubsetLattice& powerset);

// ---- primes and distributivity --------------------------------------------

/// x != top with y ^ z <= x implying y <= x or z <= x.
Bits meet_primes(const FiniteLattice& l);
/// x != top with x = y ^ z implying x = y or x = z.
Bits meet_irreducibles(const FiniteLattice& l);
Bits join_primes(const FiniteLattice& l);
Bits join_irreducibles(const FiniteLattice& l);

/// First triple (x, y, z) with x ^ (y v z) != (x ^ y) v (x ^ z).
std::optional<std::array<std::size_t, 3>> distributivity_violation(const FiniteLattice& l);
inline bool is_distributive(const FiniteLattice& l) { return !distributivity_violation(l); }

}  // namespace lattica

#endif  // LATTICA_ORDER_HPP_
