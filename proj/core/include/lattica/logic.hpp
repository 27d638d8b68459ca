#ifndef LATTICA_LOGIC_HPP_
#define LATTICA_LOGIC_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lattica/bits.hpp"
#include "lattica/context.hpp"
#include "lattica/error.hpp"
#include "lattica/order.hpp"

namespace lattica {

// ---- formulas ----------------------------------------------------------------

/// Conjunctive formula tree: T, an atom, or a conjunction of two formulas.
/// Trees only appear at parse time; everything else works on the proposition
/// set a formula normalizes to.
class Formula {
 public:
  enum class Kind { top, atom, conj };

  static Formula top();
  static Formula atom(std::string name);
  static Formula conj(Formula left, Formula right);

  Kind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }
  const Formula& left() const { return *left_; }
  const Formula& right() const { return *right_; }

  /// Fully parenthesized text, e.g. "(a & (T & b))".
  std::string to_string() const;
  /// Atoms occurring in the tree, in order of first occurrence.
  std::vector<std::string> atoms() const;
  /// The proposition set of the formula; throws UnknownElement.
  Bits normalize(std::span<const std::string> propositions) const;

 private:
  Kind kind_ = Kind::top;
  std::string name_;
  std::shared_ptr<const Formula> left_;
  std::shared_ptr<const Formula> right_;
};

/// Grammar: F ::= T | atom | F & F | (F). Commas are accepted as '&'.
/// Throws Error on malformed input.
Formula parse_formula(std::string_view text);

// ---- Scott information systems ----------------------------------------------

struct Entailment {
  std::vector<std::string> premises;
  std::string conclusion;
};

/// (A, |-) with trivial consistency, stored as its consequence table:
/// closure(X) = { a | X |- a } for every subset X of A.
class InformationSystem {
 public:
  InformationSystem() = default;

  /// Least system containing `raw` (forward chaining to a fixpoint).
  static InformationSystem close_entailment(std::vector<std::string> propositions,
                                            std::span<const Entailment> raw,
                                            const Limits& limits = {});
  /// table[mask] is the consequence set of the subset with that mask.
  /// Throws ValidationError (rule ISi or ISii) if it is not a system.
  static InformationSystem from_table(std::vector<std::string> propositions,
                                      std::vector<Bits> table, const Limits& limits = {});

  std::size_t size() const noexcept { return propositions_.size(); }
  const std::vector<std::string>& propositions() const noexcept { return propositions_; }
  const Bits& closure(const Bits& x) const { return table_[mask_of(x)]; }
  bool entails(const Bits& x, std::size_t a) const { return closure(x).test(a); }
  const std::vector<Bits>& table() const noexcept { return table_; }

  /// Every (X, a) with X |- a, ordered by mask of X then a.
  std::vector<std::pair<Bits, std::size_t>> pairs() const;
  /// Only the (X, a) with a not in X.
  std::vector<std::pair<Bits, std::size_t>> nontrivial_pairs() const;

  friend bool operator==(const InformationSystem& a, const InformationSystem& b) {
    return a.propositions_ == b.propositions_ && a.table_ == b.table_;
  }

 private:
  std::vector<std::string> propositions_;
  std::vector<Bits> table_;
};

// ---- CCP deductive systems -----------------------------------------------------

/// Sequent a1 & ... & an |- b1 & ... & bm as (antecedent, consequent) sets;
/// the empty set stands for T.
using Sequent = std::pair<Bits, Bits>;

/// Consequence relation of conjunctive propositional logic. By (And) and
/// (W1)/(W2) every system is determined by the largest consequent of each
/// antecedent, which is what is stored; the full sequent set is materialized
/// on demand while |A| <= limits.max_materialized_propositions.
class CcpSystem {
 public:
  CcpSystem() = default;

  /// rel[X] holds the mask of every Y with X |- Y. Checks (T), (R), (Cut),
  /// (W1)/(W2) and (And) literally.
  static CcpSystem from_matrix(std::vector<std::string> propositions, std::vector<Bits> rel,
                               const Limits& limits = {});
  /// Checks (T), (R), (Cut), (W1)/(W2) and (And) on the explicit set.
  static CcpSystem from_sequents(std::vector<std::string> propositions,
                                 std::span<const Sequent> sequents, const Limits& limits = {});
  /// From the largest consequent of every antecedent (indexed by mask); the
  /// table must be inflationary, monotone and idempotent.
  static CcpSystem from_consequences(std::vector<std::string> propositions,
                                     std::vector<Bits> table, const Limits& limits = {});
  /// Least system containing `generators`.
  static CcpSystem generate(std::vector<std::string> propositions,
                            std::span<const Sequent> generators, const Limits& limits = {});

  std::size_t size() const noexcept { return propositions_.size(); }
  const std::vector<std::string>& propositions() const noexcept { return propositions_; }
  bool proves(const Bits& antecedent, const Bits& consequent) const;
  const Bits& consequences(const Bits& antecedent) const { return cons_[mask_of(antecedent)]; }

  /// Every derivable sequent, ordered by antecedent mask then consequent mask.
  std::vector<Sequent> sequents(const Limits& limits = {}) const;

  friend bool operator==(const CcpSystem& a, const CcpSystem& b) {
    return a.propositions_ == b.propositions_ && a.cons_ == b.cons_;
  }

 private:
  std::vector<std::string> propositions_;
  std::vector<Bits> cons_;
};

/// X |- Y iff X ||- b for every b in Y.
CcpSystem is_to_ccp(const InformationSystem& is, const Limits& limits = {});
/// X ||- b iff X |- b.
InformationSystem ccp_to_is(const CcpSystem& c, const Limits& limits = {});

/// Provable-equivalence classes, each represented by its consequence set,
/// ordered by [F] <= [G] iff F |- G (reverse inclusion of consequences).
struct LindenbaumAlgebra {
  MeetSemilattice algebra;
  std::vector<Bits> classes;  // index-aligned with algebra elements

  std::size_t class_of(const CcpSystem& c, const Bits& formula) const;
};

LindenbaumAlgebra lindenbaum(const CcpSystem& c, const Limits& limits = {});

/// Propositions are the elements of S; X |- Y iff meet(X) <= meet(Y), with
/// the empty meet equal to the top.
CcpSystem semilattice_to_ccp(const MeetSemilattice& s, const Limits& limits = {});

/// a |-> [a] from S to the Lindenbaum algebra of semilattice_to_ccp(S).
IsoCheck check_lindenbaum_roundtrip(const MeetSemilattice& s, const Limits& limits = {});

/// Deductively closed subsets under inclusion.
SubsetLattice elements(const InformationSystem& is);

/// x |-> { [F] | consequences(F) inside x }, from elements(IS) to the filter
/// lattice of the Lindenbaum algebra of is_to_ccp(IS).
IsoCheck check_elements_are_filters(const InformationSystem& is, const Limits& limits = {});

/// Propositions are the attributes; X ||- a iff a in attr_closure(X).
InformationSystem context_to_is(const FormalContext& p, const Limits& limits = {});

// ---- conjunctive RZ fragment ----------------------------------------------------

/// Minimal elements among the upper bounds of x; for the empty set these are
/// the minimal elements of D.
Bits minimal_upper_bounds(const FinitePoset& d, const Bits& x);
/// Every minimal upper bound of X lies above every element of Y. True when X
/// has no upper bound at all.
bool rz_entails(const FinitePoset& d, const Bits& x, const Bits& y);
bool rz_entails(const FinitePoset& d, std::span<const std::string> x,
                std::span<const std::string> y);

struct RzReport {
  bool ok = true;
  std::size_t sets_checked = 0;
  std::vector<std::string> witness;      // X of the first failure
  std::vector<std::string> closure;      // attr_closure(X)
  std::vector<std::string> rz_closure;   // { a | iota(X) |- iota(a) }
};

/// With D = alg_lattice(P) and iota(a) = attr_closure({a}), compares
/// attr_closure(X) against { a | iota(X) |- iota(a) } for every X.
RzReport rz_closure_check(const FormalContext& p, const Limits& limits = {});

}  // namespace lattica

#endif  // LATTICA_LOGIC_HPP_
