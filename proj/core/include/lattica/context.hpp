#ifndef LATTICA_CONTEXT_HPP_
#define LATTICA_CONTEXT_HPP_

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "lattica/bits.hpp"
#include "lattica/error.hpp"
#include "lattica/order.hpp"

namespace lattica {

/// Objects, attributes and an incidence relation between them. Rows and
/// columns are kept as bitsets so both derivation operators are a fold of
/// intersections.
class FormalContext {
 public:
  FormalContext() = default;

  static FormalContext make(std::vector<std::string> objects, std::vector<std::string> attributes,
                            std::span<const NamePair> incidence);
  /// rows[o] is the attribute set of object o.
  static FormalContext from_rows(std::vector<std::string> objects,
                                 std::vector<std::string> attributes, std::vector<Bits> rows);

  std::size_t object_count() const noexcept { return objects_.size(); }
  std::size_t attribute_count() const noexcept { return attributes_.size(); }
  const std::vector<std::string>& objects() const noexcept { return objects_; }
  const std::vector<std::string>& attributes() const noexcept { return attributes_; }
  bool incident(std::size_t o, std::size_t a) const { return rows_[o].test(a); }
  const Bits& row(std::size_t o) const { return rows_[o]; }
  const Bits& column(std::size_t a) const { return cols_[a]; }

  std::size_t object_index(const std::string& name) const;
  std::size_t attribute_index(const std::string& name) const;
  Bits object_set(std::span<const std::string> names) const;
  Bits attribute_set(std::span<const std::string> names) const;
  std::vector<std::string> object_names(const Bits& b) const;
  std::vector<std::string> attribute_names(const Bits& b) const;

  /// Attributes shared by every object in `objs`.
  Bits alpha(const Bits& objs) const;
  /// Objects bearing every attribute in `attrs`.
  Bits omega(const Bits& attrs) const;
  Bits attr_closure(const Bits& attrs) const { return alpha(omega(attrs)); }
  /// Union of the closures of all finite subsets of `attrs`, computed
  /// literally by subset enumeration.
  Bits approx_closure(const Bits& attrs, const Limits& limits = {}) const;

  /// Incidence pairs sorted by (object, attribute) position.
  std::vector<NamePair> incidence() const;

  friend bool operator==(const FormalContext& a, const FormalContext& b) {
    return a.objects_ == b.objects_ && a.attributes_ == b.attributes_ && a.rows_ == b.rows_;
  }

 private:
  std::vector<std::string> objects_;
  std::vector<std::string> attributes_;
  std::unordered_map<std::string, std::size_t> object_index_;
  std::unordered_map<std::string, std::size_t> attribute_index_;
  std::vector<Bits> rows_;
  std::vector<Bits> cols_;
};

using AttributeClosure = std::function<Bits(const Bits&)>;

/// Join-semilattice of the closed attribute sets of a closure on a finite
/// attribute universe. Elements are named by the canonical encoding of the
/// closed set and sorted by it; join is closure of union.
class SemLattice {
 public:
  SemLattice() = default;

  /// Closes every subset of the attributes (|A| <= max_powerset_attributes).
  static SemLattice by_powerset(std::vector<std::string> attributes,
                                const AttributeClosure& closure, const Limits& limits = {});
  /// Saturates {c(empty)} and the singleton closures under c(X u Y).
  static SemLattice by_saturation(std::vector<std::string> attributes,
                                  const AttributeClosure& closure);
  /// From an explicit list of closed sets; the join table is derived from
  /// inclusion and cross-checked against `closure` of unions.
  static SemLattice from_closed_sets(std::vector<std::string> attributes, std::vector<Bits> closed,
                                     const AttributeClosure& closure);

  std::size_t size() const noexcept { return closed_.size(); }
  const std::vector<std::string>& attributes() const noexcept { return attributes_; }
  const Bits& closed(std::size_t i) const { return closed_.at(i); }
  const std::vector<Bits>& closed_sets() const noexcept { return closed_; }
  std::optional<std::size_t> find(const Bits& closed) const;
  std::size_t index_of(const Bits& closed) const;
  std::size_t bottom() const { return lattice_->bottom(); }

  const JoinSemilattice& semilattice() const noexcept { return *lattice_; }
  std::shared_ptr<const JoinSemilattice> shared() const noexcept { return lattice_; }
  const std::string& name(std::size_t i) const { return lattice_->poset().name(i); }

 private:
  static SemLattice assemble(std::vector<std::string> attributes, std::vector<Bits> closed,
                             const AttributeClosure& closure);

  std::vector<std::string> attributes_;
  std::vector<Bits> closed_;
  std::map<Bits, std::size_t> lookup_;
  std::shared_ptr<const JoinSemilattice> lattice_;
};

/// Sem(P): closures of all finite attribute sets. Uses the powerset scan
/// while |A| <= limits.max_powerset_attributes and saturation beyond.
SemLattice sem_lattice(const FormalContext& p, const Limits& limits = {});

/// Alg(P): the image of the union-over-finite-subsets closure on 2^A, as a
/// lattice of attribute sets.
SubsetLattice alg_lattice(const FormalContext& p, const Limits& limits = {});

/// Context (S, S, >=): object o bears attribute a iff a <= o.
FormalContext context_of_semilattice(const JoinSemilattice& s);

/// Closure operator on the powerset lattice of the attributes induced by
/// attr_closure (|A| <= limits.max_powerset_lattice_base).
ClosureOperator attribute_closure_operator(const FormalContext& p, const SubsetLattice& powerset);

}  // namespace lattica

#endif  // LATTICA_CONTEXT_HPP_
