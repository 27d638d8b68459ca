#ifndef LATTICA_MORPHISM_HPP_
#define LATTICA_MORPHISM_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lattica/bits.hpp"
#include "lattica/error.hpp"
#include "lattica/order.hpp"

namespace lattica {

using SemilatticeRef = std::shared_ptr<const JoinSemilattice>;
using LatticeRef = std::shared_ptr<const FiniteLattice>;

// Structural equality, short-circuiting on shared identity.
bool same_semilattice(const SemilatticeRef& a, const SemilatticeRef& b);
bool same_lattice(const LatticeRef& a, const LatticeRef& b);

struct AxiomViolation {
  std::string rule;  // "am1", "am2" or "am3"
  std::vector<std::string> witness;
  std::string message;
};

/// First violated approximable-mapping axiom of `image`, where image[a]
/// holds every b with a ~> b.
std::optional<AxiomViolation> find_axiom_violation(const JoinSemilattice& source,
                                                   const JoinSemilattice& target,
                                                   std::span<const Bits> image);

/// A relation between join-semilattices that relates everything to bottom,
/// is closed under joins on the right, and is monotone on the left and
/// downward closed on the right. Stored as the full relation.
class ApproximableMapping {
 public:
  ApproximableMapping() = default;

  /// Throws ValidationError with rule am1/am2/am3 on failure.
  static ApproximableMapping make(SemilatticeRef source, SemilatticeRef target,
                                  std::vector<Bits> image);
  static ApproximableMapping from_pairs(SemilatticeRef source, SemilatticeRef target,
                                        std::span<const std::pair<std::size_t, std::size_t>> pairs);
  static ApproximableMapping from_named_pairs(SemilatticeRef source, SemilatticeRef target,
                                              std::span<const NamePair> pairs);
  /// The greater-or-equal relation of S.
  static ApproximableMapping identity(SemilatticeRef s);
  /// Relates every source element to the target bottom only.
  static ApproximableMapping constant_bottom(SemilatticeRef source, SemilatticeRef target);

  const JoinSemilattice& source() const noexcept { return *source_; }
  const JoinSemilattice& target() const noexcept { return *target_; }
  const SemilatticeRef& source_ref() const noexcept { return source_; }
  const SemilatticeRef& target_ref() const noexcept { return target_; }

  bool relates(std::size_t a, std::size_t b) const { return image_[a].test(b); }
  const Bits& image(std::size_t a) const { return image_[a]; }
  const std::vector<Bits>& images() const noexcept { return image_; }
  std::size_t pair_count() const;
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;
  /// Pairs by element name, sorted lexicographically.
  std::vector<NamePair> named_pairs() const;
  /// Canonical text form of the pair set, used for deterministic ordering.
  std::string encoding() const;

  friend bool operator==(const ApproximableMapping& a, const ApproximableMapping& b) {
    return a.image_ == b.image_ && same_semilattice(a.source_, b.source_) &&
           same_semilattice(a.target_, b.target_);
  }

 private:
  SemilatticeRef source_;
  SemilatticeRef target_;
  std::vector<Bits> image_;
};

/// Relational composition: first S ~> R, then R ~> T. Re-validated.
ApproximableMapping compose(const ApproximableMapping& first, const ApproximableMapping& second);

/// Monotone function between finite lattices. Construction also runs the
/// directed-suprema preservation test from its definition and requires the
/// two verdicts to agree.
class ScottFunction {
 public:
  ScottFunction() = default;
  static ScottFunction make(LatticeRef source, LatticeRef target, std::vector<std::size_t> table,
                            const Limits& limits = {});
  static ScottFunction identity(LatticeRef l);

  const FiniteLattice& source() const noexcept { return *source_; }
  const FiniteLattice& target() const noexcept { return *target_; }
  const LatticeRef& source_ref() const noexcept { return source_; }
  const LatticeRef& target_ref() const noexcept { return target_; }
  std::size_t operator()(std::size_t x) const { return table_[x]; }
  const std::vector<std::size_t>& table() const noexcept { return table_; }

  friend bool operator==(const ScottFunction& a, const ScottFunction& b) {
    return a.table_ == b.table_ && same_lattice(a.source_, b.source_) &&
           same_lattice(a.target_, b.target_);
  }

 private:
  LatticeRef source_;
  LatticeRef target_;
  std::vector<std::size_t> table_;
};

bool is_monotone(const FiniteLattice& source, const FiniteLattice& target,
                 std::span<const std::size_t> table);
/// f(sup D) = sup f(D) for every non-empty directed D, checked by enumeration.
bool preserves_directed_suprema(const FiniteLattice& source, const FiniteLattice& target,
                                std::span<const std::size_t> table, const Limits& limits = {});

/// Function composition: apply `first`, then `second`.
ScottFunction compose(const ScottFunction& first, const ScottFunction& second);

/// Idl on morphisms: I |-> { b | a ~> b for some a in I }, between the ideal
/// completions of source and target.
ScottFunction idl_on_morphism(const ApproximableMapping& m, const Limits& limits = {});

/// The semilattice of compact elements of a finite lattice, with the
/// induced order.
SemilatticeRef compact_semilattice(const FiniteLattice& l, const Limits& limits = {});

/// K on morphisms: { (a, b) | b <= f(a) } between compact elements.
ApproximableMapping k_on_morphism(const ScottFunction& f, const Limits& limits = {});

/// x |-> down(x) & K(L), from L to Idl(K(L)).
ScottFunction eta(const LatticeRef& l, const Limits& limits = {});
/// { (a, I) | I subset of down(a) }, from S to K(Idl(S)).
ApproximableMapping epsilon(const SemilatticeRef& s, const Limits& limits = {});
/// { (down(b), a) | a <= b }, from K(Idl(S)) to S.
ApproximableMapping epsilon_inverse(const SemilatticeRef& s, const Limits& limits = {});

/// Bijective and order-reflecting in both directions.
bool is_isomorphism(const ScottFunction& f);

/// All approximable mappings S ~> T, generated as monotone maps from S into
/// the ideal completion of T and sorted by their pair-set encoding.
std::vector<ApproximableMapping> enumerate_mappings(const SemilatticeRef& source,
                                                    const SemilatticeRef& target,
                                                    const Limits& limits = {});

}  // namespace lattica

#endif  // LATTICA_MORPHISM_HPP_
