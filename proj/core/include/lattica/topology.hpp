#ifndef LATTICA_TOPOLOGY_HPP_
#define LATTICA_TOPOLOGY_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lattica/bits.hpp"
#include "lattica/error.hpp"
#include "lattica/order.hpp"

namespace lattica {

/// A finite topological space. Opens are kept sorted by the canonical
/// encoding of their point sets.
class TopSpace {
 public:
  TopSpace() = default;

  /// Throws ValidationError (empty, full, union, intersection) when `opens`
  /// is not a topology. Duplicates are merged.
  static TopSpace make(std::vector<std::string> points, std::vector<Bits> opens);
  /// The topology generated by `subbasis` (closing under finite
  /// intersections and unions, adding the empty and the full set).
  static TopSpace generate(std::vector<std::string> points, std::span<const Bits> subbasis);

  std::size_t size() const noexcept { return points_.size(); }
  const std::vector<std::string>& points() const noexcept { return points_; }
  const std::vector<Bits>& opens() const noexcept { return opens_; }
  bool is_open(const Bits& x) const;
  std::optional<std::size_t> find_open(const Bits& x) const;

  /// The opens ordered by inclusion.
  SubsetLattice open_lattice() const;

  friend bool operator==(const TopSpace& a, const TopSpace& b) {
    return a.points_ == b.points_ && a.opens_ == b.opens_;
  }

 private:
  std::vector<std::string> points_;
  std::vector<Bits> opens_;
};

/// Upper sets inaccessible by directed suprema, tested from the definition
/// over every directed subset. On a finite lattice this is exactly the set
/// of upper sets, which is asserted.
TopSpace scott_topology(const FiniteLattice& l, const Limits& limits = {});

/// x <= y iff every open containing x contains y. Throws ValidationError
/// (rule "T0") when the preorder is not antisymmetric.
FinitePoset specialization_order(const TopSpace& t);

/// f^-1 of every open is open. On failure `witness` is the offending open of Y.
bool is_continuous(std::span<const std::size_t> f, const TopSpace& x, const TopSpace& y,
                   Bits* witness = nullptr);

struct ScottBaseReport {
  std::vector<Bits> base;             // up(c) for every compact c
  bool base_ok = false;               // every open is a union of base members
  bool compact_opens_ok = false;      // compact opens = finite unions of base members
  bool coherent = false;              // compact opens closed under intersection
  std::string failure;
  bool ok() const { return base_ok && compact_opens_ok && coherent; }
};

/// Checks the up-sets of compact elements form a base whose finite unions
/// are exactly the compact opens, and that compact opens are coherent.
ScottBaseReport scott_base_and_coherence(const FiniteLattice& l, const Limits& limits = {});

/// x & join(S) = join{ x & s | s in S } for every x and every subset S
/// (literal while |L| <= 10, pairwise distributivity beyond). Returns the
/// witness (x followed by S) of the first failure.
std::optional<std::vector<std::string>> locale_violation(const FiniteLattice& l);
inline bool is_locale(const FiniteLattice& l) { return !locale_violation(l); }

/// A finite lattice verified to satisfy the frame distributive law.
class Locale {
 public:
  Locale() = default;
  /// Throws ValidationError (rule "distributivity") with the witness.
  static Locale make(std::shared_ptr<const FiniteLattice> lattice);

  const FiniteLattice& lattice() const noexcept { return *lattice_; }
  std::shared_ptr<const FiniteLattice> shared() const noexcept { return lattice_; }

 private:
  std::shared_ptr<const FiniteLattice> lattice_;
};

struct LocalePoint {
  Bits members;           // the principal prime ideal
  std::size_t generator;  // its meet-prime greatest element
};

/// Principal prime ideals down(m) for the meet-primes m (top excluded).
std::vector<LocalePoint> locale_points(const Locale& loc);

struct LowerSetLocale {
  SubsetLattice lower_sets;
  Locale locale;
  /// A |-> { F | F meets A } onto the Scott opens of the filter lattice.
  IsoCheck scott_iso;
};

LowerSetLocale lower_set_locale(const MeetSemilattice& s, const Limits& limits = {});

struct FilterPrimeReport {
  bool ok = false;
  std::vector<NamePair> pairs;  // (filter, meet-prime lower set = its complement)
  std::string failure;
};

/// The complement of every filter of S is a meet-prime of the lower-set
/// locale, and every meet-prime arises this way exactly once.
FilterPrimeReport check_filter_prime_bijection(const MeetSemilattice& s,
                                               const Limits& limits = {});

struct SpacesReport {
  TopSpace scott;    // Scott topology on L
  TopSpace filters;  // on Flt(S), generated by O_a = { F | a in F }
  TopSpace points;   // on pt(locale), opens P_A = { p | A not in p }
  std::vector<std::size_t> scott_to_filters;   // x |-> { a | phi(a) <= x }
  std::vector<std::size_t> filters_to_points;  // F |-> point generated by S \ F
  bool scott_filters_homeomorphic = false;
  bool filters_points_homeomorphic = false;
  bool ok() const { return scott_filters_homeomorphic && filters_points_homeomorphic; }
};

/// Builds the three spaces attached to S, L and a spectral locale and the
/// explicit homeomorphisms between them. Throws ValidationError (rule
/// "precondition") unless S^op ~ K(L) and the locale ~ the Scott opens of L.
SpacesReport stone_spaces(const MeetSemilattice& s, const FiniteLattice& l, const Locale& loc,
                          const Limits& limits = {});

struct FrameHomReport {
  bool continuous = false;
  std::optional<Bits> witness;        // open of Y with a non-open preimage
  std::vector<std::size_t> preimage;  // open of Y -> open of X
  bool preserves_meets = false;       // finite, including the empty meet
  bool preserves_joins = false;       // arbitrary, including the empty join
  bool ok() const { return continuous && preserves_meets && preserves_joins; }
};

/// O |-> f^-1(O) as a map between open-set lattices, checked to be a frame
/// homomorphism when f is continuous.
FrameHomReport frame_hom_of_continuous(std::span<const std::size_t> f, const TopSpace& x,
                                       const TopSpace& y, const Limits& limits = {});

struct SpectralReport {
  bool algebraic = false;
  bool compact_top = false;
  bool compact_meets = false;
  bool ok() const { return algebraic && compact_top && compact_meets; }
};

SpectralReport spectrality_check(const Locale& loc, const Limits& limits = {});

}  // namespace lattica

#endif  // LATTICA_TOPOLOGY_HPP_
