#ifndef LATTICA_GENERATE_HPP_
#define LATTICA_GENERATE_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "lattica/context.hpp"
#include "lattica/logic.hpp"
#include "lattica/order.hpp"

namespace lattica {

inline constexpr std::uint64_t default_seed = 0x5eed'1a77'1ca0'0001ULL;

/// Seeded source of small random structures. Equal seeds give equal streams.
class Generator {
 public:
  explicit Generator(std::uint64_t seed = default_seed) : rng_(seed) {}

  std::size_t below(std::size_t n);
  bool coin(double p = 0.5);

  /// Objects g1.., attributes m1.., each cell set with probability 1/2.
  FormalContext context(std::size_t max_objects, std::size_t max_attributes);
  /// A union-closed family of subsets of a small base, with the empty set.
  /// Elements are named by their members ("0" for the empty set, else "ab").
  JoinSemilattice join_semilattice(std::size_t max_size);
  FiniteLattice lattice(std::size_t max_size);
  /// Order dual of join_semilattice.
  MeetSemilattice meet_semilattice(std::size_t max_size);
  /// close_entailment over p1..pn of a few random premise/conclusion rules.
  InformationSystem information_system(std::size_t max_propositions);

 private:
  std::vector<Bits> union_family(std::size_t max_size);
  std::mt19937_64 rng_;
};

FinitePoset chain_poset(std::size_t n);
FinitePoset diamond_poset();

/// Fixed corpora used by the law suites. All are deterministic in `seed`.
std::vector<FormalContext> context_corpus(std::uint64_t seed, std::size_t count,
                                          std::size_t max_objects, std::size_t max_attributes);
std::vector<JoinSemilattice> semilattice_corpus(std::uint64_t seed, std::size_t count,
                                                std::size_t max_size);
std::vector<FiniteLattice> lattice_corpus(std::uint64_t seed, std::size_t count,
                                          std::size_t max_size);
std::vector<MeetSemilattice> meet_semilattice_corpus(std::uint64_t seed, std::size_t count,
                                                     std::size_t max_size);

}  // namespace lattica

#endif  // LATTICA_GENERATE_HPP_
