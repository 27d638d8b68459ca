#ifndef LATTICA_ERROR_HPP_
#define LATTICA_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lattica {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A structure failed one of its defining axioms. `rule` names the axiom
// (e.g. "antisymmetry", "am2") and `witness` lists the offending elements.
class ValidationError : public Error {
 public:
  ValidationError(std::string rule, std::vector<std::string> witness,
                  const std::string& message);

  const std::string& rule() const noexcept { return rule_; }
  const std::vector<std::string>& witness() const noexcept { return witness_; }

 private:
  std::string rule_;
  std::vector<std::string> witness_;
};

class UnknownElement : public Error {
 public:
  explicit UnknownElement(const std::string& name);
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

// Two values that must share a carrier (semilattice, lattice, context) do not.
class MismatchError : public Error {
 public:
  using Error::Error;
};

// An exhaustive enumeration would exceed the configured size cap.
class GuardExceeded : public Error {
 public:
  GuardExceeded(const std::string& what, std::size_t limit, std::size_t actual);

  std::size_t limit() const noexcept { return limit_; }
  std::size_t actual() const noexcept { return actual_; }

 private:
  std::size_t limit_;
  std::size_t actual_;
};

// Size caps for the exponential enumerations. Defaults are desk scale.
struct Limits {
  std::size_t max_directed_carrier = 20;        // directed-subset / powerset scans
  std::size_t max_powerset_attributes = 16;     // 2^A enumeration in contexts
  std::size_t max_powerset_lattice_base = 8;    // explicit powerset lattices
  std::size_t max_literal_funcspace_attributes = 12;  // Fin(A) objects
  std::size_t max_tensor_attributes = 64;       // attribute pairs of a tensor
  std::size_t max_funcspace_attributes = 64;    // Sem(P) x Sem(Q) pairs
  std::size_t max_propositions = 16;            // consequence tables
  std::size_t max_materialized_propositions = 10;  // full sequent matrices
  std::size_t max_mappings = 1'000'000;         // hom-set enumeration
};

void check_guard(const std::string& what, std::size_t limit, std::size_t actual);

}  // namespace lattica

#endif  // LATTICA_ERROR_HPP_
