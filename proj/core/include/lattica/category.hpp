#ifndef LATTICA_CATEGORY_HPP_
#define LATTICA_CATEGORY_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lattica/context.hpp"
#include "lattica/morphism.hpp"

namespace lattica {

// Morphisms between contexts are approximable mappings between their Sem
// semilattices; every construction below works on that level.

enum class Side : unsigned char { left, right };

/// Tag used for disjoint unions: "l:" or "r:" followed by the original name.
std::string tag_name(Side side, const std::string& name);

/// The terminal context with no objects and no attributes.
FormalContext terminal();
/// The unique mapping Sem(P) ~> Sem(1).
ApproximableMapping bang(const SemLattice& p);

struct ProductContext {
  FormalContext context;
  std::vector<Side> object_side;
  std::vector<std::size_t> object_origin;
  std::vector<Side> attribute_side;
  std::vector<std::size_t> attribute_origin;
  std::size_t left_attribute_count = 0;  // left attributes come first
};

/// Disjoint union of objects and attributes; every left object bears every
/// right attribute and vice versa.
ProductContext product_context(const FormalContext& p, const FormalContext& q);

/// P x Q together with Sem(P), Sem(Q), Sem(P x Q) and the decomposition of
/// every closed set of the product into a left and a right closed set.
class Product {
 public:
  /// Throws ValidationError if a closed set of P x Q does not split into
  /// closed sets of the factors.
  static Product make(const FormalContext& p, const FormalContext& q, const Limits& limits = {});

  const ProductContext& context() const noexcept { return context_; }
  const SemLattice& left() const noexcept { return left_; }
  const SemLattice& right() const noexcept { return right_; }
  const SemLattice& sem() const noexcept { return sem_; }

  /// Index in Sem(P x Q) of X u Y for X in Sem(P), Y in Sem(Q).
  std::size_t pair_index(std::size_t x, std::size_t y) const { return pair_index_[x][y]; }
  std::pair<std::size_t, std::size_t> components(std::size_t z) const { return components_[z]; }

 private:
  ProductContext context_;
  SemLattice left_;
  SemLattice right_;
  SemLattice sem_;
  std::vector<std::pair<std::size_t, std::size_t>> components_;
  std::vector<std::vector<std::size_t>> pair_index_;
};

ApproximableMapping proj_left(const Product& pq);
ApproximableMapping proj_right(const Product& pq);
/// Z ~> X u Y iff Z ~>_P X and Z ~>_Q Y.
ApproximableMapping pair(const Product& pq, const ApproximableMapping& to_left,
                         const ApproximableMapping& to_right);

/// Fresh identifier: `base` followed by enough '+' markers to avoid `taken`.
std::string fresh_name(const std::string& base, const std::vector<std::string>& taken);

/// P+ : P with a full row (object g) and a full column (attribute m)
/// appended as the last object and the last attribute.
FormalContext plus(const FormalContext& p);

struct TensorContext {
  FormalContext context;
  FormalContext left_plus;
  FormalContext right_plus;
  std::vector<std::pair<std::size_t, std::size_t>> object_pairs;
  std::vector<std::pair<std::size_t, std::size_t>> attribute_pairs;
};

/// P (x) Q over O_P+ x O_Q+ and A_P+ x A_Q+ with componentwise incidence.
TensorContext tensor_context(const FormalContext& p, const FormalContext& q,
                             const Limits& limits = {});

/// The tensor alternative of the product, with its iso pair to P x Q.
class Tensor {
 public:
  static Tensor make(const FormalContext& p, const FormalContext& q, const Limits& limits = {});

  const TensorContext& context() const noexcept { return context_; }
  const SemLattice& sem() const noexcept { return sem_; }
  const Product& product() const noexcept { return product_; }

  /// X ~>+ Y iff p1(Y) & A_P is inside X and p2(Y) & A_Q is inside X.
  ApproximableMapping iso_plus() const;
  /// Y ~>- X iff X & A_P is inside p1(Y) and X & A_Q is inside p2(Y).
  ApproximableMapping iso_minus() const;

  /// p1(Y) and p2(Y), as attribute sets of P+ and Q+.
  std::pair<Bits, Bits> projections(const Bits& pairs) const;
  /// Whether every closed set is a rectangle X x Y of closed sets of P+, Q+.
  bool closed_sets_are_rectangles() const;

 private:
  TensorContext context_;
  SemLattice sem_;
  Product product_;
};

enum class ClosureEngine { literal, saturation };

/// Function-space context [P ~> Q]: attributes are pairs (a, b) of Sem
/// elements standing for step functions, objects are finite sets of such
/// pairs. The literal context with all 2^|A| objects is materialized only
/// while |A| <= limits.max_literal_funcspace_attributes.
class FunctionSpace {
 public:
  static FunctionSpace make(const SemLattice& p, const SemLattice& q, const Limits& limits = {});

  const SemLattice& source() const noexcept { return source_; }
  const SemLattice& target() const noexcept { return target_; }
  std::size_t attribute_count() const noexcept { return attributes_.size(); }
  const std::vector<std::pair<std::size_t, std::size_t>>& attribute_pairs() const noexcept {
    return attributes_;
  }
  const std::vector<std::string>& attribute_names() const noexcept { return names_; }
  std::size_t attribute_index(std::size_t a, std::size_t b) const {
    return a * target_.size() + b;
  }

  /// {(a_i, b_i)} models (a, b) iff b <= join{ b_i | a_i <= a }.
  bool models(const Bits& object, std::size_t attribute) const;

  bool has_literal_context() const noexcept { return literal_ != nullptr; }
  /// Throws GuardExceeded when the literal context was not materialized.
  const FormalContext& literal_context() const;

  /// (a) alpha-omega over all of Fin(A); (b) least set closed under the
  /// approximable-mapping axioms.
  Bits closure(const Bits& attributes, ClosureEngine engine) const;

  /// Closed pair sets, i.e. all approximable mappings P ~> Q.
  const SemLattice& sem() const noexcept { return sem_; }

  ApproximableMapping as_mapping(const Bits& pairs) const;
  Bits as_attributes(const ApproximableMapping& m) const;

 private:
  Bits saturate(const Bits& attributes) const;

  SemLattice source_;
  SemLattice target_;
  std::vector<std::pair<std::size_t, std::size_t>> attributes_;
  std::vector<std::string> names_;
  std::shared_ptr<const FormalContext> literal_;
  std::size_t literal_limit_ = 0;
  SemLattice sem_;
};

/// Cxt(P x Q, R) -> Cxt(P, [Q ~> R]): X ~> W iff (X u Y, Z) in m for every
/// (Y, Z) in W.
ApproximableMapping curry(const Product& pq, const FunctionSpace& qr,
                          const ApproximableMapping& m);
/// Inverse of curry: X u Y ~> Z iff some W has X ~> W and (Y, Z) in W.
ApproximableMapping uncurry(const Product& pq, const FunctionSpace& qr,
                            const ApproximableMapping& m);

}  // namespace lattica

#endif  // LATTICA_CATEGORY_HPP_
