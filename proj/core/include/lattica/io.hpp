#ifndef LATTICA_IO_HPP_
#define LATTICA_IO_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "lattica/context.hpp"
#include "lattica/error.hpp"
#include "lattica/logic.hpp"
#include "lattica/morphism.hpp"
#include "lattica/order.hpp"
#include "lattica/topology.hpp"

namespace lattica {

using Json = nlohmann::json;

/// Malformed input text; `line` is 1-based, 0 when not line-specific.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// ---- Burmeister CXT ----

/// Accepts "\n" and "\r\n" line endings; the final newline is required.
FormalContext parse_cxt(std::string_view text);
/// Canonical form: "\n" endings, trailing newline.
std::string write_cxt(const FormalContext& p);

// ---- JSON documents ----
// Every document carries "format" (the kind) and "version" (1). Producers
// sort their lists; readers accept any order.

Json poset_to_json(const FinitePoset& p);
FinitePoset poset_from_json(const Json& j);
Json semilattice_to_json(const JoinSemilattice& s);
/// Accepts any poset document that is a join-semilattice.
JoinSemilattice semilattice_from_json(const Json& j);

Json context_to_json(const FormalContext& p);
FormalContext context_from_json(const Json& j);

Json mapping_to_json(const ApproximableMapping& m);
ApproximableMapping mapping_from_json(const Json& j);

/// "entails" lists the non-trivial pairs [sorted premises, conclusion].
Json infosys_to_json(const InformationSystem& is);
/// Closes the listed pairs under the information-system rules.
InformationSystem infosys_from_json(const Json& j, const Limits& limits = {});

Json topspace_to_json(const TopSpace& t);
TopSpace topspace_from_json(const Json& j);

/// Reads the "format" field of a document.
std::string json_format(const Json& j);

// ---- sequent text ----
// One "X |- Y" per line with comma-separated atoms and T for an empty side.
// Blank lines and lines starting with '#' are ignored, except an optional
// "# propositions: a, b, c" header which fixes the proposition order.

struct SequentFile {
  std::vector<std::string> propositions;
  std::vector<Sequent> sequents;
};

SequentFile parse_sequents(std::string_view text);
/// Header plus, for every antecedent with new consequences, "X |- Y" where Y
/// lists the consequences outside X.
std::string write_sequents(const CcpSystem& c);
std::string format_sequent(const Sequent& s, const std::vector<std::string>& propositions);

// ---- DOT ----

/// Hasse diagram; nodes sorted by name, edges from lower to upper cover,
/// sorted by (lower, upper) name.
std::string hasse_dot(const FinitePoset& p, const std::string& graph_name = "hasse");

}  // namespace lattica

#endif  // LATTICA_IO_HPP_
