#include "lattica/io.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>

namespace lattica {

ParseError::ParseError(std::size_t line, const std::string& message)
    : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(start, end - start));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
    start = end + 1;
  }
  return lines;
}

std::size_t parse_count(const std::string& s, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError(line, "expected a count, got '" + s + "'");
  return value;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

template <typename F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw ParseError(0, std::string("malformed JSON document: ") + e.what());
  }
}

Json header(const char* format) { return Json{{"format", format}, {"version", 1}}; }

void expect_format(const Json& j, const std::string& format) {
  if (!j.is_object()) throw ParseError(0, "expected a JSON object");
  const auto f = json_format(j);
  if (f != format) throw ParseError(0, "expected a " + format + " document, got '" + f + "'");
}

std::vector<std::string> strings(const Json& j, const char* key) {
  return j.at(key).get<std::vector<std::string>>();
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

// ---- CXT ----------------------------------------------------------------------

FormalContext parse_cxt(std::string_view text) {
  if (text.empty()) throw ParseError(1, "empty CXT input");
  if (text.back() != '\n') throw ParseError(0, "CXT input must end with a newline");
  const auto lines = split_lines(text);
  auto at = [&](std::size_t i) -> const std::string& {
    if (i >= lines.size()) throw ParseError(i + 1, "unexpected end of CXT input");
    return lines[i];
  };
  if (at(0) != "B") throw ParseError(1, "CXT input must start with 'B'");
  if (!at(1).empty()) throw ParseError(2, "expected an empty line");
  const auto n = parse_count(at(2), 3);
  const auto m = parse_count(at(3), 4);
  if (!at(4).empty()) throw ParseError(5, "expected an empty line");
  std::vector<std::string> objects, attributes;
  std::size_t i = 5;
  for (std::size_t k = 0; k < n; ++k) objects.push_back(at(i++));
  for (std::size_t k = 0; k < m; ++k) attributes.push_back(at(i++));
  std::vector<Bits> rows;
  for (std::size_t k = 0; k < n; ++k, ++i) {
    const auto& row = at(i);
    if (row.size() != m)
      throw ParseError(i + 1, "row has " + std::to_string(row.size()) + " cells, expected " +
                                  std::to_string(m));
    Bits bits(m);
    for (std::size_t j = 0; j < m; ++j) {
      if (row[j] == 'X') bits.set(j);
      else if (row[j] != '.') throw ParseError(i + 1, "cell must be 'X' or '.'");
    }
    rows.push_back(std::move(bits));
  }
  for (; i < lines.size(); ++i)
    if (!lines[i].empty()) throw ParseError(i + 1, "unexpected content after the incidence rows");
  return FormalContext::from_rows(std::move(objects), std::move(attributes), std::move(rows));
}

std::string write_cxt(const FormalContext& p) {
  std::string out = "B\n\n" + std::to_string(p.object_count()) + "\n" +
                    std::to_string(p.attribute_count()) + "\n\n";
  for (const auto& o : p.objects()) out += o + "\n";
  for (const auto& a : p.attributes()) out += a + "\n";
  for (std::size_t o = 0; o < p.object_count(); ++o) {
    for (std::size_t a = 0; a < p.attribute_count(); ++a) out += p.incident(o, a) ? 'X' : '.';
    out += '\n';
  }
  return out;
}

// ---- JSON ---------------------------------------------------------------------------

std::string json_format(const Json& j) {
  if (!j.is_object()) return "";
  if (j.contains("format") && j["format"].is_string()) return j["format"].get<std::string>();
  if (j.contains("objects")) return "context";
  if (j.contains("propositions")) return "infosys";
  if (j.contains("points")) return "topspace";
  if (j.contains("pairs")) return "mapping";
  if (j.contains("elements")) return "poset";
  return "";
}

Json poset_to_json(const FinitePoset& p) {
  auto j = header("poset");
  auto elements = p.names();
  std::sort(elements.begin(), elements.end());
  j["elements"] = elements;
  Json leq = Json::array();
  for (const auto& [a, b] : p.leq_pairs()) leq.push_back({a, b});
  j["leq"] = leq;
  return j;
}

FinitePoset poset_from_json(const Json& j) {
  return guarded([&] {
    if (!j.is_object() || !j.contains("elements")) throw ParseError(0, "expected a poset document");
    std::vector<NamePair> pairs;
    for (const auto& e : j.at("leq")) pairs.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
    return FinitePoset::make(strings(j, "elements"), pairs);
  });
}

Json semilattice_to_json(const JoinSemilattice& s) {
  auto j = poset_to_json(s.poset());
  j["format"] = "semilattice";
  j["bottom"] = s.poset().name(s.bottom());
  return j;
}

JoinSemilattice semilattice_from_json(const Json& j) {
  return JoinSemilattice::from_poset(poset_from_json(j));
}

Json context_to_json(const FormalContext& p) {
  auto j = header("context");
  j["objects"] = p.objects();
  j["attributes"] = p.attributes();
  Json incidence = Json::array();
  auto pairs = p.incidence();
  std::sort(pairs.begin(), pairs.end());
  for (const auto& [o, a] : pairs) incidence.push_back({o, a});
  j["incidence"] = incidence;
  return j;
}

FormalContext context_from_json(const Json& j) {
  return guarded([&] {
    expect_format(j, "context");
    std::vector<NamePair> pairs;
    for (const auto& e : j.at("incidence")) pairs.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
    return FormalContext::make(strings(j, "objects"), strings(j, "attributes"), pairs);
  });
}

Json mapping_to_json(const ApproximableMapping& m) {
  auto j = header("mapping");
  j["source"] = semilattice_to_json(m.source());
  j["target"] = semilattice_to_json(m.target());
  Json pairs = Json::array();
  for (const auto& [a, b] : m.named_pairs()) pairs.push_back({a, b});
  j["pairs"] = pairs;
  return j;
}

ApproximableMapping mapping_from_json(const Json& j) {
  return guarded([&] {
    expect_format(j, "mapping");
    auto source = std::make_shared<const JoinSemilattice>(semilattice_from_json(j.at("source")));
    auto target = std::make_shared<const JoinSemilattice>(semilattice_from_json(j.at("target")));
    std::vector<NamePair> pairs;
    for (const auto& e : j.at("pairs")) pairs.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
    return ApproximableMapping::from_named_pairs(source, target, pairs);
  });
}

Json infosys_to_json(const InformationSystem& is) {
  auto j = header("infosys");
  j["propositions"] = is.propositions();
  std::vector<std::pair<std::vector<std::string>, std::string>> rows;
  for (const auto& [x, a] : is.nontrivial_pairs()) {
    std::vector<std::string> premises;
    for_each_member(x, [&](std::size_t i) { premises.push_back(is.propositions()[i]); });
    std::sort(premises.begin(), premises.end());
    rows.emplace_back(std::move(premises), is.propositions()[a]);
  }
  std::sort(rows.begin(), rows.end());
  Json entails = Json::array();
  for (const auto& [premises, conclusion] : rows) entails.push_back({premises, conclusion});
  j["entails"] = entails;
  return j;
}

InformationSystem infosys_from_json(const Json& j, const Limits& limits) {
  return guarded([&] {
    expect_format(j, "infosys");
    std::vector<Entailment> raw;
    for (const auto& e : j.at("entails"))
      raw.push_back({e.at(0).get<std::vector<std::string>>(), e.at(1).get<std::string>()});
    return InformationSystem::close_entailment(strings(j, "propositions"), raw, limits);
  });
}

Json topspace_to_json(const TopSpace& t) {
  auto j = header("topspace");
  j["points"] = t.points();
  std::vector<std::vector<std::string>> opens;
  for (const auto& o : t.opens()) {
    std::vector<std::string> members;
    for_each_member(o, [&](std::size_t i) { members.push_back(t.points()[i]); });
    std::sort(members.begin(), members.end());
    opens.push_back(std::move(members));
  }
  std::sort(opens.begin(), opens.end());
  j["opens"] = opens;
  return j;
}

TopSpace topspace_from_json(const Json& j) {
  return guarded([&] {
    expect_format(j, "topspace");
    auto points = strings(j, "points");
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < points.size(); ++i) index[points[i]] = i;
    std::vector<Bits> opens;
    for (const auto& o : j.at("opens")) {
      Bits b(points.size());
      for (const auto& name : o.get<std::vector<std::string>>()) {
        auto it = index.find(name);
        if (it == index.end()) throw UnknownElement(name);
        b.set(it->second);
      }
      opens.push_back(std::move(b));
    }
    return TopSpace::make(std::move(points), std::move(opens));
  });
}

// ---- sequents --------------------------------------------------------------------

namespace {

std::vector<std::string> parse_side(const std::string& side, std::size_t line) {
  const auto s = trim(side);
  if (s.empty()) throw ParseError(line, "empty side; write T for the empty conjunction");
  if (s == "T") return {};
  std::vector<std::string> atoms;
  std::size_t start = 0;
  for (;;) {
    const auto comma = s.find(',', start);
    auto atom = trim(std::string_view(s).substr(start, comma == std::string::npos ? std::string::npos
                                                                                    : comma - start));
    if (atom.empty() || atom == "T" || atom.find_first_of(" \t") != std::string::npos)
      throw ParseError(line, "malformed atom in '" + s + "'");
    atoms.push_back(std::move(atom));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return atoms;
}

}  // namespace

SequentFile parse_sequents(std::string_view text) {
  SequentFile out;
  bool fixed = false;
  std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> raw;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto line = trim(lines[i]);
    if (line.empty()) continue;
    if (line[0] == '#') {
      const std::string tag = "# propositions:";
      if (line.rfind(tag, 0) == 0) {
        const auto rest = trim(std::string_view(line).substr(tag.size()));
        out.propositions = rest.empty() ? std::vector<std::string>{} : parse_side(rest, i + 1);
        fixed = true;
      }
      continue;
    }
    const auto turnstile = line.find("|-");
    if (turnstile == std::string::npos || line.find("|-", turnstile + 2) != std::string::npos)
      throw ParseError(i + 1, "expected exactly one '|-'");
    raw.emplace_back(parse_side(line.substr(0, turnstile), i + 1),
                     parse_side(line.substr(turnstile + 2), i + 1));
  }
  if (!fixed)
    for (const auto& [x, y] : raw)
      for (const auto* side : {&x, &y})
        for (const auto& a : *side)
          if (std::find(out.propositions.begin(), out.propositions.end(), a) == out.propositions.end())
            out.propositions.push_back(a);
  const auto n = out.propositions.size();
  auto to_bits = [&](const std::vector<std::string>& atoms) {
    Bits b(n);
    for (const auto& a : atoms) {
      auto it = std::find(out.propositions.begin(), out.propositions.end(), a);
      if (it == out.propositions.end()) throw UnknownElement(a);
      b.set(static_cast<std::size_t>(it - out.propositions.begin()));
    }
    return b;
  };
  for (const auto& [x, y] : raw) out.sequents.emplace_back(to_bits(x), to_bits(y));
  return out;
}

std::string format_sequent(const Sequent& s, const std::vector<std::string>& propositions) {
  auto side = [&](const Bits& b) {
    if (b.none()) return std::string("T");
    std::string out;
    for_each_member(b, [&](std::size_t i) {
      if (!out.empty()) out += ", ";
      out += propositions[i];
    });
    return out;
  };
  return side(s.first) + " |- " + side(s.second);
}

std::string write_sequents(const CcpSystem& c) {
  std::string out = "# propositions:";
  for (std::size_t i = 0; i < c.size(); ++i) out += (i == 0 ? " " : ", ") + c.propositions()[i];
  out += '\n';
  const auto n = c.size();
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    const Bits xs = bits_from_mask(n, x);
    const Bits extra = c.consequences(xs) - xs;
    if (extra.any()) out += format_sequent({xs, extra}, c.propositions()) + '\n';
  }
  return out;
}

// ---- DOT -----------------------------------------------------------------------------

std::string hasse_dot(const FinitePoset& p, const std::string& graph_name) {
  std::string out = "digraph " + dot_quote(graph_name) + " {\n  rankdir=BT;\n  node [shape=box];\n";
  auto nodes = p.names();
  std::sort(nodes.begin(), nodes.end());
  for (const auto& n : nodes) out += "  " + dot_quote(n) + ";\n";
  std::vector<NamePair> edges;
  for (const auto& [lo, hi] : p.covers()) edges.emplace_back(p.name(lo), p.name(hi));
  std::sort(edges.begin(), edges.end());
  for (const auto& [lo, hi] : edges) out += "  " + dot_quote(lo) + " -> " + dot_quote(hi) + ";\n";
  return out + "}\n";
}

}  // namespace lattica
