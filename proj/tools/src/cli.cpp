#include "lattica/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "lattica/category.hpp"
#include "lattica/context.hpp"
#include "lattica/io.hpp"
#include "lattica/laws.hpp"
#include "lattica/logic.hpp"
#include "lattica/morphism.hpp"
#include "lattica/topology.hpp"

namespace lattica::cli {

namespace {

class IoError : public Error {
 public:
  using Error::Error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

enum class Kind { context, poset, semilattice, mapping, infosys, topspace, sequents };

struct Input {
  Kind kind{};
  FormalContext context;
  SequentFile sequents;
  Json json;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

Input load(const std::string& path) {
  const auto text = read_file(path);
  Input in;
  if (ends_with(path, ".cxt")) {
    in.kind = Kind::context;
    in.context = parse_cxt(text);
    return in;
  }
  if (ends_with(path, ".seq")) {
    in.kind = Kind::sequents;
    in.sequents = parse_sequents(text);
    return in;
  }
  try {
    in.json = Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(0, path + ": " + e.what());
  }
  static const std::map<std::string, Kind> kinds{
      {"context", Kind::context}, {"poset", Kind::poset},       {"semilattice", Kind::semilattice},
      {"mapping", Kind::mapping}, {"infosys", Kind::infosys},   {"topspace", Kind::topspace}};
  auto it = kinds.find(json_format(in.json));
  if (it == kinds.end()) throw ParseError(0, path + ": unrecognized document format");
  in.kind = it->second;
  if (in.kind == Kind::context) in.context = context_from_json(in.json);
  return in;
}

FormalContext as_context(const Input& in) {
  switch (in.kind) {
    case Kind::context:
      return in.context;
    case Kind::poset:
    case Kind::semilattice:
      return context_of_semilattice(semilattice_from_json(in.json));
    default:
      throw UsageError("expected a context or a semilattice");
  }
}

JoinSemilattice as_semilattice(const Input& in, const Limits& limits) {
  switch (in.kind) {
    case Kind::context:
      return sem_lattice(in.context, limits).semilattice();
    case Kind::poset:
    case Kind::semilattice:
      return semilattice_from_json(in.json);
    default:
      throw UsageError("expected a semilattice or a context");
  }
}

CcpSystem as_ccp(const Input& in, const Limits& limits) {
  switch (in.kind) {
    case Kind::sequents:
      return CcpSystem::generate(in.sequents.propositions, in.sequents.sequents, limits);
    case Kind::infosys:
      return is_to_ccp(infosys_from_json(in.json, limits), limits);
    case Kind::context:
      return is_to_ccp(context_to_is(in.context, limits), limits);
    default:
      throw UsageError("expected a sequent file, an information system or a context");
  }
}

InformationSystem as_infosys(const Input& in, const Limits& limits) {
  switch (in.kind) {
    case Kind::infosys:
      return infosys_from_json(in.json, limits);
    case Kind::context:
      return context_to_is(in.context, limits);
    case Kind::sequents:
      return ccp_to_is(as_ccp(in, limits), limits);
    default:
      throw UsageError("expected an information system, a sequent file or a context");
  }
}

FiniteLattice as_lattice(const Input& in) {
  if (in.kind != Kind::poset && in.kind != Kind::semilattice)
    throw UsageError("expected a poset document");
  return FiniteLattice::from_poset(poset_from_json(in.json));
}

void apply_limit(Limits& l, const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos) throw UsageError("--limit expects KEY=VALUE, got '" + spec + "'");
  const auto key = spec.substr(0, eq);
  std::size_t value = 0;
  try {
    value = std::stoull(spec.substr(eq + 1));
  } catch (const std::exception&) {
    throw UsageError("--limit value must be a non-negative integer: '" + spec + "'");
  }
  static const std::map<std::string, std::size_t Limits::*> fields{
      {"directed-carrier", &Limits::max_directed_carrier},
      {"powerset-attributes", &Limits::max_powerset_attributes},
      {"powerset-lattice-base", &Limits::max_powerset_lattice_base},
      {"literal-funcspace-attributes", &Limits::max_literal_funcspace_attributes},
      {"tensor-attributes", &Limits::max_tensor_attributes},
      {"funcspace-attributes", &Limits::max_funcspace_attributes},
      {"propositions", &Limits::max_propositions},
      {"materialized-propositions", &Limits::max_materialized_propositions},
      {"mappings", &Limits::max_mappings},
  };
  auto it = fields.find(key);
  if (it == fields.end()) throw UsageError("unknown limit '" + key + "'");
  l.*(it->second) = value;
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::string lines_of(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += s + "\n";
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::vector<NamePair> pairs_of(const Json& mapping) {
  std::vector<NamePair> out;
  for (const auto& e : mapping.at("pairs")) out.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
  return out;
}

// ---- verbs ----

std::string validate(const Input& in, const Limits& limits) {
  std::ostringstream o;
  switch (in.kind) {
    case Kind::context:
      o << "context: " << in.context.object_count() << " objects, " << in.context.attribute_count()
        << " attributes\nSem size " << sem_lattice(in.context, limits).size() << "\n";
      break;
    case Kind::poset: {
      auto p = poset_from_json(in.json);
      o << "poset: " << p.size() << " elements\n";
      break;
    }
    case Kind::semilattice: {
      auto s = semilattice_from_json(in.json);
      o << "semilattice: " << s.size() << " elements, bottom " << s.poset().name(s.bottom()) << "\n";
      break;
    }
    case Kind::mapping:
      o << "mapping: " << mapping_from_json(in.json).named_pairs().size() << " pairs\n";
      break;
    case Kind::infosys:
      o << "information system: " << infosys_from_json(in.json, limits).size() << " propositions\n";
      break;
    case Kind::topspace: {
      auto t = topspace_from_json(in.json);
      o << "topological space: " << t.size() << " points, " << t.opens().size() << " opens\n";
      break;
    }
    case Kind::sequents: {
      auto c = as_ccp(in, limits);
      o << "sequents: " << in.sequents.sequents.size() << " over " << c.size() << " propositions\n"
        << "Lindenbaum classes " << lindenbaum(c, limits).algebra.size() << "\n";
      break;
    }
  }
  return o.str();
}

std::string convert(const Input& in, const std::string& to, const Limits& limits) {
  if (to == "cxt") return write_cxt(as_context(in));
  if (to == "context") return dump(context_to_json(as_context(in)));
  if (to == "semilattice") return dump(semilattice_to_json(as_semilattice(in, limits)));
  if (to == "infosys") return dump(infosys_to_json(as_infosys(in, limits)));
  if (to == "sequents") return write_sequents(as_ccp(in, limits));
  throw UsageError("unknown target '" + to + "'");
}

std::string rz(const Input& in, const Input& queries, const Limits& limits) {
  if (queries.kind != Kind::sequents) throw UsageError("rz expects a sequent file of queries");
  FinitePoset d;
  std::vector<std::size_t> atom;
  const auto& props = queries.sequents.propositions;
  if (in.kind == Kind::context) {
    auto sem = sem_lattice(in.context, limits);
    d = sem.semilattice().poset();
    for (const auto& a : props) {
      Bits single(in.context.attribute_count());
      single.set(in.context.attribute_index(a));
      atom.push_back(sem.index_of(in.context.attr_closure(single)));
    }
  } else {
    d = poset_from_json(in.json);
    for (const auto& a : props) atom.push_back(d.index(a));
  }
  auto lift = [&](const Bits& b) {
    Bits out(d.size());
    for_each_member(b, [&](std::size_t i) { out.set(atom[i]); });
    return out;
  };
  std::string out;
  for (const auto& s : queries.sequents.sequents)
    out += format_sequent(s, props) + ": " + (rz_entails(d, lift(s.first), lift(s.second)) ? "yes" : "no") + "\n";
  return out;
}

bool all_pairs(const FinitePoset& p, bool joins) {
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b) {
      Bits x(p.size());
      x.set(a);
      x.set(b);
      if (!(joins ? p.supremum(x) : p.infimum(x))) return false;
    }
  return true;
}

Json topology_report(const Input& in, const Limits& limits, bool& ok) {
  auto p = poset_from_json(in.json);
  Json report = Json::object();
  if (!p.empty() && p.supremum(p.none()) && all_pairs(p, true)) {
    auto l = FiniteLattice::from_poset(p);
    auto scott = scott_topology(l, limits);
    const bool round_trip = specialization_order(scott).leq_pairs() == p.leq_pairs();
    auto base = scott_base_and_coherence(l, limits);
    report["scott"] = topspace_to_json(scott);
    report["specialization_round_trip"] = round_trip;
    report["scott_base"] = base.base_ok;
    report["compact_opens"] = base.compact_opens_ok;
    report["coherent"] = base.coherent;
    ok = ok && round_trip && base.ok();
    if (auto v = locale_violation(l)) {
      report["locale"] = false;
      report["distributivity_witness"] = *v;
    } else {
      auto loc = Locale::make(std::make_shared<const FiniteLattice>(l));
      std::vector<std::string> points;
      for (const auto& pt : locale_points(loc)) points.push_back(p.name(pt.generator));
      report["locale"] = true;
      report["points"] = sorted(points);
      report["spectral"] = spectrality_check(loc, limits).ok();
    }
  }
  if (p.greatest(p.all()) && all_pairs(p, false)) {
    auto s = MeetSemilattice::from_poset(p);
    auto fp = check_filter_prime_bijection(s, limits);
    auto loc = lower_set_locale(s, limits);
    auto spaces = stone_spaces(s, flt_lattice(s, limits).lattice(), loc.locale, limits);
    report["spaces"] = Json{
        {"filters", spaces.filters.size()},
        {"filter_prime_bijection", fp.ok},
        {"lower_sets_vs_scott_opens", loc.scott_iso.ok},
        {"scott_filters_homeomorphic", spaces.scott_filters_homeomorphic},
        {"filters_points_homeomorphic", spaces.filters_points_homeomorphic},
    };
    ok = ok && fp.ok && loc.scott_iso.ok && spaces.ok();
  }
  return report;
}

int run_laws(const std::string& suite, const LawOptions& options, std::ostream& out) {
  std::vector<std::string> names;
  if (suite == "all") names = law_suite_names();
  else if (std::find(law_suite_names().begin(), law_suite_names().end(), suite) != law_suite_names().end())
    names.push_back(suite);
  else
    throw UsageError("unknown law suite '" + suite + "'");
  bool all_ok = true;
  for (const auto& name : names) {
    auto r = run_law_suite(name, options);
    out << name << ": " << (r.ok ? "ok" : "FAIL") << " (" << r.instances << " instances)\n";
    for (const auto& l : r.lines) out << l << "\n";
    if (!r.ok) {
      out << dump(r.witness);
      all_ok = false;
    }
  }
  return all_ok ? ExitCode::ok : ExitCode::failed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite lattices, formal contexts and their categories", "lattica"};
  app.require_subcommand(1, 1);
  std::string output;
  std::vector<std::string> limit_specs;
  app.add_option("-o,--output", output, "Write the result to this file");
  app.add_option("--limit", limit_specs, "Size guard override KEY=VALUE (repeatable)");

  std::string file, second, third, mapping_file, to, suite, graph_name = "hasse";
  bool json_out = false;
  LawOptions law_options;

  auto validate_cmd = app.add_subcommand("validate", "Check a context, semilattice, system or space file");
  validate_cmd->add_option("file", file)->required();
  auto concepts_cmd = app.add_subcommand("concepts", "List the concepts of a context");
  concepts_cmd->add_option("file", file)->required();
  concepts_cmd->add_flag("--json", json_out, "Emit the concept semilattice as JSON");
  auto idl_cmd = app.add_subcommand("idl", "Ideal completion of a semilattice");
  idl_cmd->add_option("file", file)->required();
  auto compacts_cmd = app.add_subcommand("compacts", "Compact elements of a lattice");
  compacts_cmd->add_option("file", file)->required();
  auto product_cmd = app.add_subcommand("product", "Product context");
  product_cmd->add_option("left", file)->required();
  product_cmd->add_option("right", second)->required();
  auto tensor_cmd = app.add_subcommand("tensor", "Tensor context");
  tensor_cmd->add_option("left", file)->required();
  tensor_cmd->add_option("right", second)->required();
  auto funcspace_cmd = app.add_subcommand("funcspace", "Function-space context");
  funcspace_cmd->add_option("source", file)->required();
  funcspace_cmd->add_option("target", second)->required();
  funcspace_cmd->add_flag("--json", json_out, "Emit the semilattice of mappings as JSON");
  CLI::App* curry_cmds[2];
  for (int i = 0; i < 2; ++i) {
    auto* c = app.add_subcommand(i == 0 ? "curry" : "uncurry",
                                 i == 0 ? "Curry a mapping Sem(P x Q) ~> Sem(R)"
                                        : "Uncurry a mapping Sem(P) ~> Sem([Q ~> R])");
    c->add_option("p", file)->required();
    c->add_option("q", second)->required();
    c->add_option("r", third)->required();
    c->add_option("mapping", mapping_file)->required();
    curry_cmds[i] = c;
  }
  auto convert_cmd = app.add_subcommand("convert", "Convert between presentations");
  convert_cmd->add_option("file", file)->required();
  convert_cmd->add_option("--to", to, "cxt, context, semilattice, infosys or sequents")->required();
  auto rz_cmd = app.add_subcommand("rz", "Answer entailment queries over the compact elements");
  rz_cmd->add_option("file", file, "Context or poset")->required();
  rz_cmd->add_option("queries", second, "Sequent file")->required();
  auto topology_cmd = app.add_subcommand("topology", "Scott topology, points and spaces report");
  topology_cmd->add_option("file", file)->required();
  auto laws_cmd = app.add_subcommand("laws", "Run a law suite (or 'all')");
  laws_cmd->add_option("suite", suite)->required();
  laws_cmd->add_option("--seed", law_options.seed, "Seed of the random corpora");
  laws_cmd->add_option("--max-sem", law_options.max_sem, "Largest |Sem| in the category suites");
  laws_cmd->add_option("--count", law_options.count, "Random instances per corpus");
  auto dot_cmd = app.add_subcommand("dot", "Hasse diagram in DOT");
  dot_cmd->add_option("file", file)->required();
  dot_cmd->add_option("--name", graph_name, "Graph name");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ExitCode::ok : ExitCode::usage;
  }

  auto emit = [&](const std::string& text) {
    if (output.empty()) {
      out << text;
      return;
    }
    std::ofstream f(output, std::ios::binary);
    if (!f) throw IoError("cannot write '" + output + "'");
    f << text;
  };

  try {
    Limits limits;
    for (const auto& s : limit_specs) apply_limit(limits, s);
    law_options.limits = limits;
    auto* cmd = app.get_subcommands().front();

    if (cmd == validate_cmd) {
      emit(validate(load(file), limits));
    } else if (cmd == concepts_cmd) {
      auto sem = sem_lattice(as_context(load(file)), limits);
      emit(json_out ? dump(semilattice_to_json(sem.semilattice()))
                    : lines_of(sorted(sem.semilattice().poset().names())));
    } else if (cmd == idl_cmd) {
      emit(dump(poset_to_json(ideal_completion(as_semilattice(load(file), limits), limits).lattice().poset())));
    } else if (cmd == compacts_cmd) {
      auto l = as_lattice(load(file));
      emit(lines_of(sorted(l.poset().names_of(compact_elements(l, limits)))));
    } else if (cmd == product_cmd) {
      emit(write_cxt(product_context(as_context(load(file)), as_context(load(second))).context));
    } else if (cmd == tensor_cmd) {
      emit(write_cxt(tensor_context(as_context(load(file)), as_context(load(second)), limits).context));
    } else if (cmd == funcspace_cmd) {
      auto fs = FunctionSpace::make(sem_lattice(as_context(load(file)), limits),
                                    sem_lattice(as_context(load(second)), limits), limits);
      emit(json_out ? dump(semilattice_to_json(fs.sem().semilattice())) : write_cxt(fs.literal_context()));
    } else if (cmd == curry_cmds[0] || cmd == curry_cmds[1]) {
      auto pq = Product::make(as_context(load(file)), as_context(load(second)), limits);
      auto sr = sem_lattice(as_context(load(third)), limits);
      auto qr = FunctionSpace::make(pq.right(), sr, limits);
      const auto m = load(mapping_file);
      if (m.kind != Kind::mapping) throw UsageError("expected a mapping document");
      const auto pairs = pairs_of(m.json);
      if (cmd == curry_cmds[0]) {
        auto f = ApproximableMapping::from_named_pairs(pq.sem().shared(), sr.shared(), pairs);
        emit(dump(mapping_to_json(curry(pq, qr, f))));
      } else {
        auto f = ApproximableMapping::from_named_pairs(pq.left().shared(), qr.sem().shared(), pairs);
        emit(dump(mapping_to_json(uncurry(pq, qr, f))));
      }
    } else if (cmd == convert_cmd) {
      emit(convert(load(file), to, limits));
    } else if (cmd == rz_cmd) {
      emit(rz(load(file), load(second), limits));
    } else if (cmd == topology_cmd) {
      const auto in = load(file);
      if (in.kind != Kind::poset && in.kind != Kind::semilattice) throw UsageError("expected a poset document");
      bool ok = true;
      emit(dump(topology_report(in, limits, ok)));
      return ok ? ExitCode::ok : ExitCode::failed;
    } else if (cmd == laws_cmd) {
      std::ostringstream text;
      const int code = run_laws(suite, law_options, text);
      emit(text.str());
      return code;
    } else if (cmd == dot_cmd) {
      const auto in = load(file);
      if (in.kind == Kind::topspace)
        emit(hasse_dot(topspace_from_json(in.json).open_lattice().lattice().poset(), graph_name));
      else if (in.kind == Kind::poset)
        emit(hasse_dot(poset_from_json(in.json), graph_name));
      else
        emit(hasse_dot(as_semilattice(in, limits).poset(), graph_name));
    }
    return ExitCode::ok;
  } catch (const GuardExceeded& e) {
    err << "size guard exceeded: " << e.what() << "\n";
    return ExitCode::guard;
  } catch (const ValidationError& e) {
    out << dump(Json{{"error", "validation"}, {"rule", e.rule()}, {"witness", e.witness()}, {"message", e.what()}});
    return ExitCode::failed;
  } catch (const UnknownElement& e) {
    out << dump(Json{{"error", "unknown element"}, {"name", e.name()}, {"message", e.what()}});
    return ExitCode::failed;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return ExitCode::usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return ExitCode::usage;
  }
}

}  // namespace lattica::cli
