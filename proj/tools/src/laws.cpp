#include "lattica/laws.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "lattica/category.hpp"
#include "lattica/context.hpp"
#include "lattica/logic.hpp"
#include "lattica/morphism.hpp"
#include "lattica/topology.hpp"

namespace lattica {

namespace {

void fail(LawReport& r, const std::string& law, const std::string& statement, Json instance,
          const std::string& detail) {
  if (!r.ok) return;
  r.ok = false;
  r.witness = Json{{"law", law}, {"statement", statement}, {"instance", std::move(instance)},
                   {"detail", detail}};
}

// Runs `body` on each instance until the first failure. Exceptions count as
// failures of the instance that raised them, except guard violations.
template <typename T>
void for_each_instance(LawReport& r, const std::vector<T>& instances, const std::string& law,
                       const std::function<Json(const T&)>& describe,
                       const std::function<std::string(const T&)>& body) {
  for (const auto& x : instances) {
    std::string detail;
    try {
      detail = body(x);
    } catch (const GuardExceeded&) {
      throw;
    } catch (const Error& e) {
      detail = e.what();
    }
    ++r.instances;
    if (!detail.empty()) {
      fail(r, law, r.suite, describe(x), detail);
      return;
    }
  }
}

template <typename T, typename Key>
void sort_by_size(std::vector<T>& v, Key key) {
  std::stable_sort(v.begin(), v.end(), [&](const T& a, const T& b) { return key(a) < key(b); });
}

FormalContext two_chain_context() {
  return FormalContext::make({"g1", "g2"}, {"m1"}, std::vector<NamePair>{{"g1", "m1"}});
}

// Small contexts with |Sem| <= max_sem: terminal, the 2-chain and random
// members of the seeded corpus, without repeats, smallest first.
std::vector<FormalContext> category_contexts(const LawOptions& o, std::size_t cap) {
  std::vector<FormalContext> pool{terminal(), two_chain_context()};
  for (auto& p : context_corpus(o.seed, o.count, 3, 3)) pool.push_back(std::move(p));
  std::vector<FormalContext> out;
  for (auto& p : pool) {
    if (out.size() == cap) break;
    if (sem_lattice(p, o.limits).size() > o.max_sem) continue;
    if (std::find(out.begin(), out.end(), p) != out.end()) continue;
    out.push_back(std::move(p));
  }
  sort_by_size(out, [](const FormalContext& p) { return p.object_count() + p.attribute_count(); });
  return out;
}

using Triple = std::array<const FormalContext*, 3>;

std::vector<Triple> triples(const std::vector<FormalContext>& cs) {
  std::vector<Triple> out;
  for (const auto& p : cs)
    for (const auto& q : cs)
      for (const auto& r : cs) out.push_back({&p, &q, &r});
  return out;
}

using ContextPair = std::pair<const FormalContext*, const FormalContext*>;

std::vector<ContextPair> context_pairs(const std::vector<FormalContext>& cs) {
  std::vector<ContextPair> out;
  for (const auto& p : cs)
    for (const auto& q : cs) out.emplace_back(&p, &q);
  return out;
}

Json describe_pair(const ContextPair& p) {
  return Json::array({context_to_json(*p.first), context_to_json(*p.second)});
}

Json describe_contexts(const Triple& t, std::size_t n) {
  Json j = Json::array();
  for (std::size_t i = 0; i < n; ++i) j.push_back(context_to_json(*t[i]));
  return j;
}

std::set<std::string> encodings(const std::vector<ApproximableMapping>& ms) {
  std::set<std::string> out;
  for (const auto& m : ms) out.insert(m.encoding());
  return out;
}

// ---- suites ----

void completion_suite(LawReport& r, const LawOptions& o) {
  auto ss = semilattice_corpus(o.seed, o.count, 6);
  auto ls = lattice_corpus(o.seed ^ 0x9e37'79b9'7f4a'7c15ULL, o.count, 6);
  std::vector<std::size_t> idx(std::min(ss.size(), ls.size()));
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  sort_by_size(idx, [&](std::size_t i) { return std::max(ss[i].size(), ls[i].size()); });
  for_each_instance<std::size_t>(
      r, idx, "ideal completion and compact elements",
      [&](std::size_t i) {
        return Json{{"semilattice", semilattice_to_json(ss[i])}, {"lattice", poset_to_json(ls[i].poset())}};
      },
      [&](std::size_t i) -> std::string {
        auto rep = check_completion_isos(ss[i], ls[i], o.limits);
        if (!rep.principal_ideals.ok) return "a |-> down(a): " + rep.principal_ideals.failure;
        if (!rep.compact_ideals.ok) return "x |-> down(x) & K(L): " + rep.compact_ideals.failure;
        return "";
      });
  r.lines.push_back("semilattices: " + std::to_string(ss.size()) + ", lattices: " +
                    std::to_string(ls.size()));
}

void functor_suite(LawReport& r, const LawOptions& o) {
  std::vector<SemilatticeRef> ss;
  for (auto& s : semilattice_corpus(o.seed, 14, 4))
    ss.push_back(std::make_shared<const JoinSemilattice>(std::move(s)));
  Generator g(o.seed);
  struct Pair {
    ApproximableMapping f, g;
  };
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < o.count; ++i) {
    const auto& a = ss[g.below(ss.size())];
    const auto& b = ss[g.below(ss.size())];
    const auto& c = ss[g.below(ss.size())];
    auto ab = enumerate_mappings(a, b, o.limits), bc = enumerate_mappings(b, c, o.limits);
    pairs.push_back({ab[g.below(ab.size())], bc[g.below(bc.size())]});
  }
  sort_by_size(pairs, [](const Pair& p) {
    return p.f.source().size() + p.f.target().size() + p.g.target().size();
  });
  for_each_instance<Pair>(
      r, pairs, "functoriality and naturality of Idl and K",
      [](const Pair& p) { return Json{{"f", mapping_to_json(p.f)}, {"g", mapping_to_json(p.g)}}; },
      [&](const Pair& p) -> std::string {
        const auto& L = o.limits;
        auto fi = idl_on_morphism(p.f, L), gi = idl_on_morphism(p.g, L);
        if (idl_on_morphism(compose(p.f, p.g), L) != compose(fi, gi)) return "Idl(f;g) != Idl(f);Idl(g)";
        if (idl_on_morphism(ApproximableMapping::identity(p.f.source_ref()), L) !=
            ScottFunction::identity(fi.source_ref()))
          return "Idl(id) != id";
        if (k_on_morphism(compose(fi, gi), L) != compose(k_on_morphism(fi, L), k_on_morphism(gi, L)))
          return "K(f;g) != K(f);K(g)";
        if (k_on_morphism(ScottFunction::identity(fi.source_ref()), L) !=
            ApproximableMapping::identity(k_on_morphism(fi, L).source_ref()))
          return "K(id) != id";
        if (compose(epsilon(p.f.source_ref(), L), k_on_morphism(fi, L)) !=
            compose(p.f, epsilon(p.f.target_ref(), L)))
          return "epsilon is not natural";
        if (compose(eta(fi.source_ref(), L), idl_on_morphism(k_on_morphism(fi, L), L)) !=
            compose(fi, eta(fi.target_ref(), L)))
          return "eta is not natural";
        return "";
      });
}

void product_suite(LawReport& r, const LawOptions& o) {
  const auto cs = category_contexts(o, 6);
  for_each_instance<Triple>(
      r, triples(cs), "product universal property",
      [](const Triple& t) { return describe_contexts(t, 3); },
      [&](const Triple& t) -> std::string {
        auto pq = Product::make(*t[0], *t[1], o.limits);
        if (pq.sem().size() != pq.left().size() * pq.right().size())
          return "|Sem(PxQ)| = " + std::to_string(pq.sem().size()) + " != " +
                 std::to_string(pq.left().size()) + " * " + std::to_string(pq.right().size());
        auto sr = sem_lattice(*t[2], o.limits);
        const auto pl = proj_left(pq), pr = proj_right(pq);
        const auto to_p = enumerate_mappings(sr.shared(), pq.left().shared(), o.limits);
        const auto to_q = enumerate_mappings(sr.shared(), pq.right().shared(), o.limits);
        std::map<std::pair<std::string, std::string>, std::size_t> cones;
        const auto mediators = enumerate_mappings(sr.shared(), pq.sem().shared(), o.limits);
        for (std::size_t k = 0; k < mediators.size(); ++k) {
          auto key = std::pair{compose(mediators[k], pl).encoding(), compose(mediators[k], pr).encoding()};
          if (!cones.emplace(key, k).second) return "two mediating mappings give the same cone";
        }
        if (cones.size() != to_p.size() * to_q.size())
          return "mediating mappings: " + std::to_string(cones.size()) + " != " +
                 std::to_string(to_p.size() * to_q.size()) + " cones";
        for (const auto& f : to_p)
          for (const auto& g : to_q) {
            auto h = pair(pq, f, g);
            if (compose(h, pl) != f || compose(h, pr) != g) return "pairing does not commute";
            auto it = cones.find({f.encoding(), g.encoding()});
            if (it == cones.end() || mediators[it->second] != h) return "pairing is not the unique mediator";
          }
        return "";
      });
  r.lines.push_back("contexts: " + std::to_string(cs.size()));
}

void tensor_suite(LawReport& r, const LawOptions& o) {
  const auto cs = category_contexts(o, 6);
  for_each_instance<ContextPair>(
      r, context_pairs(cs), "tensor iso to product", describe_pair,
      [&](const ContextPair& p) -> std::string {
        auto tensor = Tensor::make(*p.first, *p.second, o.limits);
        auto plus_map = tensor.iso_plus(), minus_map = tensor.iso_minus();
        if (compose(plus_map, minus_map) != ApproximableMapping::identity(tensor.product().sem().shared()))
          return "iso_plus ; iso_minus != id";
        if (compose(minus_map, plus_map) != ApproximableMapping::identity(tensor.sem().shared()))
          return "iso_minus ; iso_plus != id";
        return "";
      });
}

void funcspace_suite(LawReport& r, const LawOptions& o) {
  const auto cs = category_contexts(o, 6);
  for_each_instance<ContextPair>(
      r, context_pairs(cs), "concepts of the function space are the approximable mappings",
      describe_pair, [&](const ContextPair& p) -> std::string {
        auto sp = sem_lattice(*p.first, o.limits), sq = sem_lattice(*p.second, o.limits);
        auto fs = FunctionSpace::make(sp, sq, o.limits);
        auto alg = alg_lattice(fs.literal_context(), o.limits);
        std::set<std::string> concepts;
        for (const auto& x : alg.sets()) concepts.insert(fs.as_mapping(x).encoding());
        if (concepts != encodings(enumerate_mappings(sp.shared(), sq.shared(), o.limits)))
          return "concept carrier differs from the hom-set";
        return "";
      });
  if (o.max_sem >= 2) {
    auto s = sem_lattice(two_chain_context(), o.limits);
    auto alg = alg_lattice(FunctionSpace::make(s, s, o.limits).literal_context(), o.limits);
    const auto& order = alg.lattice().poset();
    bool chain = true;
    for (std::size_t i = 0; i < order.size(); ++i)
      for (std::size_t j = 0; j < order.size(); ++j) chain = chain && (order.leq(i, j) || order.leq(j, i));
    r.lines.push_back("2-chain concepts: " + std::to_string(order.size()) + (chain ? " (chain)" : ""));
    ++r.instances;
    if (order.size() != 3 || !chain)
      fail(r, "function space of two 2-chains", r.suite, context_to_json(two_chain_context()),
           "expected a 3-chain of concepts");
  }
}

void currying_suite(LawReport& r, const LawOptions& o) {
  const auto cs = category_contexts(o, 4);
  const auto chain = two_chain_context();
  for_each_instance<Triple>(
      r, triples(cs), "currying bijection",
      [](const Triple& t) { return describe_contexts(t, 3); },
      [&](const Triple& t) -> std::string {
        auto pq = Product::make(*t[0], *t[1], o.limits);
        auto sr = sem_lattice(*t[2], o.limits);
        auto qr = FunctionSpace::make(pq.right(), sr, o.limits);
        const auto left = enumerate_mappings(pq.sem().shared(), sr.shared(), o.limits);
        const auto right = enumerate_mappings(pq.left().shared(), qr.sem().shared(), o.limits);
        if (*t[0] == chain && *t[1] == chain && *t[2] == chain)
          r.lines.push_back("hom-sets: " + std::to_string(left.size()) + " = " +
                            std::to_string(right.size()));
        if (left.size() != right.size())
          return "hom-sets differ: " + std::to_string(left.size()) + " != " + std::to_string(right.size());
        for (const auto& m : left)
          if (uncurry(pq, qr, curry(pq, qr, m)) != m) return "uncurry(curry(m)) != m";
        for (const auto& m : right)
          if (curry(pq, qr, uncurry(pq, qr, m)) != m) return "curry(uncurry(m)) != m";
        return "";
      });
}

void logic_suite(LawReport& r, const LawOptions& o) {
  Generator g(o.seed);
  std::vector<InformationSystem> systems;
  std::vector<CcpSystem> ccps;
  for (std::size_t i = 0; i < o.count; ++i) systems.push_back(g.information_system(6));
  for (std::size_t i = 0; i < o.count; ++i) {
    const auto n = 1 + g.below(6);
    std::vector<std::string> props;
    for (std::size_t k = 0; k < n; ++k) props.push_back("q" + std::to_string(k + 1));
    std::vector<Sequent> gens;
    for (std::size_t k = g.below(4); k > 0; --k)
      gens.emplace_back(bits_from_mask(n, g.below(std::size_t{1} << n)), bits_from_mask(n, g.below(std::size_t{1} << n)));
    ccps.push_back(CcpSystem::generate(props, gens, o.limits));
  }
  sort_by_size(systems, [](const InformationSystem& s) { return s.size(); });
  sort_by_size(ccps, [](const CcpSystem& c) { return c.size(); });
  for_each_instance<InformationSystem>(
      r, systems, "information systems to CCP and back",
      [](const InformationSystem& s) { return infosys_to_json(s); },
      [&](const InformationSystem& s) -> std::string {
        return ccp_to_is(is_to_ccp(s, o.limits), o.limits).table() == s.table() ? "" : "round trip changed the system";
      });
  if (!r.ok) return;
  for_each_instance<CcpSystem>(
      r, ccps, "CCP systems to information systems and back",
      [](const CcpSystem& c) { return Json(write_sequents(c)); },
      [&](const CcpSystem& c) -> std::string {
        return is_to_ccp(ccp_to_is(c, o.limits), o.limits) == c ? "" : "round trip changed the system";
      });
}

void rz_suite(LawReport& r, const LawOptions& o) {
  auto cs = context_corpus(o.seed, o.count, 4, 4);
  for (std::size_t n = 1; n <= 4; ++n) cs.push_back(context_of_semilattice(JoinSemilattice::from_poset(chain_poset(n))));
  cs.push_back(context_of_semilattice(JoinSemilattice::from_poset(diamond_poset())));
  sort_by_size(cs, [](const FormalContext& p) { return p.object_count() + p.attribute_count(); });
  std::size_t sets = 0;
  for_each_instance<FormalContext>(
      r, cs, "concept closure agrees with entailment among compact elements",
      [](const FormalContext& p) { return context_to_json(p); },
      [&](const FormalContext& p) -> std::string {
        auto rep = rz_closure_check(p, o.limits);
        sets += rep.sets_checked;
        if (rep.ok) return "";
        Json j{{"X", rep.witness}, {"closure", rep.closure}, {"entailed", rep.rz_closure}};
        return j.dump();
      });
  r.lines.push_back("attribute sets checked: " + std::to_string(sets));
}

void topology_suite(LawReport& r, const LawOptions& o) {
  auto ls = lattice_corpus(o.seed, o.count, 5);
  sort_by_size(ls, [](const FiniteLattice& l) { return l.size(); });
  for_each_instance<FiniteLattice>(
      r, ls, "Scott topology of a finite lattice",
      [](const FiniteLattice& l) { return poset_to_json(l.poset()); },
      [&](const FiniteLattice& l) -> std::string {
        auto t = scott_topology(l, o.limits);
        if (specialization_order(t).leq_pairs() != l.poset().leq_pairs())
          return "specialization order differs from the lattice order";
        auto base = scott_base_and_coherence(l, o.limits);
        return base.ok() ? "" : base.failure.empty() ? "Scott base or coherence fails" : base.failure;
      });
  if (!r.ok) return;
  auto ms = meet_semilattice_corpus(o.seed, o.count, 5);
  sort_by_size(ms, [](const MeetSemilattice& s) { return s.size(); });
  for_each_instance<MeetSemilattice>(
      r, ms, "filters, Scott points and locale points",
      [](const MeetSemilattice& s) { return poset_to_json(s.poset()); },
      [&](const MeetSemilattice& s) -> std::string {
        auto fp = check_filter_prime_bijection(s, o.limits);
        if (!fp.ok) return "filter/meet-prime bijection: " + fp.failure;
        auto loc = lower_set_locale(s, o.limits);
        if (!loc.scott_iso.ok) return "lower sets vs Scott opens of filters: " + loc.scott_iso.failure;
        if (!spectrality_check(loc.locale, o.limits).ok()) return "lower-set locale is not spectral";
        auto spaces = stone_spaces(s, flt_lattice(s, o.limits).lattice(), loc.locale, o.limits);
        if (!spaces.scott_filters_homeomorphic) return "Scott space and filter space are not homeomorphic";
        if (!spaces.filters_points_homeomorphic) return "filter space and point space are not homeomorphic";
        return "";
      });
}

struct SuiteEntry {
  const char* name;
  void (*run)(LawReport&, const LawOptions&);
};

constexpr SuiteEntry suites[] = {
    {"thm3.6", completion_suite}, {"thm4.4", functor_suite},    {"prop5.6", product_suite},
    {"prop5.7", tensor_suite},    {"lemma5.9", funcspace_suite}, {"prop5.10", currying_suite},
    {"prop6.9", logic_suite},     {"thm6.7", rz_suite},          {"cor6.17", topology_suite},
};

}  // namespace

const std::vector<std::string>& law_suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : suites) out.emplace_back(s.name);
    return out;
  }();
  return names;
}

LawReport run_law_suite(const std::string& name, const LawOptions& options) {
  for (const auto& s : suites)
    if (name == s.name) {
      LawReport r;
      r.suite = name;
      s.run(r, options);
      return r;
    }
  throw std::invalid_argument("unknown law suite '" + name + "'");
}

}  // namespace lattica
