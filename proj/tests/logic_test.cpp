#include "lattica/logic.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "lattica/generate.hpp"
#include "lattica/morphism.hpp"
#include "oracles.hpp"

using namespace lattica;

namespace {

using Raw = std::vector<std::pair<std::uint64_t, std::size_t>>;

// Least set containing x closed under every raw rule, as the intersection of
// all closed supersets.
std::uint64_t closure_by_scan(std::size_t n, const Raw& raw, std::uint64_t x) {
  std::uint64_t best = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t y = 0; y < (std::uint64_t{1} << n); ++y) {
    if ((x & ~y) != 0) continue;
    bool closed = true;
    for (const auto& [premise, a] : raw)
      if ((premise & ~y) == 0 && !(y >> a & 1u)) closed = false;
    if (closed) best &= y;
  }
  return best;
}

struct RandomSystem {
  std::vector<std::string> props;
  std::vector<Entailment> raw;
  Raw masks;
};

RandomSystem random_system(oracle::Stream& s, std::size_t max_props) {
  RandomSystem r;
  const auto n = s.below(max_props + 1);
  for (std::size_t i = 0; i < n; ++i) r.props.push_back(std::string(1, static_cast<char>('a' + i)));
  if (n == 0) return r;
  const auto rules = s.below(2 * n);
  for (std::size_t k = 0; k < rules; ++k) {
    Entailment e;
    std::uint64_t premise = 0;
    const auto width = s.below(3);
    for (std::size_t i = 0; i < width; ++i) {
      const auto p = s.below(n);
      e.premises.push_back(r.props[p]);
      premise |= std::uint64_t{1} << p;
    }
    const auto c = s.below(n);
    e.conclusion = r.props[c];
    r.raw.push_back(e);
    r.masks.emplace_back(premise, c);
  }
  return r;
}

std::vector<InformationSystem> system_corpus(std::size_t count, std::size_t max_props) {
  oracle::Stream s(61);
  std::vector<InformationSystem> out;
  while (out.size() < count) {
    auto r = random_system(s, max_props);
    out.push_back(InformationSystem::close_entailment(r.props, r.raw));
  }
  return out;
}

// Greatest lower bound of x found by scanning every element.
std::size_t meet_by_scan(const MeetSemilattice& s, const Bits& x) {
  const auto& p = s.poset();
  std::optional<std::size_t> best;
  for (std::size_t c = 0; c < p.size(); ++c) {
    bool lower = true;
    for_each_member(x, [&](std::size_t e) { lower = lower && p.leq(c, e); });
    if (lower && (!best || p.leq(*best, c))) best = c;
  }
  return *best;
}

Formula random_tree(std::mt19937& rng, const std::vector<std::string>& atoms, int depth) {
  const int pick = std::uniform_int_distribution<int>(0, depth > 0 ? 3 : 1)(rng);
  if (pick == 0) return Formula::top();
  if (pick == 1) return Formula::atom(atoms[rng() % atoms.size()]);
  return Formula::conj(random_tree(rng, atoms, depth - 1), random_tree(rng, atoms, depth - 1));
}

// Rebuilds the same conjunction with the atoms shuffled, duplicated, and T
// inserted, as a right-leaning tree.
Formula scrambled(std::mt19937& rng, std::vector<std::string> atoms) {
  if (!atoms.empty()) atoms.push_back(atoms[rng() % atoms.size()]);
  std::shuffle(atoms.begin(), atoms.end(), rng);
  Formula f = Formula::top();
  for (const auto& a : atoms) f = Formula::conj(Formula::atom(a), Formula::conj(f, Formula::top()));
  return f;
}

}  // namespace

// ---- formulas ----

TEST(Formula, ParsesAndPrints) {
  auto f = parse_formula("a & (T & b)");
  EXPECT_EQ(f.to_string(), "(a & (T & b))");
  EXPECT_EQ(f.atoms(), (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(parse_formula("a, b").to_string(), "(a & b)");
  EXPECT_EQ(parse_formula("T").kind(), Formula::Kind::top);
}

TEST(Formula, RejectsMalformedText) {
  EXPECT_THROW(parse_formula(""), Error);
  EXPECT_THROW(parse_formula("(a & b"), Error);
  EXPECT_THROW(parse_formula("a &"), Error);
  EXPECT_THROW(parse_formula("a b"), Error);
}

TEST(Formula, NormalizeRejectsUnknownAtom) {
  std::vector<std::string> props{"a"};
  EXPECT_THROW(parse_formula("a & z").normalize(props), UnknownElement);
}

TEST(Formula, NormalizationIgnoresShapeOrderRepetitionAndTop) {
  const std::vector<std::string> props{"a", "b", "c", "d"};
  std::mt19937 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const auto f = random_tree(rng, props, 4);
    const auto atoms = f.atoms();
    Bits expected(props.size());
    for (const auto& a : atoms)
      expected.set(std::find(props.begin(), props.end(), a) - props.begin());
    EXPECT_EQ(f.normalize(props), expected);
    EXPECT_EQ(scrambled(rng, atoms).normalize(props), expected);
    EXPECT_EQ(parse_formula(f.to_string()).normalize(props), expected);
  }
}

// ---- information systems ----

TEST(InformationSystem, NoRulesGivesReflexivityOnly) {
  auto is = InformationSystem::close_entailment({"a", "b", "c"}, {});
  for (std::uint64_t x = 0; x < 8; ++x) EXPECT_EQ(is.closure(bits_from_mask(3, x)), bits_from_mask(3, x));
  EXPECT_TRUE(is.nontrivial_pairs().empty());
}

TEST(InformationSystem, SingleRuleClosure) {
  std::vector<Entailment> raw{{{"a"}, "b"}};
  auto is = InformationSystem::close_entailment({"a", "b"}, raw);
  EXPECT_TRUE(is.entails(bits_from_mask(2, 0b01), 1));
  EXPECT_TRUE(is.entails(bits_from_mask(2, 0b01), 0));
  EXPECT_FALSE(is.entails(bits_from_mask(2, 0b10), 0));
  EXPECT_FALSE(is.entails(Bits(2), 1));
  ASSERT_EQ(is.nontrivial_pairs().size(), 1u);
}

TEST(InformationSystem, ClosingAClosedSystemIsIdentity) {
  for (const auto& is : system_corpus(30, 4)) {
    std::vector<Entailment> raw;
    for (const auto& [x, a] : is.pairs()) {
      Entailment e;
      for_each_member(x, [&](std::size_t i) { e.premises.push_back(is.propositions()[i]); });
      e.conclusion = is.propositions()[a];
      raw.push_back(e);
    }
    EXPECT_EQ(InformationSystem::close_entailment(is.propositions(), raw), is);
  }
}

TEST(InformationSystem, ClosureMatchesLeastClosedSuperset) {
  oracle::Stream s(3);
  for (int trial = 0; trial < 80; ++trial) {
    auto r = random_system(s, 5);
    auto is = InformationSystem::close_entailment(r.props, r.raw);
    const auto n = r.props.size();
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x)
      ASSERT_EQ(mask_of(is.closure(bits_from_mask(n, x))), closure_by_scan(n, r.masks, x));
  }
}

TEST(InformationSystem, UndeclaredPropositionThrows) {
  std::vector<Entailment> raw{{{"a"}, "z"}};
  EXPECT_THROW(InformationSystem::close_entailment({"a"}, raw), UnknownElement);
}

TEST(InformationSystem, FromTableRejectsNonInflationary) {
  std::vector<Bits> table{Bits(1), Bits(1)};
  try {
    InformationSystem::from_table({"a"}, table);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.rule(), "ISi");
  }
}

TEST(InformationSystem, FromTableRejectsBrokenTransitivity) {
  // {a} |- b and {b} |- c but not {a} |- c.
  std::vector<Bits> table(8);
  for (std::uint64_t x = 0; x < 8; ++x) table[x] = bits_from_mask(3, x);
  table[0b001] = bits_from_mask(3, 0b011);
  table[0b010] = bits_from_mask(3, 0b110);
  table[0b011] = bits_from_mask(3, 0b111);
  try {
    InformationSystem::from_table({"a", "b", "c"}, table);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.rule(), "ISii");
  }
}

// ---- CCP ----

TEST(Ccp, RoundTripsAreExactIdentities) {
  for (const auto& is : system_corpus(60, 6)) {
    auto c = is_to_ccp(is);
    EXPECT_EQ(ccp_to_is(c), is);
    EXPECT_EQ(is_to_ccp(ccp_to_is(c)), c);
  }
}

TEST(Ccp, EmptySystemHasOnlyTopSequents) {
  auto c = is_to_ccp(InformationSystem::close_entailment({}, {}));
  auto seq = c.sequents();
  ASSERT_EQ(seq.size(), 1u);
  EXPECT_TRUE(seq[0].first.empty());
  EXPECT_TRUE(seq[0].second.empty());
}

TEST(Ccp, ConjunctionOfConsequents) {
  std::vector<Entailment> raw{{{"a"}, "b"}};
  auto c = is_to_ccp(InformationSystem::close_entailment({"a", "b"}, raw));
  EXPECT_TRUE(c.proves(bits_from_mask(2, 0b01), bits_from_mask(2, 0b10)));
  EXPECT_TRUE(c.proves(bits_from_mask(2, 0b01), bits_from_mask(2, 0b11)));
  EXPECT_FALSE(c.proves(bits_from_mask(2, 0b10), bits_from_mask(2, 0b01)));
}

TEST(Ccp, MaterializedSequentsSatisfyEveryRule) {
  for (const auto& is : system_corpus(25, 4)) {
    auto c = is_to_ccp(is);
    const auto n = c.size();
    const std::uint64_t total = std::uint64_t{1} << n;
    std::vector<std::vector<bool>> rel(total, std::vector<bool>(total));
    for (const auto& [x, y] : c.sequents()) rel[mask_of(x)][mask_of(y)] = true;
    for (std::uint64_t x = 0; x < total; ++x) {
      EXPECT_TRUE(rel[x][0]);
      EXPECT_TRUE(rel[x][x]);
      for (std::uint64_t y = 0; y < total; ++y) {
        if (!rel[x][y]) continue;
        for (std::uint64_t z = 0; z < total; ++z) {
          if (rel[y][z]) EXPECT_TRUE(rel[x][z]);
          if (rel[x][z]) EXPECT_TRUE(rel[x][y | z]);
          if ((z & ~y) == 0) EXPECT_TRUE(rel[x][z]);
          if ((x & ~z) == 0) EXPECT_TRUE(rel[z][y]);
        }
      }
    }
    EXPECT_EQ(CcpSystem::from_sequents(c.propositions(), c.sequents()), c);
  }
}

TEST(Ccp, SequentsAgreeWithInformationSystemClosure) {
  for (const auto& is : system_corpus(25, 4)) {
    auto c = is_to_ccp(is);
    const auto n = is.size();
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x)
      for (std::uint64_t y = 0; y < (std::uint64_t{1} << n); ++y) {
        bool expected = true;
        for (std::size_t b = 0; b < n; ++b)
          if ((y >> b & 1u) && !is.entails(bits_from_mask(n, x), b)) expected = false;
        EXPECT_EQ(c.proves(bits_from_mask(n, x), bits_from_mask(n, y)), expected);
      }
  }
}

TEST(Ccp, FromSequentsRejectsMissingRules) {
  std::vector<std::string> props{"a"};
  const Bits none(1), a = bits_from_mask(1, 1);
  std::vector<Sequent> no_top{{none, none}, {a, a}};
  try {
    CcpSystem::from_sequents(props, no_top);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.rule(), "T");
  }
  std::vector<Sequent> no_reflexive{{none, none}, {a, none}};
  try {
    CcpSystem::from_sequents(props, no_reflexive);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.rule(), "R");
  }
  std::vector<Sequent> no_weakening{{none, none}, {a, none}, {a, a}, {none, a}};
  EXPECT_NO_THROW(CcpSystem::from_sequents(props, no_weakening));
}

TEST(Ccp, FromSequentsRejectsMissingCut) {
  std::vector<std::string> props{"a", "b", "c"};
  std::vector<Sequent> seq;
  for (std::uint64_t x = 0; x < 8; ++x)
    for (std::uint64_t y = 0; y < 8; ++y)
      if ((y & ~x) == 0) seq.emplace_back(bits_from_mask(3, x), bits_from_mask(3, y));
  // a |- b and b |- c without a |- c.
  seq.emplace_back(bits_from_mask(3, 0b001), bits_from_mask(3, 0b010));
  seq.emplace_back(bits_from_mask(3, 0b001), bits_from_mask(3, 0b011));
  seq.emplace_back(bits_from_mask(3, 0b010), bits_from_mask(3, 0b100));
  seq.emplace_back(bits_from_mask(3, 0b010), bits_from_mask(3, 0b110));
  EXPECT_THROW(CcpSystem::from_sequents(props, seq), ValidationError);
}

TEST(Ccp, GenerateMatchesInformationSystemRoute) {
  std::vector<Sequent> gens{{bits_from_mask(3, 0b001), bits_from_mask(3, 0b110)}};
  auto c = CcpSystem::generate({"a", "b", "c"}, gens);
  std::vector<Entailment> raw{{{"a"}, "b"}, {{"a"}, "c"}};
  EXPECT_EQ(c, is_to_ccp(InformationSystem::close_entailment({"a", "b", "c"}, raw)));
}

// ---- Lindenbaum ----

TEST(Lindenbaum, FreeSystemHasFourClasses) {
  auto la = lindenbaum(is_to_ccp(InformationSystem::close_entailment({"a", "b"}, {})));
  EXPECT_EQ(la.algebra.size(), 4u);
  EXPECT_TRUE(la.classes[la.algebra.top()].none());
}

TEST(Lindenbaum, TopEntailingEverythingCollapses) {
  std::vector<Entailment> raw{{{}, "a"}};
  auto c = is_to_ccp(InformationSystem::close_entailment({"a"}, raw));
  EXPECT_EQ(lindenbaum(c).algebra.size(), 1u);
}

TEST(Lindenbaum, OrderAndMeetFollowEntailment) {
  for (const auto& is : system_corpus(30, 4)) {
    auto c = is_to_ccp(is);
    auto la = lindenbaum(c);
    const auto n = c.size();
    EXPECT_EQ(la.class_of(c, Bits(n)), la.algebra.top());
    for (std::uint64_t f = 0; f < (std::uint64_t{1} << n); ++f)
      for (std::uint64_t g = 0; g < (std::uint64_t{1} << n); ++g) {
        const Bits fb = bits_from_mask(n, f), gb = bits_from_mask(n, g);
        const auto cf = la.class_of(c, fb), cg = la.class_of(c, gb);
        EXPECT_EQ(la.algebra.leq(cf, cg), c.proves(fb, gb));
        EXPECT_EQ(la.algebra.meet(cf, cg), la.class_of(c, fb | gb));
      }
  }
}

TEST(Lindenbaum, DualIsAJoinSemilatticeForMappings) {
  for (const auto& is : system_corpus(15, 4)) {
    auto la = lindenbaum(is_to_ccp(is));
    auto dual = std::make_shared<const JoinSemilattice>(la.algebra.dual());
    EXPECT_EQ(dual->bottom(), la.algebra.top());
    EXPECT_NO_THROW(ApproximableMapping::identity(dual));
  }
}

TEST(SemilatticeToCcp, SequentsCompareMeets) {
  for (const auto& s : meet_semilattice_corpus(9, 20, 6)) {
    auto c = semilattice_to_ccp(s);
    const auto n = s.size();
    if (n > 5) continue;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x)
      for (std::uint64_t y = 0; y < (std::uint64_t{1} << n); ++y) {
        const Bits xb = bits_from_mask(n, x), yb = bits_from_mask(n, y);
        EXPECT_EQ(c.proves(xb, yb), s.leq(meet_by_scan(s, xb), meet_by_scan(s, yb)));
      }
  }
}

TEST(SemilatticeToCcp, ChainAndDiamondExamples) {
  auto chain = MeetSemilattice::from_poset(chain_poset(2));
  auto c = semilattice_to_ccp(chain);
  EXPECT_TRUE(c.proves(bits_from_mask(2, 0b01), bits_from_mask(2, 0b10)));
  EXPECT_FALSE(c.proves(bits_from_mask(2, 0b10), bits_from_mask(2, 0b01)));

  auto diamond = MeetSemilattice::from_poset(diamond_poset());
  auto d = semilattice_to_ccp(diamond);
  EXPECT_TRUE(d.proves(bits_from_mask(4, 0b0110), bits_from_mask(4, 0b0001)));
  EXPECT_FALSE(d.proves(bits_from_mask(4, 0b0010), bits_from_mask(4, 0b0001)));

  auto one = semilattice_to_ccp(MeetSemilattice::from_poset(chain_poset(1)));
  EXPECT_TRUE(one.proves(Bits(1), bits_from_mask(1, 1)));
}

TEST(SemilatticeToCcp, LindenbaumRoundTripIsIsomorphism) {
  for (const auto& s : meet_semilattice_corpus(11, 40, 6)) {
    auto r = check_lindenbaum_roundtrip(s);
    EXPECT_TRUE(r.ok) << r.failure;
  }
}

// ---- elements ----

TEST(Elements, FreeSingletonIsTwoChain) {
  auto e = elements(InformationSystem::close_entailment({"a"}, {}));
  EXPECT_EQ(e.size(), 2u);
}

TEST(Elements, CollapsedSystemHasOneElement) {
  std::vector<Entailment> raw{{{}, "a"}, {{}, "b"}};
  EXPECT_EQ(elements(InformationSystem::close_entailment({"a", "b"}, raw)).size(), 1u);
}

TEST(Elements, AreExactlyTheClosedSubsets) {
  oracle::Stream s(17);
  for (int trial = 0; trial < 40; ++trial) {
    auto r = random_system(s, 5);
    auto e = elements(InformationSystem::close_entailment(r.props, r.raw));
    const auto n = r.props.size();
    std::size_t count = 0;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x)
      if (closure_by_scan(n, r.masks, x) == x) {
        ++count;
        EXPECT_TRUE(e.find(bits_from_mask(n, x)).has_value());
      }
    EXPECT_EQ(e.size(), count);
  }
}

TEST(Elements, AreTheFiltersOfTheLindenbaumAlgebra) {
  for (const auto& is : system_corpus(50, 6)) {
    auto r = check_elements_are_filters(is);
    EXPECT_TRUE(r.ok) << r.failure;
  }
}

TEST(ContextToIs, K2Entailments) {
  auto is = context_to_is(oracle::k2());
  EXPECT_FALSE(is.entails(bits_from_mask(2, 0b01), 1));
  EXPECT_TRUE(is.entails(bits_from_mask(2, 0b11), 0));
  EXPECT_EQ(context_to_is(FormalContext::from_rows({}, {}, {})).size(), 0u);
}

TEST(ContextToIs, ElementsMatchConceptClosure) {
  oracle::Stream s(23);
  for (int trial = 0; trial < 40; ++trial) {
    auto p = oracle::random_context(s, 4, 4);
    auto is = context_to_is(p);
    auto e = elements(is);
    auto intents = oracle::intents(p);
    EXPECT_EQ(e.size(), intents.size());
    for (const auto& set : e.sets()) EXPECT_TRUE(intents.count(oracle::to_vector(set)));
    EXPECT_EQ(e.sets(), alg_lattice(p).sets());
  }
}

// ---- RZ ----

TEST(Rz, MinimalUpperBoundsOfEmptySetAreMinimalElements) {
  auto p = FinitePoset::from_relation({"bot", "a", "b"},
                                      {bits_from_mask(3, 0b111), bits_from_mask(3, 0b010),
                                       bits_from_mask(3, 0b100)});
  EXPECT_EQ(minimal_upper_bounds(p, Bits(3)), bits_from_mask(3, 0b001));
  EXPECT_TRUE(minimal_upper_bounds(p, bits_from_mask(3, 0b110)).none());
  std::vector<std::string> x{"a", "b"}, y{"bot"}, none;
  EXPECT_TRUE(rz_entails(p, x, y));
  EXPECT_TRUE(rz_entails(p, x, none));
}

TEST(Rz, ChainExample) {
  auto p = chain_poset(2);
  std::vector<std::string> bot{"0"}, top{"1"};
  EXPECT_FALSE(rz_entails(p, bot, top));
  EXPECT_TRUE(rz_entails(p, top, bot));
  std::vector<std::string> unknown{"z"};
  EXPECT_THROW(rz_entails(p, unknown, top), UnknownElement);
}

TEST(Rz, AgreesWithJoinComparisonOnLattices) {
  for (const auto& l : lattice_corpus(13, 30, 6)) {
    const auto& p = l.poset();
    const auto n = p.size();
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const Bits xb = bits_from_mask(n, x);
        EXPECT_EQ(rz_entails(p, xb, singleton_bits(n, y)), p.leq(y, l.join_all(xb)));
      }
  }
}

TEST(Rz, ClosureCheckOnK2) {
  auto r = rz_closure_check(oracle::k2());
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.sets_checked, 4u);
}

TEST(Rz, ClosureCheckOnRandomContexts) {
  oracle::Stream s(29);
  for (int trial = 0; trial < 60; ++trial) {
    auto r = rz_closure_check(oracle::random_context(s, 4, 4));
    EXPECT_TRUE(r.ok) << ::testing::PrintToString(r.witness);
  }
}

TEST(Rz, ClosureCheckOnOrderContexts) {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto r = rz_closure_check(context_of_semilattice(JoinSemilattice::from_poset(chain_poset(n))));
    EXPECT_TRUE(r.ok);
  }
  EXPECT_TRUE(rz_closure_check(context_of_semilattice(JoinSemilattice::from_poset(diamond_poset()))).ok);
}
