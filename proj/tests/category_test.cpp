#include "lattica/category.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "oracles.hpp"

using namespace lattica;

namespace {

std::vector<FormalContext> small_corpus() {
  std::vector<FormalContext> out{terminal(), oracle::two_chain_context(), oracle::k2()};
  oracle::Stream s(7);
  while (out.size() < 10) {
    auto c = oracle::random_context(s, 3, 3);
    if (sem_lattice(c).size() <= 3) out.push_back(c);
  }
  return out;
}

std::vector<FormalContext> tiny_corpus() {
  auto out = small_corpus();
  std::erase_if(out, [](const FormalContext& c) { return sem_lattice(c).size() > 3; });
  return out;
}

std::set<oracle::Relation> as_set(const std::vector<ApproximableMapping>& ms) {
  std::set<oracle::Relation> out;
  for (const auto& m : ms) out.insert(oracle::relation_of(m));
  return out;
}

ApproximableMapping cone_from_relation(const SemLattice& s, const SemLattice& t,
                                       const oracle::Relation& r) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs(r.begin(), r.end());
  return ApproximableMapping::from_pairs(s.shared(), t.shared(), pairs);
}

}  // namespace

TEST(Terminal, SemHasOneElement) {
  auto one = sem_lattice(terminal());
  EXPECT_EQ(one.size(), 1u);
  EXPECT_EQ(bang(one), ApproximableMapping::identity(one.shared()));
}

TEST(Terminal, BangOfK2RelatesEverythingToEmpty) {
  auto sem = sem_lattice(oracle::k2());
  auto b = bang(sem);
  ASSERT_EQ(b.target().poset().size(), 1u);
  EXPECT_EQ(b.pair_count(), 4u);
}

TEST(Terminal, BangIsUnique) {
  auto one = sem_lattice(terminal());
  for (const auto& c : small_corpus()) {
    auto sem = sem_lattice(c);
    auto all = enumerate_mappings(sem.shared(), one.shared());
    ASSERT_EQ(all.size(), 1u);
    EXPECT_EQ(all[0], bang(sem));
  }
}

TEST(Product, IncidenceIsDisjointUnionWithCrossTerms) {
  auto p = oracle::k2();
  auto q = oracle::two_chain_context();
  auto pc = product_context(p, q);
  const auto& c = pc.context;
  ASSERT_EQ(c.object_count(), 4u);
  ASSERT_EQ(c.attribute_count(), 3u);
  for (std::size_t o = 0; o < c.object_count(); ++o)
    for (std::size_t a = 0; a < c.attribute_count(); ++a) {
      bool expected = pc.object_side[o] != pc.attribute_side[a] ||
                      (pc.object_side[o] == Side::left
                           ? p.incident(pc.object_origin[o], pc.attribute_origin[a])
                           : q.incident(pc.object_origin[o], pc.attribute_origin[a]));
      EXPECT_EQ(c.incident(o, a), expected);
    }
  EXPECT_EQ(c.attributes()[0], "l:a");
  EXPECT_EQ(c.attributes()[2], "r:a");
}

TEST(Product, WithTerminalKeepsSize) {
  for (const auto& c : small_corpus()) {
    auto pq = Product::make(c, terminal());
    EXPECT_EQ(pq.sem().size(), pq.left().size());
    auto iso = find_order_isomorphism(pq.sem().semilattice().poset(),
                                      pq.left().semilattice().poset());
    EXPECT_TRUE(iso.has_value());
  }
}

TEST(Product, K2TimesChainHasEightElements) {
  auto pq = Product::make(oracle::k2(), oracle::two_chain_context());
  EXPECT_EQ(pq.sem().size(), 8u);
}

TEST(Product, ClosureSplitsIntoComponentClosures) {
  auto p = oracle::k2();
  auto q = oracle::two_chain_context();
  auto pc = product_context(p, q);
  for_each_subset(full_bits(3), [&](const Bits& x) {
    Bits xl(2), xr(1);
    if (x.test(0)) xl.set(0);
    if (x.test(1)) xl.set(1);
    if (x.test(2)) xr.set(0);
    auto whole = oracle::closure(pc.context, oracle::to_vector(x));
    auto left = oracle::closure(p, oracle::to_vector(xl));
    auto right = oracle::closure(q, oracle::to_vector(xr));
    std::vector<bool> joined = left;
    joined.insert(joined.end(), right.begin(), right.end());
    EXPECT_EQ(whole, joined);
    EXPECT_EQ(oracle::to_vector(pc.context.attr_closure(x)), whole);
  });
}

TEST(Product, PairingCommutesAndIsUnique) {
  auto corpus = small_corpus();
  std::size_t checked = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const auto& r = corpus[(i + j) % corpus.size()];
      auto pq = Product::make(corpus[i], corpus[j]);
      auto sr = sem_lattice(r);
      auto to_p = oracle::all_mappings(sr.semilattice(), pq.left().semilattice());
      auto to_q = oracle::all_mappings(sr.semilattice(), pq.right().semilattice());
      auto mediators = enumerate_mappings(sr.shared(), pq.sem().shared());
      auto pl = proj_left(pq);
      auto pr = proj_right(pq);
      for (const auto& rp : to_p)
        for (const auto& rq : to_q) {
          auto mp = cone_from_relation(sr, pq.left(), rp);
          auto mq = cone_from_relation(sr, pq.right(), rq);
          auto h = pair(pq, mp, mq);
          EXPECT_EQ(compose(h, pl), mp);
          EXPECT_EQ(compose(h, pr), mq);
          std::size_t commuting = 0;
          for (const auto& k : mediators)
            if (compose(k, pl) == mp && compose(k, pr) == mq) {
              ++commuting;
              EXPECT_EQ(k, h);
            }
          EXPECT_EQ(commuting, 1u);
          ++checked;
        }
    }
  EXPECT_GT(checked, 16u);
}

TEST(Product, PairRejectsMismatchedSources) {
  auto pq = Product::make(oracle::two_chain_context(), oracle::two_chain_context());
  auto s1 = sem_lattice(oracle::k2());
  auto s2 = sem_lattice(oracle::two_chain_context());
  auto mp = ApproximableMapping::constant_bottom(s1.shared(), pq.left().shared());
  auto mq = ApproximableMapping::constant_bottom(s2.shared(), pq.right().shared());
  EXPECT_THROW(pair(pq, mp, mq), MismatchError);
}

TEST(Plus, EmptyContextBecomesFullOneByOne) {
  auto p = plus(terminal());
  ASSERT_EQ(p.object_count(), 1u);
  ASSERT_EQ(p.attribute_count(), 1u);
  EXPECT_TRUE(p.incident(0, 0));
  auto sem = sem_lattice(p);
  ASSERT_EQ(sem.size(), 1u);
  EXPECT_EQ(sem.name(0), "{m+}");
}

TEST(Plus, FreshObjectBearsEverything) {
  auto p = plus(oracle::k2());
  auto g = singleton_bits(p.object_count(), p.object_index("g+"));
  EXPECT_EQ(p.alpha(g), full_bits(3));
}

TEST(Plus, EveryClosedSetContainsM) {
  for (const auto& c : small_corpus()) {
    auto p = plus(c);
    const auto m = p.attribute_count() - 1;
    auto sem = sem_lattice(p);
    for (const auto& x : sem.closed_sets()) EXPECT_TRUE(x.test(m));
  }
}

TEST(Plus, FreshNamesAvoidCollisions) {
  auto c = FormalContext::from_rows({"g+", "g++"}, {"m+"}, {Bits(1), Bits(1)});
  auto p = plus(c);
  EXPECT_EQ(p.objects().back(), "g+++");
  EXPECT_EQ(p.attributes().back(), "m++");
}

TEST(Tensor, ClosedSetsAreRectangles) {
  for (const auto& c : small_corpus())
    for (const auto& d : small_corpus()) {
      auto t = Tensor::make(c, d);
      EXPECT_TRUE(t.closed_sets_are_rectangles());
    }
}

TEST(Tensor, IsosComposeToIdentities) {
  for (const auto& c : small_corpus())
    for (const auto& d : small_corpus()) {
      auto t = Tensor::make(c, d);
      auto plus_map = t.iso_plus();
      auto minus_map = t.iso_minus();
      EXPECT_EQ(compose(plus_map, minus_map),
                ApproximableMapping::identity(t.product().sem().shared()));
      EXPECT_EQ(compose(minus_map, plus_map), ApproximableMapping::identity(t.sem().shared()));
    }
}

TEST(Tensor, OfTerminals) {
  auto t = Tensor::make(terminal(), terminal());
  EXPECT_EQ(t.sem().size(), 1u);
  EXPECT_EQ(t.sem().name(0), "{\\(m+\\,m+\\)}");
  EXPECT_EQ(t.product().sem().size(), 1u);
}

TEST(Tensor, GuardOnAttributePairs) {
  Limits tight;
  tight.max_tensor_attributes = 5;
  EXPECT_THROW(tensor_context(oracle::k2(), oracle::k2(), tight), GuardExceeded);
}

TEST(FunctionSpace, IncidenceOfEmptyObjectIsBottomPairs) {
  auto s = sem_lattice(oracle::two_chain_context());
  auto fs = FunctionSpace::make(s, s);
  Bits none(fs.attribute_count());
  for (std::size_t k = 0; k < fs.attribute_count(); ++k)
    EXPECT_EQ(fs.models(none, k), fs.attribute_pairs()[k].second == s.bottom());
}

TEST(FunctionSpace, ClosureOfEmptyIsConstantBottom) {
  auto s = sem_lattice(oracle::k2());
  auto t = sem_lattice(oracle::two_chain_context());
  auto fs = FunctionSpace::make(s, t);
  auto expected = fs.as_attributes(ApproximableMapping::constant_bottom(s.shared(), t.shared()));
  Bits none(fs.attribute_count());
  EXPECT_EQ(fs.closure(none, ClosureEngine::saturation), expected);
  EXPECT_EQ(fs.closure(none, ClosureEngine::literal), expected);
}

TEST(FunctionSpace, EnginesAgree) {
  auto corpus = tiny_corpus();
  for (const auto& c : corpus)
    for (const auto& d : corpus) {
      auto fs = FunctionSpace::make(sem_lattice(c), sem_lattice(d));
      ASSERT_TRUE(fs.has_literal_context());
      for_each_subset(full_bits(fs.attribute_count()), [&](const Bits& x) {
        ASSERT_EQ(fs.closure(x, ClosureEngine::literal), fs.closure(x, ClosureEngine::saturation));
      });
    }
}

TEST(FunctionSpace, ConceptsAreExactlyTheMappings) {
  auto corpus = tiny_corpus();
  for (const auto& c : corpus)
    for (const auto& d : corpus) {
      auto p = sem_lattice(c), q = sem_lattice(d);
      auto fs = FunctionSpace::make(p, q);
      auto alg = alg_lattice(fs.literal_context());
      std::set<oracle::Relation> concepts;
      for (const auto& x : alg.sets()) concepts.insert(oracle::relation_of(fs.as_mapping(x)));
      auto oracle_maps = oracle::all_mappings(p.semilattice(), q.semilattice());
      EXPECT_EQ(concepts, std::set<oracle::Relation>(oracle_maps.begin(), oracle_maps.end()));
      EXPECT_EQ(concepts, as_set(enumerate_mappings(p.shared(), q.shared())));
      for (const auto& m : enumerate_mappings(p.shared(), q.shared())) {
        auto x = fs.as_attributes(m);
        EXPECT_EQ(fs.closure(x, ClosureEngine::literal), x);
      }
    }
}

TEST(FunctionSpace, TwoChainsGiveThreeChain) {
  auto s = sem_lattice(oracle::two_chain_context());
  auto fs = FunctionSpace::make(s, s);
  auto alg = alg_lattice(fs.literal_context());
  ASSERT_EQ(alg.lattice().poset().size(), 3u);
  const auto& order = alg.lattice().poset();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_TRUE(order.leq(i, j) || order.leq(j, i));
  EXPECT_EQ(fs.sem().size(), 3u);
}

TEST(FunctionSpace, LiteralEngineGuard) {
  Limits tight;
  tight.max_literal_funcspace_attributes = 3;
  auto s = sem_lattice(oracle::two_chain_context());
  auto fs = FunctionSpace::make(s, s, tight);
  EXPECT_FALSE(fs.has_literal_context());
  EXPECT_THROW(fs.closure(Bits(4), ClosureEngine::literal), GuardExceeded);
  EXPECT_EQ(fs.sem().size(), 3u);
}

class Currying : public ::testing::Test {
 protected:
  FormalContext chain = oracle::two_chain_context();
  Product pq = Product::make(chain, chain);
  SemLattice r = sem_lattice(chain);
  FunctionSpace qr = FunctionSpace::make(pq.right(), r);
};

TEST_F(Currying, HomSetsHaveSixElements) {
  auto left = enumerate_mappings(pq.sem().shared(), r.shared());
  auto right = enumerate_mappings(pq.left().shared(), qr.sem().shared());
  EXPECT_EQ(left.size(), 6u);
  EXPECT_EQ(right.size(), 6u);
  EXPECT_EQ(oracle::all_mappings(pq.sem().semilattice(), r.semilattice()).size(), 6u);
}

TEST_F(Currying, RoundTrips) {
  std::set<std::string> images;
  for (const auto& m : enumerate_mappings(pq.sem().shared(), r.shared())) {
    auto c = curry(pq, qr, m);
    EXPECT_EQ(uncurry(pq, qr, c), m);
    images.insert(c.encoding());
  }
  EXPECT_EQ(images.size(), 6u);
  for (const auto& m : enumerate_mappings(pq.left().shared(), qr.sem().shared()))
    EXPECT_EQ(curry(pq, qr, uncurry(pq, qr, m)), m);
}

TEST_F(Currying, EvalIsAMapping) {
  auto eval_product = Product::make(qr.literal_context(), chain);
  ASSERT_TRUE(same_semilattice(eval_product.left().shared(), qr.sem().shared()));
  auto eval = uncurry(eval_product, qr, ApproximableMapping::identity(qr.sem().shared()));
  EXPECT_EQ(eval.source().poset().size(), qr.sem().size() * 2);
  EXPECT_FALSE(find_axiom_violation(eval.source(), eval.target(), eval.images()));
}

TEST_F(Currying, NaturalInTheSource) {
  // curry(m . (f x id)) = f . curry(m) for f : Sem(P') ~> Sem(P).
  auto p2q = Product::make(oracle::k2(), chain);
  auto fs = enumerate_mappings(p2q.left().shared(), pq.left().shared());
  for (const auto& f : fs) {
    auto f_times_id = pair(pq, compose(proj_left(p2q), f), proj_right(p2q));
    for (const auto& m : enumerate_mappings(pq.sem().shared(), r.shared()))
      EXPECT_EQ(curry(p2q, qr, compose(f_times_id, m)), compose(f, curry(pq, qr, m)));
  }
}

TEST_F(Currying, NaturalInTheTarget) {
  // curry(g . m) = [Q ~> g] . curry(m) for g : Sem(R) ~> Sem(R').
  auto r2 = sem_lattice(oracle::k2());
  auto qr2 = FunctionSpace::make(pq.right(), r2);
  for (const auto& g : enumerate_mappings(r.shared(), r2.shared())) {
    std::vector<Bits> image;
    for (std::size_t w = 0; w < qr.sem().size(); ++w) {
      auto pushed = qr2.as_attributes(compose(qr.as_mapping(qr.sem().closed(w)), g));
      image.push_back(qr2.sem().semilattice().poset().down(qr2.sem().index_of(pushed)));
    }
    auto post = ApproximableMapping::make(qr.sem().shared(), qr2.sem().shared(), image);
    for (const auto& m : enumerate_mappings(pq.sem().shared(), r.shared()))
      EXPECT_EQ(curry(pq, qr2, compose(m, g)), compose(curry(pq, qr, m), post));
  }
}

TEST_F(Currying, RejectsForeignMapping) {
  auto k = sem_lattice(oracle::k2());
  auto m = ApproximableMapping::constant_bottom(k.shared(), r.shared());
  EXPECT_THROW(curry(pq, qr, m), MismatchError);
  EXPECT_THROW(uncurry(pq, qr, m), MismatchError);
}
