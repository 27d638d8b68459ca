#include "lattica/generate.hpp"

#include <set>
#include <string>

namespace lattica {

std::size_t Generator::below(std::size_t n) {
  if (n == 0) return 0;
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
}

bool Generator::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

FormalContext Generator::context(std::size_t max_objects, std::size_t max_attributes) {
  const auto n = below(max_objects + 1);
  const auto m = below(max_attributes + 1);
  std::vector<std::string> objects, attributes;
  for (std::size_t i = 0; i < n; ++i) objects.push_back("g" + std::to_string(i + 1));
  for (std::size_t j = 0; j < m; ++j) attributes.push_back("m" + std::to_string(j + 1));
  std::vector<Bits> rows;
  for (std::size_t i = 0; i < n; ++i) {
    Bits row(m);
    for (std::size_t j = 0; j < m; ++j) row[j] = coin();
    rows.push_back(row);
  }
  return FormalContext::from_rows(std::move(objects), std::move(attributes), std::move(rows));
}

std::vector<Bits> Generator::union_family(std::size_t max_size) {
  for (;;) {
    const auto k = 1 + below(4);
    std::set<Bits> family{Bits(k)};
    const auto picks = 1 + below(4);
    for (std::size_t i = 0; i < picks; ++i) family.insert(bits_from_mask(k, 1 + below((1u << k) - 1)));
    for (bool changed = true; changed;) {
      changed = false;
      const std::vector<Bits> current(family.begin(), family.end());
      for (const auto& a : current)
        for (const auto& b : current) changed |= family.insert(a | b).second;
    }
    if (family.size() <= max_size) return {family.begin(), family.end()};
  }
}

namespace {

FinitePoset family_poset(const std::vector<Bits>& family) {
  std::vector<std::string> names;
  for (const auto& s : family) {
    std::string name;
    for_each_member(s, [&](std::size_t i) { name += static_cast<char>('a' + i); });
    names.push_back(name.empty() ? "0" : name);
  }
  return FinitePoset::by_inclusion(std::move(names), family);
}

}  // namespace

JoinSemilattice Generator::join_semilattice(std::size_t max_size) {
  return JoinSemilattice::from_poset(family_poset(union_family(max_size)));
}

FiniteLattice Generator::lattice(std::size_t max_size) {
  return FiniteLattice::from_poset(family_poset(union_family(max_size)));
}

MeetSemilattice Generator::meet_semilattice(std::size_t max_size) {
  return MeetSemilattice::from_poset(family_poset(union_family(max_size)).dual());
}

InformationSystem Generator::information_system(std::size_t max_propositions) {
  const auto n = below(max_propositions + 1);
  std::vector<std::string> props;
  for (std::size_t i = 0; i < n; ++i) props.push_back("p" + std::to_string(i + 1));
  std::vector<Entailment> raw;
  if (n > 0) {
    const auto rules = below(n + 2);
    for (std::size_t r = 0; r < rules; ++r) {
      Entailment e;
      const auto premises = coin(0.15) ? 0 : 1 + below(2);
      for (std::size_t i = 0; i < premises; ++i) e.premises.push_back(props[below(n)]);
      e.conclusion = props[below(n)];
      raw.push_back(std::move(e));
    }
  }
  return InformationSystem::close_entailment(std::move(props), raw);
}

FinitePoset chain_poset(std::size_t n) {
  std::vector<std::string> names;
  std::vector<Bits> up;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
    Bits u(n);
    for (std::size_t j = i; j < n; ++j) u.set(j);
    up.push_back(u);
  }
  return FinitePoset::from_relation(std::move(names), std::move(up));
}

FinitePoset diamond_poset() {
  return FinitePoset::from_relation({"bot", "a", "b", "top"},
                                    {bits_from_mask(4, 0b1111), bits_from_mask(4, 0b1010),
                                     bits_from_mask(4, 0b1100), bits_from_mask(4, 0b1000)});
}

std::vector<FormalContext> context_corpus(std::uint64_t seed, std::size_t count,
                                          std::size_t max_objects, std::size_t max_attributes) {
  Generator g(seed);
  std::vector<FormalContext> out;
  while (out.size() < count) out.push_back(g.context(max_objects, max_attributes));
  return out;
}

std::vector<JoinSemilattice> semilattice_corpus(std::uint64_t seed, std::size_t count,
                                                std::size_t max_size) {
  std::vector<JoinSemilattice> out;
  for (std::size_t n = 1; n <= std::min<std::size_t>(max_size, 4) && out.size() < count; ++n)
    out.push_back(JoinSemilattice::from_poset(chain_poset(n)));
  if (max_size >= 4 && out.size() < count)
    out.push_back(JoinSemilattice::from_poset(diamond_poset()));
  Generator g(seed);
  while (out.size() < count) out.push_back(g.join_semilattice(max_size));
  return out;
}

std::vector<FiniteLattice> lattice_corpus(std::uint64_t seed, std::size_t count,
                                          std::size_t max_size) {
  std::vector<FiniteLattice> out;
  for (std::size_t n = 1; n <= std::min<std::size_t>(max_size, 4) && out.size() < count; ++n)
    out.push_back(FiniteLattice::from_poset(chain_poset(n)));
  if (max_size >= 4 && out.size() < count)
    out.push_back(FiniteLattice::from_poset(diamond_poset()));
  Generator g(seed);
  while (out.size() < count) out.push_back(g.lattice(max_size));
  return out;
}

std::vector<MeetSemilattice> meet_semilattice_corpus(std::uint64_t seed, std::size_t count,
                                                     std::size_t max_size) {
  std::vector<MeetSemilattice> out;
  for (std::size_t n = 1; n <= std::min<std::size_t>(max_size, 4) && out.size() < count; ++n)
    out.push_back(MeetSemilattice::from_poset(chain_poset(n)));
  if (max_size >= 4 && out.size() < count)
    out.push_back(MeetSemilattice::from_poset(diamond_poset()));
  Generator g(seed);
  while (out.size() < count) out.push_back(g.meet_semilattice(max_size));
  return out;
}

}  // namespace lattica
