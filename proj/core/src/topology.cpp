#include "lattica/topology.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lattica {

namespace {

std::string points_name(const Bits& b, std::span<const std::string> names) {
  return encode_set(b, names);
}

// Bijective, and carries the opens of x exactly onto the opens of y.
bool homeomorphism(const TopSpace& x, const TopSpace& y, std::span<const std::size_t> map) {
  if (map.size() != x.size() || x.size() != y.size()) return false;
  Bits hit(y.size());
  for (auto m : map) {
    if (m >= y.size() || hit.test(m)) return false;
    hit.set(m);
  }
  std::set<Bits> images;
  for (const auto& o : x.opens()) {
    Bits image(y.size());
    for_each_member(o, [&](std::size_t p) { image.set(map[p]); });
    images.insert(image);
  }
  return images == std::set<Bits>(y.opens().begin(), y.opens().end());
}

}  // namespace

// ---- spaces ----------------------------------------------------------------------

TopSpace TopSpace::make(std::vector<std::string> points, std::vector<Bits> opens) {
  const auto n = points.size();
  for (const auto& o : opens)
    if (o.size() != n) throw Error("open set over a different point set");
  std::set<Bits> family(opens.begin(), opens.end());
  if (!family.count(Bits(n))) throw ValidationError("empty", {}, "the empty set is not open");
  if (!family.count(full_bits(n)))
    throw ValidationError("full", {}, "the whole space is not open");
  for (const auto& a : family)
    for (const auto& b : family) {
      if (!family.count(a | b))
        throw ValidationError("union", {points_name(a, points), points_name(b, points)},
                              "union of two opens is not open");
      if (!family.count(a & b))
        throw ValidationError("intersection", {points_name(a, points), points_name(b, points)},
                              "intersection of two opens is not open");
    }
  std::vector<std::pair<std::string, Bits>> named;
  for (const auto& o : family) named.emplace_back(points_name(o, points), o);
  std::sort(named.begin(), named.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  TopSpace out;
  out.points_ = std::move(points);
  for (auto& [name, o] : named) out.opens_.push_back(std::move(o));
  return out;
}

TopSpace TopSpace::generate(std::vector<std::string> points, std::span<const Bits> subbasis) {
  const auto n = points.size();
  std::set<Bits> family(subbasis.begin(), subbasis.end());
  family.insert(Bits(n));
  family.insert(full_bits(n));
  for (bool changed = true; changed;) {
    changed = false;
    const std::vector<Bits> current(family.begin(), family.end());
    for (const auto& a : current)
      for (const auto& b : current) {
        changed |= family.insert(a & b).second;
        changed |= family.insert(a | b).second;
      }
  }
  return make(std::move(points), std::vector<Bits>(family.begin(), family.end()));
}

bool TopSpace::is_open(const Bits& x) const { return find_open(x).has_value(); }

std::optional<std::size_t> TopSpace::find_open(const Bits& x) const {
  auto it = std::find(opens_.begin(), opens_.end(), x);
  if (it == opens_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - opens_.begin());
}

SubsetLattice TopSpace::open_lattice() const { return SubsetLattice::make(points_, opens_); }

TopSpace scott_topology(const FiniteLattice& l, const Limits& limits) {
  const auto& p = l.poset();
  check_guard("Scott topology carrier", limits.max_directed_carrier, p.size());
  std::vector<Bits> directed;
  for_each_directed_subset(p, limits, [&](const Bits& d) { directed.push_back(d); });
  std::vector<Bits> opens, upper;
  for_each_subset(p.all(), [&](const Bits& u) {
    if (!p.is_upper_set(u)) return;
    upper.push_back(u);
    for (const auto& d : directed)
      if (u.test(l.join_all(d)) && !u.intersects(d)) return;
    opens.push_back(u);
  });
  if (opens != upper) throw Error("Scott opens of a finite lattice differ from its upper sets");
  return TopSpace::make(p.names(), std::move(opens));
}

FinitePoset specialization_order(const TopSpace& t) {
  const auto n = t.size();
  std::vector<Bits> up(n, full_bits(n));
  for (const auto& o : t.opens())
    for_each_member(o, [&](std::size_t x) { up[x] &= o; });
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (up[x].test(y) && up[y].test(x))
        throw ValidationError("T0", {t.points()[x], t.points()[y]},
                              "two points lie in exactly the same opens");
  return FinitePoset::from_relation(t.points(), std::move(up));
}

bool is_continuous(std::span<const std::size_t> f, const TopSpace& x, const TopSpace& y,
                   Bits* witness) {
  if (f.size() != x.size()) throw Error("function is not total on the source points");
  for (const auto& o : y.opens()) {
    Bits pre(x.size());
    for (std::size_t i = 0; i < f.size(); ++i)
      if (o.test(f[i])) pre.set(i);
    if (!x.is_open(pre)) {
      if (witness) *witness = o;
      return false;
    }
  }
  return true;
}

ScottBaseReport scott_base_and_coherence(const FiniteLattice& l, const Limits& limits) {
  ScottBaseReport r;
  const auto& p = l.poset();
  const auto t = scott_topology(l, limits);
  const auto k = compact_elements(l, limits);
  for_each_member(k, [&](std::size_t c) { r.base.push_back(p.up(c)); });

  r.base_ok = true;
  for (const auto& b : r.base)
    if (!t.is_open(b)) {
      r.base_ok = false;
      r.failure = "base member " + points_name(b, p.names()) + " is not open";
    }
  for (const auto& o : t.opens()) {
    Bits cover(p.size());
    for (const auto& b : r.base)
      if (b.is_subset_of(o)) cover |= b;
    if (cover != o && r.base_ok) {
      r.base_ok = false;
      r.failure = "open " + points_name(o, p.names()) + " is not a union of base members";
    }
  }

  check_guard("base unions", limits.max_directed_carrier, r.base.size());
  std::set<Bits> unions;
  for_each_subset(full_bits(r.base.size()), [&](const Bits& pick) {
    Bits u(p.size());
    for_each_member(pick, [&](std::size_t i) { u |= r.base[i]; });
    unions.insert(u);
  });
  const auto ol = t.open_lattice();
  const auto kc = compact_elements(ol.lattice(), limits);
  std::set<Bits> compact_opens;
  for_each_member(kc, [&](std::size_t i) { compact_opens.insert(ol.members(i)); });
  r.compact_opens_ok = compact_opens == unions;
  if (!r.compact_opens_ok && r.failure.empty())
    r.failure = "compact opens differ from finite unions of base members";

  r.coherent = true;
  for (const auto& a : compact_opens)
    for (const auto& b : compact_opens)
      if (!compact_opens.count(a & b)) {
        if (r.coherent && r.failure.empty())
          r.failure = "intersection of " + points_name(a, p.names()) + " and " +
                      points_name(b, p.names()) + " is not compact";
        r.coherent = false;
      }
  return r;
}

// ---- locales ---------------------------------------------------------------------

std::optional<std::vector<std::string>> locale_violation(const FiniteLattice& l) {
  const auto& p = l.poset();
  const auto n = p.size();
  if (n > 10) {
    if (auto v = distributivity_violation(l))
      return std::vector<std::string>{p.name((*v)[0]), p.name((*v)[1]), p.name((*v)[2])};
    return std::nullopt;
  }
  std::optional<std::vector<std::string>> out;
  for (std::size_t x = 0; x < n && !out; ++x)
    for_each_subset(p.all(), [&](const Bits& s) {
      if (out) return;
      Bits meets(n);
      for_each_member(s, [&](std::size_t e) { meets.set(l.meet(x, e)); });
      if (l.meet(x, l.join_all(s)) != l.join_all(meets)) {
        std::vector<std::string> w{p.name(x)};
        for_each_member(s, [&](std::size_t e) { w.push_back(p.name(e)); });
        out = std::move(w);
      }
    });
  return out;
}

Locale Locale::make(std::shared_ptr<const FiniteLattice> lattice) {
  if (auto w = locale_violation(*lattice))
    throw ValidationError("distributivity", *w, "x & join(S) differs from join{x & s}");
  Locale out;
  out.lattice_ = std::move(lattice);
  return out;
}

std::vector<LocalePoint> locale_points(const Locale& loc) {
  const auto& l = loc.lattice();
  std::vector<LocalePoint> out;
  for_each_member(meet_primes(l), [&](std::size_t m) { out.push_back({l.poset().down(m), m}); });
  return out;
}

LowerSetLocale lower_set_locale(const MeetSemilattice& s, const Limits& limits) {
  LowerSetLocale out;
  out.lower_sets = lower_set_lattice(s.poset(), limits);
  out.locale = Locale::make(out.lower_sets.shared());
  const auto flt = flt_lattice(s, limits);
  const auto opens = scott_topology(flt.lattice(), limits).open_lattice();
  std::vector<std::size_t> map;
  for (std::size_t i = 0; i < out.lower_sets.size(); ++i) {
    const Bits& a = out.lower_sets.members(i);
    Bits u(flt.size());
    for (std::size_t f = 0; f < flt.size(); ++f)
      if (flt.members(f).intersects(a)) u.set(f);
    auto o = opens.find(u);
    if (!o) {
      out.scott_iso.failure = "image of lower set '" +
                              out.lower_sets.lattice().poset().name(i) + "' is not Scott open";
      return out;
    }
    map.push_back(*o);
  }
  out.scott_iso = iso_check(out.lower_sets.lattice().poset(), opens.lattice().poset(), map);
  return out;
}

FilterPrimeReport check_filter_prime_bijection(const MeetSemilattice& s, const Limits& limits) {
  FilterPrimeReport r;
  const auto& p = s.poset();
  const auto ls = lower_set_lattice(p, limits);
  const auto primes = meet_primes(ls.lattice());
  Bits hit(ls.size());
  for (const auto& f : filters(p, limits)) {
    const Bits complement = ~f;
    auto i = ls.find(complement);
    if (!i || !primes.test(*i)) {
      r.failure = "complement of filter " + encode_set(f, p.names()) + " is not meet-prime";
      return r;
    }
    hit.set(*i);
    r.pairs.emplace_back(encode_set(f, p.names()), ls.lattice().poset().name(*i));
  }
  if (hit != primes) {
    const auto i = (primes - hit).find_first();
    r.failure = "meet-prime " + ls.lattice().poset().name(i) + " is not a filter complement";
    return r;
  }
  r.ok = true;
  return r;
}

// ---- the three spaces ----------------------------------------------------------------

SpacesReport stone_spaces(const MeetSemilattice& s, const FiniteLattice& l, const Locale& loc,
                          const Limits& limits) {
  const auto& sp = s.poset();
  const auto& lp = l.poset();
  const auto k = compact_elements(l, limits);
  const auto kposet = lp.restrict_to(k);
  const auto kmembers = members(k);
  auto phi_k = find_order_isomorphism(sp.dual(), kposet);
  if (!phi_k) throw ValidationError("precondition", {}, "S^op is not isomorphic to K(L)");
  std::vector<std::size_t> phi;
  for (auto i : *phi_k) phi.push_back(kmembers[i]);

  SpacesReport r;
  r.scott = scott_topology(l, limits);
  const auto opens = r.scott.open_lattice();
  auto psi = find_order_isomorphism(loc.lattice().poset(), opens.lattice().poset());
  if (!psi) throw ValidationError("precondition", {}, "locale is not isomorphic to sigma(L)");
  std::vector<std::size_t> psi_inverse(psi->size());
  for (std::size_t i = 0; i < psi->size(); ++i) psi_inverse[(*psi)[i]] = i;

  const auto flt = flt_lattice(s, limits);
  {
    std::vector<Bits> basics;
    for (std::size_t a = 0; a < sp.size(); ++a) {
      Bits o(flt.size());
      for (std::size_t f = 0; f < flt.size(); ++f)
        if (flt.members(f).test(a)) o.set(f);
      basics.push_back(o);
    }
    r.filters = TopSpace::generate(flt.lattice().poset().names(), basics);
  }

  const auto pts = locale_points(loc);
  {
    std::vector<std::string> names;
    for (const auto& pt : pts) names.push_back(loc.lattice().poset().name(pt.generator));
    std::vector<Bits> family;
    for (std::size_t a = 0; a < loc.lattice().size(); ++a) {
      Bits o(pts.size());
      for (std::size_t i = 0; i < pts.size(); ++i)
        if (!pts[i].members.test(a)) o.set(i);
      family.push_back(o);
    }
    r.points = TopSpace::make(std::move(names), std::move(family));
  }

  bool complete = true;
  for (std::size_t x = 0; x < lp.size(); ++x) {
    Bits f(sp.size());
    for (std::size_t a = 0; a < sp.size(); ++a)
      if (lp.leq(phi[a], x)) f.set(a);
    auto i = flt.find(f);
    if (!i) {
      complete = false;
      break;
    }
    r.scott_to_filters.push_back(*i);
  }
  r.scott_filters_homeomorphic = complete && homeomorphism(r.scott, r.filters, r.scott_to_filters);

  complete = true;
  for (std::size_t f = 0; f < flt.size(); ++f) {
    const Bits lower = ~flt.members(f);
    Bits u(lp.size());
    for_each_member(lower, [&](std::size_t a) { u |= lp.up(phi[a]); });
    auto o = opens.find(u);
    if (!o) {
      complete = false;
      break;
    }
    const auto element = psi_inverse[*o];
    auto it = std::find_if(pts.begin(), pts.end(),
                           [&](const LocalePoint& pt) { return pt.generator == element; });
    if (it == pts.end()) {
      complete = false;
      break;
    }
    r.filters_to_points.push_back(static_cast<std::size_t>(it - pts.begin()));
  }
  r.filters_points_homeomorphic =
      complete && homeomorphism(r.filters, r.points, r.filters_to_points);
  return r;
}

FrameHomReport frame_hom_of_continuous(std::span<const std::size_t> f, const TopSpace& x,
                                       const TopSpace& y, const Limits& limits) {
  FrameHomReport r;
  for (auto v : f)
    if (v >= y.size()) throw Error("function leaves the target point set");
  Bits witness;
  r.continuous = is_continuous(f, x, y, &witness);
  if (!r.continuous) {
    r.witness = witness;
    return r;
  }
  auto pre = [&](const Bits& o) {
    Bits out(x.size());
    for (std::size_t i = 0; i < f.size(); ++i)
      if (o.test(f[i])) out.set(i);
    return out;
  };
  for (const auto& o : y.opens()) r.preimage.push_back(*x.find_open(pre(o)));

  r.preserves_meets = pre(full_bits(y.size())) == full_bits(x.size());
  for (const auto& a : y.opens())
    for (const auto& b : y.opens())
      if (pre(a & b) != (pre(a) & pre(b))) r.preserves_meets = false;

  check_guard("open-family joins", limits.max_directed_carrier, y.opens().size());
  r.preserves_joins = true;
  for_each_subset(full_bits(y.opens().size()), [&](const Bits& family) {
    Bits target(y.size()), source(x.size());
    for_each_member(family, [&](std::size_t j) {
      target |= y.opens()[j];
      source |= x.opens()[r.preimage[j]];
    });
    if (pre(target) != source) r.preserves_joins = false;
  });
  return r;
}

SpectralReport spectrality_check(const Locale& loc, const Limits& limits) {
  SpectralReport r;
  const auto& l = loc.lattice();
  r.algebraic = is_algebraic(l, limits);
  const auto k = compact_elements(l, limits);
  r.compact_top = k.test(l.top());
  r.compact_meets = true;
  for_each_member(k, [&](std::size_t a) {
    for_each_member(k, [&](std::size_t b) {
      if (!k.test(l.meet(a, b))) r.compact_meets = false;
    });
  });
  return r;
}

}  // namespace lattica
