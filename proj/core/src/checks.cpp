#include "glat/checks.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "glat/errors.hpp"
#include "glat/subgroups.hpp"

namespace glat {

namespace {

using Clock = std::chrono::steady_clock;

std::chrono::milliseconds since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);
}

void run_parallel(int count, int jobs, const std::function<void(int)>& fn) {
  if (jobs <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  const int workers = std::min(jobs, count);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  for (auto& t : pool) t.join();
}

Witness subgroup_witness(const std::string& kind, const GroupTable& g,
                         const SubgroupSet& s) {
  Witness w;
  w.kind = kind;
  w.text = subgroup_label(g, s);
  for (int e : s.elements()) w.element_names.push_back(g.element_name(e));
  return w;
}

struct WordsHash {
  std::size_t operator()(const std::vector<std::uint64_t>& w) const {
    return static_cast<std::size_t>(fnv1a_hash(w));
  }
};

}  // namespace

BoundedLattice centralizer_lattice(const GroupTable& g) {
  return BoundedLattice::build(centralizer_lattice_elements(g));
}

bool is_published_claim(const std::string& claim) {
  return claim == "theorem1" || claim == "corollary2" || claim == "corollary3" ||
         claim == "closure" || claim == "union-argument" || claim == "atoms-bound";
}

CheckReport check_theorem1(const GroupTable& g) {
  const auto t0 = Clock::now();
  CheckReport r;
  r.claim = "theorem1";
  r.group = g.name();
  r.group_order = g.order();
  const BoundedLattice lat = centralizer_lattice(g);
  const auto pairs = lat.interval_decompositions();
  r.passed = pairs.empty();
  for (const auto& [m, n] : pairs) {
    Witness w;
    w.kind = "decomposition-pair";
    w.text = "M=" + subgroup_label(g, lat.node(m)) + " N=" + subgroup_label(g, lat.node(n));
    r.witnesses.push_back(std::move(w));
  }
  r.notes.push_back("centralizer lattice has " + std::to_string(lat.size()) + " nodes");
  r.elapsed = since(t0);
  return r;
}

CheckReport check_corollary2(const GroupTable& g) {
  const auto t0 = Clock::now();
  CheckReport r;
  r.claim = "corollary2";
  r.group = g.name();
  r.group_order = g.order();
  const BoundedLattice lat = centralizer_lattice(g);
  const auto bps = lat.breaking_points();
  r.passed = bps.empty();
  for (int h : bps)
    r.witnesses.push_back(subgroup_witness("breaking-point", g, lat.node(h)));
  r.notes.push_back("centralizer lattice has " + std::to_string(lat.size()) + " nodes");
  r.elapsed = since(t0);
  return r;
}

CheckReport check_corollary3(const GroupTable& g) {
  const auto t0 = Clock::now();
  CheckReport r;
  r.claim = "corollary3";
  r.group = g.name();
  r.group_order = g.order();
  const BoundedLattice lat = centralizer_lattice(g);
  const ChainInfo chain = lat.chain_classification();
  const bool abelian = g.is_abelian();
  const bool iff_holds = chain.is_chain == abelian;
  const bool never_two = lat.size() != 2;
  r.passed = iff_holds && never_two;
  if (!iff_holds) {
    Witness w;
    w.kind = "chain-mismatch";
    w.text = std::string(abelian ? "abelian" : "nonabelian") + " group with " +
             (chain.is_chain ? "a chain" : "a non-chain") + " centralizer lattice of " +
             std::to_string(lat.size()) + " nodes";
    r.witnesses.push_back(std::move(w));
  }
  if (!never_two) {
    Witness w;
    w.kind = "chain-of-length-one";
    w.text = "centralizer lattice is exactly {Z(G), G}";
    r.witnesses.push_back(std::move(w));
  }
  r.notes.push_back(chain.is_chain
                        ? "chain of length " + std::to_string(chain.length)
                        : "not a chain (" + std::to_string(lat.size()) + " nodes)");
  r.elapsed = since(t0);
  return r;
}

CheckReport check_closure_and_double_centralizer(const GroupTable& g) {
  const auto t0 = Clock::now();
  CheckReport r;
  r.claim = "closure";
  r.group = g.name();
  r.group_order = g.order();
  r.passed = true;

  const auto elems = centralizer_lattice_elements(g);
  std::unordered_set<std::vector<std::uint64_t>, WordsHash> members;
  for (const auto& s : elems) members.insert(s.words());
  for (std::size_t i = 0; i < elems.size() && r.passed; ++i)
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      const auto meet = elems[i].intersect(elems[j]);
      if (!members.count(meet.words())) {
        r.passed = false;
        Witness w;
        w.kind = "intersection-escape";
        w.text = subgroup_label(g, elems[i]) + " meet " + subgroup_label(g, elems[j]) +
                 " = " + subgroup_label(g, meet) + " is not a centralizer";
        r.witnesses.push_back(std::move(w));
        break;
      }
    }

  for (int x = 0; x < g.order(); ++x) {
    const SubgroupSet cx = centralizer_of_element(g, x);
    const SubgroupSet ccx = centralizer(g, cx);
    if (!ccx.test(x)) {
      r.passed = false;
      Witness w;
      w.kind = "double-centralizer-escape";
      w.text = g.element_name(x) + " is not in C(C(" + g.element_name(x) + "))";
      r.witnesses.push_back(std::move(w));
    }
  }
  r.notes.push_back(std::to_string(elems.size()) + " centralizers, " +
                    std::to_string(g.order()) + " elements checked");
  r.elapsed = since(t0);
  return r;
}

CheckReport check_union_argument(const GroupTable& g,
                                 const std::vector<SubgroupSet>& subgroups) {
  const auto t0 = Clock::now();
  CheckReport r;
  r.claim = "union-argument";
  r.group = g.name();
  r.group_order = g.order();
  r.passed = true;

  const int n = g.order();
  std::vector<const SubgroupSet*> proper;
  for (const auto& s : subgroups)
    if (s.size() < n) proper.push_back(&s);

  if (proper.empty()) {
    r.notes.push_back("no proper subgroups");
    r.elapsed = since(t0);
    return r;
  }

  // The union of two proper subgroups only grows under supergroups, so the
  // maximal ones decide the question and carry the maximum.
  std::vector<const SubgroupSet*> maximal;
  for (const auto* s : proper) {
    bool is_max = true;
    for (const auto* t : proper)
      if (t != s && s->subset_of(*t) && !(*s == *t)) {
        is_max = false;
        break;
      }
    if (is_max) maximal.push_back(s);
  }

  int best = 0;
  std::pair<const SubgroupSet*, const SubgroupSet*> best_pair{nullptr, nullptr};
  for (std::size_t i = 0; i < maximal.size(); ++i)
    for (std::size_t j = i; j < maximal.size(); ++j) {
      const int u = maximal[i]->unite(*maximal[j]).size();
      if (u > best) {
        best = u;
        best_pair = {maximal[i], maximal[j]};
      }
      if (u == n) {
        r.passed = false;
        Witness w;
        w.kind = "union-cover";
        w.text = subgroup_label(g, *maximal[i]) + " union " +
                 subgroup_label(g, *maximal[j]) + " covers the group";
        r.witnesses.push_back(std::move(w));
      }
    }
  if (r.passed && best_pair.first) {
    r.notes.push_back("largest union of two proper subgroups covers " +
                      std::to_string(best) + " of " + std::to_string(n) + " elements");
  }
  r.notes.push_back(std::to_string(subgroups.size()) + " subgroups, " +
                    std::to_string(maximal.size()) + " maximal");
  r.elapsed = since(t0);
  return r;
}

CheckReport check_union_argument(const GroupTable& g, int subgroup_cap) {
  return check_union_argument(g, all_subgroups(g, subgroup_cap));
}

CheckReport check_atoms_bound(const GroupTable& g) {
  if (g.is_abelian())
    throw Error(ErrorKind::GroupIsAbelian,
                g.name() + " is abelian; the minimal-centralizer bound needs a nonabelian group");
  const auto t0 = Clock::now();
  CheckReport r;
  r.claim = "atoms-bound";
  r.group = g.name();
  r.group_order = g.order();
  const BoundedLattice lat = centralizer_lattice(g);
  const auto atoms = lat.atoms();
  SubgroupSet inter = g.full_set();
  for (int a : atoms) inter = inter.intersect(lat.node(a));
  const SubgroupSet z = center(g);
  const bool enough = atoms.size() >= 3;
  const bool meets_center = inter == z;
  r.passed = enough && meets_center;
  if (!enough) {
    Witness w;
    w.kind = "too-few-atoms";
    w.text = "only " + std::to_string(atoms.size()) + " minimal centralizers";
    for (int a : atoms) r.witnesses.push_back(subgroup_witness("atom", g, lat.node(a)));
    r.witnesses.push_back(std::move(w));
  }
  if (!meets_center) {
    r.witnesses.push_back(subgroup_witness("atom-intersection", g, inter));
    r.witnesses.push_back(subgroup_witness("center", g, z));
  }
  r.notes.push_back("k=" + std::to_string(atoms.size()) +
                    "; atom intersection has " + std::to_string(inter.size()) +
                    " elements, center has " + std::to_string(z.size()));
  r.elapsed = since(t0);
  return r;
}

Catalog default_catalog(int max_order, bool include_products, bool include_big_sn) {
  Catalog cat;
  cat.max_order = max_order;
  cat.include_products = include_products;

  std::vector<std::string> names;
  for (int n = 2; n <= max_order; ++n) names.push_back("C" + std::to_string(n));
  for (int m = 3; 2 * m <= max_order; ++m) names.push_back("D" + std::to_string(m));
  for (int q = 8; q <= max_order; q *= 2) names.push_back("Q" + std::to_string(q));
  {
    const int s_max = include_big_sn ? 6 : 4;
    long long fact = 1;
    for (int n = 2; n <= 6; ++n) {
      fact *= n;
      if (n >= 3 && n <= s_max && fact <= max_order) names.push_back("S" + std::to_string(n));
    }
    const int a_max = include_big_sn ? 6 : 5;
    fact = 1;
    for (int n = 2; n <= 6; ++n) {
      fact *= n;
      if (n >= 4 && n <= a_max && fact / 2 <= max_order)
        names.push_back("A" + std::to_string(n));
    }
  }
  for (int p = 2; p * p <= max_order; ++p) {
    bool prime = p >= 2;
    for (int d = 2; d * d <= p && prime; ++d) prime = p % d != 0;
    if (!prime) continue;
    long long pk = static_cast<long long>(p) * p;
    for (int k = 2; pk <= max_order; ++k, pk *= p)
      names.push_back("E" + std::to_string(p) + "^" + std::to_string(k));
  }

  for (const auto& n : names) cat.specs.push_back(parse_group_spec(n));

  if (include_products) {
    struct Entry {
      long long order;
      std::string name;
    };
    std::vector<Entry> base;
    for (const auto& spec : cat.specs) {
      // Family orders are cheap to recover from the atom.
      const FamilyAtom& a = spec.atoms.front();
      long long order = 0;
      switch (a.family) {
        case 'C': order = a.n; break;
        case 'D': order = 2 * a.n; break;
        case 'Q': order = a.n; break;
        case 'S': {
          order = 1;
          for (int i = 2; i <= a.n; ++i) order *= i;
          break;
        }
        case 'A': {
          order = 1;
          for (int i = 2; i <= a.n; ++i) order *= i;
          order /= 2;
          break;
        }
        case 'E': {
          order = 1;
          for (int i = 0; i < a.k; ++i) order *= a.n;
          break;
        }
      }
      base.push_back({order, spec.canonical});
    }
    for (std::size_t i = 0; i < base.size(); ++i)
      for (std::size_t j = i; j < base.size(); ++j)
        if (base[i].order * base[j].order <= max_order)
          cat.specs.push_back(parse_group_spec(base[i].name + " x " + base[j].name));
  }
  return cat;
}

namespace {

// Representative preference inside an isomorphism class: the most
// informative family name wins, products lose to named families.
int family_rank(const GroupSpec& spec) {
  if (spec.kind == SpecKind::FilePath) return 7;
  if (spec.atoms.size() > 1) return 6;
  switch (spec.atoms.front().family) {
    case 'S': return 0;
    case 'A': return 1;
    case 'Q': return 2;
    case 'D': return 3;
    case 'C': return 4;
    case 'E': return 5;
  }
  return 7;
}

}  // namespace

CatalogGroups realize_catalog(const Catalog& catalog, const Caps& caps, int jobs) {
  CatalogGroups out;
  out.max_order = catalog.max_order;
  out.include_products = catalog.include_products;

  const int count = static_cast<int>(catalog.specs.size());
  std::vector<std::optional<GroupTable>> built(static_cast<std::size_t>(count));
  std::vector<std::string> errors(static_cast<std::size_t>(count));
  run_parallel(count, jobs, [&](int i) {
    try {
      GroupTable g = realize_group(catalog.specs[static_cast<std::size_t>(i)], caps.element_cap);
      if (g.order() <= catalog.max_order) {
        g.fingerprint();  // precompute before sharing
        built[static_cast<std::size_t>(i)] = std::move(g);
      }
    } catch (const Error& e) {
      errors[static_cast<std::size_t>(i)] =
          catalog.specs[static_cast<std::size_t>(i)].canonical + ": " + e.what();
    }
  });
  for (auto& e : errors)
    if (!e.empty()) out.errors.push_back(std::move(e));

  std::vector<int> order_ids;
  for (int i = 0; i < count; ++i)
    if (built[static_cast<std::size_t>(i)]) order_ids.push_back(i);
  std::sort(order_ids.begin(), order_ids.end(), [&](int a, int b) {
    const GroupTable& ga = *built[static_cast<std::size_t>(a)];
    const GroupTable& gb = *built[static_cast<std::size_t>(b)];
    if (ga.order() != gb.order()) return ga.order() < gb.order();
    const int ra = family_rank(catalog.specs[static_cast<std::size_t>(a)]);
    const int rb = family_rank(catalog.specs[static_cast<std::size_t>(b)]);
    if (ra != rb) return ra < rb;
    return ga.name() < gb.name();
  });

  for (int id : order_ids) {
    GroupTable& g = *built[static_cast<std::size_t>(id)];
    if (catalog.dedup_isomorphic) {
      bool dup = false;
      for (const GroupTable& kept : out.groups) {
        if (kept.order() != g.order()) continue;
        if (is_isomorphic(kept, g)) {
          dup = true;
          break;
        }
      }
      if (dup) continue;
    }
    out.groups.push_back(std::move(g));
  }
  std::sort(out.groups.begin(), out.groups.end(), [](const GroupTable& a, const GroupTable& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.name() < b.name();
  });
  return out;
}

CheckReport capability_search(const GroupTable& target, const CatalogGroups& catalog,
                              const Caps& caps, int jobs) {
  const auto t0 = Clock::now();
  CheckReport r;
  r.claim = "capability";
  r.group = target.name();
  r.group_order = target.order();

  target.fingerprint();  // precompute before sharing across workers
  const int count = static_cast<int>(catalog.groups.size());
  std::vector<std::optional<Witness>> hits(static_cast<std::size_t>(count));
  std::vector<std::string> errors(static_cast<std::size_t>(count));
  run_parallel(count, jobs, [&](int i) {
    const GroupTable& g = catalog.groups[static_cast<std::size_t>(i)];
    try {
      const SubgroupSet z = center(g);
      if (g.order() / z.size() != target.order()) return;
      const GroupTable q = quotient(g, z, g.name() + "/Z");
      if (!is_isomorphic(q, target)) return;
      Witness w;
      w.kind = "hit";
      w.group_spec = g.name();
      w.group_order = g.order();
      w.text = g.name() + " (order " + std::to_string(g.order()) +
               "): central quotient is isomorphic to " + target.name();
      hits[static_cast<std::size_t>(i)] = std::move(w);
    } catch (const Error& e) {
      errors[static_cast<std::size_t>(i)] = g.name() + ": " + e.what();
    }
  });

  for (auto& h : hits)
    if (h) r.witnesses.push_back(std::move(*h));
  for (auto& e : errors)
    if (!e.empty()) r.notes.push_back("error: " + e);

  bool target_is_generalized_quaternion = false;
  const int n = target.order();
  if (n >= 8 && (n & (n - 1)) == 0)
    target_is_generalized_quaternion = is_isomorphic(target, generalized_quaternion_group(n));

  r.passed = target_is_generalized_quaternion ? r.witnesses.empty() : true;
  r.notes.push_back("bounded search over " + std::to_string(catalog.groups.size()) +
                    " catalog groups of order <= " + std::to_string(catalog.max_order) +
                    "; an empty hit list is not a proof");
  if (target_is_generalized_quaternion)
    r.notes.push_back("target is a generalized quaternion group: hits would be counterexamples");
  r.elapsed = since(t0);
  (void)caps;
  return r;
}

namespace {

std::optional<CheckReport> open_problem_entry(const GroupTable& g,
                                              const std::vector<SubgroupSet>& subgroups) {
  const auto t0 = Clock::now();
  const auto elems = normal_centralizer_lattice_elements(g, subgroups);
  const BoundedLattice lat = BoundedLattice::build(elems);
  const auto bps = lat.breaking_points();
  if (bps.empty()) return std::nullopt;
  CheckReport r;
  r.claim = "open-problem";
  r.group = g.name();
  r.group_order = g.order();
  r.passed = true;  // informational: a breaking point is a finding, not a failure
  for (int h : bps)
    r.witnesses.push_back(subgroup_witness("breaking-point", g, lat.node(h)));
  r.notes.push_back("normal-centralizer lattice has " + std::to_string(lat.size()) +
                    " nodes");
  r.elapsed = since(t0);
  return r;
}

}  // namespace

OpenProblemResult open_problem_search(const CatalogGroups& catalog, const Caps& caps,
                                      int jobs) {
  OpenProblemResult out;
  const int count = static_cast<int>(catalog.groups.size());
  std::vector<std::optional<CheckReport>> slots(static_cast<std::size_t>(count));
  std::vector<std::string> skipped(static_cast<std::size_t>(count));
  run_parallel(count, jobs, [&](int i) {
    const GroupTable& g = catalog.groups[static_cast<std::size_t>(i)];
    try {
      slots[static_cast<std::size_t>(i)] =
          open_problem_entry(g, all_subgroups(g, caps.subgroup_order_cap));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::OrderCapExceeded) throw;
      skipped[static_cast<std::size_t>(i)] = g.name() + ": " + e.what();
    }
  });
  for (auto& s : slots)
    if (s) out.reports.push_back(std::move(*s));
  for (auto& s : skipped)
    if (!s.empty()) out.skipped.push_back(std::move(s));
  return out;
}

bool SuiteReport::all_passed() const {
  if (!internal_errors.empty()) return false;
  for (const auto& e : groups)
    for (const auto& c : e.checks)
      if (is_published_claim(c.claim) && !c.passed) return false;
  return true;
}

std::vector<CheckReport> SuiteReport::open_problem_reports() const {
  std::vector<CheckReport> out;
  for (const auto& e : groups)
    if (e.open_problem) out.push_back(*e.open_problem);
  return out;
}

SuiteReport run_suite(const CatalogGroups& catalog, const Caps& caps, int jobs) {
  const auto t0 = Clock::now();
  SuiteReport report;
  report.max_order = catalog.max_order;
  report.include_products = catalog.include_products;
  report.jobs = jobs;
  report.realize_errors = catalog.errors;

  const int count = static_cast<int>(catalog.groups.size());
  report.groups.resize(static_cast<std::size_t>(count));
  std::vector<std::string> implication_errors(static_cast<std::size_t>(count));

  run_parallel(count, jobs, [&](int i) {
    const GroupTable& g = catalog.groups[static_cast<std::size_t>(i)];
    GroupSuiteEntry& entry = report.groups[static_cast<std::size_t>(i)];
    entry.spec = g.name();
    entry.order = g.order();
    entry.abelian = g.is_abelian();
    entry.center_order = center(g).size();

    entry.checks.push_back(check_theorem1(g));
    entry.checks.push_back(check_corollary2(g));
    entry.checks.push_back(check_corollary3(g));
    entry.checks.push_back(check_closure_and_double_centralizer(g));

    if (g.order() <= caps.subgroup_order_cap) {
      const auto subgroups = all_subgroups(g, caps.subgroup_order_cap);
      entry.checks.push_back(check_union_argument(g, subgroups));
      entry.open_problem = open_problem_entry(g, subgroups);
    } else {
      entry.skipped.push_back("union-argument: order exceeds subgroup cap " +
                              std::to_string(caps.subgroup_order_cap));
      entry.skipped.push_back("open-problem: order exceeds subgroup cap " +
                              std::to_string(caps.subgroup_order_cap));
    }

    if (!entry.abelian)
      entry.checks.push_back(check_atoms_bound(g));
    else
      entry.skipped.push_back("atoms-bound: group is abelian");

    // A decomposition-free lattice cannot have a breaking point (h,h).
    const bool t1 = entry.checks[0].passed, c2 = entry.checks[1].passed;
    if (t1 && !c2)
      implication_errors[static_cast<std::size_t>(i)] =
          g.name() + ": theorem1 passed but corollary2 failed";
  });

  for (auto& e : implication_errors)
    if (!e.empty()) report.internal_errors.push_back(std::move(e));
  report.elapsed = since(t0);
  return report;
}

}  // namespace glat
