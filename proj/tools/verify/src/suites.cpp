#include "tlimm/verify/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <tuple>
#include <variant>

#include "parallel.hpp"
#include "tlimm/classify.hpp"
#include "tlimm/coloring.hpp"
#include "tlimm/immanant.hpp"
#include "tlimm/limits.hpp"
#include "tlimm/perm.hpp"
#include "tlimm/tl.hpp"
#include "tlimm/verify/oracles.hpp"

namespace tlimm::verify {

namespace {

using detail::parallel_map;

const Permutation& pat(const char* text) {
  static const std::map<std::string, Permutation, std::less<>> table = [] {
    std::map<std::string, Permutation, std::less<>> t;
    for (const char* p : {"1324", "2143", "231564", "654321", "4321"}) t.emplace(p, Permutation::parse(p));
    return t;
  }();
  return table.find(text)->second;
}

bool has(const Permutation& w, const char* p) {
  const auto& v = pat(p);
  return v.size() <= w.size() && contains_pattern(w, v);
}

std::vector<Permutation> avoiders(int n) {
  std::vector<Permutation> out;
  for (auto& w : all_permutations(n))
    if (avoids_321(w)) out.push_back(std::move(w));
  return out;
}

// 321- and 1324-avoiding; `with_2143` selects the 2143-containing half.
std::vector<Permutation> applicable(int n, bool with_2143) {
  std::vector<Permutation> out;
  for (auto& w : avoiders(n))
    if (!has(w, "1324") && has(w, "2143") == with_2143) out.push_back(std::move(w));
  return out;
}

std::string text(bool b) { return b ? "true" : "false"; }
std::string text(std::int64_t x) { return std::to_string(x); }

// First permutation where two immanants differ, rendered as "u:coeff".
std::pair<std::string, std::string> first_difference(const Immanant& expected, const Immanant& actual) {
  std::set<Permutation> support;
  for (const auto& [u, c] : expected.coeffs()) support.insert(u);
  for (const auto& [u, c] : actual.coeffs()) support.insert(u);
  for (const auto& u : support)
    if (expected.coeff(u) != actual.coeff(u))
      return {u.str() + ":" + text(expected.coeff(u)), u.str() + ":" + text(actual.coeff(u))};
  return {"equal", "equal"};
}

void expect_equal(Tally& t, const char* claim, const std::string& witness, const Immanant& expected,
                  const Immanant& actual) {
  if (expected == actual) {
    t.expect(true, {}, {}, {}, {});
    return;
  }
  auto [e, a] = first_difference(expected, actual);
  t.expect(false, claim, witness, e, a);
}

std::string join(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

template <class Result>
Tally merge_all(std::vector<Result>&& parts) {
  Tally total;
  for (auto& p : parts) total.merge(std::move(p));
  return total;
}

// ---------------------------------------------------------------------------

void suite_a1(Report& r, const SuiteOptions& o) {
  for (int n = 3; n <= o.n; ++n) {
    const auto imms = all_tl_immanants(n);
    const auto ws = avoiders(n);
    auto parts = parallel_map(ws, o.jobs, [&](const Permutation& w) {
      Tally t;
      const bool equal = imms.at(w) == scale(percent_immanant(hull(w)), static_cast<std::int64_t>(sign(w)));
      const bool predicted = !has(w, "1324") && !has(w, "2143");
      t.expect(equal == predicted, "A1", w.str(), predicted ? "single %-immanant" : "not a %-immanant",
               equal ? "single %-immanant" : "not a %-immanant");
      return std::pair{std::move(t), equal ? 1 : 0};
    });
    int singles = 0;
    for (auto& [t, eq] : parts) {
      singles += eq;
      r.absorb(std::move(t));
    }
    r.notes.push_back("n=" + std::to_string(n) + ": " + std::to_string(ws.size()) + " 321-avoiding, " +
                      std::to_string(singles) + " equal a single signed %-immanant");
  }
}

void suite_a2(Report& r, const SuiteOptions& o) {
  for (int n = 3; n <= o.n; ++n) {
    const auto imms = all_tl_immanants(n);
    const auto ws = avoiders(n);
    adjacent_pairs(n);  // warm the shared cache before the workers start
    auto parts = parallel_map(ws, o.jobs, [&](const Permutation& w) {
      Tally t;
      const auto& imm = imms.at(w);
      const auto d = decompose(w, {.validate = false});
      const bool found = d.kind != Decomposition::Kind::None;
      const bool main = avoids_main_patterns(w);
      const bool alternating = is_1324_sign_alternating(imm);
      t.expect(found == main, "A2.decomposable-iff-avoids", w.str(), text(main), text(found));
      t.expect(main == alternating, "A2.avoids-iff-alternating", w.str(), text(main), text(alternating));
      if (found) {
        Immanant sum(n);
        for (const auto& s : d.shapes) sum = add(sum, percent_immanant(s));
        expect_equal(t, "A2.shape-sum", w.str(), scale(imm, static_cast<std::int64_t>(d.sign)), sum);
        const bool single = !has(w, "1324") && !has(w, "2143");
        t.expect((d.kind == Decomposition::Kind::One) == single, "A2.kind", w.str(), single ? "one" : "two",
                 to_string(d.kind));
      }
      return std::pair{std::move(t), static_cast<int>(d.kind)};
    });
    int counts[3] = {0, 0, 0};
    for (auto& [t, kind] : parts) {
      ++counts[kind];
      r.absorb(std::move(t));
    }
    r.notes.push_back("n=" + std::to_string(n) + ": one=" + std::to_string(counts[0]) +
                      " two=" + std::to_string(counts[1]) + " none=" + std::to_string(counts[2]));
  }
}

constexpr int kA3ExhaustiveLimit = 6;

void suite_a3(Report& r, const SuiteOptions& o) {
  for (int n = 1; n <= std::min(o.n, kA3ExhaustiveLimit); ++n) {
    const auto& table = theta_table(n);
    const auto us = all_permutations(n);
    std::vector<Permutation> ws;
    for (auto& w : avoiders(n))
      if (!has(w, "1324")) ws.push_back(std::move(w));
    auto parts = parallel_map(ws, o.jobs, [&](const Permutation& w) {
      Tally t;
      for (const auto& u : us) {
        const auto expected = table.coeff(w, u);
        const auto actual = closed_form_coeff(w, u);
        t.expect(expected == actual, "A3", w.str() + " " + u.str(), text(expected), text(actual));
      }
      return t;
    });
    const auto before = r.checks;
    r.absorb(merge_all(std::move(parts)));
    r.notes.push_back("n=" + std::to_string(n) + ": " + std::to_string(ws.size()) + " applicable w, " +
                      std::to_string(r.checks - before) + " pairs (exhaustive)");
  }
  for (int n = kA3ExhaustiveLimit + 1; n <= o.n; ++n) {
    const auto& table = theta_table(n);
    std::vector<Permutation> ws;
    for (auto& w : avoiders(n))
      if (!has(w, "1324")) ws.push_back(std::move(w));
    std::mt19937_64 rng(o.seed ^ static_cast<std::uint64_t>(n));
    std::uniform_int_distribution<std::size_t> pick(0, ws.size() - 1);
    std::vector<int> images(static_cast<std::size_t>(n));
    std::vector<std::pair<Permutation, Permutation>> pairs;
    pairs.reserve(static_cast<std::size_t>(o.samples));
    for (std::int64_t s = 0; s < o.samples; ++s) {
      std::iota(images.begin(), images.end(), 1);
      std::shuffle(images.begin(), images.end(), rng);
      pairs.emplace_back(ws[pick(rng)], Permutation(images));
    }
    constexpr std::size_t kChunk = 2048;
    std::vector<std::size_t> starts;
    for (std::size_t s = 0; s < pairs.size(); s += kChunk) starts.push_back(s);
    auto parts = parallel_map(starts, o.jobs, [&](std::size_t start) {
      Tally t;
      for (std::size_t i = start; i < std::min(start + kChunk, pairs.size()); ++i) {
        const auto& [w, u] = pairs[i];
        const auto expected = table.coeff(w, u);
        const auto actual = closed_form_coeff(w, u);
        t.expect(expected == actual, "A3.sampled", w.str() + " " + u.str(), text(expected), text(actual));
      }
      return t;
    });
    r.absorb(merge_all(std::move(parts)));
    r.notes.push_back("n=" + std::to_string(n) + ": " + std::to_string(pairs.size()) + " random pairs over " +
                      std::to_string(ws.size()) + " applicable w (seed " + std::to_string(o.seed) + ")");
  }
}

std::vector<IndexSet> subsets_of_size(int n, int k) {
  std::vector<IndexSet> out;
  std::vector<bool> choose(static_cast<std::size_t>(n), false);
  std::fill(choose.begin(), choose.begin() + k, true);
  do {
    IndexSet s;
    for (int i = 0; i < n; ++i)
      if (choose[static_cast<std::size_t>(i)]) s.push_back(i + 1);
    out.push_back(std::move(s));
  } while (std::prev_permutation(choose.begin(), choose.end()));
  return out;
}

void suite_a4(Report& r, const SuiteOptions& o) {
  for (int n = 1; n <= o.n; ++n) {
    const auto imms = all_tl_immanants(n);
    std::vector<std::pair<IndexSet, IndexSet>> items;
    for (int k = 0; k <= n; ++k)
      for (const auto& I : subsets_of_size(n, k))
        for (const auto& J : subsets_of_size(n, k)) items.emplace_back(I, J);
    auto parts = parallel_map(items, o.jobs, [&](const std::pair<IndexSet, IndexSet>& item) {
      const auto& [I, J] = item;
      Tally t;
      const int s = std::accumulate(I.begin(), I.end(), 0) + std::accumulate(J.begin(), J.end(), 0);
      const auto lhs = scale(cm_immanant(n, I, J), std::int64_t{s % 2 == 0 ? 1 : -1});
      Immanant rhs(n);
      for (const auto& w : compatible_permutations(Coloring{n, I, J})) rhs = add(rhs, imms.at(w));
      expect_equal(t, "A4", "n=" + std::to_string(n) + " I=" + join(I) + " J=" + join(J), lhs, rhs);
      return t;
    });
    r.absorb(merge_all(std::move(parts)));
    r.notes.push_back("n=" + std::to_string(n) + ": " + std::to_string(items.size()) + " (I, J) pairs");
  }
}

void suite_a5(Report& r, const SuiteOptions& o) {
  for (int n = 1; n <= o.n; ++n) {
    const auto& table = theta_table(n);
    const auto us = all_permutations(n);
    const auto ws = avoiders(n);
    auto parts = parallel_map(ws, o.jobs, [&](const Permutation& w) {
      Tally t;
      const auto w_inv = inverse(w);
      const auto w_rot = w0_conjugate(w);
      for (const auto& u : us) {
        const auto base = table.coeff(w, u);
        const auto by_inverse = table.coeff(w_inv, inverse(u));
        const auto by_rotation = table.coeff(w_rot, w0_conjugate(u));
        t.expect(base == by_inverse, "A5.inverse", w.str() + " " + u.str(), text(base), text(by_inverse));
        t.expect(base == by_rotation, "A5.w0-conjugate", w.str() + " " + u.str(), text(base), text(by_rotation));
      }
      return t;
    });
    r.absorb(merge_all(std::move(parts)));
  }
}

void suite_a6(Report& r, const SuiteOptions& o) {
  for (int n = 1; n <= o.n; ++n) {
    const auto perms = all_permutations(n);
    std::vector<Permutation> ws;
    {
      Tally t;
      for (const auto& w : perms) {
        const bool fast = avoids_321(w);
        const bool brute = !has_decreasing_triple(w);
        t.expect(fast == brute, "A6.avoids-321", w.str(), text(brute), text(fast));
        if (fast) ws.push_back(w);
      }
      r.absorb(std::move(t));
    }
    const auto matchings = all_matchings(n);
    const auto expected = catalan(n);
    Tally t;
    t.expect(static_cast<std::int64_t>(ws.size()) == expected, "A6.count-321-avoiding", "n=" + std::to_string(n),
             text(expected), text(static_cast<std::int64_t>(ws.size())));
    t.expect(static_cast<std::int64_t>(matchings.size()) == expected, "A6.count-matchings",
             "n=" + std::to_string(n), text(expected), text(static_cast<std::int64_t>(matchings.size())));

    auto images = parallel_map(ws, o.jobs, [](const Permutation& w) {
      Tally local;
      auto m = beta(w);
      const auto back = beta_inv(m);
      local.expect(back == w, "A6.beta-inv-after-beta", w.str(), w.str(), back.str());
      return std::pair{std::move(local), std::move(m)};
    });
    std::set<NonCrossingMatching> seen;
    for (auto& [local, m] : images) {
      t.merge(std::move(local));
      const bool fresh = seen.insert(m).second;
      t.expect(fresh, "A6.beta-injective", m.str(), "distinct image", "repeated image");
    }
    const std::set<NonCrossingMatching> all(matchings.begin(), matchings.end());
    t.expect(seen == all, "A6.beta-onto", "n=" + std::to_string(n), text(static_cast<std::int64_t>(all.size())),
             text(static_cast<std::int64_t>(seen.size())));
    for (const auto& m : matchings) {
      const auto again = beta(beta_inv(m));
      t.expect(again == m, "A6.beta-after-beta-inv", m.str(), m.str(), again.str());
    }
    r.absorb(std::move(t));
    r.notes.push_back("n=" + std::to_string(n) + ": counts (" + std::to_string(ws.size()) + ", " +
                      std::to_string(matchings.size()) + "), Catalan " + std::to_string(expected));
  }
}

struct SimpleTuple { int A, B, C; };
struct GeneralTuple { int a, b, c, d, e; };
struct Case1Tuple { int a, b, c, d, e; };
struct Case2Tuple { int a, e, b, c, f, d; };
using LemmaTuple = std::variant<SimpleTuple, GeneralTuple, Case1Tuple, Case2Tuple>;

// Non-negative integer vectors of length k summing to n.
void compositions(int n, int k, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k - 1) {
    cur.push_back(n);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int x = 0; x <= n; ++x) {
    cur.push_back(x);
    compositions(n - x, k, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> compositions(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  compositions(n, k, cur, out);
  return out;
}

std::vector<LemmaTuple> lemma_tuples(int n) {
  std::vector<LemmaTuple> out;
  for (const auto& v : compositions(2 * n, 3))
    if (v[0] <= n && v[1] <= n && v[2] <= n) out.push_back(SimpleTuple{v[0], v[1], v[2]});
  for (const auto& v : compositions(n, 5)) out.push_back(GeneralTuple{v[0], v[1], v[2], v[3], v[4]});
  for (const auto& v : compositions(n, 5))
    if (v[0] >= 1 && v[1] >= 1 && v[2] >= 1 && v[3] >= 1) out.push_back(Case1Tuple{v[0], v[1], v[2], v[3], v[4]});
  for (const auto& v : compositions(n, 6))
    if (v[0] >= 1 && v[2] >= 1 && v[3] >= 1 && v[5] >= 1 && std::max(v[1], v[4]) >= 1)
      out.push_back(Case2Tuple{v[0], v[1], v[2], v[3], v[4], v[5]});
  return out;
}

std::string describe(const LemmaTuple& tuple) {
  auto list = [](std::initializer_list<int> xs) {
    std::string s = "(";
    bool first = true;
    for (int x : xs) {
      s += (first ? "" : ",") + std::to_string(x);
      first = false;
    }
    return s + ")";
  };
  return std::visit(
      [&](const auto& t) -> std::string {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, SimpleTuple>) return "simple" + list({t.A, t.B, t.C});
        else if constexpr (std::is_same_v<T, GeneralTuple>) return "general" + list({t.a, t.b, t.c, t.d, t.e});
        else if constexpr (std::is_same_v<T, Case1Tuple>) return "case1" + list({t.a, t.b, t.c, t.d, t.e});
        else return "case2" + list({t.a, t.e, t.b, t.c, t.f, t.d});
      },
      tuple);
}

void suite_a7(Report& r, const SuiteOptions& o) {
  for (int n = 1; n <= o.n; ++n) {
    const auto pool = all_colored_matchings(n);
    const auto tuples = lemma_tuples(n);
    auto parts = parallel_map(tuples, o.jobs, [&](const LemmaTuple& tuple) {
      Tally t;
      const auto name = describe(tuple);
      const auto found = std::visit(
          [&](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, SimpleTuple>) return brute_simple(pool, p.A, p.B, p.C);
            else if constexpr (std::is_same_v<T, GeneralTuple>) return brute_general(pool, p.a, p.b, p.c, p.d, p.e);
            else if constexpr (std::is_same_v<T, Case1Tuple>) return brute_case1(pool, p.a, p.b, p.c, p.d, p.e);
            else return brute_case2(pool, p.a, p.e, p.b, p.c, p.f, p.d);
          },
          tuple);
      t.expect(found.size() == 1, "A7.unique", name, "1", std::to_string(found.size()));
      if (found.size() != 1) return t;
      const auto& cm = found.front();
      const CircularColoring coloring{n, cm.black};
      const auto matching = NonCrossingMatching::from_circular(n, cm.partner);
      std::visit(
          [&](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, SimpleTuple> || std::is_same_v<T, GeneralTuple>) {
              CircularSolution s;
              if constexpr (std::is_same_v<T, SimpleTuple>) s = unique_matching_simple(p.A, p.B, p.C);
              else s = unique_matching_general(p.a, p.b, p.c, p.d, p.e);
              t.expect(s.coloring == coloring, "A7.coloring", name, coloring.str(), s.coloring.str());
              t.expect(s.matching == matching, "A7.matching", name, matching.str(), s.matching.str());
            } else {
              Solution s;
              Permutation w;
              if constexpr (std::is_same_v<T, Case1Tuple>) {
                s = unique_matching_case1(p.a, p.b, p.c, p.d, p.e);
                w = build_case1(p.a, p.b, p.e, p.c, p.d);
              } else {
                s = unique_matching_case2(p.a, p.e, p.b, p.c, p.f, p.d);
                w = build_case2(p.a, p.e, p.b, p.c, p.f, p.d);
              }
              const auto expected_coloring = coloring.to_coloring();
              t.expect(s.coloring == expected_coloring, "A7.coloring", name, expected_coloring.str(),
                       s.coloring.str());
              t.expect(s.matching == matching, "A7.matching", name, matching.str(), s.matching.str());
              const auto b = beta(w);
              t.expect(b == matching, "A7.equals-beta", name + " w=" + w.str(), matching.str(), b.str());
            }
          },
          tuple);
      return t;
    });
    r.absorb(merge_all(std::move(parts)));
    r.notes.push_back("n=" + std::to_string(n) + ": " + std::to_string(tuples.size()) + " parameter tuples over " +
                      std::to_string(pool.size()) + " coloured matchings");
  }
}

void suite_a8(Report& r, const SuiteOptions& o) {
  for (int n = 4; n <= o.n; ++n) {
    require_within(n, theta_limit(), "A8");
    const auto at_w0 = theta(longest_word(n));
    const auto ws = applicable(n, true);
    auto parts = parallel_map(ws, o.jobs, [&](const Permutation& w) {
      Tally t;
      const auto expected = std::abs(at_w0.coeff(beta(w)));
      const auto actual = antidiag_coeff(w);
      t.expect(expected == actual, "A8", w.str(), text(expected), text(actual));
      return std::pair{std::move(t), actual};
    });
    std::int64_t largest = 0;
    for (auto& [t, value] : parts) {
      largest = std::max(largest, value);
      r.absorb(std::move(t));
    }
    r.notes.push_back("n=" + std::to_string(n) + ": " + std::to_string(ws.size()) +
                      " applicable w, largest |f_w(w0)| = " + std::to_string(largest));
  }
  Tally anchors;
  if (o.n >= 4) {
    const auto v = f_coeff(Permutation::parse("2143"), pat("4321"));
    anchors.expect(v == 2, "A8.anchor", "f_2143(4321)", "2", text(v));
  }
  if (o.n >= 6) {
    const auto v = std::abs(f_coeff(pat("231564"), pat("654321")));
    anchors.expect(v == 3, "A8.anchor", "|f_231564(654321)|", "3", text(v));
  }
  r.absorb(std::move(anchors));
}

constexpr int kA9ReconstructionLimit = 5;

using Partition = std::vector<std::vector<Permutation>>;

std::string first_class_difference(const Partition& expected, const Partition& actual) {
  for (std::size_t i = 0; i < std::min(expected.size(), actual.size()); ++i)
    if (expected[i] != actual[i]) return "class of " + expected[i].front().str();
  return std::to_string(expected.size()) + " vs " + std::to_string(actual.size()) + " classes";
}

SkewShape random_shape(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> part(0, n);
  std::vector<int> lambda(static_cast<std::size_t>(n)), mu(static_cast<std::size_t>(n));
  for (auto& x : lambda) x = part(rng);
  for (auto& x : mu) x = part(rng);
  std::sort(lambda.rbegin(), lambda.rend());
  std::sort(mu.rbegin(), mu.rend());
  for (std::size_t i = 0; i < mu.size(); ++i) mu[i] = std::min(mu[i], lambda[i]);
  return SkewShape(n, lambda, mu);
}

void suite_a9(Report& r, const SuiteOptions& o) {
  for (int n = 1; n <= o.n; ++n) {
    Tally t;
    const auto& classes = related_classes(n);
    const auto oracle = neighbour_closure_classes(n);
    t.expect(classes == oracle, "A9.closure", "n=" + std::to_string(n), first_class_difference(oracle, classes),
             "library classes differ");
    std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<Permutation>> fibers;
    for (const auto& u : all_permutations(n)) {
      const auto h = hull(u);
      fibers[{h.lambda(), h.mu()}].push_back(u);
    }
    Partition by_hull;
    for (auto& [key, members] : fibers) by_hull.push_back(std::move(members));
    std::sort(by_hull.begin(), by_hull.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });
    t.expect(classes == by_hull, "A9.hull-fibers", "n=" + std::to_string(n), first_class_difference(by_hull, classes),
             "relatedness classes differ from hull fibers");
    r.absorb(std::move(t));
    r.notes.push_back("n=" + std::to_string(n) + ": " + std::to_string(classes.size()) + " classes");
  }
  for (int n = 1; n <= std::min(o.n, kA9ReconstructionLimit); ++n) {
    std::vector<std::uint64_t> seeds;
    for (int k = 0; k < o.shape_trials; ++k) seeds.push_back(o.seed * 1000003u + static_cast<std::uint64_t>(n * 7919 + k));
    auto parts = parallel_map(seeds, o.jobs, [n](std::uint64_t seed) {
      Tally t;
      std::mt19937_64 rng(seed);
      std::uniform_int_distribution<int> count(1, 4), coeff(-3, 3);
      Immanant f(n);
      for (int k = count(rng); k > 0; --k) {
        const auto shape = random_shape(n, rng);
        const int c = coeff(rng);
        f = add(f, scale(percent_immanant(shape), std::int64_t{c}));
      }
      const auto terms = percent_basis_decompose(f);
      expect_equal(t, "A9.reconstruct", "seed=" + std::to_string(seed), f, percent_basis_reconstruct(n, terms));
      return t;
    });
    r.absorb(merge_all(std::move(parts)));
    r.notes.push_back("n=" + std::to_string(n) + ": " + std::to_string(seeds.size()) +
                      " random %-immanant combinations reconstructed");
  }
}

void suite_a10(Report& r, const SuiteOptions& o) {
  for (int n = 1; n <= o.n; ++n) {
    const auto imms = all_tl_immanants(n);
    const auto with = applicable(n, true);
    const auto without = applicable(n, false);

    auto cm_parts = parallel_map(with, o.jobs, [&](const Permutation& w) {
      Tally t;
      Immanant sum(n);
      for (const auto& term : cm_expansion(w))
        sum = add(sum, scale(cm_immanant(n, term.I, term.J), std::int64_t{term.sign}));
      expect_equal(t, "A10.cm-expansion", w.str(), imms.at(w), scale(sum, std::int64_t{sign(w)}));

      const auto fx = converse_fixture(w);
      const auto percent_value = evaluate(percent_immanant(fx.shape), fx.matrix);
      const auto tl_value = evaluate(imms.at(w), fx.matrix);
      t.expect(abs(percent_value) == 1, "A10.converse-percent", w.str(), "+-1", to_string(percent_value));
      t.expect(tl_value == 0, "A10.converse-tl", w.str(), "0", to_string(tl_value));
      return t;
    });
    r.absorb(merge_all(std::move(cm_parts)));

    auto rect_parts = parallel_map(without, o.jobs, [&](const Permutation& w) {
      Tally t;
      const auto red = reduce_to_special(w);
      Immanant sum(n);
      for (const auto& term : rect_cm_expansion(red.reduced)) sum = add(sum, cm_immanant(n, term.I, term.J));
      expect_equal(t, "A10.rectangle", red.reduced.str(), percent_immanant(hull(red.reduced)), sum);
      for (auto it = red.transforms.rbegin(); it != red.transforms.rend(); ++it) sum = apply(*it, sum);
      expect_equal(t, "A10.rectangle-transported", w.str(), percent_immanant(hull(w)), sum);
      return t;
    });
    r.absorb(merge_all(std::move(rect_parts)));
    r.notes.push_back("n=" + std::to_string(n) + ": " + std::to_string(with.size()) + " signed CM expansions, " +
                      std::to_string(without.size()) + " rectangle expansions");
  }
}

using SuiteFn = void (*)(Report&, const SuiteOptions&);

struct SuiteInfo {
  SuiteFn run;
  int default_n;
};

const std::map<std::string, SuiteInfo, std::less<>>& registry() {
  static const std::map<std::string, SuiteInfo, std::less<>> table{
      {"A1", {suite_a1, 6}}, {"A2", {suite_a2, 6}}, {"A3", {suite_a3, 7}}, {"A4", {suite_a4, 5}},
      {"A5", {suite_a5, 5}}, {"A6", {suite_a6, 8}}, {"A7", {suite_a7, 6}}, {"A8", {suite_a8, 7}},
      {"A9", {suite_a9, 6}}, {"A10", {suite_a10, 6}},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids{"A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "A9", "A10"};
  return ids;
}

bool is_suite(std::string_view id) { return registry().contains(id); }

int default_n(std::string_view id) {
  const auto it = registry().find(id);
  if (it == registry().end()) throw std::invalid_argument("unknown suite " + std::string(id));
  return it->second.default_n;
}

Report run_suite(std::string_view id, const SuiteOptions& options) {
  const auto it = registry().find(id);
  if (it == registry().end()) throw std::invalid_argument("unknown suite " + std::string(id));
  SuiteOptions o = options;
  if (o.n <= 0) o.n = it->second.default_n;
  require_within(o.n, max_n(), "verify");
  Report report;
  report.suite = std::string(id);
  report.n = o.n;
  const auto start = std::chrono::steady_clock::now();
  it->second.run(report, o);
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace tlimm::verify
