#include "tlimm/tl.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "tlimm/detail/checked.hpp"
#include "tlimm/error.hpp"
#include "tlimm/limits.hpp"

namespace tlimm {

using detail::checked_add;
using detail::checked_mul;

std::string Vertex::str() const { return std::to_string(label) + (primed ? "'" : ""); }

int circular_position(int n, Vertex v) { return v.primed ? 2 * n + 1 - v.label : v.label; }

Vertex vertex_at(int n, int position) {
  return position <= n ? Vertex{position, false} : Vertex{2 * n + 1 - position, true};
}

NonCrossingMatching NonCrossingMatching::identity(int n) {
  std::vector<std::uint8_t> link(static_cast<std::size_t>(2 * n));
  for (int k = 0; k < n; ++k) {
    link[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(n + k);
    link[static_cast<std::size_t>(n + k)] = static_cast<std::uint8_t>(k);
  }
  return {n, std::move(link)};
}

NonCrossingMatching NonCrossingMatching::from_pairs(int n, const std::vector<Pair>& pairs) {
  if (n < 1 || n > 127) throw PreconditionError("matching size out of range");
  if (static_cast<int>(pairs.size()) != n) throw PreconditionError("matching must have exactly n pairs");
  std::vector<int> partner(static_cast<std::size_t>(2 * n + 1), 0);
  for (const auto& [u, v] : pairs) {
    for (Vertex x : {u, v})
      if (x.label < 1 || x.label > n) throw PreconditionError("vertex label out of range");
    const int p = circular_position(n, u), q = circular_position(n, v);
    if (p == q || partner[static_cast<std::size_t>(p)] || partner[static_cast<std::size_t>(q)])
      throw PreconditionError("not a perfect matching");
    partner[static_cast<std::size_t>(p)] = q;
    partner[static_cast<std::size_t>(q)] = p;
  }
  return from_circular(n, partner);
}

NonCrossingMatching NonCrossingMatching::from_circular(int n, const std::vector<int>& partner) {
  if (static_cast<int>(partner.size()) != 2 * n + 1) throw PreconditionError("partner table has wrong size");
  for (int p = 1; p <= 2 * n; ++p) {
    const int q = partner[static_cast<std::size_t>(p)];
    if (q < 1 || q > 2 * n || q == p || partner[static_cast<std::size_t>(q)] != p)
      throw PreconditionError("not a perfect matching");
  }
  // Planarity: scanning positions in order, arcs must close in stack order.
  std::vector<int> stack;
  for (int p = 1; p <= 2 * n; ++p) {
    const int q = partner[static_cast<std::size_t>(p)];
    if (q > p) {
      stack.push_back(p);
    } else {
      if (stack.empty() || stack.back() != q) throw PreconditionError("matching is not non-crossing");
      stack.pop_back();
    }
  }
  NonCrossingMatching m(n, std::vector<std::uint8_t>(static_cast<std::size_t>(2 * n)));
  for (int p = 1; p <= 2 * n; ++p) {
    const Vertex u = vertex_at(n, p), v = vertex_at(n, partner[static_cast<std::size_t>(p)]);
    m.link_[static_cast<std::size_t>(m.slot(u))] = static_cast<std::uint8_t>(m.slot(v));
  }
  return m;
}

NonCrossingMatching NonCrossingMatching::parse(std::string_view text) {
  auto fail = [&] { return ParseError("invalid matching '" + std::string(text) + "'"); };
  auto parse_vertex = [&](std::string_view tok) {
    Vertex v;
    if (!tok.empty() && tok.back() == '\'') {
      v.primed = true;
      tok.remove_suffix(1);
    }
    if (tok.empty() || tok.size() > 3) throw fail();
    int label = 0;
    for (char ch : tok) {
      if (ch < '0' || ch > '9') throw fail();
      label = label * 10 + (ch - '0');
    }
    v.label = label;
    return v;
  };
  std::vector<Pair> pairs;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    auto dash = token.find('-');
    if (dash == std::string::npos) throw fail();
    pairs.emplace_back(parse_vertex(std::string_view(token).substr(0, dash)),
                       parse_vertex(std::string_view(token).substr(dash + 1)));
  }
  if (pairs.empty()) throw fail();
  try {
    return from_pairs(static_cast<int>(pairs.size()), pairs);
  } catch (const PreconditionError& e) {
    throw ParseError("invalid matching '" + std::string(text) + "': " + e.what());
  }
}

Vertex NonCrossingMatching::partner(Vertex v) const {
  if (v.label < 1 || v.label > n_) throw PreconditionError("vertex label out of range");
  return vertex(link_[static_cast<std::size_t>(slot(v))]);
}

int NonCrossingMatching::circular_partner(int position) const {
  return circular_position(n_, partner(vertex_at(n_, position)));
}

std::vector<NonCrossingMatching::Pair> NonCrossingMatching::pairs() const {
  std::vector<Pair> out;
  for (int s = 0; s < 2 * n_; ++s) {
    const int t = link_[static_cast<std::size_t>(s)];
    if (s < t) out.emplace_back(vertex(s), vertex(t));
  }
  return out;
}

std::string NonCrossingMatching::str() const {
  std::string out;
  for (const auto& [u, v] : pairs()) {
    if (!out.empty()) out.push_back(' ');
    out += u.str() + "-" + v.str();
  }
  return out;
}

NonCrossingMatching generator(int n, int i) {
  if (i < 1 || i >= n) throw PreconditionError("generator index out of range");
  std::vector<NonCrossingMatching::Pair> pairs;
  for (int j = 1; j <= n; ++j)
    if (j != i && j != i + 1) pairs.emplace_back(Vertex{j, false}, Vertex{j, true});
  pairs.emplace_back(Vertex{i, false}, Vertex{i + 1, false});
  pairs.emplace_back(Vertex{i, true}, Vertex{i + 1, true});
  return NonCrossingMatching::from_pairs(n, pairs);
}

std::pair<NonCrossingMatching, int> multiply(const NonCrossingMatching& x, const NonCrossingMatching& y) {
  if (x.n_ != y.n_) throw PreconditionError("multiply: size mismatch");
  const int n = x.n_;
  // `left` contributes the unprimed boundary, `right` the primed one; the
  // middle column is left's primed side identified with right's unprimed side.
  const auto& left = y.link_;
  const auto& right = x.link_;
  std::vector<std::uint8_t> out(static_cast<std::size_t>(2 * n), 0xFF);
  std::vector<bool> middle_seen(static_cast<std::size_t>(n), false);

  auto walk = [&](bool in_left, int s) {
    for (;;) {
      if (in_left) {
        if (s < n) return s;
        middle_seen[static_cast<std::size_t>(s - n)] = true;
        s = right[static_cast<std::size_t>(s - n)];
        in_left = false;
      } else {
        if (s >= n) return s;
        middle_seen[static_cast<std::size_t>(s)] = true;
        s = left[static_cast<std::size_t>(n + s)];
        in_left = true;
      }
    }
  };

  for (int k = 0; k < n; ++k) {
    if (out[static_cast<std::size_t>(k)] == 0xFF) {
      const int end = walk(true, left[static_cast<std::size_t>(k)]);
      out[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(end);
      out[static_cast<std::size_t>(end)] = static_cast<std::uint8_t>(k);
    }
    if (out[static_cast<std::size_t>(n + k)] == 0xFF) {
      const int end = walk(false, right[static_cast<std::size_t>(n + k)]);
      out[static_cast<std::size_t>(n + k)] = static_cast<std::uint8_t>(end);
      out[static_cast<std::size_t>(end)] = static_cast<std::uint8_t>(n + k);
    }
  }

  int loops = 0;
  for (int m = 0; m < n; ++m) {
    if (middle_seen[static_cast<std::size_t>(m)]) continue;
    ++loops;
    int cur = m;
    do {
      middle_seen[static_cast<std::size_t>(cur)] = true;
      const int across = left[static_cast<std::size_t>(n + cur)] - n;
      middle_seen[static_cast<std::size_t>(across)] = true;
      cur = right[static_cast<std::size_t>(across)];
    } while (cur != m);
  }
  return {NonCrossingMatching(n, std::move(out)), loops};
}

namespace {

void enumerate_arcs(int lo, int hi, std::vector<int>& partner, const std::function<void()>& emit) {
  if (lo > hi) {
    emit();
    return;
  }
  for (int p = lo + 1; p <= hi; p += 2) {
    partner[static_cast<std::size_t>(lo)] = p;
    partner[static_cast<std::size_t>(p)] = lo;
    enumerate_arcs(lo + 1, p - 1, partner, [&] { enumerate_arcs(p + 1, hi, partner, emit); });
  }
}

}  // namespace

std::vector<NonCrossingMatching> all_matchings(int n) {
  std::vector<NonCrossingMatching> out;
  std::vector<int> partner(static_cast<std::size_t>(2 * n + 1), 0);
  enumerate_arcs(1, 2 * n, partner, [&] { out.push_back(NonCrossingMatching::from_circular(n, partner)); });
  std::sort(out.begin(), out.end());
  return out;
}

TLElement TLElement::one(int n) { return basis(NonCrossingMatching::identity(n)); }

TLElement TLElement::basis(const NonCrossingMatching& m, std::int64_t coeff) {
  TLElement e(m.size());
  e.add_term(m, coeff);
  return e;
}

std::int64_t TLElement::coeff(const NonCrossingMatching& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void TLElement::add_term(const NonCrossingMatching& m, std::int64_t coeff) {
  if (m.size() != n_) throw PreconditionError("TL element: size mismatch");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second = checked_add(it->second, coeff);
    if (it->second == 0) terms_.erase(it);
  }
}

TLElement& TLElement::operator+=(const TLElement& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

TLElement& TLElement::operator-=(const TLElement& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, checked_mul(-1, c));
  return *this;
}

TLElement operator+(TLElement x, const TLElement& y) { return x += y; }
TLElement operator-(TLElement x, const TLElement& y) { return x -= y; }

TLElement operator*(const TLElement& x, const TLElement& y) {
  if (x.size() != y.size()) throw PreconditionError("multiply: size mismatch");
  TLElement out(x.size());
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms()) {
      auto [m, loops] = multiply(mx, my);
      out.add_term(m, checked_mul(checked_mul(cx, cy), std::int64_t{1} << loops));
    }
  return out;
}

TLElement operator*(std::int64_t c, const TLElement& x) {
  TLElement out(x.size());
  for (const auto& [m, cx] : x.terms()) out.add_term(m, checked_mul(c, cx));
  return out;
}

namespace {

// x·(t_i - 1)
TLElement times_theta_generator(const TLElement& x, const NonCrossingMatching& t) {
  TLElement out(x.size());
  for (const auto& [m, c] : x.terms()) {
    auto [prod, loops] = multiply(m, t);
    out.add_term(prod, checked_mul(c, std::int64_t{1} << loops));
    out.add_term(m, checked_mul(-1, c));
  }
  return out;
}

}  // namespace

TLElement theta(const Permutation& u) {
  const int n = u.size();
  TLElement out = TLElement::one(n);
  for (int i : reduced_word(u)) out = times_theta_generator(out, generator(n, i));
  return out;
}

NonCrossingMatching beta(const Permutation& w) {
  if (!avoids_321(w)) throw PreconditionError("beta: " + w.str() + " contains 321");
  const int n = w.size();
  auto m = NonCrossingMatching::identity(n);
  for (int i : reduced_word(w)) {
    auto [next, loops] = multiply(m, generator(n, i));
    if (loops != 0) throw std::logic_error("beta: loop in a 321-avoiding product");
    m = std::move(next);
  }
  return m;
}

Permutation beta_inv(const NonCrossingMatching& m) {
  // Colour each pair so its smaller label is black (a strand i - i' colours
  // i black).  Black unprimed vertices off the i - i' strands are the
  // excedances, white primed ones their values; a 321-avoiding permutation
  // is fixed by these together with its fixed points.
  const int n = m.size();
  std::vector<int> img(static_cast<std::size_t>(n), 0);
  std::vector<int> exc_pos, exc_val, rest_pos, rest_val;
  for (int i = 1; i <= n; ++i) {
    const Vertex self{i, false};
    const Vertex p = m.partner(self);
    if (p == Vertex{i, true}) {
      img[static_cast<std::size_t>(i - 1)] = i;
      continue;
    }
    (p.label > i ? exc_pos : rest_pos).push_back(i);
    const Vertex q = m.partner(Vertex{i, true});
    (q.label < i ? exc_val : rest_val).push_back(i);
  }
  if (exc_pos.size() != exc_val.size()) throw std::logic_error("beta_inv: unbalanced colouring");
  for (std::size_t k = 0; k < exc_pos.size(); ++k) img[static_cast<std::size_t>(exc_pos[k] - 1)] = exc_val[k];
  for (std::size_t k = 0; k < rest_pos.size(); ++k) img[static_cast<std::size_t>(rest_pos[k] - 1)] = rest_val[k];
  Permutation w(img);
  if (beta(w) != m) throw std::logic_error("beta_inv: reconstruction failed for " + m.str());
  return w;
}

std::int64_t f_coeff(const Permutation& w, const Permutation& u) {
  if (w.size() != u.size()) throw PreconditionError("f_coeff: size mismatch");
  return theta(u).coeff(beta(w));
}

ThetaTable::ThetaTable(int n) : n_(n) {
  require_within(n, theta_limit(), "theta_table");
  if (n < 1) throw PreconditionError("theta_table: n must be positive");
  std::vector<NonCrossingMatching> gens;
  for (int i = 1; i < n; ++i) gens.push_back(generator(n, i));

  // Breadth-first along the weak order: θ(u·s_i) = θ(u)(t_i - 1) when u(i) < u(i+1).
  std::deque<Permutation> queue;
  auto id = Permutation::identity(n);
  table_.emplace(id, TLElement::one(n));
  queue.push_back(id);
  while (!queue.empty()) {
    Permutation u = std::move(queue.front());
    queue.pop_front();
    const TLElement& tu = table_.at(u);
    for (int i = 1; i < n; ++i) {
      if (u(i) > u(i + 1)) continue;
      Permutation v = compose(u, simple_reflection(n, i));
      if (table_.contains(v)) continue;
      auto tv = times_theta_generator(tu, gens[static_cast<std::size_t>(i - 1)]);
      table_.emplace(v, std::move(tv));
      queue.push_back(std::move(v));
    }
  }
}

const TLElement& ThetaTable::at(const Permutation& u) const {
  auto it = table_.find(u);
  if (it == table_.end()) throw PreconditionError("theta_table: permutation of wrong size");
  return it->second;
}

std::int64_t ThetaTable::coeff(const Permutation& w, const Permutation& u) const {
  return at(u).coeff(beta(w));
}

const ThetaTable& theta_table(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const ThetaTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<const ThetaTable>(n);
  return *slot;
}

}  // namespace tlimm
