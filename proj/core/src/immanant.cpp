#include "tlimm/immanant.hpp"

#include <algorithm>
#include <limits>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "tlimm/detail/checked.hpp"
#include "tlimm/error.hpp"
#include "tlimm/limits.hpp"
#include "tlimm/tl.hpp"

namespace tlimm {

using detail::checked_add;
using detail::checked_mul;

namespace {

std::size_t at(int i) { return static_cast<std::size_t>(i - 1); }

void require_same_size(int a, int b, const char* op) {
  if (a != b) throw PreconditionError(std::string(op) + ": size mismatch");
}

// Caches a value per n behind one mutex; values are never evicted.
template <class T, class Make>
const T& cached(std::map<int, std::unique_ptr<const T>>& cache, std::mutex& mutex, int n, Make make) {
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<const T>(make());
  return *slot;
}

}  // namespace

SkewShape::SkewShape(int n, std::vector<int> lambda, std::vector<int> mu)
    : n_(n), lambda_(std::move(lambda)), mu_(std::move(mu)) {
  if (n < 1 || static_cast<int>(lambda_.size()) != n || static_cast<int>(mu_.size()) != n)
    throw PreconditionError("skew shape: lambda and mu need n entries");
  for (int i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    if (lambda_[k] < 0 || lambda_[k] > n || mu_[k] < 0 || mu_[k] > lambda_[k])
      throw PreconditionError("skew shape: entries out of range");
    if (i > 0 && (lambda_[k] > lambda_[k - 1] || mu_[k] > mu_[k - 1]))
      throw PreconditionError("skew shape: lambda and mu must be non-increasing");
  }
}

SkewShape SkewShape::full(int n) {
  return SkewShape(n, std::vector<int>(static_cast<std::size_t>(n), n), std::vector<int>(static_cast<std::size_t>(n), 0));
}

std::optional<SkewShape> SkewShape::from_cells(int n, const std::vector<bool>& cells) {
  if (static_cast<int>(cells.size()) != n * n) return std::nullopt;
  std::vector<int> lambda(static_cast<std::size_t>(n), -1), mu(static_cast<std::size_t>(n), -1);
  for (int i = 1; i <= n; ++i) {
    int first = 0, last = 0;
    for (int j = 1; j <= n; ++j) {
      if (!cells[at(i) * static_cast<std::size_t>(n) + at(j)]) continue;
      if (!first) first = j;
      last = j;
    }
    if (first) {
      mu[at(i)] = first - 1;
      lambda[at(i)] = last;
    }
  }
  // An empty row may sit anywhere between its neighbours; pin it just above the next row.
  for (int i = n; i >= 1; --i) {
    if (lambda[at(i)] >= 0) continue;
    const int t = i < n ? lambda[at(i + 1)] : 0;
    lambda[at(i)] = mu[at(i)] = t;
  }
  try {
    SkewShape shape(n, lambda, mu);
    if (shape.cells() != cells) return std::nullopt;
    return shape;
  } catch (const PreconditionError&) {
    return std::nullopt;
  }
}

bool SkewShape::contains(int row, int col) const {
  if (row < 1 || row > n_ || col < 1 || col > n_) return false;
  return mu_[at(row)] < col && col <= lambda_[at(row)];
}

std::vector<bool> SkewShape::cells() const {
  std::vector<bool> out(static_cast<std::size_t>(n_ * n_), false);
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) out[at(i) * static_cast<std::size_t>(n_) + at(j)] = contains(i, j);
  return out;
}

SkewShape hull(const Permutation& w) {
  const int n = w.size();
  std::vector<int> lambda(static_cast<std::size_t>(n)), mu(static_cast<std::size_t>(n));
  int low = n + 1;
  for (int i = 1; i <= n; ++i) {
    low = std::min(low, w(i));
    mu[at(i)] = low - 1;
  }
  int high = 0;
  for (int i = n; i >= 1; --i) {
    high = std::max(high, w(i));
    lambda[at(i)] = high;
  }
  return SkewShape(n, lambda, mu);
}

bool lies_in(const Permutation& s, const SkewShape& shape) {
  require_same_size(s.size(), shape.size(), "lies_in");
  for (int i = 1; i <= s.size(); ++i)
    if (!shape.contains(i, s(i))) return false;
  return true;
}

bool shape_leq(const SkewShape& s1, const SkewShape& s2) {
  require_same_size(s1.size(), s2.size(), "shape_leq");
  for (int i = 1; i <= s1.size(); ++i)
    for (int j = 1; j <= s1.size(); ++j)
      if (s1.contains(i, j) && !s2.contains(i, j)) return false;
  return true;
}

std::int64_t Immanant::coeff(const Permutation& u) const {
  auto it = coeffs_.find(u);
  return it == coeffs_.end() ? 0 : it->second;
}

void Immanant::add_term(const Permutation& u, std::int64_t c) {
  require_same_size(u.size(), n_, "immanant");
  if (c == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(u, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) coeffs_.erase(it);
  }
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n);
  for (int i = 1; i <= n; ++i) m(i, i) = 1;
  return m;
}

Immanant determinant_immanant(int n) { return percent_immanant(SkewShape::full(n)); }

Immanant percent_immanant(const SkewShape& shape) {
  const int n = shape.size();
  require_within(n, max_n(), "percent_immanant");
  Immanant out(n);
  std::vector<int> row(static_cast<std::size_t>(n));
  std::vector<bool> used(static_cast<std::size_t>(n + 1), false);
  // Rows are filled top to bottom; `inversions` counts used columns to the right.
  auto place = [&](auto&& self, int i, int inversions) -> void {
    if (i > n) {
      out.add_term(Permutation(row), inversions % 2 == 0 ? 1 : -1);
      return;
    }
    for (int j = shape.mu()[at(i)] + 1; j <= shape.lambda()[at(i)]; ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      int above = 0;
      for (int k = j + 1; k <= n; ++k) above += used[static_cast<std::size_t>(k)] ? 1 : 0;
      used[static_cast<std::size_t>(j)] = true;
      row[at(i)] = j;
      self(self, i + 1, inversions + above);
      used[static_cast<std::size_t>(j)] = false;
    }
  };
  place(place, 1, 0);
  return out;
}

Immanant tl_immanant(const Permutation& w) {
  if (!avoids_321(w)) throw PreconditionError("tl_immanant: " + w.str() + " contains 321");
  const int n = w.size();
  require_within(n, std::min(max_n(), theta_limit()), "tl_immanant");
  const auto& table = theta_table(n);
  const auto diagram = beta(w);
  Immanant out(n);
  for (const auto& [u, element] : table.entries()) out.add_term(u, element.coeff(diagram));
  return out;
}

std::map<Permutation, Immanant> all_tl_immanants(int n) {
  require_within(n, std::min(max_n(), theta_limit()), "all_tl_immanants");
  std::map<Permutation, Immanant> out;
  std::map<NonCrossingMatching, Immanant*> by_diagram;
  for (const auto& m : all_matchings(n)) by_diagram[m] = &out.emplace(beta_inv(m), Immanant(n)).first->second;
  for (const auto& [u, element] : theta_table(n).entries())
    for (const auto& [m, c] : element.terms()) by_diagram.at(m)->add_term(u, c);
  return out;
}

namespace {

void require_subset(int n, const IndexSet& s, const char* what) {
  for (std::size_t k = 0; k < s.size(); ++k)
    if (s[k] < 1 || s[k] > n || (k > 0 && s[k] <= s[k - 1]))
      throw PreconditionError(std::string(what) + ": not a sorted subset of [n]");
}

IndexSet complement(int n, const IndexSet& s) {
  IndexSet out;
  for (int i = 1; i <= n; ++i)
    if (!std::binary_search(s.begin(), s.end(), i)) out.push_back(i);
  return out;
}

}  // namespace

Immanant cm_immanant(int n, const IndexSet& I, const IndexSet& J) {
  require_subset(n, I, "cm_immanant");
  require_subset(n, J, "cm_immanant");
  if (I.size() != J.size()) throw PreconditionError("cm_immanant: |I| != |J|");
  require_within(n, max_n(), "cm_immanant");
  const IndexSet Ic = complement(n, I), Jc = complement(n, J);
  Immanant out(n);
  std::vector<int> img(static_cast<std::size_t>(n));
  IndexSet inner = J;
  do {
    IndexSet outer = Jc;
    do {
      for (std::size_t k = 0; k < I.size(); ++k) img[at(I[k])] = inner[k];
      for (std::size_t k = 0; k < Ic.size(); ++k) img[at(Ic[k])] = outer[k];
      Permutation u(img);
      out.add_term(u, sign(u));
    } while (std::next_permutation(outer.begin(), outer.end()));
  } while (std::next_permutation(inner.begin(), inner.end()));
  return out;
}

Rational evaluate(const Immanant& f, const RationalMatrix& X) {
  require_same_size(f.size(), X.size(), "evaluate");
  Rational total = 0;
  for (const auto& [u, c] : f.coeffs()) {
    Rational term = c;
    for (int i = 1; i <= u.size() && term != 0; ++i) term *= X(i, u(i));
    total += term;
  }
  return total;
}

Immanant add(const Immanant& f, const Immanant& g) {
  require_same_size(f.size(), g.size(), "add");
  Immanant out = f;
  for (const auto& [u, c] : g.coeffs()) out.add_term(u, c);
  return out;
}

Immanant scale(const Immanant& f, std::int64_t c) {
  Immanant out(f.size());
  for (const auto& [u, x] : f.coeffs()) out.add_term(u, checked_mul(c, x));
  return out;
}

Immanant scale(const Immanant& f, const Rational& c) {
  Immanant out(f.size());
  for (const auto& [u, x] : f.coeffs()) {
    Rational y = c * x;
    if (denominator(y) != 1) throw std::domain_error("scale: coefficient leaves the integers");
    const BigInt& num = numerator(y);
    if (num > std::numeric_limits<std::int64_t>::max() || num < std::numeric_limits<std::int64_t>::min())
      throw std::overflow_error("integer coefficient overflow");
    out.add_term(u, num.convert_to<std::int64_t>());
  }
  return out;
}

Immanant s_transform(const Immanant& f) {
  Immanant out(f.size());
  for (const auto& [u, c] : f.coeffs()) out.add_term(inverse(u), c);
  return out;
}

Immanant t_transform(const Immanant& f) {
  Immanant out(f.size());
  for (const auto& [u, c] : f.coeffs()) out.add_term(w0_conjugate(u), c);
  return out;
}

const std::vector<std::pair<Permutation, Permutation>>& adjacent_pairs(int n) {
  require_within(n, max_n(), "adjacent_pairs");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const std::vector<std::pair<Permutation, Permutation>>>> cache;
  return cached(cache, mutex, n, [n] {
    std::vector<std::pair<Permutation, Permutation>> pairs;
    for (const auto& w : all_permutations(n)) {
      auto img = w.images();
      for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
          std::swap(img[at(a)], img[at(b)]);
          Permutation w2(img);
          std::swap(img[at(a)], img[at(b)]);
          if (w < w2 && is_1324_adjacent(w, w2)) pairs.emplace_back(w, std::move(w2));
        }
    }
    return pairs;
  });
}

std::optional<std::pair<Permutation, Permutation>> sign_alternation_violation(const Immanant& f) {
  for (const auto& [w, w2] : adjacent_pairs(f.size()))
    if (f.coeff(w) != -f.coeff(w2)) return std::pair{w, w2};
  return std::nullopt;
}

bool is_1324_sign_alternating(const Immanant& f) { return !sign_alternation_violation(f).has_value(); }

const std::vector<std::vector<Permutation>>& related_classes(int n) {
  require_within(n, max_n(), "related_classes");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const std::vector<std::vector<Permutation>>>> cache;
  const auto& pairs = adjacent_pairs(n);
  return cached(cache, mutex, n, [n, &pairs] {
    const auto perms = all_permutations(n);
    std::unordered_map<Permutation, std::size_t> index;
    for (std::size_t k = 0; k < perms.size(); ++k) index.emplace(perms[k], k);
    std::vector<std::size_t> parent(perms.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& [w, w2] : pairs) {
      auto x = find(index.at(w)), y = find(index.at(w2));
      if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }
    // Roots are the smallest member of each class, so classes come out ordered.
    std::vector<std::vector<Permutation>> classes;
    std::unordered_map<std::size_t, std::size_t> slot;
    for (std::size_t k = 0; k < perms.size(); ++k) {
      auto root = find(k);
      auto [it, fresh] = slot.try_emplace(root, classes.size());
      if (fresh) classes.emplace_back();
      classes[it->second].push_back(perms[k]);
    }
    return classes;
  });
}

Immanant class_immanant(const Permutation& w) {
  for (const auto& cls : related_classes(w.size())) {
    if (!std::binary_search(cls.begin(), cls.end(), w)) continue;
    Immanant out(w.size());
    for (const auto& s : cls) out.add_term(s, sign(s));
    return out;
  }
  throw std::logic_error("class_immanant: permutation not found in any class");
}

std::vector<BasisTerm> percent_basis_decompose(const Immanant& f) {
  if (auto bad = sign_alternation_violation(f)) {
    const auto& [w, w2] = *bad;
    throw PreconditionError("not in the %-immanant span: f(" + w.str() + ") = " + std::to_string(f.coeff(w)) +
                            " but f(" + w2.str() + ") = " + std::to_string(f.coeff(w2)));
  }
  std::vector<BasisTerm> out;
  for (const auto& cls : related_classes(f.size())) {
    const auto& rep = cls.front();
    if (auto c = f.coeff(rep); c != 0) out.push_back({rep, Rational(c * sign(rep))});
  }
  return out;
}

Immanant percent_basis_reconstruct(int n, const std::vector<BasisTerm>& terms) {
  Immanant out(n);
  for (const auto& t : terms) out = add(out, scale(class_immanant(t.representative), t.coefficient));
  return out;
}

ConverseFixture converse_fixture(const Permutation& w) {
  if (!avoids_321(w) || contains_pattern(w, Permutation::parse("1324")) ||
      avoids(w, Permutation::parse("2143")))
    throw PreconditionError("converse_fixture: needs w avoiding 321 and 1324 and containing 2143");
  const int n = w.size();
  const int column = std::max(w(1), n + 1 - inverse(w)(n));
  const int row = n + 1 - column;
  RationalMatrix X(n);
  for (int i = 1; i <= n; ++i) X(i, n + 1 - i) = 1;
  for (auto [i, j] : {std::pair{1, 1}, {1, column}, {row, 1}, {row, n}, {n, column}, {n, n}}) X(i, j) = 1;
  return {row, column, std::move(X), hull(w)};
}

}  // namespace tlimm
