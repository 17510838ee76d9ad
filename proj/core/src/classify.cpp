#include "tlimm/classify.hpp"

#include <algorithm>
#include <stdexcept>

#include "tlimm/detail/checked.hpp"
#include "tlimm/error.hpp"
#include "tlimm/limits.hpp"
#include "tlimm/tl.hpp"

namespace tlimm {

namespace {

const Permutation& pattern(const char* text) {
  // Patterns are parsed once; the set is small and fixed.
  static const std::map<std::string, Permutation, std::less<>> table = [] {
    std::map<std::string, Permutation, std::less<>> t;
    for (const char* p : {"321", "1324", "2143", "24153", "31524", "231564", "312645"})
      t.emplace(p, Permutation::parse(p));
    return t;
  }();
  return table.find(text)->second;
}

bool has(const Permutation& w, const char* p) {
  const auto& v = pattern(p);
  return v.size() <= w.size() && contains_pattern(w, v);
}

void require_321_1324_avoiding(const Permutation& w, const char* op) {
  if (!avoids_321(w)) throw PreconditionError(std::string(op) + ": " + w.str() + " contains 321");
  if (has(w, "1324")) throw PreconditionError(std::string(op) + ": " + w.str() + " contains 1324");
}

void require_2143_case(const Permutation& w, const char* op) {
  require_321_1324_avoiding(w, op);
  if (!has(w, "2143")) throw PreconditionError(std::string(op) + ": " + w.str() + " avoids 2143");
}

// Appends lo..hi (inclusive, possibly empty) to out.
void append_range(std::vector<int>& out, int lo, int hi) {
  for (int x = lo; x <= hi; ++x) out.push_back(x);
}

int count_in(const Permutation& u, int row_lo, int row_hi, int col_lo, int col_hi) {
  int k = 0;
  for (int i = std::max(row_lo, 1); i <= std::min(row_hi, u.size()); ++i)
    if (col_lo <= u(i) && u(i) <= col_hi) ++k;
  return k;
}

std::vector<IndexSet> subsets(int lo, int hi, int k) {
  std::vector<IndexSet> out;
  const int m = hi - lo + 1;
  if (k < 0 || k > std::max(m, 0)) return out;
  IndexSet cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int x = next; x <= hi - (k - static_cast<int>(cur.size())) + 1; ++x) {
      cur.push_back(x);
      self(self, x + 1);
      cur.pop_back();
    }
  };
  rec(rec, lo);
  return out;
}

IndexSet set_union(const IndexSet& x, const IndexSet& y) {
  IndexSet out;
  std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::string to_string(const CaseParams& params) {
  if (const auto* p = std::get_if<Case1Params>(&params)) {
    return "Case1(a=" + std::to_string(p->a) + ",b=" + std::to_string(p->b) + ",e=" + std::to_string(p->e) +
           ",c=" + std::to_string(p->c) + ",d=" + std::to_string(p->d) + ")";
  }
  const auto& q = std::get<Case2Params>(params);
  return "Case2(a=" + std::to_string(q.a) + ",e=" + std::to_string(q.e) + ",b=" + std::to_string(q.b) +
         ",c=" + std::to_string(q.c) + ",f=" + std::to_string(q.f) + ",d=" + std::to_string(q.d) + ")";
}

CornerParams corner_params(const Permutation& w) {
  const int n = w.size();
  const auto inv = inverse(w);
  return {inv(1) - 1, w(1) - 1, n - w(n), n - inv(n)};
}

bool avoids_main_patterns(const Permutation& w) {
  if (!avoids_321(w)) throw PreconditionError("avoids_main_patterns: " + w.str() + " contains 321");
  for (const char* p : {"1324", "24153", "31524", "231564", "312645"})
    if (has(w, p)) return false;
  return true;
}

Permutation build_case1(int a, int b, int e, int c, int d) {
  if (a < 1 || b < 1 || c < 1 || d < 1 || e < 0) throw PreconditionError("build_case1: invalid parameters");
  const int n = a + b + e + c + d;
  std::vector<int> img;
  append_range(img, b + 1, b + a);
  append_range(img, 1, b);
  append_range(img, b + a + 1, b + a + e);
  append_range(img, n - c + 1, n);
  append_range(img, n - c - d + 1, n - c);
  return Permutation(img);
}

Permutation build_case2(int a, int e, int b, int c, int f, int d) {
  if (a < 1 || b < 1 || c < 1 || d < 1 || e < 0 || f < 0 || std::max(e, f) < 1)
    throw PreconditionError("build_case2: invalid parameters");
  const int n = a + e + b + c + f + d;
  std::vector<int> img;
  append_range(img, b + f + 1, b + f + a);
  append_range(img, n - c - e + 1, n - c);
  append_range(img, 1, b);
  append_range(img, n - c + 1, n);
  append_range(img, b + 1, b + f);
  append_range(img, n - d - c - e + 1, n - c - e);
  return Permutation(img);
}

Permutation build(const CaseParams& params) {
  return std::visit(
      [](const auto& p) {
        if constexpr (std::is_same_v<std::decay_t<decltype(p)>, Case1Params>)
          return build_case1(p.a, p.b, p.e, p.c, p.d);
        else
          return build_case2(p.a, p.e, p.b, p.c, p.f, p.d);
      },
      params);
}

CaseParams classify_2143(const Permutation& w) {
  require_2143_case(w, "classify_2143");
  const int n = w.size();
  const auto [a1, b1, c1, d1] = corner_params(w);
  CaseParams params;
  if (a1 + b1 + c1 + d1 <= n) {
    params = Case1Params{a1, b1, n - a1 - b1 - c1 - d1, c1, d1};
  } else {
    // Of the first a' entries, the small ones form the a-block; of the last d'
    // entries, those at most b' form the f-block.
    const int a = count_in(w, 1, a1, 1, n - c1);
    const int f = count_in(w, n - d1 + 1, n, 1, b1);
    params = Case2Params{a, a1 - a, b1 - f, c1 - (a1 - a), f, d1 - f};
  }
  if (build(params) != w) throw std::logic_error("classify_2143: block reading failed for " + w.str());
  return params;
}

std::int64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = detail::checked_mul(r, n - k + i) / i;
  return r;
}

std::int64_t closed_form_coeff(const Permutation& w, const Permutation& u) {
  if (w.size() != u.size()) throw PreconditionError("closed_form_coeff: size mismatch");
  require_321_1324_avoiding(w, "closed_form_coeff");
  const int n = w.size();
  const int s = sign(w) * sign(u);
  if (!has(w, "2143")) return lies_in(u, hull(w)) ? s : 0;

  const auto params = classify_2143(w);
  if (const auto* p = std::get_if<Case1Params>(&params)) {
    const auto [a, b, e, c, d] = *p;
    if (count_in(u, 1, a, 1, b) > 0 || count_in(u, n + 1 - d, n, n + 1 - c, n) > 0) return 0;
    // A: rows [1,a] landing in the last c columns.  B: rows [n+1-d,n] landing
    // in the first b columns.
    const int A = count_in(u, 1, a, n + 1 - c, n);
    const int B = count_in(u, n + 1 - d, n, 1, b);
    return s * binomial(A + B, A);
  }
  const auto [a, e, b, c, f, d] = std::get<Case2Params>(params);
  if (count_in(u, 1, a + e, 1, b + f) > 0 || count_in(u, a + e + b + c + 1, n, b + f + a + d + 1, n) > 0) return 0;
  const int A = c - count_in(u, a + e + 1, a + e + b + c, b + f + a + d + 1, n);
  const int B = b - count_in(u, a + e + 1, a + e + b + c, 1, b + f);
  return s * binomial(A + B, A);
}

std::int64_t antidiag_coeff(const Permutation& w) {
  const auto params = classify_2143(w);
  int a, b, c, d;
  if (const auto* p = std::get_if<Case1Params>(&params)) {
    a = p->a, b = p->b, c = p->c, d = p->d;
  } else {
    const auto& q = std::get<Case2Params>(params);
    a = q.a, b = q.b, c = q.c, d = q.d;
  }
  return binomial(std::min(a, c) + std::min(b, d), std::min(b, d));
}

bool shortlex_less(const IndexSet& x, const IndexSet& y) {
  if (x.size() != y.size()) return x.size() < y.size();
  return x < y;
}

std::vector<CmTerm> cm_expansion(const Permutation& w) {
  const auto params = classify_2143(w);
  const int n = w.size();
  std::vector<CmTerm> out;
  if (const auto* p = std::get_if<Case1Params>(&params)) {
    const auto [a, b, e, c, d] = *p;
    for (int k = 0; k <= std::min(a, b); ++k)
      for (int l = 0; l <= std::min(c, d); ++l)
        for (const auto& I1 : subsets(1, a, k))
          for (const auto& I2 : subsets(1, b, k))
            for (const auto& I3 : subsets(n - d + 1, n, l))
              for (const auto& I4 : subsets(n - c + 1, n, l))
                out.push_back({(k + l) % 2 == 0 ? 1 : -1, set_union(I1, I3), set_union(I2, I4)});
  } else {
    const auto [a, e, b, c, f, d] = std::get<Case2Params>(params);
    IndexSet head, tail;
    append_range(head, 1, a + e);
    append_range(tail, b + f + a + d + 1, n);
    for (const auto& I1 : subsets(a + e + 1, a + e + b + c, c))
      for (const auto& I2 : subsets(b + f + 1, b + f + a + d, a))
        out.push_back({1, set_union(head, I1), set_union(I2, tail)});
  }
  std::sort(out.begin(), out.end(), [](const CmTerm& x, const CmTerm& y) {
    if (x.I != y.I) return shortlex_less(x.I, y.I);
    return shortlex_less(x.J, y.J);
  });
  return out;
}

std::vector<RectTerm> rect_cm_expansion(const Permutation& w) {
  require_321_1324_avoiding(w, "rect_cm_expansion");
  if (has(w, "2143")) throw PreconditionError("rect_cm_expansion: " + w.str() + " contains 2143");
  const int n = w.size();
  if (!(w(1) == 1 || w(1) == w(n) + 1))
    throw PreconditionError("rect_cm_expansion: " + w.str() + " is not in normal form");
  const auto inv = inverse(w);
  const int k = w(n);
  IndexSet forced, J;
  append_range(forced, inv(n) + 1, n);
  append_range(J, 1, k);
  std::vector<RectTerm> out;
  for (const auto& free : subsets(inv(1), inv(n), k - static_cast<int>(forced.size())))
    out.push_back({set_union(free, forced), J});
  std::sort(out.begin(), out.end(), [](const RectTerm& x, const RectTerm& y) { return shortlex_less(x.I, y.I); });
  return out;
}

Permutation apply(Transform t, const Permutation& w) {
  return t == Transform::S ? inverse(w) : w0_conjugate(w);
}

Immanant apply(Transform t, const Immanant& f) { return t == Transform::S ? s_transform(f) : t_transform(f); }

Reduction reduce_to_special(const Permutation& w) {
  require_321_1324_avoiding(w, "reduce_to_special");
  if (has(w, "2143")) throw PreconditionError("reduce_to_special: " + w.str() + " contains 2143");
  const int n = w.size();
  if (w(1) == 1) return {w, {}};
  if (w(n) == n) return {w0_conjugate(w), {Transform::T}};
  if (w(1) > w(n)) {
    if (w(1) != w(n) + 1) throw std::logic_error("reduce_to_special: w(1) != w(n) + 1 for " + w.str());
    return {w, {}};
  }
  auto v = inverse(w);
  if (!(v(1) == v(n) + 1)) throw std::logic_error("reduce_to_special: inverse not in normal form for " + w.str());
  return {v, {Transform::S}};
}

std::string to_string(Decomposition::Kind kind) {
  switch (kind) {
    case Decomposition::Kind::One: return "one";
    case Decomposition::Kind::Two: return "two";
    case Decomposition::Kind::None: return "none";
  }
  return "none";
}

namespace {

std::size_t cell(int n, int i, int j) { return static_cast<std::size_t>((i - 1) * n + (j - 1)); }

SkewShape shape_from(int n, const std::vector<bool>& cells) {
  auto shape = SkewShape::from_cells(n, cells);
  if (!shape) throw std::logic_error("decompose: constructed cell set is not a skew shape");
  return *shape;
}

// Shapes for a 2143-containing w whose first-case parameters have a = 1, or
// c = 1 handled by reflecting w0·w^{-1}·w0.
std::vector<SkewShape> two_shapes(const Permutation& w, bool reflected) {
  const int n = w.size();
  const auto params = classify_2143(w);
  const auto* p = std::get_if<Case1Params>(&params);
  if (p == nullptr) throw std::logic_error("decompose: expected first-case parameters for " + w.str());
  const auto [a, b, e, c, d] = *p;
  const SkewShape first = hull(w);
  auto cells = first.cells();
  auto clear = [&](int r0, int r1, int c0, int c1) {
    for (int i = r0; i <= r1; ++i)
      for (int j = c0; j <= c1; ++j) cells[cell(n, i, j)] = false;
  };
  if (a == 1 && (b == 1 || d == 1)) {
    clear(1, 1, 1, n - c);
    if (b == 1) {
      clear(1, n - d, 1, 1);
      clear(n - d + 1, n, n - c + 1, n);
    } else {
      clear(n, n, b + 1, n);
    }
    return {first, shape_from(n, cells)};
  }
  if (c == 1 && !reflected) {
    auto shapes = two_shapes(w0_conjugate(inverse(w)), true);
    for (auto& shape : shapes) {
      const auto src = shape.cells();
      std::vector<bool> dst(src.size());
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) dst[cell(n, i, j)] = src[cell(n, n + 1 - j, n + 1 - i)];
      shape = shape_from(n, dst);
    }
    return shapes;
  }
  throw std::logic_error("decompose: no two-shape rule applies to " + w.str());
}

}  // namespace

Decomposition decompose(const Permutation& w, const DecomposeOptions& options) {
  if (!avoids_321(w)) throw PreconditionError("decompose: " + w.str() + " contains 321");
  Decomposition out;
  if (!has(w, "1324") && !has(w, "2143")) {
    out.kind = Decomposition::Kind::One;
    out.shapes = {hull(w)};
  } else if (avoids_main_patterns(w)) {
    out.kind = Decomposition::Kind::Two;
    out.shapes = two_shapes(w, false);
  } else {
    return out;
  }
  out.sign = sign(w);
  const int n = w.size();
  if (options.validate && n <= options.oracle_limit && n <= std::min(max_n(), theta_limit())) {
    Immanant sum(n);
    for (const auto& shape : out.shapes) sum = add(sum, percent_immanant(shape));
    if (sum != scale(tl_immanant(w), static_cast<std::int64_t>(out.sign)))
      throw std::logic_error("decompose: shape sum disagrees with the TL immanant of " + w.str());
  }
  return out;
}

}  // namespace tlimm
