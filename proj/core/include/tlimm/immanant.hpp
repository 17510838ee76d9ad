#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "tlimm/perm.hpp"
#include "tlimm/rational.hpp"

namespace tlimm {

/// Skew shape λ/μ inside the n×n box: row i holds columns μ_i+1 .. λ_i.
class SkewShape {
 public:
  /// Validates both sequences (non-increasing, within [0, n], μ_i <= λ_i).
  SkewShape(int n, std::vector<int> lambda, std::vector<int> mu);

  static SkewShape full(int n);

  /// Shape whose cells are exactly `cells` (row-major n×n mask); nullopt when
  /// the mask is not a skew shape.
  static std::optional<SkewShape> from_cells(int n, const std::vector<bool>& cells);

  int size() const noexcept { return n_; }
  const std::vector<int>& lambda() const noexcept { return lambda_; }
  const std::vector<int>& mu() const noexcept { return mu_; }
  bool contains(int row, int col) const;
  std::vector<bool> cells() const;

  friend bool operator==(const SkewShape&, const SkewShape&) = default;

 private:
  int n_;
  std::vector<int> lambda_, mu_;
};

SkewShape hull(const Permutation& w);
bool lies_in(const Permutation& s, const SkewShape& shape);
bool shape_leq(const SkewShape& s1, const SkewShape& s2);

/// Integer-valued function on S_n, stored sparsely in lexicographic order.
class Immanant {
 public:
  using Coeffs = std::map<Permutation, std::int64_t>;

  explicit Immanant(int n) : n_(n) {}

  int size() const noexcept { return n_; }
  const Coeffs& coeffs() const noexcept { return coeffs_; }
  std::int64_t coeff(const Permutation& u) const;
  bool is_zero() const noexcept { return coeffs_.empty(); }

  void add_term(const Permutation& u, std::int64_t c);

  friend bool operator==(const Immanant&, const Immanant&) = default;

 private:
  int n_;
  Coeffs coeffs_;
};

/// Square matrix of exact rationals, 1-based access.
class RationalMatrix {
 public:
  explicit RationalMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n * n)) {}
  static RationalMatrix identity(int n);

  int size() const noexcept { return n_; }
  Rational& operator()(int i, int j) { return entries_[index(i, j)]; }
  const Rational& operator()(int i, int j) const { return entries_[index(i, j)]; }

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>((i - 1) * n_ + (j - 1)); }
  int n_;
  std::vector<Rational> entries_;
};

Immanant determinant_immanant(int n);
Immanant percent_immanant(const SkewShape& shape);

/// u ↦ f_w(u) for a 321-avoiding w.
Immanant tl_immanant(const Permutation& w);

/// tl_immanant(w) for every 321-avoiding w in S_n, from one pass over the theta table.
std::map<Permutation, Immanant> all_tl_immanants(int n);

/// u ↦ sign(u) when u(I) = J.
Immanant cm_immanant(int n, const IndexSet& I, const IndexSet& J);

Rational evaluate(const Immanant& f, const RationalMatrix& X);

Immanant add(const Immanant& f, const Immanant& g);
Immanant scale(const Immanant& f, std::int64_t c);
/// Throws std::domain_error when a coefficient would leave the integers.
Immanant scale(const Immanant& f, const Rational& c);
inline bool equal(const Immanant& f, const Immanant& g) { return f == g; }

/// Coefficient of σ moves to σ^{-1}.
Immanant s_transform(const Immanant& f);
/// Coefficient of σ moves to w0·σ·w0.
Immanant t_transform(const Immanant& f);

/// All unordered 1324-adjacent pairs (w < w2) of S_n, cached per n.
const std::vector<std::pair<Permutation, Permutation>>& adjacent_pairs(int n);

/// First adjacent pair with f(w) != -f(w2), if any.
std::optional<std::pair<Permutation, Permutation>> sign_alternation_violation(const Immanant& f);
bool is_1324_sign_alternating(const Immanant& f);

/// Classes of the transitive closure of 1324-adjacency; each class sorted and
/// the classes ordered by their smallest member.  Cached per n.
const std::vector<std::vector<Permutation>>& related_classes(int n);

/// χ for the class containing w: Σ sign(σ) x_σ over the class.
Immanant class_immanant(const Permutation& w);

struct BasisTerm {
  Permutation representative;
  Rational coefficient;
  friend bool operator==(const BasisTerm&, const BasisTerm&) = default;
};

/// f = Σ c · χ over class representatives (smallest member of each class).
/// Throws PreconditionError naming an offending pair when f is not sign-alternating.
std::vector<BasisTerm> percent_basis_decompose(const Immanant& f);
Immanant percent_basis_reconstruct(int n, const std::vector<BasisTerm>& terms);

/// 0/1 matrix separating a 321-, 1324-avoiding, 2143-containing w from the
/// %-immanants.  With k = max(w(1), n+1-w^{-1}(n)) and r = n+1-k it has ones on
/// the antidiagonal and at (1,1), (1,k), (r,1), (r,n), (n,k), (n,n), so rows
/// 1, r and n coincide.
struct ConverseFixture {
  int row;
  int column;
  RationalMatrix matrix;
  SkewShape shape;  // hull(w): holds every nonzero entry except (1,1) and (n,n)
};
ConverseFixture converse_fixture(const Permutation& w);

}  // namespace tlimm
