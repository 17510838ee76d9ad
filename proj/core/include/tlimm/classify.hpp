#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "tlimm/immanant.hpp"
#include "tlimm/perm.hpp"

namespace tlimm {

// Block lengths of a 321-, 1324-avoiding, 2143-containing permutation.  The
// first shape reads (b+1..b+a : 1..b : b+a+1..b+a+e : n-c+1..n : n-c-d+1..n-c).
struct Case1Params {
  int a = 1, b = 1, e = 0, c = 1, d = 1;
  int n() const { return a + b + e + c + d; }
  friend bool operator==(const Case1Params&, const Case1Params&) = default;
};

// Second shape: (b+f+1..b+f+a : n-c-e+1..n-c : 1..b : n-c+1..n : b+1..b+f : n-d-c-e+1..n-c-e).
struct Case2Params {
  int a = 1, e = 0, b = 1, c = 1, f = 0, d = 1;
  int n() const { return a + e + b + c + f + d; }
  friend bool operator==(const Case2Params&, const Case2Params&) = default;
};

using CaseParams = std::variant<Case1Params, Case2Params>;

std::string to_string(const CaseParams& params);

struct CornerParams {
  int a, b, c, d;  // w^{-1}(1)-1, w(1)-1, n-w(n), n-w^{-1}(n)
  friend bool operator==(const CornerParams&, const CornerParams&) = default;
};

CornerParams corner_params(const Permutation& w);

/// 321-avoiding w avoids 1324, 24153, 31524, 231564 and 312645.
bool avoids_main_patterns(const Permutation& w);

CaseParams classify_2143(const Permutation& w);
Permutation build_case1(int a, int b, int e, int c, int d);
Permutation build_case2(int a, int e, int b, int c, int f, int d);
Permutation build(const CaseParams& params);

/// C(n, k), zero when n or k is negative or k > n.
std::int64_t binomial(int n, int k);

/// f_w(u) from the closed forms; w must avoid 321 and 1324.
std::int64_t closed_form_coeff(const Permutation& w, const Permutation& u);

/// |f_w(w0)| for 321-, 1324-avoiding, 2143-containing w.
std::int64_t antidiag_coeff(const Permutation& w);

struct CmTerm {
  int sign;
  IndexSet I, J;
  friend bool operator==(const CmTerm&, const CmTerm&) = default;
};

/// Shortlex order on index sets: by size, then lexicographically.
bool shortlex_less(const IndexSet& x, const IndexSet& y);

/// Signed complementary minors with sign(w)·Σ sign·CM_{I,J} = Imm_w.
std::vector<CmTerm> cm_expansion(const Permutation& w);

struct RectTerm {
  IndexSet I, J;
  friend bool operator==(const RectTerm&, const RectTerm&) = default;
};

/// For w in normal form (w(1) = 1 or w(1) = w(n)+1): Σ CM_{I,[1,w(n)]} = Imm^%(hull(w)).
std::vector<RectTerm> rect_cm_expansion(const Permutation& w);

enum class Transform { S, T };

/// S: inverse.  T: w0-conjugation.
Permutation apply(Transform t, const Permutation& w);
Immanant apply(Transform t, const Immanant& f);

struct Reduction {
  Permutation reduced;
  std::vector<Transform> transforms;
};

/// Brings a 321-, 1324-, 2143-avoiding w to normal form.
Reduction reduce_to_special(const Permutation& w);

struct Decomposition {
  enum class Kind { One, Two, None };
  Kind kind = Kind::None;
  int sign = 1;  // sign(w) for One/Two; left at 1 for None
  std::vector<SkewShape> shapes;
};

std::string to_string(Decomposition::Kind kind);

struct DecomposeOptions {
  bool validate = true;  // compare against the TL immanant when n <= oracle_limit
  int oracle_limit = 6;
};

/// sign(w)·Imm_w as a sum of one or two %-immanants, or None.
Decomposition decompose(const Permutation& w, const DecomposeOptions& options = {});

}  // namespace tlimm
