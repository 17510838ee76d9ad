#pragma once

namespace tlimm {

// Size caps for computations that enumerate all of S_n.  Both honour the
// TLIMM_MAX_N environment variable when it is set to a positive integer.
//
// Rough memory at the defaults: S_8 immanants hold 40320 coefficients each;
// a theta table at n = 7 stores 5040 elements with at most 429 terms apiece
// (about 2.2M entries), while n = 8 would need roughly 57M entries.
inline constexpr int kDefaultMaxN = 8;
inline constexpr int kDefaultThetaLimit = 7;

int max_n();
int theta_limit();

// Throws LimitError when n exceeds `limit`.
void require_within(int n, int limit, const char* what);

}  // namespace tlimm
