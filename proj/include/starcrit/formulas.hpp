#pragma once

// Closed forms for r(K_{1,n}, K_{1,m}+e) and the star-critical number
// r_*(K_{1,n}, K_{1,m}+e), valid for n, m >= 3.

#include <optional>
#include <stdexcept>
#include <string_view>

namespace starcrit {

class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Which piecewise branch a parameter pair (n, m) falls into.
enum class CaseTag {
  both_even_small_n, ///< n, m both even and n <= m - 2
  odd_small_n,       ///< n or m odd and n <= m - 2
  large_n,           ///< n > m - 2
};

std::string_view to_string(CaseTag tag);
std::optional<CaseTag> parse_case_tag(std::string_view text);

CaseTag classify(int n, int m);

/// n+m-1, n+m or 2n+1 by branch.
int r_formula(int n, int m);

/// n+m-2, 1 or n+1 by branch (smallest k with K_{r-1} + K_{1,k} arrowing).
int r_star_formula(int n, int m);

} // namespace starcrit
