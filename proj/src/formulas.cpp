#include "starcrit/formulas.hpp"

#include <string>

namespace starcrit {

std::string_view to_string(CaseTag tag) {
  switch (tag) {
  case CaseTag::both_even_small_n:
    return "both_even_small_n";
  case CaseTag::odd_small_n:
    return "odd_small_n";
  case CaseTag::large_n:
    return "large_n";
  }
  return "unknown";
}

std::optional<CaseTag> parse_case_tag(std::string_view text) {
  for (CaseTag tag : {CaseTag::both_even_small_n, CaseTag::odd_small_n, CaseTag::large_n})
    if (to_string(tag) == text)
      return tag;
  return std::nullopt;
}

CaseTag classify(int n, int m) {
  if (n < 3 || m < 3)
    throw DomainError("formulas hold for n, m >= 3; got (" + std::to_string(n) + ", " +
                      std::to_string(m) + ")");
  if (n > m - 2)
    return CaseTag::large_n;
  if (n % 2 == 0 && m % 2 == 0)
    return CaseTag::both_even_small_n;
  return CaseTag::odd_small_n;
}

int r_formula(int n, int m) {
  switch (classify(n, m)) {
  case CaseTag::both_even_small_n:
    return n + m - 1;
  case CaseTag::odd_small_n:
    return n + m;
  case CaseTag::large_n:
    return 2 * n + 1;
  }
  return 0;
}

int r_star_formula(int n, int m) {
  switch (classify(n, m)) {
  case CaseTag::both_even_small_n:
    return n + m - 2;
  case CaseTag::odd_small_n:
    return 1;
  case CaseTag::large_n:
    return n + 1;
  }
  return 0;
}

} // namespace starcrit
