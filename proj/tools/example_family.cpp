// Library walk-through: a local value, the word tree behind it, the global
// bound, and a family verdict.

#include "multbound/rigidity.hpp"
#include "multbound/words.hpp"

#include <iostream>

int main() {
  using namespace multbound;

  std::cout << "mubar(36,4) = " << mubar({36, 4}) << '\n';

  const auto words = worst_case_words({12, 3});
  std::cout << words.size() << " worst-case words from (12,3), prefix-free: "
            << (check_prefix_free(words) ? "yes" : "no") << '\n';
  for (std::size_t i = 0; i < 3 && i < words.size(); ++i) std::cout << "  " << to_string(words[i]) << '\n';

  const GlobalRow row = mubar_total(16);
  std::cout << "mubar_total(16) = " << row.value << " at " << to_string(row.maximizers.front())
            << '\n';

  const Verdict v = check_family(FamilyParams(5, 3));
  std::cout << "family (5,3): " << status_name(v.status) << ", bound " << v.bound << " vs "
            << to_string(v.threshold) << '\n';
}
