#include "qtet/factorial.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>

namespace qtet {

namespace {

// deque: element references survive growth.
std::deque<mpz_class>& table() {
  static std::deque<mpz_class> tab{mpz_class(1)};
  return tab;
}

std::shared_mutex& table_mutex() {
  static std::shared_mutex m;
  return m;
}

}  // namespace

const mpz_class& factorial(unsigned n) {
  {
    std::shared_lock lock(table_mutex());
    auto& tab = table();
    if (n < tab.size()) return tab[n];
  }
  std::unique_lock lock(table_mutex());
  auto& tab = table();
  while (tab.size() <= n) {
    tab.push_back(tab.back() * static_cast<unsigned long>(tab.size()));
  }
  return tab[n];
}

}  // namespace qtet
