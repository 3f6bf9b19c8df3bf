#include "ajt/budget.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

#include "ajt/errors.hpp"

namespace ajt {

std::uint64_t saturating_pow(std::uint64_t p, std::uint64_t e) noexcept {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (p != 0 && r > UINT64_MAX / p) return UINT64_MAX;
    r *= p;
  }
  return r;
}

Budget Budget::parse(std::string_view spec) { return parse(spec, Budget{}); }

Budget Budget::parse(std::string_view spec, Budget base) {
  while (!spec.empty()) {
    auto comma = spec.find(',');
    auto item = spec.substr(0, comma);
    spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos) throw InputError("budget item without '=': " + std::string(item));
    auto key = item.substr(0, eq);
    auto text = item.substr(eq + 1);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value == 0) {
      throw InputError("budget value must be a positive integer: " + std::string(item));
    }
    if (key == "entries") {
      base.max_entries = value;
    } else if (key == "nodes") {
      base.max_nodes = value;
    } else if (key == "enumeration") {
      base.max_enumeration = value;
    } else {
      throw InputError("unknown budget key: " + std::string(key));
    }
  }
  return base;
}

Budget Budget::from_env() {
  const char* env = std::getenv("AJT_BUDGET");
  return env ? parse(env) : Budget{};
}

}  // namespace ajt
