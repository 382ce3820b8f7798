#include "rainbow/budget.hpp"

#include <cstdlib>
#include <sstream>

#include "rainbow/errors.hpp"

namespace rainbow {

namespace {

auto parse_count(const std::string& s) -> std::size_t {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    throw ParseError("bad budget value '" + s + "'");
  }
  if (pos != s.size()) throw ParseError("bad budget value '" + s + "'");
  return static_cast<std::size_t>(v);
}

}  // namespace

auto Budget::parse(const std::string& text) -> Budget {
  Budget b;
  if (text.empty()) return b;
  if (text.find('=') == std::string::npos) {
    b.nullity_cap = parse_count(text);
    return b;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("bad budget item '" + item + "'");
    auto key = item.substr(0, eq);
    auto value = parse_count(item.substr(eq + 1));
    if (key == "nullity")
      b.nullity_cap = value;
    else if (key == "census")
      b.census_cap = value;
    else
      throw ParseError("unknown budget key '" + key + "'");
  }
  return b;
}

auto Budget::from_env() -> Budget {
  const char* v = std::getenv("RAINBOW_FORGE_BUDGET");
  return v ? parse(v) : Budget{};
}

auto Budget::current() -> const Budget& {
  static const Budget b = from_env();
  return b;
}

}  // namespace rainbow
