#include "scott/rank_value.hpp"

namespace scott {

RankValue RankValue::parse(const std::string& text) {
  if (text == "omega") return omega();
  if (text == "inf") return infinity();
  try {
    std::size_t used = 0;
    int n = std::stoi(text, &used);
    if (used != text.size() || n < 0) throw std::invalid_argument(text);
    return finite(n);
  } catch (const std::exception&) {
    throw ValidationError("malformed rank/budget literal: '" + text + "'");
  }
}

}  // namespace scott
