#ifndef ODDMINOR_SRC_TEXT_UTIL_H_
#define ODDMINOR_SRC_TEXT_UTIL_H_

#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace oddminor::text {

struct Line {
  int number;  // 1-based
  std::string_view content;
};

/// Splits on '\n', stripping a trailing '\r' and surrounding blanks.
/// Blank lines are dropped.
inline std::vector<Line> lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  while (!text.empty() || number == 0) {
    ++number;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos) {
      const auto last = line.find_last_not_of(" \t\r");
      out.push_back({number, line.substr(first, last - first + 1)});
    }
    if (text.empty()) break;
  }
  return out;
}

inline std::vector<std::string_view> words(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

template <typename Int = long long>
std::optional<Int> to_int(std::string_view word) {
  Int value{};
  const auto* end = word.data() + word.size();
  const auto [ptr, ec] = std::from_chars(word.data(), end, value);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return value;
}

/// Comma-separated non-negative ids; an empty string is an empty list.
inline std::optional<std::vector<int>> int_list(std::string_view csv) {
  std::vector<int> out;
  if (csv.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = csv.find(',', start);
    const auto value = to_int<int>(csv.substr(start, comma - start));
    if (!value || *value < 0) return std::nullopt;
    out.push_back(*value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace oddminor::text

#endif  // ODDMINOR_SRC_TEXT_UTIL_H_
