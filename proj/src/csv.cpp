#include <charconv>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "fcpso/problems.hpp"

namespace fcpso {
namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool parse_double(const std::string& text, double& out) {
  const std::string t = trim(text);
  if (t.empty()) return false;
  const char* first = t.data();
  const char* last = t.data() + t.size();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

} // namespace

Front parse_front_csv(const std::string& text, const std::string& origin) {
  Front front;
  std::istringstream in(text);
  std::string line;
  std::size_t row = 0;
  std::size_t width = 0;
  bool first_content = true;
  while (std::getline(in, line)) {
    ++row;
    if (trim(line).empty()) continue;
    const auto fields = split_fields(trim(line));
    ObjectiveVector point;
    point.reserve(fields.size());
    bool numeric = true;
    for (const auto& f : fields) {
      double v = 0.0;
      if (!parse_double(f, v)) {
        numeric = false;
        break;
      }
      point.push_back(v);
    }
    if (!numeric) {
      if (first_content) {  // header row
        width = fields.size();
        first_content = false;
        continue;
      }
      throw FrontParseError(fmt::format("{}: row {}: non-numeric field", origin, row));
    }
    if (width == 0) width = point.size();
    if (point.size() != width)
      throw FrontParseError(
          fmt::format("{}: row {}: expected {} columns, found {}", origin, row, width, point.size()));
    first_content = false;
    front.push_back(std::move(point));
  }
  return front;
}

Front load_reference_front(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FrontParseError(fmt::format("cannot open front file '{}'", path.string()));
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_front_csv(buf.str(), path.string());
}

std::string format_front_csv(const Front& front) {
  const std::size_t k = front.empty() ? 0 : front.front().size();
  std::string out;
  for (std::size_t j = 0; j < k; ++j) out += fmt::format("{}f{}", j ? "," : "", j + 1);
  out += '\n';
  for (const auto& p : front) {
    for (std::size_t j = 0; j < p.size(); ++j) out += fmt::format("{}{}", j ? "," : "", p[j]);
    out += '\n';
  }
  return out;
}

void write_front_csv(const std::filesystem::path& path, const Front& front) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw std::runtime_error(fmt::format("cannot write '{}'", path.string()));
  out << format_front_csv(front);
}

} // namespace fcpso
