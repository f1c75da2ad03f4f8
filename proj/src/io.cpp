#include "modcodes/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "modcodes/error.hpp"

namespace modcodes {

namespace {

std::vector<long long> parse_numbers(std::string_view line) {
  std::vector<long long> values;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    long long value = 0;
    const char* first = line.data() + i;
    const char* last = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || (ptr != last && *ptr != ' ' && *ptr != '\t' && *ptr != '\r')) {
      throw InvalidArgument("malformed number in '" + std::string(line) + "'");
    }
    values.push_back(value);
    i = static_cast<std::size_t>(ptr - line.data());
  }
  return values;
}

bool skippable(std::string_view line) {
  for (char c : line) {
    if (c == '#') return true;
    if (c != ' ' && c != '\t' && c != '\r') return false;
  }
  return true;
}

}  // namespace

ZqVector parse_vector(std::string_view line, RingSpec ring) {
  const auto values = parse_numbers(line);
  return ZqVector::from_values(ring, values);
}

ZqVector parse_vector(std::string_view line, RingSpec ring, std::size_t n) {
  auto v = parse_vector(line, ring);
  if (v.size() != n) {
    throw InvalidArgument("expected " + std::to_string(n) + " coordinates, got " + std::to_string(v.size()));
  }
  return v;
}

std::string format_vector(const ZqVector& v) { return v.to_string(); }

LinearCode read_matrix(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  int s = 0;
  std::size_t n = 0;
  GeneratorMatrix rows;
  std::optional<RingSpec> ring;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    try {
      if (!have_header) {
        const auto header = parse_numbers(line);
        if (header.size() != 2) throw InvalidArgument("header must be \"s n\"");
        if (header[0] < 1 || header[0] > 8) throw InvalidArgument("s must lie in 1..8");
        if (header[1] < 0) throw InvalidArgument("n must be nonnegative");
        s = static_cast<int>(header[0]);
        n = static_cast<std::size_t>(header[1]);
        ring.emplace(s);
        have_header = true;
      } else {
        rows.push_back(parse_vector(line, *ring, n));
      }
    } catch (const InvalidArgument& e) {
      throw InvalidArgument("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!have_header) throw InvalidArgument("matrix file has no \"s n\" header");
  return LinearCode(*ring, n, std::move(rows));
}

LinearCode read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open matrix file '" + path + "'");
  try {
    return read_matrix(in);
  } catch (const InvalidArgument& e) {
    throw InvalidArgument(path + ": " + e.what());
  }
}

LinearCode parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_matrix(in);
}

void write_matrix(std::ostream& out, RingSpec ring, std::size_t n, const GeneratorMatrix& rows) {
  out << ring.s() << ' ' << n << '\n';
  for (const auto& row : rows) out << row.to_string() << '\n';
}

void write_matrix(std::ostream& out, const LinearCode& code) {
  write_matrix(out, code.ring(), code.length(), code.generators());
}

std::string format_matrix(const LinearCode& code) {
  std::ostringstream out;
  write_matrix(out, code);
  return out.str();
}

}  // namespace modcodes
