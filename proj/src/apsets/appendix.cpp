#include <algorithm>
#include <charconv>
#include <string>

#include "ajt/apsets.hpp"
#include "ajt/appendix_data.hpp"
#include "ajt/errors.hpp"

namespace ajt {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s, std::size_t line) {
  s = trim(s);
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw InputError("appendix line " + std::to_string(line) + ": bad integer '" +
                     std::string(s) + "'");
  return v;
}

}  // namespace

std::vector<AppendixRow> parse_appendix(std::string_view csv) {
  std::vector<AppendixRow> rows;
  std::size_t line_no = 0;
  while (!csv.empty()) {
    auto nl = csv.find('\n');
    auto line = csv.substr(0, nl);
    csv.remove_prefix(nl == std::string_view::npos ? csv.size() : nl + 1);
    ++line_no;
    if (trim(line).empty()) continue;
    if (line_no == 1 && line.starts_with("p,")) continue;

    auto q1 = line.find('"');
    auto q2 = q1 == std::string_view::npos ? q1 : line.find('"', q1 + 1);
    if (q2 == std::string_view::npos)
      throw InputError("appendix line " + std::to_string(line_no) + ": missing quoted set");
    auto head = trim(line.substr(0, q1));
    auto tail = trim(line.substr(q2 + 1));
    if (!head.ends_with(',') || !tail.starts_with(','))
      throw InputError("appendix line " + std::to_string(line_no) + ": malformed row");
    head.remove_suffix(1);
    tail.remove_prefix(1);

    const auto pv = parse_int(head, line_no);
    if (pv < 2) throw InvalidPrime("appendix line " + std::to_string(line_no));
    Prime p(static_cast<std::uint64_t>(pv));
    auto construction = std::string(trim(line.substr(q1 + 1, q2 - q1 - 1)));
    std::vector<std::int64_t> elems;
    std::string_view rest = construction;
    while (!rest.empty()) {
      auto comma = rest.find(',');
      elems.push_back(parse_int(rest.substr(0, comma), line_no));
      rest.remove_prefix(comma == std::string_view::npos ? rest.size() : comma + 1);
    }
    const auto size = parse_int(tail, line_no);
    if (size < 0) throw InputError("appendix line " + std::to_string(line_no) + ": size");
    rows.push_back(
        AppendixRow{p, construction, ResidueSet(p, elems), static_cast<std::size_t>(size)});
  }
  return rows;
}

std::string_view appendix_csv() { return detail::kAppendixCsv; }

const std::vector<AppendixRow>& appendix_rows() {
  static const std::vector<AppendixRow> rows = parse_appendix(appendix_csv());
  return rows;
}

std::optional<AppendixRow> appendix_row(std::uint64_t p) {
  for (const auto& r : appendix_rows())
    if (r.prime.value() == p) return r;
  return std::nullopt;
}

bool AppendixReport::pass() const noexcept {
  return primes_match && std::all_of(rows.begin(), rows.end(),
                                     [](const AppendixRowReport& r) { return r.pass(); });
}

AppendixReport verify_appendix(const std::vector<AppendixRow>& rows) {
  AppendixReport report;
  std::vector<std::uint64_t> expected, seen;
  for (std::uint64_t q = 62; q < 199; ++q)
    if (q != 79 && is_prime(q)) expected.push_back(q);
  expected.push_back(257);
  for (const auto& row : rows) {
    const auto q = row.prime.value();
    seen.push_back(q);
    AppendixRowReport r{};
    r.p = q;
    r.stated_size = row.size;
    r.actual_size = row.set.size();
    r.s1_type = is_sk_type(row.set, 1).ok();
    r.size_matches = r.actual_size == r.stated_size;
    r.square_below = r.actual_size * r.actual_size < q - 1;
    report.rows.push_back(r);
  }
  std::sort(seen.begin(), seen.end());
  report.primes_match = seen == expected;
  return report;
}

AppendixReport verify_appendix() { return verify_appendix(appendix_rows()); }

}  // namespace ajt
