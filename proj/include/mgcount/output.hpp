#pragma once

#include <cctype>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mgcount/big_count.hpp"

namespace mgcount {

struct OutputRecord {
  int n = 0;
  int delta = 0;
  std::string count_exact;  // full decimal digits
  std::string count_sci;    // 3 significant figures, e.g. "4.41e+3"
  std::int64_t millis = 0;
};

// Round half up to 3 significant figures: "4405" -> "4.41e+3". Zero stays "0".
inline std::string to_sci3(const BigCount& c) {
  const std::string digits = c.to_decimal();
  if (digits == "0") return "0";
  int exp = static_cast<int>(digits.size()) - 1;
  std::string m = (digits + "00").substr(0, 3);
  if (digits.size() > 3 && digits[3] >= '5') {
    int mi = std::stoi(m) + 1;
    if (mi == 1000) {
      m = "100";
      ++exp;
    } else {
      m = std::to_string(mi);
    }
  }
  return std::string(1, m[0]) + "." + m.substr(1) + "e+" + std::to_string(exp);
}

namespace detail {
// (significand digits with trailing zeros stripped, decimal exponent);
// empty digits means zero.
struct SciValue {
  std::string digits;
  long exp = 0;
  bool ok = false;
  friend bool operator==(const SciValue&, const SciValue&) = default;
};

inline SciValue parse_sci(const std::string& s) {
  SciValue out;
  std::string mant;
  long exp = 0;
  std::size_t i = 0;
  long frac_digits = 0;
  bool seen_point = false;
  for (; i < s.size() && s[i] != 'e' && s[i] != 'E'; ++i) {
    if (s[i] == '.') {
      if (seen_point) return out;
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      mant.push_back(s[i]);
      if (seen_point) ++frac_digits;
    } else {
      return out;
    }
  }
  if (mant.empty()) return out;
  if (i < s.size()) {
    ++i;  // skip e/E
    bool neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = (s[i++] == '-');
    if (i == s.size()) return out;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return out;
      exp = exp * 10 + (s[i] - '0');
    }
    if (neg) exp = -exp;
  }
  exp -= frac_digits;
  std::size_t first = mant.find_first_not_of('0');
  if (first == std::string::npos) {
    out.ok = true;  // zero
    return out;
  }
  std::size_t last = mant.find_last_not_of('0');
  exp += static_cast<long>(mant.size() - 1 - last);
  out.digits = mant.substr(first, last - first + 1);
  out.exp = exp;
  out.ok = true;
  return out;
}
}  // namespace detail

// Value comparison of scientific strings, tolerant of formatting variants
// like 4.41e3 / 4.41e+03 / 4.41E+3 / 4.410e+3.
inline bool sci_equal(const std::string& a, const std::string& b) {
  const auto pa = detail::parse_sci(a);
  const auto pb = detail::parse_sci(b);
  return pa.ok && pb.ok && pa == pb;
}

inline OutputRecord make_record(int n, int delta, const BigCount& c, std::int64_t millis) {
  return OutputRecord{n, delta, c.to_decimal(), to_sci3(c), millis};
}

inline void write_csv(std::ostream& os, const std::vector<OutputRecord>& records) {
  os << "n,delta,count_exact,count_sci,millis\n";
  for (const auto& r : records)
    os << r.n << ',' << r.delta << ',' << r.count_exact << ',' << r.count_sci << ',' << r.millis
       << '\n';
}

inline void write_json(std::ostream& os, const std::vector<OutputRecord>& records) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : records) {
    nlohmann::ordered_json obj;
    obj["n"] = r.n;
    obj["delta"] = r.delta;
    obj["count_exact"] = r.count_exact;  // strings: consumers keep full precision
    obj["count_sci"] = r.count_sci;
    obj["millis"] = r.millis;
    arr.push_back(std::move(obj));
  }
  os << arr.dump(2) << '\n';
}

inline std::vector<OutputRecord> parse_json(const std::string& text) {
  const auto arr = nlohmann::json::parse(text);
  std::vector<OutputRecord> out;
  for (const auto& obj : arr) {
    OutputRecord r;
    r.n = obj.at("n").get<int>();
    r.delta = obj.at("delta").get<int>();
    r.count_exact = obj.at("count_exact").get<std::string>();
    r.count_sci = obj.at("count_sci").get<std::string>();
    r.millis = obj.at("millis").get<std::int64_t>();
    out.push_back(std::move(r));
  }
  return out;
}

inline void write_markdown(std::ostream& os, const std::vector<OutputRecord>& records) {
  os << "| n | delta | count_exact | count_sci | millis |\n";
  os << "| --- | --- | --- | --- | --- |\n";
  for (const auto& r : records)
    os << "| " << r.n << " | " << r.delta << " | " << r.count_exact << " | " << r.count_sci
       << " | " << r.millis << " |\n";
}

}  // namespace mgcount
