#pragma once

// Command-line value syntax: complex numbers "a+bi" (also "3", "-2i", "i",
// "1e-3-4.5i"), comma-separated lists, and p values where "inf" is infinity.

#include <charconv>
#include <string>
#include <vector>

#include "bnineq/core.hpp"

namespace bnineq {

namespace detail {

inline double parse_real(const std::string& s, const std::string& what) {
  double v = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (!s.empty() && s[0] == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  require(ec == std::errc{} && ptr == last && first != last, "cannot parse " + what + " '" + s + "'");
  return v;
}

}  // namespace detail

inline cplx parse_complex(std::string s) {
  std::string t;
  for (char ch : s)
    if (ch != ' ') t += ch;
  require(!t.empty(), "cannot parse complex number ''");
  if (t.back() != 'i' && t.back() != 'j') return {detail::parse_real(t, "complex number"), 0.0};
  t.pop_back();
  // split at the last sign that is not an exponent sign or the leading sign
  std::size_t split = std::string::npos;
  for (std::size_t k = t.size(); k-- > 1;) {
    if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string re = split == std::string::npos ? "" : t.substr(0, split);
  std::string im = split == std::string::npos ? t : t.substr(split);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  return {re.empty() ? 0.0 : detail::parse_real(re, "complex number"), detail::parse_real(im, "complex number")};
}

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

inline std::vector<cplx> parse_complex_list(const std::string& s) {
  std::vector<cplx> out;
  for (const auto& item : split_list(s)) out.push_back(parse_complex(item));
  return out;
}

inline double parse_p(const std::string& s) {
  if (s == "inf" || s == "Inf" || s == "infinity") return kInf;
  const double p = detail::parse_real(s, "p");
  require(p >= 0.0, "p must lie in [0, inf] (got '" + s + "')");
  return p;
}

inline std::vector<double> parse_p_list(const std::string& s) {
  std::vector<double> out;
  for (const auto& item : split_list(s)) out.push_back(parse_p(item));
  return out;
}

}  // namespace bnineq
