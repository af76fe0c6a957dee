// Copyright 2026 The psigraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <array>
#include <charconv>
#include <ostream>
#include <string>

#include "psigraph/error.hpp"
#include "psigraph/series.hpp"

namespace psigraph::series {
namespace {

Integer ParseInteger(const std::string& text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) throw InvalidInput("malformed integer: '" + text + "'");
  Integer value = 0;
  for (; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw InvalidInput("malformed integer: '" + text + "'");
    value = value * 10 + (text[i] - '0');
  }
  return negative ? Integer(-value) : value;
}

}  // namespace

std::string format_rational(const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw InvalidInput("empty rational literal");
  if (const auto slash = text.find('/'); slash != std::string::npos) {
    const Integer num = ParseInteger(text.substr(0, slash));
    const Integer den = ParseInteger(text.substr(slash + 1));
    if (den == 0) throw InvalidInput("zero denominator in '" + text + "'");
    return Rational(num, den);
  }
  if (const auto dot = text.find('.'); dot != std::string::npos) {
    const std::string whole = text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos) {
      throw InvalidInput("malformed decimal: '" + text + "'");
    }
    const bool negative = !whole.empty() && whole[0] == '-';
    const std::string digits =
        (whole.empty() || whole == "-" || whole == "+") ? std::string("0") : whole;
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const Rational value(ParseInteger(digits));
    const Rational fraction(ParseInteger(frac), scale);
    return negative ? Rational(value - fraction) : Rational(value + fraction);
  }
  return Rational(ParseInteger(text));
}

std::string format_double(double x) {
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (ec != std::errc()) return "nan";
  return std::string(buf.data(), end);
}

nlohmann::json to_json(const TruncatedSeries& a) {
  nlohmann::json coeffs = nlohmann::json::array();
  if (a.mode() == ScalarMode::kRational) {
    for (const auto& c : a.rational_coeffs()) coeffs.push_back(format_rational(c));
    return {{"mode", "rational"}, {"coeffs", coeffs}};
  }
  for (double c : a.float_coeffs()) coeffs.push_back(c);
  return {{"mode", "float"}, {"coeffs", coeffs}};
}

TruncatedSeries series_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("mode") || !j.contains("coeffs") || !j["coeffs"].is_array()) {
    throw InvalidInput("series JSON needs 'mode' and 'coeffs'");
  }
  const std::string mode = j["mode"].get<std::string>();
  if (mode == "rational") {
    std::vector<Rational> c;
    for (const auto& item : j["coeffs"]) {
      if (!item.is_string()) throw InvalidInput("rational coefficients must be strings");
      c.push_back(parse_rational(item.get<std::string>()));
    }
    return TruncatedSeries(std::move(c));
  }
  if (mode == "float") {
    std::vector<double> c;
    for (const auto& item : j["coeffs"]) {
      if (!item.is_number()) throw InvalidInput("float coefficients must be numbers");
      c.push_back(item.get<double>());
    }
    return TruncatedSeries(std::move(c));
  }
  throw InvalidInput("unknown series mode '" + mode + "'");
}

void write_csv(std::ostream& out, const TruncatedSeries& a) {
  out << "k,coeff\n";
  for (int k = 0; k <= a.degree(); ++k) {
    out << k << ',';
    if (a.mode() == ScalarMode::kRational) {
      out << format_rational(a.rational_coeffs()[static_cast<std::size_t>(k)]);
    } else {
      out << format_double(a.float_coeffs()[static_cast<std::size_t>(k)]);
    }
    out << '\n';
  }
}

}  // namespace psigraph::series
