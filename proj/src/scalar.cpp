#include "nary/scalar.hpp"

namespace nary {

std::string rat_str(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += "/";
    s += denominator(r).str();
  }
  return s;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

std::optional<Rat> try_parse_rat(std::string_view text) {
  bool neg = false;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    neg = text[0] == '-';
    text.remove_prefix(1);
  }
  std::string_view num = text, den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) return std::nullopt;
  Int n{std::string(num)};
  Int d{std::string(den)};
  if (d == 0) return std::nullopt;
  if (neg) n = -n;
  return Rat(n, d);
}

}  // namespace

Rat parse_rat(std::string_view text) {
  auto r = try_parse_rat(text);
  if (!r) throw ParseError("malformed rational literal '" + std::string(text) + "'");
  return *r;
}

std::string Scalar::str() const {
  if (om_ == 0) return rat_str(re_);
  return rat_str(re_) + "+" + rat_str(om_) + "*w";
}

std::optional<Scalar> Scalar::try_parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  // Split at the '+' that separates the rational and omega coordinates; the
  // leading coordinate may itself start with '-' or '+'.
  auto plus = text.find('+', 1);
  if (plus == std::string_view::npos) {
    auto r = try_parse_rat(text);
    if (!r) return std::nullopt;
    return Scalar(std::move(*r));
  }
  std::string_view head = text.substr(0, plus);
  std::string_view tail = text.substr(plus + 1);
  if (tail.size() < 2 || tail.substr(tail.size() - 2) != "*w") return std::nullopt;
  auto a = try_parse_rat(head);
  auto b = try_parse_rat(tail.substr(0, tail.size() - 2));
  if (!a || !b) return std::nullopt;
  return Scalar(std::move(*a), std::move(*b));
}

Scalar Scalar::parse(std::string_view text) {
  auto s = try_parse(text);
  if (!s) throw ParseError("malformed scalar literal '" + std::string(text) + "'");
  return *s;
}

}  // namespace nary
