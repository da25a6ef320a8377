#include "symchar/text_format.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace symchar {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view tok, std::string_view whole) {
  tok = trim(tok);
  int v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
    throw std::invalid_argument("bad partition token '" + std::string(tok) + "' in '" + std::string(whole) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

std::string signed_sum(const std::vector<std::pair<Integer, std::string>>& terms) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, label] : terms) {
    const Integer mag = c < 0 ? Integer(-c) : c;
    if (first) os << (c < 0 ? "-" : "");
    else os << (c < 0 ? " - " : " + ");
    first = false;
    if (mag != 1) os << mag;
    os << label;
  }
  return os.str();
}

} // namespace

std::string_view kind_name(LabelKind k) {
  switch (k) {
  case LabelKind::gl: return "gl";
  case LabelKind::o: return "o";
  case LabelKind::sp: return "sp";
  case LabelKind::thibon: return "thibon";
  case LabelKind::reduced: return "reduced";
  }
  return "gl";
}

Partition parse_partition(std::string_view text) {
  std::string_view s = trim(text);
  bool exponent_form = false;
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw std::invalid_argument("unterminated partition '" + std::string(text) + "'");
    s = trim(s.substr(1, s.size() - 2));
    exponent_form = true;
  }
  if (s.empty() || s == "0") return {};
  std::vector<int> parts;
  for (std::string_view tok : split(s, ',')) {
    const auto caret = tok.find('^');
    if (caret != std::string_view::npos) {
      if (!exponent_form) throw std::invalid_argument("exponents need the bracketed form: '" + std::string(text) + "'");
      const int part = parse_int(tok.substr(0, caret), text);
      const int mult = parse_int(tok.substr(caret + 1), text);
      if (mult < 0 || mult > kMaxPartitionWeight) throw std::invalid_argument("bad multiplicity in '" + std::string(text) + "'");
      parts.insert(parts.end(), static_cast<std::size_t>(mult), part);
    } else {
      parts.push_back(parse_int(tok, text));
    }
  }
  for (int p : parts)
    if (p < 0) throw std::invalid_argument("negative part in '" + std::string(text) + "'");
  if (exponent_form) std::sort(parts.begin(), parts.end(), std::greater<>());
  else if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>()))
    throw std::invalid_argument("parts of '" + std::string(text) + "' are not weakly decreasing");
  long total = 0;
  for (int p : parts) total += p;
  if (total > kMaxPartitionWeight)
    throw std::invalid_argument("partition '" + std::string(text) + "' exceeds weight " + std::to_string(kMaxPartitionWeight));
  return Partition(std::move(parts));
}

PartitionPair parse_rational_label(std::string_view text) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) throw std::invalid_argument("rational label '" + std::string(text) + "' needs ';'");
  return {parse_partition(text.substr(0, semi)), parse_partition(text.substr(semi + 1))};
}

std::string format_label(const Partition& p, LabelKind k) {
  const std::string body = to_string(p);
  switch (k) {
  case LabelKind::gl: return "s[" + body + "]";
  case LabelKind::o: return "[" + body + "]";
  case LabelKind::sp: return "<" + body + ">";
  case LabelKind::thibon: return "<<" + body + ">>";
  case LabelKind::reduced: return "<" + body + ">";
  }
  return body;
}

std::string format(const SymFunc& f, LabelKind k) {
  std::vector<std::pair<Integer, std::string>> terms;
  for (const auto& [p, c] : f) terms.emplace_back(c, format_label(p, k));
  return signed_sum(terms);
}

std::string format(const TensorSymFunc& t) {
  std::vector<std::pair<Integer, std::string>> terms;
  for (const auto& [k, c] : t)
    terms.emplace_back(c, format_label(k.first, LabelKind::gl) + "(x)" + format_label(k.second, LabelKind::gl));
  return signed_sum(terms);
}

std::string format_rational(const TensorSymFunc& t) {
  std::vector<std::pair<Integer, std::string>> terms;
  for (const auto& [k, c] : t) terms.emplace_back(c, "{" + to_string(k.first) + ";" + to_string(k.second) + "}");
  return signed_sum(terms);
}

} // namespace symchar
