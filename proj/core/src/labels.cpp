#include <cctype>
#include <charconv>
#include <cstdlib>
#include <string>

#include "psc/error.hpp"
#include "psc/rep_ring.hpp"

namespace psc {

std::string format_label(const AlgebraSignature& sig, const Weight& labels) {
  std::string s = "[";
  for (std::size_t f = 0; f < sig.factor_count(); ++f) {
    if (f) s += '|';
    const std::size_t off = sig.offset(f);
    for (int i = 0; i < sig.rank(f); ++i) {
      if (i) s += ',';
      s += std::to_string(labels[off + i]);
    }
  }
  return s + "]";
}

std::string format_label(const IrrepLabel& r) { return format_label(r.signature, r.labels); }

std::string format_rep(const VirtualRep& v) {
  if (v.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : v.terms()) {
    const std::int64_t mag = c < 0 ? -c : c;
    if (first)
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    if (mag != 1) s += std::to_string(mag);
    s += format_label(v.signature(), w);
    first = false;
  }
  return s;
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view t) : t_(t) {}

  void skip_space() {
    while (i_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[i_]))) ++i_;
  }
  bool done() {
    skip_space();
    return i_ == t_.size();
  }
  char peek() {
    skip_space();
    return i_ < t_.size() ? t_[i_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++i_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  std::int64_t integer() {
    skip_space();
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(t_.data() + i_, t_.data() + t_.size(), v);
    if (ec != std::errc()) fail("expected a nonnegative integer");
    i_ = static_cast<std::size_t>(p - t_.data());
    return v;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(i_) + " in \"" + std::string(t_) +
                     "\"");
  }

 private:
  std::string_view t_;
  std::size_t i_ = 0;
};

IrrepLabel parse_label_at(Cursor& cur) {
  cur.expect('[');
  std::vector<int> ranks;
  Weight w;
  std::size_t k = 0;
  int in_factor = 0;
  while (true) {
    if (!cur.at_digit()) cur.fail("expected a nonnegative Dynkin label");
    if (k >= kMaxTotalRank) cur.fail("more than 8 Dynkin labels");
    w[k++] = static_cast<int>(cur.integer());
    ++in_factor;
    if (cur.accept(',')) continue;
    if (cur.accept('|')) {
      ranks.push_back(in_factor);
      in_factor = 0;
      continue;
    }
    cur.expect(']');
    ranks.push_back(in_factor);
    break;
  }
  return IrrepLabel{AlgebraSignature(std::span<const int>(ranks)), w};
}

}  // namespace

IrrepLabel parse_label(std::string_view text) {
  Cursor cur(text);
  IrrepLabel r = parse_label_at(cur);
  if (!cur.done()) cur.fail("trailing characters");
  return r;
}

IrrepLabel parse_label(std::string_view text, const AlgebraSignature& expected) {
  IrrepLabel r = parse_label(text);
  if (r.signature != expected)
    throw SignatureMismatch("label " + std::string(text) + " is not a " + expected.name() +
                            " label");
  return r;
}

VirtualRep parse_rep(std::string_view text, std::optional<AlgebraSignature> expected) {
  Cursor cur(text);
  if (cur.peek() == '0') {
    cur.integer();
    if (!cur.done()) cur.fail("trailing characters after 0");
    if (!expected) cur.fail("the zero representation needs a known algebra");
    return VirtualRep(*expected);
  }
  VirtualRep out = expected ? VirtualRep(*expected) : VirtualRep();
  bool first = true;
  while (!cur.done()) {
    int sign = 1;
    if (cur.accept('-'))
      sign = -1;
    else if (!cur.accept('+') && !first)
      cur.fail("expected '+' or '-'");
    std::int64_t coeff = 1;
    if (cur.at_digit()) coeff = cur.integer();
    IrrepLabel label = parse_label_at(cur);
    if (out.signature().empty()) out = VirtualRep(label.signature);
    if (label.signature != out.signature())
      throw SignatureMismatch("mixed signatures in \"" + std::string(text) + "\"");
    out.add_term(label.labels, sign * coeff);
    first = false;
  }
  if (first) cur.fail("empty representation");
  return out;
}

}  // namespace psc
