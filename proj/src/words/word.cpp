#include <functional>
#include <string>

#include "cgw/error.hpp"
#include "cgw/words.hpp"

namespace cgw {

namespace {

constexpr std::uint32_t kMaxVariables = 9;
constexpr std::int64_t kMaxPower = 1000;

class WordParser {
 public:
  explicit WordParser(std::string_view text) : text_(text) {}

  Word parse() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty word", pos_);
    Word w = sequence('\0');
    if (pos_ != text_.size()) throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return w;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  bool at_stop(char stop) const {
    if (pos_ >= text_.size()) return true;
    return text_[pos_] == stop;
  }

  Word sequence(char stop) {
    Word w;
    skip_space();
    while (!at_stop(stop)) {
      const char c = text_[pos_];
      if (c == ']' || c == ')' || c == ',') throw ParseError(std::string("unexpected '") + c + "'", pos_);
      w = w * term();
      skip_space();
    }
    return w;
  }

  Word term() {
    Word a = atom();
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_space();
      const std::size_t start = pos_;
      bool negative = false;
      if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) negative = text_[pos_++] == '-';
      std::int64_t k = 0;
      std::size_t digits = 0;
      while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
        k = k * 10 + (text_[pos_++] - '0');
        if (k > kMaxPower) throw ParseError("exponent too large", start);
        ++digits;
      }
      if (digits == 0) throw ParseError("expected an integer exponent", pos_);
      a = a.power(negative ? -k : k);
    }
    return a;
  }

  Word atom() {
    const std::size_t start = pos_;
    const char c = text_[pos_];
    if (c == 'x') {
      ++pos_;
      if (pos_ >= text_.size() || text_[pos_] < '1' || text_[pos_] > '9')
        throw ParseError("expected a variable index 1-9", pos_);
      return Word::variable(static_cast<std::uint32_t>(text_[pos_++] - '1'));
    }
    if (c == '[') {
      ++pos_;
      Word u = sequence(',');
      expect(',', start);
      Word v = sequence(']');
      expect(']', start);
      return Word::commutator(u, v);
    }
    if (c == '(') {
      ++pos_;
      Word u = sequence(')');
      expect(')', start);
      return u;
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  void expect(char c, std::size_t opened_at) {
    if (pos_ >= text_.size()) throw ParseError(std::string("missing '") + c + "' for bracket opened", opened_at);
    if (text_[pos_] != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Word::Word(std::vector<Letter> letters) {
  for (const Letter& l : letters) {
    if (l.variable >= kMaxVariables || (l.exponent != 1 && l.exponent != -1))
      throw std::invalid_argument("invalid letter");
    if (!letters_.empty() && letters_.back().variable == l.variable && letters_.back().exponent == -l.exponent)
      letters_.pop_back();
    else
      letters_.push_back(l);
  }
}

std::uint32_t Word::arity() const noexcept {
  std::uint32_t a = 0;
  for (const auto& l : letters_) a = std::max<std::uint32_t>(a, l.variable + 1u);
  return a;
}

Word Word::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l.exponent = static_cast<std::int8_t>(-l.exponent);
  return Word(std::move(out));
}

Word Word::operator*(const Word& o) const {
  std::vector<Letter> out = letters_;
  out.insert(out.end(), o.letters_.begin(), o.letters_.end());
  return Word(std::move(out));
}

Word Word::power(std::int64_t k) const {
  const Word base = k < 0 ? inverse() : *this;
  Word out;
  for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) out = out * base;
  return out;
}

Word Word::variable(std::uint32_t index) {
  if (index >= kMaxVariables) throw std::invalid_argument("variable index out of range");
  return Word({Letter{static_cast<std::uint8_t>(index), 1}});
}

Word Word::commutator(const Word& u, const Word& v) { return u.inverse() * v.inverse() * u * v; }

Word Word::substitute(const std::vector<Word>& images) const {
  Word out;
  for (const auto& l : letters_) {
    if (l.variable >= images.size()) throw std::invalid_argument("no image for variable x" + std::to_string(l.variable + 1));
    out = out * (l.exponent > 0 ? images[l.variable] : images[l.variable].inverse());
  }
  return out;
}

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (const auto& l : letters_) {
    s += 'x';
    s += static_cast<char>('1' + l.variable);
    if (l.exponent < 0) s += "^-1";
  }
  return s;
}

Word parse_word(std::string_view text) { return WordParser(text).parse(); }

CommutatorShape CommutatorShape::leaf(std::uint32_t variable) {
  if (variable >= kMaxVariables) throw std::invalid_argument("variable index out of range");
  CommutatorShape s;
  s.variable_ = variable;
  return s;
}

CommutatorShape CommutatorShape::bracket(const CommutatorShape& left, const CommutatorShape& right) {
  CommutatorShape s;
  s.left_ = std::make_shared<const CommutatorShape>(left);
  s.right_ = std::make_shared<const CommutatorShape>(right);
  return s;
}

CommutatorShape CommutatorShape::parse(std::string_view text) {
  std::size_t pos = 0;
  std::function<CommutatorShape()> node = [&]() -> CommutatorShape {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos >= text.size()) throw ParseError("unexpected end of shape", pos);
    if (text[pos] == 'x') {
      ++pos;
      if (pos >= text.size() || text[pos] < '1' || text[pos] > '9') throw ParseError("expected a variable index 1-9", pos);
      return leaf(static_cast<std::uint32_t>(text[pos++] - '1'));
    }
    if (text[pos] != '[') throw ParseError(std::string("unexpected '") + text[pos] + "'", pos);
    ++pos;
    CommutatorShape l = node();
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos >= text.size() || text[pos] != ',') throw ParseError("expected ','", pos);
    ++pos;
    CommutatorShape r = node();
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos >= text.size() || text[pos] != ']') throw ParseError("expected ']'", pos);
    ++pos;
    return bracket(l, r);
  };
  CommutatorShape s = node();
  if (pos != text.size()) throw ParseError("trailing characters after shape", pos);
  if (!s.valid()) throw ParseError("shape leaves must be the distinct variables x1..xm", 0);
  return s;
}

std::uint32_t CommutatorShape::leaves() const { return is_leaf() ? 1 : left_->leaves() + right_->leaves(); }

bool CommutatorShape::valid() const {
  std::vector<std::uint32_t> seen;
  std::function<void(const CommutatorShape&)> walk = [&](const CommutatorShape& s) {
    if (s.is_leaf()) {
      seen.push_back(s.variable_);
      return;
    }
    walk(*s.left_);
    walk(*s.right_);
  };
  walk(*this);
  std::vector<bool> hit(seen.size(), false);
  for (auto v : seen) {
    if (v >= seen.size() || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

std::string CommutatorShape::to_string() const {
  if (is_leaf()) return "x" + std::to_string(variable_ + 1);
  return "[" + left_->to_string() + "," + right_->to_string() + "]";
}

std::vector<CommutatorShape> CommutatorShape::all(std::uint32_t m) {
  std::function<std::vector<CommutatorShape>(std::uint32_t, std::uint32_t)> range = [&](std::uint32_t lo, std::uint32_t hi) {
    std::vector<CommutatorShape> out;
    if (hi - lo == 1) {
      out.push_back(leaf(lo));
      return out;
    }
    for (std::uint32_t mid = lo + 1; mid < hi; ++mid)
      for (const auto& l : range(lo, mid))
        for (const auto& r : range(mid, hi)) out.push_back(bracket(l, r));
    return out;
  };
  if (m == 0 || m > kMaxVariables) throw std::invalid_argument("shapes need 1 to 9 leaves");
  return range(0, m);
}

Word shape_to_word(const CommutatorShape& shape) {
  if (shape.is_leaf()) return Word::variable(shape.variable_);
  return Word::commutator(shape_to_word(*shape.left_), shape_to_word(*shape.right_));
}

}  // namespace cgw
