#include <cctype>
#include <charconv>
#include <limits>
#include <string>

#include "modalwb/error.hpp"
#include "modalwb/formula.hpp"

namespace modalwb {

namespace {

constexpr std::size_t kMaxVariable = std::numeric_limits<std::int32_t>::max();

bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

class Parser {
 public:
  Parser(std::string_view text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

  Formula run() {
    Formula f = implication();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_ + 1); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (accept("->")) return Formula::implication(lhs, implication());
    return lhs;
  }

  Formula disjunction() {
    Formula acc = conjunction();
    while (accept("|")) acc = Formula::disjunction(acc, conjunction());
    return acc;
  }

  Formula conjunction() {
    Formula acc = unary();
    while (accept("&")) acc = Formula::conjunction(acc, unary());
    return acc;
  }

  ModalityId modality_name(char close) {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    if (pos_ == start) fail("expected a modality name");
    const std::string name(text_.substr(start, pos_ - start));
    if (pos_ >= text_.size() || text_[pos_] != close) fail(std::string("expected '") + close + "'");
    auto id = alphabet_.find(name);
    if (!id) {
      pos_ = start;
      fail("unknown modality '" + name + "'");
    }
    ++pos_;
    return *id;
  }

  Formula unary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '~') {
      ++pos_;
      return Formula::negation(unary());
    }
    if (c == '<') {
      ++pos_;
      const ModalityId id = modality_name('>');
      return Formula::diamond(id, unary());
    }
    if (c == '[') {
      ++pos_;
      const ModalityId id = modality_name(']');
      return Formula::box(id, unary());
    }
    if (c == '(') {
      ++pos_;
      Formula inner = implication();
      if (!accept(")")) fail("expected ')'");
      return inner;
    }
    return atom();
  }

  Formula atom() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    const std::string_view word = text_.substr(start, pos_ - start);
    if (word == "true") return Formula::verum();
    if (word == "false") return Formula::falsum();
    if (word.size() >= 2 && word[0] == 'p') {
      std::size_t index = 0;
      const char* first = word.data() + 1;
      const char* last = word.data() + word.size();
      auto [ptr, ec] = std::from_chars(first, last, index);
      if (ec == std::errc() && ptr == last) {
        if (index > kMaxVariable) {
          pos_ = start;
          fail("variable index overflow");
        }
        return Formula::var(index);
      }
      if (ec == std::errc::result_out_of_range) {
        pos_ = start;
        fail("variable index overflow");
      }
    }
    pos_ = start;
    if (word.empty()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    fail("unknown atom '" + std::string(word) + "'");
  }

  std::string_view text_;
  const Alphabet& alphabet_;
  std::size_t pos_ = 0;
};

enum Precedence : int { kImplication = 1, kDisjunction = 2, kConjunction = 3, kUnary = 4 };

void print_into(const Formula& f, const Alphabet& alphabet, int min_prec, std::string& out) {
  auto binary = [&](int prec, std::string_view op, int left_prec, int right_prec) {
    const bool wrap = prec < min_prec;
    if (wrap) out += '(';
    print_into(f.lhs(), alphabet, left_prec, out);
    out += op;
    print_into(f.rhs(), alphabet, right_prec, out);
    if (wrap) out += ')';
  };
  switch (f.kind()) {
    case Formula::Kind::variable:
      out += 'p';
      out += std::to_string(f.variable());
      return;
    case Formula::Kind::falsum:
      out += "false";
      return;
    case Formula::Kind::verum:
      out += "true";
      return;
    case Formula::Kind::negation:
      out += '~';
      print_into(f.lhs(), alphabet, kUnary, out);
      return;
    case Formula::Kind::modal:
      if (f.modality() >= alphabet.size()) {
        throw InvalidInput("modality id " + std::to_string(f.modality()) + " has no name in the alphabet");
      }
      out += f.is_box() ? '[' : '<';
      out += alphabet.name(f.modality());
      out += f.is_box() ? ']' : '>';
      print_into(f.lhs(), alphabet, kUnary, out);
      return;
    case Formula::Kind::conjunction:
      binary(kConjunction, " & ", kConjunction, kConjunction + 1);
      return;
    case Formula::Kind::disjunction:
      binary(kDisjunction, " | ", kDisjunction, kDisjunction + 1);
      return;
    case Formula::Kind::implication:
      binary(kImplication, " -> ", kImplication + 1, kImplication);
      return;
  }
}

}  // namespace

Formula parse(std::string_view text, const Alphabet& alphabet) { return Parser(text, alphabet).run(); }

std::string print_formula(const Formula& f, const Alphabet& alphabet) {
  std::string out;
  print_into(f, alphabet, kImplication, out);
  return out;
}

}  // namespace modalwb
