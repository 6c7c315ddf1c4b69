#include "plump/treetext.hpp"

#include <cctype>
#include <charconv>
#include <utility>
#include <vector>

#include "plump/errors.hpp"

namespace plump {

namespace {

struct Token {
  enum Kind { LParen, RParen, LBrack, RBrack, Word, Number, End };
  Kind kind;
  std::string_view text;
  std::uint64_t number = 0;
  std::size_t pos = 0;  // 1-based character position
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
    std::size_t pos = i_ + 1;
    if (i_ >= text_.size()) return {Token::End, {}, 0, pos};
    char c = text_[i_];
    switch (c) {
      case '(': ++i_; return {Token::LParen, text_.substr(i_ - 1, 1), 0, pos};
      case ')': ++i_; return {Token::RParen, text_.substr(i_ - 1, 1), 0, pos};
      case '[': ++i_; return {Token::LBrack, text_.substr(i_ - 1, 1), 0, pos};
      case ']': ++i_; return {Token::RBrack, text_.substr(i_ - 1, 1), 0, pos};
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i_;
      while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) ++i_;
      std::string_view digits = text_.substr(start, i_ - start);
      std::uint64_t value = 0;
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
      if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
        throw ParseError("position " + std::to_string(pos) + ": number out of range", 0, pos);
      }
      return {Token::Number, digits, value, pos};
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = i_;
      while (i_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[i_])) || text_[i_] == '_')) {
        ++i_;
      }
      return {Token::Word, text_.substr(start, i_ - start), 0, pos};
    }
    throw ParseError("position " + std::to_string(pos) + ": unexpected character '" +
                         std::string(1, c) + "'",
                     0, pos);
  }

 private:
  std::string_view text_;
  std::size_t i_ = 0;
};

class Parser {
 public:
  Parser(std::string_view text, const BaseSignature& sig)
      : lexer_(text), sig_(sig), tok_(lexer_.next()) {}

  Tree parse() {
    Tree t = parse_tree();
    expect(Token::End, "end of input");
    return t;
  }

 private:
  [[noreturn]] void fail(const Token& tok, const std::string& expected) {
    std::string got = tok.kind == Token::End ? "end of input" : "'" + std::string(tok.text) + "'";
    throw ParseError(
        "position " + std::to_string(tok.pos) + ": expected " + expected + ", got " + got, 0,
        tok.pos);
  }

  void advance() { tok_ = lexer_.next(); }

  void expect(Token::Kind kind, const std::string& what) {
    if (tok_.kind != kind) fail(tok_, what);
  }

  Tree parse_tree() {
    if (tok_.kind == Token::Word && tok_.text == "zero") {
      advance();
      return zero(sig_);
    }
    expect(Token::LParen, "'(' or 'zero'");
    advance();
    expect(Token::Word, "'w' or 'nat'");
    if (tok_.text == "nat") {
      advance();
      expect(Token::Number, "a natural number");
      std::uint64_t k = tok_.number;
      advance();
      expect(Token::RParen, "')'");
      advance();
      return nat_tree(sig_, k);
    }
    if (tok_.text != "w") fail(tok_, "'w' or 'nat'");
    advance();
    expect(Token::LBrack, "'['");
    advance();
    Shape tag;
    while (tok_.kind == Token::Word) {
      tag.names.emplace_back(tok_.text);
      advance();
    }
    expect(Token::RBrack, "']' or a shape name");
    advance();
    std::vector<Tree> children;
    while (tok_.kind != Token::RParen) {
      if (tok_.kind == Token::End) fail(tok_, "')' or a tree");
      children.push_back(parse_tree());
    }
    advance();
    return make_node(sig_, std::move(tag), std::move(children));
  }

  Lexer lexer_;
  const BaseSignature& sig_;
  Token tok_;
};

void print_into(const Tree& u, std::string& out) {
  out += "(w [";
  bool first = true;
  for (const auto& name : u.tag().names) {
    if (!first) out += ' ';
    out += name;
    first = false;
  }
  out += ']';
  for (const Tree& c : u.children()) {
    out += ' ';
    print_into(c, out);
  }
  out += ')';
}

}  // namespace

Tree parse_tree(std::string_view text, const BaseSignature& sig) {
  return Parser(text, sig).parse();
}

std::string print_tree(const Tree& u) {
  std::string out;
  print_into(u, out);
  return out;
}

}  // namespace plump
