#pragma once

// Abstract syntax for class expressions such as "I[D[I]]", "Av(1324)" or
// "merge(I,I)", with a recursive-descent parser and a printer whose output
// parses back to the same tree.
//
//   expr     := term { "|" term }
//   term     := atom { "[" term "]" }            inflation, left-assoc
//   atom     := "I" | "D" | "L" | "IDI" | "I_" INT | "D_" INT | "L_" INT
//             | "Av(" permlist ")" | "G(" permlist ")"
//             | "merge(" expr "," expr ")" | "compose(" expr "," expr ")"
//             | "(" expr ")"
//   permlist := perm { "," perm }
//   perm     := digits | "(" INT { "," INT } ")"

#include <cctype>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "permkit/error.hpp"
#include "permkit/permutation.hpp"

namespace permkit {

enum class Builtin { I, D, L, IDI, I_m, D_m, L_k };

class ClassExpr {
 public:
  enum class Kind { builtin, av, generated, inflate, merge, compose, union_of };

  using Ptr = std::shared_ptr<const ClassExpr>;

  static Ptr builtin(Builtin which, int param = 0) {
    auto e = std::make_shared<ClassExpr>(Kind::builtin);
    e->builtin_ = which;
    e->param_ = param;
    return e;
  }
  static Ptr av(std::vector<Permutation> basis) { return with_perms(Kind::av, std::move(basis)); }
  static Ptr generated(std::vector<Permutation> gens) {
    return with_perms(Kind::generated, std::move(gens));
  }
  static Ptr inflate(Ptr outer, Ptr inner) { return binary(Kind::inflate, outer, inner); }
  static Ptr merge(Ptr a, Ptr b) { return binary(Kind::merge, a, b); }
  static Ptr compose(Ptr a, Ptr b) { return binary(Kind::compose, a, b); }
  static Ptr union_of(Ptr a, Ptr b) { return binary(Kind::union_of, a, b); }

  explicit ClassExpr(Kind kind) : kind_(kind) {}

  Kind kind() const noexcept { return kind_; }
  Builtin which() const noexcept { return builtin_; }
  int param() const noexcept { return param_; }
  const std::vector<Permutation>& perms() const noexcept { return perms_; }
  const ClassExpr& left() const { return *left_; }
  const ClassExpr& right() const { return *right_; }

  friend bool operator==(const ClassExpr& a, const ClassExpr& b) {
    if (a.kind_ != b.kind_) return false;
    switch (a.kind_) {
      case Kind::builtin:
        return a.builtin_ == b.builtin_ && a.param_ == b.param_;
      case Kind::av:
      case Kind::generated:
        return a.perms_ == b.perms_;
      default:
        return *a.left_ == *b.left_ && *a.right_ == *b.right_;
    }
  }

 private:
  static Ptr with_perms(Kind kind, std::vector<Permutation> perms) {
    if (perms.empty()) throw invalid_input("class expression needs at least one permutation");
    for (const auto& p : perms) {
      if (p.empty()) throw invalid_input("the empty permutation is not allowed here");
    }
    auto e = std::make_shared<ClassExpr>(kind);
    e->perms_ = std::move(perms);
    return e;
  }
  static Ptr binary(Kind kind, Ptr a, Ptr b) {
    auto e = std::make_shared<ClassExpr>(kind);
    e->left_ = std::move(a);
    e->right_ = std::move(b);
    return e;
  }

  Kind kind_;
  Builtin builtin_ = Builtin::I;
  int param_ = 0;
  std::vector<Permutation> perms_;
  Ptr left_;
  Ptr right_;
};

namespace detail {

inline std::string perm_literal(const Permutation& p) {
  if (p.size() <= 9) return p.str();
  return "(" + p.str() + ")";
}

inline std::string print_expr(const ClassExpr& e);

inline std::string print_term(const ClassExpr& e) {
  if (e.kind() == ClassExpr::Kind::union_of) return "(" + print_expr(e) + ")";
  return print_expr(e);
}

inline std::string print_expr(const ClassExpr& e) {
  using K = ClassExpr::Kind;
  switch (e.kind()) {
    case K::builtin:
      switch (e.which()) {
        case Builtin::I: return "I";
        case Builtin::D: return "D";
        case Builtin::L: return "L";
        case Builtin::IDI: return "IDI";
        case Builtin::I_m: return "I_" + std::to_string(e.param());
        case Builtin::D_m: return "D_" + std::to_string(e.param());
        case Builtin::L_k: return "L_" + std::to_string(e.param());
      }
      break;
    case K::av:
    case K::generated: {
      std::string out = e.kind() == K::av ? "Av(" : "G(";
      for (std::size_t i = 0; i < e.perms().size(); ++i) {
        if (i > 0) out += ',';
        out += perm_literal(e.perms()[i]);
      }
      return out + ")";
    }
    case K::inflate:
      return print_term(e.left()) + "[" + print_term(e.right()) + "]";
    case K::merge:
      return "merge(" + print_expr(e.left()) + "," + print_expr(e.right()) + ")";
    case K::compose:
      return "compose(" + print_expr(e.left()) + "," + print_expr(e.right()) + ")";
    case K::union_of:
      return print_expr(e.left()) + "|" + print_term(e.right());
  }
  return {};
}

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  ClassExpr::Ptr parse() {
    auto e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  ClassExpr::Ptr expr() {
    auto e = term();
    while (peek('|')) {
      ++pos_;
      e = ClassExpr::union_of(e, term());
    }
    return e;
  }

  ClassExpr::Ptr term() {
    auto e = atom();
    while (peek('[')) {
      ++pos_;
      auto inner = term();
      expect(']');
      e = ClassExpr::inflate(e, inner);
    }
    return e;
  }

  int integer() {
    skip_ws();
    const auto start = pos_;
    int v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1000) fail("integer too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    return v;
  }

  Permutation perm() {
    skip_ws();
    const auto start = pos_;
    std::string_view literal;
    if (peek('(')) {
      ++pos_;
      const auto close = text_.find(')', pos_);
      if (close == std::string_view::npos) fail("unterminated permutation literal");
      literal = text_.substr(pos_, close - pos_);
      pos_ = close + 1;
    } else {
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      literal = text_.substr(start, pos_ - start);
      if (literal.empty()) fail("expected a permutation");
      if (literal == "e") {
        pos_ = start;
        fail("the empty permutation is not allowed in a permutation list");
      }
    }
    try {
      return Permutation::parse(literal);
    } catch (const parse_error& err) {
      throw parse_error("invalid permutation literal '" + std::string(literal) +
                            "': " + err.message(),
                        start);
    } catch (const invalid_input& err) {
      throw parse_error("invalid permutation literal '" + std::string(literal) +
                            "': " + err.what(),
                        start);
    }
  }

  std::vector<Permutation> permlist() {
    std::vector<Permutation> out{perm()};
    while (peek(',')) {
      ++pos_;
      out.push_back(perm());
    }
    return out;
  }

  ClassExpr::Ptr atom() {
    skip_ws();
    if (peek('(')) {
      ++pos_;
      auto e = expr();
      expect(')');
      return e;
    }
    const auto start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const auto word = text_.substr(start, pos_ - start);
    if (word.empty()) fail("expected a class expression");

    if (word == "Av" || word == "G") {
      expect('(');
      auto perms = permlist();
      expect(')');
      return word == "Av" ? ClassExpr::av(std::move(perms))
                          : ClassExpr::generated(std::move(perms));
    }
    if (word == "merge" || word == "compose") {
      expect('(');
      auto a = expr();
      expect(',');
      auto b = expr();
      expect(')');
      return word == "merge" ? ClassExpr::merge(a, b) : ClassExpr::compose(a, b);
    }
    if (word == "IDI") return ClassExpr::builtin(Builtin::IDI);
    if (word == "I" || word == "D" || word == "L") {
      if (pos_ < text_.size() && text_[pos_] == '_') {
        ++pos_;
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          fail("expected an integer after '_'");
        }
        const int k = integer();
        const auto which = word == "I" ? Builtin::I_m : word == "D" ? Builtin::D_m : Builtin::L_k;
        return ClassExpr::builtin(which, k);
      }
      return ClassExpr::builtin(word == "I" ? Builtin::I : word == "D" ? Builtin::D : Builtin::L);
    }
    pos_ = start;
    fail("unknown class name '" + std::string(word) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline ClassExpr::Ptr parse_class_expr(std::string_view text) {
  return detail::ExprParser(text).parse();
}

inline std::string to_string(const ClassExpr& e) { return detail::print_expr(e); }

}  // namespace permkit
