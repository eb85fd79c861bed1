#ifndef DFORGE_IO_PARSE_HPP
#define DFORGE_IO_PARSE_HPP

#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "dforge/algebra/concepts.hpp"
#include "dforge/algebra/ratfn.hpp"
#include "dforge/error.hpp"

namespace dforge {

/// Expression tree for polynomial input: integers, single-letter variables,
/// + - *, implicit multiplication, ^ with a nonnegative integer exponent.
struct Expr {
  enum class Kind { Number, Variable, Neg, Add, Sub, Mul, Pow };
  Kind kind;
  std::size_t pos;
  long long number = 0;  // Number: value; Pow: exponent
  char var = 0;
  std::unique_ptr<Expr> lhs, rhs;
};

namespace detail {

class Parser {
public:
  explicit Parser(const std::string& s) : s_(s) {}

  std::unique_ptr<Expr> parse() {
    skip();
    if (i_ == s_.size()) throw ParseError("empty expression", i_);
    auto e = expr();
    skip();
    if (i_ != s_.size()) throw ParseError(std::string("unexpected character '") + s_[i_] + "'", i_);
    return e;
  }

private:
  static std::unique_ptr<Expr> node(Expr::Kind k, std::size_t pos) {
    auto e = std::make_unique<Expr>();
    e->kind = k;
    e->pos = pos;
    return e;
  }
  static std::unique_ptr<Expr> binary(Expr::Kind k, std::size_t pos, std::unique_ptr<Expr> a, std::unique_ptr<Expr> b) {
    auto e = node(k, pos);
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    return e;
  }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }
  bool starts_factor() {
    skip();
    if (i_ >= s_.size()) return false;
    const auto c = static_cast<unsigned char>(s_[i_]);
    return std::isdigit(c) || std::isalpha(c) || c == '(';
  }

  std::unique_ptr<Expr> expr() {
    auto e = term();
    while (true) {
      if (peek('+')) {
        const std::size_t p = i_++;
        e = binary(Expr::Kind::Add, p, std::move(e), term());
      } else if (peek('-')) {
        const std::size_t p = i_++;
        e = binary(Expr::Kind::Sub, p, std::move(e), term());
      } else {
        return e;
      }
    }
  }

  std::unique_ptr<Expr> term() {
    auto e = unary();
    while (true) {
      if (peek('*')) {
        const std::size_t p = i_++;
        e = binary(Expr::Kind::Mul, p, std::move(e), unary());
      } else if (starts_factor()) {
        const std::size_t p = i_;
        e = binary(Expr::Kind::Mul, p, std::move(e), power());
      } else {
        return e;
      }
    }
  }

  std::unique_ptr<Expr> unary() {
    if (peek('-')) {
      const std::size_t p = i_++;
      auto e = node(Expr::Kind::Neg, p);
      e->lhs = unary();
      return e;
    }
    if (peek('+')) {
      ++i_;
      return unary();
    }
    return power();
  }

  std::unique_ptr<Expr> power() {
    auto base = atom();
    if (peek('^')) {
      const std::size_t p = i_++;
      skip();
      if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_])))
        throw ParseError("exponent must be a nonnegative integer", i_);
      auto e = node(Expr::Kind::Pow, p);
      e->number = integer();
      e->lhs = std::move(base);
      if (peek('^')) throw ParseError("chained exponents need parentheses", i_);
      return e;
    }
    return base;
  }

  std::unique_ptr<Expr> atom() {
    skip();
    if (i_ >= s_.size()) throw ParseError("unexpected end of input", i_);
    const char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto e = node(Expr::Kind::Number, i_);
      e->number = integer();
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      auto e = node(Expr::Kind::Variable, i_);
      e->var = c;
      ++i_;
      return e;
    }
    if (c == '(') {
      const std::size_t open = i_++;
      auto e = expr();
      if (!peek(')')) throw ParseError("missing ')' for '(' at position " + std::to_string(open), i_);
      ++i_;
      return e;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", i_);
  }

  long long integer() {
    const std::size_t start = i_;
    long long v = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      if (v > (static_cast<long long>(1) << 40)) throw ParseError("integer too large", start);
      v = v * 10 + (s_[i_] - '0');
      ++i_;
    }
    return v;
  }

  const std::string& s_;
  std::size_t i_ = 0;
};

}  // namespace detail

inline std::unique_ptr<Expr> parse_expression(const std::string& text) { return detail::Parser(text).parse(); }

/// Evaluates an expression in a ring R, binding each variable letter to a value.
template <Ring R>
R evaluate(const Expr& e, const typename R::Context& ctx, const std::map<char, R>& vars) {
  switch (e.kind) {
    case Expr::Kind::Number:
      return R::from_int(ctx, e.number);
    case Expr::Kind::Variable: {
      auto it = vars.find(e.var);
      if (it == vars.end()) throw ParseError(std::string("unknown variable '") + e.var + "'", e.pos);
      return it->second;
    }
    case Expr::Kind::Neg:
      return -evaluate<R>(*e.lhs, ctx, vars);
    case Expr::Kind::Add:
      return evaluate<R>(*e.lhs, ctx, vars) + evaluate<R>(*e.rhs, ctx, vars);
    case Expr::Kind::Sub:
      return evaluate<R>(*e.lhs, ctx, vars) - evaluate<R>(*e.rhs, ctx, vars);
    case Expr::Kind::Mul:
      return evaluate<R>(*e.lhs, ctx, vars) * evaluate<R>(*e.rhs, ctx, vars);
    case Expr::Kind::Pow:
      return power(evaluate<R>(*e.lhs, ctx, vars), static_cast<std::uint64_t>(e.number));
  }
  throw ParseError("corrupt expression", e.pos);
}

template <Ring R>
R parse_in(const std::string& text, const typename R::Context& ctx, const std::map<char, R>& vars) {
  return evaluate<R>(*parse_expression(text), ctx, vars);
}

/// A polynomial in T over the given field.
inline UPoly parse_upoly(const std::string& text, const GaloisField& field) {
  return parse_in<UPoly>(text, &field, {{'T', upoly_T(field)}});
}

}  // namespace dforge

#endif
