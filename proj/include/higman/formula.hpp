// Boolean formulas B(x, y) over x1..xm, y1..yn and brute-force counting.
//
// Text form: a header `m=<int> n=<int>` followed by an expression using
// x<i>, y<i>, 0, 1, !, &, | and parentheses (! binds tightest, | loosest).

#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <istream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "higman/error.hpp"
#include "higman/kary.hpp"

namespace higman {

  class Formula {
   public:
    enum class Op { Const, X, Y, Not, And, Or };

    struct Node {
      Op       op;
      unsigned arg = 0;  // constant value or 1-based variable index
      int      lhs = -1;
      int      rhs = -1;
    };

    Formula(unsigned m, unsigned n) : _m(m), _n(n) {}

    [[nodiscard]] unsigned m() const noexcept {
      return _m;
    }
    [[nodiscard]] unsigned n() const noexcept {
      return _n;
    }

    int constant(bool v) {
      return push({Op::Const, v ? 1U : 0U});
    }
    int x(unsigned i) {
      if (i < 1 || i > _m) {
        detail::fail(ErrorCode::ArityMismatch, "x" + std::to_string(i));
      }
      return push({Op::X, i});
    }
    int y(unsigned i) {
      if (i < 1 || i > _n) {
        detail::fail(ErrorCode::ArityMismatch, "y" + std::to_string(i));
      }
      return push({Op::Y, i});
    }
    int negate(int a) {
      return push({Op::Not, 0, a});
    }
    int conj(int a, int b) {
      return push({Op::And, 0, a, b});
    }
    int disj(int a, int b) {
      return push({Op::Or, 0, a, b});
    }

    void set_root(int r) {
      _root = r;
    }
    [[nodiscard]] int root() const noexcept {
      return _root;
    }
    [[nodiscard]] std::vector<Node> const& nodes() const noexcept {
      return _nodes;
    }

    // Bit i-1 of xs is x_i, likewise for ys.
    [[nodiscard]] bool eval(std::uint64_t xs, std::uint64_t ys) const {
      return eval_node(_root, xs, ys);
    }

    // The same formula with one more (unused) x variable.
    [[nodiscard]] Formula widened() const {
      Formula f = *this;
      ++f._m;
      return f;
    }

    [[nodiscard]] std::string expression() const {
      return show(_root);
    }

    [[nodiscard]] std::string to_string() const {
      return "m=" + std::to_string(_m) + " n=" + std::to_string(_n) + "\n" + expression() + "\n";
    }

   private:
    int push(Node nd) {
      _nodes.push_back(nd);
      return static_cast<int>(_nodes.size()) - 1;
    }

    [[nodiscard]] bool eval_node(int i, std::uint64_t xs, std::uint64_t ys) const {
      Node const& nd = _nodes[static_cast<std::size_t>(i)];
      switch (nd.op) {
        case Op::Const: return nd.arg != 0;
        case Op::X: return ((xs >> (nd.arg - 1)) & 1U) != 0;
        case Op::Y: return ((ys >> (nd.arg - 1)) & 1U) != 0;
        case Op::Not: return !eval_node(nd.lhs, xs, ys);
        case Op::And: return eval_node(nd.lhs, xs, ys) && eval_node(nd.rhs, xs, ys);
        case Op::Or: return eval_node(nd.lhs, xs, ys) || eval_node(nd.rhs, xs, ys);
      }
      return false;
    }

    [[nodiscard]] std::string show(int i) const {
      Node const& nd = _nodes[static_cast<std::size_t>(i)];
      switch (nd.op) {
        case Op::Const: return nd.arg != 0 ? "1" : "0";
        case Op::X: return "x" + std::to_string(nd.arg);
        case Op::Y: return "y" + std::to_string(nd.arg);
        case Op::Not: return "!" + show(nd.lhs);
        case Op::And: return "(" + show(nd.lhs) + " & " + show(nd.rhs) + ")";
        case Op::Or: return "(" + show(nd.lhs) + " | " + show(nd.rhs) + ")";
      }
      return "";
    }

    unsigned          _m;
    unsigned          _n;
    std::vector<Node> _nodes;
    int               _root = -1;
  };

  namespace detail {
    class FormulaParser {
     public:
      FormulaParser(std::string text, Formula& f) : _s(std::move(text)), _f(f) {}

      int parse() {
        int r = disj();
        skip();
        if (_i != _s.size()) {
          throw ParseError("unexpected '" + std::string(1, _s[_i]) + "' in formula");
        }
        return r;
      }

     private:
      void skip() {
        while (_i < _s.size() && std::isspace(static_cast<unsigned char>(_s[_i]))) {
          ++_i;
        }
      }

      bool eat(char c) {
        skip();
        if (_i < _s.size() && _s[_i] == c) {
          ++_i;
          return true;
        }
        return false;
      }

      int disj() {
        int a = conj();
        while (eat('|')) {
          a = _f.disj(a, conj());
        }
        return a;
      }

      int conj() {
        int a = atom();
        while (eat('&')) {
          a = _f.conj(a, atom());
        }
        return a;
      }

      int atom() {
        if (eat('!')) {
          return _f.negate(atom());
        }
        if (eat('(')) {
          int a = disj();
          if (!eat(')')) {
            throw ParseError("missing ')' in formula");
          }
          return a;
        }
        if (eat('0')) {
          return _f.constant(false);
        }
        if (eat('1')) {
          return _f.constant(true);
        }
        skip();
        if (_i < _s.size() && (_s[_i] == 'x' || _s[_i] == 'y')) {
          char        kind = _s[_i++];
          std::size_t j    = _i;
          while (_i < _s.size() && std::isdigit(static_cast<unsigned char>(_s[_i]))) {
            ++_i;
          }
          if (j == _i || _i - j > 6) {
            throw ParseError("bad variable in formula");
          }
          auto idx = static_cast<unsigned>(std::stoul(_s.substr(j, _i - j)));
          unsigned top = kind == 'x' ? _f.m() : _f.n();
          if (idx < 1 || idx > top) {
            throw ParseError(std::string(1, kind) + std::to_string(idx) + " outside declared arity");
          }
          return kind == 'x' ? _f.x(idx) : _f.y(idx);
        }
        throw ParseError("expected a variable, constant, '!' or '(' in formula");
      }

      std::string _s;
      Formula&    _f;
      std::size_t _i = 0;
    };
  }  // namespace detail

  inline Formula parse_formula(std::istream& in) {
    std::string text, line;
    while (std::getline(in, line)) {
      if (auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
      }
      text += line + "\n";
    }
    std::istringstream ts(text);
    std::string        mt, nt;
    if (!(ts >> mt >> nt) || mt.rfind("m=", 0) != 0 || nt.rfind("n=", 0) != 0) {
      throw ParseError("formula must start with `m=<int> n=<int>`");
    }
    auto number = [](std::string const& s) {
      if (s.empty() || s.size() > 3
          || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw ParseError("bad arity '" + s + "'");
      }
      return static_cast<unsigned>(std::stoul(s));
    };
    Formula     f(number(mt.substr(2)), number(nt.substr(2)));
    std::string rest(std::istreambuf_iterator<char>(ts), {});
    f.set_root(detail::FormulaParser(rest, f).parse());
    return f;
  }

  inline Formula parse_formula(std::string const& text) {
    std::istringstream in(text);
    return parse_formula(in);
  }

  inline constexpr unsigned max_brute_force_arity = 24;

  struct ForallCount {
    Integer n1;  // y with B(x, y) = 1 for every x
    Integer n0;  // the other y
  };

  inline ForallCount count_forall_sat(Formula const& b) {
    if (b.m() + b.n() > max_brute_force_arity) {
      detail::fail(ErrorCode::TooLarge, "m + n = " + std::to_string(b.m() + b.n()));
    }
    std::uint64_t ny = std::uint64_t{1} << b.n(), nx = std::uint64_t{1} << b.m();
    std::uint64_t hits = 0;
    for (std::uint64_t y = 0; y < ny; ++y) {
      bool all = true;
      for (std::uint64_t x = 0; x < nx && all; ++x) {
        all = b.eval(x, y);
      }
      hits += all ? 1 : 0;
    }
    return {Integer(hits), Integer(ny - hits)};
  }

  // For every y some x satisfies B.
  inline bool is_surjective_formula(Formula const& b) {
    if (b.m() + b.n() > max_brute_force_arity) {
      detail::fail(ErrorCode::TooLarge, "m + n = " + std::to_string(b.m() + b.n()));
    }
    std::uint64_t ny = std::uint64_t{1} << b.n(), nx = std::uint64_t{1} << b.m();
    for (std::uint64_t y = 0; y < ny; ++y) {
      bool some = false;
      for (std::uint64_t x = 0; x < nx && !some; ++x) {
        some = b.eval(x, y);
      }
      if (!some) {
        return false;
      }
    }
    return true;
  }

  // B itself if surjective, else x_{m+1} | B.
  inline Formula ensure_surjectivity(Formula const& b) {
    if (is_surjective_formula(b)) {
      return b;
    }
    Formula beta = b.widened();
    beta.set_root(beta.disj(beta.x(beta.m()), b.root()));
    return beta;
  }

}  // namespace higman
