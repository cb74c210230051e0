// Prefix-length-equality-preserving (plep) and total plep (tlep) elements:
// membership, the D-class index, conjugation witnesses, and the circuit-like
// generators with a partial-identity synthesizer.

#pragma once

#include <algorithm>
#include <cctype>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "higman/element.hpp"
#include "higman/error.hpp"
#include "higman/green.hpp"
#include "higman/kary.hpp"
#include "higman/words.hpp"

namespace higman {

  inline bool is_plep(Element const& e) {
    if (e.is_zero()) {
      return true;
    }
    auto u = uniform_domain_restriction(e.table(), e.table().max_domain_length());
    auto n = u.rows().front().image.size();
    return std::all_of(u.rows().begin(), u.rows().end(), [n](Row const& r) {
      return r.image.size() == n;
    });
  }

  inline bool is_tlep(Element const& e) {
    return is_plep(e) && is_total(e);
  }

  inline Integer d_index_plep(Element const& e) {
    if (e.is_zero()) {
      detail::fail(ErrorCode::ZeroElement, "the zero element has no plep D-index");
    }
    if (!is_plep(e)) {
      detail::fail(ErrorCode::NotPlep, "element is not plep");
    }
    return height_R(e).num();
  }

  inline bool d_equiv_plep(Element const& e1, Element const& e2) {
    if (!is_plep(e1) || !is_plep(e2)) {
      detail::fail(ErrorCode::NotPlep, "element is not plep");
    }
    if (e1.is_zero() || e2.is_zero()) {
      return e1.is_zero() && e2.is_zero();
    }
    return d_index_plep(e1) == d_index_plep(e2);
  }

  // Total idempotent fixing Q pointwise and sending the rest of A^n to q0.
  inline Element eta_idempotent(PrefixCode const& q, Word const& q0) {
    if (!q.is_fixed_length()) {
      detail::fail(ErrorCode::NotFixedLength, q.to_string());
    }
    if (!q.contains(q0)) {
      detail::fail(ErrorCode::RepNotInCode, to_string(q0) + " not in " + q.to_string());
    }
    std::vector<Row> rows;
    for (auto const& w : all_words(q.k(), q0.size())) {
      rows.push_back({w, q.contains(w) ? w : q0});
    }
    return Element(q.k(), std::move(rows));
  }

  // A tlep idempotent of plep D-index i.
  inline Element plep_element_with_index(unsigned k, Integer const& i) {
    if (i < 1) {
      detail::fail(ErrorCode::OutOfRange, "index must be positive");
    }
    if (i % k == 0) {
      detail::fail(ErrorCode::DivisibleIndex, i.str() + " is divisible by " + std::to_string(k));
    }
    std::size_t n = 1;
    while (ipow(k, n) <= i) {
      ++n;
    }
    auto              words = all_words(k, n);
    std::vector<Word> chosen(words.begin(), words.begin() + static_cast<std::ptrdiff_t>(i));
    Word              q0 = chosen.front();
    return eta_idempotent(PrefixCode(k, std::move(chosen)), q0);
  }

  namespace detail {
    // The code padded to its maximal length.
    inline PrefixCode fixed_length_form(PrefixCode const& q) {
      return extend_to_length(q, q.max_length());
    }

    inline std::size_t kary_log_exact(Integer ratio, unsigned k) {
      std::size_t d = 0;
      while (ratio > 1) {
        ratio /= k;
        ++d;
      }
      return d;
    }

    // Grow the smaller of two fixed-length codes of equal k-reduced size by
    // Q |-> Q A^d.
    inline void match_sizes(PrefixCode& q1, PrefixCode& q2) {
      Integer s1 = q1.size(), s2 = q2.size();
      if (s1 < s2) {
        q1 = extend_to_length(q1, q1.max_length() + kary_log_exact(s2 / s1, q1.k()));
      } else if (s2 < s1) {
        q2 = extend_to_length(q2, q2.max_length() + kary_log_exact(s1 / s2, q2.k()));
      }
    }

    inline Element pairing(PrefixCode const& from, PrefixCode const& to) {
      std::vector<Row> rows;
      for (std::size_t i = 0; i < from.size(); ++i) {
        rows.push_back({from.words()[i], to.words()[i]});
      }
      return Element(from.k(), std::move(rows));
    }

    // Total map A^n -> A^m extending the sorted pairing, rest to `fallback`.
    inline Element total_pairing(PrefixCode const& from, PrefixCode const& to, Word const& fallback) {
      std::vector<Row> rows;
      std::size_t      j = 0;
      for (auto const& w : all_words(from.k(), from.max_length())) {
        if (j < from.size() && from.words()[j] == w) {
          rows.push_back({w, to.words()[j++]});
        } else {
          rows.push_back({w, fallback});
        }
      }
      return Element(from.k(), std::move(rows));
    }
  }  // namespace detail

  struct PlepWitness {
    PrefixCode             q1;  // grown, fixed-length image codes
    PrefixCode             q2;
    Element                beta;
    Element                beta_inv;
    std::optional<Element> big_b;  // tlep case only
    std::optional<Element> big_b_prime;
    bool                   verified = false;
  };

  // Conjugating bijection between the image codes of two plep elements of
  // equal D-index, plus the total maps through the eta idempotents when both
  // are tlep.  All identities are checked before returning.
  inline PlepWitness plep_d_witness(Element const& e1, Element const& e2) {
    if (e1.is_zero() || e2.is_zero()) {
      detail::fail(ErrorCode::ZeroElement, "witness for the zero element");
    }
    if (!d_equiv_plep(e1, e2)) {
      detail::fail(ErrorCode::IndexMismatch,
                   d_index_plep(e1).str() + " vs " + d_index_plep(e2).str());
    }
    PrefixCode q1 = detail::fixed_length_form(imC(e1));
    PrefixCode q2 = detail::fixed_length_form(imC(e2));
    detail::match_sizes(q1, q2);
    PlepWitness w{q1, q2, detail::pairing(q1, q2), detail::pairing(q2, q1), {}, {}, false};

    auto id1 = partial_identity(q1), id2 = partial_identity(q2);
    bool ok  = compose(w.beta, compose(id1, w.beta_inv)) == id2
              && compose(w.beta_inv, compose(id2, w.beta)) == id1
              && compose(w.beta_inv, w.beta) == id1 && compose(w.beta, w.beta_inv) == id2
              && is_plep(w.beta) && is_plep(w.beta_inv);

    if (ok && is_tlep(e1) && is_tlep(e2)) {
      Word const& q01  = q1.words().front();
      Word const& q02  = q2.words().front();
      auto        eta1 = eta_idempotent(q1, q01);
      auto        eta2 = eta_idempotent(q2, q02);
      auto        b    = detail::total_pairing(q1, q2, q02);
      auto        bp   = detail::total_pairing(q2, q1, q01);
      ok = compose(b, compose(eta1, bp)) == eta2 && compose(bp, compose(eta2, b)) == eta1
           && compose(bp, compose(b, eta1)) == eta1 && compose(b, compose(bp, eta2)) == eta2
           && is_tlep(b) && is_tlep(bp);
      w.big_b       = b;
      w.big_b_prime = bp;
    }
    w.verified = ok;
    if (!ok) {
      throw std::logic_error("plep witness identities failed");
    }
    return w;
  }

  // Class-wise restrictions of both tables whose image codes are fixed
  // length and of equal size.  The two lengths may differ: equal length
  // needs equal measure.
  inline std::pair<Table, Table> common_image_refinement(Element const& e1, Element const& e2) {
    if (e1.k() != e2.k()) {
      detail::fail(ErrorCode::AlphabetMismatch, "different alphabets");
    }
    if (height_R(e1).num() != height_R(e2).num()) {
      detail::fail(ErrorCode::IndexMismatch, "k-reduced numerators differ");
    }
    auto t1 = uniform_image_restriction(image_code_restriction(e1.table()));
    auto t2 = uniform_image_restriction(image_code_restriction(e2.table()));
    auto deepen = [](Table const& t, std::size_t d) {
      std::vector<Row> rows;
      for (auto const& r : t.rows()) {
        for (auto const& tail : all_words(t.k(), d)) {
          rows.push_back({r.domain + tail, r.image + tail});
        }
      }
      return Table(t.k(), std::move(rows));
    };
    Integer s1 = t1.distinct_images().size(), s2 = t2.distinct_images().size();
    if (s1 < s2) {
      t1 = deepen(t1, detail::kary_log_exact(s2 / s1, e1.k()));
    } else if (s2 < s1) {
      t2 = deepen(t2, detail::kary_log_exact(s1 / s2, e1.k()));
    }
    return {t1, t2};
  }

  // Generators.  Letter a_1 (index 0) is false, every other letter true.

  inline constexpr std::size_t c_gamma = 2;

  inline Element gate_table(std::string const& name, unsigned k) {
    std::vector<Row> rows;
    auto             bit = [](bool b) { return Word{static_cast<Letter>(b ? 1 : 0)}; };
    auto             each2 = [&](auto fn) {
      for (auto const& w : all_words(k, 2)) {
        rows.push_back({w, fn(w[0], w[1])});
      }
    };
    if (name == "and") {
      each2([&](Letter u, Letter v) { return bit(u != 0 && v != 0); });
    } else if (name == "or") {
      each2([&](Letter u, Letter v) { return bit(u != 0 || v != 0); });
    } else if (name == "proj2") {
      each2([](Letter, Letter v) { return Word{v}; });
    } else if (name == "not") {
      for (unsigned a = 0; a < k; ++a) {
        rows.push_back({Word{static_cast<Letter>(a)}, bit(a == 0)});
      }
    } else if (name == "fork") {
      for (unsigned a = 0; a < k; ++a) {
        rows.push_back({Word{static_cast<Letter>(a)}, Word{static_cast<Letter>(a), static_cast<Letter>(a)}});
      }
    } else if (name == "guard") {
      for (unsigned a = 1; a < k; ++a) {
        rows.push_back({Word{static_cast<Letter>(a)}, Word{static_cast<Letter>(a)}});
      }
    } else if (name.size() >= 2 && name[0] == 'E'
               && std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })
               && name.size() <= 4) {
      unsigned i = static_cast<unsigned>(std::stoul(name.substr(1)));
      if (i < 1 || i > k) {
        detail::fail(ErrorCode::UnknownGate, name + " with k = " + std::to_string(k));
      }
      for (unsigned a = 0; a < k; ++a) {
        rows.push_back({Word{static_cast<Letter>(a)}, bit(a == i - 1)});
      }
    } else {
      detail::fail(ErrorCode::UnknownGate, name);
    }
    return Element(k, std::move(rows));
  }

  // tau(i) swaps letters i and i+1: u a b |-> u b a on A^(i+1).
  inline Element tau_table(std::size_t i, unsigned k) {
    if (i < 1) {
      detail::fail(ErrorCode::OutOfRange, "tau index must be at least 1");
    }
    std::vector<Row> rows;
    for (auto const& w : all_words(k, i + 1)) {
      Word v = w;
      std::swap(v.letters[i - 1], v.letters[i]);
      rows.push_back({w, v});
    }
    return Element(k, std::move(rows));
  }

  struct GenSymbol {
    std::string gate;  // empty for tau
    std::size_t tau = 0;

    friend bool operator==(GenSymbol const&, GenSymbol const&) = default;
  };

  using GeneratorWord = std::vector<GenSymbol>;

  inline GenSymbol gate_symbol(std::string name) {
    return {std::move(name), 0};
  }

  inline GenSymbol tau_symbol(std::size_t i) {
    return {"", i};
  }

  inline std::size_t generator_word_length(GeneratorWord const& w) {
    std::size_t n = 0;
    for (auto const& s : w) {
      n += s.gate.empty() ? s.tau + 1 : 1;
    }
    return n;
  }

  inline Element symbol_table(GenSymbol const& s, unsigned k) {
    return s.gate.empty() ? tau_table(s.tau, k) : gate_table(s.gate, k);
  }

  // Rightmost symbol acts first.
  inline Element eval_generator_word(GeneratorWord const& w, unsigned k) {
    Element result = Element::identity(k);
    for (auto const& s : w) {
      result = compose(result, symbol_table(s, k));
    }
    return result;
  }

  inline std::string to_string(GeneratorWord const& w) {
    std::string s;
    for (auto const& sym : w) {
      if (!s.empty()) {
        s += ' ';
      }
      s += sym.gate.empty() ? "tau(" + std::to_string(sym.tau) + ")" : sym.gate;
    }
    return s;
  }

  inline GeneratorWord parse_generator_word(std::istream& in) {
    GeneratorWord w;
    std::string   line;
    while (std::getline(in, line)) {
      if (auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
      }
      std::istringstream ls(line);
      std::string        tok;
      while (ls >> tok) {
        if (tok.rfind("tau(", 0) == 0) {
          if (tok.size() < 6 || tok.back() != ')') {
            throw ParseError("bad symbol '" + tok + "'");
          }
          auto digits = tok.substr(4, tok.size() - 5);
          if (digits.size() > 6 || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            throw ParseError("bad symbol '" + tok + "'");
          }
          auto i = std::stoul(digits);
          if (i < 1) {
            throw ParseError("tau index must be at least 1");
          }
          w.push_back(tau_symbol(i));
        } else {
          w.push_back(gate_symbol(tok));
        }
      }
    }
    return w;
  }

  inline GeneratorWord parse_generator_word(std::string const& text) {
    std::istringstream in(text);
    return parse_generator_word(in);
  }

  namespace detail {
    // Tracks which logical wire sits at each letter position and records
    // generator symbols in the order they act.
    class WireRouter {
     public:
      explicit WireRouter(std::size_t m) {
        for (std::size_t j = 0; j < m; ++j) {
          _layout.push_back(static_cast<int>(j));
        }
        _next = static_cast<int>(m);
      }

      void to_front(int wire) {
        auto p = static_cast<std::size_t>(
            std::find(_layout.begin(), _layout.end(), wire) - _layout.begin());
        for (; p > 0; --p) {
          _acts.push_back(tau_symbol(p));
          std::swap(_layout[p - 1], _layout[p]);
        }
      }

      // Gate on the front wires (in order); returns the output wires.
      std::vector<int> gate(std::string const& name, std::vector<int> const& in, std::size_t out) {
        for (auto it = in.rbegin(); it != in.rend(); ++it) {
          to_front(*it);
        }
        _acts.push_back(gate_symbol(name));
        _layout.erase(_layout.begin(), _layout.begin() + static_cast<std::ptrdiff_t>(in.size()));
        std::vector<int> made;
        for (std::size_t i = 0; i < out; ++i) {
          made.push_back(_next++);
        }
        _layout.insert(_layout.begin(), made.begin(), made.end());
        return made;
      }

      // Like gate(), but the outputs keep the names given.
      void relabel_front(std::vector<int> const& names) {
        std::copy(names.begin(), names.end(), _layout.begin());
      }

      [[nodiscard]] std::vector<int> const& layout() const noexcept {
        return _layout;
      }

      [[nodiscard]] GeneratorWord word() const {
        return {_acts.rbegin(), _acts.rend()};
      }

     private:
      std::vector<int>       _layout;
      std::vector<GenSymbol> _acts;
      int                    _next = 0;
    };
  }  // namespace detail

  // Generator word for the partial identity on A^m - {s}: copy every input
  // letter, test each copy against s, and the tests together, negate, guard,
  // and drop the flag.
  inline GeneratorWord synthesize_partial_identity(Word const& s, unsigned k) {
    check_letters(s, k);
    std::size_t m = s.size();
    if (m == 0) {
      detail::fail(ErrorCode::EmptyTarget, "cannot remove the empty word");
    }
    detail::WireRouter r(m);
    std::vector<int>   copies;
    for (std::size_t j = 0; j < m; ++j) {
      auto out = r.gate("fork", {static_cast<int>(j)}, 2);
      r.relabel_front({static_cast<int>(j), out[1]});
      copies.push_back(out[1]);
    }
    std::vector<int> tests;
    for (std::size_t j = 0; j < m; ++j) {
      tests.push_back(r.gate("E" + std::to_string(s[j] + 1), {copies[j]}, 1)[0]);
    }
    int acc = tests[0];
    for (std::size_t j = 1; j < m; ++j) {
      acc = r.gate("and", {acc, tests[j]}, 1)[0];
    }
    acc = r.gate("not", {acc}, 1)[0];
    acc = r.gate("guard", {acc}, 1)[0];
    // proj2 drops the flag and keeps the wire behind it.
    int behind = r.layout()[1];
    r.gate("proj2", {acc, behind}, 1);
    r.relabel_front({behind});
    for (std::size_t j = m; j-- > 0;) {
      if (!std::is_sorted(r.layout().begin(), r.layout().end())) {
        r.to_front(static_cast<int>(j));
      }
    }
    return r.word();
  }

}  // namespace higman
