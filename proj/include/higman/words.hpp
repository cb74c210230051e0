// Words over a k-letter alphabet, finite prefix codes and the right ideals
// they generate, and the Bernoulli measure of finite sets of words.
//
// Letter a_j of the alphabet is stored as index j-1 and printed as the
// (j-1)-th lower case letter; the empty word prints as `^`.

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "higman/error.hpp"
#include "higman/kary.hpp"

namespace higman {

  using Letter = std::uint8_t;

  inline constexpr unsigned max_text_alphabet = 26;

  struct Word {
    std::vector<Letter> letters;

    Word() = default;
    Word(std::initializer_list<Letter> ls) : letters(ls) {}
    explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

    [[nodiscard]] std::size_t size() const noexcept {
      return letters.size();
    }
    [[nodiscard]] bool empty() const noexcept {
      return letters.empty();
    }
    Letter operator[](std::size_t i) const {
      return letters[i];
    }
    [[nodiscard]] Letter back() const {
      return letters.back();
    }

    [[nodiscard]] bool is_prefix_of(Word const& other) const {
      return size() <= other.size()
             && std::equal(letters.begin(), letters.end(), other.letters.begin());
    }

    [[nodiscard]] bool comparable(Word const& other) const {
      return is_prefix_of(other) || other.is_prefix_of(*this);
    }

    [[nodiscard]] Word prefix(std::size_t n) const {
      return Word(std::vector<Letter>(letters.begin(), letters.begin() + n));
    }

    [[nodiscard]] Word suffix_from(std::size_t n) const {
      return Word(std::vector<Letter>(letters.begin() + n, letters.end()));
    }

    [[nodiscard]] Word parent() const {
      return prefix(size() - 1);
    }

    [[nodiscard]] Word child(Letter a) const {
      Word w = *this;
      w.letters.push_back(a);
      return w;
    }

    Word& operator+=(Word const& other) {
      letters.insert(letters.end(), other.letters.begin(), other.letters.end());
      return *this;
    }

    friend Word operator+(Word lhs, Word const& rhs) {
      return lhs += rhs;
    }

    // Canonical order: shorter first, then lexicographic.
    friend std::strong_ordering operator<=>(Word const& x, Word const& y) {
      if (auto c = x.size() <=> y.size(); c != 0) {
        return c;
      }
      return std::lexicographical_compare_three_way(
          x.letters.begin(), x.letters.end(), y.letters.begin(), y.letters.end());
    }
    friend bool operator==(Word const&, Word const&) = default;
  };

  // Dictionary order: a prefix precedes its extensions, otherwise the first
  // differing letter decides.
  inline std::strong_ordering word_cmp_dict(Word const& x, Word const& y) {
    return std::lexicographical_compare_three_way(
        x.letters.begin(), x.letters.end(), y.letters.begin(), y.letters.end());
  }

  inline std::string to_string(Word const& w) {
    if (w.empty()) {
      return "^";
    }
    std::string s;
    for (Letter a : w.letters) {
      s += static_cast<char>('a' + a);
    }
    return s;
  }

  inline Word parse_word(std::string_view text, unsigned k) {
    if (k > max_text_alphabet) {
      throw ParseError("alphabets larger than 26 letters have no text form");
    }
    Word w;
    if (text == "^") {
      return w;
    }
    if (text.empty()) {
      throw ParseError("empty word token (use ^ for the empty word)");
    }
    for (char c : text) {
      if (c < 'a' || static_cast<unsigned>(c - 'a') >= k) {
        throw ParseError("letter '" + std::string(1, c) + "' outside alphabet of size "
                         + std::to_string(k) + " in word '" + std::string(text) + "'");
      }
      w.letters.push_back(static_cast<Letter>(c - 'a'));
    }
    return w;
  }

  inline void check_letters(Word const& w, unsigned k) {
    for (Letter a : w.letters) {
      if (a >= k) {
        detail::fail(ErrorCode::LetterOutOfRange,
                     "letter index " + std::to_string(a) + " with k = " + std::to_string(k));
      }
    }
  }

  // All words of length n in dictionary order.
  inline std::vector<Word> all_words(unsigned k, std::size_t n) {
    std::vector<Word> out{Word{}};
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Word> next;
      next.reserve(out.size() * k);
      for (auto const& w : out) {
        for (unsigned a = 0; a < k; ++a) {
          next.push_back(w.child(static_cast<Letter>(a)));
        }
      }
      out = std::move(next);
    }
    return out;
  }

  // Sum of k^-|x| over the distinct words of `words`.
  template <typename Range>
  KRational mu(unsigned k, Range const& words) {
    std::vector<Word> sorted(std::begin(words), std::end(words));
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::map<std::size_t, Integer> count_by_length;
    for (auto const& w : sorted) {
      count_by_length[w.size()] += 1;
    }
    KRational total(k);
    for (auto const& [len, count] : count_by_length) {
      total += KRational(k, count, len);
    }
    return total;
  }

  inline KRational mu(unsigned k, Word const& w) {
    return KRational::unit(k, w.size());
  }

  template <typename Range>
  bool is_prefix_code(Range const& words) {
    std::vector<Word> sorted(std::begin(words), std::end(words));
    std::sort(sorted.begin(), sorted.end(), [](Word const& x, Word const& y) {
      return word_cmp_dict(x, y) < 0;
    });
    // In dictionary order a word is followed directly by its extensions.
    for (std::size_t i = 1; i < sorted.size(); ++i) {
      if (sorted[i - 1].is_prefix_of(sorted[i])) {
        return false;
      }
    }
    return true;
  }

  class PrefixCode {
   public:
    explicit PrefixCode(unsigned k) : _k(k) {
      KRational::zero(k);  // validates k
    }

    PrefixCode(unsigned k, std::vector<Word> words) : _k(k), _words(std::move(words)) {
      KRational::zero(k);
      for (auto const& w : _words) {
        check_letters(w, k);
      }
      std::sort(_words.begin(), _words.end());
      _words.erase(std::unique(_words.begin(), _words.end()), _words.end());
      if (!is_prefix_code(_words)) {
        detail::fail(ErrorCode::NotPrefixCode, to_string());
      }
    }

    [[nodiscard]] unsigned k() const noexcept {
      return _k;
    }
    [[nodiscard]] std::vector<Word> const& words() const noexcept {
      return _words;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _words.size();
    }
    [[nodiscard]] bool empty() const noexcept {
      return _words.empty();
    }
    [[nodiscard]] auto begin() const noexcept {
      return _words.begin();
    }
    [[nodiscard]] auto end() const noexcept {
      return _words.end();
    }

    [[nodiscard]] bool contains(Word const& w) const {
      return std::binary_search(_words.begin(), _words.end(), w);
    }

    [[nodiscard]] std::size_t max_length() const {
      return _words.empty() ? 0 : _words.back().size();
    }

    [[nodiscard]] KRational measure() const {
      return mu(_k, _words);
    }

    [[nodiscard]] bool is_maximal() const {
      return measure() == KRational::one(_k);
    }

    // The element of the code that is a prefix of w, if any.
    [[nodiscard]] Word const* prefix_of(Word const& w) const {
      for (std::size_t n = 0; n <= w.size(); ++n) {
        auto it = std::lower_bound(_words.begin(), _words.end(), w.prefix(n));
        if (it != _words.end() && *it == w.prefix(n)) {
          return &*it;
        }
      }
      return nullptr;
    }

    [[nodiscard]] bool is_fixed_length() const {
      return _words.empty() || _words.front().size() == _words.back().size();
    }

    [[nodiscard]] std::string to_string() const {
      std::string s = "{";
      for (std::size_t i = 0; i < _words.size(); ++i) {
        if (i > 0) {
          s += ", ";
        }
        s += higman::to_string(_words[i]);
      }
      return s + "}";
    }

    friend bool operator==(PrefixCode const&, PrefixCode const&) = default;

   private:
    unsigned          _k;
    std::vector<Word> _words;  // canonical order
  };

  // (r1): replace c by its k children.
  inline PrefixCode replace_r1(PrefixCode const& p, Word const& c) {
    if (!p.contains(c)) {
      detail::fail(ErrorCode::NotInCode, higman::to_string(c) + " not in " + p.to_string());
    }
    std::vector<Word> out;
    for (auto const& w : p) {
      if (w != c) {
        out.push_back(w);
      }
    }
    for (unsigned a = 0; a < p.k(); ++a) {
      out.push_back(c.child(static_cast<Letter>(a)));
    }
    return PrefixCode(p.k(), std::move(out));
  }

  // (r2): replace the k children of c by c.
  inline PrefixCode replace_r2(PrefixCode const& p, Word const& c) {
    for (unsigned a = 0; a < p.k(); ++a) {
      if (!p.contains(c.child(static_cast<Letter>(a)))) {
        detail::fail(ErrorCode::ChildrenMissing,
                     higman::to_string(c) + "A not contained in " + p.to_string());
      }
    }
    std::vector<Word> out;
    for (auto const& w : p) {
      if (w.size() != c.size() + 1 || !c.is_prefix_of(w)) {
        out.push_back(w);
      }
    }
    out.push_back(c);
    return PrefixCode(p.k(), std::move(out));
  }

  // Does ends(wA*) lie inside ends(PA*)?  Recursion stops at depth max|P|.
  inline bool covered(Word const& w, PrefixCode const& p) {
    if (p.prefix_of(w) != nullptr) {
      return true;
    }
    bool extended = std::any_of(p.begin(), p.end(), [&](Word const& x) {
      return w.is_prefix_of(x);
    });
    if (!extended) {
      return false;
    }
    for (unsigned a = 0; a < p.k(); ++a) {
      if (!covered(w.child(static_cast<Letter>(a)), p)) {
        return false;
      }
    }
    return true;
  }

  // ends(P1 A*) contained in ends(P2 A*).
  inline bool ideal_ess_leq(PrefixCode const& p1, PrefixCode const& p2) {
    if (p1.k() != p2.k()) {
      detail::fail(ErrorCode::AlphabetMismatch, "prefix codes over different alphabets");
    }
    return std::all_of(p1.begin(), p1.end(), [&](Word const& w) { return covered(w, p2); });
  }

  inline bool ideal_ess_eq(PrefixCode const& p1, PrefixCode const& p2) {
    return ideal_ess_leq(p1, p2) && ideal_ess_leq(p2, p1);
  }

  namespace detail {
    inline void complement_walk(Word const&        node,
                                PrefixCode const&  p,
                                std::vector<Word>& out) {
      if (p.contains(node)) {
        return;
      }
      bool below = std::any_of(p.begin(), p.end(), [&](Word const& x) {
        return node.is_prefix_of(x);
      });
      if (!below) {
        out.push_back(node);
        return;
      }
      for (unsigned a = 0; a < p.k(); ++a) {
        complement_walk(node.child(static_cast<Letter>(a)), p, out);
      }
    }
  }  // namespace detail

  // The antichain of maximal tree nodes whose subtrees avoid PA*.
  inline PrefixCode complement_code(PrefixCode const& p) {
    std::vector<Word> out;
    detail::complement_walk(Word{}, p, out);
    return PrefixCode(p.k(), std::move(out));
  }

  // The prefix code P_h built digit by digit from the base-k expansion of h:
  // for digit d_i it contributes a_{d_1+1}...a_{d_{i-1}+1} {a_1, ..., a_{d_i}}.
  inline PrefixCode build_P_h(unsigned k, KRational const& h) {
    if (h.base() != k) {
      detail::fail(ErrorCode::BaseMismatch, "h is not a " + std::to_string(k) + "-ary value");
    }
    if (h > KRational::one(k)) {
      detail::fail(ErrorCode::OutOfRange, h.to_string() + " > 1");
    }
    if (h == KRational::one(k)) {
      return PrefixCode(k, {Word{}});
    }
    std::vector<Word> out;
    Word              spine;
    for (unsigned d : h.digits().fraction) {
      for (unsigned a = 0; a < d; ++a) {
        out.push_back(spine.child(static_cast<Letter>(a)));
      }
      spine = spine.child(static_cast<Letter>(d));
    }
    return PrefixCode(k, std::move(out));
  }

  // Replace the last word in canonical order by its k children; size grows
  // by k-1 and the measure is unchanged.
  inline PrefixCode grow_corner(PrefixCode const& p) {
    if (p.empty()) {
      detail::fail(ErrorCode::EmptyTarget, "cannot grow the empty code");
    }
    return replace_r1(p, p.words().back());
  }

  // All extensions to length n of the words of a code whose words are no
  // longer than n.  Generates the same right ideal up to ends.
  inline PrefixCode extend_to_length(PrefixCode const& p, std::size_t n) {
    std::vector<Word> out;
    for (auto const& w : p) {
      if (w.size() > n) {
        detail::fail(ErrorCode::TooLong,
                     higman::to_string(w) + " longer than " + std::to_string(n));
      }
      for (auto const& tail : all_words(p.k(), n - w.size())) {
        out.push_back(w + tail);
      }
    }
    return PrefixCode(p.k(), std::move(out));
  }

}  // namespace higman
