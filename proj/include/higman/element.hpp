// Elements of the Thompson-Higman monoid M_{k,1}.
//
// A Table is any finite map from a prefix code to words; it describes the
// right ideal homomorphism x w |-> table(x) w.  Many tables describe the
// same monoid element.  An Element holds the unique maximally extended
// table, so structural equality of Elements is equality in M_{k,1}.

#pragma once

#include <algorithm>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "higman/error.hpp"
#include "higman/kary.hpp"
#include "higman/words.hpp"

namespace higman {

  struct Row {
    Word domain;
    Word image;

    friend bool operator==(Row const&, Row const&) = default;
  };

  namespace detail {
    struct DictLess {
      bool operator()(Word const& x, Word const& y) const {
        return word_cmp_dict(x, y) < 0;
      }
    };

    // Rows keyed by domain word in dictionary order, which makes "is w a
    // proper prefix of some key" a single lower_bound.
    using RowMap = std::map<Word, Word, DictLess>;

    inline Word const* find_prefix_key(RowMap const& m, Word const& w, Word const** key) {
      for (std::size_t n = 0; n <= w.size(); ++n) {
        auto it = m.find(w.prefix(n));
        if (it != m.end()) {
          if (key != nullptr) {
            *key = &it->first;
          }
          return &it->second;
        }
      }
      return nullptr;
    }

    inline bool has_proper_extension_key(RowMap const& m, Word const& w) {
      auto it = m.upper_bound(w);
      return it != m.end() && w.is_prefix_of(it->first) && it->first != w;
    }
  }  // namespace detail

  class Table {
   public:
    explicit Table(unsigned k) : _k(k) {
      KRational::zero(k);
    }

    Table(unsigned k, std::vector<Row> rows) : _k(k), _rows(std::move(rows)) {
      KRational::zero(k);
      std::vector<Word> dom;
      for (auto const& r : _rows) {
        check_letters(r.domain, k);
        check_letters(r.image, k);
        dom.push_back(r.domain);
      }
      std::sort(dom.begin(), dom.end());
      if (std::adjacent_find(dom.begin(), dom.end()) != dom.end() || !is_prefix_code(dom)) {
        detail::fail(ErrorCode::DomainNotPrefixCode, "domain words do not form a prefix code");
      }
      std::sort(_rows.begin(), _rows.end(), [](Row const& x, Row const& y) {
        return x.domain < y.domain;
      });
    }

    [[nodiscard]] unsigned k() const noexcept {
      return _k;
    }
    [[nodiscard]] std::vector<Row> const& rows() const noexcept {
      return _rows;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _rows.size();
    }
    [[nodiscard]] bool empty() const noexcept {
      return _rows.empty();
    }

    [[nodiscard]] PrefixCode domain_code() const {
      std::vector<Word> dom;
      dom.reserve(_rows.size());
      for (auto const& r : _rows) {
        dom.push_back(r.domain);
      }
      return PrefixCode(_k, std::move(dom));
    }

    // Image words, one per row, possibly repeated and not a prefix code.
    [[nodiscard]] std::vector<Word> image_multiset() const {
      std::vector<Word> im;
      im.reserve(_rows.size());
      for (auto const& r : _rows) {
        im.push_back(r.image);
      }
      return im;
    }

    [[nodiscard]] bool image_is_prefix_code() const {
      return is_prefix_code(distinct_images());
    }

    [[nodiscard]] std::vector<Word> distinct_images() const {
      auto im = image_multiset();
      std::sort(im.begin(), im.end());
      im.erase(std::unique(im.begin(), im.end()), im.end());
      return im;
    }

    [[nodiscard]] Word const* image_of(Word const& x) const {
      auto it = std::lower_bound(_rows.begin(), _rows.end(), x, [](Row const& r, Word const& w) {
        return r.domain < w;
      });
      return it != _rows.end() && it->domain == x ? &it->image : nullptr;
    }

    [[nodiscard]] std::size_t max_domain_length() const {
      std::size_t m = 0;
      for (auto const& r : _rows) {
        m = std::max(m, r.domain.size());
      }
      return m;
    }

    [[nodiscard]] std::size_t max_image_length() const {
      std::size_t m = 0;
      for (auto const& r : _rows) {
        m = std::max(m, r.image.size());
      }
      return m;
    }

    [[nodiscard]] std::string to_string() const {
      std::string s = "k " + std::to_string(_k) + "\n";
      for (auto const& r : _rows) {
        s += higman::to_string(r.domain) + " -> " + higman::to_string(r.image) + "\n";
      }
      return s;
    }

    friend bool operator==(Table const&, Table const&) = default;

   private:
    unsigned         _k;
    std::vector<Row> _rows;  // sorted by domain word, canonical order
  };

  // Merge sibling families {(xa, ya) : a in A} into (x, y) until none remain.
  inline Table max_extension(Table const& t) {
    unsigned                 k = t.k();
    std::map<Word, Word>     rows;
    for (auto const& r : t.rows()) {
      rows.emplace(r.domain, r.image);
    }
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<Word> parents;
      for (auto const& [x, y] : rows) {
        if (!x.empty() && x.back() == 0 && !y.empty() && y.back() == 0) {
          parents.push_back(x.parent());
        }
      }
      for (auto const& x : parents) {
        Word const y         = rows.at(x.child(0)).parent();
        bool       mergeable = true;
        for (unsigned a = 1; a < k && mergeable; ++a) {
          auto it   = rows.find(x.child(static_cast<Letter>(a)));
          mergeable = it != rows.end() && it->second == y.child(static_cast<Letter>(a));
        }
        if (mergeable) {
          for (unsigned a = 0; a < k; ++a) {
            rows.erase(x.child(static_cast<Letter>(a)));
          }
          rows.emplace(x, y);
          changed = true;
        }
      }
    }
    std::vector<Row> out;
    out.reserve(rows.size());
    for (auto& [x, y] : rows) {
      out.push_back({x, y});
    }
    return Table(k, std::move(out));
  }

  class Element {
   public:
    // The zero element (empty table).
    explicit Element(unsigned k) : _table(k) {}

    explicit Element(Table const& t) : _table(max_extension(t)) {}

    Element(unsigned k, std::vector<Row> rows) : Element(Table(k, std::move(rows))) {}

    static Element zero(unsigned k) {
      return Element(k);
    }

    static Element identity(unsigned k) {
      return Element(k, {{Word{}, Word{}}});
    }

    [[nodiscard]] unsigned k() const noexcept {
      return _table.k();
    }
    [[nodiscard]] Table const& table() const noexcept {
      return _table;
    }
    [[nodiscard]] std::vector<Row> const& rows() const noexcept {
      return _table.rows();
    }
    [[nodiscard]] bool is_zero() const noexcept {
      return _table.empty();
    }

    [[nodiscard]] std::string to_string() const {
      return _table.to_string();
    }

    friend bool operator==(Element const&, Element const&) = default;

   private:
    Table _table;
  };

  inline Element make_element(unsigned k, std::vector<Row> rows) {
    return Element(k, std::move(rows));
  }

  inline Element single_row(unsigned k, Word const& u, Word const& v) {
    return Element(k, {{u, v}});
  }

  inline Element partial_identity(PrefixCode const& p) {
    std::vector<Row> rows;
    for (auto const& w : p) {
      rows.push_back({w, w});
    }
    return Element(p.k(), std::move(rows));
  }

  // One essentially equal restriction step: (x, y) becomes {(xa, ya)}.
  inline Table restrict_row(Table const& t, Word const& x) {
    if (t.image_of(x) == nullptr) {
      detail::fail(ErrorCode::NotInDomainCode, to_string(x));
    }
    std::vector<Row> out;
    for (auto const& r : t.rows()) {
      if (r.domain != x) {
        out.push_back(r);
        continue;
      }
      for (unsigned a = 0; a < t.k(); ++a) {
        out.push_back({r.domain.child(static_cast<Letter>(a)), r.image.child(static_cast<Letter>(a))});
      }
    }
    return Table(t.k(), std::move(out));
  }

  // Split rows until the set of image words is a prefix code.  Each step
  // splits the row with the shortest offending image; ties go to the
  // dictionary-first domain word.
  inline Table image_code_restriction(Table const& t) {
    unsigned         k = t.k();
    std::vector<Row> rows(t.rows());
    while (true) {
      std::vector<Word> images;
      images.reserve(rows.size());
      for (auto const& r : rows) {
        images.push_back(r.image);
      }
      std::sort(images.begin(), images.end(), detail::DictLess{});
      images.erase(std::unique(images.begin(), images.end()), images.end());
      // An image is offending iff the next distinct image in dictionary
      // order extends it.
      std::optional<Word> worst;
      for (std::size_t i = 0; i + 1 < images.size(); ++i) {
        if (images[i].is_prefix_of(images[i + 1]) && (!worst || images[i] < *worst)) {
          worst = images[i];
        }
      }
      if (!worst) {
        break;
      }
      std::size_t pick = rows.size();
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].image == *worst
            && (pick == rows.size() || word_cmp_dict(rows[i].domain, rows[pick].domain) < 0)) {
          pick = i;
        }
      }
      Row split = rows[pick];
      rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(pick));
      for (unsigned a = 0; a < k; ++a) {
        rows.push_back({split.domain.child(static_cast<Letter>(a)), split.image.child(static_cast<Letter>(a))});
      }
    }
    return Table(k, std::move(rows));
  }

  // Split every row until all domain words have length m.
  inline Table uniform_domain_restriction(Table const& t, std::size_t m) {
    if (m < t.max_domain_length()) {
      detail::fail(ErrorCode::LengthTooSmall,
                   std::to_string(m) + " < " + std::to_string(t.max_domain_length()));
    }
    std::vector<Row> out;
    for (auto const& r : t.rows()) {
      for (auto const& tail : all_words(t.k(), m - r.domain.size())) {
        out.push_back({r.domain + tail, r.image + tail});
      }
    }
    return Table(t.k(), std::move(out));
  }

  namespace detail {
    inline void require_image_code(Table const& t) {
      if (!t.image_is_prefix_code()) {
        fail(ErrorCode::NotPrefixCode, "table image is not a prefix code");
      }
    }

    // Class-wise replacement on the class of rows mapping to `image`.
    inline std::vector<Row> split_class(std::vector<Row> const& rows, Word const& image, unsigned k) {
      std::vector<Row> out;
      for (auto const& r : rows) {
        if (r.image != image) {
          out.push_back(r);
          continue;
        }
        for (unsigned a = 0; a < k; ++a) {
          out.push_back({r.domain.child(static_cast<Letter>(a)), r.image.child(static_cast<Letter>(a))});
        }
      }
      return out;
    }
  }  // namespace detail

  // Class-wise splits until every image word has the same length.
  inline Table uniform_image_restriction(Table const& t) {
    detail::require_image_code(t);
    std::vector<Row> rows(t.rows());
    std::size_t      target = t.max_image_length();
    while (true) {
      std::optional<Word> shortest;
      for (auto const& r : rows) {
        if (r.image.size() < target && (!shortest || r.image < *shortest)) {
          shortest = r.image;
        }
      }
      if (!shortest) {
        break;
      }
      rows = detail::split_class(rows, *shortest, t.k());
    }
    return Table(t.k(), std::move(rows));
  }

  // Class-wise splits until the minimum-length representatives of all
  // classes share one length.
  inline Table equalize_min_reps(Table const& t) {
    detail::require_image_code(t);
    std::vector<Row> rows(t.rows());
    while (true) {
      std::map<Word, std::size_t> min_len;
      for (auto const& r : rows) {
        auto [it, fresh] = min_len.emplace(r.image, r.domain.size());
        if (!fresh) {
          it->second = std::min(it->second, r.domain.size());
        }
      }
      std::size_t top = 0;
      for (auto const& [y, len] : min_len) {
        top = std::max(top, len);
      }
      std::optional<Word> lowest;
      std::size_t         lowest_len = top;
      for (auto const& [y, len] : min_len) {
        if (len < lowest_len) {
          lowest     = y;
          lowest_len = len;
        }
      }
      if (!lowest) {
        break;
      }
      rows = detail::split_class(rows, *lowest, t.k());
    }
    return Table(t.k(), std::move(rows));
  }

  // f o g: apply g first, then f, then take the maximal extension.
  inline Element compose(Element const& f, Element const& g) {
    if (f.k() != g.k()) {
      detail::fail(ErrorCode::AlphabetMismatch, "compose over different alphabets");
    }
    unsigned        k = f.k();
    detail::RowMap  fdom;
    for (auto const& r : f.rows()) {
      fdom.emplace(r.domain, r.image);
    }
    std::vector<Row> out;
    // Explicit stack of (x, y) pairs from g still to be resolved against f.
    std::vector<Row> todo(g.rows().rbegin(), g.rows().rend());
    while (!todo.empty()) {
      Row cur = std::move(todo.back());
      todo.pop_back();
      Word const* key   = nullptr;
      Word const* fimg  = detail::find_prefix_key(fdom, cur.image, &key);
      if (fimg != nullptr) {
        out.push_back({cur.domain, *fimg + cur.image.suffix_from(key->size())});
      } else if (detail::has_proper_extension_key(fdom, cur.image)) {
        for (unsigned a = k; a-- > 0;) {
          todo.push_back({cur.domain.child(static_cast<Letter>(a)), cur.image.child(static_cast<Letter>(a))});
        }
      }
    }
    return Element(Table(k, std::move(out)));
  }

  enum class ApplyStatus { Value, Undefined, NeedLongerWord };

  struct ApplyResult {
    ApplyStatus status;
    Word        value;

    friend bool operator==(ApplyResult const&, ApplyResult const&) = default;
  };

  // The partial action on finite words.
  inline ApplyResult apply(Table const& t, Word const& w) {
    for (auto const& r : t.rows()) {
      if (r.domain.is_prefix_of(w)) {
        return {ApplyStatus::Value, r.image + w.suffix_from(r.domain.size())};
      }
    }
    for (auto const& r : t.rows()) {
      if (w.is_prefix_of(r.domain)) {
        return {ApplyStatus::NeedLongerWord, {}};
      }
    }
    return {ApplyStatus::Undefined, {}};
  }

  inline ApplyResult apply(Element const& e, Word const& w) {
    return apply(e.table(), w);
  }

  inline PrefixCode domC(Element const& e) {
    return e.table().domain_code();
  }

  // The image code of the canonical image-code restriction.
  inline PrefixCode imC(Element const& e) {
    return PrefixCode(e.k(), image_code_restriction(e.table()).distinct_images());
  }

  inline bool is_idempotent(Element const& e) {
    return compose(e, e) == e;
  }

  inline bool is_injective(Element const& e) {
    auto t  = image_code_restriction(e.table());
    auto im = t.image_multiset();
    std::sort(im.begin(), im.end());
    return std::adjacent_find(im.begin(), im.end()) == im.end();
  }

  inline bool is_total(Element const& e) {
    return domC(e).is_maximal();
  }

  inline bool is_surjective(Element const& e) {
    return imC(e).is_maximal();
  }

  // Inverse in Inv_{k,1}; rejects non-injective elements.
  inline Element inverse(Element const& e) {
    if (!is_injective(e)) {
      detail::fail(ErrorCode::NotInjective, "inverse of a non-injective element");
    }
    std::vector<Row> flipped;
    auto const restricted = image_code_restriction(e.table());
    for (auto const& r : restricted.rows()) {
      flipped.push_back({r.image, r.domain});
    }
    return Element(e.k(), std::move(flipped));
  }

  // Table file format: `k <int>` then `dom -> im` rows; `#` starts a comment.
  inline Table parse_table(std::istream& in, std::optional<unsigned> default_k = std::nullopt) {
    std::optional<unsigned> k = default_k;
    bool                    seen_header = false;
    std::vector<std::pair<std::string, std::string>> raw;
    std::string             line;
    std::size_t             lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
      }
      std::istringstream ls(line);
      std::string        a, arrow, b, extra;
      if (!(ls >> a)) {
        continue;
      }
      if (a == "k") {
        unsigned kv = 0;
        if (seen_header || !raw.empty() || !(ls >> kv) || (ls >> extra)) {
          throw ParseError("line " + std::to_string(lineno) + ": bad k header");
        }
        k           = kv;
        seen_header = true;
        continue;
      }
      if (!(ls >> arrow >> b) || arrow != "->" || (ls >> extra)) {
        throw ParseError("line " + std::to_string(lineno) + ": expected `dom -> im`");
      }
      raw.emplace_back(a, b);
    }
    if (!k) {
      throw ParseError("missing `k <int>` header (or --k option)");
    }
    if (*k < 2) {
      throw ParseError("k must be at least 2");
    }
    std::vector<Row> rows;
    for (auto const& [a, b] : raw) {
      rows.push_back({parse_word(a, *k), parse_word(b, *k)});
    }
    return Table(*k, std::move(rows));
  }

  inline Table parse_table(std::string const& text, std::optional<unsigned> default_k = std::nullopt) {
    std::istringstream in(text);
    return parse_table(in, default_k);
  }

}  // namespace higman
