// Measures through DFAs, the phi_B reduction from forall-counting to
// non-collision, and the padding constructions relating measure and
// counting classes.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "higman/congruence.hpp"
#include "higman/dfa.hpp"
#include "higman/element.hpp"
#include "higman/error.hpp"
#include "higman/formula.hpp"
#include "higman/green.hpp"
#include "higman/kary.hpp"
#include "higman/plep.hpp"
#include "higman/words.hpp"

namespace higman {

  namespace detail {
    inline WordClass const& fiber_of(std::map<Word, WordClass> const& fs, Word const& y) {
      auto it = fs.find(y);
      if (it == fs.end()) {
        fail(ErrorCode::NotInImageCode, to_string(y));
      }
      return it->second;
    }
  }  // namespace detail

  inline KRational preimage_measure(Element const& e, Word const& y) {
    return dfa_measure(trie_dfa(e.k(), detail::fiber_of(fibers(e), y)));
  }

  inline KRational min_rep_measure(Element const& e, Word const& y) {
    auto d = trie_dfa(e.k(), detail::fiber_of(fibers(e), y));
    return KRational::unit(e.k(), dfa_shortest_path(d));
  }

  struct DfaHeights {
    KRational height_R;
    KRational mu_domC;
    KRational coll;
  };

  // Heights assembled from per-fiber DFA computations only.
  inline DfaHeights heights_via_dfa(Element const& e) {
    unsigned k = e.k();
    if (e.is_zero()) {
      return {KRational::zero(k), KRational::zero(k), KRational::one(k)};
    }
    auto       fs = fibers(e);
    DfaHeights h{KRational::zero(k), KRational::zero(k), KRational::one(k)};
    std::vector<Word> images;
    for (auto const& [y, fiber] : fs) {
      images.push_back(y);
      auto d = trie_dfa(k, fiber);
      h.mu_domC += dfa_measure(d);
      h.coll -= KRational::unit(k, dfa_shortest_path(d));
    }
    h.height_R = dfa_measure(trie_dfa(k, images));
    return h;
  }

  namespace detail {
    inline Word bits_word(std::uint64_t bits, unsigned count) {
      Word w;
      for (unsigned i = 0; i < count; ++i) {
        w.letters.push_back(static_cast<Letter>((bits >> i) & 1U));
      }
      return w;
    }
  }  // namespace detail

  // k = 2.  0 y x |-> B(x, y) y and 1 y w |-> 0 y, with y of length n,
  // x of length m and w of length m + 1.
  inline Element phi_B(Formula const& b) {
    if (b.m() + b.n() > max_brute_force_arity) {
      detail::fail(ErrorCode::TooLarge, "m + n = " + std::to_string(b.m() + b.n()));
    }
    if (!is_surjective_formula(b)) {
      detail::fail(ErrorCode::NotSurjective, "some y has no satisfying x; apply ensure_surjectivity");
    }
    unsigned const    m = b.m(), n = b.n();
    std::vector<Row>  rows;
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << n); ++y) {
      Word yw = detail::bits_word(y, n);
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << m); ++x) {
        Word dom = Word{0} + yw + detail::bits_word(x, m);
        Word im  = Word{static_cast<Letter>(b.eval(x, y) ? 1 : 0)} + yw;
        rows.push_back({std::move(dom), std::move(im)});
      }
      for (std::uint64_t w = 0; w < (std::uint64_t{1} << (m + 1)); ++w) {
        rows.push_back({Word{1} + yw + detail::bits_word(w, m + 1), Word{0} + yw});
      }
    }
    return Element(2, std::move(rows));
  }

  inline KRational noncoll(Element const& e) {
    return KRational::one(e.k()) - coll(e);
  }

  // 2^-m - 2^-(n+m+2) N; with m = n this is 2^-n - 2^-(2n+2) N.
  inline KRational phi_B_noncoll_formula(unsigned m, unsigned n, Integer const& n1) {
    return KRational::unit(2, m) - KRational(2, n1, n + m + 2);
  }

  // N recovered from the non-collision value.
  inline Integer phi_B_recover_count(unsigned m, unsigned n, KRational const& nc) {
    KRational scaled = (KRational::unit(2, m) - nc).scale_pow(static_cast<std::int64_t>(n + m + 2));
    if (scaled.exponent() != 0) {
      throw std::logic_error("non-collision value has the wrong denominator");
    }
    return scaled.numerator();
  }

  // a_i |-> a_i a_2, then a_1 padding to length 2p.
  inline Word pad_encode(Word const& w, std::size_t p, unsigned k) {
    check_letters(w, k);
    if (w.size() > p) {
      detail::fail(ErrorCode::TooLong, std::to_string(w.size()) + " > " + std::to_string(p));
    }
    Word out;
    for (Letter a : w.letters) {
      out.letters.push_back(a);
      out.letters.push_back(1);
    }
    out.letters.resize(2 * p, 0);
    return out;
  }

  inline std::vector<PrefixCode> fixedlen_complete(std::vector<PrefixCode> const& codes, std::size_t p) {
    std::vector<PrefixCode> out;
    out.reserve(codes.size());
    for (auto const& c : codes) {
      out.push_back(extend_to_length(c, p));
    }
    return out;
  }

  struct LengthBound {
    bool                       in_image = false;
    std::optional<std::size_t> shortest_preimage;
    std::size_t                bound = 0;
    bool                       ok    = true;
  };

  // Shortest x with W(x) = y, read off the normal form, against
  // |y| + c_gamma |W|.
  inline LengthBound length_bound_check(GeneratorWord const& w, Word const& y, unsigned k) {
    check_letters(y, k);
    auto        e = eval_generator_word(w, k);
    LengthBound r;
    r.bound = y.size() + c_gamma * generator_word_length(w);
    for (auto const& row : e.rows()) {
      if (row.image.is_prefix_of(y)) {
        std::size_t len = row.domain.size() + y.size() - row.image.size();
        if (!r.shortest_preimage || len < *r.shortest_preimage) {
          r.shortest_preimage = len;
        }
      }
    }
    r.in_image = r.shortest_preimage.has_value();
    r.ok       = !r.in_image || *r.shortest_preimage <= r.bound;
    return r;
  }

}  // namespace higman
