// Green's relations, heights, collision and D-class index in M_{k,1}, plus
// elements of prescribed heights and separating contexts for distinct
// elements.

#pragma once

#include <boost/rational.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "higman/congruence.hpp"
#include "higman/element.hpp"
#include "higman/error.hpp"
#include "higman/kary.hpp"
#include "higman/words.hpp"

namespace higman {

  // A finite sum of terms c * k^(-q) with rational q.  Exact as a k-ary
  // rational only when every q is an integer.
  class ExpSum {
   public:
    using Exponent = boost::rational<long long>;

    explicit ExpSum(unsigned k) : _k(k) {}

    void add(Exponent q, Integer count = 1) {
      _terms[q] += count;
    }

    [[nodiscard]] unsigned k() const noexcept {
      return _k;
    }
    [[nodiscard]] std::map<Exponent, Integer> const& terms() const noexcept {
      return _terms;
    }

    [[nodiscard]] std::optional<KRational> exact() const {
      KRational total(_k);
      for (auto const& [q, c] : _terms) {
        if (q.denominator() != 1 || q.numerator() < 0) {
          return std::nullopt;
        }
        total += KRational(_k, c, static_cast<std::uint64_t>(q.numerator()));
      }
      return total;
    }

    // The k-ary value when exact, otherwise e.g. `2*2^-(3/2) + 2^-2`.
    [[nodiscard]] std::string to_string() const {
      if (auto v = exact()) {
        return v->to_string();
      }
      std::string s;
      for (auto const& [q, c] : _terms) {
        if (!s.empty()) {
          s += " + ";
        }
        if (c != 1) {
          s += c.str() + "*";
        }
        s += std::to_string(_k) + "^-";
        if (q.denominator() == 1) {
          s += std::to_string(q.numerator());
        } else {
          s += "(" + std::to_string(q.numerator()) + "/" + std::to_string(q.denominator()) + ")";
        }
      }
      return s.empty() ? "0" : s;
    }

    friend bool operator==(ExpSum const&, ExpSum const&) = default;

   private:
    unsigned                    _k;
    std::map<Exponent, Integer> _terms;
  };

  inline KRational height_R(Element const& e) {
    return imC(e).measure();
  }

  inline KRational coll(Element const& e) {
    return coll(part(e));
  }

  inline KRational height_L(Element const& e) {
    return KRational::one(e.k()) - coll(e);
  }

  inline KRational height_L_max(Element const& e) {
    KRational total(e.k());
    auto const p = part(e);
    for (auto const& cls : p.classes()) {
      total += mu(e.k(), cls.back());
    }
    return total;
  }

  namespace detail {
    inline std::vector<long long> class_lengths(WordClass const& cls) {
      std::vector<long long> ls;
      for (auto const& w : cls) {
        ls.push_back(static_cast<long long>(w.size()));
      }
      return ls;  // sorted, since classes are
    }
  }  // namespace detail

  inline ExpSum height_L_ave(Element const& e) {
    ExpSum s(e.k());
    auto const p = part(e);
    for (auto const& cls : p.classes()) {
      auto      ls = detail::class_lengths(cls);
      long long total = 0;
      for (auto l : ls) {
        total += l;
      }
      s.add(ExpSum::Exponent(total, static_cast<long long>(ls.size())));
    }
    return s;
  }

  inline ExpSum height_L_med(Element const& e) {
    ExpSum s(e.k());
    auto const p = part(e);
    for (auto const& cls : p.classes()) {
      auto        ls = detail::class_lengths(cls);
      std::size_t n  = ls.size();
      if (n % 2 == 1) {
        s.add(ExpSum::Exponent(ls[n / 2]));
      } else {
        s.add(ExpSum::Exponent(ls[n / 2 - 1] + ls[n / 2], 2));
      }
    }
    return s;
  }

  // D-class index in {1..k-1}; nullopt for the zero element.
  inline std::optional<unsigned> d_index_M(Element const& e) {
    if (e.is_zero()) {
      return std::nullopt;
    }
    unsigned i = residue_1_to_km1(Integer(imC(e).size()), e.k());
    if (height_R(e).digitsum_mod() != i || height_L(e).digitsum_mod() != i) {
      throw std::logic_error("D-index formulas disagree");
    }
    return i;
  }

  struct HeightReport {
    KRational               height_R;
    KRational               height_L_min;
    KRational               height_L_max;
    ExpSum                  height_L_ave;
    ExpSum                  height_L_med;
    KRational               coll;
    std::optional<unsigned> d_index_M;

    [[nodiscard]] std::string to_string() const {
      std::string s;
      s += "height_R " + height_R.to_string() + "\n";
      s += "height_L_min " + height_L_min.to_string() + "\n";
      s += "height_L_max " + height_L_max.to_string() + "\n";
      s += "height_L_ave " + height_L_ave.to_string() + "\n";
      s += "height_L_med " + height_L_med.to_string() + "\n";
      s += "coll " + coll.to_string() + "\n";
      s += "d_index " + (d_index_M ? std::to_string(*d_index_M) : std::string("zero")) + "\n";
      return s;
    }
  };

  inline HeightReport heights(Element const& e) {
    KRational c = coll(e);
    return {height_R(e),
            KRational::one(e.k()) - c,
            height_L_max(e),
            height_L_ave(e),
            height_L_med(e),
            c,
            d_index_M(e)};
  }

  inline bool leq_R(Element const& f, Element const& g) {
    return ideal_ess_leq(imC(f), imC(g));
  }

  inline bool equiv_R(Element const& f, Element const& g) {
    return leq_R(f, g) && leq_R(g, f);
  }

  // f <=_L g, i.e. f = h g for some h.  Saturate part(g), refine class-wise
  // past the depth of domC(f), then f must be undefined on or constant over
  // every class.
  inline bool leq_L(Element const& f, Element const& g) {
    if (f.k() != g.k()) {
      detail::fail(ErrorCode::AlphabetMismatch, "leq_L over different alphabets");
    }
    if (!ideal_ess_leq(domC(f), domC(g))) {
      return false;
    }
    std::size_t depth = domC(f).max_length();
    auto        m     = max_congruence(part(g));
    while (true) {
      WordClass const* shallow = nullptr;
      for (auto const& cls : m.classes()) {
        if (cls.front().size() < depth) {
          shallow = &cls;
          break;
        }
      }
      if (shallow == nullptr) {
        break;
      }
      m = classwise_replace(m, *shallow);
    }
    for (auto const& cls : m.classes()) {
      auto first = apply(f, cls.front());
      for (auto const& w : cls) {
        if (apply(f, w) != first) {
          return false;
        }
      }
    }
    return true;
  }

  inline bool equiv_L(Element const& f, Element const& g) {
    return leq_L(f, g) && leq_L(g, f);
  }

  inline bool equiv_D_M(Element const& f, Element const& g) {
    return d_index_M(f) == d_index_M(g);
  }

  inline Element dense_chain_element(unsigned k, KRational const& h) {
    return partial_identity(build_P_h(k, h));
  }

  // An injective element with height_L = h1 and height_R = h2.
  inline Element element_with_heights(unsigned k, KRational const& h1, KRational const& h2) {
    for (auto const* h : {&h1, &h2}) {
      if (h->base() != k) {
        detail::fail(ErrorCode::BaseMismatch, "height is not " + std::to_string(k) + "-ary");
      }
      if (h->is_zero() || *h > KRational::one(k)) {
        detail::fail(ErrorCode::OutOfRange, h->to_string() + " not in (0, 1]");
      }
    }
    if (residue_1_to_km1(h1.num(), k) != residue_1_to_km1(h2.num(), k)) {
      detail::fail(ErrorCode::IndexMismatch, "numerators differ mod k-1");
    }
    PrefixCode p = build_P_h(k, h1);
    PrefixCode q = build_P_h(k, h2);
    while (p.size() < q.size()) {
      p = grow_corner(p);
    }
    while (q.size() < p.size()) {
      q = grow_corner(q);
    }
    std::vector<Row> rows;
    for (std::size_t i = 0; i < p.size(); ++i) {
      rows.push_back({p.words()[i], q.words()[i]});
    }
    return Element(k, std::move(rows));
  }

  struct SeparatingContext {
    Element     left;
    Element     right;
    std::string case_label;
  };

  namespace detail {
    // A word x0 with x0 A* inside P A* and disjoint from Q A*, if any.
    inline std::optional<Word> uncovered_witness(PrefixCode const& p, PrefixCode const& q) {
      auto outside = complement_code(q);
      for (auto const& x : p) {
        for (auto const& y : outside) {
          if (x.comparable(y)) {
            return x.size() >= y.size() ? x : y;
          }
        }
      }
      return std::nullopt;
    }

    inline Element self_row(unsigned k, Word const& w) {
      return single_row(k, w, w);
    }
  }  // namespace detail

  // Contexts (left, right) such that exactly one of left f right and
  // left g right is zero and the other is a one-row element.
  inline SeparatingContext separating_context(Element const& f, Element const& g) {
    if (f.k() != g.k()) {
      detail::fail(ErrorCode::AlphabetMismatch, "separating_context over different alphabets");
    }
    if (f == g) {
      detail::fail(ErrorCode::NotDistinct, "elements are equal");
    }
    unsigned k = f.k();
    if (f.is_zero() || g.is_zero()) {
      Row const& r = (f.is_zero() ? g : f).rows().front();
      return {detail::self_row(k, r.image), detail::self_row(k, r.domain), "0"};
    }
    auto df = domC(f), dg = domC(g);
    for (auto const& [p, q] : {std::pair{df, dg}, std::pair{dg, df}}) {
      if (auto x0 = detail::uncovered_witness(p, q)) {
        return {Element::identity(k), detail::self_row(k, *x0), "1"};
      }
    }
    auto const ff = image_code_restriction(f.table());
    auto const fg = image_code_restriction(g.table());
    auto       im_f = imC(f), im_g = imC(g);
    for (auto const& [p, q, t] :
         {std::tuple{im_f, im_g, &ff}, std::tuple{im_g, im_f, &fg}}) {
      if (auto y0 = detail::uncovered_witness(p, q)) {
        for (auto const& r : t->rows()) {
          if (r.image.is_prefix_of(*y0)) {
            Word x0 = r.domain + y0->suffix_from(r.image.size());
            return {detail::self_row(k, *y0), detail::self_row(k, x0), "2.1"};
          }
        }
      }
    }
    std::size_t n  = std::max(f.table().max_domain_length(), g.table().max_domain_length());
    auto        uf = uniform_domain_restriction(f.table(), n);
    auto        ug = uniform_domain_restriction(g.table(), n);
    for (auto const& r : uf.rows()) {
      Word const* other = ug.image_of(r.domain);
      if (other == nullptr || *other == r.image) {
        continue;
      }
      Word const& y0 = r.image;
      Word const& y1 = *other;
      if (!y0.comparable(y1)) {
        return {detail::self_row(k, y0), detail::self_row(k, r.domain), "2.2.1"};
      }
      Word const& shorter = y0.size() < y1.size() ? y0 : y1;
      Word const& longer  = y0.size() < y1.size() ? y1 : y0;
      Letter      next    = longer[shorter.size()];
      Word        y2      = shorter.child(static_cast<Letter>((next + 1) % k));
      return {detail::self_row(k, y2), detail::self_row(k, r.domain), "2.2.2"};
    }
    // Distinct elements always fall in one of the cases above.
    throw std::logic_error("separating_context: no case applies");
  }

}  // namespace higman
