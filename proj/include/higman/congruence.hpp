// Prefix code congruences: a finite prefix code partitioned into classes.
// The fibers of an element (its part) are the main source of these.

#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "higman/element.hpp"
#include "higman/error.hpp"
#include "higman/kary.hpp"
#include "higman/words.hpp"

namespace higman {

  using WordClass = std::vector<Word>;

  class PrefixCodeCongruence {
   public:
    explicit PrefixCodeCongruence(unsigned k) : _k(k), _code(k) {}

    PrefixCodeCongruence(unsigned k, std::vector<WordClass> classes) : _k(k), _code(k) {
      std::vector<Word> all;
      for (auto& c : classes) {
        if (c.empty()) {
          continue;
        }
        std::sort(c.begin(), c.end());
        all.insert(all.end(), c.begin(), c.end());
        _classes.push_back(std::move(c));
      }
      std::size_t total = all.size();
      _code             = PrefixCode(k, std::move(all));
      if (_code.size() != total) {
        detail::fail(ErrorCode::NotPrefixCode, "classes overlap");
      }
      std::sort(_classes.begin(), _classes.end(), [](WordClass const& x, WordClass const& y) {
        return x.front() < y.front();
      });
    }

    [[nodiscard]] unsigned k() const noexcept {
      return _k;
    }
    [[nodiscard]] PrefixCode const& code() const noexcept {
      return _code;
    }
    // Classes sorted internally and by first word, both canonically.
    [[nodiscard]] std::vector<WordClass> const& classes() const noexcept {
      return _classes;
    }

    [[nodiscard]] std::string to_string() const {
      std::string s;
      for (auto const& c : _classes) {
        s += PrefixCode(_k, c).to_string() + "\n";
      }
      return s;
    }

    friend bool operator==(PrefixCodeCongruence const&, PrefixCodeCongruence const&) = default;

   private:
    unsigned               _k;
    PrefixCode             _code;
    std::vector<WordClass> _classes;
  };

  // Fibers of the image-code restriction, keyed by image word.
  inline std::map<Word, WordClass> fibers(Element const& e) {
    std::map<Word, WordClass> out;
    auto const restricted = image_code_restriction(e.table());
    for (auto const& r : restricted.rows()) {
      out[r.image].push_back(r.domain);
    }
    return out;
  }

  inline PrefixCodeCongruence part(Element const& e) {
    std::vector<WordClass> classes;
    for (auto& [y, c] : fibers(e)) {
      classes.push_back(std::move(c));
    }
    return PrefixCodeCongruence(e.k(), std::move(classes));
  }

  inline PrefixCodeCongruence classwise_replace(PrefixCodeCongruence const& c, WordClass cls) {
    std::sort(cls.begin(), cls.end());
    auto const& cs = c.classes();
    if (std::find(cs.begin(), cs.end(), cls) == cs.end()) {
      detail::fail(ErrorCode::NotAClass, PrefixCode(c.k(), cls).to_string());
    }
    std::vector<WordClass> out;
    for (auto const& x : cs) {
      if (x != cls) {
        out.push_back(x);
      }
    }
    for (unsigned a = 0; a < c.k(); ++a) {
      WordClass child;
      for (auto const& w : cls) {
        child.push_back(w.child(static_cast<Letter>(a)));
      }
      out.push_back(std::move(child));
    }
    return PrefixCodeCongruence(c.k(), std::move(out));
  }

  // Inverse class-wise replacement to a fixpoint: classes C a_1, ..., C a_k
  // merge into C.
  inline PrefixCodeCongruence max_congruence(PrefixCodeCongruence const& c) {
    unsigned               k = c.k();
    std::set<WordClass>    classes(c.classes().begin(), c.classes().end());
    bool                   changed = true;
    while (changed) {
      changed = false;
      for (auto const& cls : classes) {
        bool ends_in_first = std::all_of(cls.begin(), cls.end(), [](Word const& w) {
          return !w.empty() && w.back() == 0;
        });
        if (!ends_in_first) {
          continue;
        }
        WordClass stem;
        for (auto const& w : cls) {
          stem.push_back(w.parent());
        }
        std::vector<WordClass> family;
        for (unsigned a = 0; a < k; ++a) {
          WordClass sib;
          for (auto const& w : stem) {
            sib.push_back(w.child(static_cast<Letter>(a)));
          }
          std::sort(sib.begin(), sib.end());
          family.push_back(std::move(sib));
        }
        bool all_present = std::all_of(family.begin(), family.end(), [&](WordClass const& f) {
          return classes.count(f) > 0;
        });
        if (!all_present) {
          continue;
        }
        for (auto const& f : family) {
          classes.erase(f);
        }
        std::sort(stem.begin(), stem.end());
        classes.insert(std::move(stem));
        changed = true;
        break;  // iterators are stale
      }
    }
    return PrefixCodeCongruence(k, {classes.begin(), classes.end()});
  }

  // The shortest word of each class, ties by dictionary order.
  inline std::vector<Word> representatives(PrefixCodeCongruence const& c) {
    std::vector<Word> reps;
    for (auto const& cls : c.classes()) {
      reps.push_back(cls.front());
    }
    return reps;
  }

  // Amount of collision, computed both from the undefined class and from the
  // representatives; the two must agree.
  inline KRational coll(PrefixCodeCongruence const& c) {
    unsigned  k = c.k();
    KRational via_reps = KRational::one(k);
    for (auto const& m : representatives(c)) {
      via_reps -= mu(k, m);
    }
    KRational via_blocks = complement_code(c.code()).measure();
    for (auto const& cls : c.classes()) {
      via_blocks += mu(k, cls) - mu(k, cls.front());
    }
    if (via_reps != via_blocks) {
      throw std::logic_error("coll formulas disagree: " + via_reps.to_string() + " vs "
                             + via_blocks.to_string());
    }
    return via_reps;
  }

}  // namespace higman
