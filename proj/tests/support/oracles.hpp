// Random generators and brute-force reference computations for the tests.
// The oracles deliberately avoid the library's own algorithms: they work on
// raw rows and enumerate words to a fixed depth.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "higman/higman.hpp"

namespace oracle {

  using higman::Element;
  using higman::KRational;
  using higman::Letter;
  using higman::PrefixCode;
  using higman::Row;
  using higman::Word;
  using Rational = boost::multiprecision::cpp_rational;
  using Rng      = std::mt19937_64;

  inline Rational to_rational(KRational const& x) {
    return Rational(x.numerator(), higman::ipow(x.base(), x.exponent()));
  }

  // Plain fraction sum over distinct words.
  inline Rational mu(unsigned k, std::vector<Word> ws) {
    std::sort(ws.begin(), ws.end());
    ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
    Rational total = 0;
    for (auto const& w : ws) {
      total += Rational(1, higman::ipow(k, w.size()));
    }
    return total;
  }

  inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  }

  inline Word random_word(Rng& rng, unsigned k, std::size_t max_len, std::size_t min_len = 0) {
    Word w;
    std::size_t n = uniform(rng, min_len, max_len);
    for (std::size_t i = 0; i < n; ++i) {
      w.letters.push_back(static_cast<Letter>(uniform(rng, 0, k - 1)));
    }
    return w;
  }

  // Random tree cut: every node below max_depth is split with probability
  // `split`, each leaf kept with probability `keep`.
  inline PrefixCode random_code(Rng& rng, unsigned k, std::size_t max_depth, double split = 0.5,
                                double keep = 0.7) {
    std::bernoulli_distribution split_d(split), keep_d(keep);
    std::vector<Word>           leaves;
    std::vector<Word>           todo{Word{}};
    while (!todo.empty()) {
      Word w = todo.back();
      todo.pop_back();
      if (w.size() < max_depth && split_d(rng)) {
        for (unsigned a = 0; a < k; ++a) {
          todo.push_back(w.child(static_cast<Letter>(a)));
        }
      } else if (keep_d(rng)) {
        leaves.push_back(w);
      }
    }
    return PrefixCode(k, leaves);
  }

  inline PrefixCode random_maximal_code(Rng& rng, unsigned k, std::size_t max_depth, double split = 0.5) {
    return random_code(rng, k, max_depth, split, 1.0);
  }

  inline std::vector<Row> random_rows(Rng& rng, unsigned k, std::size_t depth, std::size_t image_len,
                                      double keep = 0.7) {
    std::vector<Row> rows;
    for (auto const& x : random_code(rng, k, depth, 0.5, keep)) {
      rows.push_back({x, random_word(rng, k, image_len)});
    }
    return rows;
  }

  inline Element random_element(Rng& rng, unsigned k, std::size_t depth, std::size_t image_len = 3,
                                double keep = 0.7) {
    return Element(k, random_rows(rng, k, depth, image_len, keep));
  }

  // Random element with many collisions: images drawn from a small pool.
  inline Element random_colliding_element(Rng& rng, unsigned k, std::size_t depth, std::size_t pool_size = 3) {
    std::vector<Word> pool;
    for (std::size_t i = 0; i < pool_size; ++i) {
      pool.push_back(random_word(rng, k, 3));
    }
    std::vector<Row> rows;
    for (auto const& x : random_code(rng, k, depth)) {
      rows.push_back({x, pool[uniform(rng, 0, pool.size() - 1)]});
    }
    return Element(k, std::move(rows));
  }

  // Random injective element: a random code paired with a shuffled random
  // code of equal size, grown until sizes agree.
  inline Element random_injective(Rng& rng, unsigned k, std::size_t depth) {
    PrefixCode p = random_code(rng, k, depth);
    PrefixCode q = random_code(rng, k, depth);
    if (p.empty() || q.empty()) {
      return Element(k);
    }
    while (p.size() % (k - 1) != q.size() % (k - 1) && k > 2) {
      q = random_code(rng, k, depth);
      if (q.empty()) {
        return Element(k);
      }
    }
    while (p.size() < q.size()) {
      p = higman::replace_r1(p, p.words()[uniform(rng, 0, p.size() - 1)]);
    }
    while (q.size() < p.size()) {
      q = higman::replace_r1(q, q.words()[uniform(rng, 0, q.size() - 1)]);
    }
    std::vector<Word> targets = q.words();
    std::shuffle(targets.begin(), targets.end(), rng);
    std::vector<Row> rows;
    for (std::size_t i = 0; i < p.size(); ++i) {
      rows.push_back({p.words()[i], targets[i]});
    }
    return Element(k, std::move(rows));
  }

  // Action of a raw table on a word; nullopt covers both undefined and
  // too-short inputs.
  inline std::optional<Word> act(std::vector<Row> const& rows, Word const& w) {
    for (auto const& r : rows) {
      if (r.domain.size() <= w.size()
          && std::equal(r.domain.letters.begin(), r.domain.letters.end(), w.letters.begin())) {
        Word out = r.image;
        out.letters.insert(out.letters.end(), w.letters.begin() + static_cast<std::ptrdiff_t>(r.domain.size()),
                           w.letters.end());
        return out;
      }
    }
    return std::nullopt;
  }

  inline std::size_t max_domain_length(std::vector<Row> const& rows) {
    std::size_t n = 0;
    for (auto const& r : rows) {
      n = std::max(n, r.domain.size());
    }
    return n;
  }

  // Two tables are the same element iff they act identically on A^D for D
  // at least every domain length.
  inline bool same_element(unsigned k, std::vector<Row> const& f, std::vector<Row> const& g) {
    std::size_t d = std::max(max_domain_length(f), max_domain_length(g));
    for (auto const& w : higman::all_words(k, d)) {
      if (act(f, w) != act(g, w)) {
        return false;
      }
    }
    return true;
  }

  // Does f o g act like h on all words of length D?
  inline bool composes_to(unsigned k, std::vector<Row> const& f, std::vector<Row> const& g,
                          std::vector<Row> const& h, std::size_t d) {
    for (auto const& w : higman::all_words(k, d)) {
      auto mid  = act(g, w);
      auto want = mid ? act(f, *mid) : std::nullopt;
      // f may need a longer input than g produced: then extend w.
      if (mid && !want) {
        bool prefix_of_domain = std::any_of(f.begin(), f.end(), [&](Row const& r) {
          return mid->is_prefix_of(r.domain) && *mid != r.domain;
        });
        if (prefix_of_domain) {
          continue;
        }
      }
      auto got = act(h, w);
      if (got != want) {
        return false;
      }
    }
    return true;
  }

  // Image ideal containment checked on all words of the longest image
  // length.
  inline bool image_ideal_leq(unsigned k, std::vector<Row> const& f, std::vector<Row> const& g) {
    std::size_t l = 0;
    for (auto const* t : {&f, &g}) {
      for (auto const& r : *t) {
        l = std::max(l, r.image.size());
      }
    }
    auto in_ideal = [](std::vector<Row> const& t, Word const& v) {
      return std::any_of(t.begin(), t.end(), [&](Row const& r) { return r.image.is_prefix_of(v); });
    };
    for (auto const& v : higman::all_words(k, l)) {
      if (in_ideal(f, v) && !in_ideal(g, v)) {
        return false;
      }
    }
    return true;
  }

  // f = h g for some h, decided on A^N: Dom f inside Dom g, and whenever
  // g(x2) = g(x1) s we need f(x2) = f(x1 s).
  inline bool left_divides(unsigned k, std::vector<Row> const& f, std::vector<Row> const& g, std::size_t n) {
    auto words = higman::all_words(k, n);
    std::vector<std::optional<Word>> gv;
    for (auto const& w : words) {
      if (act(f, w) && !act(g, w)) {
        return false;
      }
      gv.push_back(act(g, w));
    }
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (!gv[i]) {
        continue;
      }
      for (std::size_t j = 0; j < words.size(); ++j) {
        if (!gv[j] || !gv[i]->is_prefix_of(*gv[j])) {
          continue;
        }
        Word s  = gv[j]->suffix_from(gv[i]->size());
        Word x1 = words[i] + s;
        if (act(f, x1) != act(f, words[j])) {
          return false;
        }
      }
    }
    return true;
  }

  // Sum over image-code words y of k^-|shortest x with f(x) = y|, by search.
  inline Rational height_L_by_search(Element const& e) {
    unsigned    k     = e.k();
    std::size_t depth = 0;
    auto        code  = higman::imC(e);
    for (auto const& r : e.rows()) {
      depth = std::max(depth, r.domain.size());
    }
    depth += code.max_length() + 1;
    Rational total = 0;
    for (auto const& y : code) {
      for (std::size_t len = 0; len <= depth; ++len) {
        bool found = false;
        for (auto const& x : higman::all_words(k, len)) {
          if (act(e.rows(), x) == y) {
            found = true;
            break;
          }
        }
        if (found) {
          total += Rational(1, higman::ipow(k, len));
          break;
        }
      }
    }
    return total;
  }

  inline KRational random_kary(Rng& rng, unsigned k, std::size_t max_digits, bool allow_one = true) {
    if (allow_one && uniform(rng, 0, 20) == 0) {
      return KRational::one(k);
    }
    std::size_t     n = uniform(rng, 1, max_digits);
    higman::Integer a = 0;
    for (std::size_t i = 0; i < n; ++i) {
      a = a * k + static_cast<unsigned>(uniform(rng, 0, k - 1));
    }
    return KRational(k, a, n);
  }

  // Random congruence: a random code split into random classes.
  inline higman::PrefixCodeCongruence random_congruence(Rng& rng, unsigned k, std::size_t depth) {
    auto                   p = random_code(rng, k, depth, 0.6, 0.8);
    std::size_t            n = 1 + uniform(rng, 0, 3);
    std::vector<higman::WordClass> classes(n);
    for (auto const& x : p) {
      classes[uniform(rng, 0, n - 1)].push_back(x);
    }
    return higman::PrefixCodeCongruence(k, classes);
  }

  // Idempotent: Q maps to itself, the rest of the domain lands inside Q A*.
  inline Element random_idempotent(Rng& rng, unsigned k) {
    auto p = random_code(rng, k, 3, 0.6, 0.9);
    std::vector<Word> q, rest;
    for (auto const& x : p) {
      (uniform(rng, 0, 2) == 0 ? rest : q).push_back(x);
    }
    if (q.empty()) {
      return Element(k);
    }
    std::vector<Row> rows;
    for (auto const& x : q) {
      rows.push_back({x, x});
    }
    for (auto const& x : rest) {
      rows.push_back({x, q[uniform(rng, 0, q.size() - 1)] + random_word(rng, k, 2)});
    }
    return Element(k, rows);
  }

  // Random plep element: a subset of A^m (all of it when total) mapped into
  // A^n.
  inline Element random_plep(Rng& rng, unsigned k, bool total) {
    std::size_t      m = uniform(rng, 1, 3);
    std::size_t      n = uniform(rng, 0, 3);
    std::vector<Row> rows;
    for (auto const& x : higman::all_words(k, m)) {
      if (total || uniform(rng, 0, 2) != 0) {
        rows.push_back({x, random_word(rng, k, n, n)});
      }
    }
    return Element(k, rows);
  }

  // Length-preserving permutation of A^n.
  inline Element random_permutation(Rng& rng, unsigned k, std::size_t n) {
    auto xs = higman::all_words(k, n);
    auto ys = xs;
    std::shuffle(ys.begin(), ys.end(), rng);
    std::vector<Row> rows;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      rows.push_back({xs[i], ys[i]});
    }
    return Element(k, rows);
  }

  // DNF over the true rows of a truth table; bit (y << m | x) of `table`
  // is B(x, y).
  inline higman::Formula formula_from_truth_table(unsigned m, unsigned n, std::uint64_t table) {
    higman::Formula f(m, n);
    int             acc = f.constant(false);
    for (std::uint64_t row = 0; row < (std::uint64_t{1} << (m + n)); ++row) {
      if (((table >> row) & 1U) == 0) {
        continue;
      }
      int term = f.constant(true);
      for (unsigned i = 0; i < m + n; ++i) {
        int  v   = i < m ? f.x(i + 1) : f.y(i - m + 1);
        bool bit = ((row >> i) & 1U) != 0;
        term     = f.conj(term, bit ? v : f.negate(v));
      }
      acc = f.disj(acc, term);
    }
    f.set_root(acc);
    return f;
  }

  // Number of y with B(x, y) true for every x, straight from the table.
  inline std::uint64_t forall_count(unsigned m, unsigned n, std::uint64_t table) {
    std::uint64_t hits = 0;
    for (std::uint64_t y = 0; y < (std::uint64_t{1} << n); ++y) {
      bool all = true;
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << m); ++x) {
        all = all && ((table >> ((y << m) | x)) & 1U) != 0;
      }
      hits += all ? 1 : 0;
    }
    return hits;
  }

}  // namespace oracle
