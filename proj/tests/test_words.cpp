#include <catch_amalgamated.hpp>

#include <functional>

#include "higman/words.hpp"
#include "oracles.hpp"

using namespace higman;

namespace {
  Word w(char const* s, unsigned k = 2) {
    return parse_word(s, k);
  }

  PrefixCode code(std::initializer_list<char const*> ws, unsigned k = 2) {
    std::vector<Word> v;
    for (auto s : ws) {
      v.push_back(parse_word(s, k));
    }
    return PrefixCode(k, v);
  }

  std::vector<Word> words(std::initializer_list<char const*> ws, unsigned k = 2) {
    std::vector<Word> v;
    for (auto s : ws) {
      v.push_back(parse_word(s, k));
    }
    return v;
  }
}  // namespace

TEST_CASE("word basics", "[words]") {
  CHECK(to_string(Word{}) == "^");
  CHECK(to_string(w("abba")) == "abba");
  CHECK(w("^").empty());
  CHECK(w("ab").is_prefix_of(w("abb")));
  CHECK_FALSE(w("ab").is_prefix_of(w("aab")));
  CHECK(w("a") < w("aa"));
  CHECK(w("b") < w("aa"));
  CHECK(word_cmp_dict(w("a"), w("ab")) < 0);
  CHECK(word_cmp_dict(w("ab"), w("b")) < 0);
  CHECK(word_cmp_dict(w("ab"), w("ab")) == 0);
  CHECK_THROWS_AS(parse_word("abc", 2), ParseError);
  CHECK_THROWS_AS(check_letters(Word{0, 3}, 3), Error);
}

TEST_CASE("prefix codes and measure", "[words]") {
  CHECK(is_prefix_code(words({"aa", "ab", "b"})));
  CHECK_FALSE(is_prefix_code(words({"a", "aa", "aaa"})));
  CHECK(is_prefix_code(std::vector<Word>{}));

  CHECK(mu(2, words({"a", "aa", "aaa"})) == KRational(2, 7, 3));
  CHECK(mu(2, words({"aa", "ab", "aaa"})) == KRational(2, 5, 3));
  CHECK(mu(2, words({"^"})) == KRational::one(2));
  CHECK(mu(2, std::vector<Word>{}) == KRational::zero(2));

  CHECK(code({"a", "b"}).is_maximal());
  CHECK(code({"aa", "b"}).measure() == KRational(2, 3, 2));
  CHECK_FALSE(code({"aa", "b"}).is_maximal());
  CHECK_FALSE(PrefixCode(2).is_maximal());

  CHECK_THROWS_AS(code({"a", "ab"}), Error);
  CHECK(code({"b", "aa"}).to_string() == "{b, aa}");
}

TEST_CASE("replacement steps", "[words]") {
  CHECK(replace_r1(code({"aa", "b"}), w("b")) == code({"aa", "ba", "bb"}));
  CHECK(replace_r2(code({"aa", "ba", "bb"}), w("b")) == code({"aa", "b"}));
  try {
    replace_r1(code({"aa", "b"}), w("a"));
    FAIL();
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::NotInCode);
  }
  try {
    replace_r2(code({"aa", "ba"}), w("b"));
    FAIL();
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::ChildrenMissing);
  }
}

TEST_CASE("covered and essential containment", "[words]") {
  CHECK(covered(w("b"), code({"ba", "bb"})));
  CHECK_FALSE(covered(w("b"), code({"ba"})));
  CHECK(covered(w("aab"), code({"a"})));
  CHECK(ideal_ess_eq(code({"aa", "b"}), code({"aa", "ba", "bb"})));
  CHECK(ideal_ess_leq(PrefixCode(2), code({"a"})));
  CHECK_FALSE(ideal_ess_leq(code({"a"}), PrefixCode(2)));
  CHECK_THROWS_AS(ideal_ess_leq(PrefixCode(2), PrefixCode(3)), Error);
}

TEST_CASE("complement code", "[words]") {
  CHECK(complement_code(code({"aa", "b"})) == code({"ab"}));
  CHECK(complement_code(code({"a", "b"})).empty());
  CHECK(complement_code(PrefixCode(3)) == code({"^"}, 3));

  oracle::Rng rng(5);
  for (int i = 0; i < 1000; ++i) {
    unsigned k = 2 + static_cast<unsigned>(i % 3);
    auto     p = oracle::random_code(rng, k, 4);
    auto     q = complement_code(p);
    CHECK(oracle::to_rational(p.measure()) + oracle::mu(k, q.words()) == 1);
    std::vector<Word> both = p.words();
    both.insert(both.end(), q.begin(), q.end());
    CHECK(is_prefix_code(both));
    PrefixCode u(k, both);
    for (auto const& x : all_words(k, std::max(p.max_length(), q.max_length()))) {
      CHECK(covered(x, u));
    }
  }
}

TEST_CASE("P_h construction", "[words]") {
  auto h   = KRational::parse(5, "0.0031042");
  auto p   = build_P_h(5, h);
  auto exp = code({"aaa", "aab", "aac", "aada", "aadbaa", "aadbab", "aadbac", "aadbad",
                   "aadbaea", "aadbaeb"},
                  5);
  CHECK(p == exp);
  CHECK(p.size() == 10);
  CHECK(p.measure() == h);
  CHECK(build_P_h(3, KRational::one(3)) == code({"^"}, 3));
  CHECK(build_P_h(3, KRational::zero(3)).empty());
  try {
    build_P_h(2, KRational(2, 3, 0));
    FAIL();
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::OutOfRange);
  }
}

TEST_CASE("P_h measure and nesting on random values", "[words][random]") {
  oracle::Rng rng(9);
  for (unsigned k : {2U, 3U, 5U, 10U}) {
    std::vector<KRational> hs;
    for (int i = 0; i < 60; ++i) {
      auto h = oracle::random_kary(rng, k, 6);
      auto p = build_P_h(k, h);
      CHECK(oracle::mu(k, p.words()) == oracle::to_rational(h));
      unsigned digits = 0;
      for (unsigned d : h.digits().fraction) {
        digits += d;
      }
      CHECK(p.size() == (h == KRational::one(k) ? 1 : digits));
      hs.push_back(h);
    }
    std::sort(hs.begin(), hs.end());
    for (std::size_t i = 0; i + 1 < hs.size(); ++i) {
      if (hs[i] == hs[i + 1]) {
        continue;
      }
      auto pg = build_P_h(k, hs[i]), ph = build_P_h(k, hs[i + 1]);
      CHECK(ideal_ess_leq(pg, ph));
      CHECK_FALSE(ideal_ess_eq(pg, ph));
    }
  }
}

TEST_CASE("measure invariance under replacement chains", "[words][random]") {
  oracle::Rng rng(3);
  for (int i = 0; i < 1000; ++i) {
    unsigned k  = 2 + static_cast<unsigned>(i % 3);
    auto     p  = oracle::random_code(rng, k, 3);
    auto     m0 = p.measure();
    for (int step = 0; step < 6 && !p.empty(); ++step) {
      if (oracle::uniform(rng, 0, 1) == 0) {
        p = replace_r1(p, p.words()[oracle::uniform(rng, 0, p.size() - 1)]);
      } else {
        // r2 wherever a full sibling family exists
        for (auto const& x : p) {
          if (!x.empty()) {
            Word parent = x.parent();
            bool full   = true;
            for (unsigned a = 0; a < k && full; ++a) {
              full = p.contains(parent.child(static_cast<Letter>(a)));
            }
            if (full) {
              p = replace_r2(p, parent);
              break;
            }
          }
        }
      }
      CHECK(p.measure() == m0);
    }
  }
}

TEST_CASE("set rewriting P - x + x A^n", "[words][random]") {
  oracle::Rng rng(4);
  for (int i = 0; i < 300; ++i) {
    unsigned k = 2 + static_cast<unsigned>(i % 2);
    auto     p = oracle::random_code(rng, k, 3);
    if (p.empty()) {
      continue;
    }
    Word              x = p.words()[oracle::uniform(rng, 0, p.size() - 1)];
    std::vector<Word> out;
    for (auto const& y : p) {
      if (y != x) {
        out.push_back(y);
      }
    }
    for (auto const& t : all_words(k, oracle::uniform(rng, 0, 4))) {
      out.push_back(x + t);
    }
    CHECK(PrefixCode(k, out).measure() == p.measure());
  }
}

TEST_CASE("essential equality agrees with reachability", "[words]") {
  // All prefix codes inside depth 3 for k = 2, and the r1/r2 closure.
  std::vector<PrefixCode> codes;
  std::vector<std::vector<Word>> all;
  std::function<void(std::vector<Word>, std::vector<Word>)> enumerate =
      [&](std::vector<Word> chosen, std::vector<Word> frontier) {
        if (frontier.empty()) {
          all.push_back(chosen);
          return;
        }
        Word x = frontier.back();
        frontier.pop_back();
        enumerate(chosen, frontier);  // drop x
        auto with = chosen;
        with.push_back(x);
        enumerate(with, frontier);  // keep x
        if (x.size() < 3) {
          auto f2 = frontier;
          f2.push_back(x.child(0));
          f2.push_back(x.child(1));
          enumerate(chosen, f2);  // split x
        }
      };
  enumerate({}, {Word{}});
  for (auto const& v : all) {
    codes.emplace_back(2, v);
  }
  std::sort(codes.begin(), codes.end(), [](PrefixCode const& a, PrefixCode const& b) {
    return a.words() < b.words();
  });
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());

  // reachability: both r1-refine to their common depth-3 expansion
  auto expand = [](PrefixCode const& p) { return extend_to_length(p, 3); };
  for (std::size_t i = 0; i < codes.size(); i += 3) {
    for (std::size_t j = 0; j < codes.size(); j += 5) {
      bool reach = expand(codes[i]) == expand(codes[j]);
      CHECK(ideal_ess_eq(codes[i], codes[j]) == reach);
    }
  }
}

TEST_CASE("grow_corner and extend_to_length", "[words]") {
  CHECK(grow_corner(code({"a", "b"})) == code({"a", "ba", "bb"}));
  CHECK(extend_to_length(code({"a"}), 2) == code({"aa", "ab"}));
  CHECK_THROWS_AS(extend_to_length(code({"aaa"}), 2), Error);
  CHECK_THROWS_AS(grow_corner(PrefixCode(2)), Error);
}
