// Acyclic DFAs with one accept state, and measure propagation over them.

#pragma once

#include <algorithm>
#include <deque>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "higman/error.hpp"
#include "higman/kary.hpp"
#include "higman/words.hpp"

namespace higman {

  class AcyclicDfa {
   public:
    static constexpr int none = -1;

    AcyclicDfa(unsigned k, std::size_t states, int start, int accept)
        : _k(k), _delta(states, std::vector<int>(k, none)), _start(start), _accept(accept) {
      KRational::zero(k);
      if (states == 0 || !valid(start) || !valid(accept)) {
        detail::fail(ErrorCode::OutOfRange, "start/accept state out of range");
      }
    }

    void add_edge(int p, Letter a, int q) {
      if (!valid(p) || !valid(q) || a >= _k) {
        detail::fail(ErrorCode::OutOfRange, "edge out of range");
      }
      _delta[static_cast<std::size_t>(p)][a] = q;
    }

    [[nodiscard]] unsigned k() const noexcept {
      return _k;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _delta.size();
    }
    [[nodiscard]] int start() const noexcept {
      return _start;
    }
    [[nodiscard]] int accept() const noexcept {
      return _accept;
    }
    [[nodiscard]] int next(int p, Letter a) const {
      return _delta[static_cast<std::size_t>(p)][a];
    }

    [[nodiscard]] bool accepts(Word const& w) const {
      int q = _start;
      for (Letter a : w.letters) {
        q = next(q, a);
        if (q == none) {
          return false;
        }
      }
      return q == _accept;
    }

    // Every state reachable from start and co-reachable from accept.
    [[nodiscard]] bool is_trimmed() const {
      std::vector<bool> fwd(size()), bwd(size());
      std::vector<int>  stack{_start};
      fwd[static_cast<std::size_t>(_start)] = true;
      while (!stack.empty()) {
        int p = stack.back();
        stack.pop_back();
        for (int q : _delta[static_cast<std::size_t>(p)]) {
          if (q != none && !fwd[static_cast<std::size_t>(q)]) {
            fwd[static_cast<std::size_t>(q)] = true;
            stack.push_back(q);
          }
        }
      }
      bwd[static_cast<std::size_t>(_accept)] = true;
      for (bool grew = true; grew;) {
        grew = false;
        for (std::size_t p = 0; p < size(); ++p) {
          if (bwd[p]) {
            continue;
          }
          for (int q : _delta[p]) {
            if (q != none && bwd[static_cast<std::size_t>(q)]) {
              bwd[p] = grew = true;
              break;
            }
          }
        }
      }
      for (std::size_t p = 0; p < size(); ++p) {
        if (!fwd[p] || !bwd[p]) {
          return false;
        }
      }
      return true;
    }

    // `start: q`, `accept: q`, then `p --x--> q` per edge.
    [[nodiscard]] std::string dump() const {
      std::string s = "start: " + std::to_string(_start) + "\naccept: " + std::to_string(_accept) + "\n";
      for (std::size_t p = 0; p < size(); ++p) {
        for (unsigned a = 0; a < _k; ++a) {
          if (int q = _delta[p][a]; q != none) {
            s += std::to_string(p) + " --" + to_string(Word{static_cast<Letter>(a)}) + "--> "
                 + std::to_string(q) + "\n";
          }
        }
      }
      return s;
    }

   private:
    [[nodiscard]] bool valid(int q) const {
      return q >= 0 && static_cast<std::size_t>(q) < _delta.size();
    }

    unsigned                      _k;
    std::vector<std::vector<int>> _delta;
    int                           _start;
    int                           _accept;
  };

  namespace detail {
    struct DagBuilder {
      unsigned                                _k;
      std::vector<std::vector<int>>           states;
      std::map<std::vector<int>, int>         seen;

      int intern(std::vector<int> sig) {
        auto [it, fresh] = seen.emplace(sig, static_cast<int>(states.size()));
        if (fresh) {
          states.push_back(std::move(sig));
        }
        return it->second;
      }

      // words[lo, hi) share their first `depth` letters; dictionary sorted.
      int build(std::vector<Word> const& words, std::size_t lo, std::size_t hi, std::size_t depth) {
        std::vector<int> sig(_k, AcyclicDfa::none);
        if (hi - lo == 1 && words[lo].size() == depth) {
          return intern(std::move(sig));
        }
        std::size_t i = lo;
        while (i < hi) {
          Letter      a = words[i][depth];
          std::size_t j = i;
          while (j < hi && words[j][depth] == a) {
            ++j;
          }
          sig[a] = build(words, i, j, depth + 1);
          i      = j;
        }
        return intern(std::move(sig));
      }
    };
  }  // namespace detail

  // Minimal single-accept DAG for a finite prefix code: the trie with equal
  // suffix subtrees merged.
  inline AcyclicDfa trie_dfa(unsigned k, std::vector<Word> words) {
    if (words.empty()) {
      detail::fail(ErrorCode::EmptyLanguage, "no words");
    }
    for (auto const& w : words) {
      check_letters(w, k);
    }
    std::sort(words.begin(), words.end(), [](Word const& x, Word const& y) {
      return word_cmp_dict(x, y) < 0;
    });
    words.erase(std::unique(words.begin(), words.end()), words.end());
    if (!is_prefix_code(words)) {
      detail::fail(ErrorCode::NotPrefixCode, "a single accept state needs a prefix code");
    }
    detail::DagBuilder b{k, {}, {}};
    int                start  = b.build(words, 0, words.size(), 0);
    int                accept = b.seen.at(std::vector<int>(k, AcyclicDfa::none));
    AcyclicDfa         d(k, b.states.size(), start, accept);
    for (std::size_t p = 0; p < b.states.size(); ++p) {
      for (unsigned a = 0; a < k; ++a) {
        if (int q = b.states[p][a]; q != AcyclicDfa::none) {
          d.add_edge(static_cast<int>(p), static_cast<Letter>(a), q);
        }
      }
    }
    return d;
  }

  // mu(q) for every state: mu(start) = 1 and mu(q) = (1/k) sum over
  // incoming edges.  A state is finalized once all of its predecessors are.
  inline std::vector<KRational> dfa_state_measures(AcyclicDfa const& d) {
    unsigned                k = d.k();
    std::vector<std::size_t> indeg(d.size());
    for (std::size_t p = 0; p < d.size(); ++p) {
      for (unsigned a = 0; a < k; ++a) {
        if (int q = d.next(static_cast<int>(p), static_cast<Letter>(a)); q != AcyclicDfa::none) {
          ++indeg[static_cast<std::size_t>(q)];
        }
      }
    }
    std::vector<KRational> m(d.size(), KRational::zero(k));
    m[static_cast<std::size_t>(d.start())] = KRational::one(k);
    std::deque<int> ready;
    for (std::size_t p = 0; p < d.size(); ++p) {
      if (indeg[p] == 0) {
        ready.push_back(static_cast<int>(p));
      }
    }
    std::size_t done = 0;
    while (!ready.empty()) {
      int p = ready.front();
      ready.pop_front();
      ++done;
      KRational share = m[static_cast<std::size_t>(p)] * KRational::unit(k, 1);
      for (unsigned a = 0; a < k; ++a) {
        int q = d.next(p, static_cast<Letter>(a));
        if (q == AcyclicDfa::none) {
          continue;
        }
        m[static_cast<std::size_t>(q)] += share;
        if (--indeg[static_cast<std::size_t>(q)] == 0) {
          ready.push_back(q);
        }
      }
    }
    if (done != d.size()) {
      detail::fail(ErrorCode::CyclicGraph, "transition graph has a cycle");
    }
    return m;
  }

  inline KRational dfa_measure(AcyclicDfa const& d) {
    return dfa_state_measures(d)[static_cast<std::size_t>(d.accept())];
  }

  // Length of a shortest accepted word (breadth-first).
  inline std::size_t dfa_shortest_path(AcyclicDfa const& d) {
    std::vector<int> dist(d.size(), -1);
    std::deque<int>  q{d.start()};
    dist[static_cast<std::size_t>(d.start())] = 0;
    while (!q.empty()) {
      int p = q.front();
      q.pop_front();
      if (p == d.accept()) {
        return static_cast<std::size_t>(dist[static_cast<std::size_t>(p)]);
      }
      for (unsigned a = 0; a < d.k(); ++a) {
        int r = d.next(p, static_cast<Letter>(a));
        if (r != AcyclicDfa::none && dist[static_cast<std::size_t>(r)] < 0) {
          dist[static_cast<std::size_t>(r)] = dist[static_cast<std::size_t>(p)] + 1;
          q.push_back(r);
        }
      }
    }
    detail::fail(ErrorCode::EmptyLanguage, "accept state unreachable");
  }

  // Parses the dump format; the result must be trimmed.
  inline AcyclicDfa parse_dfa(std::istream& in, unsigned k) {
    std::optional<int>                        start, accept;
    std::vector<std::tuple<int, Letter, int>> edges;
    int                                       top = -1;
    std::string                               line;
    std::size_t                               lineno = 0;
    auto bad = [&](std::string const& why) {
      return ParseError("line " + std::to_string(lineno) + ": " + why);
    };
    auto state_id = [&](std::string const& tok) {
      if (tok.empty() || tok.size() > 9
          || !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw bad("bad state '" + tok + "'");
      }
      int q = std::stoi(tok);
      top   = std::max(top, q);
      return q;
    };
    while (std::getline(in, line)) {
      ++lineno;
      if (auto hash = line.find('#'); hash != std::string::npos) {
        line.erase(hash);
      }
      std::istringstream ls(line);
      std::string        a, b, c, extra;
      if (!(ls >> a)) {
        continue;
      }
      if (a == "start:" || a == "accept:") {
        if (!(ls >> b) || (ls >> extra)) {
          throw bad("expected one state");
        }
        (a == "start:" ? start : accept) = state_id(b);
        continue;
      }
      if (!(ls >> b >> c) || (ls >> extra) || b.size() != 6 || b.substr(0, 2) != "--"
          || b.substr(3) != "-->") {
        throw bad("expected `p --x--> q`");
      }
      Word letter = parse_word(b.substr(2, 1), k);
      edges.emplace_back(state_id(a), letter[0], state_id(c));
    }
    if (!start || !accept) {
      throw ParseError("missing start: or accept: line");
    }
    AcyclicDfa d(k, static_cast<std::size_t>(top + 1), *start, *accept);
    for (auto const& [p, x, q] : edges) {
      if (d.next(p, x) != AcyclicDfa::none && d.next(p, x) != q) {
        throw ParseError("nondeterministic edge from " + std::to_string(p));
      }
      d.add_edge(p, x, q);
    }
    if (!d.is_trimmed()) {
      detail::fail(ErrorCode::NotTrimmed, "some state is not on a start-accept path");
    }
    return d;
  }

  inline AcyclicDfa parse_dfa(std::string const& text, unsigned k) {
    std::istringstream in(text);
    return parse_dfa(in, k);
  }

}  // namespace higman
