// Independent reference computations used to check the library.  Each one
// is deliberately naive: direct prefix replacement, exhaustive word
// enumeration, or plain truncated runs.

#ifndef CANTOR_TESTS_ORACLES_HPP_
#define CANTOR_TESTS_ORACLES_HPP_

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "cantor/cantor.hpp"

namespace cantor::oracle {

  //! Image of a point under a prefix-code map by replacing the unique
  //! domain word that is a prefix of it.
  inline EventuallyPeriodicPoint apply(PrefixCodeMap const&           m,
                                       EventuallyPeriodicPoint const& x) {
    for (std::size_t i = 0; i < m.domain.words.size(); ++i) {
      Word const& alpha = m.domain.words[i];
      if (x.prefix(alpha.size()) == alpha) {
        // x = alpha y; peel alpha off letter by letter
        Word        pre = x.preperiod();
        Word        per = x.period();
        std::size_t k   = alpha.size();
        while (k > 0) {
          if (!pre.empty()) {
            pre = pre.drop(1);
          } else {
            per = per.drop(1) + per[0];
          }
          --k;
        }
        return {m.range.words[i] + pre, per};
      }
    }
    throw Error(ErrorCode::invalid_argument, "point not covered by domain");
  }

  //! x -> (x g) h computed on antichains: every pair of g meets every
  //! comparable pair of h, and the longer word decides the refinement.
  inline PrefixCodeMap compose(PrefixCodeMap const& g, PrefixCodeMap const& h) {
    PrefixCodeMap out;
    for (std::size_t i = 0; i < g.domain.words.size(); ++i) {
      Word const& alpha = g.domain.words[i];
      Word const& beta  = g.range.words[i];
      for (std::size_t j = 0; j < h.domain.words.size(); ++j) {
        Word const& gamma = h.domain.words[j];
        Word const& delta = h.range.words[j];
        if (is_prefix(gamma, beta)) {
          out.domain.words.push_back(alpha);
          out.range.words.push_back(delta + beta.drop(gamma.size()));
        } else if (is_prefix(beta, gamma)) {
          out.domain.words.push_back(alpha + gamma.drop(beta.size()));
          out.range.words.push_back(delta);
        }
      }
    }
    return out;
  }

  //! Least m <= max_level such that every digit word of length m sends
  //! the synchronized states to a single state, by enumerating all words.
  inline std::optional<std::size_t> sync_level(Transducer const& t,
                                               std::size_t max_level) {
    auto const qs = synchronized_states(t);
    int const  n  = t.alphabet().n;
    for (std::size_t m = 0; m <= max_level; ++m) {
      std::vector<int> digits(m, 0);
      bool             all = true;
      while (all) {
        std::set<StateId> ends;
        for (StateId q : qs) {
          for (int d : digits) {
            q = t.at(q, Letter::digit(d)).target;
          }
          ends.insert(q);
        }
        all = ends.size() <= 1;
        std::size_t i = 0;
        while (i < m && ++digits[i] == n) {
          digits[i++] = 0;
        }
        if (i == m) {
          break;
        }
      }
      if (all) {
        return m;
      }
    }
    return std::nullopt;
  }

  //! The output of reading the first `input_length` letters of x from q.
  //! Every such output is a prefix of the image of x.
  inline Word truncated_image(Transducer const& t, StateId q,
                              EventuallyPeriodicPoint const& x,
                              std::size_t                    input_length) {
    return run_word(t, q, x.prefix(input_length)).output;
  }

  //! Longest common prefix of the outputs of all digit words of length
  //! `length` read from q.  For large enough lengths this is the guaranteed
  //! output of q.
  inline Word common_output(Transducer const& t, StateId q,
                            std::size_t length) {
    int const        n = t.alphabet().n;
    std::vector<int> digits(length, 0);
    std::optional<Word> lcp;
    while (true) {
      Word in;
      for (int d : digits) {
        in.push_back(Letter::digit(d));
      }
      Word const out = run_word(t, q, in).output;
      lcp = lcp ? longest_common_prefix(*lcp, out) : out;
      std::size_t i = 0;
      while (i < length && ++digits[i] == n) {
        digits[i++] = 0;
      }
      if (i == length) {
        break;
      }
    }
    return *lcp;
  }

}  // namespace cantor::oracle

#endif  // CANTOR_TESTS_ORACLES_HPP_
