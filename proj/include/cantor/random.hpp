// Seeded generators for property tests and the CLI.

#ifndef CANTOR_RANDOM_HPP_
#define CANTOR_RANDOM_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "error.hpp"
#include "machine.hpp"
#include "words.hpp"

namespace cantor {

  using Rng = std::mt19937_64;

  struct RandomOptions {
    //! Synchronous transducers whose transitions permute the letters.
    bool permutation_outputs = false;
    //! Attempts before giving up with Error(rejection_budget).
    std::size_t budget = 10000;
  };

  namespace detail {

    inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
      return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    }

    inline Word random_digits(Rng& rng, int n, std::size_t len) {
      Word w;
      for (std::size_t i = 0; i < len; ++i) {
        w.push_back(Letter::digit(static_cast<int>(
            uniform(rng, 0, static_cast<std::size_t>(n) - 1))));
      }
      return w;
    }

    inline std::vector<int> shuffled(Rng& rng, int n) {
      std::vector<int> v(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        v[i] = i;
      }
      std::shuffle(v.begin(), v.end(), rng);
      return v;
    }

    inline Transducer random_candidate(Alphabet const& a, std::size_t states,
                                       std::size_t          max_out,
                                       RandomOptions const& opts, Rng& rng) {
      Transducer    t(a, Mode::initial);
      StateId const q0 = t.add_state("q0");
      t.set_initial(q0);
      for (std::size_t i = 1; i <= states; ++i) {
        t.add_state("q" + std::to_string(i));
      }
      auto pick_s = [&](std::size_t first_s) {
        return static_cast<StateId>(uniform(rng, first_s, states));
      };

      if (opts.permutation_outputs) {
        auto const roots = shuffled(rng, a.r);
        for (int k = 0; k < a.r; ++k) {
          t.set_edge(q0, Letter::root(k), Word{Letter::root(roots[k])},
                     pick_s(1));
        }
        for (StateId q = 1; q <= states; ++q) {
          auto const image = shuffled(rng, a.n);
          for (int d = 0; d < a.n; ++d) {
            t.set_edge(q, Letter::digit(d), Word{Letter::digit(image[d])},
                       pick_s(1));
          }
        }
        return t;
      }

      // states 1..pre are read before any root is written
      std::size_t const pre     = uniform(rng, 0, std::min<std::size_t>(
                                                     states - 1, 2));
      std::size_t const first_s = pre + 1;
      auto              rooted  = [&] {
        Word w{Letter::root(static_cast<int>(
            uniform(rng, 0, static_cast<std::size_t>(a.r) - 1)))};
        return w + random_digits(rng, a.n, uniform(rng, 0, max_out));
      };
      auto pre_edge = [&](StateId q, Letter x, std::size_t after) {
        if (after <= pre && uniform(rng, 0, 1) == 0) {
          t.set_edge(q, x, {}, static_cast<StateId>(uniform(rng, after, pre)));
        } else {
          t.set_edge(q, x, rooted(), pick_s(first_s));
        }
      };
      for (Letter k : t.root_letters()) {
        pre_edge(q0, k, 1);
      }
      for (StateId q = 1; q <= pre; ++q) {
        for (Letter d : t.digit_letters()) {
          pre_edge(q, d, q + 1);
        }
      }
      for (StateId q = first_s; q <= states; ++q) {
        for (Letter d : t.digit_letters()) {
          t.set_edge(q, d, random_digits(rng, a.n, uniform(rng, 0, max_out)),
                     pick_s(first_s));
        }
      }
      return t;
    }

  }  // namespace detail

  //! A valid initial transducer with `states` digit-reading states and
  //! outputs of at most `max_out` digits per transition (roots excluded).
  //! Rejection-samples until validate() passes.  The result need not be a
  //! homeomorphism.
  inline Transducer random_transducer(Alphabet const& a, std::size_t states,
                                      std::size_t max_out, Rng& rng,
                                      RandomOptions const& opts = {}) {
    if (states == 0) {
      throw Error(ErrorCode::invalid_argument, "need at least one state");
    }
    for (std::size_t attempt = 0; attempt < opts.budget; ++attempt) {
      Transducer t = detail::random_candidate(a, states, max_out, opts, rng);
      if (is_valid(t)) {
        return t;
      }
    }
    throw Error(ErrorCode::rejection_budget,
                "no valid transducer after " + std::to_string(opts.budget)
                    + " attempts");
  }

  inline Transducer random_transducer(Alphabet const& a, std::size_t states,
                                      std::size_t max_out, std::uint64_t seed,
                                      RandomOptions const& opts = {}) {
    Rng rng(seed);
    return random_transducer(a, states, max_out, rng, opts);
  }

  //! A complete prefix code obtained from the roots by `splits` random
  //! splittings of a leaf into its n children; it has r + splits (n - 1)
  //! words, listed in lexicographic order.
  inline PrefixCode random_prefix_code(Alphabet const& a, std::size_t splits,
                                       Rng& rng) {
    std::vector<Word> leaves;
    for (int k = 0; k < a.r; ++k) {
      leaves.push_back(Word{Letter::root(k)});
    }
    for (std::size_t s = 0; s < splits; ++s) {
      std::size_t const i = detail::uniform(rng, 0, leaves.size() - 1);
      Word const        w = leaves[i];
      leaves.erase(leaves.begin() + static_cast<std::ptrdiff_t>(i));
      for (int d = 0; d < a.n; ++d) {
        leaves.push_back(w + Letter::digit(d));
      }
    }
    std::sort(leaves.begin(), leaves.end());
    return {std::move(leaves)};
  }

  //! Two random codes of equal size paired by a random bijection.
  inline PrefixCodeMap random_prefix_code_map(Alphabet const& a,
                                              std::size_t splits, Rng& rng) {
    PrefixCodeMap m{random_prefix_code(a, splits, rng),
                    random_prefix_code(a, splits, rng)};
    std::shuffle(m.range.words.begin(), m.range.words.end(), rng);
    return m;
  }

  //! A random element of G_{n,r} as a minimal transducer.
  inline Transducer random_gnr_element(Alphabet const& a, std::size_t splits,
                                       Rng& rng) {
    return from_prefix_code_map(random_prefix_code_map(a, splits, rng), a);
  }

}  // namespace cantor

#endif  // CANTOR_RANDOM_HPP_
