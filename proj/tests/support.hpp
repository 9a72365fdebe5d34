// Fixture loading and small helpers shared by the test programs.

#ifndef CANTOR_TESTS_SUPPORT_HPP_
#define CANTOR_TESTS_SUPPORT_HPP_

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cantor/cantor.hpp"

namespace cantor::test {

  inline std::string read_fixture(std::string const& name) {
    std::ifstream in(std::string(CANTOR_FIXTURE_DIR) + "/" + name + ".ct");
    if (!in) {
      throw Error(ErrorCode::invalid_argument, "missing fixture " + name);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  inline Transducer fixture(std::string const& name) {
    return parse_transducer(read_fixture(name));
  }

  inline Word w(std::string const& text) {
    return parse_word(text);
  }

  inline StateId state(Transducer const& t, std::string const& name) {
    auto q = t.find_state(name);
    if (!q) {
      throw Error(ErrorCode::invalid_argument, "no state " + name);
    }
    return *q;
  }

  inline std::vector<std::string> state_names(Transducer const& t) {
    std::vector<std::string> out;
    for (StateId q = 0; q < t.number_of_states(); ++q) {
      out.push_back(t.name(q));
    }
    return out;
  }

  //! The same transducer with its states listed in the order `perm` and
  //! renamed s0, s1, ...
  inline Transducer relabel(Transducer const&           t,
                            std::vector<StateId> const& perm) {
    Transducer           out(t.alphabet(), t.mode());
    std::vector<StateId> id(t.number_of_states());
    for (std::size_t i = 0; i < perm.size(); ++i) {
      id[perm[i]] = out.add_state("s" + std::to_string(i));
    }
    for (StateId q = 0; q < t.number_of_states(); ++q) {
      if (t.is_initial(q)) {
        out.set_initial(id[q]);
      }
      for (Letter x : t.letters_at(q)) {
        auto const& e = t.at(q, x);
        out.set_edge(id[q], x, e.output, id[e.target]);
      }
    }
    return out;
  }

  inline Transducer random_relabel(Transducer const& t, Rng& rng) {
    std::vector<StateId> perm(t.number_of_states());
    for (StateId q = 0; q < perm.size(); ++q) {
      perm[q] = q;
    }
    std::shuffle(perm.begin(), perm.end(), rng);
    return relabel(t, perm);
  }

  //! A random point u v^omega of C_{n,r} (rooted) or C_n (digits only).
  inline EventuallyPeriodicPoint random_point(Alphabet const& a, Rng& rng,
                                              bool rooted = true) {
    std::uniform_int_distribution<int>         digit(0, a.n - 1);
    std::uniform_int_distribution<int>         root(0, a.r - 1);
    std::uniform_int_distribution<std::size_t> len(0, 6);
    Word                                       u;
    if (rooted) {
      u.push_back(Letter::root(root(rng)));
    }
    for (std::size_t i = len(rng); i > 0; --i) {
      u.push_back(Letter::digit(digit(rng)));
    }
    Word v;
    for (std::size_t i = len(rng) + 1; i > 0; --i) {
      v.push_back(Letter::digit(digit(rng)));
    }
    return {u, v};
  }

  //! Random elements of the bi-synchronizing group of C_{3,2}: products
  //! g1 phi g2 with g1, g2 in G_{3,2} and phi from a small list of known
  //! bi-synchronizing maps.
  inline Transducer random_bisync_32(Rng& rng, Transducer const& level2_c32) {
    Alphabet const          a(3, 2);
    std::vector<Transducer> phis{
        level2_c32,
        twist_transducer(Permutation({1, 2, 0}), a),
        twist_transducer(Permutation({1, 0, 2}), a),
        identity_transducer(a)};
    std::uniform_int_distribution<std::size_t> pick(0, phis.size() - 1);
    std::uniform_int_distribution<std::size_t> splits(0, 3);
    Transducer const g1 = random_gnr_element(a, splits(rng), rng);
    Transducer const g2 = random_gnr_element(a, splits(rng), rng);
    return compose(compose(g1, phis[pick(rng)]), g2);
  }

}  // namespace cantor::test

#endif  // CANTOR_TESTS_SUPPORT_HPP_
