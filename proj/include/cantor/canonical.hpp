// Renaming-invariant serialization of transducers.

#ifndef CANTOR_CANONICAL_HPP_
#define CANTOR_CANONICAL_HPP_

#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "error.hpp"
#include "machine.hpp"

namespace cantor {

  //! Two transducers have equal canonical forms iff there is a bijection of
  //! their states commuting with the transition and output functions (and
  //! fixing the initial state in initial mode).
  struct CanonicalForm {
    std::string text;

    friend bool operator==(CanonicalForm const&, CanonicalForm const&)
        = default;
    friend auto operator<=>(CanonicalForm const&, CanonicalForm const&)
        = default;
  };

  //! States in order of first visit by a breadth-first search from `start`
  //! taking letters in the fixed order (roots, then digits).  This is the
  //! order of shortlex-least access words.
  inline std::vector<StateId> bfs_order(Transducer const& t, StateId start) {
    std::vector<bool>    seen(t.number_of_states(), false);
    std::vector<StateId> order{start};
    seen[start] = true;
    for (std::size_t i = 0; i < order.size(); ++i) {
      StateId const q = order[i];
      for (Letter x : t.letters_at(q)) {
        auto const& e = t.edge(q, x);
        if (e && !seen[e->target]) {
          seen[e->target] = true;
          order.push_back(e->target);
        }
      }
    }
    return order;
  }

  namespace detail {

    // Serialization of the part reachable from `start`; nullopt when some
    // state is not reached.  When `bound` is given, gives up (returning an
    // empty string) as soon as the text is known to exceed *bound.
    inline std::optional<std::string>
    serialize_from(Transducer const&  t,
                   StateId            start,
                   std::string const* bound = nullptr) {
      auto const order = bfs_order(t, start);
      if (order.size() != t.number_of_states()) {
        return std::nullopt;
      }
      std::vector<std::size_t> number(t.number_of_states());
      for (std::size_t i = 0; i < order.size(); ++i) {
        number[order[i]] = i;
      }
      std::string s;
      bool        tied = bound != nullptr;  // s equals a prefix of *bound
      for (std::size_t i = 0; i < order.size(); ++i) {
        std::size_t const from = s.size();
        s += std::to_string(i) + ':';
        for (Letter x : t.letters_at(order[i])) {
          auto const& e = t.at(order[i], x);
          s += ' ' + std::to_string(number[e.target]) + '/';
          if (e.output.empty()) {
            s += '-';
          }
          for (std::size_t k = 0; k < e.output.size(); ++k) {
            s += (k == 0 ? "" : ",") + to_string(e.output[k]);
          }
        }
        s += '\n';
        if (tied) {
          int const c = bound->compare(from, s.size() - from, s, from,
                                       s.size() - from);
          if (c < 0) {
            return std::string();
          }
          tied = c == 0;
        }
      }
      return s;
    }

  }  // namespace detail

  //! Throws Error(unreachable_states) in initial mode if some state is not
  //! reachable from the initial state, and Error(disconnected) in core mode
  //! unless the core is strongly connected.
  inline CanonicalForm canonical_form(Transducer const& t) {
    auto const& a = t.alphabet();
    if (!t.is_core()) {
      auto body = detail::serialize_from(t, t.initial());
      if (!body) {
        throw Error(ErrorCode::unreachable_states,
                    "minimize before canonicalizing");
      }
      return {"initial n=" + std::to_string(a.n) + " r=" + std::to_string(a.r)
              + '\n' + *body};
    }
    if (t.number_of_states() == 0) {
      throw Error(ErrorCode::invalid_argument, "empty core");
    }
    std::optional<std::string> best;
    for (StateId q = 0; q < t.number_of_states(); ++q) {
      auto body = detail::serialize_from(t, q, best ? &*best : nullptr);
      if (!body) {
        throw Error(ErrorCode::disconnected,
                    "state '" + t.name(q) + "' does not reach every state");
      }
      if (!body->empty() && (!best || *body < *best)) {
        best = std::move(body);
      }
    }
    return {"core n=" + std::to_string(a.n) + '\n' + *best};
  }

}  // namespace cantor

template <>
struct std::hash<cantor::CanonicalForm> {
  std::size_t operator()(cantor::CanonicalForm const& c) const noexcept {
    return std::hash<std::string>{}(c.text);
  }
};

#endif  // CANTOR_CANONICAL_HPP_
