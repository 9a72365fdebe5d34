// Synchronization levels, cores, and the bi-synchronizing test.

#ifndef CANTOR_SYNCHRO_HPP_
#define CANTOR_SYNCHRO_HPP_

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "error.hpp"
#include "machine.hpp"
#include "minimize.hpp"

namespace cantor {

  struct SyncResult {
    //! Least m such that every digit word of length m sends all
    //! synchronized states to one state; empty when there is none.
    std::optional<std::size_t> level;
    //! When not synchronizing: a pair of distinct states and a nonempty
    //! digit word leading the pair back to itself (shortest such word).
    std::optional<std::pair<StateId, StateId>> witness;
    Word                                       cycle;

    [[nodiscard]] bool synchronizing() const noexcept {
      return level.has_value();
    }
  };

  //! The states whose synchronization is measured: every state of a core;
  //! in initial mode the states reached after the root has been written,
  //! that is, outside the region entered from the initial state by
  //! empty-output transitions.
  inline std::vector<StateId> synchronized_states(Transducer const& t) {
    auto const           pre = detail::epsilon_region(t);
    std::vector<StateId> out;
    for (StateId q = 0; q < t.number_of_states(); ++q) {
      if (!pre[q]) {
        out.push_back(q);
      }
    }
    return out;
  }

  //! Uses the automaton on unordered pairs of distinct synchronized
  //! states: the transducer synchronizes iff that automaton is acyclic, and
  //! then the level is one more than its longest path.  A single
  //! synchronized state has level 0.
  inline SyncResult sync_level(Transducer const& t) {
    auto const        qs = synchronized_states(t);
    std::size_t const k  = qs.size();
    if (k <= 1) {
      return {0, std::nullopt, {}};
    }
    std::vector<std::size_t> pos(t.number_of_states(), k);
    for (std::size_t i = 0; i < k; ++i) {
      pos[qs[i]] = i;
    }
    auto const& digits = t.digit_letters();
    auto        index  = [k](std::size_t i, std::size_t j) {
      return std::min(i, j) * k + std::max(i, j);
    };
    // successor of pair node on digit, or npos when it collapses
    std::size_t const                     npos = k * k;
    std::vector<std::vector<std::size_t>> next(k * k);
    std::vector<std::size_t>              nodes;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        std::size_t const v = index(i, j);
        nodes.push_back(v);
        for (Letter d : digits) {
          std::size_t const a = pos[t.at(qs[i], d).target];
          std::size_t const b = pos[t.at(qs[j], d).target];
          next[v].push_back(a == b ? npos : index(a, b));
        }
      }
    }

    // longest path by iterative DFS, detecting cycles
    std::vector<std::uint8_t> colour(k * k, 0);
    std::vector<std::size_t>  depth(k * k, 0);
    bool                      cyclic = false;
    for (std::size_t s : nodes) {
      if (colour[s] != 0 || cyclic) {
        continue;
      }
      std::vector<std::pair<std::size_t, std::size_t>> stack{{s, 0}};
      colour[s] = 1;
      while (!stack.empty() && !cyclic) {
        auto& [v, i] = stack.back();
        if (i == digits.size()) {
          colour[v] = 2;
          std::size_t best = 0;
          for (std::size_t w : next[v]) {
            if (w != npos) {
              best = std::max(best, depth[w] + 1);
            }
          }
          depth[v] = best;
          stack.pop_back();
          continue;
        }
        std::size_t const w = next[v][i++];
        if (w == npos || colour[w] == 2) {
          continue;
        }
        if (colour[w] == 1) {
          cyclic = true;
        } else {
          colour[w] = 1;
          stack.emplace_back(w, 0);
        }
      }
    }
    if (!cyclic) {
      std::size_t longest = 0;
      for (std::size_t v : nodes) {
        longest = std::max(longest, depth[v]);
      }
      return {longest + 1, std::nullopt, {}};
    }

    // shortest cycle through some pair, by breadth-first search from each
    SyncResult res;
    for (std::size_t s : nodes) {
      std::map<std::size_t, std::pair<std::size_t, std::size_t>> parent;
      std::vector<std::size_t> frontier{s};
      bool                     found = false;
      for (std::size_t len = 1; !frontier.empty() && !found; ++len) {
        if (res.witness && len >= res.cycle.size()) {
          break;
        }
        std::vector<std::size_t> following;
        for (std::size_t v : frontier) {
          for (std::size_t d = 0; d < digits.size() && !found; ++d) {
            std::size_t const w = next[v][d];
            if (w == npos) {
              continue;
            }
            if (w == s) {
              Word        word{digits[d]};
              std::size_t u = v;
              while (u != s) {
                auto const [p, e] = parent.at(u);
                word              = Word{digits[e]} + word;
                u                 = p;
              }
              res.witness = {qs[s / k], qs[s % k]};
              res.cycle   = std::move(word);
              found       = true;
            } else if (!parent.contains(w)) {
              parent.emplace(w, std::make_pair(v, d));
              following.push_back(w);
            }
          }
        }
        frontier = std::move(following);
      }
    }
    return res;
  }

  //! The core: the forward closure of the state reached by reading 0^m,
  //! as a core-mode transducer with the original state names.
  inline Transducer core_of(Transducer const& t) {
    auto const s = sync_level(t);
    if (!s.synchronizing()) {
      throw Error(ErrorCode::not_synchronizing,
                  "pair (" + t.name(s.witness->first) + ", "
                      + t.name(s.witness->second) + ") cycles on "
                      + to_string(s.cycle));
    }
    auto const qs = synchronized_states(t);
    if (qs.empty()) {
      throw Error(ErrorCode::degenerate, "no state writes after the root");
    }
    StateId c = qs.front();
    for (std::size_t i = 0; i < *s.level; ++i) {
      c = t.at(c, Letter::digit(0)).target;
    }
    auto const reach = detail::reachable_from(t, c);
    Transducer out(t.alphabet(), Mode::core);
    std::vector<StateId> id(t.number_of_states());
    for (StateId q = 0; q < t.number_of_states(); ++q) {
      if (reach[q]) {
        id[q] = out.add_state(t.name(q));
      }
    }
    for (StateId q = 0; q < t.number_of_states(); ++q) {
      if (!reach[q]) {
        continue;
      }
      for (Letter d : t.digit_letters()) {
        auto const& e = t.at(q, d);
        if (!e.output.is_digit_word()) {
          throw Error(ErrorCode::degenerate,
                      "core state '" + t.name(q) + "' writes a root");
        }
        out.set_edge(id[q], d, e.output, id[e.target]);
      }
    }
    return out;
  }

  struct BisyncResult {
    bool                       bisynchronizing = false;
    std::optional<std::size_t> level;          // max of the two levels
    std::optional<std::size_t> forward_level;  // of the minimized input
    std::optional<std::size_t> inverse_level;  // of the minimized inverse
    std::string                reason;         // why not, when false
  };

  namespace detail {

    inline BisyncResult bisync_initial(Transducer const& t) {
      Transducer const m = minimize(t);
      BisyncResult     res;
      auto const       fwd = sync_level(m);
      res.forward_level    = fwd.level;
      if (!fwd.synchronizing()) {
        res.reason = "not synchronizing";
        return res;
      }
      std::optional<Transducer> inv;
      try {
        inv.emplace(invert(m));
      } catch (Error const& e) {
        if (e.code() != ErrorCode::not_invertible) {
          throw;
        }
        res.reason = e.what();
        return res;
      }
      auto const back   = sync_level(*inv);
      res.inverse_level = back.level;
      if (!back.synchronizing()) {
        res.reason = "inverse not synchronizing";
        return res;
      }
      res.bisynchronizing = true;
      res.level           = std::max(*fwd.level, *back.level);
      return res;
    }

  }  // namespace detail

  //! A core is tested through its lifts to C_{n,1}: the initial state
  //! echoes the root and enters the core at some state.  Not every state
  //! starts a surjective map, so the states are tried in order and the
  //! first lift that inverts is used.
  inline BisyncResult is_bisynchronizing(Transducer const& t) {
    if (!t.is_core()) {
      return detail::bisync_initial(t);
    }
    require_valid(t);
    std::optional<BisyncResult> first;
    for (StateId q = 0; q < t.number_of_states(); ++q) {
      auto res = detail::bisync_initial(lift_core(t, q, 1));
      if (res.bisynchronizing || !res.forward_level) {
        return res;
      }
      if (!first) {
        first = std::move(res);
      }
    }
    first->reason = "no state starts an invertible map: " + first->reason;
    return *first;
  }

  //! A lift of `core` to C_{n,1} that represents a homeomorphism, entering
  //! at the first state for which inversion succeeds.
  inline std::optional<Transducer> homeomorphic_lift(Transducer const& core) {
    for (StateId q = 0; q < core.number_of_states(); ++q) {
      Transducer lift = lift_core(core, q, 1);
      try {
        invert(lift);
        return lift;
      } catch (Error const& e) {
        if (e.code() != ErrorCode::not_invertible) {
          throw;
        }
      }
    }
    return std::nullopt;
  }

}  // namespace cantor

#endif  // CANTOR_SYNCHRO_HPP_
