// Reduction of a transducer to the unique minimal transducer representing
// the same map: complete the responses, drop inaccessible states, merge
// states with equal local actions.

#ifndef CANTOR_MINIMIZE_HPP_
#define CANTOR_MINIMIZE_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "canonical.hpp"
#include "error.hpp"
#include "machine.hpp"

namespace cantor {

  namespace detail {

    //! The sub-transducer on `keep` (in that order), names preserved.  Every
    //! edge out of a kept state must stay inside `keep`.
    inline Transducer induced(Transducer const&           t,
                              std::vector<StateId> const& keep) {
      Transducer           out(t.alphabet(), t.mode());
      std::vector<StateId> id(t.number_of_states(), t.number_of_states());
      for (StateId q : keep) {
        id[q] = out.add_state(t.name(q));
      }
      for (StateId q : keep) {
        if (t.is_initial(q)) {
          out.set_initial(id[q]);
        }
        for (Letter x : t.letters_at(q)) {
          auto const& e = t.at(q, x);
          if (id[e.target] == t.number_of_states()) {
            throw Error(ErrorCode::invalid_argument,
                        "kept state '" + t.name(q) + "' leaves the subset");
          }
          out.set_edge(id[q], x, e.output, id[e.target]);
        }
      }
      return out;
    }

    inline std::vector<bool> reachable_from(Transducer const& t, StateId q) {
      std::vector<bool> seen(t.number_of_states(), false);
      for (StateId p : bfs_order(t, q)) {
        seen[p] = true;
      }
      return seen;
    }

    //! Strongly connected component index of every state (Tarjan, without
    //! recursion).  Components are numbered in reverse topological order,
    //! so component 0 has no edges leaving it.
    inline std::vector<std::size_t> components(Transducer const& t) {
      std::size_t const        N     = t.number_of_states();
      std::size_t const        unset = N;
      std::vector<std::size_t> index(N, unset), low(N, 0), comp(N, unset);
      std::vector<StateId>     stack;
      std::vector<bool>        on_stack(N, false);
      std::size_t              counter = 0, count = 0;
      for (StateId s = 0; s < N; ++s) {
        if (index[s] != unset) {
          continue;
        }
        std::vector<std::pair<StateId, std::size_t>> call{{s, 0}};
        index[s] = low[s] = counter++;
        stack.push_back(s);
        on_stack[s] = true;
        while (!call.empty()) {
          auto& [q, i]   = call.back();
          auto const& xs = t.letters_at(q);
          if (i < xs.size()) {
            StateId const p = t.at(q, xs[i++]).target;
            if (index[p] == unset) {
              index[p] = low[p] = counter++;
              stack.push_back(p);
              on_stack[p] = true;
              call.emplace_back(p, 0);
            } else if (on_stack[p]) {
              low[q] = std::min(low[q], index[p]);
            }
            continue;
          }
          StateId const q_done = q;
          if (low[q_done] == index[q_done]) {
            StateId p;
            do {
              p = stack.back();
              stack.pop_back();
              on_stack[p] = false;
              comp[p]     = count;
            } while (p != q_done);
            ++count;
          }
          call.pop_back();
          if (!call.empty()) {
            StateId const parent = call.back().first;
            low[parent]          = std::min(low[parent], low[q_done]);
          }
        }
      }
      return comp;
    }

    //! The states reachable from every state: the unique component with no
    //! outgoing edges, or nothing when there are several such components.
    inline std::vector<StateId> reachable_from_all(Transducer const& t) {
      auto const        comp = components(t);
      std::size_t const N    = t.number_of_states();
      std::size_t       ncomp = 0;
      for (auto c : comp) {
        ncomp = std::max(ncomp, c + 1);
      }
      std::vector<bool> leaves(ncomp, false);
      for (StateId q = 0; q < N; ++q) {
        for (Letter x : t.letters_at(q)) {
          if (comp[t.at(q, x).target] != comp[q]) {
            leaves[comp[q]] = true;
          }
        }
      }
      std::vector<StateId> out;
      if (std::count(leaves.begin(), leaves.end(), false) != 1) {
        return out;
      }
      for (StateId q = 0; q < N; ++q) {
        if (!leaves[comp[q]]) {
          out.push_back(q);
        }
      }
      return out;
    }

  }  // namespace detail

  //! Shifts guaranteed outputs backwards along edges so that afterwards
  //! every state has empty guaranteed output.  States are unchanged.
  inline Transducer remove_incomplete_response(Transducer const& t) {
    auto const v   = guaranteed_output(t);
    Transducer out = t;
    for (StateId q = 0; q < t.number_of_states(); ++q) {
      for (Letter x : t.letters_at(q)) {
        auto const& e    = t.at(q, x);
        Word        word = e.output + v[e.target];
        if (!t.is_initial(q)) {
          word = subtract(word, v[q]);
        }
        out.set_edge(q, x, std::move(word), e.target);
      }
    }
    return out;
  }

  //! Initial mode: keeps the states reachable from the initial state.
  //! Core mode: keeps the states reachable from every state, if there are
  //! any; otherwise returns `t` unchanged.
  inline Transducer remove_inaccessible(Transducer const& t) {
    std::vector<StateId> keep;
    if (!t.is_core()) {
      auto const seen = detail::reachable_from(t, t.initial());
      for (StateId q = 0; q < t.number_of_states(); ++q) {
        if (seen[q]) {
          keep.push_back(q);
        }
      }
    } else {
      keep = detail::reachable_from_all(t);
      if (keep.empty()) {
        return t;
      }
    }
    if (keep.size() == t.number_of_states()) {
      return t;
    }
    return detail::induced(t, keep);
  }

  //! Quotient by the coarsest partition that respects one-step outputs and
  //! successor blocks.  The initial state is never merged.  Each block is
  //! represented by its member with the shortlex-least access word (lowest
  //! index in core mode), which keeps its name.
  inline Transducer merge_equivalent_states(Transducer const& t) {
    auto const v = guaranteed_output(t);
    for (StateId q = 0; q < t.number_of_states(); ++q) {
      if (!v[q].empty()) {
        throw Error(ErrorCode::incomplete_response,
                    "state '" + t.name(q)
                        + "' has nonempty guaranteed output; remove "
                          "incomplete response first");
      }
    }
    std::size_t const N = t.number_of_states();
    // outputs replaced by small integers once, so that rounds compare
    // vectors of integers only
    std::map<Word, std::size_t>           word_id;
    std::vector<std::vector<std::size_t>> out_id(N);
    for (StateId q = 0; q < N; ++q) {
      for (Letter x : t.letters_at(q)) {
        out_id[q].push_back(
            word_id.try_emplace(t.at(q, x).output, word_id.size())
                .first->second);
      }
    }
    // block 0 is reserved for the initial state
    std::vector<StateId> block(N, 0);
    std::size_t          count = 0;
    while (true) {
      std::map<std::vector<std::size_t>, StateId> signature;
      std::vector<StateId>                        next(N);
      std::vector<std::size_t>                    key;
      for (StateId q = 0; q < N; ++q) {
        if (t.is_initial(q)) {
          next[q] = 0;
          continue;
        }
        key.assign({block[q]});
        auto const& xs = t.letters_at(q);
        for (std::size_t i = 0; i < xs.size(); ++i) {
          key.push_back(out_id[q][i]);
          key.push_back(block[t.at(q, xs[i]).target]);
        }
        next[q] = signature.try_emplace(key, signature.size() + 1)
                      .first->second;
      }
      std::size_t const next_count = signature.size();
      block                        = std::move(next);
      if (next_count == count) {
        break;
      }
      count = next_count;
    }

    std::vector<StateId> order;
    if (t.is_core()) {
      for (StateId q = 0; q < N; ++q) {
        order.push_back(q);
      }
    } else {
      order = bfs_order(t, t.initial());
      // unreachable states last, by index
      std::vector<bool> seen(N, false);
      for (StateId q : order) {
        seen[q] = true;
      }
      for (StateId q = 0; q < N; ++q) {
        if (!seen[q]) {
          order.push_back(q);
        }
      }
    }
    std::map<StateId, StateId> rep;  // block -> representative
    std::vector<StateId>       keep;
    for (StateId q : order) {
      if (rep.try_emplace(block[q], q).second) {
        keep.push_back(q);
      }
    }
    if (keep.size() == N) {
      return t;
    }
    Transducer           out(t.alphabet(), t.mode());
    std::map<StateId, StateId> id;  // block -> new state
    for (StateId q : keep) {
      id[block[q]] = out.add_state(t.name(q));
    }
    for (StateId q : keep) {
      if (t.is_initial(q)) {
        out.set_initial(id[block[q]]);
      }
      for (Letter x : t.letters_at(q)) {
        auto const& e = t.at(q, x);
        out.set_edge(id[block[q]], x, e.output, id[block[e.target]]);
      }
    }
    return out;
  }

  //! The minimal transducer with the same action.  Throws Error(degenerate)
  //! on invalid input.
  inline Transducer minimize(Transducer const& t) {
    require_valid(t);
    Transducer m = remove_inaccessible(t);
    m            = remove_incomplete_response(m);
    m            = remove_inaccessible(m);
    return merge_equivalent_states(m);
  }

  //! Renames states q0, q1, ... in breadth-first order (core mode: index
  //! order), which makes derived transducers print reproducibly.
  inline Transducer renumber(Transducer const& t) {
    std::vector<StateId> order;
    if (t.is_core()) {
      for (StateId q = 0; q < t.number_of_states(); ++q) {
        order.push_back(q);
      }
    } else {
      order = bfs_order(t, t.initial());
    }
    Transducer out = detail::induced(t, order);
    // two passes so intermediate names never clash
    for (StateId q = 0; q < out.number_of_states(); ++q) {
      out.rename_state(q, "\x01" + std::to_string(q));
    }
    for (StateId q = 0; q < out.number_of_states(); ++q) {
      out.rename_state(q, "q" + std::to_string(q));
    }
    return out;
  }

  //! The local action at nu as an initial transducer: each root letter k is
  //! read as the start of the tail after nu, so that nu x maps to
  //! theta(nu) followed by the image of x.  The root is echoed when
  //! theta(nu) already carries a root; otherwise it is dropped and the
  //! image supplies its own root.
  inline Transducer local_action(Transducer const& t, Word const& nu) {
    require_valid(t);
    if (t.is_core()) {
      throw Error(ErrorCode::invalid_argument,
                  "local actions are defined for initial transducers");
    }
    if (nu.empty()) {
      return renumber(minimize(t));
    }
    Transducer const c    = remove_incomplete_response(remove_inaccessible(t));
    StateId const    p    = run_word(c, c.initial(), nu).end;
    bool const       echo = !theta(t, nu).empty();

    auto const           order = bfs_order(c, p);
    Transducer           out(c.alphabet(), Mode::initial);
    std::vector<StateId> id(c.number_of_states());
    StateId const        q0 = out.add_state("\x01init");
    for (StateId q : order) {
      id[q] = out.add_state(c.name(q));
    }
    out.set_initial(q0);
    for (Letter k : c.root_letters()) {
      out.set_edge(q0, k, echo ? Word{k} : Word{}, id[p]);
    }
    for (StateId q : order) {
      for (Letter x : c.letters_at(q)) {
        auto const& e = c.at(q, x);
        out.set_edge(id[q], x, e.output, id[e.target]);
      }
    }
    return renumber(minimize(out));
  }

}  // namespace cantor

#endif  // CANTOR_MINIMIZE_HPP_
