// Membership in G_{n,r}, arithmetic of cores (outer classes), and the
// synchronous-core and cycle-balance tests.

#ifndef CANTOR_CLASSIFY_HPP_
#define CANTOR_CLASSIFY_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "canonical.hpp"
#include "error.hpp"
#include "machine.hpp"
#include "minimize.hpp"
#include "synchro.hpp"

namespace cantor {

  //! The core of the minimal transducer of `t` (either mode).
  inline Transducer reduced_core(Transducer const& t) {
    return core_of(minimize(t));
  }

  //! A core with one state that echoes every digit.
  inline bool is_identity_core(Transducer const& core) {
    if (!core.is_core() || core.number_of_states() != 1) {
      return false;
    }
    for (Letter d : core.digit_letters()) {
      auto const& e = core.at(0, d);
      if (e.output != Word{d} || e.target != 0) {
        return false;
      }
    }
    return true;
  }

  inline bool is_in_Gnr(Transducer const& t) {
    if (!is_bisynchronizing(t).bisynchronizing) {
      return false;
    }
    return is_identity_core(reduced_core(t));
  }

  //! Equal reduced cores up to strong isomorphism.
  inline bool outer_class_equal(Transducer const& a, Transducer const& b) {
    if (a.alphabet().n != b.alphabet().n) {
      throw Error(ErrorCode::invalid_argument, "digit alphabets differ");
    }
    return canonical_form(reduced_core(a)) == canonical_form(reduced_core(b));
  }

  //! The product of two outer classes given by their cores.  Products of
  //! synchronizing cores synchronize, so the reduced product (which keeps
  //! only the states reachable from every state) is already a core; the
  //! synchronization level is not recomputed.
  inline Transducer outer_product(Transducer const& a, Transducer const& b) {
    if (!a.is_core() || !b.is_core()) {
      throw Error(ErrorCode::invalid_argument, "outer_product expects cores");
    }
    Transducer c = compose(a, b);
    if (detail::reachable_from_all(c).size() != c.number_of_states()) {
      throw Error(ErrorCode::not_synchronizing,
                  "product of the cores has no unique terminal component");
    }
    return c;
  }

  struct OrderResult {
    enum class Kind { finite, infinite, unknown };
    Kind        kind  = Kind::unknown;
    std::size_t order = 0;  // when finite; the cap when unknown
  };

  //! Powers of the class of `a` are computed until one is trivial, one
  //! repeats (then no power is trivial), or `cap` powers have been tried.
  inline OrderResult order_in_On(Transducer const& a, std::size_t cap = 64) {
    if (cap == 0) {
      throw Error(ErrorCode::invalid_argument, "cap must be positive");
    }
    Transducer const base  = reduced_core(a);
    Transducer       power = base;
    std::set<CanonicalForm> seen;
    for (std::size_t k = 1; k <= cap; ++k) {
      if (is_identity_core(power)) {
        return {OrderResult::Kind::finite, k};
      }
      if (!seen.insert(canonical_form(power)).second) {
        return {OrderResult::Kind::infinite, 0};
      }
      if (k < cap) {
        power = outer_product(power, base);
      }
    }
    return {OrderResult::Kind::unknown, cap};
  }

  ////////////////////////////////////////////////////////////////////////
  // Cycle balance
  ////////////////////////////////////////////////////////////////////////

  struct CycleWitness {
    std::vector<StateId> states;  // states[0] is where the cycle starts
    Word                 input;
    Word                 output;
  };

  namespace detail {

    inline std::vector<std::vector<bool>> reachability(Transducer const& t) {
      std::vector<std::vector<bool>> r;
      for (StateId q = 0; q < t.number_of_states(); ++q) {
        r.push_back(reachable_from(t, q));
      }
      return r;
    }

    class CycleSearch {
     public:
      CycleSearch(Transducer const& t, std::size_t length, StateId start)
          : _t(t), _length(length), _start(start),
            _used(t.number_of_states(), false) {}

      std::optional<CycleWitness> run() {
        _witness.states.push_back(_start);
        if (extend(_start)) {
          return _witness;
        }
        return std::nullopt;
      }

     private:
      bool extend(StateId q) {
        for (Letter d : _t.digit_letters()) {
          auto const& e = _t.at(q, d);
          _witness.input.push_back(d);
          Word const saved = _witness.output;
          _witness.output += e.output;
          if (_witness.input.size() == _length) {
            if (e.target == _start
                && _witness.input.size() != _witness.output.size()) {
              return true;
            }
          } else if (e.target > _start && !_used[e.target]) {
            _used[e.target] = true;
            _witness.states.push_back(e.target);
            if (extend(e.target)) {
              return true;
            }
            _witness.states.pop_back();
            _used[e.target] = false;
          }
          _witness.output = saved;
          _witness.input.pop_back();
        }
        return false;
      }

      Transducer const& _t;
      std::size_t       _length;
      StateId           _start;
      std::vector<bool> _used;
      CycleWitness      _witness;
    };

  }  // namespace detail

  //! True iff every directed cycle (within a strongly connected component)
  //! writes exactly as many letters as it reads.  Decided by finding a
  //! potential phi with |output| - 1 = phi(target) - phi(source) on every
  //! edge inside a component.
  inline bool cycle_balanced(Transducer const& t) {
    auto const                      reach = detail::reachability(t);
    std::size_t const               N     = t.number_of_states();
    std::vector<std::optional<long>> phi(N);
    auto same = [&](StateId p, StateId q) {
      return reach[p][q] && reach[q][p];
    };
    for (StateId s = 0; s < N; ++s) {
      if (phi[s]) {
        continue;
      }
      phi[s] = 0;
      std::vector<StateId> queue{s};
      for (std::size_t i = 0; i < queue.size(); ++i) {
        StateId const q = queue[i];
        for (Letter x : t.letters_at(q)) {
          auto const& e = t.at(q, x);
          if (!same(q, e.target)) {
            continue;
          }
          long const want = *phi[q] + static_cast<long>(e.output.size()) - 1;
          if (!phi[e.target]) {
            phi[e.target] = want;
            queue.push_back(e.target);
          } else if (*phi[e.target] != want) {
            return false;
          }
        }
      }
    }
    return true;
  }

  //! A shortest simple cycle whose output length differs from its input
  //! length; among those of equal length the first in (start state, letter)
  //! order, listed from its least state.
  inline std::optional<CycleWitness>
  find_unbalanced_cycle(Transducer const& core) {
    if (!core.is_core()) {
      throw Error(ErrorCode::invalid_argument,
                  "find_unbalanced_cycle expects a core");
    }
    for (std::size_t len = 1; len <= core.number_of_states(); ++len) {
      for (StateId s = 0; s < core.number_of_states(); ++s) {
        if (auto w = detail::CycleSearch(core, len, s).run()) {
          return w;
        }
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Classification
  ////////////////////////////////////////////////////////////////////////

  struct SubgroupFlags {
    bool        in_Gnr = false;
    bool        in_Pn  = false;  // every core transition writes one letter
    bool        in_Ln  = false;  // the core is cycle-balanced
    bool        in_On  = false;
    std::size_t sync_level  = 0;
    std::size_t core_states = 0;
  };

  //! Throws Error(not_bisynchronizing) unless `t` is bi-synchronizing.
  //! The L flag is the cycle-balance criterion: every simple cycle of the
  //! core writes exactly as many letters as it reads.
  inline SubgroupFlags classify_subgroup(Transducer const& t) {
    auto const b = is_bisynchronizing(t);
    if (!b.bisynchronizing) {
      throw Error(ErrorCode::not_bisynchronizing, b.reason);
    }
    Transducer const core = reduced_core(t);
    SubgroupFlags    f;
    f.in_On       = true;
    f.sync_level  = *b.forward_level;
    f.core_states = core.number_of_states();
    f.in_Pn       = true;
    for (StateId q = 0; q < core.number_of_states(); ++q) {
      for (Letter d : core.digit_letters()) {
        f.in_Pn = f.in_Pn && core.at(q, d).output.size() == 1;
      }
    }
    f.in_Ln  = cycle_balanced(core);
    f.in_Gnr = is_identity_core(core);
    return f;
  }

  struct PermutationState {
    bool                       permutation = false;
    std::optional<Permutation> sigma;  // the one-letter map, if a bijection
    bool                       twist = false;  // every successor is q itself
  };

  inline PermutationState check_permutation_state(Transducer const& t,
                                                  StateId           q) {
    if (t.is_initial(q)) {
      throw Error(ErrorCode::invalid_argument,
                  "state '" + t.name(q) + "' does not read digits");
    }
    PermutationState res;
    std::vector<int> images;
    bool             loops = true;
    for (Letter d : t.digit_letters()) {
      auto const& e = t.at(q, d);
      if (e.output.size() != 1 || !e.output[0].is_digit()) {
        return res;
      }
      images.push_back(e.output[0].value);
      loops = loops && e.target == q;
    }
    try {
      res.sigma.emplace(std::move(images));
    } catch (Error const&) {
      return res;
    }
    res.permutation = true;
    res.twist       = loops;
    return res;
  }

}  // namespace cantor

#endif  // CANTOR_CLASSIFY_HPP_
