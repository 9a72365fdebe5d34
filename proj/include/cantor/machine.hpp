// The transducer type, its non-degeneracy checks, and evaluation.
//
// Initial-mode transducers act on C_{n,r}: the initial state reads the r
// root letters, every other state reads the n digits.  Core-mode
// transducers act on C_n and have no initial state; every state reads
// digits and writes digit words.

#ifndef CANTOR_MACHINE_HPP_
#define CANTOR_MACHINE_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hpp"
#include "words.hpp"

namespace cantor {

  enum class Mode { initial, core };

  using StateId = std::size_t;

  struct Edge {
    Word    output;
    StateId target = 0;

    friend bool operator==(Edge const&, Edge const&) = default;
  };

  class Transducer {
   public:
    //! In core mode only `a.n` is meaningful; `r` is normalized to 1.
    Transducer(Alphabet a, Mode mode)
        : _alphabet(mode == Mode::core ? Alphabet(a.n, 1) : a), _mode(mode) {}

    [[nodiscard]] Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }
    [[nodiscard]] Mode mode() const noexcept {
      return _mode;
    }
    [[nodiscard]] bool is_core() const noexcept {
      return _mode == Mode::core;
    }
    [[nodiscard]] std::size_t number_of_states() const noexcept {
      return _names.size();
    }

    StateId add_state(std::string name) {
      if (_index.contains(name)) {
        throw Error(ErrorCode::invalid_argument,
                    "duplicate state name '" + name + "'");
      }
      StateId const q = _names.size();
      _index.emplace(name, q);
      _names.push_back(std::move(name));
      _rows.emplace_back(number_of_slots());
      return q;
    }

    [[nodiscard]] std::string const& name(StateId q) const {
      check_state(q);
      return _names[q];
    }

    [[nodiscard]] std::optional<StateId> find_state(
        std::string const& name) const {
      auto it = _index.find(name);
      if (it == _index.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    void rename_state(StateId q, std::string name) {
      check_state(q);
      if (_names[q] == name) {
        return;
      }
      if (_index.contains(name)) {
        throw Error(ErrorCode::invalid_argument,
                    "duplicate state name '" + name + "'");
      }
      _index.erase(_names[q]);
      _index.emplace(name, q);
      _names[q] = std::move(name);
    }

    void set_initial(StateId q) {
      if (is_core()) {
        throw Error(ErrorCode::invalid_argument,
                    "core transducers have no initial state");
      }
      check_state(q);
      _initial = q;
    }

    [[nodiscard]] bool has_initial() const noexcept {
      return _initial.has_value();
    }

    [[nodiscard]] StateId initial() const {
      if (!_initial) {
        throw Error(ErrorCode::invalid_argument, "no initial state");
      }
      return *_initial;
    }

    //! The state that reads root letters, if any.
    [[nodiscard]] bool is_initial(StateId q) const noexcept {
      return _initial && *_initial == q;
    }

    void set_edge(StateId q, Letter x, Word output, StateId target) {
      check_state(q);
      check_state(target);
      _rows[q][slot(x)] = Edge{std::move(output), target};
    }

    void clear_edge(StateId q, Letter x) {
      check_state(q);
      _rows[q][slot(x)].reset();
    }

    [[nodiscard]] std::optional<Edge> const& edge(StateId q, Letter x) const {
      check_state(q);
      return _rows[q][slot(x)];
    }

    //! Like edge() but throws when the transition is absent.
    [[nodiscard]] Edge const& at(StateId q, Letter x) const {
      auto const& e = edge(q, x);
      if (!e) {
        throw Error(ErrorCode::inadmissible_word,
                    "no transition from '" + name(q) + "' on "
                        + to_string(x));
      }
      return *e;
    }

    //! Letters read at q: the roots at the initial state, digits elsewhere.
    [[nodiscard]] std::vector<Letter> const& letters_at(StateId q) const {
      return is_initial(q) ? root_letters() : digit_letters();
    }

    [[nodiscard]] std::vector<Letter> const& root_letters() const {
      if (_roots.empty() && !is_core()) {
        for (int k = 0; k < _alphabet.r; ++k) {
          _roots.push_back(Letter::root(k));
        }
      }
      return _roots;
    }

    [[nodiscard]] std::vector<Letter> const& digit_letters() const {
      if (_digits.empty()) {
        for (int d = 0; d < _alphabet.n; ++d) {
          _digits.push_back(Letter::digit(d));
        }
      }
      return _digits;
    }

    //! Every letter the transducer's input alphabet contains, in the fixed
    //! order roots then digits.
    [[nodiscard]] std::vector<Letter> all_letters() const {
      std::vector<Letter> out = is_core() ? std::vector<Letter>{}
                                          : root_letters();
      auto const& ds = digit_letters();
      out.insert(out.end(), ds.begin(), ds.end());
      return out;
    }

    //! The digit-reading states: all but the initial state.
    [[nodiscard]] std::vector<StateId> digit_states() const {
      std::vector<StateId> out;
      for (StateId q = 0; q < number_of_states(); ++q) {
        if (!is_initial(q)) {
          out.push_back(q);
        }
      }
      return out;
    }

    [[nodiscard]] std::size_t max_output_length() const noexcept {
      std::size_t m = 0;
      for (auto const& row : _rows) {
        for (auto const& e : row) {
          if (e) {
            m = std::max(m, e->output.size());
          }
        }
      }
      return m;
    }

    [[nodiscard]] bool contains(Letter x) const noexcept {
      return x.is_root() ? !is_core() && x.value < _alphabet.r
                         : x.value < _alphabet.n;
    }

    //! Exact structural equality including state numbering and names.
    friend bool operator==(Transducer const& a, Transducer const& b) {
      return a._alphabet == b._alphabet && a._mode == b._mode
             && a._names == b._names && a._rows == b._rows
             && a._initial == b._initial;
    }

   private:
    [[nodiscard]] std::size_t number_of_slots() const noexcept {
      return static_cast<std::size_t>(_alphabet.n)
             + (is_core() ? 0 : static_cast<std::size_t>(_alphabet.r));
    }

    [[nodiscard]] std::size_t slot(Letter x) const {
      if (!contains(x)) {
        throw Error(ErrorCode::invalid_argument,
                    "letter " + to_string(x) + " not in the input alphabet");
      }
      if (x.is_root()) {
        return x.value;
      }
      return x.value + (is_core() ? 0 : static_cast<std::size_t>(_alphabet.r));
    }

    void check_state(StateId q) const {
      if (q >= _names.size()) {
        throw Error(ErrorCode::invalid_argument,
                    "state index " + std::to_string(q) + " out of range");
      }
    }

    Alphabet                                      _alphabet;
    Mode                                          _mode;
    std::vector<std::string>                      _names;
    std::unordered_map<std::string, StateId>      _index;
    std::vector<std::vector<std::optional<Edge>>> _rows;
    std::optional<StateId>                        _initial;
    mutable std::vector<Letter>                   _roots;
    mutable std::vector<Letter>                   _digits;
  };

  ////////////////////////////////////////////////////////////////////////
  // Validation
  ////////////////////////////////////////////////////////////////////////

  struct Violation {
    std::string            message;
    std::optional<StateId> state;
    std::optional<Letter>  letter;
  };

  namespace detail {

    //! States reachable from q0 along edges with empty output.
    inline std::vector<bool> epsilon_region(Transducer const& t) {
      std::vector<bool> in(t.number_of_states(), false);
      if (!t.has_initial()) {
        return in;
      }
      std::vector<StateId> stack{t.initial()};
      in[t.initial()] = true;
      while (!stack.empty()) {
        StateId const q = stack.back();
        stack.pop_back();
        for (Letter x : t.all_letters()) {
          auto const& e = t.edge(q, x);
          if (e && e->output.empty() && !in[e->target]) {
            in[e->target] = true;
            stack.push_back(e->target);
          }
        }
      }
      return in;
    }

    //! Some state lying on a cycle of empty-output edges, if one exists.
    inline std::optional<StateId> epsilon_cycle_state(Transducer const& t) {
      std::size_t const    N = t.number_of_states();
      std::vector<uint8_t> colour(N, 0);  // 0 new, 1 on stack, 2 done
      auto const           letters = t.all_letters();
      for (StateId s = 0; s < N; ++s) {
        if (colour[s] != 0) {
          continue;
        }
        // iterative DFS: (state, next letter index)
        std::vector<std::pair<StateId, std::size_t>> stack{{s, 0}};
        colour[s] = 1;
        while (!stack.empty()) {
          auto& [q, i] = stack.back();
          if (i == letters.size()) {
            colour[q] = 2;
            stack.pop_back();
            continue;
          }
          auto const& e = t.edge(q, letters[i++]);
          if (!e || !e->output.empty() || e->target >= N) {
            continue;
          }
          if (colour[e->target] == 1) {
            return e->target;
          }
          if (colour[e->target] == 0) {
            colour[e->target] = 1;
            stack.emplace_back(e->target, 0);
          }
        }
      }
      return std::nullopt;
    }

  }  // namespace detail

  //! All non-degeneracy violations; empty iff `t` is a valid transducer.
  inline std::vector<Violation> validate(Transducer const& t) {
    std::vector<Violation> out;
    auto const&            a = t.alphabet();
    auto const             N = t.number_of_states();
    if (N == 0) {
      out.push_back({"no states", std::nullopt, std::nullopt});
      return out;
    }
    if (!t.is_core() && !t.has_initial()) {
      out.push_back({"no initial state", std::nullopt, std::nullopt});
      return out;
    }

    // domain of the transition function
    for (StateId q = 0; q < N; ++q) {
      for (Letter x : t.all_letters()) {
        bool const  expected = t.is_initial(q) == x.is_root();
        auto const& e        = t.edge(q, x);
        if (expected && !e) {
          out.push_back({"incomplete transition table", q, x});
        } else if (!expected && e) {
          out.push_back({t.is_initial(q) ? "initial state reads a digit"
                                         : "non-initial state reads a root",
                         q,
                         x});
        } else if (e && !(e->output.in(a) && e->output.well_formed())) {
          out.push_back({"malformed output word", q, x});
        }
      }
    }
    if (!out.empty()) {
      return out;
    }

    if (t.is_core()) {
      for (StateId q = 0; q < N; ++q) {
        for (Letter x : t.digit_letters()) {
          if (!t.edge(q, x)->output.is_digit_word()) {
            out.push_back({"core output contains a root", q, x});
          }
        }
      }
    } else {
      auto const in_r = detail::epsilon_region(t);
      for (StateId q = 0; q < N; ++q) {
        for (Letter x : t.letters_at(q)) {
          auto const& e = *t.edge(q, x);
          if (e.target == t.initial()) {
            out.push_back({"transition into the initial state", q, x});
          } else if (in_r[e.target]) {
            if (!in_r[q] || !e.output.empty()) {
              out.push_back(
                  {"transition into the pre-root region from outside or "
                   "with output",
                   q,
                   x});
            }
          } else if (in_r[q]) {
            if (!e.output.is_rooted()) {
              out.push_back(
                  {"pre-root transition must output a rooted word", q, x});
            }
          } else if (!e.output.is_digit_word()) {
            out.push_back({"root letter output after the root", q, x});
          }
        }
      }
    }
    if (auto q = detail::epsilon_cycle_state(t)) {
      out.push_back({"epsilon-output cycle", *q, std::nullopt});
    }
    return out;
  }

  inline std::string describe(Transducer const& t, Violation const& v) {
    std::string s = v.message;
    if (v.state) {
      s += " at state '" + t.name(*v.state) + "'";
    }
    if (v.letter) {
      s += " letter " + to_string(*v.letter);
    }
    return s;
  }

  inline bool is_valid(Transducer const& t) {
    return validate(t).empty();
  }

  //! Throws Error(degenerate) listing the violations, if any.
  inline void require_valid(Transducer const& t) {
    auto const vs = validate(t);
    if (vs.empty()) {
      return;
    }
    std::string msg;
    for (auto const& v : vs) {
      msg += (msg.empty() ? "" : "; ") + describe(t, v);
    }
    throw Error(ErrorCode::degenerate, msg);
  }

  ////////////////////////////////////////////////////////////////////////
  // Evaluation
  ////////////////////////////////////////////////////////////////////////

  struct RunResult {
    Word    output;
    StateId end = 0;
  };

  //! Extended output and transition functions on a finite word.
  inline RunResult run_word(Transducer const& t, StateId q, Word const& w) {
    RunResult res{{}, q};
    for (Letter x : w) {
      if (t.is_initial(res.end) != x.is_root() || !t.contains(x)) {
        throw Error(ErrorCode::inadmissible_word,
                    "letter " + to_string(x) + " cannot be read at state '"
                        + t.name(res.end) + "'");
      }
      auto const& e = t.at(res.end, x);
      res.output += e.output;
      res.end = e.target;
    }
    return res;
  }

  //! Image of u v^omega read from state q.
  inline EventuallyPeriodicPoint eval_point(Transducer const&              t,
                                            StateId                        q,
                                            EventuallyPeriodicPoint const& x) {
    auto [out, p] = run_word(t, q, x.preperiod());
    std::vector<StateId> seen{p};
    std::vector<Word>    chunks;
    while (true) {
      auto step = run_word(t, p, x.period());
      chunks.push_back(std::move(step.output));
      p = step.end;
      auto it = std::find(seen.begin(), seen.end(), p);
      if (it != seen.end()) {
        auto const j = static_cast<std::size_t>(it - seen.begin());
        Word       period;
        for (std::size_t i = 0; i < chunks.size(); ++i) {
          (i < j ? out : period) += chunks[i];
        }
        if (period.empty()) {
          throw Error(ErrorCode::degenerate,
                      "periodic input produces finite output");
        }
        return EventuallyPeriodicPoint(std::move(out), std::move(period));
      }
      seen.push_back(p);
    }
  }

  //! Image of a point of C_{n,r} under an initial-mode transducer.
  inline EventuallyPeriodicPoint eval_point(Transducer const&              t,
                                            EventuallyPeriodicPoint const& x) {
    if (t.is_core()) {
      throw Error(ErrorCode::invalid_argument,
                  "core transducers need an explicit start state");
    }
    return eval_point(t, t.initial(), x);
  }

  ////////////////////////////////////////////////////////////////////////
  // Guaranteed outputs and the root function
  ////////////////////////////////////////////////////////////////////////

  //! For each state q the longest common prefix of everything q can emit on
  //! nonempty inputs; the initial state is assigned the empty word.  Throws
  //! Error(unbounded_guaranteed_output) when the fixpoint does not settle
  //! within |Q| * (1 + max output length) passes.
  inline std::vector<Word> guaranteed_output(Transducer const& t) {
    std::size_t const N   = t.number_of_states();
    std::size_t const cap = N * (1 + t.max_output_length());
    std::vector<Word> v(N);
    for (std::size_t pass = 0; pass <= cap; ++pass) {
      std::vector<Word> next(N);
      bool              stable = true;
      for (StateId q = 0; q < N; ++q) {
        if (t.is_initial(q)) {
          continue;
        }
        bool first = true;
        Word lcp;
        for (Letter x : t.letters_at(q)) {
          auto const& e = t.at(q, x);
          if (first) {
            lcp   = e.output + v[e.target];
            first = false;
          } else {
            // only the first |lcp| letters of the candidate matter
            Word const cand = e.output + v[e.target].prefix(lcp.size());
            lcp             = longest_common_prefix(lcp, cand);
          }
        }
        stable  = stable && lcp == v[q];
        next[q] = std::move(lcp);
      }
      if (stable) {
        return v;
      }
      v = std::move(next);
    }
    throw Error(ErrorCode::unbounded_guaranteed_output,
                "fixpoint did not settle within " + std::to_string(cap)
                    + " passes");
  }

  //! The root of the image of the cone of nu: lambda(nu, q0) v(pi(nu, q0)).
  //! The empty word maps to the empty word.
  inline Word theta(Transducer const& t, Word const& nu) {
    if (nu.empty()) {
      return {};
    }
    auto const [out, end] = run_word(t, t.initial(), nu);
    return out + guaranteed_output(t)[end];
  }

}  // namespace cantor

#endif  // CANTOR_MACHINE_HPP_
