// Group operations on transducers and constructors for the basic
// families: identity, prefix-code maps, digit-permutation twists.
//
// Composition is left to right: compose(a, b) maps x to (x a) b.

#ifndef CANTOR_ALGEBRA_HPP_
#define CANTOR_ALGEBRA_HPP_

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "canonical.hpp"
#include "error.hpp"
#include "machine.hpp"
#include "minimize.hpp"
#include "words.hpp"

namespace cantor {

  inline Transducer identity_transducer(Alphabet const& a) {
    Transducer    t(a, Mode::initial);
    StateId const q0 = t.add_state("q0");
    StateId const id = t.add_state("q1");
    t.set_initial(q0);
    for (Letter k : t.root_letters()) {
      t.set_edge(q0, k, Word{k}, id);
    }
    for (Letter d : t.digit_letters()) {
      t.set_edge(id, d, Word{d}, id);
    }
    return t;
  }

  //! The one-state core that echoes every digit.
  inline Transducer identity_core(int n) {
    Transducer    t(Alphabet(n, 1), Mode::core);
    StateId const id = t.add_state("q0");
    for (Letter d : t.digit_letters()) {
      t.set_edge(id, d, Word{d}, id);
    }
    return t;
  }

  //! Initial transducer whose initial state reads each root k, echoes it,
  //! and moves to `start` in a copy of `core`.
  inline Transducer lift_core(Transducer const& core, StateId start,
                              int r = 1) {
    if (!core.is_core()) {
      throw Error(ErrorCode::invalid_argument, "lift_core expects a core");
    }
    Transducer           t(Alphabet(core.alphabet().n, r), Mode::initial);
    StateId const        q0 = t.add_state("\x01init");
    std::vector<StateId> id(core.number_of_states());
    for (StateId q = 0; q < core.number_of_states(); ++q) {
      id[q] = t.add_state(core.name(q));
    }
    t.set_initial(q0);
    for (Letter k : t.root_letters()) {
      t.set_edge(q0, k, Word{k}, id.at(start));
    }
    for (StateId q = 0; q < core.number_of_states(); ++q) {
      for (Letter d : core.digit_letters()) {
        auto const& e = core.at(q, d);
        t.set_edge(id[q], d, e.output, id[e.target]);
      }
    }
    return renumber(t);
  }

  ////////////////////////////////////////////////////////////////////////
  // Composition
  ////////////////////////////////////////////////////////////////////////

  namespace detail {

    //! Pair product on the pairs reachable from `starts`, unminimized.
    inline Transducer
    raw_product(Transducer const&                          a,
                Transducer const&                          b,
                std::vector<std::pair<StateId, StateId>> const& starts) {
      Transducer                               out(a.alphabet(), a.mode());
      std::map<std::pair<StateId, StateId>, StateId> id;
      std::vector<std::pair<StateId, StateId>> pairs;
      auto lookup = [&](std::pair<StateId, StateId> p) {
        auto [it, fresh] = id.try_emplace(p, pairs.size());
        if (fresh) {
          pairs.push_back(p);
          out.add_state("q" + std::to_string(it->second));
        }
        return it->second;
      };
      for (auto const& s : starts) {
        lookup(s);
      }
      if (!a.is_core()) {
        out.set_initial(0);
      }
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto const [p, q] = pairs[i];
        for (Letter x : a.letters_at(p)) {
          auto const& e = a.at(p, x);
          auto const  r = run_word(b, q, e.output);
          out.set_edge(i, x, r.output, lookup({e.target, r.end}));
        }
      }
      return out;
    }

    inline void require_compatible(Transducer const& a, Transducer const& b) {
      if (a.mode() != b.mode() || a.alphabet() != b.alphabet()) {
        throw Error(ErrorCode::invalid_argument,
                    "operands differ in alphabet or mode");
      }
    }

  }  // namespace detail

  //! The minimal transducer of x -> (x a) b.  In core mode the product is
  //! taken over all pairs and reduced in core mode.
  inline Transducer compose(Transducer const& a, Transducer const& b) {
    detail::require_compatible(a, b);
    require_valid(a);
    require_valid(b);
    std::vector<std::pair<StateId, StateId>> starts;
    if (a.is_core()) {
      for (StateId p = 0; p < a.number_of_states(); ++p) {
        for (StateId q = 0; q < b.number_of_states(); ++q) {
          starts.emplace_back(p, q);
        }
      }
    } else {
      starts.emplace_back(a.initial(), b.initial());
    }
    Transducer const raw = detail::raw_product(a, b, starts);
    auto const       vs  = validate(raw);
    if (!vs.empty()) {
      throw Error(ErrorCode::degenerate,
                  "product is degenerate: " + describe(raw, vs.front()));
    }
    return renumber(minimize(raw));
  }

  ////////////////////////////////////////////////////////////////////////
  // Inversion
  ////////////////////////////////////////////////////////////////////////

  namespace detail {

    class Inverter {
     public:
      explicit Inverter(Transducer const& m)
          : _m(m),
            _bound(m.number_of_states() * (1 + m.max_output_length())) {}

      Transducer run() {
        Transducer out(_m.alphabet(), Mode::initial);
        state(out, {_m.initial(), {}});
        out.set_initial(0);
        for (std::size_t i = 0; i < _pending.size(); ++i) {
          auto const [q, u] = _pending[i];
          bool const start  = i == 0;
          auto const& ys = start ? _m.root_letters() : _m.digit_letters();
          for (Letter y : ys) {
            StateId p    = q;
            Word    rest = u + y;
            Word    emitted;
            resolve(p, rest, emitted);
            StateId const target = state(out, {p, rest});
            out.set_edge(i, y, std::move(emitted), target);
          }
        }
        return out;
      }

     private:
      // Reads off every input letter forced by the pending word.
      void resolve(StateId& q, Word& u, Word& emitted) {
        while (true) {
          std::optional<Letter> only;
          std::size_t           consistent = 0;
          for (Letter x : _m.letters_at(q)) {
            auto const& e = _m.at(q, x);
            auto const  rel = relate(e.output, u);
            if (rel == Relation::incomparable) {
              continue;
            }
            if ((rel == Relation::prefix || rel == Relation::equal)
                && !reaches(e.target, subtract(u, e.output))) {
              continue;
            }
            ++consistent;
            only = x;
          }
          if (consistent == 0) {
            throw Error(ErrorCode::not_invertible,
                        "pending word '" + to_string(u)
                            + "' is not an output from state '" + _m.name(q)
                            + "'");
          }
          if (consistent > 1) {
            break;
          }
          auto const& e = _m.at(q, *only);
          if (!is_prefix(e.output, u)) {
            break;
          }
          emitted.push_back(*only);
          u = subtract(u, e.output);
          q = e.target;
        }
        if (u.size() > _bound) {
          throw Error(ErrorCode::not_invertible,
                      "pending word exceeds length bound "
                          + std::to_string(_bound));
        }
      }

      // Some input read from q produces output extending or matching z.
      bool reaches(StateId q, Word const& z) {
        if (z.empty()) {
          return true;
        }
        auto key = std::make_pair(q, z);
        if (auto it = _reach.find(key); it != _reach.end()) {
          return it->second;
        }
        bool ok = false;
        for (Letter x : _m.letters_at(q)) {
          auto const& e   = _m.at(q, x);
          auto const  rel = relate(e.output, z);
          if (rel == Relation::equal || rel == Relation::extension) {
            ok = true;
          } else if (rel == Relation::prefix) {
            ok = reaches(e.target, subtract(z, e.output));
          }
          if (ok) {
            break;
          }
        }
        _reach.emplace(std::move(key), ok);
        return ok;
      }

      StateId state(Transducer& out, std::pair<StateId, Word> key) {
        auto [it, fresh] = _id.try_emplace(key, _pending.size());
        if (fresh) {
          _pending.push_back(std::move(key));
          out.add_state("q" + std::to_string(it->second));
        }
        return it->second;
      }

      Transducer const&                           _m;
      std::size_t                                 _bound;
      std::map<std::pair<StateId, Word>, StateId> _id;
      std::vector<std::pair<StateId, Word>>       _pending;
      std::map<std::pair<StateId, Word>, bool>    _reach;
    };

  }  // namespace detail

  //! The minimal transducer of the inverse map, built from pending output
  //! suffixes and checked by composing back to the identity.  Throws
  //! Error(not_invertible) when the construction fails or does not verify.
  inline Transducer invert(Transducer const& a) {
    if (a.is_core()) {
      throw Error(ErrorCode::invalid_argument,
                  "invert expects an initial transducer; lift cores first");
    }
    Transducer const m   = minimize(a);
    Transducer       raw = detail::Inverter(m).run();
    auto const       vs  = validate(raw);
    if (!vs.empty()) {
      throw Error(ErrorCode::not_invertible,
                  "inverse is degenerate: " + describe(raw, vs.front()));
    }
    Transducer  inv = renumber(minimize(raw));
    auto const  id  = canonical_form(identity_transducer(a.alphabet()));
    bool        ok  = false;
    try {
      ok = canonical_form(compose(m, inv)) == id;
    } catch (Error const&) {
      ok = false;
    }
    if (!ok) {
      throw Error(ErrorCode::not_invertible, "round trip is not the identity");
    }
    return inv;
  }

  ////////////////////////////////////////////////////////////////////////
  // Prefix-code maps
  ////////////////////////////////////////////////////////////////////////

  //! The element of G_{n,r} sending the cone of domain[i] onto the cone of
  //! range[i] by prefix replacement.
  struct PrefixCodeMap {
    PrefixCode domain;
    PrefixCode range;

    friend bool operator==(PrefixCodeMap const&, PrefixCodeMap const&)
        = default;
  };

  inline CodeDiagnostic validate_prefix_code_map(PrefixCodeMap const& m,
                                                 Alphabet const&      a) {
    if (m.domain.words.size() != m.range.words.size()) {
      return {false, "domain and range differ in size"};
    }
    if (auto d = validate_prefix_code(m.domain, a); !d) {
      return {false, "domain: " + d.message};
    }
    if (auto d = validate_prefix_code(m.range, a); !d) {
      return {false, "range: " + d.message};
    }
    return {};
  }

  inline PrefixCodeMap inverse(PrefixCodeMap const& m) {
    return {m.range, m.domain};
  }

  inline Transducer from_prefix_code_map(PrefixCodeMap const& m,
                                         Alphabet const&      a) {
    if (auto d = validate_prefix_code_map(m, a); !d) {
      throw Error(ErrorCode::invalid_argument, d.message);
    }
    // split every pair until both sides have a digit
    std::vector<std::pair<Word, Word>> pairs;
    std::vector<std::pair<Word, Word>> todo;
    for (std::size_t i = 0; i < m.domain.words.size(); ++i) {
      todo.emplace_back(m.domain.words[i], m.range.words[i]);
    }
    while (!todo.empty()) {
      auto [alpha, beta] = std::move(todo.back());
      todo.pop_back();
      if (alpha.size() >= 2 && beta.size() >= 2) {
        pairs.emplace_back(std::move(alpha), std::move(beta));
        continue;
      }
      for (int d = a.n - 1; d >= 0; --d) {
        todo.emplace_back(alpha + Letter::digit(d), beta + Letter::digit(d));
      }
    }

    Transducer             t(a, Mode::initial);
    std::map<Word, StateId> node;
    std::map<Word, Word>    image;
    for (auto const& [alpha, beta] : pairs) {
      image.emplace(alpha, beta);
      for (std::size_t k = 0; k < alpha.size(); ++k) {
        Word const p = alpha.prefix(k);
        if (!node.contains(p)) {
          node.emplace(p, t.add_state("q" + std::to_string(node.size())));
        }
      }
    }
    StateId const one = t.add_state("one");
    t.set_initial(node.at(Word{}));
    for (Letter d : t.digit_letters()) {
      t.set_edge(one, d, Word{d}, one);
    }
    for (auto const& [p, q] : node) {
      for (Letter x : t.letters_at(q)) {
        Word const next = p + x;
        if (auto it = image.find(next); it != image.end()) {
          t.set_edge(q, x, it->second, one);
        } else {
          t.set_edge(q, x, {}, node.at(next));
        }
      }
    }
    return renumber(minimize(t));
  }

  ////////////////////////////////////////////////////////////////////////
  // Permutations and twists
  ////////////////////////////////////////////////////////////////////////

  //! A bijection of {0, ..., n-1}; `sigma * tau` applies sigma first.
  class Permutation {
   public:
    explicit Permutation(std::vector<int> images) : _images(std::move(images)) {
      std::vector<bool> hit(_images.size(), false);
      for (int i : _images) {
        if (i < 0 || static_cast<std::size_t>(i) >= _images.size() || hit[i]) {
          throw Error(ErrorCode::invalid_argument, "not a permutation");
        }
        hit[i] = true;
      }
    }

    static Permutation identity(int n) {
      std::vector<int> v(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        v[i] = i;
      }
      return Permutation(std::move(v));
    }

    [[nodiscard]] int size() const noexcept {
      return static_cast<int>(_images.size());
    }
    int operator()(int i) const {
      return _images.at(static_cast<std::size_t>(i));
    }
    [[nodiscard]] std::vector<int> const& images() const noexcept {
      return _images;
    }

    [[nodiscard]] Permutation inverse() const {
      std::vector<int> v(_images.size());
      for (std::size_t i = 0; i < _images.size(); ++i) {
        v[_images[i]] = static_cast<int>(i);
      }
      return Permutation(std::move(v));
    }

    friend Permutation operator*(Permutation const& sigma,
                                 Permutation const& tau) {
      if (sigma.size() != tau.size()) {
        throw Error(ErrorCode::invalid_argument, "permutation sizes differ");
      }
      std::vector<int> v(sigma._images.size());
      for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = tau(sigma._images[i]);
      }
      return Permutation(std::move(v));
    }

    friend bool operator==(Permutation const&, Permutation const&) = default;

   private:
    std::vector<int> _images;
  };

  inline std::string to_string(Permutation const& p) {
    std::string s;
    for (int i = 0; i < p.size(); ++i) {
      s += (i == 0 ? "" : " ") + std::to_string(p(i));
    }
    return s;
  }

  //! Applies sigma to every digit, leaving the root untouched.
  inline Transducer twist_transducer(Permutation const& sigma,
                                     Alphabet const&    a) {
    if (sigma.size() != a.n) {
      throw Error(ErrorCode::invalid_argument,
                  "permutation size differs from n");
    }
    Transducer    t(a, Mode::initial);
    StateId const q0 = t.add_state("q0");
    StateId const tw = t.add_state("q1");
    t.set_initial(q0);
    for (Letter k : t.root_letters()) {
      t.set_edge(q0, k, Word{k}, tw);
    }
    for (int d = 0; d < a.n; ++d) {
      t.set_edge(tw, Letter::digit(d), Word{Letter::digit(sigma(d))}, tw);
    }
    return t;
  }

}  // namespace cantor

#endif  // CANTOR_ALGEBRA_HPP_
