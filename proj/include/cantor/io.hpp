// Text documents for transducers and prefix-code maps.
//
//   cantor-transducer 1
//   alphabet n=3 r=2          (or: alphabet n=3 core)
//   states q0 q1 q2           (optional; fixes the state order)
//   initial q0                (initial mode only)
//   q0 .0 -> q1 : -
//   q1 0 -> q2 : .0 1
//
// `#` starts a comment.  Outputs use the word syntax of words.hpp.

#ifndef CANTOR_IO_HPP_
#define CANTOR_IO_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "error.hpp"
#include "machine.hpp"
#include "words.hpp"

namespace cantor {

  namespace detail {

    struct Token {
      std::string text;
      std::size_t column;  // 1-based
    };

    inline std::vector<Token> tokenize(std::string_view line) {
      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      std::vector<Token> out;
      std::size_t        i = 0;
      while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
          ++i;
          continue;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t'
               && line[j] != '\r') {
          ++j;
        }
        out.push_back({std::string(line.substr(i, j - i)), i + 1});
        i = j;
      }
      return out;
    }

    [[noreturn]] inline void syntax_error(std::size_t        line,
                                          std::size_t        column,
                                          std::string const& msg) {
      throw Error(ErrorCode::parse,
                  "line " + std::to_string(line) + ", column "
                      + std::to_string(column) + ": " + msg);
    }

    inline int parse_count(Token const& t, std::string_view key,
                           std::size_t line) {
      std::string const prefix = std::string(key) + "=";
      if (t.text.rfind(prefix, 0) != 0 || t.text.size() == prefix.size()
          || t.text.size() > prefix.size() + 4) {
        syntax_error(line, t.column, "expected " + prefix + "<number>");
      }
      int v = 0;
      for (char c : t.text.substr(prefix.size())) {
        if (c < '0' || c > '9') {
          syntax_error(line, t.column, "expected " + prefix + "<number>");
        }
        v = v * 10 + (c - '0');
      }
      return v;
    }

    struct AlphabetLine {
      Alphabet alphabet;
      bool     core = false;
    };

    inline AlphabetLine parse_alphabet(std::vector<Token> const& tk,
                                       std::size_t               line,
                                       bool                      allow_core) {
      if (tk.size() != 3 || tk[0].text != "alphabet") {
        syntax_error(line, tk.empty() ? 1 : tk[0].column,
                     "expected 'alphabet n=<n> r=<r>'");
      }
      int const n    = parse_count(tk[1], "n", line);
      bool      core = allow_core && tk[2].text == "core";
      int const r    = core ? 1 : parse_count(tk[2], "r", line);
      try {
        return {Alphabet(n, r), core};
      } catch (Error const& e) {
        syntax_error(line, tk[1].column, e.what());
      }
    }

    inline Word parse_word_tokens(std::vector<Token> const& tk,
                                  std::size_t first, std::size_t last,
                                  Alphabet const& a, std::size_t line) {
      std::string text;
      for (std::size_t i = first; i < last; ++i) {
        text += tk[i].text + ' ';
      }
      if (first == last) {
        syntax_error(line,
                     first < tk.size() ? tk[first].column
                                       : tk.back().column + 1,
                     "missing word (use '-' for the empty word)");
      }
      try {
        return parse_word(text, a);
      } catch (Error const& e) {
        syntax_error(line, tk[first].column, e.what());
      }
    }

  }  // namespace detail

  struct ParsedTransducer {
    Transducer transducer;
    //! Source line of each transition, keyed by (state, letter).
    std::map<std::pair<StateId, Letter>, std::size_t> lines;
  };

  //! Parses without validating.  Throws Error(parse) with line and column.
  inline ParsedTransducer parse_transducer_unchecked(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string        raw;
    std::size_t        line = 0;

    std::optional<detail::AlphabetLine> alpha;
    std::optional<Transducer>           t;
    bool                                header = false;
    std::optional<std::pair<std::string, std::size_t>> initial;
    std::map<std::pair<StateId, Letter>, std::size_t>  lines;

    auto state_id = [&](detail::Token const& tok) {
      if (auto q = t->find_state(tok.text)) {
        return *q;
      }
      return t->add_state(tok.text);
    };

    while (std::getline(in, raw)) {
      ++line;
      auto const tk = detail::tokenize(raw);
      if (tk.empty()) {
        continue;
      }
      if (!header) {
        if (tk.size() != 2 || tk[0].text != "cantor-transducer"
            || tk[1].text != "1") {
          detail::syntax_error(line, tk[0].column,
                               "expected header 'cantor-transducer 1'");
        }
        header = true;
        continue;
      }
      if (!alpha) {
        alpha = detail::parse_alphabet(tk, line, true);
        t.emplace(alpha->alphabet, alpha->core ? Mode::core : Mode::initial);
        continue;
      }
      if (tk[0].text == "states") {
        if (t->number_of_states() != 0) {
          detail::syntax_error(line, tk[0].column,
                               "'states' must precede transitions");
        }
        for (std::size_t i = 1; i < tk.size(); ++i) {
          if (t->find_state(tk[i].text)) {
            detail::syntax_error(line, tk[i].column,
                                 "duplicate state '" + tk[i].text + "'");
          }
          t->add_state(tk[i].text);
        }
        continue;
      }
      if (tk[0].text == "initial") {
        if (alpha->core) {
          detail::syntax_error(line, tk[0].column,
                               "core documents have no initial state");
        }
        if (tk.size() != 2 || initial) {
          detail::syntax_error(line, tk[0].column,
                               "expected a single 'initial <state>' line");
        }
        initial = {tk[1].text, line};
        continue;
      }
      // transition
      if (tk.size() < 6 || tk[2].text != "->" || tk[4].text != ":") {
        detail::syntax_error(
            line, tk[0].column,
            "expected '<state> <letter> -> <target> : <output>'");
      }
      Letter x;
      try {
        x = parse_letter(tk[1].text);
      } catch (Error const& e) {
        detail::syntax_error(line, tk[1].column, e.what());
      }
      if (!t->contains(x)) {
        detail::syntax_error(line, tk[1].column,
                             "letter " + tk[1].text + " not in the alphabet");
      }
      Word out = detail::parse_word_tokens(tk, 5, tk.size(), alpha->alphabet,
                                           line);
      StateId const q      = state_id(tk[0]);
      StateId const target = state_id(tk[3]);
      if (t->edge(q, x)) {
        detail::syntax_error(line, tk[1].column,
                             "duplicate transition for '" + tk[0].text
                                 + "' on " + tk[1].text);
      }
      t->set_edge(q, x, std::move(out), target);
      lines.emplace(std::make_pair(q, x), line);
    }
    if (!header) {
      detail::syntax_error(line + 1, 1, "empty document");
    }
    if (!alpha) {
      detail::syntax_error(line + 1, 1, "missing alphabet line");
    }
    if (!alpha->core) {
      if (!initial) {
        detail::syntax_error(line + 1, 1, "missing 'initial <state>' line");
      }
      auto q = t->find_state(initial->first);
      if (!q) {
        detail::syntax_error(initial->second, 9,
                             "unknown state '" + initial->first + "'");
      }
      t->set_initial(*q);
    }
    return {std::move(*t), std::move(lines)};
  }

  //! Parses and validates; violations are reported with source lines as
  //! Error(degenerate).
  inline Transducer parse_transducer(std::string_view text) {
    auto       parsed = parse_transducer_unchecked(text);
    auto const vs     = validate(parsed.transducer);
    if (vs.empty()) {
      return std::move(parsed.transducer);
    }
    std::string msg;
    for (auto const& v : vs) {
      std::string where;
      if (v.state && v.letter) {
        auto it = parsed.lines.find({*v.state, *v.letter});
        if (it != parsed.lines.end()) {
          where = "line " + std::to_string(it->second) + ": ";
        }
      }
      msg += (msg.empty() ? "" : "\n") + where
             + describe(parsed.transducer, v);
    }
    throw Error(ErrorCode::degenerate, msg);
  }

  inline std::string serialize(Transducer const& t) {
    for (StateId q = 0; q < t.number_of_states(); ++q) {
      auto const& name = t.name(q);
      if (name.empty() || detail::tokenize(name).size() != 1
          || detail::tokenize(name)[0].text != name || name == "->"
          || name == ":") {
        throw Error(ErrorCode::invalid_argument,
                    "state name cannot be written: '" + name + "'");
      }
    }
    auto const&        a = t.alphabet();
    std::ostringstream os;
    os << "cantor-transducer 1\n";
    os << "alphabet n=" << a.n << ' '
       << (t.is_core() ? std::string("core") : "r=" + std::to_string(a.r))
       << '\n';
    os << "states";
    for (StateId q = 0; q < t.number_of_states(); ++q) {
      os << ' ' << t.name(q);
    }
    os << '\n';
    if (!t.is_core()) {
      os << "initial " << t.name(t.initial()) << '\n';
    }
    for (StateId q = 0; q < t.number_of_states(); ++q) {
      for (Letter x : t.all_letters()) {
        if (auto const& e = t.edge(q, x)) {
          os << t.name(q) << ' ' << x << " -> " << t.name(e->target)
             << " : " << e->output << '\n';
        }
      }
    }
    return os.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Prefix-code maps
  //
  //   cantor-prefix-map 1      (optional header)
  //   alphabet n=2 r=2
  //   .0 0 -> .1
  ////////////////////////////////////////////////////////////////////////

  struct ParsedPrefixCodeMap {
    Alphabet      alphabet;
    PrefixCodeMap map;
  };

  inline ParsedPrefixCodeMap parse_prefix_code_map(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string        raw;
    std::size_t        line = 0;
    std::optional<Alphabet> alpha;
    PrefixCodeMap           m;
    bool                    seen_any = false;
    while (std::getline(in, raw)) {
      ++line;
      auto const tk = detail::tokenize(raw);
      if (tk.empty()) {
        continue;
      }
      if (!seen_any && tk.size() == 2 && tk[0].text == "cantor-prefix-map") {
        if (tk[1].text != "1") {
          detail::syntax_error(line, tk[1].column, "unknown format version");
        }
        seen_any = true;
        continue;
      }
      seen_any = true;
      if (!alpha) {
        alpha = detail::parse_alphabet(tk, line, false).alphabet;
        continue;
      }
      std::size_t arrow = tk.size();
      for (std::size_t i = 0; i < tk.size(); ++i) {
        if (tk[i].text == "->") {
          arrow = i;
          break;
        }
      }
      if (arrow == tk.size()) {
        detail::syntax_error(line, tk[0].column, "expected 'eta -> zeta'");
      }
      m.domain.words.push_back(
          detail::parse_word_tokens(tk, 0, arrow, *alpha, line));
      m.range.words.push_back(
          detail::parse_word_tokens(tk, arrow + 1, tk.size(), *alpha, line));
    }
    if (!alpha) {
      detail::syntax_error(line + 1, 1, "missing alphabet line");
    }
    if (auto d = validate_prefix_code_map(m, *alpha); !d) {
      throw Error(ErrorCode::invalid_argument, d.message);
    }
    return {*alpha, std::move(m)};
  }

  inline std::string serialize(PrefixCodeMap const& m, Alphabet const& a) {
    std::ostringstream os;
    os << "cantor-prefix-map 1\n";
    os << "alphabet n=" << a.n << " r=" << a.r << '\n';
    for (std::size_t i = 0; i < m.domain.words.size(); ++i) {
      os << m.domain.words[i] << " -> " << m.range.words[i] << '\n';
    }
    return os.str();
  }

}  // namespace cantor

#endif  // CANTOR_IO_HPP_
