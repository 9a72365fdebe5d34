// Alphabets, finite words, the prefix order, prefix codes and eventually
// periodic points of the Cantor spaces C_{n,r}.
//
// A point of C_{n,r} is an infinite word with exactly one leading root
// ("dotted") letter followed by digits 0..n-1.  Finite words are either
// digit words (possibly empty) or rooted words (one root letter, then
// digits).

#ifndef CANTOR_WORDS_HPP_
#define CANTOR_WORDS_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"

namespace cantor {

  struct Alphabet {
    int n = 2;  // digit count
    int r = 1;  // root letter count, at least 1

    Alphabet() = default;
    Alphabet(int digits, int roots) : n(digits), r(roots) {
      if (n < 2 || r < 1 || n > 65536 || r > 65536) {
        throw Error(ErrorCode::invalid_argument,
                    "alphabet requires n >= 2 and r >= 1, got n="
                        + std::to_string(n)
                        + " r=" + std::to_string(r));
      }
    }

    friend bool operator==(Alphabet const&, Alphabet const&) = default;
  };

  struct Letter {
    enum class Kind : std::uint8_t { root = 0, digit = 1 };

    Kind          kind  = Kind::digit;
    std::uint16_t value = 0;

    static constexpr Letter root(int k) noexcept {
      return Letter{Kind::root, static_cast<std::uint16_t>(k)};
    }
    static constexpr Letter digit(int d) noexcept {
      return Letter{Kind::digit, static_cast<std::uint16_t>(d)};
    }

    [[nodiscard]] constexpr bool is_root() const noexcept {
      return kind == Kind::root;
    }
    [[nodiscard]] constexpr bool is_digit() const noexcept {
      return kind == Kind::digit;
    }

    [[nodiscard]] bool in(Alphabet const& a) const noexcept {
      return is_root() ? value < a.r : value < a.n;
    }

    // Root(0) < ... < Root(r-1) < Digit(0) < ... < Digit(n-1)
    friend constexpr auto operator<=>(Letter const&, Letter const&) = default;
  };

  inline std::string to_string(Letter x) {
    return (x.is_root() ? "." : "") + std::to_string(x.value);
  }

  //! Finite word over the two-tier alphabet.  Ordering is lexicographic on
  //! letters; use shortlex_less for the shortlex order.
  class Word {
   public:
    using value_type     = Letter;
    using const_iterator = std::vector<Letter>::const_iterator;

    Word() = default;
    Word(std::initializer_list<Letter> letters) : _letters(letters) {}
    explicit Word(std::vector<Letter> letters) : _letters(std::move(letters)) {}

    template <typename It>
    Word(It first, It last) : _letters(first, last) {}

    static Word digits(std::initializer_list<int> ds) {
      Word w;
      for (int d : ds) {
        w.push_back(Letter::digit(d));
      }
      return w;
    }

    static Word rooted(int k, std::initializer_list<int> ds) {
      Word w{Letter::root(k)};
      for (int d : ds) {
        w.push_back(Letter::digit(d));
      }
      return w;
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return _letters.size();
    }
    [[nodiscard]] bool empty() const noexcept {
      return _letters.empty();
    }
    Letter operator[](std::size_t i) const {
      return _letters[i];
    }
    [[nodiscard]] Letter front() const {
      return _letters.front();
    }
    [[nodiscard]] Letter back() const {
      return _letters.back();
    }
    [[nodiscard]] const_iterator begin() const noexcept {
      return _letters.begin();
    }
    [[nodiscard]] const_iterator end() const noexcept {
      return _letters.end();
    }
    [[nodiscard]] std::vector<Letter> const& letters() const noexcept {
      return _letters;
    }

    void push_back(Letter x) {
      _letters.push_back(x);
    }
    void pop_back() {
      _letters.pop_back();
    }

    Word& operator+=(Word const& other) {
      _letters.insert(_letters.end(), other.begin(), other.end());
      return *this;
    }
    Word& operator+=(Letter x) {
      _letters.push_back(x);
      return *this;
    }
    friend Word operator+(Word lhs, Word const& rhs) {
      lhs += rhs;
      return lhs;
    }
    friend Word operator+(Word lhs, Letter x) {
      lhs += x;
      return lhs;
    }

    //! First `k` letters (the whole word when k >= size()).
    [[nodiscard]] Word prefix(std::size_t k) const {
      k = std::min(k, size());
      return Word(_letters.begin(), _letters.begin() + k);
    }
    //! Letters from position `k` on.
    [[nodiscard]] Word drop(std::size_t k) const {
      k = std::min(k, size());
      return Word(_letters.begin() + k, _letters.end());
    }

    //! Every letter is a digit (true for the empty word).
    [[nodiscard]] bool is_digit_word() const noexcept {
      return std::all_of(begin(), end(), [](Letter x) { return x.is_digit(); });
    }
    //! One leading root letter followed only by digits.
    [[nodiscard]] bool is_rooted() const noexcept {
      return !empty() && front().is_root()
             && std::all_of(begin() + 1, end(), [](Letter x) {
                  return x.is_digit();
                });
    }
    //! Empty, a digit word, or a rooted word.
    [[nodiscard]] bool well_formed() const noexcept {
      return is_digit_word() || is_rooted();
    }
    [[nodiscard]] bool in(Alphabet const& a) const noexcept {
      return std::all_of(begin(), end(), [&](Letter x) { return x.in(a); });
    }
    //! Number of digit letters; the depth of the cone of a rooted word.
    [[nodiscard]] std::size_t digit_count() const noexcept {
      return static_cast<std::size_t>(
          std::count_if(begin(), end(), [](Letter x) { return x.is_digit(); }));
    }

    friend bool operator==(Word const&, Word const&) = default;
    friend auto operator<=>(Word const& a, Word const& b) {
      return std::lexicographical_compare_three_way(
          a.begin(), a.end(), b.begin(), b.end());
    }

   private:
    std::vector<Letter> _letters;
  };

  inline bool shortlex_less(Word const& a, Word const& b) {
    if (a.size() != b.size()) {
      return a.size() < b.size();
    }
    return a < b;
  }

  ////////////////////////////////////////////////////////////////////////
  // Prefix order
  ////////////////////////////////////////////////////////////////////////

  enum class Relation {
    equal,
    prefix,        // first argument is a proper prefix of the second
    extension,     // second argument is a proper prefix of the first
    incomparable
  };

  inline std::size_t common_prefix_length(Word const& a, Word const& b) {
    auto const m = std::mismatch(a.begin(), a.end(), b.begin(), b.end());
    return static_cast<std::size_t>(m.first - a.begin());
  }

  inline Relation relate(Word const& eta, Word const& nu) {
    std::size_t const k = common_prefix_length(eta, nu);
    if (k == eta.size() && k == nu.size()) {
      return Relation::equal;
    } else if (k == eta.size()) {
      return Relation::prefix;
    } else if (k == nu.size()) {
      return Relation::extension;
    }
    return Relation::incomparable;
  }

  //! eta <= nu in the prefix order.
  inline bool is_prefix(Word const& eta, Word const& nu) {
    return eta.size() <= nu.size()
           && std::equal(eta.begin(), eta.end(), nu.begin());
  }

  inline bool comparable(Word const& a, Word const& b) {
    return relate(a, b) != Relation::incomparable;
  }

  //! The word tau with nu + tau == eta.  Throws unless nu <= eta.
  inline Word subtract(Word const& eta, Word const& nu) {
    if (!is_prefix(nu, eta)) {
      throw Error(ErrorCode::not_a_prefix, "cannot subtract a non-prefix");
    }
    return eta.drop(nu.size());
  }

  inline Word longest_common_prefix(Word const& a, Word const& b) {
    return a.prefix(common_prefix_length(a, b));
  }

  ////////////////////////////////////////////////////////////////////////
  // Text form: digits `0`..`n-1`, root letters `.0`..`.r-1`, empty word `-`
  ////////////////////////////////////////////////////////////////////////

  inline std::string to_string(Word const& w) {
    if (w.empty()) {
      return "-";
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != 0) {
        out += ' ';
      }
      out += to_string(w[i]);
    }
    return out;
  }

  inline std::ostream& operator<<(std::ostream& os, Word const& w) {
    return os << to_string(w);
  }

  inline std::ostream& operator<<(std::ostream& os, Letter x) {
    return os << to_string(x);
  }

  //! Parses one letter token; throws Error(parse) on malformed tokens.
  inline Letter parse_letter(std::string_view token) {
    bool const dotted = !token.empty() && token.front() == '.';
    std::string_view digits = dotted ? token.substr(1) : token;
    if (digits.empty() || digits.size() > 4
        || !std::all_of(digits.begin(), digits.end(), [](char c) {
             return c >= '0' && c <= '9';
           })) {
      throw Error(ErrorCode::parse,
                  "bad letter token '" + std::string(token) + "'");
    }
    int value = 0;
    for (char c : digits) {
      value = value * 10 + (c - '0');
    }
    return dotted ? Letter::root(value) : Letter::digit(value);
  }

  //! Parses whitespace-separated letter tokens; a lone `-` is the empty word.
  inline Word parse_word(std::string_view text) {
    std::istringstream       in{std::string(text)};
    std::vector<std::string> tokens;
    for (std::string t; in >> t;) {
      tokens.push_back(t);
    }
    if (tokens.size() == 1 && tokens.front() == "-") {
      return {};
    }
    Word w;
    for (auto const& t : tokens) {
      if (t == "-") {
        throw Error(ErrorCode::parse, "'-' must stand alone");
      }
      w.push_back(parse_letter(t));
    }
    return w;
  }

  inline Word parse_word(std::string_view text, Alphabet const& a) {
    Word w = parse_word(text);
    if (!w.in(a)) {
      throw Error(ErrorCode::parse,
                  "letter out of range in '" + std::string(text) + "'");
    }
    if (!w.well_formed()) {
      throw Error(ErrorCode::parse,
                  "root letter away from the front in '" + std::string(text)
                      + "'");
    }
    return w;
  }

  ////////////////////////////////////////////////////////////////////////
  // Prefix codes
  ////////////////////////////////////////////////////////////////////////

  struct PrefixCode {
    std::vector<Word> words;

    friend bool operator==(PrefixCode const&, PrefixCode const&) = default;
  };

  struct CodeDiagnostic {
    bool        ok = true;
    std::string message;

    explicit operator bool() const noexcept {
      return ok;
    }
  };

  //! Checks that `code` is a complete antichain of rooted words: pairwise
  //! incomparable and with Kraft sum exactly r.  The Kraft sum is evaluated
  //! exactly by carrying counts from the deepest level upwards, which is
  //! arithmetic over the common denominator n^depth without big integers.
  inline CodeDiagnostic validate_prefix_code(PrefixCode const& code,
                                             Alphabet const&   a) {
    auto fail = [](std::string msg) { return CodeDiagnostic{false, msg}; };
    if (code.words.empty()) {
      return fail("empty code");
    }
    std::size_t depth = 0;
    for (auto const& w : code.words) {
      if (!w.is_rooted() || !w.in(a)) {
        return fail("'" + to_string(w) + "' is not a rooted word over n="
                    + std::to_string(a.n) + " r=" + std::to_string(a.r));
      }
      depth = std::max(depth, w.digit_count());
    }
    std::vector<std::size_t> order(code.words.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      order[i] = i;
    }
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
      return code.words[i] < code.words[j];
    });
    // in lexicographic order, a prefix sits immediately before some extension
    for (std::size_t k = 0; k + 1 < order.size(); ++k) {
      auto const& u = code.words[order[k]];
      auto const& v = code.words[order[k + 1]];
      if (is_prefix(u, v)) {
        return fail("'" + to_string(u) + "' and '" + to_string(v)
                    + "' are comparable");
      }
    }
    std::vector<std::size_t> count(depth + 1, 0);
    for (auto const& w : code.words) {
      ++count[w.digit_count()];
    }
    std::size_t carry = 0;
    for (std::size_t d = depth; d > 0; --d) {
      carry += count[d];
      if (carry % static_cast<std::size_t>(a.n) != 0) {
        return fail("Kraft sum is not r (incomplete or overfull code)");
      }
      carry /= static_cast<std::size_t>(a.n);
    }
    carry += count[0];
    if (carry != static_cast<std::size_t>(a.r)) {
      return fail("Kraft sum is " + std::to_string(carry) + ", expected "
                  + std::to_string(a.r));
    }
    return {};
  }

  ////////////////////////////////////////////////////////////////////////
  // Eventually periodic points u v^omega
  ////////////////////////////////////////////////////////////////////////

  //! The point u v v v ...  Always stored in normal form: `period` is
  //! primitive and `preperiod` is as short as possible (its last letter
  //! differs from the last letter of the period).
  class EventuallyPeriodicPoint {
   public:
    EventuallyPeriodicPoint(Word preperiod, Word period)
        : _pre(std::move(preperiod)), _per(std::move(period)) {
      if (_per.empty() || !_per.is_digit_word()) {
        throw Error(ErrorCode::invalid_argument,
                    "period must be a nonempty digit word");
      }
      if (!_pre.well_formed()) {
        throw Error(ErrorCode::invalid_argument, "malformed preperiod");
      }
      normalize();
    }

    [[nodiscard]] Word const& preperiod() const noexcept {
      return _pre;
    }
    [[nodiscard]] Word const& period() const noexcept {
      return _per;
    }
    [[nodiscard]] bool rooted() const noexcept {
      return !_pre.empty() && _pre.front().is_root();
    }

    [[nodiscard]] Letter at(std::size_t i) const {
      if (i < _pre.size()) {
        return _pre[i];
      }
      return _per[(i - _pre.size()) % _per.size()];
    }

    //! The first `k` letters.
    [[nodiscard]] Word prefix(std::size_t k) const {
      Word w;
      for (std::size_t i = 0; i < k; ++i) {
        w.push_back(at(i));
      }
      return w;
    }

    friend bool operator==(EventuallyPeriodicPoint const&,
                           EventuallyPeriodicPoint const&) = default;

   private:
    void normalize() {
      std::size_t const len = _per.size();
      for (std::size_t p = 1; p < len; ++p) {
        if (len % p != 0) {
          continue;
        }
        bool power = true;
        for (std::size_t i = p; i < len && power; ++i) {
          power = _per[i] == _per[i - p];
        }
        if (power) {
          _per = _per.prefix(p);
          break;
        }
      }
      while (!_pre.empty() && _pre.back() == _per.back()) {
        Letter const x = _per.back();
        _pre.pop_back();
        _per = Word{x} + _per.prefix(_per.size() - 1);
      }
    }

    Word _pre;
    Word _per;
  };

  inline std::string to_string(EventuallyPeriodicPoint const& x) {
    return to_string(x.preperiod()) + " | " + to_string(x.period());
  }

  inline std::ostream& operator<<(std::ostream&                  os,
                                  EventuallyPeriodicPoint const& x) {
    return os << to_string(x);
  }

  //! Parses "u | v".
  inline EventuallyPeriodicPoint parse_point(std::string_view text,
                                             Alphabet const&  a) {
    auto const bar = text.find('|');
    if (bar == std::string_view::npos) {
      throw Error(ErrorCode::parse, "point must be written 'u | v'");
    }
    Word u = parse_word(text.substr(0, bar), a);
    Word v = parse_word(text.substr(bar + 1), a);
    try {
      return EventuallyPeriodicPoint(std::move(u), std::move(v));
    } catch (Error const& e) {
      throw Error(ErrorCode::parse, e.what());
    }
  }

}  // namespace cantor

template <>
struct std::hash<cantor::Word> {
  std::size_t operator()(cantor::Word const& w) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : w) {
      h ^= (static_cast<std::size_t>(x.kind) << 16) | x.value;
      h *= 1099511628211ULL;
    }
    return h;
  }
};

#endif  // CANTOR_WORDS_HPP_
