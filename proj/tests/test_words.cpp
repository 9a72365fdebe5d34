#include <catch_amalgamated.hpp>

#include <random>

#include "cantor/words.hpp"
#include "cantor/random.hpp"

using namespace cantor;

namespace {
  Word w(char const* text) {
    return parse_word(text);
  }
}  // namespace

TEST_CASE("alphabet bounds", "[words]") {
  REQUIRE_NOTHROW(Alphabet(2, 1));
  REQUIRE_NOTHROW(Alphabet(5, 4));
  REQUIRE_NOTHROW(Alphabet(2, 2));
  REQUIRE_THROWS_AS(Alphabet(1, 1), Error);
  REQUIRE_THROWS_AS(Alphabet(3, 0), Error);
}

TEST_CASE("letter order puts roots before digits", "[words]") {
  REQUIRE(Letter::root(0) < Letter::root(1));
  REQUIRE(Letter::root(3) < Letter::digit(0));
  REQUIRE(Letter::digit(0) < Letter::digit(1));
  REQUIRE(shortlex_less(w("1"), w("0 0")));
  REQUIRE(shortlex_less(w(".1"), w("0")));
}

TEST_CASE("relate", "[words]") {
  REQUIRE(relate(w(".0 1"), w(".0 1 0")) == Relation::prefix);
  REQUIRE(relate(w(".0 1 0"), w(".0 1")) == Relation::extension);
  REQUIRE(relate(w(".0 1"), w(".1 0")) == Relation::incomparable);
  REQUIRE(relate(w("-"), w(".1 0 2")) == Relation::prefix);
  REQUIRE(relate(w("-"), w("-")) == Relation::equal);
  REQUIRE(relate(w("0 1"), w("0 1")) == Relation::equal);
}

TEST_CASE("subtract", "[words]") {
  REQUIRE(subtract(w(".0 1 2"), w(".0 1")) == w("2"));
  REQUIRE(subtract(w(".0 1 2"), w(".0 1 2")).empty());
  REQUIRE(subtract(w(".1 0 0"), w(".1")) == w("0 0"));
  REQUIRE_THROWS_AS(subtract(w(".1 0"), w(".0")), Error);
  try {
    subtract(w("0"), w("0 0"));
    FAIL("expected an error");
  } catch (Error const& e) {
    REQUIRE(e.code() == ErrorCode::not_a_prefix);
  }
}

TEST_CASE("concatenation laws on random words", "[words][property]") {
  Rng                                rng(11);
  std::uniform_int_distribution<int> d(0, 2), len(0, 5);
  auto random_word = [&] {
    Word x;
    for (int i = len(rng); i > 0; --i) {
      x.push_back(Letter::digit(d(rng)));
    }
    return x;
  };
  for (int trial = 0; trial < 500; ++trial) {
    Word const nu  = Word{Letter::root(d(rng) % 2)} + random_word();
    Word const tau = random_word();
    REQUIRE(subtract(nu + tau, nu) == tau);
    REQUIRE(is_prefix(nu, nu + tau));
    auto const r1 = relate(nu, tau);
    auto const r2 = relate(tau, nu);
    if (r1 == Relation::prefix) {
      REQUIRE(r2 == Relation::extension);
    }
    if (r1 == Relation::equal) {
      REQUIRE(r2 == Relation::equal);
    }
    if (r1 == Relation::incomparable) {
      REQUIRE(r2 == Relation::incomparable);
    }
  }
}

TEST_CASE("word text form", "[words]") {
  REQUIRE(to_string(w("-")) == "-");
  REQUIRE(to_string(w(".1   0 2")) == ".1 0 2");
  REQUIRE(w("").empty());
  Alphabet const a(3, 2);
  REQUIRE_THROWS_AS(parse_word(".2 0", a), Error);
  REQUIRE_THROWS_AS(parse_word("3", a), Error);
  REQUIRE_THROWS_AS(parse_word("0 .1", a), Error);
  REQUIRE_THROWS_AS(parse_word("- 0"), Error);
  REQUIRE_THROWS_AS(parse_word("x"), Error);
  REQUIRE(parse_word(".1 2", a) == Word::rooted(1, {2}));
}

TEST_CASE("prefix code validation", "[words]") {
  Alphabet const a(2, 2);
  REQUIRE(validate_prefix_code({{w(".0"), w(".1 0"), w(".1 1")}}, a));
  auto const missing = validate_prefix_code({{w(".0 0"), w(".0 1")}}, a);
  REQUIRE_FALSE(missing);
  REQUIRE(missing.message.find("Kraft") != std::string::npos);
  auto const comparable
      = validate_prefix_code({{w(".0"), w(".0 1"), w(".1")}}, a);
  REQUIRE_FALSE(comparable);
  REQUIRE(comparable.message.find("comparable") != std::string::npos);
  REQUIRE_FALSE(validate_prefix_code({{w("0"), w(".1")}}, a));
  REQUIRE_FALSE(validate_prefix_code({}, a));
  // overfull: duplicate word
  REQUIRE_FALSE(validate_prefix_code({{w(".0"), w(".0"), w(".1")}}, a));
}

TEST_CASE("random complete codes validate and lose completeness when cut",
          "[words][property]") {
  Rng rng(5);
  for (int n = 2; n <= 4; ++n) {
    for (int r = 1; r < n; ++r) {
      Alphabet const a(n, r);
      for (std::size_t splits = 0; splits < 12; ++splits) {
        PrefixCode const code = random_prefix_code(a, splits, rng);
        REQUIRE(code.words.size()
                == static_cast<std::size_t>(r) + splits * (n - 1));
        REQUIRE(validate_prefix_code(code, a));
        for (std::size_t i = 0; i < code.words.size(); ++i) {
          PrefixCode cut = code;
          cut.words.erase(cut.words.begin() + static_cast<long>(i));
          REQUIRE_FALSE(validate_prefix_code(cut, a));
        }
      }
    }
  }
}

TEST_CASE("eventually periodic points are normalized", "[words]") {
  EventuallyPeriodicPoint const x(w(".0 1 0 1"), w("0 1 0 1"));
  REQUIRE(x.preperiod() == w(".0"));
  REQUIRE(x.period() == w("1 0"));
  EventuallyPeriodicPoint const y(w(".0 0 0"), w("0"));
  REQUIRE(y.preperiod() == w(".0"));
  REQUIRE(y.period() == w("0"));
  REQUIRE(EventuallyPeriodicPoint(w(".1 2"), w("1 2"))
          == EventuallyPeriodicPoint(w(".1"), w("2 1")));
  REQUIRE(x.prefix(6) == w(".0 1 0 1 0 1"));
  REQUIRE_THROWS_AS(EventuallyPeriodicPoint(w(".0"), w("-")), Error);
  REQUIRE_THROWS_AS(EventuallyPeriodicPoint(w(".0"), w(".0 1")), Error);
}

TEST_CASE("normal form is invariant under unrolling", "[words][property]") {
  Rng                                rng(3);
  std::uniform_int_distribution<int> d(0, 2), len(1, 4);
  for (int trial = 0; trial < 300; ++trial) {
    Word u{Letter::root(0)}, v;
    for (int i = len(rng) - 1; i > 0; --i) {
      u.push_back(Letter::digit(d(rng)));
    }
    for (int i = len(rng); i > 0; --i) {
      v.push_back(Letter::digit(d(rng)));
    }
    EventuallyPeriodicPoint const x(u, v);
    // same point, one period unrolled and the period doubled
    EventuallyPeriodicPoint const y(u + v, v + v);
    REQUIRE(x == y);
    REQUIRE(x.prefix(30) == EventuallyPeriodicPoint(u, v).prefix(30));
    REQUIRE(x.prefix(30) == (u + v + v + v + v + v + v + v + v + v + v + v
                             + v + v + v + v + v + v + v + v + v + v + v + v
                             + v + v + v + v + v + v + v)
                                .prefix(30));
  }
}

TEST_CASE("point text form", "[words]") {
  Alphabet const a(3, 2);
  auto const     x = parse_point(".0 1 | 2", a);
  REQUIRE(to_string(x) == ".0 1 | 2");
  REQUIRE_THROWS_AS(parse_point(".0 1 2", a), Error);
  REQUIRE_THROWS_AS(parse_point(".0 | -", a), Error);
}
