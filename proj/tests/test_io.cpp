#include <sstream>

#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace cantor;
using test::fixture;
using test::read_fixture;
using test::w;

namespace {

  // drops comments and blank lines and collapses runs of blanks
  std::string normalized(std::string const& text) {
    std::istringstream in(text);
    std::string        line, out;
    while (std::getline(in, line)) {
      line = line.substr(0, line.find('#'));
      std::istringstream words(line);
      std::string        word, joined;
      while (words >> word) {
        joined += (joined.empty() ? "" : " ") + word;
      }
      if (!joined.empty()) {
        out += joined + '\n';
      }
    }
    return out;
  }

  ErrorCode code_of(std::string const& text) {
    try {
      parse_transducer(text);
    } catch (Error const& e) {
      return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::invalid_argument;
  }

  std::string message_of(std::string const& text) {
    try {
      parse_transducer(text);
    } catch (Error const& e) {
      return e.what();
    }
    return "";
  }

}  // namespace

TEST_CASE("fixtures round trip", "[io]") {
  for (auto name : {"level2_c32", "unbalanced_n3", "unbalanced_c42",
                    "lipschitz_n2", "synchronous_n3", "order2_n2"}) {
    auto const text = read_fixture(name);
    auto const t    = parse_transducer(text);
    REQUIRE(serialize(t) == normalized(text));
    REQUIRE(parse_transducer(serialize(t)) == t);
  }
  auto const f5 = fixture("order2_n2");
  REQUIRE(f5.number_of_states() == 4);
  REQUIRE(f5.is_core());
  REQUIRE(is_valid(f5));
}

TEST_CASE("derived transducers round trip", "[io][property]") {
  Rng rng(47);
  for (int i = 0; i < 30; ++i) {
    auto const t = random_transducer(Alphabet(2 + i % 3, 1 + i % 3),
                                     1 + i % 5, 2, rng);
    REQUIRE(parse_transducer(serialize(t)) == t);
  }
  auto const inv = invert(fixture("level2_c32"));
  REQUIRE(parse_transducer(serialize(inv)) == inv);
}

TEST_CASE("missing transition is reported by state and letter", "[io]") {
  std::string const text = "cantor-transducer 1\n"
                           "alphabet n=2 core\n"
                           "a 0 -> a : 0\n";
  REQUIRE(code_of(text) == ErrorCode::degenerate);
  auto const msg = message_of(text);
  REQUIRE_THAT(msg, Catch::Matchers::ContainsSubstring("'a'"));
  REQUIRE_THAT(msg, Catch::Matchers::ContainsSubstring("1"));
  REQUIRE_THAT(msg, Catch::Matchers::ContainsSubstring("incomplete"));
}

TEST_CASE("violations carry source lines", "[io]") {
  std::string const text = "cantor-transducer 1\n"
                           "alphabet n=2 r=1\n"
                           "initial q0\n"
                           "q0 .0 -> p : .0\n"
                           "p 0 -> p : .0\n"
                           "p 1 -> p : 1\n";
  REQUIRE_THAT(message_of(text), Catch::Matchers::ContainsSubstring("line 5"));
}

TEST_CASE("syntax errors carry line and column", "[io]") {
  REQUIRE_THAT(message_of("cantor-transducer 2\n"),
               Catch::Matchers::ContainsSubstring("line 1, column 1"));
  REQUIRE_THAT(message_of("cantor-transducer 1\nalphabet n=2 core\n"
                          "a 0 => a : 0\n"),
               Catch::Matchers::ContainsSubstring("line 3, column 1"));
  REQUIRE_THAT(message_of("cantor-transducer 1\nalphabet n=2 core\n"
                          "a 7 -> a : 0\n"),
               Catch::Matchers::ContainsSubstring("line 3, column 3"));
  REQUIRE_THAT(message_of("cantor-transducer 1\nalphabet n=2 core\n"
                          "a 0 -> a : 0 x\n"),
               Catch::Matchers::ContainsSubstring("line 3"));
  REQUIRE(code_of("cantor-transducer 1\nalphabet n=2 r=1\n")
          == ErrorCode::parse);
  REQUIRE(code_of("") == ErrorCode::parse);
  REQUIRE(code_of("cantor-transducer 1\nalphabet n=1 core\n")
          == ErrorCode::parse);
  REQUIRE(code_of("cantor-transducer 1\nalphabet n=2 core\n"
                  "a 0 -> a : 0\na 0 -> a : 1\n")
          == ErrorCode::parse);
}

TEST_CASE("prefix-code map documents", "[io]") {
  std::string const text = "# a map of C_{2,2}\n"
                           "cantor-prefix-map 1\n"
                           "alphabet n=2 r=2\n"
                           ".0 0 -> .1\n"
                           ".0 1 -> .0 0\n"
                           ".1   -> .0 1\n";
  auto const parsed = parse_prefix_code_map(text);
  REQUIRE(parsed.alphabet == Alphabet(2, 2));
  REQUIRE(parsed.map.domain.words.size() == 3);
  REQUIRE(parsed.map.range.words[0] == w(".1"));
  REQUIRE(serialize(parsed.map, parsed.alphabet) == normalized(text));
  REQUIRE_THROWS_AS(parse_prefix_code_map("alphabet n=2 r=1\n.0 0 -> .0\n"),
                    Error);
  REQUIRE_THROWS_AS(parse_prefix_code_map("alphabet n=2 r=1\n.0 0 .0\n"),
                    Error);
}

TEST_CASE("random generators", "[io][random]") {
  Alphabet const a(3, 2);
  REQUIRE(random_transducer(a, 4, 2, 99) == random_transducer(a, 4, 2, 99));
  REQUIRE(is_valid(random_transducer(a, 4, 2, 99)));

  Rng rng(7);
  for (int i = 0; i < 10; ++i) {
    REQUIRE(is_in_Gnr(random_gnr_element(a, i % 5, rng)));
  }

  RandomOptions opts;
  opts.permutation_outputs = true;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto const t = random_transducer(a, 3, 1, seed, opts);
    REQUIRE(is_valid(t));
    for (StateId q = 0; q < t.number_of_states(); ++q) {
      for (Letter x : t.letters_at(q)) {
        REQUIRE(t.at(q, x).output.size() == 1);
      }
    }
  }

  REQUIRE_THROWS_AS(random_transducer(a, 0, 2, 1), Error);
  opts.permutation_outputs = false;
  opts.budget              = 0;
  try {
    random_transducer(a, 3, 2, 1, opts);
    FAIL("expected an error");
  } catch (Error const& e) {
    REQUIRE(e.code() == ErrorCode::rejection_budget);
  }
}
