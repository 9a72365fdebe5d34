// Command-line front end.  Exit status: 0 success or true, 1 false, 2 error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cantor/cantor.hpp"

using namespace cantor;

namespace {

  constexpr int exit_true  = 0;
  constexpr int exit_false = 1;
  constexpr int exit_error = 2;

  std::string read_input(std::string const& path) {
    if (path == "-") {
      return {std::istreambuf_iterator<char>(std::cin), {}};
    }
    std::ifstream in(path);
    if (!in) {
      throw Error(ErrorCode::invalid_argument, "cannot open " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  Transducer load(std::string const& path) {
    try {
      return parse_transducer(read_input(path));
    } catch (Error const& e) {
      throw Error(e.code(), path + ": " + e.what());
    }
  }

  std::string join(std::vector<std::string> const& tokens) {
    std::string out;
    for (auto const& t : tokens) {
      out += (out.empty() ? "" : " ") + t;
    }
    return out;
  }

  char const* yn(bool b) {
    return b ? "y" : "n";
  }

  StateId start_state(Transducer const& t, std::string const& name) {
    if (name.empty()) {
      if (t.is_core()) {
        throw Error(ErrorCode::invalid_argument,
                    "a core needs --state to start from");
      }
      return t.initial();
    }
    auto q = t.find_state(name);
    if (!q) {
      throw Error(ErrorCode::invalid_argument, "no state '" + name + "'");
    }
    return *q;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Transducers for homeomorphisms of Cantor spaces.\n"
      "Maps act on the right and compose left to right: 'compose A B' is "
      "the map x -> (x A) B."};
  app.require_subcommand(1);

  std::string file, file2, state;
  std::uint64_t seed = 0;
  std::size_t cap = 64, depth = 0;
  std::vector<std::string> tokens;
  int code = exit_true;

  auto* validate_cmd = app.add_subcommand("validate", "check a document");
  validate_cmd->add_option("file", file, "document, or - for stdin")
      ->required();
  validate_cmd->callback([&] {
    auto const parsed = parse_transducer_unchecked(read_input(file));
    auto const vs     = validate(parsed.transducer);
    for (auto const& v : vs) {
      std::cout << describe(parsed.transducer, v) << '\n';
    }
    if (vs.empty()) {
      std::cout << "ok\n";
    }
    code = vs.empty() ? exit_true : exit_false;
  });

  auto* minimize_cmd
      = app.add_subcommand("minimize", "print the minimal transducer");
  minimize_cmd->add_option("file", file)->required();
  minimize_cmd->callback(
      [&] { std::cout << serialize(renumber(minimize(load(file)))); });

  auto* canon_cmd = app.add_subcommand(
      "canon", "print the canonical form of the minimal transducer");
  canon_cmd->add_option("file", file)->required();
  canon_cmd->callback(
      [&] { std::cout << canonical_form(minimize(load(file))).text; });

  auto* eval_cmd = app.add_subcommand(
      "eval", "image of an eventually periodic point given as 'u | v'");
  eval_cmd->add_option("file", file)->required();
  eval_cmd->add_option("point", tokens, "letters of u, then |, then v")
      ->required();
  eval_cmd->add_option("--state", state, "start state (required for cores)");
  eval_cmd->add_option("--depth", depth,
                       "print only the first N letters of the image");
  eval_cmd->callback([&] {
    auto const t = load(file);
    auto const x = parse_point(join(tokens), t.alphabet());
    auto const y = eval_point(t, start_state(t, state), x);
    if (depth > 0) {
      std::cout << y.prefix(depth) << '\n';
    } else {
      std::cout << y << '\n';
    }
  });

  auto* compose_cmd
      = app.add_subcommand("compose", "the map x -> (x A) B, minimized");
  compose_cmd->add_option("a", file)->required();
  compose_cmd->add_option("b", file2)->required();
  compose_cmd->callback(
      [&] { std::cout << serialize(compose(load(file), load(file2))); });

  auto* invert_cmd = app.add_subcommand("invert", "the inverse map");
  invert_cmd->add_option("file", file)->required();
  invert_cmd->callback([&] { std::cout << serialize(invert(load(file))); });

  auto* sync_cmd = app.add_subcommand("sync", "synchronizing level");
  sync_cmd->add_option("file", file)->required();
  sync_cmd->callback([&] {
    auto const t = load(file);
    auto const s = sync_level(t);
    if (s.synchronizing()) {
      std::cout << "sync-level:" << *s.level << '\n';
      if (!synchronized_states(t).empty()) {
        auto const core = core_of(t);
        std::cout << "core:";
        for (StateId q = 0; q < core.number_of_states(); ++q) {
          std::cout << ' ' << core.name(q);
        }
        std::cout << '\n';
      }
      code = exit_true;
    } else {
      std::cout << "not synchronizing: (" << t.name(s.witness->first) << ", "
                << t.name(s.witness->second) << ") cycles on " << s.cycle
                << '\n';
      code = exit_false;
    }
  });

  auto* core_cmd = app.add_subcommand("core", "core of the minimal transducer");
  core_cmd->add_option("file", file)->required();
  core_cmd->callback(
      [&] { std::cout << serialize(reduced_core(load(file))); });

  auto* member_cmd = app.add_subcommand("member", "membership in G_{n,r}");
  member_cmd->add_option("file", file)->required();
  member_cmd->callback([&] {
    bool const in = is_in_Gnr(load(file));
    std::cout << (in ? "yes" : "no") << '\n';
    code = in ? exit_true : exit_false;
  });

  auto* classify_cmd = app.add_subcommand(
      "classify", "subgroup flags of a bi-synchronizing transducer");
  classify_cmd->add_option("file", file)->required();
  classify_cmd->callback([&] {
    auto const f = classify_subgroup(load(file));
    std::cout << "G:" << yn(f.in_Gnr) << " P:" << yn(f.in_Pn)
              << " L:" << yn(f.in_Ln) << " sync-level:" << f.sync_level
              << " core-states:" << f.core_states << '\n';
  });

  auto* order_cmd = app.add_subcommand("order", "order of the outer class");
  order_cmd->add_option("file", file)->required();
  order_cmd->add_option("--cap", cap, "largest power to try")
      ->capture_default_str();
  order_cmd->callback([&] {
    auto const o = order_in_On(load(file), cap);
    switch (o.kind) {
      case OrderResult::Kind::finite:
        std::cout << "finite " << o.order << '\n';
        break;
      case OrderResult::Kind::infinite:
        std::cout << "infinite\n";
        break;
      case OrderResult::Kind::unknown:
        std::cout << "unknown (no trivial power up to " << o.order << ")\n";
        break;
    }
  });

  auto* outer_cmd
      = app.add_subcommand("outer-eq", "equal outer classes (equal cores)");
  outer_cmd->add_option("a", file)->required();
  outer_cmd->add_option("b", file2)->required();
  outer_cmd->callback([&] {
    bool const eq = outer_class_equal(load(file), load(file2));
    std::cout << (eq ? "equal" : "different") << '\n';
    code = eq ? exit_true : exit_false;
  });

  auto* map_cmd = app.add_subcommand(
      "make-prefix-map", "transducer of a prefix-code map document");
  map_cmd->add_option("file", file)->required();
  map_cmd->callback([&] {
    auto const m = parse_prefix_code_map(read_input(file));
    std::cout << serialize(from_prefix_code_map(m.map, m.alphabet));
  });

  int n = 2, r = 1;
  std::vector<int> images;
  auto* twist_cmd = app.add_subcommand(
      "make-twist", "transducer applying a digit permutation everywhere");
  twist_cmd->add_option("images", images, "images of 0, 1, ..., n-1")
      ->required();
  twist_cmd->add_option("-r", r, "number of roots")->capture_default_str();
  twist_cmd->callback([&] {
    Permutation const sigma(images);
    std::cout << serialize(
        twist_transducer(sigma, Alphabet(sigma.size(), r)));
  });

  std::size_t states = 3, max_out = 2, splits = 3;
  bool gnr = false, permutation = false;
  auto* random_cmd = app.add_subcommand("random", "seeded random transducer");
  random_cmd->add_option("-n", n, "digits")->capture_default_str();
  random_cmd->add_option("-r", r, "roots")->capture_default_str();
  random_cmd->add_option("--states", states)->capture_default_str();
  random_cmd->add_option("--max-out", max_out)->capture_default_str();
  random_cmd->add_option("--seed", seed)->capture_default_str();
  random_cmd->add_flag("--gnr", gnr, "an element of G_{n,r} instead");
  random_cmd->add_option("--splits", splits, "prefix-code size for --gnr")
      ->capture_default_str();
  random_cmd->add_flag("--permutation", permutation,
                       "synchronous, every state permuting letters");
  random_cmd->callback([&] {
    Alphabet const a(n, r);
    if (gnr) {
      Rng rng(seed);
      std::cout << serialize(random_gnr_element(a, splits, rng));
      return;
    }
    RandomOptions opts;
    opts.permutation_outputs = permutation;
    std::cout << serialize(random_transducer(a, states, max_out, seed, opts));
  });

  try {
    app.parse(argc, argv);
  } catch (CLI::Success const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return exit_error;
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_error;
  }
  return code;
}
