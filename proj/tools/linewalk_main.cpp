// linewalk CLI: edge lists in, constructions and theorem reports out.
// Talks to the core exclusively through the C API in linewalk.h.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "linewalk.h"

namespace {

struct StringDeleter {
  void operator()(char* s) const { lw_string_free(s); }
};
using ApiString = std::unique_ptr<char, StringDeleter>;

struct DigraphDeleter {
  void operator()(lw_digraph* g) const { lw_digraph_free(g); }
};
using ApiDigraph = std::unique_ptr<lw_digraph, DigraphDeleter>;

[[noreturn]] void die(lw_status status) {
  std::cerr << "error: " << lw_status_name(status) << ": " << lw_last_error() << "\n";
  std::exit(1);
}

void check(lw_status status) {
  if (status != LW_OK) die(status);
}

std::string read_input(const std::string& path) {
  if (path.empty()) {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) {
    std::cerr << "error: cannot open '" << path << "'\n";
    std::exit(2);
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

ApiDigraph load_digraph(const std::string& path) {
  std::string text = read_input(path);
  lw_digraph* raw = nullptr;
  check(lw_digraph_parse(text.c_str(), &raw));
  return ApiDigraph(raw);
}

void print_owned(char* raw) {
  ApiString owned(raw);
  if (owned) std::cout << owned.get();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"line-digraph algebra and coined-walk toolkit"};
  app.require_subcommand(1);

  std::string in_path;
  std::string coin = "auto";
  std::uint64_t seed = 1;
  int random_count = 0;
  int steps = 10;
  int start_vertex = 0;
  int iterate_k = 1;
  long long max_size = 1000000;
  int max_pattern_n = 10;
  double tol = 1e-12;
  bool json = false;
  bool with_spectrum = false;
  int debruijn_d = 2;
  int debruijn_k = 1;
  int dihedral_n = 3;

  auto add_input = [&in_path](CLI::App* cmd) {
    cmd->add_option("--in", in_path, "read the edge list from a file instead of stdin");
  };

  CLI::App* cmd_line = app.add_subcommand("line", "line digraph with arc labels");
  add_input(cmd_line);

  CLI::App* cmd_iterate = app.add_subcommand("iterate", "k-fold iterated line digraph");
  cmd_iterate->add_option("k", iterate_k, "iteration count")->required();
  cmd_iterate->add_option("--max-size", max_size, "vertex limit for iterates");
  add_input(cmd_iterate);

  CLI::App* cmd_recognize = app.add_subcommand("recognize", "line-digraph recognition");
  cmd_recognize->add_option("--max-size", max_pattern_n, "pattern-scan vertex bound");
  cmd_recognize->add_flag("--json", json, "JSON output");
  add_input(cmd_recognize);

  CLI::App* cmd_factorize = app.add_subcommand("factorize", "1-factorization of a regular digraph");
  add_input(cmd_factorize);

  CLI::App* cmd_walk = app.add_subcommand("walk", "coined quantum walk distributions");
  cmd_walk->add_option("--coin", coin, "auto|hadamard|grover|fourier");
  cmd_walk->add_option("--steps", steps, "number of steps");
  cmd_walk->add_option("--start", start_vertex, "start vertex (basis state, first factor)");
  cmd_walk->add_option("--tol", tol, "support threshold");
  cmd_walk->add_flag("--json", json, "JSON output with the operator");
  add_input(cmd_walk);

  CLI::App* cmd_spectrum = app.add_subcommand("spectrum", "exact characteristic polynomial");
  add_input(cmd_spectrum);

  CLI::App* cmd_permanent = app.add_subcommand("permanent", "exact permanent of the adjacency matrix");
  add_input(cmd_permanent);

  CLI::App* cmd_verify = app.add_subcommand("verify", "run every applicable theorem check");
  cmd_verify->add_option("--random", random_count, "check N seeded random instances instead");
  cmd_verify->add_option("--seed", seed, "seed for --random");
  cmd_verify->add_option("--coin", coin, "coin for the walk check");
  cmd_verify->add_option("--tol", tol, "walk tolerances");
  cmd_verify->add_option("--max-size", max_pattern_n, "pattern-scan vertex bound");
  cmd_verify->add_flag("--json", json, "JSON output");
  add_input(cmd_verify);

  CLI::App* cmd_debruijn = app.add_subcommand("debruijn", "de Bruijn digraph generator");
  cmd_debruijn->add_option("d", debruijn_d, "alphabet size (>= 2)")->required();
  cmd_debruijn->add_option("k", debruijn_k, "word length (>= 1)")->required();
  cmd_debruijn->add_flag("--spectrum", with_spectrum, "append the charpoly line");
  cmd_debruijn->add_option("--max-size", max_size, "vertex limit");

  CLI::App* cmd_cayley = app.add_subcommand("cayley-demo", "bidirected cycle vs dihedral prism");
  cmd_cayley->add_option("n", dihedral_n, "odd n, 3..9")->required();
  cmd_cayley->add_flag("--json", json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (cmd_line->parsed()) {
    ApiDigraph g = load_digraph(in_path);
    char* text = nullptr;
    check(lw_line_digraph_format(g.get(), &text));
    print_owned(text);
    return 0;
  }

  if (cmd_iterate->parsed()) {
    ApiDigraph g = load_digraph(in_path);
    lw_digraph* raw = nullptr;
    check(lw_iterated_line_digraph(g.get(), iterate_k, max_size, &raw));
    ApiDigraph iterated(raw);
    char* text = nullptr;
    check(lw_digraph_format(iterated.get(), &text));
    print_owned(text);
    return 0;
  }

  if (cmd_recognize->parsed()) {
    ApiDigraph g = load_digraph(in_path);
    char* text = nullptr;
    int is_line = 0;
    check(lw_recognize_format(g.get(), max_pattern_n, json ? 1 : 0, &text, &is_line));
    print_owned(text);
    return 0;
  }

  if (cmd_factorize->parsed()) {
    ApiDigraph g = load_digraph(in_path);
    char* text = nullptr;
    check(lw_factorization_format(g.get(), &text));
    print_owned(text);
    return 0;
  }

  if (cmd_walk->parsed()) {
    ApiDigraph g = load_digraph(in_path);
    char* text = nullptr;
    check(lw_walk_format(g.get(), coin.c_str(), steps, start_vertex, tol, json ? 1 : 0, &text));
    print_owned(text);
    return 0;
  }

  if (cmd_spectrum->parsed()) {
    ApiDigraph g = load_digraph(in_path);
    char* text = nullptr;
    check(lw_char_poly(g.get(), &text));
    print_owned(text);
    return 0;
  }

  if (cmd_permanent->parsed()) {
    ApiDigraph g = load_digraph(in_path);
    char* text = nullptr;
    check(lw_permanent(g.get(), &text));
    print_owned(text);
    return 0;
  }

  if (cmd_verify->parsed()) {
    char* text = nullptr;
    int all_passed = 0;
    if (cmd_verify->count("--random") > 0) {
      check(lw_verify_random_format(random_count, seed, json ? 1 : 0, &text, &all_passed));
    } else {
      ApiDigraph g = load_digraph(in_path);
      check(lw_verify_format(g.get(), coin.c_str(), tol, max_pattern_n, json ? 1 : 0, &text,
                             &all_passed));
    }
    ApiString owned(text);
    std::cout << owned.get();
    return all_passed ? 0 : 1;
  }

  if (cmd_debruijn->parsed()) {
    lw_digraph* raw = nullptr;
    check(lw_debruijn(debruijn_d, debruijn_k, max_size, &raw));
    ApiDigraph g(raw);
    char* text = nullptr;
    check(lw_digraph_format(g.get(), &text));
    ApiString owned(text);
    std::cout << owned.get();
    if (with_spectrum) {
      char* line = nullptr;
      int ok = 0;
      check(lw_debruijn_charpoly(debruijn_d, debruijn_k, &line, &ok));
      ApiString owned_line(line);
      std::cout << owned_line.get();
      return ok ? 0 : 1;
    }
    return 0;
  }

  if (cmd_cayley->parsed()) {
    char* text = nullptr;
    int all_passed = 0;
    check(lw_cayley_demo_format(dihedral_n, json ? 1 : 0, &text, &all_passed));
    ApiString owned(text);
    std::cout << owned.get();
    return all_passed ? 0 : 1;
  }

  return 2;
}
