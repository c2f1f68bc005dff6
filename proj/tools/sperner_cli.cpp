#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sperner/capi.h"

namespace {

constexpr int exit_false = 1;
constexpr int exit_usage = 2;
constexpr int exit_limit = 3;

int report_failure(sperner_status status) {
  std::cerr << "sperner: " << sperner_status_name(status) << " error: " << sperner_last_error()
            << '\n';
  return status == SPERNER_ERR_LIMIT ? exit_limit : exit_usage;
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "sperner: cannot read " << path << '\n';
    return false;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  out = buffer.str();
  return true;
}

void emit(const std::string& text, const std::string& out_path) {
  std::string body = text;
  if (body.empty() || body.back() != '\n') body += '\n';
  if (out_path.empty()) {
    std::cout << body;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  out << body;
}

// Claims ownership of the rendered string and the warning, if any.
int parse_system_file(const std::string& path, int n_override, bool minimalize,
                      sperner_system** out) {
  std::string text;
  if (!read_file(path, text)) return exit_usage;
  char* warning = nullptr;
  sperner_status status =
      sperner_system_parse(text.c_str(), n_override, minimalize ? 1 : 0, out, &warning);
  if (status != SPERNER_OK) return report_failure(status);
  if (warning != nullptr) {
    std::cerr << "sperner: warning: " << warning << '\n';
    sperner_string_free(warning);
  }
  return 0;
}

struct FamilyArgs {
  std::string name;
  int param1 = 0;
  int param2 = -1;
  bool primed_labels = false;
  std::string out_path;
};

int run_family(const FamilyArgs& args) {
  sperner_system* s = nullptr;
  sperner_status status = sperner_family_build(args.name.c_str(), args.param1, args.param2, &s);
  if (status != SPERNER_OK) return report_failure(status);
  int n = 0;
  sperner_system_ground_size(s, &n);
  std::string format;
  if (args.primed_labels) {
    format = args.name == "U" && n % 2 == 0 ? "primed:" + std::to_string((n - 2) / 2) : "primed";
  } else {
    format = n <= 9 ? "short" : "json";
  }
  char* text = nullptr;
  status = sperner_system_render(s, format.c_str(), &text);
  sperner_system_free(s);
  if (status != SPERNER_OK) return report_failure(status);
  emit(text, args.out_path);
  sperner_string_free(text);
  return 0;
}

struct DeckArgs {
  std::string path;
  std::string mode = "sperner";
  int n_override = 0;
  bool minimalize = false;
};

int run_deck(const DeckArgs& args) {
  char* text = nullptr;
  sperner_status status = SPERNER_OK;
  if (args.mode == "function") {
    std::string body;
    if (!read_file(args.path, body)) return exit_usage;
    sperner_function* f = nullptr;
    status = sperner_function_parse(body.c_str(), &f);
    if (status != SPERNER_OK) return report_failure(status);
    status = sperner_function_deck_render(f, &text);
    sperner_function_free(f);
  } else {
    sperner_system* s = nullptr;
    int code = parse_system_file(args.path, args.n_override, args.minimalize, &s);
    if (code != 0) return code;
    status = sperner_deck_render(s, args.mode.c_str(), &text);
    sperner_system_free(s);
  }
  if (status != SPERNER_OK) return report_failure(status);
  std::cout << text;
  sperner_string_free(text);
  return 0;
}

struct CheckArgs {
  std::string path_a;
  std::string path_b;
  std::string relation;
  std::string mode = "sperner";
  int n_override = 0;
  bool minimalize = false;
};

int run_check(const CheckArgs& args) {
  sperner_system* a = nullptr;
  sperner_system* b = nullptr;
  int code = parse_system_file(args.path_a, args.n_override, args.minimalize, &a);
  if (code != 0) return code;
  code = parse_system_file(args.path_b, args.n_override, args.minimalize, &b);
  if (code != 0) {
    sperner_system_free(a);
    return code;
  }
  int na = 0;
  int nb = 0;
  sperner_system_ground_size(a, &na);
  sperner_system_ground_size(b, &nb);
  if (na != nb) {
    std::cerr << "sperner: ground sizes differ (" << na << " vs " << nb << ")\n";
    sperner_system_free(a);
    sperner_system_free(b);
    return exit_usage;
  }
  int verdict = 0;
  char* witness = nullptr;
  sperner_status status =
      sperner_check(a, b, args.relation.c_str(), args.mode.c_str(), &verdict, &witness);
  sperner_system_free(a);
  sperner_system_free(b);
  if (status != SPERNER_OK) return report_failure(status);
  if (witness != nullptr) {
    std::cout << witness << '\n';
    sperner_string_free(witness);
  }
  return verdict ? 0 : exit_false;
}

int run_appendix(int n) {
  char* text = nullptr;
  sperner_status status = sperner_appendix_render(n, &text);
  if (status != SPERNER_OK) return report_failure(status);
  std::cout << text;
  sperner_string_free(text);
  return 0;
}

int run_clones(const std::string& path) {
  std::string body;
  if (!read_file(path, body)) return exit_usage;
  sperner_function* f = nullptr;
  sperner_status status = sperner_function_parse(body.c_str(), &f);
  if (status != SPERNER_OK) return report_failure(status);
  char* text = nullptr;
  status = sperner_clone_report(f, &text);
  sperner_function_free(f);
  if (status != SPERNER_OK) return report_failure(status);
  std::cout << text;
  sperner_string_free(text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reconstruction toolkit for Sperner systems, hypergraphs, and finite functions"};
  app.require_subcommand(1);

  FamilyArgs family_args;
  CLI::App* family = app.add_subcommand("family", "Construct a built-in family");
  family->add_option("name", family_args.name, "Family name: G, F, M, U, or S")
      ->required()
      ->check(CLI::IsMember({"G", "F", "M", "U", "S"}));
  family->add_option("param1", family_args.param1, "m (ground size n for U)")->required();
  family->add_option("param2", family_args.param2, "Parity 1 or 2 (omit for F)");
  family->add_flag("--primed-labels", family_args.primed_labels,
                   "Render labels as 1..m, 1'..m', 0, 0'");
  family->add_option("--out", family_args.out_path, "Write to a file instead of stdout");

  DeckArgs deck_args;
  CLI::App* deck = app.add_subcommand("deck", "Print the deck of a system or function");
  deck->add_option("file", deck_args.path, "System (or function) file")->required();
  deck->add_option("--mode", deck_args.mode, "sperner, hypergraph, or function")
      ->check(CLI::IsMember({"sperner", "hypergraph", "function"}));
  deck->add_option("--n", deck_args.n_override, "Ground size for shorthand input");
  deck->add_flag("--minimalize", deck_args.minimalize, "Keep only inclusion-minimal blocks");

  CheckArgs check_args;
  CLI::App* check = app.add_subcommand("check", "Compare two systems");
  check->add_option("a", check_args.path_a, "First system file")->required();
  check->add_option("b", check_args.path_b, "Second system file")->required();
  check->add_option("--relation", check_args.relation, "iso, hypomorphic, or strong")
      ->required()
      ->check(CLI::IsMember({"iso", "hypomorphic", "strong"}));
  check->add_option("--mode", check_args.mode, "Deck mode: sperner or hypergraph")
      ->check(CLI::IsMember({"sperner", "hypergraph"}));
  check->add_option("--n", check_args.n_override, "Ground size for shorthand input");
  check->add_flag("--minimalize", check_args.minimalize, "Keep only inclusion-minimal blocks");

  int appendix_n = 0;
  CLI::App* appendix = app.add_subcommand("appendix", "Print the full deck table over [n]");
  appendix->add_option("n", appendix_n, "Ground size (2..5)")->required();

  std::string clones_path;
  CLI::App* clones = app.add_subcommand("clones", "Clone membership report for a 0/1 function");
  clones->add_option("file", clones_path, "Function file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  if (family->parsed()) return run_family(family_args);
  if (deck->parsed()) return run_deck(deck_args);
  if (check->parsed()) return run_check(check_args);
  if (appendix->parsed()) return run_appendix(appendix_n);
  return run_clones(clones_path);
}
