#include "sperner/io.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

#include "sperner/iso.hpp"

namespace sperner {

namespace {

using nlohmann::json;

std::string trim(const std::string& text) {
  auto begin = text.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  auto end = text.find_last_not_of(" \t\r\n");
  return text.substr(begin, end - begin + 1);
}

json parse_json(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw parse_error("malformed JSON");
  return doc;
}

void check_keys(const json& doc, std::initializer_list<const char*> keys) {
  if (!doc.is_object()) throw parse_error("expected a JSON object");
  for (const char* key : keys) {
    if (!doc.contains(key)) throw parse_error(std::string("missing key \"") + key + "\"");
  }
  if (doc.size() != keys.size()) throw parse_error("unexpected key in JSON object");
}

int get_int(const json& value, const char* what) {
  if (!value.is_number_integer()) throw parse_error(std::string(what) + " must be an integer");
  long long v = value.get<long long>();
  if (v < INT32_MIN || v > INT32_MAX) throw parse_error(std::string(what) + " out of range");
  return static_cast<int>(v);
}

SetSystem build_checked(int n, std::vector<Block> blocks) {
  std::vector<Block> sorted = blocks;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw parse_error("duplicate block");
  return SetSystem(n, std::move(blocks));
}

SetSystem parse_json_system(const json& doc, const ParseOptions& options) {
  check_keys(doc, {"n", "blocks"});
  int n = get_int(doc["n"], "\"n\"");
  if (n < 1 || n > max_ground_size) throw parse_error("\"n\" out of range");
  if (options.n_override != 0 && options.n_override != n)
    throw parse_error("ground size conflicts with the requested one");
  if (!doc["blocks"].is_array()) throw parse_error("\"blocks\" must be an array");
  std::vector<Block> blocks;
  for (const json& entry : doc["blocks"]) {
    if (!entry.is_array()) throw parse_error("each block must be an array");
    Block b = 0;
    for (const json& element : entry) {
      int e = get_int(element, "element");
      if (e < 1 || e > n) throw parse_error("element outside the ground set");
      Block bit = Block{1} << (e - 1);
      if (b & bit) throw parse_error("duplicate element in block");
      b |= bit;
    }
    blocks.push_back(b);
  }
  return build_checked(n, std::move(blocks));
}

SetSystem parse_short_system(const std::string& text, const ParseOptions& options) {
  if (text.empty()) throw parse_error("empty input");
  if (text.find('\n') != std::string::npos) throw parse_error("shorthand must be a single line");
  if (text == "-") {
    int n = options.n_override != 0 ? options.n_override : 1;
    return SetSystem(n, {});
  }
  std::vector<Block> blocks;
  int largest = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string token =
        trim(text.substr(start, comma == std::string::npos ? comma : comma - start));
    start = comma == std::string::npos ? text.size() + 1 : comma + 1;
    if (token.empty()) throw parse_error("empty block token");
    if (token == "0") {
      blocks.push_back(0);
      continue;
    }
    Block b = 0;
    for (char c : token) {
      if (c < '1' || c > '9') throw parse_error("shorthand elements are the digits 1-9");
      int e = c - '0';
      Block bit = Block{1} << (e - 1);
      if (b & bit) throw parse_error("duplicate element in block");
      b |= bit;
      largest = std::max(largest, e);
    }
    blocks.push_back(b);
  }
  int n = options.n_override != 0 ? options.n_override : std::max(largest, 1);
  if (largest > n) throw parse_error("element outside the requested ground set");
  return build_checked(n, std::move(blocks));
}

std::vector<Block> display_blocks(const SetSystem& s) {
  std::vector<Block> blocks = s.blocks();
  std::sort(blocks.begin(), blocks.end(), block_display_less);
  return blocks;
}

std::string join_rendered(const SetSystem& s, char separator,
                          const std::function<std::string(int)>& label) {
  if (s.block_count() == 0) return "-";
  std::string out;
  for (Block b : display_blocks(s)) {
    if (!out.empty()) out += separator;
    if (b == 0) {
      out += '0';
      continue;
    }
    bool first = true;
    for (int e : block_elements(b)) {
      if (!first && separator != ',') out += ',';
      out += label(e);
      first = false;
    }
  }
  return out;
}

std::string function_json(int domain, int codomain, int arity,
                          const std::vector<std::uint8_t>& table) {
  std::string out = "{\"domain\":" + std::to_string(domain) +
                    ",\"codomain\":" + std::to_string(codomain) +
                    ",\"arity\":" + std::to_string(arity) + ",\"table\":[";
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(table[i]);
  }
  return out + "]}";
}

std::string yes_no(bool v) { return v ? "yes" : "no"; }

}  // namespace

ParseResult parse_system(const std::string& text, const ParseOptions& options) {
  if (options.n_override != 0 && (options.n_override < 1 || options.n_override > max_ground_size))
    throw std::invalid_argument("requested ground size out of range");
  std::string body = trim(text);
  SetSystem s = body.starts_with('{') ? parse_json_system(parse_json(body), options)
                                      : parse_short_system(body, options);
  ParseResult result{std::move(s), {}};
  if (!is_antichain(result.system)) {
    if (options.minimalize) {
      result.system = minimalize(result.system);
      result.warnings.push_back("input is not an antichain; kept only the minimal blocks");
    } else {
      result.warnings.push_back("input is not an antichain");
    }
  }
  return result;
}

std::string render_short(const SetSystem& s) {
  if (s.ground_size() > 9) throw std::invalid_argument("shorthand needs a ground set within 1-9");
  return join_rendered(s, ',', [](int e) { return std::to_string(e); });
}

std::string render_blocks(const SetSystem& s) {
  return join_rendered(s, ';', [](int e) { return std::to_string(e); });
}

std::string render_json(const SetSystem& s) {
  std::string out = "{\"n\":" + std::to_string(s.ground_size()) + ",\"blocks\":[";
  bool first_block = true;
  for (Block b : display_blocks(s)) {
    if (!first_block) out += ',';
    first_block = false;
    out += '[';
    bool first = true;
    for (int e : block_elements(b)) {
      if (!first) out += ',';
      first = false;
      out += std::to_string(e);
    }
    out += ']';
  }
  return out + "]}";
}

std::string render_primed(const SetSystem& s, int m) {
  int n = s.ground_size();
  if (m < 1 || n > 2 * m + 2) throw std::invalid_argument("ground set does not fit the layout");
  return join_rendered(s, ';', [m](int e) -> std::string {
    if (e <= m) return std::to_string(e);
    if (e <= 2 * m) return std::to_string(e - m) + "'";
    return e == 2 * m + 1 ? "0" : "0'";
  });
}

std::string render_primed(const SetSystem& s) {
  int n = s.ground_size();
  return render_primed(s, n % 2 == 0 ? n / 2 : (n - 1) / 2);
}

FiniteFunction parse_function(const std::string& text) {
  json doc = parse_json(trim(text));
  check_keys(doc, {"domain", "codomain", "arity", "table"});
  int domain = get_int(doc["domain"], "\"domain\"");
  int codomain = get_int(doc["codomain"], "\"codomain\"");
  int arity = get_int(doc["arity"], "\"arity\"");
  if (domain < 1 || codomain < 1 || codomain > 256 || arity < 0)
    throw parse_error("bad function shape");
  if (!doc["table"].is_array()) throw parse_error("\"table\" must be an array");
  std::vector<std::uint8_t> table;
  for (const json& value : doc["table"]) {
    int v = get_int(value, "table value");
    if (v < 0 || v >= codomain) throw parse_error("table value outside codomain");
    table.push_back(static_cast<std::uint8_t>(v));
  }
  try {
    return FiniteFunction(domain, codomain, arity, std::move(table));
  } catch (const std::invalid_argument& e) {
    throw parse_error(e.what());
  }
}

std::string render_function_json(const FiniteFunction& f) {
  return function_json(f.domain(), f.codomain(), f.arity(), f.table());
}

std::string render_deck(const Deck& d) {
  std::vector<const CanonicalForm*> cards;
  for (const auto& [card, count] : d.items()) cards.push_back(&card);
  std::sort(cards.begin(), cards.end(),
            [](const CanonicalForm* a, const CanonicalForm* b) { return display_less(*a, *b); });
  std::string out;
  for (const CanonicalForm* card : cards) {
    SetSystem s = to_system(*card);
    out += s.ground_size() <= 9 ? render_short(s) : render_blocks(s);
    out += " ×" + std::to_string(d.count(*card)) + "\n";
  }
  return out;
}

std::string render_function_deck(const FunctionDeck& d) {
  std::string out;
  for (const auto& [key, count] : d.items()) {
    out += function_json(key.domain, key.codomain, key.arity, key.table);
    out += " ×" + std::to_string(count) + "\n";
  }
  return out;
}

std::string render_appendix(const DeckTable& table) {
  std::vector<std::string> headers;
  for (const CanonicalForm& c : table.columns) headers.push_back(render_short(to_system(c)));
  std::vector<std::string> labels;
  std::size_t label_width = 0;
  for (const DeckTableRow& row : table.rows) {
    std::string label = render_short(to_system(row.system));
    if (row.nonreconstructible) label += " *";
    label_width = std::max(label_width, label.size());
    labels.push_back(std::move(label));
  }
  std::vector<std::size_t> widths;
  for (std::size_t k = 0; k < headers.size(); ++k) {
    std::size_t w = headers[k].size();
    for (const DeckTableRow& row : table.rows) {
      if (row.cells[k] != 0) w = std::max(w, std::to_string(row.cells[k]).size());
    }
    widths.push_back(w);
  }
  std::ostringstream out;
  out << std::string(label_width, ' ');
  for (std::size_t k = 0; k < headers.size(); ++k)
    out << "  " << std::string(widths[k] - headers[k].size(), ' ') << headers[k];
  out << '\n';
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    out << labels[r] << std::string(label_width - labels[r].size(), ' ');
    for (std::size_t k = 0; k < headers.size(); ++k) {
      std::string cell =
          table.rows[r].cells[k] == 0 ? "" : std::to_string(table.rows[r].cells[k]);
      out << "  " << std::string(widths[k] - cell.size(), ' ') << cell;
    }
    out << '\n';
  }
  return out.str();
}

std::string render_appendix(int n) { return render_appendix(deck_table(n)); }

std::string render_clone_report(const FiniteFunction& f) {
  if (f.domain() != 2 || f.codomain() != 2)
    throw std::invalid_argument("clone report needs a function over {0,1}");
  bool t0 = preserves_value(f, 0);
  bool t1 = preserves_value(f, 1);
  bool tc = t0 && t1;
  bool m = is_monotone(f);
  bool mc = m && tc;
  bool s = is_self_dual(f);
  bool uinf = is_separating(f, 1, rank_infinity);
  bool winf = is_separating(f, 0, rank_infinity);
  std::ostringstream out;
  out << "T0: " << yes_no(t0) << '\n';
  out << "T1: " << yes_no(t1) << '\n';
  out << "Tc: " << yes_no(tc) << '\n';
  out << "M: " << yes_no(m) << '\n';
  out << "Mc: " << yes_no(mc) << '\n';
  out << "S: " << yes_no(s) << '\n';
  out << "SM: " << yes_no(s && m) << '\n';
  out << "L: " << yes_no(is_linear(f)) << '\n';
  out << "Lambda: " << yes_no(in_lambda(f)) << '\n';
  out << "V: " << yes_no(in_vee(f)) << '\n';
  out << "Uinf: " << yes_no(uinf) << '\n';
  out << "Winf: " << yes_no(winf) << '\n';
  out << "McUinf: " << yes_no(mc && uinf) << '\n';
  out << "McWinf: " << yes_no(mc && winf) << '\n';
  return out.str();
}

std::string render_witness(const Permutation& p) {
  std::string out;
  for (int image : p.images()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(image);
  }
  return out;
}

}  // namespace sperner
