#include "sperner/capi.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "sperner/core.hpp"
#include "sperner/families.hpp"
#include "sperner/functions.hpp"
#include "sperner/io.hpp"
#include "sperner/iso.hpp"
#include "sperner/minors.hpp"

struct sperner_system {
  sperner::SetSystem value;
};

struct sperner_function {
  sperner::FiniteFunction value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
sperner_status run(F&& body) {
  try {
    return body();
  } catch (const sperner::parse_error& e) {
    g_last_error = e.what();
    return SPERNER_ERR_PARSE;
  } catch (const sperner::limit_error& e) {
    g_last_error = e.what();
    return SPERNER_ERR_LIMIT;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return SPERNER_ERR_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SPERNER_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return SPERNER_ERR_INTERNAL;
  }
}

sperner_status fail_argument(const char* message) {
  g_last_error = message;
  return SPERNER_ERR_ARGUMENT;
}

sperner::DeckKind parse_deck_kind(const char* mode) {
  if (mode == nullptr || std::strcmp(mode, "sperner") == 0) return sperner::DeckKind::identification;
  if (std::strcmp(mode, "hypergraph") == 0) return sperner::DeckKind::deletion;
  throw std::invalid_argument("unknown deck mode");
}

}  // namespace

extern "C" {

const char* sperner_status_name(sperner_status status) {
  switch (status) {
    case SPERNER_OK: return "ok";
    case SPERNER_ERR_ARGUMENT: return "argument";
    case SPERNER_ERR_PARSE: return "parse";
    case SPERNER_ERR_LIMIT: return "limit";
    case SPERNER_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* sperner_last_error(void) { return g_last_error.c_str(); }

void sperner_string_free(char* s) { std::free(s); }
void sperner_system_free(sperner_system* s) { delete s; }
void sperner_function_free(sperner_function* f) { delete f; }

sperner_status sperner_system_parse(const char* text, int n_override, int minimalize,
                                    sperner_system** out, char** warning) {
  if (text == nullptr || out == nullptr) return fail_argument("null argument");
  return run([&] {
    sperner::ParseOptions options;
    options.n_override = n_override;
    options.minimalize = minimalize != 0;
    sperner::ParseResult result = sperner::parse_system(text, options);
    *out = new sperner_system{std::move(result.system)};
    if (warning != nullptr) {
      std::string joined;
      for (const std::string& w : result.warnings) {
        if (!joined.empty()) joined += "; ";
        joined += w;
      }
      *warning = joined.empty() ? nullptr : dup_string(joined);
    }
    return SPERNER_OK;
  });
}

sperner_status sperner_system_render(const sperner_system* s, const char* format, char** out) {
  if (s == nullptr || format == nullptr || out == nullptr) return fail_argument("null argument");
  return run([&] {
    std::string text;
    std::string f = format;
    if (f == "short") {
      text = sperner::render_short(s->value);
    } else if (f == "blocks") {
      text = sperner::render_blocks(s->value);
    } else if (f == "json") {
      text = sperner::render_json(s->value);
    } else if (f == "primed") {
      text = sperner::render_primed(s->value);
    } else if (f.starts_with("primed:")) {
      int m = 0;
      try {
        std::size_t used = 0;
        m = std::stoi(f.substr(7), &used);
        if (used != f.size() - 7) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw std::invalid_argument("unknown render format");
      }
      text = sperner::render_primed(s->value, m);
    } else {
      throw std::invalid_argument("unknown render format");
    }
    *out = dup_string(text);
    return SPERNER_OK;
  });
}

sperner_status sperner_system_ground_size(const sperner_system* s, int* out) {
  if (s == nullptr || out == nullptr) return fail_argument("null argument");
  *out = s->value.ground_size();
  return SPERNER_OK;
}

sperner_status sperner_system_block_count(const sperner_system* s, int64_t* out) {
  if (s == nullptr || out == nullptr) return fail_argument("null argument");
  *out = static_cast<int64_t>(s->value.block_count());
  return SPERNER_OK;
}

sperner_status sperner_family_build(const char* name, int param1, int param2,
                                    sperner_system** out) {
  if (name == nullptr || out == nullptr) return fail_argument("null argument");
  return run([&] {
    std::string f = name;
    sperner::SetSystem built;
    if (f == "F") {
      if (param2 != -1) throw std::invalid_argument("family F takes no parity");
      built = sperner::build_f(param1);
    } else if (f == "G") {
      built = sperner::build_g(param1, param2);
    } else if (f == "M") {
      built = sperner::build_m(param1, param2);
    } else if (f == "U") {
      built = sperner::build_u(param1, param2);
    } else if (f == "S") {
      built = sperner::build_s(param1, param2);
    } else {
      throw std::invalid_argument("unknown family name");
    }
    *out = new sperner_system{std::move(built)};
    return SPERNER_OK;
  });
}

sperner_status sperner_deck_render(const sperner_system* s, const char* mode, char** out) {
  if (s == nullptr || out == nullptr) return fail_argument("null argument");
  return run([&] {
    sperner::Deck d = sperner::deck(s->value, parse_deck_kind(mode));
    *out = dup_string(sperner::render_deck(d));
    return SPERNER_OK;
  });
}

sperner_status sperner_check(const sperner_system* a, const sperner_system* b,
                             const char* relation, const char* mode, int* verdict,
                             char** witness) {
  if (a == nullptr || b == nullptr || relation == nullptr || verdict == nullptr)
    return fail_argument("null argument");
  return run([&] {
    if (witness != nullptr) *witness = nullptr;
    std::string r = relation;
    if (r == "iso") {
      std::optional<sperner::Permutation> p = sperner::find_isomorphism(a->value, b->value);
      *verdict = p.has_value() ? 1 : 0;
      if (p.has_value() && witness != nullptr) *witness = dup_string(sperner::render_witness(*p));
    } else if (r == "hypomorphic") {
      *verdict = sperner::hypomorphic(a->value, b->value, parse_deck_kind(mode)) ? 1 : 0;
    } else if (r == "strong") {
      *verdict = sperner::strongly_hypomorphic(a->value, b->value, parse_deck_kind(mode)) ? 1 : 0;
    } else {
      throw std::invalid_argument("unknown relation");
    }
    return SPERNER_OK;
  });
}

sperner_status sperner_appendix_render(int n, char** out) {
  if (out == nullptr) return fail_argument("null argument");
  return run([&] {
    *out = dup_string(sperner::render_appendix(n));
    return SPERNER_OK;
  });
}

sperner_status sperner_function_parse(const char* text, sperner_function** out) {
  if (text == nullptr || out == nullptr) return fail_argument("null argument");
  return run([&] {
    *out = new sperner_function{sperner::parse_function(text)};
    return SPERNER_OK;
  });
}

sperner_status sperner_function_deck_render(const sperner_function* f, char** out) {
  if (f == nullptr || out == nullptr) return fail_argument("null argument");
  return run([&] {
    *out = dup_string(sperner::render_function_deck(sperner::function_deck(f->value)));
    return SPERNER_OK;
  });
}

sperner_status sperner_clone_report(const sperner_function* f, char** out) {
  if (f == nullptr || out == nullptr) return fail_argument("null argument");
  return run([&] {
    *out = dup_string(sperner::render_clone_report(f->value));
    return SPERNER_OK;
  });
}

} /* extern "C" */
