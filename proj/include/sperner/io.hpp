#pragma once

#include <string>
#include <vector>

#include "sperner/core.hpp"
#include "sperner/enumerate.hpp"
#include "sperner/functions.hpp"
#include "sperner/minors.hpp"

namespace sperner {

struct ParseOptions {
  int n_override = 0;       // 0 = take n from the input
  bool minimalize = false;  // repair antichain violations instead of keeping them
};

struct ParseResult {
  SetSystem system;
  std::vector<std::string> warnings;
};

// Accepts either the JSON document {"n": int, "blocks": [[int, ...], ...]}
// or one line of shorthand (blocks comma-separated, elements as juxtaposed
// digits; needs n <= 9). "-" is the empty system, "0" an empty block.
// Duplicate blocks are an error; a non-antichain yields a warning, and is
// minimalized only under options.minimalize.
ParseResult parse_system(const std::string& text, const ParseOptions& options = {});

// Shorthand, blocks in display order. Requires n <= 9.
std::string render_short(const SetSystem& s);

// Blocks as comma-joined element lists, ";"-separated; works for any n.
std::string render_blocks(const SetSystem& s);

// Compact JSON document, blocks in display order.
std::string render_json(const SetSystem& s);

// Display-only rendering over the doubled ground set: label i <= m prints as
// i, m+i as i', 2m+1 as 0 and 2m+2 as 0'. The one-argument form infers m
// from the ground size (even n: n/2, odd n: (n-1)/2); pass m explicitly for
// the even layout that ends in the 0, 0' pair.
std::string render_primed(const SetSystem& s);
std::string render_primed(const SetSystem& s, int m);

// JSON document {"domain": int, "codomain": int, "arity": int,
// "table": [int, ...]}, table in row-major order (last argument least
// significant).
FiniteFunction parse_function(const std::string& text);
std::string render_function_json(const FiniteFunction& f);

// One line per card, "<card> x<count>", in display order, using the
// multiplication sign; shorthand when the card ground fits, the ";" form
// otherwise.
std::string render_deck(const Deck& d);
std::string render_function_deck(const FunctionDeck& d);

// The full deck table over [n] as aligned text: one column per class over
// [n-1], blank cells for zero, trailing * on rows sharing a deck.
std::string render_appendix(const DeckTable& table);
std::string render_appendix(int n);

// One "name: yes|no" line per clone membership predicate, for a 0/1
// function.
std::string render_clone_report(const FiniteFunction& f);

std::string render_witness(const Permutation& p);

}  // namespace sperner
