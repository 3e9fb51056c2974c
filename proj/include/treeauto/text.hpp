#pragma once

#include <string>
#include <string_view>

#include "treeauto/presentation.hpp"

namespace treeauto {

// Presentation file grammar, one state per line:
//
//   name = [cycles] ( word , word , ... )
//
// where cycles is a sequence of parenthesized letter groups ("(0 2)(1 3)",
// omitted for the identity) and each word is "1" or '*'-joined factors
// "name" / "name^k" (k a non-zero integer, negative for inverses). '#'
// starts a comment. The alphabet size is the (uniform) tuple arity.
Presentation parse_presentation(std::string_view text);

// Canonical form: printing then parsing reproduces the presentation, and
// printing is idempotent on parsed input.
std::string print_presentation(const Presentation& p);

// Element words on the command line use the same word grammar.
GroupWord parse_word(const Presentation& p, std::string_view text);
std::string print_word(const Presentation& p, const GroupWord& w);

// Vertices are '.'-separated letters; the empty string is the root.
TreeWord parse_tree_word(const Presentation& p, std::string_view text);

}  // namespace treeauto
