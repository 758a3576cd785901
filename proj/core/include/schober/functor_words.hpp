#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace schober {

// One letter of a functor word: a named generator with exponent +-1.
// Generators are cotwist symbols like "T(v2)" or decoration symbols like "S(a)".
struct Letter {
  std::string symbol;
  int exp = 1; // +1 or -1

  bool operator==(const Letter& o) const { return symbol == o.symbol && exp == o.exp; }
  bool operator!=(const Letter& o) const { return !(*this == o); }
};

// Element of (central shift group Z) x (free group on generator symbols).
// `letters` is kept freely reduced and is stored in composition order:
// letters.front() is applied last. Shifts commute with everything.
struct FunctorWord {
  std::int64_t shift = 0;
  std::vector<Letter> letters;

  bool is_identity() const { return shift == 0 && letters.empty(); }
  bool operator==(const FunctorWord& o) const {
    return shift == o.shift && letters == o.letters;
  }
  bool operator!=(const FunctorWord& o) const { return !(*this == o); }
};

// Declared relations: generators resolved to pure shifts ("T(v1) = [-1]"),
// plus an optional stalk period p meaning [p] = id (p = 0: no period).
struct RelationSet {
  std::map<std::string, std::int64_t> resolved;
  std::int64_t period = 0;

  bool is_resolved(const std::string& symbol) const {
    return resolved.count(symbol) > 0;
  }
};

FunctorWord shift_word(std::int64_t k);
FunctorWord generator_word(const std::string& symbol, int exp = 1);

// w1 after w2 (function composition order): shifts add, letters concatenate
// and freely reduce at the junction.
FunctorWord compose(const FunctorWord& w1, const FunctorWord& w2);
FunctorWord invert(const FunctorWord& w);

// Substitute resolved generators by their shifts, freely reduce, and reduce
// the shift mod the period (representative in [0, p)).
FunctorWord normal_form(const FunctorWord& w, const RelationSet& r = {});

bool equal(const FunctorWord& w1, const FunctorWord& w2, const RelationSet& r = {});

// True iff some cyclic permutation of the (cyclically reduced) letters matches,
// with equal shifts mod period; i.e. conjugacy in the free-times-central model.
bool conjugate_equal(const FunctorWord& w1, const FunctorWord& w2,
                     const RelationSet& r = {});

// Word literal syntax: "[3]*T(v1)^-1*S(e2)", read left-to-right in
// composition order. "[0]" and the empty product denote the identity.
FunctorWord parse_word(const std::string& text);
std::string to_string(const FunctorWord& w);

} // namespace schober
