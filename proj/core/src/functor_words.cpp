#include "schober/functor_words.hpp"

#include "schober/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace schober {

namespace {

void push_reduced(std::vector<Letter>& out, const Letter& l) {
  if (!out.empty() && out.back().symbol == l.symbol && out.back().exp == -l.exp)
    out.pop_back();
  else
    out.push_back(l);
}

std::int64_t mod_period(std::int64_t k, std::int64_t p) {
  if (p <= 0) return k;
  std::int64_t r = k % p;
  return r < 0 ? r + p : r;
}

} // namespace

FunctorWord shift_word(std::int64_t k) { return FunctorWord{k, {}}; }

FunctorWord generator_word(const std::string& symbol, int exp) {
  if (exp != 1 && exp != -1) throw ParseError("generator exponent must be +-1");
  return FunctorWord{0, {Letter{symbol, exp}}};
}

FunctorWord compose(const FunctorWord& w1, const FunctorWord& w2) {
  FunctorWord r;
  r.shift = w1.shift + w2.shift;
  r.letters = w1.letters;
  for (const Letter& l : w2.letters) push_reduced(r.letters, l);
  return r;
}

FunctorWord invert(const FunctorWord& w) {
  FunctorWord r;
  r.shift = -w.shift;
  r.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    r.letters.push_back(Letter{it->symbol, -it->exp});
  return r;
}

FunctorWord normal_form(const FunctorWord& w, const RelationSet& r) {
  FunctorWord out;
  out.shift = w.shift;
  for (const Letter& l : w.letters) {
    auto it = r.resolved.find(l.symbol);
    if (it != r.resolved.end())
      out.shift += l.exp * it->second;
    else
      push_reduced(out.letters, l);
  }
  out.shift = mod_period(out.shift, r.period);
  return out;
}

bool equal(const FunctorWord& w1, const FunctorWord& w2, const RelationSet& r) {
  return normal_form(w1, r) == normal_form(w2, r);
}

bool conjugate_equal(const FunctorWord& w1, const FunctorWord& w2,
                     const RelationSet& r) {
  FunctorWord a = normal_form(w1, r);
  FunctorWord b = normal_form(w2, r);
  if (a.shift != b.shift) return false;
  // cyclically reduce: strip conjugating pairs at the two ends
  auto cyclic_core = [](std::vector<Letter> v) {
    while (v.size() >= 2 && v.front().symbol == v.back().symbol &&
           v.front().exp == -v.back().exp) {
      v.erase(v.begin());
      v.pop_back();
    }
    return v;
  };
  std::vector<Letter> x = cyclic_core(a.letters);
  std::vector<Letter> y = cyclic_core(b.letters);
  if (x.size() != y.size()) return false;
  if (x.empty()) return true;
  for (size_t rot = 0; rot < x.size(); ++rot) {
    bool ok = true;
    for (size_t i = 0; i < x.size() && ok; ++i)
      ok = x[(rot + i) % x.size()] == y[i];
    if (ok) return true;
  }
  return false;
}

FunctorWord parse_word(const std::string& text) {
  FunctorWord out;
  size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  skip_ws();
  if (i >= text.size()) return out; // empty product = identity
  if (text == "1" || text == "id") return out;
  bool first = true;
  while (i < text.size()) {
    skip_ws();
    if (!first) {
      if (text[i] != '*') throw ParseError("expected '*' in word literal: " + text);
      ++i;
      skip_ws();
    }
    first = false;
    if (i >= text.size()) throw ParseError("dangling '*' in word literal: " + text);
    if (text[i] == '[') {
      size_t close = text.find(']', i);
      if (close == std::string::npos) throw ParseError("unterminated shift in: " + text);
      std::string num = text.substr(i + 1, close - i - 1);
      try {
        out.shift += std::stoll(num);
      } catch (const std::exception&) {
        throw ParseError("bad shift literal [" + num + "]");
      }
      i = close + 1;
    } else {
      size_t start = i;
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) ||
                                 text[i] == '_'))
        ++i;
      if (i == start) throw ParseError("expected generator name in: " + text);
      std::string name = text.substr(start, i - start);
      if (i >= text.size() || text[i] != '(')
        throw ParseError("generator '" + name + "' needs a parenthesized id");
      size_t close = text.find(')', i);
      if (close == std::string::npos) throw ParseError("unterminated generator in: " + text);
      std::string symbol = name + text.substr(i, close - i + 1);
      i = close + 1;
      std::int64_t exp = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        size_t estart = i;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == estart) throw ParseError("bad exponent in: " + text);
        exp = std::stoll(text.substr(estart, i - estart));
      }
      int sign = exp < 0 ? -1 : 1;
      for (std::int64_t k = 0; k < (exp < 0 ? -exp : exp); ++k)
        push_reduced(out.letters, Letter{symbol, sign});
    }
    skip_ws();
  }
  return out;
}

std::string to_string(const FunctorWord& w) {
  std::ostringstream os;
  bool wrote = false;
  if (w.shift != 0 || w.letters.empty()) {
    os << '[' << w.shift << ']';
    wrote = true;
  }
  size_t i = 0;
  while (i < w.letters.size()) {
    size_t j = i;
    while (j < w.letters.size() && w.letters[j] == w.letters[i]) ++j;
    std::int64_t run = static_cast<std::int64_t>(j - i) * w.letters[i].exp;
    if (wrote) os << '*';
    os << w.letters[i].symbol;
    if (run != 1) os << '^' << run;
    wrote = true;
    i = j;
  }
  return os.str();
}

} // namespace schober
