#include "schober/k0.hpp"

#include "schober/errors.hpp"

namespace schober {

ZMatrix K0Assignment::matrix_of(const std::string& symbol,
                                const std::map<std::string, VertexId>& cotwist_names) const {
  auto deco = decorations.find(symbol);
  if (deco != decorations.end()) return deco->second;
  VertexId v;
  auto named = cotwist_names.find(symbol);
  if (named != cotwist_names.end()) {
    v = named->second;
  } else {
    // default cotwist naming "T(v<id>)"
    if (symbol.size() < 5 || symbol.rfind("T(v", 0) != 0 || symbol.back() != ')')
      throw DomainError("missing-k0", symbol);
    try {
      v = std::stoi(symbol.substr(3, symbol.size() - 4));
    } catch (const std::exception&) {
      throw DomainError("missing-k0", symbol);
    }
  }
  auto it = singular.find(v);
  if (it == singular.end()) throw DomainError("missing-k0", symbol);
  const auto& [f, g] = it->second;
  return f * g - ZMatrix::identity(rank);
}

Diagnostics validate_assignment(const K0Assignment& a) {
  Diagnostics d;
  if (a.rank < 0) d.violations.push_back("negative-rank");
  for (const auto& [v, fg] : a.singular) {
    const auto& [f, g] = fg;
    if (f.rows() != a.rank || g.cols() != a.rank || f.cols() != g.rows()) {
      d.violations.push_back("shape-mismatch");
      continue;
    }
    ZMatrix t = f * g - ZMatrix::identity(a.rank);
    std::int64_t dt = det(t);
    if (dt != 1 && dt != -1) d.violations.push_back("cotwist-not-invertible");
  }
  for (const auto& [name, m] : a.decorations) {
    if (m.rows() != a.rank || m.cols() != a.rank) {
      d.violations.push_back("shape-mismatch");
      continue;
    }
    std::int64_t dm = det(m);
    if (dm != 1 && dm != -1) d.violations.push_back("decoration-not-invertible");
  }
  return d;
}

ZMatrix k0_of_word(const FunctorWord& w, const K0Assignment& a,
                   const std::map<std::string, VertexId>& cotwist_names) {
  ZMatrix acc = ZMatrix::identity(a.rank);
  for (const Letter& l : w.letters) {
    ZMatrix m = a.matrix_of(l.symbol, cotwist_names);
    if (l.exp < 0) {
      auto inv = inverse_unimodular(m);
      if (!inv) throw DomainError("missing-k0", l.symbol + " not invertible over Z");
      m = *inv;
    }
    acc = acc * m;
  }
  if (w.shift % 2 != 0) acc = acc.negate();
  return acc;
}

std::vector<std::pair<std::string, ZMatrix>> k0_monodromy_rep(
    const SchoberDatum& s, const LineField& l, const K0Assignment& a) {
  std::map<std::string, VertexId> names;
  for (VertexId v : s.graph.vertices()) names[s.cotwist_symbol(v)] = v;
  std::vector<std::pair<std::string, ZMatrix>> rep;
  for (auto& [name, word] : monodromy_rep(s, l))
    rep.emplace_back(name, k0_of_word(word, a, names));
  return rep;
}

ZMatrix serre_matrix(const EulerForm& form) {
  auto inv = inverse_unimodular(form.e);
  if (!inv) throw DomainError("non-unimodular");
  return *inv * form.e.transpose();
}

bool weak_cy_check(const EulerForm& form, std::int64_t n) {
  ZMatrix s = serre_matrix(form);
  ZMatrix expect = ZMatrix::identity(s.rows());
  if (n % 2 != 0) expect = expect.negate();
  return s == expect;
}

bool relative_cy_check(const EulerForm& e_d, const ZMatrix& f, const ZMatrix& g,
                       std::int64_t m) {
  int r = e_d.e.rows();
  if (f.cols() != r || g.rows() != r || f.rows() != g.cols())
    throw DomainError("shape-mismatch", "relative_cy_check");
  ZMatrix s = serre_matrix(e_d);
  if ((1 - m) % 2 != 0) s = s.negate();
  return g * f == ZMatrix::identity(r) + s;
}

ZMatrix local_model_restriction_matrix(int m) {
  if (m < 2) throw DomainError("shape-mismatch", "m must be >= 2");
  ZMatrix out(m - 1, m);
  for (int i = 0; i < m - 1; ++i) {
    out.at(i, 0) = -1;
    out.at(i, i + 1) = 1;
  }
  return out;
}

bool eta_invariance_check(const std::vector<std::pair<std::string, ZMatrix>>& rep,
                          const std::vector<std::int64_t>& eta) {
  for (const auto& [name, m] : rep) {
    if (m.cols() != static_cast<int>(eta.size()))
      throw DomainError("dimension-mismatch", "eta");
    if (m.apply(eta) != eta) return false;
  }
  return true;
}

} // namespace schober
