#pragma once

#include "schober/functor_words.hpp"
#include "schober/schober.hpp"
#include "schober/zmatrix.hpp"

#include <map>
#include <string>
#include <vector>

namespace schober {

// Integer-matrix decategorification data: shift [1] acts by -I on the stalk
// K_0; each singular vertex contributes K_0(T_v) = f_v g_v - I; decoration
// generators act by declared unimodular matrices.
struct K0Assignment {
  int rank = 0;
  std::map<VertexId, std::pair<ZMatrix, ZMatrix>> singular; // v -> (f, g)
  std::map<std::string, ZMatrix> decorations;               // symbol -> matrix

  // matrix of a generator symbol under an optional vertex->symbol naming
  // (from a schober); throws "missing-k0" when unassigned
  ZMatrix matrix_of(const std::string& symbol,
                    const std::map<std::string, VertexId>& cotwist_names = {}) const;
};

Diagnostics validate_assignment(const K0Assignment& a);

// Evaluate a word: shift k -> (-1)^k I, letters -> assigned matrices
// multiplied in composition order.
ZMatrix k0_of_word(const FunctorWord& w, const K0Assignment& a,
                   const std::map<std::string, VertexId>& cotwist_names = {});

// k0_of_word after monodromy on every generating loop.
std::vector<std::pair<std::string, ZMatrix>> k0_monodromy_rep(
    const SchoberDatum& s, const LineField& l, const K0Assignment& a);

// Gram matrix of the Euler pairing <x,y> = x^T E y; Serre operations need
// |det E| = 1.
struct EulerForm {
  ZMatrix e;
};

// S = E^-1 E^T, the K_0 shadow of the Serre functor; satisfies
// <x, S y> = <y, x> on all basis pairs. Throws "non-unimodular".
ZMatrix serre_matrix(const EulerForm& form);

// E^T = (-1)^n E, equivalently serre_matrix = (-1)^n I.
bool weak_cy_check(const EulerForm& form, std::int64_t n);

// K_0 shadow of a relative right m-Calabi-Yau structure on F with
// K_0(F) = f, K_0(G) = g: the fiber sequence id -> GF -> Serre[1-m]
// decategorifies to g f = I + (-1)^(1-m) serre_matrix(E_D).
bool relative_cy_check(const EulerForm& e_d, const ZMatrix& f, const ZMatrix& g,
                       std::int64_t m);

// (m-1) x m with the all-ones vector in the kernel; for m = 3 exactly
// [[-1,1,0],[-1,0,1]].
ZMatrix local_model_restriction_matrix(int m);

// True iff every generator image fixes eta.
bool eta_invariance_check(const std::vector<std::pair<std::string, ZMatrix>>& rep,
                          const std::vector<std::int64_t>& eta);

} // namespace schober
