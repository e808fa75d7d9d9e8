#pragma once

#include "cpda/cpda.hpp"
#include "cpda/pda.hpp"

namespace cpda {

struct ManParams {
  int num_users = 0;  // K
  int t = 0;          // cache fraction numerator, 0 <= t <= K
};

struct GridParams {
  int q = 0;  // alphabet size, >= 2
  int m = 0;  // vector length, >= 1
};

// Maddah-Ali/Niesen array: rows are the t-subsets of [K], entry(T',k) is a
// star iff k is in T', else the rank of T' u {k} among (t+1)-subsets.
// Yields a (t+1)-regular (K, C(K,t), C(K-1,t-1), C(K,t+1)) PDA.
PdaArray man_pda(const ManParams& p);

// Low-subpacketization family one: (m+1)-regular
// (q(m+1), q^m, q^(m-1), q^(m+1)-q^m) PDA over rows f in Z_q^m.
PdaArray lemma1_pda(const GridParams& p);

// Low-subpacketization family two: (q-1)(m+1)-regular
// (q(m+1), (q-1)q^m, (q-1)^2 q^(m-1), q^m) PDA over rows (e,f).
PdaArray lemma2_pda(const GridParams& p);

// Cut-set achieving array B: rows are the (r-1)-subsets S_j of [h], columns
// the r-subsets T, entry = the element T \ S_j when S_j is contained in T.
// A (C(h,r), C(h,r-1), C(h,r-1)-r, h) C-PDA with one symbol per relay.
CpdaScheme cutset_array_b(int h, int r);

}  // namespace cpda
