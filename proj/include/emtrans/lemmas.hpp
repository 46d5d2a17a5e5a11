#pragma once

#include <vector>

#include "emtrans/g3ip.hpp"

namespace emtrans {

// Placeholder toolkit. Proofs about the reserved letter compose through
// these; inputs may be pure or carry structural nodes.

/// From G => A derive G, A -> * => * (one left implication step).
IProof star_refute(const IProof& p);

/// From G, A => * derive G => A -> *.
IProof curry_star(const IProof& p, const Formula& a);

/// Inverse direction: from G => A -> * derive G, A => *.
IProof uncurry_star(const IProof& p);

/// From G, A => * derive G, (A -> *) -> * => *.
IProof dne_star(const IProof& p, const Formula& a);

/// The nine schema builders, instantiated as fixed derivation templates:
///   1  ctx, p | ~p, ~p -> *, p -> *  =>  *          (params: variable p)
///   2  ctx, ~bot -> *  =>  *                        (params: none)
///   3  ~(d & d') -> *  =>  (~d -> *) & (~d' -> *)   (params: d, d')
///   4  ((s->*)->*) & ((s'->*)->*)  =>  ((s & s') -> *) -> *
///   5  ~(d | d') -> *  =>  (((~d -> *) | (~d' -> *)) -> *) -> *
///   6  ((s->*) & (s'->*)) -> *  =>  ((s | s') -> *) -> *
///   7  ~(s -> b) -> *  =>  ((s->*)->*) -> (~b -> *)
///   8  s -> b  =>  ((s->*)->*) -> ((b->*)->*)
///   9  (~a -> *) -> ((s->*)->*)  =>  ((a -> s) -> *) -> *
/// Items 1 and 2 take an extra context; 3..9 are context-free and callers
/// weaken afterwards. Item 1 requires an atom parameter.
IProof build_lemma(int id, const std::vector<Formula>& params,
                   const Multiset& context = {});

/// The schema instance build_lemma's result must conclude.
IntSequent lemma_conclusion(int id, const std::vector<Formula>& params,
                            const Multiset& context = {});

/// Substitutes a formula for the placeholder throughout a checked proof.
/// Axiom leaves whose witness is the placeholder become derived identities;
/// every other node maps rule for rule.
IProof subst_star_proof(const IProof& p, const Formula& c);

}  // namespace emtrans
