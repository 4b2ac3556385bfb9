#pragma once

#include "flowrec/exact.hpp"
#include "flowrec/graph.hpp"
#include "flowrec/limits.hpp"
#include "flowrec/polynomial.hpp"

namespace flowrec {

// Tutte polynomial t_G(x, y) by deletion-contraction: loops contribute y,
// coloops x, the edgeless graph 1.
BivariatePolynomial tutte_polynomial(const OrientedMultigraph& g);

// t_G evaluated at integer arguments without building the polynomial.
Int tutte_value(const OrientedMultigraph& g, const Int& x, const Int& y);

// Structure constants of a generalized Tutte-Grothendieck invariant:
// f_G = sigma_f f_{G\e} + tau_f f_{G/e} on ordinary edges, multiplicative
// with loop_value / coloop_value on loops and coloops.
struct TGParams {
    Int sigma_f;
    Int tau_f;
    Rat loop_value;
    Rat coloop_value;
};

// sigma^xi(G) tau^(|V|-c) t_G(coloop_value/tau, loop_value/sigma).
// Throws if a structure constant is zero.
Rat tg_evaluate(const OrientedMultigraph& g, const TGParams& params);

enum class TutteSpecialization { Flow, Tension };

// Flow: t_G(0, 1+k) = (-1)^xi phi(-k). Tension: t_G(1+l, 0) =
// (-1)^(|V|-c) tau(-l). Takes the non-negative argument k or l.
Int specialize(const OrientedMultigraph& g, TutteSpecialization which, long long argument);

// Convolution over all edge subsets:
//   t_G(1+l, 1+k) = sum_S t_{G[S]}(0, 1+k) * t_{G/S}(1+l, 0),
// with isolated vertices pruned from the minors.
Int convolution(const OrientedMultigraph& g, long long l, long long k,
                const ScanLimits& limits = {});

} // namespace flowrec
