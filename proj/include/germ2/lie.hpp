#pragma once
#include <optional>
#include <vector>
#include "germ2/germ.hpp"

namespace germ2 {

/// Exhaustive list of resonance relations lambda^m = lambda_j with
/// 2 <= |m| <= search_bound, verified exactly.
struct ResonanceReport {
    struct Relation {
        int m1, m2;
        int j; // 1 or 2
    };
    std::vector<Relation> relations;
    int search_bound;
};

struct DicriticInfo {
    bool tangent;  // false: not tangent to identity (k, f meaningless)
    bool dicritic; // F_{k+1} = f . X with f homogeneous of degree k
    int k;
    Jet2 f;
};

struct AbelianT {
    bool in_flow;
    Gaussian t; // G = exp(t log F) when in_flow
};

// [X,Y] = (grad Y).X - (grad X).Y, truncated at N-1
VFieldGerm lie_bracket(const VFieldGerm& X, const VFieldGerm& Y);

// Time-1 flow of a >= 2-flat field as the Lie series sum_m X^(m)/m!.
// Terminates exactly: each directional-derivative iterate gains flat order.
MapGerm exp_field(const VFieldGerm& X);

// Inverse of exp_field, degree by degree: the degree-d part of log F is
// F minus the exponential of the already-known lower part.
VFieldGerm log_diffeo(const MapGerm& F);

// exp(t log F); flow_power(F, n) = F^n for integer n
MapGerm flow_power(const MapGerm& F, const Gaussian& t);

// F o G o F^-1 o G^-1
MapGerm group_commutator(const MapGerm& F, const MapGerm& G);

// smallest n <= maxN with F^n = id to order N, or nullopt
std::optional<int> germ_order(const MapGerm& F, int maxN);

// Enumerates the finite group generated by the given germs (breadth-first
// closure under composition, order-N equality) and returns
//   g(X) = (1/#H) sum_{H in group} (DH(0))^-1 H(X),
// which conjugates every group element to its linear part.
MapGerm average_linearizer(const std::vector<MapGerm>& generators, int max_group);

// pushforward(F, X) == X at order N-1
bool is_invariant_field(const MapGerm& F, const VFieldGerm& X);

// For X = R + (flat terms), returns tangent-to-identity g with
// pushforward(g, X) = R at order N-1, via [R, P_j] = (j-1) P_j.
MapGerm linearize_radial(const VFieldGerm& X);

DicriticInfo is_dicritic(const MapGerm& F);

// Thm 5.5 structure: recovers t with G = exp(t log F) for a generic dicritic
// F and a commuting tangent-to-identity G.
AbelianT abelian_structure(const MapGerm& F, const MapGerm& G);

ResonanceReport find_resonances(const Gaussian& l1, const Gaussian& l2, int M);

// (B - I) lambda integral, for B in SL(n, Z)
bool sla_membership(const std::vector<std::vector<Int>>& B, const std::vector<Rat>& lambda);

} // namespace germ2
