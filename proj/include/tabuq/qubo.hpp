// Copyright (c) 2026 tabuq contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace tabuq {

/// Binary assignment; one byte per variable, values 0 or 1.
using BitString = std::vector<std::uint8_t>;

inline BitString flipped(BitString x, int i) {
    x.at(static_cast<std::size_t>(i)) ^= 1u;
    return x;
}

inline int hamming_distance(const BitString& a, const BitString& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("hamming_distance: length mismatch");
    int d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]) ? 1 : 0;
    return d;
}

/// Where the stored coefficients came from. Instances ingested from
/// maximization-convention files are negated on ingest so the whole toolkit
/// minimizes; reporting layers re-negate for display.
enum class Sense { minimize, maximize_negated };

struct QuboTerm {
    int i;
    int j;
    double value;
};

/// Upper-triangular QUBO: f(x) = offset + sum_{i<=j} x_i Q[i][j] x_j.
///
/// Immutable after construction. Duplicate (i,j) terms accumulate and
/// entries with i > j are folded into (j,i).
class Qubo {
public:
    explicit Qubo(int n, std::vector<QuboTerm> terms = {}, double offset = 0.0,
                  Sense sense = Sense::minimize);

    int num_vars() const { return n_; }
    double offset() const { return offset_; }
    Sense sense() const { return sense_; }

    double evaluate(const BitString& x) const;

    /// Q[i][i].
    double diagonal(int i) const { return diagonal_.at(static_cast<std::size_t>(i)); }

    /// Q[min(i,j)][max(i,j)] for i != j; 0 when the pair is not stored.
    double pair_coefficient(int i, int j) const;

    struct Neighbor {
        int index;
        double value;
    };
    /// Off-diagonal entries touching variable i, sorted by neighbor index.
    std::span<const Neighbor> neighbors(int i) const {
        return adjacency_.at(static_cast<std::size_t>(i));
    }

    /// Stored upper-triangular terms (i <= j), row-major order.
    const std::vector<QuboTerm>& terms() const { return terms_; }

    std::size_t nonzero_count() const { return terms_.size(); }

    /// Structural identity token (n, offset and all coefficients).
    std::uint64_t content_hash() const { return hash_; }

private:
    int n_;
    double offset_;
    Sense sense_;
    std::vector<QuboTerm> terms_;                    // i <= j, sorted
    std::vector<double> diagonal_;                   // Q[i][i]
    std::vector<std::vector<Neighbor>> adjacency_;   // off-diagonal, both directions
    std::uint64_t hash_;
};

/// Spin form of a Qubo under x = (1 - s)/2 (spin +1 is bit 0):
/// energy(s) = sum_i h[i] s_i + sum_{i<j} J[(i,j)] s_i s_j, and
/// energy(spins(x)) + offset == qubo.evaluate(x).
struct IsingModel {
    int n = 0;
    std::vector<double> h;
    std::vector<QuboTerm> couplings;   // i < j
    double offset = 0.0;

    double energy(const std::vector<int>& spins) const;
};

IsingModel to_ising(const Qubo& q);

/// Spin vector for a bitstring under the x = (1 - s)/2 convention.
std::vector<int> spins_of(const BitString& x);

/// Per-variable one-bit-flip gains delta[i] = f(flip(x,i)) - f(x),
/// maintained incrementally. owner_hash ties the table to its (Qubo, x) pair.
struct MoveTable {
    std::vector<double> delta;
    std::uint64_t owner_hash = 0;
};

MoveTable init_move_table(const Qubo& q, const BitString& x);

/// Flips bit i of x and updates the move table in place.
/// delta[i] becomes -delta[i]; for j != i adjacent to i,
/// delta[j] += (1-2x'_j)(1-2x_i) Q[min(i,j)][max(i,j)].
void apply_flip(const Qubo& q, BitString& x, MoveTable& table, int i);

/// A Qubo over k selected variables obtained by fixing the others from a
/// reference solution. `base` keeps the full parent reference; positions at
/// parent_indices are the free variables (ascending parent order).
struct SubProblem {
    std::vector<int> parent_indices;
    Qubo reduced;
    BitString base;

    int k() const { return static_cast<int>(parent_indices.size()); }

    /// Places the k-variable assignment y at parent_indices, base elsewhere.
    BitString embed(const BitString& y) const;

    /// Reference solution restricted to the selected variables.
    BitString base_restricted() const;
};

SubProblem clamp(const Qubo& q, const BitString& x_ts, const std::vector<int>& selected);

}  // namespace tabuq
