#pragma once

// Nilpotent representatives and strong shift equivalence witnesses.
//
// A class I - sum_k s^k M_k with M_k free of s corresponds to the block
// companion
//     [ M_1 M_2 ... M_d ]
//     [ I   0   ...  0  ]
//     [     ...         ]
//     [ 0  ...   I   0  ]
// which is nilpotent whenever det(I - sum s^k M_k) = 1 over a domain.

#include <optional>
#include <string>
#include <vector>

#include "nilk/matrix.hpp"

namespace nilk {

class NotNilpotent : public std::domain_error {
public:
    explicit NotNilpotent(const std::string &what) : std::domain_error("not nilpotent: " + what) {}
};

/// Blocks M_1..M_d with I - rep = sum_k var^k M_k. Empty when rep = I.
/// Throws std::invalid_argument if I - rep has a var-free part.
template <Coefficient C>
std::vector<Matrix<C>> decompose_by_degree(const Matrix<C> &rep, std::string_view var) {
    if (!rep.is_square())
        throw DimensionMismatch("decomposition of non-square " + rep.shape());
    const std::size_t v = rep.ring()->require(var);
    const Matrix<C> m = Matrix<C>::identity(rep.ring(), rep.rows()) - rep;
    int degree = 0;
    for (const auto &e : m.entries()) {
        if (auto lo = e.min_degree_in(v); lo && *lo < 1)
            throw std::invalid_argument("I - rep has a nonzero part of degree " + std::to_string(*lo) + " in " +
                                        std::string(var));
        if (auto hi = e.degree_in(v))
            degree = std::max(degree, *hi);
    }
    std::vector<Matrix<C>> blocks;
    for (int k = 1; k <= degree; ++k)
        blocks.push_back(m.map([&](const Poly<C> &e) { return e.coefficient_of(v, k); }));
    return blocks;
}

/// Reassemble I - sum_k var^k M_k.
template <Coefficient C>
Matrix<C> recompose(const std::vector<Matrix<C>> &blocks, std::string_view var) {
    if (blocks.empty())
        throw std::invalid_argument("no blocks");
    const auto &ring = blocks[0].ring();
    const auto s = Poly<C>::variable(ring, var);
    Matrix<C> out = Matrix<C>::identity(ring, blocks[0].rows());
    for (std::size_t k = 0; k < blocks.size(); ++k)
        out = out - blocks[k].scaled(s.pow(static_cast<long long>(k + 1)));
    return out;
}

/// Block companion of M_1..M_d; verified nilpotent of index <= d*n.
template <Coefficient C>
Matrix<C> higman_companion(const std::vector<Matrix<C>> &blocks) {
    if (blocks.empty())
        throw std::invalid_argument("higman_companion needs at least one block");
    const std::size_t n = blocks[0].rows();
    const std::size_t d = blocks.size();
    const auto &ring = blocks[0].ring();
    std::vector<BlockPlacement<C>> placed;
    for (std::size_t k = 0; k < d; ++k) {
        if (blocks[k].rows() != n || blocks[k].cols() != n)
            throw DimensionMismatch("block " + std::to_string(k + 1) + " is " + blocks[k].shape());
        placed.push_back({0, k * n, blocks[k]});
    }
    for (std::size_t k = 1; k < d; ++k)
        placed.push_back({k * n, (k - 1) * n, Matrix<C>::identity(ring, n)});
    Matrix<C> companion = block_assemble(ring, d * n, d * n, placed);
    if (!companion.nilpotency_index(static_cast<unsigned>(d * n)))
        throw NotNilpotent("companion of " + std::to_string(d) + " blocks");
    return companion;
}

/// k-block companion with N in the top-right corner and identities below the diagonal.
template <Coefficient C>
Matrix<C> verschiebung(const Matrix<C> &nil, std::size_t k) {
    if (k < 1)
        throw std::invalid_argument("verschiebung needs k >= 1");
    if (!nil.is_square())
        throw DimensionMismatch("verschiebung of non-square " + nil.shape());
    if (k == 1)
        return nil;
    const std::size_t n = nil.rows();
    std::vector<BlockPlacement<C>> placed{{0, (k - 1) * n, nil}};
    for (std::size_t b = 1; b < k; ++b)
        placed.push_back({b * n, (b - 1) * n, Matrix<C>::identity(nil.ring(), n)});
    return block_assemble(nil.ring(), k * n, k * n, placed);
}

template <Coefficient C>
Matrix<C> frobenius(const Matrix<C> &nil, unsigned k) {
    if (k < 1)
        throw std::invalid_argument("frobenius needs k >= 1");
    return nil.pow(k);
}

/// Outcome of a witness check; `failure` names the first identity that did not hold.
struct WitnessResult {
    bool ok = true;
    std::string failure;
    std::optional<std::size_t> link; // chain link index (0-based) of the failure

    explicit operator bool() const { return ok; }
};

template <Coefficient C>
struct ESSEWitness {
    Matrix<C> U;
    Matrix<C> V;
};

template <Coefficient C>
struct SEWitness {
    Matrix<C> U;
    Matrix<C> V;
    unsigned lag = 1;
};

/// A_0, ..., A_l with witnesses[k] linking A_k = U V and A_{k+1} = V U.
template <Coefficient C>
struct SSEChain {
    std::vector<Matrix<C>> matrices;
    std::vector<ESSEWitness<C>> witnesses;
};

/// A = UV and B = VU. Throws DimensionMismatch when the shapes cannot match.
template <Coefficient C>
WitnessResult verify_esse(const Matrix<C> &A, const Matrix<C> &B, const ESSEWitness<C> &w) {
    if (!A.is_square() || !B.is_square())
        throw DimensionMismatch("ESSE matrices must be square");
    if (w.U.rows() != A.rows() || w.V.cols() != A.rows() || w.U.cols() != B.rows() || w.V.rows() != B.rows())
        throw DimensionMismatch("witness U " + w.U.shape() + ", V " + w.V.shape() + " for A " + A.shape() +
                                ", B " + B.shape());
    if (!(w.U * w.V == A))
        return {false, "A = UV", std::nullopt};
    if (!(w.V * w.U == B))
        return {false, "B = VU", std::nullopt};
    return {};
}

template <Coefficient C>
WitnessResult verify_sse_chain(const SSEChain<C> &chain) {
    if (chain.matrices.empty())
        throw std::invalid_argument("empty chain");
    if (chain.witnesses.size() + 1 != chain.matrices.size())
        throw DimensionMismatch("chain of " + std::to_string(chain.matrices.size()) + " matrices needs " +
                                std::to_string(chain.matrices.size() - 1) + " witnesses");
    for (std::size_t k = 0; k < chain.witnesses.size(); ++k) {
        WitnessResult r;
        try {
            r = verify_esse(chain.matrices[k], chain.matrices[k + 1], chain.witnesses[k]);
        } catch (const DimensionMismatch &e) {
            throw DimensionMismatch("link " + std::to_string(k) + ": " + e.what());
        }
        if (!r) {
            r.link = k;
            return r;
        }
    }
    return {};
}

/// A^l = UV, B^l = VU, AU = UB, VA = BV.
template <Coefficient C>
WitnessResult verify_se(const Matrix<C> &A, const Matrix<C> &B, const SEWitness<C> &w) {
    if (!A.is_square() || !B.is_square())
        throw DimensionMismatch("SE matrices must be square");
    if (w.lag < 1)
        throw std::invalid_argument("lag must be positive");
    if (w.U.rows() != A.rows() || w.U.cols() != B.rows() || w.V.rows() != B.rows() || w.V.cols() != A.rows())
        throw DimensionMismatch("witness U " + w.U.shape() + ", V " + w.V.shape() + " for A " + A.shape() +
                                ", B " + B.shape());
    if (!(A.pow(w.lag) == w.U * w.V))
        return {false, "A^l = UV", std::nullopt};
    if (!(B.pow(w.lag) == w.V * w.U))
        return {false, "B^l = VU", std::nullopt};
    if (!(A * w.U == w.U * B))
        return {false, "AU = UB", std::nullopt};
    if (!(w.V * A == B * w.V))
        return {false, "VA = BV", std::nullopt};
    return {};
}

} // namespace nilk
