#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spj/rational.hpp"

namespace spj {

// Basis letters for a genus-g space: a_i <-> 2(i-1), b_i <-> 2(i-1)+1,
// i in 1..g. The induced numeric order a1 < b1 < a2 < b2 < ... is the one
// global order every canonical form downstream depends on.
using Letter = std::uint8_t;

inline Letter letter_a(int i) { return static_cast<Letter>(2 * (i - 1)); }
inline Letter letter_b(int i) { return static_cast<Letter>(2 * (i - 1) + 1); }
inline bool letter_is_a(Letter x) { return (x & 1u) == 0; }
inline int letter_index(Letter x) { return static_cast<int>(x / 2) + 1; }
std::string letter_name(Letter x);

// <a_i, b_i> = 1, <b_i, a_i> = -1, all other basis pairings vanish.
inline int pairing(Letter x, Letter y) {
    if ((x ^ y) != 1u) return 0;
    return letter_is_a(x) ? 1 : -1;
}

struct SymplecticSpace {
    int genus = 0;
    std::vector<Letter> basis;  // a1, b1, a2, b2, ...
};

// g >= 1; rejects the degenerate genus.
SymplecticSpace make_space(int g);

// Dense 2g x 2g rational matrix acting on basis coordinates; column x holds
// the image of basis letter x.
class SymplecticMap {
public:
    SymplecticMap() = default;
    explicit SymplecticMap(int g);

    static SymplecticMap identity(int g);

    int genus() const { return genus_; }
    int dim() const { return 2 * genus_; }

    Rat& at(int row, int col) { return m_[static_cast<size_t>(row) * dim() + col]; }
    const Rat& at(int row, int col) const { return m_[static_cast<size_t>(row) * dim() + col]; }

    // Nonzero entries of a column as (letter, coefficient) pairs.
    std::vector<std::pair<Letter, Rat>> column(Letter x) const;

    SymplecticMap compose(const SymplecticMap& other) const;  // this after other

    bool operator==(const SymplecticMap& o) const { return genus_ == o.genus_ && m_ == o.m_; }

private:
    int genus_ = 0;
    std::vector<Rat> m_;
};

// b_i -> b_i + a_j, b_j -> b_j + a_i, everything else fixed. Requires i != j.
SymplecticMap transvection_T(const SymplecticSpace& space, int i, int j);

// a_p -> a_p + a_q, b_q -> b_q - b_p, everything else fixed. Requires p != q.
SymplecticMap transvection_S(const SymplecticSpace& space, int p, int q);

// a_i -> t_i a_i, b_i -> (1/t_i) b_i. Requires all t_i nonzero.
SymplecticMap diagonal_map(const SymplecticSpace& space, const std::vector<Rat>& ts);

// Handle relabeling a_i -> a_{perm[i-1]}, b_i -> b_{perm[i-1]} for a
// permutation of 1..g.
SymplecticMap relabeling_map(const SymplecticSpace& space, const std::vector<int>& perm);

// True iff pairing(Mu, Mv) = pairing(u, v) for all basis letters u, v.
bool is_symplectic(const SymplecticMap& m);

// Determinant of the 2g x 2g Gram matrix of the pairing (always +1 for the
// canonical basis; exposed for the nondegeneracy test).
Rat pairing_matrix_det(const SymplecticSpace& space);

}  // namespace spj
