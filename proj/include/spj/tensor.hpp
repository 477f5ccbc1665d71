#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spj/guard.hpp"
#include "spj/shape.hpp"
#include "spj/symplectic.hpp"

namespace spj {

// A basis word: the H-legs of a shaped monomial, concatenated in shape layout
// order. Canonical form sorts every wedge layer strictly increasingly under
// the global basis order; the enclosing Tensor only ever stores canonical
// words with nonzero coefficients.
using Word = std::vector<Letter>;

using WeightVec = std::vector<int>;

std::string word_str(const Shape& shape, const Word& w);

// Sparse exact element of a Shape over a genus-g space.
class Tensor {
public:
    Tensor() = default;
    Tensor(Shape shape, int genus);

    // Canonicalizes the given legs; no-op if the word collapses to zero.
    static Tensor monomial(Shape shape, int genus, const Word& legs, const Rat& coeff = Rat(1));
    static Tensor zero(Shape shape, int genus) { return Tensor(std::move(shape), genus); }

    const Shape& shape() const { return shape_; }
    int genus() const { return genus_; }
    const std::map<Word, Rat>& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Word& canonical_legs, const Rat& coeff);       // no canonicalization
    void add_canonicalized(const Word& legs, const Rat& coeff);        // canonicalizes first

    Rat coefficient(const Word& legs) const;  // canonicalizes the query word

    Tensor& operator+=(const Tensor& o);
    Tensor& operator-=(const Tensor& o);
    Tensor operator+(const Tensor& o) const;
    Tensor operator-(const Tensor& o) const;
    Tensor operator*(const Rat& c) const;
    bool operator==(const Tensor& o) const;
    bool operator!=(const Tensor& o) const { return !(*this == o); }

    std::string str() const;

private:
    Shape shape_ = Shape::scalar();
    int genus_ = 0;
    std::map<Word, Rat> terms_;
};

// Canonicalize legs in place for the given shape. Returns the sign, or
// nullopt when a wedge layer repeats (the word is zero). Throws on a wedge
// layer of even inner degree with power >= 2; that graded case never occurs
// here and silently mishandling it would corrupt every sign downstream.
std::optional<int> canonicalize_word(const Shape& shape, Word& legs);

// omega = sum_i a_i ^ b_i in wedge(2,H).
Tensor omega_tensor(int g);

// Graded product. Shapes unify as wedge powers: equal shapes are both read
// as first powers (so w3 ^ w3 lands in wedge(2,w3)); otherwise both sides
// must be wedge powers of one common inner shape, with a bare S lifting to
// its first power (so wedge(2,H) ^ H lands in wedge(3,H)).
Tensor wedge(const Tensor& t1, const Tensor& t2);

// Bilinear tensor product; factor lists concatenate.
Tensor tensor_product(const Tensor& t1, const Tensor& t2);

// Image under the standard inclusion into H^{otimes degree}: every wedge
// layer is replaced by its full signed symmetrization.
Tensor expand(const Tensor& t, const ResourceGuard& guard = {});

// Flat contraction C_{i,j} (1-based, i < j): pairing of legs i and j times
// the word with both positions deleted in place; carries no positional sign.
Tensor contract(const Tensor& t, int i, int j);

// Contraction of two adjacent exterior-power-of-H factors of a tensor
// product, summed over all leg pairs. Each pair contributes the pairing
// with the sign of moving both chosen legs to the front of their factors.
Tensor contract_pair_exterior(const Tensor& t, int factor_index = 0);

// Wedge-multiplies two adjacent exterior-power-of-H factors into one.
Tensor multiply_exterior(const Tensor& t, int factor_index = 0);

// Applies m to every H-leg and renormalizes.
Tensor apply_map(const Tensor& t, const SymplecticMap& m);

// apply_map(t, m) - t, the group-ring element (m - 1) acting on t.
Tensor act_minus_one(const Tensor& t, const SymplecticMap& m);

// Exterior self-contraction wedge(k,H) -> wedge(k-2,H):
// sum_{i<j} (-1)^{i+j-1} <u_i,u_j> u_1 ^ ... ^ no i ... ^ no j ... ^ u_k.
Tensor exterior_self_contract(const Tensor& t);

// p(x) = x - 1/(g-1) C3(x) ^ omega on wedge(3,H); idempotent with kernel
// omega ^ H. Requires g >= 2.
Tensor traceless_project_p(const Tensor& t);

// p applied to each inner wedge(3,H) component of a wedge(n,w3) tensor.
Tensor traceless_project_p_factorwise(const Tensor& t);

// The wedge-square of c |-> omega ^ c: wedge(2,H) -> wedge(2,w3),
// x ^ y |-> (omega ^ x) ^ (omega ^ y).
Tensor insert_omega_sq(const Tensor& t);

// Multiplies all inner components of a wedge power of wedge powers of H
// down into a single exterior power of H (e.g. wedge(m,w3) -> wedge(3m,H)).
Tensor wedge_flatten(const Tensor& t);

// Splits off the first canonical component of the wedge-power factor at
// factor_index: wedge(m,S) -> S (x) wedge(m-1,S), coefficient preserved.
Tensor unfold_first_component(const Tensor& t, int factor_index = 0);

WeightVec word_weight(const Word& w, int g);
int weight_band(const WeightVec& w);  // sum of absolute entries

std::map<WeightVec, Tensor> torus_weight_components(const Tensor& t);

// True iff every size-r partial matching on the expanded positions
// contracts t to zero. Enumerates all matchings; evaluation may run in
// parallel, the answer is deterministic.
bool annihilated_by_r_contractions(const Tensor& t, int r, const ResourceGuard& guard = {});

}  // namespace spj
