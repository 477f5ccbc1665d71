#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "spj/rational.hpp"

namespace spj {

// A formal composite of exterior powers and tensor products of the standard
// representation H. Grammar:  S ::= H | Wedge(k, S) | Tensor(S1, ..., Sm)
//
// Normalizations applied by the factory functions:
//   - Wedge(1, S) collapses to S,
//   - Tensor factors that are themselves Tensor nodes are flattened,
//   - Tensor() with no factors is the scalar shape (degree 0).
class Shape {
public:
    enum class Kind { H, Wedge, Tensor };

    Kind kind = Kind::H;
    int power = 0;                 // Wedge only
    std::vector<Shape> children;   // Wedge: exactly one; Tensor: any number

    static Shape h() { return Shape{}; }

    static Shape wedge(int k, Shape inner);
    static Shape tensor(std::vector<Shape> factors);
    static Shape scalar() { return tensor({}); }
    static Shape flat(int k);  // H^{\otimes k}

    // Number of H-legs after full expansion.
    int degree() const;

    // Exact dimension over a genus-g symplectic space (dim H = 2g).
    Int dimension(int g) const;

    bool is_flat() const;  // Tensor of H factors only (includes scalar and H itself)

    bool operator==(const Shape& o) const;
    bool operator!=(const Shape& o) const { return !(*this == o); }

    // Round-trips through parse(). Prints wedge(3,H) as "w3".
    std::string str() const;
    static Shape parse(std::string_view text);
};

}  // namespace spj
