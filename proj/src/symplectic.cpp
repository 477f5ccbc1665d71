#include "spj/symplectic.hpp"

#include <stdexcept>

namespace spj {

std::string letter_name(Letter x) {
    return (letter_is_a(x) ? "a" : "b") + std::to_string(letter_index(x));
}

SymplecticSpace make_space(int g) {
    if (g < 1) throw std::invalid_argument("make_space: genus must be >= 1");
    SymplecticSpace s;
    s.genus = g;
    s.basis.reserve(static_cast<size_t>(2 * g));
    for (int i = 1; i <= g; ++i) {
        s.basis.push_back(letter_a(i));
        s.basis.push_back(letter_b(i));
    }
    return s;
}

SymplecticMap::SymplecticMap(int g) : genus_(g), m_(static_cast<size_t>(2 * g) * (2 * g), Rat(0)) {}

SymplecticMap SymplecticMap::identity(int g) {
    SymplecticMap m(g);
    for (int i = 0; i < 2 * g; ++i) m.at(i, i) = 1;
    return m;
}

std::vector<std::pair<Letter, Rat>> SymplecticMap::column(Letter x) const {
    std::vector<std::pair<Letter, Rat>> out;
    for (int r = 0; r < dim(); ++r) {
        const Rat& v = at(r, x);
        if (v != 0) out.emplace_back(static_cast<Letter>(r), v);
    }
    return out;
}

SymplecticMap SymplecticMap::compose(const SymplecticMap& other) const {
    if (genus_ != other.genus_) throw std::invalid_argument("compose: genus mismatch");
    SymplecticMap r(genus_);
    int n = dim();
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const Rat& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < n; ++j) {
                const Rat& b = other.at(k, j);
                if (b != 0) r.at(i, j) += a * b;
            }
        }
    return r;
}

SymplecticMap transvection_T(const SymplecticSpace& space, int i, int j) {
    if (i == j) throw std::invalid_argument("transvection_T: requires i != j");
    if (i < 1 || j < 1 || i > space.genus || j > space.genus)
        throw std::invalid_argument("transvection_T: index out of range");
    SymplecticMap m = SymplecticMap::identity(space.genus);
    m.at(letter_a(j), letter_b(i)) = 1;
    m.at(letter_a(i), letter_b(j)) = 1;
    return m;
}

SymplecticMap transvection_S(const SymplecticSpace& space, int p, int q) {
    if (p == q) throw std::invalid_argument("transvection_S: requires p != q");
    if (p < 1 || q < 1 || p > space.genus || q > space.genus)
        throw std::invalid_argument("transvection_S: index out of range");
    SymplecticMap m = SymplecticMap::identity(space.genus);
    m.at(letter_a(q), letter_a(p)) = 1;
    m.at(letter_b(p), letter_b(q)) = -1;
    return m;
}

SymplecticMap diagonal_map(const SymplecticSpace& space, const std::vector<Rat>& ts) {
    if (static_cast<int>(ts.size()) != space.genus)
        throw std::invalid_argument("diagonal_map: need one scale per handle");
    SymplecticMap m(space.genus);
    for (int i = 1; i <= space.genus; ++i) {
        const Rat& t = ts[static_cast<size_t>(i - 1)];
        if (t == 0) throw std::invalid_argument("diagonal_map: zero scale");
        m.at(letter_a(i), letter_a(i)) = t;
        m.at(letter_b(i), letter_b(i)) = 1 / t;
    }
    return m;
}

SymplecticMap relabeling_map(const SymplecticSpace& space, const std::vector<int>& perm) {
    int g = space.genus;
    if (static_cast<int>(perm.size()) != g)
        throw std::invalid_argument("relabeling_map: permutation size mismatch");
    std::vector<bool> seen(static_cast<size_t>(g) + 1, false);
    for (int v : perm) {
        if (v < 1 || v > g || seen[static_cast<size_t>(v)])
            throw std::invalid_argument("relabeling_map: not a permutation of 1..g");
        seen[static_cast<size_t>(v)] = true;
    }
    SymplecticMap m(g);
    for (int i = 1; i <= g; ++i) {
        int t = perm[static_cast<size_t>(i - 1)];
        m.at(letter_a(t), letter_a(i)) = 1;
        m.at(letter_b(t), letter_b(i)) = 1;
    }
    return m;
}

bool is_symplectic(const SymplecticMap& m) {
    int n = m.dim();
    for (int u = 0; u < n; ++u) {
        auto cu = m.column(static_cast<Letter>(u));
        for (int v = 0; v < n; ++v) {
            auto cv = m.column(static_cast<Letter>(v));
            Rat acc(0);
            for (const auto& [lu, au] : cu)
                for (const auto& [lv, av] : cv) {
                    int p = pairing(lu, lv);
                    if (p != 0) acc += au * av * p;
                }
            if (acc != pairing(static_cast<Letter>(u), static_cast<Letter>(v))) return false;
        }
    }
    return true;
}

Rat pairing_matrix_det(const SymplecticSpace& space) {
    int n = 2 * space.genus;
    std::vector<Rat> a(static_cast<size_t>(n) * n, Rat(0));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            a[static_cast<size_t>(u) * n + v] = pairing(static_cast<Letter>(u), static_cast<Letter>(v));
    Rat det(1);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (a[static_cast<size_t>(r) * n + c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != c) {
            for (int k = 0; k < n; ++k)
                std::swap(a[static_cast<size_t>(piv) * n + k], a[static_cast<size_t>(c) * n + k]);
            det = -det;
        }
        Rat p = a[static_cast<size_t>(c) * n + c];
        det *= p;
        for (int r = c + 1; r < n; ++r) {
            Rat f = a[static_cast<size_t>(r) * n + c] / p;
            if (f == 0) continue;
            for (int k = c; k < n; ++k)
                a[static_cast<size_t>(r) * n + k] -= f * a[static_cast<size_t>(c) * n + k];
        }
    }
    return det;
}

}  // namespace spj
