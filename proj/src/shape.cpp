#include "spj/shape.hpp"

#include <cctype>
#include <stdexcept>

namespace spj {

Shape Shape::wedge(int k, Shape inner) {
    if (k < 1) throw std::invalid_argument("Shape::wedge requires k >= 1");
    if (k == 1) return inner;
    Shape s;
    s.kind = Kind::Wedge;
    s.power = k;
    s.children.push_back(std::move(inner));
    return s;
}

Shape Shape::tensor(std::vector<Shape> factors) {
    Shape s;
    s.kind = Kind::Tensor;
    for (auto& f : factors) {
        if (f.kind == Kind::Tensor) {
            for (auto& c : f.children) s.children.push_back(std::move(c));
        } else {
            s.children.push_back(std::move(f));
        }
    }
    if (s.children.size() == 1) return s.children[0];
    return s;
}

Shape Shape::flat(int k) {
    std::vector<Shape> fs(static_cast<size_t>(k), h());
    return tensor(std::move(fs));
}

int Shape::degree() const {
    switch (kind) {
        case Kind::H: return 1;
        case Kind::Wedge: return power * children[0].degree();
        case Kind::Tensor: {
            int d = 0;
            for (const auto& c : children) d += c.degree();
            return d;
        }
    }
    return 0;
}

static Int binom(const Int& n, int k) {
    if (k < 0) return 0;
    Int r = 1;
    for (int i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

Int Shape::dimension(int g) const {
    switch (kind) {
        case Kind::H: return 2 * g;
        case Kind::Wedge: return binom(children[0].dimension(g), power);
        case Kind::Tensor: {
            Int d = 1;
            for (const auto& c : children) d *= c.dimension(g);
            return d;
        }
    }
    return 0;
}

bool Shape::is_flat() const {
    if (kind == Kind::H) return true;
    if (kind != Kind::Tensor) return false;
    for (const auto& c : children)
        if (c.kind != Kind::H) return false;
    return true;
}

bool Shape::operator==(const Shape& o) const {
    if (kind != o.kind || power != o.power || children.size() != o.children.size()) return false;
    for (size_t i = 0; i < children.size(); ++i)
        if (!(children[i] == o.children[i])) return false;
    return true;
}

std::string Shape::str() const {
    switch (kind) {
        case Kind::H: return "H";
        case Kind::Wedge: {
            if (power == 3 && children[0].kind == Kind::H) return "w3";
            return "wedge(" + std::to_string(power) + "," + children[0].str() + ")";
        }
        case Kind::Tensor: {
            std::string s = "tensor(";
            for (size_t i = 0; i < children.size(); ++i) {
                if (i) s += ",";
                s += children[i].str();
            }
            return s + ")";
        }
    }
    return "?";
}

namespace {

struct Parser {
    std::string_view text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c))
            throw std::invalid_argument("shape parse error at offset " + std::to_string(pos) +
                                        ": expected '" + std::string(1, c) + "'");
    }

    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (start == pos)
            throw std::invalid_argument("shape parse error at offset " + std::to_string(pos));
        return std::string(text.substr(start, pos - start));
    }

    int integer() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos)
            throw std::invalid_argument("shape parse error: expected integer at offset " +
                                        std::to_string(pos));
        return std::stoi(std::string(text.substr(start, pos - start)));
    }

    Shape shape() {
        std::string id = ident();
        if (id == "H" || id == "h") return Shape::h();
        if (id == "w3") return Shape::wedge(3, Shape::h());
        if (id == "wedge") {
            expect('(');
            int k = integer();
            expect(',');
            Shape inner = shape();
            expect(')');
            return Shape::wedge(k, std::move(inner));
        }
        if (id == "tensor") {
            expect('(');
            std::vector<Shape> fs;
            fs.push_back(shape());
            while (eat(',')) fs.push_back(shape());
            expect(')');
            return Shape::tensor(std::move(fs));
        }
        throw std::invalid_argument("shape parse error: unknown token '" + id + "'");
    }
};

}  // namespace

Shape Shape::parse(std::string_view text) {
    Parser p{text};
    Shape s = p.shape();
    p.skip_ws();
    if (p.pos != text.size())
        throw std::invalid_argument("shape parse error: trailing input at offset " +
                                    std::to_string(p.pos));
    return s;
}

}  // namespace spj
