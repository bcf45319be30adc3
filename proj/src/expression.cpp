#include "weylkit/expression.hpp"

#include <cctype>
#include <sstream>
#include <vector>

namespace weylkit {

ModuleExprPtr ModuleExpr::atom(Kind kind, Weight w) {
    auto e = std::make_shared<ModuleExpr>();
    e->kind = kind;
    e->weight = std::move(w);
    return e;
}

ModuleExprPtr ModuleExpr::trivial() { return atom(Kind::Trivial, Weight{}); }
ModuleExprPtr ModuleExpr::steinberg() { return atom(Kind::Steinberg, Weight{}); }

ModuleExprPtr ModuleExpr::tensor(ModuleExprPtr a, ModuleExprPtr b) {
    auto e = std::make_shared<ModuleExpr>();
    e->kind = Kind::Tensor;
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    return e;
}

ModuleExprPtr ModuleExpr::twist(ModuleExprPtr a, int r) {
    auto e = std::make_shared<ModuleExpr>();
    e->kind = Kind::Twist;
    e->twist_power = r;
    e->lhs = std::move(a);
    return e;
}

ModuleExprPtr ModuleExpr::sum(ModuleExprPtr a, ModuleExprPtr b) {
    auto e = std::make_shared<ModuleExpr>();
    e->kind = Kind::Sum;
    e->lhs = std::move(a);
    e->rhs = std::move(b);
    return e;
}

ModuleExprPtr ModuleExpr::scaled(Int n, ModuleExprPtr a) {
    auto e = std::make_shared<ModuleExpr>();
    e->kind = Kind::Scalar;
    e->scalar = std::move(n);
    e->lhs = std::move(a);
    return e;
}

ModuleExprPtr ModuleExpr::dual(ModuleExprPtr a) {
    auto e = std::make_shared<ModuleExpr>();
    e->kind = Kind::Dual;
    e->lhs = std::move(a);
    return e;
}

bool ModuleExpr::is_atom() const {
    switch (kind) {
        case Kind::Trivial:
        case Kind::Steinberg:
        case Kind::Simple:
        case Kind::Costandard:
        case Kind::Standard:
        case Kind::Tilting:
        case Kind::Pim:
        case Kind::WeylChar:
            return true;
        default:
            return false;
    }
}

bool operator==(const ModuleExpr& a, const ModuleExpr& b) {
    if (a.kind != b.kind) return false;
    if (a.weight != b.weight || a.twist_power != b.twist_power || a.scalar != b.scalar) return false;
    auto eq = [](const ModuleExprPtr& x, const ModuleExprPtr& y) {
        if (!x || !y) return !x && !y;
        return *x == *y;
    };
    return eq(a.lhs, b.lhs) && eq(a.rhs, b.rhs);
}

namespace {

enum class Tok { Ident, Integer, LParen, RParen, Comma, Star, Plus, Caret, LBracket, RBracket, End };

struct Token {
    Tok kind;
    std::size_t offset;
    std::string text;   // Ident
    std::int64_t value = 0;  // Integer
};

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isalnum(static_cast<unsigned char>(text[j]))) ++j;
            out.push_back({Tok::Ident, i, std::string(text.substr(i, j - i)), 0});
            i = j;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '-' && i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
            std::size_t j = i + (c == '-' ? 1 : 0);
            std::int64_t v = 0;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
                const std::int64_t digit = text[j] - '0';
                if (v > ((std::numeric_limits<std::int64_t>::max)() - digit) / 10)
                    throw Error(ErrorKind::SyntaxError, "integer literal too large", static_cast<std::int64_t>(i));
                v = v * 10 + digit;
                ++j;
            }
            out.push_back({Tok::Integer, i, {}, c == '-' ? -v : v});
            i = j;
            continue;
        }
        Tok k;
        switch (c) {
            case '(': k = Tok::LParen; break;
            case ')': k = Tok::RParen; break;
            case ',': k = Tok::Comma; break;
            case '*': k = Tok::Star; break;
            case '+': k = Tok::Plus; break;
            case '^': k = Tok::Caret; break;
            case '[': k = Tok::LBracket; break;
            case ']': k = Tok::RBracket; break;
            default:
                throw Error(ErrorKind::SyntaxError, std::string("unexpected character '") + c + "'",
                            static_cast<std::int64_t>(i));
        }
        out.push_back({k, i, {}, 0});
        ++i;
    }
    out.push_back({Tok::End, text.size(), {}, 0});
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

    ModuleExprPtr parse() {
        auto e = parse_sum();
        expect(Tok::End, "end of input");
        return e;
    }

private:
    const Token& peek(std::size_t ahead = 0) const {
        const std::size_t i = pos_ + ahead;
        return tokens_[i < tokens_.size() ? i : tokens_.size() - 1];
    }
    Token take() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorKind::SyntaxError, what, static_cast<std::int64_t>(peek().offset));
    }

    Token expect(Tok kind, const char* what) {
        if (peek().kind != kind) fail(std::string("expected ") + what);
        return take();
    }

    ModuleExprPtr parse_sum() {
        auto e = parse_scalar();
        while (peek().kind == Tok::Plus) {
            take();
            e = ModuleExpr::sum(std::move(e), parse_scalar());
        }
        return e;
    }

    ModuleExprPtr parse_scalar() {
        if (peek().kind == Tok::Integer && peek(1).kind == Tok::Star) {
            const auto n = take();
            take();  // '*'
            return ModuleExpr::scaled(Int(n.value), parse_scalar());
        }
        return parse_tensor();
    }

    ModuleExprPtr parse_tensor() {
        auto e = parse_postfix();
        while (peek().kind == Tok::Star) {
            take();
            e = ModuleExpr::tensor(std::move(e), parse_postfix());
        }
        return e;
    }

    ModuleExprPtr parse_postfix() {
        auto e = parse_primary();
        while (peek().kind == Tok::Caret) {
            take();
            expect(Tok::LBracket, "'['");
            const auto r = expect(Tok::Integer, "twist exponent");
            if (r.value < 1)
                throw Error(ErrorKind::SyntaxError, "twist exponent must be >= 1",
                            static_cast<std::int64_t>(r.offset));
            if (r.value > 62)
                throw Error(ErrorKind::SyntaxError, "twist exponent too large",
                            static_cast<std::int64_t>(r.offset));
            expect(Tok::RBracket, "']'");
            e = ModuleExpr::twist(std::move(e), static_cast<int>(r.value));
        }
        return e;
    }

    Weight parse_weight_args() {
        expect(Tok::LParen, "'('");
        std::vector<std::int64_t> coords;
        coords.push_back(expect(Tok::Integer, "weight coordinate").value);
        while (peek().kind == Tok::Comma) {
            take();
            coords.push_back(expect(Tok::Integer, "weight coordinate").value);
        }
        expect(Tok::RParen, "')'");
        return Weight(std::move(coords));
    }

    ModuleExprPtr parse_primary() {
        if (peek().kind == Tok::LParen) {
            take();
            auto e = parse_sum();
            expect(Tok::RParen, "')'");
            return e;
        }
        if (peek().kind != Tok::Ident) fail("expected a module expression");
        const auto name = take();
        if (name.text == "k") return ModuleExpr::trivial();
        if (name.text == "St") return ModuleExpr::steinberg();
        if (name.text == "dual") {
            expect(Tok::LParen, "'('");
            auto inner = parse_sum();
            expect(Tok::RParen, "')'");
            return ModuleExpr::dual(std::move(inner));
        }
        ModuleExpr::Kind kind;
        if (name.text == "L") kind = ModuleExpr::Kind::Simple;
        else if (name.text == "Nabla") kind = ModuleExpr::Kind::Costandard;
        else if (name.text == "Delta") kind = ModuleExpr::Kind::Standard;
        else if (name.text == "T") kind = ModuleExpr::Kind::Tilting;
        else if (name.text == "Q1") kind = ModuleExpr::Kind::Pim;
        else if (name.text == "chi") kind = ModuleExpr::Kind::WeylChar;
        else
            throw Error(ErrorKind::SyntaxError, "unknown name '" + name.text + "'",
                        static_cast<std::int64_t>(name.offset));
        return ModuleExpr::atom(kind, parse_weight_args());
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

// Binding strength used for minimal parenthesization.
int precedence(const ModuleExpr& e) {
    switch (e.kind) {
        case ModuleExpr::Kind::Sum: return 0;
        case ModuleExpr::Kind::Scalar: return 1;
        case ModuleExpr::Kind::Tensor: return 2;
        case ModuleExpr::Kind::Twist: return 3;
        default: return 4;
    }
}

void print(const ModuleExpr& e, std::ostringstream& os);

void print_child(const ModuleExpr& child, int min_prec, std::ostringstream& os) {
    const bool parens = precedence(child) < min_prec;
    if (parens) os << '(';
    print(child, os);
    if (parens) os << ')';
}

void print(const ModuleExpr& e, std::ostringstream& os) {
    using K = ModuleExpr::Kind;
    auto atom_with_weight = [&](const char* name) {
        os << name << '(';
        for (std::size_t i = 0; i < e.weight.size(); ++i) {
            if (i) os << ',';
            os << e.weight[i];
        }
        os << ')';
    };
    switch (e.kind) {
        case K::Trivial: os << 'k'; break;
        case K::Steinberg: os << "St"; break;
        case K::Simple: atom_with_weight("L"); break;
        case K::Costandard: atom_with_weight("Nabla"); break;
        case K::Standard: atom_with_weight("Delta"); break;
        case K::Tilting: atom_with_weight("T"); break;
        case K::Pim: atom_with_weight("Q1"); break;
        case K::WeylChar: atom_with_weight("chi"); break;
        case K::Tensor:
            print_child(*e.lhs, 2, os);
            os << " * ";
            print_child(*e.rhs, 3, os);  // right tensor child keeps explicit parens
            break;
        case K::Twist:
            print_child(*e.lhs, 3, os);
            os << "^[" << e.twist_power << ']';
            break;
        case K::Sum:
            print_child(*e.lhs, 0, os);
            os << " + ";
            print_child(*e.rhs, 1, os);
            break;
        case K::Scalar:
            os << e.scalar.str() << " * ";
            print_child(*e.lhs, 1, os);
            break;
        case K::Dual:
            os << "dual(";
            print(*e.lhs, os);
            os << ')';
            break;
    }
}

}  // namespace

ModuleExprPtr parse_module_expression(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const ModuleExpr& e) {
    std::ostringstream os;
    print(e, os);
    return os.str();
}

std::string canonical_expression(std::string_view text) {
    return to_string(*parse_module_expression(text));
}

}  // namespace weylkit
