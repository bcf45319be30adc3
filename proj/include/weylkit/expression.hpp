#ifndef WEYLKIT_EXPRESSION_HPP
#define WEYLKIT_EXPRESSION_HPP

#include "weylkit/root_system.hpp"

#include <memory>
#include <string>
#include <string_view>

namespace weylkit {

// Syntax tree for module expressions:
//
//   atoms      k | St | L(a,b) | Nabla(a,b) | Delta(a,b) | T(a,b) | Q1(a,b) | chi(a,b)
//   operators  X * Y (tensor) | X ^[r] (Frobenius twist) | X + Y (direct sum)
//              n * X (scalar multiple) | dual(X) | parentheses
//
// Binding, tightest first: twist, tensor, scalar multiple, sum; * and + are
// left-associative.  Atom arguments take any rank >= 1; semantic constraints
// (dominance, restrictedness) are enforced at evaluation time, not here.
struct ModuleExpr;
using ModuleExprPtr = std::shared_ptr<const ModuleExpr>;

struct ModuleExpr {
    enum class Kind {
        Trivial,     // k
        Steinberg,   // St
        Simple,      // L(w)
        Costandard,  // Nabla(w)
        Standard,    // Delta(w)
        Tilting,     // T(w)
        Pim,         // Q1(w)
        WeylChar,    // chi(w)
        Tensor,      // lhs * rhs
        Twist,       // lhs ^[twist_power]
        Sum,         // lhs + rhs
        Scalar,      // scalar * lhs
        Dual,        // dual(lhs)
    };

    Kind kind;
    Weight weight;        // weighted atoms only
    int twist_power = 0;  // Twist only
    Int scalar;           // Scalar only
    ModuleExprPtr lhs, rhs;

    static ModuleExprPtr atom(Kind kind, Weight w);
    static ModuleExprPtr trivial();
    static ModuleExprPtr steinberg();
    static ModuleExprPtr tensor(ModuleExprPtr a, ModuleExprPtr b);
    static ModuleExprPtr twist(ModuleExprPtr a, int r);
    static ModuleExprPtr sum(ModuleExprPtr a, ModuleExprPtr b);
    static ModuleExprPtr scaled(Int n, ModuleExprPtr a);
    static ModuleExprPtr dual(ModuleExprPtr a);

    bool is_atom() const;
};

bool operator==(const ModuleExpr& a, const ModuleExpr& b);
inline bool operator!=(const ModuleExpr& a, const ModuleExpr& b) { return !(a == b); }

// Throws Error(SyntaxError) with the byte offset of the first bad token.
ModuleExprPtr parse_module_expression(std::string_view text);

// Canonical form: minimal parentheses, single spaces around * and +, atom
// arguments comma-separated without spaces.  parse/print round-trips exactly.
std::string to_string(const ModuleExpr& e);

// Shorthand for to_string(*parse_module_expression(text)).
std::string canonical_expression(std::string_view text);

}  // namespace weylkit

#endif
