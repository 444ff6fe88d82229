#ifndef ESYMLAB_EXPR_HPP
#define ESYMLAB_EXPR_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "esymlab/bigint.hpp"
#include "esymlab/series.hpp"

namespace esymlab {

// Grammar (whitespace-insensitive):
//   expr    := term (('+'|'-') term)*
//   term    := factor (('*'|'/') factor)*
//   factor  := base ('^' uint)?
//   base    := '(' expr ')' | 'q' | uint | '#' identifier
// A divisor must be (1 - q^a), a power of it, or a product of such powers.

enum class ExprKind { Integer, Q, Builtin, Add, Sub, Mul, Div, Pow };

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    ExprKind kind;
    BigInt value;               // Integer
    std::string name;           // Builtin, without '#'
    std::uint64_t exponent = 0;  // Pow
    ExprPtr lhs;                // binary operands; Pow base
    ExprPtr rhs;

    static ExprPtr integer(BigInt v);
    static ExprPtr q();
    static ExprPtr builtin(std::string name);
    static ExprPtr binary(ExprKind kind, ExprPtr lhs, ExprPtr rhs);
    static ExprPtr power(ExprPtr base, std::uint64_t exponent);
};

bool structurally_equal(const ExprNode& a, const ExprNode& b);

/// A denominator factor (1 - q^a)^e.
struct DenominatorFactor {
    std::uint64_t a;
    std::uint64_t e;
    friend bool operator==(const DenominatorFactor&, const DenominatorFactor&) = default;
};

/// Returns the factors of an admissible divisor, or an empty list if the node
/// is not of the form Π (1 - q^a)^e.
std::vector<DenominatorFactor> denominator_factors(const ExprNode& node);

class RationalExpr {
public:
    explicit RationalExpr(ExprPtr root) : root_(std::move(root)) {}

    const ExprNode& root() const { return *root_; }
    const ExprPtr& root_ptr() const { return root_; }

    /// Canonical text with minimal parentheses; parses back to an equal tree.
    std::string to_string() const;

    /// Names of referenced builtins, in order of first appearance.
    std::vector<std::string> builtins() const;

    friend bool operator==(const RationalExpr& a, const RationalExpr& b) {
        return structurally_equal(*a.root_, *b.root_);
    }

private:
    ExprPtr root_;
};

/// Throws ParseError carrying the 0-based offset and the expected-token set.
RationalExpr parse_expr(std::string_view text);

using BuiltinResolver =
    std::function<TruncatedSeries(const std::string& name, std::size_t order, const Ring& ring)>;

TruncatedSeries eval_expr(const RationalExpr& expr, std::size_t order, const Ring& ring,
                          const BuiltinResolver& resolver);

/// Uses the library's builtin series (see builtins.hpp).
TruncatedSeries eval_expr(const RationalExpr& expr, std::size_t order, const Ring& ring);

}  // namespace esymlab

#endif
