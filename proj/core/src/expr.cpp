#include "esymlab/expr.hpp"

#include <cctype>
#include <limits>
#include <sstream>

#include "esymlab/builtins.hpp"
#include "esymlab/error.hpp"

namespace esymlab {

ExprPtr ExprNode::integer(BigInt v) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::Integer;
    n->value = std::move(v);
    return n;
}

ExprPtr ExprNode::q() {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::Q;
    return n;
}

ExprPtr ExprNode::builtin(std::string name) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::Builtin;
    n->name = std::move(name);
    return n;
}

ExprPtr ExprNode::binary(ExprKind kind, ExprPtr lhs, ExprPtr rhs) {
    auto n = std::make_shared<ExprNode>();
    n->kind = kind;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}

ExprPtr ExprNode::power(ExprPtr base, std::uint64_t exponent) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprKind::Pow;
    n->lhs = std::move(base);
    n->exponent = exponent;
    return n;
}

bool structurally_equal(const ExprNode& a, const ExprNode& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case ExprKind::Integer: return a.value == b.value;
        case ExprKind::Q: return true;
        case ExprKind::Builtin: return a.name == b.name;
        case ExprKind::Pow: return a.exponent == b.exponent && structurally_equal(*a.lhs, *b.lhs);
        default: return structurally_equal(*a.lhs, *b.lhs) && structurally_equal(*a.rhs, *b.rhs);
    }
}

namespace {

// 1 - q  or  1 - q^a with a >= 1
bool one_minus_q_power(const ExprNode& n, std::uint64_t& a) {
    if (n.kind != ExprKind::Sub) return false;
    if (n.lhs->kind != ExprKind::Integer || n.lhs->value != 1) return false;
    const ExprNode& r = *n.rhs;
    if (r.kind == ExprKind::Q) {
        a = 1;
        return true;
    }
    if (r.kind == ExprKind::Pow && r.lhs->kind == ExprKind::Q && r.exponent >= 1) {
        a = r.exponent;
        return true;
    }
    return false;
}

bool collect_factors(const ExprNode& n, std::uint64_t multiplicity,
                     std::vector<DenominatorFactor>& out) {
    std::uint64_t a = 0;
    if (one_minus_q_power(n, a)) {
        out.push_back({a, multiplicity});
        return true;
    }
    if (n.kind == ExprKind::Pow) {
        if (n.exponent == 0) return false;
        std::uint64_t m;
        if (__builtin_mul_overflow(multiplicity, n.exponent, &m)) return false;
        return collect_factors(*n.lhs, m, out);
    }
    if (n.kind == ExprKind::Mul) {
        return collect_factors(*n.lhs, multiplicity, out) &&
               collect_factors(*n.rhs, multiplicity, out);
    }
    return false;
}

int precedence(ExprKind k) {
    switch (k) {
        case ExprKind::Add:
        case ExprKind::Sub: return 1;
        case ExprKind::Mul:
        case ExprKind::Div: return 2;
        case ExprKind::Pow: return 3;
        default: return 4;
    }
}

void print(const ExprNode& n, std::ostream& os) {
    auto child = [&os](const ExprNode& c, bool paren) {
        if (paren) os << '(';
        print(c, os);
        if (paren) os << ')';
    };
    switch (n.kind) {
        case ExprKind::Integer: os << n.value.get_str(); return;
        case ExprKind::Q: os << 'q'; return;
        case ExprKind::Builtin: os << '#' << n.name; return;
        case ExprKind::Pow:
            child(*n.lhs, precedence(n.lhs->kind) < 4);
            os << '^' << n.exponent;
            return;
        default: {
            const int p = precedence(n.kind);
            child(*n.lhs, precedence(n.lhs->kind) < p);
            os << (n.kind == ExprKind::Add   ? '+'
                   : n.kind == ExprKind::Sub ? '-'
                   : n.kind == ExprKind::Mul ? '*'
                                             : '/');
            child(*n.rhs, precedence(n.rhs->kind) <= p);
            return;
        }
    }
}

void collect_builtins(const ExprNode& n, std::vector<std::string>& out) {
    if (n.kind == ExprKind::Builtin) {
        for (const auto& s : out)
            if (s == n.name) return;
        out.push_back(n.name);
        return;
    }
    if (n.lhs) collect_builtins(*n.lhs, out);
    if (n.rhs) collect_builtins(*n.rhs, out);
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        skip_ws();
        if (pos_ < text_.size()) {
            fail(pos_, {"'+'", "'-'", "'*'", "'/'", "'^'", "end of input"},
                 std::string("unexpected '") + text_[pos_] + "'");
        }
        return e;
    }

private:
    [[noreturn]] void fail(std::size_t at, std::vector<std::string> expected,
                           const std::string& what) const {
        std::ostringstream msg;
        msg << "parse error at position " << at << ": " << what << "; expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) msg << (i ? ", " : "") << expected[i];
        throw ParseError(at, std::move(expected), msg.str());
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string describe_here() const {
        return pos_ < text_.size() ? std::string("unexpected '") + text_[pos_] + "'"
                                   : std::string("unexpected end of input");
    }

    std::string digits() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    ExprPtr expr() {
        ExprPtr lhs = term();
        for (;;) {
            if (accept('+')) {
                lhs = ExprNode::binary(ExprKind::Add, lhs, term());
            } else if (accept('-')) {
                lhs = ExprNode::binary(ExprKind::Sub, lhs, term());
            } else {
                return lhs;
            }
        }
    }

    ExprPtr term() {
        ExprPtr lhs = factor();
        for (;;) {
            if (accept('*')) {
                lhs = ExprNode::binary(ExprKind::Mul, lhs, factor());
            } else if (accept('/')) {
                skip_ws();
                const std::size_t at = pos_;
                ExprPtr divisor = factor();
                if (denominator_factors(*divisor).empty()) {
                    std::ostringstream shown;
                    print(*divisor, shown);
                    fail(at, {"(1-q^a)", "(1-q^a)^e", "a product of such factors"},
                         "divisor '" + shown.str() + "' is not a product of (1-q^a) powers");
                }
                lhs = ExprNode::binary(ExprKind::Div, lhs, divisor);
            } else {
                return lhs;
            }
        }
    }

    ExprPtr factor() {
        ExprPtr b = base();
        if (accept('^')) {
            skip_ws();
            const std::size_t at = pos_;
            std::string d = digits();
            if (d.empty()) fail(at, {"unsigned integer"}, describe_here());
            return ExprNode::power(b, parse_u64(d, at));
        }
        return b;
    }

    ExprPtr base() {
        skip_ws();
        const std::size_t at = pos_;
        if (accept('(')) {
            ExprPtr inner = expr();
            if (!accept(')')) {
                skip_ws();
                fail(pos_, {"')'", "'+'", "'-'", "'*'", "'/'", "'^'"}, describe_here());
            }
            return inner;
        }
        if (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == 'q') {
                ++pos_;
                return ExprNode::q();
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                return ExprNode::integer(BigInt(digits(), 10));
            }
            if (c == '#') {
                ++pos_;
                const std::size_t start = pos_;
                if (pos_ < text_.size() &&
                    (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                    while (pos_ < text_.size() &&
                           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                            text_[pos_] == '_'))
                        ++pos_;
                    return ExprNode::builtin(std::string(text_.substr(start, pos_ - start)));
                }
                fail(start, {"identifier"}, describe_here());
            }
        }
        fail(at, {"'('", "'q'", "unsigned integer", "'#'"}, describe_here());
    }

    std::uint64_t parse_u64(const std::string& d, std::size_t at) const {
        std::uint64_t v = 0;
        for (char c : d) {
            if (__builtin_mul_overflow(v, 10u, &v) ||
                __builtin_add_overflow(v, static_cast<std::uint64_t>(c - '0'), &v))
                fail(at, {"exponent below 2^64"}, "exponent too large");
        }
        return v;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

struct Evaluator {
    std::size_t order;
    const Ring& ring;
    const BuiltinResolver& resolver;

    TruncatedSeries eval(const ExprNode& n) const {
        switch (n.kind) {
            case ExprKind::Integer: return TruncatedSeries::constant(n.value, order, ring);
            case ExprKind::Q: return TruncatedSeries::monomial(1, 1, order, ring);
            case ExprKind::Builtin: {
                TruncatedSeries s = resolver(n.name, order, ring);
                if (s.order() < order)
                    throw std::logic_error("builtin #" + n.name + " returned a short series");
                if (!(s.ring() == ring)) throw RingMismatch("builtin #" + n.name + " has wrong ring");
                return s.order() == order ? s : s.truncated(order);
            }
            case ExprKind::Add: return eval(*n.lhs) + eval(*n.rhs);
            case ExprKind::Sub: return eval(*n.lhs) - eval(*n.rhs);
            case ExprKind::Mul: return eval(*n.lhs) * eval(*n.rhs);
            case ExprKind::Div: {
                TruncatedSeries s = eval(*n.lhs);
                for (const auto& f : denominator_factors(*n.rhs)) {
                    if (f.a > order) continue;  // 1/(1-q^a) ≡ 1 below q^a
                    for (std::uint64_t i = 0; i < f.e; ++i) s.divide_one_minus_q_pow(f.a);
                }
                return s;
            }
            case ExprKind::Pow: {
                if (n.lhs->kind == ExprKind::Q) {
                    return n.exponent <= order
                               ? TruncatedSeries::monomial(n.exponent, 1, order, ring)
                               : TruncatedSeries(order, ring);
                }
                return eval(*n.lhs).pow(n.exponent);
            }
        }
        throw std::logic_error("unknown expression node");
    }
};

}  // namespace

std::vector<DenominatorFactor> denominator_factors(const ExprNode& node) {
    std::vector<DenominatorFactor> out;
    if (!collect_factors(node, 1, out)) out.clear();
    return out;
}

std::string RationalExpr::to_string() const {
    std::ostringstream os;
    print(*root_, os);
    return os.str();
}

std::vector<std::string> RationalExpr::builtins() const {
    std::vector<std::string> out;
    collect_builtins(*root_, out);
    return out;
}

RationalExpr parse_expr(std::string_view text) { return RationalExpr(Parser(text).parse()); }

TruncatedSeries eval_expr(const RationalExpr& expr, std::size_t order, const Ring& ring,
                          const BuiltinResolver& resolver) {
    if (order == 0) throw std::invalid_argument("truncation order must be at least 1");
    return Evaluator{order, ring, resolver}.eval(expr.root());
}

TruncatedSeries eval_expr(const RationalExpr& expr, std::size_t order, const Ring& ring) {
    return eval_expr(expr, order, ring, BuiltinResolver(core_builtin));
}

}  // namespace esymlab
