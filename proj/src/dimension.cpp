#include "qcalc/dimension.hpp"

#include <cctype>

#include "qcalc/errors.hpp"

namespace qcalc {

std::string_view base_quantity_symbol(base_quantity q) {
    switch (q) {
        case base_quantity::length: return "L";
        case base_quantity::mass: return "M";
        case base_quantity::time: return "T";
        case base_quantity::current: return "I";
        case base_quantity::temperature: return "Theta";
        case base_quantity::amount: return "N";
        case base_quantity::intensity: return "J";
    }
    throw error("unknown base quantity");
}

dim_vec dim_vec::base(base_quantity q) {
    dim_vec out;
    out.exponents_[static_cast<std::size_t>(q)] = 1;
    return out;
}

dim_vec dim_vec::from_list(std::span<const int> exponents) {
    if (exponents.size() != base_quantity_count) return dim_vec();
    dim_vec out;
    for (std::size_t i = 0; i < base_quantity_count; ++i) out.exponents_[i] = exponents[i];
    return out;
}

dim_vec dim_vec::from_list_strict(std::span<const int> exponents) {
    if (exponents.size() != base_quantity_count)
        throw error("dimension list must have exactly 7 entries, got " +
                    std::to_string(exponents.size()));
    return from_list(exponents);
}

dim_vec operator*(const dim_vec& a, const dim_vec& b) {
    dim_vec out;
    for (std::size_t i = 0; i < base_quantity_count; ++i)
        if (__builtin_add_overflow(a.exponents_[i], b.exponents_[i], &out.exponents_[i]))
            throw arithmetic_overflow("dimension exponent overflow in product");
    return out;
}

dim_vec operator/(const dim_vec& a, const dim_vec& b) { return a * b.inverse(); }

dim_vec dim_vec::inverse() const {
    dim_vec out;
    for (std::size_t i = 0; i < base_quantity_count; ++i)
        if (__builtin_sub_overflow(0, exponents_[i], &out.exponents_[i]))
            throw arithmetic_overflow("dimension exponent overflow in inverse");
    return out;
}

dim_vec dim_vec::pow(int n) const {
    dim_vec out;
    for (std::size_t i = 0; i < base_quantity_count; ++i)
        if (__builtin_mul_overflow(exponents_[i], n, &out.exponents_[i]))
            throw arithmetic_overflow("dimension exponent overflow in power");
    return out;
}

bool dim_vec::is_base() const {
    int ones = 0;
    for (int e : exponents_) {
        if (e == 1)
            ++ones;
        else if (e != 0)
            return false;
    }
    return ones == 1;
}

std::string dim_vec::to_string() const {
    std::string out;
    for (base_quantity q : all_base_quantities) {
        int e = exponent(q);
        if (e == 0) continue;
        if (!out.empty()) out += "*";
        out += base_quantity_symbol(q);
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

struct dim_expr::node {
    kind k;
    base_quantity symbol = base_quantity::length;
    std::shared_ptr<const node> lhs;
    std::shared_ptr<const node> rhs;
    int exponent = 0;
};

dim_expr dim_expr::base(base_quantity q) {
    auto n = std::make_shared<node>();
    n->k = kind::base;
    n->symbol = q;
    return dim_expr(std::move(n));
}

dim_expr dim_expr::one() {
    auto n = std::make_shared<node>();
    n->k = kind::one;
    return dim_expr(std::move(n));
}

dim_expr dim_expr::times(dim_expr lhs, dim_expr rhs) {
    auto n = std::make_shared<node>();
    n->k = kind::times;
    n->lhs = std::move(lhs.node_);
    n->rhs = std::move(rhs.node_);
    return dim_expr(std::move(n));
}

dim_expr dim_expr::inv(dim_expr operand) {
    auto n = std::make_shared<node>();
    n->k = kind::inv;
    n->lhs = std::move(operand.node_);
    return dim_expr(std::move(n));
}

dim_expr dim_expr::pow(dim_expr operand, int exponent) {
    auto n = std::make_shared<node>();
    n->k = kind::pow;
    n->lhs = std::move(operand.node_);
    n->exponent = exponent;
    return dim_expr(std::move(n));
}

dim_expr::kind dim_expr::node_kind() const { return node_->k; }
base_quantity dim_expr::base_symbol() const { return node_->symbol; }

dim_expr dim_expr::lhs() const { return dim_expr(node_->lhs); }
dim_expr dim_expr::rhs() const { return dim_expr(node_->rhs); }
dim_expr dim_expr::operand() const { return lhs(); }
int dim_expr::exponent() const { return node_->exponent; }

dim_vec dim_expr::eval() const {
    const node* n = node_.get();
    switch (n->k) {
        case kind::base: return dim_vec::base(n->symbol);
        case kind::one: return dim_vec::one();
        case kind::times: return dim_expr(n->lhs).eval() * dim_expr(n->rhs).eval();
        case kind::inv: return dim_expr(n->lhs).eval().inverse();
        case kind::pow: return dim_expr(n->lhs).eval().pow(n->exponent);
    }
    throw error("corrupt dimension expression");
}

dim_expr dim_expr::normalise() const {
    dim_vec v = eval();
    dim_expr out = one();
    bool first = true;
    for (base_quantity q : all_base_quantities) {
        int e = v.exponent(q);
        if (e == 0) continue;
        dim_expr factor = e == 1 ? base(q) : pow(base(q), e);
        out = first ? factor : times(out, factor);
        first = false;
    }
    return out;
}

bool operator==(const dim_expr& a, const dim_expr& b) {
    const dim_expr::node* x = a.node_.get();
    const dim_expr::node* y = b.node_.get();
    if (x == y) return true;
    if (x->k != y->k) return false;
    switch (x->k) {
        case dim_expr::kind::one: return true;
        case dim_expr::kind::base: return x->symbol == y->symbol;
        case dim_expr::kind::times:
            return dim_expr(x->lhs) == dim_expr(y->lhs) && dim_expr(x->rhs) == dim_expr(y->rhs);
        case dim_expr::kind::inv: return dim_expr(x->lhs) == dim_expr(y->lhs);
        case dim_expr::kind::pow:
            return x->exponent == y->exponent && dim_expr(x->lhs) == dim_expr(y->lhs);
    }
    return false;
}

namespace {

std::string parenthesize_operand(const dim_expr& e) {
    bool atom = e.node_kind() == dim_expr::kind::base || e.node_kind() == dim_expr::kind::one;
    std::string body = e.to_string();
    return atom ? body : "(" + body + ")";
}

// Right operands of '*' and '/' take parentheses when they are products, so
// left associativity survives a reparse.
std::string parenthesize_rhs(const dim_expr& e) {
    std::string body = e.to_string();
    return e.node_kind() == dim_expr::kind::times ? "(" + body + ")" : body;
}

}  // namespace

std::string dim_expr::to_string() const {
    const node* n = node_.get();
    switch (n->k) {
        case kind::one: return "1";
        case kind::base: return std::string(base_quantity_symbol(n->symbol));
        case kind::times: {
            dim_expr right(n->rhs);
            // times(l, inv(r)) reads back as division
            if (right.node_kind() == kind::inv)
                return dim_expr(n->lhs).to_string() + "/" +
                       parenthesize_rhs(right.operand());
            return dim_expr(n->lhs).to_string() + "*" + parenthesize_rhs(right);
        }
        case kind::inv: return parenthesize_operand(dim_expr(n->lhs)) + "^-1";
        case kind::pow:
            return parenthesize_operand(dim_expr(n->lhs)) + "^" + std::to_string(n->exponent);
    }
    throw error("corrupt dimension expression");
}

namespace {

// Recursive-descent parser for the dimension grammar:
//   dexpr   := dterm (('*' | '/') dterm)*
//   dterm   := dfactor ('^' int)?
//   dfactor := 'L'|'M'|'T'|'I'|'Theta'|'N'|'J' | '1' | '(' dexpr ')'
class dim_parser {
public:
    explicit dim_parser(std::string_view text) : text_(text) {}

    dim_expr run() {
        dim_expr e = expr();
        skip_ws();
        if (pos_ != text_.size()) throw parse_error("unexpected trailing input", pos_);
        return e;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    dim_expr expr() {
        dim_expr out = term();
        for (;;) {
            if (eat('*'))
                out = dim_expr::times(out, term());
            else if (eat('/'))
                out = dim_expr::times(out, dim_expr::inv(term()));
            else
                return out;
        }
    }

    dim_expr term() {
        dim_expr f = factor();
        if (eat('^')) return dim_expr::pow(f, integer());
        return f;
    }

    dim_expr factor() {
        skip_ws();
        if (pos_ >= text_.size()) throw parse_error("expected dimension factor", pos_);
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            dim_expr e = expr();
            if (!eat(')')) throw parse_error("expected ')'", pos_);
            return e;
        }
        if (c == '1') {
            ++pos_;
            return dim_expr::one();
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            std::string_view word = text_.substr(start, pos_ - start);
            for (base_quantity q : all_base_quantities)
                if (word == base_quantity_symbol(q)) return dim_expr::base(q);
            throw parse_error("unknown dimension symbol '" + std::string(word) + "'", start);
        }
        throw parse_error(std::string("unexpected character '") + c + "'", pos_);
    }

    int integer() {
        skip_ws();
        std::size_t start = pos_;
        bool negative = false;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
            negative = text_[pos_] == '-';
            ++pos_;
        }
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw parse_error("expected integer exponent", start);
        long long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > 1000000) throw parse_error("exponent out of range", start);
            ++pos_;
        }
        return static_cast<int>(negative ? -value : value);
    }
};

}  // namespace

dim_expr dim_expr::parse(std::string_view text) { return dim_parser(text).run(); }

}  // namespace qcalc
