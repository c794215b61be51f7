#include "qcalc/qexpr.hpp"

#include <cctype>
#include <optional>
#include <utility>
#include <vector>

#include "qcalc/errors.hpp"

namespace qcalc {

struct qexpr::node {
    kind k;
    exact_scalar value;          // number
    system_id system;            // number default / unit system / convert target
    bool qualified = false;      // unit spelled with an explicit "SYS:" qualifier
    std::string spelled;         // unit token as written (qualifier stripped)
    std::string canonical;       // primary registry name
    int prefix_exp10 = 0;
    std::shared_ptr<const node> lhs;
    std::shared_ptr<const node> rhs;
    long long exponent = 0;
    dim_expr target_dim;
};

qexpr qexpr::number(exact_scalar value, system_id default_system) {
    auto n = std::make_shared<node>();
    n->k = kind::number;
    n->value = std::move(value);
    n->system = std::move(default_system);
    return qexpr(std::move(n));
}

qexpr qexpr::unit(system_id sys, bool qualified, std::string spelled, std::string canonical,
                  int prefix_exponent10) {
    auto n = std::make_shared<node>();
    n->k = kind::unit;
    n->system = std::move(sys);
    n->qualified = qualified;
    n->spelled = std::move(spelled);
    n->canonical = std::move(canonical);
    n->prefix_exp10 = prefix_exponent10;
    return qexpr(std::move(n));
}

qexpr qexpr::mul(qexpr lhs, qexpr rhs) {
    auto n = std::make_shared<node>();
    n->k = kind::mul;
    n->lhs = std::move(lhs.node_);
    n->rhs = std::move(rhs.node_);
    return qexpr(std::move(n));
}

qexpr qexpr::div(qexpr lhs, qexpr rhs) {
    auto n = std::make_shared<node>();
    n->k = kind::div;
    n->lhs = std::move(lhs.node_);
    n->rhs = std::move(rhs.node_);
    return qexpr(std::move(n));
}

qexpr qexpr::pow(qexpr operand, long long exponent) {
    auto n = std::make_shared<node>();
    n->k = kind::pow;
    n->lhs = std::move(operand.node_);
    n->exponent = exponent;
    return qexpr(std::move(n));
}

qexpr qexpr::convert(qexpr operand, system_id target) {
    auto n = std::make_shared<node>();
    n->k = kind::convert;
    n->lhs = std::move(operand.node_);
    n->system = std::move(target);
    return qexpr(std::move(n));
}

qexpr qexpr::dnorm_cast(qexpr operand, dim_expr target) {
    auto n = std::make_shared<node>();
    n->k = kind::dnorm_cast;
    n->lhs = std::move(operand.node_);
    n->target_dim = std::move(target);
    return qexpr(std::move(n));
}

qexpr::kind qexpr::node_kind() const { return node_->k; }
const exact_scalar& qexpr::number_value() const { return node_->value; }
const system_id& qexpr::system() const { return node_->system; }
const std::string& qexpr::unit_spelling() const { return node_->spelled; }
const std::string& qexpr::unit_canonical() const { return node_->canonical; }
bool qexpr::unit_qualified() const { return node_->qualified; }
int qexpr::unit_prefix_exponent10() const { return node_->prefix_exp10; }
qexpr qexpr::lhs() const { return qexpr(node_->lhs); }
qexpr qexpr::rhs() const { return qexpr(node_->rhs); }
qexpr qexpr::operand() const { return qexpr(node_->lhs); }
long long qexpr::exponent() const { return node_->exponent; }
const dim_expr& qexpr::dnorm_target() const { return node_->target_dim; }

bool operator==(const qexpr& a, const qexpr& b) {
    const qexpr::node* x = a.node_.get();
    const qexpr::node* y = b.node_.get();
    if (x == y) return true;
    if (x->k != y->k) return false;
    switch (x->k) {
        case qexpr::kind::number: return x->value == y->value && x->system == y->system;
        case qexpr::kind::unit:
            return x->system == y->system && x->qualified == y->qualified &&
                   x->spelled == y->spelled && x->canonical == y->canonical &&
                   x->prefix_exp10 == y->prefix_exp10;
        case qexpr::kind::mul:
        case qexpr::kind::div:
            return qexpr(x->lhs) == qexpr(y->lhs) && qexpr(x->rhs) == qexpr(y->rhs);
        case qexpr::kind::pow:
            return x->exponent == y->exponent && qexpr(x->lhs) == qexpr(y->lhs);
        case qexpr::kind::convert:
            return x->system == y->system && qexpr(x->lhs) == qexpr(y->lhs);
        case qexpr::kind::dnorm_cast:
            return x->target_dim == y->target_dim && qexpr(x->lhs) == qexpr(y->lhs);
    }
    return false;
}

namespace {

// Exact decimal rendering for number literals. Literal tokens always have a
// 10-smooth denominator, so this terminates.
std::string decimal_literal(const rational& r) {
    if (r.is_integer()) return r.num().to_string();
    bigint den = r.den();
    std::size_t twos = 0, fives = 0;
    bigint two(2), five(5);
    while ((den % two).is_zero()) {
        den = den / two;
        ++twos;
    }
    while ((den % five).is_zero()) {
        den = den / five;
        ++fives;
    }
    if (den != bigint(1))
        throw error("cannot render " + r.to_string() + " as a decimal literal");
    std::size_t places = std::max(twos, fives);
    bigint scaled = r.num().abs() * bigint::pow10(places) / r.den();
    std::string digits = scaled.to_string();
    if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
    digits.insert(digits.size() - places, ".");
    return (r.sign() < 0 ? "-" : "") + digits;
}

enum class token_kind { number, ident, star, slash, caret, lparen, rparen, lbracket, rbracket, colon, end };

struct token {
    token_kind k;
    std::size_t pos = 0;
    std::string text;        // ident spelling
    exact_scalar value;      // number payload
};

class lexer {
public:
    explicit lexer(std::string_view text) : text_(text) {}

    token next() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ >= text_.size()) return {token_kind::end, start, "", {}};
        char c = text_[pos_];
        switch (c) {
            case '*': ++pos_; return {token_kind::star, start, "*", {}};
            case '/': ++pos_; return {token_kind::slash, start, "/", {}};
            case '^': ++pos_; return {token_kind::caret, start, "^", {}};
            case '(': ++pos_; return {token_kind::lparen, start, "(", {}};
            case ')': ++pos_; return {token_kind::rparen, start, ")", {}};
            case '[': ++pos_; return {token_kind::lbracket, start, "[", {}};
            case ']': ++pos_; return {token_kind::rbracket, start, "]", {}};
            case ':': ++pos_; return {token_kind::colon, start, ":", {}};
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            ((c == '-' || c == '+') && pos_ + 1 < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])) || text_[pos_ + 1] == '.')))
            return lex_number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return lex_ident();
        throw parse_error(std::string("unexpected character '") + c + "'", start);
    }

    // Raw-text slice, used to hand dnorm's bracket payload to the dimension
    // grammar without re-tokenizing it here.
    std::string_view slice_until(char close, std::size_t from, std::size_t* end) const {
        std::size_t i = from;
        while (i < text_.size() && text_[i] != close) ++i;
        if (i >= text_.size()) throw parse_error("missing ']'", from);
        *end = i;
        return text_.substr(from, i - from);
    }

    void seek(std::size_t pos) { pos_ = pos; }
    std::size_t position() const { return pos_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    token lex_number() {
        std::size_t start = pos_;
        if (text_[pos_] == '-' || text_[pos_] == '+') ++pos_;
        bool seen_digit = false, seen_point = false;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isdigit(static_cast<unsigned char>(c))) {
                seen_digit = true;
                ++pos_;
            } else if (c == '.' && !seen_point) {
                seen_point = true;
                ++pos_;
            } else {
                break;
            }
        }
        if (!seen_digit) throw parse_error("malformed number", start);
        // Exponent only when 'e'/'E' is followed by a (signed) digit, so that
        // "2 e" can still mean two elementary charges.
        if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
            std::size_t mark = pos_ + 1;
            if (mark < text_.size() && (text_[mark] == '+' || text_[mark] == '-')) ++mark;
            if (mark < text_.size() && std::isdigit(static_cast<unsigned char>(text_[mark]))) {
                pos_ = mark;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                    ++pos_;
            }
        }
        std::string_view body = text_.substr(start, pos_ - start);
        try {
            return {token_kind::number, start, std::string(body),
                    exact_scalar(rational::from_string(body))};
        } catch (const error& e) {
            throw parse_error(e.what(), start);
        }
    }

    token lex_ident() {
        std::size_t start = pos_;
        auto word_char = [&](char c) {
            return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
        };
        while (pos_ < text_.size() && word_char(text_[pos_])) ++pos_;
        // Hyphenated names like light-year; the grammar has no subtraction,
        // so '-' followed by a letter can only continue a name.
        while (pos_ + 1 < text_.size() && text_[pos_] == '-' &&
               std::isalpha(static_cast<unsigned char>(text_[pos_ + 1]))) {
            ++pos_;
            while (pos_ < text_.size() && word_char(text_[pos_])) ++pos_;
        }
        return {token_kind::ident, start, std::string(text_.substr(start, pos_ - start)), {}};
    }
};

class quantity_parser {
public:
    quantity_parser(std::string_view text, system_id default_system,
                    const system_registry& registry)
        : lexer_(text), default_system_(std::move(default_system)), registry_(registry) {
        advance();
    }

    qexpr run() {
        qexpr e = expr();
        expect(token_kind::end, "unexpected trailing input");
        return e;
    }

private:
    lexer lexer_;
    token current_;
    system_id default_system_;
    const system_registry& registry_;

    void advance() { current_ = lexer_.next(); }

    bool accept(token_kind k) {
        if (current_.k != k) return false;
        advance();
        return true;
    }

    void expect(token_kind k, const char* message) {
        if (current_.k != k) throw parse_error(message, current_.pos);
        advance();
    }

    qexpr expr() {
        qexpr out = term();
        for (;;) {
            if (accept(token_kind::star))
                out = qexpr::mul(out, term());
            else if (accept(token_kind::slash))
                out = qexpr::div(out, term());
            else
                return out;
        }
    }

    qexpr term() {
        bool exponent_taken = false;
        qexpr f = factor(&exponent_taken);
        if (current_.k == token_kind::caret) {
            if (exponent_taken)
                throw parse_error("unexpected second exponent", current_.pos);
            advance();
            return qexpr::pow(f, exponent_value());
        }
        return f;
    }

    qexpr factor(bool* exponent_taken) {
        switch (current_.k) {
            case token_kind::number: {
                exact_scalar value = current_.value;
                advance();
                // Juxtaposed unit: scaling, with any exponent bound to the unit.
                if (current_.k == token_kind::ident && current_.text != "to" &&
                    current_.text != "dnorm") {
                    qexpr u = unit_atom();
                    if (accept(token_kind::caret)) {
                        u = qexpr::pow(u, exponent_value());
                        *exponent_taken = true;
                    }
                    return qexpr::mul(qexpr::number(std::move(value), default_system_), u);
                }
                return qexpr::number(std::move(value), default_system_);
            }
            case token_kind::ident:
                if (current_.text == "to") return convert_factor();
                if (current_.text == "dnorm") return dnorm_factor();
                return unit_atom();
            case token_kind::lparen: {
                advance();
                qexpr e = expr();
                expect(token_kind::rparen, "expected ')'");
                return e;
            }
            default:
                throw parse_error("expected number, unit or '('", current_.pos);
        }
    }

    qexpr unit_atom() {
        if (current_.k != token_kind::ident)
            throw parse_error("expected unit name", current_.pos);
        token name = current_;
        advance();
        if (name.text == "pi") return qexpr::number(exact_scalar::pi(), default_system_);

        system_id sys = default_system_;
        bool qualified = false;
        std::string spelled = name.text;
        if (current_.k == token_kind::colon) {
            advance();
            if (current_.k != token_kind::ident)
                throw parse_error("expected unit name after ':'", current_.pos);
            sys = system_id{name.text};
            qualified = true;
            spelled = current_.text;
            advance();
        }

        std::string detail;
        auto resolved = resolve_unit(registry_, sys, spelled, &detail);
        if (!resolved) throw parse_error(detail, name.pos);
        return qexpr::unit(sys, qualified, spelled, resolved->entry.name,
                           resolved->prefix ? resolved->prefix->exponent10 : 0);
    }

    qexpr convert_factor() {
        advance();  // 'to'
        expect(token_kind::lbracket, "expected '[' after 'to'");
        if (current_.k != token_kind::ident)
            throw parse_error("expected system name", current_.pos);
        system_id target{current_.text};
        if (!registry_.contains(target))
            throw parse_error("unknown system '" + target.name() + "'", current_.pos);
        advance();
        expect(token_kind::rbracket, "expected ']'");
        expect(token_kind::lparen, "expected '(' after 'to[...]'");
        qexpr inner = expr();
        expect(token_kind::rparen, "expected ')'");
        return qexpr::convert(std::move(inner), std::move(target));
    }

    qexpr dnorm_factor() {
        advance();  // 'dnorm'
        if (current_.k != token_kind::lbracket)
            throw parse_error("expected '[' after 'dnorm'", current_.pos);
        std::size_t payload_start = current_.pos + 1;
        std::size_t payload_end = 0;
        std::string_view payload = lexer_.slice_until(']', payload_start, &payload_end);
        dim_expr target;
        try {
            target = dim_expr::parse(payload);
        } catch (const parse_error& e) {
            throw parse_error("in dnorm dimension: " + std::string(e.what()),
                              payload_start + e.position);
        }
        lexer_.seek(payload_end + 1);
        advance();
        expect(token_kind::lparen, "expected '(' after 'dnorm[...]'");
        qexpr inner = expr();
        expect(token_kind::rparen, "expected ')'");
        return qexpr::dnorm_cast(std::move(inner), std::move(target));
    }

    long long exponent_value() {
        if (current_.k != token_kind::number)
            throw parse_error("expected integer exponent", current_.pos);
        const exact_scalar& v = current_.value;
        if (v.pi_exponent() != 0 || !v.coeff().is_integer())
            throw parse_error("exponent must be an integer", current_.pos);
        if (v.coeff().num().digit_count() > 6)
            throw parse_error("exponent out of range", current_.pos);
        long long n = std::stoll(v.coeff().num().to_string());
        advance();
        return n;
    }
};

int precedence(qexpr::kind k) {
    switch (k) {
        case qexpr::kind::mul:
        case qexpr::kind::div: return 1;
        case qexpr::kind::pow: return 2;
        default: return 3;
    }
}

// Value of a subtree built only from numbers, pi, * / and ^. Such subtrees
// are abstract scalars and scale quantities from any system.
std::optional<exact_scalar> pure_scalar(const qexpr& e) {
    switch (e.node_kind()) {
        case qexpr::kind::number: return e.number_value();
        case qexpr::kind::mul: {
            auto l = pure_scalar(e.lhs());
            if (!l) return std::nullopt;
            auto r = pure_scalar(e.rhs());
            if (!r) return std::nullopt;
            return *l * *r;
        }
        case qexpr::kind::div: {
            auto l = pure_scalar(e.lhs());
            if (!l) return std::nullopt;
            auto r = pure_scalar(e.rhs());
            if (!r) return std::nullopt;
            return *l / *r;
        }
        case qexpr::kind::pow: {
            auto b = pure_scalar(e.operand());
            if (!b) return std::nullopt;
            return exact_scalar::pow(*b, e.exponent());
        }
        default: return std::nullopt;
    }
}

}  // namespace

qexpr parse_quantity_expr(std::string_view text, const system_id& default_system,
                          const system_registry& registry) {
    return quantity_parser(text, default_system, registry).run();
}

quantity eval(const qexpr& expr, const system_registry& registry) {
    switch (expr.node_kind()) {
        case qexpr::kind::number:
            return quantity(expr.number_value(), dim_vec::one(), expr.system());
        case qexpr::kind::unit: {
            auto entry = registry.find_unit(expr.system(), expr.unit_canonical());
            if (!entry)
                throw lookup_error("unit '" + expr.unit_canonical() + "' not found in system " +
                                   expr.system().name());
            int e = expr.unit_prefix_exponent10();
            if (e == 0) return entry->value;
            prefix_entry p{"", "", e};
            return apply_prefix(p, entry->value);
        }
        case qexpr::kind::mul: {
            qexpr l = expr.lhs(), r = expr.rhs();
            // Numeric subtrees scale rather than multiply, so they are
            // system-agnostic ("30 BIS:pound", "1/3 * BIS:yard" from an SI
            // default).
            if (auto ls = pure_scalar(l)) return scale(*ls, eval(r, registry));
            if (auto rs = pure_scalar(r)) return scale(*rs, eval(l, registry));
            return eval(l, registry) * eval(r, registry);
        }
        case qexpr::kind::div: {
            qexpr l = expr.lhs(), r = expr.rhs();
            if (auto rs = pure_scalar(r)) return scale(rs->inverse(), eval(l, registry));
            if (auto ls = pure_scalar(l)) return scale(*ls, eval(r, registry).inverse());
            return eval(l, registry) / eval(r, registry);
        }
        case qexpr::kind::pow:
            return eval(expr.operand(), registry).pow(expr.exponent());
        case qexpr::kind::convert:
            return qmc(eval(expr.operand(), registry), expr.system(), registry);
        case qexpr::kind::dnorm_cast:
            return dnorm(eval(expr.operand(), registry), expr.dnorm_target());
    }
    throw error("corrupt quantity expression");
}

std::string qexpr::to_string() const {
    auto wrap = [](const qexpr& child, int min_prec) {
        std::string body = child.to_string();
        return precedence(child.node_kind()) < min_prec ? "(" + body + ")" : body;
    };
    switch (node_kind()) {
        case kind::number: {
            const exact_scalar& v = number_value();
            if (v == exact_scalar::pi()) return "pi";
            if (v.pi_exponent() != 0)
                throw error("no literal form for " + v.to_exact_string());
            return decimal_literal(v.coeff());
        }
        case kind::unit:
            return unit_qualified() ? system().name() + ":" + unit_spelling() : unit_spelling();
        case kind::mul:
            return wrap(lhs(), 1) + " * " + wrap(rhs(), 2);
        case kind::div:
            return wrap(lhs(), 1) + " / " + wrap(rhs(), 2);
        case kind::pow:
            return wrap(operand(), 3) + "^" + std::to_string(exponent());
        case kind::convert:
            return "to[" + system().name() + "](" + operand().to_string() + ")";
        case kind::dnorm_cast:
            return "dnorm[" + dnorm_target().to_string() + "](" + operand().to_string() + ")";
    }
    throw error("corrupt quantity expression");
}

}  // namespace qcalc
