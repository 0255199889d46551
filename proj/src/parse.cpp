#include "c2q/parse.hpp"

#include "c2q/error.hpp"

#include <cctype>

namespace c2q {

namespace {

class Parser {
public:
    Parser(const std::string& text, const FieldCtx& field) : s_(text), f_(field) {}

    [[noreturn]] void fail(const std::string& msg, std::size_t at) const
    {
        int line = 1, col = 1;
        for (std::size_t i = 0; i < at && i < s_.size(); ++i) {
            if (s_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(msg, line, col);
    }
    [[noreturn]] void fail(const std::string& msg) const { fail(msg, pos_); }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    bool at_end()
    {
        skip();
        return pos_ >= s_.size();
    }
    char peek()
    {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool looking_at(const std::string& tok)
    {
        skip();
        return s_.compare(pos_, tok.size(), tok) == 0;
    }
    bool accept(const std::string& tok)
    {
        if (!looking_at(tok))
            return false;
        pos_ += tok.size();
        return true;
    }
    void expect(const std::string& tok)
    {
        if (!accept(tok))
            fail("expected '" + tok + "'");
    }
    void finish()
    {
        if (!at_end())
            fail(std::string("unexpected '") + s_[pos_] + "'");
    }

    // ------------------------------------------------ elements

    Elem sum()
    {
        Elem acc = product();
        while (peek() == '+' || peek() == '-') {
            ++pos_;
            acc += product();
        }
        return acc;
    }

    Elem product()
    {
        Elem acc = power();
        for (;;) {
            const char c = peek();
            if (c != '*' && c != '/')
                return acc;
            // a '*' before a form atom ends the scalar of a scaled form
            if (c == '*' && stop_before_form_) {
                const std::size_t save = pos_;
                ++pos_;
                const char n = peek();
                const bool form_next = n == '[' || n == '<' || (n == 'H' && !is_identifier_char(pos_ + 1));
                pos_ = save;
                if (form_next)
                    return acc;
            }
            ++pos_;
            const std::size_t at = pos_;
            Elem rhs = power();
            if (c == '*') {
                acc *= rhs;
            } else {
                if (rhs.is_zero()) {
                    skip();
                    throw Error(ErrorCode::ZeroDenominator, "division by zero at column " + std::to_string(at + 1));
                }
                acc = acc / rhs;
            }
        }
    }

    Elem power()
    {
        const std::size_t at = pos_;
        Elem base = atom();
        if (!accept("^"))
            return base;
        skip();
        bool neg = false;
        if (pos_ < s_.size() && s_[pos_] == '-') {
            neg = true;
            ++pos_;
        }
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected an integer exponent");
        if (pos_ - start > 9)
            fail("exponent too large", start);
        long e = std::stol(s_.substr(start, pos_ - start));
        if (neg) {
            if (base.is_zero())
                throw Error(ErrorCode::ZeroDenominator,
                            "negative power of zero at column " + std::to_string(at + 1));
            e = -e;
        }
        return base.pow(e);
    }

    Elem atom()
    {
        skip();
        if (pos_ >= s_.size())
            fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            const bool saved = stop_before_form_;
            stop_before_form_ = false;
            Elem e = sum();
            stop_before_form_ = saved;
            expect(")");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            const std::string num = s_.substr(start, pos_ - start);
            if (num == "0")
                return Elem::zero(f_);
            if (num == "1")
                return Elem::one(f_);
            fail("only the constants 0 and 1 are allowed", start);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (is_identifier_char(pos_))
                ++pos_;
            const std::string id = s_.substr(start, pos_ - start);
            const auto& vars = f_.vars();
            for (std::size_t i = 0; i < vars.size(); ++i)
                if (vars[i] == id)
                    return Elem::variable(f_, i);
            if (id == "g") {
                if (f_.k() == 1)
                    fail("'g' needs an extension GF(2^k) with k > 1", start);
                return Elem::constant(f_, f_.base().generator());
            }
            fail("unknown identifier '" + id + "' over " + f_.spec(), start);
        }
        fail(std::string("unexpected '") + c + "'");
    }

    bool is_identifier_char(std::size_t i) const
    {
        return i < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i])) || s_[i] == '_');
    }

    Elem element()
    {
        const bool saved = stop_before_form_;
        stop_before_form_ = false;
        Elem e = sum();
        stop_before_form_ = saved;
        return e;
    }

    // ------------------------------------------------ forms

    // after '<<': the slots and the closing bracket kind
    std::pair<std::vector<Elem>, bool> pfister_slots()
    {
        std::vector<Elem> slots{element()};
        while (accept(","))
            slots.push_back(element());
        if (accept("]]"))
            return {std::move(slots), true};
        if (accept(">>"))
            return {std::move(slots), false};
        fail("expected ']]' or '>>'");
    }

    PfisterQ quadratic_pfister(std::vector<Elem> slots) const
    {
        Elem q = std::move(slots.back());
        slots.pop_back();
        return PfisterQ(f_, std::move(slots), std::move(q));
    }

    QuadForm form()
    {
        QuadForm acc = term();
        while (accept("+"))
            acc = orth_sum(acc, term());
        return acc;
    }

    QuadForm term()
    {
        if (looking_at("<<")) {
            const std::size_t at = pos_;
            pos_ += 2;
            auto [slots, quadratic] = pfister_slots();
            if (quadratic)
                return quadratic_pfister(std::move(slots)).expand();
            if (!accept("*"))
                fail("a bilinear Pfister form needs a quadratic factor '* q'", at);
            return tensor_bq(PfisterB(f_, std::move(slots)).expand(), form_atom());
        }
        const char c = peek();
        if (c == '[' || c == '(' || (c == 'H' && !is_identifier_char(pos_ + 1))) {
            if (c == '(') {
                // either a parenthesized form or a parenthesized scalar
                const std::size_t save = pos_;
                try {
                    return form_atom();
                } catch (const ParseError&) {
                    pos_ = save;
                }
            } else {
                return form_atom();
            }
        }
        if (c == '0' && !is_identifier_char(pos_ + 1)) {
            const std::size_t save = pos_;
            ++pos_;
            if (peek() != '*' && peek() != '/' && peek() != '^')
                return QuadForm(f_);
            pos_ = save;
        }
        stop_before_form_ = true;
        const std::size_t at = pos_;
        Elem scalar = sum();
        stop_before_form_ = false;
        if (!accept("*"))
            fail("expected '*' and a form after the scalar");
        if (scalar.is_zero())
            throw Error(ErrorCode::ZeroScalar, "zero scalar at column " + std::to_string(at + 1));
        if (looking_at("<<")) {
            pos_ += 2;
            auto [slots, quadratic] = pfister_slots();
            if (!quadratic)
                fail("expected a quadratic Pfister form");
            return quadratic_pfister(std::move(slots)).expand().scaled(scalar);
        }
        return form_atom().scaled(scalar);
    }

    QuadForm form_atom()
    {
        if (accept("[")) {
            Elem a = element();
            expect(",");
            Elem b = element();
            expect("]");
            return QuadForm::binary(f_, a, b);
        }
        if (accept("<<")) {
            auto [slots, quadratic] = pfister_slots();
            if (!quadratic)
                fail("expected a quadratic Pfister form");
            return quadratic_pfister(std::move(slots)).expand();
        }
        if (peek() == 'H' && !is_identifier_char(pos_ + 1)) {
            ++pos_;
            return QuadForm::hyperbolic(f_, 1);
        }
        if (accept("(")) {
            QuadForm q = form();
            expect(")");
            return q;
        }
        fail("expected a form");
    }

    PfisterQ pfister_only()
    {
        expect("<<");
        auto [slots, quadratic] = pfister_slots();
        if (!quadratic)
            fail("expected a quadratic Pfister form ending in ']]'");
        return quadratic_pfister(std::move(slots));
    }

    Quaternion quaternion()
    {
        expect("[");
        Elem a = element();
        expect(",");
        Elem b = element();
        expect(")");
        return Quaternion(f_, a, b);
    }

private:
    const std::string& s_;
    const FieldCtx& f_;
    std::size_t pos_ = 0;
    bool stop_before_form_ = false;
};

} // namespace

Elem parse_element(const std::string& text, const FieldCtx& field)
{
    Parser p(text, field);
    Elem e = p.element();
    p.finish();
    return e;
}

QuadForm parse_form(const std::string& text, const FieldCtx& field)
{
    Parser p(text, field);
    QuadForm q = p.form();
    p.finish();
    return q;
}

PfisterQ parse_pfister(const std::string& text, const FieldCtx& field)
{
    Parser p(text, field);
    PfisterQ q = p.pfister_only();
    p.finish();
    return q;
}

Quaternion parse_quaternion(const std::string& text, const FieldCtx& field)
{
    Parser p(text, field);
    Quaternion q = p.quaternion();
    p.finish();
    return q;
}

std::vector<Elem> parse_element_list(const std::string& text, const FieldCtx& field)
{
    Parser p(text, field);
    std::vector<Elem> out;
    if (p.at_end())
        return out;
    out.push_back(p.element());
    while (p.accept(","))
        out.push_back(p.element());
    p.finish();
    return out;
}

} // namespace c2q
