#include "qsp/parse.hpp"

#include <cctype>
#include <optional>

namespace qsp {

namespace {

std::optional<Scalar> as_scalar(const Element& e) {
    if (e.is_zero()) return Scalar();
    if (e.terms().size() == 1 && e.terms().begin()->first.empty()) return e.terms().begin()->second;
    return std::nullopt;
}

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    Element parse() {
        Element e = expr();
        skip();
        if (p_ != s_.size()) fail("unexpected '" + std::string(1, s_[p_]) + "'");
        return e;
    }

private:
    const std::string& s_;
    std::size_t p_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, p_); }
    [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const { throw ParseError(msg, at); }

    void skip() {
        while (p_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[p_]))) ++p_;
    }
    bool eat(char c) {
        skip();
        if (p_ < s_.size() && s_[p_] == c) {
            ++p_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    Element expr() {
        Element acc;
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        Element t = term();
        acc = neg ? -t : t;
        while (true) {
            if (eat('+')) acc += term();
            else if (eat('-')) acc -= term();
            else return acc;
        }
    }

    Element term() {
        Element acc = power();
        while (true) {
            if (eat('*')) {
                acc = acc * power();
            } else if (eat('/')) {
                std::size_t at = p_;
                auto d = as_scalar(power());
                if (!d) fail_at("division by a non-scalar", at);
                if (d->is_zero()) fail_at("division by zero", at);
                acc = acc * d->inverse();
            } else {
                return acc;
            }
        }
    }

    long integer() {
        skip();
        bool neg = false;
        if (p_ < s_.size() && (s_[p_] == '-' || s_[p_] == '+')) neg = s_[p_++] == '-';
        skip();
        if (p_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[p_]))) fail("expected an integer");
        long v = 0;
        while (p_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p_]))) {
            v = v * 10 + (s_[p_++] - '0');
            if (v > 1000000000L) fail("integer too large");
        }
        return neg ? -v : v;
    }

    Element power() {
        std::size_t at = (skip(), p_);
        Element a = atom();
        if (!eat('^')) return a;
        long e = integer();
        if (e > 10000 || e < -10000) fail_at("exponent out of range", at);
        if (e >= 0) return a.pow(static_cast<int>(e));
        if (auto s = as_scalar(a)) {
            if (s->is_zero()) fail_at("zero to a negative power", at);
            return Element(s->inverse().pow(static_cast<int>(-e)));
        }
        if (a.terms().size() == 1) {
            const auto& [w, c] = *a.terms().begin();
            if (c.is_one() && !w.empty()) {
                Word inv;
                for (auto it = w.rbegin(); it != w.rend(); ++it) {
                    Gen g = *it;
                    if (g == Gen::B0 || g == Gen::B1 || g == Gen::Bm1) fail_at("only D-generators and K have inverses", at);
                    inv.push_back(gen_inverse_of_d(g));
                }
                return Element::word(inv).pow(static_cast<int>(-e));
            }
        }
        fail_at("negative power of a non-invertible expression", at);
    }

    Element atom() {
        skip();
        if (p_ >= s_.size()) fail("unexpected end of input");
        char c = s_[p_];
        if (c == '(') {
            ++p_;
            Element e = expr();
            expect(')');
            return e;
        }
        if (c == '[') {
            ++p_;
            long n = integer();
            expect(']');
            return Element(qint(static_cast<int>(n)));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Element(Scalar(integer()));
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t at = p_;
            std::string id;
            while (p_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[p_]))) id += s_[p_++];
            if (id == "B" && p_ + 1 < s_.size() && s_[p_] == '-' && s_[p_ + 1] == '1') {
                p_ += 2;
                return Element(Gen::Bm1);
            }
            if (id == "q") return Element(Scalar::q(1));
            if (id == "i") return Element(Scalar::iota());
            if (id == "mu") return Element(Scalar::mu(1));
            if (id == "B1") return Element(Gen::B1);
            if (id == "Bm1") return Element(Gen::Bm1);
            if (id == "B0") return Element(Gen::B0);
            if (id == "Dd") return Element(Gen::Dd);
            if (id == "D1") return Element(Gen::D1);
            if (id == "DdInv") return Element(Gen::DdInv);
            if (id == "D1Inv") return Element(Gen::D1Inv);
            if (id == "X") return gen_X();
            if (id == "Y") return gen_Y();
            if (id == "Z") return gen_Z();
            if (id == "W") return gen_W();
            if (id == "K") return gen_K();
            if (id == "Kinv") return gen_Kinv();
            fail_at("unknown symbol '" + id + "'", at);
        }
        fail(std::string("unexpected '") + c + "'");
    }
};

}  // namespace

Element parse_element(const std::string& s) { return Parser(s).parse(); }

Scalar parse_scalar(const std::string& s) {
    auto v = as_scalar(parse_element(s));
    if (!v) throw ParseError("expected a scalar expression", 0);
    return *v;
}

}  // namespace qsp
