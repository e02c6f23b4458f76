#include "motivic/expr.hpp"

#include <cctype>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "motivic/error.hpp"

namespace motivic {

namespace {

struct Token {
    enum class Kind { plus, star, caret, lparen, rparen, comma, nat, ident, end };
    Kind kind = Kind::end;
    std::size_t offset = 0;
    std::string_view text{};
    Nat value = 0;
};

const char* token_name(Token::Kind k) {
    switch (k) {
        case Token::Kind::plus: return "'+'";
        case Token::Kind::star: return "'*'";
        case Token::Kind::caret: return "'^'";
        case Token::Kind::lparen: return "'('";
        case Token::Kind::rparen: return "')'";
        case Token::Kind::comma: return "','";
        case Token::Kind::nat: return "a number";
        case Token::Kind::ident: return "a name";
        case Token::Kind::end: return "end of input";
    }
    return "?";
}

class Lexer {
  public:
    explicit Lexer(std::string_view s) : s_(s) { next(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        next();
        return t;
    }

  private:
    void next() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        tok_ = Token{};
        tok_.offset = pos_;
        if (pos_ == s_.size()) {
            tok_.kind = Token::Kind::end;
            return;
        }
        char c = s_[pos_];
        switch (c) {
            case '+': tok_.kind = Token::Kind::plus; ++pos_; return;
            case '*': tok_.kind = Token::Kind::star; ++pos_; return;
            case '^': tok_.kind = Token::Kind::caret; ++pos_; return;
            case '(': tok_.kind = Token::Kind::lparen; ++pos_; return;
            case ')': tok_.kind = Token::Kind::rparen; ++pos_; return;
            case ',': tok_.kind = Token::Kind::comma; ++pos_; return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            Nat v = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                Nat digit = Nat(s_[pos_] - '0');
                if (v > (~Nat(0) - digit) / 10)
                    throw SyntaxError("integer literal does not fit in 64 bits", start,
                                      "a smaller number");
                v = v * 10 + digit;
                ++pos_;
            }
            tok_.kind = Token::Kind::nat;
            tok_.value = v;
            tok_.text = s_.substr(start, pos_ - start);
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            tok_.kind = Token::Kind::ident;
            tok_.text = s_.substr(start, pos_ - start);
            return;
        }
        throw SyntaxError(std::string("unexpected character '") + c + "'", pos_,
                          "tau, rho, 0, 1, Q, P, '+', '*', '^', '(', ')' or ','");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    Token tok_{};
};

constexpr const char* kFactorExpected = "tau, rho, 0, 1, Q or P";

class Parser {
  public:
    explicit Parser(std::string_view s) : lx_(s) {}

    Expr parse_element() {
        Expr out;
        out.terms.push_back(parse_term());
        while (lx_.peek().kind == Token::Kind::plus) {
            lx_.take();
            out.terms.push_back(parse_term());
        }
        if (lx_.peek().kind != Token::Kind::end)
            throw SyntaxError(std::string("unexpected ") + token_name(lx_.peek().kind),
                              lx_.peek().offset, "'+' or end of input");
        return out;
    }

    Seq parse_bare_seq() {
        std::vector<Nat> entries;
        if (lx_.peek().kind == Token::Kind::lparen) {
            lx_.take();
            entries = natlist_entries();
            expect(Token::Kind::rparen, "')'");
        } else if (lx_.peek().kind != Token::Kind::end) {
            entries = natlist_entries();
        }
        if (lx_.peek().kind != Token::Kind::end)
            throw SyntaxError(std::string("unexpected ") + token_name(lx_.peek().kind),
                              lx_.peek().offset, "end of input");
        return Seq(std::move(entries));
    }

  private:
    Term parse_term() {
        Term t;
        t.factors.push_back(parse_factor());
        for (;;) {
            if (lx_.peek().kind == Token::Kind::star) {
                lx_.take();
                t.factors.push_back(parse_factor());
                continue;
            }
            if (starts_factor(lx_.peek())) {
                t.factors.push_back(parse_factor());
                continue;
            }
            return t;
        }
    }

    static bool starts_factor(const Token& t) {
        return t.kind == Token::Kind::nat || t.kind == Token::Kind::ident;
    }

    Factor parse_factor() {
        const Token& t = lx_.peek();
        if (t.kind == Token::Kind::nat) {
            Token n = lx_.take();
            if (n.value == 0) return Factor{Factor::Kind::zero, 1, {}, {}};
            if (n.value == 1) return Factor{Factor::Kind::one, 1, {}, {}};
            throw SyntaxError("only 0 and 1 are numeric factors", n.offset,
                              "0, 1, tau^k, rho^k, Q or P");
        }
        if (t.kind != Token::Kind::ident)
            throw SyntaxError(std::string("expected a factor, found ") + token_name(t.kind),
                              t.offset, kFactorExpected);
        if (t.text == "tau" || t.text == "rho") {
            Token name = lx_.take();
            Nat exp = 1;
            if (lx_.peek().kind == Token::Kind::caret) {
                lx_.take();
                exp = expect(Token::Kind::nat, "an exponent").value;
            }
            return Factor{name.text == "tau" ? Factor::Kind::tau : Factor::Kind::rho, exp, {}, {}};
        }
        if (t.text == "Q") return parse_qp();
        if (t.text == "P") {
            Factor f{Factor::Kind::basis, 1, {}, {}};
            f.p = parse_p_list();
            return f;
        }
        throw SyntaxError("unknown name '" + std::string(t.text) + "'", t.offset, kFactorExpected);
    }

    // Q "(" natlist ")" or Q i (the i-th generator), optionally followed by a
    // P part; the pair is one basis factor, matching the Q(E)P(R) notation.
    Factor parse_qp() {
        lx_.take();
        Factor f{Factor::Kind::basis, 1, {}, {}};
        if (lx_.peek().kind == Token::Kind::nat) {
            Token idx = lx_.take();
            if (idx.value >= seq_cap())
                throw SyntaxError("generator index exceeds the sequence cap", idx.offset,
                                  "an index below the cap");
            f.q = SeqE(unit_seq(1, std::size_t(idx.value)));
        } else if (lx_.peek().kind == Token::Kind::lparen) {
            lx_.take();
            std::vector<std::pair<Nat, std::size_t>> entries = natlist();
            expect(Token::Kind::rparen, "')'");
            for (const auto& [value, offset] : entries) {
                if (value > 1)
                    throw SyntaxError(
                        "Q-list entries are exponents of the exterior generators and must be 0 "
                        "or 1 (Q-lists start at index 0, P-lists at index 1)",
                        offset, "0 or 1");
            }
            std::vector<Nat> raw;
            raw.reserve(entries.size());
            for (const auto& entry : entries) raw.push_back(entry.first);
            f.q = SeqE(Seq(std::move(raw)));
        } else {
            throw SyntaxError(std::string("expected a Q-list, found ") +
                                  token_name(lx_.peek().kind),
                              lx_.peek().offset, "'(' or a generator index");
        }
        if (lx_.peek().kind == Token::Kind::ident && lx_.peek().text == "P") f.p = parse_p_list();
        return f;
    }

    // P-lists start at index 1 (there is no index-0 generator on the P side),
    // so the first entry is prepended with an index-0 zero.
    Seq parse_p_list() {
        lx_.take();
        if (lx_.peek().kind != Token::Kind::lparen)
            throw SyntaxError(std::string("expected a P-list, found ") +
                                  token_name(lx_.peek().kind),
                              lx_.peek().offset,
                              "'(' (P-lists are written P(r1,r2,...), starting at index 1)");
        lx_.take();
        std::vector<Nat> raw = natlist_entries();
        expect(Token::Kind::rparen, "')'");
        raw.insert(raw.begin(), 0);
        return Seq(std::move(raw));
    }

    std::vector<std::pair<Nat, std::size_t>> natlist() {
        std::vector<std::pair<Nat, std::size_t>> out;
        if (lx_.peek().kind == Token::Kind::rparen) return out;
        for (;;) {
            Token n = expect(Token::Kind::nat, "a number");
            out.emplace_back(n.value, n.offset);
            if (lx_.peek().kind != Token::Kind::comma) return out;
            lx_.take();
        }
    }

    std::vector<Nat> natlist_entries() {
        std::vector<Nat> out;
        for (const auto& entry : natlist()) out.push_back(entry.first);
        return out;
    }

    Token expect(Token::Kind kind, const char* what) {
        if (lx_.peek().kind != kind)
            throw SyntaxError(std::string("expected ") + what + ", found " +
                                  token_name(lx_.peek().kind),
                              lx_.peek().offset, what);
        return lx_.take();
    }

    Lexer lx_;
};

std::string join(const std::vector<std::string>& parts, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::string nat_list_str(const Seq& s, std::size_t from) {
    std::vector<std::string> parts;
    for (std::size_t i = from; i < s.size(); ++i) parts.push_back(std::to_string(s.at(i)));
    return join(parts, ",");
}

void append_coeff_parts(std::vector<std::string>& parts, Nat a, Nat b, bool latex) {
    const char* tau = latex ? "\\tau" : "tau";
    const char* rho = latex ? "\\rho" : "rho";
    auto power = [latex](const char* base, Nat e) {
        if (e == 1) return std::string(base);
        if (latex) return std::string(base) + "^{" + std::to_string(e) + "}";
        return std::string(base) + "^" + std::to_string(e);
    };
    if (a > 0) parts.push_back(power(tau, a));
    if (b > 0) parts.push_back(power(rho, b));
}

std::string render_piece(std::vector<std::string> parts) {
    if (parts.empty()) return "1";
    return join(parts, " ");
}

std::string render_op_basis(const OpBasis& b, bool latex) {
    std::vector<std::string> parts;
    if (!b.e().is_zero()) parts.push_back("Q(" + nat_list_str(b.e().as_seq(), 0) + ")");
    if (!b.r().is_zero()) parts.push_back("P(" + nat_list_str(b.r(), 1) + ")");
    (void)latex;
    return join(parts, " ");
}

std::string render_dual_mono(const DualMono& m, bool latex) {
    std::vector<std::string> parts;
    const char* tau = latex ? "\\tau" : "tau";
    const char* xi = latex ? "\\xi" : "xi";
    if (!m.tau().is_zero()) parts.push_back(std::string(tau) + "(" +
                                            nat_list_str(m.tau().as_seq(), 0) + ")");
    if (!m.xi().is_zero()) parts.push_back(std::string(xi) + "(" + nat_list_str(m.xi(), 1) + ")");
    return join(parts, " ");
}

template <class Element, class RenderMono>
std::string render_text(const Element& x, bool latex, RenderMono render_mono) {
    if (x.is_zero()) return "0";
    std::vector<std::string> pieces;
    for (const auto& [mono, coeff] : x.terms()) {
        std::string basis = render_mono(mono);
        for (const auto& [a, b] : coeff.monomials()) {
            std::vector<std::string> parts;
            append_coeff_parts(parts, a, b, latex);
            if (!basis.empty()) parts.push_back(basis);
            pieces.push_back(render_piece(std::move(parts)));
        }
    }
    return join(pieces, " + ");
}

nlohmann::ordered_json seq_to_json(const Seq& s, std::size_t from) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (std::size_t i = from; i < s.size(); ++i) arr.push_back(s.at(i));
    return arr;
}

nlohmann::ordered_json dual_mono_json(const DualMono& m) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    j["tauPart"] = seq_to_json(m.tau().as_seq(), 0);
    j["xiPart"] = seq_to_json(m.xi(), 1);
    return j;
}

template <class Element, class FillTerm>
std::string render_json(const Element& x, FillTerm fill) {
    nlohmann::ordered_json j;
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& [mono, coeff] : x.terms()) {
        for (const auto& [a, b] : coeff.monomials()) {
            nlohmann::ordered_json t = nlohmann::ordered_json::object();
            t["tau"] = a;
            t["rho"] = b;
            fill(t, mono);
            j["terms"].push_back(std::move(t));
        }
    }
    return j.dump();
}

Seq seq_from_json_array(const nlohmann::json& arr, std::size_t from, const char* what) {
    if (!arr.is_array()) throw SyntaxError(std::string(what) + " must be an array", 0, "an array");
    std::vector<Nat> entries(from, 0);
    for (const auto& v : arr) {
        if (!v.is_number_unsigned())
            throw SyntaxError(std::string(what) + " entries must be natural numbers", 0,
                              "a natural number");
        entries.push_back(v.get<Nat>());
    }
    return Seq(std::move(entries));
}

}  // namespace

Expr parse(std::string_view text) {
    Parser p(text);
    return p.parse_element();
}

OpElement eval(const Expr& expr) {
    OpElement out;
    for (const Term& term : expr.terms) {
        std::optional<OpElement> elem;
        Coeff pending = Coeff::one();
        for (const Factor& f : term.factors) {
            switch (f.kind) {
                case Factor::Kind::tau:
                    pending = coeff_mul(pending, Coeff::monomial(f.exp, 0));
                    break;
                case Factor::Kind::rho:
                    pending = coeff_mul(pending, Coeff::monomial(0, f.exp));
                    break;
                case Factor::Kind::one:
                    break;
                case Factor::Kind::zero:
                    pending = Coeff::zero();
                    break;
                case Factor::Kind::basis: {
                    OpElement rhs = OpElement::term(OpBasis(f.q, f.p), pending);
                    elem = elem ? element_mul(*elem, rhs) : std::move(rhs);
                    pending = Coeff::one();
                    break;
                }
            }
        }
        if (!elem)
            out += OpElement::term(OpBasis{}, pending);
        else if (pending.is_one())
            out += *elem;
        else
            out += element_mul(*elem, OpElement::term(OpBasis{}, pending));
    }
    return out;
}

OpElement eval_text(std::string_view text) { return eval(parse(text)); }

std::string print(const OpElement& x, Format f) {
    switch (f) {
        case Format::text:
            return render_text(x, false, [](const OpBasis& b) { return render_op_basis(b, false); });
        case Format::latex:
            return render_text(x, true, [](const OpBasis& b) { return render_op_basis(b, true); });
        case Format::json:
            return render_json(x, [](nlohmann::ordered_json& t, const OpBasis& b) {
                t["Q"] = seq_to_json(b.e().as_seq(), 0);
                t["P"] = seq_to_json(b.r(), 1);
            });
    }
    throw InternalError("unhandled format");
}

std::string print(const DualElement& x, Format f) {
    switch (f) {
        case Format::text:
            return render_text(x, false, [](const DualMono& m) { return render_dual_mono(m, false); });
        case Format::latex:
            return render_text(x, true, [](const DualMono& m) { return render_dual_mono(m, true); });
        case Format::json:
            return render_json(x, [](nlohmann::ordered_json& t, const DualMono& m) {
                t["tauPart"] = seq_to_json(m.tau().as_seq(), 0);
                t["xiPart"] = seq_to_json(m.xi(), 1);
            });
    }
    throw InternalError("unhandled format");
}

std::string print(const TensorElement& x, Format f) {
    auto text_mono = [](bool latex) {
        return [latex](const TensorMono& m) {
            std::string left = render_dual_mono(m.left, latex);
            std::string right = render_dual_mono(m.right, latex);
            if (left.empty()) left = "1";
            if (right.empty()) right = "1";
            return left + (latex ? " \\otimes " : " (x) ") + right;
        };
    };
    switch (f) {
        case Format::text:
            return render_text(x, false, text_mono(false));
        case Format::latex:
            return render_text(x, true, text_mono(true));
        case Format::json:
            return render_json(x, [](nlohmann::ordered_json& t, const TensorMono& m) {
                t["left"] = dual_mono_json(m.left);
                t["right"] = dual_mono_json(m.right);
            });
    }
    throw InternalError("unhandled format");
}

OpElement op_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SyntaxError(std::string("invalid JSON: ") + e.what(),
                          e.byte > 0 ? std::size_t(e.byte - 1) : 0, "well-formed JSON");
    }
    if (!j.is_object() || !j.contains("terms"))
        throw SyntaxError("element JSON must be an object with a \"terms\" array", 0,
                          "{\"terms\": [...]}");
    const auto& terms = j.at("terms");
    if (!terms.is_array())
        throw SyntaxError("\"terms\" must be an array", 0, "an array of term objects");
    OpElement out;
    for (const auto& t : terms) {
        if (!t.is_object() || !t.contains("tau") || !t.contains("rho") || !t.contains("Q") ||
            !t.contains("P"))
            throw SyntaxError("each term needs tau, rho, Q and P fields", 0,
                              "{\"tau\":a,\"rho\":b,\"Q\":[...],\"P\":[...]}");
        if (!t.at("tau").is_number_unsigned() || !t.at("rho").is_number_unsigned())
            throw SyntaxError("tau and rho exponents must be natural numbers", 0,
                              "a natural number");
        Seq q = seq_from_json_array(t.at("Q"), 0, "Q");
        if (!is_seqe(q))
            throw SyntaxError("Q entries must be 0 or 1", 0, "0 or 1");
        Seq p = seq_from_json_array(t.at("P"), 1, "P");
        out.add_term(OpBasis(SeqE(q), p),
                     Coeff::monomial(t.at("tau").get<Nat>(), t.at("rho").get<Nat>()));
    }
    return out;
}

Seq parse_seq(std::string_view text) {
    Parser p(text);
    return p.parse_bare_seq();
}

OpBasis parse_basis(std::string_view text) {
    OpElement x = eval(parse(text));
    if (x.term_count() != 1)
        throw SyntaxError("expected a single basis element", 0,
                          "one Q/P monomial with coefficient 1");
    const auto& [basis, coeff] = *x.terms().begin();
    if (!coeff.is_one())
        throw SyntaxError("expected coefficient 1 on a basis element", 0,
                          "one Q/P monomial with coefficient 1");
    return basis;
}

std::string print_tree_leaves(const Seq& s) {
    TreeLeaves leaves = tree_expand(s);
    std::string out;
    for (const auto& [label, count] : leaves) {
        out += label.first.as_seq().str();
        out += "|";
        out += label.second.str();
        out += " x";
        out += std::to_string(count);
        out += "\n";
    }
    return out;
}

}  // namespace motivic
