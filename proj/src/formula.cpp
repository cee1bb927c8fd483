#include "tempotw/error.hpp"
#include "tempotw/logic.hpp"

#include <cctype>

namespace tempotw {

namespace fo {

namespace {
Formula make(NodeKind kind, std::string name, std::vector<std::string> terms, std::vector<Formula> children) {
    return std::make_shared<const FormulaNode>(FormulaNode{kind, std::move(name), std::move(terms), std::move(children)});
}
}  // namespace

Formula exists(std::string var, Formula body) { return make(NodeKind::exists, std::move(var), {}, {std::move(body)}); }
Formula forall(std::string var, Formula body) { return make(NodeKind::forall, std::move(var), {}, {std::move(body)}); }
Formula exists_set(std::string var, Formula body) { return make(NodeKind::exists_set, std::move(var), {}, {std::move(body)}); }
Formula forall_set(std::string var, Formula body) { return make(NodeKind::forall_set, std::move(var), {}, {std::move(body)}); }
Formula all(std::vector<Formula> parts) { return make(NodeKind::conjunction, {}, {}, std::move(parts)); }
Formula any(std::vector<Formula> parts) { return make(NodeKind::disjunction, {}, {}, std::move(parts)); }
Formula negate(Formula f) { return make(NodeKind::negation, {}, {}, {std::move(f)}); }
Formula implies(Formula premise, Formula conclusion) {
    return make(NodeKind::implication, {}, {}, {std::move(premise), std::move(conclusion)});
}
Formula atom(std::string relation, std::vector<std::string> args) { return make(NodeKind::relation, std::move(relation), std::move(args), {}); }
Formula equals(std::string a, std::string b) { return make(NodeKind::equals, {}, {std::move(a), std::move(b)}, {}); }
Formula same_v(std::string a, std::string b) { return make(NodeKind::same_v, {}, {std::move(a), std::move(b)}, {}); }
Formula member(std::string set, std::string element) { return make(NodeKind::member, std::move(set), {std::move(element)}, {}); }
std::string time_constant(Time t) { return "@" + std::to_string(t); }

}  // namespace fo

namespace {

const char* keyword(NodeKind k) {
    switch (k) {
        case NodeKind::exists: return "exists";
        case NodeKind::forall: return "forall";
        case NodeKind::exists_set: return "existsSet";
        case NodeKind::forall_set: return "forallSet";
        case NodeKind::conjunction: return "and";
        case NodeKind::disjunction: return "or";
        case NodeKind::negation: return "not";
        case NodeKind::implication: return "implies";
        case NodeKind::equals: return "=";
        case NodeKind::same_v: return "sameV";
        case NodeKind::member: return "in";
        case NodeKind::relation: return "";
    }
    return "";
}

void print_into(const FormulaNode& n, std::string& out) {
    out += '(';
    if (n.kind == NodeKind::relation) {
        out += n.name;
    } else {
        out += keyword(n.kind);
        if (!n.name.empty()) {
            out += ' ';
            out += n.name;
        }
    }
    for (const auto& t : n.terms) {
        out += ' ';
        out += t;
    }
    for (const auto& c : n.children) {
        out += ' ';
        print_into(*c, out);
    }
    out += ')';
}

bool is_keyword(std::string_view s) {
    for (auto k : {"exists", "forall", "existsSet", "forallSet", "and", "or", "not", "implies", "=", "sameV", "in"})
        if (s == k) return true;
    return false;
}

bool is_identifier(std::string_view s) {
    if (s.empty() || is_keyword(s)) return false;
    if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'')) return false;
    return true;
}

bool is_term(std::string_view s) {
    if (s.size() > 1 && s[0] == '@') {
        for (char c : s.substr(1))
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    }
    return is_identifier(s);
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Formula parse_all() {
        Formula f = formula();
        skip_space();
        if (pos_ != text_.size()) fail("trailing input after formula");
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }

    [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
            if (text_[i] == '\n') ++line, col = 1;
            else ++col;
        }
        throw Error(ErrorKind::syntax, "formula " + std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
    }

    void skip_space() {
        while (pos_ < text_.size()) {
            if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            } else if (text_[pos_] == ';') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    bool at_open() {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == '(';
    }

    void expect(char c) {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    std::string word() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) && text_[pos_] != '(' && text_[pos_] != ')' &&
               text_[pos_] != ';')
            ++pos_;
        if (start == pos_) fail("expected a name");
        return std::string(text_.substr(start, pos_ - start));
    }

    std::string variable() {
        std::size_t at = (skip_space(), pos_);
        std::string w = word();
        if (!is_identifier(w)) fail_at(at, "'" + w + "' is not a variable name");
        return w;
    }

    std::string term() {
        std::size_t at = (skip_space(), pos_);
        if (at_open()) fail("expected a term, found '('");
        std::string w = word();
        if (!is_term(w)) fail_at(at, "'" + w + "' is not a term");
        return w;
    }

    Formula formula() {
        expect('(');
        std::size_t head_at = (skip_space(), pos_);
        std::string head = word();
        Formula out;
        if (head == "exists" || head == "forall" || head == "existsSet" || head == "forallSet") {
            std::string v = variable();
            Formula body = formula();
            if (head == "exists") out = fo::exists(v, body);
            else if (head == "forall") out = fo::forall(v, body);
            else if (head == "existsSet") out = fo::exists_set(v, body);
            else out = fo::forall_set(v, body);
        } else if (head == "and" || head == "or") {
            std::vector<Formula> parts;
            while (at_open()) parts.push_back(formula());
            out = head == "and" ? fo::all(std::move(parts)) : fo::any(std::move(parts));
        } else if (head == "not") {
            out = fo::negate(formula());
        } else if (head == "implies") {
            Formula a = formula();
            Formula b = formula();
            out = fo::implies(a, b);
        } else if (head == "=" || head == "sameV") {
            std::string a = term();
            std::string b = term();
            out = head == "=" ? fo::equals(a, b) : fo::same_v(a, b);
        } else if (head == "in") {
            std::string set = variable();
            std::string x = term();
            out = fo::member(set, x);
        } else {
            if (!is_identifier(head) && head.find('@') == std::string::npos) fail_at(head_at, "'" + head + "' is not a relation name");
            std::vector<std::string> args;
            skip_space();
            while (pos_ < text_.size() && text_[pos_] != ')') {
                args.push_back(term());
                skip_space();
            }
            if (args.empty()) fail_at(head_at, "relation atom '" + head + "' needs at least one argument");
            out = fo::atom(head, std::move(args));
        }
        expect(')');
        return out;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string print_formula(const Formula& f) {
    std::string out;
    print_into(*f, out);
    return out;
}

Formula parse_formula(std::string_view text) { return Parser(text).parse_all(); }

bool is_first_order(const Formula& f) {
    if (f->kind == NodeKind::exists_set || f->kind == NodeKind::forall_set || f->kind == NodeKind::member) return false;
    for (const auto& c : f->children)
        if (!is_first_order(c)) return false;
    return true;
}

std::size_t formula_size(const Formula& f) {
    std::size_t n = 1;
    for (const auto& c : f->children) n += formula_size(c);
    return n;
}

bool same_formula(const Formula& a, const Formula& b) {
    if (a == b) return true;
    if (a->kind != b->kind || a->name != b->name || a->terms != b->terms || a->children.size() != b->children.size()) return false;
    for (std::size_t i = 0; i < a->children.size(); ++i)
        if (!same_formula(a->children[i], b->children[i])) return false;
    return true;
}

}  // namespace tempotw
