#include "embfilt/parse.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace embfilt {

namespace {

struct Token {
    enum Kind { Number, Ident, Plus, Minus, Star, Caret, Comma, Colon, End } kind;
    std::string text;
    int line, column;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    Token next() {
        skip_space();
        Token t{Token::End, "", line_, column_};
        if (pos_ >= text_.size()) return t;
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            t.kind = Token::Number;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                t.text += advance();
            return t;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            t.kind = Token::Ident;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                t.text += advance();
            return t;
        }
        switch (c) {
        case '+': t.kind = Token::Plus; break;
        case '-': t.kind = Token::Minus; break;
        case '*': t.kind = Token::Star; break;
        case '^': t.kind = Token::Caret; break;
        case ',': t.kind = Token::Comma; break;
        case ':': t.kind = Token::Colon; break;
        case '/': t.kind = Token::Star; t.text = "/"; break; // handled by caller
        default:
            fail(line_, column_, std::string("unexpected character '") + c + "'");
        }
        t.text = advance();
        return t;
    }

    [[noreturn]] static void fail(int line, int column, const std::string& message) {
        std::ostringstream os;
        os << "line " << line << ", column " << column << ": " << message;
        throw error(os.str());
    }

private:
    char advance() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
    }

    const std::string& text_;
    size_t pos_ = 0;
    int line_ = 1, column_ = 1;
};

std::vector<Token> tokenize(const std::string& text) {
    Lexer lexer(text);
    std::vector<Token> out;
    while (true) {
        Token t = lexer.next();
        out.push_back(t);
        if (t.kind == Token::End) break;
    }
    return out;
}

// "vars: x, y" prefix; returns the declared names or empty when absent.
std::vector<std::string> take_header(std::vector<Token>& tokens) {
    if (tokens.size() < 2) return {};
    if (tokens[0].kind != Token::Ident || tokens[0].text != "vars") return {};
    if (tokens[1].kind != Token::Colon) return {};
    std::vector<std::string> names;
    size_t i = 2;
    while (i < tokens.size() && tokens[i].kind == Token::Ident) {
        names.push_back(tokens[i].text);
        ++i;
        if (i < tokens.size() && tokens[i].kind == Token::Comma) ++i;
        else break;
    }
    if (names.empty()) Lexer::fail(tokens[1].line, tokens[1].column, "empty vars header");
    tokens.erase(tokens.begin(), tokens.begin() + static_cast<long>(i));
    return names;
}

} // namespace

ParsedPolynomial parse_polynomial(const std::string& text) {
    std::vector<Token> tokens = tokenize(text);
    std::vector<std::string> names = take_header(tokens);

    if (names.empty()) {
        std::set<std::string> seen;
        for (const Token& t : tokens)
            if (t.kind == Token::Ident) seen.insert(t.text);
        names.assign(seen.begin(), seen.end()); // alphabetical
        if (names.empty()) names.push_back("x"); // constant text like "0"
    } else {
        std::set<std::string> unique(names.begin(), names.end());
        if (unique.size() != names.size()) throw error("duplicate variable in vars header");
    }

    std::map<std::string, size_t> var_index;
    for (size_t i = 0; i < names.size(); ++i) var_index.emplace(names[i], i);

    Polynomial poly(names.size());
    size_t pos = 0;
    auto peek = [&]() -> const Token& { return tokens[pos]; };

    auto parse_natural = [&]() -> BigInt {
        if (peek().kind != Token::Number)
            Lexer::fail(peek().line, peek().column, "expected a number");
        BigInt value(peek().text);
        ++pos;
        return value;
    };

    bool any_term = false;
    while (peek().kind != Token::End) {
        Rational sign = 1;
        if (peek().kind == Token::Plus || peek().kind == Token::Minus) {
            if (peek().kind == Token::Minus) sign = -1;
            ++pos;
        } else if (any_term) {
            Lexer::fail(peek().line, peek().column, "expected '+' or '-' between terms");
        }

        Rational coeff = sign;
        Exponents exponents(names.size(), 0);
        bool any_factor = false;
        while (true) {
            const Token& t = peek();
            if (t.kind == Token::Number) {
                BigInt num = parse_natural();
                BigInt den = 1;
                if (peek().kind == Token::Star && peek().text == "/") {
                    ++pos;
                    den = parse_natural();
                    if (den == 0) Lexer::fail(t.line, t.column, "zero denominator");
                }
                coeff *= Rational(num, den);
                any_factor = true;
            } else if (t.kind == Token::Ident) {
                auto it = var_index.find(t.text);
                if (it == var_index.end())
                    Lexer::fail(t.line, t.column, "unknown variable '" + t.text + "'");
                ++pos;
                Int exp = 1;
                if (peek().kind == Token::Caret) {
                    ++pos;
                    exp = to_int(parse_natural());
                }
                exponents[it->second] += exp;
                any_factor = true;
            } else if (t.kind == Token::Star && t.text != "/") {
                ++pos; // explicit multiplication
                continue;
            } else {
                break;
            }
        }
        if (!any_factor)
            Lexer::fail(peek().line, peek().column, "expected a term");
        poly.add_term(exponents, coeff);
        any_term = true;
    }
    if (!any_term) throw error("empty polynomial text");
    return {std::move(poly), std::move(names)};
}

std::vector<WeightVector> parse_weight_list(const std::string& text) {
    std::vector<WeightVector> out;
    std::stringstream groups(text);
    std::string group;
    while (std::getline(groups, group, ';')) {
        if (group.empty()) continue;
        out.emplace_back(parse_int_tuple(group));
    }
    if (out.empty()) throw error("empty weight list");
    return out;
}

std::vector<Int> parse_int_tuple(const std::string& text) {
    std::vector<Int> out;
    std::stringstream parts(text);
    std::string part;
    while (std::getline(parts, part, ',')) {
        size_t begin = part.find_first_not_of(" \t");
        size_t end = part.find_last_not_of(" \t");
        if (begin == std::string::npos) throw error("empty entry in tuple '" + text + "'");
        try {
            out.push_back(std::stoll(part.substr(begin, end - begin + 1)));
        } catch (const std::exception&) {
            throw error("malformed integer in tuple '" + text + "'");
        }
    }
    if (out.empty()) throw error("empty tuple '" + text + "'");
    return out;
}

std::string render_polynomial(const Polynomial& p, const std::vector<std::string>& variables) {
    if (variables.size() != p.dim()) throw error("variable name count mismatch");
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        Rational abs_c = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::string monomial;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!monomial.empty()) monomial += "*";
            monomial += variables[i];
            if (e[i] != 1) monomial += "^" + std::to_string(e[i]);
        }
        if (monomial.empty()) {
            os << to_string(abs_c);
        } else if (abs_c == 1) {
            os << monomial;
        } else {
            os << to_string(abs_c) << "*" << monomial;
        }
    }
    return os.str();
}

std::string render_tuple(const std::vector<Int>& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << v[i];
    }
    os << ")";
    return os.str();
}

std::string render_polyhedron(const NewtonPolyhedron& np) {
    std::ostringstream os;
    os << "dimension: " << np.dim() << "\n";
    os << "vertices:";
    for (const auto& v : np.vertices()) os << " " << render_tuple(v);
    os << "\nfacets:\n";
    for (const auto& f : np.facets()) {
        os << "  " << render_tuple(f.normal.entries()) << " >= " << f.offset
           << (f.compact ? " [compact]" : " [non-compact]") << " vertices {";
        for (size_t i = 0; i < f.vertex_ids.size(); ++i) {
            if (i) os << ",";
            os << f.vertex_ids[i];
        }
        os << "}\n";
    }
    return os.str();
}

nlohmann::ordered_json polyhedron_to_json(const NewtonPolyhedron& np) {
    nlohmann::ordered_json j;
    j["dimension"] = np.dim();
    j["vertices"] = np.vertices();
    j["facets"] = nlohmann::ordered_json::array();
    for (const auto& f : np.facets()) {
        nlohmann::ordered_json jf;
        jf["normal"] = f.normal.entries();
        jf["offset"] = f.offset;
        jf["compact"] = f.compact;
        jf["vertices"] = f.vertex_ids;
        j["facets"].push_back(std::move(jf));
    }
    return j;
}

nlohmann::ordered_json series_to_json(const FactoredSeries& f) {
    nlohmann::ordered_json j;
    j["factors"] = nlohmann::ordered_json::array();
    auto emit = [&](bool positive) {
        for (const auto& [m, e] : f.factors()) {
            if ((e > 0) != positive) continue;
            nlohmann::ordered_json jf;
            jf["m"] = m;
            jf["e"] = e;
            j["factors"].push_back(std::move(jf));
        }
    };
    emit(true);
    emit(false);
    j["scalar"] = to_string(f.scalar());
    return j;
}

FactoredSeries series_from_json(const nlohmann::json& j) {
    if (!j.contains("factors")) throw error("series JSON needs a 'factors' array");
    size_t rank = 0;
    for (const auto& jf : j["factors"]) {
        rank = jf.at("m").size();
        break;
    }
    if (rank == 0) throw error("series JSON needs at least one factor to fix the rank");
    FactoredSeries out(rank);
    if (j.contains("scalar")) out.multiply_scalar(rational_from_string(j["scalar"].get<std::string>()));
    for (const auto& jf : j["factors"]) {
        std::vector<Int> m = jf.at("m").get<std::vector<Int>>();
        out.multiply_factor(m, jf.at("e").get<Int>());
    }
    return out;
}

nlohmann::ordered_json truncated_to_json(const TruncatedSeries& s) {
    nlohmann::ordered_json j;
    j["box"] = s.box().bound;
    j["coefficients"] = nlohmann::ordered_json::array();
    for (size_t idx = 0; idx < s.cell_count(); ++idx) {
        ValueTuple v = s.tuple_at(idx);
        const Rational& c = s.coefficient(v);
        if (c == 0) continue;
        nlohmann::ordered_json jc;
        jc["v"] = v;
        jc["c"] = to_string(c);
        j["coefficients"].push_back(std::move(jc));
    }
    return j;
}

ResolutionGraph graph_from_json(const nlohmann::json& j) {
    std::vector<Int> ids = j.at("vertices").get<std::vector<Int>>();
    std::vector<std::vector<Int>> matrix =
        j.at("intersection_matrix").get<std::vector<std::vector<Int>>>();
    std::map<Int, Int> arrows;
    if (j.contains("arrows"))
        for (const auto& [key, value] : j.at("arrows").items())
            arrows[std::stoll(key)] = value.get<Int>();
    return ResolutionGraph(std::move(ids), std::move(matrix), std::move(arrows));
}

nlohmann::ordered_json graph_to_json(const ResolutionGraph& g) {
    nlohmann::ordered_json j;
    j["vertices"] = g.ids();
    j["intersection_matrix"] = g.intersection_matrix();
    nlohmann::ordered_json arrows = nlohmann::ordered_json::object();
    for (size_t i = 0; i < g.size(); ++i)
        if (g.arrows(i) > 0) arrows[std::to_string(g.ids()[i])] = g.arrows(i);
    j["arrows"] = std::move(arrows);
    return j;
}

SemigroupPresentation presentation_from_json(const nlohmann::json& j) {
    size_t d = j.at("d").get<size_t>();
    size_t p = j.at("p").get<size_t>();
    auto generators = j.at("generators").get<std::vector<std::vector<Int>>>();
    std::vector<Binomial> binomials;
    for (const auto& jb : j.at("binomials"))
        binomials.push_back({jb.at("alpha").get<Exponents>(), jb.at("beta").get<Exponents>()});
    return SemigroupPresentation(d, p, std::move(generators), std::move(binomials));
}

nlohmann::ordered_json presentation_to_json(const SemigroupPresentation& sp) {
    nlohmann::ordered_json j;
    j["d"] = sp.lattice_dim();
    j["p"] = sp.codim();
    j["generators"] = sp.generators();
    j["binomials"] = nlohmann::ordered_json::array();
    for (const auto& b : sp.binomials()) {
        nlohmann::ordered_json jb;
        jb["alpha"] = b.alpha;
        jb["beta"] = b.beta;
        j["binomials"].push_back(std::move(jb));
    }
    return j;
}

} // namespace embfilt
