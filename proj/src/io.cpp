#include "cycov/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "cycov/errors.hpp"

namespace cycov {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string parse_ident(const std::string& text, std::size_t& pos) {
    if (pos >= text.size() || !is_ident_start(text[pos]))
        return {};
    std::size_t start = pos;
    while (pos < text.size() && is_ident_char(text[pos]))
        ++pos;
    return text.substr(start, pos - start);
}

int parse_plain_int(const std::string& text, std::size_t& pos, errc code) {
    int value = 0;
    const char* begin = text.data() + pos;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin)
        fail(code, "expected an integer in '" + text + "'");
    pos += static_cast<std::size_t>(ptr - begin);
    return value;
}

void expect_token(const std::string& text, std::size_t& pos, const std::string& token,
                  errc code) {
    if (text.compare(pos, token.size(), token) != 0)
        fail(code, "expected '" + token + "' in '" + text + "'");
    pos += token.size();
}

std::vector<std::string> split_on(const std::string& text, const std::string& separator) {
    std::vector<std::string> pieces;
    std::size_t pos = 0;
    for (;;) {
        std::size_t next = text.find(separator, pos);
        if (next == std::string::npos) {
            pieces.push_back(text.substr(pos));
            return pieces;
        }
        pieces.push_back(text.substr(pos, next - pos));
        pos = next + separator.size();
    }
}

bool is_monic_linear(const Polynomial& poly) {
    return poly.degree() == 1 && poly.leading_coefficient() == BigRational(1);
}

Polynomial poly_from_root(const BigRational& root) {
    return Polynomial({-root, BigRational(1)});
}

BigRational canonical_rational(const std::string& text, errc code, const char* what) {
    try {
        return BigRational::parse_canonical(text);
    } catch (const Error&) {
        fail(code, std::string(what) + " '" + text + "' is not a canonical rational");
    }
}

const char* const kSuperscripts[10] = {"⁰", "¹", "²", "³", "⁴",
                                       "⁵", "⁶", "⁷", "⁸", "⁹"};

std::string superscript(int n) {
    std::string digits = std::to_string(n);
    std::string out;
    for (char c : digits)
        out += kSuperscripts[c - '0'];
    return out;
}

} // namespace

OrderedJson curve_to_json(const CyclicCurve& curve) {
    OrderedJson document;
    document["d"] = curve.degree().value();
    OrderedJson points = OrderedJson::array();
    for (const BigRational& b : curve.branch_points())
        points.push_back(b.to_string());
    document["branch_points"] = std::move(points);
    OrderedJson exponents = OrderedJson::array();
    for (std::size_t k = 0; k < curve.branch_points().size(); ++k)
        exponents.push_back(curve.alpha()[k]);
    document["exponents"] = std::move(exponents);
    return document;
}

std::string curve_to_json_text(const CyclicCurve& curve) { return curve_to_json(curve).dump(); }

CyclicCurve curve_from_json(const OrderedJson& document) {
    if (!document.is_object())
        fail(errc::invalid_curve_file, "curve document must be a JSON object");
    for (const auto& item : document.items())
        if (item.key() != "d" && item.key() != "branch_points" && item.key() != "exponents")
            fail(errc::invalid_curve_file, "unknown key '" + item.key() + "'");
    for (const char* key : {"d", "branch_points", "exponents"})
        if (!document.contains(key))
            fail(errc::invalid_curve_file, std::string("missing key '") + key + "'");

    const OrderedJson& d_value = document["d"];
    if (!d_value.is_number_integer())
        fail(errc::invalid_curve_file, "'d' must be an integer");
    const long long d_raw = d_value.get<long long>();
    if (d_raw < 2 || d_raw > (1LL << 30))
        fail(errc::invalid_curve_file, "'d' out of range");
    const PrimeDegree d(static_cast<int>(d_raw));

    const OrderedJson& points_value = document["branch_points"];
    if (!points_value.is_array())
        fail(errc::invalid_curve_file, "'branch_points' must be an array");
    std::vector<BigRational> points;
    points.reserve(points_value.size());
    for (const OrderedJson& entry : points_value) {
        if (!entry.is_string())
            fail(errc::invalid_curve_file, "branch points must be rational strings");
        points.push_back(canonical_rational(entry.get<std::string>(), errc::invalid_curve_file,
                                            "branch point"));
    }

    const OrderedJson& exponents_value = document["exponents"];
    if (!exponents_value.is_array())
        fail(errc::invalid_curve_file, "'exponents' must be an array");
    std::vector<long long> exponents;
    exponents.reserve(exponents_value.size());
    for (const OrderedJson& entry : exponents_value) {
        if (!entry.is_number_integer())
            fail(errc::invalid_curve_file, "exponents must be integers");
        const long long e = entry.get<long long>();
        if (e == 0)
            fail(errc::zero_exponent, "exponent 0 is not allowed");
        if (e < 1 || e >= d_raw)
            fail(errc::invalid_curve_file,
                 "exponent " + std::to_string(e) + " outside [1, " + std::to_string(d_raw) + ")");
        exponents.push_back(e);
    }

    return CyclicCurve(d, std::move(points), exponents);
}

CyclicCurve curve_from_json_text(const std::string& text) {
    OrderedJson document = OrderedJson::parse(text, nullptr, false);
    if (document.is_discarded())
        fail(errc::invalid_curve_file, "curve file is not valid JSON");
    return curve_from_json(document);
}

CyclicCurve load_curve_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail(errc::io_error, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad())
        fail(errc::io_error, "cannot read '" + path + "'");
    return curve_from_json_text(buffer.str());
}

std::string polynomial_text(const Polynomial& poly, const std::string& indeterminate) {
    if (poly.is_zero())
        return "0";
    std::string out;
    for (int k = poly.degree(); k >= 0; --k) {
        const BigRational c = poly.coefficient(k);
        if (c.is_zero())
            continue;
        if (out.empty())
            out += c.sign() < 0 ? "-" : "";
        else
            out += c.sign() < 0 ? " - " : " + ";
        const BigRational magnitude = c.abs();
        if (k == 0) {
            out += magnitude.to_string();
            continue;
        }
        if (!magnitude.is_one())
            out += magnitude.to_string() + "*";
        out += indeterminate;
        if (k >= 2)
            out += "^" + std::to_string(k);
    }
    return out;
}

namespace {

struct TermAccumulator {
    std::vector<BigRational> coefficients;
    std::optional<std::string> indeterminate;

    void add(const BigRational& c, int degree) {
        if (coefficients.size() <= static_cast<std::size_t>(degree))
            coefficients.resize(static_cast<std::size_t>(degree) + 1);
        coefficients[static_cast<std::size_t>(degree)] += c;
    }

    void note_indeterminate(const std::string& name) {
        if (!indeterminate)
            indeterminate = name;
        else if (*indeterminate != name)
            fail(errc::invalid_equation_text, "mixed indeterminates '" + *indeterminate +
                                                  "' and '" + name + "'");
    }
};

bool is_rational_char(char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '/'; }

void parse_term(const std::string& term, int sign, TermAccumulator& acc) {
    std::size_t pos = 0;
    BigRational coefficient(1);
    bool have_coefficient = false;
    if (pos < term.size() && (term[pos] == '-' || is_rational_char(term[pos]))) {
        std::size_t start = pos;
        if (term[pos] == '-')
            ++pos;
        while (pos < term.size() && is_rational_char(term[pos]))
            ++pos;
        if (pos == start + 1 && term[start] == '-') {
            // A bare minus, as in "-x": magnitude-1 coefficient.
            coefficient = BigRational(-1);
        } else {
            coefficient = canonical_rational(term.substr(start, pos - start),
                                             errc::invalid_equation_text, "coefficient");
            have_coefficient = true;
            if (pos < term.size()) {
                expect_token(term, pos, "*", errc::invalid_equation_text);
                have_coefficient = false;
            }
        }
    }
    if (pos == term.size()) {
        if (!have_coefficient)
            fail(errc::invalid_equation_text, "empty term in '" + term + "'");
        acc.add(sign * coefficient, 0);
        return;
    }
    const std::string name = parse_ident(term, pos);
    if (name.empty())
        fail(errc::invalid_equation_text, "expected a variable in '" + term + "'");
    acc.note_indeterminate(name);
    int degree = 1;
    if (pos < term.size()) {
        expect_token(term, pos, "^", errc::invalid_equation_text);
        degree = parse_plain_int(term, pos, errc::invalid_equation_text);
        if (degree < 0)
            fail(errc::invalid_equation_text, "negative power in '" + term + "'");
    }
    if (pos != term.size())
        fail(errc::invalid_equation_text, "trailing characters in term '" + term + "'");
    acc.add(sign * coefficient, degree);
}

} // namespace

ParsedPolynomial parse_polynomial_text(const std::string& text) {
    if (text.empty())
        fail(errc::invalid_equation_text, "empty polynomial text");
    TermAccumulator acc;
    std::size_t pos = 0;
    int sign = 1;
    for (;;) {
        std::size_t plus = text.find(" + ", pos);
        std::size_t minus = text.find(" - ", pos);
        std::size_t next = std::min(plus, minus);
        parse_term(text.substr(pos, next - pos), sign, acc);
        if (next == std::string::npos)
            break;
        sign = (next == minus) ? -1 : 1;
        pos = next + 3;
        if (pos < text.size() && text[pos] == '-')
            fail(errc::invalid_equation_text, "signed term after a sign separator in '" + text +
                                                  "'");
    }
    return {Polynomial(std::move(acc.coefficients)), std::move(acc.indeterminate)};
}

namespace {

struct RootForm {
    Polynomial value;
    std::string indeterminate;
};

std::optional<RootForm> try_root_form(const std::string& inner) {
    std::size_t pos = 0;
    const std::string name = parse_ident(inner, pos);
    if (name.empty() || inner.compare(pos, 3, " - ") != 0)
        return std::nullopt;
    try {
        return RootForm{poly_from_root(BigRational::parse_canonical(inner.substr(pos + 3))),
                        name};
    } catch (const Error&) {
        return std::nullopt;
    }
}

std::string factor_text(const Polynomial& poly, int exponent, const std::string& indeterminate) {
    std::string inner;
    if (is_monic_linear(poly))
        inner = indeterminate + " - " + (-poly.coefficient(0)).to_string();
    else
        inner = polynomial_text(poly, indeterminate);
    return "(" + inner + ")^" + std::to_string(exponent);
}

std::string relation_text(const Relation& relation, int d, const std::string& indeterminate) {
    std::string out = relation.variable + "^" + std::to_string(d) + " = ";
    std::vector<std::string> pieces;
    const FactoredForm& form = relation.rhs;
    if (!form.scalar().is_one() || form.factors().empty())
        pieces.push_back(form.scalar().to_string());
    for (const auto& [poly, exp] : form.factors())
        pieces.push_back(factor_text(poly, exp, indeterminate));
    for (std::size_t k = 0; k < pieces.size(); ++k) {
        if (k > 0)
            out += " * ";
        out += pieces[k];
    }
    return out;
}

struct ParsedRelation {
    Relation relation;
    int d = 0;
    std::optional<std::string> indeterminate;
};

ParsedRelation parse_relation_line(const std::string& line) {
    std::size_t pos = 0;
    const std::string variable = parse_ident(line, pos);
    if (variable.empty())
        fail(errc::invalid_equation_text, "expected a variable name in '" + line + "'");
    expect_token(line, pos, "^", errc::invalid_equation_text);
    const int d = parse_plain_int(line, pos, errc::invalid_equation_text);
    expect_token(line, pos, " = ", errc::invalid_equation_text);

    TermAccumulator ind_tracker;
    BigRational scalar(1);
    std::vector<std::pair<Polynomial, int>> factors;
    const std::vector<std::string> pieces = split_on(line.substr(pos), " * ");
    for (std::size_t k = 0; k < pieces.size(); ++k) {
        const std::string& piece = pieces[k];
        if (piece.empty())
            fail(errc::invalid_equation_text, "empty factor in '" + line + "'");
        if (piece[0] != '(') {
            if (k != 0)
                fail(errc::invalid_equation_text, "misplaced scalar in '" + line + "'");
            scalar = canonical_rational(piece, errc::invalid_equation_text, "scalar");
            continue;
        }
        const std::size_t close = piece.find(')');
        if (close == std::string::npos)
            fail(errc::invalid_equation_text, "unclosed factor in '" + line + "'");
        std::size_t tail = close + 1;
        expect_token(piece, tail, "^", errc::invalid_equation_text);
        const int exponent = parse_plain_int(piece, tail, errc::invalid_equation_text);
        if (exponent < 1)
            fail(errc::invalid_equation_text, "factor exponent must be positive in '" + piece +
                                                  "'");
        if (tail != piece.size())
            fail(errc::invalid_equation_text, "trailing characters in '" + piece + "'");

        const std::string inner = piece.substr(1, close - 1);
        if (std::optional<RootForm> root = try_root_form(inner)) {
            ind_tracker.note_indeterminate(root->indeterminate);
            factors.emplace_back(std::move(root->value), exponent);
            continue;
        }
        ParsedPolynomial parsed = parse_polynomial_text(inner);
        if (parsed.indeterminate)
            ind_tracker.note_indeterminate(*parsed.indeterminate);
        factors.emplace_back(std::move(parsed.value), exponent);
    }

    return ParsedRelation{Relation{variable, FactoredForm(std::move(scalar), std::move(factors))},
                          d, std::move(ind_tracker.indeterminate)};
}

} // namespace

std::string equation_text(const EquationSystem& system) {
    std::string out;
    for (std::size_t k = 0; k < system.relations().size(); ++k) {
        if (k > 0)
            out += "\n";
        out += relation_text(system.relations()[k], system.degree().value(),
                             system.indeterminate());
    }
    return out;
}

EquationSystem parse_equation_text(const std::string& text) {
    if (text.empty())
        fail(errc::invalid_equation_text, "empty equation text");
    std::optional<int> d;
    std::optional<std::string> indeterminate;
    std::vector<Relation> relations;
    for (const std::string& line : split_on(text, "\n")) {
        ParsedRelation parsed = parse_relation_line(line);
        if (d && *d != parsed.d)
            fail(errc::invalid_equation_text, "relations disagree on the degree");
        d = parsed.d;
        if (parsed.indeterminate) {
            if (indeterminate && *indeterminate != *parsed.indeterminate)
                fail(errc::invalid_equation_text, "relations disagree on the indeterminate");
            indeterminate = parsed.indeterminate;
        }
        relations.push_back(std::move(parsed.relation));
    }
    return EquationSystem(PrimeDegree(*d), indeterminate.value_or("x"), std::move(relations));
}

namespace {

OrderedJson relation_to_json(const Relation& relation, int d) {
    OrderedJson out;
    out["var"] = relation.variable;
    out["d"] = d;
    out["scalar"] = relation.rhs.scalar().to_string();
    OrderedJson factors = OrderedJson::array();
    for (const auto& [poly, exp] : relation.rhs.factors()) {
        OrderedJson factor;
        if (is_monic_linear(poly)) {
            factor["root"] = (-poly.coefficient(0)).to_string();
        } else {
            OrderedJson coeffs = OrderedJson::array();
            for (const BigRational& c : poly.coefficients())
                coeffs.push_back(c.to_string());
            factor["coeffs"] = std::move(coeffs);
        }
        factor["exp"] = exp;
        factors.push_back(std::move(factor));
    }
    out["factors"] = std::move(factors);
    return out;
}

std::pair<Polynomial, int> factor_from_json(const OrderedJson& factor) {
    if (!factor.is_object())
        fail(errc::invalid_equation_json, "factors must be objects");
    for (const auto& item : factor.items())
        if (item.key() != "root" && item.key() != "coeffs" && item.key() != "exp")
            fail(errc::invalid_equation_json, "unknown factor key '" + item.key() + "'");
    if (!factor.contains("exp") || !factor["exp"].is_number_integer())
        fail(errc::invalid_equation_json, "factor 'exp' must be an integer");
    if (factor.contains("root") == factor.contains("coeffs"))
        fail(errc::invalid_equation_json, "factors need exactly one of 'root' or 'coeffs'");

    const int exponent = factor["exp"].get<int>();
    if (factor.contains("root")) {
        if (!factor["root"].is_string())
            fail(errc::invalid_equation_json, "factor 'root' must be a string");
        return {poly_from_root(canonical_rational(factor["root"].get<std::string>(),
                                                  errc::invalid_equation_json, "root")),
                exponent};
    }
    const OrderedJson& coeffs = factor["coeffs"];
    if (!coeffs.is_array() || coeffs.empty())
        fail(errc::invalid_equation_json, "factor 'coeffs' must be a nonempty array");
    std::vector<BigRational> values;
    values.reserve(coeffs.size());
    for (const OrderedJson& entry : coeffs) {
        if (!entry.is_string())
            fail(errc::invalid_equation_json, "coefficients must be rational strings");
        values.push_back(canonical_rational(entry.get<std::string>(), errc::invalid_equation_json,
                                            "coefficient"));
    }
    if (values.back().is_zero())
        fail(errc::invalid_equation_json, "leading coefficient must be nonzero");
    return {Polynomial(std::move(values)), exponent};
}

} // namespace

OrderedJson equation_to_json(const EquationSystem& system) {
    OrderedJson out;
    out["d"] = system.degree().value();
    out["indeterminate"] = system.indeterminate();
    OrderedJson relations = OrderedJson::array();
    for (const Relation& relation : system.relations())
        relations.push_back(relation_to_json(relation, system.degree().value()));
    out["relations"] = std::move(relations);
    return out;
}

std::string equation_to_json_text(const EquationSystem& system) {
    return equation_to_json(system).dump();
}

EquationSystem equation_from_json(const OrderedJson& document) {
    if (!document.is_object())
        fail(errc::invalid_equation_json, "equation document must be a JSON object");
    for (const auto& item : document.items())
        if (item.key() != "d" && item.key() != "indeterminate" && item.key() != "relations")
            fail(errc::invalid_equation_json, "unknown key '" + item.key() + "'");
    for (const char* key : {"d", "indeterminate", "relations"})
        if (!document.contains(key))
            fail(errc::invalid_equation_json, std::string("missing key '") + key + "'");
    if (!document["d"].is_number_integer())
        fail(errc::invalid_equation_json, "'d' must be an integer");
    if (!document["indeterminate"].is_string())
        fail(errc::invalid_equation_json, "'indeterminate' must be a string");
    if (!document["relations"].is_array() || document["relations"].empty())
        fail(errc::invalid_equation_json, "'relations' must be a nonempty array");

    const int d = document["d"].get<int>();
    std::vector<Relation> relations;
    for (const OrderedJson& entry : document["relations"]) {
        if (!entry.is_object())
            fail(errc::invalid_equation_json, "relations must be objects");
        for (const auto& item : entry.items())
            if (item.key() != "var" && item.key() != "d" && item.key() != "scalar" &&
                item.key() != "factors")
                fail(errc::invalid_equation_json, "unknown relation key '" + item.key() + "'");
        for (const char* key : {"var", "d", "scalar", "factors"})
            if (!entry.contains(key))
                fail(errc::invalid_equation_json, std::string("missing relation key '") + key +
                                                      "'");
        if (!entry["var"].is_string())
            fail(errc::invalid_equation_json, "'var' must be a string");
        if (!entry["d"].is_number_integer() || entry["d"].get<int>() != d)
            fail(errc::invalid_equation_json, "relation 'd' must match the system degree");
        if (!entry["scalar"].is_string())
            fail(errc::invalid_equation_json, "'scalar' must be a string");
        if (!entry["factors"].is_array())
            fail(errc::invalid_equation_json, "'factors' must be an array");
        BigRational scalar = canonical_rational(entry["scalar"].get<std::string>(),
                                                errc::invalid_equation_json, "scalar");
        std::vector<std::pair<Polynomial, int>> factors;
        for (const OrderedJson& factor : entry["factors"])
            factors.push_back(factor_from_json(factor));
        relations.push_back(Relation{entry["var"].get<std::string>(),
                                     FactoredForm(std::move(scalar), std::move(factors))});
    }
    return EquationSystem(PrimeDegree(d), document["indeterminate"].get<std::string>(),
                          std::move(relations));
}

EquationSystem equation_from_json_text(const std::string& text) {
    OrderedJson document = OrderedJson::parse(text, nullptr, false);
    if (document.is_discarded())
        fail(errc::invalid_equation_json, "equation document is not valid JSON");
    return equation_from_json(document);
}

std::string display_equation_text(const EquationSystem& system) {
    std::string out;
    for (std::size_t k = 0; k < system.relations().size(); ++k) {
        const Relation& relation = system.relations()[k];
        if (k > 0)
            out += "\n";
        out += relation.variable + superscript(system.degree().value()) + " = ";
        const FactoredForm& form = relation.rhs;
        bool first = true;
        if (!form.scalar().is_one() || form.factors().empty()) {
            out += form.scalar().to_string();
            first = false;
        }
        for (const auto& [poly, exp] : form.factors()) {
            if (!first)
                out += "·";
            first = false;
            if (is_monic_linear(poly))
                out += "(" + system.indeterminate() + " - " +
                       (-poly.coefficient(0)).to_string() + ")";
            else
                out += "(" + polynomial_text(poly, system.indeterminate()) + ")";
            if (exp != 1)
                out += superscript(exp);
        }
    }
    return out;
}

std::string exponent_vector_text(const ExponentVector& v) {
    std::string out = "(";
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k > 0)
            out += ",";
        out += std::to_string(v[k]);
    }
    return out + ")";
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    for (const std::string& piece : split_on(text, ",")) {
        std::size_t pos = 0;
        out.push_back(parse_plain_int(piece, pos, errc::invalid_argument));
        if (pos != piece.size())
            fail(errc::invalid_argument, "trailing characters in integer '" + piece + "'");
    }
    return out;
}

std::vector<BigRational> parse_rational_list(const std::string& text) {
    std::vector<BigRational> out;
    for (const std::string& piece : split_on(text, ","))
        out.push_back(BigRational::parse(piece));
    return out;
}

} // namespace cycov
