#include "qdsd/matrix_io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qdsd/errors.hpp"

namespace qdsd {

namespace {

std::string format_complex(const Complex& v) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g%+.17gj", v.real(), v.imag());
    return buffer;
}

struct Token {
    std::string text;
    std::size_t line;    // 1-based
    std::size_t column;  // 1-based
};

class Tokenizer {
public:
    explicit Tokenizer(std::istream& in) : in_(in) {}

    /// Next whitespace-delimited token, or nullopt at end of input.
    std::optional<Token> next() {
        int c = in_.get();
        while (c != EOF && std::isspace(c)) {
            bump(static_cast<char>(c));
            c = in_.get();
        }
        if (c == EOF) return std::nullopt;
        Token token{{}, line_, column_ + 1};
        while (c != EOF && !std::isspace(c)) {
            token.text.push_back(static_cast<char>(c));
            bump(static_cast<char>(c));
            c = in_.get();
        }
        if (c != EOF) in_.unget();
        return token;
    }

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_ + 1; }

private:
    void bump(char c) {
        if (c == '\n') {
            ++line_;
            column_ = 0;
        } else {
            ++column_;
        }
    }

    std::istream& in_;
    std::size_t line_ = 1;
    std::size_t column_ = 0;
};

double parse_real(const std::string& text, const Token& token, std::size_t offset) {
    std::size_t consumed = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &consumed);
    } catch (const std::exception&) {
        throw ParseError(token.line, token.column + offset, "expected a number, got '" + text + "'");
    }
    if (consumed != text.size())
        throw ParseError(token.line, token.column + offset,
                         "trailing characters after number in '" + text + "'");
    return value;
}

/// Splits "re+imj" at the sign that separates the parts (skipping exponent
/// signs) and parses both halves.
Complex parse_complex(const Token& token) {
    const std::string& text = token.text;
    if (text.empty() || text.back() != 'j')
        throw ParseError(token.line, token.column,
                         "expected complex entry of the form re+imj, got '" + text + "'");
    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i + 1 < text.size(); ++i) {
        const char c = text[i];
        if ((c == '+' || c == '-') && text[i - 1] != 'e' && text[i - 1] != 'E') split = i;
    }
    if (split == std::string::npos)
        throw ParseError(token.line, token.column,
                         "missing imaginary part in complex entry '" + text + "'");
    const double re = parse_real(text.substr(0, split), token, 0);
    const double im = parse_real(text.substr(split, text.size() - split - 1), token, split);
    return {re, im};
}

}  // namespace

void write_density_matrix(std::ostream& out, const ComplexMatrix& m) {
    out << "dim " << m.rows() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            out << format_complex(m(i, j));
        }
        out << '\n';
    }
    if (!out) throw IoError("failed while writing density matrix");
}

void write_density_matrix_file(const std::string& path, const ComplexMatrix& m) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    write_density_matrix(out, m);
}

ComplexMatrix read_density_matrix(std::istream& in) {
    Tokenizer tokens(in);
    const auto expect = [&](const char* what) -> Token {
        auto token = tokens.next();
        if (!token)
            throw ParseError(tokens.line(), tokens.column(), std::string("unexpected end of input, expected ") + what);
        return *token;
    };

    const Token header = expect("'dim'");
    if (header.text != "dim")
        throw ParseError(header.line, header.column, "expected 'dim', got '" + header.text + "'");
    const Token dim_token = expect("matrix dimension");
    std::size_t dim = 0;
    try {
        const long parsed = std::stol(dim_token.text);
        if (parsed < 1 || std::to_string(parsed) != dim_token.text) throw std::invalid_argument("");
        dim = static_cast<std::size_t>(parsed);
    } catch (const std::exception&) {
        throw ParseError(dim_token.line, dim_token.column,
                         "expected a positive integer dimension, got '" + dim_token.text + "'");
    }

    ComplexMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = parse_complex(expect("complex entry"));

    if (auto extra = tokens.next())
        throw ParseError(extra->line, extra->column, "unexpected token '" + extra->text + "' after matrix");
    return m;
}

ComplexMatrix read_density_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    return read_density_matrix(in);
}

}  // namespace qdsd
