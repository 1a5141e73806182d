#include "avgroups/intpoly.hpp"

#include <algorithm>
#include <cctype>

#include "avgroups/error.hpp"

namespace avgroups {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

IntPoly IntPoly::monomial(const mpz_class& c, unsigned k) {
    std::vector<mpz_class> out(k + 1);
    out[k] = c;
    return IntPoly(std::move(out));
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class IntPoly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : mpz_class(0);
}

mpz_class IntPoly::operator()(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPoly IntPoly::derivative() const {
    std::vector<mpz_class> out;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * static_cast<unsigned long>(i));
    return IntPoly(std::move(out));
}

IntPoly IntPoly::pow(unsigned e) const {
    IntPoly result{1};
    IntPoly base = *this;
    while (e > 0) {
        if (e & 1U) result = result * base;
        e >>= 1U;
        if (e > 0) base = base * base;
    }
    return result;
}

RatPoly IntPoly::to_rational() const {
    std::vector<mpq_class> out(coeffs_.begin(), coeffs_.end());
    return RatPoly(std::move(out));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<mpz_class> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff(i) + b.coeff(i);
    return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a) {
    std::vector<mpz_class> out(a.coeffs_);
    for (auto& c : out) c = -c;
    return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPoly(std::move(out));
}

IntPoly operator*(const mpz_class& c, const IntPoly& a) {
    std::vector<mpz_class> out(a.coeffs_);
    for (auto& x : out) x *= c;
    return IntPoly(std::move(out));
}

IntPoly substitute_one_minus_t(const IntPoly& f) {
    // (1 - t)^i = sum_k C(i, k) (-1)^k t^k
    const std::size_t n = f.coeffs().size();
    std::vector<mpz_class> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const mpz_class& a = f.coeffs()[i];
        if (a == 0) continue;
        mpz_class binom = 1;
        for (std::size_t k = 0; k <= i; ++k) {
            if (k > 0) binom = binom * static_cast<unsigned long>(i - k + 1) / static_cast<unsigned long>(k);
            if (k % 2 == 0) out[k] += a * binom;
            else out[k] -= a * binom;
        }
    }
    return IntPoly(std::move(out));
}

bool is_squarefree(const IntPoly& f) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefreeness of the zero polynomial is undefined");
    return gcd(f.to_rational(), f.derivative().to_rational()).degree() == 0;
}

mpz_class eval_at_one(const IntPoly& f) {
    mpz_class sum = 0;
    for (const auto& c : f.coeffs()) sum += c;
    return sum;
}

std::optional<IntPoly> exact_quotient(const IntPoly& a, const IntPoly& b) {
    auto [quot, rem] = divmod(a.to_rational(), b.to_rational());
    if (!rem.is_zero()) return std::nullopt;
    std::vector<mpz_class> out;
    for (const auto& c : quot.coeffs()) {
        if (c.get_den() != 1) return std::nullopt;
        out.push_back(c.get_num());
    }
    return IntPoly(std::move(out));
}

// ---------------------------------------------------------------------------
// Text forms

std::string to_csv(const IntPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (i > 0) out += ',';
        out += f.coeffs()[i].get_str();
    }
    return out;
}

std::string to_human(const IntPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int k = f.degree(); k >= 0; --k) {
        mpz_class c = f.coeffs()[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        if (c < 0) {
            out += '-';
            c = -c;
        } else if (!out.empty()) {
            out += '+';
        }
        if (k == 0) {
            out += c.get_str();
            continue;
        }
        if (c != 1) out += c.get_str() + "*";
        out += 't';
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

namespace {

[[noreturn]] void malformed(std::string_view text, const std::string& why) {
    throw Error(ErrorCode::MalformedPolynomial, "malformed polynomial \"" + std::string(text) + "\": " + why);
}

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

mpz_class parse_integer(std::string_view token, std::string_view whole) {
    token = strip(token);
    std::string digits(token);
    if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
    const std::size_t start = (!digits.empty() && digits.front() == '-') ? 1 : 0;
    if (digits.size() == start) malformed(whole, "empty coefficient");
    for (std::size_t i = start; i < digits.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(digits[i]))) malformed(whole, "bad coefficient \"" + std::string(token) + "\"");
    }
    return mpz_class(digits, 10);
}

class HumanParser {
public:
    explicit HumanParser(std::string_view text) : text_(text) {}

    IntPoly parse() {
        IntPoly result = expr();
        skip_space();
        if (pos_ != text_.size()) malformed(text_, "unexpected '" + std::string(1, text_[pos_]) + "'");
        return result;
    }

private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    static bool is_variable(char c) { return c == 't' || c == 'x'; }

    IntPoly expr() {
        IntPoly acc = term();
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                acc = acc + term();
            } else if (c == '-') {
                ++pos_;
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    IntPoly term() {
        IntPoly acc = unary();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * unary();
            } else if (is_variable(c) || c == '(') {
                acc = acc * unary();
            } else {
                return acc;
            }
        }
    }

    IntPoly unary() {
        char c = peek();
        if (c == '-') {
            ++pos_;
            return -unary();
        }
        if (c == '+') {
            ++pos_;
            return unary();
        }
        return power();
    }

    IntPoly power() {
        IntPoly base = atom();
        if (peek() == '^') {
            ++pos_;
            skip_space();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) malformed(text_, "exponent must be a nonnegative integer");
            mpz_class e(std::string(text_.substr(start, pos_ - start)), 10);
            if (e > 4096) malformed(text_, "exponent too large");
            return base.pow(static_cast<unsigned>(e.get_ui()));
        }
        return base;
    }

    IntPoly atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            IntPoly inner = expr();
            if (peek() != ')') malformed(text_, "missing ')'");
            ++pos_;
            return inner;
        }
        if (is_variable(c)) {
            if (variable_ != '\0' && variable_ != c) malformed(text_, "more than one variable");
            variable_ = c;
            ++pos_;
            return IntPoly{0, 1};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return IntPoly({mpz_class(std::string(text_.substr(start, pos_ - start)), 10)});
        }
        if (c == '\0') malformed(text_, "unexpected end of input");
        malformed(text_, "unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    char variable_ = '\0';
};

} // namespace

IntPoly parse_csv(std::string_view text) {
    if (strip(text).empty()) malformed(text, "empty input");
    std::vector<mpz_class> coeffs;
    std::size_t start = 0;
    for (;;) {
        std::size_t comma = text.find(',', start);
        coeffs.push_back(parse_integer(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start), text));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return IntPoly(std::move(coeffs));
}

IntPoly parse_human(std::string_view text) {
    if (strip(text).empty()) malformed(text, "empty input");
    return HumanParser(text).parse();
}

IntPoly parse_poly(std::string_view text) {
    bool symbolic = std::any_of(text.begin(), text.end(), [](char c) {
        return c == 't' || c == 'x' || c == '^' || c == '*' || c == '(';
    });
    return symbolic ? parse_human(text) : parse_csv(text);
}

} // namespace avgroups
