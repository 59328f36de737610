#include "sprp/rational.hpp"

#include <cctype>

namespace sprp {

std::int64_t to_int64(const mpz_class& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("value does not fit in 64 bits");
    return static_cast<std::int64_t>(z.get_si());
}

Rat rat_from_decimal(const std::string& text) {
    std::string s = text;
    if (s.empty()) throw std::invalid_argument("empty decimal literal");
    bool neg = false;
    std::size_t pos = 0;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        pos = 1;
    }
    std::string digits;
    int frac_digits = -1;
    for (; pos < s.size(); ++pos) {
        char c = s[pos];
        if (c == '.') {
            if (frac_digits >= 0) throw std::invalid_argument("bad decimal literal: " + text);
            frac_digits = 0;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            if (frac_digits >= 0) ++frac_digits;
        } else {
            throw std::invalid_argument("bad decimal literal: " + text);
        }
    }
    if (digits.empty()) throw std::invalid_argument("bad decimal literal: " + text);
    mpz_class num(digits, 10);
    if (neg) num = -num;
    mpz_class den(1);
    for (int i = 0; i < std::max(frac_digits, 0); ++i) den *= 10;
    Rat q(num, den);
    q.canonicalize();
    return q;
}

std::optional<std::string> rat_to_decimal(const Rat& q) {
    mpz_class den = q.get_den();
    int twos = 0, fives = 0;
    while (mpz_even_p(den.get_mpz_t())) {
        den /= 2;
        ++twos;
    }
    while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
        den /= 5;
        ++fives;
    }
    if (den != 1) return std::nullopt;
    // Scale numerator so the denominator becomes a power of ten.
    int digits = std::max(twos, fives);
    mpz_class num = q.get_num();
    for (int i = twos; i < digits; ++i) num *= 2;
    for (int i = fives; i < digits; ++i) num *= 5;
    bool neg = num < 0;
    if (neg) num = -num;
    std::string body = num.get_str();
    std::string out;
    if (digits == 0) {
        out = body;
    } else {
        while (static_cast<int>(body.size()) <= digits) body.insert(body.begin(), '0');
        out = body.substr(0, body.size() - digits) + "." + body.substr(body.size() - digits);
        while (out.back() == '0') out.pop_back();
        if (out.back() == '.') out.pop_back();
    }
    if (neg) out.insert(out.begin(), '-');
    return out;
}

std::string rat_to_string(const Rat& q) {
    if (auto d = rat_to_decimal(q)) return *d;
    return q.get_str();
}

}  // namespace sprp
