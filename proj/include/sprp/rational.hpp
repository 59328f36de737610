#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace sprp {

// Exact rational number. All costs and model coefficients are carried as
// rationals so that optimality comparisons are exact equalities.
using Rat = mpq_class;

inline Rat rat(std::int64_t num, std::int64_t den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Floor/ceil to mpz, exact.
inline mpz_class rat_floor(const Rat& q) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline mpz_class rat_ceil(const Rat& q) {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

std::int64_t to_int64(const mpz_class& z);

// Parses a plain decimal string ("4", "-0.75", "1e3" is not accepted).
Rat rat_from_decimal(const std::string& text);

// Renders q as an exact finite decimal if the reduced denominator is of the
// form 2^a*5^b, e.g. 3/4 -> "0.75". Returns nullopt otherwise.
std::optional<std::string> rat_to_decimal(const Rat& q);

// Exact decimal if possible, otherwise the "num/den" form.
std::string rat_to_string(const Rat& q);

}  // namespace sprp
