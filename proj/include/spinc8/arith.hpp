#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <stdexcept>
#include <string>

namespace spinc8 {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::rational<Int>;

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad degrees, mismatched ranks, unsupported operations on a class.
struct degree_error : error {
    using error::error;
};

/// Mathematically inconsistent input data (violated invariants, failed
/// integrality of an expression that must be integral for genuine data).
struct data_error : error {
    using error::error;
};

/// Malformed manifold/bundle description files.
struct parse_error : error {
    using error::error;
};

/// Reduce a into the canonical residue range [0, m).
inline Int mod_reduce(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

/// a == b (mod m)
inline bool congruent(const Int& a, const Int& b, const Int& m) {
    return mod_reduce(a - b, m) == 0;
}

/// Inverse of a modulo m (gcd(a, m) must be 1).
inline Int mod_inverse(const Int& a, const Int& m) {
    Int old_r = mod_reduce(a, m), r = m;
    Int old_s = 1, s = 0;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) throw error("mod_inverse: not invertible");
    return mod_reduce(old_s, m);
}

inline std::string to_string(const Int& n) { return n.str(); }

inline std::string to_string(const Rat& q) {
    if (q.denominator() == 1) return q.numerator().str();
    return q.numerator().str() + "/" + q.denominator().str();
}

inline bool is_integer(const Rat& q) { return q.denominator() == 1; }

inline Int parse_int(const std::string& s) {
    if (s.empty()) throw parse_error("empty integer literal");
    try {
        return Int(s);
    } catch (const std::exception&) {
        throw parse_error("bad integer literal '" + s + "'");
    }
}

}  // namespace spinc8
